"""Tests for mzi/circuit."""
