"""Tests for mzi/fock."""
