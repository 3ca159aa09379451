"""Metadata about the library for setup.py."""

__author__ = '@mzilab'
__license__ = 'LGPL2.1'
__version__ = '0.1.0'
