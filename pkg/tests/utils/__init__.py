"""Test utilities for the Riordan toolkit test suite."""
