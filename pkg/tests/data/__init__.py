"""Fixtures read by the tests."""
