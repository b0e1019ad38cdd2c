"""Tests for Holocodes."""
