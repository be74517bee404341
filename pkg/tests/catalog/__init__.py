"""Tests for group families and catalogs."""
