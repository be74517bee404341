"""Tests for the text parsers."""
