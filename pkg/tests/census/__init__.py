"""Tests for censuses, reports and fixtures."""
