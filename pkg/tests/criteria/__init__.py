"""Tests for the algebraic criteria."""
