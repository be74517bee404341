"""Tests for graph constructions and algorithms."""
