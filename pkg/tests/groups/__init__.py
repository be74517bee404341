"""Tests for finite groups and automorphisms."""
