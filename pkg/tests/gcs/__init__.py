"""Tests for alpha-partitions and subsets."""
