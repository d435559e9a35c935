"""Combinatorics tests."""
