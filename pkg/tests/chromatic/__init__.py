"""Chromatic function tests."""
