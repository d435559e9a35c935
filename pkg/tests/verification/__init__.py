"""Verification suite tests."""
