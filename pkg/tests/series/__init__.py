"""Series tests."""
