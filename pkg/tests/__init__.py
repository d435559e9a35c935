"""Tests for directed_cqsf."""
