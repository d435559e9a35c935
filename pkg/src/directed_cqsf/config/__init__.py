"""Configuration management for directed_cqsf."""

from directed_cqsf.config.loader import load_digraph_document, load_settings
from directed_cqsf.config.schema import (
    DigraphDocument,
    EngineSettings,
    PolynomialDocument,
    VerificationReport,
)

__all__ = [
    "DigraphDocument",
    "EngineSettings",
    "PolynomialDocument",
    "VerificationReport",
    "load_digraph_document",
    "load_settings",
]
