"""Settings and input-document loading."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import yaml

from directed_cqsf.config.schema import DigraphDocument, EngineSettings


def load_settings(config_path: str | Path) -> EngineSettings:
    """
    Load and validate engine settings from a JSON or YAML file.

    Args:
        config_path: Path to settings file (.json or .yaml/.yml)

    Returns:
        Validated EngineSettings object

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If the format is invalid or validation fails
    """
    return EngineSettings(**_load_mapping(Path(config_path)))


def load_digraph_document(graph_path: str | Path) -> DigraphDocument:
    """
    Load a digraph document (``{"n": ..., "edges": [[u, v], ...]}``).

    Args:
        graph_path: Path to a .json or .yaml/.yml file

    Returns:
        The parsed DigraphDocument; vertex-level checks happen when it is
        turned into a Digraph

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If the format is invalid or validation fails
    """
    return DigraphDocument(**_load_mapping(Path(graph_path)))


def _load_mapping(path: Path) -> dict[str, Any]:
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")

    suffix = path.suffix.lower()
    if suffix == ".json":
        data = _load_json(path)
    elif suffix in (".yaml", ".yml"):
        data = _load_yaml(path)
    else:
        raise ValueError(f"Unsupported file format: {suffix}")

    if not isinstance(data, dict):
        raise ValueError(f"{path} must contain a JSON/YAML object")
    return data


def _load_json(path: Path) -> Any:
    """Load a JSON file."""
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON in {path}: {e}") from e


def _load_yaml(path: Path) -> Any:
    """Load a YAML file; an empty file reads as an empty mapping."""
    try:
        with open(path) as f:
            data = yaml.safe_load(f)
            return {} if data is None else data
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML in {path}: {e}") from e
