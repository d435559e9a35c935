"""JSON documents and human-readable rendering for digraphs and polynomials."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from directed_cqsf.algebra.elements import GradedFunction, QSymT, SymT
from directed_cqsf.combinatorics.graphs import Digraph, digraph_from_edges
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.config.loader import load_digraph_document
from directed_cqsf.config.schema import DigraphDocument, PolynomialDocument
from directed_cqsf.utils.errors import InvalidInputError

Element = Union[QSymT, SymT]


def polynomial_to_document(element: GradedFunction) -> dict[str, Any]:
    """
    Serialize a polynomial to the machine-readable schema.

    Terms appear in reverse lexicographic order of their index; each "t"
    list holds exact rationals as strings by ascending t-degree.
    """
    return {
        "n": element.n,
        "basis": element.basis,
        "terms": [
            {"index": list(index), "t": [str(c) for c in coefficient.coefficients]}
            for index, coefficient in element.items()
        ],
    }


def polynomial_from_document(document: dict[str, Any]) -> Element:
    """
    Parse the machine-readable schema back into a QSymT or SymT.

    Raises:
        ValueError: If the document does not match the schema
        InvalidInputError: If an index does not fit the basis or degree
    """
    model = PolynomialDocument(**document)
    try:
        terms = {
            tuple(term.index): TPoly(tuple(Fraction(c) for c in term.t))
            for term in model.terms
        }
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"Invalid rational coefficient: {e}") from e
    cls = QSymT if model.basis in QSymT.BASES else SymT
    return cls(model.n, model.basis, terms)


def _render_coefficient(coefficient: TPoly) -> str:
    if coefficient == TPoly.one():
        return ""
    if coefficient == -TPoly.one():
        return "-"
    values = [c for _, c in coefficient.items()]
    if len(values) == 1:
        return f"{coefficient}·"
    if all(c < 0 for c in values):
        return f"-({-coefficient})·"
    return f"({coefficient})·"


def render(element: GradedFunction) -> str:
    """
    Human-readable form, e.g. ``(3t+3t²)·e[3] + 2t²·e[2 2]``.

    The zero function renders as "0"; an empty index as ``F[]``.
    """
    if element.is_zero():
        return "0"
    pieces = []
    for index, coefficient in element.items():
        label = f"{element.basis}[{' '.join(str(i) for i in index)}]"
        pieces.append(_render_coefficient(coefficient) + label)
    text = pieces[0]
    for piece in pieces[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


def digraph_to_document(d: Digraph) -> dict[str, Any]:
    return {"n": d.n, "edges": [list(edge) for edge in d.sorted_edges]}


def digraph_from_document(document: Union[DigraphDocument, dict[str, Any]]) -> Digraph:
    """
    Build a Digraph from its document form.

    Raises:
        InvalidInputError: On loops, out-of-range vertices or repeated edges
    """
    if not isinstance(document, DigraphDocument):
        document = DigraphDocument(**document)
    return digraph_from_edges(document.n, document.edges)


def load_digraph(path: str | Path) -> Digraph:
    """
    Load a digraph from a .json or .yaml/.yml file.

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If the file is malformed
        InvalidInputError: If the edges are invalid
    """
    return digraph_from_document(load_digraph_document(path))


def dumps(document: Any) -> str:
    """Deterministic JSON text: two-space indent, keys in insertion order."""
    return json.dumps(document, indent=2, ensure_ascii=False)
