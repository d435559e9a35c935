"""Pydantic models for settings, input documents and CLI commands."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, field_validator

BasisTag = Literal["M", "F", "m", "e", "p"]
MethodTag = Literal["direct", "f-basis", "p-basis", "series"]
SuiteTag = Literal[
    "f-basis",
    "p-basis",
    "cycle-p",
    "cycle-e",
    "sinks",
    "ao-lambda",
    "conjecture",
    "symmetry",
    "specialization",
]
FamilyTag = Literal["interval", "circular", "path", "cycle"]


class EngineSettings(BaseModel):
    """Limits and execution options shared by every sweep."""

    budget_factorial: int = Field(
        default=10, ge=1, description="Largest n accepted by S_n sweeps"
    )
    jobs: int = Field(default=1, ge=1, description="Worker processes for sweeps")
    progress: bool = False
    max_orientation_edges: int = Field(default=20, ge=0)
    seed: int = 0
    bidirected_samples: int = Field(default=200, ge=0)
    circular_arc_samples: int = Field(default=50, ge=0)


class DigraphDocument(BaseModel):
    """On-disk digraph, vertices 1..n: ``{"n": 3, "edges": [[1, 2], [2, 3]]}``."""

    n: int = Field(ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)


class TermDocument(BaseModel):
    """One basis element and its coefficient, rationals written as strings."""

    index: list[int]
    t: list[str]


class PolynomialDocument(BaseModel):
    """Machine-readable polynomial in one of the five bases."""

    n: int = Field(ge=0)
    basis: BasisTag
    terms: list[TermDocument] = Field(default_factory=list)


class ComputeCommand(BaseModel):
    """Options of ``compute``."""

    graph: str
    basis: BasisTag = "M"
    method: MethodTag = "direct"
    json_output: bool = True

    @field_validator("method")
    @classmethod
    def validate_method(cls, v: str, info) -> str:
        """The series method only produces symmetric output."""
        basis = info.data.get("basis")
        if v == "series" and basis in ("M", "F"):
            raise ValueError("method 'series' produces symmetric functions only")
        return v


class ClassifyCommand(BaseModel):
    """Options of ``classify``."""

    graph: str


class VerifyCommand(BaseModel):
    """Options of ``verify``."""

    suite: SuiteTag
    max_n: int = Field(default=4, ge=1)
    family: Optional[Literal["interval", "circular"]] = None


class FamilyCommand(BaseModel):
    """Options of ``family``."""

    kind: FamilyTag
    n: int = Field(ge=1)
    r: Optional[int] = Field(default=None, ge=1)


class VerificationReport(BaseModel):
    """Outcome of a verification suite."""

    suite: str
    params: dict[str, Any] = Field(default_factory=dict)
    status: Literal["pass", "fail"] = "pass"
    checked: int = 0
    counterexample: Optional[dict[str, Any]] = None
