"""Leavitt path algebras over Q: structure, centroids and certificates.

Graphs are passed as text in the ``vertex``/``edge`` format used by the
``lpa`` command line tool. Structured results come back as plain dicts.
"""

import json
from os import PathLike
from typing import Union

from . import _core
from ._core import ElementParseError, GraphError

__all__ = [
    "ElementParseError",
    "GraphError",
    "analyze",
    "centroid",
    "comet_matrix",
    "corpus",
    "multiply",
    "normal_form",
    "seed_space_dimension",
    "verify",
]


def analyze(graph: str) -> dict:
    """Structural properties: vertex kinds, cycles, MT3, comet and simplicity flags."""
    return json.loads(_core.analyze(graph))


def centroid(graph: str, degree: int = 3, certify: bool = True) -> dict:
    """Verdict, branch, certificate and (optionally) its independent re-check."""
    return json.loads(_core.centroid(graph, degree, certify))


def multiply(graph: str, lhs: str, rhs: str) -> str:
    """Normal form of lhs * rhs."""
    return _core.multiply(graph, lhs, rhs)


def normal_form(graph: str, expr: str) -> str:
    return _core.normal_form(graph, expr)


def seed_space_dimension(graph: str, degree: int) -> int:
    """Dimension of the truncated space of centralizer seeds."""
    return _core.seed_space_dimension(graph, degree)


def comet_matrix(graph: str, expr: str) -> list:
    """Image of an element under the comet matrix isomorphism, entries as strings."""
    return _core.comet_matrix(graph, expr)


def corpus(directory: Union[str, PathLike], degree: int = 3) -> dict:
    return json.loads(_core.corpus(str(directory), degree))


def verify(directory: Union[str, PathLike], seed: int = 20240601) -> dict:
    return json.loads(_core.verify(str(directory), seed))
