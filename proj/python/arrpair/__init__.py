"""Exact intersection pairings of bounded regions of rational hyperplane arrangements."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Arrangement as _Arrangement,
    ArrpairError,
    UnsupportedInput,
    euler_characteristic,
    face_counts,
    gram_matrix,
    independence_complex,
    is_coloop_free,
    is_simple,
    nerve_complex,
    phi_matrix,
    reduced_homology,
)

__all__ = [
    "Arrangement",
    "ArrpairError",
    "UnsupportedInput",
    "definiteness",
    "euler_characteristic",
    "face_counts",
    "gale",
    "gram_matrix",
    "independence_complex",
    "is_coloop_free",
    "is_simple",
    "load",
    "nerve_complex",
    "phi_matrix",
    "psi",
    "reduced_homology",
    "regions",
    "verify",
]

Arrangement = _Arrangement


def _q(x):
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, Fraction or str")
    return str(Fraction(x))


def _qs(xs):
    return [_q(x) for x in xs]


def _arrangement(ambient_dim, hyperplanes):
    """Build from (normal, offset) pairs; entries may be int, Fraction or "p/q"."""
    return _Arrangement(ambient_dim, [(_qs(n), _q(c)) for n, c in hyperplanes])


Arrangement.create = staticmethod(_arrangement)


def load(path):
    return _Arrangement.load(str(path))


def regions(arr, order="lex"):
    """List of (sign string, vertices) with vertices as tuples of Fractions."""
    return [
        (signs, [tuple(Fraction(x) for x in v) for v in verts])
        for signs, verts in _core.regions(arr, order)
    ]


def psi(arr, order="lex"):
    """One dict {simplex (1-based tuple): coefficient} per region."""
    return [{tuple(s): Fraction(c) for s, c in chain} for chain in _core.psi(arr, order)]


def verify(arr, order="lex"):
    return json.loads(_core.verify_json(arr, order))


def definiteness(matrix):
    return json.loads(_core.definiteness_json([_qs(row) for row in matrix]))


def gale(A, theta=None, psi=None):
    return _core.gale(
        [_qs(row) for row in A],
        None if theta is None else _qs(theta),
        None if psi is None else _qs(psi),
    )
