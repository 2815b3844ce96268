"""The projective toric set X parameterized by the edges of a graph."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .errors import LengthMismatch, TooLarge
from .finite_field import FieldTable, units
from .graph import MultipartiteGraph

MAX_ASSIGNMENTS = 10**7

ProjectivePoint = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ToricSet:
    points: tuple[ProjectivePoint, ...]
    graph: MultipartiteGraph
    field: FieldTable

    def __len__(self) -> int:
        return len(self.points)

    def log_matrix(self) -> np.ndarray:
        """Discrete logs of every coordinate, shape (|X|, s)."""
        log = np.asarray(self.field.log, dtype=np.int64)
        return log[np.asarray(self.points, dtype=np.int64)]

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.points]


def enumerate_X(g: MultipartiteGraph, field: FieldTable, max_assignments: int = MAX_ASSIGNMENTS) -> ToricSet:
    """All points ``(x^{e_1} : ... : x^{e_s})`` for ``x`` in ``(K^*)^n``,
    scaled so the first coordinate is 1, deduplicated and sorted."""
    q = field.q
    if (q - 1) ** g.n > max_assignments:
        raise TooLarge(f"(q-1)^n = {(q - 1) ** g.n} assignments exceed {max_assignments}")
    mul = field.mul
    u0, v0 = g.edges[0]
    seen = set()
    for x in product(units(field), repeat=g.n):
        inv_first = field.inv(mul(x[u0], x[v0]))
        seen.add(tuple(mul(mul(x[u], x[v]), inv_first) for u, v in g.edges))
    return ToricSet(tuple(sorted(seen)), g, field)


def torus_image(g: MultipartiteGraph, field: FieldTable, max_assignments: int = MAX_ASSIGNMENTS) -> tuple[tuple[int, ...], ...]:
    """The affine tuples ``(x^{e_1}, ..., x^{e_s})`` without projective scaling.

    A binomial that is not homogeneous has no well-defined value at a
    projective point; "vanishing on X" then means vanishing at all of these."""
    q = field.q
    if (q - 1) ** g.n > max_assignments:
        raise TooLarge(f"(q-1)^n = {(q - 1) ** g.n} assignments exceed {max_assignments}")
    mul = field.mul
    return tuple(sorted({tuple(mul(x[u], x[v]) for u, v in g.edges) for x in product(units(field), repeat=g.n)}))


def evaluate(m: Sequence[int], p: ProjectivePoint, field: FieldTable) -> int:
    if len(m) != len(p):
        raise LengthMismatch(f"monomial of length {len(m)} at a point with {len(p)} coordinates")
    out = 1
    for x, k in zip(p, m):
        if k:
            out = field.mul(out, field.pow(x, k))
    return out


def expected_cardinality(g: MultipartiteGraph, q: int) -> int:
    """Degree of S/I(X) for a connected graph: (q-1)^(n-1) if it has an odd
    cycle (r >= 3), else (q-1)^(n-2)."""
    if g.r >= 3:
        return (q - 1) ** (g.n - 1)
    return (q - 1) ** (g.n - 2)


def multiply_points(a: ProjectivePoint, b: ProjectivePoint, field: FieldTable) -> ProjectivePoint:
    """Coordinatewise product, rescaled so the first coordinate is 1."""
    c = [field.mul(x, y) for x, y in zip(a, b)]
    inv = field.inv(c[0])
    return tuple(field.mul(x, inv) for x in c)
