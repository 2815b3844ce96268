"""Monomials, binomials and sparse polynomials over GF(q) in t_1..t_s.

Exponent vectors are plain tuples of length ``s``; position ``i - 1`` holds the
exponent of ``t_i``.  Variable indices that appear in public data (monomial
order priorities, JSON) are 1-based to match the ``t_i`` names.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import FieldMismatch, LengthMismatch
from .finite_field import FieldTable
from .graph import MultipartiteGraph

Exps = tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def _check_len(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise LengthMismatch(f"exponent vectors of lengths {len(a)} and {len(b)}")


# -- monomial orders ------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """A graded order.  ``priority`` lists variable indices, most significant first."""

    kind: str
    priority: tuple[int, ...]
    key: Callable[[Exps], tuple] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("grevlex", "grlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        priority = tuple(int(v) for v in self.priority)
        if sorted(priority) != list(range(1, len(priority) + 1)):
            raise ValueError(f"priority must be a permutation of 1..s, got {priority}")
        object.__setattr__(self, "priority", priority)
        if self.kind == "grevlex":
            rev = [v - 1 for v in reversed(priority)]

            def key(e):
                return (sum(e), tuple([-e[i] for i in rev]))
        else:
            fwd = [v - 1 for v in priority]

            def key(e):
                return (sum(e), tuple([e[i] for i in fwd]))
        object.__setattr__(self, "key", key)

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def to_json(self) -> dict:
        return {"kind": self.kind, "priority": list(self.priority)}

    @classmethod
    def from_json(cls, obj: dict) -> "MonomialOrder":
        return cls(obj["kind"], tuple(obj["priority"]))


def default_order(s: int, kind: str = "grevlex") -> MonomialOrder:
    """t_s > ... > t_1, so t_1 is the least variable."""
    return MonomialOrder(kind, tuple(range(s, 0, -1)))


def compare(order: MonomialOrder, m1: Sequence[int], m2: Sequence[int]) -> int:
    _check_len(m1, m2)
    if len(m1) != order.nvars:
        raise LengthMismatch(f"order has {order.nvars} variables, monomial has {len(m1)}")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


# -- monomial helpers -----------------------------------------------------------

def mono_mul(a: Exps, b: Exps) -> Exps:
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a: Exps, b: Exps) -> Exps:
    return tuple([x - y for x, y in zip(a, b)])


def mono_divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Exps, b: Exps) -> Exps:
    return tuple([max(x, y) for x, y in zip(a, b)])


def mono_gcd(a: Exps, b: Exps) -> Exps:
    return tuple([min(x, y) for x, y in zip(a, b)])


def unit_vector(s: int, i: int, power: int = 1) -> Exps:
    """Exponent vector of ``t_i**power`` (i is 1-based)."""
    e = [0] * s
    e[i - 1] = power
    return tuple(e)


# -- binomials ------------------------------------------------------------------

@dataclass(frozen=True)
class Binomial:
    """``t^plus - t^minus`` with disjoint supports."""

    plus: Exps
    minus: Exps

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(int(x) for x in self.plus))
        object.__setattr__(self, "minus", tuple(int(x) for x in self.minus))
        _check_len(self.plus, self.minus)
        if any(a and b for a, b in zip(self.plus, self.minus)):
            raise ValueError("binomial sides must have disjoint supports")
        if any(x < 0 for x in self.plus + self.minus):
            raise ValueError("negative exponent")

    @classmethod
    def from_monomials(cls, a: Sequence[int], b: Sequence[int]) -> "Binomial":
        """``t^a - t^b`` divided by ``gcd(t^a, t^b)``."""
        _check_len(a, b)
        g = mono_gcd(tuple(a), tuple(b))
        return cls(mono_div(tuple(a), g), mono_div(tuple(b), g))

    @property
    def nvars(self) -> int:
        return len(self.plus)

    @property
    def degrees(self) -> tuple[int, int]:
        return sum(self.plus), sum(self.minus)

    @property
    def is_homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)

    @property
    def is_zero(self) -> bool:
        return self.plus == self.minus

    def negated(self) -> "Binomial":
        return Binomial(self.minus, self.plus)

    def to_polynomial(self, field: FieldTable) -> "Polynomial":
        terms = {}
        if self.plus != self.minus:
            terms[self.plus] = 1
            terms[self.minus] = field.neg(1)
        return Polynomial(terms, self.nvars, field)

    def to_json(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus)}

    @classmethod
    def from_json(cls, obj: dict) -> "Binomial":
        return cls(tuple(obj["plus"]), tuple(obj["minus"]))


# -- polynomials ----------------------------------------------------------------

class Polynomial:
    """Sparse polynomial: ``terms`` maps exponent tuples to nonzero field elements."""

    __slots__ = ("terms", "nvars", "field")

    def __init__(self, terms: dict, nvars: int, field: FieldTable):
        self.nvars = nvars
        self.field = field
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != nvars:
                raise LengthMismatch(f"term {e} in a ring with {nvars} variables")
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} outside GF({field.q})")
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int, field: FieldTable) -> "Polynomial":
        return cls({}, nvars, field)

    @classmethod
    def monomial(cls, exps: Sequence[int], field: FieldTable, coeff: int = 1) -> "Polynomial":
        return cls({tuple(exps): coeff}, len(exps), field)

    @classmethod
    def constant(cls, c: int, nvars: int, field: FieldTable) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars, field)

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"GF({self.field.q}) vs GF({other.field.q})")
        if self.nvars != other.nvars:
            raise LengthMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = F.add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(out, self.nvars, F)

    def __neg__(self) -> "Polynomial":
        F = self.field
        return Polynomial({e: F.neg(c) for e, c in self.terms.items()}, self.nvars, F)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        F = self.field
        return Polynomial({e: F.mul(c, v) for e, v in self.terms.items()}, self.nvars, F)

    def multiply_by_term(self, exps: Sequence[int], c: int = 1) -> "Polynomial":
        _check_len(exps, (0,) * self.nvars)
        F = self.field
        exps = tuple(exps)
        return Polynomial({mono_mul(e, exps): F.mul(c, v) for e, v in self.terms.items()}, self.nvars, F)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = Polynomial.zero(self.nvars, self.field)
        for e, c in other.terms.items():
            out = out + self.multiply_by_term(e, c)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.field.q, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self, order: MonomialOrder) -> tuple[Exps, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c))

    def evaluate(self, point: Sequence[int]) -> int:
        F = self.field
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = F.mul(v, F.pow(x, k))
            total = F.add(total, v)
        return total

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Exps, int]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_json(self, order: MonomialOrder | None = None) -> list[dict]:
        items = self.sorted_terms(order) if order else sorted(self.terms.items())
        return [{"coeff": c, "exp": list(e)} for e, c in items]

    @classmethod
    def from_json(cls, obj: list[dict], nvars: int, field: FieldTable) -> "Polynomial":
        return cls({tuple(t["exp"]): int(t["coeff"]) for t in obj}, nvars, field)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"t{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def scale(a: Polynomial, c: int) -> Polynomial:
    return a.scale(c)


def multiply_by_term(a: Polynomial, exps: Sequence[int], c: int = 1) -> Polynomial:
    return a.multiply_by_term(exps, c)


def leading_term(a: Polynomial, order: MonomialOrder) -> tuple[Exps, int]:
    return a.leading_term(order)


# -- weighted subgraphs ---------------------------------------------------------

@dataclass(frozen=True)
class WeightedSubgraph:
    edge_weights: dict  # 1-based edge index -> positive weight
    vertex_weights: tuple[int, ...]


def vertex_weights(m: Sequence[int], g: MultipartiteGraph) -> list[int]:
    if len(m) != g.s:
        raise LengthMismatch(f"monomial of length {len(m)} on a graph with {g.s} edges")
    wt = [0] * g.n
    for (u, v), a in zip(g.edges, m):
        if a:
            wt[u] += a
            wt[v] += a
    return wt


def weighted_subgraph(m: Sequence[int], g: MultipartiteGraph) -> WeightedSubgraph:
    wt = vertex_weights(m, g)
    return WeightedSubgraph({i + 1: a for i, a in enumerate(m) if a}, tuple(wt))


def vanishes_on_X(f: Binomial, g: MultipartiteGraph, q: int) -> bool:
    """Weighted-degree criterion: ``t^a - t^b`` vanishes on the toric set of ``g``
    over GF(q) iff every vertex has congruent weighted degrees mod q-1."""
    wa = vertex_weights(f.plus, g)
    wb = vertex_weights(f.minus, g)
    return all((x - y) % (q - 1) == 0 for x, y in zip(wa, wb))


def binomials_to_polys(binomials: Iterable[Binomial], field: FieldTable) -> list[Polynomial]:
    return [b.to_polynomial(field) for b in binomials if not b.is_zero]


__all__ = [
    "Binomial", "Exps", "MonomialOrder", "Polynomial", "WeightedSubgraph",
    "add", "binomials_to_polys", "compare", "default_order",
    "leading_term", "mono_divides", "mono_gcd", "mono_lcm", "mono_mul", "mono_div",
    "multiply_by_term", "scale", "unit_vector", "vanishes_on_X", "vertex_weights",
    "weighted_subgraph",
]
