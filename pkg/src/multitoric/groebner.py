"""Buchberger's algorithm over GF(q), Hilbert series of monomial ideals and
saturation by the inverse-variable trick.

Polynomials travel through the hot loops as plain ``{exps: coeff}`` dicts; the
public functions accept and return :class:`Polynomial` objects.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .errors import AmbientMismatch, NotHomogeneous
from .finite_field import FieldTable
from .graph import MultipartiteGraph
from .polyring import (
    Binomial, Exps, MonomialOrder, Polynomial, default_order,
    mono_divides, mono_lcm,
)


@dataclass(frozen=True)
class EliminationOrder:
    """Block order: the last ``n_elim`` variables are compared first (by total
    degree within the block), ties broken by grevlex on the rest with
    ``t_1`` least.  Used to eliminate auxiliary variables."""

    nvars: int
    n_elim: int = 1

    @property
    def kind(self) -> str:
        return "elimination"

    def key(self, e: Exps) -> tuple:
        k = self.nvars - self.n_elim
        head = e[:k]
        return (sum(e[k:]), tuple(e[k:]), sum(head), tuple([-x for x in head]))

    def to_json(self) -> dict:
        return {"kind": "elimination", "nvars": self.nvars, "eliminate": self.n_elim}


@dataclass(frozen=True)
class Ideal:
    gens: tuple[Polynomial, ...]
    nvars: int
    field: FieldTable

    def __post_init__(self):
        gens = tuple(p for p in self.gens if not p.is_zero)
        for p in gens:
            if p.nvars != self.nvars or p.field != self.field:
                raise AmbientMismatch("generator lives in a different ring")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_binomials(cls, binomials: Sequence[Binomial], nvars: int, field: FieldTable) -> "Ideal":
        return cls(tuple(b.to_polynomial(field) for b in binomials if not b.is_zero), nvars, field)

    def __add__(self, other: "Ideal") -> "Ideal":
        _check_ambient(self, other)
        return Ideal(self.gens + other.gens, self.nvars, self.field)

    def with_generators(self, polys: Sequence[Polynomial]) -> "Ideal":
        return Ideal(self.gens + tuple(polys), self.nvars, self.field)


def _check_ambient(a, b) -> None:
    if a.nvars != b.nvars or a.field != b.field:
        raise AmbientMismatch(
            f"rings differ: {a.nvars} vars over GF({a.field.q}) vs {b.nvars} vars over GF({b.field.q})"
        )


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple[Polynomial, ...]
    order: object
    nvars: int
    field: FieldTable
    reduced: bool = True

    @property
    def leading_monomials(self) -> list[Exps]:
        return [p.leading_term(self.order)[0] for p in self.basis]

    def to_json(self) -> dict:
        return {
            "order": self.order.to_json(),
            "basis": [p.to_json(self.order) for p in self.basis],
        }

    @classmethod
    def from_json(cls, obj: dict, field: FieldTable) -> "GroebnerBasis":
        order = MonomialOrder.from_json(obj["order"])
        basis = tuple(Polynomial.from_json(p, order.nvars, field) for p in obj["basis"])
        return cls(basis, order, order.nvars, field)


# -- reduction core -------------------------------------------------------------

def _mask(e: Exps) -> int:
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


_FIELD_BITS = 20  # exponents must stay below 2**19


def _pack(e: Exps) -> int:
    v = 0
    for x in reversed(e):
        v = (v << _FIELD_BITS) | x
    return v


def _guards(n: int) -> int:
    g = 0
    for _ in range(n):
        g = (g << _FIELD_BITS) | (1 << (_FIELD_BITS - 1))
    return g


class _Reducer:
    """Basis of monic polynomials with a support-mask prefilter for divisor search."""

    def __init__(self, F: FieldTable, key):
        self.F = F
        self.key = key
        self.lms: list[Exps] = []
        self.masks: list[int] = []
        self.packed: list[int] = []
        self.polys: list[dict] = []
        self.guard = None

    def add(self, lm: Exps, poly: dict) -> int:
        if self.guard is None:
            self.guard = _guards(len(lm))
        self.lms.append(lm)
        self.masks.append(_mask(lm))
        self.packed.append(_pack(lm))
        self.polys.append(poly)
        return len(self.lms) - 1

    def find_divisor(self, m: Exps, mmask: int, skip: int = -1) -> int:
        # guard-bit test: every field of (m | guards) - lm keeps its guard bit iff lm divides m
        if self.guard is None:
            return -1
        guard = self.guard
        mg = _pack(m) | guard
        masks, packed = self.masks, self.packed
        for i in range(len(packed)):
            if not (masks[i] & ~mmask) and ((mg - packed[i]) & guard) == guard and i != skip:
                return i
        return -1

    def _subtract(self, p: dict, c: int, shift: Exps, g: dict) -> None:
        F = self.F
        for e, gc in g.items():
            ne = tuple([a + b for a, b in zip(e, shift)])
            v = F.sub(p.get(ne, 0), F.mul(c, gc))
            if v:
                p[ne] = v
            else:
                p.pop(ne, None)

    def normal_form(self, poly: dict, skip: int = -1) -> dict:
        key = self.key
        p = dict(poly)
        rem = {}
        while p:
            lm = max(p, key=key)
            c = p[lm]
            i = self.find_divisor(lm, _mask(lm), skip)
            if i < 0:
                rem[lm] = c
                del p[lm]
                continue
            shift = tuple([a - b for a, b in zip(lm, self.lms[i])])
            self._subtract(p, c, shift, self.polys[i])
        return rem


def _monic(p: dict, F: FieldTable, key) -> tuple[Exps, dict]:
    lm = max(p, key=key)
    inv = F.inv(p[lm])
    if inv == 1:
        return lm, p
    return lm, {e: F.mul(inv, c) for e, c in p.items()}


def _spoly(F, f_lm, f, g_lm, g) -> dict:
    lcm = mono_lcm(f_lm, g_lm)
    sf = tuple([a - b for a, b in zip(lcm, f_lm)])
    sg = tuple([a - b for a, b in zip(lcm, g_lm)])
    out = {}
    for e, c in f.items():
        out[tuple([a + b for a, b in zip(e, sf)])] = c
    for e, c in g.items():
        ne = tuple([a + b for a, b in zip(e, sg)])
        v = F.sub(out.get(ne, 0), c)
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return out


def _buchberger_dicts(polys: list[dict], F: FieldTable, key) -> list[tuple[Exps, dict]]:
    """Buchberger with normal pair selection and the Gebauer-Moeller update
    (product and chain criteria)."""
    red = _Reducer(F, key)
    heap: list = []
    live: set = set()  # pairs still in the queue
    active: list[int] = []  # elements that spawn new pairs

    guard = [0]

    def lcm_of(i: int, j: int) -> Exps:
        return mono_lcm(red.lms[i], red.lms[j])

    def divides(a: int, b: int) -> bool:
        # packed divisibility via guard bits
        return ((b | guard[0]) - a) & guard[0] == guard[0]

    def insert(h: int) -> None:
        if not guard[0]:
            guard[0] = red.guard
        mh, ph = red.masks[h], red.packed[h]
        cands = []
        for g in active:
            l = lcm_of(h, g)
            cands.append((g, l, _pack(l), not (mh & red.masks[g])))
        kept = []
        for idx, (g1, l1, p1, cop) in enumerate(cands):
            if cop:
                kept.append((g1, l1, p1, cop))
                continue
            if any(divides(c[2], p1) for c in cands[idx + 1:]) or any(divides(c[2], p1) for c in kept):
                continue
            kept.append((g1, l1, p1, cop))
        # old pairs made redundant by h
        for pair in list(live):
            i, j, pij = pair
            if divides(ph, pij):
                lij = lcm_of(i, j)
                if lcm_of(i, h) != lij and lcm_of(j, h) != lij:
                    live.discard(pair)
        for g1, l1, p1, cop in kept:
            if not cop:
                live.add((g1, h, p1))
                heapq.heappush(heap, (sum(l1), key(l1), g1, h, p1))
        active[:] = [g for g in active if not divides(ph, red.packed[g])]
        active.append(h)

    for p in sorted(polys, key=lambda d: key(max(d, key=key))):
        nf = red.normal_form(p)
        if nf:
            lm, nf = _monic(nf, F, key)
            insert(red.add(lm, nf))

    while heap:
        _, _, i, j, pij = heapq.heappop(heap)
        if (i, j, pij) not in live:
            continue
        live.discard((i, j, pij))
        s = _spoly(F, red.lms[i], red.polys[i], red.lms[j], red.polys[j])
        nf = red.normal_form(s)
        if nf:
            lm, nf = _monic(nf, F, key)
            insert(red.add(lm, nf))

    # minimal basis: drop elements whose leading monomial another one divides
    n = len(red.lms)
    order_idx = sorted(range(n), key=lambda i: (key(red.lms[i]), i))
    kept: list[int] = []
    for i in order_idx:
        if not any(mono_divides(red.lms[j], red.lms[i]) for j in kept):
            kept.append(i)
    final = _Reducer(F, key)
    for i in kept:
        final.add(red.lms[i], red.polys[i])
    # interreduce tails
    out = []
    for idx, i in enumerate(kept):
        lm = red.lms[i]
        tail = {e: c for e, c in red.polys[i].items() if e != lm}
        tail_nf = final.normal_form(tail, skip=idx)
        poly = dict(tail_nf)
        poly[lm] = 1
        out.append((lm, poly))
    out.sort(key=lambda t: key(t[0]))
    return out


def buchberger(ideal: Ideal, order=None) -> GroebnerBasis:
    """Reduced Groebner basis; default order is grevlex with t_1 least."""
    order = order or default_order(ideal.nvars)
    F = ideal.field
    polys = [dict(p.terms) for p in ideal.gens]
    result = _buchberger_dicts(polys, F, order.key)
    basis = tuple(Polynomial(p, ideal.nvars, F) for _, p in result)
    return GroebnerBasis(basis, order, ideal.nvars, F, reduced=True)


def _reducer_for(gb: GroebnerBasis) -> _Reducer:
    red = _Reducer(gb.field, gb.order.key)
    for p in gb.basis:
        lm, c = p.leading_term(gb.order)
        terms = p.terms if c == 1 else p.scale(gb.field.inv(c)).terms
        red.add(lm, dict(terms))
    return red


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    _check_ambient(p, gb)
    return Polynomial(_reducer_for(gb).normal_form(dict(p.terms)), gb.nvars, gb.field)


def s_polynomial(f: Polynomial, g: Polynomial, order) -> Polynomial:
    F = f.field
    lf, cf = f.leading_term(order)
    lg, cg = g.leading_term(order)
    fm = f.scale(F.inv(cf))
    gm = g.scale(F.inv(cg))
    return Polynomial(_spoly(F, lf, fm.terms, lg, gm.terms), f.nvars, F)


def ideal_equal(a: Ideal, b: Ideal, order=None) -> bool:
    _check_ambient(a, b)
    ga = buchberger(a, order)
    gb = buchberger(b, order)
    return set(ga.basis) == set(gb.basis)


def saturate(ideal: Ideal, variables: Sequence[int] | None = None) -> Ideal:
    """``ideal : (prod of variables)^inf`` (1-based variable indices, default all).

    A fresh variable ``y`` is adjoined together with ``y * prod(t_i) - 1`` and
    eliminated under a block order.  The result is generated by the y-free part
    of the Groebner basis, which is itself a Groebner basis for grevlex."""
    s, F = ideal.nvars, ideal.field
    variables = list(range(1, s + 1)) if variables is None else list(variables)
    if not ideal.gens:
        return Ideal((), s, F)
    order = EliminationOrder(s + 1, 1)
    polys = [{e + (0,): c for e, c in p.terms.items()} for p in ideal.gens]
    prod = [0] * (s + 1)
    for v in variables:
        prod[v - 1] += 1
    prod[s] = 1
    polys.append({tuple(prod): 1, (0,) * (s + 1): F.neg(1)})
    result = _buchberger_dicts(polys, F, order.key)
    gens = tuple(
        Polynomial({e[:s]: c for e, c in p.items()}, s, F)
        for lm, p in result
        if all(e[s] == 0 for e in p)
    )
    return Ideal(gens, s, F)


# -- Hilbert series -------------------------------------------------------------

def _minimalize(gens) -> tuple:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(out)


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _strip(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def hilbert_numerator(monomials: Sequence[Exps], nvars: int) -> list[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of S/M.

    Pivot recursion on a variable x:  N(M) = N(M + (x)) + t * N(M : x)."""
    memo: dict = {}

    def rec(gens: tuple) -> list[int]:
        if gens in memo:
            return memo[gens]
        if not gens:
            return [1]
        if any(sum(g) == 0 for g in gens):
            return [0]
        counts = [0] * nvars
        pairwise_coprime = True
        used = 0
        for g in gens:
            m = _mask(g)
            if m & used:
                pairwise_coprime = False
            used |= m
            for i, x in enumerate(g):
                if x:
                    counts[i] += 1
        if pairwise_coprime:
            out = [1]
            for g in gens:
                d = sum(g)
                out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
            res = _strip(out)
        else:
            x = max(range(nvars), key=lambda i: (counts[i], -i))
            xe = tuple(1 if i == x else 0 for i in range(nvars))
            plus_x = _minimalize([g for g in gens if g[x] == 0] + [xe])
            colon = _minimalize([g[:x] + (max(g[x] - 1, 0),) + g[x + 1:] for g in gens])
            a = rec(plus_x)
            b = rec(colon)
            res = _strip(_poly_add(a, [0] + b))
        memo[gens] = res
        return res

    return rec(_minimalize([tuple(g) for g in monomials]))


@dataclass(frozen=True)
class HilbertProfile:
    """Hilbert function of S/I read off the Hilbert series P(t)/(1-t)^dimension.

    ``values`` runs from degree 0 through ``regularity`` when the quotient has
    dimension <= 1, otherwise through ``max_degree``."""

    numerator: tuple[int, ...]  # P(t), with P(1) != 0
    dimension: int
    values: tuple[int, ...]
    stable_value: int | None
    regularity: int | None
    multiplicity: int | None

    @property
    def stable(self) -> bool:
        return self.regularity is not None

    def hf(self, d: int) -> int:
        if d < 0:
            return 0
        if self.dimension == 0:
            return self.numerator[d] if d < len(self.numerator) else 0
        k = self.dimension - 1
        return sum(c * comb(d - i + k, k) for i, c in enumerate(self.numerator) if i <= d)

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "numerator": list(self.numerator),
            "dimension": self.dimension,
            "stable_value": self.stable_value,
            "regularity": self.regularity,
            "multiplicity": self.multiplicity,
        }


def profile_from_monomials(monomials: Sequence[Exps], nvars: int, max_degree: int = 10) -> HilbertProfile:
    num = hilbert_numerator(monomials, nvars)
    dim = nvars
    # cancel factors (1 - t) while P(1) == 0
    while dim > 0 and sum(num) == 0 and any(num):
        quot, acc = [], 0
        for c in num[:-1]:
            acc += c
            quot.append(acc)
        num = _strip(quot) if quot else [0]
        dim -= 1
    num = _strip(list(num))
    if not any(num):
        # S/M == 0 (M contains 1)
        return HilbertProfile((0,), 0, (0,), 0, 0, 0)
    mult = sum(num)
    if dim == 0:
        reg, stable = len(num), 0
    elif dim == 1:
        reg, stable = len(num) - 1, mult
    else:
        reg, stable = None, None
    prof = HilbertProfile(tuple(num), dim, (), stable, reg, mult if dim <= 1 else None)
    top = reg if reg is not None else max_degree
    values = tuple(prof.hf(d) for d in range(top + 1))
    return HilbertProfile(tuple(num), dim, values, stable, reg, prof.multiplicity)


def hilbert_profile(gb: GroebnerBasis, max_degree: int = 10) -> HilbertProfile:
    """Hilbert function of S/I from the initial ideal of a graded Groebner basis."""
    for p in gb.basis:
        if not p.is_homogeneous():
            raise NotHomogeneous("Hilbert profile needs a homogeneous ideal")
    return profile_from_monomials(gb.leading_monomials, gb.nvars, max_degree)


def standard_monomial_count(leading: Sequence[Exps], nvars: int, d: int) -> int:
    """Brute-force count of degree-d monomials outside the monomial ideal."""

    count = 0
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        if not any(all(a <= b for a, b in zip(g, e)) for g in leading):
            count += 1
    return count


def toric_ideal_PG(g: MultipartiteGraph, field: FieldTable) -> Ideal:
    """Toric ideal of the edge subring, presented by the 4-cycle quadrics."""
    from .generators import type_ii

    return Ideal.from_binomials(type_ii(g), g.s, field)
