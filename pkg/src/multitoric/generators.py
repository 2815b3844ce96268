"""Binomial generators of the vanishing ideal of a complete multipartite graph,
plus the monomial rewrites used to bound its regularity.

Three families:

* type I   -- ``t_i^(q-1) - t_j^(q-1)``;
* type II  -- ``t_i t_k - t_j t_l`` for each 4-cycle ``e_i e_j e_k e_l``;
* type III -- two hubs ``a, b`` sharing ``n' >= 2`` neighbours ``m_1..m_n'``
  and weights ``1 <= d_k <= q-2`` summing to ``q-1``:
  ``prod t_{a m_k}^{d_k} - prod t_{b m_k}^{d_k}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import (
    InsufficientWeight, InvalidConfig, NoSwappableEdge, NotAdjacent,
    TooFewEdges, Unsupported,
)
from .graph import MultipartiteGraph, four_cycles
from .polyring import Binomial, Exps, unit_vector, vertex_weights


@dataclass(frozen=True)
class TypeIIIConfig:
    hub_a: int
    hub_b: int
    middle: tuple[int, ...]
    weights: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "hub_a": self.hub_a,
            "hub_b": self.hub_b,
            "middle": list(self.middle),
            "weights": list(self.weights),
        }


@dataclass(frozen=True)
class Generator:
    type: str
    binomial: Binomial
    config: dict | None = None

    def to_json(self) -> dict:
        return {"type": self.type, "binomial": self.binomial.to_json(), "config": self.config}


def type_i(g: MultipartiteGraph, q: int, pairwise: bool = False) -> list[Binomial]:
    """``t_i^(q-1) - t_1^(q-1)`` for i = 2..s, or every pair i < j when ``pairwise``."""
    s = g.s
    if pairwise:
        pairs = combinations(range(1, s + 1), 2)
        return [Binomial(unit_vector(s, j, q - 1), unit_vector(s, i, q - 1)) for i, j in pairs]
    return [Binomial(unit_vector(s, i, q - 1), unit_vector(s, 1, q - 1)) for i in range(2, s + 1)]


def _edges_to_exps(s: int, idx: Sequence[int], powers: Sequence[int]) -> Exps:
    e = [0] * s
    for i, k in zip(idx, powers):
        e[i - 1] += k
    return tuple(e)


def type_ii_with_cycles(g: MultipartiteGraph) -> list[tuple[tuple[int, int, int, int], Binomial]]:
    s = g.s
    return [
        (cyc, Binomial(_edges_to_exps(s, (cyc[0], cyc[2]), (1, 1)), _edges_to_exps(s, (cyc[1], cyc[3]), (1, 1))))
        for cyc in four_cycles(g)
    ]


def type_ii(g: MultipartiteGraph) -> list[Binomial]:
    return [b for _, b in type_ii_with_cycles(g)]


def compositions(total: int, parts: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` entries in ``[lo, hi]``, colex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    # colex: the last entry varies slowest
    for last in range(lo, hi + 1):
        rest = total - last
        if rest < lo * (parts - 1) or rest > hi * (parts - 1):
            continue
        for head in compositions(rest, parts - 1, lo, hi):
            yield head + (last,)


def _common_neighbors(g: MultipartiteGraph, a: int, b: int) -> list[int]:
    return [v for v in g.vertices if v not in (a, b) and g.adjacent(a, v) and g.adjacent(b, v)]


def _config_binomial(g: MultipartiteGraph, cfg: TypeIIIConfig) -> Binomial:
    s = g.s
    plus = [0] * s
    minus = [0] * s
    for m, d in zip(cfg.middle, cfg.weights):
        plus[g.var(cfg.hub_a, m)] += d
        minus[g.var(cfg.hub_b, m)] += d
    return Binomial(tuple(plus), tuple(minus))


def type_iii_configs(g: MultipartiteGraph, q: int) -> list[TypeIIIConfig]:
    out = []
    if q < 3:
        return out
    for a, b in combinations(g.vertices, 2):
        common = _common_neighbors(g, a, b)
        for size in range(2, min(len(common), q - 1) + 1):
            for middle in combinations(common, size):
                for d in compositions(q - 1, size, 1, q - 2):
                    out.append(TypeIIIConfig(a, b, middle, d))
    return out


def type_iii_with_configs(g: MultipartiteGraph, q: int) -> list[tuple[TypeIIIConfig, Binomial]]:
    return [(cfg, _config_binomial(g, cfg)) for cfg in type_iii_configs(g, q)]


def type_iii(g: MultipartiteGraph, q: int) -> list[Binomial]:
    return [b for _, b in type_iii_with_configs(g, q)]


def all_generators(
    g: MultipartiteGraph, q: int, types: Sequence[str] = ("I", "II", "III"), pairwise_type_i: bool = False
) -> list[Generator]:
    out: list[Generator] = []
    if "I" in types:
        out += [Generator("I", b) for b in type_i(g, q, pairwise_type_i)]
    if "II" in types:
        out += [Generator("II", b, {"cycle": list(c)}) for c, b in type_ii_with_cycles(g)]
    if "III" in types:
        out += [Generator("III", b, c.to_json()) for c, b in type_iii_with_configs(g, q)]
    return out


def generating_binomials(g: MultipartiteGraph, q: int) -> list[Binomial]:
    """Types I, II and III together."""
    return type_i(g, q) + type_ii(g) + type_iii(g, q)


def generalized_type_iii(g: MultipartiteGraph, q: int, cfg: TypeIIIConfig) -> Binomial:
    """Two-hub binomial whose weights sum to a positive multiple of q-1."""
    if cfg.hub_a == cfg.hub_b:
        raise InvalidConfig("hubs must differ")
    if len(cfg.middle) < 2 or len(set(cfg.middle)) != len(cfg.middle):
        raise InvalidConfig("need at least two distinct middle vertices")
    if len(cfg.weights) != len(cfg.middle):
        raise InvalidConfig("one weight per middle vertex")
    if {cfg.hub_a, cfg.hub_b} & set(cfg.middle):
        raise InvalidConfig("hubs must not be middle vertices")
    for m in cfg.middle:
        if not (g.adjacent(cfg.hub_a, m) and g.adjacent(cfg.hub_b, m)):
            raise InvalidConfig(f"middle vertex {m} is not adjacent to both hubs")
    if any(not 1 <= d <= q - 2 for d in cfg.weights):
        raise InvalidConfig("weights must lie in 1..q-2")
    total = sum(cfg.weights)
    if total == 0 or total % (q - 1):
        raise InvalidConfig("weights must sum to a positive multiple of q-1")
    return _config_binomial(g, cfg)


# -- monomial rewrites ----------------------------------------------------------

def move_weight(
    m: Sequence[int],
    v0: int,
    edge_subset: Sequence[int],
    w0: int,
    alpha: int,
    g: MultipartiteGraph,
    q: int,
) -> Exps:
    """Move ``alpha*(q-1)`` of the weight ``v0`` carries on ``edge_subset``
    (1-based edge indices) over to ``w0``, edge by edge through the shared
    far endpoints.  The result ``t^b`` has ``t^a - t^b`` in the vanishing ideal."""
    m = list(m)
    if len(edge_subset) < 2:
        raise TooFewEdges("need at least two edges")
    if w0 == v0:
        raise NotAdjacent("w0 must differ from v0")
    others = []
    for i in edge_subset:
        u, v = g.edge(i)
        if v0 not in (u, v):
            raise NotAdjacent(f"edge {i} is not incident to {v0}")
        other = v if u == v0 else u
        if other == w0 or not g.adjacent(w0, other):
            raise NotAdjacent(f"{{{w0}, {other}}} is not an edge")
        others.append(other)
    need = alpha * (q - 1)
    if alpha < 1 or sum(m[i - 1] for i in edge_subset) < need:
        raise InsufficientWeight(f"edges carry less than {need}")
    for i, other in zip(edge_subset, others):
        if need == 0:
            break
        d = min(m[i - 1], need)
        m[i - 1] -= d
        m[g.var(w0, other)] += d
        need -= d
    return tuple(m)


def _cross_weights(m: Sequence[int], g: MultipartiteGraph, vi: int, j: int) -> tuple[int, int]:
    """(delta, Delta): weight between vi and V minus P_j, and weight inside V minus P_j."""
    delta = big = 0
    for (u, v), a in zip(g.edges, m):
        if a and g.part_of[u] != j and g.part_of[v] != j:
            big += a
            if vi in (u, v):
                delta += a
    return delta, big


def swap_endpoints(m: Sequence[int], i: int, j: int, vi: int, g: MultipartiteGraph) -> Exps:
    """Repeatedly trade ``t_{vi,w3} t_{w1,w2}`` for ``t_{vi,w1} t_{w2,w3}``
    (a 4-cycle quadric, w3 in part j) until the weight between ``vi`` and the
    vertices outside part ``j`` is ``min(wt(vi), Delta_j)``.  Parts are 0-based."""
    m = list(m)
    if i == j:
        raise ValueError("parts must differ")
    if g.part_of[vi] != i:
        raise ValueError(f"vertex {vi} is not in part {i}")

    def outside_edge():
        for (u, v), a in zip(g.edges, m):
            if a and vi not in (u, v) and g.part_of[u] != j and g.part_of[v] != j:
                return u, v
        return None

    if outside_edge() is None:
        raise NoSwappableEdge("no weighted edge avoids part j and vi")
    wt_vi = vertex_weights(m, g)[vi]
    while True:
        delta, big = _cross_weights(m, g, vi, j)
        if delta >= min(wt_vi, big):
            return tuple(m)
        w3 = next(
            w for w in g.part(j) if g.adjacent(vi, w) and m[g.var(vi, w)]
        )
        w1, w2 = outside_edge()
        if g.part_of[w1] == i:
            w1, w2 = w2, w1
        m[g.var(vi, w3)] -= 1
        m[g.var(w1, w2)] -= 1
        m[g.var(vi, w1)] += 1
        m[g.var(w2, w3)] += 1


def witness_monomial(g: MultipartiteGraph, q: int) -> Exps:
    """``t_{v2,v3}^(q-2) * prod_{w in P_1 - v1} t_{w,v2}^(q-2)`` where ``v_i`` is
    the first vertex of part i.  It has degree ``alpha_1 (q-2)`` and lies
    outside ``I(X) + (t_1)``."""
    alphas = g.spec.alphas
    if g.r < 3:
        raise Unsupported("witness monomial needs at least three parts")
    if alphas[0] < 2:
        raise Unsupported("witness monomial needs alpha_1 >= 2")
    if q < 3:
        raise Unsupported("witness monomial needs q >= 3")
    p1, p2, p3 = g.part(0), g.part(1), g.part(2)
    v1, v2, v3 = p1[0], p2[0], p3[0]
    e = [0] * g.s
    e[g.var(v2, v3)] += q - 2
    for w in p1:
        if w != v1:
            e[g.var(w, v2)] += q - 2
    return tuple(e)
