"""Complete multipartite graphs with a canonical edge ordering.

Vertices are ``0..n-1`` and the parts are consecutive blocks, so for
``alphas = (2, 1, 1)`` the parts are ``{0, 1}``, ``{2}``, ``{3}``.  Edges are
sorted lexicographically and numbered from 1; the variable ``t_i`` of the
polynomial ring corresponds to edge ``i``, stored at exponent position ``i - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import InvalidPartition, NotAnEdge


@dataclass(frozen=True)
class PartitionSpec:
    alphas: tuple[int, ...]

    def __post_init__(self):
        alphas = tuple(int(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if len(alphas) < 2:
            raise InvalidPartition(f"need at least two parts, got {alphas}")
        if any(a < 1 for a in alphas):
            raise InvalidPartition(f"part sizes must be positive, got {alphas}")
        if sum(alphas) < 3:
            raise InvalidPartition(f"need at least three vertices, got {alphas}")

    @property
    def r(self) -> int:
        return len(self.alphas)

    @property
    def n(self) -> int:
        return sum(self.alphas)

    def sorted_descending(self) -> "PartitionSpec":
        return PartitionSpec(tuple(sorted(self.alphas, reverse=True)))

    def __str__(self):
        return ",".join(map(str, self.alphas))


def parse_partition(text: str) -> PartitionSpec:
    """Parse ``"a1,a2,...,ar"``."""
    try:
        alphas = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InvalidPartition(f"cannot parse partition {text!r}") from None
    return PartitionSpec(alphas)


def edge_count(alphas) -> int:
    n = sum(alphas)
    return (n * n - sum(a * a for a in alphas)) // 2


@dataclass(frozen=True, eq=False)
class MultipartiteGraph:
    spec: PartitionSpec
    part_of: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    _index: dict = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def r(self) -> int:
        return self.spec.r

    @property
    def s(self) -> int:
        return len(self.edges)

    @property
    def is_bipartite(self) -> bool:
        return self.spec.r == 2

    @property
    def vertices(self) -> range:
        return range(self.n)

    def part(self, i: int) -> list[int]:
        """Vertices of part ``i`` (0-based)."""
        return [v for v in self.vertices if self.part_of[v] == i]

    def adjacent(self, u: int, v: int) -> bool:
        return self.part_of[u] != self.part_of[v]

    def neighbors(self, v: int) -> list[int]:
        return [u for u in self.vertices if self.part_of[u] != self.part_of[v]]

    def edge(self, i: int) -> tuple[int, int]:
        """Endpoints of edge ``i`` (1-based)."""
        return self.edges[i - 1]

    def var(self, u: int, v: int) -> int:
        """Exponent position (0-based) of the variable for edge {u, v}."""
        try:
            return self._index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise NotAnEdge(f"{{{u}, {v}}} is not an edge") from None

    def __eq__(self, other):
        return isinstance(other, MultipartiteGraph) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)


def build_graph(spec: PartitionSpec | tuple | list) -> MultipartiteGraph:
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    part_of = tuple(i for i, a in enumerate(spec.alphas) for _ in range(a))
    n = len(part_of)
    edges = tuple((u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v])
    index = {e: i for i, e in enumerate(edges)}
    return MultipartiteGraph(spec=spec, part_of=part_of, edges=edges, _index=index)


def edge_index(g: MultipartiteGraph, u: int, v: int) -> int:
    """1-based index of edge {u, v}."""
    return g.var(u, v) + 1


def _canonical_cycle(cyc: tuple[int, ...]) -> tuple[int, ...]:
    forms = []
    for seq in (cyc, cyc[::-1]):
        for i in range(4):
            forms.append(seq[i:] + seq[:i])
    return min(forms)


def four_cycles(g: MultipartiteGraph) -> list[tuple[int, int, int, int]]:
    """Every 4-cycle once, as 1-based edge indices ``(i, j, k, l)``.

    For the canonical vertex tuple ``(a, b, c, d)`` the edges are
    ``e_i = {a, b}, e_j = {b, c}, e_k = {c, d}, e_l = {d, a}``.
    """
    out = []
    for quad in combinations(g.vertices, 4):
        seen = set()
        a = quad[0]
        for rest in permutations(quad[1:]):
            cyc = (a,) + rest
            if not all(g.adjacent(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
                continue
            canon = _canonical_cycle(cyc)
            if canon in seen:
                continue
            seen.add(canon)
            out.append(canon)
    out.sort()
    return [
        tuple(edge_index(g, c[i], c[(i + 1) % 4]) for i in range(4))
        for c in out
    ]
