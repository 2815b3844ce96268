"""Point-evaluation Hilbert oracle, regularity formulas and the verification
drivers that compare them with Groebner-basis computations."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

import numpy as np

from .errors import TooLarge, Unsupported
from .finite_field import FieldTable, build_field
from .generators import (
    generating_binomials, type_i, type_ii, type_iii, witness_monomial,
)
from .graph import MultipartiteGraph, PartitionSpec, build_graph
from .groebner import (
    Ideal, buchberger, hilbert_profile, ideal_equal, normal_form, saturate,
    toric_ideal_PG,
)
from .polyring import Binomial, Polynomial, unit_vector, vanishes_on_X
from .toric_set import ToricSet, enumerate_X, expected_cardinality


@dataclass(frozen=True)
class WorkBounds:
    max_points: int = 5000
    max_monomials: int = 200_000
    max_codewords: int = 10**6
    max_assignments: int = 10**7


DEFAULT_BOUNDS = WorkBounds()


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# -- exact linear algebra over GF(q) --------------------------------------------

def row_echelon(matrix, F: FieldTable) -> tuple[np.ndarray, int]:
    """Row echelon form over GF(q) by Gaussian elimination, pivoting on the
    first nonzero entry in each column.  Returns (echelon rows, rank)."""
    A = np.array(matrix, dtype=np.int64, copy=True)
    if A.ndim != 2 or A.size == 0:
        return A.reshape(0, A.shape[-1] if A.ndim == 2 else 0), 0
    nrows, ncols = A.shape
    p = F.p
    prime = F.is_prime
    if not prime:
        add, mul, neg = F.add_table, F.mul_table, F.neg_array
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = F.inv(int(A[r, c]))
        if prime:
            A[r] = (A[r] * inv) % p
        else:
            A[r] = mul[inv, A[r]]
        below = r + 1 + np.nonzero(A[r + 1:, c])[0]
        if below.size:
            f = A[below, c]
            if prime:
                A[below] = (A[below] - f[:, None] * A[r][None, :]) % p
            else:
                A[below] = add[A[below], neg[mul[f[:, None], A[r][None, :]]]]
        r += 1
    return A[:r], r


def rank_gf(matrix, F: FieldTable) -> int:
    return row_echelon(matrix, F)[1]


# -- Hilbert oracle -------------------------------------------------------------

def _degree_monomials(s: int, d: int):
    for combo in combinations_with_replacement(range(s), d):
        e = [0] * s
        for i in combo:
            e[i] += 1
        yield e


def evaluation_rows(X: ToricSet, d: int, bounds: WorkBounds = DEFAULT_BOUNDS, chunk: int = 20_000) -> np.ndarray:
    """Distinct evaluation vectors of the degree-d monomials on X."""
    F, s = X.field, X.graph.s
    count = comb(d + s - 1, s - 1)
    if len(X) > bounds.max_points:
        raise TooLarge(f"|X| = {len(X)} exceeds {bounds.max_points}")
    if count > bounds.max_monomials:
        raise TooLarge(f"{count} monomials of degree {d} exceed {bounds.max_monomials}")
    L = X.log_matrix().T  # (s, |X|)
    exp = np.asarray(F.exp, dtype=np.int64)
    order = F.q - 1
    unique: dict[bytes, np.ndarray] = {}
    buf = []
    gen = _degree_monomials(s, d)
    while True:
        buf = [e for _, e in zip(range(chunk), gen)]
        if not buf:
            break
        vals = exp[(np.asarray(buf, dtype=np.int64) @ L) % order]
        for row in np.unique(vals, axis=0):
            unique.setdefault(row.tobytes(), row)
    return np.asarray([unique[k] for k in sorted(unique)], dtype=np.int64)


def hilbert_oracle(X: ToricSet, d: int, bounds: WorkBounds = DEFAULT_BOUNDS) -> int:
    """dim_K S_d / I(X)_d as the rank of the degree-d evaluation matrix."""
    if d < 0:
        return 0
    return rank_gf(evaluation_rows(X, d, bounds), X.field)


def regularity_oracle(X: ToricSet, bounds: WorkBounds = DEFAULT_BOUNDS) -> int:
    target = len(X)
    d = 0
    while hilbert_oracle(X, d, bounds) < target:
        d += 1
    return d


def regularity_formula(spec: PartitionSpec, q: int) -> int:
    alphas = sorted(spec.alphas, reverse=True)
    n, r = sum(alphas), len(alphas)
    if r == 2:
        a, b = alphas
        return max((a - 1) * (q - 2), (b - 1) * (q - 2))
    if n == 3:
        return 2 * (q - 2)
    return max(alphas[0] * (q - 2), _ceil_div((n - 1) * (q - 2), 2))


def grs_lower_bound(spec: PartitionSpec, q: int, card: int) -> int:
    n = spec.n
    return _ceil_div(card * (n - 1) * (q - 2), 2 * (q - 1) ** (n - 1))


# -- ideals by name -------------------------------------------------------------

IDEAL_NAMES = ("J", "IX-plus-t1", "PG-plus-typeI", "saturated")


def generation_ideal(g: MultipartiteGraph, F: FieldTable) -> Ideal:
    return Ideal.from_binomials(generating_binomials(g, F.q), g.s, F)


def named_ideal(name: str, g: MultipartiteGraph, F: FieldTable) -> Ideal:
    if name == "J":
        return generation_ideal(g, F)
    if name == "IX-plus-t1":
        return generation_ideal(g, F).with_generators([Polynomial.monomial(unit_vector(g.s, 1), F)])
    pg_plus = toric_ideal_PG(g, F) + Ideal.from_binomials(type_i(g, F.q), g.s, F)
    if name == "PG-plus-typeI":
        return pg_plus
    if name == "saturated":
        return saturate(pg_plus)
    raise ValueError(f"unknown ideal {name!r}; choose from {IDEAL_NAMES}")


# -- verification ---------------------------------------------------------------

@dataclass
class VerificationReport:
    instance: dict
    s: int = 0
    cardinality: int = 0
    expected_cardinality: int = 0
    cardinality_ok: bool = False
    generator_counts: dict = field(default_factory=dict)
    containment_ok: bool = False
    hilbert_match: list = field(default_factory=list)
    stabilization_ok: bool = False
    regularity_oracle: int | None = None
    regularity_formula: int | None = None
    regularity_groebner: int | None = None
    grs_bound: int | None = None
    grs_bound_ok: bool = False
    saturation_ok: bool | None = None
    skipped: list = field(default_factory=list)

    @property
    def hilbert_ok(self) -> bool:
        return bool(self.hilbert_match) and all(row["ok"] for row in self.hilbert_match)

    @property
    def regularity_ok(self) -> bool:
        return (
            self.regularity_oracle is not None
            and self.regularity_oracle == self.regularity_formula == self.regularity_groebner
        )

    @property
    def ok(self) -> bool:
        return (
            not self.skipped
            and self.cardinality_ok
            and self.containment_ok
            and self.hilbert_ok
            and self.stabilization_ok
            and self.regularity_ok
            and self.grs_bound_ok
            and self.saturation_ok is not False
        )

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        return "ok" if self.ok else "fail"

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        out["status"] = self.status
        return out


def _pointwise_vanishes(b: Binomial, X: ToricSet) -> bool:
    L = X.log_matrix()
    order = X.field.q - 1
    lhs = (L @ np.asarray(b.plus, dtype=np.int64)) % order
    rhs = (L @ np.asarray(b.minus, dtype=np.int64)) % order
    return bool(np.array_equal(lhs, rhs))


def verify_generation(
    spec: PartitionSpec, q: int, *, with_saturation: bool = False, bounds: WorkBounds = DEFAULT_BOUNDS
) -> VerificationReport:
    """Check that the type I/II/III binomials generate I(X): they vanish on X
    and the Hilbert function of their ideal matches the evaluation oracle up to
    the predicted regularity + 2, with the quotient certified 1-dimensional of
    degree |X|."""
    F = build_field(q)
    g = build_graph(spec)
    rep = VerificationReport(instance={"parts": list(spec.alphas), "q": q}, s=g.s)
    rep.expected_cardinality = expected_cardinality(g, q)
    rep.regularity_formula = regularity_formula(spec, q)
    try:
        X = enumerate_X(g, F, bounds.max_assignments)
    except TooLarge as exc:
        rep.skipped.append(f"points: {exc}")
        return rep
    rep.cardinality = len(X)
    rep.cardinality_ok = rep.cardinality == rep.expected_cardinality

    t1, t2, t3 = type_i(g, q), type_ii(g), type_iii(g, q)
    rep.generator_counts = {"I": len(t1), "II": len(t2), "III": len(t3)}
    gens = t1 + t2 + t3
    rep.containment_ok = all(vanishes_on_X(b, g, q) and _pointwise_vanishes(b, X) for b in gens)

    gb = buchberger(Ideal.from_binomials(gens, g.s, F))
    prof = hilbert_profile(gb)
    rep.regularity_groebner = prof.regularity
    rep.stabilization_ok = prof.dimension == 1 and prof.stable_value == len(X)

    top = rep.regularity_formula + 2
    oracle_values = []
    for d in range(top + 1):
        try:
            h = hilbert_oracle(X, d, bounds)
        except TooLarge as exc:
            rep.skipped.append(f"hilbert_oracle(d={d}): {exc}")
            break
        oracle_values.append(h)
        hj = prof.hf(d)
        rep.hilbert_match.append({"degree": d, "groebner": hj, "oracle": h, "ok": hj == h})
    reached = [d for d, h in enumerate(oracle_values) if h == len(X)]
    if reached:
        rep.regularity_oracle = reached[0]
    elif not rep.skipped:
        try:
            rep.regularity_oracle = regularity_oracle(X, bounds)
        except TooLarge as exc:
            rep.skipped.append(f"regularity_oracle: {exc}")

    if rep.regularity_oracle is not None:
        rep.grs_bound = grs_lower_bound(spec, q, len(X))
        rep.grs_bound_ok = rep.regularity_oracle >= rep.grs_bound

    if with_saturation:
        rep.saturation_ok = ideal_equal(named_ideal("saturated", g, F), Ideal.from_binomials(gens, g.s, F))
    return rep


@dataclass
class WitnessReport:
    instance: dict
    witness: list
    witness_degree: int
    regularity_formula: int
    normal_form_nonzero: bool
    hf_at_reg: int
    hf_at_reg_plus_1: int
    artinian_regularity: int | None
    regularity_oracle: int | None

    @property
    def ok(self) -> bool:
        consistent = (
            self.regularity_oracle is None
            or self.artinian_regularity is None
            or self.regularity_oracle == self.artinian_regularity - 1
        )
        return self.normal_form_nonzero and self.hf_at_reg > 0 and self.hf_at_reg_plus_1 == 0 and consistent

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def verify_regularity_witness(
    spec: PartitionSpec, q: int, *, with_oracle: bool = True, bounds: WorkBounds = DEFAULT_BOUNDS
) -> WitnessReport:
    """Artinian-reduction test: with t_1 least, the witness monomial of degree
    alpha_1 (q-2) survives modulo I(X) + (t_1) while every monomial of degree
    reg + 1 dies."""
    if spec.r < 3 or spec.alphas[0] < 2 or q < 3:
        raise Unsupported("witness test needs r >= 3, alpha_1 >= 2 and q >= 3")
    F = build_field(q)
    g = build_graph(spec)
    ideal = named_ideal("IX-plus-t1", g, F)
    gb = buchberger(ideal)
    w = witness_monomial(g, q)
    nf = normal_form(Polynomial.monomial(w, F), gb)
    prof = hilbert_profile(gb)
    d = regularity_formula(spec, q)
    reg_oracle = None
    if with_oracle:
        reg_oracle = regularity_oracle(enumerate_X(g, F, bounds.max_assignments), bounds)
    return WitnessReport(
        instance={"parts": list(spec.alphas), "q": q},
        witness=list(w),
        witness_degree=sum(w),
        regularity_formula=d,
        normal_form_nonzero=not nf.is_zero,
        hf_at_reg=prof.hf(d),
        hf_at_reg_plus_1=prof.hf(d + 1),
        artinian_regularity=prof.regularity,
        regularity_oracle=reg_oracle,
    )


# -- evaluation codes -----------------------------------------------------------

@dataclass(frozen=True)
class CodeParams:
    length: int
    dimension: int
    degree: int
    min_distance: int | None = None

    def to_json(self) -> dict:
        return asdict(self)


def _all_codewords(basis: np.ndarray, F: FieldTable) -> np.ndarray:
    words = np.zeros((1, basis.shape[1]), dtype=np.int64)
    for row in basis:
        blocks = []
        for c in range(F.q):
            if F.is_prime:
                blocks.append((words + c * row[None, :]) % F.p)
            else:
                blocks.append(F.add_table[words, F.mul_table[c, row][None, :]])
        words = np.concatenate(blocks)
    return words


def min_distance(basis: np.ndarray, F: FieldTable, bounds: WorkBounds = DEFAULT_BOUNDS) -> int:
    k, n = basis.shape
    if k == 0:
        raise ValueError("zero code has no minimum distance")
    if F.q**k > bounds.max_codewords:
        raise TooLarge(f"q^k = {F.q}^{k} codewords exceed {bounds.max_codewords}")
    words = _all_codewords(basis, F)
    weights = np.count_nonzero(words, axis=1)
    return int(weights[weights > 0].min())


def code_params(
    spec: PartitionSpec, q: int, d: int, want_min_distance: bool = False, bounds: WorkBounds = DEFAULT_BOUNDS
) -> CodeParams:
    F = build_field(q)
    g = build_graph(spec)
    X = enumerate_X(g, F, bounds.max_assignments)
    basis, k = row_echelon(evaluation_rows(X, d, bounds), F)
    dist = min_distance(basis, F, bounds) if want_min_distance else None
    return CodeParams(length=len(X), dimension=k, degree=d, min_distance=dist)


# -- grid -----------------------------------------------------------------------

ACCEPTANCE_GRID: tuple[tuple[tuple[int, ...], int], ...] = tuple(
    (parts, q)
    for parts in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 2), (2, 3), (1, 1, 1, 1), (2, 2, 1), (1, 2, 2)]
    for q in (3, 4, 5)
)

CSV_COLUMNS = ("instance", "s", "|X|", "reg_formula", "reg_oracle", "reg_groebner", "grs_bound", "ok")


def csv_row(rep: VerificationReport) -> dict:
    parts = ",".join(map(str, rep.instance["parts"]))
    return {
        "instance": f"K[{parts}] q={rep.instance['q']}",
        "s": rep.s,
        "|X|": rep.cardinality,
        "reg_formula": rep.regularity_formula,
        "reg_oracle": rep.regularity_oracle,
        "reg_groebner": rep.regularity_groebner,
        "grs_bound": rep.grs_bound,
        "ok": rep.status,
    }


def run_instance(parts: Sequence[int], q: int, with_saturation: bool = False) -> VerificationReport:
    return verify_generation(PartitionSpec(tuple(parts)), q, with_saturation=with_saturation)
