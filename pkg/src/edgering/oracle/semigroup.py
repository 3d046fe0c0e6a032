"""Membership in T1 and (cap-bounded) T2, and the windowed normality check.

T1 is the saturation ``cone ∩ lattice`` of the edge vectors and T2 the
semigroup they generate.  T1 membership is decided exactly.  T2 membership
is a search over nonnegative combinations with at most ``coeff_cap`` terms,
so a negative T2 answer always means "no representation within the cap".
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from ..kernels import CombinationSearch
from ..model import EdgeRef, MixedGraph, Vector, edge_vectors, l1, weighted_sum
from .cone import cone_member
from .lattice import lattice_member

DEFAULT_DEGREE_BOUND = 4


def default_coeff_cap(g: MixedGraph, alpha: Vector) -> int:
    return 2 * (l1(alpha) + 2 * g.num_edges)


@lru_cache(maxsize=64)
def _searcher(vectors: tuple[Vector, ...]) -> CombinationSearch:
    return CombinationSearch(vectors)


def combination_search(vectors: Sequence[Vector], target: Vector, cap: int) -> list[int] | None:
    """Nonnegative integer ``z`` with ``sum z_k vectors[k] == target``, ``sum z <= cap``."""
    target = tuple(target)
    if not any(target):
        return [0] * len(vectors)
    if not vectors:
        return None
    return _searcher(tuple(tuple(v) for v in vectors)).search(target, cap)


@dataclass(frozen=True)
class T2Result:
    found: bool
    weights: dict[EdgeRef, int] | None
    coeff_cap: int

    @property
    def verdict(self) -> str:
        return "member" if self.found else f"no representation within cap {self.coeff_cap}"


def t2_member_bounded(g: MixedGraph, alpha: Vector, coeff_cap: int | None = None) -> T2Result:
    alpha = tuple(alpha)
    if len(alpha) != g.n:
        raise ValueError(f"expected a vector of length {g.n}")
    cap = default_coeff_cap(g, alpha) if coeff_cap is None else coeff_cap
    if cap <= 0:
        raise ValueError("coeff_cap must be positive")
    z = combination_search(edge_vectors(g), alpha, cap)
    if z is None:
        return T2Result(False, None, cap)
    weights = dict(zip(g.edge_refs(), z))
    assert weighted_sum(g, weights) == alpha
    return T2Result(True, weights, cap)


@dataclass(frozen=True)
class T1Result:
    member: bool
    lattice: dict[EdgeRef, int] | None
    cone: dict[EdgeRef, Fraction] | None

    def __bool__(self):
        return self.member


def t1_member(g: MixedGraph, alpha: Vector) -> T1Result:
    alpha = tuple(alpha)
    lat = lattice_member(g, alpha)
    if lat is None:
        return T1Result(False, None, None)
    assert weighted_sum(g, lat) == alpha
    cone = cone_member(g, alpha)
    if cone is not None:
        assert weighted_sum(g, cone) == alpha and all(c >= 0 for c in cone.values())
    return T1Result(cone is not None, lat, cone)


def window(g: MixedGraph, degree_bound: int) -> Iterator[Vector]:
    """Nonzero vectors with 1-norm at most ``degree_bound``, ordered by norm, then lexicographically.

    Coordinates of isolated vertices stay zero: no edge vector touches them,
    so such vectors are never in the lattice.
    """
    live = sorted({i for v in edge_vectors(g) for i, x in enumerate(v) if x})
    vecs = []
    for k in range(1, min(degree_bound, len(live)) + 1):
        for support in itertools.combinations(live, k):
            for mags in itertools.product(range(1, degree_bound + 1), repeat=k):
                if sum(mags) > degree_bound:
                    continue
                for signs in itertools.product((1, -1), repeat=k):
                    v = [0] * g.n
                    for i, m, s in zip(support, mags, signs):
                        v[i] = m * s
                    vecs.append(tuple(v))
    vecs.sort(key=lambda v: (l1(v), v))
    return iter(vecs)


def _in_t2(vectors, alpha, cap) -> list[int] | None:
    # a short search settles almost every member; the full cap only runs on the rest
    quick = min(cap, l1(alpha))
    z = combination_search(vectors, alpha, quick)
    if z is None and quick < cap:
        z = combination_search(vectors, alpha, cap)
    return z


def window_t1(g: MixedGraph, degree_bound: int) -> Iterator[Vector]:
    """Window vectors that lie in T1 (exact)."""
    for alpha in window(g, degree_bound):
        if lattice_member(g, alpha) is None:
            continue
        if cone_member(g, alpha) is None:
            continue
        yield alpha


@dataclass
class OracleVerdict:
    normal: bool
    degree_bound: int
    coeff_cap: int
    witness: Vector | None = None
    witness_t1: T1Result | None = None
    multiple: int | None = None
    multiple_weights: dict[EdgeRef, int] | None = None
    checked: int = 0

    @property
    def label(self) -> str:
        return "normal-up-to-bounds" if self.normal else "not-normal"


def oracle_normality(g: MixedGraph, degree_bound: int = DEFAULT_DEGREE_BOUND, coeff_cap: int | None = None) -> OracleVerdict:
    """Check ``T1 ⊆ T2`` on every vector of 1-norm at most ``degree_bound``.

    The first vector (smallest norm, then lexicographically) of T1 with no T2
    representation within the cap is the witness.  For a witness the smallest
    ``k <= cap`` with ``k * witness`` representable within the cap is recorded.
    """
    if degree_bound <= 0:
        raise ValueError("degree_bound must be positive")
    vectors = edge_vectors(g)
    checked = 0
    for alpha in window(g, degree_bound):
        if lattice_member(g, alpha) is None:
            continue
        cap = default_coeff_cap(g, alpha) if coeff_cap is None else coeff_cap
        if _in_t2(vectors, alpha, cap) is not None:
            checked += 1
            continue
        t1 = t1_member(g, alpha)
        if not t1:
            continue
        checked += 1
        verdict = OracleVerdict(False, degree_bound, cap, alpha, t1, checked=checked)
        for k in range(2, cap + 1):
            z = _in_t2(vectors, tuple(k * x for x in alpha), cap)
            if z is not None:
                verdict.multiple = k
                verdict.multiple_weights = dict(zip(g.edge_refs(), z))
                break
        return verdict
    cap = default_coeff_cap(g, (0,) * g.n) if coeff_cap is None else coeff_cap
    return OracleVerdict(True, degree_bound, cap, checked=checked)


@dataclass
class GenerationVerdict:
    degree_bound: int
    coeff_cap: int
    checked: int = 0
    inexpressible: list[Vector] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.inexpressible


def verify_generation(
    g: MixedGraph,
    gens: Sequence[Vector],
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    coeff_cap: int | None = None,
) -> GenerationVerdict:
    """Check every T1 window vector is a nonnegative combination of edges and ``gens``."""
    vectors = list(edge_vectors(g)) + [tuple(v) for v in gens]
    out = GenerationVerdict(degree_bound, 0)
    for alpha in window(g, degree_bound):
        if lattice_member(g, alpha) is None:
            continue
        cap = default_coeff_cap(g, alpha) if coeff_cap is None else coeff_cap
        out.coeff_cap = max(out.coeff_cap, cap)
        # the generators lie in T1, so anything they express with the edges does too
        if _in_t2(vectors, alpha, cap) is not None:
            out.checked += 1
        elif cone_member(g, alpha) is not None:
            out.checked += 1
            out.inexpressible.append(alpha)
    return out
