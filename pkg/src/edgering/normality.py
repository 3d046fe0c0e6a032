"""Normality decisions, exceptional pairs and normalization generators.

A pair of vertex-disjoint odd cycles in one component is *exceptional* when
no alternating walk joins them.  The edge ring is normal exactly when no
exceptional pair exists, and the monomials ``M_Pi`` of the exceptional pairs
generate its normalization.  Mixed graphs are decided on their augmented
signed graph.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction

from .altpath import (
    AltWalk,
    collapse_cycle,
    cycles_alternating_connected,
    extend_to_signatures,
    is_alternating_walk,
    lift_cycle,
)
from .augment import AugmentedGraph, augment, project_exponents, pull_back_weights
from .cycles import DEFAULT_CYCLE_CAP, CycleDesc, CyclePair, disjoint_odd_pairs
from .errors import DomainError, PreconditionError
from .model import EdgeRef, MixedGraph, Vector, l1, weighted_sum

__all__ = [
    "ExceptionalPair",
    "NormalityReport",
    "Witness",
    "m_pi",
    "odd_cycle_condition",
    "generalized_odd_cycle_condition",
    "decide",
    "cycle_product_weights",
    "express_pair_product",
    "pair_product_weights",
    "non_normality_witness",
    "normalization_generators",
]


@dataclass(frozen=True)
class ExceptionalPair:
    pair: CyclePair
    m_pi: Vector
    # the same pair as cycles of the augmented graph; equal to ``pair`` for signed graphs
    augmented_pair: CyclePair

    @property
    def half_rho_pi(self) -> Vector:
        return self.m_pi


@dataclass(frozen=True)
class NormalityReport:
    normal: bool
    exceptional_pairs: tuple[ExceptionalPair, ...]
    generators: tuple[Vector, ...]
    checked_pairs: int
    graph_kind: str


@dataclass(frozen=True)
class Witness:
    """``M_Pi`` with three exact certificates of ``M_Pi in T1`` and ``2 M_Pi in T2``."""

    monomial: Vector
    pair: ExceptionalPair
    half_weights: dict[EdgeRef, Fraction]
    lattice_weights: dict[EdgeRef, int]
    doubled_weights: dict[EdgeRef, int]


def m_pi(n: int, c1: CycleDesc, c2: CycleDesc) -> Vector:
    out = [0] * n
    for c in (c1, c2):
        for v, s in c.signatures.items():
            out[v] += s
    return tuple(out)


def _report(pairs: list[ExceptionalPair], checked: int, kind: str) -> NormalityReport:
    pairs.sort(key=lambda p: (min(p.pair.c1.vertices), min(p.pair.c2.vertices)))
    gens: list[Vector] = []
    for p in pairs:
        if p.m_pi not in gens:
            gens.append(p.m_pi)
    return NormalityReport(not pairs, tuple(pairs), tuple(gens), checked, kind)


def odd_cycle_condition(g: MixedGraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> NormalityReport:
    if g.has_directed:
        raise DomainError("odd_cycle_condition needs a signed graph; use generalized_odd_cycle_condition")
    pairs = disjoint_odd_pairs(g, cycle_cap)
    found = [
        ExceptionalPair(p, m_pi(g.n, p.c1, p.c2), p)
        for p in pairs
        if cycles_alternating_connected(g, p.c1, p.c2) is None
    ]
    return _report(found, len(pairs), "signed")


def generalized_odd_cycle_condition(
    g: MixedGraph, cycle_cap: int = DEFAULT_CYCLE_CAP
) -> NormalityReport:
    a = augment(g)
    tilde = a.signed_graph
    pairs = disjoint_odd_pairs(tilde, cycle_cap)
    found = []
    seen = set()
    for p in pairs:
        if cycles_alternating_connected(tilde, p.c1, p.c2) is not None:
            continue
        c1, c2 = collapse_cycle(a, p.c1), collapse_cycle(a, p.c2)
        key = frozenset((c1.edges, c2.edges))
        if key in seen:
            continue
        seen.add(key)
        vec = project_exponents(a, m_pi(tilde.n, p.c1, p.c2))
        found.append(ExceptionalPair(CyclePair(c1, c2, True, True), vec, p))
    return _report(found, len(pairs), "mixed" if g.has_directed else "signed")


def decide(g: MixedGraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> NormalityReport:
    if g.has_directed:
        return generalized_odd_cycle_condition(g, cycle_cap)
    return odd_cycle_condition(g, cycle_cap)


def normalization_generators(g: MixedGraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Vector]:
    return list(decide(g, cycle_cap).generators)


# ------------------------------------------------------------ constructions


def cycle_product_weights(g: MixedGraph, c: CycleDesc, skip: int) -> dict[EdgeRef, int]:
    """0/1 weights on the cycle whose product is ``prod x_l^sig(l)`` over ``l != skip``.

    ``skip`` must have nonzero signature.  The nonzero-signature vertices of
    the path left after removing ``skip`` are paired off in order; each
    stretch between partners alternates and gets weight one.
    """
    sig = c.signatures
    if not sig.get(skip):
        raise PreconditionError("the removed vertex must have nonzero signature")
    size = len(c.vertices)
    k = c.vertices.index(skip)
    path = [c.vertices[(k + m) % size] for m in range(1, size)]
    marks = [m for m, u in enumerate(path) if sig[u]]
    if len(marks) % 2:
        raise PreconditionError("cycle is not odd")
    weights: Counter = Counter()
    for p, q in zip(marks[0::2], marks[1::2]):
        for m in range(p, q):
            weights[c.edges[(k + 1 + m) % size]] += 1
    return dict(weights)


def _check_walk_between(g: MixedGraph, w: AltWalk, c1: CycleDesc, c2: CycleDesc) -> None:
    if not is_alternating_walk(g, w):
        raise PreconditionError("walk is not alternating")
    if w.vertices[0] not in c1.vertex_set or w.vertices[-1] not in c2.vertex_set:
        raise PreconditionError("walk does not join the two cycles")


def express_pair_product(
    g: MixedGraph, c1: CycleDesc, c2: CycleDesc, w: AltWalk
) -> dict[EdgeRef, int]:
    """Nonnegative integer weights whose exponent sum is ``M_Pi`` of ``{c1, c2}``."""
    if c1 == c2:
        raise PreconditionError("the two cycles must differ")
    if g.has_directed:
        raise DomainError("express_pair_product needs a signed graph")
    if c1.signatures is None or c2.signatures is None:
        raise DomainError("cycles must be signed cycles")
    _check_walk_between(g, w, c1, c2)
    full = extend_to_signatures(g, w, c1, c2)
    weights: Counter = Counter(full.edges)
    weights.update(cycle_product_weights(g, c1, full.vertices[0]))
    weights.update(cycle_product_weights(g, c2, full.vertices[-1]))
    return dict(weights)


def pair_product_weights(
    g: MixedGraph, c1: CycleDesc, c2: CycleDesc, a: AugmentedGraph | None = None
) -> dict[EdgeRef, int] | None:
    """Like :func:`express_pair_product` for cycles of a mixed graph; ``None`` if the pair is exceptional."""
    if a is None:
        a = augment(g)
    t1, t2 = lift_cycle(a, c1), lift_cycle(a, c2)
    walk = cycles_alternating_connected(a.signed_graph, t1, t2)
    if walk is None:
        return None
    return pull_back_weights(a, express_pair_product(a.signed_graph, t1, t2, walk))


def _shortest_path(g: MixedGraph, src: int, dst: int) -> list[EdgeRef]:
    prev: dict[int, tuple[int, EdgeRef] | None] = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for ref, w in g.incident(v):
            if w not in prev:
                prev[w] = (v, ref)
                queue.append(w)
    if dst not in prev:
        raise PreconditionError("vertices lie in different components")
    path = []
    v = dst
    while prev[v] is not None:
        v, ref = prev[v]
        path.append(ref)
    return path[::-1]


def _lattice_weights(g: MixedGraph, c1: CycleDesc, c2: CycleDesc) -> dict[EdgeRef, int]:
    """Integer weights realizing ``M_Pi``: a parity-adjusted connecting walk with
    signs chosen so that the weighted edges alternate, plus the cycle products."""
    sig1, sig2 = c1.signatures, c2.signatures
    i = next(v for v in c1.vertices if sig1[v])
    j = next(v for v in c2.vertices if sig2[v])
    walk = _shortest_path(g, i, j)
    want_odd = sig1[i] == sig2[j]
    if (len(walk) % 2 == 1) != want_odd:
        k = c1.vertices.index(i)
        walk = list(c1.edges[k:] + c1.edges[:k]) + walk
    weights: Counter = Counter()
    for pos, ref in enumerate(walk):
        weights[ref] += (-1) ** pos * sig1[i] * g.sign(ref)
    weights.update(cycle_product_weights(g, c1, i))
    weights.update(cycle_product_weights(g, c2, j))
    return {r: x for r, x in weights.items() if x}


def non_normality_witness(g: MixedGraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> Witness | None:
    report = decide(g, cycle_cap)
    if report.normal:
        return None
    return witness_for_pair(g, report.exceptional_pairs[0])


def witness_for_pair(g: MixedGraph, pair: ExceptionalPair) -> Witness:
    a = augment(g)
    c1, c2 = pair.pair.c1, pair.pair.c2
    half: dict[EdgeRef, Fraction] = {}
    doubled: dict[EdgeRef, int] = {}
    for e in c1.edges + c2.edges:
        half[e] = Fraction(1, 2)
        doubled[e] = 1
    t1, t2 = pair.augmented_pair.c1, pair.augmented_pair.c2
    lattice = pull_back_weights(a, _lattice_weights(a.signed_graph, t1, t2))
    lattice = {r: x for r, x in lattice.items() if x}
    target = pair.m_pi
    assert weighted_sum(g, half) == target
    assert weighted_sum(g, lattice) == target
    assert weighted_sum(g, doubled) == tuple(2 * x for x in target)
    return Witness(target, pair, half, lattice, doubled)


def generator_norm(report: NormalityReport) -> int:
    return max((l1(v) for v in report.generators), default=0)
