"""Alternating closed walks: decomposing identity weightings and reducing weights.

An integer weighting ``a`` of the edges with ``sum a_e rho(e) == 0`` splits
into closed walks whose occurrence weights ``w = ±1`` make ``w * sgn``
alternate.  Conversely a *reducing* closed walk (even length, repeated edges
an odd number of steps apart) carries such a weighting, and shifting positive
weights along it removes an edge without changing the weighted sum.
Directed edges are handled through the augmented graph.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..augment import AugmentedGraph, augment, pull_back_weights, push_forward_weights
from ..cycles import CycleDesc, enumerate_cycles
from ..errors import ConditionViolatedError, DomainError, PreconditionError
from ..model import SIGNED, EdgeRef, MixedGraph, components, weighted_sum


@dataclass(frozen=True)
class ClosedWalk:
    """``edges[k]`` runs from ``vertices[k]`` to ``vertices[k+1]`` (cyclically)."""

    vertices: tuple[int, ...]
    edges: tuple[EdgeRef, ...]
    weights: tuple[int, ...]

    def __len__(self):
        return len(self.edges)


@dataclass
class WalkDecomposition:
    graph: MixedGraph  # signed graph the walks live in (the augmented graph for mixed input)
    walks: list[ClosedWalk]
    augmented: AugmentedGraph | None = None

    def edge_sums(self) -> dict[EdgeRef, int]:
        out: dict[EdgeRef, int] = {}
        for w in self.walks:
            for e, x in zip(w.edges, w.weights):
                out[e] = out.get(e, 0) + x
        return out


def _signed_view(g: MixedGraph, a: Mapping[EdgeRef, object]):
    if not g.has_directed:
        return g, dict(a), None
    aug = augment(g)
    return aug.signed_graph, push_forward_weights(aug, a), aug


def vertex_sums(g: MixedGraph, a: Mapping[EdgeRef, int]) -> list[int]:
    """``sum sgn(e) a_e`` at each vertex, loops counted at both ends."""
    out = [0] * g.n
    for ref, x in a.items():
        s = g.sign(ref)
        if s is None:
            raise DomainError("vertex sums are taken over signed edges")
        u, v = g.endpoints(ref)
        out[u] += s * x
        out[v] += s * x
    return out


def is_alternating_closed_walk(g: MixedGraph, w: ClosedWalk) -> bool:
    L = len(w.edges)
    if L == 0 or len(w.vertices) != L or len(w.weights) != L:
        return False
    for k, e in enumerate(w.edges):
        if {w.vertices[k], w.vertices[(k + 1) % L]} != set(g.endpoints(e)):
            return False
        if w.weights[k] not in (1, -1):
            return False
        nxt = (k + 1) % L
        if w.weights[k] * g.sign(e) + w.weights[nxt] * g.sign(w.edges[nxt]) != 0:
            return False
    return True


def verify_identity_weights(g: MixedGraph, a: Mapping[EdgeRef, int]) -> WalkDecomposition:
    """Split a zero-sum integer weighting into alternating closed walks.

    Every edge ``e`` contributes ``|a_e|`` occurrences of weight
    ``sign(a_e)``; at each vertex the ``+1`` ends are matched with the
    ``-1`` ends (end value ``w * sgn``) in a fixed order and the matching is
    followed around.
    """
    h, weights, aug = _signed_view(g, a)
    for ref, x in weights.items():
        if x != int(x):
            raise DomainError(f"weight of {h.label(ref)} is not an integer")
    weights = {r: int(x) for r, x in weights.items() if x}
    for v, total in enumerate(vertex_sums(h, weights)):
        if total:
            raise ConditionViolatedError(v, total)

    # occurrence k has ends (k, 0) at its first vertex and (k, 1) at its second
    occ: list[tuple[EdgeRef, int, int, int]] = []  # edge, weight, first vertex, second vertex
    order = {r: i for i, r in enumerate(h.edge_refs())}
    for ref in sorted(weights, key=order.__getitem__):
        x = weights[ref]
        u, v = h.endpoints(ref)
        for _ in range(abs(x)):
            occ.append((ref, 1 if x > 0 else -1, u, v))
    plus: dict[int, list[tuple[int, int]]] = {}
    minus: dict[int, list[tuple[int, int]]] = {}
    for k, (ref, w, u, v) in enumerate(occ):
        value = w * h.sign(ref)
        for end, vert in ((0, u), (1, v)):
            (plus if value > 0 else minus).setdefault(vert, []).append((k, end))
    mate: dict[tuple[int, int], tuple[int, int]] = {}
    for vert, ends in plus.items():
        other = minus.get(vert, [])
        assert len(other) == len(ends)
        for p, m in zip(ends, other):
            mate[p] = m
            mate[m] = p

    used = [False] * len(occ)
    walks: list[ClosedWalk] = []
    for start in range(len(occ)):
        if used[start]:
            continue
        verts, edges, ws = [], [], []
        k, enter = start, 0
        while True:
            used[k] = True
            ref, w, u, v = occ[k]
            verts.append(u if enter == 0 else v)
            edges.append(ref)
            ws.append(w)
            k, enter = mate[(k, 1 - enter)]
            if k == start and enter == 0:
                break
            assert not used[k]
        walk = ClosedWalk(tuple(verts), tuple(edges), tuple(ws))
        assert is_alternating_closed_walk(h, walk)
        walks.append(walk)
    out = WalkDecomposition(h, walks, aug)
    assert out.edge_sums() == weights
    assert not any(weighted_sum(h, weights))
    return out


# ------------------------------------------------------------ reduction


def is_reducing_closed_walk(g: MixedGraph, vertices: Sequence[int], edges: Sequence[EdgeRef]) -> bool:
    """Even closed walk in which repeated edges sit an odd number of edges apart."""
    L = len(edges)
    if L == 0 or L % 2 or len(vertices) != L:
        return False
    for k, e in enumerate(edges):
        if g.sign(e) is None:
            return False
        if {vertices[k], vertices[(k + 1) % L]} != set(g.endpoints(e)):
            return False
    seen: dict[EdgeRef, int] = {}
    for k, e in enumerate(edges):
        if e in seen and (k - seen[e] - 1) % 2 == 0:
            return False
        seen[e] = k
    return True


def closed_walk_weights(g: MixedGraph, edges: Sequence[EdgeRef]) -> dict[EdgeRef, int]:
    """Summed occurrence weights ``(-1)^k sgn(e_k)`` of a reducing closed walk."""
    c: dict[EdgeRef, int] = {}
    for k, e in enumerate(edges):
        c[e] = c.get(e, 0) + (-1) ** k * g.sign(e)
    return c


def _rotate_to(c: CycleDesc, v: int) -> tuple[list[int], list[EdgeRef]]:
    k = c.vertices.index(v)
    return list(c.vertices[k:] + c.vertices[:k]), list(c.edges[k:] + c.edges[:k])


def _path_between(g: MixedGraph, src: frozenset[int], dst: frozenset[int]):
    """Shortest path from ``src`` to ``dst``; its interior avoids both sets."""
    parent: dict[int, tuple[int, EdgeRef] | None] = {v: None for v in sorted(src)}
    q = deque(sorted(src))
    while q:
        u = q.popleft()
        if u in dst:
            verts, edges = [u], []
            while parent[verts[-1]] is not None:
                p, e = parent[verts[-1]]
                verts.append(p)
                edges.append(e)
            return verts[::-1], edges[::-1]
        for e, w in g.incident(u):
            if w not in parent:
                parent[w] = (u, e)
                q.append(w)
    return None


def find_reducing_closed_walk(g: MixedGraph, support: Sequence[EdgeRef] | None = None, cap: int = 200_000):
    """A reducing closed walk in the subgraph on ``support``, or ``None``.

    Tried in order: an even cycle, two odd cycles through a common vertex,
    two disjoint odd cycles of one component joined by a path.
    """
    refs = list(g.edge_refs()) if support is None else sorted(support, key=lambda r: (r.kind != SIGNED, r.id))
    sub = MixedGraph(g.n, [g.edge(r) for r in refs], ())
    back = {EdgeRef(SIGNED, k): r for k, r in enumerate(refs)}
    cycles = enumerate_cycles(sub, cap, cap_flag="cap")

    def lift(verts, edges):
        edges = [back[e] for e in edges]
        assert is_reducing_closed_walk(g, verts, edges)
        return list(verts), edges

    for c in cycles:
        if not c.is_odd:
            return lift(c.vertices, c.edges)
    for i, c1 in enumerate(cycles):
        for c2 in cycles[i + 1:]:
            common = sorted(c1.vertex_set & c2.vertex_set)
            if common:
                v1, e1 = _rotate_to(c1, common[0])
                v2, e2 = _rotate_to(c2, common[0])
                return lift(v1 + v2, e1 + e2)
    comp = {v: k for k, part in enumerate(components(sub)) for v in part}
    for i, c1 in enumerate(cycles):
        for c2 in cycles[i + 1:]:
            if comp[c1.vertices[0]] != comp[c2.vertices[0]]:
                continue
            pv, pe = _path_between(sub, c1.vertex_set, c2.vertex_set)
            v1, e1 = _rotate_to(c1, pv[0])
            v2, e2 = _rotate_to(c2, pv[-1])
            verts = v1 + pv[:-1] + v2 + pv[:0:-1]
            edges = e1 + pe + e2 + pe[::-1]
            return lift(verts, edges)
    return None


def is_forest_unicyclic_odd(g: MixedGraph, support: Sequence[EdgeRef]) -> bool:
    """Every component of the subgraph on ``support`` is a tree or has exactly one cycle, and that cycle is odd."""
    support = list(support)
    adj: dict[int, list[tuple[int, EdgeRef]]] = {}
    for r in support:
        u, v = g.endpoints(r)
        adj.setdefault(u, []).append((v, r))
        if u != v:
            adj.setdefault(v, []).append((u, r))
    color: dict[int, int] = {}
    for s in sorted(adj):
        if s in color:
            continue
        color[s] = 0
        stack, verts, edges, odd = [s], {s}, set(), False
        while stack:
            u = stack.pop()
            for w, r in adj[u]:
                edges.add(r)
                if w not in color:
                    color[w] = 1 - color[u]
                    verts.add(w)
                    stack.append(w)
                elif color[w] == color[u]:
                    odd = True
        if len(edges) > len(verts):
            return False
        if len(edges) == len(verts) and not odd:
            return False
    return True


@dataclass
class Reduction:
    graph: MixedGraph
    weights: dict[EdgeRef, Fraction]  # strictly positive, keyed by edges of ``graph``
    steps: int = 0
    walks: list[tuple[list[int], list[EdgeRef]]] = field(default_factory=list, repr=False)
    augmented: AugmentedGraph | None = None

    @property
    def support(self) -> list[EdgeRef]:
        return sorted(self.weights, key=lambda r: (r.kind != SIGNED, r.id))

    def subgraph(self) -> MixedGraph:
        refs = self.support
        return MixedGraph(
            self.graph.n,
            [self.graph.signed[r.id] for r in refs if r.kind == SIGNED],
            [self.graph.directed[r.id] for r in refs if r.kind != SIGNED],
        )


def reduce_to_forest_unicyclic(g: MixedGraph, a: Mapping[EdgeRef, object]) -> Reduction:
    """Shift positive weights along reducing closed walks until none remain.

    Each step drops at least one edge and keeps ``sum a_e rho(e)``; the
    result has only tree components and unicyclic components with an odd
    cycle.  Directed edges are reduced in the augmented graph and pulled back.
    """
    for ref, x in a.items():
        if not Fraction(x) > 0:
            raise PreconditionError(f"weight of {g.label(ref)} is {x}; weights must be positive")
    h, weights, aug = _signed_view(g, {r: Fraction(x) for r, x in a.items()})
    target = weighted_sum(h, weights)
    order = {r: i for i, r in enumerate(h.edge_refs())}
    steps = 0
    walks = []
    while True:
        found = find_reducing_closed_walk(h, list(weights))
        if found is None:
            break
        verts, edges = found
        c = closed_walk_weights(h, edges)
        if not any(x < 0 for x in c.values()):
            c = {e: -x for e, x in c.items()}
        t = min(
            (weights[e] / -x, order[e]) for e, x in c.items() if x < 0
        )[0]
        for e, x in c.items():
            weights[e] += t * x
        weights = {e: x for e, x in weights.items() if x}
        assert all(x > 0 for x in weights.values())
        assert weighted_sum(h, weights) == target
        steps += 1
        walks.append((verts, edges))
    assert is_forest_unicyclic_odd(h, list(weights))
    if aug is None:
        return Reduction(g, weights, steps, walks)
    back = pull_back_weights(aug, weights)
    back = {r: x for r, x in back.items() if x}
    assert weighted_sum(g, back) == weighted_sum(g, a)
    return Reduction(g, back, steps, walks, aug)


def reduced_support_graph(red: Reduction) -> tuple[MixedGraph, list[EdgeRef], dict[EdgeRef, Fraction]]:
    """Signed graph, support and weights the reduction actually ran on."""
    if red.augmented is None:
        return red.graph, red.support, dict(red.weights)
    h = red.augmented.signed_graph
    w = push_forward_weights(red.augmented, red.weights)
    return h, sorted(w, key=lambda r: r.id), w


def fractional_parts_are_half_odd_cycles(g: MixedGraph, weights: Mapping[EdgeRef, Fraction]) -> bool:
    """Fractional parts of ``weights`` vanish or form disjoint odd cycles of weight exactly 1/2."""
    frac = {r: Fraction(x) - (Fraction(x).numerator // Fraction(x).denominator) for r, x in weights.items()}
    frac = {r: x for r, x in frac.items() if x}
    if not frac:
        return True
    if any(x != Fraction(1, 2) for x in frac.values()):
        return False
    degree: dict[int, int] = {}
    for r in frac:
        u, v = g.endpoints(r)
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if any(d != 2 for d in degree.values()):
        return False
    # every vertex has degree two, so each component is one cycle; it must be odd
    return is_forest_unicyclic_odd(g, list(frac))
