"""Sign-alternating walks between cycles.

Reachability runs on the state graph whose states are ``(vertex, sign of
the last edge used)``; from a state only edges of the opposite sign may be
taken, so every state path is an alternating walk and breadth-first search
returns a shortest one.  Mixed graphs are handled through their augmented
signed graph.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .augment import AugmentedGraph, augment
from .cycles import CycleDesc, make_cycle
from .errors import DomainError, PreconditionError
from .model import DIRECTED, SIGNED, EdgeRef, MixedGraph, component_index

__all__ = [
    "AltWalk",
    "alternating_reachable",
    "cycles_alternating_connected",
    "extend_to_signatures",
    "generalized_alternating_connected",
    "lift_cycle",
    "collapse_cycle",
    "collapse_walk",
    "is_alternating_walk",
    "is_generalized_alternating",
]


@dataclass(frozen=True)
class AltWalk:
    vertices: tuple[int, ...]
    edges: tuple[EdgeRef, ...]
    first_sign: int
    last_sign: int

    def reversed(self) -> "AltWalk":
        return AltWalk(
            tuple(reversed(self.vertices)),
            tuple(reversed(self.edges)),
            self.last_sign,
            self.first_sign,
        )

    def describe(self, g: MixedGraph) -> str:
        return ", ".join(g.label(e) for e in self.edges)


def _require_signed(g: MixedGraph) -> None:
    if g.has_directed:
        raise DomainError("expected a signed graph; augment mixed graphs first")


def alternating_reachable(
    g: MixedGraph,
    sources: Iterable[tuple[int, int]],
    targets: Iterable[tuple[int, int]],
) -> AltWalk | None:
    """Shortest alternating walk leaving a source with the required first sign
    and entering a target with the required last sign.  Walks have at least
    one edge."""
    _require_signed(g)
    targets = set(targets)
    parent: dict[tuple[int, int], tuple[tuple[int, int], EdgeRef] | None] = {}
    queue: deque[tuple[int, int]] = deque()
    # a seed (v, -s) means "standing at v, next edge must have sign s"
    for v, s in sorted(set(sources)):
        seed = (v, -s)
        if seed not in parent:
            parent[seed] = None
            queue.append(seed)
    while queue:
        state = queue.popleft()
        v, last = state
        for ref, w in g.incident(v):
            sgn = g.signed[ref.id].sign
            if sgn != -last:
                continue
            nxt = (w, sgn)
            if nxt in targets:
                return _rebuild(g, parent, state, ref, nxt)
            if nxt not in parent:
                parent[nxt] = (state, ref)
                queue.append(nxt)
    return None


def _rebuild(g, parent, state, ref, end) -> AltWalk:
    edges = [ref]
    vertices = [end[0], state[0]]
    while parent[state] is not None:
        state, e = parent[state]
        edges.append(e)
        vertices.append(state[0])
    edges.reverse()
    vertices.reverse()
    return AltWalk(tuple(vertices), tuple(edges), g.signed[edges[0].id].sign, end[1])


def _attachments(c: CycleDesc) -> set[tuple[int, int]]:
    out = set()
    for v in c.vertices:
        s = c.signatures[v]
        if s:
            out.add((v, s))
        else:
            out.update({(v, 1), (v, -1)})
    return out


def _check_pair(g: MixedGraph, c1: CycleDesc, c2: CycleDesc) -> None:
    if c1.signatures is None or c2.signatures is None:
        raise DomainError("cycles must be cycles of a signed graph")
    if not c1.vertex_set.isdisjoint(c2.vertices):
        raise PreconditionError("cycles share a vertex")
    comp = component_index(g)
    if comp[c1.vertices[0]] != comp[c2.vertices[0]]:
        raise PreconditionError("cycles lie in different components")


def cycles_alternating_connected(g: MixedGraph, c1: CycleDesc, c2: CycleDesc) -> AltWalk | None:
    """Alternating walk from a vertex of ``c1`` to a vertex of ``c2``.

    Nonzero-signature vertices must be left (entered) with their signature
    as first (last) sign.  Zero-signature vertices accept either sign: such a
    walk can always be prolonged around the cycle to a nonzero-signature
    vertex, see :func:`extend_to_signatures`.
    """
    _require_signed(g)
    _check_pair(g, c1, c2)
    return alternating_reachable(g, _attachments(c1), _attachments(c2))


def _extend_start(g: MixedGraph, walk: AltWalk, c: CycleDesc) -> AltWalk:
    sig = c.signatures
    v, s = walk.vertices[0], walk.first_sign
    if sig[v] == s:
        return walk
    verts = list(walk.vertices)
    edges = list(walk.edges)
    size = len(c.vertices)
    cur = c.vertices.index(v)
    step = 1 if g.sign(c.edges[cur]) == -s else -1
    while True:
        e = c.edges[cur] if step == 1 else c.edges[cur - 1]
        cur = (cur + step) % size
        u = c.vertices[cur]
        verts.insert(0, u)
        edges.insert(0, e)
        if sig[u]:
            break
    return AltWalk(tuple(verts), tuple(edges), g.sign(edges[0]), walk.last_sign)


def extend_to_signatures(g: MixedGraph, walk: AltWalk, c1: CycleDesc, c2: CycleDesc) -> AltWalk:
    """Prolong ``walk`` along the cycles until both ends sit on nonzero-signature
    vertices and the end signs equal those signatures."""
    walk = _extend_start(g, walk, c1)
    return _extend_start(g, walk.reversed(), c2).reversed()


# ------------------------------------------------------------- mixed graphs


def lift_cycle(a: AugmentedGraph, c: CycleDesc) -> CycleDesc:
    """The augmented-graph cycle obtained by routing directed edges through their artificial vertex."""
    g = a.base
    verts: list[int] = []
    edges: list[EdgeRef] = []
    for k, e in enumerate(c.edges):
        u = c.vertices[k]
        verts.append(u)
        if e.kind == SIGNED:
            edges.append(e)
            continue
        lo, hi = a.edge_map[e]
        d = g.directed[e.id]
        edges.extend((lo, hi) if u == d.tail else (hi, lo))
        verts.append(a.artificial[d])
    return make_cycle(a.signed_graph, verts, edges)


def _collapse(a: AugmentedGraph, vertices, edges) -> tuple[list[int], list[EdgeRef]]:
    out_v: list[int] = []
    out_e: list[EdgeRef] = []
    k = 0
    while k < len(edges):
        base_ref, half = a.origin[edges[k]]
        if half is None:
            out_e.append(base_ref)
            k += 1
            continue
        if k + 1 >= len(edges) or a.origin[edges[k + 1]][0] != base_ref:
            raise DomainError("walk stops at an artificial vertex")
        out_e.append(base_ref)
        k += 2
    out_v = [v for v in vertices if not a.is_artificial(v)]
    return out_v, out_e


def collapse_walk(a: AugmentedGraph, walk: AltWalk) -> AltWalk:
    verts, edges = _collapse(a, walk.vertices, walk.edges)
    return AltWalk(tuple(verts), tuple(edges), walk.first_sign, walk.last_sign)


def collapse_cycle(a: AugmentedGraph, c: CycleDesc) -> CycleDesc:
    """Inverse of :func:`lift_cycle`."""
    start = next(k for k, v in enumerate(c.vertices) if not a.is_artificial(v))
    vertices = c.vertices[start:] + c.vertices[:start]
    edges = c.edges[start:] + c.edges[:start]
    verts, es = _collapse(a, vertices, edges)
    return make_cycle(a.base, verts, es)


def generalized_alternating_connected(
    g: MixedGraph,
    c1: CycleDesc,
    c2: CycleDesc,
    a: AugmentedGraph | None = None,
) -> AltWalk | None:
    """Generalized alternating connection between two odd cycles of a mixed graph.

    The search runs on the augmented graph; the witness is prolonged to
    nonzero-signature endpoints (never artificial) and mapped back to ``g``.
    """
    if a is None:
        a = augment(g)
    if not (c1.is_odd and c2.is_odd):
        raise PreconditionError("both cycles must have an odd number of signed edges")
    t1, t2 = lift_cycle(a, c1), lift_cycle(a, c2)
    walk = cycles_alternating_connected(a.signed_graph, t1, t2)
    if walk is None:
        return None
    walk = extend_to_signatures(a.signed_graph, walk, t1, t2)
    return collapse_walk(a, walk)


# ----------------------------------------------------------------- checkers


def _walk_is_connected(g: MixedGraph, walk: AltWalk) -> bool:
    if len(walk.vertices) != len(walk.edges) + 1 or not walk.edges:
        return False
    for k, e in enumerate(walk.edges):
        a, b = g.endpoints(e)
        if {a, b} != {walk.vertices[k], walk.vertices[k + 1]}:
            return False
    return True


def is_alternating_walk(g: MixedGraph, walk: AltWalk) -> bool:
    if g.has_directed or not _walk_is_connected(g, walk):
        return False
    signs = [g.sign(e) for e in walk.edges]
    if signs[0] != walk.first_sign or signs[-1] != walk.last_sign:
        return False
    return all(x == -y for x, y in zip(signs, signs[1:]))


def is_generalized_alternating(g: MixedGraph, walk: AltWalk) -> bool:
    """Direct check of the five rules for generalized alternating paths."""
    if not _walk_is_connected(g, walk):
        return False
    edges = walk.edges
    signed_pos = [k for k, e in enumerate(edges) if e.kind == SIGNED]
    signs = [g.sign(edges[k]) for k in signed_pos]
    if any(x == y for x, y in zip(signs, signs[1:])):
        return False
    forward: dict[int, bool] = {}
    for k, e in enumerate(edges):
        if e.kind != DIRECTED:
            continue
        d = g.directed[e.id]
        forward[k] = d.tail == walk.vertices[k]
        before = 1 if forward[k] else -1
        if k > 0 and edges[k - 1].kind == SIGNED and g.sign(edges[k - 1]) != before:
            return False
        if k + 1 < len(edges) and edges[k + 1].kind == SIGNED and g.sign(edges[k + 1]) != -before:
            return False
    directed_pos = sorted(forward)
    for x in range(len(directed_pos)):
        for y in range(x + 1, len(directed_pos)):
            a, b = directed_pos[x], directed_pos[y]
            between = sum(1 for k in signed_pos if a < k < b)
            if forward[a] == forward[b]:
                if between % 2:
                    return False
            elif between % 2 == 0:
                return False
    return True
