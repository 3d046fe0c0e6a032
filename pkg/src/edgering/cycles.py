"""Simple cycles of mixed multigraphs, their parity, and vertex signatures.

Every edge is a distinct object: ``+ij`` and ``-ij`` between the same pair
form a 2-cycle, and a loop is a 1-cycle.  Directed edges may be traversed
in either direction when tracing the shape of a cycle.  A cycle is *odd*
when it contains an odd number of signed edges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import CapacityError, DomainError
from .model import DIRECTED, SIGNED, EdgeRef, MixedGraph, component_index

__all__ = [
    "DEFAULT_CYCLE_CAP",
    "CycleDesc",
    "CyclePair",
    "enumerate_cycles",
    "enumerate_odd_cycles",
    "signatures",
    "disjoint_odd_pairs",
    "make_cycle",
    "find_cycle",
]

DEFAULT_CYCLE_CAP = 100_000


@dataclass(frozen=True)
class CycleDesc:
    """A simple closed walk.

    ``edges[k]`` joins ``vertices[k]`` and ``vertices[k + 1]`` (indices taken
    cyclically).  ``signatures`` is ``None`` when the cycle uses a directed
    edge, since signatures are only defined on signed cycles.
    """

    vertices: tuple[int, ...]
    edges: tuple[EdgeRef, ...]
    signed_count: int
    signatures: Mapping[int, int] | None = field(compare=False, hash=False)

    @property
    def is_odd(self) -> bool:
        return self.signed_count % 2 == 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __len__(self):
        return len(self.edges)

    def sort_key(self, g: MixedGraph) -> tuple:
        pos = _edge_positions(g)
        return (tuple(sorted(self.vertices)), tuple(pos[e] for e in self.edges))

    def describe(self, g: MixedGraph) -> str:
        verts = " ".join(str(v + 1) for v in self.vertices)
        edges = ", ".join(g.label(e) for e in self.edges)
        return f"[{verts}] edges: {edges} signed={self.signed_count}"


@dataclass(frozen=True)
class CyclePair:
    c1: CycleDesc
    c2: CycleDesc
    same_component: bool
    vertex_disjoint: bool


def _edge_positions(g: MixedGraph) -> dict[EdgeRef, int]:
    return {r: k for k, r in enumerate(g.edge_refs())}


def _signatures_or_none(g: MixedGraph, edges: tuple[EdgeRef, ...], vertices: tuple[int, ...]):
    signs = [g.sign(e) for e in edges]
    if any(s is None for s in signs):
        return None
    return {v: (signs[k - 1] + signs[k]) // 2 for k, v in enumerate(vertices)}


def make_cycle(g: MixedGraph, vertices, edges) -> CycleDesc:
    """Build a :class:`CycleDesc`, checking that the edge sequence closes up."""
    vertices = tuple(vertices)
    edges = tuple(edges)
    if len(vertices) != len(edges) or not edges:
        raise DomainError("a cycle needs as many edges as vertices")
    if len(set(vertices)) != len(vertices):
        raise DomainError("cycle vertices must be distinct")
    if len(set(edges)) != len(edges):
        raise DomainError("cycle edges must be distinct")
    for k, e in enumerate(edges):
        a, b = g.endpoints(e)
        u, w = vertices[k], vertices[(k + 1) % len(vertices)]
        if {a, b} != {u, w}:
            raise DomainError(f"edge {g.label(e)} does not join {u + 1} and {w + 1}")
    count = sum(1 for e in edges if e.kind == SIGNED)
    return CycleDesc(vertices, edges, count, _signatures_or_none(g, edges, vertices))


def signatures(g: MixedGraph, c: CycleDesc) -> dict[int, int]:
    """Average sign of the two cycle edges at each vertex; a loop vertex gets the loop's sign."""
    for e in c.edges:
        if e.kind == DIRECTED:
            raise DomainError("signatures are defined on signed cycles; use the augmented cycle")
    return dict(_signatures_or_none(g, c.edges, c.vertices))


# ------------------------------------------------------------- enumeration


def _blocks(g: MixedGraph) -> list[list[EdgeRef]]:
    """Biconnected components of the underlying multigraph, loops excluded."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[EdgeRef]] = []
    stack: list[EdgeRef] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, edge used to enter, iterator over incidences)
        frames = [(root, None, iter(g.incident(root)))]
        while frames:
            v, via, it = frames[-1]
            advanced = False
            for ref, w in it:
                if w == v or ref == via:
                    continue
                if disc[w] == -1:
                    stack.append(ref)
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append((w, ref, iter(g.incident(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append(ref)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            frames.pop()
            if frames:
                parent = frames[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == via:
                            break
                    blocks.append(block)
    return blocks


def _parity_bipartite(g: MixedGraph, block: list[EdgeRef]) -> bool:
    """True when no cycle inside ``block`` has an odd signed-edge count."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in block:
        a, b = g.endpoints(e)
        p = 1 if e.kind == SIGNED else 0
        adj.setdefault(a, []).append((b, p))
        adj.setdefault(b, []).append((a, p))
    color: dict[int, int] = {}
    for start in adj:
        if start in color:
            continue
        color[start] = 0
        todo = [start]
        while todo:
            v = todo.pop()
            for w, p in adj[v]:
                want = color[v] ^ p
                if w not in color:
                    color[w] = want
                    todo.append(w)
                elif color[w] != want:
                    return False
    return True


def _block_cycles(g: MixedGraph, block: list[EdgeRef], pos: dict[EdgeRef, int]) -> Iterator[tuple]:
    """Simple cycles of one block as ``(vertices, edges)``, each exactly once.

    Cycles are rooted at their smallest vertex; of the two traversal
    directions the one whose first edge precedes its last edge is kept.
    A path is only extended towards vertices that can still reach the root,
    so every branch of the search ends in at least one cycle.
    """
    adj: dict[int, list[tuple[EdgeRef, int]]] = {}
    for e in sorted(block, key=pos.__getitem__):
        a, b = g.endpoints(e)
        adj.setdefault(a, []).append((e, b))
        adj.setdefault(b, []).append((e, a))
    for s in sorted(adj):
        path_v = [s]
        path_e: list[EdgeRef] = []
        on_path = {s}

        def reaches_root(w: int) -> bool:
            last = path_e[-1]
            seen = {w}
            todo = [w]
            while todo:
                x = todo.pop()
                for e, y in adj[x]:
                    if y == s and e != last:
                        return True
                    if y > s and y not in on_path and y not in seen:
                        seen.add(y)
                        todo.append(y)
            return False

        def extend():
            v = path_v[-1]
            for e, w in adj[v]:
                if path_e and e == path_e[-1]:
                    continue
                if w == s:
                    if path_e and pos[path_e[0]] < pos[e]:
                        yield tuple(path_v), tuple(path_e) + (e,)
                    continue
                if w < s or w in on_path:
                    continue
                path_v.append(w)
                path_e.append(e)
                on_path.add(w)
                if reaches_root(w):
                    yield from extend()
                on_path.discard(w)
                path_v.pop()
                path_e.pop()

        yield from extend()


def enumerate_cycles(
    g: MixedGraph,
    cap: int = DEFAULT_CYCLE_CAP,
    odd_only: bool = False,
    cap_flag: str = "--cycle-cap",
) -> list[CycleDesc]:
    """All simple cycles (optionally only odd ones) in canonical order.

    Raises :class:`CapacityError` once more than ``cap`` cycles would be returned.
    """
    if cap < 1:
        raise ValueError("cycle cap must be positive")
    pos = _edge_positions(g)
    found: list[CycleDesc] = []

    def emit(vertices, edges):
        c = make_cycle(g, vertices, edges)
        if odd_only and not c.is_odd:
            return
        found.append(c)
        if len(found) > cap:
            raise CapacityError(f"more than {cap} cycles", cap_flag)

    for k, e in enumerate(g.signed):
        if e.is_loop:
            emit((e.u,), (EdgeRef(SIGNED, k),))
    for block in _blocks(g):
        if odd_only and _parity_bipartite(g, block):
            continue
        for vertices, edges in _block_cycles(g, block, pos):
            emit(vertices, edges)
    found.sort(key=lambda c: c.sort_key(g))
    return found


def enumerate_odd_cycles(g: MixedGraph, cap: int = DEFAULT_CYCLE_CAP) -> list[CycleDesc]:
    return enumerate_cycles(g, cap, odd_only=True)


def disjoint_odd_pairs(g: MixedGraph, cap: int = DEFAULT_CYCLE_CAP) -> list[CyclePair]:
    """Unordered pairs of vertex-disjoint odd cycles lying in one component."""
    odd = enumerate_odd_cycles(g, cap)
    comp = component_index(g)
    pairs = []
    for a in range(len(odd)):
        ca = odd[a]
        sa = ca.vertex_set
        for b in range(a + 1, len(odd)):
            cb = odd[b]
            if comp[ca.vertices[0]] != comp[cb.vertices[0]] or not sa.isdisjoint(cb.vertices):
                continue
            pairs.append(CyclePair(ca, cb, True, True))
    pairs.sort(key=lambda p: (min(p.c1.vertices), min(p.c2.vertices)))
    return pairs


def find_cycle(g: MixedGraph, vertices, cap: int = DEFAULT_CYCLE_CAP, odd_only: bool = True) -> CycleDesc:
    """First enumerated cycle whose vertex sequence matches ``vertices`` up to rotation and reversal.

    Falls back to matching the vertex set when no sequence matches.
    """
    vertices = tuple(vertices)
    cands = enumerate_cycles(g, cap, odd_only=odd_only)
    n = len(vertices)
    rotations = {vertices[k:] + vertices[:k] for k in range(n)}
    rev = tuple(reversed(vertices))
    rotations |= {rev[k:] + rev[:k] for k in range(n)}
    for c in cands:
        if c.vertices in rotations:
            return c
    for c in cands:
        if c.vertex_set == frozenset(vertices) and len(c.vertices) == n:
            return c
    raise DomainError(f"no {'odd ' if odd_only else ''}cycle through vertices {[v + 1 for v in vertices]}")
