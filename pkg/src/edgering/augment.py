"""Replace every directed edge by a signed two-edge detour through a new vertex.

A directed edge ``(i, j)`` becomes the artificial vertex ``t`` and the signed
edges ``-i t`` and ``+t j``; their exponent vectors add up to ``e_j - e_i``
once the ``t`` coordinate is dropped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import InconsistentWeightsError, NotInSubringError, StructuralError
from .model import DIRECTED, SIGNED, DirectedEdge, EdgeRef, MixedGraph, SignedEdge, render_graph

__all__ = [
    "AugmentedGraph",
    "augment",
    "project_exponents",
    "pull_back_weights",
    "push_forward_weights",
    "render_augmented",
]


@dataclass(frozen=True)
class AugmentedGraph:
    base: MixedGraph
    signed_graph: MixedGraph
    artificial: Mapping[DirectedEdge, int]
    edge_map: Mapping[EdgeRef, tuple[EdgeRef, ...]]
    # augmented edge -> (base edge, 0 for the tail half / 1 for the head half / None if signed)
    origin: Mapping[EdgeRef, tuple[EdgeRef, int | None]] = field(repr=False)

    @property
    def n(self) -> int:
        return self.base.n

    def is_artificial(self, v: int) -> bool:
        return v >= self.base.n

    def directed_of(self, t: int) -> DirectedEdge:
        for d, vt in self.artificial.items():
            if vt == t:
                return d
        raise StructuralError(f"vertex {t} is not artificial")


def augment(g: MixedGraph) -> AugmentedGraph:
    n = g.n
    signed = list(g.signed)
    edge_map: dict[EdgeRef, tuple[EdgeRef, ...]] = {}
    origin: dict[EdgeRef, tuple[EdgeRef, int | None]] = {}
    for k in range(len(g.signed)):
        ref = EdgeRef(SIGNED, k)
        edge_map[ref] = (ref,)
        origin[ref] = (ref, None)
    artificial: dict[DirectedEdge, int] = {}
    order = sorted(range(len(g.directed)), key=lambda k: (g.directed[k].tail, g.directed[k].head))
    for slot, k in enumerate(order):
        d = g.directed[k]
        t = n + slot
        artificial[d] = t
        lo = EdgeRef(SIGNED, len(signed))
        signed.append(SignedEdge(d.tail, t, -1))
        hi = EdgeRef(SIGNED, len(signed))
        signed.append(SignedEdge(t, d.head, 1))
        base_ref = EdgeRef(DIRECTED, k)
        edge_map[base_ref] = (lo, hi)
        origin[lo] = (base_ref, 0)
        origin[hi] = (base_ref, 1)
    tilde = MixedGraph(n + len(g.directed), signed, ())
    return AugmentedGraph(g, tilde, artificial, edge_map, origin)


def project_exponents(a: AugmentedGraph, v) -> tuple:
    """Drop the artificial coordinates; they must all be zero."""
    total = a.signed_graph.n
    if len(v) != total:
        raise StructuralError(f"expected a vector of length {total}, got {len(v)}")
    for t in range(a.n, total):
        if v[t]:
            d = a.directed_of(t)
            raise NotInSubringError(
                f"artificial coordinate t{t + 1} for ({d.tail + 1},{d.head + 1}) is {v[t]}"
            )
    return tuple(v[: a.n])


def lift_exponents(a: AugmentedGraph, v) -> tuple:
    return tuple(v) + (0,) * (a.signed_graph.n - a.n)


def pull_back_weights(a: AugmentedGraph, w: Mapping[EdgeRef, object]) -> dict[EdgeRef, object]:
    """Weights on the augmented graph expressed on the base graph.

    Works for any exact number type; the two halves of each directed edge
    must carry the same weight.
    """
    out: dict[EdgeRef, object] = {}
    for ref in w:
        if ref not in a.origin:
            raise StructuralError(f"{ref!r} is not an edge of the augmented graph")
    for base_ref, halves in a.edge_map.items():
        if base_ref.kind == SIGNED:
            out[base_ref] = w.get(halves[0], 0)
        else:
            lo, hi = (w.get(h, 0) for h in halves)
            if lo != hi:
                d = a.base.edge(base_ref)
                raise InconsistentWeightsError(
                    f"halves of ({d.tail + 1},{d.head + 1}) carry weights {lo} and {hi}"
                )
            out[base_ref] = lo
    return out


def push_forward_weights(a: AugmentedGraph, w: Mapping[EdgeRef, object]) -> dict[EdgeRef, object]:
    out: dict[EdgeRef, object] = {}
    for base_ref, value in w.items():
        for half in a.edge_map[base_ref]:
            out[half] = value
    return out


def render_augmented(a: AugmentedGraph) -> str:
    text = render_graph(a.signed_graph)
    notes = [
        f"# artificial t {t + 1} = ({d.tail + 1},{d.head + 1})"
        for d, t in sorted(a.artificial.items(), key=lambda kv: kv[1])
    ]
    return text + ("\n".join(notes) + "\n" if notes else "")
