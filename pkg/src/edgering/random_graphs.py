"""Seeded random graphs and exhaustive enumeration of small signed graphs."""
from __future__ import annotations

import itertools
import math
import random

from .model import DirectedEdge, MixedGraph, SignedEdge


def _signed_pool(n: int, loops: bool = True) -> list[SignedEdge]:
    pool = []
    for u in range(n):
        for v in range(u if loops else u + 1, n):
            for s in (1, -1):
                pool.append(SignedEdge(u, v, s))
    return pool


def _directed_pool(n: int) -> list[DirectedEdge]:
    return [DirectedEdge(u, v) for u in range(n) for v in range(n) if u != v]


def random_signed_graph(rng: random.Random, n: int, m: int, loops: bool = True) -> MixedGraph:
    pool = _signed_pool(n, loops)
    return MixedGraph(n, sorted(rng.sample(pool, min(m, len(pool)))))


def random_directed_graph(rng: random.Random, n: int, m: int) -> MixedGraph:
    pool = _directed_pool(n)
    edges = rng.sample(pool, min(m, len(pool)))
    return MixedGraph(n, (), sorted(edges, key=lambda d: (d.tail, d.head)))


def random_mixed_graph(
    rng: random.Random, max_vertices: int = 7, max_edges: int = 12, p_directed: float = 0.35
) -> MixedGraph:
    n = rng.randint(2, max_vertices)
    m = rng.randint(1, max_edges)
    signed_pool = _signed_pool(n)
    directed_pool = _directed_pool(n)
    k_dir = sum(rng.random() < p_directed for _ in range(m))
    k_dir = min(k_dir, len(directed_pool))
    directed = rng.sample(directed_pool, k_dir)
    signed = rng.sample(signed_pool, min(m - k_dir, len(signed_pool)))
    return MixedGraph(n, sorted(signed), sorted(directed, key=lambda d: (d.tail, d.head)))


def seeded_graphs(kind: str, count: int, seed: int, **kw) -> list[MixedGraph]:
    """``count`` graphs from one seeded stream; ``kind`` is signed, directed or mixed."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        if kind == "mixed":
            out.append(random_mixed_graph(rng, **kw))
        elif kind == "directed":
            n = rng.randint(2, kw.get("max_vertices", 10))
            m = rng.randint(1, kw.get("max_edges", 20))
            out.append(random_directed_graph(rng, n, m))
        elif kind == "signed":
            n = rng.randint(1, kw.get("max_vertices", 8))
            m = rng.randint(0, kw.get("max_edges", 10))
            out.append(random_signed_graph(rng, n, m))
        else:
            raise ValueError(f"unknown graph kind {kind!r}")
    return out


def _slot_tables(images: list[list[int]], size: int, chunk: int = 8) -> list[list[list[int]]]:
    """Per group element, lookup tables mapping each ``chunk``-bit slice of an
    edge mask to the image bits."""
    out = []
    for img in images:
        tabs = []
        for c in range(0, size, chunk):
            tab = [0] * (1 << chunk)
            for m in range(1, 1 << chunk):
                low = m & -m
                b = low.bit_length() - 1
                tab[m] = tab[m ^ low] | (1 << img[c + b] if c + b < size else 0)
            tabs.append(tab)
        out.append(tabs)
    return out


def signed_graph_classes(n: int, max_edges: int, flip_signs: bool = True) -> list[MixedGraph]:
    """One representative per class of signed graphs on ``n`` vertices with at most ``max_edges`` edges.

    Two graphs share a class when a vertex relabelling (and, with
    ``flip_signs``, negating every sign) maps one onto the other.  Both moves
    are ring isomorphisms (``x_i -> x_p(i)`` and ``x_i -> 1/x_i``), so
    normality is constant on a class.  A graph is kept when its edge bitmask
    is the smallest in its orbit.
    """
    pool = _signed_pool(n)
    slot = {(e.u, e.v, e.sign): i for i, e in enumerate(pool)}
    images = []
    for p in itertools.permutations(range(n)):
        for f in (1, -1) if flip_signs else (1,):
            img = [slot[(min(p[e.u], p[e.v]), max(p[e.u], p[e.v]), f * e.sign)] for e in pool]
            if img != list(range(len(pool))):
                images.append(img)
    chunk = 8
    tables = _slot_tables(images, len(pool), chunk)
    shifts = range(0, len(pool), chunk)
    mask8 = (1 << chunk) - 1
    reps = []
    for k in range(max_edges + 1):
        for combo in itertools.combinations(range(len(pool)), k):
            m = 0
            for i in combo:
                m |= 1 << i
            parts = [(m >> s) & mask8 for s in shifts]
            for tabs in tables:
                im = 0
                for tab, part in zip(tabs, parts):
                    im |= tab[part]
                if im < m:
                    break
            else:
                reps.append(MixedGraph(n, [pool[i] for i in combo]))
    return reps


def count_signed_graphs(n: int, max_edges: int) -> int:
    pool = len(_signed_pool(n))
    return sum(math.comb(pool, k) for k in range(max_edges + 1))
