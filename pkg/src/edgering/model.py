"""Mixed signed/directed graphs, the exponent map, and their text formats.

Vertices are 0-based inside the package and 1-based in every text format,
so vertex ``0`` is the variable ``x1``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import ParseError, StructuralError, UnsupportedGeneratorError

Vector = tuple[int, ...]
Number = Union[int, Fraction]

SIGNED = "signed"
DIRECTED = "directed"


@dataclass(frozen=True, order=True)
class SignedEdge:
    """Undirected edge ``sign * uv``; ``u == v`` is a loop.

    Endpoints are stored with ``u <= v``.
    """

    u: int
    v: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise StructuralError(f"edge sign must be +1 or -1, got {self.sign}")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True, order=True)
class DirectedEdge:
    tail: int
    head: int

    def __post_init__(self):
        if self.tail == self.head:
            raise StructuralError("directed loops are not allowed")


class EdgeRef(NamedTuple):
    kind: str
    id: int

    def __repr__(self):
        return f"{'S' if self.kind == SIGNED else 'D'}{self.id}"


class MixedGraph:
    """Vertices ``0..n-1`` with signed edges and directed edges.

    Edge order is preserved; an :class:`EdgeRef` indexes into ``signed`` or
    ``directed``.  Instances are immutable.
    """

    __slots__ = ("n", "signed", "directed", "_incidence")

    def __init__(
        self,
        n: int,
        signed: Iterable[SignedEdge] = (),
        directed: Iterable[DirectedEdge] = (),
    ):
        if n < 0:
            raise StructuralError("vertex count must be nonnegative")
        signed = tuple(signed)
        directed = tuple(directed)
        if len(set(signed)) != len(signed):
            raise StructuralError("duplicate signed edge")
        if len(set(directed)) != len(directed):
            raise StructuralError("duplicate directed edge")
        for e in signed:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise StructuralError(f"signed edge {e} has an endpoint outside 0..{n - 1}")
        for d in directed:
            if not (0 <= d.tail < n and 0 <= d.head < n):
                raise StructuralError(f"directed edge {d} has an endpoint outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "signed", signed)
        object.__setattr__(self, "directed", directed)
        inc: list[list[tuple[EdgeRef, int]]] = [[] for _ in range(n)]
        for k, e in enumerate(signed):
            ref = EdgeRef(SIGNED, k)
            inc[e.u].append((ref, e.v))
            if not e.is_loop:
                inc[e.v].append((ref, e.u))
        for k, d in enumerate(directed):
            ref = EdgeRef(DIRECTED, k)
            inc[d.tail].append((ref, d.head))
            inc[d.head].append((ref, d.tail))
        object.__setattr__(self, "_incidence", tuple(tuple(x) for x in inc))

    def __setattr__(self, name, value):
        raise AttributeError("MixedGraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (self.n, self.signed, self.directed) == (other.n, other.signed, other.directed)

    def __hash__(self):
        return hash((self.n, self.signed, self.directed))

    def __repr__(self):
        return f"MixedGraph(n={self.n}, edges=[{', '.join(self.label(r) for r in self.edge_refs())}])"

    @property
    def has_directed(self) -> bool:
        return bool(self.directed)

    @property
    def num_edges(self) -> int:
        return len(self.signed) + len(self.directed)

    def edge_refs(self) -> list[EdgeRef]:
        return [EdgeRef(SIGNED, k) for k in range(len(self.signed))] + [
            EdgeRef(DIRECTED, k) for k in range(len(self.directed))
        ]

    def edge(self, ref: EdgeRef) -> SignedEdge | DirectedEdge:
        try:
            if ref.kind == SIGNED:
                return self.signed[ref.id]
            if ref.kind == DIRECTED:
                return self.directed[ref.id]
        except (IndexError, TypeError):
            pass
        raise StructuralError(f"unknown edge reference {ref!r}")

    def endpoints(self, ref: EdgeRef) -> tuple[int, int]:
        e = self.edge(ref)
        if isinstance(e, SignedEdge):
            return e.u, e.v
        return e.tail, e.head

    def sign(self, ref: EdgeRef) -> int | None:
        """Sign of a signed edge, ``None`` for a directed edge."""
        e = self.edge(ref)
        return e.sign if isinstance(e, SignedEdge) else None

    def incident(self, v: int) -> tuple[tuple[EdgeRef, int], ...]:
        """``(edge, other endpoint)`` pairs at ``v``; a loop is listed once."""
        return self._incidence[v]

    def find_signed(self, u: int, v: int, sign: int) -> EdgeRef | None:
        target = SignedEdge(u, v, sign)
        for k, e in enumerate(self.signed):
            if e == target:
                return EdgeRef(SIGNED, k)
        return None

    def find_directed(self, tail: int, head: int) -> EdgeRef | None:
        for k, d in enumerate(self.directed):
            if d.tail == tail and d.head == head:
                return EdgeRef(DIRECTED, k)
        return None

    def label(self, ref: EdgeRef) -> str:
        """Edge in graph-file notation with 1-based vertices, e.g. ``+1 2``."""
        e = self.edge(ref)
        if isinstance(e, SignedEdge):
            return f"{'+' if e.sign > 0 else '-'}{e.u + 1} {e.v + 1}"
        return f">{e.tail + 1} {e.head + 1}"

    def ref_from_label(self, text: str) -> EdgeRef:
        m = re.fullmatch(r"\s*([+\->])\s*(\d+)\s+(\d+)\s*", text)
        if not m:
            raise StructuralError(f"bad edge label {text!r}")
        i, j = int(m.group(2)) - 1, int(m.group(3)) - 1
        if m.group(1) == ">":
            ref = self.find_directed(i, j)
        else:
            ref = self.find_signed(i, j, 1 if m.group(1) == "+" else -1)
        if ref is None:
            raise StructuralError(f"no edge {text!r} in graph")
        return ref


def rho(g: MixedGraph, ref: EdgeRef) -> Vector:
    """Exponent vector of the monomial attached to an edge."""
    e = g.edge(ref)
    out = [0] * g.n
    if isinstance(e, SignedEdge):
        out[e.u] += e.sign
        out[e.v] += e.sign
    else:
        out[e.head] += 1
        out[e.tail] -= 1
    return tuple(out)


def edge_vectors(g: MixedGraph) -> list[Vector]:
    return [rho(g, r) for r in g.edge_refs()]


def weighted_sum(g: MixedGraph, weights: Mapping[EdgeRef, Number]) -> tuple[Number, ...]:
    """``sum(w_e * rho(e))`` computed exactly."""
    out: list[Number] = [0] * g.n
    for ref, w in weights.items():
        if not w:
            continue
        for i, x in enumerate(rho(g, ref)):
            if x:
                out[i] += w * x
    return tuple(Fraction(x) if isinstance(x, Fraction) and x.denominator != 1 else int(x) for x in out)


def vadd(a: Iterable[Number], b: Iterable[Number]) -> tuple:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vscale(k: Number, a: Iterable[Number]) -> tuple:
    return tuple(k * x for x in a)


def l1(a: Iterable[Number]) -> Number:
    return sum(abs(x) for x in a)


def components(g: MixedGraph) -> list[list[int]]:
    """Connected components of the underlying undirected graph.

    Each component is a sorted vertex list; components are ordered by their
    smallest vertex.  Isolated vertices form singleton components.
    """
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ref in g.edge_refs():
        a, b = g.endpoints(ref)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def component_index(g: MixedGraph) -> list[int]:
    """Map each vertex to the position of its component in :func:`components`."""
    out = [0] * g.n
    for k, comp in enumerate(components(g)):
        for v in comp:
            out[v] = k
    return out


# ---------------------------------------------------------------- graph text


def _decode(text: str | bytes) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    return text


_EDGE_LINE = re.compile(r"([+\->])\s*(-?\d+)\s+(-?\d+)")


def parse_graph(text: str | bytes) -> MixedGraph:
    """Parse the line format (or its JSON mirror, if the input starts with ``{``)."""
    text = _decode(text)
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    n: int | None = None
    signed: list[SignedEdge] = []
    directed: list[DirectedEdge] = []
    seen: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = re.fullmatch(r"vertices\s+(\d+)", line)
            if not m:
                raise ParseError("expected header 'vertices N'", lineno)
            n = int(m.group(1))
            continue
        if line.startswith("vertices"):
            raise ParseError("repeated 'vertices' header", lineno)
        m = _EDGE_LINE.fullmatch(line)
        if not m:
            raise ParseError(f"malformed edge line {line!r}", lineno)
        kind, i, j = m.group(1), int(m.group(2)), int(m.group(3))
        for x in (i, j):
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} out of range 1..{n}", lineno)
        i -= 1
        j -= 1
        if kind == ">":
            if i == j:
                raise ParseError("directed loops are not allowed", lineno)
            edge = DirectedEdge(i, j)
            bucket = directed
        else:
            edge = SignedEdge(i, j, 1 if kind == "+" else -1)
            bucket = signed
        if edge in seen:
            raise ParseError(f"duplicate edge {line!r}", lineno)
        seen.add(edge)
        bucket.append(edge)
    if n is None:
        raise ParseError("missing 'vertices N' header")
    return MixedGraph(n, signed, directed)


def render_graph(g: MixedGraph) -> str:
    lines = [f"vertices {g.n}"]
    lines.extend(g.label(r)[0] + " " + g.label(r)[1:] for r in g.edge_refs())
    return "\n".join(lines) + "\n"


def graph_to_json(g: MixedGraph) -> dict:
    return {
        "vertices": g.n,
        "signed": [[e.u + 1, e.v + 1, e.sign] for e in g.signed],
        "directed": [[d.tail + 1, d.head + 1] for d in g.directed],
    }


def parse_graph_json(text: str | bytes | dict) -> MixedGraph:
    if isinstance(text, dict):
        data = text
    else:
        try:
            data = json.loads(_decode(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    try:
        n = int(data["vertices"])
        signed_raw = data.get("signed", [])
        directed_raw = data.get("directed", [])
        signed = []
        for i, j, s in signed_raw:
            if s not in (1, -1):
                raise ParseError(f"bad sign {s!r}")
            signed.append((int(i), int(j), int(s)))
        directed = [(int(i), int(j)) for i, j in directed_raw]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from None
    for trip in signed:
        for x in trip[:2]:
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} out of range 1..{n}")
    for pair in directed:
        for x in pair:
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} out of range 1..{n}")
        if pair[0] == pair[1]:
            raise ParseError("directed loops are not allowed")
    try:
        return MixedGraph(
            n,
            [SignedEdge(i - 1, j - 1, s) for i, j, s in signed],
            [DirectedEdge(i - 1, j - 1) for i, j in directed],
        )
    except StructuralError as exc:
        raise ParseError(str(exc)) from None


# ----------------------------------------------------------------- monomials

_FACTOR = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def parse_monomial(text: str, lineno: int | None = None) -> dict[int, int]:
    """Exponents of a product like ``x1^-1*x4`` as ``{0-based var: exponent}``."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty monomial", lineno)
    exps: dict[int, int] = {}
    for part in s.split("*"):
        m = _FACTOR.fullmatch(part)
        if not m:
            raise ParseError(f"malformed factor {part!r}", lineno)
        idx = int(m.group(1))
        if idx < 1:
            raise ParseError(f"variable index must be >= 1, got x{idx}", lineno)
        exps[idx - 1] = exps.get(idx - 1, 0) + int(m.group(2) or 1)
    return {k: v for k, v in exps.items() if v}


def _edge_of_monomial(exps: dict[int, int], text: str, lineno: int):
    items = sorted(exps.items())
    pattern = sorted(v for _, v in items)
    if len(items) == 1 and abs(items[0][1]) == 2:
        (i, e), = items
        return SignedEdge(i, i, 1 if e > 0 else -1)
    if len(items) == 2:
        (i, a), (j, b) = items
        if pattern == [1, 1]:
            return SignedEdge(i, j, 1)
        if pattern == [-1, -1]:
            return SignedEdge(i, j, -1)
        if pattern == [-1, 1]:
            return DirectedEdge(i, j) if a == -1 else DirectedEdge(j, i)
    raise UnsupportedGeneratorError(f"{text.strip()!r} is not a quadratic monomial", lineno)


def parse_monomials(text: str | bytes) -> MixedGraph:
    """One Laurent monomial per line; an optional ``vertices N`` line widens the ambient ring."""
    text = _decode(text)
    declared = 0
    signed: list[SignedEdge] = []
    directed: list[DirectedEdge] = []
    seen: set = set()
    top = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"vertices\s+(\d+)", line)
        if m:
            declared = int(m.group(1))
            continue
        exps = parse_monomial(line, lineno)
        edge = _edge_of_monomial(exps, line, lineno)
        if edge in seen:
            raise ParseError(f"duplicate generator {line!r}", lineno)
        seen.add(edge)
        top = max(top, max(exps) + 1)
        (signed if isinstance(edge, SignedEdge) else directed).append(edge)
    if declared and declared < top:
        raise ParseError(f"declared {declared} vertices but x{top} is used")
    return MixedGraph(max(declared, top), signed, directed)


def format_monomial(vec: Iterable[int]) -> str:
    """Render an exponent vector as ``x1*x3^-1``; the zero vector is ``1``."""
    parts = []
    for i, e in enumerate(vec):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def edge_monomial(g: MixedGraph, ref: EdgeRef) -> str:
    e = g.edge(ref)
    if isinstance(e, DirectedEdge):
        return f"x{e.tail + 1}^-1*x{e.head + 1}"
    return format_monomial(rho(g, ref))


def render_monomials(g: MixedGraph) -> str:
    lines = [f"vertices {g.n}"]
    lines.extend(edge_monomial(g, r) for r in g.edge_refs())
    return "\n".join(lines) + "\n"


def load_graph(text: str | bytes, monomials: bool = False) -> MixedGraph:
    return parse_monomials(text) if monomials else parse_graph(text)
