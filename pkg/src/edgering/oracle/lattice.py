"""Integer linear systems through the column Hermite normal form."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..model import EdgeRef, MixedGraph, Vector, edge_vectors


@dataclass(frozen=True)
class HermiteForm:
    """``A @ U == H`` with ``U`` unimodular and ``H`` in column Hermite normal form.

    Matrices are stored column by column.  ``pivots[k]`` is the row of the
    leading entry of column ``k`` of ``H``; columns past ``len(pivots)`` are
    zero and span the integer kernel of ``A`` through ``U``.
    """

    rows: int
    h_cols: tuple[tuple[int, ...], ...]
    u_cols: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def kernel_basis(self) -> list[tuple[int, ...]]:
        return [self.u_cols[k] for k in range(self.rank, len(self.u_cols))]


def hermite_normal_form(columns: list[Vector], rows: int) -> HermiteForm:
    m = len(columns)
    H = [list(c) for c in columns]
    U = [[int(i == j) for i in range(m)] for j in range(m)]
    pivots: list[int] = []

    def axpy(dst: int, q: int, src: int) -> None:
        # column dst -= q * column src
        if q:
            hd, hs, ud, us = H[dst], H[src], U[dst], U[src]
            for i in range(rows):
                hd[i] -= q * hs[i]
            for i in range(m):
                ud[i] -= q * us[i]

    c = 0
    for r in range(rows):
        if c == m:
            break
        while True:
            live = [k for k in range(c, m) if H[k][r]]
            if not live:
                break
            best = min(live, key=lambda k: (abs(H[k][r]), k))
            H[c], H[best] = H[best], H[c]
            U[c], U[best] = U[best], U[c]
            done = True
            for k in range(c + 1, m):
                if H[k][r]:
                    axpy(k, H[k][r] // H[c][r], c)
                    if H[k][r]:
                        done = False
            if done:
                break
        if not H[c][r]:
            continue
        if H[c][r] < 0:
            H[c] = [-x for x in H[c]]
            U[c] = [-x for x in U[c]]
        for k in range(c):
            axpy(k, H[k][r] // H[c][r], c)
        pivots.append(r)
        c += 1
    return HermiteForm(rows, tuple(map(tuple, H)), tuple(map(tuple, U)), tuple(pivots))


def solve_integer(form: HermiteForm, b: Vector) -> list[int] | None:
    """One integer solution of ``A z = b``, or ``None``."""
    residual = list(b)
    y = []
    for k, r in enumerate(form.pivots):
        col = form.h_cols[k]
        q, rem = divmod(residual[r], col[r])
        if rem:
            return None
        y.append(q)
        if q:
            for i in range(form.rows):
                residual[i] -= q * col[i]
    if any(residual):
        return None
    m = len(form.u_cols)
    z = [0] * m
    for k, q in enumerate(y):
        if q:
            col = form.u_cols[k]
            for i in range(m):
                z[i] += q * col[i]
    return z


@lru_cache(maxsize=256)
def graph_hermite_form(g: MixedGraph) -> HermiteForm:
    return hermite_normal_form(edge_vectors(g), g.n)


def lattice_member(g: MixedGraph, alpha: Vector) -> dict[EdgeRef, int] | None:
    """Integer weights ``z`` with ``sum z_e rho(e) == alpha``; ``None`` outside the edge lattice."""
    alpha = tuple(alpha)
    if len(alpha) != g.n:
        raise ValueError(f"expected a vector of length {g.n}")
    z = solve_integer(graph_hermite_form(g), alpha)
    if z is None:
        return None
    return dict(zip(g.edge_refs(), z))
