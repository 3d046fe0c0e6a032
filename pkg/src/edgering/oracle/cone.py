"""Exact feasibility of ``A x = b, x >= 0`` over the rationals.

Two independent routes: a phase-one simplex with Bland's rule, and
Fourier-Motzkin elimination with back-substitution.  Both return a feasible
point as a list of :class:`~fractions.Fraction` or ``None``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..model import EdgeRef, MixedGraph, Vector, edge_vectors

FM_EDGE_LIMIT = 12


def simplex_feasible(A: Sequence[Sequence[int]], b: Sequence[int], ncols: int | None = None) -> list[Fraction] | None:
    rows = len(A)
    m = ncols if ncols is not None else (len(A[0]) if rows else 0)
    if rows == 0:
        return [Fraction(0)] * m
    width = m + rows
    T: list[list[Fraction]] = []
    for i in range(rows):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        T.append(row + [Fraction(int(k == i)) for k in range(rows)] + [rhs])
    basis = [m + i for i in range(rows)]
    # reduced costs of "minimize the sum of artificials"; last entry is minus the objective
    cost = [-sum(T[i][j] for i in range(rows)) for j in range(width + 1)]
    for j in range(m, width):
        cost[j] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(rows):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen for a phase-one problem bounded below by zero
            break
        prow = T[leave]
        piv = prow[enter]
        if piv != 1:
            prow[:] = [x / piv for x in prow]
        for i in range(rows):
            if i != leave:
                f = T[i][enter]
                if f:
                    row = T[i]
                    for j in range(width + 1):
                        if prow[j]:
                            row[j] -= f * prow[j]
        f = cost[enter]
        for j in range(width + 1):
            if prow[j]:
                cost[j] -= f * prow[j]
        basis[leave] = enter
    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * m
    for i, bv in enumerate(basis):
        if bv < m:
            x[bv] = T[i][-1]
    return x


def _normalize(coeffs: tuple[Fraction, ...], bound: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    scale = next((abs(c) for c in coeffs if c), None)
    if scale is None or scale == 1:
        return coeffs, bound
    return tuple(c / scale for c in coeffs), bound / scale


def fourier_motzkin_feasible(A: Sequence[Sequence[int]], b: Sequence[int], ncols: int | None = None) -> list[Fraction] | None:
    rows = len(A)
    m = ncols if ncols is not None else (len(A[0]) if rows else 0)
    # reduced row echelon form of [A | b]
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(rows)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(m):
        p = next((i for i in range(r, rows) if M[i][col]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][col]
        M[r] = [x / pv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivot_cols.append(col)
        r += 1
    if any(M[i][m] for i in range(r, rows)):
        return None
    free = [c for c in range(m) if c not in pivot_cols]
    k = len(free)
    # constraints sum(coeffs * x_free) <= bound
    system: dict[tuple[Fraction, ...], Fraction] = {}

    def add(sys, coeffs, bound) -> bool:
        if not any(coeffs):
            return bound >= 0
        coeffs, bound = _normalize(coeffs, bound)
        old = sys.get(coeffs)
        if old is None or bound < old:
            sys[coeffs] = bound
        return True

    for idx in range(k):
        add(system, tuple(Fraction(-int(t == idx)) for t in range(k)), Fraction(0))
    for i, col in enumerate(pivot_cols):
        # x_col = M[i][m] - sum M[i][f] x_f >= 0
        if not add(system, tuple(M[i][f] for f in free), M[i][m]):
            return None
    stages = []
    for var in range(k - 1, -1, -1):
        stages.append(system)
        pos = [(c, d) for c, d in system.items() if c[var] > 0]
        neg = [(c, d) for c, d in system.items() if c[var] < 0]
        nxt: dict[tuple[Fraction, ...], Fraction] = {}
        for c, d in system.items():
            if not c[var]:
                add(nxt, c, d)
        for cp, dp in pos:
            for cn, dn in neg:
                lp, ln = cp[var], -cn[var]
                coeffs = tuple(ln * x + lp * y for x, y in zip(cp, cn))
                if not add(nxt, coeffs, ln * dp + lp * dn):
                    return None
        system = nxt
    values = [Fraction(0)] * k
    for var, sys in zip(range(k), reversed(stages)):
        lo = hi = None
        for c, d in sys.items():
            a = c[var]
            if not a:
                continue
            rest = d - sum(c[t] * values[t] for t in range(var))
            bound = rest / a
            if a > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        values[var] = lo if lo is not None else (hi if hi is not None else Fraction(0))
    x = [Fraction(0)] * m
    for idx, f in enumerate(free):
        x[f] = values[idx]
    for i, col in enumerate(pivot_cols):
        x[col] = M[i][m] - sum(M[i][f] * values[idx] for idx, f in enumerate(free))
    return x


def _matrix(g: MixedGraph) -> list[list[int]]:
    cols = edge_vectors(g)
    return [[c[i] for c in cols] for i in range(g.n)]


def sign_obstruction(g: MixedGraph, alpha: Vector) -> bool:
    """Cheap necessary test: a positive (negative) coordinate needs some edge positive (negative) there."""
    cols = edge_vectors(g)
    for i, x in enumerate(alpha):
        if x > 0 and not any(c[i] > 0 for c in cols):
            return True
        if x < 0 and not any(c[i] < 0 for c in cols):
            return True
    return False


def cone_member(g: MixedGraph, alpha: Vector, method: str = "auto") -> dict[EdgeRef, Fraction] | None:
    """Nonnegative rational weights ``c`` with ``sum c_e rho(e) == alpha``, or ``None``.

    ``method`` is ``"fm"``, ``"simplex"`` or ``"auto"`` (Fourier-Motzkin for
    at most ``FM_EDGE_LIMIT`` edges, simplex above).
    """
    alpha = tuple(alpha)
    if len(alpha) != g.n:
        raise ValueError(f"expected a vector of length {g.n}")
    refs = g.edge_refs()
    if not any(alpha):
        return {r: Fraction(0) for r in refs}
    if sign_obstruction(g, alpha):
        return None
    if method == "auto":
        method = "fm" if len(refs) <= FM_EDGE_LIMIT else "simplex"
    solver = {"fm": fourier_motzkin_feasible, "simplex": simplex_feasible}[method]
    x = solver(_matrix(g), alpha, len(refs))
    if x is None:
        return None
    return dict(zip(refs, x))
