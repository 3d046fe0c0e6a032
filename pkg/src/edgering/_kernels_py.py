"""Pure-Python bounded combination search (fallback for ``_kernels``)."""
from __future__ import annotations

import sys


class CombinationSearch:
    """Find nonnegative integer multiplicities ``z`` with ``sum z_k v_k == target``
    and ``sum z_k <= cap``.

    Depth-first search that always branches on the first nonzero coordinate
    of the remaining target: some chosen vector must move that coordinate
    towards zero, so only those vectors are tried and the search is complete
    for the given cap.  Targets shown unreachable within a budget are
    remembered across calls.
    """

    def __init__(self, vectors):
        self.vectors = [tuple(int(x) for x in v) for v in vectors]
        self.dim = len(self.vectors[0]) if self.vectors else 0
        for v in self.vectors:
            if len(v) != self.dim:
                raise ValueError("vectors must share one length")
            if not any(v):
                raise ValueError("zero vectors are not allowed")
        self.maxnorm = max((sum(map(abs, v)) for v in self.vectors), default=1)
        self._by_sign: dict[tuple[int, int], list[int]] = {}
        for k, v in enumerate(self.vectors):
            for i, x in enumerate(v):
                if x:
                    self._by_sign.setdefault((i, 1 if x > 0 else -1), []).append(k)
        self._failed: dict[tuple[int, ...], int] = {}

    def search(self, target, cap: int):
        """Multiplicities as a list, or ``None`` when no combination fits the cap."""
        target = tuple(int(x) for x in target)
        if len(target) != self.dim:
            raise ValueError(f"target must have length {self.dim}")
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        path: list[int] = []
        limit = sys.getrecursionlimit()
        if cap + 50 > limit:
            sys.setrecursionlimit(cap + 50)
        if not self._dfs(target, cap, path):
            return None
        counts = [0] * len(self.vectors)
        for k in path:
            counts[k] += 1
        return counts

    def _dfs(self, v, budget, path) -> bool:
        for i, x in enumerate(v):
            if x:
                break
        else:
            return True
        if budget == 0 or sum(map(abs, v)) > self.maxnorm * budget:
            return False
        if self._failed.get(v, -1) >= budget:
            return False
        for k in self._by_sign.get((i, 1 if x > 0 else -1), ()):
            path.append(k)
            if self._dfs(tuple(a - b for a, b in zip(v, self.vectors[k])), budget - 1, path):
                return True
            path.pop()
        if self._failed.get(v, -1) < budget:
            self._failed[v] = budget
        return False
