# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bounded combination search; same contract as ``_kernels_py``."""
from libc.stdlib cimport malloc, free
from cpython.bytes cimport PyBytes_FromStringAndSize


cdef class CombinationSearch:
    cdef int dim, nvec, maxnorm
    cdef int* vecs
    cdef int* cand_start
    cdef int* cand
    cdef dict _failed
    cdef public list vectors

    def __cinit__(self, vectors):
        self.vecs = NULL
        self.cand_start = NULL
        self.cand = NULL

    def __init__(self, vectors):
        cdef int k, i, x, s, pos, norm
        self.vectors = [tuple(int(x) for x in v) for v in vectors]
        self.nvec = len(self.vectors)
        self.dim = len(self.vectors[0]) if self.vectors else 0
        for v in self.vectors:
            if len(v) != self.dim:
                raise ValueError("vectors must share one length")
            if not any(v):
                raise ValueError("zero vectors are not allowed")
        self.vecs = <int*> malloc(max(1, self.nvec * self.dim) * sizeof(int))
        self.maxnorm = 1
        for k in range(self.nvec):
            norm = 0
            for i in range(self.dim):
                x = self.vectors[k][i]
                self.vecs[k * self.dim + i] = x
                norm += x if x > 0 else -x
            if norm > self.maxnorm:
                self.maxnorm = norm
        # candidates for (coordinate i, sign s) live in slot 2*i + (s > 0)
        self.cand_start = <int*> malloc((2 * self.dim + 1) * sizeof(int))
        self.cand = <int*> malloc(max(1, self.nvec * self.dim) * sizeof(int))
        pos = 0
        for i in range(self.dim):
            for s in range(2):
                self.cand_start[2 * i + s] = pos
                for k in range(self.nvec):
                    x = self.vecs[k * self.dim + i]
                    if (s == 1 and x > 0) or (s == 0 and x < 0):
                        self.cand[pos] = k
                        pos += 1
        self.cand_start[2 * self.dim] = pos
        self._failed = {}

    def __dealloc__(self):
        free(self.vecs)
        free(self.cand_start)
        free(self.cand)

    def search(self, target, int cap):
        cdef int i, k
        cdef int* buf
        cdef int* path
        if len(target) != self.dim:
            raise ValueError(f"target must have length {self.dim}")
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        buf = <int*> malloc((cap + 1) * max(1, self.dim) * sizeof(int))
        path = <int*> malloc(max(1, cap) * sizeof(int))
        try:
            for i in range(self.dim):
                buf[i] = int(target[i])
            k = self._dfs(buf, cap, 0, path)
            if k < 0:
                return None
            counts = [0] * self.nvec
            for i in range(k):
                counts[path[i]] += 1
            return counts
        finally:
            free(buf)
            free(path)

    cdef int _dfs(self, int* v, int budget, int depth, int* path) except -2:
        """Length of a successful path, or -1."""
        cdef int i, k, x = 0, first = -1, norm = 0, slot, j, res
        cdef int* w
        cdef int* vk
        for i in range(self.dim):
            x = v[i]
            if x != 0:
                if first < 0:
                    first = i
                norm += x if x > 0 else -x
        if first < 0:
            return depth
        if budget == 0 or norm > self.maxnorm * budget:
            return -1
        key = PyBytes_FromStringAndSize(<char*> v, self.dim * sizeof(int))
        seen = self._failed.get(key)
        if seen is not None and <int> seen >= budget:
            return -1
        slot = 2 * first + (1 if v[first] > 0 else 0)
        w = v + self.dim
        for j in range(self.cand_start[slot], self.cand_start[slot + 1]):
            k = self.cand[j]
            vk = self.vecs + k * self.dim
            for i in range(self.dim):
                w[i] = v[i] - vk[i]
            path[depth] = k
            res = self._dfs(w, budget - 1, depth + 1, path)
            if res >= 0:
                return res
        if seen is None or <int> seen < budget:
            self._failed[key] = budget
        return -1
