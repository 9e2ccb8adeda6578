"""Compiled backtracking kernel for orderly generation of AG-groupoids.

Cells are filled in row-major order with values 0..n-1. After each
assignment two checks run: every left-invertive instance (ab)c = (cb)a whose
four cells are all set must hold, and no non-identity relabeling may make the
set prefix lexicographically smaller. Surviving complete tables are exactly
the minimal representatives of their isomorphism classes.

Without numba the same functions run as plain Python (slowly).
"""

import itertools
from functools import cache

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

UNSET = -1


@njit(cache=True, nogil=True)
def _consistent(T, n, k):
    """Left-invertive instances made fully instantiated by setting cell k."""
    i = k // n
    j = k % n
    v = T[k]
    # cell k as the inner product ab (or cb): (ij)c = (cj)i
    for c in range(n):
        w = T[c * n + j]
        if w < 0:
            continue
        x = T[v * n + c]
        y = T[w * n + i]
        if x >= 0 and y >= 0 and x != y:
            return False
    # cell k as the outer product (ab)c with ab = i, c = j: (ab)j = (jb)a
    for idx in range(k + 1):
        if T[idx] == i:
            a = idx // n
            b = idx % n
            w = T[j * n + b]
            if w < 0:
                continue
            y = T[w * n + a]
            if y >= 0 and y != v:
                return False
    return True


@njit(cache=True, nogil=True)
def _canonical_prefix(T, k, images, sources, pos):
    """Relabeling check after setting cell k.

    pos[k, p] is the first position not yet known to compare equal under
    relabeling p, or -1 once p is known to give a larger table. Row k + 1 is
    filled from row k so each relabeling resumes where it stopped.
    """
    for p in range(images.shape[0]):
        idx = pos[k, p]
        if idx < 0:
            pos[k + 1, p] = -1
            continue
        while idx <= k:
            s = sources[p, idx]
            if s > k:
                break
            val = images[p, T[s]]
            t = T[idx]
            if val < t:
                return False
            if val > t:
                idx = -1
                break
            idx += 1
        pos[k + 1, p] = idx
    return True


@njit(cache=True, nogil=True)
def search(n, prefix, depth, images, sources):
    """All surviving tables of length ``depth`` extending ``prefix``.

    Returns (rows, nodes): rows is an int8 array of shape (count, depth) in
    ascending lexicographic order; nodes counts assignments tried.
    """
    N = n * n
    T = np.full(N, UNSET, np.int64)
    pos = np.zeros((N + 1, images.shape[0]), np.int64)
    cap = 256
    out = np.empty((cap, depth), np.int8)
    count = 0
    nodes = 0
    base = prefix.shape[0]
    for k in range(base):
        T[k] = prefix[k]
        if not (_consistent(T, n, k) and _canonical_prefix(T, k, images, sources, pos)):
            return out[:0], nodes
    if base == depth:
        for c in range(depth):
            out[0, c] = T[c]
        return out[:1], nodes
    k = base
    while k >= base:
        v = T[k] + 1
        if v >= n:
            T[k] = UNSET
            k -= 1
            continue
        T[k] = v
        nodes += 1
        if _consistent(T, n, k) and _canonical_prefix(T, k, images, sources, pos):
            if k + 1 == depth:
                if count == cap:
                    grown = np.empty((cap * 2, depth), np.int8)
                    grown[:cap] = out
                    out = grown
                    cap *= 2
                for c in range(depth):
                    out[count, c] = T[c]
                count += 1
            else:
                k += 1
    return out[:count], nodes


@cache
def permutation_tables(n: int):
    """Images and source-cell maps of the n! - 1 non-identity relabelings.

    For relabeling p, cell idx = i*n + j of the relabeled table reads the
    source cell sources[p, idx] = q(i)*n + q(j) (q = p⁻¹) and maps its value
    through images[p].
    """
    perms = list(itertools.permutations(range(n)))[1:]
    images = np.array(perms, dtype=np.int64).reshape(len(perms), n)
    sources = np.empty((len(perms), n * n), dtype=np.int64)
    for row, img in enumerate(perms):
        q = [0] * n
        for i, v in enumerate(img):
            q[v] = i
        sources[row] = [q[i] * n + q[j] for i in range(n) for j in range(n)]
    images.flags.writeable = False
    sources.flags.writeable = False
    return images, sources
