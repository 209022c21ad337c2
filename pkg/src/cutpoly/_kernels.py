"""Integer kernels for the exhaustive enumerations.

Rational inputs are scaled to a common denominator by the callers, so the
kernels only ever see integers.  Two interchangeable backends exist:

* numba ``@njit`` loops over ``int64`` arrays;
* vectorised numpy, which also accepts ``dtype=object`` arrays of Python
  ints and is therefore used whenever values could overflow ``int64``.

Importing numba and loading its compiled cache costs a few tenths of a
second, more than numpy needs for any instance with n <= 5.  Numba is
therefore imported lazily and only used once a call's estimated work
reaches ``CUTPOLY_NUMBA_MIN_WORK`` inner iterations (default 2**17).
Set ``CUTPOLY_NO_NUMBA=1`` to force the numpy backend everywhere.
"""
from __future__ import annotations

import importlib.util
import os
from functools import lru_cache
from types import SimpleNamespace

import numpy as np

INT64_SAFE = 2**60
NUMBA_MIN_WORK = int(os.environ.get("CUTPOLY_NUMBA_MIN_WORK", str(2**17)))

HAVE_NUMBA = (os.environ.get("CUTPOLY_NO_NUMBA", "").lower() not in ("1", "true", "yes")
              and importlib.util.find_spec("numba") is not None)


def backend() -> str:
    """Backend used for large workloads; small ones always run on numpy."""
    return "numba" if HAVE_NUMBA else "numpy"


def fits_int64(bound: int) -> bool:
    return bound < INT64_SAFE


def as_int_array(values, bound: int) -> np.ndarray:
    """int64 when ``bound`` is safe, otherwise an object array of Python ints."""
    if fits_int64(bound):
        return np.asarray(values, dtype=np.int64)
    arr = np.empty(len(values), dtype=object)
    arr[:] = [int(v) for v in values]
    return arr


# --------------------------------------------------------------------------
# numpy backend
# --------------------------------------------------------------------------

def cut_table_np(n: int, ei: np.ndarray, ej: np.ndarray, w: np.ndarray) -> np.ndarray:
    size = 1 << (n + 1)
    masks = np.arange(size, dtype=np.int64)
    if len(w) == 0:
        return np.zeros(size, dtype=w.dtype if w.dtype == object else np.int64)
    crossing = ((masks[:, None] >> ei[None, :]) ^ (masks[:, None] >> ej[None, :])) & 1
    if w.dtype == object:
        return crossing.astype(object).dot(w)
    return crossing @ w


def submodular_witness_np(table: np.ndarray, chunk: int = 256) -> tuple[int, int]:
    size = len(table)
    t_all = np.arange(size, dtype=np.int64)
    for start in range(0, size, chunk):
        s = np.arange(start, min(size, start + chunk), dtype=np.int64)
        slack = (table[s][:, None] + table[None, :]
                 - table[s[:, None] & t_all[None, :]] - table[s[:, None] | t_all[None, :]])
        bad = slack < 0
        if bad.any():
            flat = int(np.argmax(bad.ravel()))
            return int(s[flat // size]), flat % size
    return -1, -1


def order_vertices_np(table: np.ndarray, perms: np.ndarray) -> np.ndarray:
    k, width = perms.shape
    prefix = np.zeros((k, width + 1), dtype=np.int64)
    prefix[:, 1:] = np.bitwise_or.accumulate(np.left_shift(1, perms.astype(np.int64)), axis=1)
    vals = table[prefix]
    steps = vals[:, 1:] - vals[:, :-1]
    out = np.zeros((k, width), dtype=table.dtype)
    rows = np.arange(k)[:, None]
    out[rows, perms] = steps
    return out


def sign_vector_points_np(n: int, ei: np.ndarray, ej: np.ndarray, w: np.ndarray,
                          chunk: int = 4096) -> tuple[np.ndarray, np.ndarray]:
    m = len(w)
    width = n + 1
    total = 1 << m
    dtype = w.dtype if w.dtype == object else np.int64
    points = np.zeros((total, width), dtype=dtype)
    acyclic = np.ones(total, dtype=np.bool_)
    if m == 0:
        return points, acyclic
    gens = np.zeros((m, width), dtype=dtype)
    gens[np.arange(m), ei] = 1
    gens[np.arange(m), ej] = -1
    gens = gens * w[:, None]
    steps = max(1, int(np.ceil(np.log2(width))) + 1)
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        plus = ((masks[:, None] >> np.arange(m)[None, :]) & 1).astype(bool)
        eps = np.where(plus, 1, -1).astype(dtype)
        points[masks] = eps @ gens
        # arc high -> low: +1 means x_i above x_j
        src = np.where(plus, ei[None, :], ej[None, :])
        dst = np.where(plus, ej[None, :], ei[None, :])
        reach = np.zeros((len(masks), width, width), dtype=np.int32)
        rows = np.repeat(np.arange(len(masks)), m)
        reach[rows, src.ravel(), dst.ravel()] = 1
        for _ in range(steps):
            reach = np.minimum(reach + reach @ reach, 1)
        acyclic[masks] = ~np.any(np.diagonal(reach, axis1=1, axis2=2) > 0, axis=1)
    return points, acyclic


# --------------------------------------------------------------------------
# loop backend, compiled by numba in jitted()
# --------------------------------------------------------------------------

def _cut_table_loop(n, ei, ej, w):
    size = 1 << (n + 1)
    out = np.zeros(size, dtype=np.int64)
    for s in range(size):
        acc = 0
        for k in range(len(w)):
            if ((s >> ei[k]) ^ (s >> ej[k])) & 1:
                acc += w[k]
        out[s] = acc
    return out

def _submodular_witness_loop(table):
    size = len(table)
    for s in range(size):
        for t in range(size):
            if table[s] + table[t] < table[s & t] + table[s | t]:
                return s, t
    return -1, -1

def _order_vertices_loop(table, perms):
    k, width = perms.shape
    out = np.zeros((k, width), dtype=np.int64)
    for r in range(k):
        prev = 0
        for p in range(width):
            cur = prev | (1 << perms[r, p])
            out[r, perms[r, p]] = table[cur] - table[prev]
            prev = cur
    return out

def _sign_vector_points_loop(n, ei, ej, w):
    m = len(w)
    width = n + 1
    total = 1 << m
    points = np.zeros((total, width), dtype=np.int64)
    acyclic = np.ones(total, dtype=np.bool_)
    indeg = np.zeros(width, dtype=np.int64)
    stack = np.zeros(width, dtype=np.int64)
    for mask in range(total):
        for v in range(width):
            indeg[v] = 0
        for k in range(m):
            if (mask >> k) & 1:
                points[mask, ei[k]] += w[k]
                points[mask, ej[k]] -= w[k]
                indeg[ej[k]] += 1
            else:
                points[mask, ei[k]] -= w[k]
                points[mask, ej[k]] += w[k]
                indeg[ei[k]] += 1
        # Kahn: the orientation is acyclic iff every vertex gets popped
        top = 0
        for v in range(width):
            if indeg[v] == 0:
                stack[top] = v
                top += 1
        seen = 0
        while top > 0:
            top -= 1
            v = stack[top]
            seen += 1
            for k in range(m):
                plus = (mask >> k) & 1
                if plus and ei[k] == v:
                    u = ej[k]
                elif (not plus) and ej[k] == v:
                    u = ei[k]
                else:
                    continue
                indeg[u] -= 1
                if indeg[u] == 0:
                    stack[top] = u
                    top += 1
        acyclic[mask] = seen == width
    return points, acyclic


@lru_cache(maxsize=None)
def jitted() -> SimpleNamespace:
    """The loop kernels compiled with numba (imported on first use)."""
    from numba import njit

    jit = njit(cache=True)
    return SimpleNamespace(
        cut_table=jit(_cut_table_loop),
        submodular_witness=jit(_submodular_witness_loop),
        order_vertices=jit(_order_vertices_loop),
        sign_vector_points=jit(_sign_vector_points_loop),
    )


def _use_numba(work: int, *arrays) -> bool:
    return HAVE_NUMBA and work >= NUMBA_MIN_WORK and all(a.dtype == np.int64 for a in arrays)


def cut_table(n, ei, ej, w):
    if len(w) and _use_numba((1 << (n + 1)) * len(w), w):
        return jitted().cut_table(n, ei, ej, w)
    return cut_table_np(n, ei, ej, w)


def submodular_witness(table) -> tuple[int, int]:
    if _use_numba(len(table) ** 2, table):
        s, t = jitted().submodular_witness(table)
        return int(s), int(t)
    return submodular_witness_np(table)


def order_vertices(table, perms):
    if _use_numba(perms.size, table):
        return jitted().order_vertices(table, perms)
    return order_vertices_np(table, perms)


def sign_vector_points(n, ei, ej, w):
    if len(w) and _use_numba((1 << len(w)) * len(w), w):
        return jitted().sign_vector_points(n, ei, ej, w)
    return sign_vector_points_np(n, ei, ej, w)
