"""Hot loops over multiplication tables.

Each kernel has a numba-compiled loop and a pure-numpy twin that must agree
exactly.  The numba path is used when numba imports and the environment
variable ``SSG_NUMBA`` is not set to ``0``; otherwise everything runs on numpy.
"""
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None


def _numba_requested():
    return os.environ.get("SSG_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


USE_NUMBA = numba is not None and _numba_requested()


def backend():
    return "numba" if USE_NUMBA else "numpy"


# associativity ------------------------------------------------------------

def _nonassoc_numpy(table):
    n = table.shape[0]
    for i in range(n):
        lhs = table[table[i]]      # lhs[j, k] = (i*j)*k
        rhs = table[i][table]      # rhs[j, k] = i*(j*k)
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            j, k = divmod(int(bad[0]), n)
            return i, j, k
    return None


def _nonassoc_loop(table):
    n = table.shape[0]
    for i in range(n):
        for j in range(n):
            ij = table[i, j]
            for k in range(n):
                if table[ij, k] != table[i, table[j, k]]:
                    return i, j, k
    return -1, -1, -1


# closure ------------------------------------------------------------------

def _closure_numpy(table, seed):
    mask = seed.copy()
    while True:
        members = np.flatnonzero(mask)
        grown = mask.copy()
        grown[table[np.ix_(members, members)].ravel()] = True
        if grown.sum() == mask.sum():
            return mask
        mask = grown


def _closure_loop(table, seed):
    n = table.shape[0]
    mask = seed.copy()
    members = np.empty(n, dtype=np.int64)
    count = 0
    for i in range(n):
        if mask[i]:
            members[count] = i
            count += 1
    done = 0
    # all products among members[:done] are already inside the set
    while done < count:
        x = members[done]
        for t in range(done + 1):
            y = members[t]
            p = table[x, y]
            if not mask[p]:
                mask[p] = True
                members[count] = p
                count += 1
            q = table[y, x]
            if not mask[q]:
                mask[q] = True
                members[count] = q
                count += 1
        done += 1
    return mask


# double cosets ------------------------------------------------------------

def _double_coset_rows_numpy(table, left, right):
    n = table.shape[0]
    rows = np.zeros((n, n), dtype=np.bool_)
    for x in range(n):
        ax = table[left, x]
        rows[x, table[np.ix_(ax, right)].ravel()] = True
    return rows


def _double_coset_rows_loop(table, left, right):
    n = table.shape[0]
    rows = np.zeros((n, n), dtype=np.bool_)
    for x in range(n):
        for a in left:
            ax = table[a, x]
            for b in right:
                rows[x, table[ax, b]] = True
    return rows


if numba is not None:
    _nonassoc_numba = numba.njit(cache=True, nogil=True)(_nonassoc_loop)
    _closure_numba = numba.njit(cache=True, nogil=True)(_closure_loop)
    _double_coset_rows_numba = numba.njit(cache=True, nogil=True)(_double_coset_rows_loop)
else:  # pragma: no cover
    _nonassoc_numba = _closure_numba = _double_coset_rows_numba = None


def _as_table(table):
    table = np.ascontiguousarray(table)
    if table.dtype not in (np.int32, np.int64):
        table = table.astype(np.int64)
    return table


def _as_index(values):
    return np.ascontiguousarray(np.asarray(values, dtype=np.int64).ravel())


def find_nonassociative(table, use_numba=None):
    """First triple (i, j, k) in lexicographic order with (ij)k != i(jk), or None."""
    table = _as_table(table)
    if USE_NUMBA if use_numba is None else use_numba:
        hit = _nonassoc_numba(table)
        return None if hit[0] < 0 else tuple(int(v) for v in hit)
    return _nonassoc_numpy(table)


def closure_mask(table, seed, use_numba=None):
    """Smallest closed set containing the boolean mask seed."""
    table = _as_table(table)
    seed = np.ascontiguousarray(seed, dtype=np.bool_)
    if seed.shape != (table.shape[0],):
        # the compiled loop does no bounds checks
        raise ValueError(f"seed must be a boolean mask of length {table.shape[0]}, got shape {seed.shape}")
    if USE_NUMBA if use_numba is None else use_numba:
        return _closure_numba(table, seed)
    return _closure_numpy(table, seed)


def double_coset_rows(table, left, right, use_numba=None):
    """Boolean matrix whose row x marks the set {a*x*b : a in left, b in right}."""
    table = _as_table(table)
    left, right = _as_index(left), _as_index(right)
    if USE_NUMBA if use_numba is None else use_numba:
        return _double_coset_rows_numba(table, left, right)
    return _double_coset_rows_numpy(table, left, right)


def set_product_mask(table, left, right):
    mask = np.zeros(table.shape[0], dtype=np.bool_)
    mask[np.asarray(table)[np.ix_(_as_index(left), _as_index(right))].ravel()] = True
    return mask
