"""Finite semigroups stored as multiplication tables."""
import itertools
import json
import os
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import (
    AssociativityError,
    ClosureError,
    InvalidOrderError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)
from .perms import Transformation, format_cycles

DEFAULT_MAX_ORDER = 16384


def max_order():
    """Size cap for constructed semigroups; SSG_MAX_ORDER overrides the default."""
    raw = os.environ.get("SSG_MAX_ORDER")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise SizeLimitError(f"SSG_MAX_ORDER is not an integer: {raw!r}") from None
    return DEFAULT_MAX_ORDER


def _check_cap(size, cap=None, what="semigroup"):
    cap = max_order() if cap is None else cap
    if size > cap:
        raise SizeLimitError(f"{what} would have {size} elements, above the cap of {cap}")


@dataclass(eq=False)
class FiniteSemigroup:
    size: int
    table: np.ndarray
    labels: tuple
    identity: int | None = None
    zero: int | None = None
    name: str = ""
    meta: dict = field(default_factory=dict)

    def mul(self, i, j):
        return int(self.table[i, j])

    def product(self, *elements):
        it = iter(elements)
        acc = next(it)
        for x in it:
            acc = int(self.table[acc, x])
        return acc

    def power(self, x, k):
        acc = x
        for _ in range(k - 1):
            acc = int(self.table[acc, x])
        return acc

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise PreconditionError(f"no element labelled {label!r} in {self.name}") from None

    def label_set(self, members):
        return [self.labels[i] for i in members]

    @property
    def is_commutative(self):
        return bool(np.array_equal(self.table, self.table.T))

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteSemigroup({self.name!r}, size={self.size})"


def element_set(S, members):
    """Canonical ElementSet: a sorted tuple of distinct in-range indices."""
    out = tuple(sorted({int(m) for m in members}))
    if out and (out[0] < 0 or out[-1] >= S.size):
        raise PreconditionError(f"element index out of range for {S.name}: {out}")
    return out


def _detect_identity_zero(table):
    n = table.shape[0]
    ar = np.arange(n)
    ident = np.flatnonzero((table == ar[None, :]).all(axis=1) & (table == ar[:, None]).all(axis=0))
    diag = np.diagonal(table)
    zeros = [z for z in np.flatnonzero(diag == ar) if (table[z] == z).all() and (table[:, z] == z).all()]
    identity = int(ident[0]) if ident.size else None
    zero = int(zeros[0]) if zeros else None
    return identity, zero


def _build(table, labels, name, meta=None, validate=True):
    table = np.asarray(table)
    n = table.shape[0]
    if validate:
        bad = _kernels.find_nonassociative(table)
        if bad is not None:
            raise AssociativityError(bad)
    table = np.ascontiguousarray(table, dtype=np.int32)
    table.setflags(write=False)
    identity, zero = _detect_identity_zero(table)
    return FiniteSemigroup(n, table, tuple(labels), identity, zero, name, dict(meta or {}))


def from_table(table, labels=None, name="table", meta=None, cap=None):
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ClosureError(f"table entries must be integers: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise PreconditionError(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise InvalidOrderError("a semigroup needs at least one element")
    _check_cap(n, cap)
    out = np.argwhere((arr < 0) | (arr >= n))
    if out.size:
        i, j = (int(v) for v in out[0])
        raise ClosureError(f"table[{i}][{j}] = {int(arr[i, j])} is not an element index below {n}")
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = [str(lab) for lab in labels]
    if len(labels) != n:
        raise PreconditionError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise PreconditionError("labels must be pairwise distinct")
    return _build(arr, labels, name, meta)


def make_zn_mul(n, cap=None):
    if n < 2:
        raise InvalidOrderError(f"Z_n needs n >= 2, got {n}")
    _check_cap(n, cap)
    ar = np.arange(n, dtype=np.int64)
    return _build(np.outer(ar, ar) % n, [str(i) for i in range(n)], f"Z_{n}",
                  {"kind": "zn", "n": n}, validate=False)


def make_cyclic_group(n):
    """C_n written multiplicatively with labels 1, g, g^2, ..."""
    if n < 1:
        raise InvalidOrderError(f"cyclic group needs n >= 1, got {n}")
    _check_cap(n)
    ar = np.arange(n)
    labels = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return _build((ar[:, None] + ar[None, :]) % n, labels[:n], f"C_{n}",
                  {"kind": "cyclic", "n": n}, validate=False)


def _encode(rows, base):
    weights = base ** np.arange(rows.shape[-1] - 1, -1, -1, dtype=np.int64)
    return rows @ weights


def _map_table(images):
    # images[f] is the 0-based image row of map f; f*g applies f first
    count = images.shape[0]
    base = images.shape[1]
    lookup = {tuple(r): i for i, r in enumerate(images.tolist())}
    table = np.empty((count, count), dtype=np.int64)
    for f in range(count):
        composed = images[:, images[f]]          # row g holds g(f(i))
        if len(lookup) == base ** base:
            table[f] = _encode(composed, base)
        else:
            table[f] = [lookup[tuple(r)] for r in composed.tolist()]
    return table


def make_full_transformation(n):
    """All maps of {1..n} to itself, ordered lexicographically by image row."""
    if not 1 <= n <= 5:
        raise SizeLimitError(f"full transformation semigroup supports degree 1..5, got {n}")
    images = np.array(list(itertools.product(range(n), repeat=n)), dtype=np.int64).reshape(-1, n)
    labels = ["[" + ",".join(str(v + 1) for v in row) + "]" for row in images.tolist()]
    return _build(_map_table(images), labels, f"S({n})", {"kind": "tn", "n": n}, validate=False)


def make_symmetric_group(n):
    if not 1 <= n <= 7:
        raise SizeLimitError(f"symmetric group supports degree 1..7, got {n}")
    images = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    labels = [format_cycles(Transformation(tuple(r + 1))) for r in images]
    return _build(_map_table(images), labels, f"S_{n}", {"kind": "sym", "n": n}, validate=False)


def transformation_of(S, x):
    """The Transformation behind element x of S(n) or S_n."""
    if S.meta.get("kind") not in ("tn", "sym"):
        raise PreconditionError(f"{S.name} is not a transformation semigroup")
    lab = S.labels[x]
    if lab.startswith("["):
        return Transformation(tuple(int(v) for v in lab.strip("[]").split(",")))
    from .perms import from_cycles
    cycles = [] if lab == "()" else [
        [int(v) for v in c.split(",")] for c in lab.strip("()").split(")(")]
    return from_cycles(cycles, S.meta["n"])


def element_of(S, t):
    """Index of a Transformation inside S(n) or S_n."""
    if S.meta.get("kind") == "tn":
        return S.index_of(t.label())
    return S.index_of(format_cycles(t))


def _matrix_label(flat, k):
    rows = [flat[r * k:(r + 1) * k] for r in range(k)]
    return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in rows) + "]"


def make_matrix_semigroup(k, m, cap=None):
    """All k x k matrices over Z_m under multiplication, row-major order."""
    if k < 1:
        raise InvalidOrderError(f"matrix size must be >= 1, got {k}")
    if m < 2:
        raise InvalidOrderError(f"modulus must be >= 2, got {m}")
    count = m ** (k * k)
    _check_cap(count, cap, what=f"{k}x{k} matrices over Z_{m}")
    flat = np.array(list(itertools.product(range(m), repeat=k * k)), dtype=np.int64).reshape(-1, k * k)
    mats = flat.reshape(-1, k, k)
    table = np.empty((count, count), dtype=np.int64)
    for a in range(count):
        prod = (mats[a][None, :, :] @ mats) % m
        table[a] = _encode(prod.reshape(count, k * k), m)
    labels = [_matrix_label(row, k) for row in flat.tolist()]
    return _build(table, labels, f"M_{k}x{k}(Z_{m})", {"kind": "mat", "k": k, "m": m}, validate=False)


def matrix_index(S, rows):
    """Index of the matrix given as nested rows inside a matrix semigroup."""
    k, m = S.meta["k"], S.meta["m"]
    flat = [int(v) % m for r in rows for v in r]
    if len(flat) != k * k:
        raise PreconditionError(f"expected a {k}x{k} matrix")
    return int(_encode(np.array(flat, dtype=np.int64), m))


def direct_product(S1, S2, cap=None):
    n1, n2 = S1.size, S2.size
    _check_cap(n1 * n2, cap, what=f"{S1.name} x {S2.name}")
    t1 = S1.table.astype(np.int64)
    t2 = S2.table.astype(np.int64)
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = [f"({a},{b})" for a in S1.labels for b in S2.labels]
    meta = {"kind": "product", "factors": [S1.name, S2.name], "sizes": [n1, n2]}
    return _build(table, labels, f"{S1.name} x {S2.name}", meta, validate=False)


def pair_index(P, i1, i2):
    return i1 * P.meta["sizes"][1] + i2


def closure(S, seed):
    seed = element_set(S, seed)
    if not seed:
        raise PreconditionError("closure needs a nonempty seed")
    mask = np.zeros(S.size, dtype=np.bool_)
    mask[list(seed)] = True
    return tuple(int(v) for v in np.flatnonzero(_kernels.closure_mask(S.table, mask)))


def is_closed(S, subset):
    idx = np.asarray(subset, dtype=np.int64)
    if idx.size == 0:
        return True
    mask = np.zeros(S.size, dtype=np.bool_)
    mask[idx] = True
    return bool(mask[S.table[np.ix_(idx, idx)]].all())


def set_product(S, left, right):
    return tuple(int(v) for v in np.flatnonzero(_kernels.set_product_mask(S.table, left, right)))


def is_associative(S):
    return _kernels.find_nonassociative(S.table) is None


# serialization ------------------------------------------------------------

def serialize(S):
    doc = {
        "name": S.name,
        "size": S.size,
        "table": S.table.tolist(),
        "labels": list(S.labels),
        "meta": S.meta,
    }
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1, 1)
    size, table = doc.get("size"), doc.get("table")
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise ParseError("field 'size' must be a positive integer")
    if not isinstance(table, list) or len(table) != size:
        raise ParseError(f"field 'table' must hold {size} rows")
    for r, row in enumerate(table):
        if not isinstance(row, list) or len(row) != size:
            raise ParseError(f"table row {r} must hold {size} entries")
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise ParseError(f"table row {r} has a non-integer entry")
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != size):
        raise ParseError(f"field 'labels' must hold {size} strings")
    meta = doc.get("meta") or {}
    if not isinstance(meta, dict):
        raise ParseError("field 'meta' must be an object")
    return from_table(table, labels, doc.get("name") or "table", meta)


def _parse_text(text):
    lines = [(no, ln) for no, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise ParseError("empty input", 1, 1)
    no, first = lines[0]
    try:
        size = int(first.strip())
    except ValueError:
        raise ParseError(f"first line must be the size, got {first.strip()!r}", no, 1) from None
    if size < 1:
        raise ParseError("size must be positive", no, 1)
    rows = lines[1:]
    if len(rows) != size:
        raise ParseError(f"expected {size} table rows, found {len(rows)}", rows[-1][0] if rows else no)
    table = []
    for no, ln in rows:
        row = []
        for tok in ln.split():
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", no, ln.index(tok) + 1) from None
        if len(row) != size:
            raise ParseError(f"expected {size} entries, found {len(row)}", no)
        table.append(row)
    return from_table(table)


def deserialize(data):
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else str(data)
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def save(S, path):
    with open(path, "wb") as fh:
        fh.write(serialize(S))


def load(path):
    with open(path, "rb") as fh:
        return deserialize(fh.read())
