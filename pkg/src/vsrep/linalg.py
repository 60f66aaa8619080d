"""Dense matrices and subspaces over a finite field.

Matrices are numpy ``uint8`` arrays of element codes together with a
:class:`~vsrep.field.FiniteField`.  Vectors are rows; an operator ``A`` acts
on a vector ``v`` as ``A @ v^T`` (column convention), which for row storage is
``v @ A.T``.  ``vec(X)`` of an operator is its row-major flattening.

Over GF(2) row reduction runs on bit-packed rows (64 entries per word).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .field import FiniteField, FieldMismatchError

__all__ = [
    "as_matrix",
    "identity",
    "zeros",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_kron",
    "mat_rref",
    "mat_rank",
    "mat_nullspace",
    "left_nullspace",
    "mat_inverse",
    "mat_power",
    "is_invertible",
    "Echelon",
    "Subspace",
    "subspace_sum",
    "subspace_intersect",
    "subspace_contains",
    "subspace_quotient_coords",
]


def as_matrix(F: FiniteField, data, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Validate and convert nested lists/arrays of codes into a uint8 matrix."""
    arr = np.asarray(data, dtype=np.int64)
    if arr.ndim == 1 and shape is None:
        arr = arr.reshape(1, -1)
    if shape is not None:
        arr = arr.reshape(shape)
    if arr.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= F.q):
        raise ValueError(f"entries out of range for {F}")
    return arr.astype(np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.uint8)


def mat_mul(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    if (a.size and int(a.max()) >= F.q) or (b.size and int(b.max()) >= F.q):
        raise FieldMismatchError(f"matrix entries outside {F}")
    return F.matmul(a, b)


def mat_add(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return F.add(a, b)


def mat_sub(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return F.sub(a, b)


def mat_scale(F: FiniteField, c: int, a: np.ndarray) -> np.ndarray:
    return F.scale(c, a)


def mat_kron(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; entry ((i1,i2),(j1,j2)) = a[i1,j1] * b[i2,j2] with
    row index i1 * b.rows + i2."""
    ra, ca = a.shape
    rb, cb = b.shape
    prod = F.mul(a[:, None, :, None], b[None, :, None, :])
    return np.ascontiguousarray(prod.reshape(ra * rb, ca * cb))


def mat_power(F: FiniteField, a: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        a, k = mat_inverse(F, a), -k
    result = identity(a.shape[0])
    base = a
    while k:
        if k & 1:
            result = F.matmul(result, base)
        base = F.matmul(base, base)
        k >>= 1
    return result


# ---------------------------------------------------------------------------
# Row reduction


def _pack_gf2(a: np.ndarray) -> np.ndarray:
    rows, cols = a.shape
    words = max(1, (cols + 63) // 64)
    padded = np.zeros((rows, words * 64), dtype=np.uint8)
    padded[:, :cols] = a
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64).reshape(rows, words)


def _unpack_gf2(packed: np.ndarray, cols: int) -> np.ndarray:
    rows = packed.shape[0]
    bits = np.unpackbits(packed.view(np.uint8).reshape(rows, -1), axis=1, bitorder="little")
    return np.ascontiguousarray(bits[:, :cols])


def _rref_gf2(a: np.ndarray, pivot_limit: int) -> tuple[np.ndarray, int, list[int]]:
    rows, cols = a.shape
    m = _pack_gf2(a)
    pivots: list[int] = []
    r = 0
    for c in range(pivot_limit):
        if r == rows:
            break
        w, bit = divmod(c, 64)
        column = (m[r:, w] >> np.uint64(bit)) & np.uint64(1)
        hits = np.flatnonzero(column)
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        column = (m[:, w] >> np.uint64(bit)) & np.uint64(1)
        column[r] = 0
        targets = np.flatnonzero(column)
        if targets.size:
            m[targets] ^= m[r]
        pivots.append(c)
        r += 1
    return _unpack_gf2(m, cols), r, pivots


def _rref_generic(F: FiniteField, a: np.ndarray, pivot_limit: int) -> tuple[np.ndarray, int, list[int]]:
    m = np.array(a, dtype=np.uint8, copy=True)
    rows = m.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(pivot_limit):
        if r == rows:
            break
        hits = np.flatnonzero(m[r:, c])
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        lead = int(m[r, c])
        if lead != 1:
            m[r] = F.mul(F.inv_table[lead], m[r])
        factors = m[:, c].copy()
        factors[r] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            m[targets] = F.sub(m[targets], F.mul(factors[targets, None], m[r][None, :]))
        pivots.append(c)
        r += 1
    return m, r, pivots


def mat_rref(F: FiniteField, a: np.ndarray, pivot_limit: int | None = None) -> tuple[np.ndarray, int, list[int]]:
    """Canonical reduced row echelon form.

    Returns ``(R, rank, pivot_cols)`` where ``R`` has the same shape as ``a``
    with the zero rows last.  ``pivot_limit`` restricts pivot search to the
    first columns (used for augmented systems).
    """
    a = np.asarray(a, dtype=np.uint8)
    if a.ndim != 2:
        raise ValueError("mat_rref expects a matrix")
    limit = a.shape[1] if pivot_limit is None else pivot_limit
    if a.size == 0:
        return a.copy(), 0, []
    if F.q == 2:
        return _rref_gf2(a, limit)
    return _rref_generic(F, a, limit)


def mat_rank(F: FiniteField, a: np.ndarray) -> int:
    return mat_rref(F, a)[1]


def is_invertible(F: FiniteField, a: np.ndarray) -> bool:
    return a.shape[0] == a.shape[1] and mat_rank(F, a) == a.shape[0]


def mat_inverse(F: FiniteField, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("only square matrices are invertible")
    r, rank, _ = mat_rref(F, np.hstack([a, identity(n)]), pivot_limit=n)
    if rank < n or not np.array_equal(r[:, :n], identity(n)):
        raise ZeroDivisionError("matrix is singular")
    return np.ascontiguousarray(r[:, n:])


def _null_basis(F: FiniteField, a: np.ndarray) -> np.ndarray:
    cols = a.shape[1]
    r, rank, pivots = mat_rref(F, a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        if rank:
            basis[k, pivots] = F.neg(r[:rank, f])
    return basis


def mat_nullspace(F: FiniteField, a: np.ndarray) -> "Subspace":
    """The subspace ``{v : a @ v^T = 0}``."""
    a = np.asarray(a, dtype=np.uint8)
    return Subspace.from_vectors(F, a.shape[1], _null_basis(F, a))


def left_nullspace(F: FiniteField, a: np.ndarray) -> np.ndarray:
    """Basis (rows, RREF) of ``{x : x @ a = 0}``, computed on the short side."""
    rows, cols = a.shape
    aug = np.hstack([a, identity(rows)])
    r, rank, _ = mat_rref(F, aug, pivot_limit=cols)
    kernel = r[rank:, cols:]
    return mat_rref(F, kernel)[0][: kernel.shape[0]]


# ---------------------------------------------------------------------------
# Incremental echelon form


class Echelon:
    """Incrementally maintained reduced echelon basis.

    Rows may be longer than the pivot region (``pivot_cols``); the trailing
    columns ride along with row operations, which lets callers track how
    each basis row was formed.
    """

    def __init__(self, F: FiniteField, width: int, pivot_cols: int | None = None, capacity: int | None = None):
        self.F = F
        self.width = width
        self.pivot_cols = width if pivot_cols is None else pivot_cols
        cap = capacity or min(self.pivot_cols, 64) or 1
        self._rows = np.zeros((cap, width), dtype=np.uint8)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def rows(self) -> np.ndarray:
        return self._rows[: self.rank]

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.uint8)
        if not self.pivots:
            return v.copy()
        coeffs = v[..., self.pivots]
        return self.F.sub(v, self.F.matmul(coeffs, self.rows))

    def contains(self, v: np.ndarray) -> bool:
        return not self.reduce(v)[: self.pivot_cols].any()

    def add(self, v: np.ndarray, reduced: bool = False) -> bool:
        """Insert ``v``; returns whether the rank grew."""
        w = np.asarray(v, dtype=np.uint8) if reduced else self.reduce(v)
        nz = np.flatnonzero(w[: self.pivot_cols])
        if nz.size == 0:
            return False
        c = int(nz[0])
        lead = int(w[c])
        if lead != 1:
            w = self.F.mul(self.F.inv_table[lead], w)
        k = self.rank
        if k:
            col = self._rows[:k, c]
            hit = np.flatnonzero(col)
            if hit.size:
                self._rows[hit] = self.F.sub(self._rows[hit], self.F.mul(col[hit, None], w[None, :]))
        if k == self._rows.shape[0]:
            grown = np.zeros((max(2 * k, 1), self.width), dtype=np.uint8)
            grown[:k] = self._rows[:k]
            self._rows = grown
        self._rows[k] = w
        self.pivots.append(c)
        return True

    def clear_tail(self) -> None:
        """Zero the non-pivot tracking columns of every row."""
        self._rows[:, self.pivot_cols:] = 0

    def basis(self) -> np.ndarray:
        """Rows sorted by pivot: the canonical RREF of the spanned space."""
        order = np.argsort(self.pivots, kind="stable")
        return np.ascontiguousarray(self.rows[order][:, : self.pivot_cols])


# ---------------------------------------------------------------------------
# Subspaces


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F^n stored as its canonical RREF basis (rows)."""

    field: FiniteField
    ambient_dim: int
    basis: np.ndarray
    pivots: tuple[int, ...] = dc_field(default=())

    @classmethod
    def from_vectors(cls, F: FiniteField, ambient_dim: int, vectors) -> "Subspace":
        vecs = np.asarray(vectors, dtype=np.uint8).reshape(-1, ambient_dim)
        if vecs.shape[0] == 0:
            return cls(F, ambient_dim, np.zeros((0, ambient_dim), dtype=np.uint8), ())
        r, rank, pivots = mat_rref(F, vecs)
        return cls(F, ambient_dim, np.ascontiguousarray(r[:rank]), tuple(pivots))

    @classmethod
    def zero(cls, F: FiniteField, ambient_dim: int) -> "Subspace":
        return cls.from_vectors(F, ambient_dim, np.zeros((0, ambient_dim)))

    @classmethod
    def full(cls, F: FiniteField, ambient_dim: int) -> "Subspace":
        return cls(F, ambient_dim, identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def key(self) -> tuple:
        return (self.ambient_dim, self.basis.tobytes())

    def sort_key(self) -> tuple:
        return (self.dim, self.basis.ravel().tolist())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.key()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, {self.field})"

    def contains(self, v: np.ndarray) -> bool:
        return subspace_contains(self, v)

    def coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of vectors (rows) lying in the subspace w.r.t. ``basis``."""
        v = np.asarray(v, dtype=np.uint8)
        c = v[..., list(self.pivots)]
        if not np.array_equal(self.field.matmul(c.reshape(-1, self.dim), self.basis).reshape(v.shape), v):
            raise ValueError("vector does not lie in the subspace")
        return c

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.uint8)
        if self.dim == 0:
            return v.copy()
        c = v[..., list(self.pivots)]
        return self.field.sub(v, self.field.matmul(c.reshape(-1, self.dim), self.basis).reshape(v.shape))

    def annihilator(self) -> "Subspace":
        return mat_nullspace(self.field, self.basis) if self.dim else Subspace.full(self.field, self.ambient_dim)


def _same_ambient(u: Subspace, w: Subspace) -> None:
    if u.field != w.field:
        raise FieldMismatchError("subspaces over different fields")
    if u.ambient_dim != w.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {u.ambient_dim} vs {w.ambient_dim}")


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _same_ambient(u, w)
    return Subspace.from_vectors(u.field, u.ambient_dim, np.vstack([u.basis, w.basis]))


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    _same_ambient(u, w)
    if u.dim == 0 or w.dim == 0:
        return Subspace.zero(u.field, u.ambient_dim)
    both = np.vstack([u.annihilator().basis, w.annihilator().basis])
    if both.shape[0] == 0:
        return Subspace.full(u.field, u.ambient_dim)
    return mat_nullspace(u.field, both)


def subspace_contains(u: Subspace, v: np.ndarray) -> bool:
    v = np.asarray(v, dtype=np.uint8)
    if v.shape[-1] != u.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    return not u.reduce(v).any()


def subspace_quotient_coords(u: Subspace, v: np.ndarray, complement: np.ndarray | None = None) -> np.ndarray:
    """Coordinates of ``v + U`` in the quotient ``F^n / U``.

    ``complement`` lists (as rows) vectors whose images form the quotient
    basis; by default the unit vectors at the non-pivot columns of ``U``.
    """
    F = u.field
    single = np.ndim(v) == 1
    v = np.atleast_2d(np.asarray(v, dtype=np.uint8))
    if v.shape[1] != u.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    if complement is None:
        free = [c for c in range(u.ambient_dim) if c not in set(u.pivots)]
        out = u.reduce(v)[:, free]
    else:
        comp = np.asarray(complement, dtype=np.uint8)
        k = comp.shape[0]
        if k + u.dim != u.ambient_dim:
            raise ValueError("complement has the wrong dimension")
        system = np.vstack([comp, u.basis])
        inv = mat_inverse(F, system)
        out = F.matmul(v, inv)[:, :k]
    return out[0] if single else out
