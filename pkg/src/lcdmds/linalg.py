"""Dense exact linear algebra over a FiniteField.

FieldMatrix stores an immutable int64 array of element indices.  Products
decompose into prime-field coefficient planes and run as one exact GEMM;
elimination-style operations go through the numba kernels in _kernels for
fields small enough to carry dense lookup tables, with scalar fallbacks
above that (same algorithms, same pivoting rule: first nonzero entry,
lowest row index).
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import gf
from .errors import (
    BadIndexSet,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    NotAQuadraticExtension,
    NotSquare,
    ParamViolation,
    RankDeficient,
)
from .gf import FieldElement, FiniteField

MAX_MATRIX_ENTRIES = 10**6

_kernels = None


def _k():
    # deferred import keeps CLI startup fast when kernels are not needed
    global _kernels
    if _kernels is None:
        from . import _kernels as mod
        _kernels = mod
    return _kernels


class FieldMatrix:
    """Rectangular matrix of elements of one FiniteField, stored by index."""

    def __init__(self, field: FiniteField, data):
        if isinstance(data, FieldMatrix):
            data = data._idx
        if isinstance(data, np.ndarray):
            arr = np.array(data, dtype=np.int64)
        else:
            arr = np.array(
                [[self._entry_index(field, e) for e in row] for row in data],
                dtype=np.int64,
            )
        if arr.ndim != 2:
            raise DimensionMismatch(f"matrix data must be 2-D, got shape {arr.shape}")
        rows, cols = arr.shape
        if cols < 1:
            raise DimensionMismatch("a matrix needs at least one column")
        if rows * cols > MAX_MATRIX_ENTRIES:
            raise DimensionMismatch(
                f"{rows}x{cols} exceeds the {MAX_MATRIX_ENTRIES}-entry cap"
            )
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ParamViolation(f"entry index outside [0, {field.q})")
        arr.setflags(write=False)
        self.field = field
        self._idx = arr

    @staticmethod
    def _entry_index(field: FiniteField, e) -> int:
        if isinstance(e, FieldElement):
            if e.field != field:
                raise FieldMismatch(f"entry from {e.field} in a {field} matrix")
            return e.index
        return int(e)

    @classmethod
    def _wrap(cls, field: FiniteField, arr: np.ndarray) -> "FieldMatrix":
        # internal fast path: arr is a fresh int64 array of valid indices
        self = object.__new__(cls)
        arr.setflags(write=False)
        self.field = field
        self._idx = arr
        return self

    @classmethod
    def zeros(cls, field: FiniteField, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "FieldMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self._idx.shape[0]

    @property
    def cols(self) -> int:
        return self._idx.shape[1]

    @property
    def indices(self) -> np.ndarray:
        """Read-only int64 view of the element indices."""
        return self._idx

    def __getitem__(self, key) -> FieldElement:
        i, j = key
        return FieldElement(self.field, int(self._idx[i, j]))

    def row_elements(self, i: int) -> List[FieldElement]:
        return [FieldElement(self.field, int(v)) for v in self._idx[i]]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self._idx.T.copy())

    def conjugate(self, base_q: Optional[int] = None) -> "FieldMatrix":
        """Entrywise x -> x^base_q in a quadratic extension."""
        base_q = _base_q(self.field, base_q)
        table = self.field._conj_table
        return FieldMatrix(self.field, table[self._idx])

    def map_entries(self, table: np.ndarray) -> "FieldMatrix":
        return FieldMatrix(self.field, table[self._idx])

    def hstack(self, other: "FieldMatrix") -> "FieldMatrix":
        if other.field != self.field:
            raise FieldMismatch("cannot stack matrices over different fields")
        if other.rows != self.rows:
            raise DimensionMismatch("row counts differ")
        return FieldMatrix(self.field, np.hstack([self._idx, other._idx]))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "FieldMatrix":
        return FieldMatrix(self.field, self._idx[np.ix_(row_idx, col_idx)])

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        return mat_mul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and other.field == self.field
            and other._idx.shape == self._idx.shape
            and bool(np.array_equal(other._idx, self._idx))
        )

    def __repr__(self):
        return f"FieldMatrix({self.field}, {self.rows}x{self.cols})"


def _base_q(field: FiniteField, base_q: Optional[int]) -> int:
    root = math.isqrt(field.q)
    if root * root != field.q:
        raise NotAQuadraticExtension(f"{field} has no index-2 subfield")
    if base_q is not None and base_q != root:
        raise NotAQuadraticExtension(f"{field} is not GF({base_q}^2)")
    return root


def _same_field(A: FieldMatrix, B: FieldMatrix):
    if A.field != B.field:
        raise FieldMismatch("matrices live over different fields")


def _plane_matmul(f: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact product of index matrices via prime-field coefficient planes.

    Splitting each entry into its m coefficients turns the field product
    into m^2 integer matrix products, recombined through the x^(u+v) mod f
    reduction tensor.  The plane products run as one dgemm when every
    partial sum fits float64 exactly; otherwise as an int64 matmul.
    """
    p, m = f.p, f.m
    r, inner = A.shape
    c = B.shape[1]
    # (m*r, inner) and (inner, m*c) stacks of coefficient planes
    if inner * (p - 1) ** 2 < 2**52:
        # every partial sum is an exact float64 integer
        cf = f.coeffs_f64
        Abig = cf[A].transpose(2, 0, 1).reshape(m * r, inner)
        Bbig = cf[B].transpose(0, 2, 1).reshape(inner, m * c)
        P = (Abig @ Bbig).astype(np.int64)
    else:
        Abig = f.coeffs[A].transpose(2, 0, 1).reshape(m * r, inner)
        Bbig = f.coeffs[B].transpose(0, 2, 1).reshape(inner, m * c)
        P = Abig @ Bbig
    if inner * (p - 1) ** 3 * m * m >= 2**62:
        P %= p
    flat = P.reshape(m, r, m, c).transpose(1, 3, 0, 2).reshape(r * c, m * m)
    coeff_out = (flat @ f.reduction.reshape(m * m, m)) % p
    return (coeff_out @ f._pows).reshape(r, c)


def mat_mul(A: FieldMatrix, B: FieldMatrix) -> FieldMatrix:
    _same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"{A.rows}x{A.cols} @ {B.rows}x{B.cols}")
    f = A.field
    if A.rows == 0:
        return FieldMatrix(f, np.zeros((0, B.cols), dtype=np.int64))
    return FieldMatrix._wrap(f, _plane_matmul(f, A.indices, B.indices))


def gram(G: FieldMatrix, inner: str, base_q: Optional[int] = None) -> FieldMatrix:
    """G G^T (euclidean) or G conj(G)^T (hermitian) as a k x k matrix."""
    f = G.field
    if inner == "euclidean":
        other_idx = G.indices.T
    elif inner == "hermitian":
        _base_q(f, base_q)
        other_idx = f._conj_table[G.indices].T
    else:
        raise ParamViolation(f"unknown inner product {inner!r}")
    return FieldMatrix._wrap(f, _plane_matmul(f, G.indices, other_idx))


def _det_generic(field: FiniteField, M: np.ndarray) -> int:
    M = M.copy()
    n = M.shape[0]
    d = 1
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if M[r, col]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != col:
            M[[col, piv]] = M[[piv, col]]
            d = field.neg_idx(d)
        pivot = int(M[col, col])
        d = field.mul_idx(d, pivot)
        ip = field.inv_idx(pivot)
        for r in range(col + 1, n):
            fct = int(M[r, col])
            if not fct:
                continue
            fct = field.mul_idx(fct, ip)
            for j in range(col, n):
                v = int(M[col, j])
                if v:
                    M[r, j] = field.add_idx(int(M[r, j]), field.neg_idx(field.mul_idx(fct, v)))
    return d


def determinant(M: FieldMatrix) -> FieldElement:
    if M.rows != M.cols:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no determinant")
    f = M.field
    if M.rows == 0:
        return f.one
    if f.has_dense_tables:
        work = M.indices.copy()
        d = _k().det_in_place(work, f.mul_table, f.add_table, f.inv_table, f.neg_table)
        return FieldElement(f, int(d))
    return FieldElement(f, _det_generic(f, M.indices))


def _rref_generic(field: FiniteField, M: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    M = M.copy()
    rows, cols = M.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        ip = field.inv_idx(int(M[r, c]))
        if ip != 1:
            for j in range(c, cols):
                if M[r, j]:
                    M[r, j] = field.mul_idx(int(M[r, j]), ip)
        for i in range(rows):
            if i == r or not M[i, c]:
                continue
            fct = int(M[i, c])
            M[i, c] = 0
            for j in range(c + 1, cols):
                v = int(M[r, j])
                if v:
                    M[i, j] = field.add_idx(int(M[i, j]), field.neg_idx(field.mul_idx(fct, v)))
        pivots.append(c)
        r += 1
    return M, pivots


def _rref(M: FieldMatrix) -> Tuple[np.ndarray, List[int]]:
    f = M.field
    if f.has_dense_tables:
        work = M.indices.copy()
        pivots = np.empty(max(M.rows, 1), dtype=np.int64)
        r = _k().rref_in_place(work, pivots, f.mul_table, f.add_table, f.inv_table, f.neg_table)
        return work, [int(c) for c in pivots[:r]]
    return _rref_generic(f, M.indices)


def rank(M: FieldMatrix) -> int:
    if M.rows == 0:
        return 0
    f = M.field
    if f.has_dense_tables:
        work = M.indices.copy()
        return int(_k().rank_in_place(work, f.mul_table, f.add_table, f.inv_table, f.neg_table))
    return len(_rref_generic(f, M.indices)[1])


def systematic_form(G: FieldMatrix) -> Tuple[FieldMatrix, Tuple[int, ...]]:
    """Row-reduce to [I_k | A] (pivot columns pulled to the front).

    Returns the reduced matrix and the column permutation pi, where output
    column j came from input column pi[j]; pi is the identity whenever the
    first k columns are independent (always the case for MDS input).
    """
    R, pivots = _rref(G)
    if len(pivots) < G.rows:
        raise RankDeficient(f"rank {len(pivots)} < {G.rows} rows")
    free = [c for c in range(G.cols) if c not in set(pivots)]
    perm = tuple(pivots + free)
    return FieldMatrix(G.field, R[:, perm]), perm


def right_kernel(M: FieldMatrix) -> FieldMatrix:
    """Basis of {x : M x^T = 0} as the rows of a (cols - rank) x cols matrix."""
    f = M.field
    R, pivots = _rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    out = np.zeros((len(free), M.cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        out[bi, fc] = 1
        for r, pc in enumerate(pivots):
            out[bi, pc] = f.neg_idx(int(R[r, fc]))
    return FieldMatrix(f, out)


def minor(M: FieldMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> FieldElement:
    """Determinant of the selected square submatrix."""
    rows = list(row_idx)
    cols = list(col_idx)
    if not rows or len(rows) != len(cols):
        raise BadIndexSet("need equal-length nonempty index lists")
    for idx, bound in ((rows, M.rows), (cols, M.cols)):
        if any(not isinstance(i, int) or not 0 <= i < bound for i in idx):
            raise BadIndexSet(f"index out of range in {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise BadIndexSet(f"indices must be strictly increasing, got {idx}")
    return determinant(M.submatrix(rows, cols))


def entrywise_inverse(M: FieldMatrix) -> FieldMatrix:
    if np.any(M.indices == 0):
        raise DivisionByZero("matrix has zero entries")
    return M.map_entries(M.field.inv_table)


# -- text round-trip ----------------------------------------------------

def format_matrix(M: FieldMatrix) -> str:
    """Matrix text format: header "rows cols q", then row-major indices."""
    lines = [f"{M.rows} {M.cols} {M.field.q}"]
    for i in range(M.rows):
        lines.append(" ".join(str(int(v)) for v in M.indices[i]))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, field: Optional[FiniteField] = None) -> FieldMatrix:
    tokens = text.split()
    if len(tokens) < 3:
        raise ParamViolation("matrix text needs a 'rows cols q' header")
    rows, cols, q = (int(t) for t in tokens[:3])
    body = tokens[3:]
    if len(body) != rows * cols:
        raise ParamViolation(f"expected {rows * cols} entries, found {len(body)}")
    if field is None:
        field = field_for_order(q)
    elif field.q != q:
        raise FieldMismatch(f"matrix declares q={q} but field is {field}")
    data = np.array([int(t) for t in body], dtype=np.int64).reshape(rows, cols)
    return FieldMatrix(field, data)


def field_for_order(q: int, modulus: Optional[Sequence[int]] = None) -> FiniteField:
    """GF(q) with the default modulus, q an odd prime power."""
    if q < 3:
        raise ParamViolation(f"q must be an odd prime power, got {q}")
    p = gf.prime_factors(q)[0]
    m = 0
    rest = q
    while rest % p == 0 and rest > 1:
        rest //= p
        m += 1
    if rest != 1:
        raise ParamViolation(f"{q} is not a prime power")
    return gf.make_field(p, m, modulus=modulus)
