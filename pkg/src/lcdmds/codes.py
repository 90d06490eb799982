"""Linear codes over a FiniteField: duals, hulls, LCD / MDS predicates.

The LCD test is the Gram-nonsingularity criterion: a code with generator
matrix G is Euclidean (Hermitian) LCD exactly when G G^T (G conj(G)^T) is
nonsingular.  MDS is decided by the maximal-minor criterion - every k x k
column minor of the generator nonzero - because desk-scale codes have
few column subsets but far too many codewords to enumerate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Dict, Optional

import numpy as np

from . import linalg
from .errors import (
    BudgetExceeded,
    CombinationBudgetExceeded,
    ParamViolation,
    RankDeficient,
)
from .gf import FiniteField
from .linalg import FieldMatrix, field_for_order

DEFAULT_MINOR_BUDGET = 10**6
DEFAULT_CODEWORD_BUDGET = 2**24


class LinearCode:
    """An [n, k] linear code given by a full-row-rank k x n generator matrix."""

    def __init__(self, gen: FieldMatrix):
        if gen.rows < 1:
            raise ParamViolation("a code needs at least one generator row")
        if gen.rows > gen.cols:
            raise ParamViolation(f"k = {gen.rows} exceeds n = {gen.cols}")
        if linalg.rank(gen) != gen.rows:
            raise RankDeficient("generator matrix is not full row rank")
        self.gen = gen
        self.field = gen.field

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def to_json_dict(self) -> dict:
        return {
            "q": self.field.q,
            "k": self.k,
            "n": self.n,
            "generator": [[int(v) for v in row] for row in self.gen.indices],
        }

    @classmethod
    def from_json_dict(cls, d: dict, field: Optional[FiniteField] = None) -> "LinearCode":
        if field is None:
            field = field_for_order(int(d["q"]))
        elif field.q != int(d["q"]):
            raise ParamViolation(f"code declares q={d['q']} but field is {field}")
        gen = FieldMatrix(field, d["generator"])
        if gen.rows != int(d["k"]) or gen.cols != int(d["n"]):
            raise ParamViolation("generator shape disagrees with declared (n, k)")
        return cls(gen)

    def __repr__(self):
        return f"[{self.n},{self.k}] code over {self.field}"


@dataclass
class CodeVerdict:
    """Audit record of property checks; None means not checked."""

    q: int
    n: int
    k: int
    is_euclidean_lcd: Optional[bool] = None
    is_hermitian_lcd: Optional[bool] = None
    is_mds: Optional[bool] = None
    is_non_grs: Optional[bool] = None
    non_grs_verdict: Optional[str] = None
    hull_dim_euclidean: Optional[int] = None
    hull_dim_hermitian: Optional[int] = None
    min_distance: Optional[int] = None
    min_distance_method: Optional[str] = None
    evidence: Optional[dict] = None
    errors: Dict[str, str] = dc_field(default_factory=dict)

    def validate(self):
        if self.is_euclidean_lcd is not None and self.hull_dim_euclidean is not None:
            assert self.is_euclidean_lcd == (self.hull_dim_euclidean == 0)
        if self.is_hermitian_lcd is not None and self.hull_dim_hermitian is not None:
            assert self.is_hermitian_lcd == (self.hull_dim_hermitian == 0)
        if self.is_mds and self.min_distance is not None:
            assert self.min_distance == self.n - self.k + 1

    def to_json_dict(self) -> dict:
        out = {
            "q": self.q, "n": self.n, "k": self.k,
            "is_euclidean_lcd": self.is_euclidean_lcd,
            "is_hermitian_lcd": self.is_hermitian_lcd,
            "is_mds": self.is_mds,
            "is_non_grs": self.is_non_grs,
            "non_grs_verdict": self.non_grs_verdict,
            "hull_dim_euclidean": self.hull_dim_euclidean,
            "hull_dim_hermitian": self.hull_dim_hermitian,
            "min_distance": self.min_distance,
            "min_distance_method": self.min_distance_method,
            "evidence": self.evidence,
        }
        if self.errors:
            out["errors"] = dict(self.errors)
        return out


def dual_generator(code: LinearCode, inner: str) -> FieldMatrix:
    """(n-k) x n generator of the Euclidean or Hermitian dual (0 rows if k = n)."""
    if inner == "euclidean":
        return linalg.right_kernel(code.gen)
    if inner == "hermitian":
        return linalg.right_kernel(code.gen.conjugate())
    raise ParamViolation(f"unknown inner product {inner!r}")


def hull_dimension(code: LinearCode, inner: str) -> int:
    """dim(C intersect C^perp) = k - rank of the Gram matrix."""
    return code.k - linalg.rank(linalg.gram(code.gen, inner))


def is_lcd(code: LinearCode, inner: str) -> bool:
    g = linalg.gram(code.gen, inner)
    return not linalg.determinant(g).is_zero()


def is_mds(code: LinearCode, max_combinations: int = DEFAULT_MINOR_BUDGET) -> bool:
    """Maximal-minor criterion: every k x k column minor nonzero."""
    n, k = code.n, code.k
    total = math.comb(n, k)
    if total > max_combinations:
        raise CombinationBudgetExceeded(
            f"C({n},{k}) = {total} column subsets exceed budget {max_combinations}"
        )
    f = code.field
    if f.has_dense_tables:
        from . import _kernels
        combos = np.fromiter(
            itertools.chain.from_iterable(itertools.combinations(range(n), k)),
            dtype=np.int64, count=total * k,
        ).reshape(total, k)
        hit = _kernels.first_zero_column_minor(
            code.gen.indices, combos, f.mul_table, f.add_table, f.inv_table, f.neg_table
        )
        return int(hit) < 0
    for cols in itertools.combinations(range(n), k):
        if linalg.minor(code.gen, list(range(k)), list(cols)).is_zero():
            return False
    return True


def min_distance_bruteforce(code: LinearCode,
                            max_codewords: int = DEFAULT_CODEWORD_BUDGET) -> int:
    """Minimum Hamming weight by enumerating all q^k codewords."""
    q, k, n = code.field.q, code.k, code.n
    total = q**k
    if total > max_codewords:
        raise BudgetExceeded(f"q^k = {total} codewords exceed budget {max_codewords}")
    f = code.field
    if f.has_dense_tables:
        from . import _kernels
        return int(_kernels.min_weight(code.gen.indices, q, f.mul_table, f.add_table))
    best = n + 1
    G = code.gen.indices
    for msg in itertools.product(range(q), repeat=k):
        if not any(msg):
            continue
        w = 0
        for j in range(n):
            acc = 0
            for i in range(k):
                if msg[i] and G[i, j]:
                    acc = f.add_idx(acc, f.mul_idx(msg[i], int(G[i, j])))
            if acc:
                w += 1
        if w < best:
            best = w
    return best
