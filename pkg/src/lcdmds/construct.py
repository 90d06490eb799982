"""Generator-matrix constructions: GRS, twisted RS, Roth-Lempel.

Twisted RS codes evaluate f(x) = sum(a_i x^i, i < k) + eta * a_h * x^(k-1+t)
at n distinct points, so the generator is Vandermonde except in row h, which
carries the extra eta * alpha^(k-1+t) term.  Roth-Lempel codes append two
structured columns to a k x n Vandermonde block:

    column n:   (0, ..., 0, 1)^T
    column n+1: (0, ..., 0, 1, delta)^T

Structured evaluation-point vectors: the k-th roots of unity (optionally
prefixed by 0) and their gamma- or gamma^r-scaled unions, with r =
2^v2(group order).  Setting subfield_order = s draws the same shapes from
the order-s subfield, which is what the field-lift constructions need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .codes import LinearCode
from .errors import (
    DistinctnessViolation,
    DivisibilityViolation,
    DuplicatePoint,
    FieldMismatch,
    ParamViolation,
    ZeroMultiplier,
)
from .gf import FieldElement, FiniteField, p_adic_valuation, prime_factors, subfield
from .linalg import FieldMatrix


class _Infinity:
    def __repr__(self):
        return "infinity"


INFINITY = _Infinity()

ROOTS_OF_UNITY = "roots_of_unity"
ROOTS_WITH_ZERO = "roots_with_zero"
ROOTS_UNION_GAMMA_SCALED = "roots_union_gamma_scaled"
ROOTS_UNION_GAMMA_R_SCALED = "roots_union_gammaR_scaled"
ALPHA_KINDS = (
    ROOTS_OF_UNITY,
    ROOTS_WITH_ZERO,
    ROOTS_UNION_GAMMA_SCALED,
    ROOTS_UNION_GAMMA_R_SCALED,
)


def _common_field(elems: Sequence[FieldElement], what: str) -> FiniteField:
    field = None
    for e in elems:
        if isinstance(e, _Infinity):
            continue
        if not isinstance(e, FieldElement):
            raise ParamViolation(f"{what} must be field elements")
        if field is None:
            field = e.field
        elif e.field != field:
            raise FieldMismatch(f"{what} span two different fields")
    if field is None:
        raise ParamViolation(f"{what} cannot be all-infinity")
    return field


def grs_generator(alphas: Sequence, v: Sequence[FieldElement], k: int) -> FieldMatrix:
    """Generator of GRS_k(alpha, v); column j is v_j (1, a_j, ..., a_j^(k-1))^T.

    alphas may contain the INFINITY marker once; its column is v_j e_(k-1),
    the coefficient-of-x^(k-1) convention.
    """
    n = len(alphas)
    if len(v) != n:
        raise ParamViolation(f"|v| = {len(v)} but |alpha| = {n}")
    if not 1 <= k <= n:
        raise ParamViolation(f"need 1 <= k <= n, got k={k}, n={n}")
    seen = set()
    inf_seen = False
    for a in alphas:
        if isinstance(a, _Infinity):
            if inf_seen:
                raise DuplicatePoint("infinity appears twice")
            inf_seen = True
        elif isinstance(a, FieldElement):
            if a.index in seen:
                raise DuplicatePoint(f"evaluation point {a!r} repeated")
            seen.add(a.index)
    field = _common_field(alphas, "evaluation points")
    cols = np.zeros((k, n), dtype=np.int64)
    for j, (a, vj) in enumerate(zip(alphas, v)):
        if not isinstance(vj, FieldElement) or vj.field != field:
            raise FieldMismatch("column multipliers must lie in the same field")
        if vj.index == 0:
            raise ZeroMultiplier(f"v[{j}] is zero")
        if isinstance(a, _Infinity):
            cols[k - 1, j] = vj.index
        else:
            for i in range(k):
                cols[i, j] = field.mul_idx(vj.index, field.pow_idx(a.index, i))
    return FieldMatrix(field, cols)


@dataclass(frozen=True)
class TwistedRSParams:
    """Evaluation points plus (k, t, h, eta) for a single-twist RS code."""

    alphas: Tuple[FieldElement, ...]
    k: int
    t: int
    h: int
    eta: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        field = _common_field(self.alphas, "evaluation points")
        n = len(self.alphas)
        if len({a.index for a in self.alphas}) != n:
            raise ParamViolation("evaluation points must be pairwise distinct")
        if not 0 <= self.h < self.k:
            raise ParamViolation(f"need 0 <= h < k, got h={self.h}, k={self.k}")
        if not self.k < n:
            raise ParamViolation(f"need k < n, got k={self.k}, n={n}")
        if self.k > field.q:
            raise ParamViolation(f"need k <= q, got k={self.k}, q={field.q}")
        if not 0 < self.t <= n - self.k:
            raise ParamViolation(f"need 0 < t <= n-k, got t={self.t}")
        if not isinstance(self.eta, FieldElement) or self.eta.field != field:
            raise FieldMismatch("eta must lie in the evaluation field")
        if self.eta.index == 0:
            raise ParamViolation("eta must be nonzero")
        object.__setattr__(self, "_alpha_idx",
                           np.array([a.index for a in self.alphas], dtype=np.int64))

    def with_eta(self, eta: FieldElement) -> "TwistedRSParams":
        """Same code shape with a different twist coefficient.

        Skips the evaluation-point re-validation, which makes eta sweeps
        over a fixed alpha vector cheap.
        """
        if not isinstance(eta, FieldElement) or eta.field != self.field:
            raise FieldMismatch("eta must lie in the evaluation field")
        if eta.index == 0:
            raise ParamViolation("eta must be nonzero")
        clone = object.__new__(TwistedRSParams)
        for name in ("alphas", "k", "t", "h", "_alpha_idx"):
            object.__setattr__(clone, name, getattr(self, name))
        object.__setattr__(clone, "eta", eta)
        return clone

    @property
    def field(self) -> FiniteField:
        return self.alphas[0].field

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def twist_degree(self) -> int:
        return self.k - 1 + self.t


def _power_rows(field: FiniteField, alpha_idx: np.ndarray, exps) -> np.ndarray:
    """Rows alpha^e for each exponent e >= 0, via the log tables."""
    exps = np.asarray(exps, dtype=np.int64)
    out = np.zeros((exps.shape[0], alpha_idx.shape[0]), dtype=np.int64)
    nz = alpha_idx != 0
    logs = field.log_np[alpha_idx[nz]]
    out[:, nz] = field.antilog_np[(exps[:, None] * logs[None, :]) % (field.q - 1)]
    out[exps == 0, :] = 1  # 0^0 = 1 overrides the zero columns
    return out


def twisted_rs_generator(params: TwistedRSParams) -> FieldMatrix:
    """k x n matrix: row i is alpha^i, except row h is alpha^h + eta alpha^(k-1+t)."""
    f = params.field
    k, l = params.k, params.twist_degree
    eta = params.eta.index
    rows = _power_rows(f, params._alpha_idx, list(range(k)) + [l])
    out, twist = rows[:k], rows[k]
    if f.has_dense_tables:
        out[params.h] = f.add_table[out[params.h], f.mul_table[eta, twist]]
    else:
        out[params.h] = [
            f.add_idx(int(v), f.mul_idx(eta, int(w)))
            for v, w in zip(out[params.h], twist)
        ]
    return FieldMatrix._wrap(f, out)


def twisted_rs_code(params: TwistedRSParams) -> LinearCode:
    return LinearCode(twisted_rs_generator(params))


@dataclass(frozen=True)
class RothLempelParams:
    """n distinct evaluation points, dimension k >= 3 and the corner element delta."""

    alphas: Tuple[FieldElement, ...]
    k: int
    delta: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        field = _common_field(self.alphas, "evaluation points")
        n = len(self.alphas)
        if len({a.index for a in self.alphas}) != n:
            raise ParamViolation("evaluation points must be pairwise distinct")
        if self.k < 3:
            raise ParamViolation(f"need k >= 3, got k={self.k}")
        # n = k is allowed (the [k+2, k] LCD family); n >= k+1 is what the
        # non-RS guarantee needs, and that is enforced by the classifier
        if not self.k <= n <= field.q:
            raise ParamViolation(f"need k <= n <= q, got k={self.k}, n={n}, q={field.q}")
        if not isinstance(self.delta, FieldElement) or self.delta.field != field:
            raise FieldMismatch("delta must lie in the evaluation field")
        object.__setattr__(self, "_alpha_idx",
                           np.array([a.index for a in self.alphas], dtype=np.int64))

    def with_delta(self, delta: FieldElement) -> "RothLempelParams":
        """Same evaluation points with a different corner element."""
        if not isinstance(delta, FieldElement) or delta.field != self.field:
            raise FieldMismatch("delta must lie in the evaluation field")
        clone = object.__new__(RothLempelParams)
        for name in ("alphas", "k", "_alpha_idx"):
            object.__setattr__(clone, name, getattr(self, name))
        object.__setattr__(clone, "delta", delta)
        return clone

    @property
    def field(self) -> FiniteField:
        return self.alphas[0].field

    @property
    def n(self) -> int:
        return len(self.alphas)


def roth_lempel_generator(params: RothLempelParams) -> FieldMatrix:
    """k x (n+2) matrix: Vandermonde block plus the two structured columns."""
    f = params.field
    k, n = params.k, params.n
    alpha_idx = params._alpha_idx
    out = np.zeros((k, n + 2), dtype=np.int64)
    out[:, :n] = _power_rows(f, alpha_idx, range(k))
    out[k - 1, n] = 1
    out[k - 2, n + 1] = 1
    out[k - 1, n + 1] = params.delta.index
    return FieldMatrix(f, out)


def roth_lempel_code(params: RothLempelParams) -> LinearCode:
    return LinearCode(roth_lempel_generator(params))


@dataclass(frozen=True)
class StructuredAlpha:
    """A structured evaluation-point vector, with its construction inputs."""

    kind: str
    field: FiniteField
    k: int
    alphas: Tuple[FieldElement, ...]
    scale: Optional[FieldElement]
    subfield_order: Optional[int]


def structured_alpha(kind: str, field: FiniteField, k: int,
                     subfield_order: Optional[int] = None) -> StructuredAlpha:
    """Build a structured evaluation vector over GF(q) or its order-s subfield.

    The group order N is s-1 (when subfield_order = s is given) or q-1.
    Every kind needs k | N; the gamma-scaled union needs k < N/2 so the two
    blocks stay disjoint; the gamma^r union needs an odd prime p with
    v_p(k) < v_p(N).  Distinctness is re-verified on the result.
    """
    if kind not in ALPHA_KINDS:
        raise ParamViolation(f"unknown alpha kind {kind!r}")
    if subfield_order is not None:
        subfield(field, subfield_order)  # validates the order
        group = subfield_order - 1
    else:
        group = field.q - 1
    step = (field.q - 1) // group
    if k < 1:
        raise ParamViolation(f"need k >= 1, got {k}")
    if group % k != 0:
        raise DivisibilityViolation(f"k = {k} does not divide {group}")
    # the k-th roots of unity inside the chosen group, ending at 1
    roots = [field.gamma_pow(step * (group // k) * i) for i in range(1, k + 1)]
    gamma_n = field.gamma_pow(step)

    scale: Optional[FieldElement] = None
    if kind == ROOTS_OF_UNITY:
        alphas = roots
    elif kind == ROOTS_WITH_ZERO:
        alphas = [field.zero] + roots
    elif kind == ROOTS_UNION_GAMMA_SCALED:
        if not k < group / 2:
            raise DivisibilityViolation(
                f"k = {k} is not below half the group order {group}"
            )
        scale = gamma_n
        alphas = roots + [scale * a for a in roots]
    else:  # ROOTS_UNION_GAMMA_R_SCALED
        if not any(
            p != 2 and p_adic_valuation(k, p) < p_adic_valuation(group, p)
            for p in prime_factors(group)
        ):
            raise DivisibilityViolation(
                f"no odd prime p has v_p({k}) < v_p({group})"
            )
        r = 2 ** p_adic_valuation(group, 2)
        scale = gamma_n**r
        alphas = roots + [scale * a for a in roots]

    if len({a.index for a in alphas}) != len(alphas):
        raise DistinctnessViolation(f"{kind} vector has repeated entries")
    return StructuredAlpha(kind, field, k, tuple(alphas), scale, subfield_order)
