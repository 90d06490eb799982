"""Exact arithmetic in GF(p^m), p an odd prime.

Field elements are canonical integers in [0, q), q = p^m: the element with
polynomial-basis coefficients (c_0, ..., c_{m-1}) has index sum(c_i * p^i).
Zero is index 0; every nonzero element is some power of the distinguished
primitive element gamma, realized through log/antilog tables.

The modulus is a monic primitive polynomial of degree m over GF(p); by
default the one whose coefficient encoding sum(c_i * p^i), c_m = 1 implied,
is smallest.  gamma is the residue class of x, so antilog[e] = index of
gamma^e and the tables define the discrete-log bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    CodingError,
    DivisionByZero,
    FieldMismatch,
    InvalidModulus,
    NoPrimitivePolynomial,
    NotAQuadraticExtension,
    NotASubfieldOrder,
    NotOddCharacteristic,
    NotPrime,
    OrderCapExceeded,
    ParamViolation,
)

DEFAULT_ORDER_CAP = 2**20

# q x q add/mul lookup tables are built eagerly up to this order; they back
# the fast matrix kernels.  Larger fields fall back to scalar arithmetic.
DENSE_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def p_adic_valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n (n >= 1, p prime)."""
    if n < 1:
        raise ParamViolation(f"valuation needs a positive integer, got {n}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


class FieldElement:
    """An element of a specific FiniteField, identified by its index."""

    __slots__ = ("field", "index")

    def __init__(self, field: "FiniteField", index: int):
        self.field = field
        self.index = index

    def _peer(self, other) -> int:
        if not isinstance(other, FieldElement):
            raise FieldMismatch(f"cannot combine field element with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"elements of {self.field} and {other.field} cannot mix")
        return other.index

    def __add__(self, other):
        return FieldElement(self.field, self.field.add_idx(self.index, self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub_idx(self.index, self._peer(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul_idx(self.index, self._peer(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div_idx(self.index, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_idx(self.index))

    def __pow__(self, e):
        if not isinstance(e, int):
            raise ParamViolation("exponent must be an integer")
        return FieldElement(self.field, self.field.pow_idx(self.index, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_idx(self.index))

    def is_zero(self) -> bool:
        return self.index == 0

    def log(self) -> int:
        """Discrete log base gamma; DivisionByZero on the zero element."""
        if self.index == 0:
            raise DivisionByZero("zero has no discrete log")
        return self.field.log_table[self.index]

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.field == self.field
            and other.index == self.index
        )

    def __hash__(self):
        return hash((self.field.q, self.index))

    def __repr__(self):
        return f"GF({self.field.q})[{self.index}]"


class FiniteField:
    """GF(p^m) with a primitive modulus and full log/antilog tables.

    Immutable after construction; safe to share between workers.
    """

    def __init__(
        self,
        p: int,
        m: int,
        modulus: Optional[Sequence[int]] = None,
        order_cap: int = DEFAULT_ORDER_CAP,
    ):
        if not isinstance(p, int) or p < 2 or p % 2 == 0:
            raise NotOddCharacteristic(f"characteristic must be an odd prime, got {p}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if not isinstance(m, int) or m < 1:
            raise ParamViolation(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > order_cap:
            raise OrderCapExceeded(f"q = {p}^{m} = {q} exceeds cap {order_cap}")

        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            self.modulus, tables = self._search_modulus()
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1 or mod[m] != 1:
                raise InvalidModulus(
                    f"modulus must be monic of degree {m} (got {list(modulus)})"
                )
            tables = self._try_tables(mod[:m])
            if tables is None:
                raise InvalidModulus(
                    f"{list(modulus)} is not primitive over GF({p})"
                )
            self.modulus = mod
        self.antilog_table, self.log_table = tables
        self._finish_tables()

    # -- construction helpers ------------------------------------------

    def _mulx(self, vec: List[int], low: Tuple[int, ...]) -> List[int]:
        # multiply by x in the polynomial basis, reducing by the modulus
        p, m = self.p, self.m
        carry = vec[-1]
        out = [0] + vec[:-1]
        if carry:
            for i in range(m):
                out[i] = (out[i] - carry * low[i]) % p
        return out

    def _try_tables(self, low: Tuple[int, ...]):
        """Build antilog/log for modulus x^m + low(x); None unless x has order q-1."""
        p, m, q = self.p, self.m, self.q
        one = [1] + [0] * (m - 1)
        antilog = [0] * (q - 1)
        log = [-1] * q
        vec = one[:]
        for e in range(q - 1):
            idx = 0
            for i in range(m - 1, -1, -1):
                idx = idx * p + vec[i]
            if idx == 0 or (e > 0 and idx == 1):
                return None  # hit zero (reducible) or returned to 1 early
            antilog[e] = idx
            log[idx] = e
            vec = self._mulx(vec, low)
        if vec != one:
            return None  # order of x exceeds or misses q-1
        return antilog, log

    def _search_modulus(self):
        p, m, q = self.p, self.m, self.q
        for enc in range(1, q):
            low = tuple((enc // p**i) % p for i in range(m))
            tables = self._try_tables(low)
            if tables is not None:
                return low + (1,), tables
        raise NoPrimitivePolynomial(f"no primitive polynomial of degree {m} over GF({p})")

    def _finish_tables(self):
        p, m, q = self.p, self.m, self.q
        idx = np.arange(q, dtype=np.int64)
        self.coeffs = np.empty((q, m), dtype=np.int64)
        rest = idx.copy()
        for i in range(m):
            self.coeffs[:, i] = rest % p
            rest //= p
        self._pows = p ** np.arange(m, dtype=np.int64)
        self.coeffs_f64 = self.coeffs.astype(np.float64)
        # reduction[u, v, w]: coefficient of x^w in x^(u+v) mod modulus;
        # turns products of coefficient planes back into coefficients
        xpow = np.zeros((2 * m - 1, m), dtype=np.int64)
        vec = [1] + [0] * (m - 1)
        xpow[0] = vec
        for e in range(1, 2 * m - 1):
            vec = self._mulx(vec, self.modulus[:m])
            xpow[e] = vec
        self.reduction = xpow[np.add.outer(np.arange(m), np.arange(m))]
        self.antilog_np = np.asarray(self.antilog_table, dtype=np.int64)
        self.log_np = np.asarray(self.log_table, dtype=np.int64)
        self.neg_table = ((-self.coeffs) % p) @ self._pows
        inv = np.zeros(q, dtype=np.int64)
        nz = self.antilog_np
        inv[nz] = self.antilog_np[(-(np.arange(q - 1, dtype=np.int64))) % (q - 1)]
        self.inv_table = inv

        if q <= DENSE_TABLE_LIMIT:
            summed = (self.coeffs[:, None, :] + self.coeffs[None, :, :]) % p
            self.add_table = summed @ self._pows
            mul = np.zeros((q, q), dtype=np.int64)
            e = (self.log_np[nz][:, None] + self.log_np[nz][None, :]) % (q - 1)
            mul[np.ix_(nz, nz)] = self.antilog_np[e]
            self.mul_table = mul
        else:
            self.add_table = None
            self.mul_table = None

        if m % 2 == 0:
            base = p ** (m // 2)
            conj = np.zeros(q, dtype=np.int64)
            conj[nz] = self.antilog_np[(self.log_np[nz] * base) % (q - 1)]
            self._conj_table = conj
        else:
            self._conj_table = None

        for arr in (self.coeffs, self.coeffs_f64, self.antilog_np, self.log_np,
                    self.neg_table, self.inv_table, self._conj_table,
                    self.add_table, self.mul_table, self.reduction):
            if arr is not None:
                arr.setflags(write=False)

    # -- scalar arithmetic on indices ----------------------------------

    def add_idx(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return int(self.add_table[a, b])
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg_idx(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub_idx(self, a: int, b: int) -> int:
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero is not invertible")
        return self.antilog_table[(-self.log_table[a]) % (self.q - 1)]

    def div_idx(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self.antilog_table[(self.log_table[a] - self.log_table[b]) % (self.q - 1)]

    def pow_idx(self, a: int, e: int) -> int:
        # 0^0 = 1, 0^positive = 0, 0^negative undefined; nonzero exponents
        # reduce mod q-1.
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("zero to a negative power")
        return self.antilog_table[(self.log_table[a] * e) % (self.q - 1)]

    def conj_idx(self, a: int, base_q: int) -> int:
        if base_q * base_q != self.q:
            raise NotAQuadraticExtension(
                f"GF({self.q}) is not a quadratic extension of GF({base_q})"
            )
        return int(self._conj_table[a])

    # -- element access -------------------------------------------------

    def element(self, index: int) -> FieldElement:
        if not isinstance(index, int) or not 0 <= index < self.q:
            raise ParamViolation(f"index {index} outside [0, {self.q})")
        return FieldElement(self, index)

    def from_coeffs(self, coeffs: Iterable[int]) -> FieldElement:
        cs = list(coeffs)
        if len(cs) > self.m:
            raise ParamViolation(f"at most {self.m} coefficients expected")
        idx = 0
        for i, c in enumerate(cs):
            idx += (int(c) % self.p) * self.p**i
        return FieldElement(self, idx)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gamma(self) -> FieldElement:
        return FieldElement(self, self.antilog_table[1])

    @property
    def gamma_index(self) -> int:
        return self.antilog_table[1]

    def gamma_pow(self, e: int) -> FieldElement:
        return FieldElement(self, self.antilog_table[e % (self.q - 1)])

    def int_element(self, n: int) -> FieldElement:
        """Image of the rational integer n under Z -> GF(p^m)."""
        return FieldElement(self, n % self.p)

    def all_elements(self) -> List[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    def nonzero_elements(self) -> List[FieldElement]:
        """All q-1 nonzero elements, in gamma-power order."""
        return [FieldElement(self, i) for i in self.antilog_table]

    def subfield_orders(self) -> List[int]:
        return [self.p**a for a in range(1, self.m + 1) if self.m % a == 0]

    @property
    def has_dense_tables(self) -> bool:
        return self.mul_table is not None

    def __eq__(self, other):
        if other is self:
            return True
        return (
            isinstance(other, FiniteField)
            and other.p == self.p
            and other.m == self.m
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


@dataclass(frozen=True)
class SubfieldView:
    """The subfield of order s inside a larger field: all x with x^s = x."""

    field: FiniteField
    sub_order: int
    members: Tuple[FieldElement, ...]

    @property
    def index_set(self):
        return frozenset(x.index for x in self.members)

    def __contains__(self, x: FieldElement) -> bool:
        return isinstance(x, FieldElement) and x.field == self.field and x.index in self.index_set


def make_field(p: int, m: int, modulus: Optional[Sequence[int]] = None,
               order_cap: int = DEFAULT_ORDER_CAP) -> FiniteField:
    """Construct GF(p^m) with the default (or a given) primitive modulus."""
    return FiniteField(p, m, modulus=modulus, order_cap=order_cap)


def primitive_moduli(p: int, m: int, count: int) -> List[Tuple[int, ...]]:
    """First `count` primitive moduli in the deterministic search order."""
    found: List[Tuple[int, ...]] = []
    probe = FiniteField(p, m)
    enc = 0
    q = p**m
    while len(found) < count and enc < q - 1:
        enc += 1
        low = tuple((enc // p**i) % p for i in range(m))
        if probe._try_tables(low) is not None:
            found.append(low + (1,))
    if len(found) < count:
        raise NoPrimitivePolynomial(
            f"only {len(found)} primitive polynomials of degree {m} over GF({p})"
        )
    return found


def primitive_element(field: FiniteField) -> FieldElement:
    """gamma, with its multiplicative order q-1 re-verified."""
    g = field.gamma
    order = field.q - 1
    if field.pow_idx(g.index, order) != 1:
        raise NoPrimitivePolynomial("gamma^(q-1) != 1; corrupt tables")
    for r in prime_factors(order):
        if field.pow_idx(g.index, order // r) == 1:
            raise NoPrimitivePolynomial(f"gamma has order dividing (q-1)/{r}")
    return g


def field_arith(x: FieldElement, op: str, other: Optional[FieldElement] = None,
                exponent: Optional[int] = None) -> FieldElement:
    """Dispatch a named field operation; binary ops require `other`."""
    if op in ("add", "sub", "mul", "div"):
        if other is None:
            raise ParamViolation(f"'{op}' needs a second operand")
        return {
            "add": x.__add__, "sub": x.__sub__,
            "mul": x.__mul__, "div": x.__truediv__,
        }[op](other)
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "pow":
        if exponent is None:
            raise ParamViolation("'pow' needs an exponent")
        return x**exponent
    raise ParamViolation(f"unknown operation {op!r}")


def conjugate(x: FieldElement, base_q: int) -> FieldElement:
    """x -> x^base_q in GF(base_q^2); applying it twice is the identity."""
    return FieldElement(x.field, x.field.conj_idx(x.index, base_q))


def subfield(field: FiniteField, s: int) -> SubfieldView:
    """The subfield of order s = p^a, a | m, as an explicit member set."""
    p, m = field.p, field.m
    a, rest = 0, s
    while rest % p == 0:
        rest //= p
        a += 1
    if rest != 1 or a == 0 or m % a != 0:
        raise NotASubfieldOrder(f"GF({field.q}) has no subfield of order {s}")
    members = tuple(
        FieldElement(field, i)
        for i in range(field.q)
        if field.pow_idx(i, s) == i
    )
    if len(members) != s:
        raise CodingError(f"subfield of order {s}: found {len(members)} members")
    return SubfieldView(field, s, members)


def subfield_primitive_element(field: FiniteField, s: int) -> FieldElement:
    """A generator of the order-s subfield's multiplicative group: gamma^((q-1)/(s-1))."""
    subfield(field, s)  # validates s
    return field.gamma_pow((field.q - 1) // (s - 1))


def subfield_embedding(sub: FiniteField, field: FiniteField) -> List[int]:
    """Index map realizing a field embedding GF(s) -> GF(q), s = p^a, a | m.

    The image of sub's gamma is the smallest-index root of sub's modulus in
    the big field; elements map through their polynomial-basis coordinates.
    """
    if sub.p != field.p or field.m % sub.m != 0:
        raise NotASubfieldOrder(f"{sub} does not embed in {field}")
    root = None
    for i in range(field.q):
        acc = 0
        for c in reversed(sub.modulus):
            acc = field.add_idx(field.mul_idx(acc, i), c % field.p)
        if acc == 0:
            root = i
            break
    if root is None:
        raise CodingError(f"modulus of {sub} has no root in {field}")
    powers = [1]
    for _ in range(1, sub.m):
        powers.append(field.mul_idx(powers[-1], root))
    out = []
    for idx in range(sub.q):
        acc = 0
        rest = idx
        for i in range(sub.m):
            c = rest % sub.p
            rest //= sub.p
            if c:
                acc = field.add_idx(acc, field.mul_idx(c, powers[i]))
        out.append(acc)
    return out


def power_sum(alphas: Sequence[FieldElement], f: int) -> FieldElement:
    """sum(alpha_i^f) over a nonempty common-field list, f >= 0."""
    if not alphas:
        raise ParamViolation("power_sum needs at least one element")
    if f < 0:
        raise ParamViolation("power_sum exponent must be nonnegative")
    field = alphas[0].field
    acc = 0
    for a in alphas:
        if not isinstance(a, FieldElement) or a.field != field:
            raise FieldMismatch("power_sum arguments must share one field")
        acc = field.add_idx(acc, field.pow_idx(a.index, f))
    return FieldElement(field, acc)
