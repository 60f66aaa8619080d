"""Arithmetic in small finite fields GF(p^e), p^e <= 256.

An element is encoded by the integer ``sum(a_i * p**i)`` where ``a_i`` are the
coefficients of its polynomial representative modulo a fixed monic
irreducible polynomial of degree ``e``.  The modulus for every field is fixed
by a table (see ``MODULUS_TABLE``); fields missing from the table use the
monic irreducible polynomial whose lower coefficients have the smallest code.

Bulk arithmetic works on numpy arrays of codes (dtype ``uint8``) through
lookup tables; GF(2) and prime fields take faster arithmetic routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

MAX_ORDER = 256

# Lower coefficients (a_0, ..., a_{e-1}) of the monic modulus x^e + ...
MODULUS_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0),  # x^3 + x + 1
    (3, 2): (1, 0),  # x^2 + 1
    (2, 4): (1, 1, 0, 0),  # x^4 + x + 1
    (5, 2): (2, 0),  # x^2 + 2
    (3, 3): (1, 2, 0),  # x^3 + 2x + 1
}


class FieldMismatchError(ValueError):
    """Raised when elements or matrices from different fields are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_has_factor_of_degree(coeffs: Sequence[int], p: int, d: int) -> bool:
    """Brute-force check whether the monic polynomial ``coeffs`` (low->high,
    leading 1 included) has a monic factor of degree ``d`` over GF(p)."""
    e = len(coeffs) - 1
    for lower in product(range(p), repeat=d):
        divisor = list(lower) + [1]
        rem = list(coeffs)
        for shift in range(e - d, -1, -1):
            c = rem[shift + d] % p
            if c:
                for i, b in enumerate(divisor):
                    rem[shift + i] = (rem[shift + i] - c * b) % p
        if all(r % p == 0 for r in rem[:d]):
            return True
    return False


def is_irreducible_over_prime_field(coeffs: Sequence[int], p: int) -> bool:
    """Exhaustive factor search for a monic polynomial over GF(p)."""
    e = len(coeffs) - 1
    if e <= 1:
        return e == 1
    return not any(_poly_has_factor_of_degree(coeffs, p, d) for d in range(1, e // 2 + 1))


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lower coefficients of the monic irreducible degree-``e`` polynomial over
    GF(p) whose coefficient code ``sum(a_i p^i)`` is smallest."""
    for code in range(p**e):
        lower = tuple((code // p**i) % p for i in range(e))
        if is_irreducible_over_prime_field(list(lower) + [1], p):
            return lower
    raise ValueError(f"no irreducible polynomial of degree {e} over GF({p})")


class FiniteField:
    """The field GF(p^e) with a fixed modulus.

    Use :func:`GF` to obtain instances; they are cached so equal specs share
    one object and its tables.
    """

    def __init__(self, p: int, e: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1 or p**e > MAX_ORDER:
            raise ValueError(f"GF({p}^{e}) is outside the supported range q <= {MAX_ORDER}")
        self.p = p
        self.e = e
        self.q = p**e
        lower = MODULUS_TABLE.get((p, e)) or least_irreducible(p, e)
        coeffs = list(lower) + [1]
        if not is_irreducible_over_prime_field(coeffs, p):
            raise ValueError(f"modulus {coeffs} is reducible over GF({p})")
        self.modulus = tuple(coeffs)
        self._build_tables()

    # -- construction ----------------------------------------------------
    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        codes = np.arange(q)
        digits = np.stack([(codes // p**i) % p for i in range(e)], axis=1)
        self.digits = digits.astype(np.int64)
        self._powers = np.array([p**i for i in range(e)], dtype=np.int64)

        add = (digits[:, None, :] + digits[None, :, :]) % p
        self.add_table = (add @ self._powers).astype(np.uint8)
        neg = (-digits) % p
        self.neg_table = (neg @ self._powers).astype(np.uint8)
        self.sub_table = self.add_table[:, self.neg_table]

        mul = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            for b in range(a, q):
                c = self._mul_slow(a, b)
                mul[a, b] = mul[b, a] = c
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.inv_table = inv

        frob = np.array([self._pow_slow(a, p) for a in range(q)], dtype=np.uint8)
        self.frobenius_table = frob

        # python lists for scalar-heavy code (polynomial arithmetic)
        self.add_l = self.add_table.tolist()
        self.sub_l = self.sub_table.tolist()
        self.mul_l = self.mul_table.tolist()
        self.inv_l = self.inv_table.tolist()
        self.neg_l = self.neg_table.tolist()

    def _mul_slow(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da = [(a // p**i) % p for i in range(e)]
        db = [(b // p**i) % p for i in range(e)]
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] += x * y
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(e + 1):
                    prod[k - e + j] -= c * self.modulus[j]
        return sum((prod[i] % p) * p**i for i in range(e))

    def _pow_slow(self, a: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = self._mul_slow(r, a)
        return r

    # -- identity ----------------------------------------------------------
    @property
    def spec(self) -> dict:
        return {"p": self.p, "e": self.e}

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.e == 1 else f"GF({self.p}^{self.e})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __reduce__(self):
        return (GF, (self.p, self.e))

    # -- scalar helpers ----------------------------------------------------
    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of {self}")
        return a

    def element(self, code: int) -> "FieldElem":
        return FieldElem(self, self.check(code))

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv_l[a], -k
        result, base = 1, int(a)
        while k:
            if k & 1:
                result = self.mul_l[result][base]
            base = self.mul_l[base][base]
            k >>= 1
        return result

    def frobenius(self, a, i: int = 1):
        """``a ** (p ** i)``, elementwise for arrays."""
        out = a
        for _ in range(i % self.e if self.e > 1 else 0):
            out = self.frobenius_table[out]
        if isinstance(a, (int, np.integer)):
            return int(out)
        return out

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul_l[x][a]
            k += 1
        return k

    @property
    def primitive_element(self) -> int:
        """Smallest code generating the multiplicative group."""
        for a in range(1, self.q):
            if self.multiplicative_order(a) == self.q - 1:
                return a
        raise AssertionError("unreachable")

    # -- vectorised arithmetic on uint8 code arrays -------------------------
    def add(self, a, b):
        if self.q == 2:
            return np.bitwise_xor(a, b)
        return self.add_table[a, b]

    def sub(self, a, b):
        if self.q == 2:
            return np.bitwise_xor(a, b)
        return self.sub_table[a, b]

    def neg(self, a):
        if self.p == 2:
            return a
        return self.neg_table[a]

    def mul(self, a, b):
        if self.q == 2:
            return np.bitwise_and(a, b)
        return self.mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("zero has no inverse")
        return self.inv_table[a]

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Matrix product of code arrays."""
        a = np.asarray(a)
        b = np.asarray(b)
        if a.shape[-1] != b.shape[0]:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        if a.size == 0 or b.size == 0:
            return np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.uint8)
        if self.e == 1:
            prod = a.astype(np.float64) @ b.astype(np.float64)
            return np.fmod(prod, self.p).astype(np.uint8)
        # split into coefficient planes, multiply as integer polynomials
        p, e = self.p, self.e
        da = self.digits[a].astype(np.float64)
        db = self.digits[b].astype(np.float64)
        acc = [None] * (2 * e - 1)
        for i in range(e):
            for j in range(e):
                term = da[..., i] @ db[..., j]
                acc[i + j] = term if acc[i + j] is None else acc[i + j] + term
        acc = [np.fmod(x, p).astype(np.int64) for x in acc]
        for k in range(2 * e - 2, e - 1, -1):
            c = acc[k]
            for j in range(e):
                if self.modulus[j]:
                    acc[k - e + j] = (acc[k - e + j] - c * self.modulus[j]) % p
        out = np.zeros(acc[0].shape, dtype=np.int64)
        for i in range(e):
            out += (acc[i] % p) * self._powers[i]
        return out.astype(np.uint8)

    def scale(self, c: int, a: np.ndarray) -> np.ndarray:
        if c == 1:
            return np.array(a, dtype=np.uint8, copy=True)
        return self.mul(np.uint8(c), a)

    def random(self, shape, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.q, size=shape, dtype=np.uint8)


@lru_cache(maxsize=None)
def GF(p: int, e: int = 1) -> FiniteField:
    """Cached field constructor."""
    return FiniteField(p, e)


def field_from_order(q: int) -> FiniteField:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                break
            return GF(p, e)
    raise ValueError(f"{q} is not a prime power")


def field_from_spec(spec: dict) -> FiniteField:
    try:
        return GF(int(spec["p"]), int(spec.get("e", 1)))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed field spec {spec!r}") from exc


@dataclass(frozen=True)
class FieldElem:
    """A single field element carrying its field."""

    field: FiniteField
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.q:
            raise ValueError(f"code {self.code} out of range for {self.field}")

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem) or other.field != self.field:
            raise FieldMismatchError(f"cannot combine elements of {self.field} and {getattr(other, 'field', other)}")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        return ff_add(self, other)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.field, self.field.sub_l[self.code][other.code])

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.field, self.field.neg_l[self.code])

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        return ff_mul(self, other)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return ff_mul(self, ff_inv(other))

    def __pow__(self, k: int) -> "FieldElem":
        return FieldElem(self.field, self.field.power(self.code, k))

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"{self.field}({self.code})"


def ff_add(a: FieldElem, b: FieldElem) -> FieldElem:
    a._check(b)
    return FieldElem(a.field, a.field.add_l[a.code][b.code])


def ff_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    a._check(b)
    return FieldElem(a.field, a.field.mul_l[a.code][b.code])


def ff_inv(a: FieldElem) -> FieldElem:
    if a.code == 0:
        raise ZeroDivisionError("zero has no inverse")
    return FieldElem(a.field, a.field.inv_l[a.code])


def ff_frobenius(a: FieldElem, i: int) -> FieldElem:
    """``a ** (p ** i)`` for ``0 <= i < e``."""
    if not 0 <= i < a.field.e:
        raise ValueError(f"Frobenius exponent {i} outside [0, {a.field.e})")
    return FieldElem(a.field, a.field.frobenius(a.code, i))
