"""Finite fields GF(p^e) with table-driven, numpy-vectorized arithmetic.

An element is an ``int`` in ``[0, p^e)`` whose base-``p`` digits are its
coordinates in the power basis of the modulus (lowest degree first).  The
``Field`` methods accept scalars or integer arrays and always return
``np.ndarray`` of dtype int64; :class:`FieldElem` wraps a single element for
operator-style scalar work.

Moduli are the lexicographically smallest monic irreducible polynomials,
comparing coefficients from ``x^(e-1)`` down to the constant term.  The
primitive element ``omega`` is ``x`` when that is primitive, otherwise the
smallest primitive element by integer encoding.
"""

from __future__ import annotations

import functools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapExceeded,
    DegreeOutOfRange,
    FieldDivisionByZero,
    FieldMismatch,
    IncompatibleTower,
    NotInSubfield,
    NotPrime,
    NotPrimePower,
    NotQuadraticExtension,
)

FIELD_CAP = 1 << 16
_ADD_TABLE_MAX = 2048


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**m``; raise :class:`NotPrimePower` otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, m


# -- polynomials over F_p as coefficient lists (lowest degree first) ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``m`` over F_p."""
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(a: Sequence[int], n: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while n:
        if n & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        n >>= 1
    return result


def _monic(d: int, index: int, p: int) -> list[int]:
    """The ``index``-th monic degree-``d`` polynomial in lexicographic order."""
    coeffs = [(index // p**i) % p for i in range(d)]
    return coeffs + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    e = len(poly) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    if poly[0] % p == 0:
        return False
    for d in range(1, e // 2 + 1):
        for idx in range(p**d):
            if not _pmod(list(poly), _monic(d, idx, p), p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    for idx in range(p**e):
        cand = _monic(e, idx, p)
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_cap() -> int:
    return int(os.environ.get("HULLFORGE_FIELD_CAP", FIELD_CAP))


class Field:
    """GF(p^e) with precomputed exp/log tables.

    Build instances through :func:`field_create` so equal parameters share one
    object.
    """

    def __init__(self, p: int, e: int) -> None:
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus: tuple[int, ...] = (0, 1) if e == 1 else smallest_irreducible(p, e)
        self._pw = p ** np.arange(e, dtype=np.int64)
        self._digits = (np.arange(self.order, dtype=np.int64)[:, None] // self._pw) % p

        n = self.order - 1
        self.omega = self._find_primitive()
        exp = np.zeros(2 * n + 1, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        gen = self._decode_list(self.omega)
        cur = [1]
        for i in range(n):
            val = self._encode_list(cur)
            exp[i] = val
            log[val] = i
            cur = self._mul_slow(cur, gen)
        exp[n : 2 * n] = exp[:n]
        exp[2 * n] = exp[0]
        self._exp = exp
        self._log = log
        self._exp.setflags(write=False)
        self._log.setflags(write=False)

        neg = ((p - self._digits) % p) @ self._pw
        self._neg = neg.astype(np.int64)
        self._add_table = None
        if p != 2 and e > 1 and self.order <= _ADD_TABLE_MAX:
            d = self._digits
            self._add_table = (((d[:, None, :] + d[None, :, :]) % p) @ self._pw).astype(np.int64)

        self.q = p ** (e // 2) if e % 2 == 0 else None

    # -- construction helpers ------------------------------------------------

    def _encode_list(self, coeffs: Sequence[int]) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(coeffs))

    def _decode_list(self, x: int) -> list[int]:
        return _trim([int(c) for c in self._digits[x]])

    def _mul_slow(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if self.e == 1:
            if not a or not b:
                return []
            return _trim([(a[0] * b[0]) % self.p])
        return _pmulmod(a, b, self.modulus, self.p)

    def _pow_slow(self, a: Sequence[int], n: int) -> list[int]:
        if self.e == 1:
            return _trim([pow(a[0], n, self.p)]) if a else []
        return _ppowmod(a, n, self.modulus, self.p)

    def _is_primitive_slow(self, x: int) -> bool:
        n = self.order - 1
        a = self._decode_list(x)
        if not a:
            return False
        return all(self._pow_slow(a, n // r) != [1] for r in prime_factors(n)) if n > 1 else a == [1]

    def _find_primitive(self) -> int:
        if self.e > 1 and self._is_primitive_slow(self.p):  # the element x
            return self.p
        for x in range(1, self.order):
            if self._is_primitive_slow(x):
                return x
        raise AssertionError("no primitive element")  # pragma: no cover

    # -- identity -------------------------------------------------------------

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.p, self.e, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def describe(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "modulus": list(self.modulus),
            "omega": [int(c) for c in self._digits[self.omega]],
        }

    def check_same(self, other: "Field") -> None:
        if other is not self and other != self:
            raise FieldMismatch(f"{other!r} is not {self!r}")

    # -- encoding -------------------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self._digits[int(x)])

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e:
            raise DegreeOutOfRange("too many coordinates")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def elem(self, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            self.check_same(x.field)
            return x
        x = int(x)
        if not 0 <= x < self.order:
            raise ValueError(f"{x} does not encode an element of {self!r}")
        return FieldElem(self, x)

    def elements(self) -> np.ndarray:
        """All elements: 0 first, then omega^0, omega^1, ... (dlog order)."""
        return np.concatenate(([0], self._exp[: self.order - 1]))

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    # -- vectorized arithmetic ------------------------------------------------

    def add(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.e == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        d = (self._digits[a] + self._digits[b]) % self.p
        return d @ self._pw

    def neg(self, a) -> np.ndarray:
        return self._neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def outer(self, a, b) -> np.ndarray:
        """``out[i, j] = a[i] * b[j]``."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a][:, None] + self._log[b][None, :]]
        out[a == 0, :] = 0
        out[:, b == 0] = 0
        return out

    def inv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldDivisionByZero("inverse of zero")
        n = self.order - 1
        return self._exp[(n - self._log[a]) % n]

    def div(self, a, b) -> np.ndarray:
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        n = self.order - 1
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self._exp[(self._log[a] * (k % n)) % n]
        if k == 0:
            return np.ones_like(out)
        return np.where(a == 0, 0, out)

    def exp(self, t) -> np.ndarray:
        """``omega ** t`` for integer ``t`` (any sign)."""
        n = self.order - 1
        return self._exp[np.asarray(t, dtype=np.int64) % n]

    def log(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldDivisionByZero("logarithm of zero")
        return self._log[a].copy()

    def sum(self, a, axis=None) -> np.ndarray:
        """Field sum along ``axis`` (all entries when None)."""
        a = np.asarray(a, dtype=np.int64)
        if axis is None:
            a = a.reshape(-1)
            axis = 0
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.e == 1:
            return a.sum(axis=axis) % self.p
        d = self._digits[a].sum(axis=axis) % self.p
        return d @ self._pw

    def prod(self, a, axis=None) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if axis is None:
            a = a.reshape(-1)
            axis = 0
        n = self.order - 1
        out = self._exp[self._log[a].sum(axis=axis) % n]
        return np.where(np.any(a == 0, axis=axis), 0, out)

    def conj(self, a) -> np.ndarray:
        """Frobenius ``x -> x^q`` of the quadratic extension over GF(q)."""
        if self.q is None:
            raise NotQuadraticExtension(f"{self!r} has odd extension degree")
        return self.pow(a, self.q)

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product, via exact float BLAS products on the coordinates."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
            raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
        p, e = self.p, self.e
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        # each float partial sum stays below inner * (p-1)^2 * e, far under 2^53
        da = [np.ascontiguousarray(self._digits[a][:, :, i], dtype=np.float64) for i in range(e)]
        db = [np.ascontiguousarray(self._digits[b][:, :, j], dtype=np.float64) for j in range(e)]
        acc = [np.zeros((a.shape[0], b.shape[1])) for _ in range(2 * e - 1)]
        for i in range(e):
            for j in range(e):
                acc[i + j] += da[i] @ db[j]
        digits = [np.zeros((a.shape[0], b.shape[1]), dtype=np.int64) for _ in range(e)]
        for t, c in enumerate(acc):
            c = np.rint(c).astype(np.int64) % p
            for d, w in enumerate(self._xpow_digits(t)):
                if w:
                    digits[d] += c * int(w)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for d in range(e):
            out += (digits[d] % p) * int(self._pw[d])
        return out

    @functools.lru_cache(maxsize=None)
    def _xpow_digits(self, t: int) -> np.ndarray:
        if self.e == 1:
            return np.array([1], dtype=np.int64)
        r = _pmod([0] * t + [1], self.modulus, self.p)
        return np.array(r + [0] * (self.e - len(r)), dtype=np.int64)

    def random_elements(self, rng: np.random.Generator, size, nonzero: bool = False) -> np.ndarray:
        lo = 1 if nonzero else 0
        return rng.integers(lo, self.order, size=size, dtype=np.int64)


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, e: int) -> Field:
    return Field(p, e)


def field_create(p: int, e: int) -> Field:
    """Return GF(p^e); identical arguments return the identical object."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise DegreeOutOfRange(f"extension degree {e} < 1")
    if p**e > field_cap():
        raise CapExceeded(f"{p}^{e} exceeds the field cap {field_cap()}")
    return _cached_field(p, e)


def field_of_order(q: int) -> Field:
    p, m = prime_power(q)
    return field_create(p, m)


def quadratic_field(q: int) -> Field:
    """GF(q^2) for the prime power ``q``."""
    p, m = prime_power(q)
    return field_create(p, 2 * m)


@dataclass(frozen=True)
class FieldElem:
    """A single field element bound to its field."""

    field: Field
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            self.field.check_same(other.field)
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other))
        return NotImplemented

    def _wrap(self, x) -> "FieldElem":
        return FieldElem(self.field, int(x))

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def inverse(self) -> "FieldElem":
        return self._wrap(self.field.inv(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * FieldElem(self.field, o).inverse()

    def __pow__(self, n: int) -> "FieldElem":
        # square-and-multiply; the table-based Field.pow is the fast path
        if n < 0:
            return self.inverse() ** (-n)
        result = FieldElem(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        if self.value == 0:
            return "0"
        return f"w^{int(self.field._log[self.value])}"


# -- operations on the quadratic tower GF(q) < GF(q^2) --------------------------


def _as_value(field: Field, x) -> int:
    if isinstance(x, FieldElem):
        field.check_same(x.field)
        return x.value
    return int(x)


def frobenius_q(fq2: Field, x) -> FieldElem:
    """``x ** q`` in GF(q^2)."""
    return FieldElem(fq2, int(fq2.conj(_as_value(fq2, x))))


def subfield_test(fq2: Field, x) -> bool:
    v = _as_value(fq2, x)
    return int(fq2.conj(v)) == v


def subfield_elements(fq2: Field) -> np.ndarray:
    """GF(q) inside GF(q^2): zero and the powers of omega^(q+1)."""
    if fq2.q is None:
        raise NotQuadraticExtension(repr(fq2))
    q = fq2.q
    return np.concatenate(([0], fq2.exp((q + 1) * np.arange(q - 1))))


@functools.lru_cache(maxsize=None)
def _embedding_root(fq: Field, fq2: Field) -> int:
    """Image of the generator ``x`` of GF(q): the root of GF(q)'s modulus in
    GF(q^2) with the smallest discrete logarithm."""
    if fq2.q != fq.order or fq2.p != fq.p:
        raise IncompatibleTower(f"{fq2!r} is not the quadratic extension of {fq!r}")
    cand = fq2.exp((fq.order + 1) * np.arange(fq.order - 1))
    val = np.zeros_like(cand)
    for c in reversed(fq.modulus):
        val = fq2.add(fq2.mul(val, cand), fq2.from_int(c))
    roots = cand[val == 0]
    if roots.size == 0:
        raise IncompatibleTower("modulus has no root in the subfield")  # pragma: no cover
    return int(roots[np.argmin(fq2._log[roots])])


def subfield_embed(fq: Field, fq2: Field, x) -> FieldElem:
    """Embed an element of GF(q) into GF(q^2) by a field homomorphism."""
    v = _as_value(fq, x)
    if fq2.q != fq.order or fq2.p != fq.p:
        raise IncompatibleTower(f"{fq2!r} is not the quadratic extension of {fq!r}")
    if fq.e == 1:
        return FieldElem(fq2, v)
    r = _embedding_root(fq, fq2)
    acc = 0
    for c in reversed(fq.coeffs(v)):
        acc = int(fq2.add(fq2.mul(acc, r), c))
    return FieldElem(fq2, acc)


def dlog(field: Field, x) -> int:
    return int(field.log(_as_value(field, x)))


def norm_root(fq2: Field, beta) -> FieldElem:
    """Smallest power ``v = omega^t`` with ``v^(q+1) = beta``."""
    b = _as_value(fq2, beta)
    if b == 0:
        raise FieldDivisionByZero("norm root of zero")
    if fq2.q is None:
        raise NotQuadraticExtension(repr(fq2))
    if not subfield_test(fq2, b):
        raise NotInSubfield(f"{fq2.elem(b)!r} is not in GF({fq2.q})")
    t, r = divmod(dlog(fq2, b), fq2.q + 1)
    assert r == 0
    return FieldElem(fq2, int(fq2.exp(t)))


def order_of(field: Field, x) -> int:
    """Multiplicative order of a nonzero element."""
    n = field.order - 1
    return n // math.gcd(n, dlog(field, x))


def as_array(field: Field, xs: Iterable) -> np.ndarray:
    return np.array([_as_value(field, x) for x in xs], dtype=np.int64)
