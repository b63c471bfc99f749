"""Dense univariate polynomials over a :class:`~hullforge.gf.Field`."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import FieldMismatch
from .gf import Field, FieldElem


class _NegInfDegree:
    """Degree of the zero polynomial.

    Compares below every integer but refuses arithmetic, so a stray
    ``deg(0) + 1`` fails loudly instead of producing 0.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInfDegree()


class Poly:
    """Polynomial with coefficients lowest degree first, trailing zeros trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()) -> None:
        c = np.array([int(x) for x in coeffs], dtype=np.int64)
        nz = np.flatnonzero(c)
        self.field = field
        self.coeffs = c[: nz[-1] + 1] if nz.size else c[:0]
        self.coeffs.setflags(write=False)

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, [int(c)])

    @classmethod
    def monomial(cls, field: Field, degree: int, c=1) -> "Poly":
        return cls(field, [0] * degree + [int(c)])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if len(self.coeffs) else NEG_INF

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{other.field!r} is not {self.field!r}")

    def coeff(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative coefficient index")
        return int(self.coeffs[i]) if i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and np.array_equal(other.coeffs, self.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.coeffs.tolist())))

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({self.field.elem(c)!r})x^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        a[: len(self.coeffs)] = self.coeffs
        b[: len(other.coeffs)] = other.coeffs
        return Poly(self.field, self.field.add(a, b))

    def __neg__(self) -> "Poly":
        return Poly(self.field, self.field.neg(self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        return Poly(self.field, self.field.mul(self.coeffs, int(c)))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly(F)
        out = np.zeros(len(self.coeffs) + len(other.coeffs) - 1, dtype=np.int64)
        m = len(other.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i : i + m] = F.add(out[i : i + m], F.mul(c, other.coeffs))
        return Poly(F, out)

    def __call__(self, a):
        return self.eval(a)

    def eval(self, a):
        """Horner evaluation at a scalar or an array of points."""
        F = self.field
        if isinstance(a, FieldElem):
            F.check_same(a.field)
            return FieldElem(F, int(self.eval(a.value)))
        pts = np.asarray(a, dtype=np.int64)
        acc = np.zeros_like(pts)
        for c in self.coeffs[::-1]:
            acc = F.add(F.mul(acc, pts), c)
        return acc

    def frobenius(self) -> "Poly":
        """Conjugate every coefficient, ``c -> c^q``."""
        return Poly(self.field, self.field.conj(self.coeffs))

    def divmod_linear(self, root) -> tuple["Poly", int]:
        """Synthetic division by ``x - root``: quotient and remainder."""
        F = self.field
        n = len(self.coeffs)
        if n == 0:
            return Poly(F), 0
        quot = np.zeros(n - 1, dtype=np.int64)
        acc = 0
        for i in range(n - 1, -1, -1):
            acc = int(F.add(F.mul(acc, root), self.coeffs[i]))
            if i:
                quot[i - 1] = acc
        return Poly(F, quot), acc


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def poly_scale(f: Poly, c) -> Poly:
    return f.scale(c)


def coeff(f: Poly, i: int) -> int:
    return f.coeff(i)


def frobenius_poly(f: Poly) -> Poly:
    return f.frobenius()


def product_linear(field: Field, roots: Sequence) -> Poly:
    """``prod (x - r)``; the empty product is 1."""
    out = np.array([1], dtype=np.int64)
    for r in roots:
        r = int(r.value) if isinstance(r, FieldElem) else int(r)
        shifted = np.concatenate(([0], out))
        scaled = np.concatenate((field.mul(out, r), [0]))
        out = field.sub(shifted, scaled)
    return Poly(field, out)


def interpolate(field: Field, xs: Sequence, ys: Sequence) -> Poly:
    """Lagrange interpolation through ``(xs[i], ys[i])`` with distinct ``xs``."""
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(np.unique(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    if len(xs) == 0:
        return Poly(field)
    full = product_linear(field, xs)
    result = np.zeros(len(xs), dtype=np.int64)
    for i, (x, y) in enumerate(zip(xs, ys)):
        if y == 0:
            continue
        basis, _ = full.divmod_linear(x)
        denom = basis.eval(x)
        w = field.div(y, denom)
        c = np.zeros(len(xs), dtype=np.int64)
        c[: len(basis.coeffs)] = basis.coeffs
        result = field.add(result, field.mul(c, w))
    return Poly(field, result)
