"""(Extended) generalized Reed-Solomon codes and their hulls.

A code ``GRS_k(a, v)`` is the row space of ``G[i, j] = v_j * a_j**i`` for
``0 <= i < k``; the extended code appends one column carrying the coefficient
of ``x^(k-1)``.  Hull dimensions are computed by elimination over the
alphabet field, never read off a formula.
"""

from __future__ import annotations

import enum
import functools
import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import CapExceeded, DegreeTooHigh, DuplicateLocators, InvalidCode, NotQuadraticExtension
from .gf import Field, field_create
from .linalg import Matrix, in_row_space, kernel_basis, mat_mul, rank, stack_rank
from .poly import Poly, interpolate

DEFAULT_ENUMERATION_CAP = 10**6
_CHUNK = 1 << 15


class InnerProduct(str, enum.Enum):
    EUCLIDEAN = "euclidean"
    HERMITIAN = "hermitian"


def enumeration_cap() -> int:
    return int(os.environ.get("HULLFORGE_CAP", DEFAULT_ENUMERATION_CAP))


@dataclass(frozen=True, eq=False)
class GrsCode:
    field: Field
    locators: tuple[int, ...]
    multipliers: tuple[int, ...]
    k: int
    extended: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "locators", tuple(int(a) for a in self.locators))
        object.__setattr__(self, "multipliers", tuple(int(v) for v in self.multipliers))
        n = len(self.locators)
        if n == 0:
            raise InvalidCode("a GRS code needs at least one locator")
        if len(self.multipliers) != n:
            raise InvalidCode(f"{n} locators but {len(self.multipliers)} multipliers")
        if len(set(self.locators)) != n:
            raise DuplicateLocators("code locators must be distinct")
        if any(not 0 <= x < self.field.order for x in self.locators + self.multipliers):
            raise InvalidCode(f"entries out of range for {self.field!r}")
        if 0 in self.multipliers:
            raise InvalidCode("column multipliers must be nonzero")
        if not 1 <= self.k <= self.length:
            raise InvalidCode(f"dimension {self.k} outside [1, {self.length}]")

    @property
    def n(self) -> int:
        """Number of locators (the length of the unextended code)."""
        return len(self.locators)

    @property
    def length(self) -> int:
        return self.n + int(self.extended)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GrsCode)
            and self.field == other.field
            and self.locators == other.locators
            and self.multipliers == other.multipliers
            and self.k == other.k
            and self.extended == other.extended
        )

    def __hash__(self) -> int:
        return hash((self.field, self.locators, self.multipliers, self.k, self.extended))

    @functools.cached_property
    def generator(self) -> Matrix:
        return generator_matrix(self)

    def with_multipliers(self, multipliers) -> "GrsCode":
        return GrsCode(self.field, self.locators, tuple(multipliers), self.k, self.extended)

    def __repr__(self) -> str:
        tag = "extended " if self.extended else ""
        return f"<{tag}GRS [{self.length},{self.k}] over {self.field!r}>"


@dataclass(frozen=True)
class HullReport:
    n: int
    k: int
    hull_dim_euclidean: Optional[int]
    hull_dim_hermitian: Optional[int]
    d: int
    d_provenance: str  # "exhaustive" or "by-construction"
    is_mds: bool

    def to_dict(self) -> dict:
        hull = {}
        if self.hull_dim_euclidean is not None:
            hull["euclidean"] = self.hull_dim_euclidean
        if self.hull_dim_hermitian is not None:
            hull["hermitian"] = self.hull_dim_hermitian
        return {
            "n": self.n,
            "k": self.k,
            "hull": hull,
            "mds": {"d": self.d, "provenance": self.d_provenance, "is_mds": self.is_mds},
        }


# -- u_i and matrices ----------------------------------------------------------


def u_values(field: Field, locators) -> np.ndarray:
    """``u_i = prod_{j != i} (a_i - a_j)^(-1)``."""
    a = np.asarray(locators, dtype=np.int64)
    if len(np.unique(a)) != len(a):
        raise DuplicateLocators("code locators must be distinct")
    if a.size == 0:
        raise InvalidCode("no locators")
    diff = field.sub(a[:, None], a[None, :])
    np.fill_diagonal(diff, 1)
    return field.inv(field.prod(diff, axis=1))


def power_rows(field: Field, points, k: int) -> np.ndarray:
    """``out[i, j] = points[j] ** i`` for ``0 <= i < k`` (with 0^0 = 1)."""
    a = np.asarray(points, dtype=np.int64)
    out = np.empty((k, len(a)), dtype=np.int64)
    for i in range(k):
        out[i] = field.pow(a, i)
    return out


def generator_matrix(code: GrsCode) -> Matrix:
    F = code.field
    rows = F.mul(power_rows(F, code.locators, code.k), np.asarray(code.multipliers)[None, :])
    if code.extended:
        tail = np.zeros((code.k, 1), dtype=np.int64)
        tail[code.k - 1, 0] = 1
        rows = np.hstack([rows, tail])
    return Matrix(F, rows)


def parity_check_matrix(code: GrsCode) -> Matrix:
    return kernel_basis(code.generator)


def _check_kind(field: Field, kind: InnerProduct) -> InnerProduct:
    kind = InnerProduct(kind)
    if kind is InnerProduct.HERMITIAN and field.q is None:
        raise NotQuadraticExtension(f"{field!r} carries no Hermitian form")
    return kind


def dual_generator(g: Matrix, kind: InnerProduct) -> Matrix:
    """Rows spanning the Euclidean or Hermitian dual of ``rowspace(g)``.

    The Hermitian dual is the conjugate of the Euclidean one.
    """
    kind = _check_kind(g.field, kind)
    k = kernel_basis(g)
    return k.conj() if kind is InnerProduct.HERMITIAN else k


def hull_dim_matrix(g: Matrix, kind: InnerProduct) -> int:
    """``dim(C ∩ C^perp) = dim C + dim C^perp - dim(C + C^perp)``."""
    dual = dual_generator(g, kind)
    return rank(g) + dual.rows - stack_rank(g, dual)


def hull_dim(code: GrsCode, kind: InnerProduct) -> int:
    return hull_dim_matrix(code.generator, kind)


def gram_matrix(g: Matrix, kind: InnerProduct) -> Matrix:
    """``G G^T`` (Euclidean) or ``G G^dagger`` (Hermitian)."""
    kind = _check_kind(g.field, kind)
    other = g.conj() if kind is InnerProduct.HERMITIAN else g
    return mat_mul(g, other.T)


def hull_dim_gram(g: Matrix, kind: InnerProduct) -> int:
    """Hull dimension as ``rank(G) - rank(Gram)``, valid for full-row-rank G.

    A second route to :func:`hull_dim_matrix`, used as an oracle and by the
    hull-reduction search.
    """
    return g.rows - rank(gram_matrix(g, kind))


# -- codewords and distance ----------------------------------------------------


def encode(code: GrsCode, messages) -> np.ndarray:
    """Codewords for message rows ``(f_0, ..., f_{k-1})``."""
    m = np.atleast_2d(np.asarray(messages, dtype=np.int64))
    return code.field.matmul(m, code.generator.data)


def encode_poly(code: GrsCode, f: Poly) -> np.ndarray:
    if f.degree > code.k - 1:
        raise DegreeTooHigh(f"deg f = {f.degree} exceeds k - 1 = {code.k - 1}")
    msg = np.zeros(code.k, dtype=np.int64)
    msg[: len(f.coeffs)] = f.coeffs
    return encode(code, msg)[0]


def _mixed_radix(field: Field, start: int, stop: int, width: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(idx), width), dtype=np.int64)
    for c in range(width):
        out[:, c] = idx % field.order
        idx //= field.order
    return out


def min_distance_matrix(g: Matrix, cap: Optional[int] = None) -> int:
    """Minimum Hamming weight of the nonzero words of ``rowspace(g)``.

    ``g`` must have full row rank.  Only messages whose first nonzero entry is
    1 are enumerated; weights are invariant under nonzero scaling.
    """
    F = g.field
    k, n = g.shape
    cap = enumeration_cap() if cap is None else cap
    if F.order**k > cap:
        raise CapExceeded(f"{F.order}^{k} codewords exceed the enumeration cap {cap}")
    best = n
    for lead in range(k):
        width = k - 1 - lead
        head = g.data[lead]
        tail_rows = g.data[lead + 1 :]
        total = F.order**width
        for start in range(0, total, _CHUNK):
            stop = min(total, start + _CHUNK)
            words = np.broadcast_to(head, (stop - start, n))
            if width:
                words = F.add(words, F.matmul(_mixed_radix(F, start, stop, width), tail_rows))
            w = int(np.count_nonzero(words, axis=1).min())
            best = min(best, w)
    return best


def min_distance_exhaustive(code: GrsCode, cap: Optional[int] = None) -> int:
    return min_distance_matrix(code.generator, cap)


def mds_distance(code: GrsCode, cap: Optional[int] = None) -> tuple[int, str]:
    """Exhaustive distance when under the cap, else the GRS value flagged as such."""
    try:
        return min_distance_exhaustive(code, cap), "exhaustive"
    except CapExceeded:
        return code.length - code.k + 1, "by-construction"


def hull_report(code: GrsCode, kinds=(InnerProduct.HERMITIAN,), cap: Optional[int] = None) -> HullReport:
    kinds = {InnerProduct(k) for k in kinds}
    eu = hull_dim(code, InnerProduct.EUCLIDEAN) if InnerProduct.EUCLIDEAN in kinds else None
    he = hull_dim(code, InnerProduct.HERMITIAN) if InnerProduct.HERMITIAN in kinds else None
    d, prov = mds_distance(code, cap)
    return HullReport(
        n=code.length,
        k=code.k,
        hull_dim_euclidean=eu,
        hull_dim_hermitian=he,
        d=d,
        d_provenance=prov,
        is_mds=d == code.length - code.k + 1,
    )


# -- dual membership -------------------------------------------------------------


def in_dual(code: GrsCode, word, kind: InnerProduct) -> bool:
    """Row-space membership of ``word`` in the computed dual code."""
    return in_row_space(dual_generator(code.generator, kind), word)


def dual_membership_oracle(code: GrsCode, f: Poly, kind: InnerProduct) -> bool:
    """Decide whether the codeword of ``f`` lies in the dual via interpolation.

    The word ``(v_i f(a_i))`` (plus ``f_{k-1}`` when extended) is dual iff
    the values ``v_i^2 f(a_i) / u_i`` (Euclidean) or
    ``v_i^(q+1) f(a_i)^q / u_i`` (Hermitian) interpolate a polynomial ``g``
    of degree at most ``n-k-1``, or at most ``n-k`` with
    ``f_{k-1} = -g_{n-k}`` (conjugated in the Hermitian case) for extended
    codes.
    """
    F = code.field
    kind = _check_kind(F, kind)
    F.check_same(f.field)
    if f.degree > code.k - 1:
        raise DegreeTooHigh(f"deg f = {f.degree} exceeds k - 1 = {code.k - 1}")
    n, k = code.n, code.k
    a = np.asarray(code.locators, dtype=np.int64)
    v = np.asarray(code.multipliers, dtype=np.int64)
    fa = f.eval(a)
    lead = f.coeff(k - 1)
    if kind is InnerProduct.HERMITIAN:
        w = F.mul(F.pow(v, F.q + 1), F.conj(fa))
        lead = int(F.conj(lead))
    else:
        w = F.mul(F.mul(v, v), fa)
    g = interpolate(F, a, F.div(w, u_values(F, a)))
    if code.extended:
        if g.degree > n - k:
            return False
        return lead == int(F.neg(g.coeff(n - k))) if n - k >= 0 else lead == 0
    return not g.degree > n - k - 1


# -- serialization ----------------------------------------------------------------


def _elem_token(field: Field, x: int) -> str:
    return "0" if x == 0 else f"w^{int(field.log(x))}"


def _parse_token(field: Field, tok: str) -> int:
    if tok == "0":
        return 0
    if not tok.startswith("w^"):
        raise ValueError(f"bad element token {tok!r}")
    return int(field.exp(int(tok[2:])))


def code_to_dict(code: GrsCode) -> dict:
    F = code.field
    return {
        "field": F.describe(),
        "locators": [_elem_token(F, a) for a in code.locators],
        "multipliers": [_elem_token(F, v) for v in code.multipliers],
        "k": code.k,
        "extended": code.extended,
    }


def code_from_dict(d: dict) -> GrsCode:
    fd = d["field"]
    F = field_create(fd["p"], fd["e"])
    if list(F.modulus) != list(fd["modulus"]) or list(F.coeffs(F.omega)) != list(fd["omega"]):
        raise ValueError("serialized field model differs from this build's model")
    return GrsCode(
        F,
        tuple(_parse_token(F, t) for t in d["locators"]),
        tuple(_parse_token(F, t) for t in d["multipliers"]),
        int(d["k"]),
        bool(d["extended"]),
    )
