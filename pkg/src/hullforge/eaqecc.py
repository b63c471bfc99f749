"""Entanglement-assisted quantum code parameters from Hermitian hulls.

Codes live over GF(q^2); parameters are labelled by q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .code import GrsCode, InnerProduct, gram_matrix, hull_dim, parity_check_matrix
from .errors import DimensionTooLarge, NotQuadraticExtension, RankIdentityViolated
from .linalg import conj_transpose, mat_mul, rank


@dataclass(frozen=True)
class EaqeccParams:
    n: int
    k: int
    d: int
    c: int
    q: int
    is_mds: bool = False
    source: Optional[Any] = None

    def __post_init__(self) -> None:
        if not 0 <= self.c <= self.n:
            raise ValueError(f"entanglement count {self.c} outside [0, {self.n}]")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"logical dimension {self.k} outside [0, {self.n}]")
        if self.is_mds and not singleton_check(self)["met_with_equality"]:
            raise ValueError(f"{self} flagged MDS but misses the Singleton bound")

    @property
    def tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.d, self.c)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d};{self.c}]]_{self.q}"

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "c": self.c, "is_mds": self.is_mds}


def _base_q(code: GrsCode) -> int:
    q = code.field.q
    if q is None:
        raise NotQuadraticExtension(f"{code.field!r} carries no Hermitian form")
    return q


def entanglement_count(code: GrsCode, hull: Optional[int] = None) -> int:
    """``rank(H H^dagger)``, cross-checked against ``len - k - dim Hull_H``."""
    _base_q(code)
    h = parity_check_matrix(code)
    by_rank = rank(mat_mul(h, conj_transpose(h))) if h.rows else 0
    if hull is None:
        hull = hull_dim(code, InnerProduct.HERMITIAN)
    by_hull = code.length - code.k - hull
    if by_rank != by_hull:
        raise RankIdentityViolated(f"rank(HH^dagger) = {by_rank} but len-k-hull = {by_hull}")
    return by_rank


def eaqecc_from_code(code: GrsCode, d: int, source=None) -> EaqeccParams:
    """``[[len, 2k - len + c, d; c]]`` with ``c = rank(H H^dagger)``."""
    q = _base_q(code)
    c = entanglement_count(code)
    n = code.length
    return EaqeccParams(n, 2 * code.k - n + c, d, c, q, False, source)


def mds_eaqecc_pair(code: GrsCode, hull: Optional[int] = None, source=None) -> tuple[EaqeccParams, EaqeccParams]:
    """The pair ``Q = [[n, k-l, n-k+1; n-k-l]]`` and MDS ``Q' = [[n, n-k-l, k+1; k-l]]``.

    ``Q`` uses the code itself; ``Q'`` uses its Hermitian dual, whose parity
    check matrix is ``conj(G)``, so ``c' = rank(G G^dagger)``.
    """
    q = _base_q(code)
    n, k = code.length, code.k
    if k > n // 2:
        raise DimensionTooLarge(f"k = {k} exceeds floor({n}/2)")
    if hull is None:
        hull = hull_dim(code, InnerProduct.HERMITIAN)
    c = entanglement_count(code, hull)
    c_dual = rank(gram_matrix(code.generator, InnerProduct.HERMITIAN))
    if c_dual != k - hull:
        raise RankIdentityViolated(f"rank(GG^dagger) = {c_dual} but k-hull = {k - hull}")
    first = EaqeccParams(n, 2 * k - n + c, n - k + 1, c, q, False, source)
    second = EaqeccParams(n, 2 * (n - k) - n + c_dual, k + 1, c_dual, q, True, source)
    return first, second


def singleton_check(params: EaqeccParams) -> dict:
    """Quantum Singleton bound ``k <= n + c - 2(d - 1)``, applicable when ``2d <= n + 2``."""
    if 2 * params.d > params.n + 2:
        return {"applicable": False, "satisfied": None, "met_with_equality": False}
    bound = params.n + params.c - 2 * (params.d - 1)
    return {"applicable": True, "satisfied": params.k <= bound, "met_with_equality": params.k == bound}
