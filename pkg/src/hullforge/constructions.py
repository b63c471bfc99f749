"""Factories for MDS codes with prescribed hull dimension.

Every factory returns a :class:`ConstructionRecord` holding the code and the
hull dimension the construction claims.  Claims are checked elsewhere by
linear algebra; the factories themselves only assert the intermediate facts
their recipes rely on (e.g. that every norm target lies in GF(q)^*).

Locator choices use :meth:`Field.elements` order (0, then omega^0, omega^1,
...), so "the first n elements" is reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Iterator, Optional

import numpy as np

from .code import GrsCode, InnerProduct, gram_matrix, hull_dim, u_values
from .errors import (
    ConstructionAssertionFailed,
    ExcludedHullDim,
    NotPrimePower,
    ParamsOutOfRange,
    SearchExhausted,
    TargetOutOfRange,
)
from .gf import Field, field_of_order, norm_root, prime_power, quadratic_field, subfield_test
from .linalg import Matrix, rank
from .poly import product_linear

THEOREMS = ("A1", "A2", "A3", "B", "B_REDUCED", "C1", "C2", "C3", "C4", "C5", "C6")
HERMITIAN_THEOREMS = ("A1", "A2", "A3", "B", "B_REDUCED")


@dataclass(frozen=True, eq=False)
class ConstructionRecord:
    theorem_id: str
    params: dict
    code: GrsCode
    kind: InnerProduct
    claimed_hull: int
    source: Optional["ConstructionRecord"] = None
    extras: dict = dc_field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.params["q"]

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "theorem": self.theorem_id,
            "params": dict(self.params),
            "claimed_hull": {"kind": self.kind.value, "dimension": self.claimed_hull},
        }
        if self.extras:
            out["extras"] = dict(self.extras)
        if self.source is not None:
            out["source"] = {"theorem": self.source.theorem_id, "params": dict(self.source.params)}
        return out


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamsOutOfRange(msg)


def _split_q(q: int) -> tuple[int, int]:
    try:
        return prime_power(q)
    except NotPrimePower as exc:
        raise ParamsOutOfRange(str(exc)) from exc


def _first_elements(F: Field, n: int) -> np.ndarray:
    return F.elements()[:n]


# -- construction A: Hermitian hulls over GF(q^2) ----------------------------------


def _hermitian_a(theorem: str, q: int, k: int, n: int, l: int, s: int, extended: bool) -> ConstructionRecord:
    F = quadratic_field(q)
    # omega^(q+1) generates GF(q)^*, so omega^(q+1) != 1 whenever q >= 3
    mult = [F.omega] * s + [1] * (n - s)
    code = GrsCode(F, tuple(_first_elements(F, n)), tuple(mult), k, extended)
    params = {"q": q, "n": n, "k": k, "l": l, "s": s}
    return ConstructionRecord(theorem, params, code, InnerProduct.HERMITIAN, l)


def construct_A1(q: int, k: int, n: int, l: int) -> ConstructionRecord:
    _split_q(q)
    _require(q >= 3, "A1 needs q >= 3")
    _require(1 <= k <= q - 1, f"A1 needs 1 <= k <= q-1, got k={k}")
    _require(q * q - k <= n <= q * q, f"A1 needs q^2-k <= n <= q^2, got n={n}")
    _require(0 <= l <= n + k - q * q, f"A1 needs 0 <= l <= n+k-q^2, got l={l}")
    return _hermitian_a("A1", q, k, n, l, n + k - q * q - l, extended=False)


def construct_A2(q: int, k: int, n: int, l: int) -> ConstructionRecord:
    _split_q(q)
    _require(q >= 3, "A2 needs q >= 3")
    _require(1 <= k <= q - 1, f"A2 needs 1 <= k <= q-1, got k={k}")
    _require(q * q - k + 1 <= n <= q * q, f"A2 needs q^2-k+1 <= n <= q^2, got n={n}")
    _require(0 <= l <= n + k - q * q - 1, f"A2 needs 0 <= l <= n+k-q^2-1, got l={l}")
    return _hermitian_a("A2", q, k, n, l, n + k - q * q - l - 1, extended=True)


def construct_A3(q: int, n: int, l: int) -> ConstructionRecord:
    _split_q(q)
    _require(q >= 3, "A3 needs q >= 3")
    _require(q * q - q <= n <= q * q, f"A3 needs q^2-q <= n <= q^2, got n={n}")
    _require(0 <= l <= n + q - q * q, f"A3 needs 0 <= l <= n+q-q^2, got l={l}")
    return _hermitian_a("A3", q, q, n, l, n + q - q * q - l, extended=True)


# -- construction B: Hermitian almost self-orthogonal extended codes ---------------


def coset_locators(F: Field, m: int) -> np.ndarray:
    """Union of the cosets ``omega^(t-1) GF(q)^*`` for t = 1..m, t-major."""
    q = F.q
    t = np.arange(m)[:, None]
    i = np.arange(q - 1)[None, :]
    return F.exp((q + 1) * i + t).reshape(-1)


def construction_b_scale(q: int, m: int) -> tuple[int, int]:
    """Sign and exponent of the scalar ``lambda = sign * omega^exponent``.

    ``lambda = (q-1) omega^e`` with ``q - 1 = -1`` in characteristic p.  For
    even q the exponent is ``-m(m-1)/2``; ``-m(m+1)/2`` lands outside the
    coset that makes every ``lambda u_i h(a_i)`` a norm.
    """
    if q % 2 == 0:
        return -1, -(m * (m - 1) // 2)
    return -1, (q - m + 1) * (m - 1) // 2


def construct_B(q: int, m: int, k: int) -> ConstructionRecord:
    _split_q(q)
    _require(q >= 2, "B needs q >= 2")
    _require(2 <= m <= q, f"B needs 2 <= m <= q, got m={m}")
    _require(1 <= k <= m - 1, f"B needs 1 <= k <= m-1, got k={k}")
    F = quadratic_field(q)
    n = m * (q - 1)
    a = coset_locators(F, m)
    h_deg = q - m
    if not h_deg < q + n - (q + 1) * k:
        raise ConstructionAssertionFailed(f"deg h = {h_deg} is not below q+n-(q+1)k = {q + n - (q + 1) * k}")
    _, expo = construction_b_scale(q, m)
    lam = int(F.neg(F.exp(expo)))
    u = u_values(F, a)
    beta = F.mul(F.mul(u, F.pow(a, h_deg)), lam)
    bad = [int(i) for i, b in enumerate(beta) if b == 0 or not subfield_test(F, int(b))]
    if bad:
        raise ConstructionAssertionFailed(f"lambda*u_i*h(a_i) outside GF({q})^* at positions {bad[:5]}")
    v = [norm_root(F, int(b)).value for b in beta]
    code = GrsCode(F, tuple(a), tuple(v), k, extended=True)
    params = {"q": q, "m": m, "n": n, "k": k, "l": k - 1}
    extras = {
        "lambda": f"-w^{expo % (F.order - 1)}",
        "h_degree": h_deg,
        "beta_in_subfield": True,
    }
    return ConstructionRecord("B", params, code, InnerProduct.HERMITIAN, k - 1, extras=extras)


def hull_reduce(record: ConstructionRecord, l_target: int) -> ConstructionRecord:
    """Lower the Hermitian hull to ``l_target`` by rescaling column multipliers.

    Greedy search: walk the coordinates in order; at each one try scalars
    ``c`` (field order, ``c^(q+1) != 1``) and keep the first whose rescaling
    lowers the hull by exactly one.  Hull dimensions during the search come
    from the k x k Gram matrix, which changes by a rank-one term per step; the
    final code is re-checked by the dual-code route.
    """
    if record.kind is not InnerProduct.HERMITIAN:
        raise TargetOutOfRange("hull reduction is defined for Hermitian records")
    code = record.code
    F = code.field
    q = F.q
    current = hull_dim(code, InnerProduct.HERMITIAN)
    if not 0 <= l_target <= current:
        raise TargetOutOfRange(f"target {l_target} outside [0, {current}]")
    params = dict(record.params, l=l_target)
    if l_target == current:
        return ConstructionRecord(
            "B_REDUCED", params, code, InnerProduct.HERMITIAN, l_target, source=record,
            extras={"rescaled": []},
        )

    g = code.generator.data
    gram = gram_matrix(code.generator, InnerProduct.HERMITIAN).data
    k = code.k
    target_rank = k - l_target
    rk = k - current
    mult = list(code.multipliers)
    cands = [int(c) for c in F.elements()[1:] if int(F.pow(c, q + 1)) != 1]
    rescaled = []
    for j in range(code.n):
        if rk == target_rank:
            break
        col = g[:, j]
        outer = F.outer(col, F.conj(col))
        for c in cands:
            delta = int(F.sub(F.pow(c, q + 1), 1))
            trial = F.add(gram, F.mul(outer, delta))
            r = rank(Matrix(F, trial))
            if r == rk + 1:
                gram, rk = trial, r
                mult[j] = int(F.mul(mult[j], c))
                rescaled.append([j, f"w^{int(F.log(c))}"])
                break
    if rk != target_rank:
        raise SearchExhausted(f"could not reach hull dimension {l_target} from {current}")
    reduced = code.with_multipliers(mult)
    got = hull_dim(reduced, InnerProduct.HERMITIAN)
    if got != l_target:
        raise SearchExhausted(f"search reached Gram rank {rk} but hull is {got}")
    return ConstructionRecord(
        "B_REDUCED", params, reduced, InnerProduct.HERMITIAN, l_target, source=record,
        extras={"rescaled": rescaled},
    )


def construct_B_reduced(q: int, m: int, k: int, l: int) -> ConstructionRecord:
    _require(0 <= l <= k - 1, f"reduction needs 0 <= l <= k-1, got l={l}")
    return hull_reduce(construct_B(q, m, k), l)


# -- construction C: Euclidean hulls over GF(q) -------------------------------------


def _euclidean_scaled(theorem: str, q: int, k: int, n: int, l: int, s: int, extended: bool, claimed: int) -> ConstructionRecord:
    F = field_of_order(q)
    # omega^2 != 1 once q > 3
    mult = [F.omega] * s + [1] * (n - s)
    code = GrsCode(F, tuple(_first_elements(F, n)), tuple(mult), k, extended)
    params = {"q": q, "n": n, "k": k, "l": claimed, "s": s}
    return ConstructionRecord(theorem, params, code, InnerProduct.EUCLIDEAN, claimed)


def construct_C1(q: int, k: int, n: int, l: int) -> ConstructionRecord:
    _split_q(q)
    _require(q > 3, "C1 needs q > 3")
    _require(1 <= k <= q // 2, f"C1 needs 1 <= k <= floor(q/2), got k={k}")
    _require(q - k <= n <= q, f"C1 needs q-k <= n <= q, got n={n}")
    _require(0 <= l <= n + k - q, f"C1 needs 0 <= l <= n+k-q, got l={l}")
    return _euclidean_scaled("C1", q, k, n, l, n + k - q - l, False, l)


def construct_C2(q: int, k: int, n: int, l: int) -> ConstructionRecord:
    _split_q(q)
    _require(q > 3, "C2 needs q > 3")
    _require(1 <= k <= q // 2, f"C2 needs 1 <= k <= floor(q/2), got k={k}")
    _require(q - k + 1 <= n <= q, f"C2 needs q-k+1 <= n <= q, got n={n}")
    _require(0 <= l <= n + k - q - 1, f"C2 needs 0 <= l <= n+k-q-1, got l={l}")
    return _euclidean_scaled("C2", q, k, n, l, n + k - q - l - 1, True, l)


def construct_C3(q: int, n: int, l: int) -> ConstructionRecord:
    _split_q(q)
    _require(q > 3 and q % 2 == 1, "C3 needs odd q > 3")
    k = (q + 1) // 2
    _require((q - 1) // 2 <= n <= q, f"C3 needs (q-1)/2 <= n <= q, got n={n}")
    _require(0 <= l <= n - (q - 1) // 2, f"C3 needs 0 <= l <= n-(q-1)/2, got l={l}")
    # with 2k - 1 = q the leading-coefficient condition holds automatically,
    # so (as for A3) no extra -1 appears in s
    return _euclidean_scaled("C3", q, k, n, l, n + k - q - l, True, l)


def _euclidean_products(theorem: str, q: int, k: int, n: int, s: int, extended: bool, claimed: int, l: int) -> ConstructionRecord:
    F = field_of_order(q)
    elems = F.elements()
    a = elems[:n]
    scale = product_linear(F, elems[n : n + s])
    v = scale.eval(a)
    code = GrsCode(F, tuple(a), tuple(v), k, extended)
    params = {"q": q, "n": n, "k": k, "l": l, "s": s}
    return ConstructionRecord(theorem, params, code, InnerProduct.EUCLIDEAN, claimed)


def construct_C4(q: int, k: int, n: int, l: int) -> ConstructionRecord:
    _split_q(q)
    c = math.ceil(q / 2)
    _require(1 <= k <= q // 2, f"C4 needs 1 <= k <= floor(q/2), got k={k}")
    _require(c <= n <= min(q - k, c + k), f"C4 needs ceil(q/2) <= n <= min(q-k, ceil(q/2)+k), got n={n}")
    _require(0 <= l <= n - c, f"C4 needs 0 <= l <= n-ceil(q/2), got l={l}")
    s = q - n - k + l
    _require(0 <= s <= q - n, f"C4 needs 0 <= s <= q-n, got s={s}")
    return _euclidean_products("C4", q, k, n, s, False, l, l)


def construct_C5(q: int, k: int, n: int, l: int) -> ConstructionRecord:
    _split_q(q)
    c = math.ceil((q + 1) / 2)
    _require(1 <= k <= (q + 1) // 2, f"C5 needs 1 <= k <= floor((q+1)/2), got k={k}")
    _require(c <= n <= min(q - k + 1, c + k - 1), f"C5 needs ceil((q+1)/2) <= n <= min(q-k+1, ceil((q+1)/2)+k-1), got n={n}")
    _require(0 <= l <= n - c, f"C5 needs 0 <= l <= n-ceil((q+1)/2), got l={l}")
    if q % 2 == 1 and l == n - (q + 1) // 2:
        raise ExcludedHullDim(f"C5 excludes l = n-(q+1)/2 = {l}")
    s = q - n - k + l + 1
    _require(0 <= s <= q - n, f"C5 needs 0 <= s <= q-n, got s={s}")
    return _euclidean_products("C5", q, k, n, s, True, l, l)


def construct_C6(q: int, k: int, n: int) -> ConstructionRecord:
    _split_q(q)
    _require(q % 2 == 1, "C6 needs odd q")
    half = (q + 1) // 2
    _require(1 <= k <= half, f"C6 needs 1 <= k <= (q+1)/2, got k={k}")
    _require(half <= n <= min(q - k + 1, half + k - 1), f"C6 needs (q+1)/2 <= n <= min(q-k+1, (q+1)/2+k-1), got n={n}")
    base = n - half
    s = q - n - k + base + 1
    _require(0 <= s <= q - n, f"C6 needs 0 <= s <= q-n, got s={s}")
    return _euclidean_products("C6", q, k, n, s, True, base + 1, base + 1)


FACTORIES: dict[str, Callable[..., ConstructionRecord]] = {
    "A1": construct_A1,
    "A2": construct_A2,
    "A3": construct_A3,
    "B": construct_B,
    "B_REDUCED": construct_B_reduced,
    "C1": construct_C1,
    "C2": construct_C2,
    "C3": construct_C3,
    "C4": construct_C4,
    "C5": construct_C5,
    "C6": construct_C6,
}

FACTORY_ARGS = {
    "A1": ("q", "k", "n", "l"),
    "A2": ("q", "k", "n", "l"),
    "A3": ("q", "n", "l"),
    "B": ("q", "m", "k"),
    "B_REDUCED": ("q", "m", "k", "l"),
    "C1": ("q", "k", "n", "l"),
    "C2": ("q", "k", "n", "l"),
    "C3": ("q", "n", "l"),
    "C4": ("q", "k", "n", "l"),
    "C5": ("q", "k", "n", "l"),
    "C6": ("q", "k", "n"),
}


def construct(theorem_id: str, **params) -> ConstructionRecord:
    try:
        factory = FACTORIES[theorem_id]
    except KeyError:
        raise ParamsOutOfRange(f"unknown theorem {theorem_id!r}") from None
    names = FACTORY_ARGS[theorem_id]
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ParamsOutOfRange(f"{theorem_id} needs parameters {', '.join(missing)}")
    return factory(**{p: int(params[p]) for p in names})


def parameter_grid(theorem_id: str, q: int) -> Iterator[dict]:
    """Every legal parameter tuple of ``theorem_id`` for alphabet parameter q."""
    qq = q * q
    if theorem_id == "A1" and q >= 3:
        for k in range(1, q):
            for n in range(qq - k, qq + 1):
                for l in range(0, n + k - qq + 1):
                    yield {"q": q, "k": k, "n": n, "l": l}
    elif theorem_id == "A2" and q >= 3:
        for k in range(1, q):
            for n in range(qq - k + 1, qq + 1):
                for l in range(0, n + k - qq):
                    yield {"q": q, "k": k, "n": n, "l": l}
    elif theorem_id == "A3" and q >= 3:
        for n in range(qq - q, qq + 1):
            for l in range(0, n + q - qq + 1):
                yield {"q": q, "n": n, "l": l}
    elif theorem_id == "B":
        for m in range(2, q + 1):
            for k in range(1, m):
                yield {"q": q, "m": m, "k": k}
    elif theorem_id == "B_REDUCED":
        for m in range(2, q + 1):
            for k in range(1, m):
                for l in range(0, k):
                    yield {"q": q, "m": m, "k": k, "l": l}
    elif theorem_id in ("C1", "C2") and q > 3:
        lo_shift = 0 if theorem_id == "C1" else 1
        for k in range(1, q // 2 + 1):
            for n in range(q - k + lo_shift, q + 1):
                for l in range(0, n + k - q - lo_shift + 1):
                    yield {"q": q, "k": k, "n": n, "l": l}
    elif theorem_id == "C3" and q > 3 and q % 2 == 1:
        for n in range((q - 1) // 2, q + 1):
            for l in range(0, n - (q - 1) // 2 + 1):
                yield {"q": q, "n": n, "l": l}
    elif theorem_id == "C4":
        c = math.ceil(q / 2)
        for k in range(1, q // 2 + 1):
            for n in range(c, min(q - k, c + k) + 1):
                for l in range(0, n - c + 1):
                    if 0 <= q - n - k + l <= q - n:
                        yield {"q": q, "k": k, "n": n, "l": l}
    elif theorem_id == "C5":
        c = math.ceil((q + 1) / 2)
        for k in range(1, (q + 1) // 2 + 1):
            for n in range(c, min(q - k + 1, c + k - 1) + 1):
                for l in range(0, n - c + 1):
                    if q % 2 == 1 and l == n - (q + 1) // 2:
                        continue
                    if 0 <= q - n - k + l + 1 <= q - n:
                        yield {"q": q, "k": k, "n": n, "l": l}
    elif theorem_id == "C6" and q % 2 == 1:
        half = (q + 1) // 2
        for k in range(1, half + 1):
            for n in range(half, min(q - k + 1, half + k - 1) + 1):
                yield {"q": q, "k": k, "n": n}
