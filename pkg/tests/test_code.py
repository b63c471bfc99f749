from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge.code import (
    GrsCode,
    InnerProduct,
    code_from_dict,
    code_to_dict,
    dual_generator,
    dual_membership_oracle,
    encode_poly,
    generator_matrix,
    hull_dim,
    hull_dim_gram,
    hull_report,
    in_dual,
    mds_distance,
    min_distance_exhaustive,
    parity_check_matrix,
    u_values,
)
from hullforge.errors import CapExceeded, DegreeTooHigh, DuplicateLocators, InvalidCode, NotQuadraticExtension
from hullforge.gf import field_create
from hullforge.linalg import mat_mul
from hullforge.poly import Poly

EU, HE = InnerProduct.EUCLIDEAN, InnerProduct.HERMITIAN


def random_code(F, rng, n, k, extended=False):
    loc = rng.choice(F.order, size=n, replace=False)
    mult = F.random_elements(rng, n, nonzero=True)
    return GrsCode(F, tuple(loc), tuple(mult), k, extended)


def brute_hull(code, kind):
    """Size of C ∩ C^perp by enumerating every codeword."""
    F = code.field
    g = code.generator.data
    other = F.conj(g) if kind is HE else g
    count = 0
    for msg in itertools.product(range(F.order), repeat=code.k):
        w = F.matmul(np.array([msg]), g)[0]
        if not np.any(F.matmul(other, w[:, None])):
            count += 1
    l = 0
    while F.order**l < count:
        l += 1
    return l


def test_generator_rows_are_scaled_powers():
    F = field_create(5, 1)
    code = GrsCode(F, (1, 2, 3), (1, 2, 4), 2, extended=True)
    assert code.length == 4
    assert generator_matrix(code).data.tolist() == [[1, 2, 4, 0], [1, 4, 2, 1]]


def test_u_values_definition():
    F = field_create(2, 4)
    a = F.elements()[:6]
    u = u_values(F, a)
    for i in range(6):
        prod = 1
        for j in range(6):
            if i != j:
                prod = int(F.mul(prod, F.sub(a[i], a[j])))
        assert u[i] == F.inv(prod)


@pytest.mark.parametrize("pe,n,k,ext", [((3, 1), 3, 2, False), ((2, 2), 4, 2, True), ((5, 1), 5, 3, False), ((3, 2), 6, 2, True)])
def test_min_distance_is_mds(pe, n, k, ext):
    F = field_create(*pe)
    code = random_code(F, np.random.default_rng(n * k), n, k, ext)
    assert min_distance_exhaustive(code) == code.length - k + 1


def test_min_distance_against_full_enumeration():
    F = field_create(3, 1)
    code = GrsCode(F, (0, 1, 2), (1, 1, 2), 2, extended=True)
    words = [F.matmul(np.array([m]), code.generator.data)[0] for m in itertools.product(range(3), repeat=2)]
    want = min(int(np.count_nonzero(w)) for w in words if np.any(w))
    assert min_distance_exhaustive(code) == want == 3


def test_distance_cap(monkeypatch):
    F = field_create(3, 2)
    code = random_code(F, np.random.default_rng(0), 8, 4)
    monkeypatch.setenv("HULLFORGE_CAP", "100")
    with pytest.raises(CapExceeded):
        min_distance_exhaustive(code)
    assert mds_distance(code) == (5, "by-construction")


@pytest.mark.parametrize("kind,pe", [(EU, (5, 1)), (EU, (2, 3)), (HE, (2, 2)), (HE, (3, 2))])
def test_hull_matches_brute_force(kind, pe):
    F = field_create(*pe)
    rng = np.random.default_rng(11)
    for _ in range(12):
        n = int(rng.integers(2, F.order + 1))
        k = int(rng.integers(1, min(n, 3) + 1))
        code = random_code(F, rng, n, k, bool(rng.integers(2)) and k <= n)
        assert hull_dim(code, kind) == brute_hull(code, kind)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 2), (2, 4), (5, 2)]), st.integers(0, 2**31), st.booleans())
def test_hull_routes_agree(pe, seed, ext):
    F = field_create(*pe)
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, F.order))
    k = int(rng.integers(1, n + 1))
    code = random_code(F, rng, n, k, ext)
    for kind in (EU, HE):
        assert hull_dim(code, kind) == hull_dim_gram(code.generator, kind)


def test_parity_check_annihilates_code():
    F = field_create(3, 2)
    code = random_code(F, np.random.default_rng(5), 7, 3, True)
    h = parity_check_matrix(code)
    assert h.rows == code.length - code.k
    assert mat_mul(code.generator, h.T).is_zero()
    d = dual_generator(code.generator, HE)
    assert mat_mul(code.generator, d.conj().T).is_zero()


@pytest.mark.parametrize("kind,pe", [(EU, (7, 1)), (HE, (3, 2)), (HE, (2, 2))])
def test_dual_oracle_agrees_with_row_space(kind, pe):
    F = field_create(*pe)
    rng = np.random.default_rng(2)
    for _ in range(6):
        n = int(rng.integers(3, F.order))
        k = int(rng.integers(1, n // 2 + 1))
        ext = bool(rng.integers(2))
        code = random_code(F, rng, n, k, ext)
        for msg in itertools.product(range(F.order), repeat=k):
            f = Poly(F, msg)
            assert dual_membership_oracle(code, f, kind) == in_dual(code, encode_poly(code, f), kind)


def test_dual_oracle_degree_guard():
    F = field_create(7, 1)
    code = GrsCode(F, (1, 2, 3, 4), (1, 1, 1, 1), 2)
    with pytest.raises(DegreeTooHigh):
        dual_membership_oracle(code, Poly(F, [0, 0, 1]), EU)


def test_code_validation():
    F = field_create(5, 1)
    with pytest.raises(DuplicateLocators):
        GrsCode(F, (1, 1), (1, 1), 1)
    with pytest.raises(InvalidCode):
        GrsCode(F, (1, 2), (1, 0), 1)
    with pytest.raises(InvalidCode):
        GrsCode(F, (1, 2), (1, 1), 3)
    with pytest.raises(NotQuadraticExtension):
        hull_dim(GrsCode(F, (1, 2), (1, 1), 1), HE)


def test_serialization_round_trip():
    F = field_create(3, 4)
    code = random_code(F, np.random.default_rng(9), 12, 4, True)
    d = code_to_dict(code)
    assert all(t == "0" or t.startswith("w^") for t in d["locators"])
    assert code_from_dict(d) == code


def test_hull_report():
    F = field_create(3, 2)
    code = GrsCode(F, tuple(F.elements()[:9]), (1,) * 9, 2)
    rep = hull_report(code, kinds=(EU, HE))
    assert rep.to_dict()["n"] == 9 and rep.is_mds and rep.d == 8
    assert rep.hull_dim_hermitian == hull_dim(code, HE)
