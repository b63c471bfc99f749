from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge.errors import FieldMismatch
from hullforge.gf import field_create
from hullforge.poly import NEG_INF, Poly, interpolate, product_linear

F9 = field_create(3, 2)
F16 = field_create(2, 4)

coeff_lists = st.lists(st.integers(0, 8), max_size=6)


def test_trim_and_degree():
    assert Poly(F9, [1, 2, 0, 0]).degree == 1
    assert Poly(F9, [0, 0]).degree is NEG_INF
    assert NEG_INF < -5 and not NEG_INF > 0
    with pytest.raises(TypeError):
        NEG_INF + 1


def test_eval_known_values():
    # x^2 + 1 vanishes at omega^2 and omega^6 in GF(9) built on x^2 + 1
    f = Poly(F9, [1, 0, 1])
    roots = [int(x) for x in F9.elements() if f.eval(int(x)) == 0]
    assert sorted(int(F9.log(r)) for r in roots) == [2, 6]


def test_product_linear_has_exact_roots():
    roots = F16.elements()[3:8]
    f = product_linear(F16, roots)
    assert f.degree == 5 and f.coeff(5) == 1
    vals = f.eval(F16.elements())
    assert set(np.flatnonzero(vals == 0).tolist()) == set(range(3, 8))
    assert product_linear(F16, []) == Poly(F16, [1])


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(0, 8))
def test_ring_homomorphism(a, b, x):
    f, g = Poly(F9, a), Poly(F9, b)
    assert (f * g).eval(x) == F9.mul(f.eval(x), g.eval(x))
    assert (f + g).eval(x) == F9.add(f.eval(x), g.eval(x))
    assert (f - f).is_zero()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 15), min_size=1, max_size=8))
def test_interpolation_round_trip(coeffs):
    f = Poly(F16, coeffs)
    xs = F16.elements()[: max(len(coeffs), 1)]
    g = interpolate(F16, xs, f.eval(xs))
    assert g == f


@settings(max_examples=50, deadline=None)
@given(coeff_lists, st.integers(0, 8))
def test_divmod_linear(coeffs, r):
    f = Poly(F9, coeffs)
    quot, rem = f.divmod_linear(r)
    assert rem == f.eval(r)
    back = quot * Poly(F9, [int(F9.neg(r)), 1]) + Poly(F9, [rem])
    assert back == f


def test_frobenius_poly_conjugates_coefficients():
    f = Poly(F9, [F9.omega, 1, 5])
    assert f.frobenius().coeffs.tolist() == F9.conj(f.coeffs).tolist()


def test_interpolation_rejects_repeated_nodes():
    with pytest.raises(ValueError):
        interpolate(F9, [1, 1], [0, 1])


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Poly(F9, [1]) + Poly(F16, [1])
