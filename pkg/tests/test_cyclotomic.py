import cmath
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from galchar.cyclotomic import (
    CONDUCTOR_BOUND,
    ConductorOverflow,
    Cyclotomic,
    cyc,
    cyc_from_root_multiplicities,
    cyclotomic_polynomial,
    phi,
    zeta,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert phi(12) == 4


def test_root_multiplicities_examples():
    assert cyc_from_root_multiplicities(3, [0, 1, 1]) == cyc(-1)
    i = cyc_from_root_multiplicities(4, [0, 1, 0, 0])
    assert i == zeta(4)
    assert i * i == cyc(-1)
    v = cyc_from_root_multiplicities(5, [0, 1, 0, 0, 1])
    # minimal-polynomial reduction: z + z^4 = -1 - z^2 - z^3
    assert v.conductor == 5
    assert v.coeffs == (-1, 0, -1, -1)
    assert v == zeta(5) + zeta(5, 4)


def test_root_multiplicities_length_check():
    with pytest.raises(ValueError):
        cyc_from_root_multiplicities(3, [1, 2])


def test_arithmetic_examples():
    assert zeta(3) + zeta(3, 2) == cyc(-1)
    assert zeta(4) * zeta(4) == cyc(-1)
    v = zeta(5) + zeta(5, 4)
    assert v.conjugate() == v  # k = -1 permutes {1, 4}


def test_golden_ratio_approx():
    v = zeta(5) + zeta(5, 4)
    assert abs(v.to_complex() - (5**0.5 - 1) / 2) < 1e-9


def test_galois_apply_examples():
    assert zeta(3).galois_apply(2) == zeta(3, 2)
    for k in (1, 3, 7, 9):
        assert cyc(-1).galois_apply(k) == cyc(-1)
    v = zeta(5) + zeta(5, 4)
    assert v.galois_apply(2) == zeta(5, 2) + zeta(5, 3)
    with pytest.raises(ValueError):
        zeta(6).galois_apply(2)


def test_is_rational():
    assert cyc(-1).is_rational
    assert not zeta(3).is_rational
    assert (zeta(3) + zeta(3, 2)).is_rational
    assert zeta(8) * zeta(8) == zeta(4)  # equality rebases conductors
    with pytest.raises(ValueError):
        zeta(3).rational_value()


def test_mixed_conductor_equality():
    assert zeta(6, 2) == zeta(3)
    assert zeta(8, 2) == zeta(4)
    assert zeta(4) != zeta(8)
    assert cyc(5) == 5
    assert cyc(0).is_zero


def test_conductor_overflow():
    with pytest.raises(ConductorOverflow):
        zeta(CONDUCTOR_BOUND + 1)


small_values = st.builds(
    lambda e, coeffs: Cyclotomic(e, tuple(coeffs[: max(1, phi(e))])),
    st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 12]),
    st.lists(st.integers(min_value=-9, max_value=9), min_size=12, max_size=12),
)


@given(small_values, small_values, st.integers(min_value=0, max_value=10**6))
@settings(max_examples=150, deadline=None)
def test_galois_is_ring_automorphism(v, w, salt):
    e = v.conductor * w.conductor // gcd(v.conductor, w.conductor)
    units = [u for u in range(1, e + 1) if gcd(u, e) == 1]
    u = units[salt % len(units)]
    assert (v + w).galois_apply(u) == v.galois_apply(u) + w.galois_apply(u)
    assert (v * w).galois_apply(u) == v.galois_apply(u) * w.galois_apply(u)


@given(small_values)
@settings(max_examples=150, deadline=None)
def test_galois_composition(v):
    e = v.conductor
    units = [k for k in range(1, e + 1) if gcd(k, e) == 1]
    for k1 in units[:4]:
        for k2 in units[:4]:
            lhs = v.galois_apply(k1).galois_apply(k2)
            assert lhs == v.galois_apply((k1 * k2) % e if e > 1 else 1)


@given(small_values)
@settings(max_examples=150, deadline=None)
def test_conjugation_involution_and_norm(v):
    assert v.conjugate().conjugate() == v
    norm = v * v.conjugate()
    assert norm.to_complex().real > -1e-9
    assert abs(norm.to_complex().imag) < 1e-9


@given(small_values)
@settings(max_examples=150, deadline=None)
def test_render_parse_roundtrip(v):
    assert Cyclotomic.parse(str(v)) == v


@given(small_values, small_values, small_values)
@settings(max_examples=100, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a
    assert a * (b * c) == (a * b) * c


def test_numeric_agreement():
    # the float view matches exact arithmetic on a small grid
    vals = [zeta(e, k) for e in (3, 4, 5, 8) for k in range(1, e)]
    for a in vals[:8]:
        for b in vals[:8]:
            exact = (a * b).to_complex()
            approx = a.to_complex() * b.to_complex()
            assert cmath.isclose(exact, approx, abs_tol=1e-9)
