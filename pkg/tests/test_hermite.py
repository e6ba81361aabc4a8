import math

import numpy as np
import pytest
import sympy

from matschroed.hermite import (
    gauss_hermite,
    hermite_monic,
    hermite_phys,
    wave_function,
    wave_poly,
)


def test_monic_base_cases():
    np.testing.assert_array_equal(hermite_monic(0), [1.0])
    np.testing.assert_array_equal(hermite_monic(1), [0.0, 1.0])
    np.testing.assert_array_equal(hermite_monic(2), [-1.0, 0.0, 1.0])


def test_monic_rodrigues_degree_6():
    # (-1)^6 e^{x^2/2} (e^{-x^2/2})^{(6)}, sampled
    x = sympy.symbols("x")
    expr = sympy.exp(x ** 2 / 2) * sympy.diff(sympy.exp(-x ** 2 / 2), x, 6)
    c = hermite_monic(6)
    for xv in np.linspace(-3, 3, 20):
        expected = float(expr.subs(x, xv))
        got = sum(c[j] * xv ** j for j in range(7))
        assert abs(got - expected) < 1e-10 * max(1.0, abs(expected))


def test_monic_recurrence():
    for n in range(1, 12):
        prev, cur, nxt = hermite_monic(n - 1), hermite_monic(n), hermite_monic(n + 1)
        rhs = np.zeros(n + 2)
        rhs[1:] = cur
        rhs[: n] -= n * prev
        np.testing.assert_allclose(nxt, rhs, atol=1e-12)


def test_phys_recurrence_pointwise():
    xs = np.linspace(-6, 6, 61)
    for n in range(1, 21):
        Hm = np.polyval(hermite_phys(n - 1)[::-1], xs)
        Hn = np.polyval(hermite_phys(n)[::-1], xs)
        Hp = np.polyval(hermite_phys(n + 1)[::-1], xs)
        np.testing.assert_allclose(Hp, 2 * xs * Hn - 2 * n * Hm, rtol=1e-10, atol=1e-10)


def test_wave_function_values():
    assert abs(wave_function(0, 0.0) - np.pi ** -0.25) < 1e-15
    assert wave_function(1, 0.0) == 0.0


def test_wave_function_normalized():
    rule = gauss_hermite(40)
    # psi_3(x)^2 = (poly e^{-x^2/2})^2: pair with the e^{-x^2} weight
    vals = wave_function(3, rule.nodes) * np.exp(rule.nodes ** 2 / 2)
    assert abs(np.sum(rule.weights * vals ** 2) - 1.0) < 1e-12


def test_wave_function_large_n_finite():
    assert np.isfinite(wave_function(200, 1.0))


def test_wave_poly_matches_wave_function():
    xs = np.linspace(-5, 5, 11)
    for n in (0, 1, 5, 12):
        c = wave_poly(n)
        np.testing.assert_allclose(
            np.polyval(c[::-1], xs) * np.exp(-xs ** 2 / 2), wave_function(n, xs), atol=1e-12
        )


def test_wave_derivative_identity():
    # psi_n' = sqrt(n/2) psi_{n-1} - sqrt((n+1)/2) psi_{n+1}, against central differences
    h = 1e-5
    xs = np.linspace(-6, 6, 25)
    for n in range(1, 21):
        fd = (wave_function(n, xs + h) - wave_function(n, xs - h)) / (2 * h)
        ident = np.sqrt(n / 2.0) * wave_function(n - 1, xs) - np.sqrt((n + 1) / 2.0) * wave_function(
            n + 1, xs
        )
        np.testing.assert_allclose(fd, ident, atol=1e-6)


def test_gauss_hermite_order_1_and_2():
    r1 = gauss_hermite(1)
    np.testing.assert_allclose(r1.nodes, [0.0])
    np.testing.assert_allclose(r1.weights, [np.sqrt(np.pi)])
    r2 = gauss_hermite(2)
    np.testing.assert_allclose(sorted(r2.nodes), [-1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-14)
    np.testing.assert_allclose(r2.weights, [np.sqrt(np.pi) / 2] * 2, atol=1e-14)


def test_gauss_hermite_invariants():
    for m in (1, 5, 17, 30):
        rule = gauss_hermite(m)
        assert abs(np.sum(rule.weights) - np.sqrt(np.pi)) < 1e-12
        np.testing.assert_allclose(rule.nodes, -rule.nodes[::-1], atol=1e-13)


def test_gauss_hermite_moment():
    # int x^10 e^{-x^2} dx = 945 sqrt(pi) / 32
    rule = gauss_hermite(30)
    got = np.sum(rule.weights * rule.nodes ** 10)
    expected = 945 * np.sqrt(np.pi) / 32
    assert abs(got - expected) < 1e-12 * expected


@pytest.mark.parametrize("p", range(0, 19))
def test_gauss_hermite_polynomial_exactness(p):
    rule = gauss_hermite(10)  # exact through degree 19
    got = np.sum(rule.weights * rule.nodes ** p)
    expected = 0.0 if p % 2 else math.gamma((p + 1) / 2.0)
    assert abs(got - expected) < 1e-11 * max(1.0, abs(expected))


def test_scalar_matrix_elements():
    # (x)_{nm} and (x^2)_{nm} for wave functions, via quadrature
    rule = gauss_hermite(40)
    t, w = rule.nodes, rule.weights
    psis = [wave_function(n, t) * np.exp(t ** 2 / 2) for n in range(13)]
    for n in range(11):
        for m in range(11):
            x1 = np.sum(w * t * psis[n] * psis[m])
            expected1 = 0.0
            if m == n - 1:
                expected1 = np.sqrt(n / 2.0)
            elif m == n + 1:
                expected1 = np.sqrt((n + 1) / 2.0)
            assert abs(x1 - expected1) < 1e-10
            x2 = np.sum(w * t ** 2 * psis[n] * psis[m])
            expected2 = 0.0
            if m == n - 2:
                expected2 = 0.5 * np.sqrt(n * (n - 1))
            elif m == n:
                expected2 = n + 0.5
            elif m == n + 2:
                expected2 = 0.5 * np.sqrt((n + 1) * (n + 2))
            assert abs(x2 - expected2) < 1e-10


def test_input_validation():
    with pytest.raises(ValueError):
        gauss_hermite(0)
    with pytest.raises(ValueError):
        hermite_monic(-1)
    with pytest.raises(ValueError):
        wave_function(-2, 0.0)
