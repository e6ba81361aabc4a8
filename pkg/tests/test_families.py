import math

import numpy as np
import pytest

from matschroed.families import (
    FamilySpec,
    build_family,
    closed_form_N2,
    gamma_seq,
    weight_eval,
)
from matschroed.expansion import inner_product, inner_product_weighted

SPECS = [
    FamilySpec(1, 2, [1.0]),
    FamilySpec(1, 3, [0.8, -1.3]),
    FamilySpec(2, 2, [1.0]),
    FamilySpec(2, 3, [0.8, -1.3]),
]


def test_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(3, 2, [1.0])
    with pytest.raises(ValueError):
        FamilySpec(1, 0, [])
    with pytest.raises(ValueError):
        FamilySpec(1, 3, [1.0])


def test_spec_json_roundtrip():
    spec = FamilySpec(2, 3, [0.5, -2.0])
    assert FamilySpec.from_json(spec.to_json()) == spec


def test_gamma_seq_values():
    g1 = gamma_seq(FamilySpec(1, 2, [1.0]), 4)
    np.testing.assert_allclose(g1, [1.0, 1.5, 2.0, 2.5, 3.0])
    g2 = gamma_seq(FamilySpec(2, 2, [2.0]), 4)
    np.testing.assert_allclose(g2, [1.0, 1.0, 3.0, 7.0, 13.0])
    with pytest.raises(ValueError):
        gamma_seq(FamilySpec(1, 3, [1.0, 1.0]), 2)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_weight_properties(spec):
    np.testing.assert_allclose(weight_eval(spec, 0.0), np.eye(spec.size), atol=1e-15)
    for x in (-2.0, 0.7, 3.1):
        W = weight_eval(spec, x)
        np.testing.assert_allclose(W, W.T, atol=1e-13)
        assert np.all(np.linalg.eigvalsh(W) > 0)


def test_weight_scalar_case_is_gaussian():
    spec = FamilySpec(1, 1, [])
    xs = np.linspace(-3, 3, 7)
    np.testing.assert_allclose(weight_eval(spec, xs)[:, 0, 0], np.exp(-xs ** 2), atol=1e-15)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_monic_leading_coefficient(spec):
    ctx = build_family(spec, 6)
    for n in range(7):
        np.testing.assert_allclose(ctx.monic[n][n], np.eye(spec.size), atol=1e-12)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_weighted_orthogonality(spec):
    ctx = build_family(spec, 8)
    for n in range(9):
        for m in range(n):
            G = inner_product_weighted(ctx.pn[n], ctx.pn[m], spec)
            assert np.max(np.abs(G)) < 1e-10


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_norms_diagonal_positive(spec):
    ctx = build_family(spec, 8)
    for n in range(9):
        G = inner_product_weighted(ctx.pn[n], ctx.pn[n], spec)
        off = G - np.diag(np.diag(G))
        assert np.max(np.abs(off)) < 1e-10 * np.max(np.abs(G))
        assert np.all(np.real(np.diag(G)) > 0)
        np.testing.assert_allclose(np.diag(ctx.norms[n]), np.real(np.diag(G)), rtol=1e-10)


@pytest.mark.parametrize("kind", [1, 2])
def test_norm_closed_form_N2(kind):
    spec = FamilySpec(kind, 2, [1.0])
    ctx = build_family(spec, 8)
    g = gamma_seq(spec, 11)
    for n in range(9):
        base = math.factorial(n) * math.sqrt(math.pi) / 2 ** n
        if kind == 1:
            expected = base * np.array([g[n + 1], 1.0 / g[n]])
        else:
            expected = base * np.array([g[n + 2], 1.0 / g[n]])
        np.testing.assert_allclose(np.diag(ctx.norms[n]), expected, rtol=1e-10)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_orthonormality_identity_weight(spec):
    ctx = build_family(spec, 8)
    for n in range(9):
        for m in range(9):
            G = inner_product(ctx.phi_tilde[n], ctx.phi_tilde[m])
            expected = np.eye(spec.size) if n == m else np.zeros((spec.size, spec.size))
            assert np.max(np.abs(G - expected)) < 1e-10


@pytest.mark.parametrize("kind", [1, 2])
@pytest.mark.parametrize("nu1", [0.5, 1.0, 2.0])
def test_closed_form_matches_pipeline(kind, nu1):
    spec = FamilySpec(kind, 2, [nu1])
    ctx = build_family(spec, 8)
    xs = np.linspace(-4, 4, 17)
    for n in range(9):
        cf = closed_form_N2(spec, n)
        for x in xs:
            np.testing.assert_allclose(ctx.phi_tilde[n](x), cf(x), atol=1e-10)


def test_closed_form_rejects_wrong_size():
    with pytest.raises(ValueError):
        closed_form_N2(FamilySpec(1, 3, [1.0, 1.0]), 0)


def test_build_family_quad_order_validation():
    spec = FamilySpec(1, 2, [1.0])
    with pytest.raises(ValueError):
        build_family(spec, 10, quad_order=3)
    with pytest.raises(ValueError):
        build_family(spec, -1)


def test_build_family_scalar_reduces_to_hermite():
    # N = 1: P_n must be H_n / 2^n, the monic orthogonal family for e^{-x^2}
    from matschroed.hermite import hermite_phys

    ctx = build_family(FamilySpec(1, 1, []), 6)
    for n in range(7):
        np.testing.assert_allclose(
            ctx.pn[n][:, 0, 0], np.array(hermite_phys(n)) / 2.0 ** n, atol=1e-12
        )
