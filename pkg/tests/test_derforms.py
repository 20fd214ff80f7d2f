"""Derivation-based calculus on matrix algebras: differential, wedge,
involution, Hodge star, integration, and the evaluation pairings."""
from __future__ import annotations

import numpy as np
import pytest

from ncgauge import (
    BasisMismatchError,
    DegreeError,
    DerForm,
    Derivation,
    MatrixBasis,
    canonical_theta,
    dagger,
    dinvolution,
    dprime,
    evaluate,
    hodge,
    koszul_evaluate,
    nc_integrate,
    random_traceless_hermitian,
    wedge,
)
from ncgauge.derforms import random_form


# ---------------------------------------------------------------------------
# differential
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("degree", [0, 1, 2])
def test_differential_squares_to_zero(n, degree):
    b = MatrixBasis.gellmann(n)
    rng = np.random.default_rng(10 * n + degree)
    w = random_form(b, degree, rng)
    assert dprime(dprime(w)).norm() < 1e-10 * max(1.0, w.norm())


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("p,q", [(0, 0), (0, 1), (1, 1), (1, 2)])
def test_graded_leibniz(n, p, q):
    b = MatrixBasis.gellmann(n)
    rng = np.random.default_rng(100 * n + 10 * p + q)
    f = random_form(b, p, rng)
    g = random_form(b, q, rng)
    lhs = dprime(wedge(f, g))
    rhs = wedge(dprime(f), g) + (-1.0) ** p * wedge(f, dprime(g))
    assert (lhs - rhs).norm() < 1e-10 * max(1.0, lhs.norm())


def test_differential_of_matrix_is_frame_commutators(basis2, rng):
    a = random_traceless_hermitian(2, rng) + 1j * random_traceless_hermitian(2, rng)
    da = dprime(DerForm.matrix(basis2, a))
    for k in range(3):
        expect = 1j * (basis2.mats[k] @ a - a @ basis2.mats[k])
        assert np.abs(da.component((k,)) - expect).max() < 1e-13


def test_differential_equals_canonical_bracket(basis3, rng):
    # d'a = [i theta, a] = (i theta) a - a (i theta) for degree-0 a
    a = random_traceless_hermitian(3, rng)
    w = DerForm.matrix(basis3, a)
    th = canonical_theta(basis3)
    bracket = wedge(th, w) - wedge(w, th)
    assert (dprime(w) - bracket).norm() < 1e-12


@pytest.mark.parametrize("n", [2, 3])
def test_canonical_one_form_structure_equation(n):
    # d'(i theta) = (i theta)^2, equivalently d' theta^m = -sum C theta theta
    b = MatrixBasis.gellmann(n)
    th = canonical_theta(b)
    assert (dprime(th) - wedge(th, th)).norm() < 1e-12


# ---------------------------------------------------------------------------
# involution
# ---------------------------------------------------------------------------

def test_involution_conjugate_transposes_components(basis2, rng):
    w = random_form(basis2, 2, rng)
    ws = dinvolution(w)
    for key, mat in w:
        assert np.array_equal(ws.component(key), dagger(mat))
    # canonical one-form is anti-real
    th = canonical_theta(basis2)
    assert (dinvolution(th) + th).norm() == 0.0


@pytest.mark.parametrize("p,q", [(0, 1), (1, 1), (1, 2)])
def test_involution_reverses_products(basis2, p, q):
    rng = np.random.default_rng(31 * p + q)
    f = random_form(basis2, p, rng)
    g = random_form(basis2, q, rng)
    lhs = dinvolution(wedge(f, g))
    rhs = (-1.0) ** (p * q) * wedge(dinvolution(g), dinvolution(f))
    assert (lhs - rhs).norm() < 1e-10 * max(1.0, lhs.norm())


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_involution_commutes_with_differential(basis2, degree):
    rng = np.random.default_rng(degree + 1)
    w = random_form(basis2, degree, rng)
    assert (dprime(dinvolution(w)) - dinvolution(dprime(w))).norm() < 1e-10


# ---------------------------------------------------------------------------
# evaluation pairings
# ---------------------------------------------------------------------------

def test_frame_duality(basis3, rng):
    w = random_form(basis3, 1, rng)
    for k in range(basis3.dim):
        val = evaluate(w, [Derivation.frame(basis3, k)])
        assert np.abs(val - w.component((k,))).max() < 1e-14


def test_evaluate_antisymmetry(basis2, rng):
    w = random_form(basis2, 2, rng)
    x = Derivation.frame(basis2, 0)
    y = Derivation.frame(basis2, 1)
    assert np.abs(evaluate(w, [x, y]) + evaluate(w, [y, x])).max() < 1e-13
    assert np.abs(evaluate(w, [x, x])).max() < 1e-13


def test_frame_bracket_reproduces_structure_constants(basis3):
    # [ad_{iE_k}, ad_{iE_l}] = ad_{sum_m C[k,l,m] iE_m}
    for k in range(3):
        for l in range(3):
            br = Derivation.frame(basis3, k).bracket(Derivation.frame(basis3, l))
            expect = 1j * np.einsum("m,mab->ab", basis3.c[k, l], basis3.mats)
            assert np.abs(br.gamma - expect).max() < 1e-12
            assert np.abs(br.coeffs - basis3.c[k, l]).max() < 1e-12


def test_koszul_formula_matches_differential(basis2, basis3, rng):
    # X w(Y) - Y w(X) - w([X, Y]) computed independently of dprime
    for b in (basis2, basis3):
        w = random_form(b, 1, rng)
        dw = dprime(w)
        for i in range(b.dim):
            for j in range(i + 1, b.dim):
                x, y = Derivation.frame(b, i), Derivation.frame(b, j)
                lhs = evaluate(dw, [x, y])
                rhs = koszul_evaluate(w, x, y)
                assert np.abs(lhs - rhs).max() < 1e-12


def test_koszul_rejects_higher_degrees(basis2, rng):
    w = random_form(basis2, 2, rng)
    x, y = Derivation.frame(basis2, 0), Derivation.frame(basis2, 1)
    with pytest.raises(DegreeError):
        koszul_evaluate(w, x, y)


# ---------------------------------------------------------------------------
# Hodge star and integration
# ---------------------------------------------------------------------------

def test_hodge_frozen_values_n2(basis2):
    # n = 2 has g = identity, so the star is the bare permutation duality
    one = np.eye(2, dtype=complex)
    th0 = DerForm.monomial(basis2, (0,), one)
    assert [k for k, _ in hodge(th0)] == [(1, 2)]
    assert np.abs(hodge(th0).component((1, 2)) - one).max() < 1e-14

    th01 = DerForm.monomial(basis2, (0, 1), one)
    assert np.abs(hodge(th01).component((2,)) - one).max() < 1e-14

    unit = DerForm.matrix(basis2, one)
    assert np.abs(hodge(unit).component((0, 1, 2)) - one).max() < 1e-14
    top = DerForm.monomial(basis2, (0, 1, 2), one)
    assert np.abs(hodge(top).component(()) - one).max() < 1e-14


def test_hodge_frozen_values_n3(basis3):
    # g = (2/3) id on 8 frame directions: sqrt(det g) = (2/3)^4 and each
    # raised index contributes 3/2, so star(theta^0) = (8/27) theta^{1..7}
    th0 = DerForm.monomial(basis3, (0,), np.eye(3, dtype=complex))
    h = hodge(th0)
    assert [k for k, _ in h] == [tuple(range(1, 8))]
    assert h.component(tuple(range(1, 8)))[0, 0] == pytest.approx(8.0 / 27.0)


@pytest.mark.parametrize("n,degree", [(2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (3, 2)])
def test_double_hodge_sign(n, degree):
    b = MatrixBasis.gellmann(n)
    rng = np.random.default_rng(5 * n + degree)
    w = random_form(b, degree, rng)
    d = b.dim
    sign = (-1.0) ** (degree * (d - degree))
    assert (hodge(hodge(w)) - sign * w).norm() < 1e-10 * max(1.0, w.norm())


def test_hodge_needs_homogeneous(basis2, rng):
    w = random_form(basis2, 0, rng) + DerForm.monomial(
        basis2, (0,), np.eye(2, dtype=complex)
    )
    with pytest.raises(DegreeError):
        hodge(w)


def test_integral_normalization(basis2, basis3):
    # integral of a . volume = tr(a)/n; the top component carries 1/sqrt(g)
    a2 = np.diag([1.0, 3.0]).astype(complex)
    top2 = DerForm.monomial(basis2, (0, 1, 2), a2)
    assert nc_integrate(top2) == pytest.approx(2.0)  # tr/2, sqrt(g)=1

    a3 = np.diag([1.0, 2.0, 3.0]).astype(complex)
    top3 = DerForm.monomial(basis3, tuple(range(8)), a3)
    assert nc_integrate(top3) == pytest.approx(27.0 * 6.0 / 16.0 / 3.0 * 3.0)
    # equivalently tr(a)/(n sqrt(g)) = 6 / (3 * (2/3)^4) = 10.125
    assert nc_integrate(top3) == pytest.approx(10.125)


def test_integral_vanishes_below_top_degree(basis2, rng):
    w = random_form(basis2, 2, rng)
    assert nc_integrate(w) == 0.0


@pytest.mark.parametrize("n", [2, 3])
def test_integral_kills_differentials(n):
    b = MatrixBasis.gellmann(n)
    rng = np.random.default_rng(n)
    eta = random_form(b, b.dim - 1, rng)
    assert abs(nc_integrate(dprime(eta))) < 1e-10 * max(1.0, eta.norm())


def test_pairing_positivity(basis2, rng):
    # integral of w* wedge (star w) is positive for nonzero w
    for degree in (0, 1, 2, 3):
        w = random_form(basis2, degree, rng)
        val = nc_integrate(wedge(dinvolution(w), hodge(w)))
        assert abs(val.imag) < 1e-10 * abs(val)
        assert val.real > 0.0


# ---------------------------------------------------------------------------
# bookkeeping
# ---------------------------------------------------------------------------

def test_wedge_anticommutation_and_nilpotency(basis2):
    one = np.eye(2, dtype=complex)
    th0 = DerForm.monomial(basis2, (0,), one)
    th1 = DerForm.monomial(basis2, (1,), one)
    assert (wedge(th0, th1) + wedge(th1, th0)).norm() < 1e-14
    assert wedge(th0, th0).norm() == 0.0


def test_mixed_bases_rejected(basis2, basis3, rng):
    w2 = random_form(basis2, 1, rng)
    w3 = random_form(basis3, 1, rng)
    with pytest.raises(BasisMismatchError):
        wedge(w2, w3)


def test_record_roundtrip(basis2, rng):
    w = random_form(basis2, 2, rng)
    rec = w.to_record()
    back = DerForm.from_record(basis2, rec)
    assert (w - back).norm() == 0.0


def test_degree_bookkeeping(basis2, rng):
    w = random_form(basis2, 2, rng)
    assert w.is_homogeneous() and w.degree() == 2 and w.degrees() == [2]
    z = DerForm.zero(basis2)
    assert z.norm() == 0.0 and z.degrees() == []
    with pytest.raises(DegreeError):
        evaluate(w, [Derivation.frame(basis2, 0)])
