import random
from fractions import Fraction

import pytest

from sl2kxy.cofactors import cofactors, lemma2_split
from sl2kxy.decompose import decompose, decompose_theorem1, verify_certificate
from sl2kxy.endo import AffineAuto, apply
from sl2kxy.errors import (InternalDivisionFailure, NoLowDegreeEntry, NotSL2,
                           PreconditionViolated)
from sl2kxy.generate import (equal_degree_row, generate_random_instance, random_poly,
                             scrambled_matrix)
from sl2kxy.homog import StarData, alpha_sequence, verify_star
from sl2kxy.mat import (COHN_MATRIX, J, Certificate, CohnFactor, L, Mat2, U,
                        certificate_from_json, certificate_to_json, product)
from sl2kxy.poly import Poly, exact_div

x, y = Poly.x(), Poly.y()
P_ = Poly.coerce


# decomposition

def test_cohn_matrix_certificate():
    cert = decompose_theorem1(COHN_MATRIX)
    assert cert.theta == AffineAuto.identity()
    assert cert.pre == [] and cert.post == []
    assert cert.cohn.form == "A" and cert.cohn.delta == -1 and cert.cohn.psi == y
    assert verify_certificate(COHN_MATRIX, cert)


def test_identity_has_empty_certificate():
    cert = decompose_theorem1(Mat2.identity())
    assert cert.pre == [] and cert.post == [] and cert.cohn is None
    assert verify_certificate(Mat2.identity(), Certificate(AffineAuto.identity()))


def test_tampered_certificate_fails_with_diff():
    cert = decompose_theorem1(COHN_MATRIX)
    bad = Certificate(cert.theta, cert.pre, CohnFactor.A(-1, y + 1), cert.post)
    verdict = verify_certificate(COHN_MATRIX, bad)
    assert not verdict
    assert set(verdict.diff) == {"a12", "a21", "a22"}
    assert verdict.diff["a12"] == x


def test_upper_lower_products_need_no_cohn_factor():
    rng = random.Random(17)
    done = 0
    while done < 30:
        A = U(random_poly(rng, 3)).matrix() @ L(random_poly(rng, 3)).matrix()
        if min(e.degree() for e in A.entries()) > 2:
            continue
        cert = decompose_theorem1(A)
        assert cert.cohn is None
        assert verify_certificate(A, cert)
        done += 1


def test_rejections():
    with pytest.raises(NotSL2):
        decompose(Mat2("x", 0, 0, "y"))
    A = product([L("x^3 + y"), U("x*y^2 - 3"), L("y^5 + x")])
    with pytest.raises(NoLowDegreeEntry):
        decompose(A)


def test_cohn_b_with_scale_and_y_power():
    for gamma, k, scale in ((2, 3, 4), (Fraction(1, 2), 2, -3), (-1, 4, 1)):
        C = CohnFactor.B(gamma, k, scale).matrix()
        for M in (C, apply(AffineAuto(0, 1, 1, 0), C), product([L("x^2 + y"), C, U("y^3 - x")])):
            cert = decompose_theorem1(M)
            assert cert.cohn is not None and cert.cohn.form == "B" and cert.cohn.k == k
            assert verify_certificate(M, cert)


def test_fuzz_round_trip():
    for seed in range(60):
        inst = generate_random_instance(seed, "matrix", 6, 8)
        assert product(inst.factors) == inst.matrix
        assert verify_certificate(inst.matrix, decompose_theorem1(inst.matrix))
        M, factors = scrambled_matrix(seed)
        assert product(factors) == M
        assert verify_certificate(M, decompose_theorem1(M))


def test_trace_mode():
    A = product([L("x"), Mat2("x^2 + y", 1, -1, 0), U("x^3")])
    assert A.det() == 1
    d = decompose(A, trace=True)
    assert d.trace[0].startswith("step 1: ")
    assert all(" -> row=(" in ln for ln in d.trace)


def test_certificate_json_round_trip():
    for seed in range(10):
        M, _ = scrambled_matrix(seed)
        cert = decompose_theorem1(M)
        again = certificate_from_json(certificate_to_json(cert))
        assert verify_certificate(M, again)


# homogeneous identities

def test_worked_example():
    d = alpha_sequence("x*y + 1", "x^2", "1 - x*y", "y^2")
    assert (d.n, d.m, d.phi) == (2, 2, x)
    assert d.alphas == [-y, Poly(), x]
    assert verify_star(d) and d.degrees_ok()


def test_perturbed_alpha_fails_at_that_index():
    d = alpha_sequence("x*y + 1", "x^2", "1 - x*y", "y^2")
    d.alphas[2] = x + 1
    assert not verify_star(d)
    assert d.failures == [2]


def test_zero_witness_is_rejected():
    d = StarData(2, 2, x, [Poly()] * 3, P_("x*y + 1"), P_("x^2"), Poly(), Poly())
    assert not verify_star(d)


def test_star_preconditions():
    with pytest.raises(PreconditionViolated):
        alpha_sequence("x*y + 1", "x*y + 1", "x", "y")
    with pytest.raises(PreconditionViolated):
        alpha_sequence("x^2", "x*y + 1", "y^2", "1 + x*y")
    with pytest.raises(PreconditionViolated):
        alpha_sequence("x^3", "x*y + 1", "y^2", "1 - x*y")


def test_star_first_index_cross_check():
    for n in range(2, 5):
        for seed in range(5):
            inst = equal_degree_row(seed, n)
            P, Q = cofactors(inst.f, inst.g)
            if P.is_constant() or Q.is_constant():
                continue
            d = alpha_sequence(inst.f, inst.g, P, Q)
            fn, gn = inst.f.component(n), inst.g.component(n)
            assert d.phi * P.component(d.m) == d.alphas[0] * gn
            assert -(d.phi * Q.component(d.m)) == d.alphas[0] * fn


def test_star_on_fuzz_rows():
    ran = 0
    for n in range(1, 6):
        for seed in range(12):
            inst = equal_degree_row(seed, n)
            P, Q = cofactors(inst.f, inst.g)
            if P.is_constant() or Q.is_constant():
                continue
            d = alpha_sequence(inst.f, inst.g, P, Q)
            assert verify_star(d) and d.degrees_ok()
            ran += 1
    assert ran > 20


def test_witnesses_differ_by_a_multiple_of_the_row():
    for seed in range(10):
        inst = equal_degree_row(seed, 3)
        P1, Q1 = cofactors(inst.f, inst.g)
        P2, Q2 = inst.witness()
        dP, dQ = P1 - P2, Q1 - Q2
        if dP.is_constant() or dQ.is_constant():
            assert dP.is_zero() and dQ.is_zero()
            continue
        # (P1 - P2) f + (Q1 - Q2) g = 0
        phi, psi, h1, h2 = lemma2_split(inst.f, inst.g, dP, dQ)
        assert phi.is_constant()
        assert exact_div(dP, inst.g) * inst.g == dP


def test_internal_division_failure_carries_index():
    err = InternalDivisionFailure(3)
    assert err.index == 3 and "i=3" in str(err)
