import random
from fractions import Fraction

import pytest

from sl2kxy.canonical import CanonicalForm, canonicalize_quadratic, quadratic_rank
from sl2kxy.cofactors import is_unimodular
from sl2kxy.endo import AffineAuto, apply, invert_affine
from sl2kxy.errors import NotDegreeTwo, NotUnimodular, PreconditionViolated
from sl2kxy.generate import FAMILIES, generate_random_instance, random_affine, random_poly
from sl2kxy.mat import CohnFactor, L, U
from sl2kxy.poly import Poly
from sl2kxy.reduce import (Terminal, apply_steps, corollary1_reduce, lemma5_reduce, lemma6_reduce,
                           lemma7_reduce, reduce_deg_x, reduce_row, trace_lines)

x, y = Poly.x(), Poly.y()
P_ = Poly.coerce


# canonical forms

def test_already_canonical():
    theta, form = canonicalize_quadratic("x*y + 5")
    assert theta == AffineAuto.identity()
    assert form.tag == "CrossPlusConst" and form.gamma == 5


def test_difference_of_squares_is_cross_form():
    theta, form = canonicalize_quadratic("x^2 - y^2")
    assert form.tag == "CrossPlusConst" and form.gamma == 0
    assert apply(theta, "x^2 - y^2") == x * y


def test_swap_to_square_plus_y():
    theta, form = canonicalize_quadratic("y^2 + x")
    assert form.tag == "SquarePlusY"
    assert apply(theta, "y^2 + x") == P_("x^2 + y")


def test_square_plus_const_needs_root():
    theta, form = canonicalize_quadratic("2*x^2 + 4*x*y + 2*y^2 + 3")
    assert form.tag == "SquarePlusConst" and form.gamma == 3


def test_not_degree_two():
    for f in ("x^3", "x + y", "7"):
        with pytest.raises(NotDegreeTwo):
            canonicalize_quadratic(f)


def test_canonical_round_trip_random():
    rng = random.Random(3)
    for _ in range(150):
        f = random_poly(rng, 2)
        if f.degree() != 2:
            continue
        theta, form = canonicalize_quadratic(f)
        assert apply(theta, f) == form.poly()
        assert apply(invert_affine(theta), form.poly()) == f


def test_rank_decides_tag_under_affine_moves():
    rng = random.Random(8)
    for _ in range(60):
        f = random_poly(rng, 2)
        if f.degree() != 2:
            continue
        g = apply(random_affine(rng), f)
        t1 = canonicalize_quadratic(f)[1].tag
        t2 = canonicalize_quadratic(g)[1].tag
        assert (t1 == "CrossPlusConst") == (t2 == "CrossPlusConst")
        assert (quadratic_rank(f) == 2) == (t1 == "CrossPlusConst")


def test_form_expansion():
    assert CanonicalForm("SquarePlusConst", Fraction(-2)).poly() == P_("x^2 - 2")
    assert CanonicalForm("SquarePlusY").poly() == P_("x^2 + y")
    assert CanonicalForm("CrossPlusConst", Fraction(3)).poly() == P_("x*y + 3")


# reducers

def test_reduce_deg_x_examples():
    f = P_("x^2 + y")
    g1, steps = reduce_deg_x(f, "x^3")
    assert g1 == P_("-x*y") and steps == [U(-x)]
    g1, _ = reduce_deg_x(f, "x^3 + x*y + 1")
    assert g1 == 1
    g1, steps = reduce_deg_x("x^2 + 3", "x*y + 2")
    assert g1 == P_("x*y + 2") and steps == []


def test_corollary1_examples():
    h, c, steps = corollary1_reduce("x", "x*y + 5")
    assert h == y and c == 5
    assert apply_steps((x, P_("x*y + 5")), steps) == (P_(1), Poly())
    h, c, _ = corollary1_reduce("x", "7")
    assert h.is_zero() and c == 7
    with pytest.raises(NotUnimodular):
        corollary1_reduce("x", "y")
    with pytest.raises(PreconditionViolated):
        corollary1_reduce("x^2", "1")


def test_corollary1_general_linear():
    f = P_("2*x - 3*y + 1")
    g = f * P_("x^3 - y + 4") + Fraction(5, 2)
    h, c, steps = corollary1_reduce(f, g)
    assert h * f + c == g
    assert apply_steps((f, g), steps) == (P_(1), Poly())


def test_lemma5_examples():
    f = P_("x^2 + y")
    cert = lemma5_reduce(1)
    assert cert.terminal.kind == "Trivial" and cert.check((f, P_(1)))
    # (f, 1) cannot reach (1, 0) in a single transvection; two are needed
    assert len(cert.steps) == 2
    cert = lemma5_reduce("x^3 + x*y + 1")
    assert cert.terminal.kind == "Trivial" and cert.check((f, P_("x^3 + x*y + 1")))
    with pytest.raises(NotUnimodular):
        lemma5_reduce("x^3")


def test_lemma6_examples():
    cert = lemma6_reduce(1, "x^2 + 2")
    assert cert.terminal.kind == "Trivial" and cert.check((P_("x^2 + 1"), P_("x^2 + 2")))
    cert = lemma6_reduce(0, "x*y + 1")
    assert cert.terminal.kind == "CohnA"
    assert cert.terminal.delta == 1 and cert.terminal.psi == y
    cert = lemma6_reduce(0, "x + 1")
    assert cert.terminal.kind == "Trivial" and cert.check((P_("x^2"), P_("x + 1")))


def test_lemma6_linear_remainder_with_nonzero_gamma():
    # (x^2 + 1, x) is unimodular although the reduced entry is not constant
    cert = lemma6_reduce(1, "x")
    assert cert.terminal.kind == "Trivial" and cert.check((P_("x^2 + 1"), x))
    with pytest.raises(NotUnimodular):
        lemma6_reduce(-1, "x + 1")          # common zero x = -1
    with pytest.raises(NotUnimodular):
        lemma6_reduce(1, "x*y + 1")         # depends on y


def test_lemma7_examples():
    cert = lemma7_reduce(1, "x^2")
    t = cert.terminal
    assert (t.kind, t.gamma, t.k, t.scale, t.in_y) == ("CohnB", 1, 2, 1, False)
    with pytest.raises(NotUnimodular):
        lemma7_reduce(1, "x^2 + x*y")
    cert = lemma7_reduce(0, 3)
    assert cert.terminal.kind == "Trivial" and cert.check((x * y, P_(3)))


def test_lemma7_y_power_and_scale():
    cert = lemma7_reduce(2, "3*y^3 + x*y^4 + 2*y^3")
    t = cert.terminal
    assert t.kind == "CohnB" and t.in_y and t.k == 3
    assert cert.check((P_("x*y + 2"), P_("3*y^3 + x*y^4 + 2*y^3")))


def test_lemma7_unit_exponent_one():
    cert = lemma7_reduce(3, "2*x + x^2*y + 3*x")
    assert cert.terminal.kind == "Trivial"
    assert cert.check((P_("x*y + 3"), P_("2*x + x^2*y + 3*x")))


def test_cohn_a_terminal_completes_to_det_one():
    for delta, psi in ((1, "y"), (-2, "y^2 + 1"), (Fraction(1, 3), "3*y^3 - y")):
        t = Terminal("CohnA", delta=Fraction(delta), psi=P_(psi))
        row = t.row()
        M = CohnFactor.A(delta, psi).matrix()
        assert (M.a11, M.a12) == row and M.det() == 1


def test_trace_lines_format():
    lines = trace_lines((P_("x^2 + y"), P_("x^3 + x*y + 1")), [U(-x)])
    assert lines == ["step 1: U h=-x -> row=(x^2 + y, 1)"]


@pytest.mark.parametrize("family", FAMILIES)
def test_reduction_soundness_per_family(family):
    allowed = {"x2+y": {"Trivial"}, "x2+gamma": {"Trivial", "CohnA"},
               "xy+gamma": {"Trivial", "CohnB"}, "linear": {"Trivial"}}[family]
    for seed in range(60):
        inst = generate_random_instance(seed, "row", 3, 3, family=family)
        theta, cert = reduce_row(inst.f, inst.g)
        row = (apply(theta, inst.f), apply(theta, inst.g))
        assert cert.check(row)
        assert cert.terminal.kind in allowed
        assert cert.terminal.kind == inst.terminal
        for s in cert.steps:
            assert s.matrix().det() == 1


def test_reducers_never_accept_non_unimodular_rows():
    rng = random.Random(21)
    rejected = 0
    for _ in range(80):
        f = rng.choice([P_("x^2 + y"), P_("x^2 - 1"), P_("x^2"), P_("x*y + 2"), P_("x*y")])
        g = random_poly(rng, 3)
        try:
            theta, cert = reduce_row(f, g)
        except NotUnimodular:
            rejected += 1
            assert not is_unimodular(f, g)
            continue
        assert is_unimodular(f, g)
        assert cert.check((apply(theta, f), apply(theta, g)))
    assert rejected > 0


def test_reduce_row_rejects_high_degree():
    with pytest.raises(PreconditionViolated):
        reduce_row("x^3", "1")


def test_steps_are_transvections():
    _, cert = reduce_row("x*y + 1", "x^3 + x*y^2 + y")
    assert cert.terminal.kind == "CohnB" and len(cert.steps) == 1
    for s in cert.steps:
        assert s.side in ("U", "L")
    assert L(1).matrix().det() == 1
