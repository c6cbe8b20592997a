from fractions import Fraction

import numpy as np
import pytest

from greenring import (
    BasedRing,
    DomainError,
    PreconditionError,
    based_from_presented,
    bifrob_build,
    bifrob_verify,
    delta_monomial,
    grouplike_build,
    grouplike_verify,
    make_ring,
    q_eval,
    stable_antipode_monomial,
    stable_bifrobenius,
    stable_phi_monomial,
)
from greenring.parser import parse_element

NS = range(2, 9)


@pytest.fixture(scope="module")
def data():
    return {n: stable_bifrobenius(n) for n in NS}


@pytest.mark.parametrize("n", NS)
def test_grouplike_axioms(data, n):
    rep = grouplike_verify(data[n].grouplike, 1e-9)
    assert rep.passed, rep.to_dict()
    assert rep["G3_exact_pattern"].passed


@pytest.mark.parametrize("n", NS)
def test_bifrobenius_axioms(data, n):
    rep = bifrob_verify(data[n], 1e-9)
    assert rep.passed, rep.to_dict()
    for name in ("antipode_closed_form", "antipode_involutive", "antipode_anti_multiplicative",
                 "frobenius_dual_bases", "phi_monomial_closed_form", "antipode_monomial_closed_form"):
        assert rep[name].passed
    for name in ("coassociative", "counit", "delta_monomial_closed_form"):
        assert rep[name].residual < 1e-9


def test_counit_is_fpdim_squared_on_rescaled_basis(data):
    g = data[4].grouplike
    f2 = g.ring.labels.index("F_2")
    assert abs(g.counit[f2] - 2.0) < 1e-12
    assert abs(g.fpdims[f2] - np.sqrt(2)) < 1e-12


def test_rescaled_constants_example(data):
    g = data[4].grouplike
    labels = g.ring.labels
    f2, f3, yf1 = labels.index("F_2"), labels.index("F_3"), labels.index("y*F_1")
    # x_{F_2}^2 = p x_{F_3} + p' x_{yF_1}; FPdims sqrt2, 1, 1
    assert abs(g.p[f2, f2, f3] - 2.0) < 1e-12
    assert abs(g.p[f2, f2, yf1] - 2.0) < 1e-12
    assert dict(g.p_constants()[(f2, f2)]) == pytest.approx({f3: 2.0, yf1: 2.0})


def test_t_is_sum_of_q_weighted_basis(data):
    b = data[5]
    spec = make_ring("stable", 5)
    for i, lab in enumerate(spec.basis):
        assert abs(b.t_vector[i] - q_eval(5, lab.f)) < 1e-12


def test_phi_is_unit_functional(data):
    b = data[4]
    assert b.phi == (1,) + (0,) * 11


def test_antipode_examples():
    spec = make_ring("stable", 4)
    b = stable_bifrobenius(4)
    s = lambda src: spec.from_vector(b.apply_antipode(parse_element(src, spec).vec))
    assert str(s("F_2")) == "y^3*F_2"
    assert str(s("y*F_1")) == "y^3*F_1"
    assert str(s("F_3")) == "y^2*F_3"
    assert s("1") == spec.one()


def test_phi_monomial_values():
    assert stable_phi_monomial(4, 0, 0) == 1
    assert stable_phi_monomial(4, 3, 2) == 1
    assert stable_phi_monomial(4, 0, 2) == 0
    assert stable_phi_monomial(6, 4, 4) == Fraction(2)
    assert stable_phi_monomial(5, 0, 1) == 0
    with pytest.raises(DomainError):
        stable_phi_monomial(4, 0, 3)


def test_antipode_monomial_values():
    assert str(stable_antipode_monomial(5, 0, 2)) == "y^3*F_3 + y^4*F_1"
    assert str(stable_antipode_monomial(5, 1, 0)) == "y^4*F_1"


def test_delta_monomial_values():
    [(lab, w)] = delta_monomial(4, 0, 1)
    assert str(lab) == "F_2" and abs(w - 1 / np.sqrt(2)) < 1e-12
    terms = dict((str(l), w) for l, w in delta_monomial(4, 0, 2))
    assert terms == pytest.approx({"F_3": 1.0, "y*F_1": 1.0})


def test_grouplike_needs_involution():
    r = based_from_presented(make_ring("stable", 3), involution=False)
    with pytest.raises(PreconditionError):
        grouplike_build(r)


def test_grouplike_rejects_bad_fpdims():
    r = based_from_presented(make_ring("stable", 3))
    with pytest.raises(PreconditionError):
        grouplike_build(r, fpdims=[1.0, 1.0])
    with pytest.raises(PreconditionError):
        grouplike_build(r, fpdims=[0.5] * 6)


def test_grouplike_detects_wrong_dimensions():
    r = based_from_presented(make_ring("stable", 4))
    g = grouplike_build(r, fpdims=[1.0] * r.rank)
    assert not grouplike_verify(g).passed


def test_group_ring_of_cyclic_group():
    # Z/3 with trivial FPdims: every check is exact
    consts = {(i, j): (((i + j) % 3, 1),) for i in range(3) for j in range(3)}
    r = BasedRing(("e", "g", "g2"), 0, consts).with_involution((0, 2, 1))
    b = bifrob_build(grouplike_build(r))
    rep = bifrob_verify(b)
    assert rep.passed, rep.to_dict()
    assert "t_closed_form" not in [c.name for c in rep.checks]
