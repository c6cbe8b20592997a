import numpy as np
import pytest

from greenring import (
    BasedRing,
    InvolutionError,
    PreconditionError,
    StructureError,
    based_from_presented,
    check_transitive,
    detect_involution,
    fpdim,
    fusion_report,
    gram_and_radicals,
    make_ring,
    q_eval,
    unit_coeff_form,
)
from greenring.based import gram, structure_violations


def toy_ring():
    # {1, e | e^2 = 0}
    return BasedRing(("1", "e"), 0, {(0, 0): ((0, 1),), (0, 1): ((1, 1),), (1, 0): ((1, 1),)})


def stable(n):
    return based_from_presented(make_ring("stable", n))


def test_stable_three_constants():
    r = stable(3)
    assert r.rank == 6
    assert set(np.unique(r.tensor)) <= {0, 1}


def test_grothendieck_constants():
    r = based_from_presented(make_ring("grothendieck", 2, 2))
    assert r.labels == ("1", "Y", "X1")
    assert dict(r.product(2, 2)) == {0: 2, 1: 2}


def test_unit_coeff_form_example():
    r = stable(4)
    f2 = r.labels.index("F_2")
    y3f2 = r.labels.index("y^3*F_2")
    assert unit_coeff_form(r, r.basis_vector(f2), r.basis_vector(y3f2)) == 1


def test_unit_coeff_form_rank_mismatch():
    from greenring import ContextError

    with pytest.raises(ContextError):
        unit_coeff_form(stable(3), [1], [1])


@pytest.mark.parametrize("n", range(2, 9))
def test_stable_gram_is_involution_permutation(n):
    r = stable(n)
    spec = make_ring("stable", n)
    sigma = [spec.index[type(b)((1 - b.y - b.f) % n, b.f)] for b in spec.basis]
    assert r.involution == tuple(sigma)
    perm = [[int(sigma[i] == j) for j in range(r.rank)] for i in range(r.rank)]
    form = gram_and_radicals(r)
    assert form.gram == perm
    assert form.nondegenerate
    assert detect_involution(r) == tuple(sigma)


def test_toy_ring_radical():
    form = gram_and_radicals(toy_ring())
    assert form.left_radical == [[0, 1]]
    assert form.right_radical == [[0, 1]]
    assert not form.nondegenerate
    with pytest.raises(InvolutionError):
        detect_involution(toy_ring())


def test_radford_form_is_degenerate():
    # projective modules sit in the radical of the unit-coefficient form
    r = based_from_presented(make_ring("radford", 2, 2), involution=False)
    form = gram_and_radicals(r)
    assert not form.nondegenerate
    assert len(form.left_radical) == len(form.right_radical)


def test_structure_validation():
    with pytest.raises(StructureError):
        BasedRing(("1", "a"), 0, {(0, 0): ((0, 1),), (0, 1): ((1, 1),), (1, 0): ((0, 1),)})
    with pytest.raises(StructureError):
        BasedRing(("1",), 0, {(0, 0): ((3, 1),)})
    with pytest.raises(StructureError):
        BasedRing(("1",), 0, {(0, 0): ((0, 0.5),)})
    bad = BasedRing(("1", "a"), 0, {(0, 0): ((0, 1),)}, validate=False)
    assert structure_violations(bad)


def test_with_involution_checks():
    r = stable(3)
    with pytest.raises(InvolutionError):
        r.with_involution([0, 0, 1, 2, 3, 4])
    with pytest.raises(InvolutionError):
        r.with_involution([1, 2, 0, 3, 4, 5])


@pytest.mark.parametrize("n", range(2, 9))
def test_fpdim_matches_q(n):
    r = stable(n)
    dims = fpdim(r)
    spec = make_ring("stable", n)
    expected = np.array([q_eval(n, b.f) for b in spec.basis])
    assert np.abs(dims - expected).max() < 1e-8
    assert dims.min() >= 1 - 1e-9


def test_fpdim_needs_nonnegative():
    r = BasedRing(("1", "a"), 0, {(0, 0): ((0, 1),), (0, 1): ((1, 1),), (1, 0): ((1, 1),),
                                  (1, 1): ((0, 1), (1, -1))}, validate=False)
    with pytest.raises(PreconditionError):
        fpdim(r)


def test_fpdim_group_ring_is_one():
    # Z/3: periodic matrices, the identity shift keeps power iteration convergent
    r = stable(2)
    assert np.allclose(fpdim(r), 1.0)


def test_fpdim_threaded(monkeypatch):
    monkeypatch.setenv("GREENRING_THREADS", "4")
    a = fpdim(stable(6))
    monkeypatch.setenv("GREENRING_THREADS", "1")
    b = fpdim(stable(6))
    assert np.array_equal(a, b)


@pytest.mark.parametrize("n", range(2, 9))
def test_stable_rings_are_transitive_fusion_rings(n):
    r = stable(n)
    assert check_transitive(r)
    rep = fusion_report(r, 1e-9)
    assert rep.passed, rep.to_dict()


def test_transitivity_failure_reported():
    # Z/2 x Z/2 split as two blocks is not transitive: use {1, e} with e^2 = e
    r = BasedRing(("1", "e"), 0, {(0, 0): ((0, 1),), (0, 1): ((1, 1),), (1, 0): ((1, 1),),
                                  (1, 1): ((1, 1),)})
    tr = check_transitive(r)
    assert not tr
    assert tr.failing is not None


def test_fusion_report_flags_degenerate_ring():
    rep = fusion_report(toy_ring())
    assert not rep.passed
    assert "form_nondegenerate" in [c.name for c in rep.violations]


def test_gram_function():
    assert gram(toy_ring()) == [[1, 0], [0, 0]]
