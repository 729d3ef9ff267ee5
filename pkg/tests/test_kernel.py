from __future__ import annotations

import random

import pytest

from artin_dn.checks import broken_candidates, lift_candidates
from artin_dn.coxeter import CoxType
from artin_dn.garside import delta_word, normalize
from artin_dn.homs import make_chi, make_identity, make_zeta, same_hom, verify_hom
from artin_dn.kernel import (
    LiftError,
    LiftInput,
    central_defect,
    in_kernel_pi,
    kernel_generators,
    lift_commutes_with_projection,
    lift_endomorphism,
    lift_with_corrections,
    perturb,
)
from artin_dn.words import ArtinWord, parse_word


def test_kernel_membership_examples():
    for n in (4, 5, 6):
        d = CoxType.D(n)
        v = ArtinWord(d, (-(n - 1), n))
        t1 = ArtinWord(d, (1,))
        assert in_kernel_pi(v)
        assert not in_kernel_pi(t1)
        assert in_kernel_pi(t1 * v * t1.inverse() * v.inverse())
    with pytest.raises(TypeError):
        in_kernel_pi(ArtinWord(CoxType.A(3), (1,)))


@pytest.mark.parametrize("n", range(4, 9))
def test_kernel_generators_lie_in_kernel(n):
    gens = kernel_generators(n).gens
    assert len(gens) == n - 1
    assert all(in_kernel_pi(v) for v in gens)
    # they are nontrivial elements
    assert not any(normalize(v).is_identity() for v in gens)


def test_central_defect_examples():
    for n in (5, 6):
        d = CoxType.D(n)
        t1, t2 = ArtinWord(d, (1,)), ArtinWord(d, (2,))
        central = delta_word(d) ** d.kappa
        assert central_defect(t1, t1) == 0
        assert central_defect(t1 * central, t1) == 1
        assert central_defect(t1 * central ** -3, t1) == -3
        assert central_defect(t1, t2) is None


@pytest.mark.parametrize("n", [4, 5, 6])
def test_honest_endomorphisms_lift_unchanged(n):
    for h in (make_chi(n), make_zeta(n), make_identity(CoxType.D(n))):
        lift = lift_with_corrections(LiftInput.from_hom(h))
        assert lift.corrections == (0,) * n
        assert same_hom(lift.hom, h)


def test_single_perturbation_is_undone():
    n = 5
    d = CoxType.D(n)
    central = delta_word(d) ** d.kappa
    g = [ArtinWord(d, (i,)) for i in range(1, n + 1)]
    g[1] = g[1] * central
    lift = lift_with_corrections(LiftInput(n, tuple(g)))
    assert lift.corrections[1] == -1
    assert normalize(lift.hom.image(2)) == normalize(ArtinWord(d, (2,)))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_perturbed_candidates_lift_back(n):
    rng = random.Random(f"perturb:{n}")
    data = LiftInput.from_hom(make_zeta(n))
    for _ in range(5):
        shifts = [0] + [rng.randint(-2, 2) for _ in range(n - 1)]
        lift = lift_with_corrections(perturb(data, shifts))
        assert list(lift.corrections) == [-k for k in shifts]
        assert same_hom(lift.hom, make_zeta(n))


@pytest.mark.parametrize("n", [4, 5])
def test_candidate_families_lift(n):
    rng = random.Random(f"candidates:{n}")
    for label, data in lift_candidates(n, rng, perturbed=2):
        h = lift_endomorphism(data)
        assert verify_hom(h), label
        assert lift_commutes_with_projection(h, data), label
        # lifting a lift changes nothing
        again = lift_with_corrections(LiftInput.from_hom(h))
        assert again.corrections == (0,) * n


def test_non_relation_candidate_is_rejected():
    n = 5
    d = CoxType.D(n)
    g = [ArtinWord(d, (i,)) for i in range(1, n + 1)]
    g[1] = parse_word(d, "t2 t1")
    with pytest.raises(LiftError) as info:
        lift_endomorphism(LiftInput(n, tuple(g)))
    assert info.value.kind == "defect"
    assert info.value.relation == (1, 2, 3)


def test_commuting_failure_is_reported_after_correction():
    # t4 -> t2 keeps every braid relation along the chain and fork but breaks t1 t4 = t4 t1
    n = 5
    d = CoxType.D(n)
    g = [ArtinWord(d, (i,)) for i in range(1, n + 1)]
    g[3] = ArtinWord(d, (2,))
    with pytest.raises(LiftError) as info:
        lift_endomorphism(LiftInput(n, tuple(g)))
    assert info.value.kind == "relations"
    assert info.value.relation == (1, 4, 2)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_broken_candidates_fail(n):
    rng = random.Random(f"broken:{n}")
    for label, data in broken_candidates(n, rng, count=10):
        with pytest.raises(LiftError):
            lift_endomorphism(data)


def test_projection_check_examples():
    n = 6
    chi_in = LiftInput.from_hom(make_chi(n))
    zeta_in = LiftInput.from_hom(make_zeta(n))
    lift = lift_endomorphism(chi_in)
    assert lift_commutes_with_projection(lift, chi_in)
    assert not lift_commutes_with_projection(lift, zeta_in)


def test_lift_input_validation():
    d4 = CoxType.D(4)
    with pytest.raises(ValueError):
        LiftInput(4, (ArtinWord(d4, (1,)),))
    with pytest.raises(TypeError):
        LiftInput(4, tuple(ArtinWord(CoxType.A(3), (1,)) for _ in range(4)))
