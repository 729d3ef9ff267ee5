from __future__ import annotations

import random

import pytest

from artin_dn.checks import random_word
from artin_dn.coxeter import CoxType
from artin_dn.garside import NormalForm, delta_word, delta_y_word, equal, normalize
from artin_dn.homs import (
    HomSpec,
    HomSpecFormatError,
    apply,
    compose,
    dump_hom,
    failing_relations,
    is_conjugate_by,
    is_identity_hom,
    load_hom,
    make_alpha,
    make_bar_chi,
    make_bar_gamma,
    make_beta,
    make_chi,
    make_cyclic,
    make_gamma,
    make_identity,
    make_inner,
    make_iota,
    make_pi,
    make_zeta,
    pinch_test,
    same_hom,
    verify_hom,
    verify_hom_by_words,
    z_scaling,
    zeta_chi_group,
)
from artin_dn.words import ArtinWord, parse_word


def test_pi_and_iota_on_generators():
    pi6 = make_pi(6)
    a5 = CoxType.A(5)
    assert pi6.image(6) == ArtinWord(a5, (5,))
    assert pi6.image(1) == ArtinWord(a5, (1,))
    assert make_iota(6).image(1) == ArtinWord(CoxType.D(6), (1,))
    assert apply(pi6, ArtinWord(CoxType.D(6), ())).letters == ()
    assert normalize(apply(pi6, parse_word(CoxType.D(6), "t5 t6^-1"))).is_identity()


@pytest.mark.parametrize("n", range(4, 8))
def test_pi_of_delta_is_delta_squared(n):
    d, a = CoxType.D(n), CoxType.A(n - 1)
    assert equal(apply(make_pi(n), delta_word(d)), delta_word(a) ** 2)


@pytest.mark.parametrize("n", range(4, 8))
def test_iota_of_delta_is_parabolic_delta(n):
    assert equal(apply(make_iota(n), delta_word(CoxType.A(n - 1))), delta_y_word(n))


@pytest.mark.parametrize("n", range(4, 7))
def test_catalog_verifies(n):
    specs = [make_pi(n), make_iota(n), make_zeta(n), make_chi(n), make_bar_chi(n)]
    for p in (-1, 0, 2):
        specs += [make_alpha(n, p), make_gamma(n, p), make_bar_gamma(n, p), make_beta(n, p, -1), make_beta(n, p, 1)]
    for h in specs:
        assert verify_hom(h), h.label


def test_verify_by_words_agrees():
    for h in (make_beta(5, 1, -1), make_alpha(4, 1), make_chi(5), make_gamma(4, -1)):
        assert verify_hom_by_words(h) == verify_hom(h) is True
    assert verify_hom(make_beta(6, 1, -1))
    assert verify_hom(make_beta(6, 2, -1))
    assert verify_hom(make_alpha(6, 1))


def test_broken_pi_fails_the_fork_relation():
    n = 6
    pi = make_pi(n)
    broken = HomSpec(pi.source, pi.target, pi.images[:-1] + (ArtinWord(pi.target, (1,)),), "broken")
    assert not verify_hom(broken)
    assert (n - 2, n, 3) in failing_relations(broken)
    assert not verify_hom_by_words(broken)


def test_catalog_identities():
    for n in (4, 5, 6, 7):
        pi, iota = make_pi(n), make_iota(n)
        assert is_identity_hom(compose(pi, iota))
        assert same_hom(make_alpha(n, 0), pi)
        assert same_hom(make_beta(n, 0, 0), iota)
        assert is_identity_hom(make_gamma(n, 0))
        z, c = make_zeta(n), make_chi(n)
        assert is_identity_hom(z @ z) and is_identity_hom(c @ c)
        assert same_hom(z @ c, c @ z)
        assert same_hom(make_alpha(n, 1), compose(make_bar_gamma(n, 1), pi))
        assert same_hom(z, make_inner(delta_word(CoxType.D(n)))) == (n % 2 == 1)
        assert not is_identity_hom(z) and not is_identity_hom(c)


def test_alpha_exponent_sum():
    for n in (4, 5, 6):
        for p in (-1, 1, 2):
            assert make_alpha(n, p).image(1).exponent_sum() == 1 + p * n * (n - 1)


def test_gamma_composition_example():
    # gamma_1 o gamma_1 sends t_1 to t_1 Delta^(kappa(2 + kappa 12)) in D_4
    d4 = CoxType.D(4)
    g = make_gamma(4, 1)
    k = d4.kappa
    assert equal((g @ g).image(1), ArtinWord(d4, (1,)) * delta_word(d4) ** (k * (2 + k * 12)))


@pytest.mark.parametrize("n, p", [(4, 1), (5, -1), (6, 2)])
def test_gamma_formula_on_random_words(n, p):
    d = CoxType.D(n)
    g = make_gamma(n, p)
    rng = random.Random(f"gamma:{n}:{p}")
    factor = 1 + n * (n - 1) * d.kappa * p
    assert z_scaling(g) == factor
    for _ in range(20):
        u = random_word(rng, d, 12)
        image = normalize(apply(g, u))
        assert image == normalize(u) * NormalForm(d, d.kappa * p * u.exponent_sum(), ())
        assert image.exponent_sum() == factor * u.exponent_sum()
    for q in (-1, 2):
        assert normalize(apply(g, delta_word(d) ** q)) == NormalForm(d, q * factor, ())


def test_pinch_examples():
    n = 5
    d, a = CoxType.D(n), CoxType.A(n - 1)
    for psi in zeta_chi_group(n):
        assert pinch_test(psi @ make_beta(n, 1, -1) @ make_pi(n))
        assert not pinch_test(psi @ make_gamma(n, 1))
    assert pinch_test(make_cyclic(d, parse_word(a, "s1 s3^-1")))
    assert verify_hom(make_cyclic(d, parse_word(d, "t1 t2 t5^-1")))
    with pytest.raises(TypeError):
        pinch_test(make_iota(n))


def test_is_conjugate_by():
    n = 5
    d = CoxType.D(n)
    h = make_chi(n)
    assert is_conjugate_by(h, h, ArtinWord(d, ()))
    assert is_conjugate_by(make_identity(d), make_zeta(n), delta_word(d))
    assert not is_conjugate_by(make_identity(CoxType.D(6)), make_zeta(6), delta_word(CoxType.D(6)))
    for g in (ArtinWord(d, (1,)), delta_word(d)):
        assert not is_conjugate_by(make_iota(n), make_beta(n, 1, 0), g)


def test_compose_type_checks():
    with pytest.raises(TypeError):
        compose(make_pi(5), make_pi(5))
    with pytest.raises(TypeError):
        apply(make_pi(5), ArtinWord(CoxType.A(4), (1,)))
    with pytest.raises(ValueError):
        HomSpec(CoxType.D(4), CoxType.D(4), (ArtinWord(CoxType.D(4), (1,)),))


@pytest.mark.parametrize("h", [make_pi(5), make_beta(5, 1, -1), make_inner(parse_word(CoxType.D(4), "t1 t2^-1")), make_chi(4)],
                         ids=lambda h: h.label)
def test_interchange_round_trip(h):
    text = dump_hom(h)
    back = load_hom(text)
    assert back == h
    assert dump_hom(back) == text


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"source": "D4", "target": "D4"}',
        '{"source": "D3", "target": "D4", "images": []}',
        '{"source": "D4", "target": "D4", "images": ["t1", "t2", "t3"]}',
        '{"source": "D4", "target": "D4", "images": ["t1", "t2", "t3", "t9"]}',
        '{"source": "D4", "target": "A3", "images": "s1"}',
    ],
)
def test_malformed_interchange(text):
    with pytest.raises(HomSpecFormatError):
        load_hom(text)


def test_composition_order_matters():
    # compose(g, h) applies h first; the two orders of an inner map and an inversion differ
    n = 5
    d = CoxType.D(n)
    ad = make_inner(ArtinWord(d, (1,)))
    c = make_chi(n)
    assert not same_hom(compose(ad, c), compose(c, ad))
    assert same_hom(compose(c, ad), compose(make_inner(ArtinWord(d, (-1,))), c))
    assert verify_hom(compose(ad, c)) and verify_hom(compose(c, ad))
