from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import forms_chern_via_character
from strategies import bundles, classes, rings

from ulrich_chern.bundles import (
    BundleClass,
    CertificateError,
    bundle_from_json,
    bundle_to_json,
    chern_of_twisted_forms,
    direct_sum,
    dual,
    invert,
    is_big,
    line_bundle,
    nu,
    segre,
    segre_dual,
    sum_big_certificate,
    trivial,
    twist,
    whitney_sum,
)
from ulrich_chern.ring import CohClass, MultiProjective, Quadric, factor_class, hyperplane


def _p(m):
    return MultiProjective((m,))


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("t", range(-6, 7))
def test_twisted_forms_match_character_oracle(m, t):
    for p in range(m + 1):
        E = chern_of_twisted_forms(m, p, t)
        assert list(E.chern.coeffs) == forms_chern_via_character(m, p, t)


def test_twisted_forms_known_values():
    H = hyperplane(_p(2))
    # Omega(1) on P^2 and Omega^2(5) = O(2)
    assert chern_of_twisted_forms(2, 1, 1).chern == 1 - H + H * H
    assert chern_of_twisted_forms(2, 2, 5).chern == 1 + H.scale(2)
    assert chern_of_twisted_forms(5, 5, 5).chern == 1 - hyperplane(_p(5))


@pytest.mark.parametrize("m", range(1, 7))
def test_koszul_rank_and_parity_bookkeeping(m):
    ranks = [chern_of_twisted_forms(m, p, 0).rank for p in range(m + 1)]
    assert sum((-1) ** p * r for p, r in enumerate(ranks)) == 0
    assert sum(ranks[0::2]) == sum(ranks[1::2]) == 2 ** (m - 1)


def test_line_bundle_and_dual_on_q4():
    Q = Quadric(4)
    h = hyperplane(Q)
    L = line_bundle(h)
    assert segre(L) == invert(1 + h)
    assert dual(L).chern == 1 - h
    assert nu(L) == 4 and is_big(L) == (True, 2)


def test_bundle_validation():
    Q = Quadric(4)
    h = hyperplane(Q)
    with pytest.raises(ValueError):
        BundleClass(1, 1 + h + h * h)
    with pytest.raises(ValueError):
        BundleClass(2, h)
    with pytest.raises(ValueError):
        BundleClass(-1, CohClass.one(Q))
    with pytest.raises(ValueError):
        twist(trivial(Q, 2), h * h)
    with pytest.raises(ValueError):
        whitney_sum(trivial(Q), trivial(Quadric(6)))
    with pytest.raises(ValueError):
        direct_sum()
    with pytest.raises(ValueError):
        segre_dual(trivial(Q), 5)


def test_certificate_rejects_negative_terms():
    P = _p(2)
    H = hyperplane(P)
    # O(-1) is not globally generated; its Segre products go negative
    with pytest.raises(CertificateError):
        sum_big_certificate(line_bundle(-H), line_bundle(H))


def test_trivial_bundle_is_not_big():
    P = MultiProjective((1, 1))
    assert is_big(trivial(P, 3)) == (False, 0)
    assert nu(trivial(P, 3)) == 2


def test_pullback_of_o2_on_p2xp2_is_not_big():
    P = MultiProjective((2, 2))
    A = factor_class(P, 0)
    E = direct_sum(*[line_bundle(A.scale(2))] * 3)
    assert is_big(E) == (False, 0)
    assert nu(E) == 3 - 1 + 2


@given(bundles())
def test_segre_inverts_chern(E):
    assert segre(E) * E.chern == CohClass.one(E.ring)


@given(bundles())
def test_dual_is_an_involution(E):
    assert dual(dual(E)) == E


@given(st.data())
def test_twist_is_a_group_action(data):
    ring = data.draw(rings)
    E = data.draw(bundles(ring))
    a, b = data.draw(classes(ring, degree=1)), data.draw(classes(ring, degree=1))
    assert twist(E, CohClass.zero(ring)) == E
    assert twist(twist(E, a), b) == twist(E, a + b)
    assert nu(twist(E, CohClass.zero(ring))) == nu(E)


@given(st.data())
def test_whitney_and_segre_are_multiplicative(data):
    ring = data.draw(rings)
    E, F = data.draw(bundles(ring)), data.draw(bundles(ring))
    S = whitney_sum(E, F)
    assert S.chern == E.chern * F.chern
    assert segre(S) == segre(E) * segre(F)
    assert dual(S) == whitney_sum(dual(E), dual(F))


@given(st.data())
def test_twist_commutes_with_dual(data):
    ring = data.draw(rings)
    E = data.draw(bundles(ring))
    a = data.draw(classes(ring, degree=1))
    assert dual(twist(E, a)) == twist(dual(E), -a)


@given(st.data())
def test_certificate_sums_to_the_witness(data):
    # for globally generated twists of trivial bundles every term is nonnegative
    ring = data.draw(rings)
    h = hyperplane(ring)
    r1, r2 = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    k1, k2 = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    E, F = twist(trivial(ring, r1), h.scale(k1)), twist(trivial(ring, r2), h.scale(k2))
    big, terms = sum_big_certificate(E, F)
    assert big == (is_big(whitney_sum(E, F))[1] > 0)
    assert sum(terms) == is_big(whitney_sum(E, F))[1]
    if is_big(E)[0]:
        assert big


@given(bundles())
def test_bundle_json_round_trip(E):
    assert bundle_from_json(json.loads(json.dumps(bundle_to_json(E)))) == E


def test_bundle_json_rejects_bad_rank():
    with pytest.raises(TypeError):
        bundle_from_json({"ring": {"type": "quadric", "n": 4}, "rank": "2", "chern": {}})
