import random

import pytest

from annulus_skein.evaluation import (
    A,
    B,
    SpecializationError,
    check_h_symmetry,
    check_pair,
    eval_element,
    eval_h,
    macdonald_schur,
    phi_N,
    specialized_identities,
)
from annulus_skein.partitions import EMPTY, Partition
from annulus_skein.qbasis import q_element
from annulus_skein.ring import DELTA, ONE, LaurentPoly, RingElem
from annulus_skein.skein import SkeinElement, parse_skein
from annulus_skein.verify import pairs_with_total, partitions_up_to, random_skein_element

P = Partition
Qv = RingElem(LaurentPoly.monomial(0, 2))


def test_eval_h_small():
    assert eval_h(0) == ONE
    assert eval_h(-3).is_zero()
    assert eval_h(1) == DELTA


@pytest.mark.parametrize("n", range(0, 9))
def test_eval_h_product_form(n):
    expected = ONE
    for i in range(1, n + 1):
        expected = expected * (A - B * Qv ** (i - 1)) / (1 - Qv**i)
    assert eval_h(n) == expected


def test_eval_examples():
    assert eval_element(parse_skein("h1*hs1 - 1")) == DELTA * DELTA - 1
    assert eval_element(SkeinElement.scalar(1)) == ONE
    assert eval_element(q_element(P((1, 1)), EMPTY)) == DELTA * DELTA - eval_h(2)


def test_macdonald_examples():
    assert macdonald_schur(EMPTY) == ONE
    assert macdonald_schur(P((1,))) == DELTA
    expected = Qv * (A - B) * (A - B * Qv) * (A - B / Qv) / ((1 - Qv**3) * (1 - Qv) ** 2)
    assert macdonald_schur(P((2, 1))) == expected


def test_macdonald_matches_determinant():
    for lam in partitions_up_to(6):
        assert macdonald_schur(lam) == eval_element(q_element(lam, EMPTY)), lam


def test_eval_star_invariant():
    rng = random.Random(3)
    for _ in range(30):
        x = random_skein_element(rng)
        assert eval_element(x.star()) == eval_element(x)


def test_conjugate_symmetry():
    for lam, mu in pairs_with_total(6):
        lhs = eval_element(q_element(lam, mu)).substitute("s_to_neg_inv_s")
        assert lhs == eval_element(q_element(lam.conjugate, mu.conjugate)), (lam, mu)


def test_nonvanishing():
    for lam, mu in pairs_with_total(6):
        assert not eval_element(q_element(lam, mu)).is_zero()


def test_phi_N_examples():
    assert phi_N(SkeinElement.hs(2), 5) == SkeinElement.h(3)
    assert phi_N(parse_skein("h1*hs1 - 1"), 2) == parse_skein("h1^2 - 1")
    assert phi_N(q_element(P((1, 1)), EMPTY), 2) == parse_skein("h1^2 - 1")
    assert phi_N(parse_skein("h3 + hs4"), 3) == SkeinElement.scalar(1)
    with pytest.raises(ValueError):
        phi_N(SkeinElement.h(1), 0)


@pytest.mark.parametrize("N", [1, 2, 4])
def test_phi_N_generator_rule(N):
    for n in range(-2, N + 3):
        assert phi_N(SkeinElement.hs(n), N) == phi_N(SkeinElement.h(N - n), N)


def test_phi_N_homomorphism():
    rng = random.Random(9)
    for _ in range(30):
        x, y = random_skein_element(rng), random_skein_element(rng)
        N = rng.randint(1, 5)
        assert phi_N(x * y, N) == phi_N(x, N) * phi_N(y, N)


def test_specialization_examples():
    rep = specialized_identities(1, 3)
    assert rep.ok
    rep = specialized_identities((P((1,)), P((1,))), 2)
    assert rep.ok and rep.value == (DELTA * DELTA - 1).subs_v(-1, 2) and not rep.value.is_zero()
    rep = check_h_symmetry(5, 3)
    assert rep.value.is_zero()


@pytest.mark.parametrize("N", range(0, 9))
def test_h_symmetry_sweep(N):
    for n in range(0, N + 1):
        assert check_h_symmetry(n, N).ok


def test_h_symmetry_fails_for_other_sign():
    with pytest.raises(SpecializationError):
        check_h_symmetry(1, 3, eps=1)


def test_pair_sweep():
    for lam, mu in pairs_with_total(5):
        assert check_pair(lam, mu, max(1, lam.first + mu.first)).ok


def test_pair_requires_large_N():
    with pytest.raises(ValueError):
        check_pair(P((2,)), P((2,)), 3)
