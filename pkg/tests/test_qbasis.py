import random

import pytest

from annulus_skein.partitions import EMPTY, Partition
from annulus_skein.qbasis import (
    IndexVector,
    build_matrix,
    determinant,
    eigenvalue_cw,
    eigenvalue_s,
    eigenvalue_t,
    index_vector,
    normalize_index_vector,
    q_element,
    q_int_terms,
)
from annulus_skein.ring import DELTA, LaurentPoly, RingElem, Z
from annulus_skein.skein import Monomial, SkeinElement, parse_skein
from annulus_skein.verify import pairs_with_total, partitions_up_to, random_index_vector

P = Partition

EXAMPLE_MATRIX = [
    ["hs2", "hs1", "1", "0", "0"],
    ["hs4", "hs3", "hs2", "hs1", "1"],
    ["h2", "h3", "h4", "h5", "h6"],
    ["0", "1", "h1", "h2", "h3"],
    ["0", "0", "1", "h1", "h2"],
]


def test_worked_example_matrix():
    w = index_vector(P((4, 2, 2)), P((3, 2)))
    assert w.starred == (2, 4) and w.standard == (2, -1, -2)
    assert build_matrix(w).to_lists() == EXAMPLE_MATRIX


def test_small_matrices():
    assert build_matrix(IndexVector((), (3,))).to_lists() == [["h3"]]
    assert build_matrix(IndexVector((1,), (1,))).to_lists() == [["hs1", "1"], ["h1", "h2"]]


@pytest.mark.parametrize(
    "lam,mu,expected",
    [
        ((), (), "1"),
        ((3,), (), "h3"),
        ((1,), (1,), "h1*hs1 - 1"),
        ((2,), (1,), "h2*hs1 - h1"),
        ((1,), (2,), "h1*hs2 - hs1"),
        ((1, 1), (), "h1*h1 - h2"),
    ],
)
def test_q_examples(lam, mu, expected):
    assert q_element(P(lam), P(mu)) == parse_skein(expected)


PAIRS8 = list(pairs_with_total(8))


def test_star_swaps_partitions():
    for lam, mu in PAIRS8:
        assert q_element(lam, mu).star() == q_element(mu, lam)


def test_mirror_invariance():
    for lam, mu in PAIRS8:
        q = q_element(lam, mu)
        assert q.mirror() == q


def test_charge_purity_and_diagonal():
    for lam, mu in PAIRS8:
        terms = q_int_terms(lam, mu)
        assert terms[Monomial(lam.parts, mu.parts)] == 1
        for m in terms:
            assert m.charge == lam.size - mu.size
            assert sum(m.h) <= lam.size


def test_eigenvalue_examples():
    assert eigenvalue_s(EMPTY, EMPTY) == DELTA
    v_inv = RingElem(LaurentPoly.monomial(-1, 0))
    assert eigenvalue_s(P((1,)), EMPTY) == v_inv * Z + DELTA
    for n in range(1, 7):
        expected = v_inv * RingElem(LaurentPoly.monomial(0, 2 * n - 1) - LaurentPoly.monomial(0, -1)) + DELTA
        assert eigenvalue_s(P((n,)), EMPTY) == expected


def test_cw_matches_swapped_eigenvalue():
    parts = partitions_up_to(4)
    for lam in parts:
        for mu in parts:
            assert eigenvalue_cw(index_vector(lam, mu)) == eigenvalue_s(mu, lam)
            assert eigenvalue_t(lam, mu) == eigenvalue_s(mu, lam)


def test_bar_swaps_eigenvalue():
    parts = partitions_up_to(4)
    for lam in parts:
        for mu in parts:
            assert eigenvalue_s(lam, mu).bar() == eigenvalue_s(mu, lam)


def test_normalize_examples():
    assert normalize_index_vector(IndexVector((1, 1), ())).is_zero
    assert normalize_index_vector(IndexVector((), (-1,))).is_zero
    nf = normalize_index_vector(IndexVector((), (1, 2)))
    assert nf.sign == -1
    w = IndexVector((), (2, 1))
    assert determinant(build_matrix(IndexVector((), (1, 2)))) == -determinant(build_matrix(w))
    assert q_element(nf.lam, nf.mu) == determinant(build_matrix(w))


def test_normalize_is_identity_on_index_vectors():
    for lam, mu in pairs_with_total(5):
        nf = normalize_index_vector(index_vector(lam, mu))
        assert (nf.sign, nf.lam, nf.mu) == (1, lam, mu)


def test_normalize_random_vectors():
    rng = random.Random(7)
    for _ in range(300):
        w = random_index_vector(rng)
        det = determinant(build_matrix(w))
        nf = normalize_index_vector(w)
        if nf.is_zero:
            assert det.is_zero(), w
        else:
            assert det == q_element(nf.lam, nf.mu).scale(nf.sign), w


def test_padding_with_zero_rows_of_standard_type():
    # appending lambda parts equal to zero leaves Q unchanged
    lam, mu = P((2, 1)), P((1,))
    w = index_vector(lam, mu)
    padded = IndexVector(w.starred, w.standard + (-len(w.standard) - len(w.starred),))
    assert determinant(build_matrix(padded)) == q_element(lam, mu)
