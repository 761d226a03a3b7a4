import random
import zlib
from fractions import Fraction
from itertools import combinations

import pytest

from annulus_skein import linalg
from annulus_skein.conversion import (
    QExpansion,
    enumerate_basis,
    expand_in_q,
    meridian_map,
    multiply_in_q,
)
from annulus_skein.partitions import EMPTY, Partition
from annulus_skein.qbasis import eigenvalue_s, meridian_eigenvalue_generator, q_element, q_int_terms
from annulus_skein.ring import DELTA
from annulus_skein.skein import SkeinElement, parse_skein
from annulus_skein.verify import pairs_with_total, partitions_up_to, random_skein_element

from conftest import ring_at

P = Partition
BOX = P((1,))


def test_enumerate_basis_examples():
    assert set(enumerate_basis(0, 1)) == {(EMPTY, EMPTY), (BOX, BOX)}
    assert set(enumerate_basis(2, 2)) == {(P((2,)), EMPTY), (P((1, 1)), EMPTY)}
    assert enumerate_basis(-1, 0) == [(EMPTY, BOX)]
    with pytest.raises(ValueError):
        enumerate_basis(3, 2)


def test_expand_examples():
    assert expand_in_q(parse_skein("h1*hs1")) == {(BOX, BOX): 1, (EMPTY, EMPTY): 1}
    assert expand_in_q(parse_skein("h1^2")) == {(P((2,)), EMPTY): 1, (P((1, 1)), EMPTY): 1}
    assert expand_in_q(SkeinElement()) == {}


def test_unit_vectors():
    for lam, mu in pairs_with_total(4):
        assert expand_in_q(q_element(lam, mu)) == {(lam, mu): 1}


def test_known_products():
    assert multiply_in_q(BOX, EMPTY, BOX, EMPTY) == {(P((2,)), EMPTY): 1, (P((1, 1)), EMPTY): 1}
    assert multiply_in_q(BOX, EMPTY, EMPTY, BOX) == {(BOX, BOX): 1, (EMPTY, EMPTY): 1}


# frozen from the numeric oracle below
BOX_BOX_SQUARED = {
    ((2,), (2,)): 1,
    ((2,), (1, 1)): 1,
    ((1, 1), (2,)): 1,
    ((1, 1), (1, 1)): 1,
    ((1,), (1,)): 2,
    ((), ()): 1,
}


def test_box_box_squared_regression():
    got = dict(multiply_in_q(BOX, BOX, BOX, BOX).int_items())
    assert got == {(P(a), P(b)): c for (a, b), c in BOX_BOX_SQUARED.items()}


def test_full_rank_charge_zero():
    basis = enumerate_basis(0, 3)
    monos = sorted({m for lam, mu in basis for m in q_int_terms(lam, mu)})
    rows = [[q_int_terms(lam, mu).get(m, 0) for m in monos] for lam, mu in basis]
    assert linalg.rank(rows) == len(basis)


def test_round_trip_random_elements():
    rng = random.Random(11)
    for _ in range(200):
        x = random_skein_element(rng, max_degree=3)
        assert expand_in_q(x).recombine() == x


def test_qexpansion_json():
    exp = expand_in_q(parse_skein("v*h1*hs1"))
    data = exp.to_json()
    assert {(tuple(d["lambda"]), tuple(d["mu"])) for d in data} == {((1,), (1,)), ((), ())}


# -- numeric oracle for structure constants ------------------------------------


def _numeric_q(lam, mu, hv, hsv):
    """Determinant of the template matrix with numbers substituted for generators."""
    k_star, dim = len(mu), len(lam) + len(mu)

    def h(n, table):
        return Fraction(0) if n < 0 else Fraction(1) if n == 0 else table[n]

    rows = []
    for i in range(1, k_star + 1):
        w = mu[k_star - i] + i - 1
        rows.append([h(w - j + 1, hsv) for j in range(1, dim + 1)])
    for i in range(k_star + 1, dim + 1):
        w = lam[i - k_star - 1] - i + 1
        rows.append([h(w + j - 1, hv) for j in range(1, dim + 1)])
    det = Fraction(1)
    for c in range(dim):
        piv = next((r for r in range(c, dim) if rows[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, dim):
            f = rows[r][c] / rows[c][c]
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return det


def _oracle_product(a, b, rng):
    (l1, m1), (l2, m2) = a, b
    charge = l1.size + l2.size - m1.size - m2.size
    cands = enumerate_basis(charge, l1.size + l2.size)
    n_pts = len(cands) + 3
    eqs, rhs = [], []
    top = l1.size + l2.size + m1.size + m2.size + 1
    for _ in range(n_pts):
        hv = {n: Fraction(rng.randint(-60, 60), rng.randint(1, 25)) for n in range(1, top + 1)}
        hsv = {n: Fraction(rng.randint(-60, 60), rng.randint(1, 25)) for n in range(1, top + 1)}
        eqs.append([_numeric_q(lam, mu, hv, hsv) for lam, mu in cands])
        rhs.append(_numeric_q(l1, m1, hv, hsv) * _numeric_q(l2, m2, hv, hsv))
    n = len(cands)
    sol = linalg.solve(eqs[:n], rhs[:n])
    for row, r in zip(eqs[n:], rhs[n:]):
        assert sum(x * y for x, y in zip(row, sol)) == r
    return {c: x for c, x in zip(cands, sol) if x}


SMALL = list(pairs_with_total(2))


ORACLE_CASES = list(combinations(SMALL, 2))[::3] + [((BOX, BOX), (BOX, BOX))]


@pytest.mark.parametrize("a,b", ORACLE_CASES)
def test_structure_constants_match_oracle(a, b):
    rng = random.Random(zlib.crc32(f"{a}{b}".encode()))
    expected = _oracle_product(a, b, rng)
    got = dict(multiply_in_q(*a, *b).int_items())
    assert got == {k: int(v) for k, v in expected.items()}
    assert all(v.denominator == 1 and v > 0 for v in expected.values())


# -- meridian maps ---------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_generator_eigenvalues(n):
    h, hs = SkeinElement.h(n), SkeinElement.hs(n)
    for kind, x in (("h", h), ("hstar", hs)):
        for m in ("phi", "phibar"):
            assert meridian_map(x, m) == x.scale(meridian_eigenvalue_generator(kind, m, n))
    # phi on h_n agrees with phibar on h_n^*
    assert meridian_eigenvalue_generator("h", "phi", n) == meridian_eigenvalue_generator("hstar", "phibar", n)


def test_meridian_of_unit_is_delta():
    assert meridian_map(SkeinElement.scalar(1)) == SkeinElement.scalar(DELTA)


def test_star_intertwines_meridian_maps():
    rng = random.Random(5)
    for _ in range(25):
        x = random_skein_element(rng, max_degree=3)
        assert meridian_map(x, "phi").star() == meridian_map(x.star(), "phibar")


def test_meridian_rejects_unknown_map():
    with pytest.raises(ValueError):
        meridian_map(SkeinElement.scalar(1), "psi")


def test_eigenvalues_pairwise_distinct():
    parts = partitions_up_to(4)
    v, s = Fraction(2, 7), Fraction(5, 3)
    seen = {}
    for lam in parts:
        for mu in parts:
            e = eigenvalue_s(lam, mu)
            key = ring_at(e, v, s)
            if key in seen:
                assert seen[key][1] != e, (lam, mu, seen[key][0])
            seen[key] = ((lam, mu), e)
    assert len(seen) == len(parts) ** 2
