import pytest
from hypothesis import given, strategies as st

from annulus_skein.partitions import EMPTY, Partition, complement_union, enumerate_partitions

partitions = st.lists(st.integers(1, 6), max_size=5).map(Partition.from_parts)


def brute_hooks(lam):
    conj = lam.conjugate
    return [
        (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def test_parse_and_print():
    lam = Partition.parse("[4,2,2]")
    assert lam.parts == (4, 2, 2) and str(lam) == "[4,2,2]"
    assert Partition.parse("[]") == EMPTY


@pytest.mark.parametrize("bad", ["[1,2]", "[0]", "[-1]", "4,2", "[1.5]"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Partition.parse(bad)


def test_known_data():
    lam = Partition((4, 2, 2))
    assert lam.conjugate == Partition((3, 3, 1, 1))
    assert sorted(lam.hooks()) == sorted([6, 5, 2, 1, 3, 2, 2, 1])
    assert lam.n_lambda == 2 + 4
    assert sorted(lam.contents()) == sorted([0, 1, 2, 3, -1, 0, -2, -1])


@given(partitions)
def test_hooks_match_direct_count(lam):
    assert sorted(lam.hooks()) == sorted(brute_hooks(lam))


@given(partitions)
def test_conjugation(lam):
    assert lam.conjugate.conjugate == lam
    assert lam.conjugate.size == lam.size
    assert sorted(lam.conjugate.contents()) == sorted(-c for c in lam.contents())


@given(partitions)
def test_n_lambda_is_sum_of_conjugate_binomials(lam):
    assert lam.n_lambda == sum(c * (c - 1) // 2 for c in lam.conjugate.parts)


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (4, 5), (6, 11), (8, 22)])
def test_enumerate_counts(n, count):
    parts = enumerate_partitions(n)
    assert len(parts) == count == len(set(parts))
    assert all(p.size == n for p in parts)


def test_enumerate_with_max_parts():
    assert enumerate_partitions(4, 2) == [Partition((4,)), Partition((3, 1)), Partition((2, 2))]


def test_complement_union():
    assert complement_union(Partition((2, 1)), Partition((1,)), 3) == Partition((2, 2, 1))
    assert complement_union(Partition((1,)), Partition((2, 1)), 3) == Partition((2, 1, 1))
    assert complement_union(EMPTY, EMPTY, 2) == EMPTY
    with pytest.raises(ValueError):
        complement_union(Partition((2,)), Partition((2,)), 3)


@given(partitions, partitions)
def test_complement_union_size_and_bound(lam, mu):
    N = lam.first + mu.first + 1
    nu = complement_union(lam, mu, N)
    assert nu.size == lam.size + len(mu) * N - mu.size
    assert nu.first <= N
