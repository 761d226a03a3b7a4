"""Index vectors, template matrices and the determinantal elements Q_{lambda,mu}.

A matrix is described by its index vector: ``starred`` rows come first and
hold h^* entries whose subscripts decrease by one along the row, ``standard``
rows hold h entries whose subscripts increase by one.  Subscript 0 is the
unit and negative subscripts are zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .partitions import Partition
from .ring import DELTA, LaurentPoly, RingElem, Z
from .skein import Monomial, SkeinElement, UNIT, generator_monomial


@dataclass(frozen=True)
class IndexVector:
    starred: tuple[int, ...] = ()
    standard: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "starred", tuple(self.starred))
        object.__setattr__(self, "standard", tuple(self.standard))

    @property
    def dim(self) -> int:
        return len(self.starred) + len(self.standard)

    def as_list(self) -> list[int]:
        return list(self.starred) + list(self.standard)


@dataclass(frozen=True)
class Entry:
    """A matrix entry: ``kind`` is 'h' or 'hs', with subscript ``n`` (0 = one, <0 = zero)."""

    kind: Literal["h", "hs"]
    n: int

    @property
    def is_zero(self) -> bool:
        return self.n < 0

    @property
    def is_one(self) -> bool:
        return self.n == 0

    def monomial(self) -> Monomial | None:
        return generator_monomial(self.n, star=self.kind == "hs")

    def __str__(self) -> str:
        if self.n < 0:
            return "0"
        if self.n == 0:
            return "1"
        return f"{self.kind}{self.n}"

    def key(self) -> tuple:
        # zeros and ones compare equal whatever row type they came from
        if self.n < 0:
            return ("0",)
        if self.n == 0:
            return ("1",)
        return (self.kind, self.n)


@dataclass(frozen=True)
class SkeinMatrix:
    rows: tuple[tuple[Entry, ...], ...]
    n_starred: int

    @property
    def dim(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.rows]

    def __str__(self) -> str:
        cells = self.to_lists()
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("(" + " ".join(c.rjust(width) for c in row) + ")" for row in cells)


def index_vector(lam: Partition, mu: Partition) -> IndexVector:
    """Index vector whose matrix has mu reversed then lambda on the diagonal."""
    kstar = len(mu)
    starred = tuple(mu[kstar - i] + i - 1 for i in range(1, kstar + 1))
    standard = tuple(lam[i - kstar - 1] - i + 1 for i in range(kstar + 1, kstar + len(lam) + 1))
    return IndexVector(starred, standard)


def _row(w: int, starred: bool, dim: int) -> tuple[Entry, ...]:
    if starred:
        return tuple(Entry("hs", w - j + 1) for j in range(1, dim + 1))
    return tuple(Entry("h", w + j - 1) for j in range(1, dim + 1))


def build_matrix(w: IndexVector) -> SkeinMatrix:
    dim = w.dim
    rows = [_row(x, True, dim) for x in w.starred] + [_row(x, False, dim) for x in w.standard]
    return SkeinMatrix(tuple(rows), len(w.starred))


def _det_int(rows: list[list[Monomial | None]]) -> dict[Monomial, int]:
    """Laplace expansion along rows, memoised on the set of used columns."""
    n = len(rows)
    memo: dict[int, dict[Monomial, int]] = {}

    def rec(r: int, used: int) -> dict[Monomial, int]:
        if r == n:
            return {UNIT: 1}
        hit = memo.get(used)
        if hit is not None:
            return hit
        acc: dict[Monomial, int] = {}
        pos = 0
        for j in range(n):
            if used >> j & 1:
                continue
            m = rows[r][j]
            if m is not None:
                sub = rec(r + 1, used | (1 << j))
                sign = -1 if pos & 1 else 1
                for mono, c in sub.items():
                    mm = m.times(mono)
                    acc[mm] = acc.get(mm, 0) + sign * c
            pos += 1
        acc = {m: c for m, c in acc.items() if c}
        memo[used] = acc
        return acc

    return rec(0, 0)


def determinant(M: SkeinMatrix) -> SkeinElement:
    rows = [[e.monomial() for e in row] for row in M.rows]
    return SkeinElement.from_int_terms(_det_int(rows))


@lru_cache(maxsize=None)
def _q_int(lam: Partition, mu: Partition) -> tuple[tuple[Monomial, int], ...]:
    M = build_matrix(index_vector(lam, mu))
    rows = [[e.monomial() for e in row] for row in M.rows]
    return tuple(_det_int(rows).items())


def q_int_terms(lam: Partition, mu: Partition) -> dict[Monomial, int]:
    """Integer monomial coefficients of Q_{lambda,mu} (cached)."""
    return dict(_q_int(lam, mu))


def q_element(lam: Partition, mu: Partition) -> SkeinElement:
    return SkeinElement.from_int_terms(q_int_terms(lam, mu))


@dataclass(frozen=True)
class NormalForm:
    """``sign * Q_{lam,mu}``; ``sign == 0`` means the determinant vanishes."""

    sign: int
    lam: Partition | None = None
    mu: Partition | None = None

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


ZERO_FORM = NormalForm(0)


def _perm_sign(seq: list[int], key) -> tuple[list[int], int]:
    """Stable sort of ``seq`` by ``key`` with the sign of the sorting permutation."""
    order = sorted(range(len(seq)), key=lambda i: key(seq[i]))
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return [seq[i] for i in order], sign


def normalize_index_vector(w: IndexVector) -> NormalForm:
    """Rewrite det M_w as 0 or +-Q_{lambda,mu}.

    Zero and repeated rows are detected by building the rows.  Rows are then
    sorted (starred increasing, standard decreasing) and boundary rows of the
    form (1, 0, ..., 0) at the top or (0, ..., 0, 1) at the bottom are removed
    by expanding along them, until neither occurs.
    """
    starred, standard = list(w.starred), list(w.standard)
    sign = 1
    while True:
        dim = len(starred) + len(standard)
        if dim == 0:
            return NormalForm(sign, Partition(), Partition())
        rows = [_row(x, True, dim) for x in starred] + [_row(x, False, dim) for x in standard]
        keys = [tuple(e.key() for e in row) for row in rows]
        if any(all(e.is_zero for e in row) for row in rows) or len(set(keys)) < len(keys):
            return ZERO_FORM
        starred, s1 = _perm_sign(starred, lambda x: x)
        standard, s2 = _perm_sign(standard, lambda x: -x)
        sign *= s1 * s2
        if starred and starred[0] == 0:
            # first row (1, 0, ..., 0): the minor shifts the remaining subscripts
            starred = [x - 1 for x in starred[1:]]
            standard = [x + 1 for x in standard]
            continue
        if standard and standard[-1] == 1 - dim:
            # last row (0, ..., 0, 1): the minor keeps the other subscripts
            standard = standard[:-1]
            continue
        break
    kstar = len(starred)
    mu_rev = [starred[i] - i for i in range(kstar)]
    lam = [standard[i] + kstar + i for i in range(len(standard))]
    return NormalForm(sign, Partition(tuple(lam)), Partition(tuple(reversed(mu_rev))))


# -- eigenvalues ----------------------------------------------------------


def _s_pow(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(0, k)


def eigenvalue_s(lam: Partition, mu: Partition) -> RingElem:
    """s_{lambda,mu} = z (v^-1 sum_lam s^{2c} - v sum_mu s^{-2c}) + delta."""
    terms: dict[tuple[int, int], int] = {}
    for c in lam.contents():
        terms[(-1, 2 * c)] = terms.get((-1, 2 * c), 0) + 1
    for c in mu.contents():
        terms[(1, -2 * c)] = terms.get((1, -2 * c), 0) - 1
    return RingElem(LaurentPoly(terms)) * Z + DELTA


def eigenvalue_t(lam: Partition, mu: Partition) -> RingElem:
    return eigenvalue_s(mu, lam)


def eigenvalue_cw(w: IndexVector) -> RingElem:
    """Eigenvalue of the reverse meridian map on A_w, from the alpha/beta decomposition."""
    kstar, dim = len(w.starred), w.dim
    alpha = LaurentPoly()
    for i, x in enumerate(w.as_list(), start=1):
        if i <= kstar:
            alpha = alpha + LaurentPoly.monomial(-1, 2 * x + 1)
        else:
            alpha = alpha + LaurentPoly.monomial(1, 1 - 2 * x)
    beta_num = LaurentPoly()
    for j in range(1, dim + 1):
        beta_num = beta_num + LaurentPoly({(-1, 2 * j - 2): 1, (1, 2 * j): -1})
    # sum_{j=1}^{dim-1} s^{2j}, read as -1 when dim = 0 (empty pair)
    geometric = LaurentPoly({(0, 2 * j): 1 for j in range(1, dim)}) if dim else LaurentPoly.const(-1)
    total = RingElem(alpha) + RingElem(beta_num) / Z - DELTA * geometric
    return total * _s_pow(-2 * kstar)


def meridian_eigenvalue_generator(kind: str, map_: str, n: int) -> RingElem:
    """Eigenvalue of phi / phibar on h_n or h_n^*."""
    if n < 1:
        raise ValueError("n must be positive")
    up = RingElem(LaurentPoly({(-1, 2 * n - 1): 1, (-1, -1): -1})) + DELTA
    down = RingElem(LaurentPoly({(1, 1 - 2 * n): 1, (1, 1): -1})) + DELTA
    table = {("h", "phi"): up, ("hstar", "phi"): down, ("h", "phibar"): down, ("hstar", "phibar"): up}
    try:
        return table[(kind, map_)]
    except KeyError:
        raise ValueError(f"unknown generator/map {kind!r}/{map_!r}") from None
