"""Change of basis between monomials and the Q_{lambda,mu}, structure constants,
and the meridian maps acting diagonally on the Q basis."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import linalg
from .partitions import Partition, enumerate_partitions
from .qbasis import eigenvalue_s, q_element, q_int_terms
from .ring import RingElem, ZERO, to_integral
from .skein import Monomial, SkeinElement

Pair = tuple[Partition, Partition]


class ExpansionError(ArithmeticError):
    """The element is not in the span of the candidate Q's (an internal bug)."""


class PositivityError(ArithmeticError):
    """A structure constant is not a non-negative integer."""


class QExpansion(dict):
    """Map ``(lam, mu) -> RingElem`` with nonzero coefficients."""

    def recombine(self) -> SkeinElement:
        out = SkeinElement()
        for (lam, mu), c in self.items():
            out = out + q_element(lam, mu).scale(c)
        return out

    def int_items(self) -> Iterator[tuple[Pair, int]]:
        for key, c in self.items():
            p = to_integral(c)
            if p is None or not p.is_constant():
                raise ValueError(f"coefficient of {key} is not an integer: {c}")
            yield key, p.constant_value()

    def to_json(self) -> list[dict]:
        return [
            {"lambda": list(lam.parts), "mu": list(mu.parts), "coeff": str(c)}
            for (lam, mu), c in self.items()
        ]


def enumerate_basis(charge: int, max_n: int) -> list[Pair]:
    """All (lam, mu) with |lam| - |mu| = charge and |lam| <= max_n, largest |lam| first."""
    if max_n < max(charge, 0):
        raise ValueError(f"max_n must be at least max(charge, 0) = {max(charge, 0)}")
    out: list[Pair] = []
    for n in range(max_n, max(charge, 0) - 1, -1):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n - charge):
                out.append((lam, mu))
    return out


@lru_cache(maxsize=None)
def _change_of_basis(charge: int, max_n: int):
    """Monomial index, candidate list, and the inverse of the Q-expansion matrix."""
    basis = enumerate_basis(charge, max_n)
    # diagonal monomials are in bijection with the candidates
    monos = [Monomial(lam.parts, mu.parts) for lam, mu in basis]
    index = {m: i for i, m in enumerate(monos)}
    n = len(basis)
    matrix = [[0] * n for _ in range(n)]
    for j, (lam, mu) in enumerate(basis):
        for m, c in q_int_terms(lam, mu).items():
            matrix[index[m]][j] = c
    inv = linalg.inverse(matrix)
    inv_rows = [{j: (int(x) if x.denominator == 1 else x) for j, x in row.items()} for row in inv]
    return basis, index, inv_rows


def expand_in_q(x: SkeinElement) -> QExpansion:
    """Coefficients of ``x`` in the Q basis."""
    result = QExpansion()
    for charge, part in x.charge_decompose().items():
        max_n = max(part.max_h_degree(), charge, 0)
        basis, index, inv = _change_of_basis(charge, max_n)
        local = QExpansion()
        vec: dict[int, RingElem] = {}
        for m, c in part:
            i = index.get(m)
            if i is None:
                raise ExpansionError(f"monomial {m} outside the candidate span")
            vec[i] = c
        for j, row in enumerate(inv):
            acc = ZERO
            for i, a in row.items():
                c = vec.get(i)
                if c is not None:
                    acc = acc + c * (a if isinstance(a, int) else RingElem.coerce(Fraction(a)))
            if not acc.is_zero():
                local[basis[j]] = acc
        residual = part - local.recombine()
        if not residual.is_zero():
            raise ExpansionError(f"nonzero residual {residual} for charge {charge}")
        result.update(local)
    return result


def multiply_in_q(lam: Partition, mu: Partition, lam2: Partition, mu2: Partition) -> QExpansion:
    """Structure constants of Q_{lam,mu} * Q_{lam2,mu2}; all must be non-negative integers."""
    prod = q_element(lam, mu) * q_element(lam2, mu2)
    exp = expand_in_q(prod)
    for key, c in exp.items():
        p = to_integral(c)
        if p is None or not p.is_constant() or p.constant_value() < 0:
            raise PositivityError(f"structure constant at {key} is {c}")
    return exp


def meridian_map(x: SkeinElement, map_: str = "phi") -> SkeinElement:
    """phi (eigenvalue s_{lam,mu}) or phibar (eigenvalue s_{mu,lam}) applied to ``x``."""
    if map_ not in ("phi", "phibar"):
        raise ValueError(f"unknown meridian map {map_!r}")
    out = SkeinElement()
    for (lam, mu), c in expand_in_q(x).items():
        eig = eigenvalue_s(lam, mu) if map_ == "phi" else eigenvalue_s(mu, lam)
        out = out + q_element(lam, mu).scale(c * eig)
    return out
