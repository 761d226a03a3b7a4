"""The skein of the annulus as the polynomial algebra on h_n and h_n^*.

A :class:`Monomial` is a pair of partitions (the multisets of ``h`` and
``h^*`` subscripts); a :class:`SkeinElement` is a finite linear combination
of monomials with coefficients in the fraction field of the coefficient ring.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, NamedTuple

from .ring import ONE, RingElem, ZERO, parse_ring


class Monomial(NamedTuple):
    """h_{h[0]} h_{h[1]} ... h^*_{hs[0]} ...; subscripts stored descending."""

    h: tuple[int, ...] = ()
    hs: tuple[int, ...] = ()

    @property
    def bidegree(self) -> tuple[int, int]:
        return sum(self.h), sum(self.hs)

    @property
    def charge(self) -> int:
        return sum(self.h) - sum(self.hs)

    def times(self, other: "Monomial") -> "Monomial":
        if not other.h and not other.hs:
            return self
        return Monomial(
            tuple(sorted(self.h + other.h, reverse=True)),
            tuple(sorted(self.hs + other.hs, reverse=True)),
        )

    def starred(self) -> "Monomial":
        return Monomial(self.hs, self.h)

    def __str__(self) -> str:
        if not self.h and not self.hs:
            return "1"
        return "*".join([f"h{n}" for n in self.h] + [f"hs{n}" for n in self.hs])


UNIT = Monomial()


def generator_monomial(n: int, star: bool = False) -> Monomial | None:
    """Monomial for h_n (or h_n^*); ``UNIT`` for n = 0, ``None`` (zero) for n < 0."""
    if n < 0:
        return None
    if n == 0:
        return UNIT
    return Monomial((), (n,)) if star else Monomial((n,), ())


class SkeinElement:
    """Immutable finite combination ``{Monomial: RingElem}`` with no zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, RingElem | int] | None = None):
        self.terms: dict[Monomial, RingElem] = {}
        if terms:
            for m, c in terms.items():
                c = RingElem.coerce(c)
                if not c.is_zero():
                    self.terms[m] = c

    @classmethod
    def _raw(cls, terms: dict[Monomial, RingElem]) -> "SkeinElement":
        out = cls.__new__(cls)
        out.terms = terms
        return out

    @classmethod
    def scalar(cls, c: RingElem | int) -> "SkeinElement":
        return cls({UNIT: c})

    @classmethod
    def h(cls, n: int) -> "SkeinElement":
        m = generator_monomial(n)
        return cls({m: 1}) if m is not None else cls()

    @classmethod
    def hs(cls, n: int) -> "SkeinElement":
        m = generator_monomial(n, star=True)
        return cls({m: 1}) if m is not None else cls()

    @classmethod
    def from_int_terms(cls, terms: Mapping[Monomial, int]) -> "SkeinElement":
        return cls._raw({m: RingElem(c) for m, c in terms.items() if c})

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, RingElem]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, m: Monomial) -> RingElem:
        return self.terms.get(m, ZERO)

    def max_h_degree(self) -> int:
        return max((sum(m.h) for m in self.terms), default=0)

    def int_terms(self) -> dict[Monomial, int] | None:
        """The coefficients as integers, or ``None`` if any is not an integer constant."""
        out = {}
        for m, c in self.terms.items():
            if c.den or not c.num.is_constant():
                return None
            out[m] = c.num.constant_value()
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, RingElem)):
            other = SkeinElement.scalar(other)
        if not isinstance(other, SkeinElement):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[m] for m, c in self.terms.items())

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "SkeinElement | RingElem | int") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            other = SkeinElement.scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                n = out[m] + c
                if n.is_zero():
                    del out[m]
                else:
                    out[m] = n
            else:
                out[m] = c
        return SkeinElement._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "SkeinElement":
        return SkeinElement._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SkeinElement | RingElem | int") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            other = SkeinElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other: "RingElem | int") -> "SkeinElement":
        return SkeinElement.scalar(other) - self

    def scale(self, c: RingElem | int) -> "SkeinElement":
        c = RingElem.coerce(c)
        if c.is_zero():
            return SkeinElement()
        return SkeinElement._raw({m: x * c for m, x in self.terms.items()})

    def __mul__(self, other: "SkeinElement | RingElem | int") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return self.scale(other)
        out: dict[Monomial, RingElem] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.times(m2)
                c = c1 * c2
                out[m] = out[m] + c if m in out else c
        return SkeinElement._raw({m: c for m, c in out.items() if not c.is_zero()})

    def __rmul__(self, other: "RingElem | int") -> "SkeinElement":
        return self.scale(other)

    def __truediv__(self, other: "SkeinElement | RingElem | int") -> "SkeinElement":
        if isinstance(other, SkeinElement):
            if set(other.terms) - {UNIT}:
                raise ZeroDivisionError("can only divide by scalar skein elements")
            other = other.coeff(UNIT)
        return self.scale(ONE / RingElem.coerce(other))

    def __pow__(self, n: int) -> "SkeinElement":
        if n < 0:
            if set(self.terms) - {UNIT}:
                raise ValueError("negative powers are only defined for scalars")
            return SkeinElement.scalar(self.coeff(UNIT) ** n)
        out = SkeinElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    # -- involutions ------------------------------------------------------
    def star(self) -> "SkeinElement":
        """Rotation involution: swap h_n and h_n^*."""
        return SkeinElement._raw({m.starred(): c for m, c in self.terms.items()})

    def mirror(self) -> "SkeinElement":
        """Mirror map: monomials are fixed, coefficients are bar-conjugated."""
        return SkeinElement._raw({m: c.bar() for m, c in self.terms.items()})

    def charge_decompose(self) -> dict[int, "SkeinElement"]:
        out: dict[int, dict[Monomial, RingElem]] = {}
        for m, c in self.terms.items():
            out.setdefault(m.charge, {})[m] = c
        return {k: SkeinElement._raw(v) for k, v in sorted(out.items())}

    # -- serialisation ----------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, RingElem]]:
        """Terms by descending total degree, then descending (h, hs) subscripts."""
        return sorted(
            self.terms.items(),
            key=lambda mc: (-(sum(mc[0].h) + sum(mc[0].hs)), -sum(mc[0].h), _neg(mc[0].h), _neg(mc[0].hs)),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            num, den = c.reduced()
            negative = False
            if den == 1 and num.is_constant():
                k = num.constant_value()
                negative = k < 0
                k = abs(k)
                if m == UNIT:
                    body = str(k)
                else:
                    body = str(m) if k == 1 else f"{k}*{m}"
            else:
                cs = str(c)
                if den == 1 and len(num.terms) > 1:
                    cs = f"({cs})"
                elif den == 1 and num.leading()[1] < 0:
                    negative = True
                    cs = str(-c)
                body = cs if m == UNIT else f"{cs}*{m}"
            if i == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"SkeinElement({self})"

    def to_json(self) -> list[dict]:
        return [{"h": list(m.h), "hs": list(m.hs), "coeff": str(c)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict] | str) -> "SkeinElement":
        if isinstance(data, str):
            data = json.loads(data)
        out = cls()
        for item in data:
            m = Monomial(
                tuple(sorted(item.get("h", []), reverse=True)),
                tuple(sorted(item.get("hs", []), reverse=True)),
            )
            if any(n <= 0 for n in m.h + m.hs):
                raise ValueError(f"monomial subscripts must be positive: {item}")
            out = out + cls({m: parse_ring(str(item["coeff"]))})
        return out


def _neg(t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in t)


def parse_skein(text: str) -> SkeinElement:
    """Parse text such as ``"h3*hs2*hs1 - 2*hs2"``; coefficients may use ``v`` and ``s``."""
    from ._expr import parse_expression
    from .ring import S, V

    def atom(name: str) -> SkeinElement:
        if name == "v":
            return SkeinElement.scalar(V)
        if name == "s":
            return SkeinElement.scalar(S)
        if name.startswith("hs") and name[2:].isdigit():
            return SkeinElement.hs(int(name[2:]))
        if name.startswith("h") and name[1:].isdigit():
            return SkeinElement.h(int(name[1:]))
        raise ValueError(f"unknown symbol {name!r} in skein expression")

    return parse_expression(text, atom, SkeinElement.scalar)


def linear_combination(items: Iterable[tuple[RingElem | int, SkeinElement]]) -> SkeinElement:
    out = SkeinElement()
    for c, x in items:
        out = out + x.scale(c)
    return out


def star(x: SkeinElement) -> SkeinElement:
    return x.star()


def mirror(x: SkeinElement) -> SkeinElement:
    return x.mirror()


def charge_decompose(x: SkeinElement) -> dict[int, SkeinElement]:
    return x.charge_decompose()
