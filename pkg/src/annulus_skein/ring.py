"""Exact arithmetic in Z[v^{+-1}, s^{+-1}] and its fraction field.

Laurent polynomials are stored as ``{(v_exp, s_exp): coeff}`` dictionaries
with arbitrary-precision integer coefficients.  Fractions keep their
denominator as a multiset of normalised polynomial factors, so that the
quantum-integer denominators {k} = s^k - s^-k coming out of the skein formulas
combine by taking a common multiple instead of multiplying everything out.
Equality is decided by cross-multiplication; full gcd reduction is only done
for display (:meth:`RingElem.reduced`).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "RingElem",
    "DivisionByZero",
    "SubstitutionError",
    "V",
    "S",
    "ONE",
    "ZERO",
    "Z",
    "delta",
    "quantum_int",
    "quantum_bracket",
    "to_integral",
    "parse_ring",
]


class DivisionByZero(ZeroDivisionError):
    """Raised when dividing by the zero element of the ring."""


class SubstitutionError(ValueError):
    """A substitution made a denominator vanish identically."""


Key = tuple[int, int]


def _fmt_var(name: str, e: int) -> str:
    if e == 1:
        return name
    return f"{name}^{e}"


class LaurentPoly:
    """A Laurent polynomial in ``v`` and ``s`` with integer coefficients.

    Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Key, int] | None = None, *, _clean: bool = False):
        if terms is None:
            self.terms: dict[Key, int] = {}
        elif _clean:
            self.terms = terms  # type: ignore[assignment]
        else:
            self.terms = {k: int(c) for k, c in terms.items() if c}
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): c}) if c else cls()

    @classmethod
    def monomial(cls, v_exp: int = 0, s_exp: int = 0, coeff: int = 1) -> "LaurentPoly":
        return cls({(v_exp, s_exp): coeff}) if coeff else cls()

    # -- basic predicates -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0, 0), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            n = out.get(k, 0) + c
            if n:
                out[k] = n
            else:
                del out[k]
        return LaurentPoly(out, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.terms.items()}, _clean=True)

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly({k: c * other for k, c in self.terms.items()}, _clean=True)
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly()
        if len(a) < len(b):
            a, b = b, a
        out: dict[Key, int] = {}
        get = out.get
        for (bv, bs), bc in b.items():
            for (av, as_), ac in a.items():
                k = (av + bv, as_ + bs)
                out[k] = get(k, 0) + ac * bc
        return LaurentPoly({k: c for k, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            ((kv, ks), c) = next(iter(self.terms.items()))
            if abs(c) != 1:
                raise ValueError("negative powers only for unit monomials")
            return LaurentPoly.monomial(-kv * -n, -ks * -n, c ** (-n))
        result = ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, dv: int, ds: int) -> "LaurentPoly":
        """Multiply by the monomial v^dv s^ds."""
        if dv == 0 and ds == 0:
            return self
        return LaurentPoly({(a + dv, b + ds): c for (a, b), c in self.terms.items()}, _clean=True)

    # -- structure --------------------------------------------------------
    def min_exponents(self) -> Key:
        return (min(k[0] for k in self.terms), min(k[1] for k in self.terms))

    def max_exponents(self) -> Key:
        return (max(k[0] for k in self.terms), max(k[1] for k in self.terms))

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def leading(self) -> tuple[Key, int]:
        """Leading term in lex order with ``v`` as principal variable."""
        k = max(self.terms)
        return k, self.terms[k]

    def bar(self) -> "LaurentPoly":
        return LaurentPoly({(-a, -b): c for (a, b), c in self.terms.items()}, _clean=True)

    def subs_v(self, eps: int, n: int) -> "LaurentPoly":
        """Substitute v = eps * s^n."""
        out: dict[Key, int] = {}
        for (a, b), c in self.terms.items():
            k = (0, b + n * a)
            out[k] = out.get(k, 0) + (c if eps == 1 or a % 2 == 0 else -c)
        return LaurentPoly(out)

    def subs_s_neg_inv(self) -> "LaurentPoly":
        """Substitute s = -s^-1."""
        return LaurentPoly(
            {(a, -b): (-c if b % 2 else c) for (a, b), c in self.terms.items()}, _clean=True
        )

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Return ``self / other`` if it is a Laurent polynomial, else ``None``."""
        if not other.terms:
            raise DivisionByZero("division by the zero polynomial")
        if not self.terms:
            return LaurentPoly()
        fv, fs = self.min_exponents()
        gv, gs = other.min_exponents()
        rem = dict(self.shift(-fv, -fs).terms)
        g = other.shift(-gv, -gs).terms
        (dv, ds) = lead = max(g)
        lc = g[lead]
        quot: dict[Key, int] = {}
        while rem:
            (rv, rs) = k = max(rem)
            rc = rem[k]
            if rv < dv or rs < ds or rc % lc:
                return None
            q = rc // lc
            mv, ms = rv - dv, rs - ds
            quot[(mv, ms)] = q
            for (a, b), c in g.items():
                t = (a + mv, b + ms)
                n = rem.get(t, 0) - q * c
                if n:
                    rem[t] = n
                else:
                    rem.pop(t, None)
        return LaurentPoly(quot, _clean=True).shift(fv - gv, fs - gs)

    # -- display ----------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Key, int]]:
        # ascending v, then descending s
        return sorted(self.terms.items(), key=lambda kc: (kc[0][0], -kc[0][1]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for i, ((a, b), c) in enumerate(self.sorted_terms()):
            vars_ = [x for x in (_fmt_var("v", a) if a else "", _fmt_var("s", b) if b else "") if x]
            mag = abs(c)
            if vars_:
                body = "*".join(vars_)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


ONE_POLY = LaurentPoly.const(1)
ZERO_POLY = LaurentPoly()


def _normalize_factor(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly, int]:
    """Split ``p`` as ``unit * content * core``.

    Returns ``(unit, core, content)`` where ``unit`` is a signed monomial,
    ``content`` a positive integer and ``core`` a polynomial with zero minimal
    exponents, positive leading coefficient and unit content (``core == 1`` if
    ``p`` was a monomial times a constant).
    """
    if not p.terms:
        raise DivisionByZero("division by zero")
    mv, ms = p.min_exponents()
    core = p.shift(-mv, -ms)
    _, lc = core.leading()
    c = core.content()
    sign = 1 if lc > 0 else -1
    if c != 1 or sign != 1:
        core = LaurentPoly({k: x // (c * sign) for k, x in core.terms.items()}, _clean=True)
    return LaurentPoly.monomial(mv, ms, sign), core, c


class RingElem:
    """Element of the fraction field of Z[v^{+-1}, s^{+-1}].

    ``num`` is a :class:`LaurentPoly`; the denominator is the product
    ``prod(f ** e for f, e in den.items())`` of normalised factors.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int = 0, den: Mapping[LaurentPoly, int] | None = None):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        self.num = num
        self.den: dict[LaurentPoly, int] = dict(den) if (den and num.terms) else {}

    @classmethod
    def fraction(cls, num: LaurentPoly | int, den: LaurentPoly | int) -> "RingElem":
        return cls(num) / cls(den)

    @classmethod
    def coerce(cls, x: "RingElem | LaurentPoly | int | Fraction") -> "RingElem":
        if isinstance(x, RingElem):
            return x
        if isinstance(x, Fraction):
            return cls(x.numerator) / cls(x.denominator)
        return cls(x)

    # -- denominators -----------------------------------------------------
    def denominator(self) -> LaurentPoly:
        d = ONE_POLY
        for f, e in self.den.items():
            d = d * f**e
        return d

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def is_integral_form(self) -> bool:
        return not self.den

    @staticmethod
    def _common(a: dict[LaurentPoly, int], b: dict[LaurentPoly, int]) -> dict[LaurentPoly, int]:
        out = dict(a)
        for f, e in b.items():
            if out.get(f, 0) < e:
                out[f] = e
        return out

    @staticmethod
    def _cofactor(full: dict[LaurentPoly, int], part: dict[LaurentPoly, int]) -> LaurentPoly:
        p = ONE_POLY
        for f, e in full.items():
            k = e - part.get(f, 0)
            if k:
                p = p * f**k
        return p

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "RingElem | LaurentPoly | int") -> "RingElem":
        if not isinstance(other, RingElem):
            other = RingElem(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            return RingElem(self.num + other.num, self.den)
        common = self._common(self.den, other.den)
        n = self.num * self._cofactor(common, self.den) + other.num * self._cofactor(common, other.den)
        return RingElem(n, common)

    __radd__ = __add__

    def __neg__(self) -> "RingElem":
        return RingElem(-self.num, self.den)

    def __sub__(self, other: "RingElem | LaurentPoly | int") -> "RingElem":
        if not isinstance(other, RingElem):
            other = RingElem(other)
        return self + (-other)

    def __rsub__(self, other: "LaurentPoly | int") -> "RingElem":
        return RingElem(other) - self

    def __mul__(self, other: "RingElem | LaurentPoly | int") -> "RingElem":
        if not isinstance(other, RingElem):
            if isinstance(other, Fraction):
                other = RingElem.coerce(other)
            else:
                return RingElem(self.num * other, self.den)
        if not self.num.terms or not other.num.terms:
            return ZERO
        den = dict(self.den)
        for f, e in other.den.items():
            den[f] = den.get(f, 0) + e
        return RingElem(self.num * other.num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RingElem":
        if not self.num.terms:
            raise DivisionByZero("division by zero in the coefficient field")
        unit, core, content = _normalize_factor(self.num)
        (uv, us), sign = unit.leading()
        num = self.denominator().shift(-uv, -us) * sign
        den: dict[LaurentPoly, int] = {}
        if core != ONE_POLY:
            den[core] = 1
        if content != 1:
            den[LaurentPoly.const(content)] = 1
        return RingElem(num, den)

    def __truediv__(self, other: "RingElem | LaurentPoly | int") -> "RingElem":
        if not isinstance(other, RingElem):
            other = RingElem(other)
        if not other.num.terms:
            raise DivisionByZero("division by zero in the coefficient field")
        return self * other.inverse()

    def __rtruediv__(self, other: "LaurentPoly | int") -> "RingElem":
        return RingElem(other) / self

    def __pow__(self, n: int) -> "RingElem":
        if n < 0:
            return self.inverse() ** (-n)
        if not self.num.terms:
            return ONE if n == 0 else ZERO
        return RingElem(self.num**n, {f: e * n for f, e in self.den.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RingElem(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        common = self._common(self.den, other.den)
        return self.num * self._cofactor(common, self.den) == other.num * self._cofactor(
            common, other.den
        )

    __hash__ = None  # type: ignore[assignment]

    # -- involutions and substitutions -------------------------------------
    def _map(self, fn) -> "RingElem":
        out = RingElem(fn(self.num))
        for f, e in self.den.items():
            g = fn(f)
            if g.is_zero():
                raise SubstitutionError(f"denominator factor {f} vanishes under substitution")
            out = out / RingElem(g**e)
        return out

    def bar(self) -> "RingElem":
        """Conjugation v -> v^-1, s -> s^-1."""
        return self._map(LaurentPoly.bar)

    def subs_v(self, eps: int, n: int) -> "RingElem":
        """Substitute v = eps * s^n (eps = +1 or -1)."""
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        return self._map(lambda p: p.subs_v(eps, n))

    def subs_s_neg_inv(self) -> "RingElem":
        """Substitute s = -s^-1, leaving v fixed."""
        return self._map(LaurentPoly.subs_s_neg_inv)

    def substitute(self, kind: str, eps: int = 1, n: int = 0) -> "RingElem":
        if kind == "v_to_eps_sN":
            return self.subs_v(eps, n)
        if kind == "s_to_neg_inv_s":
            return self.subs_s_neg_inv()
        raise ValueError(f"unknown substitution {kind!r}")

    # -- canonical form ---------------------------------------------------
    def reduced(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Return ``(num, den)`` in lowest terms with a canonical unit choice.

        The denominator has positive content-free leading coefficient and its
        exponent range centred on zero in each variable.
        """
        if not self.num.terms:
            return ZERO_POLY, ONE_POLY
        num, den = self.num, self.denominator()
        if not den.is_monomial():
            g = _poly_gcd(num, den)
            if not g.is_constant():
                num = num.divide_exact(g)
                den = den.divide_exact(g)
                assert num is not None and den is not None
        # integer content and sign
        c = gcd(num.content(), den.content())
        _, lc = den.leading()
        if lc < 0:
            c = -c
        if c != 1:
            num = LaurentPoly({k: x // c for k, x in num.terms.items()}, _clean=True)
            den = LaurentPoly({k: x // c for k, x in den.terms.items()}, _clean=True)
        (lv, ls), (hv, hs) = den.min_exponents(), den.max_exponents()
        dv, ds = -((lv + hv) // 2), -((ls + hs) // 2)
        return num.shift(dv, ds), den.shift(dv, ds)

    def __str__(self) -> str:
        num, den = self.reduced()
        if den == ONE_POLY:
            return str(num)
        return f"({num})/({den})"

    def __repr__(self) -> str:
        return f"RingElem({self})"


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor of two Laurent polynomials (up to units)."""
    import sympy

    v, s = sympy.symbols("v s")

    def to_poly(p: LaurentPoly):
        mv, ms = p.min_exponents()
        return sympy.Poly.from_dict(
            {(a - mv, b - ms): c for (a, b), c in p.terms.items()}, v, s, domain="ZZ"
        )

    g = sympy.gcd(to_poly(a), to_poly(b))
    return LaurentPoly({k: int(c) for k, c in g.as_dict().items()})


ONE = RingElem(1)
ZERO = RingElem(0)
V = RingElem(LaurentPoly.monomial(1, 0))
S = RingElem(LaurentPoly.monomial(0, 1))
#: z = s - s^-1
Z = RingElem(LaurentPoly({(0, 1): 1, (0, -1): -1}))


def quantum_bracket(k: int) -> RingElem:
    """{k} = s^k - s^-k."""
    return RingElem(LaurentPoly.monomial(0, k) - LaurentPoly.monomial(0, -k))


def quantum_int(k: int) -> RingElem:
    """[k] = (s^k - s^-k)/(s - s^-1), for k >= 0."""
    if k < 0:
        raise ValueError("quantum_int requires k >= 0")
    if k == 0:
        return ZERO
    return RingElem(LaurentPoly({(0, k - 1 - 2 * i): 1 for i in range(k)}))


def _make_delta() -> RingElem:
    return RingElem(LaurentPoly({(-1, 0): 1, (1, 0): -1})) / Z


#: the loop value (v^-1 - v)/(s - s^-1)
DELTA = _make_delta()


def delta() -> RingElem:
    return DELTA


def constants(name: str, k: int | None = None) -> RingElem:
    if name == "delta":
        return DELTA
    if name == "quantum_int":
        if k is None:
            raise ValueError("quantum_int needs k")
        return quantum_int(k)
    raise ValueError(f"unknown constant {name!r}")


def to_integral(a: RingElem) -> LaurentPoly | None:
    """The Laurent polynomial equal to ``a``, or ``None`` if ``a`` is not integral."""
    if not a.den:
        return a.num
    return a.num.divide_exact(a.denominator())


def ring_arith(a: RingElem, b: RingElem, op: str) -> RingElem:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def sum_ring(items: Iterable[RingElem]) -> RingElem:
    total = ZERO
    for x in items:
        total = total + x
    return total


def parse_ring(text: str) -> RingElem:
    """Parse the canonical string form, e.g. ``"(v^-1 - v)/(s - s^-1)"``."""
    from ._expr import parse_expression

    def atom(name: str) -> RingElem:
        if name == "v":
            return V
        if name == "s":
            return S
        raise ValueError(f"unknown symbol {name!r} in coefficient expression")

    return parse_expression(text, atom, RingElem)
