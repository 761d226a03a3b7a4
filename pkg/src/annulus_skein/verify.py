"""Invariant sweeps used by ``annulus-skein verify``.

Each suite yields ``(case, ok, detail)`` triples; :func:`run_suite` tallies them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .conversion import PositivityError, expand_in_q, meridian_map, multiply_in_q
from .evaluation import (
    SpecializationError,
    check_h_symmetry,
    check_pair,
    eval_element,
    macdonald_schur,
)
from .homfly import framed_homfly, from_braid_word, k_invariant_box_box
from .partitions import Partition, enumerate_partitions
from .qbasis import (
    build_matrix,
    determinant,
    eigenvalue_cw,
    eigenvalue_s,
    index_vector,
    meridian_eigenvalue_generator,
    normalize_index_vector,
    q_element,
    IndexVector,
)
from .ring import LaurentPoly, RingElem
from .skein import SkeinElement

Case = tuple[str, bool, str]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "failed": self.failed, "failures": self.failures}


def partitions_up_to(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in enumerate_partitions(k)]


def pairs_with_total(total: int) -> Iterator[tuple[Partition, Partition]]:
    for a in range(total + 1):
        for b in range(total - a + 1):
            for lam in enumerate_partitions(a):
                for mu in enumerate_partitions(b):
                    yield lam, mu


def _q_basis(max_size: int, seed: int) -> Iterator[Case]:
    for lam, mu in pairs_with_total(max_size):
        q = q_element(lam, mu)
        tag = f"Q{lam},{mu}"
        yield tag + " star", q.star() == q_element(mu, lam), ""
        yield tag + " mirror", q.mirror() == q, ""
        charge = lam.size - mu.size
        pure = all(
            m.charge == charge and sum(m.h) <= lam.size and (lam.size - sum(m.h)) == (mu.size - sum(m.hs))
            for m, _ in q
        )
        from .skein import Monomial

        yield tag + " charge/diagonal", pure and q.coeff(Monomial(lam.parts, mu.parts)) == 1, ""
    for lam in partitions_up_to(max_size):
        for mu in partitions_up_to(max_size):
            if lam.size + mu.size > 2 * max_size:
                continue
            yield f"c_w=s_mu,lam {lam},{mu}", eigenvalue_cw(index_vector(lam, mu)) == eigenvalue_s(mu, lam), ""
            yield f"bar s {lam},{mu}", eigenvalue_s(lam, mu).bar() == eigenvalue_s(mu, lam), ""
    rng = random.Random(seed)
    for _ in range(100):
        w = random_index_vector(rng)
        yield from [_check_normal_form(w)]


def random_index_vector(rng: random.Random, lo: int = -6, hi: int = 6, max_dim: int = 5) -> IndexVector:
    dim = rng.randint(1, max_dim)
    kstar = rng.randint(0, dim)
    vals = [rng.randint(lo, hi) for _ in range(dim)]
    return IndexVector(tuple(vals[:kstar]), tuple(vals[kstar:]))


def _check_normal_form(w: IndexVector) -> Case:
    det = determinant(build_matrix(w))
    nf = normalize_index_vector(w)
    if nf.is_zero:
        return f"normalize {w}", det.is_zero(), f"det={det}"
    expected = q_element(nf.lam, nf.mu).scale(nf.sign)
    return f"normalize {w}", det == expected, f"det={det} form={nf}"


def _conversion(max_size: int, seed: int) -> Iterator[Case]:
    for n in range(1, max_size + 2):
        x = SkeinElement.h(n)
        for kind, gen in (("h", SkeinElement.h), ("hstar", SkeinElement.hs)):
            x = gen(n)
            for m in ("phi", "phibar"):
                yield (
                    f"{m}({kind}_{n})",
                    meridian_map(x, m) == x.scale(meridian_eigenvalue_generator(kind, m, n)),
                    "",
                )
    small = list(pairs_with_total(min(max_size, 3)))
    for i, (l1, m1) in enumerate(small):
        for l2, m2 in small[i:]:
            if l1.size + m1.size + l2.size + m2.size > 2 * min(max_size, 3):
                continue
            try:
                multiply_in_q(l1, m1, l2, m2)
                yield f"positivity Q{l1},{m1}*Q{l2},{m2}", True, ""
            except PositivityError as exc:
                yield f"positivity Q{l1},{m1}*Q{l2},{m2}", False, str(exc)
    rng = random.Random(seed)
    for _ in range(20):
        x = random_skein_element(rng, max_degree=min(max_size, 3))
        yield "round trip", expand_in_q(x).recombine() == x, str(x)
        yield "star intertwines", meridian_map(x, "phi").star() == meridian_map(x.star(), "phibar"), str(x)


def random_coefficient(rng: random.Random) -> RingElem:
    terms = {(rng.randint(-2, 2), rng.randint(-2, 2)): rng.randint(-3, 3) for _ in range(rng.randint(1, 3))}
    return RingElem(LaurentPoly(terms))


def random_skein_element(rng: random.Random, max_degree: int = 3, n_terms: int = 4) -> SkeinElement:
    from .skein import Monomial

    out = SkeinElement()
    for _ in range(n_terms):
        a = rng.randint(0, max_degree)
        b = rng.randint(0, max_degree)
        h = rng.choice(enumerate_partitions(a))
        hs = rng.choice(enumerate_partitions(b))
        out = out + SkeinElement({Monomial(h.parts, hs.parts): random_coefficient(rng)})
    return out


def _evaluation(max_size: int, seed: int) -> Iterator[Case]:
    for lam in partitions_up_to(max_size):
        yield f"macdonald {lam}", macdonald_schur(lam) == eval_element(q_element(lam, Partition())), ""
    for lam, mu in pairs_with_total(max_size):
        val = eval_element(q_element(lam, mu))
        yield f"nonzero <Q{lam},{mu}>", not val.is_zero(), ""
        yield (
            f"conjugate Q{lam},{mu}",
            val.subs_s_neg_inv() == eval_element(q_element(lam.conjugate, mu.conjugate)),
            "",
        )


def _specialized(max_size: int, seed: int, N: int | None = None) -> Iterator[Case]:
    Ns = [N] if N else range(1, max_size + 3)
    for n_ in Ns:
        for n in range(-1, n_ + 2):
            try:
                check_h_symmetry(n, n_)
                yield f"<h_{n}>=<h_{n_ - n}> N={n_}", True, ""
            except SpecializationError as exc:
                yield f"<h_{n}>=<h_{n_ - n}> N={n_}", False, str(exc)
    for lam, mu in pairs_with_total(max_size):
        bound = max(1, lam.first + mu.first)
        if N is not None and N < bound:
            continue
        NN = N if N is not None else bound
        try:
            check_pair(lam, mu, NN)
            yield f"phi_N pair {lam},{mu} N={NN}", True, ""
        except SpecializationError as exc:
            yield f"phi_N pair {lam},{mu} N={NN}", False, str(exc)


def _homfly(max_size: int, seed: int) -> Iterator[Case]:
    from .ring import V

    rng = random.Random(seed)
    for _ in range(max(3, max_size)):
        strands = rng.randint(2, 3)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(rng.randint(1, 5))]
        D = from_braid_word(word, strands)
        base = framed_homfly(D)
        curl = from_braid_word(word + [strands], strands + 1)
        yield f"curl {word}", framed_homfly(curl) == base / V, ""
        i = rng.randint(0, len(word))
        g = rng.randint(1, strands - 1)
        r2 = from_braid_word(word[:i] + [g, -g] + word[i:], strands)
        yield f"R2 {word}", framed_homfly(r2) == base, ""
        yield f"mirror {word}", framed_homfly(D.mirror()) == base.bar(), ""
    yield "K unknot", k_invariant_box_box(from_braid_word([], 1)) == 1, ""


SUITES: dict[str, Callable[..., Iterator[Case]]] = {
    "q-basis": _q_basis,
    "conversion": _conversion,
    "evaluation": _evaluation,
    "specialized": _specialized,
    "homfly": _homfly,
}


def run_suite(name: str, max_size: int = 3, seed: int = 0, N: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    res = SuiteResult(name)
    gen = SUITES[name](max_size, seed, N) if name == "specialized" else SUITES[name](max_size, seed)
    for case, ok, detail in gen:
        if ok:
            res.passed += 1
        else:
            res.failed += 1
            res.failures.append(f"{case}: {detail}" if detail else case)
    return res
