"""Command-line front end.

Exit codes: 0 success, 1 unexpected error, 2 bad input, 3 precondition
violated, 4 a verification or positivity check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .conversion import ExpansionError, PositivityError, expand_in_q, multiply_in_q
from .evaluation import SpecializationError, eval_element, phi_N
from .homfly import (
    DEFAULT_MAX_CROSSINGS,
    CrossingCapError,
    DiagramError,
    LinkDiagram,
    framed_homfly_detailed,
    from_braid_word,
    homfly_P,
    k_invariant_box_box,
    z_expansion,
)
from ._expr import ParseError
from .partitions import Partition
from .qbasis import build_matrix, eigenvalue_s, index_vector, q_element
from .ring import DivisionByZero, RingElem, to_integral
from .skein import parse_skein
from .verify import SUITES, run_suite

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3, 4


class InputError(ValueError):
    """Malformed command-line value."""


class VerificationFailed(RuntimeError):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _expansion_payload(exp) -> dict[str, Any]:
    text = " + ".join(f"({c})*Q{lam},{mu}" for (lam, mu), c in sorted(exp.items(), reverse=True))
    return {"expansion": exp.to_json(), "text": text or "0"}


def _z_payload(value: RingElem) -> dict[str, str] | None:
    poly = to_integral(value)
    zs = z_expansion(poly) if poly is not None else None
    return None if zs is None else {str(k): str(c) for k, c in sorted(zs.items())}


def _diagram(args) -> LinkDiagram:
    if args.pd is not None:
        src = args.pd
        if src.startswith("@"):
            with open(src[1:], encoding="utf-8") as fh:
                src = fh.read()
        try:
            return LinkDiagram.from_json(src)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad PD JSON: {exc}") from exc
    try:
        word = [int(t) for t in args.braid.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad braid word {args.braid!r}") from exc
    strands = args.strands if args.strands is not None else max((abs(g) for g in word), default=0) + 1
    return from_braid_word(word, strands)


# -- verbs ----------------------------------------------------------------
def cmd_q_expand(args) -> tuple[dict, str]:
    w = index_vector(args.lam, args.mu)
    mat = build_matrix(w)
    q = q_element(args.lam, args.mu)
    data = {
        "lambda": list(args.lam.parts),
        "mu": list(args.mu.parts),
        "index_vector": w.as_list(),
        "n_starred": len(w.starred),
        "matrix": mat.to_lists(),
        "expansion": q.to_json(),
        "text": str(q),
    }
    return data, f"{q}\n{mat}"


def cmd_eig(args) -> tuple[dict, str]:
    lam, mu = (args.lam, args.mu) if args.map == "phi" else (args.mu, args.lam)
    val = eigenvalue_s(lam, mu)
    return {"map": args.map, "eigenvalue": str(val)}, str(val)


def cmd_mult(args) -> tuple[dict, str]:
    try:
        exp = multiply_in_q(args.a_lam, args.a_mu, args.b_lam, args.b_mu)
    except PositivityError as exc:
        raise VerificationFailed(str(exc)) from exc
    consts = {f"{lam};{mu}": n for (lam, mu), n in sorted(exp.int_items(), reverse=True)}
    lines = [f"Q{k.replace(';', ',')}: {n}" for k, n in consts.items()]
    return {"structure_constants": consts}, "\n".join(lines)


def cmd_expand(args) -> tuple[dict, str]:
    payload = _expansion_payload(expand_in_q(args.expr))
    return payload, payload["text"]


def cmd_eval(args) -> tuple[dict, str]:
    x = args.expr if args.expr is not None else q_element(args.lam or Partition(), args.mu or Partition())
    val = eval_element(x)
    return {"value": str(val)}, str(val)


def cmd_phi_n(args) -> tuple[dict, str]:
    y = phi_N(args.expr, args.N)
    return {"N": args.N, "value": y.to_json(), "text": str(y)}, str(y)


def cmd_homfly(args) -> tuple[dict, str]:
    D = _diagram(args)
    res = framed_homfly_detailed(D, args.max_crossings)
    data = {
        "framed": str(res.value),
        "writhe": res.writhe,
        "components": res.components,
        "P": str(homfly_P(D, args.max_crossings)),
    }
    return data, data["P"] if args.normalized else data["framed"]


def cmd_satellite(args) -> tuple[dict, str]:
    D = _diagram(args)
    if D.n_components != 1:
        raise DiagramError("the satellite invariant needs a knot diagram")
    val = k_invariant_box_box(D, args.max_crossings)
    zs = _z_payload(val)
    data = {"K": str(val), "writhe": D.writhe, "z_expansion": zs}
    text = str(val)
    if zs:
        text += "\n" + "\n".join(f"z^{k}: {c}" for k, c in zs.items())
    return data, text


def cmd_verify(args) -> tuple[dict, str]:
    name = args.suite or args.suite_pos or "all"
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise InputError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    results = [run_suite(n, args.max, args.seed, args.N) for n in names]
    lines = [f"{r.name}: {r.passed} passed, {r.failed} failed" for r in results]
    for r in results:
        lines += [f"  FAIL {f}" for f in r.failures]
    data = {"suites": [r.to_json() for r in results], "ok": all(r.ok for r in results)}
    if not data["ok"]:
        raise VerificationFailed("\n".join(lines), data)
    return data, "\n".join(lines)


# -- parser ---------------------------------------------------------------
def _skein_arg(text: str):
    try:
        return parse_skein(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--max-crossings", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="annulus-skein", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    def pair(sp, required=True):
        sp.add_argument("--lambda", dest="lam", type=_partition, required=required)
        sp.add_argument("--mu", dest="mu", type=_partition, required=required)

    pair(verb("q-expand", cmd_q_expand, "template matrix and monomial expansion of Q_{lambda,mu}"))
    sp = verb("eig", cmd_eig, "meridian eigenvalue of Q_{lambda,mu}")
    pair(sp)
    sp.add_argument("--map", choices=("phi", "phibar"), default="phi")
    sp = verb("mult", cmd_mult, "structure constants of a product of two Q's")
    for tag in ("a", "b"):
        sp.add_argument(f"--{tag}-lambda", dest=f"{tag}_lam", type=_partition, required=True)
        sp.add_argument(f"--{tag}-mu", dest=f"{tag}_mu", type=_partition, required=True)
    sp = verb("expand", cmd_expand, "expand a polynomial in h_n, hs_n in the Q basis")
    sp.add_argument("--expr", type=_skein_arg, required=True)
    sp = verb("eval", cmd_eval, "planar evaluation of Q_{lambda,mu} or of an expression")
    pair(sp, required=False)
    sp.add_argument("--expr", type=_skein_arg)
    sp = verb("phi-n", cmd_phi_n, "apply the homomorphism phi_N")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--expr", type=_skein_arg, required=True)
    for name, fn, help_ in (
        ("homfly", cmd_homfly, "framed Homfly evaluation of a diagram"),
        ("satellite", cmd_satellite, "K invariant of a knot for the decoration h1*hs1 - 1"),
    ):
        sp = verb(name, fn, help_)
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--braid", help='signed generators, e.g. "1 1 1"')
        src.add_argument("--pd", help="PD JSON, or @file")
        sp.add_argument("--strands", type=int)
        if name == "homfly":
            sp.add_argument("--normalized", action="store_true", help="print P instead of <D>")
    sp = verb("verify", cmd_verify, "run invariant suites")
    sp.add_argument("suite_pos", nargs="?", metavar="SUITE")
    sp.add_argument("--suite")
    sp.add_argument("--max", type=int, default=3, help="partition size bound")
    sp.add_argument("--N", type=int, help="fix N for the specialized suite")
    sp.add_argument("--seed", type=int, default=0)
    return p


def _emit(data: Any, text: str, fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(data, stream, indent=2, sort_keys=True)
        stream.write("\n")
    else:
        stream.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    fmt = getattr(args, "format", "text")
    args.max_crossings = getattr(args, "max_crossings", DEFAULT_MAX_CROSSINGS)
    if args.verb == "eval" and args.expr is None and args.lam is None and args.mu is None:
        print("error: eval needs --expr or --lambda/--mu", file=sys.stderr)
        return EXIT_PARSE
    try:
        data, text = args.func(args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationFailed as exc:
        payload = exc.args[1] if len(exc.args) > 1 else {"error": exc.args[0]}
        _emit(payload, exc.args[0], fmt, sys.stdout)
        return EXIT_VERIFY
    except (PositivityError, SpecializationError, ExpansionError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DiagramError, CrossingCapError, ValueError, DivisionByZero) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(data, text, fmt, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
