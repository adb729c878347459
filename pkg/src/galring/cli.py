"""Command-line front end.

    galring ring info --ring "GR(p=2,r=2,m=2)"
    galring basis dual --ring "GR(p=2,r=2,m=2)" --basis "1,0;0,1"
    galring weight prop-check --ring "GR(p=2,r=2,m=3)" --json

Exit status: 0 on success, 1 on a usage error, 2 when the mathematical answer
is negative or the object does not exist (e.g. the elements are not a basis),
3 on an internal consistency failure.  ``--json`` prints one JSON object with
a ``"schema": 1`` field; plain output is meant for people but is also stable.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable

from . import bases as bs
from . import codes as cd
from .errors import GaloisRingError, InternalError, MathError, UsageError
from .galois import DEFAULT_GUARD, GaloisRing
from .modring import ZrModulus, format_matrix, parse_vector
from .polyring import Poly

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


class Outcome:
    """What a command produced: a JSON payload, its text rendering, and a verdict."""

    def __init__(self, payload: dict, text: str | None = None, ok: bool = True):
        self.payload = payload
        self.text = text if text is not None else _compact(payload)
        self.ok = ok


def _ring(args) -> GaloisRing:
    if not args.ring:
        raise UsageError("--ring is required")
    ring = GaloisRing.from_spec(args.ring, guard=args.guard)
    if args.modulus_poly:
        h = Poly(ring.zr, tuple(parse_vector(args.modulus_poly)))
        ring = GaloisRing(ring.p, ring.r, ring.m, h, guard=args.guard)
    return ring


def _basis(args, ring: GaloisRing) -> bs.Basis:
    if args.basis:
        return bs.parse_basis(args.basis, ring)
    return bs.polynomial_basis(ring)


def _elem_list(elems) -> list[list[int]]:
    return [list(z.coeffs) for z in elems]


# ring


def cmd_ring_info(args) -> Outcome:
    ring = _ring(args)
    payload = {
        "p": ring.p,
        "r": ring.r,
        "m": ring.m,
        "h": list(ring.h.coeffs),
        "characteristic": ring.characteristic,
        "cardinality": ring.order,
        "unit_group_order": ring.unit_group_order,
        "ideal_sizes": ring.ideal_sizes(),
        "is_field": ring.is_field(),
        "teichmuller": _elem_list(ring.teichmuller_set()),
    }
    name = f"F_{ring.p ** ring.m}" if ring.is_field() else f"GR({ring.q},{ring.m})"
    lines = [
        f"ring: {name} = Z_{ring.q}[x]/({ring.h})",
        f"spec: {ring.spec()}",
        f"characteristic: {ring.characteristic}",
        f"|R| = {ring.order}",
        f"|R^x| = {ring.unit_group_order}",
        "ideal sizes |p^i R|, i=0..r: " + " ".join(map(str, ring.ideal_sizes())),
        "teichmuller: " + " | ".join(z.to_literal() for z in ring.teichmuller_set()),
    ]
    return Outcome(payload, "\n".join(lines))


def cmd_trace_table(args) -> Outcome:
    ring = _ring(args)
    rows = [(z, ring.trace(z)) for z in ring.elements()]
    payload = {"ring": ring.spec(), "table": [[list(z.coeffs), t] for z, t in rows]}
    return Outcome(payload, "\n".join(f"{z.to_literal()}\t{t}" for z, t in rows))


def cmd_teichmuller(args) -> Outcome:
    ring = _ring(args)
    elems = ring.teichmuller_set()
    return Outcome({"ring": ring.spec(), "teichmuller": _elem_list(elems)}, "\n".join(z.to_literal() for z in elems))


# basis


def cmd_basis_check(args) -> Outcome:
    ring = _ring(args)
    b = _basis(args, ring)
    det = b.coordinate_matrix.det()
    return Outcome({"is_basis": True, "coordinate_det": det, "basis": b.to_lists()}, f"basis (coordinate det {det})")


def cmd_basis_dual(args) -> Outcome:
    ring = _ring(args)
    dual = bs.dual_basis(_basis(args, ring))
    return Outcome({"dual": dual.to_lists()}, _compact(dual.to_lists()))


def cmd_basis_report(args) -> Outcome:
    ring = _ring(args)
    report = bs.basis_report(_basis(args, ring))
    return Outcome(report.to_dict(), _compact(report.to_dict()))


def cmd_normal_search(args) -> Outcome:
    ring = _ring(args)
    gens = bs.search_normal_bases(ring, args.limit)
    return Outcome({"generators": _elem_list(gens)}, "\n".join(z.to_literal() for z in gens))


def cmd_self_dual_search(args) -> Outcome:
    ring = _ring(args)
    found = bs.search_self_dual_bases(ring, args.limit)
    return Outcome({"bases": [b.to_lists() for b in found]}, "\n".join(b.to_literal() for b in found))


# weight


def cmd_weight_table(args) -> Outcome:
    ring = _ring(args)
    rows = [(z, cd.whom(z)) for z in ring.elements()]
    payload = {"gamma": str(cd.ring_gamma(ring)), "table": [[list(z.coeffs), w] for z, w in rows]}
    return Outcome(payload, "\n".join(f"{z.to_literal()}\t{w}" for z, w in rows))


def cmd_weight_prop(args) -> Outcome:
    ring = _ring(args)
    res = cd.proposition_sum(ring, _basis(args, ring))
    return Outcome(res.to_dict(), ok=res.ok)


def cmd_homogeneity(args) -> Outcome:
    ring = _ring(args)
    res = cd.homogeneity_check(ring)
    payload = {
        "gamma": str(res.gamma),
        "constant_on_associates": res.constant_on_associates,
        "average_ok": res.average_ok,
        "ok": res.ok,
    }
    return Outcome(payload, ok=res.ok)


# code


def _code(args, ring: GaloisRing) -> cd.LinearCode:
    if not args.gen:
        raise UsageError("--gen is required")
    return cd.parse_generator(args.gen, ring)


def cmd_code_image(args) -> Outcome:
    ring = _ring(args)
    image = cd.code_image(_code(args, ring), _basis(args, ring))
    words = [list(w) for w in image.codewords]
    payload = {"length": image.length, "size": len(image), "codewords": words}
    return Outcome(payload, "\n".join(",".join(map(str, w)) for w in words))


def cmd_code_stats(args) -> Outcome:
    ring = _ring(args)
    stats = cd.code_weight_stats(_code(args, ring), _basis(args, ring))
    return Outcome(stats.to_dict())


def cmd_code_lemma3(args) -> Outcome:
    """Check the weight/support identity on the image of --gen, or on random codes."""
    ring = _ring(args)
    if args.gen:
        res = cd.lemma3_check(cd.code_image(_code(args, ring), _basis(args, ring)))
        return Outcome(res.to_dict(), ok=res.ok)
    rng = random.Random(args.seed)
    zr = ZrModulus(ring.p, ring.r)
    failures = []
    for _ in range(args.count):
        k, n = rng.randint(1, 2), rng.randint(1, 4)
        gen = cd.random_zr_generator(zr, k, n, rng)
        if not cd.lemma3_check(cd.ZrCode.from_generator(zr, gen)).ok:
            failures.append(format_matrix(gen))
    payload = {"checked": args.count, "passed": args.count - len(failures), "failures": failures, "ok": not failures}
    return Outcome(payload, ok=not failures)


COMMANDS: dict[str, dict[str, Callable]] = {
    "ring": {"info": cmd_ring_info, "trace-table": cmd_trace_table, "teichmuller": cmd_teichmuller},
    "basis": {
        "check": cmd_basis_check,
        "dual": cmd_basis_dual,
        "report": cmd_basis_report,
        "normal-search": cmd_normal_search,
        "self-dual-search": cmd_self_dual_search,
    },
    "weight": {"table": cmd_weight_table, "prop-check": cmd_weight_prop, "homogeneity-check": cmd_homogeneity},
    "code": {"image": cmd_code_image, "stats": cmd_code_stats, "lemma3": cmd_code_lemma3},
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help='ring spec, e.g. "GR(p=2,r=2,m=3)" or "GR(p=2,r=2,m=3;h=3,1,2,1)"')
    common.add_argument("--modulus-poly", help="ascending modulus coefficients, overrides h in --ring")
    common.add_argument("--basis", help='basis literal, one element per row: "1,0;0,1"')
    common.add_argument("--gen", help='generator over GR: rows "|", symbols ";", coefficients ","')
    common.add_argument("--json", action="store_true", help="emit a JSON object")
    common.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="enumeration size limit")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--limit", type=int, default=None, help="maximum number of search results")
    common.add_argument("--count", type=int, default=100, help="number of random trials")

    parser = _Parser(prog="galring", description="Galois rings GR(p^r, m): bases, traces, weights and codes.")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)
    for group, actions in COMMANDS.items():
        gp = groups.add_parser(group)
        acts = gp.add_subparsers(dest="action", required=True, parser_class=_Parser)
        for action, fn in actions.items():
            acts.add_parser(action, parents=[common], help=(fn.__doc__ or "").split("\n")[0] or None)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.group][args.action]
    try:
        outcome = handler(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL
    except MathError as exc:
        kind = type(exc).__name__
        if args.json:
            print(_compact({"schema": SCHEMA_VERSION, "error": kind, "message": str(exc)}), file=out)
        print(f"{kind}: {exc}", file=err)
        return EXIT_MATH
    except GaloisRingError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE
    if args.json:
        doc = {"schema": SCHEMA_VERSION, "command": f"{args.group} {args.action}", **outcome.payload}
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        print(outcome.text, file=out)
    return EXIT_OK if outcome.ok else EXIT_MATH


def main(argv: list[str] | None = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
