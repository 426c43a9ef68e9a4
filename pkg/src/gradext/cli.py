"""Command-line entry points.  Every subcommand prints (or writes) one JSON
report with sorted keys; exit status 0 = ok, 1 = failed verification,
2 = bad input or configuration."""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import AlgebraError, AlgebraSpec, GradedAlgebra, build
from .complexes import total_dim
from .counterexample import ConfigError, PaperConfig, run_all
from .duality import ExtModule, TRError, tr_report
from .expressions import ExpressionError, parse
from .free_modules import GradingError, from_strings
from .groebner import MonomialOrder, search_orders, spoly_reduce_check, to_poly
from .linalg import scalar_str
from .resolutions import Presentation, minimal_resolution, residue_field

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _pairs(h: dict[int, int]) -> list[list[int]]:
    return [[d, v] for d, v in sorted(h.items())]


def _load_json(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path} must contain a JSON object")
    return data


def load_ring(path: str, alpha: str | None = None, degree_bound: int = 8) -> GradedAlgebra:
    data = _load_json(path)
    if data.get("field", "Q") != "Q":
        raise InputError("only the field Q is supported")
    variables = data.get("variables")
    relations = data.get("relations", [])
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise InputError("'variables' must be a list of names")
    if not isinstance(relations, list) or not all(isinstance(r, str) for r in relations):
        raise InputError("'relations' must be a list of expression strings")
    a = Fraction(alpha if alpha is not None else data.get("alpha", "2"))
    return build(AlgebraSpec.from_strings(variables, relations, a, degree_bound=degree_bound))


def load_module(path: str, A: GradedAlgebra) -> Presentation:
    """A module file, or the literal ``k`` for the residue field."""
    if path == "k":
        return residue_field(A)
    data = _load_json(path)
    grid = data.get("matrix")
    if not isinstance(grid, list) or not grid or not all(isinstance(r, list) for r in grid):
        raise InputError("'matrix' must be a nonempty list of rows")
    if len({len(r) for r in grid}) != 1:
        raise InputError("'matrix' must be rectangular")
    target = data.get("target_twists", [0] * len(grid))
    return Presentation(from_strings(A, grid, target, data.get("source_twists")))


def emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify_paper(args) -> int:
    cfg = PaperConfig(alpha=Fraction(args.alpha), window=args.window, s_max=args.smax,
                      k_length=args.res_depth)
    report = run_all(cfg)
    emit(report, args.out)
    return OK if report["verdict"] else FAILED


def cmd_hilbert(args) -> int:
    A = load_ring(args.ring, args.alpha)
    emit({"tool": "gradext", "version": __version__, "H_R": _pairs(A.hilbert()),
          "dimension": A.total_dim, "top_degree": A.top_degree}, args.out)
    return OK


def cmd_resolve(args) -> int:
    A = load_ring(args.ring, args.alpha)
    p = load_module(args.module, A)
    _, betti = minimal_resolution(p, args.length)
    emit({"tool": "gradext", "version": __version__, "length": args.length,
          "ranks": betti.ranks, "betti": betti.to_records(), "linear": betti.is_linear()}, args.out)
    return OK


def cmd_ext(args) -> int:
    A = load_ring(args.ring, args.alpha)
    p = load_module(args.module, A)
    if args.start < 0 or args.stop < args.start:
        raise InputError("need 0 <= --from <= --to")
    e = ExtModule(p)
    records = [{"i": i, "hilbert": _pairs(e(i)), "total_dim": total_dim(e(i))}
               for i in range(args.start, args.stop + 1)]
    emit({"tool": "gradext", "version": __version__, "ext": records}, args.out)
    return OK


_EXPECT = re.compile(r"^\s*i\s*(<=|>=|<|>|==|!=)\s*(-?\d+)\s*$")


def parse_expect(text: str):
    """``"i<2"`` style predicate on the index."""
    m = _EXPECT.match(text)
    if not m:
        raise InputError(f"cannot parse --expect {text!r}; use e.g. 'i<2' or 'i>-3'")
    op, n = m.group(1), int(m.group(2))
    return {"<": lambda i: i < n, "<=": lambda i: i <= n, ">": lambda i: i > n,
            ">=": lambda i: i >= n, "==": lambda i: i == n, "!=": lambda i: i != n}[op]


def cmd_tr_check(args) -> int:
    A = load_ring(args.ring, args.alpha)
    p = load_module(args.module, A)
    expect = parse_expect(args.expect) if args.expect else None
    rep = tr_report(p, args.start, args.stop, Path(args.module).stem)
    out = {"tool": "gradext", "version": __version__, "tr": rep.to_dict()}
    status = OK
    if expect is not None:
        matches = all(ok == expect(i) for i, ok in rep.verdicts.items())
        out["expect"] = args.expect
        out["verdict"] = matches
        status = OK if matches else FAILED
    emit(out, args.out)
    return status


def cmd_groebner_check(args) -> int:
    data = _load_json(args.ring)
    variables = data.get("variables")
    if not isinstance(variables, list):
        raise InputError("'variables' must be a list of names")
    alpha = Fraction(args.alpha if args.alpha is not None else data.get("alpha", "2"))
    polys = [to_poly(parse(r, variables), variables, alpha) for r in data.get("relations", [])]
    out = {"tool": "gradext", "version": __version__}
    if args.order:
        try:
            order = MonomialOrder.parse(args.order, variables)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        ok, pair = spoly_reduce_check(polys, order)
        out.update(order=order.describe(variables), groebner=ok, failing_pair=list(pair) if pair else None)
    else:
        good = search_orders(polys, len(variables))
        out.update(orders=[o.describe(variables) for o in good],
                   outcome="evidence found" if good else "no order found")
    emit(out, args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gradext", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"gradext {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    defaults = PaperConfig()

    def common(p, ring=True, module=False):
        p.add_argument("--out", help="write the report here instead of stdout")
        if ring:
            p.add_argument("--ring", required=True, help="ring JSON file")
            p.add_argument("--alpha", help="override the ring file's alpha")
        if module:
            p.add_argument("--module", required=True, help="module JSON file, or 'k'")

    p = sub.add_parser("verify-paper", help="run the full verification battery")
    common(p, ring=False)
    p.add_argument("--alpha", default=scalar_str(defaults.alpha))
    p.add_argument("--window", type=int, default=defaults.window)
    p.add_argument("--smax", type=int, default=defaults.s_max)
    p.add_argument("--res-depth", type=int, default=defaults.k_length, help="resolution length for k")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("hilbert", help="Hilbert function of a ring")
    common(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("resolve", help="minimal free resolution of a module")
    common(p, module=True)
    p.add_argument("--length", type=int, default=4)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("ext", help="Hilbert functions of Ext^i(M, R)")
    common(p, module=True)
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", dest="stop", type=int, default=4)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("tr-check", help="TR_i verdicts over an index window")
    common(p, module=True)
    p.add_argument("--from", dest="start", type=int, default=-3)
    p.add_argument("--to", dest="stop", type=int, default=3)
    p.add_argument("--expect", help="predicate such as 'i<2'; exit 1 if any verdict disagrees")
    p.set_defaults(func=cmd_tr_check)

    p = sub.add_parser("groebner-check", help="Buchberger criterion for the ring's relations")
    common(p)
    p.add_argument("--order", help="e.g. degrevlex:V>X>Y>Z; default searches every order")
    p.set_defaults(func=cmd_groebner_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ConfigError, AlgebraError, ExpressionError, GradingError, TRError,
            ValueError, ZeroDivisionError) as exc:
        print(f"gradext: error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
