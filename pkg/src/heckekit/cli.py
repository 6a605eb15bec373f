"""Command-line surface.

Grammar:
    heckekit suite <name>    --type <label> [--lattice <kind>] [--bound N]
                             [--seed S] [--format text|json] [--timing]
                             [--kl-budget K]
    heckekit compute <name>  --type <label> [--lattice <kind>] [...args]
                             [--format text|json|csv]

Suite names: braid, theta, center, kgroup, masp, euler, whittaker, all.
Compute names: kl, theta, center, masp-act, qweight, whittaker-table.

Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error,
3 resource-budget refusal.  Output is byte-identical across runs for a
fixed (command, args, seed); wall-clock timing is only emitted under
--timing.  The KL length budget can also be set through the environment
variable HECKEKIT_KL_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import sys

from .affine_weyl import weyl_group
from .antispherical import AntisphericalModule
from .errors import HeckeKitError, ParseError, ResourceBudgetError
from .hecke import HeckeAlgebra
from .root_datum import build_root_datum
from .suites import SUITE_NAMES, run_suite
from .whittaker import lusztig_q_analogue, whittaker_table

COMPUTE_NAMES = ("kl", "theta", "center", "masp-act", "qweight", "whittaker-table")


def _parse_weight(text):
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("weights are written as [c1,c2,...], got %r" % text)
    inner = s[1:-1].strip()
    if not inner:
        return ()
    try:
        return tuple(int(c) for c in inner.split(","))
    except ValueError:
        raise ParseError("bad weight %r" % text) from None


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="heckekit",
        description="exact computations in extended affine Weyl groups and "
                    "affine Hecke algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True, dest="label",
                       help="Cartan type label, e.g. A1, A2, B2, G2")
        p.add_argument("--lattice", default="weight",
                       choices=("weight", "root"), help="character lattice")
        p.add_argument("--kl-budget", type=int, default=None,
                       help="maximum length for Kazhdan-Lusztig elements")

    ps = sub.add_parser("suite", help="run a named verification suite")
    ps.add_argument("name", choices=SUITE_NAMES)
    common(ps)
    ps.add_argument("--bound", type=int, default=None)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--format", default="text", choices=("text", "json"))
    ps.add_argument("--timing", action="store_true",
                    help="include wall-clock duration in the output")

    pc = sub.add_parser("compute", help="compute and print one object")
    pc.add_argument("name", choices=COMPUTE_NAMES)
    common(pc)
    pc.add_argument("--format", default="text", choices=("text", "json", "csv"))
    pc.add_argument("--x", help="group element (kl)")
    pc.add_argument("--w", help="group element (kl)")
    pc.add_argument("--weight", help="weight [c1,...] (theta, center)")
    pc.add_argument("--element", help="group element text (masp-act)")
    pc.add_argument("--highest", help="dominant weight [c1,...] (qweight, whittaker-table)")
    pc.add_argument("--mu", help="weight [c1,...] (qweight)")
    return parser


def _cmd_suite(args):
    report = run_suite(args.name, args.label, args.lattice, args.bound,
                       args.seed, args.kl_budget)
    if args.format == "json":
        print(report.to_json(include_timing=args.timing))
    else:
        print(report.to_text(include_timing=args.timing))
    return 0 if report.passed else 1


def _require(args, attr, flag):
    value = getattr(args, attr)
    if value is None:
        raise ParseError("compute %s requires %s" % (args.name, flag))
    return value


def _cmd_compute(args):
    rd = build_root_datum(args.label, args.lattice)
    group = weyl_group(rd)
    alg = HeckeAlgebra(group, args.kl_budget)

    if args.name == "kl":
        x = group.parse(_require(args, "x", "--x"))
        w = group.parse(_require(args, "w", "--w"))
        poly = alg.kl_polynomial(x, w)
        if args.format == "json":
            print(json.dumps({"x": group.format(x), "w": group.format(w),
                              "P": poly.format("q")}, sort_keys=True))
        else:
            print(poly.format("q"))
        return 0

    if args.name in ("theta", "center"):
        lam = rd.from_lattice_coords(_parse_weight(_require(args, "weight", "--weight")))
        h = alg.theta(lam) if args.name == "theta" else alg.center_element(lam)
        if args.format == "json":
            print(json.dumps(alg.element_to_json(h), sort_keys=True))
        else:
            print(alg.format_element(h))
        return 0

    if args.name == "masp-act":
        w = group.parse(_require(args, "element", "--element"))
        mod = AntisphericalModule(alg)
        m = mod.act(mod.unit(), alg.t(w))
        if args.format == "json":
            print(json.dumps(mod.element_to_json(m), sort_keys=True))
        else:
            print(str(m))
        return 0

    if args.name == "qweight":
        lam = rd.from_lattice_coords(_parse_weight(_require(args, "highest", "--highest")))
        mu = rd.from_lattice_coords(_parse_weight(_require(args, "mu", "--mu")))
        poly = lusztig_q_analogue(rd, lam, mu)
        if args.format == "json":
            print(json.dumps({"P": poly.format("q")}, sort_keys=True))
        else:
            print(poly.format("q"))
        return 0

    if args.name == "whittaker-table":
        lam = rd.from_lattice_coords(_parse_weight(_require(args, "highest", "--highest")))
        table = whittaker_table(rd, lam)
        if args.format == "json":
            print(table.to_json())
        else:
            print(table.to_csv(), end="")
        return 0

    raise AssertionError("unreachable")


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "suite":
            return _cmd_suite(args)
        return _cmd_compute(args)
    except ResourceBudgetError as exc:
        print("resource budget refused: %s" % exc, file=sys.stderr)
        return 3
    except (HeckeKitError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
