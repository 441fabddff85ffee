"""Command-line front end.

Usage: idealcore <command> <specfile> [flags]

Commands: core, kn, ln, adjoint, rednum, s, check-chain, check-conjecture,
check-stabilization.  Exit codes: 0 success, 1 usage/parse error,
2 theorem-violation hard error, 3 genericity failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .core_engine import (
    adjoint_colon,
    check_conjecture,
    check_inclusion_chain,
    check_stabilization,
    core,
    kn_general,
    ln_ideal,
)
from .errors import (
    GenericityError,
    IdealCoreError,
    SpecError,
    TheoremViolationError,
)
from .ideals import Ideal
from .reductions import (
    GeneralElementConfig,
    general_minimal_reduction,
    reduction_number,
    s_invariant,
)
from .specfile import parse_spec_file

COMMANDS = (
    "core",
    "kn",
    "ln",
    "adjoint",
    "rednum",
    "s",
    "check-chain",
    "check-conjecture",
    "check-stabilization",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors must exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idealcore", description=__doc__.strip().splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("specfile")
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--repeats", type=int, default=None)
    parser.add_argument("--window", type=int, default=None)
    parser.add_argument("--t-max", dest="t_max", type=int, default=None)
    parser.add_argument("--n-max", dest="n_max", type=int, default=None)
    parser.add_argument("--J", dest="J", type=str, default=None)
    parser.add_argument("--json", dest="as_json", action="store_true")
    parser.add_argument("--field-ext", dest="field_ext", type=int, default=None)
    return parser


def _option(args, spec, key, fallback):
    flag = getattr(args, key)
    if flag is not None:
        return flag
    return spec.options.get(key, fallback)


def _ring_string(ring):
    fld = ring.field
    base = f"GF({fld.p}^{fld.e})" if fld.e > 1 else f"GF({fld.p})"
    s = base + "[" + ",".join(ring.poly_ring.names) + "]"
    if ring.quotient_gens:
        s += "/(" + ",".join(str(q) for q in ring.quotient_gens) + ")"
    return s


def _pick_ideal(spec, ring):
    if "I" in spec.ideals:
        return spec.ideal(ring, "I")
    if len(spec.ideals) == 1:
        return spec.ideal(ring, next(iter(spec.ideals)))
    raise SpecError("spec file must define an ideal named 'I'")


def _resolve_J(args, spec, ring, I, cfg):
    """Explicit --J wins, then a spec ideal named J, else a general minimal
    reduction is drawn."""
    if args.J is not None:
        gens = [g.strip() for g in args.J.split(",") if g.strip()]
        if not gens:
            raise SpecError("--J must list at least one generator")
        J = ring.ideal(*gens)
    elif "J" in spec.ideals:
        J = spec.ideal(ring, "J")
    else:
        return general_minimal_reduction(I, cfg, "cli").J
    if not I.contains_ideal(J):
        raise IdealCoreError("J is not contained in I")
    return J


def _default_n(args, spec, I, J, cfg):
    n = _option(args, spec, "n", None)
    if n is None:
        n = s_invariant(I, J, cfg)
    return n


def run_command(args) -> dict:
    """Execute one command; returns the report dict used for both text and
    JSON output."""
    spec = parse_spec_file(args.specfile)
    if args.field_ext is not None:
        spec.ext_degree = args.field_ext
        spec.modulus = None
    ring = spec.ring()
    I = _pick_ideal(spec, ring)
    cfg = GeneralElementConfig(
        seed=_option(args, spec, "seed", 0),
        repeats=_option(args, spec, "repeats", 2),
        n_max=_option(args, spec, "n_max", 20),
        t_max=_option(args, spec, "t_max", 25),
    )
    window = _option(args, spec, "window", 3)
    cmd = args.command
    results = {}
    verdicts = {}

    if cmd == "core":
        report = core(I, _option(args, spec, "n", None), cfg, window=window)
        results = report.results_dict()
        verdicts = report.verdicts_dict()
    elif cmd in ("kn", "ln", "adjoint"):
        J = _resolve_J(args, spec, ring, I, cfg)
        n = _default_n(args, spec, I, J, cfg)
        verdicts["n"] = n
        if cmd == "kn":
            results[f"K_{n}"] = kn_general(J, I, n, cfg, "cli").groebner_strings()
        elif cmd == "ln":
            results[f"L_{n}"] = ln_ideal(J, I, n, cfg, "cli").groebner_strings()
        else:
            results[f"adjoint_colon_{n}"] = adjoint_colon(J, I, n).groebner_strings()
    elif cmd == "rednum":
        J = _resolve_J(args, spec, ring, I, cfg)
        verdicts["r"] = reduction_number(J, I, cfg.n_max)
    elif cmd == "s":
        J = _resolve_J(args, spec, ring, I, cfg)
        verdicts["s"] = s_invariant(I, J, cfg)
    elif cmd == "check-chain":
        report = check_inclusion_chain(I, _option(args, spec, "n", None), cfg)
        results = report.results_dict()
        verdicts = report.verdicts_dict()
    elif cmd == "check-conjecture":
        report = check_conjecture(I, _option(args, spec, "n", None), cfg)
        results = report.results_dict()
        verdicts = report.verdicts_dict()
    elif cmd == "check-stabilization":
        J = _resolve_J(args, spec, ring, I, cfg)
        out = check_stabilization(J, I, cfg)
        verdicts["s"] = out["s"]
        verdicts["r"] = out["r"]
        verdicts["n0"] = out["n0"]
        verdicts["L_stable"] = True
        verdicts["adjoint_stable"] = True
        for n, ideal in out["L_stable"].items():
            results[f"L_{n}"] = ideal.groebner_strings()
        for n, ideal in out["adjoint_stable"].items():
            results[f"adjoint_colon_{n}"] = ideal.groebner_strings()

    return {
        "ring": _ring_string(ring),
        "ideal": [str(g) for g in I.gens],
        "command": cmd,
        "seed": cfg.seed,
        "field_size": ring.field.q,
        "results": results,
        "verdicts": verdicts,
        "genericity_log": [dict(ev) for ev in cfg.log],
    }


def _json_default(value):
    try:
        return int(value)
    except (TypeError, ValueError):
        return str(value)


def _print_text(report):
    print(f"ring: {report['ring']}")
    print("ideal: " + ", ".join(report["ideal"]))
    for name, gens in report["results"].items():
        print(f"{name}:")
        for g in gens:
            print(f"  {g}")
    if report["verdicts"]:
        print("verdicts:")
        for key, value in report["verdicts"].items():
            print(f"  {key} = {json.dumps(value, default=_json_default)}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        report = run_command(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 2
    except GenericityError as exc:
        print(f"genericity failure: {exc}", file=sys.stderr)
        return 3
    except (IdealCoreError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.as_json:
        report["timing_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
        print(json.dumps(report, indent=2, sort_keys=False, default=_json_default))
    else:
        _print_text(report)
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
