"""Command line interface.

    planehodge validate SPEC
    planehodge hodge SPEC
    planehodge milnor POLY [--mode M] [--rmax R] [--window W] [--primes K]
    planehodge gap SPEC [POLY] [--mode M] ...

SPEC is a JSON curve spec path or ``corpus:<name>`` for a bundled one.
POLY is a polynomial expression, a file holding one, or a spec whose
``polynomial`` field is used.

Polynomial grammar: integer literals, the variables x, y, z, the
operators + - * ^ and parentheses.  ``^`` takes a nonnegative integer
literal; products need an explicit ``*``; ``/`` divides by a nonzero
constant.

Exit status: 0 success, 1 inconsistency detected, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .curve import SpecError, validate_spec
from .gap import gap
from .graded import (
    DEFAULT_PRIME_COUNT,
    DEFAULT_WINDOW,
    MODES,
    curve_degree,
    milnor_profile,
)
from .hodge import hodge_summary
from .poly import Polynomial, parse_poly
from .specfile import load_spec, read_text

log = logging.getLogger("planehodge")

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    mode: str = "certified"
    r_max: int | None = None
    window: int = DEFAULT_WINDOW
    format: str = "text"
    prime_count: int = DEFAULT_PRIME_COUNT
    seed: int | None = 0

    def __post_init__(self):
        if self.window < 2:
            raise UsageError("--window must be at least 2")
        if self.prime_count < 1:
            raise UsageError("--primes must be at least 1")
        if self.mode not in MODES:
            raise UsageError(f"--mode must be one of {', '.join(MODES)}")


@dataclass
class Result:
    report: dict
    lines: list[str] = field(default_factory=list)
    code: int = EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.report, indent=2, sort_keys=True)
        return "\n".join(self.lines)


def _load_polynomial(source: str) -> tuple[Polynomial, str]:
    text = source
    if source.startswith("corpus:") or Path(source).is_file():
        text = read_text(source, suffix=".json").strip()
        if text.startswith("{"):
            data = json.loads(text)
            if "polynomial" not in data:
                raise UsageError(f"{source}: spec has no 'polynomial' field")
            text = data["polynomial"]
    return parse_poly(text), text


def _fmt_bool(ok: bool) -> str:
    return "ok" if ok else "FAILED"


def cmd_validate(cfg: RunConfig) -> Result:
    spec = load_spec(cfg.inputs[0])
    rep = validate_spec(spec)
    out = rep.to_dict()
    out["name"] = spec.name
    lines = [f"spec: {spec.name or cfg.inputs[0]}",
             f"valid: {'yes' if rep.valid else 'no'}"]
    lines += [f"  error: {e}" for e in rep.errors]
    lines += [f"  warning: {w}" for w in rep.warnings]
    if rep.roster is not None:
        ro = rep.roster
        lines += [
            f"components r = {ro.r}, degree N = {ro.N}, genera {ro.genera}",
            f"S1 = {ro.S1}  (sum over component germs of branches - 1)",
            f"S2 = {ro.S2}  (sum over shared points of n(b) - 1)",
            "ordinary points n_m: " + ", ".join(
                f"n{m}={k} ({ro.n_own.get(m, 0)} on one component, "
                f"{ro.n_shared.get(m, 0)} shared)" for m, k in sorted(ro.n.items())),
            f"non-ordinary singular points: {ro.nonordinary}",
            f"points: {ro.a_only} on one component only, {ro.b_only} shared with all "
            f"components smooth, {ro.a_and_b} shared with a singular component",
            "shared-point types: " + ", ".join(f"{k}={v}" for k, v in ro.b_types.items()),
            f"total Tjurina number: {ro.tau if ro.tau is not None else 'unknown'}",
            "hypotheses:",
        ]
        for key, ok in rep.hypotheses.items():
            why = rep.hypothesis_notes.get(key) or []
            lines.append(f"  {key}: {'holds' if ok else 'fails'}"
                         + (f" ({'; '.join(why)})" if why else ""))
    return Result(out, lines, EXIT_OK if rep.valid else EXIT_INCONSISTENT)


def cmd_hodge(cfg: RunConfig) -> Result:
    spec = load_spec(cfg.inputs[0])
    summary = hodge_summary(spec)
    d = summary["dims"]
    src = summary["sources"]
    lines = [
        f"spec: {spec.name or cfg.inputs[0]}",
        f"P(C) = {summary['P_C']['text']}    [{summary['P_C']['source']}]",
        f"P(U) = {summary['P_U']['text']}    [{summary['P_U']['source']}]",
        f"dim Gr^1_F H^2(U) = {d['gr1']}    [{src['gr1']}]",
        f"dim Gr^2_F H^2(U) = {d['gr2']}    [{src['gr2']}]",
        f"dim H^1(U) = {d['h1U']}    [{src['h1U']}]",
        f"dim H^2(U) = {d['h2U']}    [{src['h2U']}]",
        f"b_1(C) = {d['b1C']}    [{src['b1C']}]",
        f"H^1(C) mixed Hodge numbers: h00 = {d['h00_H1C']}, h10 = {d['h10_H1C']}, "
        f"h01 = {d['h01_H1C']}",
        f"H^2(U) pure of type (2,2): {'yes' if summary['pure_type_2_2'] else 'no'}",
        "specialised formulas:",
    ]
    for key, item in summary["special_formulas"].items():
        if item["applies"]:
            lines.append(f"  {key}: {item['value']}    [{item['source']}]")
        else:
            lines.append(f"  {key}: n/a    [{item['reason']}]")
    lines += [f"warning: {w}" for w in summary["warnings"]]
    return Result(summary, lines)


def cmd_milnor(cfg: RunConfig) -> Result:
    f, text = _load_polynomial(cfg.inputs[0])
    N = curve_degree(f)
    profile = milnor_profile(f, cfg.r_max, cfg.mode, cfg.window,
                             prime_count=cfg.prime_count, seed=cfg.seed)
    top = 2 * N - 3
    report = profile.to_dict()
    report["polynomial"] = str(f)
    report["m2n3"] = profile.dims[top] if profile.r_max >= top else None
    lines = [f"f = {text}", f"degree N = {N}, mode = {profile.mode}"
             + (f", primes = {profile.primes}" if profile.primes else ""),
             "  r  dim M(f)_r"]
    for r, v in enumerate(profile.dims):
        mark = "   <- 2N-3" if r == top else ""
        lines.append(f"{r:3d}  {v}{mark}")
    if report["m2n3"] is not None:
        lines.append(f"dim M(f)_{top} = {report['m2n3']}")
    if profile.fallback_degrees:
        lines.append(f"primes disagreed in degrees {profile.fallback_degrees}; "
                     "exact rank used there")
    code = EXIT_OK
    if profile.stabilized:
        value, onset = profile.stabilized
        lines.append(f"stable value (tau candidate) = {value} from degree {onset} "
                     f"(window {profile.window})")
    else:
        lines.append(f"no stable value within r <= {profile.r_max}; raise --rmax")
        code = EXIT_INCONSISTENT
    return Result(report, lines, code)


def cmd_gap(cfg: RunConfig) -> Result:
    spec = load_spec(cfg.inputs[0])
    if len(cfg.inputs) > 1:
        f, _ = _load_polynomial(cfg.inputs[1])
    elif spec.polynomial:
        f = parse_poly(spec.polynomial)
    else:
        raise UsageError("no polynomial given and the curve spec has none")
    N = curve_degree(f)
    if cfg.r_max is not None and cfg.r_max < 2 * N - 3:
        raise UsageError(f"--rmax must be at least 2N-3 = {2 * N - 3}")
    rep = gap(spec, f, cfg.mode, r_max=cfg.r_max, window=cfg.window,
              prime_count=cfg.prime_count, seed=cfg.seed)
    out = rep.to_dict()
    out["name"] = spec.name
    top = 2 * N - 3
    lines = [
        f"spec: {spec.name or cfg.inputs[0]}",
        f"N = {N}, tau(C) = {rep.tau} (sum of local Tjurina numbers in the curve spec)",
        f"sum of genera = {rep.sum_genus}",
        f"dim M(f)_{top} = {rep.m2n3}    [Jacobian ideal rank, mode {cfg.mode}]",
        f"dim P^2 H^2(U) - dim F^2 H^2(U) = {rep.gap}    [tau + sum g - dim M(f)_(2N-3)]",
        f"dim P^2 H^2(U) = {rep.dim_P2}, dim F^2 H^2(U) = {rep.dim_F2}",
        f"tau cross-check against stable Milnor dimension: {rep.tau_status}"
        + (f" ({rep.tau_profile})" if rep.tau_profile is not None else ""),
        "bounds:",
    ]
    lines += [f"  {k}: {_fmt_bool(v)}" for k, v in rep.bounds_ok.items()]
    lines += [f"problem: {p}" for p in rep.problems]
    lines += [f"warning: {w}" for w in rep.warnings]
    lines.append("status: " + ("consistent" if rep.consistent else "INCONSISTENT INPUT"))
    return Result(out, lines, EXIT_OK if rep.consistent else EXIT_INCONSISTENT)


COMMANDS = {"validate": cmd_validate, "hodge": cmd_hodge,
            "milnor": cmd_milnor, "gap": cmd_gap}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planehodge",
        description="Hodge invariants of plane curve complements.",
        epilog=__doc__.split("\n\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, compute=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if compute:
            p.add_argument("--mode", choices=MODES, default="certified")
            p.add_argument("--rmax", type=int, default=None,
                           help="highest degree of the Milnor profile "
                                "(default max(2N-3, 3N-6) + window)")
            p.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                           help="equal trailing values required for stabilization")
            p.add_argument("--primes", type=int, default=DEFAULT_PRIME_COUNT,
                           help="number of random primes in certified mode")
            p.add_argument("--seed", type=int, default=0, help="seed for prime sampling")

    p = sub.add_parser("validate", help="check a curve spec and print its singular roster")
    p.add_argument("spec")
    common(p)
    p = sub.add_parser("hodge", help="Hodge-Deligne polynomials and Hodge filtration dimensions")
    p.add_argument("spec")
    common(p)
    p = sub.add_parser("milnor", help="Milnor algebra dimensions of a homogeneous polynomial")
    p.add_argument("poly")
    common(p, compute=True)
    p = sub.add_parser("gap", help="pole order versus Hodge filtration gap on H^2(U)")
    p.add_argument("spec")
    p.add_argument("poly", nargs="?")
    common(p, compute=True)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    inputs = [args.spec] if hasattr(args, "spec") else [args.poly]
    if args.command == "gap" and args.poly:
        inputs.append(args.poly)
    cfg = RunConfig(
        command=args.command, inputs=inputs,
        mode=getattr(args, "mode", "certified"), r_max=getattr(args, "rmax", None),
        window=getattr(args, "window", DEFAULT_WINDOW), format=args.format,
        prime_count=getattr(args, "primes", DEFAULT_PRIME_COUNT),
        seed=getattr(args, "seed", 0),
    )
    if cfg.r_max is not None and cfg.r_max < 0:
        raise UsageError("--rmax must be nonnegative")
    result = COMMANDS[args.command](cfg)
    return result.code, result.render(cfg.format)


def main(argv: list[str] | None = None) -> int:
    try:
        code, text = run(argv)
    except (UsageError, SpecError, ValueError, OSError) as exc:
        print(f"planehodge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
