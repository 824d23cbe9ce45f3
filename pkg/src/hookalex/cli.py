"""Command-line surface: evaluate, verify, and tabulate colored Alexander polynomials.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .braid import BraidError, BraidWord, closure_is_knot, parse_braid
from .evaluator import NormalizationError, alexander, check_scaling
from .laurent import InexactDivisionError
from .oracle import burau_alexander
from .rmatrix import commutation_holds, yang_baxter_holds
from .young import Hook, build_graph, hooks_up_to_size

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

# Default braid corpus for table mode: "letters@strands", knots only.
DEFAULT_TABLE_BRAIDS = (
    "1 1 1@2",
    "1 1 1 1 1@2",
    "1 1 1 1 1 1 1@2",
    "1 -2 1 -2@3",
    "1 1 1 2 -1 2@3",
    "1 1 -2 1 -2@3",
)


@dataclass
class RunConfig:
    command: str
    braid_text: str = ""
    strands: int = 2
    arm: int = 0
    leg: int = 0
    fmt: str = "text"
    table_braids: tuple[str, ...] = field(default=DEFAULT_TABLE_BRAIDS)
    max_hook_size: int = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookalex",
        description="Exact colored Alexander polynomials of knots from braid words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_braid_flags(p, hook=True):
        p.add_argument("--strands", type=int, required=True, help="strand count m >= 2")
        p.add_argument("--braid", required=True,
                       help="whitespace-separated signed generators, e.g. '1 -2 1 -2'")
        if hook:
            p.add_argument("--arm", type=int, required=True, help="hook arm length a >= 0")
            p.add_argument("--leg", type=int, required=True, help="hook leg length l >= 0")

    p_eval = sub.add_parser("eval", help="evaluate one colored Alexander polynomial")
    add_braid_flags(p_eval)
    p_eval.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    p_thm = sub.add_parser("check-theorem",
                           help="check the scaling identity A_color(q) = A_fund(q^size)")
    add_braid_flags(p_thm)
    p_thm.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    p_yb = sub.add_parser("check-yb",
                          help="verify the Yang-Baxter and far-commutation identities")
    p_yb.add_argument("--strands", type=int, required=True)
    p_yb.add_argument("--arm", type=int, required=True)
    p_yb.add_argument("--leg", type=int, required=True)

    p_table = sub.add_parser("table", help="emit one JSON record per (braid, hook)")
    p_table.add_argument("--braids", default=";".join(DEFAULT_TABLE_BRAIDS),
                         help="semicolon-separated 'letters@strands' entries")
    p_table.add_argument("--max-hook-size", type=int, default=3)

    p_oracle = sub.add_parser("verify-oracle",
                              help="compare the fundamental invariant with the Burau oracle")
    add_braid_flags(p_oracle, hook=False)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for name in ("strands", "arm", "leg", "fmt", "max_hook_size"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if hasattr(ns, "braid"):
        cfg.braid_text = ns.braid
    if hasattr(ns, "braids"):
        cfg.table_braids = tuple(s for s in ns.braids.split(";") if s.strip())
    return cfg


def _hook(cfg: RunConfig) -> Hook:
    try:
        return Hook(cfg.arm, cfg.leg)
    except ValueError as exc:
        raise BraidError(f"--arm/--leg: {exc}") from exc


def _braid(cfg: RunConfig) -> BraidWord:
    try:
        b = parse_braid(cfg.braid_text, cfg.strands)
    except BraidError as exc:
        raise BraidError(f"--braid: {exc}") from exc
    if not closure_is_knot(b):
        raise BraidError(f"--braid: closure of '{cfg.braid_text}' is not a knot")
    return b


def record_for(color: Hook, b: BraidWord) -> dict:
    """The documented JSON record for one (braid, hook) evaluation."""
    report = check_scaling(color, b)
    return {
        "braid": " ".join(str(g) for g in b.letters),
        "strands": b.strands,
        "arm": color.arm,
        "leg": color.leg,
        "alexander": report.colored.to_json_dict(),
        "scaling_check": report.equal,
    }


def _run_eval(cfg: RunConfig, out) -> int:
    color, b = _hook(cfg), _braid(cfg)
    if cfg.fmt == "json":
        print(json.dumps(record_for(color, b)), file=out)
    else:
        print(alexander(color, b).polynomial.to_text(), file=out)
    return EXIT_OK


def _run_check_theorem(cfg: RunConfig, out) -> int:
    color, b = _hook(cfg), _braid(cfg)
    report = check_scaling(color, b)
    if cfg.fmt == "json":
        rec = record_for(color, b)
        rec["expected"] = report.scaled_fundamental.to_json_dict()
        print(json.dumps(rec), file=out)
    elif report.equal:
        print(f"PASS  hook {color} braid '{b}': {report.colored}", file=out)
    else:
        print(f"FAIL  hook {color} braid '{b}'", file=out)
        print(f"  colored:  {report.colored}", file=out)
        print(f"  expected: {report.scaled_fundamental}", file=out)
        print(f"  diff:     {report.diff}", file=out)
    return EXIT_OK if report.equal else EXIT_CHECK_FAILED


def _run_check_yb(cfg: RunConfig, out) -> int:
    color = _hook(cfg)
    if cfg.strands < 3:
        raise BraidError("--strands: Yang-Baxter needs at least 3 strands")
    graph = build_graph(color, cfg.strands)
    ok = True
    for k in range(cfg.strands):
        for i in range(1, cfg.strands - 1):
            good = yang_baxter_holds(graph, k, i)
            ok = ok and good
            print(f"{'ok  ' if good else 'FAIL'} yb i={i},{i + 1} target k={k} hook {color}",
                  file=out)
        for i in range(1, cfg.strands - 1):
            for j in range(i + 2, cfg.strands):
                good = commutation_holds(graph, k, i, j)
                ok = ok and good
                print(f"{'ok  ' if good else 'FAIL'} commute i={i} j={j} target k={k}", file=out)
    print(f"{'PASS' if ok else 'FAIL'}  Yang-Baxter suite hook {color} strands {cfg.strands}",
          file=out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _run_table(cfg: RunConfig, out) -> int:
    entries = []
    for item in cfg.table_braids:
        text, _, strands = item.partition("@")
        if not strands:
            raise BraidError(f"--braids: entry {item!r} is missing '@strands'")
        try:
            entries.append((text.strip(), int(strands)))
        except ValueError:
            raise BraidError(f"--braids: bad strand count in {item!r}") from None
    all_ok = True
    for text, strands in entries:
        try:
            b = parse_braid(text, strands)
        except BraidError as exc:
            raise BraidError(f"--braids: {exc}") from exc
        if not closure_is_knot(b):
            continue
        for color in hooks_up_to_size(cfg.max_hook_size):
            rec = record_for(color, b)
            all_ok = all_ok and rec["scaling_check"]
            print(json.dumps(rec), file=out)
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def _run_verify_oracle(cfg: RunConfig, out) -> int:
    b = _braid(cfg)
    engine = alexander(Hook(0, 0), b).polynomial
    reference = burau_alexander(b)
    ok = engine == reference
    print(f"engine: {engine}", file=out)
    print(f"burau:  {reference}", file=out)
    print("PASS" if ok else "FAIL", file=out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


_RUNNERS = {
    "eval": _run_eval,
    "check-theorem": _run_check_theorem,
    "check-yb": _run_check_yb,
    "table": _run_table,
    "verify-oracle": _run_verify_oracle,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        return _RUNNERS[cfg.command](cfg, out)
    except BraidError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InexactDivisionError, NormalizationError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
