#!/usr/bin/env python3
"""Sweep the scaling identity A_color(q) = A_fund(q^size) beyond the test corpus.

Checks every hook up to --max-hook-size against every knot in the corpus plus
optional extra braids, timing each evaluation.  Everything is exact; a FAIL
line would mean a genuine counterexample (none are expected).
"""

import argparse
import time

from hookalex.braid import closure_is_knot, parse_braid
from hookalex.cli import DEFAULT_TABLE_BRAIDS
from hookalex.evaluator import check_scaling
from hookalex.young import hooks_up_to_size


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-hook-size", type=int, default=6)
    ap.add_argument("--braids", default=";".join(DEFAULT_TABLE_BRAIDS),
                    help="semicolon-separated 'letters@strands' entries")
    args = ap.parse_args()

    braids = []
    for item in args.braids.split(";"):
        text, _, strands = item.partition("@")
        b = parse_braid(text.strip(), int(strands))
        if closure_is_knot(b):
            braids.append(b)
        else:
            print(f"# skipping link: '{text.strip()}' @ {strands}")

    failures = 0
    for b in braids:
        for h in hooks_up_to_size(args.max_hook_size):
            t0 = time.perf_counter()
            report = check_scaling(h, b)
            dt = 1e3 * (time.perf_counter() - t0)
            status = "ok  " if report.equal else "FAIL"
            print(f"{status} braid '{b}'@{b.strands}  hook {h} (size {h.size})"
                  f"  {dt:7.1f} ms   {report.colored}")
            failures += not report.equal
    print(f"\n{'all equal' if failures == 0 else f'{failures} FAILURES'} "
          f"({len(braids)} knots x {len(hooks_up_to_size(args.max_hook_size))} hooks)")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
