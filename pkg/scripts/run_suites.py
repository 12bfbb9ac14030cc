"""Run every verification suite and print a status table; optionally write the JSON-lines report."""
import argparse
import sys
from collections import Counter

from kronsym.harness import HARNESS_MAX_VERTICES, SUITES, emit_report, exit_status, run_suite
from kronsym.distinguishing import SearchBudget


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--report", default=None)
    ap.add_argument("--suite", default="all")
    args = ap.parse_args()
    caps = SearchBudget.from_env(max_vertices=HARNESS_MAX_VERTICES)
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    everything = []
    for name in names:
        lines = run_suite(name, caps, args.seed)
        everything += lines
        tally = Counter(ln.status for ln in lines)
        print(f"{name:15s} pass={tally['pass']:4d} fail={tally['fail']:3d} skipped={tally['skipped-budget']:3d}")
        for ln in lines:
            if ln.status == "fail":
                print(f"    {ln.case}: expected {ln.expected}, got {ln.actual}  [{ln.claim}]")
    if args.report:
        with open(args.report, "wb") as fh:
            fh.write(emit_report(everything, timings=False))
    return exit_status(everything)


if __name__ == "__main__":
    sys.exit(main())
