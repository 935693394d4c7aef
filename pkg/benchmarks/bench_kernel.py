"""Timing comparison between the pure-Python kernel and the compiled one.

Usage::

    python benchmarks/bench_kernel.py [--number 300] [--repeat 5]

Runs a fixed basket of generator-arithmetic workloads through
``idealis._kernel._slow`` and, when built, ``idealis._kernel._fast``, and
prints per-operation medians side by side.  Workload sizes are chosen so a
full run stays under a minute even on the slow path.
"""

from __future__ import annotations

import argparse
import importlib
import statistics
import sys
import time

from idealis.monoid import free_monoid, numerical_monoid, product


def workloads():
    gap23 = numerical_monoid("gap23", (2, 3))
    wide = numerical_monoid("wide", (16, 17, 19, 21, 23, 25, 27, 29, 31))
    n2 = free_monoid("n2", 2)
    g23xn = product("g23xn", numerical_monoid("a", (2, 3)),
                    free_monoid("b", 1))

    out = []

    def add(label, pack, fn_name, *args):
        out.append((label, pack, fn_name, args))

    add("v_close 1-d", gap23.pack, "v_close_gens", ((4,), (5,), (7,)))
    add("v_close wide gaps", wide.pack, "v_close_gens",
        ((16,), (21,), (29,), (47,)))
    add("v_close 2-d", n2.pack, "v_close_gens",
        ((4, 0), (3, 2), (1, 5), (0, 6)))
    add("intersect 2-d", g23xn.pack, "intersect_gens",
        ((2, 3), (5, 0), (4, 1)), ((3, 2), (2, 4)))
    add("radical 2-d", g23xn.pack, "radical_gens", ((6, 2), (4, 5)))
    add("modular close", n2.pack, "modular_close_gens",
        ((3, 1), (1, 4), (2, 2)), [frozenset({0}), frozenset({1})])
    add("box members", g23xn.pack, "box_members", (0, 0), (12, 12))
    return out


def run(impl, loads, number, repeat):
    rows = {}
    for label, pack, fn_name, args in loads:
        fn = getattr(impl, fn_name)
        timings = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            for _ in range(number):
                fn(pack, *args)
            timings.append((time.perf_counter() - t0) / number)
        rows[label] = statistics.median(timings)
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--number", type=int, default=300,
                    help="calls per timing sample (default 300)")
    ap.add_argument("--repeat", type=int, default=5,
                    help="samples per operation; the median is reported")
    args = ap.parse_args(argv)

    slow = importlib.import_module("idealis._kernel._slow")
    try:
        fast = importlib.import_module("idealis._kernel._fast")
    except ImportError:
        fast = None
        print("compiled kernel not built; timing the pure-Python path only",
              file=sys.stderr)

    loads = workloads()
    slow_rows = run(slow, loads, args.number, args.repeat)
    fast_rows = run(fast, loads, args.number, args.repeat) if fast else {}

    width = max(len(label) for label, *_ in loads)
    header = f"{'operation':<{width}}  {'slow':>10}"
    if fast:
        header += f"  {'fast':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, *_ in loads:
        s = slow_rows[label]
        line = f"{label:<{width}}  {s * 1e6:>8.1f}us"
        if fast:
            f = fast_rows[label]
            line += f"  {f * 1e6:>8.1f}us  {s / f:>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
