"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the Lobachevsky series over a grid of arguments and the adaptive
cubature used as the volume oracle, on the projected links of all 33 pyramids.
"""

import argparse
import math
import sys
import timeit

from coxpyramids._kernels import _purepy
from coxpyramids.geometry import enumerate_pyramids, projected_link

try:
    from coxpyramids._kernels import _speedups
except ImportError:
    _speedups = None

GRID = [-20.0 + 40.0 * i / 9999 for i in range(10000)]
BOXES = [(r.x_min, r.x_max, r.y_min, r.y_max) for r in map(projected_link, enumerate_pyramids())]


def lob_sweep(mod):
    f = mod.lobachevsky
    return math.fsum(f(x, 1e-12) for x in GRID)


def quad_sweep(mod, tol):
    return math.fsum(mod.quad_rect(*b, tol, 200000)[0] for b in BOXES)


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    print(f"  {label:<10} {best * 1e3:10.2f} ms")
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--tol", type=float, default=1e-8, help="cubature tolerance per pyramid")
    args = ap.parse_args(argv)
    if _speedups is None:
        print("compiled extension not built; only the fallback can be timed", file=sys.stderr)
    mods = [("python", _purepy)] + ([("compiled", _speedups)] if _speedups else [])

    cases = [
        (f"lobachevsky x {len(GRID)}", lob_sweep),
        (f"quad_rect x {len(BOXES)} (tol {args.tol:g})", lambda m: quad_sweep(m, args.tol)),
    ]
    for title, fn in cases:
        print(title)
        times, values = {}, {}
        for name, mod in mods:
            values[name] = fn(mod)
            times[name] = bench(name, lambda: fn(mod), args.repeat)
        if len(times) == 2:
            print(f"  speedup    {times['python'] / times['compiled']:10.1f}x"
                  f"   |diff| = {abs(values['python'] - values['compiled']):.1e}")


if __name__ == "__main__":
    main()
