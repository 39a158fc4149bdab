"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit
from itertools import combinations

from continuum import _kernels_py
from continuum.philebian import enumerate_family

try:
    from continuum import _kernels as _compiled
except ImportError:
    _compiled = None


def workloads(family):
    packed = [x._packed for x in family]
    pairs = list(combinations(packed, 2))[:200_000]

    def lex(k):
        f = k.lex_compare_bits
        for (px, qx), (py, qy) in pairs:
            f(px, qx, py, qy)

    def stadium(k):
        for n in range(1, 21):
            for t in range(1, 41):
                k.stadium_passings(n, t)

    def audit(k):
        for n in range(19):
            k.leaf_audit(n)

    return {"lex_compare x200k": lex, "stadium 20x40 grid": stadium, "leaf_audit depth<=18": audit}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    family = enumerate_family(8, ("0", "1", "10", "01", "110"))
    backends = [("python", _kernels_py)] + ([("cython", _compiled)] if _compiled else [])
    print(f"{'workload':24} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for label, fn in workloads(family).items():
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in backends]
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:24} " + " ".join(f"{t:9.3f}s" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
