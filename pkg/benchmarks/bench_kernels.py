"""Compare the compiled counting core with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--max-m 10] [--repeat 3]

Times the full coloring enumeration of P3(m) (no symmetry shortcut) and the
Burnside fixed counts, on both backends, and checks the results agree.
"""

import argparse
import time

from smallcover import _pykernels, kernels
from smallcover.coloring import _build_problem, orbit_classes
from smallcover.prism import build_prism
from smallcover.symmetry import full_group


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-m", type=int, default=6)
    ap.add_argument("--max-m", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    compiled = kernels.compiled_backend
    if compiled is None:
        print("compiled core not built; only the fallback is timed")
    backends = [("python", _pykernels)] + ([("cython", compiled)] if compiled else [])

    print(f"{'task':<22}{'m':>4}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for m in range(args.min_m, args.max_m + 1):
        cx = build_prism(m)
        tasks = {"enumerate all": [_build_problem(cx)]}
        if m >= 3:
            tasks["burnside fixed"] = [p for p in (_build_problem(cx, orbit_classes(cx, g))
                                                   for g in full_group(m)) if not p.empty]
        for task, probs in tasks.items():
            times, results = [], []
            for _, mod in backends:
                t, r = best_of(lambda: [mod.count(p.domain, p.offsets, p.pairs) for p in probs], args.repeat)
                times.append(t)
                results.append(r)
            if len(set(map(tuple, results))) != 1:
                raise SystemExit(f"backends disagree on {task} m={m}: {results}")
            speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
            print(f"{task:<22}{m:>4}" + "".join(f"{t * 1000:10.1f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
