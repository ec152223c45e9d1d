"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Also times one end-to-end isomorphism check under each backend, by
re-running itself in a subprocess with ``PLETHYSM_PURE_PYTHON`` set.
"""

import argparse
import json
import os
import subprocess
import sys
import timeit

import numpy as np


def _inputs(seed=0):
    rng = np.random.default_rng(seed)
    square = rng.integers(0, 3, (120, 120))
    a, b = rng.integers(0, 7, (80, 60)), rng.integers(0, 7, (60, 80))
    vectors = [
        ([int(i) for i in rng.choice(40, 6, replace=False)], [int(c) for c in rng.integers(1, 7, 6)])
        for _ in range(6)
    ]
    return square, a, b, vectors


def kernel_times(module, repeat):
    square, a, b, vectors = _inputs()
    cases = {
        "rank_mod_p 120x120 p=3": lambda: module.rank_mod_p(square, 3),
        "matmul_mod_p 80x60x80 p=7": lambda: module.matmul_mod_p(a, b, 7),
        "wedge_expand_mod_p 6 vectors p=7": lambda: module.wedge_expand_mod_p(vectors, 7),
    }
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) for name, fn in cases.items()}


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    env["PLETHYSM_PURE_PYTHON"] = "1" if pure else "0"
    code = (
        "import time\n"
        "from plethysm.field import GF\n"
        "from plethysm.isomaps import zeta\n"
        "t = time.perf_counter(); zeta(6, 7, GF(7)).rank(); print(time.perf_counter() - t)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-end-to-end", action="store_true")
    args = parser.parse_args(argv)

    from plethysm import _kernels_py

    try:
        from plethysm import _kernels
    except ImportError:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
        return 1
    py = kernel_times(_kernels_py, args.repeat)
    cy = kernel_times(_kernels, args.repeat)
    rows = []
    for name in py:
        rows.append({"case": name, "python_s": py[name], "cython_s": cy[name], "speedup": py[name] / cy[name]})
    if not args.skip_end_to_end:
        t_py, t_cy = end_to_end(True), end_to_end(False)
        rows.append({"case": "zeta(6, 7) over GF(7), build and rank", "python_s": t_py, "cython_s": t_cy,
                     "speedup": t_py / t_cy})
    for r in rows:
        print(f"{r['case']:<45} python {r['python_s']:9.5f}s  cython {r['cython_s']:9.5f}s  x{r['speedup']:.1f}")
    print(json.dumps(rows, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
