"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from sp4gtz import _pykernels
from sp4gtz.diagrams import R, combo, diagram_to_shift, enumerate_diagrams

try:
    from sp4gtz import _kernels
except ImportError:
    _kernels = None


def workload():
    shifts = [diagram_to_shift(d) for w in [(3, 1), (3, 2), (4, 2)] for d in enumerate_diagrams(w)]
    layers = [(combo(g, (1, 0, 1), R), (1, 0, 1)) for g in shifts] + [(g, (0, 0, 0)) for g in shifts]
    polys = [_pykernels.gamma_terms(g) for g in shifts[:12]]
    return shifts, layers, polys


def cases(mod, shifts, layers, polys):
    orient = (1, -1, -1)
    return {
        "support": lambda: [mod.support(g) for g in shifts],
        "gamma_terms": lambda: [mod.gamma_terms(g) for g in shifts],
        "layer_sum": lambda: [mod.layer_sum(b, s, orient) for b, s in layers],
        "poly_mul": lambda: [mod.poly_mul(a, b) for a in polys for b in polys[:4]],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    data = workload()
    py = cases(_pykernels, *data)
    cy = cases(_kernels, *data) if _kernels else {}
    for name, fn in py.items():
        if cy:
            assert cy[name]() == fn(), name
        t_py = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        line = f"{name:12s} python {t_py * 1e3:9.2f} ms"
        if cy:
            t_cy = min(timeit.repeat(cy[name], number=1, repeat=args.repeat))
            line += f"   cython {t_cy * 1e3:9.2f} ms   speedup {t_py / t_cy:5.1f}x"
        print(line)


if __name__ == "__main__":
    main()
