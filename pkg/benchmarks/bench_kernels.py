"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 20] [--small]

Sizes follow the medium PTB model (n=650, V=10000, batch 20, unroll 35)
unless ``--small`` is given, which uses the desk-scale LM (n=128, V=2000).
The first numba call is made before timing so compilation is excluded.
"""
import argparse
import time

import numpy as np

from sse import kernels
from sse._accel import USE_NUMBA
from sse.core import RngStream
from sse.groups import build_groups
from sse.params import LstmArch


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases(small):
    n, V, B, T = (128, 2000, 20, 20) if small else (650, 10000, 20, 35)
    g = RngStream(0).generator
    arch = LstmArch(V, n, (n,) if small else (n, n))
    spec = build_groups(arch, "lstm-untied")
    theta = g.normal(size=spec.layout.size)
    scale = g.random(len(spec))
    out = np.zeros_like(theta)
    z, c = g.normal(size=(B, 4 * n)), g.normal(size=(B, n))
    act, _, tc, _ = kernels.np_lstm_gates_forward(z, c)
    dh, dc = g.normal(size=(B, n)), g.normal(size=(B, n))
    logits = g.normal(size=(B * T, V))
    targets = g.integers(0, V, size=B * T)
    w = g.normal(size=(2 * n, 4 * n)) * (g.random((2 * n, 4 * n)) < 0.1)
    return [
        ("group_sq_norms", lambda k: k["group_sq_norms"](theta, spec.ptr, spec.idx)),
        ("group_grad_accumulate", lambda k: k["group_grad_accumulate"](theta, spec.ptr, spec.idx, scale, out)),
        ("lstm_gates_forward", lambda k: k["lstm_gates_forward"](z, c)),
        ("lstm_gates_backward", lambda k: k["lstm_gates_backward"](act, c, tc, dh, dc)),
        ("softmax_nll", lambda k: k["softmax_nll"](logits, targets)),
        ("nonzero_rows_cols", lambda k: k["nonzero_rows_cols"](w)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--small", action="store_true")
    args = ap.parse_args()
    if not USE_NUMBA:
        print("note: SSE_NUMBA=0 is set; the nb_ functions below run as plain python")
    nb = {name[3:]: getattr(kernels, name) for name in dir(kernels) if name.startswith("nb_")}
    np_ = {name[3:]: getattr(kernels, name) for name in dir(kernels) if name.startswith("np_")}
    print(f"{'kernel':<24}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}")
    for name, call in cases(args.small):
        t_nb = best_of(lambda: call(nb), args.repeat)
        t_np = best_of(lambda: call(np_), args.repeat)
        print(f"{name:<24}{t_nb * 1e3:>10.3f}{t_np * 1e3:>10.3f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
