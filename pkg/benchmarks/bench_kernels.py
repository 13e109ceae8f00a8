"""Time the numba and numpy kernels on identical inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Each row reports the best of N runs after one warm-up call (which also
absorbs numba compilation), and checks that both backends agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from segrecodes.gf import make_field
from segrecodes.kernels import backend_module
from segrecodes.matcodes import colex_subsets
from segrecodes.projgeom import projective_space, projective_torus, segre_embed
from segrecodes.rmtype import evaluation_code


def cases():
    F2, F3, F4 = make_field(2), make_field(3), make_field(4)
    T3 = projective_torus(3, F3)
    P2 = projective_space(3, F4)
    yield "rref 45x441 q=4", "rref", F4, evaluation_code(segre_embed(P2, P2), 2).generators.entries
    yield "rref 200x200 q=3", "rref", F3, np.random.default_rng(0).integers(0, 3, (200, 200)).astype(np.int32)
    yield "min_weight [16,9] q=3", "min_weight", F3, evaluation_code(segre_embed(T3, T3), 1).basis.entries
    yield "min_weight [49,9] q=2", "min_weight", F2, evaluation_code(
        segre_embed(projective_space(3, F2), projective_space(3, F2)), 1).basis.entries
    yield "min_support r=2 [9,4] q=2", "min_support", F2, evaluation_code(
        segre_embed(projective_space(2, F2), projective_space(2, F2)), 1).basis.entries
    yield "min_support r=2 [16,9] q=3", "min_support", F3, evaluation_code(segre_embed(T3, T3), 1).basis.entries


def call(mod, op, field, A):
    t = field.tables()
    if op == "rref":
        R, piv = mod.rref(A, t.add, t.mul, t.neg, t.inv)
        return R.tobytes() + piv.tobytes()
    if op == "min_weight":
        return mod.min_weight(A, t.add, t.sub, t.mul)
    return mod.min_support(A, colex_subsets(A.shape[0], 2), t.add, t.sub, t.mul)


def best_time(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    nb, npy = backend_module("numba"), backend_module("numpy")
    print(f"{'case':32} {'numba s':>10} {'numpy s':>10} {'ratio':>8}  agree")
    for name, op, field, A in cases():
        t_nb, r_nb = best_time(lambda: call(nb, op, field, A), args.repeat)
        t_np, r_np = best_time(lambda: call(npy, op, field, A), args.repeat)
        ratio = t_np / t_nb if t_nb else float("inf")
        print(f"{name:32} {t_nb:10.4f} {t_np:10.4f} {ratio:8.1f}  {r_nb == r_np}")


if __name__ == "__main__":
    main()
