"""Compare the numba and numpy statevector kernels on random circuits.

    python3 bench/bench_kernels.py --qubits 8 12 16 --ops 2000 --repeat 3
"""

import argparse
import time

import numpy as np

from appbench.circuit import Circuit
from appbench.kernels import backend_module
from appbench.simulator import compile_program


def random_circuit(n, n_ops, seed):
    rng = np.random.default_rng(seed)
    c = Circuit(n)
    for _ in range(n_ops):
        if rng.random() < 0.6:
            getattr(c, ("rx", "ry", "rz")[rng.integers(3)])(float(rng.uniform(-np.pi, np.pi)), int(rng.integers(n)))
        else:
            a, b = rng.choice(n, 2, replace=False)
            c.cx(int(a), int(b))
    return c


def time_backend(mod, prog, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        state = np.zeros(1 << prog.width, dtype=np.complex128)
        state[0] = 1.0
        t0 = time.perf_counter()
        mod.run_program(state, prog.kinds, prog.qubits, prog.nqs, prog.mats, 0, prog.size)
        best = min(best, time.perf_counter() - t0)
        out = state
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qubits", type=int, nargs="+", default=[8, 12, 16])
    ap.add_argument("--ops", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    nb, npy = backend_module("numba"), backend_module("numpy")
    # warm up the JIT so compile time is not counted
    warm = compile_program(random_circuit(3, 10, 0), fuse=False)
    time_backend(nb, warm, 1)

    print(f"{'qubits':>6} {'ops':>6} {'numba s':>10} {'numpy s':>10} {'speedup':>8} {'max diff':>10}")
    for n in args.qubits:
        prog = compile_program(random_circuit(n, args.ops, n), fuse=False)
        t_nb, s_nb = time_backend(nb, prog, args.repeat)
        t_np, s_np = time_backend(npy, prog, args.repeat)
        diff = float(np.max(np.abs(s_nb - s_np)))
        print(f"{n:>6} {prog.size:>6} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>8.1f} {diff:>10.1e}")


if __name__ == "__main__":
    main()
