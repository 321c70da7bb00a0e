"""Exact rational rank check for the F4 contraction whose index was left open.

The rank of B(xi)_ij = xi([x_i, x_j]) at one rational point gives
ind <= dim - rank; semicontinuity gives ind >= rk F4 = 4.
"""

import argparse
import random
import time

from kaclie.contraction import contract_zero
from kaclie.grading import grading_of
from kaclie.kac import parse
from kaclie.linalg import rank_exact


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--diagram", default="F4[0,0,1,0,0]")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    C = contract_zero(grading_of(parse(args.diagram)))
    d = C.dim
    rng = random.Random(args.seed)
    xi = [rng.randint(-20, 20) for _ in range(d)]
    B = [[0] * d for _ in range(d)]
    for (i, j), vec in C.brackets.items():
        B[i][j] = sum(c * xi[k] for k, c in vec.items())
    t0 = time.perf_counter()
    r = rank_exact(B)
    print(f"{args.diagram}: dim {d}, exact rank {r}, index <= {d - r} ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
