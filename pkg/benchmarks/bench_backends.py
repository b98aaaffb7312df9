#!/usr/bin/env python3
"""Compare the compiled rational backend (gmpy2) against the pure-Python
fallback (fractions.Fraction) on the package's hot kernels.

Run twice, once per backend:

    python benchmarks/bench_backends.py
    HILBCHECK_PURE=1 python benchmarks/bench_backends.py

The backend is chosen at import time, so the variable must be set before the
interpreter starts.
"""

import random
import time


def bench():
    from hilbcheck.fields import GF, QQ
    from hilbcheck.fixtures import (random_points, random_skew_matrix,
                                    seven_quadrics_ideal)
    from hilbcheck.groebner import Ideal, buchberger, points_ideal
    from hilbcheck.linalg import DenseMatrix, determinant, mat_rank, pfaffian
    from hilbcheck.poly import context
    from hilbcheck.scalars import RAT_BACKEND, rat
    from hilbcheck.smooth import classify_smoothable
    from hilbcheck.tangent import curve_multiplicity, tangent_dimension

    print(f"backend: {RAT_BACKEND}")
    rng = random.Random(1)

    def timed(label, fn, repeat=1):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn()
        dt = (time.perf_counter() - t0) / repeat
        print(f"  {label:<42} {dt * 1000:9.1f} ms")

    dense = [[rat(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(24)]
             for _ in range(24)]
    m = DenseMatrix(QQ, dense)
    timed("determinant, dense rational 24x24", lambda: determinant(m), 3)

    wide = [[rat(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(100)]
            for _ in range(60)]
    mw = DenseMatrix(QQ, wide)
    timed("rank, dense rational 60x100", lambda: mat_rank(mw), 3)

    skew = DenseMatrix(QQ, random_skew_matrix(rng, 12))
    timed("pfaffian, rational 12x12", lambda: pfaffian(skew), 10)

    timed("tangent dimension, colength-8 witness d=6",
          lambda: tangent_dimension(seven_quadrics_ideal(6)), 3)

    pts = random_points(7)
    ctx = context(QQ, "x1 x2 x3 x4")
    timed("vanishing ideal + classify, 8 points",
          lambda: classify_smoothable(
              Ideal(ctx, points_ideal(pts, ctx).elements)), 3)

    timed("one-parameter family multiplicity (t^16)",
          lambda: curve_multiplicity(), 1)


if __name__ == "__main__":
    bench()
