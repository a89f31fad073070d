"""The degree 18 Kummer example: K = Q(zeta3), alpha^3 = 2, beta^3 = 3.

The algebra D comes out cyclic: h vanishes off the anti-diagonal i + j = 0
mod 3 and z beta z^-1 is a Galois conjugate of beta.
"""
import time

from cupcsa import catalog
from cupcsa.crossed import run_oracle
from cupcsa.datum import subgroups
from cupcsa.theorem import (build_D, conjugation_check, h_vanishing_pattern, nonzero_columns,
                            run_theorem, verify_central_simple, verify_min_poly)

t0 = time.perf_counter()
d = catalog.load_example("kummer3_2_3")
sub = subgroups(d)
ctx = run_theorem(d, sub)
print("K modulus:", ctx.K.field.modulus)
print("nonzero h_ij:", h_vanishing_pattern(ctx))
c = ctx.c_K()
print("c (over K, coefficients in 1, zeta3):")
for row in c:
    print("   ", [x.to_json() for x in row])
print("nonzero columns of c:", nonzero_columns(ctx.c))

D = build_D(ctx)
print("central simple:", verify_central_simple(D, 3)["central_simple"])
print("P = Q:", verify_min_poly(D, ctx)["equal"])
print("z beta z^-1 = rho^-1(beta):", conjugation_check(D, ctx))

report = run_oracle(d, sub, ctx)
print("commutant K-dimension:", report["commutant_k_dimension"])
print("oracle:", report["comparison"])
print(f"total {time.perf_counter() - t0:.2f}s")
