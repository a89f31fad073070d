"""Walk through the p = 2 pipeline on Q(sqrt2, sqrt3).

Run with:  python3 demos/quaternion_walkthrough.py
"""
from cupcsa import catalog
from cupcsa.brauer2 import is_split, normalize_quaternion
from cupcsa.crossed import build_crossed_product, commutant_oracle, compare_with_theorem
from cupcsa.datum import subgroups
from cupcsa.theorem import build_D, element_minpoly, run_theorem, verify_central_simple


def show(label, value):
    print(f"{label:<28}{value}")


d = catalog.load_example("quat_2_3")
sub = subgroups(d)
show("[L:Q], |G|", (d.degree, d.order))
show("f0 on G", d.f0)
show("g0 on G", d.g0)
show("N_f, N_g", (sorted(sub.N_f), sorted(sub.N_g)))

ctx = run_theorem(d, sub)
show("sigma, rho", (ctx.sigma, ctx.rho))
show("zeta", ctx.zeta)
show("alpha (power basis)", ctx.alpha)
show("alpha^2", ctx.alpha ** 2)
show("beta^2", ctx.beta ** 2)
show("c in K", [[str(x.rational()) for x in row] for row in ctx.c_K()])

D = build_D(ctx)
show("D central simple", verify_central_simple(D, 2))
show("minpoly of z in D", [str(x.rational()) for x in element_minpoly(D, D.basis_vector(1))])

# the same relation, checked inside the crossed product
A = build_crossed_product(d)
comm = commutant_oracle(A, sub, ctx.rho, 1)
show("oracle", compare_with_theorem(A, comm, ctx))

q = normalize_quaternion(ctx)
v = is_split(q)
show("(a, b)", (str(q.a), str(q.b)))
show("local symbols", v.symbols)
show("split", v.split)
