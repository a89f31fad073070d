import functools

import pytest
from hypothesis import given, settings, strategies as st

from cupcsa.crossed import (build_crossed_product, build_theta_ideal, check_closure,
                            check_two_cocycle, commutant_oracle, compare_with_theorem, corrupt,
                            cup_cocycle, in_commutant, run_oracle, z_element, z_power_check)
from cupcsa.errors import MismatchReport

from conftest import GENERIC, datum, pipeline


@functools.lru_cache(maxsize=None)
def oracle_parts(name):
    d, sub, ctx, D = pipeline(name)
    A = build_crossed_product(d, check=False)
    comm = commutant_oracle(A, sub, ctx.rho, len(ctx.K.qbasis))
    return A, comm


def test_cup_cocycle_quat_values():
    d = pipeline("quat_2_3")[0]
    # e(s,t) = g0(t) f0(s) mod 2 with f0 = (0,1,0,1), g0 = (0,0,1,1)
    table = [[cup_cocycle(d, s, t) for t in range(4)] for s in range(4)]
    assert table == [[0, 0, 0, 0], [0, 0, 1, 1], [0, 0, 0, 0], [0, 0, 1, 1]]


@pytest.mark.parametrize("name", GENERIC + ("mixed3", "quat_equal_2", "equal3"))
def test_two_cocycle_exhaustive(name):
    d = datum(name)
    assert check_two_cocycle(d) == d.order ** 3


@pytest.mark.parametrize("name", GENERIC)
def test_basis_relations(name):
    d, sub, ctx, D = pipeline(name)
    A, _ = oracle_parts(name)
    for s in range(d.order):
        prod = A.mul(A.basis(s), A.basis(d.inv(s)))
        assert prod == A.basis(0, d.zeta_p ** A.phi[s][d.inv(s)])
    e_sigma, e_rho = A.basis(ctx.sigma), A.basis(ctx.rho)
    assert A.power(e_rho, d.p) == A.basis(0)
    e_ri = A.basis(0)
    for i in range(d.p):
        lhs = A.mul(e_sigma, e_ri)
        rhs = A.scale(ctx.zeta ** i, A.mul(e_ri, e_sigma))
        assert lhs == rhs
        e_ri = A.mul(e_ri, e_rho)


def test_quat_associativity_full():
    d = pipeline("quat_2_3")[0]
    A = build_crossed_product(d)
    assert A.check_associativity(full=True) == 64


coeff = st.integers(-5, 5)
element = st.lists(st.lists(coeff, min_size=4, max_size=4), min_size=4, max_size=4)


@settings(max_examples=25, deadline=None)
@given(element, element, element)
def test_associativity_random_elements(u, v, w):
    A, _ = oracle_parts("quat_2_3")
    u, v, w = (tuple(A.L.element(c) for c in x) for x in (u, v, w))
    assert A.mul(A.mul(u, v), w) == A.mul(u, A.mul(v, w))


@pytest.mark.parametrize("name", GENERIC)
def test_theta_ideal_dimensions(name):
    d, sub, ctx, D = pipeline(name)
    A, _ = oracle_parts(name)
    S = build_theta_ideal(A, sub, ctx.rho)
    assert S.L_rank == d.p
    assert S.q_dimension == d.p * d.degree


@pytest.mark.parametrize("name", GENERIC)
def test_commutant(name):
    d, sub, ctx, D = pipeline(name)
    A, comm = oracle_parts(name)
    k = len(ctx.K.qbasis)
    assert comm.k_dimension == d.p ** 2
    assert comm.q_dimension == d.p ** 2 * k
    assert in_commutant(A, comm, A.scalar(ctx.beta))
    for w in ctx.K.qbasis:
        assert in_commutant(A, comm, A.scalar(w))
    assert in_commutant(A, comm, z_element(A, ctx))
    assert not in_commutant(A, comm, A.scalar(ctx.alpha))
    check_closure(A, comm, full=False)


@pytest.mark.parametrize("name", GENERIC)
def test_comparison_and_z_powers(name):
    d, sub, ctx, D = pipeline(name)
    A, comm = oracle_parts(name)
    assert compare_with_theorem(A, comm, ctx) == {
        "relation": True, "minpoly_equal": True, "spans_commutant": True}
    assert z_power_check(A, ctx) == {"pass": True, "first_failure": None}


@pytest.mark.parametrize("cell", [(0, 0), (1, 1), (0, 1)])
def test_corruption_detected(cell):
    d, sub, ctx, D = pipeline("quat_2_3")
    A, comm = oracle_parts("quat_2_3")
    with pytest.raises(MismatchReport) as info:
        compare_with_theorem(A, comm, ctx, corrupt(ctx.c, *cell))
    assert info.value.witness is not None


def test_run_oracle_report():
    d, sub, ctx, D = pipeline("quat_m1_m2")
    rep = run_oracle(d, sub, ctx)
    assert rep["cocycle_triples_checked"] == 64
    assert rep["commutant_k_dimension"] == 4
    assert rep["S_L_rank"] == 2
    assert rep["z_power_check"]["pass"] and rep["convolution_identity"]
