import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cupcsa.brauer2 import (INF, QuaternionPresentation, equal_kernel_quaternion, factorize,
                            hilbert_symbol, is_split, norm_search, normalize_pair,
                            normalize_quaternion, places, squarefree_part)
from cupcsa.datum import load_datum
from cupcsa.errors import NotAntiCommuting

from conftest import datum, pipeline

GRID = [v for v in range(-10, 11) if v]
PRIMES = [2, 3, 5, 7]


def _is_padic_square(n: int, p: int) -> bool:
    """Exact test for a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    if v % 2:
        return False
    if p == 2:
        return n % 8 == 1
    return pow(n % p, (p - 1) // 2, p) == 1


def brute_local_symbol(a: int, b: int, p: int) -> int:
    """+1 iff a x^2 + b y^2 is a nonzero p-adic square, or 0 with (x, y) != 0, for some
    integers in a box.  A hit is a proof of +1; a miss is taken as -1."""
    box = 64 if p == 2 else p ** 3
    for x in range(box):
        for y in range(box):
            if x == 0 and y == 0:
                continue
            n = a * x * x + b * y * y
            if n == 0 or _is_padic_square(n, p):
                return 1
    return -1


def test_squarefree_part_examples():
    assert squarefree_part(12) == 3
    assert squarefree_part(Fraction(-8, 9)) == -2
    assert squarefree_part(Fraction(1, 6)) == 6
    assert factorize(360) == {2: 3, 3: 2, 5: 1}


def test_symbol_examples():
    assert hilbert_symbol(-1, -1, INF) == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, 3) == 1
    assert hilbert_symbol(2, 3, 2) == -1
    assert hilbert_symbol(2, 3, 3) == -1
    assert hilbert_symbol(2, -1, 2) == 1
    assert hilbert_symbol(3, 5, 5) == -1
    assert hilbert_symbol(Fraction(8, 9), 3, 3) == hilbert_symbol(2, 3, 3)


@pytest.mark.parametrize("p", PRIMES)
def test_symbol_matches_brute_force(p):
    for a in GRID:
        for b in GRID:
            if squarefree_part(a) != a or squarefree_part(b) != b:
                continue
            assert hilbert_symbol(a, b, p) == brute_local_symbol(a, b, p), (a, b, p)


def test_reciprocity_on_grid():
    for a in GRID:
        for b in GRID:
            prod = 1
            for v in places(a, b):
                prod *= hilbert_symbol(a, b, v)
            assert prod == 1, (a, b)


nonzero = st.integers(-60, 60).filter(bool)


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero, nonzero, st.sampled_from([INF, 2, 3, 5, 7, 11]))
def test_symbol_identities(a, b, c, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)
    assert hilbert_symbol(a, -a, v) == 1
    assert hilbert_symbol(a, b * b, v) == 1


def test_is_split_examples():
    v = is_split(QuaternionPresentation(Fraction(2), Fraction(3)))
    assert not v.split and v.symbols == {INF: 1, 2: -1, 3: -1}
    assert v.witness is None
    v = is_split(QuaternionPresentation(Fraction(-1), Fraction(-1)))
    assert not v.split and v.symbols[INF] == -1 and v.symbols[2] == -1
    v = is_split(QuaternionPresentation(Fraction(2), Fraction(-1)))
    assert v.split and v.witness is not None


def test_norm_search_agrees_with_symbols():
    for a in GRID:
        for b in GRID:
            verdict = is_split(normalize_pair(a, b))
            w = norm_search(b, a, 30)
            if w is not None:
                u, y, z = w
                assert u * u - a * y * y == b * z * z
                assert verdict.split
            if verdict.split:
                assert verdict.witness is not None, (a, b)


def test_normalize_quaternion_examples():
    q = normalize_quaternion(pipeline("quat_2_3")[2])
    assert (q.a, q.b) == (2, 3)
    q = normalize_quaternion(pipeline("quat_m1_m2")[2])
    assert (q.a, q.b) == (-1, -2)
    assert not is_split(q).split
    with pytest.raises(ValueError):
        normalize_quaternion(pipeline("kummer3_2_3")[2])


def test_normalize_quaternion_rejects_commuting_constants():
    ctx = pipeline("quat_2_3")[2]
    L = ctx.alpha.field
    bad = dataclasses.replace(ctx, c=[[L.zero(), L.zero()], [L.zero(), L.one()]])
    with pytest.raises(NotAntiCommuting):
        normalize_quaternion(bad)


def quadratic(D):
    return load_datum({
        "p": 2, "modulus": [str(-D), "0", "1"],
        "automorphisms": [["0", "1"], ["0", "-1"]],
        "zeta_p": ["-1", "0"], "omega_M": [1, 1], "f0": [0, 1], "g0": [0, 1],
    })


def test_equal_kernel_cases():
    q, v = equal_kernel_quaternion(datum("quat_equal_2"))
    assert (q.a, q.b) == (2, -1) and v.split
    q, v = equal_kernel_quaternion(quadratic(-1))
    assert (q.a, q.b) == (-1, -1) and not v.split
    q, v = equal_kernel_quaternion(quadratic(5))
    assert (q.a, q.b) == (5, -1) and v.split
    u, y, z = v.witness
    assert u * u - 5 * y * y == -z * z
    q, v = equal_kernel_quaternion(quadratic(3))
    assert not v.split and v.symbols[3] == -1
