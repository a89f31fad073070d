"""Quaternion algebras (a, b) over Q: Hilbert symbols, splitness, norm search.

(a, b) is the algebra generated by z, beta with z^2 = a, beta^2 = b and
z beta = -beta z.  It is split iff every local Hilbert symbol is +1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .datum import EQUAL_KERNELS, GaloisDatum, detect_special, subgroups
from .errors import NotAntiCommuting, NotRationalBase, ReciprocityViolation
from .fieldtower import fixed_subspace, minpoly_over_Q, primitive_element, trace_adjust

INF = "inf"
DEFAULT_HEIGHT = 50


def factorize(n: int) -> dict:
    """Prime factorization of |n| by trial division."""
    n = abs(n)
    out = {}
    k = 2
    while k * k <= n:
        while n % k == 0:
            out[k] = out.get(k, 0) + 1
            n //= k
        k += 1 if k == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(q) -> int:
    """The squarefree integer in the square class of the nonzero rational ``q``."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no square class")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for prime, e in factorize(n).items():
        if e % 2:
            out *= prime
    return sign * out


def _split_valuation(n: int, p: int):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(u: int, p: int) -> int:
    r = pow(u % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def hilbert_symbol(a, b, place) -> int:
    """(a, b)_v for nonzero rationals; ``place`` is ``"inf"`` or a prime."""
    a, b = squarefree_part(a), squarefree_part(b)
    if place == INF:
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    al, u = _split_valuation(a, p)
    be, v = _split_valuation(b, p)
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2
        omg = lambda x: ((x * x - 1) // 8) % 2
        e = eps(u) * eps(v) + al * omg(v) + be * omg(u)
        return -1 if e % 2 else 1
    sign = -1 if (al * be * ((p - 1) // 2)) % 2 else 1
    if be % 2:
        sign *= _legendre(u, p)
    if al % 2:
        sign *= _legendre(v, p)
    return sign


@dataclass(frozen=True)
class QuaternionPresentation:
    a: Fraction
    b: Fraction

    def to_json(self):
        return {"a": str(self.a), "b": str(self.b)}


@dataclass
class SplitnessVerdict:
    a: Fraction
    b: Fraction
    split: bool
    symbols: dict
    witness: tuple | None = None
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "a": str(self.a),
            "b": str(self.b),
            "symbols": {str(k): v for k, v in self.symbols.items()},
            "split": self.split,
            "witness": list(self.witness) if self.witness else None,
        }


def places(a, b):
    primes = set(factorize(squarefree_part(a))) | set(factorize(squarefree_part(b)))
    primes.discard(2)
    return [INF, 2] + sorted(primes)


def norm_search(a, d, height: int = DEFAULT_HEIGHT):
    """Integers (u, v, w), w > 0, with u^2 - d v^2 = a w^2 and all entries <= height.

    A witness proves that a is a norm from Q(sqrt d); None proves nothing.
    """
    a, d = Fraction(a), Fraction(d)
    for w in range(1, height + 1):
        for v in range(0, height + 1):
            t = a * w * w + d * v * v
            if t < 0 or t.denominator != 1:
                continue
            u = isqrt(t.numerator)
            if u * u == t.numerator and u <= height:
                return (u, v, w)
    return None


def is_split(q: QuaternionPresentation, height: int = DEFAULT_HEIGHT) -> SplitnessVerdict:
    symbols = {v: hilbert_symbol(q.a, q.b, v) for v in places(q.a, q.b)}
    prod = 1
    for s in symbols.values():
        prod *= s
    if prod != 1:
        raise ReciprocityViolation(f"product of local symbols for ({q.a}, {q.b}) is -1")
    split = all(s == 1 for s in symbols.values())
    witness = None
    if split:
        witness = norm_search(q.b, q.a, height) or None
        if witness is None:
            w2 = norm_search(q.a, q.b, height)
            witness = None if w2 is None else w2
    return SplitnessVerdict(q.a, q.b, split, symbols, witness)


def normalize_pair(a, b) -> QuaternionPresentation:
    """Replace a and b by the squarefree integers in their square classes."""
    return QuaternionPresentation(Fraction(squarefree_part(a)), Fraction(squarefree_part(b)))


def normalize_quaternion(ctx) -> QuaternionPresentation:
    """(a, b) with z^2 = a and beta^2 = b read off the minimal polynomials."""
    if ctx.p != 2:
        raise ValueError("quaternion normalization needs p = 2")
    if len(ctx.K.qbasis) != 1:
        raise NotRationalBase("the base field is not Q")
    c = ctx.c_K()
    want = [[0, 0], [0, -1]]
    if any(c[i][j] != want[i][j] for i in range(2) for j in range(2)):
        raise NotAntiCommuting("structure constants are not [[0,0],[0,-1]]")
    a = -ctx.minpoly_alpha[0].rational()
    b = -ctx.minpoly_beta[0].rational()
    return normalize_pair(a, b)


def equal_kernel_quaternion(d: GaloisDatum, height: int = DEFAULT_HEIGHT):
    """(a, -1) for the quadratic field fixed by N_f, with its splitness verdict."""
    if d.p != 2:
        raise ValueError("equal-kernel quaternion needs p = 2")
    sub = subgroups(d)
    if detect_special(d, sub) != EQUAL_KERNELS:
        raise ValueError("N_f != N_g")
    if len(fixed_subspace(d.group)) != 1:
        raise NotRationalBase("the base field is not Q")
    gamma = trace_adjust(primitive_element(sub.N_f, d.group), sub.N_f, d.group)
    mp = minpoly_over_Q(gamma)
    a = -mp.coeffs[0]
    q = normalize_pair(a, -1)
    return q, is_split(q, height)
