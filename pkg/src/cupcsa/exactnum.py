"""Exact scalars, univariate polynomials over Q and dense linear algebra.

The linear algebra routines are written against the field protocol
(``+ - * /``, equality with ``0``) so the same elimination code runs over
``Fraction`` entries and over number-field elements.  Matrices are plain
lists of rows.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import Singular

Rational = Fraction

__all__ = [
    "Rational", "parse_rational", "format_rational", "Polynomial",
    "poly_gcd_ext", "rref", "rank", "nullspace", "solve_linear",
    "invert_matrix", "mat_mul", "mat_vec", "identity", "zero_of", "one_of",
]


def parse_rational(s) -> Fraction:
    """Parse ``"num/den"``, ``"num"`` or an int."""
    if isinstance(s, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise ValueError(f"cannot parse rational from {s!r}")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def zero_of(x):
    """Additive identity of the ring containing ``x``."""
    if hasattr(x, "field"):
        return x.field.zero()
    return Fraction(0)


def one_of(x):
    if hasattr(x, "field"):
        return x.field.one()
    return Fraction(1)


class Polynomial:
    """Immutable polynomial over Q; coefficients ascending, no trailing zeros.

    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = self.lead
        return Polynomial([c / lc for c in self.coeffs])

    def __call__(self, x):
        acc = zero_of(x) if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lc
            quot[k - dq] = f
            for i, b in enumerate(other.coeffs):
                rem[k - dq + i] -= f * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            terms.append(f"({format_rational(c)}){mono}" if mono else format_rational(c))
        return "Polynomial(" + " + ".join(terms) + ")"

    def to_json(self):
        return [format_rational(c) for c in self.coeffs]


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial([x])


def poly_gcd_ext(a: Polynomial, b: Polynomial):
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` monic."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    s0, s1 = Polynomial([1]), Polynomial()
    t0, t1 = Polynomial(), Polynomial([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lead
    return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)


# ---------------------------------------------------------------- linear algebra

def rref(rows, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)``; ``R`` is a new list of rows, ``pivots`` the pivot
    column of each nonzero row.  Pivot choice is the first row (from the
    current position) with a nonzero entry in the current column.
    """
    m = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    if not m:
        return m, []
    n = len(m[0]) if ncols is None else ncols
    pivots = []
    prow = 0
    for col in range(n):
        if prow == len(m):
            break
        sel = None
        for r in range(prow, len(m)):
            if m[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        m[prow], m[sel] = m[sel], m[prow]
        pr = m[prow]
        inv = 1 / pr[col]
        pr = [x * inv for x in pr]
        m[prow] = pr
        for r in range(len(m)):
            if r == prow:
                continue
            f = m[r][col]
            if f != 0:
                row = m[r]
                m[r] = [x - f * y if y != 0 else x for x, y in zip(row, pr)]
        pivots.append(col)
        prow += 1
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int, zero=None, one=None):
    """Basis of ``{x : A x = 0}``, one vector per free column (free entry 1)."""
    if zero is None:
        zero, one = Fraction(0), Fraction(1)
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    R, piv = rref(rows, ncols)
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for r, pc in enumerate(piv):
            v[pc] = -R[r][free]
        basis.append(v)
    return basis


def solve_linear(A, b, zero=None, one=None):
    """Solve ``A x = b`` exactly.

    Returns ``(x, kernel)``; ``x`` is ``None`` when the system is
    inconsistent.  Free variables are set to zero in ``x``.
    """
    if zero is None:
        zero, one = Fraction(0), Fraction(1)
    if len(A) != len(b):
        raise ValueError("row count of A must equal length of b")
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, piv = rref(aug, ncols + 1)
    if ncols in piv:
        x = None
    else:
        x = [zero] * ncols
        for r, pc in enumerate(piv):
            x[pc] = R[r][ncols]
    kernel = nullspace(A, ncols, zero, one)
    return x, kernel


def identity(n: int, zero=None, one=None):
    if zero is None:
        zero, one = Fraction(0), Fraction(1)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def invert_matrix(A, zero=None, one=None):
    """Exact inverse of a square matrix; raises ``Singular``."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("matrix is not square")
    if zero is None:
        zero, one = Fraction(0), Fraction(1)
    aug = [list(row) + e for row, e in zip(A, identity(n, zero, one))]
    R, piv = rref(aug, n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise Singular(f"matrix of size {n} has rank {sum(1 for c in piv if c < n)}")
    return [row[n:] for row in R[:n]]


def mat_mul(A, B):
    if not A:
        return []
    inner = len(B)
    if any(len(r) != inner for r in A):
        raise ValueError("shape mismatch")
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = None
            for k in range(inner):
                a = row[k]
                if a == 0:
                    continue
                t = a * B[k][j]
                acc = t if acc is None else acc + t
            new.append(acc if acc is not None else zero_of(B[0][j]))
        out.append(new)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        acc = None
        for a, x in zip(row, v):
            if a == 0 or x == 0:
                continue
            t = a * x
            acc = t if acc is None else acc + t
        out.append(acc if acc is not None else zero_of(v[0]))
    return out
