"""Arithmetic in a number field L = Q[x]/(m) and in its subfields.

Every field that occurs (the base K, the fields cut out by cocycle kernels,
fixed fields of cyclic subgroups) is handled as a Q-subspace of one ambient
``FieldL``; no compositum is ever built.

Elements keep integer numerators over a single positive denominator, which
makes products in degree 18 cheap enough for the brute-force checks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import BasisDegenerate, NotClosed, NotInK, NotInvertible, SearchExhausted
from .exactnum import (Polynomial, format_rational, invert_matrix, nullspace,
                       parse_rational, poly_gcd_ext, rref, solve_linear)

DEFAULT_HEIGHT = 6


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class FieldL:
    """The number field Q[x]/(modulus); ``modulus`` must be monic."""

    __slots__ = ("modulus", "n", "_low", "_dm", "_zero", "_one")

    def __init__(self, modulus: Polynomial | Sequence):
        if not isinstance(modulus, Polynomial):
            modulus = Polynomial(modulus)
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if modulus.lead != 1:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self.n = modulus.degree
        low = modulus.coeffs[:self.n]
        dm = 1
        for c in low:
            dm = _lcm(dm, c.denominator)
        self._dm = dm
        self._low = tuple(int(c * dm) for c in low)
        self._zero = FieldElement._make(self, (0,) * self.n, 1)
        self._one = FieldElement._make(self, (1,) + (0,) * (self.n - 1), 1)

    def __eq__(self, other):
        return isinstance(other, FieldL) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"FieldL(degree={self.n})"

    def zero(self) -> "FieldElement":
        return self._zero

    def one(self) -> "FieldElement":
        return self._one

    def gen(self) -> "FieldElement":
        if self.n == 1:
            return self.scalar(-self.modulus.coeffs[0])
        return self.element([0, 1])

    def scalar(self, q) -> "FieldElement":
        q = Fraction(q)
        return self._normalize([q.numerator] + [0] * (self.n - 1), q.denominator)

    def element(self, coords: Sequence) -> "FieldElement":
        qs = [Fraction(c) if not isinstance(c, str) else parse_rational(c) for c in coords]
        if len(qs) > self.n:
            # allow unreduced input, e.g. a polynomial of higher degree
            return self.from_poly(Polynomial(qs))
        qs += [Fraction(0)] * (self.n - len(qs))
        den = 1
        for q in qs:
            den = _lcm(den, q.denominator)
        return self._normalize([int(q * den) for q in qs], den)

    def from_poly(self, poly: Polynomial) -> "FieldElement":
        den = 1
        for q in poly.coeffs:
            den = _lcm(den, q.denominator)
        return self._reduce([int(q * den) for q in poly.coeffs], den)

    def from_json(self, data) -> "FieldElement":
        if len(data) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(data)}")
        return self.element([parse_rational(c) for c in data])

    def _normalize(self, nums, den) -> "FieldElement":
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        g = gcd(den, *nums)
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
        return FieldElement._make(self, tuple(nums), den)

    def _reduce(self, poly, den) -> "FieldElement":
        n = self.n
        P = list(poly)
        if len(P) > n:
            low, dm = self._low, self._dm
            for k in range(len(P) - 1, n - 1, -1):
                c = P[k]
                if not c:
                    continue
                if dm != 1:
                    P = [x * dm for x in P]
                    den *= dm
                base = k - n
                P[k] = 0
                for i in range(n):
                    if low[i]:
                        P[base + i] -= c * low[i]
            P = P[:n]
        else:
            P += [0] * (n - len(P))
        return self._normalize(P, den)


class FieldElement:
    """Element of a ``FieldL``; immutable and hashable."""

    __slots__ = ("field", "num", "den")

    @classmethod
    def _make(cls, field, num, den):
        obj = object.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        return obj

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, bool) else None
        if o is None:
            return NotImplemented
        return self.den == o.den and self.num == o.num

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.field._normalize([a + b for a, b in zip(self.num, o.num)], self.den)
        return self.field._normalize(
            [a * o.den + b * self.den for a, b in zip(self.num, o.num)], self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._make(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return self.field._normalize([a * q.numerator for a in self.num],
                                         self.den * q.denominator)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        A, B = self.num, o.num
        n = len(A)
        P = [0] * (2 * n - 1)
        for i, a in enumerate(A):
            if a:
                for j, b in enumerate(B):
                    if b:
                        P[i + j] += a * b
        return self.field._reduce(P, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise NotInvertible("zero is not invertible")
        a = Polynomial(self.coords)
        g, u, _ = poly_gcd_ext(a, self.field.modulus)
        if g.degree != 0:
            raise NotInvertible(
                f"element shares a factor of degree {g.degree} with the modulus; "
                "the modulus is not irreducible")
        return self.field.from_poly(u)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __repr__(self):
        return "FieldElement([" + ", ".join(format_rational(c) for c in self.coords) + "])"

    def to_json(self):
        return [format_rational(c) for c in self.coords]


def elem_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def elem_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


class Automorphism:
    """Field automorphism fixed by the image of the generator of L.

    The images of 1, x, ..., x^(n-1) are cached as integer columns so that
    applying the map is a single matrix-vector product.
    """

    __slots__ = ("field", "image", "_cols", "_den")

    def __init__(self, image: FieldElement, check: bool = True):
        field = image.field
        self.field = field
        self.image = image
        if check and not field.modulus(image).is_zero():
            raise ValueError("generator image is not a root of the modulus")
        powers = [field.one()]
        for _ in range(field.n - 1):
            powers.append(powers[-1] * image)
        den = 1
        for pw in powers:
            den = _lcm(den, pw.den)
        self._den = den
        self._cols = tuple(tuple(x * (den // pw.den) for x in pw.num) for pw in powers)

    def __call__(self, a: FieldElement) -> FieldElement:
        n = self.field.n
        out = [0] * n
        for ak, col in zip(a.num, self._cols):
            if ak:
                for i in range(n):
                    if col[i]:
                        out[i] += ak * col[i]
        return self.field._normalize(out, a.den * self._den)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self ∘ other``: apply ``other`` first."""
        return Automorphism(self(other.image), check=False)

    def matrix(self):
        """Rational matrix M with M @ coords(a) == coords(self(a))."""
        n = self.field.n
        return [[Fraction(self._cols[k][i], self._den) for k in range(n)] for i in range(n)]

    def is_identity(self) -> bool:
        return self.image == self.field.gen()

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Automorphism(x -> {self.image!r})"


def apply_aut(s: Automorphism, a: FieldElement) -> FieldElement:
    return s(a)


def compose(s: Automorphism, t: Automorphism) -> Automorphism:
    return s.compose(t)


@dataclass(frozen=True)
class GroupTable:
    table: tuple          # table[i][j] = index of auts[i] ∘ auts[j]
    identity: int
    inverse: tuple


def group_table(auts: Sequence[Automorphism]) -> GroupTable:
    """Composition table of a finite list of automorphisms; raises NotClosed."""
    index = {a.image: i for i, a in enumerate(auts)}
    if len(index) != len(auts):
        raise NotClosed("automorphism list contains duplicates")
    table = []
    for i, s in enumerate(auts):
        row = []
        for j, t in enumerate(auts):
            img = s(t.image)
            k = index.get(img)
            if k is None:
                raise NotClosed(f"composition of automorphisms {i} and {j} is not in the list")
            row.append(k)
        table.append(tuple(row))
    gen = auts[0].field.gen()
    ident = index.get(gen)
    if ident is None:
        raise NotClosed("identity automorphism missing")
    inverse = []
    for i in range(len(auts)):
        inv = [j for j in range(len(auts)) if table[i][j] == ident]
        if not inv:
            raise NotClosed(f"automorphism {i} has no inverse in the list")
        inverse.append(inv[0])
    return GroupTable(tuple(table), ident, tuple(inverse))


# --------------------------------------------------------------- subspaces

def _as_fraction_matrix(vectors: Sequence[FieldElement]):
    """Columns = coordinates of the given elements."""
    n = vectors[0].field.n
    cols = [v.coords for v in vectors]
    return [[cols[j][i] for j in range(len(cols))] for i in range(n)]


def fixed_subspace(auts: Iterable[Automorphism], field: FieldL | None = None):
    """Q-basis of the elements fixed by every automorphism in ``auts``."""
    auts = list(auts)
    if not auts:
        raise ValueError("need at least one automorphism")
    field = auts[0].field
    n = field.n
    rows = []
    for s in auts:
        if s.is_identity():
            continue
        M = s.matrix()
        for i in range(n):
            rows.append([M[i][k] - (1 if i == k else 0) for k in range(n)])
    basis = nullspace(rows, n)
    return [field.element(v) for v in basis]


def stabilizer(v: FieldElement, group: Sequence[Automorphism]) -> frozenset:
    return frozenset(i for i, s in enumerate(group) if s(v) == v)


def _candidates(basis, max_height):
    """Integer combinations of ``basis`` by increasing max-norm.

    Within a height, vectors are ordered lexicographically with the first
    coordinate least significant and values ranked 0, 1, -1, 2, -2, ...
    """
    d = len(basis)
    for h in range(1, max_height + 1):
        values = [0]
        for k in range(1, h + 1):
            values += [k, -k]
        for tup in itertools.product(values, repeat=d):
            vec = tup[::-1]
            if max(abs(x) for x in vec) != h:
                continue
            yield vec


def _combine(basis, vec):
    acc = basis[0].field.zero()
    for c, b in zip(vec, basis):
        if c:
            acc = acc + b * c
    return acc


def primitive_element(H: Iterable[int], group: Sequence[Automorphism],
                      basis=None, max_height: int = DEFAULT_HEIGHT) -> FieldElement:
    """Element of L^H whose stabilizer in ``group`` is exactly ``H``."""
    H = frozenset(H)
    if basis is None:
        basis = fixed_subspace([group[i] for i in sorted(H)])
    for vec in _candidates(basis, max_height):
        v = _combine(basis, vec)
        if stabilizer(v, group) == H:
            return v
    raise SearchExhausted(f"no primitive element of height <= {max_height}")


def relative_trace(v: FieldElement, H: Iterable[int], group: Sequence[Automorphism]) -> FieldElement:
    """Trace from L^H down to the fixed field of ``group``: (1/|H|) sum_G s(v)."""
    H = list(H)
    acc = v.field.zero()
    for s in group:
        acc = acc + s(v)
    return acc / len(H)


def trace_adjust(v: FieldElement, H: Iterable[int], group: Sequence[Automorphism]) -> FieldElement:
    """Shift ``v`` by a base-field element so its relative trace vanishes."""
    H = list(H)
    index = len(group) // len(H)
    return v - relative_trace(v, H, group) / index


def minpoly_over(v: FieldElement, K_basis: Sequence[FieldElement]):
    """Monic minimal polynomial of ``v`` over the subfield spanned by ``K_basis``.

    Returned as ascending coefficient list of FieldElements lying in K.
    """
    field = v.field
    powers = [field.one()]
    while True:
        k = len(powers)
        columns = [w * powers[i] for i in range(k) for w in K_basis]
        target = powers[-1] * v
        A = _as_fraction_matrix(columns)
        x, _ = solve_linear(A, list(target.coords))
        if x is not None:
            coeffs = []
            for i in range(k):
                ci = field.zero()
                for j, w in enumerate(K_basis):
                    q = x[i * len(K_basis) + j]
                    if q:
                        ci = ci + w * q
                coeffs.append(-ci)
            coeffs.append(field.one())
            return coeffs
        powers.append(target)
        if k > field.n:
            raise ArithmeticError("no dependence found; inconsistent field data")


def minpoly_over_Q(v: FieldElement) -> Polynomial:
    coeffs = minpoly_over(v, [v.field.one()])
    return Polynomial([c.rational() for c in coeffs])


def express_in_power_basis(a: FieldElement, beta: FieldElement,
                           F_basis: Sequence[FieldElement], p: int):
    """Write ``a = sum_i c_i beta^i`` with every ``c_i`` in span(F_basis)."""
    field = a.field
    columns = []
    bp = field.one()
    for _ in range(p):
        columns += [w * bp for w in F_basis]
        bp = bp * beta
    if len(columns) != field.n:
        raise BasisDegenerate(
            f"{p} powers times a basis of size {len(F_basis)} cannot span degree {field.n}")
    A = _as_fraction_matrix(columns)
    x, kernel = solve_linear(A, list(a.coords))
    if x is None or kernel:
        raise BasisDegenerate("powers of beta do not form a basis over the fixed field")
    out = []
    d = len(F_basis)
    for i in range(p):
        ci = field.zero()
        for j, w in enumerate(F_basis):
            q = x[i * d + j]
            if q:
                ci = ci + w * q
        out.append(ci)
    return out


@dataclass(frozen=True)
class Subfield:
    defining_subgroup: frozenset
    qbasis: tuple
    primitive: FieldElement
    minpoly_over_K: tuple

    @property
    def degree_over_Q(self) -> int:
        return len(self.qbasis)

    def contains(self, x: FieldElement, group: Sequence[Automorphism]) -> bool:
        return all(group[i](x) == x for i in self.defining_subgroup)


def make_subfield(H: Iterable[int], group: Sequence[Automorphism],
                  K_basis: Sequence[FieldElement], trace_zero: bool = False,
                  max_height: int = DEFAULT_HEIGHT) -> Subfield:
    H = frozenset(H)
    basis = fixed_subspace([group[i] for i in sorted(H)])
    prim = primitive_element(H, group, basis, max_height)
    if trace_zero:
        prim = trace_adjust(prim, H, group)
    mp = minpoly_over(prim, K_basis)
    return Subfield(H, tuple(basis), prim, tuple(mp))


class EmbeddedField:
    """A subfield F of L given by a Q-basis, modelled as its own small FieldL.

    ``restrict`` maps an element of F (inside L) to the small model and
    ``embed`` maps back.  The model is generated by the first integer
    combination of the basis whose degree over Q equals dim F, unless one of
    the ``preferred`` elements lies in F and already has that degree.
    """

    def __init__(self, qbasis: Sequence[FieldElement], max_height: int = DEFAULT_HEIGHT,
                 preferred: Sequence[FieldElement] = ()):
        self.ambient = qbasis[0].field
        self.qbasis = tuple(qbasis)
        d = len(qbasis)
        gamma = None
        A = _as_fraction_matrix(list(qbasis))
        for v in preferred:
            if solve_linear(A, list(v.coords))[0] is None:
                continue
            mp = minpoly_over_Q(v)
            if mp.degree == d:
                gamma, poly = v, mp
                break
        candidates = (_combine(qbasis, vec) for vec in _candidates(qbasis, max_height))
        for v in candidates if gamma is None else ():
            mp = minpoly_over_Q(v)
            if mp.degree == d:
                gamma, poly = v, mp
                break
        if gamma is None:
            raise SearchExhausted("no generator found for the subfield")
        self.gamma = gamma
        self.field = FieldL(poly)
        self.powers = [self.ambient.one()]
        for _ in range(d - 1):
            self.powers.append(self.powers[-1] * gamma)
        PT = [list(pw.coords) for pw in self.powers]          # d x n
        _, piv = rref(PT)
        self._rows = piv
        S = [[PT[k][i] for k in range(d)] for i in piv]
        self._Sinv = invert_matrix(S)

    @property
    def degree(self) -> int:
        return self.field.n

    def restrict(self, x: FieldElement) -> FieldElement:
        coords = x.coords
        rhs = [coords[i] for i in self._rows]
        q = [sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in self._Sinv]
        y = self.field.element(q)
        if self.embed(y) != x:
            raise NotInK("element does not lie in the subfield")
        return y

    def embed(self, y: FieldElement) -> FieldElement:
        acc = self.ambient.zero()
        for q, pw in zip(y.coords, self.powers):
            if q:
                acc = acc + pw * q
        return acc

    def contains(self, x: FieldElement) -> bool:
        try:
            self.restrict(x)
        except NotInK:
            return False
        return True
