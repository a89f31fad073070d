"""Galois data: a finite Galois extension L/K inside one number field,
a character for the module M = Z/p, and two cocycle tables.

M is Z/p with Galois action s.m = omega_M(s) m.  Its dual is Z/p with
action omega_Mvee = omega_cyc / omega_M, where omega_cyc is read off from
s(zeta_p) = zeta_p^omega_cyc(s).  Cocycles are additive exponent tables.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import (BadZeta, CocycleViolation, NotAGroup, NotClosed, SchemaError,
                     StructureViolation)
from .exactnum import format_rational, parse_rational
from .fieldtower import Automorphism, EmbeddedField, FieldL, group_table, fixed_subspace

GENERIC = "Generic"
EQUAL_KERNELS = "EqualKernels"

_KEYS = ("p", "modulus", "automorphisms", "zeta_p", "omega_M", "f0", "g0")
_OPTIONAL = ("name", "description")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class GaloisDatum:
    p: int
    field: FieldL
    group: tuple          # Automorphism, index 0 is the identity
    table: object         # GroupTable
    zeta_p: object
    omega_M: tuple
    f0: tuple
    g0: tuple
    omega_cyc: tuple
    omega_Mvee: tuple
    name: str | None = None

    @property
    def order(self) -> int:
        return len(self.group)

    @property
    def degree(self) -> int:
        return self.field.n

    def mul(self, i: int, j: int) -> int:
        return self.table.table[i][j]

    def inv(self, i: int) -> int:
        return self.table.inverse[i]

    def power(self, i: int, k: int) -> int:
        r = 0
        for _ in range(k % self.order_of(i)):
            r = self.mul(i, r)
        return r

    def order_of(self, i: int) -> int:
        k, r = 1, i
        while r != 0:
            r = self.mul(i, r)
            k += 1
        return k

    def zeta_power(self, e: int):
        return self.zeta_p ** (e % self.p)

    def to_json(self) -> dict:
        doc = {}
        if self.name:
            doc["name"] = self.name
        doc.update({
            "p": self.p,
            "modulus": [format_rational(c) for c in self.field.modulus.coeffs],
            "automorphisms": [s.image.to_json() for s in self.group],
            "zeta_p": self.zeta_p.to_json(),
            "omega_M": list(self.omega_M),
            "f0": list(self.f0),
            "g0": list(self.g0),
        })
        return doc


def _int_list(doc, key, length, p):
    vals = doc[key]
    if not isinstance(vals, list) or len(vals) != length:
        raise SchemaError(f"'{key}' must be a list of {length} integers")
    for v in vals:
        if isinstance(v, bool) or not isinstance(v, int):
            raise SchemaError(f"'{key}' entries must be integers, got {v!r}")
    return tuple(v % p for v in vals)


def _rat_list(doc, key, length=None):
    vals = doc[key]
    if not isinstance(vals, list) or (length is not None and len(vals) != length):
        want = f"{length} " if length is not None else ""
        raise SchemaError(f"'{key}' must be a list of {want}rationals")
    try:
        return [parse_rational(v) for v in vals]
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational in '{key}': {exc}") from None


def load_datum(document) -> GaloisDatum:
    """Parse and validate a datum from a dict, JSON text or file path."""
    if isinstance(document, Path) or (isinstance(document, str) and not document.lstrip().startswith("{")):
        try:
            document = Path(document).read_text()
        except OSError as exc:
            raise SchemaError(f"cannot read datum: {exc}") from None
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise SchemaError("datum must be a JSON object")
    missing = [k for k in _KEYS if k not in document]
    if missing:
        raise SchemaError(f"missing keys: {', '.join(missing)}")
    extra = [k for k in document if k not in _KEYS + _OPTIONAL]
    if extra:
        raise SchemaError(f"unknown keys: {', '.join(extra)}")

    p = document["p"]
    if isinstance(p, bool) or not isinstance(p, int) or not _is_prime(p):
        raise SchemaError(f"'p' must be a prime integer, got {p!r}")
    modulus = _rat_list(document, "modulus")
    if len(modulus) < 2 or modulus[-1] != 1:
        raise SchemaError("'modulus' must be monic of degree >= 1")
    field = FieldL(modulus)
    n = field.n

    autos_raw = document["automorphisms"]
    if not isinstance(autos_raw, list) or not autos_raw:
        raise SchemaError("'automorphisms' must be a nonempty list")
    group = []
    for k, raw in enumerate(autos_raw):
        if not isinstance(raw, list) or len(raw) != n:
            raise SchemaError(f"automorphism {k} must list {n} rationals")
        img = field.element(_rat_list({"a": raw}, "a"))
        try:
            group.append(Automorphism(img))
        except ValueError:
            raise NotAGroup(f"automorphism {k} does not map the generator to a root of the modulus") from None
    if not group[0].is_identity():
        raise NotAGroup("automorphism 0 must be the identity")
    try:
        table = group_table(group)
    except NotClosed as exc:
        raise NotAGroup(str(exc)) from None
    order = len(group)

    zeta = field.element(_rat_list(document, "zeta_p", n))
    if zeta == 1 or zeta ** p != 1:
        raise BadZeta("zeta_p must be a primitive p-th root of unity")
    zpows = [zeta ** k for k in range(p)]
    omega_cyc = []
    for k, s in enumerate(group):
        img = s(zeta)
        try:
            omega_cyc.append(zpows.index(img))
        except ValueError:
            raise BadZeta(f"automorphism {k} does not map zeta_p to a power of itself") from None

    omega_M = _int_list(document, "omega_M", order, p)
    f0 = _int_list(document, "f0", order, p)
    g0 = _int_list(document, "g0", order, p)
    if any(w == 0 for w in omega_M):
        raise CocycleViolation("omega_M must take values in (Z/p)^x")
    omega_Mvee = tuple(c * pow(w, -1, p) % p for c, w in zip(omega_cyc, omega_M))

    T = table.table
    for s in range(order):
        for t in range(order):
            st = T[s][t]
            if omega_M[st] != omega_M[s] * omega_M[t] % p:
                raise CocycleViolation(f"omega_M is not a homomorphism at (s,t)=({s},{t})")
            if f0[st] != (f0[s] + omega_M[s] * f0[t]) % p:
                raise CocycleViolation(
                    f"f0(st) != f0(s) + omega_M(s) f0(t) at (s,t)=({s},{t})")
            if g0[st] != (g0[s] + omega_Mvee[s] * g0[t]) % p:
                raise CocycleViolation(
                    f"g0(st) != g0(s) + omega_Mvee(s) g0(t) at (s,t)=({s},{t})")
    if all(f0[s] == 0 for s in range(order) if omega_M[s] == 1):
        raise CocycleViolation("f is the zero class")
    if all(g0[s] == 0 for s in range(order) if omega_Mvee[s] == 1):
        raise CocycleViolation("g is the zero class")

    return GaloisDatum(p, field, tuple(group), table, zeta, omega_M, f0, g0,
                       tuple(omega_cyc), omega_Mvee, document.get("name"))


@dataclass(frozen=True)
class SubgroupReport:
    H_M: frozenset
    H_Mvee: frozenset
    ker_f0: frozenset
    ker_g0: frozenset
    N_f: frozenset
    N_g: frozenset
    N: frozenset

    def to_json(self) -> dict:
        return {k: sorted(getattr(self, k)) for k in
                ("H_M", "H_Mvee", "ker_f0", "ker_g0", "N_f", "N_g", "N")}


def _is_normal(d: GaloisDatum, H) -> bool:
    return all(d.mul(d.mul(g, h), d.inv(g)) in H for g in range(d.order) for h in H)


def subgroups(d: GaloisDatum) -> SubgroupReport:
    G = range(d.order)
    H_M = frozenset(s for s in G if d.omega_M[s] == 1)
    H_Mvee = frozenset(s for s in G if d.omega_Mvee[s] == 1)
    ker_f0 = frozenset(s for s in G if d.f0[s] == 0)
    ker_g0 = frozenset(s for s in G if d.g0[s] == 0)
    N_f = H_M & ker_f0
    N_g = H_Mvee & ker_g0
    rep = SubgroupReport(H_M, H_Mvee, ker_f0, ker_g0, N_f, N_g, N_f & N_g)
    p = d.p
    for label, H in (("N_f", N_f), ("N_g", N_g)):
        if not _is_normal(d, H):
            raise StructureViolation(f"{label} is not normal in G")
    if len(H_M) != p * len(N_f):
        raise StructureViolation(f"|H_M / N_f| = {len(H_M)}/{len(N_f)}, expected {p}")
    if len(H_Mvee) != p * len(N_g):
        raise StructureViolation(f"|H_Mvee / N_g| = {len(H_Mvee)}/{len(N_g)}, expected {p}")
    for label, H in (("ker f0", ker_f0), ("ker g0", ker_g0)):
        if d.order != p * len(H):
            raise StructureViolation(f"{label} has index {d.order}/{len(H)}, expected {p}")
    return rep


@dataclass(frozen=True)
class Minimality:
    minimal: bool
    N: frozenset

    @property
    def tag(self) -> str:
        return "Minimal" if self.minimal else "NonMinimal"


def check_minimal(d: GaloisDatum, sub: SubgroupReport | None = None) -> Minimality:
    sub = sub or subgroups(d)
    return Minimality(len(sub.N) == 1, sub.N)


def check_degree_bound(d: GaloisDatum) -> None:
    """For minimal data, |G| divides p^2 (p-1)^2."""
    bound = d.p ** 2 * (d.p - 1) ** 2
    if bound % d.order:
        raise StructureViolation(f"|G| = {d.order} does not divide p^2(p-1)^2 = {bound}")


def detect_special(d: GaloisDatum, sub: SubgroupReport | None = None) -> str:
    sub = sub or subgroups(d)
    return EQUAL_KERNELS if sub.N_f == sub.N_g else GENERIC


def reduce_datum(d: GaloisDatum, sub: SubgroupReport | None = None) -> GaloisDatum:
    """Pass to the fixed field of N, with G/N acting on it."""
    sub = sub or subgroups(d)
    N = sub.N
    if len(N) == 1:
        return d
    if len(N) == d.order:
        raise StructureViolation("N is the whole group; the cocycles would be trivial")
    basis = fixed_subspace([d.group[i] for i in sorted(N)])
    sub_field = EmbeddedField(basis)
    reps, seen = [], set()
    for s in range(d.order):
        if s in seen:
            continue
        coset = {d.mul(s, n) for n in N}
        seen |= coset
        reps.append(s)
    gamma = sub_field.gamma
    doc = {}
    if d.name:
        doc["name"] = f"{d.name}_reduced"
    doc.update({
        "p": d.p,
        "modulus": [format_rational(c) for c in sub_field.field.modulus.coeffs],
        "automorphisms": [sub_field.restrict(d.group[s](gamma)).to_json() for s in reps],
        "zeta_p": sub_field.restrict(d.zeta_p).to_json(),
        "omega_M": [d.omega_M[s] for s in reps],
        "f0": [d.f0[s] for s in reps],
        "g0": [d.g0[s] for s in reps],
    })
    return load_datum(doc)
