"""Brute-force check of the structure constants inside the crossed product.

A is the crossed product of L/K by the cup 2-cocycle phi(s,t) = zeta_p^e(s,t)
with e(s,t) = omega_Mvee(s) g0(t) f0(s).  An element is a tuple indexed by
the group: u = sum_s u[s] e_s, with e_s x = s(x) e_s and
e_s e_t = phi(s,t) e_st.

The commutant of {e_t : t in ker g0} inside B = sum_i L e_{rho^i} is found by
exact Q-linear algebra and compared with the algebra built from c.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .datum import GaloisDatum, SubgroupReport
from .errors import CocycleViolation, DimensionMismatch, MismatchReport
from .exactnum import nullspace, rref


def cup_cocycle(d: GaloisDatum, s: int, t: int) -> int:
    """Exponent of zeta_p in phi(s, t)."""
    return d.omega_Mvee[s] * d.g0[t] * d.f0[s] % d.p


def check_two_cocycle(d: GaloisDatum) -> int:
    """phi(s,t) phi(st,u) = s(phi(t,u)) phi(s,tu) on all of G^3, in exponent form."""
    p, G = d.p, d.order
    e = [[cup_cocycle(d, s, t) for t in range(G)] for s in range(G)]
    count = 0
    for s in range(G):
        for t in range(G):
            st = d.mul(s, t)
            for u in range(G):
                lhs = (e[s][t] + e[st][u]) % p
                rhs = (d.omega_cyc[s] * e[t][u] + e[s][d.mul(t, u)]) % p
                if lhs != rhs:
                    raise CocycleViolation(f"cup cocycle identity fails at (s,t,u)=({s},{t},{u})")
                count += 1
    return count


class CrossedProduct:
    def __init__(self, d: GaloisDatum):
        self.d = d
        self.p = d.p
        self.order = d.order
        self.L = d.field
        self.phi = [[cup_cocycle(d, s, t) for t in range(d.order)] for s in range(d.order)]
        self.zp = [d.zeta_p ** k for k in range(d.p)]

    @property
    def q_dimension(self) -> int:
        return self.order * self.L.n

    def zero(self):
        return (self.L.zero(),) * self.order

    def basis(self, s: int, x=None):
        v = [self.L.zero()] * self.order
        v[s] = self.L.one() if x is None else x
        return tuple(v)

    def scalar(self, x):
        return self.basis(0, x)

    def add(self, u, v):
        return tuple(a + b for a, b in zip(u, v))

    def sub(self, u, v):
        return tuple(a - b for a, b in zip(u, v))

    def scale(self, x, u):
        """Left multiplication by the field element (or rational) ``x``."""
        return tuple(x * a for a in u)

    def mul(self, u, v):
        out = list(self.zero())
        G = self.d.group
        T = self.d.table.table
        for s, x in enumerate(u):
            if x.is_zero():
                continue
            S = G[s]
            for t, y in enumerate(v):
                if y.is_zero():
                    continue
                term = x * S(y)
                e = self.phi[s][t]
                if e:
                    term = term * self.zp[e]
                st = T[s][t]
                out[st] = out[st] + term
        return tuple(out)

    def power(self, u, k: int):
        r = self.basis(0)
        for _ in range(k):
            r = self.mul(r, u)
        return r

    def is_zero(self, u) -> bool:
        return all(x.is_zero() for x in u)

    def check_associativity(self, full: bool = True, samples: int = 400, seed: int = 0) -> int:
        """(e_s (x e_t)) e_u = e_s ((x e_t) e_u) with x the generator of L."""
        G = self.order
        x = self.L.gen()
        if full or G <= 9:
            triples = [(s, t, u) for s in range(G) for t in range(G) for u in range(G)]
        else:
            rng = random.Random(seed)
            triples = [(rng.randrange(G), rng.randrange(G), rng.randrange(G)) for _ in range(samples)]
        for s, t, u in triples:
            es, xt, eu = self.basis(s), self.basis(t, x), self.basis(u)
            if self.mul(self.mul(es, xt), eu) != self.mul(es, self.mul(xt, eu)):
                raise CocycleViolation(f"crossed product not associative at ({s},{t},{u})")
        return len(triples)

    def q_coords(self, u):
        out = []
        for x in u:
            out.extend(x.coords)
        return out

    def q_rank(self, elements) -> int:
        if not elements:
            return 0
        return len(rref([self.q_coords(u) for u in elements])[1])


def build_crossed_product(d: GaloisDatum, check: bool = True, full: bool = True) -> CrossedProduct:
    A = CrossedProduct(d)
    if check:
        A.check_associativity(full=full)
    return A


# ------------------------------------------------------------------ the ideal

@dataclass
class IdealS:
    theta: tuple
    Lbasis: list
    L_rank: int
    q_dimension: int


def build_theta_ideal(A: CrossedProduct, sub: SubgroupReport, rho: int) -> IdealS:
    """S = A theta with theta = sum over ker g0 of e_t."""
    d = A.d
    theta = list(A.zero())
    for t in sub.ker_g0:
        theta[t] = A.L.one()
    theta = tuple(theta)
    for t in sub.ker_g0:
        if A.mul(A.basis(t), theta) != theta:
            raise DimensionMismatch(f"e_{t} theta != theta")
    all_vecs = [A.mul(A.basis(s), theta) for s in range(A.order)]
    L_rank = len(rref([list(v) for v in all_vecs])[1])
    Lbasis = []
    r = 0
    for _ in range(d.p):
        Lbasis.append(A.mul(A.basis(r), theta))
        r = d.mul(rho, r)
    if len(rref([list(v) for v in Lbasis])[1]) != d.p:
        raise DimensionMismatch("the p elements e_{rho^i} theta are not L-independent")
    if L_rank != d.p:
        raise DimensionMismatch(f"S has L-rank {L_rank}, expected {d.p}")
    return IdealS(theta, Lbasis, L_rank, L_rank * A.L.n)


# ------------------------------------------------------------- the commutant

@dataclass
class CommutantAlgebra:
    basis: list
    q_dimension: int
    k_dimension: int
    rho_powers: list
    ker_g0: list


def _rho_powers(d: GaloisDatum, rho: int):
    out = [0]
    for _ in range(d.p - 1):
        out.append(d.mul(rho, out[-1]))
    return out


def commutant_oracle(A: CrossedProduct, sub: SubgroupReport, rho: int, k_degree: int) -> CommutantAlgebra:
    """All b in B = sum_i L e_{rho^i} with e_t b = b e_t for every t in ker g0."""
    d = A.d
    n = A.L.n
    rp = _rho_powers(d, rho)
    gens = sorted(sub.ker_g0 - {0})
    monomials = []
    for r in rp:
        for k in range(n):
            coords = [0] * n
            coords[k] = 1
            monomials.append(A.basis(r, A.L.element(coords)))
    columns = []
    for b in monomials:
        col = []
        for t in gens:
            et = A.basis(t)
            col.extend(A.q_coords(A.sub(A.mul(et, b), A.mul(b, et))))
        columns.append(col)
    rows = [list(r) for r in zip(*columns)] if columns and columns[0] else []
    rows = [r for r in rows if any(r)]
    kernel = nullspace(rows, len(monomials))
    basis = []
    for vec in kernel:
        el = list(A.zero())
        for i, r in enumerate(rp):
            el[r] = A.L.element(vec[i * n:(i + 1) * n])
        basis.append(tuple(el))
    qdim = len(basis)
    if qdim % k_degree:
        raise DimensionMismatch(f"commutant Q-dimension {qdim} is not a multiple of [K:Q] = {k_degree}")
    kdim = qdim // k_degree
    if kdim != d.p ** 2:
        raise DimensionMismatch(f"commutant has K-dimension {kdim}, expected {d.p ** 2}")
    return CommutantAlgebra(basis, qdim, kdim, rp, sorted(sub.ker_g0))


def in_commutant(A: CrossedProduct, comm: CommutantAlgebra, b) -> bool:
    allowed = set(comm.rho_powers)
    if any(not x.is_zero() for s, x in enumerate(b) if s not in allowed):
        return False
    for t in comm.ker_g0:
        et = A.basis(t)
        if A.mul(et, b) != A.mul(b, et):
            return False
    return True


def check_closure(A: CrossedProduct, comm: CommutantAlgebra, full: bool = True,
                  samples: int = 60, seed: int = 0) -> int:
    """Products of commutant basis elements stay in the commutant; returns pairs checked."""
    B = comm.basis
    pairs = [(i, j) for i in range(len(B)) for j in range(len(B))]
    if not full and len(pairs) > samples:
        rng = random.Random(seed)
        pairs = rng.sample(pairs, samples)
    for i, j in pairs:
        if not in_commutant(A, comm, A.mul(B[i], B[j])):
            raise DimensionMismatch(f"commutant not closed: product of basis {i} and {j}")
    if not in_commutant(A, comm, A.basis(0)):
        raise DimensionMismatch("commutant does not contain the unit")
    return len(pairs)


# ------------------------------------------------------------ the comparison

def z_element(A: CrossedProduct, ctx) -> tuple:
    """z_B = p^-1 sum_i a_i e_{rho^i}."""
    el = list(A.zero())
    r = 0
    for i in range(ctx.p):
        el[r] = el[r] + ctx.a[i] / ctx.p
        r = A.d.mul(ctx.rho, r)
    return tuple(el)


def z_power_check(A: CrossedProduct, ctx) -> dict:
    """z_B^j = p^-1 sum_k h_jk e_{rho^k} for 0 <= j < p."""
    z = z_element(A, ctx)
    rp = _rho_powers(A.d, ctx.rho)
    zj = A.basis(0)
    for j in range(ctx.p):
        expect = list(A.zero())
        for k in range(ctx.p):
            expect[rp[k]] = expect[rp[k]] + ctx.h[j][k] / ctx.p
        if zj != tuple(expect):
            return {"pass": False, "first_failure": j}
        zj = A.mul(zj, z)
    return {"pass": True, "first_failure": None}


def _first_difference(lhs, rhs):
    for s, (x, y) in enumerate(zip(lhs, rhs)):
        if x != y:
            for k, (a, b) in enumerate(zip(x.coords, y.coords)):
                if a != b:
                    return {"group_index": s, "coordinate": k, "lhs": str(a), "rhs": str(b)}
    return None


def compare_with_theorem(A: CrossedProduct, comm: CommutantAlgebra, ctx, c=None) -> dict:
    """Check z_B beta = sum c_ij beta^i z_B^j in B and that beta, z_B generate the commutant.

    ``c`` overrides the structure constants (negative controls).
    """
    p = ctx.p
    c = ctx.c if c is None else c
    z = z_element(A, ctx)
    beta = A.scalar(ctx.beta)
    if not in_commutant(A, comm, z):
        raise MismatchReport("z_B does not commute with e_t for t in ker g0")
    if not in_commutant(A, comm, beta):
        raise MismatchReport("beta does not commute with e_t for t in ker g0")

    zp = [A.basis(0)]
    for _ in range(p):
        zp.append(A.mul(zp[-1], z))
    bp = [A.L.one()]
    for _ in range(p - 1):
        bp.append(bp[-1] * ctx.beta)

    lhs = A.mul(z, beta)
    rhs = A.zero()
    for i in range(p):
        for j in range(p):
            if not c[i][j].is_zero():
                rhs = A.add(rhs, A.scale(c[i][j] * bp[i], zp[j]))
    if lhs != rhs:
        raise MismatchReport("z_B beta differs from sum c_ij beta^i z_B^j",
                             witness=_first_difference(lhs, rhs))

    # minimal polynomial of z_B over K equals that of alpha
    acc = A.zero()
    for k, q in enumerate(ctx.minpoly_alpha):
        acc = A.add(acc, A.scale(q, zp[k]))
    if not A.is_zero(acc):
        raise MismatchReport("minimal polynomial of alpha does not annihilate z_B")
    K_basis = ctx.K.qbasis
    low = [A.scale(w, zp[k]) for k in range(p) for w in K_basis]
    if A.q_rank(low) != p * len(K_basis):
        raise MismatchReport("z_B satisfies a relation of degree < p over K")

    # beta^i z_B^j span the commutant
    span = [A.scale(w * bp[i], zp[j]) for i in range(p) for j in range(p) for w in K_basis]
    if A.q_rank(span) != comm.q_dimension:
        raise MismatchReport("beta^i z_B^j do not span the commutant")
    return {
        "relation": True,
        "minpoly_equal": True,
        "spans_commutant": True,
    }


def corrupt(c, i: int, j: int):
    """Copy of ``c`` with 1 added to entry (i, j)."""
    out = [list(row) for row in c]
    out[i][j] = out[i][j] + 1
    return out


def run_oracle(d: GaloisDatum, sub: SubgroupReport, ctx, full: bool = True, corrupt_at=None) -> dict:
    from .theorem import property_checks
    A = build_crossed_product(d, check=False)
    cocycle_triples = check_two_cocycle(d)
    assoc = A.check_associativity(full=full)
    S = build_theta_ideal(A, sub, ctx.rho)
    comm = commutant_oracle(A, sub, ctx.rho, len(ctx.K.qbasis))
    closure = check_closure(A, comm, full=full)
    c = corrupt(ctx.c, *corrupt_at) if corrupt_at else None
    zpc = z_power_check(A, ctx)
    props = property_checks(d, sub, ctx)
    comparison = compare_with_theorem(A, comm, ctx, c)
    return {
        "phi": A.phi,
        "cocycle_triples_checked": cocycle_triples,
        "associativity_triples_checked": assoc,
        "q_dimension_A": A.q_dimension,
        "S_L_rank": S.L_rank,
        "S_q_dimension": S.q_dimension,
        "commutant_q_dimension": comm.q_dimension,
        "commutant_k_dimension": comm.k_dimension,
        "closure_pairs_checked": closure,
        "z_power_check": zpc,
        "convolution_identity": props["convolution"],
        "comparison": comparison,
    }
