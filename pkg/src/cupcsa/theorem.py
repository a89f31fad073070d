"""Structure constants of the degree-p algebra D attached to a cocycle pair.

D has K-basis beta^i z^j (0 <= i, j < p), where beta generates the field cut
out by ker g0, z satisfies the minimal polynomial of alpha (the generator of
the field cut out by ker f0), and

    z beta = sum_{i,j} c_ij beta^i z^j,   c = X Z^-1,
    X = (a_k m_ik),  Z = (h_ik),  h_ij = sum_l zeta^(j l) sigma^l(alpha^i),

with a_k = h_1k and rho^k(beta) = sum_i m_ik beta^i.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .datum import GENERIC, GaloisDatum, SubgroupReport, check_minimal, detect_special, subgroups
from .errors import AssociativityFailure, NotInK, RewritingCycle, StructureViolation
from .exactnum import invert_matrix, mat_mul, nullspace, rref, solve_linear
from .fieldtower import (EmbeddedField, express_in_power_basis, fixed_subspace, minpoly_over,
                         primitive_element, stabilizer, trace_adjust)


@dataclass
class TheoremContext:
    p: int
    sigma: int
    rho: int
    zeta_exponent: int
    zeta: object
    alpha: object
    beta: object
    a: list
    h: list
    m: list
    c: list
    K: EmbeddedField
    F_basis: list
    minpoly_alpha: list
    minpoly_beta: list
    alpha_normalized: bool = False
    beta_normalized: bool = False
    notes: list = dc_field(default_factory=list)

    def c_K(self):
        """Structure constants as elements of the small model of K."""
        return [[self.K.restrict(x) for x in row] for row in self.c]

    def to_json(self) -> dict:
        def mat(M):
            return [[x.to_json() for x in row] for row in M]
        return {
            "sigma": self.sigma,
            "rho": self.rho,
            "zeta_exponent": self.zeta_exponent,
            "zeta": self.zeta.to_json(),
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "alpha_eigenvector": self.alpha_normalized,
            "beta_eigenvector": self.beta_normalized,
            "K_modulus": self.K.field.modulus.to_json(),
            "K_generator": self.K.gamma.to_json(),
            "minpoly_alpha_over_K": [self.K.restrict(x).to_json() for x in self.minpoly_alpha],
            "minpoly_beta_over_K": [self.K.restrict(x).to_json() for x in self.minpoly_beta],
            "a": [x.to_json() for x in self.a],
            "h": mat(self.h),
            "m": mat(self.m),
            "c": mat(self.c),
            "c_in_K": mat(self.c_K()),
        }


# ----------------------------------------------------------------- selection

def select_sigma_rho(d: GaloisDatum, sub: SubgroupReport):
    """Lowest-index non-identity elements of H_M & N_g and H_Mvee & N_f."""
    cand_s = sorted((sub.H_M & sub.N_g) - {0})
    cand_r = sorted((sub.H_Mvee & sub.N_f) - {0})
    if not cand_s:
        raise StructureViolation("H_M & N_g is trivial; no choice of sigma")
    if not cand_r:
        raise StructureViolation("H_Mvee & N_f is trivial; no choice of rho")
    sigma, rho = cand_s[0], cand_r[0]
    for label, x in (("sigma", sigma), ("rho", rho)):
        if d.order_of(x) != d.p:
            raise StructureViolation(f"{label} has order {d.order_of(x)}, expected {d.p}")
    return sigma, rho


def compute_zeta(d: GaloisDatum, sigma: int, rho: int):
    e = d.g0[rho] * d.f0[sigma] % d.p
    if e == 0:
        raise StructureViolation("g0(rho) f0(sigma) = 0 mod p; zeta would be 1")
    if d.group[sigma](d.zeta_p) != d.zeta_p:
        raise StructureViolation("sigma moves zeta_p")
    zeta = d.zeta_power(e)
    return e, zeta


def trace_zero_generator(d: GaloisDatum, H) -> object:
    """Trace-zero primitive element of the fixed field of ``H`` over K."""
    v = primitive_element(H, d.group)
    return trace_adjust(v, H, d.group)


def sigma_orbit(d: GaloisDatum, sigma: int, x):
    out = [x]
    s = d.group[sigma]
    for _ in range(d.p - 1):
        out.append(s(out[-1]))
    return out


def h_matrix(d: GaloisDatum, alpha, sigma: int, zeta):
    p = d.p
    orbit = sigma_orbit(d, sigma, alpha)
    zp = [zeta ** k for k in range(p)]
    h = []
    for i in range(p):
        row = []
        powers = [x ** i for x in orbit]
        for j in range(p):
            acc = d.field.zero()
            for ell in range(p):
                acc = acc + zp[j * ell % p] * powers[ell]
            row.append(acc)
        h.append(row)
    return h


def eigen_normalize(d: GaloisDatum, x, g: int, zeta, H):
    """Project ``x`` onto the zeta-eigenspace of the automorphism ``g``.

    The candidate (1/p) sum_l zeta^(-l) g^l(x) satisfies g(y) = zeta y.  It is
    used only when it is nonzero with stabilizer exactly ``H``; otherwise ``x``
    is returned.  Returns (element, changed).
    """
    p = d.p
    orbit = sigma_orbit(d, g, x)
    acc = d.field.zero()
    for ell, y in enumerate(orbit):
        acc = acc + zeta ** ((p - 1) * ell % p) * y
    cand = acc / p
    if cand.is_zero() or stabilizer(cand, d.group) != H:
        return x, False
    return cand, cand != x


def m_matrix(d: GaloisDatum, beta, rho: int, F_basis):
    p = d.p
    r = d.group[rho]
    cols = []
    x = beta
    for _ in range(p):
        cols.append(express_in_power_basis(x, beta, F_basis, p))
        x = r(x)
    return [[cols[j][i] for j in range(p)] for i in range(p)]


def structure_constants(d: GaloisDatum, a, h, m, K: EmbeddedField):
    p = d.p
    L = d.field
    X = [[a[k] * m[i][k] for k in range(p)] for i in range(p)]
    Zinv = invert_matrix(h, L.zero(), L.one())
    c = mat_mul(X, Zinv)
    for i in range(p):
        for j in range(p):
            if not K.contains(c[i][j]):
                raise NotInK(f"c[{i}][{j}] does not lie in K")
    return c


def run_theorem(d: GaloisDatum, sub: SubgroupReport | None = None) -> TheoremContext:
    """The whole construction for a minimal datum with N_f != N_g."""
    sub = sub or subgroups(d)
    if not check_minimal(d, sub).minimal:
        raise StructureViolation("datum is not minimal; reduce it first")
    if detect_special(d, sub) != GENERIC:
        raise StructureViolation("N_f = N_g; the construction needs N_f != N_g")
    p = d.p
    sigma, rho = select_sigma_rho(d, sub)
    e, zeta = compute_zeta(d, sigma, rho)
    K_basis = fixed_subspace(d.group)
    K = EmbeddedField(K_basis, preferred=[d.zeta_p])

    alpha = trace_zero_generator(d, sub.ker_f0)
    alpha, a_changed = eigen_normalize(d, alpha, sigma, zeta, sub.ker_f0)
    beta = trace_zero_generator(d, sub.ker_g0)
    beta, b_changed = eigen_normalize(d, beta, rho, zeta, sub.ker_g0)
    if d.group[sigma](alpha) == alpha:
        raise StructureViolation("sigma fixes alpha")
    if d.group[rho](beta) == beta:
        raise StructureViolation("rho fixes beta")

    h = h_matrix(d, alpha, sigma, zeta)
    a = list(h[1])
    rho_powers = [0]
    for _ in range(p - 1):
        rho_powers.append(d.mul(rho, rho_powers[-1]))
    F_basis = fixed_subspace([d.group[r] for r in rho_powers])
    m = m_matrix(d, beta, rho, F_basis)
    c = structure_constants(d, a, h, m, K)
    mp_a = minpoly_over(alpha, K_basis)
    mp_b = minpoly_over(beta, K_basis)
    if len(mp_a) != p + 1 or len(mp_b) != p + 1:
        raise StructureViolation("alpha or beta does not have degree p over K")
    return TheoremContext(p, sigma, rho, e, zeta, alpha, beta, a, h, m, c, K, F_basis,
                          mp_a, mp_b, a_changed, b_changed)


# ------------------------------------------------------------ property checks

def property_checks(d: GaloisDatum, sub: SubgroupReport, ctx: TheoremContext) -> dict:
    """Identities the a_i and h_ij satisfy; every value is a bool."""
    p = d.p
    a, h, zeta = ctx.a, ctx.h, ctx.zeta
    s = d.group[ctx.sigma]
    out = {}
    out["a0_zero"] = a[0].is_zero()
    out["a_nonzero"] = any(not x.is_zero() for x in a[1:])
    total = d.field.zero()
    for x in a:
        total = total + x
    out["sum_a_is_p_alpha"] = total == ctx.alpha * p
    out["h_row0"] = h[0][0] == p and all(x.is_zero() for x in h[0][1:])
    out["sigma_eigen"] = all(s(a[i]) == zeta ** (-i) * a[i] for i in range(p))
    # row p of h, built from alpha^p, is needed for m = p - 1
    orbit = sigma_orbit(d, ctx.sigma, ctx.alpha ** p)
    h_top = []
    for j in range(p):
        acc = d.field.zero()
        for ell in range(p):
            acc = acc + zeta ** (j * ell % p) * orbit[ell]
        h_top.append(acc)
    hx = list(h) + [h_top]
    conv = True
    for mm in range(p):
        for n in range(p):
            acc = d.field.zero()
            for k in range(p):
                acc = acc + h[mm][k] * a[(n - k) % p]
            if acc != hx[mm + 1][n] * p:
                conv = False
    out["convolution"] = conv
    rho_pows = [0]
    for _ in range(p - 1):
        rho_pows.append(d.mul(ctx.rho, rho_pows[-1]))
    equi = True
    for t in sub.ker_f0 & sub.ker_g0:
        conj = d.mul(d.mul(t, ctx.rho), d.inv(t))
        if conj not in rho_pows:
            equi = False
            continue
        ell = rho_pows.index(conj)
        if any(d.group[t](a[i]) != a[ell * i % p] for i in range(p)):
            equi = False
    out["t_equivariance"] = equi
    out["sigma_fixes_zeta_p"] = s(d.zeta_p) == d.zeta_p
    return out


def h_vanishing_pattern(ctx: TheoremContext):
    """Pairs (i, j) with h_ij != 0."""
    return [(i, j) for i in range(ctx.p) for j in range(ctx.p) if not ctx.h[i][j].is_zero()]


def nonzero_columns(M):
    return [j for j in range(len(M[0])) if any(not M[i][j].is_zero() for i in range(len(M)))]


def nonzero_rows(M):
    return [i for i in range(len(M)) if any(not x.is_zero() for x in M[i])]


# --------------------------------------------------------------- the algebra

class StructureAlgebra:
    """Finite-dimensional algebra over a field given by a full multiplication table.

    ``table[a][b]`` is the coefficient vector of (basis a)(basis b).
    """

    def __init__(self, field, labels, table, unit: int = 0):
        self.field = field
        self.labels = list(labels)
        self.table = table
        self.unit = unit
        self.dim = len(labels)

    def zero_vector(self):
        return [self.field.zero()] * self.dim

    def basis_vector(self, k):
        v = self.zero_vector()
        v[k] = self.field.one()
        return v

    def mul(self, u, v):
        out = self.zero_vector()
        for A, ua in enumerate(u):
            if ua.is_zero():
                continue
            row = self.table[A]
            for B, vb in enumerate(v):
                if vb.is_zero():
                    continue
                coef = ua * vb
                for C, t in enumerate(row[B]):
                    if not t.is_zero():
                        out[C] = out[C] + coef * t
        return out

    def check_unit(self) -> bool:
        e = self.unit
        return all(self.table[e][b] == self.basis_vector(b) and self.table[b][e] == self.basis_vector(b)
                   for b in range(self.dim))

    def check_associativity(self, triples=None) -> int:
        """Raise AssociativityFailure on the first bad triple; return the count checked."""
        n = self.dim
        if triples is None:
            triples = ((x, y, w) for x in range(n) for y in range(n) for w in range(n))
        count = 0
        T = self.table
        for x, y, w in triples:
            left = self.mul(T[x][y], self.basis_vector(w))
            right = self.mul(self.basis_vector(x), T[y][w])
            if left != right:
                raise AssociativityFailure(
                    f"({self.labels[x]} {self.labels[y]}) {self.labels[w]} != "
                    f"{self.labels[x]} ({self.labels[y]} {self.labels[w]})")
            count += 1
        return count

    def table_json(self):
        return [[[x.to_json() for x in v] for v in row] for row in self.table]


def _power_reductions(minpoly, p, K):
    """X^n mod minpoly as coefficient vectors for n <= 2p - 2."""
    q = minpoly[:p]
    vecs = []
    for n in range(2 * p - 1):
        if n < p:
            v = [K.zero()] * p
            v[n] = K.one()
        else:
            prev = vecs[-1]
            top = prev[p - 1]
            v = [K.zero()] + prev[:p - 1]
            v = [x - top * qi for x, qi in zip(v, q)]
        vecs.append(v)
    return vecs


def build_D(ctx: TheoremContext, c_override=None) -> StructureAlgebra:
    """Multiplication table of D on beta^i z^j by rewriting z beta."""
    p = ctx.p
    Kf = ctx.K.field
    c = c_override if c_override is not None else ctx.c_K()
    mpa = [ctx.K.restrict(x) for x in ctx.minpoly_alpha]
    mpb = [ctx.K.restrict(x) for x in ctx.minpoly_beta]
    bpow = _power_reductions(mpb, p, Kf)
    zpow = _power_reductions(mpa, p, Kf)
    zero = Kf.zero()
    dim = p * p

    def outer(u, v):
        return [u[i] * v[j] for i in range(p) for j in range(p)]

    def add_into(acc, vec, coef):
        for k, x in enumerate(vec):
            if not x.is_zero():
                acc[k] = acc[k] + coef * x

    def left_beta(a, vec):
        out = [zero] * dim
        for idx, x in enumerate(vec):
            if not x.is_zero():
                i, j = divmod(idx, p)
                add_into(out, outer(bpow[a + i], zpow[j]), x)
        return out

    def right_z(vec, b):
        out = [zero] * dim
        for idx, x in enumerate(vec):
            if not x.is_zero():
                i, j = divmod(idx, p)
                add_into(out, outer(bpow[i], zpow[j + b]), x)
        return out

    memo = {}
    active = set()

    def prod(j, k):
        """z^j beta^k in normal form."""
        key = (j, k)
        if key in memo:
            return memo[key]
        if key in active:
            raise RewritingCycle(
                f"rewriting z^{j} beta^{k} needs itself; c does not determine a finite rewriting")
        active.add(key)
        if j == 0:
            res = outer(bpow[k], zpow[0])
        elif k == 0:
            res = outer(bpow[0], zpow[j])
        elif j == 1 and k == 1:
            res = [c[i][jj] for i in range(p) for jj in range(p)]
        elif j == 1 or j > 1 and k > 1:
            # z^j beta^(k-1) beta = sum v_ab beta^a (z^b beta)
            v = prod(j, k - 1)
            res = [zero] * dim
            for idx, x in enumerate(v):
                if not x.is_zero():
                    a, b = divmod(idx, p)
                    add_into(res, left_beta(a, prod(b, 1)), x)
        else:
            # z (z^(j-1) beta) = sum v_ab (z beta^a) z^b
            v = prod(j - 1, 1)
            res = [zero] * dim
            for idx, x in enumerate(v):
                if not x.is_zero():
                    a, b = divmod(idx, p)
                    add_into(res, right_z(prod(1, a), b), x)
        active.discard(key)
        memo[key] = res
        return res

    table = []
    for A in range(dim):
        i, j = divmod(A, p)
        row = []
        for B in range(dim):
            k, l = divmod(B, p)
            row.append(left_beta(i, right_z(prod(j, k), l)))
        table.append(row)
    labels = [_label(i, j) for i in range(p) for j in range(p)]
    return StructureAlgebra(Kf, labels, table, 0)


def _label(i, j):
    parts = []
    if i:
        parts.append("b" if i == 1 else f"b^{i}")
    if j:
        parts.append("z" if j == 1 else f"z^{j}")
    return "*".join(parts) or "1"


# ---------------------------------------------------------- verifications

def center_dimension(D: StructureAlgebra) -> int:
    n = D.dim
    T = D.table
    rows = []
    for b in range(n):
        for C in range(n):
            rows.append([T[A][b][C] - T[b][A][C] for A in range(n)])
    return len(nullspace(rows, n, D.field.zero(), D.field.one()))


def trace_form_rank(D: StructureAlgebra) -> int:
    n = D.dim
    T = D.table
    zero = D.field.zero()
    t = []
    for C in range(n):
        acc = zero
        for A in range(n):
            acc = acc + T[C][A][A]
        t.append(acc)
    form = []
    for A in range(n):
        row = []
        for B in range(n):
            acc = zero
            for C, x in enumerate(T[A][B]):
                if not x.is_zero():
                    acc = acc + x * t[C]
            row.append(acc)
        form.append(row)
    return len(rref(form)[1])


def verify_central_simple(D: StructureAlgebra, p: int) -> dict:
    cdim = center_dimension(D)
    trank = trace_form_rank(D)
    return {
        "dimension": D.dim,
        "dimension_ok": D.dim == p * p,
        "center_dimension": cdim,
        "trace_form_rank": trank,
        "central_simple": D.dim == p * p and cdim == 1 and trank == D.dim,
    }


def element_minpoly(D: StructureAlgebra, x):
    """Monic minimal polynomial of ``x`` over the base field (ascending coefficients)."""
    powers = [D.basis_vector(D.unit)]
    while True:
        nxt = D.mul(powers[-1], x)
        cols = powers
        A = [[v[r] for v in cols] for r in range(D.dim)]
        sol, _ = solve_linear(A, nxt, D.field.zero(), D.field.one())
        if sol is not None:
            return [-q for q in sol] + [D.field.one()]
        powers.append(nxt)


def verify_min_poly(D: StructureAlgebra, ctx: TheoremContext) -> dict:
    z = D.basis_vector(1)
    P = element_minpoly(D, z)
    Q = [ctx.K.restrict(x) for x in ctx.minpoly_alpha]
    return {
        "minpoly_z": [x.to_json() for x in P],
        "minpoly_alpha": [x.to_json() for x in Q],
        "degree_ok": len(P) == ctx.p + 1,
        "equal": P == Q,
    }


def conjugation_check(D: StructureAlgebra, ctx: TheoremContext) -> bool:
    """z beta = rho^-1(beta) z, when rho^-1(beta) has coefficients in K."""
    p = ctx.p
    col = [ctx.m[i][p - 1] for i in range(p)]
    if not all(ctx.K.contains(x) for x in col):
        return False
    rhs = D.zero_vector()
    for i, x in enumerate(col):
        rhs[i * p + 1] = ctx.K.restrict(x)
    return D.table[1][p] == rhs
