"""Built-in example data.

Each entry is generated from a tensor tower Q[y_1, ..., y_r]/(m_1(y_1), ...)
whose total degree equals the degree of the field it presents.  A primitive
element theta is located, the tower is rewritten in the power basis of theta,
and the automorphisms (given on the tower generators) become images of theta.
The resulting JSON documents are frozen under ``data/`` and the tests check
that regeneration reproduces them byte for byte.
"""
from __future__ import annotations

import itertools
import json
from fractions import Fraction
from importlib import resources

from .errors import Singular, UnknownExample
from .exactnum import Polynomial, format_rational, invert_matrix, mat_vec

CATALOG = ("quat_2_3", "quat_m1_m2", "quat_equal_2", "kummer3_2_3", "equal3")
EXTRAS = ("quat_padded_2_3_5", "mixed3")

DESCRIPTIONS = {
    "quat_2_3": "p=2, L=Q(sqrt2, sqrt3), f cuts out Q(sqrt2), g cuts out Q(sqrt3)",
    "quat_m1_m2": "p=2, L=Q(i, sqrt-2), f cuts out Q(i), g cuts out Q(sqrt-2)",
    "quat_equal_2": "p=2, L=Q(sqrt2), f = g (equal kernels)",
    "kummer3_2_3": "p=3, K=Q(zeta3), L=K(cbrt2, cbrt3), Kummer classes of 2 and 3",
    "equal3": "p=3, K=Q(zeta3), L=K(cbrt2), f = g (equal kernels)",
    "quat_padded_2_3_5": "quat_2_3 inflated to Q(sqrt2, sqrt3, sqrt5) (not minimal)",
    "mixed3": "p=3 over Q, L=Q(zeta3, cbrt2, zeta9+1/zeta9), cyclic cubic against Kummer class of 2",
}


class Tower:
    """Tensor product of simple extensions Q[y_k]/(m_k), assumed to be a field."""

    def __init__(self, polys):
        self.polys = [Polynomial(p) for p in polys]
        self.degs = [q.degree for q in self.polys]
        self.monos = list(itertools.product(*[range(d) for d in self.degs]))
        self.n = len(self.monos)
        # y_k^e reduced mod m_k for e < 2 d_k - 1
        self._red = []
        for q, d in zip(self.polys, self.degs):
            rows = []
            for e in range(2 * d - 1):
                r = (Polynomial([0] * e + [1]) % q).coeffs
                rows.append(tuple(r) + (Fraction(0),) * (d - len(r)))
            self._red.append(rows)

    def one(self):
        return {(0,) * len(self.degs): Fraction(1)}

    def scalar(self, q):
        return {(0,) * len(self.degs): Fraction(q)}

    def gen(self, k):
        e = [0] * len(self.degs)
        e[k] = 1
        if self.degs[k] == 1:
            return {(0,) * len(self.degs): -self.polys[k].coeffs[0]}
        return {tuple(e): Fraction(1)}

    @staticmethod
    def add(a, b):
        out = dict(a)
        for m, c in b.items():
            out[m] = out.get(m, 0) + c
        return {m: c for m, c in out.items() if c}

    @staticmethod
    def scale(a, q):
        return {m: c * q for m, c in a.items() if c * q}

    def mul(self, a, b):
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                exps = [x + y for x, y in zip(ma, mb)]
                parts = [[(i, c) for i, c in enumerate(self._red[k][e]) if c]
                         for k, e in enumerate(exps)]
                for combo in itertools.product(*parts):
                    m = tuple(i for i, _ in combo)
                    c = ca * cb
                    for _, x in combo:
                        c *= x
                    out[m] = out.get(m, 0) + c
        return {m: c for m, c in out.items() if c}

    def power(self, a, e):
        r = self.one()
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def vector(self, a):
        return [Fraction(a.get(m, 0)) for m in self.monos]

    def apply(self, images, a):
        """Apply the endomorphism sending generator k to ``images[k]``."""
        pows = [[self.one()] for _ in images]
        for k, img in enumerate(images):
            for _ in range(1, self.degs[k]):
                pows[k].append(self.mul(pows[k][-1], img))
        out = {}
        for m, c in a.items():
            term = self.scalar(c)
            for k, e in enumerate(m):
                if e:
                    term = self.mul(term, pows[k][e])
            out = self.add(out, term)
        return out


def _coordinate_map(tower: Tower, theta):
    """Function sending a tower element to its coordinates in the power basis of theta."""
    n = tower.n
    powers = [tower.one()]
    for _ in range(n):
        powers.append(tower.mul(powers[-1], theta))
    cols = [tower.vector(x) for x in powers[:n]]
    P = [[cols[j][i] for j in range(n)] for i in range(n)]
    Pinv = invert_matrix(P)

    def coords(x):
        return mat_vec(Pinv, tower.vector(x))
    return coords, powers[n]


def power_basis_document(tower: Tower, theta, aut_images, zeta, p, omega_M, f0, g0, name=None):
    """Rewrite a tower presentation in the power basis of ``theta``."""
    coords, top_power = _coordinate_map(tower, theta)

    top = coords(top_power)
    modulus = [-c for c in top] + [Fraction(1)]
    autos = [coords(tower.apply(images, theta)) for images in aut_images]
    doc = {}
    if name is not None:
        doc["name"] = name
    doc.update({
        "p": p,
        "modulus": [format_rational(c) for c in modulus],
        "automorphisms": [[format_rational(c) for c in v] for v in autos],
        "zeta_p": [format_rational(c) for c in coords(zeta)],
        "omega_M": list(omega_M),
        "f0": list(f0),
        "g0": list(g0),
    })
    return doc


def _find_theta(tower: Tower, gens, weight_list):
    """First weighted sum of ``gens`` whose powers span the tower."""
    for weights in weight_list:
        theta = {}
        for w, g in zip(weights, gens):
            if w:
                theta = tower.add(theta, tower.scale(g, w))
        powers = [tower.one()]
        for _ in range(tower.n - 1):
            powers.append(tower.mul(powers[-1], theta))
        cols = [tower.vector(x) for x in powers]
        P = [[cols[j][i] for j in range(tower.n)] for i in range(tower.n)]
        try:
            invert_matrix(P)
        except Singular:
            continue
        return theta
    raise ValueError("no primitive element among the candidate weights")


_WEIGHTS = [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 2, 3), (1, 3, 2)]


def _multiquadratic(a_vals, f_gen, g_gen, name):
    """Q(sqrt a_1, ..., sqrt a_r); automorphism index = sum of e_k 2^k (e_k=1 negates sqrt a_k)."""
    tower = Tower([[-a, 0, 1] for a in a_vals])
    r = len(a_vals)
    gens = [tower.gen(k) for k in range(r)]
    theta = {}
    for g in gens:
        theta = tower.add(theta, g)
    auts, f0, g0 = [], [], []
    for idx in range(2 ** r):
        signs = [(idx >> k) & 1 for k in range(r)]
        auts.append([tower.scale(g, -1 if e else 1) for g, e in zip(gens, signs)])
        f0.append(signs[f_gen])
        g0.append(signs[g_gen])
    return power_basis_document(tower, theta, auts, tower.scalar(-1), 2,
                                [1] * len(auts), f0, g0, name)


def _quat_equal_2():
    tower = Tower([[-2, 0, 1]])
    s = tower.gen(0)
    auts = [[s], [tower.scale(s, -1)]]
    return power_basis_document(tower, s, auts, tower.scalar(-1), 2,
                                [1, 1], [0, 1], [0, 1], "quat_equal_2")


def _zeta_power(tower, zeta, e):
    return tower.power(zeta, e % 3)


def _kummer3_2_3():
    tower = Tower([[1, 1, 1], [-2, 0, 0, 1], [-3, 0, 0, 1]])
    z, c2, c3 = tower.gen(0), tower.gen(1), tower.gen(2)
    theta = _find_theta(tower, [z, c2, c3], _WEIGHTS)
    auts, f0, g0 = [], [], []
    for a in range(3):
        for b in range(3):
            auts.append([z, tower.mul(_zeta_power(tower, z, a), c2),
                         tower.mul(_zeta_power(tower, z, b), c3)])
            f0.append(a)
            g0.append(b)
    return power_basis_document(tower, theta, auts, z, 3, [1] * 9, f0, g0, "kummer3_2_3")


def _equal3():
    tower = Tower([[1, 1, 1], [-2, 0, 0, 1]])
    z, c2 = tower.gen(0), tower.gen(1)
    theta = _find_theta(tower, [z, c2], [(1, 1), (1, 2), (2, 1)])
    auts = [[z, tower.mul(_zeta_power(tower, z, a), c2)] for a in range(3)]
    return power_basis_document(tower, theta, auts, z, 3, [1, 1, 1], [0, 1, 2], [0, 1, 2], "equal3")


def _mixed3():
    tower = Tower([[1, 1, 1], [-2, 0, 0, 1], [1, -3, 0, 1]])
    z, c2, eta = tower.gen(0), tower.gen(1), tower.gen(2)
    theta = _find_theta(tower, [z, c2, eta], _WEIGHTS)
    eta_images = [eta]
    for _ in range(2):
        prev = eta_images[-1]
        eta_images.append(tower.add(tower.mul(prev, prev), tower.scalar(-2)))
    # index = 9 (c - 1) + 3 a + k for zeta -> zeta^c, cbrt2 -> zeta^a cbrt2, eta -> eta_k
    auts, f0, g0 = [], [], []
    for c in (1, 2):
        for a in range(3):
            for k in range(3):
                auts.append([_zeta_power(tower, z, c), tower.mul(_zeta_power(tower, z, a), c2),
                             eta_images[k]])
                f0.append(k)
                g0.append(a)
    return power_basis_document(tower, theta, auts, z, 3, [1] * 18, f0, g0, "mixed3")


_GENERATORS = {
    "quat_2_3": lambda: _multiquadratic([2, 3], 0, 1, "quat_2_3"),
    "quat_m1_m2": lambda: _multiquadratic([-1, -2], 0, 1, "quat_m1_m2"),
    "quat_equal_2": _quat_equal_2,
    "kummer3_2_3": _kummer3_2_3,
    "equal3": _equal3,
    "quat_padded_2_3_5": lambda: _multiquadratic([2, 3, 5], 0, 1, "quat_padded_2_3_5"),
    "mixed3": _mixed3,
}


_TOWERS = {
    "quat_2_3": ([[-2, 0, 1], [-3, 0, 1]], ("sqrt2", "sqrt3")),
    "quat_m1_m2": ([[1, 0, 1], [2, 0, 1]], ("i", "sqrt-2")),
    "quat_equal_2": ([[-2, 0, 1]], ("sqrt2",)),
    "kummer3_2_3": ([[1, 1, 1], [-2, 0, 0, 1], [-3, 0, 0, 1]], ("zeta3", "cbrt2", "cbrt3")),
    "equal3": ([[1, 1, 1], [-2, 0, 0, 1]], ("zeta3", "cbrt2")),
    "quat_padded_2_3_5": ([[-2, 0, 1], [-3, 0, 1], [-5, 0, 1]], ("sqrt2", "sqrt3", "sqrt5")),
    "mixed3": ([[1, 1, 1], [-2, 0, 0, 1], [1, -3, 0, 1]], ("zeta3", "cbrt2", "eta")),
}


def named_elements(name: str) -> dict:
    """Coordinates (in the power basis of the datum's generator) of the tower generators."""
    if name not in _TOWERS:
        raise UnknownExample(f"unknown example {name!r}")
    polys, labels = _TOWERS[name]
    tower = Tower(polys)
    gens = [tower.gen(k) for k in range(len(polys))]
    if name in ("kummer3_2_3", "mixed3"):
        theta = _find_theta(tower, gens, _WEIGHTS)
    elif name == "equal3":
        theta = _find_theta(tower, gens, [(1, 1), (1, 2), (2, 1)])
    else:
        theta = {}
        for g in gens:
            theta = tower.add(theta, g)
    coords, _ = _coordinate_map(tower, theta)
    return {label: coords(g) for label, g in zip(labels, gens)}


def list_examples():
    return list(CATALOG)


def generate(name: str) -> dict:
    """Regenerate a catalog (or extra) document from its tower description."""
    if name not in _GENERATORS:
        raise UnknownExample(f"unknown example {name!r}; known: {', '.join(CATALOG)}")
    return _GENERATORS[name]()


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def emit(name: str) -> str:
    """JSON text of a frozen entry."""
    if name not in CATALOG and name not in EXTRAS:
        raise UnknownExample(f"unknown example {name!r}; known: {', '.join(CATALOG)}")
    return resources.files("cupcsa").joinpath("data", f"{name}.json").read_text()


def load_document(name: str) -> dict:
    return json.loads(emit(name))


def load_example(name: str):
    from .datum import load_datum
    return load_datum(load_document(name))


def write_golden(directory) -> None:
    """Regenerate every frozen file (maintenance helper)."""
    from pathlib import Path
    for name in CATALOG + EXTRAS:
        (Path(directory) / f"{name}.json").write_text(dumps(generate(name)))
