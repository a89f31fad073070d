import copy
import json

import pytest

from cupcsa import catalog
from cupcsa.brauer2 import normalize_quaternion
from cupcsa.datum import (check_degree_bound, check_minimal, detect_special, load_datum,
                          reduce_datum, subgroups)
from cupcsa.fieldtower import fixed_subspace
from cupcsa.errors import BadZeta, CocycleViolation, NotAGroup, SchemaError, StructureViolation
from cupcsa.theorem import run_theorem

from conftest import datum

ALL = catalog.CATALOG + catalog.EXTRAS


def doc(name):
    return copy.deepcopy(catalog.load_document(name))


@pytest.mark.parametrize("name", ALL)
def test_catalog_loads(name):
    d = datum(name)
    # G fixes K, so |G| [K:Q] = [L:Q]
    assert d.order * len(fixed_subspace(d.group)) == d.degree
    assert d.name == name


@pytest.mark.parametrize("name", ALL)
def test_cocycle_identities_exhaustive(name):
    d = datum(name)
    p = d.p
    for s in range(d.order):
        assert (d.omega_Mvee[s] * d.omega_M[s] - d.omega_cyc[s]) % p == 0
        for t in range(d.order):
            st = d.mul(s, t)
            assert (d.f0[st] - d.f0[s] - d.omega_M[s] * d.f0[t]) % p == 0
            assert (d.g0[st] - d.g0[s] - d.omega_Mvee[s] * d.g0[t]) % p == 0
            assert d.omega_M[st] == d.omega_M[s] * d.omega_M[t] % p


def test_zero_f_class_rejected():
    bad = doc("quat_2_3")
    bad["f0"] = [0, 0, 0, 0]
    with pytest.raises(CocycleViolation, match="f is the zero class"):
        load_datum(bad)


def test_non_cocycle_rejected():
    bad = doc("quat_2_3")
    bad["f0"] = [0, 1, 1, 1]
    with pytest.raises(CocycleViolation):
        load_datum(bad)


def test_zeta_one_rejected():
    bad = doc("quat_2_3")
    bad["zeta_p"] = ["1", "0", "0", "0"]
    with pytest.raises(BadZeta):
        load_datum(bad)


def test_truncated_json_rejected():
    text = json.dumps(doc("quat_2_3"))
    with pytest.raises(SchemaError):
        load_datum(text[: len(text) // 2])


def test_missing_key_and_bad_prime():
    bad = doc("quat_2_3")
    del bad["g0"]
    with pytest.raises(SchemaError, match="missing"):
        load_datum(bad)
    bad = doc("quat_2_3")
    bad["p"] = 4
    with pytest.raises(SchemaError):
        load_datum(bad)


def test_not_a_group():
    bad = doc("quat_2_3")
    bad["automorphisms"] = bad["automorphisms"][:3]
    bad["omega_M"], bad["f0"], bad["g0"] = [1, 1, 1], [0, 1, 0], [0, 0, 1]
    with pytest.raises(NotAGroup):
        load_datum(bad)
    bad = doc("quat_2_3")
    bad["automorphisms"][1] = ["0", "1", "1", "0"]
    with pytest.raises(NotAGroup):
        load_datum(bad)
    bad = doc("quat_2_3")
    bad["automorphisms"][0], bad["automorphisms"][1] = bad["automorphisms"][1], bad["automorphisms"][0]
    with pytest.raises(NotAGroup):
        load_datum(bad)


def test_subgroups_quat():
    sub = subgroups(datum("quat_2_3"))
    assert sub.H_M == sub.H_Mvee == frozenset(range(4))
    assert sub.N_f == {0, 2}
    assert sub.N_g == {0, 1}
    assert sub.N == {0}
    assert detect_special(datum("quat_2_3")) == "Generic"


def test_subgroups_kummer():
    d = datum("kummer3_2_3")
    sub = subgroups(d)
    assert len(sub.H_M) == 9 and len(sub.H_Mvee) == 9
    assert len(sub.N_f) == 3 and len(sub.N_g) == 3
    assert sub.N == {0}
    check_degree_bound(d)


def test_equal_kernel_detection():
    for name in ("quat_equal_2", "equal3"):
        assert detect_special(datum(name)) == "EqualKernels"


def test_equal_kernels_and_degree_bound():
    bad = doc("quat_2_3")
    bad["g0"] = bad["f0"]
    bad["omega_M"] = [1, 1, 1, 1]
    d = load_datum(bad)
    assert detect_special(d) == "EqualKernels"
    with pytest.raises(StructureViolation):
        check_degree_bound(datum("quat_padded_2_3_5"))


def test_padded_is_not_minimal_and_reduces():
    d = datum("quat_padded_2_3_5")
    m = check_minimal(d)
    assert not m.minimal and len(m.N) == 2 and m.tag == "NonMinimal"
    r = reduce_datum(d)
    assert r.order == 4 and r.degree == 4
    assert check_minimal(r).minimal
    assert detect_special(r) == "Generic"
    ctx = run_theorem(r, subgroups(r))
    q = normalize_quaternion(ctx)
    assert (q.a, q.b) == (2, 3)


def test_reduce_is_identity_on_minimal():
    d = datum("quat_2_3")
    assert reduce_datum(d) is d


@pytest.mark.parametrize("name", ALL)
def test_round_trip_json(name):
    d = datum(name)
    again = load_datum(json.dumps(d.to_json()))
    assert again.to_json() == d.to_json()
