import math

import pytest

from gradedlab.zbackend import (
    ZInstance,
    classes_with_zero_ideal_of_z,
    classify_z,
    colon_classes_z,
    g_classes,
    gw_classes,
    in_g_z,
    in_gw_z,
    is_gwp_z,
    is_weakly_primary_z,
    is_weakly_prime_z,
    oracle_is_gp,
    oracle_is_gwp,
    oracle_set_with_zero_closed,
    surrogate,
    window,
)
from gradedlab.primality import gw_set, g_set


def test_shape_validation():
    with pytest.raises(ValueError):
        ZInstance("z_int", m=0)
    with pytest.raises(ValueError):
        ZInstance("z_mod", n=12, d=5)
    with pytest.raises(ValueError):
        ZInstance("weird")


def test_z_int_12_catalog_values():
    z = ZInstance("z_int", m=12)
    ok, wit = is_gwp_z(z, 3)
    assert not ok and wit == (3, 4)  # 3*4 = 12 lands in N, nonzero
    ok, _ = is_gwp_z(z, 1)
    assert ok
    # residue formula: classes with a common factor with 12
    assert set(gw_classes(z)) == {c for c in range(12) if math.gcd(c, 12) > 1}
    v = classify_z(z)
    assert not v.is_weakly_primal
    assert v.weakly_primal_violation == ("add", 2, 3, 5)
    assert not v.is_primal
    assert in_gw_z(z, 3) and not in_gw_z(z, 0) and not in_gw_z(z, 1)
    assert in_g_z(z, 0) and in_g_z(z, 4) and not in_g_z(z, 5)


def test_z_mod_24_8_catalog_values():
    z = ZInstance("z_mod", n=24, d=8)
    v = classify_z(z)
    assert set(v.gw) == {2, 4, 8, 10, 14, 16, 20, 22}
    assert not v.is_weakly_primal
    assert v.is_primal
    # table model and integer semantics agree on element verdicts
    _, _, sub = surrogate(z)
    assert set(gw_set(sub)) == set(v.gw)


def test_z_mod_32_8_and_12_12():
    z4 = ZInstance("z_mod", n=32, d=8)
    ok, wit = is_gwp_z(z4, 4)
    assert not ok and wit == (4, 2)
    z3 = ZInstance("z_mod", n=12, d=12)
    v = classify_z(z3)
    assert not v.gw and v.is_weakly_primal and not v.is_primal
    assert set(v.g) == {0, 2, 3, 4, 6, 8, 9, 10}


def test_weakly_prime_z_int_iff_prime_modulus():
    for m in range(2, 20):
        ok, _ = is_weakly_prime_z(ZInstance("z_int", m=m))
        is_prime = m > 1 and all(m % k for k in range(2, m))
        assert ok == is_prime


def test_windowed_oracle_agreement_small():
    for z in (
        ZInstance("z_int", m=8),
        ZInstance("z_int", m=12),
        ZInstance("z_mod", n=12, d=4),
        ZInstance("z_mod", n=16, d=8),
    ):
        gw = gw_classes(z)
        g = g_classes(z)
        for x in window(z):
            assert oracle_is_gwp(z, x) == (not in_gw_z(z, x))
            assert oracle_is_gp(z, x) == (not in_g_z(z, x))
        assert {c for c in range(z.modulus) if not oracle_is_gwp(z, c if c else z.modulus)} == set(gw)
        assert {c for c in range(z.modulus) if not oracle_is_gp(z, c if c else z.modulus)} == set(g)


def test_ideal_of_z_rule_matches_windowed_closure():
    # exhaust all class sets for small moduli: the residue rule and the
    # windowed closure search must agree on ideal-ness
    for q in range(2, 7):
        for mask in range(1 << q):
            classes = frozenset(c for c in range(q) if mask >> c & 1)
            z = ZInstance("z_int", m=q)

            def member(x, classes=classes, q=q):
                return x == 0 or (x % q) in classes

            ok, wit = classes_with_zero_ideal_of_z(classes, q)
            found = oracle_set_with_zero_closed(z, member)
            assert ok == (found is None), (q, sorted(classes), wit, found)
            if not ok:
                kind, a, b, c = wit
                assert member(a if kind == "mul" else a) or a == 0
                assert not member(c)


def test_colon_classes():
    assert colon_classes_z(ZInstance("z_int", m=12)) == frozenset({0})
    z = ZInstance("z_mod", n=24, d=8)
    assert colon_classes_z(z) == frozenset({0, 8, 16})


def test_weakly_primary_z_mod():
    # the N = 8Z/24Z shape is weakly primary over the integers: every scalar
    # with a nonzero witness has a power landing in the colon
    ok, _ = is_weakly_primary_z(ZInstance("z_mod", n=24, d=8))
    assert ok
    ok, wit = is_weakly_prime_z(ZInstance("z_mod", n=24, d=8))
    assert not ok and wit is not None


def test_backend_agreement_suite():
    # every element predicate on the surrogate equals the windowed oracle
    for n in range(2, 17):
        for d in range(1, n + 1):
            if n % d:
                continue
            z = ZInstance("z_mod", n=n, d=d)
            _, _, sub = surrogate(z)
            table_gw = set(gw_set(sub))
            table_g = set(g_set(sub))
            assert table_gw == set(gw_classes(z))
            assert table_g == set(g_classes(z))
            for x in window(z):
                assert oracle_is_gwp(z, x) == ((x % n) not in table_gw or x == 0)
