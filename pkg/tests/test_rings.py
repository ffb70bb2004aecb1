import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedlab import (
    EnumerationBudgetError,
    GradingGroup,
    ValidationError,
    enumerate_graded_ideals,
    enumerate_multiplicative_sets,
    homogeneous_elements,
    homogeneous_radical,
    ideal_generated_by,
    ideal_product,
    is_graded_ideal,
    is_graded_weakly_prime_ideal,
    make_quadratic,
    make_zn,
    validate_multiplicative_set,
    validate_ring,
)
from gradedlab.rings import GradedIdeal, quadratic_tables, trivial_group


# ---------------------------------------------------------------------------
# naive oracles, used to freeze expected values independently of the library
# ---------------------------------------------------------------------------


def oracle_subset_is_graded_ideal(ring, subset):
    members = set(subset)
    if ring.zero not in members:
        return False
    for a in members:
        for b in members:
            if ring.add(a, b) not in members:
                return False
        for r in range(ring.order):
            if ring.mul(r, a) not in members:
                return False
        for part in ring.decomp[a].values():
            if part not in members:
                return False
    return True


def oracle_weakly_prime(ring, members):
    for x in ring.hom:
        for y in ring.hom:
            p = ring.mul(x, y)
            if p != ring.zero and p in members and x not in members and y not in members:
                return False
    return True


def oracle_radical(ring, members):
    out = set()
    for x in ring.hom:
        p = x
        for _ in range(ring.order):
            if p in members:
                out.add(x)
                break
            p = ring.mul(p, x)
    return out


# ---------------------------------------------------------------------------
# constructors and validation
# ---------------------------------------------------------------------------


def test_zn_is_valid_ring():
    r = make_zn(24)
    assert r.order == 24
    assert homogeneous_elements(r) == frozenset(range(24))
    assert not r.warnings


def test_quadratic_31_structure():
    r = make_quadratic(3, 1)
    assert r.order == 9
    # x * x = 1 lands in the degree-0 component
    x = 3  # encoding of x
    assert r.mul(x, x) == r.one
    assert len(r.hom) == 5  # 3 constants + 3 x-multiples, sharing zero
    assert not r.warnings


def test_quadratic_52_hom_count():
    # independent count: two components of size 5 overlapping only in zero
    r = make_quadratic(5, 2)
    assert len(r.hom) == 5 + 5 - 1


def test_misassigned_grading_reports_violation():
    raw = quadratic_tables(3, 1)
    swapped = {
        (0,): raw["components"][(1,)],
        (1,): raw["components"][(0,)],
    }
    with pytest.raises(ValidationError) as err:
        validate_ring(
            order=raw["order"],
            add_table=raw["add"],
            mul_table=raw["mul"],
            zero=raw["zero"],
            one=raw["one"],
            group=GradingGroup((2,)),
            components=swapped,
        )
    assert any(v.code == "GradingViolation" for v in err.value.violations)


def test_broken_identity_reports():
    with pytest.raises(ValidationError) as err:
        validate_ring(
            order=2,
            add_table=[[0, 1], [1, 0]],
            mul_table=[[0, 0], [0, 0]],
            zero=0,
            one=1,
            group=trivial_group(),
            components={(): {0, 1}},
        )
    assert any(v.code == "MissingIdentity" for v in err.value.violations)


def test_nonassociative_table_reports():
    # addition table of Z3 with one entry corrupted
    add = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    add[2][2] = 2
    mul = [[(i * j) % 3 for j in range(3)] for i in range(3)]
    with pytest.raises(ValidationError) as err:
        validate_ring(
            order=3, add_table=add, mul_table=mul, zero=0, one=1,
            group=trivial_group(), components={(): {0, 1, 2}},
        )
    codes = {v.code for v in err.value.violations}
    assert codes & {"NonAssociative", "NonCommutative", "MissingIdentity", "MissingInverse"}


def test_direct_sum_size_mismatch():
    r = make_zn(4)
    with pytest.raises(ValidationError) as err:
        validate_ring(
            order=4,
            add_table=r.add_table,
            mul_table=r.mul_table,
            zero=0,
            one=1,
            group=GradingGroup((2,)),
            components={(0,): {0, 1, 2, 3}, (1,): {0, 2}},
        )
    assert any(v.code == "NotDirectSum" for v in err.value.violations)


def test_constructors_carry_no_warnings(ring_pool):
    # 1 in the neutral component follows from the other axioms, so the
    # homogeneity warning stays silent on every validated ring.
    for ring in ring_pool:
        assert not ring.warnings


def test_decomposition_reconstructs(ring_pool):
    for ring in ring_pool:
        sizes = 1
        for comp in ring.components.values():
            sizes *= len(comp)
        assert sizes == ring.order
        for x in range(ring.order):
            total = ring.zero
            for g, part in ring.decomp[x].items():
                assert part in ring.components[g]
                total = ring.add(total, part)
            assert total == x


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


def test_is_graded_ideal_examples():
    r24 = make_zn(24)
    ok, _ = is_graded_ideal(r24, {0, 8, 16})
    assert ok
    bad = {0, 2, 4, 8, 10, 14, 16, 20, 22}
    assert not oracle_subset_is_graded_ideal(r24, bad)
    ok, violation = is_graded_ideal(r24, bad)
    assert not ok
    assert violation.code == "not_add_closed"
    assert violation.witness == (2, 4, 6)

    q = make_quadratic(3, 1)
    ok, violation = is_graded_ideal(q, {0, 1, 2})
    assert not ok  # x*1 = x escapes the constants


def test_ideal_generated_by_examples():
    r24 = make_zn(24)
    assert ideal_generated_by(r24, {8}).members == frozenset({0, 8, 16})
    assert ideal_generated_by(r24, {2, 3}).members == frozenset(range(24))
    q = make_quadratic(3, 1)
    assert ideal_generated_by(q, {3}).members == frozenset(range(9))  # x is a unit


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_ideal_generated_by_idempotent_and_monotone(ring_pool, data):
    ring = data.draw(st.sampled_from(ring_pool))
    gens = data.draw(st.sets(st.integers(0, ring.order - 1), max_size=3))
    more = data.draw(st.sets(st.integers(0, ring.order - 1), max_size=2))
    ideal = ideal_generated_by(ring, gens)
    assert ideal_generated_by(ring, ideal.members).members == ideal.members
    bigger = ideal_generated_by(ring, gens | more)
    assert ideal.members <= bigger.members


def test_enumerate_graded_ideals_counts():
    assert len(enumerate_graded_ideals(make_zn(4))) == 3
    assert len(enumerate_graded_ideals(make_zn(12))) == 6  # divisor lattice
    ideals = {i.members for i in enumerate_graded_ideals(make_quadratic(2, 0))}
    assert frozenset({0}) in ideals
    assert frozenset({0, 2}) in ideals  # (x) in Z2[x]/(x^2), x encoded as 2
    assert frozenset(range(4)) in ideals


def test_enumeration_is_exhaustive_small():
    # brute force over all subsets of Z6 to cross-check the join closure
    ring = make_zn(6)
    expected = set()
    for size in range(1, 7):
        for subset in itertools.combinations(range(6), size):
            if oracle_subset_is_graded_ideal(ring, subset):
                expected.add(frozenset(subset))
    got = {i.members for i in enumerate_graded_ideals(ring)}
    assert got == expected


def test_enumeration_budget():
    with pytest.raises(EnumerationBudgetError):
        enumerate_graded_ideals(make_zn(12), max_order=8)


def test_ideal_product_examples():
    r24 = make_zn(24)
    i2 = ideal_generated_by(r24, {2})
    i3 = ideal_generated_by(r24, {3})
    assert ideal_product(i2, i3).members == ideal_generated_by(r24, {6}).members
    unit = GradedIdeal(r24, frozenset(range(24)))
    for gens in ({8}, {3}, {0}):
        ideal = ideal_generated_by(r24, gens)
        assert ideal_product(ideal, unit).members == ideal.members
    r4 = make_zn(4)
    i = ideal_generated_by(r4, {2})
    assert ideal_product(i, i).members == frozenset({0})


def test_ideal_product_closed_under_enumeration(ring_pool):
    for ring in ring_pool:
        ideals = enumerate_graded_ideals(ring)
        all_sets = {i.members for i in ideals}
        for a in ideals[:4]:
            for b in ideals[:4]:
                assert ideal_product(a, b).members in all_sets
                assert (a.members & b.members) in all_sets


def test_homogeneous_radical_examples():
    r24 = make_zn(24)
    i8 = ideal_generated_by(r24, {8})
    assert oracle_radical(r24, i8.members) == set(range(0, 24, 2))
    assert homogeneous_radical(i8) == frozenset(range(0, 24, 2))
    unit = GradedIdeal(r24, frozenset(range(24)))
    assert homogeneous_radical(unit) == r24.hom
    r12 = make_zn(12)
    assert homogeneous_radical(GradedIdeal(r12, frozenset({0}))) == frozenset({0, 6})


def test_radical_invariants(ring_pool):
    for ring in ring_pool:
        for ideal in enumerate_graded_ideals(ring):
            rad = homogeneous_radical(ideal)
            assert ideal.members & ring.hom <= rad
            again = homogeneous_radical(ideal_generated_by(ring, rad))
            assert again == rad


def test_weakly_prime_ideal_examples():
    r12 = make_zn(12)
    ok, _ = is_graded_weakly_prime_ideal(GradedIdeal(r12, frozenset({0})))
    assert ok  # 3*4 = 0 is excused by the nonzero escape
    ok, _ = is_graded_weakly_prime_ideal(ideal_generated_by(r12, {2}))
    assert ok
    ok, witness = is_graded_weakly_prime_ideal(ideal_generated_by(r12, {4}))
    assert not ok and witness == (2, 2)
    with pytest.raises(ValueError):
        is_graded_weakly_prime_ideal(GradedIdeal(r12, frozenset(range(12))))


def test_weakly_prime_matches_oracle(ring_pool):
    for ring in ring_pool:
        if ring.order > 16:
            continue
        for ideal in enumerate_graded_ideals(ring):
            if not ideal.is_proper():
                continue
            ok, _ = is_graded_weakly_prime_ideal(ideal)
            assert ok == oracle_weakly_prime(ring, ideal.members)


# ---------------------------------------------------------------------------
# multiplicative sets
# ---------------------------------------------------------------------------


def test_multiplicative_set_validation():
    r12 = make_zn(12)
    s = validate_multiplicative_set(r12, {1, 3, 9})
    assert s.members == frozenset({1, 3, 9})
    with pytest.raises(ValidationError):
        validate_multiplicative_set(r12, {3, 9})  # missing one
    with pytest.raises(ValidationError):
        validate_multiplicative_set(r12, {0, 1})
    with pytest.raises(ValidationError):
        validate_multiplicative_set(r12, {1, 2})  # 2*2=4 missing


def test_enumerate_multiplicative_sets(ring_pool):
    for ring in ring_pool:
        sets = enumerate_multiplicative_sets(ring)
        seen = set()
        for s in sets:
            validate_multiplicative_set(ring, s.members)
            assert s.members not in seen
            seen.add(s.members)
        assert frozenset({ring.one}) in seen or any(ring.one in s for s in seen)
