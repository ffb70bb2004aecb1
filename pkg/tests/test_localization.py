from gradedlab import (
    GradedSubmodule,
    contract_ideal,
    contract_submodule,
    enumerate_graded_submodules,
    enumerate_multiplicative_sets,
    extend_ideal,
    extend_submodule,
    ideal_generated_by,
    localize_module,
    localize_ring,
    localized_colon_agrees,
    make_quadratic,
    make_zn,
    ring_as_module,
    submodule_generated_by,
    validate_multiplicative_set,
)


def oracle_class_count(ring, s_members):
    """Count fraction classes by the raw three-quantifier definition."""
    s = sorted(s_members)
    pairs = [(r, u) for r in range(ring.order) for u in s]

    def equiv(p, q):
        (r1, s1), (r2, s2) = p, q
        return any(
            ring.mul(t, ring.sub(ring.mul(r1, s2), ring.mul(r2, s1))) == ring.zero
            for t in s
        )

    classes = []
    for p in pairs:
        for cls in classes:
            if equiv(p, cls[0]):
                cls.append(p)
                break
        else:
            classes.append([p])
    return len(classes)


def test_localize_z12_at_3():
    ring = make_zn(12)
    sset = validate_multiplicative_set(ring, {1, 3, 9})
    assert oracle_class_count(ring, sset.members) == 4
    loc = localize_ring(ring, sset)
    assert loc.ring.order == 4
    # m/1 ~ m'/1 iff m = m' mod 4
    for m in range(12):
        for m2 in range(12):
            assert (loc.phi[m] == loc.phi[m2]) == ((m - m2) % 4 == 0)


def test_localize_at_units_is_isomorphic():
    ring = make_zn(12)
    sset = validate_multiplicative_set(ring, {1, 5})
    loc = localize_ring(ring, sset)
    assert loc.ring.order == 12
    assert len(set(loc.phi)) == 12


def test_zero_ring_never_arises(ring_pool):
    for ring in ring_pool:
        for sset in enumerate_multiplicative_sets(ring):
            loc = localize_ring(ring, sset)
            assert loc.ring.order >= 2  # 1/1 never collapses onto 0/1


def test_localized_structures_revalidate(ring_pool):
    # localize_ring / localize_module raise if any construction invariant
    # fails, including full revalidation; run them across the pool.
    for ring in ring_pool:
        module = ring_as_module(ring)
        for sset in enumerate_multiplicative_sets(ring):
            loc = localize_module(module, sset)
            assert loc.module.ring is loc.ring_loc.ring
            # canonical maps preserve degrees (checked again here for the record)
            for g, comp in ring.components.items():
                for r in comp:
                    assert loc.ring_loc.phi[r] in loc.ring_loc.ring.components[g]


def test_extension_examples():
    ring = make_zn(12)
    module = ring_as_module(ring)
    sset = validate_multiplicative_set(ring, {1, 3, 9})
    loc = localize_module(module, sset)
    full = GradedSubmodule(module, frozenset(range(12)))
    assert extend_submodule(loc, full).members == frozenset(range(loc.module.order))
    zero = GradedSubmodule(module, frozenset({0}))
    assert extend_submodule(loc, zero).members == frozenset({loc.module.zero})
    n4 = submodule_generated_by(module, {4})
    assert extend_submodule(loc, n4).members == frozenset({loc.module.zero})  # 3*4 = 0


def test_contraction_examples():
    ring = make_zn(12)
    module = ring_as_module(ring)
    sset = validate_multiplicative_set(ring, {1, 3, 9})
    loc = localize_module(module, sset)
    full = GradedSubmodule(loc.module, frozenset(range(loc.module.order)))
    assert contract_submodule(loc, full).members == frozenset(range(12))
    zero_cls = GradedSubmodule(loc.module, frozenset({loc.module.zero}))
    assert contract_submodule(loc, zero_cls).members == frozenset({0, 4, 8})


def test_extend_then_contract_contains(ring_pool):
    for ring in ring_pool:
        module = ring_as_module(ring)
        subs = enumerate_graded_submodules(module)
        for sset in enumerate_multiplicative_sets(ring):
            loc = localize_module(module, sset)
            previous = None
            for sub in subs:
                ext = extend_submodule(loc, sub)
                back = contract_submodule(loc, ext)
                assert sub.members <= back.members
                if previous is not None and previous.members <= sub.members:
                    assert extend_submodule(loc, previous).members <= ext.members
                previous = sub


def test_torsion_breaks_equality():
    # the catalog's localization equality fails through S-torsion: with
    # S = {1,4} in Z12, 4*3 = 0 glues 3/1 onto 0/1
    ring = make_zn(12)
    module = ring_as_module(ring)
    sset = validate_multiplicative_set(ring, {1, 4})
    loc = localize_module(module, sset)
    zero = GradedSubmodule(module, frozenset({0}))
    back = contract_submodule(loc, extend_submodule(loc, zero))
    assert back.members == frozenset({0, 3, 6, 9})


def test_localized_colon_trivial_case():
    ring = make_zn(12)
    module = ring_as_module(ring)
    sset = validate_multiplicative_set(ring, {1, 5})
    loc = localize_module(module, sset)
    zero = GradedSubmodule(module, frozenset({0}))
    full = GradedSubmodule(module, frozenset(range(12)))
    equal, left, right = localized_colon_agrees(loc, zero, full)
    assert equal


def test_extend_ideal_and_contract_ideal():
    ring = make_zn(12)
    sset = validate_multiplicative_set(ring, {1, 3, 9})
    loc = localize_ring(ring, sset)
    p = ideal_generated_by(ring, {2})
    ext = extend_ideal(loc, p)
    back = contract_ideal(loc, ext)
    assert p.members <= back.members


def test_correspondence_check_units_and_torsion():
    from gradedlab import correspondence_check

    ring = make_zn(12)
    module = ring_as_module(ring)
    zero_ideal = ideal_generated_by(ring, set())
    # at units the families match and the pairing is a bijection
    units = validate_multiplicative_set(ring, {1, 5})
    loc = localize_module(module, units)
    ok, pairing, problem = correspondence_check(loc, zero_ideal)
    assert ok and problem is None and pairing
    # S-torsion at {1,4} glues 3/1 onto 0/1 and breaks the inverse property
    torsion = validate_multiplicative_set(ring, {1, 4})
    loc = localize_module(module, torsion)
    ok, _, problem = correspondence_check(loc, zero_ideal)
    assert not ok and problem is not None


def test_quadratic_localization_degrees():
    ring = make_quadratic(3, 1)
    x = 3
    sset = validate_multiplicative_set(ring, {ring.one, x})
    loc = localize_ring(ring, sset)
    # x is invertible, so classes of x/1 and 1/x sit in the degree-1 component
    deg1 = loc.ring.components[(1,)]
    assert loc.phi[x] in deg1
    assert loc.class_of(ring.one, x) in deg1
    assert loc.ring.order == 9  # inverting a unit changes nothing
