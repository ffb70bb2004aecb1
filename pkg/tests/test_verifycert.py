"""Tampering resistance of the certificate checker, fact family by family."""

import pytest

import gradedlab.claims as cl
from gradedlab import (
    GradedSubmodule,
    classify,
    enumerate_multiplicative_sets,
    localize_module,
    make_zn,
    ring_as_module,
    submodule_generated_by,
)
from gradedlab.instances import Budget, build_instance, enumerate_instances
from gradedlab.verifycert import _MiniLoc, verify_certificate

ZN24 = {"kind": "zn", "n": 24}
ZMOD = {"kind": "z_mod", "n": 24, "d": 8}


def _check(desc, fact):
    return verify_certificate({"instance": desc, "facts": [fact]})


@pytest.mark.parametrize(
    "good,bad",
    [
        # element predicates
        (
            {"kind": "ngwp", "sub": [0, 8, 16], "x": 2, "m": 4},
            {"kind": "ngwp", "sub": [0, 8, 16], "x": 6, "m": 4},
        ),
        (
            {"kind": "gwp", "sub": [0, 8, 16], "x": 6},
            {"kind": "gwp", "sub": [0, 8, 16], "x": 2},
        ),
        (
            {"kind": "not_prime", "sub": [0, 8, 16], "x": 6, "m": 4},
            {"kind": "not_prime", "sub": [0, 8, 16], "x": 1, "m": 4},
        ),
        (
            {"kind": "prime", "sub": [0, 8, 16], "x": 1},
            {"kind": "prime", "sub": [0, 8, 16], "x": 2},
        ),
        (
            {"kind": "nwp", "sub": [0, 8, 16], "x": 2, "m": 4},
            {"kind": "nwp", "sub": [0, 8, 16], "x": 2, "m": 8},
        ),
        # set recomputations
        (
            {"kind": "gw_set_equals", "sub": [0, 8, 16],
             "members": [2, 4, 8, 10, 14, 16, 20, 22]},
            {"kind": "gw_set_equals", "sub": [0, 8, 16],
             "members": [2, 4, 8, 10, 14, 16, 20]},
        ),
        (
            {"kind": "set_is_graded_ideal", "members": [0, 8, 16]},
            {"kind": "set_is_graded_ideal", "members": [0, 8]},
        ),
        (
            {"kind": "set_not_graded_ideal",
             "members": [0, 2, 4, 8, 10, 14, 16, 20, 22], "violation": ["add", 2, 4]},
            {"kind": "set_not_graded_ideal",
             "members": [0, 2, 4, 8, 10, 14, 16, 20, 22], "violation": ["add", 2, 2]},
        ),
        # colon algebra
        (
            {"kind": "colon_equals", "sub": [0, 8, 16], "target": None,
             "members": [0, 8, 16]},
            {"kind": "colon_equals", "sub": [0, 8, 16], "target": None,
             "members": [0, 4, 8, 12, 16, 20]},
        ),
        (
            {"kind": "ideal_times_equals", "ideal": [0, 8, 16],
             "target": list(range(24)), "members": [0, 8, 16]},
            {"kind": "ideal_times_equals", "ideal": [0, 8, 16],
             "target": list(range(24)), "members": [0]},
        ),
        (
            {"kind": "ann_module_equals", "members": [0]},
            {"kind": "ann_module_equals", "members": [0, 12]},
        ),
        (
            {"kind": "cyclic_generator", "m": 1},
            {"kind": "cyclic_generator", "m": 2},
        ),
        (
            {"kind": "annihilates_quotient", "sub": [0, 8, 16], "r": 8},
            {"kind": "annihilates_quotient", "sub": [0, 8, 16], "r": 2},
        ),
        # ideal-level predicates
        (
            {"kind": "weakly_prime_ideal_violation",
             "members": [0, 4, 8, 12, 16, 20], "x": 2, "y": 2},
            {"kind": "weakly_prime_ideal_violation",
             "members": [0, 4, 8, 12, 16, 20], "x": 2, "y": 3},
        ),
        (
            {"kind": "weakly_prime_ideal_holds", "members": [0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22]},
            {"kind": "weakly_prime_ideal_holds", "members": [0, 4, 8, 12, 16, 20]},
        ),
        (
            {"kind": "weakly_primary_holds", "sub": [0, 8, 16]},
            {"kind": "weakly_prime_holds", "sub": [0, 8, 16]},
        ),
        (
            # N = (2) is weakly primal with the even ideal as adjoint
            {"kind": "characterization_holds",
             "sub": [0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22],
             "adjoint": [0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22]},
            # N = (8) is not: 6 is weakly prime to it yet sits in the even ideal
            {"kind": "characterization_holds", "sub": [0, 8, 16],
             "adjoint": [0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22]},
        ),
        # localization facts (S = {1, 4} has torsion: 4*3 = 12, 4*6 = 0 mod 24)
        (
            {"kind": "loc_in_sub_extension", "s_set": [1, 4], "sub": [0], "pair": [6, 1]},
            {"kind": "loc_in_sub_extension", "s_set": [1, 4], "sub": [0], "pair": [3, 1]},
        ),
        (
            {"kind": "loc_nonzero", "s_set": [1, 4], "space": "module", "pair": [3, 1]},
            {"kind": "loc_nonzero", "s_set": [1, 4], "space": "module", "pair": [6, 1]},
        ),
        (
            {"kind": "loc_contract_equals", "s_set": [1, 4], "class_pairs": [[0, 1]],
             "members": [0, 6, 12, 18]},
            {"kind": "loc_contract_equals", "s_set": [1, 4], "class_pairs": [[0, 1]],
             "members": [0]},
        ),
    ],
)
def test_fact_families_accept_and_reject(good, bad):
    assert _check(ZN24, good)
    assert not _check(ZN24, bad)


@pytest.mark.parametrize(
    "good,bad",
    [
        (
            {"kind": "z_ngwp", "x": 2, "m": 4},
            {"kind": "z_ngwp", "x": 6, "m": 4},
        ),
        (
            {"kind": "z_gwp", "x": 6},
            {"kind": "z_gwp", "x": 2},
        ),
        (
            {"kind": "z_gw_classes_equal", "classes": [2, 4, 8, 10, 14, 16, 20, 22]},
            {"kind": "z_gw_classes_equal", "classes": [2, 4]},
        ),
        (
            {"kind": "z_colon_classes_equal", "classes": [0, 8, 16]},
            {"kind": "z_colon_classes_equal", "classes": [0]},
        ),
        (
            {"kind": "z_set_not_ideal", "classes": [2, 4, 8, 10, 14, 16, 20, 22],
             "violation": ["add", 2, 4, 6]},
            {"kind": "z_set_not_ideal", "classes": [2, 4, 8, 10, 14, 16, 20, 22],
             "violation": ["add", 2, 2, 4]},
        ),
        (
            {"kind": "z_weakly_primary_holds"},
            {"kind": "z_weakly_prime_holds"},
        ),
    ],
)
def test_z_fact_families_accept_and_reject(good, bad):
    assert _check(ZMOD, good)
    assert not _check(ZMOD, bad)


def test_tampered_run_certificates_fail():
    """Flip one element in each real certificate; verification must reject
    the tampered copy (or the flip must be immaterial to every fact)."""
    budget = Budget(max_zn=12, max_quadratic_n=3, include_products=False,
                    z_int_max=6, z_mod_max=8)
    insts = enumerate_instances(budget)
    results = cl.run_claims(cl.registry(), insts, budget)
    tampered_rejections = 0
    for res in results:
        if res.certificate is None:
            continue
        assert verify_certificate(res.certificate)
        import copy

        for i, fact in enumerate(res.certificate["facts"]):
            for key in ("x", "m", "members", "classes"):
                if key not in fact:
                    continue
                bad = copy.deepcopy(res.certificate)
                if isinstance(fact[key], int):
                    bad["facts"][i][key] = fact[key] + 1
                elif fact[key]:
                    bad["facts"][i][key] = fact[key][1:]
                else:
                    bad["facts"][i][key] = [0]
                if not verify_certificate(bad):
                    tampered_rejections += 1
                break
            break
    assert tampered_rejections > 0


def test_miniloc_agrees_with_localization_layer():
    """The verifier's independent fraction construction must reproduce the
    main localization: same class partition and the same GW sets."""
    for n in (8, 12, 16):
        ring = make_zn(n)
        module = ring_as_module(ring)
        subs = [submodule_generated_by(module, {g}) for g in (0, 2, n // 2)]
        for sset in enumerate_multiplicative_sets(ring)[:6]:
            loc = localize_module(module, sset)
            mini = _MiniLoc(ring, module, sset.members)
            # identical partitions of the module pairs
            for pair, cid in loc.pair_class.items():
                assert mini.mcls[pair] == cid
            for pair, cid in loc.ring_loc.pair_class.items():
                assert mini.rcls[pair] == cid
            for sub in subs:
                from gradedlab import extend_submodule

                ext = extend_submodule(loc, sub)
                verdict = classify(ext)
                assert mini.gw_of(ext.members) == frozenset(verdict.gw)


def test_no_factorization_fact_semantics():
    # over a pool containing only the zero ideal, nothing nontrivial factors
    fact = {
        "kind": "no_factorization",
        "sub": [0, 8, 16],
        "max_len": 2,
        "pool": [[0]],
        "tails": [[0]],
    }
    assert _check(ZN24, fact)
    # providing the genuine pool lets the product be found, so the fact fails
    fact_bad = {
        "kind": "no_factorization",
        "sub": [0, 8, 16],
        "max_len": 3,
        "pool": [[0, 4, 8, 12, 16, 20]],
        "tails": [[0, 4, 8, 12, 16, 20]],
    }
    assert not _check(ZN24, fact_bad)
