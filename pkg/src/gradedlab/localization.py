"""Rings and modules of fractions at a multiplicative set of homogeneous elements.

Pairs (r, s) with s in S are identified when t*(r*s' - r'*s) = 0 for some
t in S; since the S-torsion K = {a : exists t in S with t*a = 0} is an
ideal, the relation is "difference lies in K", which makes the equivalence
checks and class construction cheap.  The construction verifies, on every
instance: the relation is an equivalence, the induced operations are
well-defined on classes, the localized structure revalidates as a graded
ring/module with deg(r/s) = deg(r) - deg(s), and the canonical map is a
degree-preserving homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .modules import (
    GradedModule,
    GradedSubmodule,
    colon_into_ring,
    is_graded_submodule,
    validate_module,
)
from .rings import (
    GradedIdeal,
    GradedRing,
    MultiplicativeSet,
    is_graded_ideal,
    validate_ring,
)

Pair = tuple[int, int]


class LocalizationInvariantError(RuntimeError):
    """An internal invariant of the fraction construction failed."""


def _sub_table(add: np.ndarray, neg: Sequence[int]) -> np.ndarray:
    return add[:, np.asarray(neg, dtype=np.int64)]


def _partition_by_relation(rel: np.ndarray, what: str) -> np.ndarray:
    """Class ids (by first occurrence) after verifying rel is an equivalence.

    reflexive: diagonal holds; symmetric: rel equals its transpose; and the
    partition test: rel must coincide with "same row", which is exactly
    transitivity for a reflexive symmetric relation.
    """
    n = rel.shape[0]
    if not rel.diagonal().all():
        raise LocalizationInvariantError(f"{what}: fraction relation is not reflexive")
    if not np.array_equal(rel, rel.T):
        raise LocalizationInvariantError(f"{what}: fraction relation is not symmetric")
    ids: dict[bytes, int] = {}
    cls = np.empty(n, dtype=np.int64)
    for i in range(n):
        key = rel[i].tobytes()
        if key not in ids:
            ids[key] = len(ids)
        cls[i] = ids[key]
    if not np.array_equal(rel, cls[:, None] == cls[None, :]):
        raise LocalizationInvariantError(f"{what}: fraction relation is not transitive")
    return cls


@dataclass
class LocalizedRing:
    base: GradedRing
    sset: MultiplicativeSet
    ring: GradedRing
    pair_class: dict[Pair, int]
    class_pairs: tuple[tuple[Pair, ...], ...]
    reps: tuple[Pair, ...]
    phi: tuple[int, ...]
    torsion: frozenset[int]

    def class_of(self, r: int, s: int) -> int:
        return self.pair_class[(r, s)]


@dataclass
class LocalizedModule:
    base: GradedModule
    sset: MultiplicativeSet
    ring_loc: LocalizedRing
    module: GradedModule
    pair_class: dict[Pair, int]
    class_pairs: tuple[tuple[Pair, ...], ...]
    reps: tuple[Pair, ...]
    phi: tuple[int, ...]
    torsion: frozenset[int]

    def class_of(self, m: int, s: int) -> int:
        return self.pair_class[(m, s)]


def s_torsion(ring_or_module, sset: MultiplicativeSet, *, module: bool = False) -> frozenset[int]:
    """Elements killed by some member of S (an ideal/submodule; checked in tests)."""
    if module:
        mod = ring_or_module
        return frozenset(
            a for a in range(mod.order)
            if any(mod.act(t, a) == mod.zero for t in sorted(sset.members))
        )
    ring = ring_or_module
    return frozenset(
        a for a in range(ring.order)
        if any(ring.mul(t, a) == ring.zero for t in sorted(sset.members))
    )


def localize_ring(base: GradedRing, sset: MultiplicativeSet) -> LocalizedRing:
    """Construct R_S with the canonical map, verifying every construction invariant."""
    if sset.ring is not base:
        raise ValueError("multiplicative set belongs to a different ring")
    s_sorted = sorted(sset.members)
    torsion = s_torsion(base, sset)
    k_mask = np.zeros(base.order, dtype=bool)
    k_mask[list(torsion)] = True

    pairs = [(r, s) for r in range(base.order) for s in s_sorted]
    rnum = np.array([p[0] for p in pairs], dtype=np.int64)
    sden = np.array([p[1] for p in pairs], dtype=np.int64)
    sub = _sub_table(base.add_table, base.neg_table)

    cross = base.mul_table[rnum[:, None], sden[None, :]]  # cross[i,j] = r_i * s_j
    rel = k_mask[sub[cross, cross.T]]
    cls = _partition_by_relation(rel, "ring localization")

    pair_class = {p: int(cls[i]) for i, p in enumerate(pairs)}
    count = int(cls.max()) + 1
    members: list[list[Pair]] = [[] for _ in range(count)]
    for i, p in enumerate(pairs):
        members[cls[i]].append(p)
    class_pairs = tuple(tuple(ms) for ms in members)  # pairs were generated in lex order
    reps = tuple(ms[0] for ms in class_pairs)

    def cls_of(r: int, s: int) -> int:
        return pair_class[(r, s)]

    add = [[0] * count for _ in range(count)]
    mul = [[0] * count for _ in range(count)]
    for i, (a, s) in enumerate(reps):
        for j, (b, t) in enumerate(reps):
            num = base.add(base.mul(a, t), base.mul(b, s))
            add[i][j] = cls_of(num, base.mul(s, t))
            mul[i][j] = cls_of(base.mul(a, b), base.mul(s, t))

    # Well-definedness: the choice of representative on either side is irrelevant
    # (the operations are symmetric in their arguments, so one side suffices).
    for (a, s), ci in pair_class.items():
        for j, (b, t) in enumerate(reps):
            num = base.add(base.mul(a, t), base.mul(b, s))
            if cls_of(num, base.mul(s, t)) != add[ci][j]:
                raise LocalizationInvariantError(
                    f"addition not well-defined at ({a}/{s}) + ({b}/{t})"
                )
            if cls_of(base.mul(a, b), base.mul(s, t)) != mul[ci][j]:
                raise LocalizationInvariantError(
                    f"multiplication not well-defined at ({a}/{s}) * ({b}/{t})"
                )

    zero_cls = cls_of(base.zero, base.one)
    one_cls = cls_of(base.one, base.one)

    comp: dict[tuple, set[int]] = {g: {zero_cls} for g in base.group.elements}
    for (r, s) in pairs:
        if r == base.zero:
            continue
        dr = base.degree_of(r)
        if dr is None:
            continue
        ds = base.degree_of(s)
        assert ds is not None  # members of S are nonzero homogeneous
        comp[base.group.sub(dr, ds)].add(pair_class[(r, s)])

    labels = tuple(f"{base.label(r)}/{base.label(s)}" for (r, s) in reps)
    ring = validate_ring(
        order=count,
        add_table=add,
        mul_table=mul,
        zero=zero_cls,
        one=one_cls,
        group=base.group,
        components={g: frozenset(c) for g, c in comp.items()},
        labels=labels,
        name=f"({base.name})_S{sorted(sset.members)}",
    )

    phi = tuple(cls_of(r, base.one) for r in range(base.order))
    for r in range(base.order):
        for r2 in range(base.order):
            if phi[base.add(r, r2)] != ring.add(phi[r], phi[r2]):
                raise LocalizationInvariantError(f"canonical map not additive at ({r},{r2})")
            if phi[base.mul(r, r2)] != ring.mul(phi[r], phi[r2]):
                raise LocalizationInvariantError(f"canonical map not multiplicative at ({r},{r2})")
    for g, compg in base.components.items():
        target = ring.components[g]
        for r in compg:
            if phi[r] not in target:
                raise LocalizationInvariantError(f"canonical map does not preserve degree {g}")

    return LocalizedRing(
        base=base,
        sset=sset,
        ring=ring,
        pair_class=pair_class,
        class_pairs=class_pairs,
        reps=reps,
        phi=phi,
        torsion=torsion,
    )


def localize_module(
    base: GradedModule, sset: MultiplicativeSet, ring_loc: Optional[LocalizedRing] = None
) -> LocalizedModule:
    """Construct M_S as a graded module over R_S, with the canonical map."""
    if sset.ring is not base.ring:
        raise ValueError("multiplicative set belongs to a different ring")
    if ring_loc is None:
        ring_loc = localize_ring(base.ring, sset)
    ring = base.ring
    s_sorted = sorted(sset.members)
    torsion = s_torsion(base, sset, module=True)
    k_mask = np.zeros(base.order, dtype=bool)
    k_mask[list(torsion)] = True

    pairs = [(m, s) for m in range(base.order) for s in s_sorted]
    mnum = np.array([p[0] for p in pairs], dtype=np.int64)
    sden = np.array([p[1] for p in pairs], dtype=np.int64)
    sub = _sub_table(base.add_table, base.neg_table)

    cross = base.action[sden[None, :], mnum[:, None]]  # cross[i,j] = s_j * m_i
    rel = k_mask[sub[cross, cross.T]]
    cls = _partition_by_relation(rel, "module localization")

    pair_class = {p: int(cls[i]) for i, p in enumerate(pairs)}
    count = int(cls.max()) + 1
    members: list[list[Pair]] = [[] for _ in range(count)]
    for i, p in enumerate(pairs):
        members[cls[i]].append(p)
    class_pairs = tuple(tuple(ms) for ms in members)
    reps = tuple(ms[0] for ms in class_pairs)

    def cls_of(m: int, s: int) -> int:
        return pair_class[(m, s)]

    add = [[0] * count for _ in range(count)]
    for i, (a, s) in enumerate(reps):
        for j, (b, t) in enumerate(reps):
            num = base.add(base.act(t, a), base.act(s, b))
            add[i][j] = cls_of(num, ring.mul(s, t))
    action = [[0] * count for _ in range(len(ring_loc.reps))]
    for ri, (r, s) in enumerate(ring_loc.reps):
        for j, (m, t) in enumerate(reps):
            action[ri][j] = cls_of(base.act(r, m), ring.mul(s, t))

    for (a, s), ci in pair_class.items():
        for j, (b, t) in enumerate(reps):
            num = base.add(base.act(t, a), base.act(s, b))
            if cls_of(num, ring.mul(s, t)) != add[ci][j]:
                raise LocalizationInvariantError(
                    f"module addition not well-defined at ({a}/{s}) + ({b}/{t})"
                )
        for ri, (r, u) in enumerate(ring_loc.reps):
            if cls_of(base.act(r, a), ring.mul(u, s)) != action[ri][ci]:
                raise LocalizationInvariantError(
                    f"action not well-defined at ({r}/{u}) * ({a}/{s})"
                )
    for (r, u), ri in ring_loc.pair_class.items():
        for j, (m, t) in enumerate(reps):
            if cls_of(base.act(r, m), ring.mul(u, t)) != action[ri][j]:
                raise LocalizationInvariantError(
                    f"action not well-defined at ({r}/{u}) * ({m}/{t})"
                )

    zero_cls = cls_of(base.zero, ring.one)
    comp: dict[tuple, set[int]] = {g: {zero_cls} for g in ring.group.elements}
    for (m, s) in pairs:
        if m == base.zero:
            continue
        dm = base.degree_of(m)
        if dm is None:
            continue
        ds = ring.degree_of(s)
        assert ds is not None
        comp[ring.group.sub(dm, ds)].add(pair_class[(m, s)])

    labels = tuple(f"{base.label(m)}/{ring.label(s)}" for (m, s) in reps)
    module = validate_module(
        ring=ring_loc.ring,
        order=count,
        add_table=add,
        zero=zero_cls,
        action=action,
        components={g: frozenset(c) for g, c in comp.items()},
        labels=labels,
        name=f"({base.name})_S{sorted(sset.members)}",
    )

    phi = tuple(cls_of(m, ring.one) for m in range(base.order))
    for m1 in range(base.order):
        for m2 in range(base.order):
            if phi[base.add(m1, m2)] != module.add(phi[m1], phi[m2]):
                raise LocalizationInvariantError(f"canonical map not additive at ({m1},{m2})")
    for r in range(ring.order):
        for m in range(base.order):
            if phi[base.act(r, m)] != module.act(ring_loc.phi[r], phi[m]):
                raise LocalizationInvariantError(f"canonical map not action-compatible at ({r},{m})")
    for g, compg in base.components.items():
        target = module.components[g]
        for m in compg:
            if phi[m] not in target:
                raise LocalizationInvariantError(f"canonical map does not preserve degree {g}")

    return LocalizedModule(
        base=base,
        sset=sset,
        ring_loc=ring_loc,
        module=module,
        pair_class=pair_class,
        class_pairs=class_pairs,
        reps=reps,
        phi=phi,
        torsion=torsion,
    )


# ---------------------------------------------------------------------------
# extension and contraction
# ---------------------------------------------------------------------------


def extend_submodule(loc: LocalizedModule, sub: GradedSubmodule) -> GradedSubmodule:
    """N_S = classes of (n, s) with n in N, s in S; verified to be a graded submodule."""
    if sub.module is not loc.base:
        raise ValueError("submodule does not belong to the localized base module")
    members = frozenset(
        loc.pair_class[(n, s)] for n in sub.members for s in sorted(loc.sset.members)
    )
    ok, violation = is_graded_submodule(loc.module, members)
    if not ok:
        raise LocalizationInvariantError(f"extension is not a graded submodule: {violation}")
    return GradedSubmodule(loc.module, members)


def extend_ideal(loc: LocalizedRing, ideal: GradedIdeal) -> GradedIdeal:
    """P_S = classes of (p, s) with p in P, s in S; verified to be a graded ideal."""
    if ideal.ring is not loc.base:
        raise ValueError("ideal does not belong to the localized base ring")
    members = frozenset(
        loc.pair_class[(p, s)] for p in ideal.members for s in sorted(loc.sset.members)
    )
    ok, violation = is_graded_ideal(loc.ring, members)
    if not ok:
        raise LocalizationInvariantError(f"extension is not a graded ideal: {violation}")
    return GradedIdeal(loc.ring, members)


def contract_submodule(loc: LocalizedModule, sub: GradedSubmodule) -> GradedSubmodule:
    """Preimage of a submodule of M_S under the canonical map."""
    if sub.module is not loc.module:
        raise ValueError("submodule does not belong to the localized module")
    members = frozenset(m for m in range(loc.base.order) if loc.phi[m] in sub.members)
    ok, violation = is_graded_submodule(loc.base, members)
    if not ok:
        raise LocalizationInvariantError(f"contraction is not a graded submodule: {violation}")
    return GradedSubmodule(loc.base, members)


def contract_ideal(loc: LocalizedRing, ideal: GradedIdeal) -> GradedIdeal:
    """Preimage of an ideal of R_S under the canonical map."""
    if ideal.ring is not loc.ring:
        raise ValueError("ideal does not belong to the localized ring")
    members = frozenset(r for r in range(loc.base.order) if loc.phi[r] in ideal.members)
    ok, violation = is_graded_ideal(loc.base, members)
    if not ok:
        raise LocalizationInvariantError(f"contraction is not a graded ideal: {violation}")
    return GradedIdeal(loc.base, members)


def localized_colon_agrees(
    loc: LocalizedModule, sub: GradedSubmodule, target: GradedSubmodule
) -> tuple[bool, frozenset[int], frozenset[int]]:
    """Compare (N :_R L)_S with (N_S :_{R_S} L_S); both sides computed independently.

    Returns (equal, extended-colon members, localized-colon members), all as
    class-id sets in R_S.
    """
    colon_base = colon_into_ring(sub, target)
    left = extend_ideal(loc.ring_loc, colon_base).members

    n_s = extend_submodule(loc, sub)
    l_s = extend_submodule(loc, target)
    right = frozenset(
        rho
        for rho in range(loc.ring_loc.ring.order)
        if all(loc.module.act(rho, mu) in n_s.members for mu in sorted(l_s.members))
    )
    return left == right, left, right


def correspondence_check(
    loc: LocalizedModule,
    ideal: GradedIdeal,
    *,
    base_submodules: Optional[Sequence[GradedSubmodule]] = None,
    base_verdict=None,
    loc_submodules: Optional[Sequence[GradedSubmodule]] = None,
    loc_verdict=None,
    max_order: int = 64,
) -> tuple[bool, list[tuple[tuple[int, ...], tuple[int, ...]]], Optional[tuple]]:
    """Are extension and contraction mutually inverse bijections between the
    weakly primal submodules with adjoint P and those with adjoint P_S?

    Returns (ok, pairing, problem).  The pairing lists (base members,
    localized class members) for each matched submodule; on failure the
    problem names what broke and with which sets.  Classification callables
    can be injected so a harness may reuse cached verdicts.
    """
    from .primality import classify  # local import: primality sits above this module
    from .modules import enumerate_graded_submodules

    base_verdict = base_verdict or classify
    loc_verdict = loc_verdict or classify
    if base_submodules is None:
        base_submodules = enumerate_graded_submodules(loc.base, max_order=max_order)
    if loc_submodules is None:
        loc_submodules = enumerate_graded_submodules(loc.module, max_order=max_order)

    p_s = extend_ideal(loc.ring_loc, ideal)
    fam_m = []
    for sub in base_submodules:
        v = base_verdict(sub)
        if v.is_weakly_primal and v.adjoint is not None and v.adjoint.members == ideal.members:
            fam_m.append(sub)
    fam_s: set[frozenset[int]] = set()
    for sub_s in loc_submodules:
        v = loc_verdict(sub_s)
        if v.is_weakly_primal and v.adjoint is not None and v.adjoint.members == p_s.members:
            fam_s.add(sub_s.members)

    pairing: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for sub in fam_m:
        n_s = extend_submodule(loc, sub)
        if n_s.members not in fam_s:
            return False, pairing, ("extension_leaves_family", sub.members, n_s.members)
        if contract_submodule(loc, n_s).members != sub.members:
            return False, pairing, ("not_inverse_on_base", sub.members, n_s.members)
        pairing.append((sub.sorted_members, tuple(sorted(n_s.members))))
    for members in sorted(fam_s, key=lambda s: (len(s), sorted(s))):
        sub_s = GradedSubmodule(loc.module, members)
        contracted = contract_submodule(loc, sub_s)
        v_c = base_verdict(contracted)
        in_family = (
            v_c.is_weakly_primal
            and v_c.adjoint is not None
            and v_c.adjoint.members == ideal.members
        )
        if not in_family:
            return False, pairing, ("contraction_leaves_family", members, contracted.members)
        if extend_submodule(loc, contracted).members != members:
            return False, pairing, ("not_inverse_on_localization", members, contracted.members)
    return True, pairing, None
