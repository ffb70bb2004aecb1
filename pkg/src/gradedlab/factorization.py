"""Weakly primal factorizations of graded ideals and submodules.

A ring is a WP-ring when every graded ideal is a finite product of graded
weakly primal ideals; a module is a WP-module when every graded submodule N
factors as P_1 * ... * P_n * N' with each P_i a graded weakly primal ideal
and N' a graded weakly primal submodule.  The search runs over canonical
non-decreasing factor tuples (ordered by the deterministic ideal
enumeration) up to a length bound, with pairwise products memoized; the
empty product is the unit ideal, so n = 0 factors a submodule exactly when
it is itself weakly primal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .modules import (
    GradedModule,
    GradedSubmodule,
    enumerate_graded_submodules,
    ideal_times_module,
    submodule_generated_by,
)
from .primality import classify, is_graded_weakly_primal_ideal
from .rings import (
    GradedIdeal,
    GradedRing,
    enumerate_graded_ideals,
    ideal_generated_by,
    ideal_product,
)


@dataclass
class Factorization:
    """Factors, tail, and the recomputed product backing N = P_1...P_n N'."""

    factors: tuple[GradedIdeal, ...]
    tail: GradedSubmodule
    product_members: frozenset[int]

    @property
    def length(self) -> int:
        return len(self.factors)


@dataclass
class SearchOutcome:
    found: Optional[Factorization]
    searched: int


def weakly_primal_ideals(ring: GradedRing, *, proper_only: bool = False, max_order: int = 64) -> list[GradedIdeal]:
    """The graded weakly primal ideals, in enumeration order."""
    pool = []
    for ideal in enumerate_graded_ideals(ring, max_order=max_order):
        if proper_only and not ideal.is_proper():
            continue
        ok, _, _ = is_graded_weakly_primal_ideal(ideal)
        if ok:
            pool.append(ideal)
    return pool


class _ProductCache:
    """Memoized left-fold products of pool ideals, keyed by index tuples."""

    def __init__(self, ring: GradedRing, pool: list[GradedIdeal]):
        self.ring = ring
        self.pool = pool
        self.cache: dict[tuple[int, ...], frozenset[int]] = {
            (): frozenset(range(ring.order))
        }

    def product(self, indices: tuple[int, ...]) -> frozenset[int]:
        if indices in self.cache:
            return self.cache[indices]
        head = self.product(indices[:-1])
        result = ideal_product(
            GradedIdeal(self.ring, head), self.pool[indices[-1]]
        ).members
        self.cache[indices] = result
        return result


def ideal_factorization(
    ring: GradedRing,
    target: GradedIdeal,
    max_len: int = 4,
    *,
    proper_only: bool = False,
    pool: Optional[list[GradedIdeal]] = None,
) -> tuple[Optional[tuple[GradedIdeal, ...]], int]:
    """First product of weakly primal ideals equal to the target, or None.

    With ``proper_only`` the unit ideal is excluded from the pool and the
    unit target is assigned the empty product.
    """
    if pool is None:
        pool = weakly_primal_ideals(ring, proper_only=proper_only)
    if not target.is_proper() and proper_only:
        return (), 0
    cache = _ProductCache(ring, pool)
    searched = 0
    for length in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(range(len(pool)), length):
            searched += 1
            if cache.product(combo) == target.members:
                return tuple(pool[i] for i in combo), searched
    return None, searched


def is_wp_ring(
    ring: GradedRing, max_len: int = 4, *, proper_only: bool = False, max_order: int = 64
) -> tuple[bool, dict[frozenset[int], Optional[tuple[GradedIdeal, ...]]]]:
    """Does every graded ideal factor into weakly primal ideals?

    Returns the verdict and the factorization found (or None) per ideal.
    """
    pool = weakly_primal_ideals(ring, proper_only=proper_only, max_order=max_order)
    outcomes: dict[frozenset[int], Optional[tuple[GradedIdeal, ...]]] = {}
    verdict = True
    for ideal in enumerate_graded_ideals(ring, max_order=max_order):
        factors, _ = ideal_factorization(
            ring, ideal, max_len, proper_only=proper_only, pool=pool
        )
        outcomes[ideal.members] = factors
        if factors is None:
            verdict = False
    return verdict, outcomes


def weakly_primal_factorization(
    sub: GradedSubmodule,
    max_len: int = 4,
    *,
    proper_only: bool = False,
    pool: Optional[list[GradedIdeal]] = None,
    tails: Optional[list[GradedSubmodule]] = None,
    max_order: int = 64,
) -> SearchOutcome:
    """First weakly primal factorization of N in canonical search order.

    Search order: factor count n ascending from 0, then factor tuples in
    non-decreasing pool order, then tails in enumeration order.  Every
    returned factorization carries the recomputed product for revalidation.
    """
    module = sub.module
    ring = module.ring
    if pool is None:
        pool = weakly_primal_ideals(ring, proper_only=proper_only, max_order=max_order)
    if tails is None:
        tails = [
            s for s in enumerate_graded_submodules(module, max_order=max_order)
            if classify(s).is_weakly_primal
        ]
    cache = _ProductCache(ring, pool)
    searched = 0
    for length in range(0, max_len + 1):
        for combo in itertools.combinations_with_replacement(range(len(pool)), length):
            prod = cache.product(combo)
            for tail in tails:
                searched += 1
                members = ideal_times_module(GradedIdeal(ring, prod), tail).members
                if members == sub.members:
                    return SearchOutcome(
                        Factorization(
                            factors=tuple(pool[i] for i in combo),
                            tail=tail,
                            product_members=members,
                        ),
                        searched,
                    )
    return SearchOutcome(None, searched)


def is_wp_module(
    module: GradedModule, max_len: int = 4, *, proper_only: bool = False, max_order: int = 64
) -> tuple[bool, dict[frozenset[int], Optional[Factorization]]]:
    """Does every graded submodule admit a weakly primal factorization?"""
    ring = module.ring
    pool = weakly_primal_ideals(ring, proper_only=proper_only, max_order=max_order)
    tails = [
        s for s in enumerate_graded_submodules(module, max_order=max_order)
        if classify(s).is_weakly_primal
    ]
    outcomes: dict[frozenset[int], Optional[Factorization]] = {}
    verdict = True
    for sub in enumerate_graded_submodules(module, max_order=max_order):
        outcome = weakly_primal_factorization(
            sub, max_len, proper_only=proper_only, pool=pool, tails=tails, max_order=max_order
        )
        outcomes[sub.members] = outcome.found
        if outcome.found is None:
            verdict = False
    return verdict, outcomes


def revalidate_factorization(sub: GradedSubmodule, fact: Factorization) -> bool:
    """Re-check a factorization from scratch: factor predicates and the product.

    Recomputes the ideal products by naive generation (not the memo cache)
    and re-derives the weakly primal flags, so a bookkeeping bug in the
    search cannot survive this check.
    """
    module = sub.module
    ring = module.ring
    for factor in fact.factors:
        ok, _, _ = is_graded_weakly_primal_ideal(factor)
        if not ok:
            return False
    if not classify(fact.tail).is_weakly_primal:
        return False
    acc = frozenset(range(ring.order))
    for factor in fact.factors:
        gens = {ring.mul(a, b) for a in acc for b in factor.members}
        acc = ideal_generated_by(ring, gens).members
    gens = {module.act(a, m) for a in acc for m in fact.tail.members}
    product = submodule_generated_by(module, gens).members
    return product == sub.members and product == fact.product_members
