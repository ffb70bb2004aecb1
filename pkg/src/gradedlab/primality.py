"""Element- and submodule-level primality predicates with witness production.

Conventions used throughout:

* An element x is *weakly prime to* a submodule N when every homogeneous m
  with 0 != x*m in N already lies in N; the witness for the negation is a
  homogeneous m outside N with x*m in N and x*m nonzero.
* Dropping the "nonzero" escape gives the *prime to* predicate and the set
  G(N); letting x and m range over the full (not necessarily homogeneous)
  carriers gives the ungraded set W(N).
* The zero element belongs to no GW set, while every ideal contains zero,
  so "N is weakly primal" is decided on GW(N) together with zero; when that
  set is a graded ideal it is the adjoint ideal of N.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .modules import GradedSubmodule, colon_into_ring
from .rings import GradedIdeal, Violation, is_graded_ideal


class NonHomogeneousScalarError(ValueError):
    """The element-level graded predicates require a homogeneous scalar."""


@dataclass(frozen=True)
class Witness:
    """A re-checkable witness: for kind 'ngwp', m is homogeneous, m is not in
    N, x*m is in N, and x*m is nonzero; kinds 'not_prime' and 'nwp' drop or
    relax the homogeneity/nonzero clauses accordingly."""

    kind: str
    x: int
    m: int


@dataclass
class PrimalityVerdict:
    submodule: GradedSubmodule
    gw: dict[int, Witness]
    g: dict[int, Witness]
    w: dict[int, Witness]
    is_weakly_primal: bool
    is_primal: bool
    is_weakly_prime: bool
    is_weakly_primary: bool
    adjoint: Optional[GradedIdeal]
    gw_ideal_violation: Optional[Violation]
    g_ideal_violation: Optional[Violation]

    @property
    def gw_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.gw))

    @property
    def g_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.g))

    @property
    def w_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.w))


def is_gwp_to_submodule(sub: GradedSubmodule, x: int) -> tuple[bool, Optional[Witness]]:
    """Is x graded weakly prime to N?  On failure returns the witness."""
    module = sub.module
    if x not in module.ring.hom:
        raise NonHomogeneousScalarError(f"scalar {x} is not homogeneous")
    for m in sorted(module.hom):
        if m in sub.members:
            continue
        xm = module.act(x, m)
        if xm != module.zero and xm in sub.members:
            return False, Witness("ngwp", x, m)
    return True, None


def is_gp_to_submodule(sub: GradedSubmodule, x: int) -> tuple[bool, Optional[Witness]]:
    """Is x graded prime to N (no nonzero escape)?"""
    module = sub.module
    if x not in module.ring.hom:
        raise NonHomogeneousScalarError(f"scalar {x} is not homogeneous")
    for m in sorted(module.hom):
        if m in sub.members:
            continue
        if module.act(x, m) in sub.members:
            return False, Witness("not_prime", x, m)
    return True, None


def gw_set(sub: GradedSubmodule) -> dict[int, Witness]:
    """Homogeneous elements not graded weakly prime to N, each with a witness."""
    out: dict[int, Witness] = {}
    for x in sorted(sub.module.ring.hom):
        ok, wit = is_gwp_to_submodule(sub, x)
        if not ok:
            assert wit is not None
            out[x] = wit
    return out


def g_set(sub: GradedSubmodule) -> dict[int, Witness]:
    """Homogeneous elements not graded prime to N."""
    out: dict[int, Witness] = {}
    for x in sorted(sub.module.ring.hom):
        ok, wit = is_gp_to_submodule(sub, x)
        if not ok:
            assert wit is not None
            out[x] = wit
    return out


def w_set(sub: GradedSubmodule) -> dict[int, Witness]:
    """Ring elements not weakly prime to N, with witnesses over the full carrier."""
    module = sub.module
    out: dict[int, Witness] = {}
    for x in range(module.ring.order):
        for m in range(module.order):
            if m in sub.members:
                continue
            xm = module.act(x, m)
            if xm != module.zero and xm in sub.members:
                out[x] = Witness("nwp", x, m)
                break
    return out


def is_weakly_prime_submodule(sub: GradedSubmodule) -> tuple[bool, Optional[Witness]]:
    """0 != x*m in N forces m in N or x in (N :_R M); requires N proper."""
    module = sub.module
    if not sub.is_proper():
        return False, None
    colon = colon_into_ring(sub).members
    for x in sorted(module.ring.hom):
        if x in colon:
            continue
        for m in sorted(module.hom):
            if m in sub.members:
                continue
            xm = module.act(x, m)
            if xm != module.zero and xm in sub.members:
                return False, Witness("weakly_prime_violation", x, m)
    return True, None


def is_weakly_primary_submodule(sub: GradedSubmodule) -> tuple[bool, Optional[Witness]]:
    """Like weakly prime but with x^k in (N :_R M) for some k up to |R|."""
    module = sub.module
    ring = module.ring
    colon = colon_into_ring(sub).members

    def power_lands(x: int) -> bool:
        p = x
        for _ in range(ring.order):
            if p in colon:
                return True
            p = ring.mul(p, x)
        return False

    for x in sorted(ring.hom):
        if power_lands(x):
            continue
        for m in sorted(module.hom):
            if m in sub.members:
                continue
            xm = module.act(x, m)
            if xm != module.zero and xm in sub.members:
                return False, Witness("weakly_primary_violation", x, m)
    return True, None


def classify(sub: GradedSubmodule) -> PrimalityVerdict:
    """Full primality classification of a graded submodule."""
    module = sub.module
    ring = module.ring
    gw = gw_set(sub)
    g = g_set(sub)
    w = w_set(sub)

    gw_closed = frozenset(gw) | {ring.zero}
    weakly_primal, gw_violation = is_graded_ideal(ring, gw_closed)
    g_closed = frozenset(g) | {ring.zero}
    primal, g_violation = is_graded_ideal(ring, g_closed)

    weakly_prime, _ = is_weakly_prime_submodule(sub)
    weakly_primary, _ = is_weakly_primary_submodule(sub)

    adjoint = GradedIdeal(ring, gw_closed) if weakly_primal else None
    return PrimalityVerdict(
        submodule=sub,
        gw=gw,
        g=g,
        w=w,
        is_weakly_primal=weakly_primal,
        is_primal=primal,
        is_weakly_prime=weakly_prime,
        is_weakly_primary=weakly_primary,
        adjoint=adjoint,
        gw_ideal_violation=None if weakly_primal else gw_violation,
        g_ideal_violation=None if primal else g_violation,
    )


# ---------------------------------------------------------------------------
# ideal-level predicates
# ---------------------------------------------------------------------------


def gw_set_ideal(ideal: GradedIdeal) -> dict[int, Witness]:
    """Homogeneous x with some homogeneous y outside P satisfying 0 != x*y in P."""
    ring = ideal.ring
    out: dict[int, Witness] = {}
    for x in sorted(ring.hom):
        for y in sorted(ring.hom):
            if y in ideal.members:
                continue
            xy = ring.mul(x, y)
            if xy != ring.zero and xy in ideal.members:
                out[x] = Witness("ngwp_ideal", x, y)
                break
    return out


def is_graded_weakly_primal_ideal(
    ideal: GradedIdeal,
) -> tuple[bool, dict[int, Witness], Optional[Violation]]:
    """P is graded weakly primal when its gw set together with zero is a graded ideal."""
    gw = gw_set_ideal(ideal)
    ok, violation = is_graded_ideal(ideal.ring, frozenset(gw) | {ideal.ring.zero})
    return ok, gw, violation


# ---------------------------------------------------------------------------
# colon characterization
# ---------------------------------------------------------------------------


def characterization_check(
    sub: GradedSubmodule, adjoint_members: Union[GradedIdeal, frozenset[int], set[int]]
) -> tuple[bool, Optional[tuple]]:
    """Colon-based test that N is weakly primal with the given adjoint set P.

    Requires P to be a graded ideal (a non-ideal P cannot be an adjoint, so
    the check is False with the ideal violation as witness).  Then, writing
    U_p = N union (0 :_M p): every homogeneous p outside P-{0} must satisfy
    (N :_M p) cap h(M) <= U_p, and every homogeneous nonzero p in P must
    violate that inclusion.  Both clauses are decided by colon scans only,
    independently of the GW-set scans.
    """
    module = sub.module
    ring = module.ring
    members = adjoint_members.members if isinstance(adjoint_members, GradedIdeal) else frozenset(adjoint_members)

    ok, violation = is_graded_ideal(ring, members)
    if not ok:
        return False, ("not_an_ideal", violation)

    for p in sorted(ring.hom):
        inside = p in members and p != ring.zero
        failing = None
        for m in sorted(module.hom):
            if module.act(p, m) not in sub.members:
                continue  # m outside (N :_M p)
            if m in sub.members or module.act(p, m) == module.zero:
                continue  # m inside N union (0 :_M p)
            failing = m
            break
        if inside and failing is None:
            return False, ("missing_strict_containment", p)
        if not inside and failing is not None:
            return False, ("containment_violated", p, failing)
    return True, None
