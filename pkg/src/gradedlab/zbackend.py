"""Integer-module shapes and their exact finite reductions.

Two shapes are supported, both trivially graded:

* ``z_int(m)``   -- the integers acting on themselves, with submodule mZ;
* ``z_mod(n,d)`` -- the integers acting on Z_n, with submodule dZ_n (d | n).

Every predicate is decided on residues.  For ``z_mod`` the scalar action of
an integer x coincides with the action of x mod n, so element-level
verdicts equal the table-model verdicts on the surrogate ring Z_n.  For
``z_int`` the product of two nonzero integers is never zero, so the
"nonzero" escape in the weak predicates only ever exempts the scalar 0.
Sets of integers are reported as unions of residue classes; whether such a
set (plus 0) is an ideal of the integers is decided on the residue classes,
with witnesses lifted to small integers.  A windowed brute-force oracle
over |x| <= 4*modulus cross-checks every reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .modules import (
    GradedModule,
    GradedSubmodule,
    colon_into_ring,
    ideal_times_module,
    ring_as_module,
)
from .primality import is_weakly_primary_submodule, is_weakly_prime_submodule
from .rings import GradedRing, make_zn


@dataclass(frozen=True)
class ZInstance:
    """Shape descriptor: kind 'z_int' uses (m); kind 'z_mod' uses (n, d)."""

    kind: str
    m: int = 0
    n: int = 0
    d: int = 0

    def __post_init__(self):
        if self.kind == "z_int":
            if self.m < 1:
                raise ValueError("z_int requires m >= 1")
        elif self.kind == "z_mod":
            if self.n < 1 or self.d < 1 or self.n % self.d != 0:
                raise ValueError("z_mod requires d >= 1 dividing n")
        else:
            raise ValueError(f"unknown shape {self.kind!r}")

    @property
    def modulus(self) -> int:
        return self.m if self.kind == "z_int" else self.n

    def describe(self) -> str:
        if self.kind == "z_int":
            return f"integers with submodule {self.m}Z"
        return f"Z_{self.n} over the integers with submodule {self.d}Z_{self.n}"


def surrogate(z: ZInstance) -> tuple[GradedRing, GradedModule, GradedSubmodule]:
    """The exact finite table model used for residue computations."""
    q = z.modulus
    ring = make_zn(q)
    module = ring_as_module(ring)
    if z.kind == "z_int":
        members = frozenset({0})
    else:
        members = frozenset(range(0, z.n, z.d)) if z.d < z.n else frozenset({0})
    return ring, module, GradedSubmodule(module, members)


def submodule_residues(z: ZInstance) -> frozenset[int]:
    if z.kind == "z_int":
        return frozenset({0})
    return frozenset(range(0, z.n, z.d))


def in_submodule(z: ZInstance, value: int) -> bool:
    """Membership of an integer (z_int) or a module residue (z_mod) in N."""
    if z.kind == "z_int":
        return value % z.m == 0
    return (value % z.n) % z.d == 0


def class_rep(z: ZInstance, cls: int) -> int:
    """A nonzero integer representative of a residue class."""
    cls %= z.modulus
    return cls if cls != 0 else z.modulus


# ---------------------------------------------------------------------------
# element-level predicates (residue reductions)
# ---------------------------------------------------------------------------


def is_gwp_z(z: ZInstance, x: int) -> tuple[bool, Optional[tuple[int, int]]]:
    """Is the integer x weakly prime to N?  Witness is (x, m) with m an integer
    (z_int) or a module residue (z_mod)."""
    if x == 0:
        return True, None
    q = z.modulus
    if z.kind == "z_int":
        for y in range(1, q):
            if (x * y) % q == 0:
                return False, (x, y)
        return True, None
    for m in range(z.n):
        if m % z.d == 0:
            continue
        xm = (x * m) % z.n
        if xm != 0 and xm % z.d == 0:
            return False, (x, m)
    return True, None


def is_gp_z(z: ZInstance, x: int) -> tuple[bool, Optional[tuple[int, int]]]:
    """Is the integer x prime to N (no nonzero escape)?"""
    q = z.modulus
    if z.kind == "z_int":
        if x == 0:
            return (True, None) if q == 1 else (False, (x, 1))
        for y in range(1, q):
            if (x * y) % q == 0:
                return False, (x, y)
        return True, None
    for m in range(z.n):
        if m % z.d == 0:
            continue
        if ((x * m) % z.n) % z.d == 0:
            return False, (x, m)
    return True, None


def gw_classes(z: ZInstance) -> dict[int, tuple[int, int]]:
    """Residue classes whose nonzero members are not weakly prime to N."""
    out: dict[int, tuple[int, int]] = {}
    for c in range(z.modulus):
        ok, wit = is_gwp_z(z, class_rep(z, c))
        if not ok:
            assert wit is not None
            out[c] = wit
    return out


def g_classes(z: ZInstance) -> dict[int, tuple[int, int]]:
    """Residue classes of integers not prime to N (0 behaves as its class here)."""
    out: dict[int, tuple[int, int]] = {}
    for c in range(z.modulus):
        ok, wit = is_gp_z(z, class_rep(z, c))
        if not ok:
            assert wit is not None
            out[c] = wit
    return out


def in_gw_z(z: ZInstance, x: int) -> bool:
    return x != 0 and (x % z.modulus) in gw_classes(z)


def in_g_z(z: ZInstance, x: int) -> bool:
    if z.kind == "z_int" and x == 0:
        return z.m > 1  # 0*y = 0 lies in N and witnesses y outside N exist iff N is proper
    return (x % z.modulus) in g_classes(z)


# ---------------------------------------------------------------------------
# ideals of the integers given as unions of residue classes
# ---------------------------------------------------------------------------


def classes_with_zero_ideal_of_z(
    classes: frozenset[int] | set[int], modulus: int
) -> tuple[bool, Optional[tuple]]:
    """Is {x : x mod modulus in classes, x != 0} together with 0 an ideal of Z?

    Witnesses are integers: ("add", a, b, a+b) for a closure failure,
    ("mul", r, a, r*a) for an absorption failure.
    """
    cset = frozenset(c % modulus for c in classes)
    if not cset:
        return True, None

    def member(x: int) -> bool:
        return x == 0 or (x % modulus) in cset

    reps = sorted(class_rep_static(c, modulus) for c in cset)
    for a in reps:
        for b in reps:
            if not member(a + b):
                return False, ("add", a, b, a + b)
    for r in range(modulus + 1):
        for a in reps:
            if not member(r * a):
                return False, ("mul", r, a, r * a)
    return True, None


def class_rep_static(cls: int, modulus: int) -> int:
    cls %= modulus
    return cls if cls != 0 else modulus


def is_weakly_primal_z(z: ZInstance) -> tuple[bool, Optional[tuple]]:
    """Is GW(N) together with 0 an ideal of the integers?"""
    return classes_with_zero_ideal_of_z(frozenset(gw_classes(z)), z.modulus)


def is_primal_z(z: ZInstance) -> tuple[bool, Optional[tuple]]:
    """Is G(N) together with 0 an ideal of the integers?"""
    return classes_with_zero_ideal_of_z(frozenset(g_classes(z)), z.modulus)


def adjoint_classes_z(z: ZInstance) -> Optional[frozenset[int]]:
    ok, _ = is_weakly_primal_z(z)
    return frozenset(gw_classes(z)) if ok else None


# ---------------------------------------------------------------------------
# submodule-level predicates over the integers
# ---------------------------------------------------------------------------


def colon_classes_z(z: ZInstance) -> frozenset[int]:
    """(N :_Z M) as residue classes: scalars sending the whole module into N."""
    if z.kind == "z_int":
        return frozenset({0})
    ring, module, sub = surrogate(z)
    return frozenset(colon_into_ring(sub).members)


def is_weakly_prime_z(z: ZInstance) -> tuple[bool, Optional[tuple[int, int]]]:
    """0 != x*m in N forces m in N or x in (N :_Z M); requires N proper."""
    if z.kind == "z_int":
        if z.m == 1:
            return False, None
        for a in range(1, z.m):
            for b in range(1, z.m):
                if (a * b) % z.m == 0:
                    return False, (a, b)
        return True, None
    ring, module, sub = surrogate(z)
    ok, wit = is_weakly_prime_submodule(sub)
    if sub.is_proper() and ok:
        return True, None
    if wit is None:
        return False, None
    return False, (wit.x, wit.m)


def is_weakly_primary_z(z: ZInstance) -> tuple[bool, Optional[tuple[int, int]]]:
    if z.kind == "z_int":
        q = z.m

        def power_lands(a: int) -> bool:
            p = a % q
            for _ in range(q):
                if p == 0:
                    return True
                p = (p * a) % q
            return False

        for a in range(1, q):
            if power_lands(a):
                continue
            for b in range(1, q):
                if (a * b) % q == 0:
                    return False, (a, b)
        return True, None
    _, _, sub = surrogate(z)
    ok, wit = is_weakly_primary_submodule(sub)
    if ok:
        return True, None
    assert wit is not None
    return False, (wit.x, wit.m)


def gw_ideal_classes_z(z: ZInstance, ideal_classes: frozenset[int]) -> frozenset[int]:
    """gw of the ideal of Z given by a union of residue classes (e.g. a colon)."""
    q = z.modulus
    out = set()
    for a in range(q):
        for b in range(q):
            if b in ideal_classes:
                continue
            if (a * b) % q in ideal_classes:
                out.add(a)
                break
    return frozenset(out)


def n_times_colon_is_zero(z: ZInstance) -> bool:
    """Does N*(N :_Z M) vanish?"""
    if z.kind == "z_int":
        return z.m == 0  # q^2 Z never vanishes
    ring, module, sub = surrogate(z)
    colon = colon_into_ring(sub)
    return ideal_times_module(colon, sub).members == frozenset({module.zero})


@dataclass
class ZVerdict:
    """Full classification of a shape, in integer semantics."""

    instance: ZInstance
    gw: dict[int, tuple[int, int]]
    g: dict[int, tuple[int, int]]
    is_weakly_primal: bool
    weakly_primal_violation: Optional[tuple]
    is_primal: bool
    primal_violation: Optional[tuple]
    is_weakly_prime: bool
    is_weakly_primary: bool
    adjoint_classes: Optional[frozenset[int]]


def classify_z(z: ZInstance) -> ZVerdict:
    gw = gw_classes(z)
    g = g_classes(z)
    wp, wp_wit = classes_with_zero_ideal_of_z(frozenset(gw), z.modulus)
    pr, pr_wit = classes_with_zero_ideal_of_z(frozenset(g), z.modulus)
    wprime, _ = is_weakly_prime_z(z)
    wprimary, _ = is_weakly_primary_z(z)
    return ZVerdict(
        instance=z,
        gw=gw,
        g=g,
        is_weakly_primal=wp,
        weakly_primal_violation=wp_wit,
        is_primal=pr,
        primal_violation=pr_wit,
        is_weakly_prime=wprime,
        is_weakly_primary=wprimary,
        adjoint_classes=frozenset(gw) if wp else None,
    )


# ---------------------------------------------------------------------------
# windowed brute-force oracle (integer arithmetic only)
# ---------------------------------------------------------------------------


def window(z: ZInstance, factor: int = 4) -> range:
    q = z.modulus
    return range(-factor * q, factor * q + 1)


def oracle_is_gwp(z: ZInstance, x: int, factor: int = 4) -> bool:
    """Brute-force weak primality of an integer scalar, no residue shortcuts."""
    if z.kind == "z_int":
        for y in window(z, factor):
            if y % z.m == 0:
                continue
            if x * y != 0 and (x * y) % z.m == 0:
                return False
        return True
    for m in range(z.n):
        if m % z.d == 0:
            continue
        xm = (x * m) % z.n
        if xm != 0 and xm % z.d == 0:
            return False
    return True


def oracle_is_gp(z: ZInstance, x: int, factor: int = 4) -> bool:
    if z.kind == "z_int":
        for y in window(z, factor):
            if y % z.m == 0:
                continue
            if (x * y) % z.m == 0:
                return False
        return True
    for m in range(z.n):
        if m % z.d == 0:
            continue
        if ((x * m) % z.n) % z.d == 0:
            return False
    return True


def oracle_set_with_zero_closed(
    z: ZInstance, member, factor: int = 4
) -> Optional[tuple]:
    """Search the window for an ideal-closure violation of an integer set.

    ``member`` decides integer membership; returns a witness or None.  A
    violation found here is conclusive; absence within the window is the
    oracle's verdict for agreement testing.
    """
    inside = [x for x in window(z, factor) if member(x)]
    for a in inside:
        for b in inside:
            if not member(a + b):
                return ("add", a, b, a + b)
    for r in range(-2 * z.modulus, 2 * z.modulus + 1):
        for a in inside:
            if not member(r * a):
                return ("mul", r, a, r * a)
    return None
