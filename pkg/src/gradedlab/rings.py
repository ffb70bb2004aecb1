"""Finite abelian grading groups and table-based graded commutative rings.

A ring of order n has carrier 0..n-1 and is given by explicit addition and
multiplication tables, so every axiom is decidable by exhaustion.  Degrees
are residue tuples in a finite abelian group presented as a product of
cyclic groups; the grading assigns each degree an additive subgroup of the
carrier, and validation certifies the internal direct sum and the
degree-compatibility of products.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

Degree = tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    """One failed axiom with a concrete witness tuple."""

    code: str
    message: str
    witness: tuple = ()


class ValidationError(ValueError):
    """A candidate structure violates at least one required axiom."""

    def __init__(self, kind: str, violations: Sequence[Violation]):
        self.kind = kind
        self.violations = list(violations)
        head = "; ".join(v.message for v in self.violations[:4])
        tail = "" if len(self.violations) <= 4 else f" (+{len(self.violations) - 4} more)"
        super().__init__(f"invalid {kind}: {head}{tail}")


class EnumerationBudgetError(RuntimeError):
    """An exhaustive enumeration would exceed the configured size bound."""


class GradingGroup:
    """Finite abelian group Z_c1 x ... x Z_ck; elements are residue tuples.

    The trivial group is ``GradingGroup(())`` with single element ``()``.
    """

    def __init__(self, cyclic_orders: Sequence[int]):
        orders = tuple(int(c) for c in cyclic_orders)
        if any(c <= 0 for c in orders):
            raise ValueError(f"cyclic orders must be positive, got {orders}")
        self.cyclic_orders = orders
        self.identity: Degree = (0,) * len(orders)
        self.elements: tuple[Degree, ...] = tuple(
            itertools.product(*(range(c) for c in orders))
        )

    @property
    def order(self) -> int:
        return len(self.elements)

    def add(self, a: Degree, b: Degree) -> Degree:
        return tuple((x + y) % c for x, y, c in zip(a, b, self.cyclic_orders))

    def neg(self, a: Degree) -> Degree:
        return tuple((-x) % c for x, c in zip(a, self.cyclic_orders))

    def sub(self, a: Degree, b: Degree) -> Degree:
        return self.add(a, self.neg(b))

    def __contains__(self, a: object) -> bool:
        return isinstance(a, tuple) and a in set(self.elements)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GradingGroup) and self.cyclic_orders == other.cyclic_orders

    def __hash__(self) -> int:
        return hash(self.cyclic_orders)

    def __repr__(self) -> str:
        if not self.cyclic_orders:
            return "GradingGroup(trivial)"
        return "GradingGroup(%s)" % "x".join(f"Z{c}" for c in self.cyclic_orders)


def trivial_group() -> GradingGroup:
    return GradingGroup(())


def _as_table(raw: Sequence[Sequence[int]], order: int, name: str) -> np.ndarray:
    arr = np.asarray(raw, dtype=np.int64)
    if arr.shape != (order, order):
        raise ValidationError(
            "ring", [Violation("Malformed", f"{name} table is not {order}x{order}", (arr.shape,))]
        )
    if arr.size and (arr.min() < 0 or arr.max() >= order):
        bad = np.argwhere((arr < 0) | (arr >= order))[0]
        raise ValidationError(
            "ring",
            [Violation("Malformed", f"{name} table entry out of range at {tuple(bad)}", tuple(bad))],
        )
    arr.setflags(write=False)
    return arr


class GradedRing:
    """Validated commutative ring with identity, graded by a finite abelian group.

    Do not call the constructor directly; go through :func:`validate_ring`
    or one of the ``make_*`` constructors.  Instances are immutable.
    """

    def __init__(
        self,
        *,
        order: int,
        add_table: np.ndarray,
        mul_table: np.ndarray,
        zero: int,
        one: int,
        group: GradingGroup,
        components: dict[Degree, frozenset[int]],
        decomp: tuple[dict[Degree, int], ...],
        neg_table: tuple[int, ...],
        labels: tuple[str, ...],
        name: str,
        warnings: tuple[str, ...] = (),
    ):
        self.order = order
        self.add_table = add_table
        self.mul_table = mul_table
        self.zero = zero
        self.one = one
        self.group = group
        self.components = components
        self.decomp = decomp
        self.neg_table = neg_table
        self.labels = labels
        self.name = name
        self.warnings = warnings
        self.hom: frozenset[int] = frozenset().union(*components.values())
        # Unique degree of each nonzero homogeneous element (components meet in {zero}).
        deg_of: dict[int, Degree] = {}
        for g, comp in components.items():
            for x in comp:
                if x != zero:
                    deg_of[x] = g
        self._degree_of = deg_of

    # -- element operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def power(self, x: int, k: int) -> int:
        acc = self.one
        for _ in range(k):
            acc = int(self.mul_table[acc, x])
        return acc

    def elements(self) -> range:
        return range(self.order)

    def degree_of(self, x: int) -> Optional[Degree]:
        """Degree of a nonzero homogeneous element; None for zero or non-homogeneous."""
        return self._degree_of.get(x)

    def is_homogeneous(self, x: int) -> bool:
        return x in self.hom

    @property
    def is_trivially_graded(self) -> bool:
        return self.group.order == 1

    def label(self, x: int) -> str:
        return self.labels[x]

    def __repr__(self) -> str:
        return f"GradedRing({self.name}, order={self.order})"

    def to_json(self) -> dict:
        return {
            "kind": "tables",
            "order": self.order,
            "add": self.add_table.tolist(),
            "mul": self.mul_table.tolist(),
            "zero": self.zero,
            "one": self.one,
            "grading": {
                "group": list(self.group.cyclic_orders),
                "components": [
                    [list(g), sorted(comp)] for g, comp in sorted(self.components.items())
                ],
            },
            "labels": list(self.labels),
            "name": self.name,
        }


@dataclass(frozen=True)
class GradedIdeal:
    """A graded ideal identified by its member set.

    Construct through :func:`ideal_generated_by` / :func:`as_graded_ideal`
    so the invariants have actually been checked.
    """

    ring: GradedRing
    members: frozenset[int]

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def is_proper(self) -> bool:
        return len(self.members) < self.ring.order

    def __repr__(self) -> str:
        return f"GradedIdeal({sorted(self.members)})"


@dataclass(frozen=True)
class MultiplicativeSet:
    """Multiplicatively closed set of homogeneous elements with 1, without 0."""

    ring: GradedRing
    members: frozenset[int]

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __repr__(self) -> str:
        return f"MultiplicativeSet({sorted(self.members)})"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def check_ring_tables(
    order: int,
    add_table: np.ndarray,
    mul_table: np.ndarray,
    zero: int,
    one: int,
) -> tuple[list[Violation], Optional[tuple[int, ...]]]:
    """Check the commutative-ring-with-identity axioms on raw tables.

    Returns the violation list (one witness per failed axiom) and the
    negation table when additive inverses exist.
    """
    v: list[Violation] = []
    A, M = add_table, mul_table
    idx = np.arange(order)

    if not np.array_equal(A, A.T):
        a, b = map(int, np.argwhere(A != A.T)[0])
        v.append(Violation("NonCommutative", f"addition: {a}+{b} != {b}+{a}", (a, b)))
    if not np.array_equal(M, M.T):
        a, b = map(int, np.argwhere(M != M.T)[0])
        v.append(Violation("NonCommutative", f"multiplication: {a}*{b} != {b}*{a}", (a, b)))

    left = A[A, :]                      # left[a,b,c] = (a+b)+c
    right = A[idx[:, None, None], A]    # right[a,b,c] = a+(b+c)
    if not np.array_equal(left, right):
        a, b, c = map(int, np.argwhere(left != right)[0])
        v.append(Violation("NonAssociative", f"addition: ({a}+{b})+{c} != {a}+({b}+{c})", (a, b, c)))

    left = M[M, :]
    right = M[idx[:, None, None], M]
    if not np.array_equal(left, right):
        a, b, c = map(int, np.argwhere(left != right)[0])
        v.append(Violation("NonAssociative", f"multiplication: ({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c)))

    if not np.array_equal(A[zero], idx):
        a = int(np.argwhere(A[zero] != idx)[0][0])
        v.append(Violation("MissingIdentity", f"0+{a} != {a}", (a,)))
    if not np.array_equal(M[one], idx):
        a = int(np.argwhere(M[one] != idx)[0][0])
        v.append(Violation("MissingIdentity", f"1*{a} != {a}", (a,)))

    neg: Optional[tuple[int, ...]] = None
    neg_list = []
    for a in range(order):
        hits = np.flatnonzero(A[a] == zero)
        if hits.size == 0:
            v.append(Violation("MissingInverse", f"{a} has no additive inverse", (a,)))
            neg_list = None
            break
        neg_list.append(int(hits[0]))
    if neg_list is not None:
        neg = tuple(neg_list)

    dist_l = M[idx[:, None, None], A]       # a*(b+c)
    dist_r = A[M[:, :, None], M[:, None, :]]  # a*b + a*c
    if not np.array_equal(dist_l, dist_r):
        a, b, c = map(int, np.argwhere(dist_l != dist_r)[0])
        v.append(Violation("NotDistributive", f"{a}*({b}+{c}) != {a}*{b}+{a}*{c}", (a, b, c)))

    return v, neg


def _check_grading(
    order: int,
    add_table: np.ndarray,
    mul_or_action: np.ndarray,
    zero: int,
    group: GradingGroup,
    components: Mapping[Degree, Iterable[int]],
    scalar_components: Optional[Mapping[Degree, frozenset[int]]] = None,
) -> tuple[list[Violation], Optional[dict], Optional[tuple]]:
    """Shared grading checks for rings and modules.

    When ``scalar_components`` is None the structure is a ring and the
    product rule is R_g*R_h <= R_{g+h}; otherwise it gives the ring
    components acting from the left (R_g*M_h <= M_{g+h}).
    """
    v: list[Violation] = []
    comp: dict[Degree, frozenset[int]] = {}
    for g in group.elements:
        members = frozenset(components.get(g, frozenset({zero})))
        if not members.issubset(range(order)):
            v.append(Violation("Malformed", f"component {g} not a subset of the carrier", (g,)))
            return v, None, None
        comp[g] = members

    extra = set(components) - set(group.elements)
    if extra:
        v.append(Violation("Malformed", f"component degree {sorted(extra)[0]} not in the group", ()))
        return v, None, None

    for g, members in sorted(comp.items()):
        if zero not in members:
            v.append(Violation("NotSubgroup", f"component {g} misses zero", (g,)))
            continue
        done = False
        for a in sorted(members):
            for b in sorted(members):
                if int(add_table[a, b]) not in members:
                    v.append(
                        Violation("NotSubgroup", f"component {g} not closed: {a}+{b}", (g, a, b))
                    )
                    done = True
                    break
            if done:
                break

    if v:
        return v, None, None

    sizes = 1
    for members in comp.values():
        sizes *= len(members)
    if sizes != order:
        v.append(
            Violation(
                "NotDirectSum",
                f"product of component sizes is {sizes}, carrier has {order}",
                (sizes, order),
            )
        )
        return v, None, None

    degrees = sorted(comp)
    seen: dict[int, tuple] = {}
    decomp_list: list[Optional[dict[Degree, int]]] = [None] * order
    for parts in itertools.product(*(sorted(comp[g]) for g in degrees)):
        total = zero
        for x in parts:
            total = int(add_table[total, x])
        if total in seen and seen[total] != parts:
            v.append(
                Violation(
                    "NotDirectSum",
                    f"element {total} has two homogeneous decompositions",
                    (total, seen[total], parts),
                )
            )
            return v, None, None
        seen[total] = parts
        decomp_list[total] = dict(zip(degrees, parts))
    if len(seen) != order:
        missing = next(x for x in range(order) if x not in seen)
        v.append(Violation("NotDirectSum", f"element {missing} is not a sum of components", (missing,)))
        return v, None, None

    left_components = scalar_components if scalar_components is not None else comp
    for g, gmembers in sorted(left_components.items()):
        for h, hmembers in sorted(comp.items()):
            target = comp[group.add(g, h)]
            for x in sorted(gmembers):
                for y in sorted(hmembers):
                    if int(mul_or_action[x, y]) not in target:
                        v.append(
                            Violation(
                                "GradingViolation",
                                f"product of degrees {g},{h} leaves component: {x}*{y}",
                                (g, h, x, y),
                            )
                        )
                        return v, None, None

    return v, comp, tuple(decomp_list)


def validate_ring(
    *,
    order: int,
    add_table: Sequence[Sequence[int]],
    mul_table: Sequence[Sequence[int]],
    zero: int,
    one: int,
    group: GradingGroup,
    components: Mapping[Degree, Iterable[int]],
    labels: Optional[Sequence[str]] = None,
    name: str = "ring",
) -> GradedRing:
    """Validate raw tables plus a grading and return the immutable ring.

    Raises :class:`ValidationError` carrying one witnessed violation per
    failed axiom.  The identity's homogeneity (1 in the e-component) is
    reported as a warning, not an error.
    """
    if not (0 <= zero < order and 0 <= one < order):
        raise ValidationError("ring", [Violation("Malformed", "zero/one out of range", (zero, one))])
    A = _as_table(add_table, order, "addition")
    M = _as_table(mul_table, order, "multiplication")

    violations, neg = check_ring_tables(order, A, M, zero, one)
    if violations:
        raise ValidationError("ring", violations)
    assert neg is not None

    gviol, comp, decomp = _check_grading(order, A, M, zero, group, components)
    if gviol:
        raise ValidationError("ring", gviol)
    assert comp is not None and decomp is not None

    warnings = []
    if one not in comp[group.identity]:
        warnings.append("identity is not homogeneous of the neutral degree")

    if labels is None:
        labels = tuple(str(x) for x in range(order))
    return GradedRing(
        order=order,
        add_table=A,
        mul_table=M,
        zero=zero,
        one=one,
        group=group,
        components=comp,
        decomp=decomp,
        neg_table=neg,
        labels=tuple(labels),
        name=name,
        warnings=tuple(warnings),
    )


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def make_zn(n: int) -> GradedRing:
    """The ring of integers mod n with the trivial grading."""
    if n < 1:
        raise ValueError("modulus must be positive")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    g = trivial_group()
    return validate_ring(
        order=n,
        add_table=add,
        mul_table=mul,
        zero=0,
        one=1 % n,
        group=g,
        components={(): frozenset(range(n))},
        labels=[str(i) for i in range(n)],
        name=f"Z{n}",
    )


def quadratic_tables(n: int, a: int) -> dict:
    """Raw data for Z_n[x]/(x^2 - a) graded by Z_2; element c0 + c1*x is c0 + n*c1."""
    if n < 2:
        raise ValueError("coefficient modulus must be at least 2")
    a %= n
    order = n * n

    def enc(c0: int, c1: int) -> int:
        return (c0 % n) + n * (c1 % n)

    add = [[0] * order for _ in range(order)]
    mul = [[0] * order for _ in range(order)]
    for i in range(order):
        c0, c1 = i % n, i // n
        for j in range(order):
            d0, d1 = j % n, j // n
            add[i][j] = enc(c0 + d0, c1 + d1)
            mul[i][j] = enc(c0 * d0 + a * c1 * d1, c0 * d1 + c1 * d0)

    def lab(i: int) -> str:
        c0, c1 = i % n, i // n
        if c1 == 0:
            return str(c0)
        xs = "x" if c1 == 1 else f"{c1}x"
        return xs if c0 == 0 else f"{c0}+{xs}"

    return {
        "order": order,
        "add": add,
        "mul": mul,
        "zero": 0,
        "one": 1,
        "group_orders": (2,),
        "components": {
            (0,): frozenset(range(n)),
            (1,): frozenset(n * c1 for c1 in range(n)),
        },
        "labels": [lab(i) for i in range(order)],
        "name": f"Z{n}[x]/(x^2-{a})",
    }


def make_quadratic(n: int, a: int) -> GradedRing:
    """Z_n[x]/(x^2 - a) with constants in degree 0 and multiples of x in degree 1."""
    raw = quadratic_tables(n, a)
    return validate_ring(
        order=raw["order"],
        add_table=raw["add"],
        mul_table=raw["mul"],
        zero=raw["zero"],
        one=raw["one"],
        group=GradingGroup(raw["group_orders"]),
        components=raw["components"],
        labels=raw["labels"],
        name=raw["name"],
    )


# ---------------------------------------------------------------------------
# homogeneous elements and ideals
# ---------------------------------------------------------------------------


def homogeneous_elements(ring: GradedRing) -> frozenset[int]:
    """Union of the grading components; always contains zero."""
    return ring.hom


def is_graded_ideal(ring: GradedRing, subset: Iterable[int]) -> tuple[bool, Optional[Violation]]:
    """Decide the graded-ideal predicate; on failure report the first violated condition."""
    members = frozenset(subset)
    if ring.zero not in members:
        return False, Violation("missing_zero", "does not contain zero", (ring.zero,))
    ordered = sorted(members)
    for x in ordered:
        for y in ordered:
            s = ring.add(x, y)
            if s not in members:
                return False, Violation("not_add_closed", f"{x}+{y}={s} missing", (x, y, s))
    for r in range(ring.order):
        for x in ordered:
            p = ring.mul(r, x)
            if p not in members:
                return False, Violation("not_absorbing", f"{r}*{x}={p} missing", (r, x, p))
    for x in ordered:
        for g, part in ring.decomp[x].items():
            if part not in members:
                return False, Violation(
                    "not_graded", f"component of {x} in degree {g} missing", (x, g, part)
                )
    return True, None


def as_graded_ideal(ring: GradedRing, subset: Iterable[int]) -> GradedIdeal:
    ok, violation = is_graded_ideal(ring, subset)
    if not ok:
        assert violation is not None
        raise ValidationError("graded ideal", [violation])
    return GradedIdeal(ring, frozenset(subset))


def ideal_generated_by(ring: GradedRing, generators: Iterable[int]) -> GradedIdeal:
    """Smallest graded ideal containing the generators (closure fixed point)."""
    members = {ring.zero} | set(generators)
    changed = True
    while changed:
        changed = False
        current = sorted(members)
        for x in current:
            for r in range(ring.order):
                p = ring.mul(r, x)
                if p not in members:
                    members.add(p)
                    changed = True
            for part in ring.decomp[x].values():
                if part not in members:
                    members.add(part)
                    changed = True
        current = sorted(members)
        for a in current:
            for b in current:
                s = ring.add(a, b)
                if s not in members:
                    members.add(s)
                    changed = True
    return GradedIdeal(ring, frozenset(members))


def enumerate_graded_ideals(ring: GradedRing, max_order: int = 64) -> list[GradedIdeal]:
    """All graded ideals, duplicate-free, sorted by (size, member list).

    Computed as the join-closure of the principal graded ideals; joins of
    ideals are elementwise sums, so no re-closure is needed.
    """
    if ring.order > max_order:
        raise EnumerationBudgetError(
            f"ring of order {ring.order} exceeds the enumeration bound {max_order}"
        )
    principals: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for x in range(ring.order):
        p = ideal_generated_by(ring, {x}).members
        if p not in seen:
            seen.add(p)
            principals.append(p)

    known: set[frozenset[int]] = set(principals)
    queue = list(principals)
    while queue:
        base = queue.pop()
        for p in principals:
            joined = frozenset(ring.add(a, b) for a in base for b in p)
            if joined not in known:
                known.add(joined)
                queue.append(joined)
    ordered = sorted(known, key=lambda s: (len(s), sorted(s)))
    return [GradedIdeal(ring, s) for s in ordered]


def ideal_product(i: GradedIdeal, j: GradedIdeal) -> GradedIdeal:
    """Graded ideal generated by all pairwise products."""
    if i.ring is not j.ring:
        raise ValueError("ideal product requires ideals of the same ring")
    ring = i.ring
    gens = {ring.mul(a, b) for a in i.members for b in j.members}
    return ideal_generated_by(ring, gens)


def homogeneous_radical(ideal: GradedIdeal) -> frozenset[int]:
    """Homogeneous elements with some power (exponent at most |R|) in the ideal."""
    ring = ideal.ring
    out = set()
    for x in sorted(ring.hom):
        p = x
        for _ in range(ring.order):
            if p in ideal.members:
                out.add(x)
                break
            p = ring.mul(p, x)
    return frozenset(out)


def is_graded_weakly_prime_ideal(ideal: GradedIdeal) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whenever a product of homogeneous elements is nonzero and lands in the
    ideal, one factor lies in it; the witness pair (x, y) is returned on failure."""
    ring = ideal.ring
    if len(ideal.members) == ring.order:
        raise ValueError("the unit ideal is excluded from the weakly prime predicate")
    hom = sorted(ring.hom)
    for x in hom:
        if x in ideal.members:
            continue
        for y in hom:
            if y in ideal.members:
                continue
            p = ring.mul(x, y)
            if p != ring.zero and p in ideal.members:
                return False, (x, y)
    return True, None


# ---------------------------------------------------------------------------
# multiplicative sets
# ---------------------------------------------------------------------------


def validate_multiplicative_set(ring: GradedRing, members: Iterable[int]) -> MultiplicativeSet:
    """Check 1 in S, 0 not in S, homogeneity, and closure under products."""
    ms = frozenset(members)
    v: list[Violation] = []
    if ring.one not in ms:
        v.append(Violation("MissingOne", "multiplicative set must contain 1", ()))
    if ring.zero in ms:
        v.append(Violation("ContainsZero", "multiplicative set must not contain 0", ()))
    for s in sorted(ms):
        if s not in ring.hom:
            v.append(Violation("NotHomogeneous", f"{s} is not homogeneous", (s,)))
            break
    for s in sorted(ms):
        for t in sorted(ms):
            p = ring.mul(s, t)
            if p not in ms:
                v.append(Violation("NotClosed", f"{s}*{t}={p} missing", (s, t, p)))
                break
        else:
            continue
        break
    if v:
        raise ValidationError("multiplicative set", v)
    return MultiplicativeSet(ring, ms)


def multiplicative_closure(ring: GradedRing, seed: Iterable[int]) -> Optional[frozenset[int]]:
    """Close a seed under products; None if the closure would contain zero."""
    members = set(seed) | {ring.one}
    if ring.zero in members:
        return None
    frontier = sorted(members)
    while frontier:
        new = set()
        for s in list(members):
            for t in frontier:
                p = ring.mul(s, t)
                if p == ring.zero:
                    return None
                if p not in members:
                    new.add(p)
        members |= new
        frontier = sorted(new)
    return frozenset(members)


def enumerate_multiplicative_sets(ring: GradedRing, max_order: int = 64) -> list[MultiplicativeSet]:
    """All multiplicatively closed subsets of h(R) containing 1 and avoiding 0."""
    if ring.order > max_order:
        raise EnumerationBudgetError(
            f"ring of order {ring.order} exceeds the enumeration bound {max_order}"
        )
    base = multiplicative_closure(ring, ())
    if base is None:
        return []
    known: set[frozenset[int]] = {base}
    queue = [base]
    candidates = sorted(ring.hom - {ring.zero})
    while queue:
        s = queue.pop()
        for x in candidates:
            if x in s:
                continue
            t = multiplicative_closure(ring, s | {x})
            if t is not None and t not in known:
                known.add(t)
                queue.append(t)
    ordered = sorted(known, key=lambda s: (len(s), sorted(s)))
    return [MultiplicativeSet(ring, s) for s in ordered]
