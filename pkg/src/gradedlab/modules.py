"""Finite graded modules over validated graded rings.

A module of order m has carrier 0..m-1 with an addition table and a scalar
action table indexed (ring element, module element).  Submodules are member
sets closed under addition, the full ring action, and homogeneous
decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .rings import (
    Degree,
    EnumerationBudgetError,
    GradedIdeal,
    GradedRing,
    ValidationError,
    Violation,
    _as_table,
    _check_grading,
)


class GradedModule:
    """Validated graded module over a validated graded ring.

    Construct through :func:`validate_module` or the ``make_*`` helpers.
    """

    def __init__(
        self,
        *,
        ring: GradedRing,
        order: int,
        add_table: np.ndarray,
        zero: int,
        action: np.ndarray,
        components: dict[Degree, frozenset[int]],
        decomp: tuple[dict[Degree, int], ...],
        neg_table: tuple[int, ...],
        labels: tuple[str, ...],
        name: str,
    ):
        self.ring = ring
        self.order = order
        self.add_table = add_table
        self.zero = zero
        self.action = action
        self.components = components
        self.decomp = decomp
        self.neg_table = neg_table
        self.labels = labels
        self.name = name
        self.hom: frozenset[int] = frozenset().union(*components.values())
        deg_of: dict[int, Degree] = {}
        for g, comp in components.items():
            for x in comp:
                if x != zero:
                    deg_of[x] = g
        self._degree_of = deg_of

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def act(self, r: int, m: int) -> int:
        return int(self.action[r, m])

    def elements(self) -> range:
        return range(self.order)

    def degree_of(self, m: int) -> Optional[Degree]:
        return self._degree_of.get(m)

    def is_homogeneous(self, m: int) -> bool:
        return m in self.hom

    def label(self, m: int) -> str:
        return self.labels[m]

    def __repr__(self) -> str:
        return f"GradedModule({self.name}, order={self.order} over {self.ring.name})"

    def to_json(self) -> dict:
        return {
            "kind": "tables",
            "order": self.order,
            "add": self.add_table.tolist(),
            "action": self.action.tolist(),
            "zero": self.zero,
            "grading": {
                "components": [
                    [list(g), sorted(comp)] for g, comp in sorted(self.components.items())
                ]
            },
            "labels": list(self.labels),
            "name": self.name,
        }


@dataclass(frozen=True)
class GradedSubmodule:
    module: GradedModule
    members: frozenset[int]

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, m: int) -> bool:
        return m in self.members

    def is_proper(self) -> bool:
        return len(self.members) < self.module.order

    def is_zero(self) -> bool:
        return self.members == frozenset({self.module.zero})

    def __repr__(self) -> str:
        return f"GradedSubmodule({sorted(self.members)})"


# ---------------------------------------------------------------------------
# validation and constructors
# ---------------------------------------------------------------------------


def validate_module(
    *,
    ring: GradedRing,
    order: int,
    add_table: Sequence[Sequence[int]],
    zero: int,
    action: Sequence[Sequence[int]],
    components: Mapping[Degree, Iterable[int]],
    labels: Optional[Sequence[str]] = None,
    name: str = "module",
) -> GradedModule:
    """Check the abelian-group, action, and grading axioms; return the module.

    Violations each carry a named law and a concrete witness, e.g. the
    action associativity failure ((r*r')m != r(r'm)) reports (r, r', m).
    """
    if not 0 <= zero < order:
        raise ValidationError("module", [Violation("Malformed", "zero out of range", (zero,))])
    A = _as_table(add_table, order, "addition")
    act = np.asarray(action, dtype=np.int64)
    if act.shape != (ring.order, order):
        raise ValidationError(
            "module",
            [Violation("Malformed", f"action table is not {ring.order}x{order}", (act.shape,))],
        )
    if act.size and (act.min() < 0 or act.max() >= order):
        bad = np.argwhere((act < 0) | (act >= order))[0]
        raise ValidationError(
            "module", [Violation("Malformed", f"action entry out of range at {tuple(bad)}", tuple(bad))]
        )
    act.setflags(write=False)

    v: list[Violation] = []
    idx = np.arange(order)

    if not np.array_equal(A, A.T):
        a, b = map(int, np.argwhere(A != A.T)[0])
        v.append(Violation("NonCommutative", f"addition: {a}+{b} != {b}+{a}", (a, b)))
    left = A[A, :]
    right = A[idx[:, None, None], A]
    if not np.array_equal(left, right):
        a, b, c = map(int, np.argwhere(left != right)[0])
        v.append(Violation("NonAssociative", f"addition: ({a}+{b})+{c} != {a}+({b}+{c})", (a, b, c)))
    if not np.array_equal(A[zero], idx):
        a = int(np.argwhere(A[zero] != idx)[0][0])
        v.append(Violation("MissingIdentity", f"0+{a} != {a}", (a,)))

    neg_list: Optional[list[int]] = []
    for a in range(order):
        hits = np.flatnonzero(A[a] == zero)
        if hits.size == 0:
            v.append(Violation("MissingInverse", f"{a} has no additive inverse", (a,)))
            neg_list = None
            break
        neg_list.append(int(hits[0]))

    rA = ring.add_table
    rM = ring.mul_table
    # (r+r')m = rm + r'm
    lhs = act[rA, :]
    rhs = A[act[:, None, :], act[None, :, :]]
    if not np.array_equal(lhs, rhs):
        r1, r2, m = map(int, np.argwhere(lhs != rhs)[0])
        v.append(Violation("ActionNotAdditive", f"({r1}+{r2})m != {r1}m+{r2}m at m={m}", (r1, r2, m)))
    # r(m+m') = rm + rm'
    lhs = act[np.arange(ring.order)[:, None, None], A[None, :, :]]
    rhs = A[act[:, :, None], act[:, None, :]]
    if not np.array_equal(lhs, rhs):
        r, m1, m2 = map(int, np.argwhere(lhs != rhs)[0])
        v.append(Violation("ActionNotAdditive", f"{r}({m1}+{m2}) != {r}{m1}+{r}{m2}", (r, m1, m2)))
    # (rr')m = r(r'm)
    lhs = act[rM, :]
    rhs = act[np.arange(ring.order)[:, None, None], act[None, :, :]]
    if not np.array_equal(lhs, rhs):
        r1, r2, m = map(int, np.argwhere(lhs != rhs)[0])
        v.append(Violation("NonAssociative", f"({r1}*{r2})m != {r1}({r2}m) at m={m}", (r1, r2, m)))
    if not np.array_equal(act[ring.one], idx):
        m = int(np.argwhere(act[ring.one] != idx)[0][0])
        v.append(Violation("MissingIdentity", f"1*{m} != {m}", (m,)))

    if v:
        raise ValidationError("module", v)
    assert neg_list is not None

    gviol, comp, decomp = _check_grading(
        order, A, act, zero, ring.group, components, scalar_components=ring.components
    )
    if gviol:
        raise ValidationError("module", gviol)
    assert comp is not None and decomp is not None

    if labels is None:
        labels = tuple(str(m) for m in range(order))
    return GradedModule(
        ring=ring,
        order=order,
        add_table=A,
        zero=zero,
        action=act,
        components=comp,
        decomp=decomp,
        neg_table=tuple(neg_list),
        labels=tuple(labels),
        name=name,
    )


def ring_as_module(ring: GradedRing) -> GradedModule:
    """A graded ring is a graded module over itself."""
    return validate_module(
        ring=ring,
        order=ring.order,
        add_table=ring.add_table,
        zero=ring.zero,
        action=ring.mul_table,
        components=ring.components,
        labels=ring.labels,
        name=ring.name,
    )


def make_zn_module(ring: GradedRing, n: int) -> GradedModule:
    """Z_n as a module over a trivially graded Z_k ring, n dividing k; action mod n."""
    if not ring.is_trivially_graded:
        raise ValueError("the residue module constructor requires a trivially graded ring")
    if ring.order % n != 0:
        raise ValueError(f"{n} does not divide the ring order {ring.order}")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    action = [[(r * m) % n for m in range(n)] for r in range(ring.order)]
    return validate_module(
        ring=ring,
        order=n,
        add_table=add,
        zero=0,
        action=action,
        components={(): frozenset(range(n))},
        labels=[str(m) for m in range(n)],
        name=f"Z{n} over {ring.name}",
    )


def make_zero_module(ring: GradedRing) -> GradedModule:
    return validate_module(
        ring=ring,
        order=1,
        add_table=[[0]],
        zero=0,
        action=[[0] for _ in range(ring.order)],
        components={g: frozenset({0}) for g in ring.group.elements},
        labels=["0"],
        name=f"0 over {ring.name}",
    )


def make_product_module(m1: GradedModule, m2: GradedModule) -> GradedModule:
    """Direct product with the diagonal action; element (a, b) is a*|M2| + b."""
    if m1.ring is not m2.ring:
        raise ValueError("product module requires modules over the same ring")
    ring = m1.ring
    n1, n2 = m1.order, m2.order
    order = n1 * n2

    def enc(a: int, b: int) -> int:
        return a * n2 + b

    add = [[0] * order for _ in range(order)]
    for a1 in range(n1):
        for b1 in range(n2):
            for a2 in range(n1):
                for b2 in range(n2):
                    add[enc(a1, b1)][enc(a2, b2)] = enc(m1.add(a1, a2), m2.add(b1, b2))
    action = [[0] * order for _ in range(ring.order)]
    for r in range(ring.order):
        for a in range(n1):
            for b in range(n2):
                action[r][enc(a, b)] = enc(m1.act(r, a), m2.act(r, b))
    components = {
        g: frozenset(enc(a, b) for a in m1.components[g] for b in m2.components[g])
        for g in ring.group.elements
    }
    labels = [f"({m1.label(i // n2)},{m2.label(i % n2)})" for i in range(order)]
    return validate_module(
        ring=ring,
        order=order,
        add_table=add,
        zero=enc(m1.zero, m2.zero),
        action=action,
        components=components,
        labels=labels,
        name=f"{m1.name} x {m2.name}",
    )


def quotient_module(module: GradedModule, sub: GradedSubmodule) -> tuple[GradedModule, tuple[int, ...]]:
    """Quotient by a graded submodule; returns the quotient and the projection map.

    Cosets are labeled by their least member; component g of the quotient is
    the image of component g.
    """
    if sub.module is not module:
        raise ValueError("submodule does not belong to the module")
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for m in range(module.order):
        if m in coset_of:
            continue
        coset = sorted(module.add(m, n) for n in sub.members)
        rep = coset[0]
        cid = len(reps)
        reps.append(rep)
        for x in coset:
            coset_of[x] = cid
    order = len(reps)
    add = [[coset_of[module.add(reps[i], reps[j])] for j in range(order)] for i in range(order)]
    action = [
        [coset_of[module.act(r, reps[j])] for j in range(order)] for r in range(module.ring.order)
    ]
    components = {
        g: frozenset(coset_of[x] for x in comp) for g, comp in module.components.items()
    }
    labels = [f"[{module.label(r)}]" for r in reps]
    quotient = validate_module(
        ring=module.ring,
        order=order,
        add_table=add,
        zero=coset_of[module.zero],
        action=action,
        components=components,
        labels=labels,
        name=f"{module.name}/{sorted(sub.members)}",
    )
    projection = tuple(coset_of[m] for m in range(module.order))
    return quotient, projection


# ---------------------------------------------------------------------------
# submodules
# ---------------------------------------------------------------------------


def is_graded_submodule(module: GradedModule, subset: Iterable[int]) -> tuple[bool, Optional[Violation]]:
    members = frozenset(subset)
    if module.zero not in members:
        return False, Violation("missing_zero", "does not contain zero", (module.zero,))
    ordered = sorted(members)
    for a in ordered:
        for b in ordered:
            s = module.add(a, b)
            if s not in members:
                return False, Violation("not_add_closed", f"{a}+{b}={s} missing", (a, b, s))
    for r in range(module.ring.order):
        for m in ordered:
            p = module.act(r, m)
            if p not in members:
                return False, Violation("not_closed_under_action", f"{r}*{m}={p} missing", (r, m, p))
    for m in ordered:
        for g, part in module.decomp[m].items():
            if part not in members:
                return False, Violation(
                    "not_graded", f"component of {m} in degree {g} missing", (m, g, part)
                )
    return True, None


def as_graded_submodule(module: GradedModule, subset: Iterable[int]) -> GradedSubmodule:
    ok, violation = is_graded_submodule(module, subset)
    if not ok:
        assert violation is not None
        raise ValidationError("graded submodule", [violation])
    return GradedSubmodule(module, frozenset(subset))


def submodule_generated_by(module: GradedModule, generators: Iterable[int]) -> GradedSubmodule:
    members = {module.zero} | set(generators)
    changed = True
    while changed:
        changed = False
        current = sorted(members)
        for m in current:
            for r in range(module.ring.order):
                p = module.act(r, m)
                if p not in members:
                    members.add(p)
                    changed = True
            for part in module.decomp[m].values():
                if part not in members:
                    members.add(part)
                    changed = True
        current = sorted(members)
        for a in current:
            for b in current:
                s = module.add(a, b)
                if s not in members:
                    members.add(s)
                    changed = True
    return GradedSubmodule(module, frozenset(members))


def enumerate_graded_submodules(module: GradedModule, max_order: int = 64) -> list[GradedSubmodule]:
    """All graded submodules via join-closure of cyclic graded submodules."""
    if module.order > max_order:
        raise EnumerationBudgetError(
            f"module of order {module.order} exceeds the enumeration bound {max_order}"
        )
    principals: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for m in range(module.order):
        p = submodule_generated_by(module, {m}).members
        if p not in seen:
            seen.add(p)
            principals.append(p)
    known: set[frozenset[int]] = set(principals)
    queue = list(principals)
    while queue:
        base = queue.pop()
        for p in principals:
            joined = frozenset(module.add(a, b) for a in base for b in p)
            if joined not in known:
                known.add(joined)
                queue.append(joined)
    ordered = sorted(known, key=lambda s: (len(s), sorted(s)))
    return [GradedSubmodule(module, s) for s in ordered]


# ---------------------------------------------------------------------------
# colon constructions and structure predicates
# ---------------------------------------------------------------------------


def colon_into_ring(sub: GradedSubmodule, target: Optional[GradedSubmodule] = None) -> GradedIdeal:
    """(N :_R L) = scalars sending L into N; L defaults to the whole module."""
    module = sub.module
    scope = range(module.order) if target is None else sorted(target.members)
    members = set()
    for r in range(module.ring.order):
        if all(module.act(r, m) in sub.members for m in scope):
            members.add(r)
    return GradedIdeal(module.ring, frozenset(members))


def colon_into_module(sub: GradedSubmodule, scalars: Union[GradedIdeal, int]) -> GradedSubmodule:
    """(N :_M I) for a graded ideal I, or (N :_M s) for a single ring element.

    A single element s stands for the principal graded ideal it generates;
    since N is a submodule this coincides with {m : s*m in N}.
    """
    module = sub.module
    if isinstance(scalars, GradedIdeal):
        scope = sorted(scalars.members)
    else:
        scope = [scalars]
    members = set()
    for m in range(module.order):
        if all(module.act(r, m) in sub.members for r in scope):
            members.add(m)
    return GradedSubmodule(module, frozenset(members))


def ann_in_module(module: GradedModule, x: int) -> frozenset[int]:
    """(0 :_M x) = module elements killed by the scalar x."""
    return frozenset(m for m in range(module.order) if module.act(x, m) == module.zero)


def ann_of_module(module: GradedModule) -> GradedIdeal:
    """(0 :_R M), the annihilator ideal of the module."""
    zero_sub = GradedSubmodule(module, frozenset({module.zero}))
    return colon_into_ring(zero_sub)


def is_faithful(module: GradedModule) -> bool:
    return ann_of_module(module).members == frozenset({module.ring.zero})


def ideal_times_module(ideal: GradedIdeal, target: Union[GradedModule, GradedSubmodule]) -> GradedSubmodule:
    """The submodule generated by products a*m, a in the ideal, m in the target."""
    if isinstance(target, GradedSubmodule):
        module = target.module
        scope = sorted(target.members)
    else:
        module = target
        scope = list(range(module.order))
    if ideal.ring is not module.ring:
        raise ValueError("ideal and module live over different rings")
    gens = {module.act(a, m) for a in ideal.members for m in scope}
    return submodule_generated_by(module, gens)


def is_cyclic(module: GradedModule) -> tuple[bool, Optional[int]]:
    """Scan homogeneous elements for a single generator of the whole module."""
    for m in sorted(module.hom):
        if len(submodule_generated_by(module, {m}).members) == module.order:
            return True, m
    return False, None


def generating_set(module: GradedModule) -> list[int]:
    """A small homogeneous generating set, chosen greedily (finite, so always exists)."""
    gens: list[int] = []
    span = frozenset({module.zero})
    while len(span) < module.order:
        best = None
        best_size = len(span)
        for m in sorted(module.hom):
            if m in span:
                continue
            size = len(submodule_generated_by(module, set(gens) | {m}).members)
            if size > best_size:
                best, best_size = m, size
        if best is None:
            # Grading components span the module, so homogeneous elements generate.
            raise AssertionError("homogeneous elements failed to generate the module")
        gens.append(best)
        span = submodule_generated_by(module, gens).members
    return gens


def is_multiplication(module: GradedModule, max_order: int = 64) -> tuple[bool, Optional[GradedSubmodule]]:
    """Check N = (N :_R M)M for every graded submodule; return the first failure."""
    for sub in enumerate_graded_submodules(module, max_order=max_order):
        ideal = colon_into_ring(sub)
        if ideal_times_module(ideal, module).members != sub.members:
            return False, sub
    return True, None
