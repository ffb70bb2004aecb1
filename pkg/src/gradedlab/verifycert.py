"""Independent re-checking of refutation certificates.

Every fact in a certificate is re-checked against the instance rebuilt from
its descriptor, using nothing but raw table lookups (plus plain integer
arithmetic for the integer-backend shapes).  None of the predicate
implementations from the library are called: the scans below, including the
miniature fraction-field construction, are written separately so that a
bookkeeping bug in the main code paths cannot vouch for itself.
"""

from __future__ import annotations

from typing import Optional

from .instances import build_instance
from .modules import GradedModule
from .rings import GradedRing


class StaleDescriptorError(RuntimeError):
    """The certificate's instance descriptor no longer reconstructs."""


# ---------------------------------------------------------------------------
# naive table scans
# ---------------------------------------------------------------------------


def _is_ngwp(ring: GradedRing, mod: GradedModule, sub: frozenset[int], x: int) -> Optional[int]:
    """First witness m for x not weakly prime to sub, or None."""
    if x not in ring.hom:
        return None
    for m in sorted(mod.hom):
        if m in sub:
            continue
        xm = mod.act(x, m)
        if xm != mod.zero and xm in sub:
            return m
    return None


def _is_not_prime(ring: GradedRing, mod: GradedModule, sub: frozenset[int], x: int) -> Optional[int]:
    if x not in ring.hom:
        return None
    for m in sorted(mod.hom):
        if m not in sub and mod.act(x, m) in sub:
            return m
    return None


def _close_ideal(ring: GradedRing, gens) -> frozenset[int]:
    members = {ring.zero} | set(gens)
    changed = True
    while changed:
        changed = False
        for x in sorted(members):
            for r in range(ring.order):
                p = ring.mul(r, x)
                if p not in members:
                    members.add(p)
                    changed = True
            for part in ring.decomp[x].values():
                if part not in members:
                    members.add(part)
                    changed = True
        for a in sorted(members):
            for b in sorted(members):
                s = ring.add(a, b)
                if s not in members:
                    members.add(s)
                    changed = True
    return frozenset(members)


def _close_submodule(mod: GradedModule, gens) -> frozenset[int]:
    members = {mod.zero} | set(gens)
    changed = True
    while changed:
        changed = False
        for x in sorted(members):
            for r in range(mod.ring.order):
                p = mod.act(r, x)
                if p not in members:
                    members.add(p)
                    changed = True
            for part in mod.decomp[x].values():
                if part not in members:
                    members.add(part)
                    changed = True
        for a in sorted(members):
            for b in sorted(members):
                s = mod.add(a, b)
                if s not in members:
                    members.add(s)
                    changed = True
    return frozenset(members)


def _graded_ideal_ok(ring: GradedRing, members: frozenset[int]) -> bool:
    if ring.zero not in members:
        return False
    for a in members:
        for b in members:
            if ring.add(a, b) not in members:
                return False
    for r in range(ring.order):
        for a in members:
            if ring.mul(r, a) not in members:
                return False
    for a in members:
        for part in ring.decomp[a].values():
            if part not in members:
                return False
    return True


def _graded_submodule_ok(mod: GradedModule, members: frozenset[int]) -> bool:
    if mod.zero not in members:
        return False
    for a in members:
        for b in members:
            if mod.add(a, b) not in members:
                return False
    for r in range(mod.ring.order):
        for a in members:
            if mod.act(r, a) not in members:
                return False
    for a in members:
        for part in mod.decomp[a].values():
            if part not in members:
                return False
    return True


def _colon_into_ring(mod: GradedModule, sub: frozenset[int], target) -> frozenset[int]:
    scope = range(mod.order) if target is None else sorted(target)
    return frozenset(
        r for r in range(mod.ring.order) if all(mod.act(r, m) in sub for m in scope)
    )


# ---------------------------------------------------------------------------
# miniature localization (independent of gradedlab.localization)
# ---------------------------------------------------------------------------


class _MiniLoc:
    """Fraction classes of a ring and module at S, by direct pair partition."""

    def __init__(self, ring: GradedRing, mod: GradedModule, s_members):
        self.ring = ring
        self.mod = mod
        self.s = sorted(s_members)
        self.rtor = frozenset(
            a for a in range(ring.order) if any(ring.mul(t, a) == ring.zero for t in self.s)
        )
        self.mtor = frozenset(
            a for a in range(mod.order) if any(mod.act(t, a) == mod.zero for t in self.s)
        )
        self.rpairs = [(r, s) for r in range(ring.order) for s in self.s]
        self.mpairs = [(m, s) for m in range(mod.order) for s in self.s]
        self.rcls, self.rreps = self._partition(self.rpairs, self._requiv)
        self.mcls, self.mreps = self._partition(self.mpairs, self._mequiv)
        self.rzero = self.rcls[(ring.zero, ring.one)]
        self.rone = self.rcls[(ring.one, ring.one)]
        self.mzero = self.mcls[(mod.zero, ring.one)]

    def _requiv(self, p, q) -> bool:
        r1, s1 = p
        r2, s2 = q
        return self.ring.sub(self.ring.mul(r1, s2), self.ring.mul(r2, s1)) in self.rtor

    def _mequiv(self, p, q) -> bool:
        m1, s1 = p
        m2, s2 = q
        return self.mod.sub(self.mod.act(s2, m1), self.mod.act(s1, m2)) in self.mtor

    @staticmethod
    def _partition(pairs, equiv):
        cls: dict[tuple[int, int], int] = {}
        reps: list[tuple[int, int]] = []
        for p in pairs:
            for cid, rep in enumerate(reps):
                if equiv(p, rep):
                    cls[p] = cid
                    break
            else:
                cls[p] = len(reps)
                reps.append(p)
        return cls, reps

    # class-level operations via representatives
    def radd(self, a: int, b: int) -> int:
        (r1, s1), (r2, s2) = self.rreps[a], self.rreps[b]
        num = self.ring.add(self.ring.mul(r1, s2), self.ring.mul(r2, s1))
        return self.rcls[(num, self.ring.mul(s1, s2))]

    def rmul(self, a: int, b: int) -> int:
        (r1, s1), (r2, s2) = self.rreps[a], self.rreps[b]
        return self.rcls[(self.ring.mul(r1, r2), self.ring.mul(s1, s2))]

    def madd(self, a: int, b: int) -> int:
        (m1, s1), (m2, s2) = self.mreps[a], self.mreps[b]
        num = self.mod.add(self.mod.act(s2, m1), self.mod.act(s1, m2))
        return self.mcls[(num, self.ring.mul(s1, s2))]

    def mact(self, a: int, b: int) -> int:
        (r, s), (m, t) = self.rreps[a], self.mreps[b]
        return self.mcls[(self.mod.act(r, m), self.ring.mul(s, t))]

    def hom_ring_classes(self) -> frozenset[int]:
        return frozenset(self.rcls[(r, s)] for (r, s) in self.rpairs if r in self.ring.hom)

    def hom_mod_classes(self) -> frozenset[int]:
        return frozenset(self.mcls[(m, s)] for (m, s) in self.mpairs if m in self.mod.hom)

    def rdecomp(self, c: int) -> list[int]:
        r, s = self.rreps[c]
        return [self.rcls[(part, s)] for part in self.ring.decomp[r].values()]

    def mdecomp(self, c: int) -> list[int]:
        m, s = self.mreps[c]
        return [self.mcls[(part, s)] for part in self.mod.decomp[m].values()]

    def extend_sub(self, members) -> frozenset[int]:
        return frozenset(self.mcls[(n, s)] for n in members for s in self.s)

    def extend_ideal(self, members) -> frozenset[int]:
        return frozenset(self.rcls[(p, s)] for p in members for s in self.s)

    def contract_sub(self, classes) -> frozenset[int]:
        return frozenset(
            m for m in range(self.mod.order) if self.mcls[(m, self.ring.one)] in classes
        )

    def contract_ideal(self, classes) -> frozenset[int]:
        return frozenset(
            r for r in range(self.ring.order) if self.rcls[(r, self.ring.one)] in classes
        )

    def gw_of(self, sub_classes: frozenset[int]) -> frozenset[int]:
        out = set()
        for x in sorted(self.hom_ring_classes()):
            for m in sorted(self.hom_mod_classes()):
                if m in sub_classes:
                    continue
                xm = self.mact(x, m)
                if xm != self.mzero and xm in sub_classes:
                    out.add(x)
                    break
        return frozenset(out)

    def submodule_ok(self, classes: frozenset[int]) -> bool:
        if self.mzero not in classes:
            return False
        for a in classes:
            for b in classes:
                if self.madd(a, b) not in classes:
                    return False
        for r in range(len(self.rreps)):
            for a in classes:
                if self.mact(r, a) not in classes:
                    return False
        for a in classes:
            for part in self.mdecomp(a):
                if part not in classes:
                    return False
        return True

    def ideal_ok(self, classes: frozenset[int]) -> bool:
        if self.rzero not in classes:
            return False
        for a in classes:
            for b in classes:
                if self.radd(a, b) not in classes:
                    return False
        for r in range(len(self.rreps)):
            for a in classes:
                if self.rmul(r, a) not in classes:
                    return False
        for a in classes:
            for part in self.rdecomp(a):
                if part not in classes:
                    return False
        return True


# ---------------------------------------------------------------------------
# integer-backend scans
# ---------------------------------------------------------------------------


def _z_shape(desc: dict) -> tuple[str, int, int]:
    if desc["kind"] == "z_int":
        return "z_int", int(desc["m"]), 0
    return "z_mod", int(desc["n"]), int(desc["d"])


def _z_is_ngwp(kind: str, q: int, d: int, x: int) -> Optional[int]:
    if x == 0:
        return None
    if kind == "z_int":
        for y in range(1, q):
            if (x * y) % q == 0:
                return y
        return None
    for m in range(q):
        if m % d == 0:
            continue
        xm = (x * m) % q
        if xm != 0 and xm % d == 0:
            return m
    return None


def _z_is_not_prime(kind: str, q: int, d: int, x: int) -> Optional[int]:
    if kind == "z_int":
        if x == 0:
            return 1 if q > 1 else None
        for y in range(1, q):
            if (x * y) % q == 0:
                return y
        return None
    for m in range(q):
        if m % d == 0:
            continue
        if ((x * m) % q) % d == 0:
            return m
    return None


def _z_rep(c: int, q: int) -> int:
    c %= q
    return c if c != 0 else q


def _z_gw_classes(kind: str, q: int, d: int) -> frozenset[int]:
    return frozenset(c for c in range(q) if _z_is_ngwp(kind, q, d, _z_rep(c, q)) is not None)


def _z_g_classes(kind: str, q: int, d: int) -> frozenset[int]:
    return frozenset(c for c in range(q) if _z_is_not_prime(kind, q, d, _z_rep(c, q)) is not None)


def _z_colon_classes(kind: str, q: int, d: int) -> frozenset[int]:
    if kind == "z_int":
        return frozenset({0})
    return frozenset(c for c in range(q) if all(((c * m) % q) % d == 0 for m in range(q)))


def _z_member(classes, q: int, x: int) -> bool:
    """Membership of an integer in (union of classes minus 0) plus 0."""
    return x == 0 or (x % q) in set(classes)


def _z_ideal_rule(classes, q: int) -> bool:
    """Closed-form: the union-with-zero is an ideal of the integers iff the
    class set is empty, or contains the zero class and is an ideal of Z_q."""
    cset = {c % q for c in classes}
    if not cset:
        return True
    if 0 not in cset:
        return False
    for a in cset:
        for b in cset:
            if (a + b) % q not in cset:
                return False
    for r in range(q):
        for a in cset:
            if (r * a) % q not in cset:
                return False
    return True


# ---------------------------------------------------------------------------
# fact dispatch
# ---------------------------------------------------------------------------


def _check_fact(ring: GradedRing, mod: GradedModule, desc: dict, fact: dict) -> bool:
    kind = fact["kind"]

    # -- plain set facts --------------------------------------------------
    if kind == "member":
        return fact["value"] in set(fact["set"])
    if kind == "not_member":
        return fact["value"] not in set(fact["set"])
    if kind == "sets_differ":
        return fact["left"] != fact["right"]
    if kind == "not_homogeneous_ring":
        return fact["x"] not in ring.hom

    # -- element predicates ------------------------------------------------
    if kind == "ngwp":
        sub = frozenset(fact["sub"])
        x, m = fact["x"], fact["m"]
        return (
            x in ring.hom
            and m in mod.hom
            and m not in sub
            and mod.act(x, m) in sub
            and mod.act(x, m) != mod.zero
        )
    if kind == "gwp":
        return _is_ngwp(ring, mod, frozenset(fact["sub"]), fact["x"]) is None
    if kind == "not_prime":
        sub = frozenset(fact["sub"])
        x, m = fact["x"], fact["m"]
        return x in ring.hom and m in mod.hom and m not in sub and mod.act(x, m) in sub
    if kind == "prime":
        return _is_not_prime(ring, mod, frozenset(fact["sub"]), fact["x"]) is None
    if kind == "nwp":
        sub = frozenset(fact["sub"])
        x, m = fact["x"], fact["m"]
        return m not in sub and mod.act(x, m) in sub and mod.act(x, m) != mod.zero
    if kind == "ngwp_ideal":
        ideal = frozenset(fact["ideal"])
        x, y = fact["x"], fact["y"]
        return (
            x in ring.hom
            and y in ring.hom
            and y not in ideal
            and ring.mul(x, y) in ideal
            and ring.mul(x, y) != ring.zero
        )
    if kind == "gwp_ideal":
        ideal = frozenset(fact["ideal"])
        x = fact["x"]
        if x not in ring.hom:
            return False
        for y in sorted(ring.hom):
            if y in ideal:
                continue
            xy = ring.mul(x, y)
            if xy != ring.zero and xy in ideal:
                return False
        return True

    # -- set recomputation facts --------------------------------------------
    if kind == "gw_set_equals":
        sub = frozenset(fact["sub"])
        got = frozenset(
            x for x in sorted(ring.hom) if _is_ngwp(ring, mod, sub, x) is not None
        )
        return got == frozenset(fact["members"])
    if kind == "g_set_equals":
        sub = frozenset(fact["sub"])
        got = frozenset(
            x for x in sorted(ring.hom) if _is_not_prime(ring, mod, sub, x) is not None
        )
        return got == frozenset(fact["members"])
    if kind == "w_set_equals":
        sub = frozenset(fact["sub"])
        got = set()
        for x in range(ring.order):
            for m in range(mod.order):
                if m in sub:
                    continue
                xm = mod.act(x, m)
                if xm != mod.zero and xm in sub:
                    got.add(x)
                    break
        return frozenset(got) == frozenset(fact["members"])
    if kind == "gw_ideal_set_equals":
        ideal = frozenset(fact["ideal"])
        got = set()
        for x in sorted(ring.hom):
            for y in sorted(ring.hom):
                if y in ideal:
                    continue
                xy = ring.mul(x, y)
                if xy != ring.zero and xy in ideal:
                    got.add(x)
                    break
        return frozenset(got) == frozenset(fact["members"])

    # -- ideal / submodule structure ----------------------------------------
    if kind == "set_is_graded_ideal":
        return _graded_ideal_ok(ring, frozenset(fact["members"]))
    if kind == "set_not_graded_ideal":
        members = frozenset(fact["members"])
        v = fact["violation"]
        if v[0] == "add":
            return v[1] in members and v[2] in members and ring.add(v[1], v[2]) not in members
        if v[0] == "mul":
            return v[2] in members and ring.mul(v[1], v[2]) not in members
        if v[0] == "decomp":
            x, g = v[1], tuple(v[2])
            return x in members and ring.decomp[x][g] not in members
        return ring.zero not in members
    if kind == "is_graded_submodule":
        return _graded_submodule_ok(mod, frozenset(fact["members"]))
    if kind == "colon_equals":
        sub = frozenset(fact["sub"])
        target = None if fact["target"] is None else frozenset(fact["target"])
        return _colon_into_ring(mod, sub, target) == frozenset(fact["members"])
    if kind == "ideal_times_equals":
        gens = {
            mod.act(a, m) for a in fact["ideal"] for m in fact["target"]
        }
        return _close_submodule(mod, gens) == frozenset(fact["members"])
    if kind == "ann_module_equals":
        return _colon_into_ring(mod, frozenset({mod.zero}), None) == frozenset(fact["members"])
    if kind == "cyclic_generator":
        m = fact["m"]
        if m not in mod.hom:
            return False
        return _close_submodule(mod, {m}) == frozenset(range(mod.order))
    if kind == "annihilates_quotient":
        sub = frozenset(fact["sub"])
        r = fact["r"]
        return r != ring.zero and all(mod.act(r, m) in sub for m in range(mod.order))
    if kind == "weakly_prime_ideal_violation":
        members = frozenset(fact["members"])
        x, y = fact["x"], fact["y"]
        xy = ring.mul(x, y)
        return (
            x in ring.hom and y in ring.hom
            and x not in members and y not in members
            and xy in members and xy != ring.zero
        )
    if kind == "weakly_prime_ideal_holds":
        members = frozenset(fact["members"])
        if len(members) == ring.order:
            return False
        for x in sorted(ring.hom):
            if x in members:
                continue
            for y in sorted(ring.hom):
                if y in members:
                    continue
                xy = ring.mul(x, y)
                if xy != ring.zero and xy in members:
                    return False
        return True
    if kind == "weakly_prime_holds":
        sub = frozenset(fact["sub"])
        if len(sub) == mod.order:
            return False
        colon = _colon_into_ring(mod, sub, None)
        for x in sorted(ring.hom):
            if x in colon:
                continue
            if _is_ngwp(ring, mod, sub, x) is not None:
                return False
        return True
    if kind == "weakly_primary_holds":
        sub = frozenset(fact["sub"])
        colon = _colon_into_ring(mod, sub, None)

        def lands(x: int) -> bool:
            p = x
            for _ in range(ring.order):
                if p in colon:
                    return True
                p = ring.mul(p, x)
            return False

        for x in sorted(ring.hom):
            if lands(x):
                continue
            if _is_ngwp(ring, mod, sub, x) is not None:
                return False
        return True
    if kind == "characterization_holds":
        sub = frozenset(fact["sub"])
        adjoint = frozenset(fact["adjoint"])
        if not _graded_ideal_ok(ring, adjoint):
            return False
        for p in sorted(ring.hom):
            inside = p in adjoint and p != ring.zero
            witness = None
            for m in sorted(mod.hom):
                if mod.act(p, m) not in sub:
                    continue
                if m in sub or mod.act(p, m) == mod.zero:
                    continue
                witness = m
                break
            if inside and witness is None:
                return False
            if not inside and witness is not None:
                return False
        return True
    if kind == "no_factorization":
        target = frozenset(fact["sub"])
        pool = [frozenset(p) for p in fact["pool"]]
        tails = [frozenset(t) for t in fact["tails"]]
        max_len = fact["max_len"]

        def products(depth: int, start: int, acc: frozenset[int]):
            yield acc
            if depth == max_len:
                return
            for i in range(start, len(pool)):
                gens = {ring.mul(a, b) for a in acc for b in pool[i]}
                yield from products(depth + 1, i, _close_ideal(ring, gens))

        unit = frozenset(range(ring.order))
        for acc in products(0, 0, unit):
            for tail in tails:
                gens = {mod.act(a, m) for a in acc for m in tail}
                if _close_submodule(mod, gens) == target:
                    return False
        return True

    # -- localization facts ---------------------------------------------------
    if kind.startswith("loc_"):
        loc = _MiniLoc(ring, mod, fact["s_set"])
        if kind == "loc_nonzero":
            pair = tuple(fact["pair"])
            if fact["space"] == "module":
                return loc.mcls[pair] != loc.mzero
            return loc.rcls[pair] != loc.rzero
        if kind == "loc_in_sub_extension":
            return loc.mcls[tuple(fact["pair"])] in loc.extend_sub(fact["sub"])
        if kind == "loc_not_in_sub_extension":
            return loc.mcls[tuple(fact["pair"])] not in loc.extend_sub(fact["sub"])
        if kind == "loc_in_ideal_extension":
            return loc.rcls[tuple(fact["pair"])] in loc.extend_ideal(fact["ideal"])
        if kind == "loc_not_in_ideal_extension":
            return loc.rcls[tuple(fact["pair"])] not in loc.extend_ideal(fact["ideal"])
        if kind == "loc_colon_member":
            x, s = fact["pair"]
            ext = loc.extend_sub(fact["sub"])
            for l in fact["target"]:
                for u in loc.s:
                    if loc.mcls[(mod.act(x, l), ring.mul(s, u))] not in ext:
                        return False
            return True
        if kind == "loc_not_colon_member":
            x, s = fact["pair"]
            ext = loc.extend_sub(fact["sub"])
            for l in fact["target"]:
                for u in loc.s:
                    if loc.mcls[(mod.act(x, l), ring.mul(s, u))] not in ext:
                        return True
            return False
        if kind == "loc_extension_equals":
            denoted = frozenset(loc.mcls[tuple(p)] for p in fact["class_pairs"])
            return loc.extend_sub(fact["sub"]) == denoted
        if kind == "loc_ideal_extension_equals":
            denoted = frozenset(loc.rcls[tuple(p)] for p in fact["class_pairs"])
            return loc.extend_ideal(fact["ideal"]) == denoted
        if kind == "loc_contract_equals":
            denoted = frozenset(loc.mcls[tuple(p)] for p in fact["class_pairs"])
            return loc.contract_sub(denoted) == frozenset(fact["members"])
        if kind == "loc_ideal_contract_equals":
            denoted = frozenset(loc.rcls[tuple(p)] for p in fact["class_pairs"])
            return loc.contract_ideal(denoted) == frozenset(fact["members"])
        if kind == "loc_is_submodule":
            denoted = frozenset(loc.mcls[tuple(p)] for p in fact["class_pairs"])
            return loc.submodule_ok(denoted)
        if kind == "loc_gw_equals":
            denoted = frozenset(loc.mcls[tuple(p)] for p in fact["class_pairs"])
            gw = frozenset(loc.rcls[tuple(p)] for p in fact["gw_class_pairs"])
            return loc.gw_of(denoted) == gw
        if kind == "loc_set_is_graded_ideal":
            denoted = frozenset(loc.rcls[tuple(p)] for p in fact["class_pairs"])
            return loc.ideal_ok(denoted)
        if kind == "loc_set_not_graded_ideal":
            denoted = frozenset(loc.rcls[tuple(p)] for p in fact["class_pairs"])
            v = fact["violation"]
            if v[0] == "add":
                a, b = loc.rcls[tuple(v[1])], loc.rcls[tuple(v[2])]
                return a in denoted and b in denoted and loc.radd(a, b) not in denoted
            if v[0] == "mul":
                r, a = loc.rcls[tuple(v[1])], loc.rcls[tuple(v[2])]
                return a in denoted and loc.rmul(r, a) not in denoted
            if v[0] == "decomp":
                a = loc.rcls[tuple(v[1])]
                return a in denoted and any(part not in denoted for part in loc.rdecomp(a))
            return loc.rzero not in denoted
        return False

    # -- integer-backend facts --------------------------------------------
    if kind.startswith("z_"):
        zkind, q, d = _z_shape(desc)
        if kind == "z_ngwp":
            x, m = fact["x"], fact["m"]
            if x == 0:
                return False
            if zkind == "z_int":
                return m % q != 0 and x * m != 0 and (x * m) % q == 0
            xm = (x * m) % q
            return m % d != 0 and xm != 0 and xm % d == 0
        if kind == "z_gwp":
            return _z_is_ngwp(zkind, q, d, fact["x"]) is None
        if kind == "z_not_prime":
            x, m = fact["x"], fact["m"]
            if zkind == "z_int":
                return m % q != 0 and (x * m) % q == 0
            return m % d != 0 and ((x * m) % q) % d == 0
        if kind == "z_prime":
            return _z_is_not_prime(zkind, q, d, fact["x"]) is None
        if kind == "z_gw_classes_equal":
            return _z_gw_classes(zkind, q, d) == frozenset(fact["classes"])
        if kind == "z_g_classes_equal":
            return _z_g_classes(zkind, q, d) == frozenset(fact["classes"])
        if kind == "z_colon_classes_equal":
            return _z_colon_classes(zkind, q, d) == frozenset(fact["classes"])
        if kind == "z_ngwp_ideal":
            ideal = set(fact["ideal_classes"])
            x, y = fact["x"], fact["y"]
            return (
                x != 0 and y != 0
                and (y % q) not in ideal
                and ((x * y) % q) in ideal
            )
        if kind == "z_gw_ideal_classes_equal":
            ideal = set(fact["ideal_classes"])
            got = set()
            for a in range(q):
                for b in range(q):
                    if b in ideal:
                        continue
                    if (a * b) % q in ideal:
                        got.add(a)
                        break
            return got == set(fact["classes"])
        if kind == "z_set_ideal":
            return _z_ideal_rule(fact["classes"], q)
        if kind == "z_set_not_ideal":
            v = fact["violation"]
            classes = fact["classes"]
            if v[0] == "add":
                return (
                    _z_member(classes, q, v[1])
                    and _z_member(classes, q, v[2])
                    and not _z_member(classes, q, v[1] + v[2])
                )
            return _z_member(classes, q, v[2]) and not _z_member(classes, q, v[1] * v[2])
        if kind == "z_weakly_prime_ideal_violation":
            classes = fact["classes"]
            a, b = fact["a"], fact["b"]
            return (
                not _z_member(classes, q, a)
                and not _z_member(classes, q, b)
                and a * b != 0
                and _z_member(classes, q, a * b)
            )
        if kind == "z_weakly_prime_holds":
            if zkind == "z_int":
                return q > 1 and all(
                    (a * b) % q != 0 for a in range(1, q) for b in range(1, q)
                )
            colon = _z_colon_classes(zkind, q, d)
            if d == 1:
                return False  # the submodule is the whole module
            for x in range(q):
                if x in colon:
                    continue
                if _z_is_ngwp(zkind, q, d, _z_rep(x, q)) is not None:
                    return False
            return True
        if kind == "z_weakly_primary_holds":
            colon = _z_colon_classes(zkind, q, d)

            def lands(a: int) -> bool:
                p = a % q
                for _ in range(q):
                    if p in colon:
                        return True
                    p = (p * a) % q
                return False

            for x in range(q):
                if lands(x):
                    continue
                if _z_is_ngwp(zkind, q, d, _z_rep(x, q)) is not None:
                    return False
            return True
        if kind == "z_annihilates_quotient":
            r = fact["r"]
            if r == 0:
                return False
            if zkind == "z_int":
                return r % q == 0 or q == 1
            return all(((r * m) % q) % d == 0 for m in range(q))
        return False

    return False


def verify_certificate(cert: dict) -> bool:
    """Re-check every fact in a certificate from the rebuilt instance."""
    try:
        inst = build_instance(cert["instance"], enumerate_all=False)
    except Exception as exc:
        raise StaleDescriptorError(f"cannot rebuild instance: {exc}") from exc
    ring, mod = inst.ring, inst.module
    desc = cert["instance"]
    for fact in cert.get("facts", []):
        try:
            if not _check_fact(ring, mod, desc, fact):
                return False
        except (KeyError, IndexError, TypeError):
            return False
    return True
