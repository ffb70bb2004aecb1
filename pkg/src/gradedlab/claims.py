"""The claims registry: every statement checked by the harness, with certificates.

Each claim couples a hypothesis with a conclusion, both decided by
exhaustion on an instance.  A claim result is Confirmed (conclusion
exhaustively verified wherever the hypothesis held), Refuted (a concrete
counterexample exists, packaged as a certificate of element-level facts
that :mod:`gradedlab.verifycert` re-checks from the raw tables), or
HypothesisUnmet / BudgetExceeded.  Refutations are findings, never errors:
the contract is the correctness of the verdicts and certificates, not
agreement with the claim catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .factorization import is_wp_module, is_wp_ring, weakly_primal_ideals
from .instances import Budget, Instance
from .localization import (
    LocalizedModule,
    contract_ideal,
    contract_submodule,
    correspondence_check,
    extend_ideal,
    extend_submodule,
    localize_module,
    localize_ring,
    localized_colon_agrees,
)
from .modules import (
    GradedSubmodule,
    ann_of_module,
    colon_into_ring,
    enumerate_graded_submodules,
    ideal_times_module,
    is_cyclic,
    is_faithful,
    is_multiplication,
)
from .primality import (
    PrimalityVerdict,
    Witness,
    characterization_check,
    classify,
    gw_set_ideal,
    is_graded_weakly_primal_ideal,
)
from .rings import (
    EnumerationBudgetError,
    GradedIdeal,
    MultiplicativeSet,
    Violation,
    is_graded_weakly_prime_ideal,
)
from .zbackend import (
    ZInstance,
    ZVerdict,
    classify_z,
    classes_with_zero_ideal_of_z,
    class_rep,
    colon_classes_z,
    gw_ideal_classes_z,
    is_gp_z,
    is_gwp_z,
    n_times_colon_is_zero,
)

CONFIRMED = "Confirmed"
REFUTED = "Refuted"
HYPOTHESIS_UNMET = "HypothesisUnmet"
BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass
class ClaimResult:
    claim_id: str
    part: str
    instance: str
    status: str
    details: dict
    certificate: Optional[dict] = None

    def to_json(self) -> dict:
        out = {
            "part": self.part,
            "instance": self.instance,
            "status": self.status,
            "details": self.details,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class ClaimSpec:
    claim_id: str
    source: str
    statement: str
    evaluate: Callable[["ClaimContext", Instance], list[ClaimResult]]

    @property
    def reference(self) -> str:
        return f"{self.source}: {self.statement}"


class ClaimContext:
    """Per-run caches shared across claims: verdicts, localizations, pools."""

    def __init__(self, budget: Budget):
        self.budget = budget
        self._verdicts: dict[tuple, PrimalityVerdict] = {}
        self._zverdicts: dict[str, ZVerdict] = {}
        self._locs: dict[tuple, LocalizedModule] = {}
        self._loc_subs: dict[tuple, list[GradedSubmodule]] = {}
        self._extensions: dict[tuple, GradedSubmodule] = {}

    def verdict(self, inst: Instance, sub: GradedSubmodule) -> PrimalityVerdict:
        key = (inst.key, sub.members)
        if key not in self._verdicts:
            self._verdicts[key] = classify(sub)
        return self._verdicts[key]

    def zverdict(self, inst: Instance) -> ZVerdict:
        if inst.key not in self._zverdicts:
            assert inst.zinstance is not None
            self._zverdicts[inst.key] = classify_z(inst.zinstance)
        return self._zverdicts[inst.key]

    def localization(self, inst: Instance, sset: MultiplicativeSet) -> LocalizedModule:
        key = (inst.key, sset.sorted_members)
        if key not in self._locs:
            ring_loc = localize_ring(inst.ring, sset)
            self._locs[key] = localize_module(inst.module, sset, ring_loc)
        return self._locs[key]

    def loc_submodules(self, inst: Instance, sset: MultiplicativeSet) -> list[GradedSubmodule]:
        key = (inst.key, sset.sorted_members)
        if key not in self._loc_subs:
            loc = self.localization(inst, sset)
            self._loc_subs[key] = enumerate_graded_submodules(
                loc.module, max_order=self.budget.max_order
            )
        return self._loc_subs[key]

    def loc_verdict(self, inst: Instance, sset: MultiplicativeSet, sub: GradedSubmodule) -> PrimalityVerdict:
        key = (inst.key, sset.sorted_members, sub.members)
        if key not in self._verdicts:
            self._verdicts[key] = classify(sub)
        return self._verdicts[key]

    def extension(self, inst: Instance, sset: MultiplicativeSet, sub: GradedSubmodule) -> GradedSubmodule:
        key = (inst.key, sset.sorted_members, sub.members)
        if key not in self._extensions:
            loc = self.localization(inst, sset)
            self._extensions[key] = extend_submodule(loc, sub)
        return self._extensions[key]


# ---------------------------------------------------------------------------
# certificate fact builders
# ---------------------------------------------------------------------------


def _cert(inst: Instance, facts: list[dict], **context) -> dict:
    cert = {"instance": inst.descriptor, "facts": facts}
    if context:
        cert["context"] = context
    return cert


def _f(kind: str, **payload) -> dict:
    return {"kind": kind, **payload}


def _mem(values) -> list[int]:
    return sorted(values)


def f_ngwp(sub: GradedSubmodule, wit: Witness) -> dict:
    return _f("ngwp", sub=_mem(sub.members), x=wit.x, m=wit.m)


def f_gwp(sub: GradedSubmodule, x: int) -> dict:
    return _f("gwp", sub=_mem(sub.members), x=x)


def f_not_prime(sub: GradedSubmodule, wit: Witness) -> dict:
    return _f("not_prime", sub=_mem(sub.members), x=wit.x, m=wit.m)


def f_prime(sub: GradedSubmodule, x: int) -> dict:
    return _f("prime", sub=_mem(sub.members), x=x)


def f_nwp(sub: GradedSubmodule, wit: Witness) -> dict:
    return _f("nwp", sub=_mem(sub.members), x=wit.x, m=wit.m)


def f_gw_equals(sub: GradedSubmodule, verdict: PrimalityVerdict) -> dict:
    return _f("gw_set_equals", sub=_mem(sub.members), members=_mem(verdict.gw))


def f_g_equals(sub: GradedSubmodule, verdict: PrimalityVerdict) -> dict:
    return _f("g_set_equals", sub=_mem(sub.members), members=_mem(verdict.g))


def f_w_equals(sub: GradedSubmodule, verdict: PrimalityVerdict) -> dict:
    return _f("w_set_equals", sub=_mem(sub.members), members=_mem(verdict.w))


def f_set_ideal(members) -> dict:
    return _f("set_is_graded_ideal", members=_mem(members))


def _violation_payload(violation: Violation) -> list:
    if violation.code == "not_add_closed":
        a, b, _ = violation.witness
        return ["add", a, b]
    if violation.code == "not_absorbing":
        r, x, _ = violation.witness
        return ["mul", r, x]
    if violation.code == "not_graded":
        x, g, _ = violation.witness
        return ["decomp", x, list(g)]
    return ["zero"]


def f_set_not_ideal(members, violation: Violation) -> dict:
    return _f(
        "set_not_graded_ideal", members=_mem(members), violation=_violation_payload(violation)
    )


def f_is_submodule(sub: GradedSubmodule) -> dict:
    return _f("is_graded_submodule", members=_mem(sub.members))


def f_colon_equals(sub: GradedSubmodule, target: Optional[GradedSubmodule], colon: GradedIdeal) -> dict:
    return _f(
        "colon_equals",
        sub=_mem(sub.members),
        target=None if target is None else _mem(target.members),
        members=_mem(colon.members),
    )


def f_ideal_times_equals(ideal_members, target_members, result_members) -> dict:
    return _f(
        "ideal_times_equals",
        ideal=_mem(ideal_members),
        target=_mem(target_members),
        members=_mem(result_members),
    )


def f_member(set_members, value: int) -> dict:
    return _f("member", set=_mem(set_members), value=value)


def f_not_member(set_members, value: int) -> dict:
    return _f("not_member", set=_mem(set_members), value=value)


def f_ngwp_ideal(ideal_members, x: int, y: int) -> dict:
    return _f("ngwp_ideal", ideal=_mem(ideal_members), x=x, y=y)


def f_gwp_ideal(ideal_members, x: int) -> dict:
    return _f("gwp_ideal", ideal=_mem(ideal_members), x=x)


def f_gw_ideal_equals(ideal_members, gw_members) -> dict:
    return _f("gw_ideal_set_equals", ideal=_mem(ideal_members), members=_mem(gw_members))


def f_ann_module_equals(members) -> dict:
    return _f("ann_module_equals", members=_mem(members))


def f_weakly_prime_ideal_violation(members, x: int, y: int) -> dict:
    return _f("weakly_prime_ideal_violation", members=_mem(members), x=x, y=y)


def f_not_homogeneous(x: int) -> dict:
    return _f("not_homogeneous_ring", x=x)


# localization facts; submodules/ideals of the localized structures are
# denoted by explicit member pairs where needed, and base-level sets by lists.


def f_loc(kind: str, sset: MultiplicativeSet, **payload) -> dict:
    return _f(kind, s_set=_mem(sset.members), **payload)


# integer-backend facts


def zf(kind: str, **payload) -> dict:
    return {"kind": kind, **payload}


def z_facts_gw(v: ZVerdict) -> list[dict]:
    return [zf("z_gw_classes_equal", classes=_mem(v.gw))]


def z_facts_g(v: ZVerdict) -> list[dict]:
    return [zf("z_g_classes_equal", classes=_mem(v.g))]


def z_fact_set_ideal(classes) -> dict:
    return zf("z_set_ideal", classes=_mem(classes))


def z_fact_set_not_ideal(classes, violation) -> dict:
    return zf("z_set_not_ideal", classes=_mem(classes), violation=list(violation))


# ---------------------------------------------------------------------------
# claim evaluators
# ---------------------------------------------------------------------------

TABLE_KINDS = ("zn", "quadratic", "product", "tables")


def _result(
    claim_id: str,
    inst: Instance,
    status: str,
    part: str = "",
    certificate: Optional[dict] = None,
    **details,
) -> ClaimResult:
    return ClaimResult(
        claim_id=claim_id,
        part=part,
        instance=inst.key,
        status=status,
        details=details,
        certificate=certificate,
    )


def _guarded(claim_id: str):
    """Wrap an evaluator so enumeration blowups record BudgetExceeded."""

    def deco(fn):
        def wrapper(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
            try:
                return fn(ctx, inst)
            except EnumerationBudgetError as exc:
                return [_result(claim_id, inst, BUDGET_EXCEEDED, reason=str(exc))]

        return wrapper

    return deco


def _sub_name(sub: GradedSubmodule) -> str:
    return "{" + ",".join(str(m) for m in sub.sorted_members) + "}"


@_guarded("lem1")
def eval_lem1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "lem1"
    if inst.is_symbolic:
        v = ctx.zverdict(inst)
        if not v.is_primal:
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="submodule is not primal")]
        if v.is_weakly_primal:
            return [_result(cid, inst, CONFIRMED, checked=1)]
        facts = (
            z_facts_g(v)
            + [z_fact_set_ideal(v.g)]
            + z_facts_gw(v)
            + [z_fact_set_not_ideal(v.gw, v.weakly_primal_violation)]
        )
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule="N")]
    hits = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        if not v.is_primal:
            continue
        hits += 1
        if not v.is_weakly_primal:
            assert v.gw_ideal_violation is not None
            facts = [
                f_g_equals(sub, v),
                f_set_ideal(set(v.g) | {inst.ring.zero}),
                f_gw_equals(sub, v),
                f_set_not_ideal(set(v.gw) | {inst.ring.zero}, v.gw_ideal_violation),
            ]
            return [
                _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
            ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no primal submodule")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("rem1.1")
def eval_rem1_1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "rem1.1"
    if inst.is_symbolic:
        ok, wit = is_gwp_z(inst.zinstance, 0)
        if ok:
            return [_result(cid, inst, CONFIRMED, checked=1)]
        facts = [zf("z_ngwp", x=0, m=wit[1])]
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
    checked = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        checked += 1
        if inst.ring.zero in v.gw:
            facts = [f_ngwp(sub, v.gw[inst.ring.zero])]
            return [
                _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
            ]
    return [_result(cid, inst, CONFIRMED, checked=checked)]


@_guarded("rem1.2")
def eval_rem1_2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "rem1.2"
    if inst.is_symbolic:
        v = ctx.zverdict(inst)
        bad = sorted(set(v.gw) - set(v.g))
        if not bad:
            return [_result(cid, inst, CONFIRMED, checked=len(v.gw))]
        c = bad[0]
        rep = class_rep(inst.zinstance, c)
        facts = [zf("z_ngwp", x=v.gw[c][0], m=v.gw[c][1]), zf("z_prime", x=rep)]
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
    checked = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        checked += len(v.gw)
        bad = sorted(set(v.gw) - set(v.g))
        if bad:
            x = bad[0]
            facts = [f_ngwp(sub, v.gw[x]), f_prime(sub, x)]
            return [
                _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
            ]
    return [_result(cid, inst, CONFIRMED, checked=checked)]


@_guarded("rem1.3")
def eval_rem1_3(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "rem1.3"
    if inst.is_symbolic:
        # Trivial grading: the ungraded and graded scans coincide by definition.
        return [_result(cid, inst, CONFIRMED, note="trivially graded: W(N) = GW(N)")]
    checked = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        checked += len(v.w)
        bad = sorted(set(v.w) - set(v.gw))
        if bad:
            x = bad[0]
            facts = [f_w_equals(sub, v), f_nwp(sub, v.w[x])]
            if x in inst.ring.hom:
                facts.append(f_gwp(sub, x))
            else:
                facts.append(f_not_homogeneous(x))
            return [
                _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
            ]
    return [_result(cid, inst, CONFIRMED, checked=checked)]


@_guarded("lem2.1")
def eval_lem2_1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "lem2.1"
    if inst.is_symbolic:
        v = ctx.zverdict(inst)
        colon = colon_classes_z(inst.zinstance)
        bad = sorted(colon - set(v.gw))
        if not bad:
            return [_result(cid, inst, CONFIRMED, checked=len(colon))]
        rep = class_rep(inst.zinstance, bad[0])
        facts = [zf("z_colon_classes_equal", classes=_mem(colon)), zf("z_gwp", x=rep)]
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
    checked = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        colon = colon_into_ring(sub)
        checked += 1
        bad = sorted((colon.members & inst.ring.hom) - set(v.gw) - {inst.ring.zero})
        if bad:
            x = bad[0]
            facts = [f_colon_equals(sub, None, colon), f_gwp(sub, x)]
            return [
                _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
            ]
    return [_result(cid, inst, CONFIRMED, checked=checked)]


@_guarded("lem2.2")
def eval_lem2_2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "lem2.2"
    if inst.is_symbolic:
        z = inst.zinstance
        v = ctx.zverdict(inst)
        colon = colon_classes_z(z)
        gwp_classes = gw_ideal_classes_z(z, colon)
        bad = sorted(gwp_classes - set(v.gw))
        if not bad:
            return [_result(cid, inst, CONFIRMED, checked=len(gwp_classes))]
        c = bad[0]
        rep = class_rep(z, c)
        q = z.modulus
        y = next(
            b for b in range(1, q + 1)
            if (b % q) not in colon and ((rep * b) % q) in colon
        )
        facts = [
            zf("z_colon_classes_equal", classes=_mem(colon)),
            zf("z_ngwp_ideal", ideal_classes=_mem(colon), x=rep, y=y),
            zf("z_gwp", x=rep),
        ]
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
    checked = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        colon = colon_into_ring(sub)
        gw_colon = gw_set_ideal(colon)
        checked += len(gw_colon)
        bad = sorted(set(gw_colon) - set(v.gw))
        if bad:
            x = bad[0]
            facts = [
                f_colon_equals(sub, None, colon),
                f_ngwp_ideal(colon.members, x, gw_colon[x].m),
                f_gwp(sub, x),
            ]
            return [
                _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
            ]
    return [_result(cid, inst, CONFIRMED, checked=checked)]


@_guarded("prop1")
def eval_prop1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "prop1"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="quantifies over all ideals of the integers")]
    checked = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        for ideal in inst.ideals:
            checked += 1
            lhs = v.is_weakly_primal and v.adjoint is not None and v.adjoint.members == ideal.members
            rhs, wit = characterization_check(sub, ideal.members)
            if lhs == rhs:
                continue
            facts = [f_gw_equals(sub, v)]
            if v.is_weakly_primal:
                facts.append(f_set_ideal(set(v.gw) | {inst.ring.zero}))
            elif v.gw_ideal_violation is not None:
                facts.append(f_set_not_ideal(set(v.gw) | {inst.ring.zero}, v.gw_ideal_violation))
            if rhs:
                facts.append(_f("characterization_holds", sub=_mem(sub.members), adjoint=_mem(ideal.members)))
            elif wit is not None and wit[0] == "containment_violated":
                # A homogeneous p outside P (never 0: 0 is weakly prime to all N)
                # with a strict witness, so p should have been in P.
                _, p, m = wit
                facts.append(f_ngwp(sub, Witness("ngwp", p, m)))
                facts.append(f_not_member(ideal.members, p))
            elif wit is not None and wit[0] == "missing_strict_containment":
                facts.append(f_gwp(sub, wit[1]))
                facts.append(f_member(ideal.members, wit[1]))
            return [
                _result(
                    cid, inst, REFUTED,
                    certificate=_cert(inst, facts),
                    submodule=_sub_name(sub),
                    ideal=_mem(ideal.members),
                    direct=lhs,
                    colon_based=rhs,
                )
            ]
    return [_result(cid, inst, CONFIRMED, checked=checked)]


@_guarded("thm1")
def eval_thm1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm1"
    if inst.is_symbolic:
        z = inst.zinstance
        v = ctx.zverdict(inst)
        if not v.is_weakly_primal:
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="submodule is not weakly primal")]
        colon = colon_classes_z(z)
        gwp_classes = gw_ideal_classes_z(z, colon)
        ideal_ok, viol = classes_with_zero_ideal_of_z(gwp_classes, z.modulus)
        equal = gwp_classes == frozenset(v.gw)
        if ideal_ok and equal:
            return [_result(cid, inst, CONFIRMED, checked=1)]
        facts = z_facts_gw(v) + [
            z_fact_set_ideal(v.gw),
            zf("z_colon_classes_equal", classes=_mem(colon)),
            zf("z_gw_ideal_classes_equal", ideal_classes=_mem(colon), classes=_mem(gwp_classes)),
        ]
        if not ideal_ok:
            facts.append(z_fact_set_not_ideal(gwp_classes, viol))
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts), equal_sets=equal)]
    cyclic, gen = is_cyclic(inst.module)
    if not cyclic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not cyclic")]
    hits = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        if not v.is_weakly_primal:
            continue
        hits += 1
        colon = colon_into_ring(sub)
        ok, gw_colon, viol = is_graded_weakly_primal_ideal(colon)
        equal = frozenset(gw_colon) == frozenset(v.gw)
        if ok and equal:
            continue
        facts = [
            _f("cyclic_generator", m=gen),
            f_gw_equals(sub, v),
            f_set_ideal(set(v.gw) | {inst.ring.zero}),
            f_colon_equals(sub, None, colon),
            f_gw_ideal_equals(colon.members, gw_colon),
        ]
        if not ok and viol is not None:
            facts.append(f_set_not_ideal(set(gw_colon) | {inst.ring.zero}, viol))
        return [
            _result(
                cid, inst, REFUTED,
                certificate=_cert(inst, facts),
                submodule=_sub_name(sub),
                equal_sets=equal,
                colon_weakly_primal=ok,
            )
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal submodule")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("thm2")
def eval_thm2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm2"
    if inst.is_symbolic:
        z = inst.zinstance
        v = ctx.zverdict(inst)
        if not v.is_weakly_primal:
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="submodule is not weakly primal")]
        cset = frozenset(v.gw)
        q = z.modulus

        def member(x: int) -> bool:
            return x == 0 or (x != 0 and (x % q) in cset)

        witness = None
        for a in range(1, q + 1):
            if member(a):
                continue
            for b in range(1, q + 1):
                if member(b):
                    continue
                if a * b != 0 and member(a * b):
                    witness = (a, b)
                    break
            if witness:
                break
        if witness is None:
            return [_result(cid, inst, CONFIRMED, checked=1)]
        facts = z_facts_gw(v) + [
            z_fact_set_ideal(v.gw),
            zf("z_weakly_prime_ideal_violation", classes=_mem(v.gw), a=witness[0], b=witness[1]),
        ]
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
    hits = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        if not v.is_weakly_primal or v.adjoint is None:
            continue
        hits += 1
        if not v.adjoint.is_proper():
            continue  # cannot happen: units are weakly prime to every submodule
        ok, wit = is_graded_weakly_prime_ideal(v.adjoint)
        if ok:
            continue
        assert wit is not None
        facts = [
            f_gw_equals(sub, v),
            f_set_ideal(v.adjoint.members),
            f_weakly_prime_ideal_violation(v.adjoint.members, wit[0], wit[1]),
        ]
        return [
            _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal submodule")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("thm3")
def eval_thm3(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm3"
    if inst.is_symbolic:
        z = inst.zinstance
        v = ctx.zverdict(inst)
        colon = colon_classes_z(z)
        # Integer-level colon <= adjoint reduces to containment of class sets
        # (the class of 0 always lies in the colon, so its nonzero members
        # must be in the GW classes too).
        hyp = v.is_weakly_primal and colon <= frozenset(v.gw)
        if not hyp or n_times_colon_is_zero(z):
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="hypotheses not satisfied")]
        if v.is_primal:
            return [_result(cid, inst, CONFIRMED, checked=1)]
        facts = z_facts_gw(v) + [z_fact_set_ideal(v.gw)] + z_facts_g(v) + [
            z_fact_set_not_ideal(v.g, v.primal_violation)
        ]
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
    hits = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        if not v.is_weakly_primal or v.adjoint is None:
            continue
        colon = colon_into_ring(sub)
        if not colon.members <= v.adjoint.members:
            continue
        product = ideal_times_module(colon, sub)
        if product.members == frozenset({inst.module.zero}):
            continue
        hits += 1
        if v.is_primal:
            continue
        assert v.g_ideal_violation is not None
        facts = [
            f_gw_equals(sub, v),
            f_set_ideal(v.adjoint.members),
            f_colon_equals(sub, None, colon),
            f_ideal_times_equals(colon.members, sub.members, product.members),
            f_g_equals(sub, v),
            f_set_not_ideal(set(v.g) | {inst.ring.zero}, v.g_ideal_violation),
        ]
        return [
            _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="hypotheses never satisfied")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


def _eval_thm4(ctx: ClaimContext, inst: Instance, cid: str, primary: bool) -> list[ClaimResult]:
    if inst.is_symbolic:
        z = inst.zinstance
        v = ctx.zverdict(inst)
        holds = v.is_weakly_primary if primary else v.is_weakly_prime
        if not holds:
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="hypothesis predicate fails")]
        if v.is_weakly_primal:
            return [_result(cid, inst, CONFIRMED, checked=1)]
        kind = "z_weakly_primary_holds" if primary else "z_weakly_prime_holds"
        facts = [zf(kind)] + z_facts_gw(v) + [z_fact_set_not_ideal(v.gw, v.weakly_primal_violation)]
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
    hits = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        holds = v.is_weakly_primary if primary else v.is_weakly_prime
        if not holds:
            continue
        hits += 1
        if v.is_weakly_primal:
            continue
        assert v.gw_ideal_violation is not None
        kind = "weakly_primary_holds" if primary else "weakly_prime_holds"
        facts = [
            _f(kind, sub=_mem(sub.members)),
            f_gw_equals(sub, v),
            f_set_not_ideal(set(v.gw) | {inst.ring.zero}, v.gw_ideal_violation),
        ]
        return [
            _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no qualifying submodule")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("thm4.1")
def eval_thm4_1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    return _eval_thm4(ctx, inst, "thm4.1", primary=True)


@_guarded("thm4.2")
def eval_thm4_2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    return _eval_thm4(ctx, inst, "thm4.2", primary=False)


@_guarded("rem2")
def eval_rem2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "rem2"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="quantifies over all ideals of the integers")]
    mult, _ = is_multiplication(inst.module, max_order=ctx.budget.max_order)
    if not mult:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not a multiplication module")]
    ann = ann_of_module(inst.module)
    hits = 0
    for ideal in inst.ideals:
        if not ann.members <= ideal.members:
            continue
        hits += 1
        pm = ideal_times_module(ideal, inst.module)
        back = colon_into_ring(pm)
        if back.members == ideal.members:
            continue
        facts = [
            f_ann_module_equals(ann.members),
            f_ideal_times_equals(ideal.members, range(inst.module.order), pm.members),
            f_colon_equals(pm, None, back),
        ]
        return [
            _result(
                cid, inst, REFUTED,
                certificate=_cert(inst, facts),
                ideal=_mem(ideal.members),
                recovered=_mem(back.members),
            )
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no ideal contains the annihilator")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("prop2")
def eval_prop2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "prop2"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="quantifies over all ideals of the integers")]
    mult, _ = is_multiplication(inst.module, max_order=ctx.budget.max_order)
    if not mult:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not a multiplication module")]
    ann = ann_of_module(inst.module)
    hits = 0
    for ideal in inst.ideals:
        if not ann.members <= ideal.members:
            continue
        ok_wp, gw_p, _ = is_graded_weakly_primal_ideal(ideal)
        if not ok_wp:
            continue
        hits += 1
        pm_sub = ideal_times_module(ideal, inst.module)
        v = ctx.verdict(inst, pm_sub)
        if v.is_weakly_primal:
            continue
        assert v.gw_ideal_violation is not None
        facts = [
            f_ann_module_equals(ann.members),
            f_gw_ideal_equals(ideal.members, gw_p),
            f_set_ideal(set(gw_p) | {inst.ring.zero}),
            f_ideal_times_equals(ideal.members, range(inst.module.order), pm_sub.members),
            f_gw_equals(pm_sub, v),
            f_set_not_ideal(set(v.gw) | {inst.ring.zero}, v.gw_ideal_violation),
        ]
        return [
            _result(cid, inst, REFUTED, certificate=_cert(inst, facts), ideal=_mem(ideal.members))
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal ideal contains the annihilator")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("thm5")
def eval_thm5(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm5"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="factorization is checked on finite instances")]
    if not is_faithful(inst.module):
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not faithful")]
    mult, _ = is_multiplication(inst.module, max_order=ctx.budget.max_order)
    if not mult:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not a multiplication module")]
    max_len = ctx.budget.factor_length
    ring_ok, _ = is_wp_ring(inst.ring, max_len, max_order=ctx.budget.max_order)
    if not ring_ok:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="not a WP-ring at the length bound")]
    module_ok, outcomes = is_wp_module(inst.module, max_len, max_order=ctx.budget.max_order)
    if module_ok:
        return [_result(cid, inst, CONFIRMED, checked=len(outcomes))]
    missing = sorted(k for k, v in outcomes.items() if v is None)[0]
    pool = weakly_primal_ideals(inst.ring, max_order=ctx.budget.max_order)
    tails = [
        s.members for s in enumerate_graded_submodules(inst.module, max_order=ctx.budget.max_order)
        if ctx.verdict(inst, s).is_weakly_primal
    ]
    facts = [
        f_ann_module_equals(frozenset({inst.ring.zero})),
        _f(
            "no_factorization",
            sub=_mem(missing),
            max_len=max_len,
            pool=[_mem(p.members) for p in pool],
            tails=[_mem(t) for t in tails],
        ),
    ]
    return [
        _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_mem(missing))
    ]


@_guarded("prop3.1")
def eval_prop3_1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "prop3.1"
    if inst.is_symbolic:
        z = inst.zinstance
        if z.kind != "z_int":
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not faithful")]
        v = ctx.zverdict(inst)
        if not v.is_weakly_primal:
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="submodule is not weakly primal")]
        colon = colon_classes_z(z)
        bad = sorted(colon - set(v.gw))
        if not bad:
            return [_result(cid, inst, CONFIRMED, checked=1)]
        rep = class_rep(z, bad[0])
        facts = z_facts_gw(v) + [
            z_fact_set_ideal(v.gw),
            zf("z_colon_classes_equal", classes=_mem(colon)),
            zf("z_gwp", x=rep),
        ]
        return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
    if not is_faithful(inst.module):
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not faithful")]
    hits = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        if not v.is_weakly_primal or v.adjoint is None:
            continue
        hits += 1
        colon = colon_into_ring(sub)
        bad = sorted(colon.members - v.adjoint.members)
        if not bad:
            continue
        x = bad[0]
        facts = [
            f_ann_module_equals(frozenset({inst.ring.zero})),
            f_gw_equals(sub, v),
            f_set_ideal(v.adjoint.members),
            f_colon_equals(sub, None, colon),
            f_not_member(v.adjoint.members, x),
        ]
        if x in inst.ring.hom and x != inst.ring.zero:
            facts.append(f_gwp(sub, x))
        return [
            _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal submodule")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("prop3.2")
def eval_prop3_2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "prop3.2"
    if inst.is_symbolic:
        z = inst.zinstance
        if z.kind != "z_int":
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not faithful")]
        v = ctx.zverdict(inst)
        if not (v.is_weakly_primal and not v.gw):
            return [_result(cid, inst, HYPOTHESIS_UNMET, reason="adjoint is not the zero ideal")]
        if z.m == 1:
            facts = [zf("z_annihilates_quotient", r=1)]
            return [_result(cid, inst, REFUTED, certificate=_cert(inst, facts))]
        # m >= 2 implies GW(mZ) is nonempty, so this branch is unreachable in
        # the default suite; record the faithful conclusion explicitly.
        return [_result(cid, inst, CONFIRMED, checked=1)]
    if not is_faithful(inst.module):
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="module is not faithful")]
    zero_ideal = frozenset({inst.ring.zero})
    hits = 0
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        if not (v.is_weakly_primal and v.adjoint is not None and v.adjoint.members == zero_ideal):
            continue
        hits += 1
        # (0 :_R M/N) equals (N :_R M), so the quotient is faithful iff the
        # colon collapses to zero.
        colon = colon_into_ring(sub)
        if colon.members == zero_ideal:
            continue
        r = sorted(colon.members - zero_ideal)[0]
        facts = [
            f_ann_module_equals(zero_ideal),
            f_gw_equals(sub, v),
            f_set_ideal(zero_ideal),
            _f("annihilates_quotient", sub=_mem(sub.members), r=r),
        ]
        return [
            _result(cid, inst, REFUTED, certificate=_cert(inst, facts), submodule=_sub_name(sub))
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no 0-weakly-primal submodule")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


# ---------------------------------------------------------------------------
# localization claims
# ---------------------------------------------------------------------------


def _loc_pairs(ctx: ClaimContext, inst: Instance):
    """(submodule, verdict, s-set) combinations with N weakly primal and GW(N)
    disjoint from S, the shared hypothesis of the localization statements."""
    if inst.is_symbolic:
        return
    for sub in inst.submodules:
        v = ctx.verdict(inst, sub)
        if not v.is_weakly_primal or v.adjoint is None:
            continue
        for sset in inst.s_sets:
            if set(v.gw) & sset.members:
                continue
            yield sub, v, sset


def _hyp_facts(sub: GradedSubmodule, v: PrimalityVerdict, sset: MultiplicativeSet, ring) -> list[dict]:
    facts = [f_gw_equals(sub, v), f_set_ideal(set(v.gw) | {ring.zero})]
    facts.extend(f_gwp(sub, s) for s in sorted(sset.members))
    return facts


@_guarded("thm6.1")
def eval_thm6_1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm6.1"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="localization runs on finite instances")]
    hits = 0
    for sub, v, sset in _loc_pairs(ctx, inst):
        hits += 1
        loc = ctx.localization(inst, sset)
        n_s = ctx.extension(inst, sset, sub)
        zero_cls = loc.module.zero
        for n in range(inst.module.order):
            if n in sub.members:
                continue
            for s in sorted(sset.members):
                c = loc.class_of(n, s)
                if c in n_s.members and c != zero_cls:
                    facts = _hyp_facts(sub, v, sset, inst.ring) + [
                        f_loc("loc_in_sub_extension", sset, sub=_mem(sub.members), pair=[n, s]),
                        f_loc("loc_nonzero", sset, space="module", pair=[n, s]),
                        f_not_member(sub.members, n),
                    ]
                    return [
                        _result(
                            cid, inst, REFUTED,
                            certificate=_cert(inst, facts),
                            submodule=_sub_name(sub),
                            s_set=_mem(sset.members),
                            fraction=[n, s],
                        )
                    ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal N with GW(N) disjoint from an S")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("thm6.2")
def eval_thm6_2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm6.2"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="localization runs on finite instances")]
    hits = 0
    for sub, v, sset in _loc_pairs(ctx, inst):
        loc = ctx.localization(inst, sset)
        for target in inst.submodules:
            hits += 1
            equal, left, right = localized_colon_agrees(loc, sub, target)
            if equal:
                continue
            colon = colon_into_ring(sub, target)
            diff_l = sorted(left - right)
            diff_r = sorted(right - left)
            facts = _hyp_facts(sub, v, sset, inst.ring)
            facts.append(f_colon_equals(sub, target, colon))
            if diff_l:
                c = diff_l[0]
                pair = list(loc.ring_loc.reps[c])
                facts.append(f_loc("loc_in_ideal_extension", sset, ideal=_mem(colon.members), pair=pair))
                facts.append(
                    f_loc(
                        "loc_not_colon_member", sset,
                        sub=_mem(sub.members), target=_mem(target.members), pair=pair,
                    )
                )
            else:
                c = diff_r[0]
                pair = list(loc.ring_loc.reps[c])
                facts.append(f_loc("loc_not_in_ideal_extension", sset, ideal=_mem(colon.members), pair=pair))
                facts.append(
                    f_loc(
                        "loc_colon_member", sset,
                        sub=_mem(sub.members), target=_mem(target.members), pair=pair,
                    )
                )
            return [
                _result(
                    cid, inst, REFUTED,
                    certificate=_cert(inst, facts),
                    submodule=_sub_name(sub),
                    target=_sub_name(target),
                    s_set=_mem(sset.members),
                )
            ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal N with GW(N) disjoint from an S")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


def _mod_pairs(loc: LocalizedModule, members) -> list[list[int]]:
    """Denote a set of module-fraction classes by one representative pair each."""
    return [list(loc.reps[c]) for c in sorted(members)]


def _ring_pairs(loc: LocalizedModule, members) -> list[list[int]]:
    return [list(loc.ring_loc.reps[c]) for c in sorted(members)]


def _loc_violation_payload(loc: LocalizedModule, violation: Violation) -> list:
    reps = loc.ring_loc.reps
    if violation.code == "not_add_closed":
        a, b, _ = violation.witness
        return ["add", list(reps[a]), list(reps[b])]
    if violation.code == "not_absorbing":
        r, x, _ = violation.witness
        return ["mul", list(reps[r]), list(reps[x])]
    if violation.code == "not_graded":
        x, g, _ = violation.witness
        return ["decomp", list(reps[x]), list(g)]
    return ["zero"]


def _loc_weakly_primal_facts(
    loc: LocalizedModule, sset: MultiplicativeSet, sub: GradedSubmodule, v: PrimalityVerdict
) -> list[dict]:
    """Facts pinning down GW of a localized submodule and its ideal status."""
    ring_zero = loc.ring_loc.ring.zero
    facts = [
        f_loc("loc_is_submodule", sset, class_pairs=_mod_pairs(loc, sub.members)),
        f_loc(
            "loc_gw_equals", sset,
            class_pairs=_mod_pairs(loc, sub.members),
            gw_class_pairs=_ring_pairs(loc, frozenset(v.gw)),
        ),
    ]
    adjoint_classes = frozenset(v.gw) | {ring_zero}
    if v.is_weakly_primal:
        facts.append(
            f_loc("loc_set_is_graded_ideal", sset, class_pairs=_ring_pairs(loc, adjoint_classes))
        )
    elif v.gw_ideal_violation is not None:
        facts.append(
            f_loc(
                "loc_set_not_graded_ideal", sset,
                class_pairs=_ring_pairs(loc, adjoint_classes),
                violation=_loc_violation_payload(loc, v.gw_ideal_violation),
            )
        )
    return facts


@_guarded("prop4")
def eval_prop4(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "prop4"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="localization runs on finite instances")]
    hits = 0
    for sset in inst.s_sets:
        loc = ctx.localization(inst, sset)
        for sub_s in ctx.loc_submodules(inst, sset):
            v_s = ctx.loc_verdict(inst, sset, sub_s)
            if not v_s.is_weakly_primal or v_s.adjoint is None:
                continue
            hits += 1
            contracted = contract_submodule(loc, sub_s)
            p_contracted = contract_ideal(loc.ring_loc, v_s.adjoint)
            v_c = ctx.verdict(inst, contracted)
            ok = (
                v_c.is_weakly_primal
                and v_c.adjoint is not None
                and v_c.adjoint.members == p_contracted.members
            )
            if ok:
                continue
            facts = _loc_weakly_primal_facts(loc, sset, sub_s, v_s) + [
                f_loc("loc_contract_equals", sset,
                      class_pairs=_mod_pairs(loc, sub_s.members),
                      members=_mem(contracted.members)),
                f_loc("loc_ideal_contract_equals", sset,
                      class_pairs=_ring_pairs(loc, v_s.adjoint.members),
                      members=_mem(p_contracted.members)),
                f_gw_equals(contracted, v_c),
            ]
            if not v_c.is_weakly_primal and v_c.gw_ideal_violation is not None:
                facts.append(
                    f_set_not_ideal(set(v_c.gw) | {inst.ring.zero}, v_c.gw_ideal_violation)
                )
            else:
                facts.append(f_set_ideal(set(v_c.gw) | {inst.ring.zero}))
                facts.append(
                    _f(
                        "sets_differ",
                        left=_mem(set(v_c.gw) | {inst.ring.zero}),
                        right=_mem(p_contracted.members),
                    )
                )
            return [
                _result(
                    cid, inst, REFUTED,
                    certificate=_cert(inst, facts),
                    s_set=_mem(sset.members),
                    localized_submodule=_mem(sub_s.members),
                )
            ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal submodule of a localization")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("thm7.1")
def eval_thm7_1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm7.1"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="localization runs on finite instances")]
    hits = 0
    for sub, v, sset in _loc_pairs(ctx, inst):
        hits += 1
        loc = ctx.localization(inst, sset)
        n_s = ctx.extension(inst, sset, sub)
        assert v.adjoint is not None
        p_s = extend_ideal(loc.ring_loc, v.adjoint)
        v_s = ctx.loc_verdict(inst, sset, n_s)
        ok = (
            v_s.is_weakly_primal
            and v_s.adjoint is not None
            and v_s.adjoint.members == p_s.members
        )
        if ok:
            continue
        facts = (
            _hyp_facts(sub, v, sset, inst.ring)
            + [f_loc("loc_extension_equals", sset, sub=_mem(sub.members),
                     class_pairs=_mod_pairs(loc, n_s.members))]
            + _loc_weakly_primal_facts(loc, sset, n_s, v_s)
        )
        if v_s.is_weakly_primal and v_s.adjoint is not None:
            facts.append(
                f_loc("loc_ideal_extension_equals", sset, ideal=_mem(v.adjoint.members),
                      class_pairs=_ring_pairs(loc, p_s.members))
            )
            facts.append(
                _f(
                    "sets_differ",
                    left=[list(p) for p in sorted(tuple(x) for x in _ring_pairs(loc, v_s.adjoint.members))],
                    right=[list(p) for p in sorted(tuple(x) for x in _ring_pairs(loc, p_s.members))],
                )
            )
        return [
            _result(
                cid, inst, REFUTED,
                certificate=_cert(inst, facts),
                submodule=_sub_name(sub),
                s_set=_mem(sset.members),
                localized_weakly_primal=v_s.is_weakly_primal,
            )
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal N with adjoint disjoint from an S")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("thm7.2")
def eval_thm7_2(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm7.2"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="localization runs on finite instances")]
    hits = 0
    for sub, v, sset in _loc_pairs(ctx, inst):
        hits += 1
        loc = ctx.localization(inst, sset)
        n_s = ctx.extension(inst, sset, sub)
        contracted = contract_submodule(loc, n_s)
        if contracted.members == sub.members:
            continue
        extra = sorted(contracted.members - sub.members)[0]
        facts = _hyp_facts(sub, v, sset, inst.ring) + [
            f_loc("loc_in_sub_extension", sset, sub=_mem(sub.members), pair=[extra, inst.ring.one]),
            f_not_member(sub.members, extra),
        ]
        return [
            _result(
                cid, inst, REFUTED,
                certificate=_cert(inst, facts),
                submodule=_sub_name(sub),
                s_set=_mem(sset.members),
                witness=extra,
            )
        ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly primal N with adjoint disjoint from an S")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


@_guarded("thm8")
def eval_thm8(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "thm8"
    if inst.is_symbolic:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="localization runs on finite instances")]
    hits = 0
    for sset in inst.s_sets:
        for ideal in inst.ideals:
            if not ideal.is_proper() or ideal.members & sset.members:
                continue
            prime_ok, _ = is_graded_weakly_prime_ideal(ideal)
            if not prime_ok:
                continue
            hits += 1
            loc = ctx.localization(inst, sset)
            ok, _pairing, problem = correspondence_check(
                loc,
                ideal,
                base_submodules=inst.submodules,
                base_verdict=lambda sub: ctx.verdict(inst, sub),
                loc_submodules=ctx.loc_submodules(inst, sset),
                loc_verdict=lambda sub_s: ctx.loc_verdict(inst, sset, sub_s),
                max_order=ctx.budget.max_order,
            )
            if ok:
                continue
            assert problem is not None
            kind, left, right = problem
            facts: list[dict] = [
                f_set_ideal(ideal.members),
                _f("weakly_prime_ideal_holds", members=_mem(ideal.members)),
            ]
            if kind == "extension_leaves_family":
                n_s = GradedSubmodule(loc.module, right)
                v_s = ctx.loc_verdict(inst, sset, n_s)
                facts.append(
                    f_loc("loc_extension_equals", sset, sub=_mem(left),
                          class_pairs=_mod_pairs(loc, right))
                )
                facts.extend(_loc_weakly_primal_facts(loc, sset, n_s, v_s))
            elif kind == "not_inverse_on_base":
                contracted = contract_submodule(loc, GradedSubmodule(loc.module, right))
                facts.extend([
                    f_loc("loc_extension_equals", sset, sub=_mem(left),
                          class_pairs=_mod_pairs(loc, right)),
                    f_loc("loc_contract_equals", sset, class_pairs=_mod_pairs(loc, right),
                          members=_mem(contracted.members)),
                    _f("sets_differ", left=_mem(contracted.members), right=_mem(left)),
                ])
            elif kind == "contraction_leaves_family":
                v_c = ctx.verdict(inst, GradedSubmodule(inst.module, right))
                facts.extend([
                    f_loc("loc_contract_equals", sset, class_pairs=_mod_pairs(loc, left),
                          members=_mem(right)),
                    f_gw_equals(GradedSubmodule(inst.module, right), v_c),
                ])
                if not v_c.is_weakly_primal and v_c.gw_ideal_violation is not None:
                    facts.append(
                        f_set_not_ideal(set(v_c.gw) | {inst.ring.zero}, v_c.gw_ideal_violation)
                    )
                else:
                    facts.append(
                        _f("sets_differ",
                           left=_mem(set(v_c.gw) | {inst.ring.zero}),
                           right=_mem(ideal.members))
                    )
            else:  # not_inverse_on_localization
                ext = ctx.extension(inst, sset, GradedSubmodule(inst.module, right))
                facts.extend([
                    f_loc("loc_contract_equals", sset, class_pairs=_mod_pairs(loc, left),
                          members=_mem(right)),
                    f_loc("loc_extension_equals", sset, sub=_mem(right),
                          class_pairs=_mod_pairs(loc, ext.members)),
                    _f("sets_differ", left=_mem(ext.members), right=_mem(left)),
                ])
            return [
                _result(
                    cid, inst, REFUTED,
                    certificate=_cert(inst, facts),
                    s_set=_mem(sset.members),
                    ideal=_mem(ideal.members),
                    problem=kind,
                )
            ]
    if hits == 0:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="no weakly prime ideal disjoint from an S")]
    return [_result(cid, inst, CONFIRMED, checked=hits)]


# ---------------------------------------------------------------------------
# the worked-example bundle
# ---------------------------------------------------------------------------

# Each part records the stated facts about one catalog example; the harness
# recomputes every fact on the integer backend and reports stated-vs-computed
# side by side, certifying the computed value.
EXAMPLE_PARTS: list[dict] = [
    {
        "part": "exm1.1",
        "descriptor": {"kind": "z_int", "m": 12},
        "claims": [
            ("in_gw", 3, True),
            ("gw_is_everything", None, True),
            ("weakly_primal", None, True),
            ("primal", None, False),
        ],
    },
    {
        "part": "exm1.2",
        "descriptor": {"kind": "z_mod", "n": 24, "d": 8},
        "claims": [
            ("primal", None, True),
            ("in_gw", 2, True),
            ("in_gw", 4, True),
            ("in_gw", 6, False),
            ("weakly_primal", None, False),
        ],
    },
    {
        "part": "exm1.3",
        "descriptor": {"kind": "z_mod", "n": 12, "d": 12},
        "claims": [
            ("gw_empty", None, True),
            ("weakly_primal", None, True),
            ("in_g", 3, True),
            ("in_g", 4, True),
            ("in_g", 1, False),
            ("primal", None, False),
        ],
    },
    {
        "part": "exm1.4",
        "descriptor": {"kind": "z_mod", "n": 32, "d": 8},
        "claims": [
            ("in_g", 4, True),
            ("in_gw", 4, False),
        ],
    },
]


def _example_fact(z: ZInstance, v: ZVerdict, name: str, arg) -> tuple[bool, list[dict]]:
    """Compute one stated fact on the integer backend, with certificate facts."""
    q = z.modulus
    if name == "in_gw":
        ok, wit = is_gwp_z(z, arg)
        if not ok:
            assert wit is not None
            return True, [zf("z_ngwp", x=wit[0], m=wit[1])]
        return False, [zf("z_gwp", x=arg)]
    if name == "in_g":
        ok, wit = is_gp_z(z, arg)
        if not ok:
            assert wit is not None
            return True, [zf("z_not_prime", x=wit[0], m=wit[1])]
        return False, [zf("z_prime", x=arg)]
    if name == "gw_is_everything":
        missing = sorted(set(range(q)) - set(v.gw))
        if not missing:
            return True, [zf("z_gw_classes_equal", classes=_mem(v.gw))]
        rep = class_rep(z, missing[0]) if missing[0] == 0 else missing[0]
        return False, [zf("z_gwp", x=rep)]
    if name == "gw_empty":
        if not v.gw:
            return True, [zf("z_gw_classes_equal", classes=[])]
        c = sorted(v.gw)[0]
        return False, [zf("z_ngwp", x=v.gw[c][0], m=v.gw[c][1])]
    if name == "weakly_primal":
        facts = z_facts_gw(v)
        if v.is_weakly_primal:
            facts.append(z_fact_set_ideal(v.gw))
        else:
            facts.append(z_fact_set_not_ideal(v.gw, v.weakly_primal_violation))
        return v.is_weakly_primal, facts
    if name == "primal":
        facts = z_facts_g(v)
        if v.is_primal:
            facts.append(z_fact_set_ideal(v.g))
        else:
            facts.append(z_fact_set_not_ideal(v.g, v.primal_violation))
        return v.is_primal, facts
    raise ValueError(f"unknown example fact {name!r}")


def fact_label(name: str, arg) -> str:
    labels = {
        "in_gw": f"{arg} is not weakly prime to N",
        "in_g": f"{arg} is not prime to N",
        "gw_is_everything": "GW(N) is the whole ring",
        "gw_empty": "GW(N) is empty",
        "weakly_primal": "N is weakly primal",
        "primal": "N is primal",
    }
    return labels[name]


@_guarded("exm1")
def eval_exm1(ctx: ClaimContext, inst: Instance) -> list[ClaimResult]:
    cid = "exm1"
    results = []
    for spec in EXAMPLE_PARTS:
        if inst.descriptor != spec["descriptor"]:
            continue
        z = inst.zinstance
        assert z is not None
        v = ctx.zverdict(inst)
        comparisons = []
        facts: list[dict] = []
        agree = True
        for name, arg, stated in spec["claims"]:
            computed, fact_list = _example_fact(z, v, name, arg)
            comparisons.append(
                {
                    "fact": fact_label(name, arg),
                    "stated": stated,
                    "computed": computed,
                    "agrees": stated == computed,
                }
            )
            facts.extend(fact_list)
            if stated != computed:
                agree = False
        status = CONFIRMED if agree else REFUTED
        results.append(
            _result(
                cid, inst, status,
                part=spec["part"],
                certificate=_cert(inst, facts),
                comparisons=comparisons,
            )
        )
    if not results:
        return [_result(cid, inst, HYPOTHESIS_UNMET, reason="not a designated example instance")]
    return results


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------


def registry() -> list[ClaimSpec]:
    """All checked statements, in catalog order; ids are stable identifiers."""
    return [
        ClaimSpec("lem1", "Lemma 1",
                  "a graded primal submodule is graded weakly primal", eval_lem1),
        ClaimSpec("rem1.1", "Remark 1(1)",
                  "the zero scalar is weakly prime to every graded submodule", eval_rem1_1),
        ClaimSpec("rem1.2", "Remark 1(2)",
                  "a scalar graded prime to N is graded weakly prime to N", eval_rem1_2),
        ClaimSpec("rem1.3", "Remark 1(3)",
                  "W(N) is contained in GW(N)", eval_rem1_3),
        ClaimSpec("lem2.1", "Lemma 2(1)",
                  "homogeneous members of (N : M) lie in GW(N) plus zero", eval_lem2_1),
        ClaimSpec("lem2.2", "Lemma 2(2)",
                  "gw((N : M)) is contained in GW(N)", eval_lem2_2),
        ClaimSpec("prop1", "Proposition 1",
                  "N is P-weakly primal iff the colon characterization holds for P", eval_prop1),
        ClaimSpec("thm1", "Theorem 1",
                  "for cyclic M and weakly primal N, (N : M) is weakly primal with gw((N : M)) = GW(N)",
                  eval_thm1),
        ClaimSpec("thm2", "Theorem 2",
                  "the adjoint of a weakly primal submodule is a graded weakly prime ideal", eval_thm2),
        ClaimSpec("thm3", "Theorem 3",
                  "weakly primal with (N : M) inside the adjoint and N(N : M) nonzero implies primal",
                  eval_thm3),
        ClaimSpec("thm4.1", "Theorem 4(1)",
                  "a graded weakly primary submodule is graded weakly primal", eval_thm4_1),
        ClaimSpec("thm4.2", "Theorem 4(2)",
                  "a graded weakly prime submodule is graded weakly primal", eval_thm4_2),
        ClaimSpec("rem2", "Remark 2",
                  "for f.g. multiplication M and P containing Ann(M), (PM : M) = P", eval_rem2),
        ClaimSpec("prop2", "Proposition 2",
                  "PM is weakly primal for weakly primal P containing Ann(M)", eval_prop2),
        ClaimSpec("thm5", "Theorem 5",
                  "a faithful f.g. multiplication module over a WP-ring is a WP-module", eval_thm5),
        ClaimSpec("prop3.1", "Proposition 3(1)",
                  "for faithful M, (N : M) lies in the adjoint of N", eval_prop3_1),
        ClaimSpec("prop3.2", "Proposition 3(2)",
                  "for faithful M and 0-weakly primal N, M/N is faithful", eval_prop3_2),
        ClaimSpec("thm6.1", "Theorem 6(1)",
                  "nonzero fractions of N_S have numerators in N when GW(N) misses S", eval_thm6_1),
        ClaimSpec("thm6.2", "Theorem 6(2)",
                  "(N : L)_S = (N_S : L_S) when GW(N) misses S", eval_thm6_2),
        ClaimSpec("prop4", "Proposition 4",
                  "contraction of a P-weakly primal submodule of M_S is (P cap R)-weakly primal",
                  eval_prop4),
        ClaimSpec("thm7.1", "Theorem 7(1)",
                  "N_S is P_S-weakly primal when the adjoint P misses S", eval_thm7_1),
        ClaimSpec("thm7.2", "Theorem 7(2)",
                  "N = N_S cap M when the adjoint P misses S", eval_thm7_2),
        ClaimSpec("thm8", "Theorem 8",
                  "extension and contraction pair the P- and P_S-weakly primal submodules bijectively",
                  eval_thm8),
        ClaimSpec("exm1", "Example 1(1)-(4)",
                  "the four worked examples reproduce as stated", eval_exm1),
    ]


def claims_by_id(selector: Optional[str] = None) -> list[ClaimSpec]:
    """Registry entries matching a claim id; 'exm1.3' selects the bundle."""
    specs = registry()
    if selector is None:
        return specs
    chosen = [
        s for s in specs
        if s.claim_id == selector or selector.startswith(s.claim_id + ".")
    ]
    if not chosen:
        known = ", ".join(s.claim_id for s in specs)
        raise ValueError(f"unknown claim id {selector!r}; known ids: {known}")
    return chosen


def run_claims(
    specs: list[ClaimSpec],
    instances: list[Instance],
    budget: Budget,
    part_filter: Optional[str] = None,
) -> list[ClaimResult]:
    """Evaluate every (claim, instance) pair, in deterministic order."""
    ctx = ClaimContext(budget)
    results: list[ClaimResult] = []
    for spec in specs:
        for inst in instances:
            for res in spec.evaluate(ctx, inst):
                if part_filter and res.part and res.part != part_filter:
                    continue
                results.append(res)
    return results
