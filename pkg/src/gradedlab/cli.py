"""Command-line interface.

Subcommands: ``validate``, ``classify``, ``claims run``, ``examples
reproduce``, ``localize``.  Exit codes: 0 the command ran (refuted claims
are findings, not failures), 1 input or validation error, 2 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .claims import EXAMPLE_PARTS, claims_by_id, registry, run_claims
from .instances import (
    Budget,
    build_instance,
    enumerate_instances,
    load_structure_file,
    parse_selector,
)
from .localization import LocalizationInvariantError, localize_module, localize_ring
from .primality import classify
from .report import build_report, report_text, write_report
from .rings import ValidationError, validate_multiplicative_set
from .verifycert import verify_certificate

BUDGET_ENV = "GRADED_LAB_BUDGET"


def _load_budget(path: str | None) -> Budget:
    if path is None:
        path = os.environ.get(BUDGET_ENV)
    if path is None:
        return Budget()
    return Budget.from_file(path)


def _fmt_members(module_or_ring, members) -> str:
    return "{" + ", ".join(module_or_ring.label(m) for m in sorted(members)) + "}"


def cmd_validate(args: argparse.Namespace) -> int:
    inst = load_structure_file(args.file)
    ring, module = inst.ring, inst.module
    print(f"ok: ring {ring.name} of order {ring.order}, module {module.name} of order {module.order}")
    print(f"  grading group: {ring.group!r}")
    print(f"  homogeneous ring elements: {_fmt_members(ring, ring.hom)}")
    for warning in ring.warnings:
        print(f"  warning: {warning}")
    for sub in inst.submodules:
        print(f"  submodule {_fmt_members(module, sub.members)}")
    for sset in inst.s_sets:
        print(f"  multiplicative set {_fmt_members(ring, sset.members)}")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    inst = load_structure_file(args.file)
    sub = parse_selector(inst.module, args.submodule)
    verdict = classify(sub)
    module = inst.module
    ring = inst.ring
    print(f"submodule N = {_fmt_members(module, sub.members)} of {module.name}")
    print(f"  GW(N) = {_fmt_members(ring, verdict.gw)}")
    print(f"  G(N)  = {_fmt_members(ring, verdict.g)}")
    print(f"  W(N)  = {_fmt_members(ring, verdict.w)}")
    print(f"  weakly primal:  {verdict.is_weakly_primal}")
    if verdict.adjoint is not None:
        print(f"  adjoint ideal:  {_fmt_members(ring, verdict.adjoint.members)}")
    elif verdict.gw_ideal_violation is not None:
        print(f"  adjoint ideal:  none ({verdict.gw_ideal_violation.message})")
    print(f"  primal:         {verdict.is_primal}")
    print(f"  weakly prime:   {verdict.is_weakly_prime}")
    print(f"  weakly primary: {verdict.is_weakly_primary}")
    for x in sorted(verdict.gw):
        w = verdict.gw[x]
        print(f"    witness: {ring.label(x)} * {module.label(w.m)} lands in N away from zero")
    return 0


def cmd_claims_run(args: argparse.Namespace) -> int:
    budget = _load_budget(args.budget)
    specs = claims_by_id(args.claim) if args.claim else registry()
    part = None
    if args.claim and any("." in args.claim and s.claim_id != args.claim for s in specs):
        part = args.claim
    instances = enumerate_instances(budget)
    results = run_claims(specs, instances, budget, part_filter=part)
    report = build_report(specs, results, budget, len(instances))
    bad_certs = sum(
        1 for d in report.discrepancies if d["certificate"] and not verify_certificate(d["certificate"])
    )
    if args.out:
        paths = write_report(report, args.out)
        print(report_text(report))
        print(f"report written to {paths['json'].parent}")
    else:
        print(report_text(report))
    if bad_certs:
        print(f"INTERNAL ERROR: {bad_certs} certificate(s) failed independent verification")
        return 2
    return 0


def cmd_examples_reproduce(args: argparse.Namespace) -> int:
    budget = Budget()
    specs = claims_by_id("exm1")
    instances = [build_instance(spec["descriptor"]) for spec in EXAMPLE_PARTS]
    results = run_claims(specs, instances, budget)
    results = [r for r in results if r.part]
    failures = 0
    for res in sorted(results, key=lambda r: r.part):
        banner = "Confirmed" if res.status == "Confirmed" else "Discrepancy"
        print(f"{res.part} on {res.instance}: {banner}")
        for cmp in res.details.get("comparisons", []):
            marker = "agrees " if cmp["agrees"] else "DIFFERS"
            print(
                f"  [{marker}] {cmp['fact']}: stated {cmp['stated']}, computed {cmp['computed']}"
            )
        if res.certificate is not None:
            ok = verify_certificate(res.certificate)
            print(f"  certificate independently verified: {ok}")
            if not ok:
                failures += 1
        print()
    return 2 if failures else 0


def cmd_localize(args: argparse.Namespace) -> int:
    inst = load_structure_file(args.file)
    members = [int(v) for v in args.s.split(",") if v.strip() != ""]
    sset = validate_multiplicative_set(inst.ring, members)
    ring_loc = localize_ring(inst.ring, sset)
    mod_loc = localize_module(inst.module, sset, ring_loc)
    ring = ring_loc.ring
    print(f"R_S has order {ring.order} at S = {_fmt_members(inst.ring, sset.members)}")
    for cid in range(ring.order):
        pairs = ", ".join(f"{inst.ring.label(r)}/{inst.ring.label(s)}"
                          for r, s in ring_loc.class_pairs[cid][:6])
        more = "" if len(ring_loc.class_pairs[cid]) <= 6 else ", ..."
        print(f"  class {ring.label(cid)} = [{pairs}{more}]")
    print("canonical map on ring elements:")
    for r in range(inst.ring.order):
        print(f"  {inst.ring.label(r)} -> {ring.label(ring_loc.phi[r])}")
    print(f"M_S has order {mod_loc.module.order}")
    print("canonical map on module elements:")
    for m in range(inst.module.order):
        print(f"  {inst.module.label(m)} -> {mod_loc.module.label(mod_loc.phi[m])}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedlab",
        description="exact computation with graded rings, modules, and weakly primal submodules",
    )
    parser.add_argument("--version", action="version", version=f"gradedlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a structure file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", help="classify a submodule of a structure file")
    p.add_argument("file")
    p.add_argument("--submodule", required=True, help="selector, e.g. 'gen:8' or 'members:0,8,16'")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("claims", help="claims verification")
    claims_sub = p.add_subparsers(dest="claims_command", required=True)
    pr = claims_sub.add_parser("run", help="run the claims registry over the instance suite")
    pr.add_argument("--budget", help=f"budget JSON file (or ${BUDGET_ENV})")
    pr.add_argument("--claim", help="run a single claim id, e.g. thm7.2 or exm1.3")
    pr.add_argument("--out", help="directory for report.json, report.txt, results.csv, figures/")
    pr.set_defaults(fn=cmd_claims_run)

    p = sub.add_parser("examples", help="the four worked examples")
    ex_sub = p.add_subparsers(dest="examples_command", required=True)
    pe = ex_sub.add_parser("reproduce", help="print stated vs computed verdicts side by side")
    pe.set_defaults(fn=cmd_examples_reproduce)

    p = sub.add_parser("localize", help="print R_S, M_S, and the canonical maps")
    p.add_argument("file")
    p.add_argument("--s", required=True, help="comma-separated members of S, e.g. 1,3,9")
    p.set_defaults(fn=cmd_localize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValidationError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (LocalizationInvariantError, AssertionError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
