"""Instance descriptors, the default instance suite, and structure-file parsing.

A descriptor is a small JSON-able dict that reconstructs its instance
deterministically; the same descriptor always yields identical validated
structures, which is what makes certificates re-checkable later.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional

from .modules import (
    GradedModule,
    GradedSubmodule,
    enumerate_graded_submodules,
    make_product_module,
    make_zero_module,
    make_zn_module,
    ring_as_module,
    submodule_generated_by,
    validate_module,
)
from .rings import (
    GradedIdeal,
    GradedRing,
    GradingGroup,
    MultiplicativeSet,
    enumerate_graded_ideals,
    enumerate_multiplicative_sets,
    make_quadratic,
    make_zn,
    validate_multiplicative_set,
    validate_ring,
)
from .zbackend import ZInstance, surrogate


@dataclass(frozen=True)
class Budget:
    """Knobs for the default instance suite and the enumeration bounds."""

    max_zn: int = 24
    max_quadratic_n: int = 5
    include_products: bool = True
    max_order: int = 64
    z_int_max: int = 16
    z_mod_max: int = 32
    factor_length: int = 4

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_json(cls, data: dict) -> "Budget":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown budget fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: str | Path) -> "Budget":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


@dataclass
class Instance:
    """A validated structure bundle: ring, module, and its selected substructures."""

    descriptor: dict
    key: str
    ring: GradedRing
    module: GradedModule
    submodules: list[GradedSubmodule]
    ideals: list[GradedIdeal]
    s_sets: list[MultiplicativeSet]
    zinstance: Optional[ZInstance] = None

    @property
    def is_symbolic(self) -> bool:
        return self.zinstance is not None


def descriptor_key(desc: dict) -> str:
    kind = desc["kind"]
    if kind == "zn":
        return f"zn({desc['n']})"
    if kind == "quadratic":
        return f"quadratic({desc['n']},{desc['a']})"
    if kind == "product":
        return f"product(zn({desc['n']}),{desc['copies']})"
    if kind == "z_int":
        return f"z_int({desc['m']})"
    if kind == "z_mod":
        return f"z_mod({desc['n']},{desc['d']})"
    if kind == "tables":
        return desc.get("name", "tables")
    raise ValueError(f"unknown descriptor kind {kind!r}")


def _grading_from_json(data: Optional[dict], order: int) -> tuple[GradingGroup, dict]:
    if not data:
        return GradingGroup(()), {(): frozenset(range(order))}
    group = GradingGroup(tuple(data.get("group", ())))
    raw = data.get("components")
    if raw is None:
        components = {group.identity: frozenset(range(order))}
    else:
        components = {tuple(deg): frozenset(members) for deg, members in raw}
    return group, components


def ring_from_descriptor(desc: dict) -> GradedRing:
    kind = desc["kind"].lower()
    if kind == "zn":
        return make_zn(int(desc["n"]))
    if kind == "quadratic":
        return make_quadratic(int(desc["n"]), int(desc["a"]))
    if kind == "tables":
        order = int(desc["order"])
        group, components = _grading_from_json(desc.get("grading"), order)
        return validate_ring(
            order=order,
            add_table=desc["add"],
            mul_table=desc["mul"],
            zero=int(desc.get("zero", 0)),
            one=int(desc.get("one", 1)),
            group=group,
            components=components,
            labels=desc.get("labels"),
            name=desc.get("name", "ring"),
        )
    raise ValueError(f"unknown ring kind {desc.get('kind')!r}")


def module_from_descriptor(ring: GradedRing, desc: Optional[dict]) -> GradedModule:
    if desc is None or desc.get("kind", "self") == "self":
        return ring_as_module(ring)
    kind = desc["kind"].lower()
    if kind == "zn":
        return make_zn_module(ring, int(desc["n"]))
    if kind == "zero":
        return make_zero_module(ring)
    if kind == "product":
        copies = int(desc.get("copies", 2))
        if copies < 1:
            raise ValueError("product module needs at least one copy")
        module = ring_as_module(ring)
        result = module
        for _ in range(copies - 1):
            result = make_product_module(result, module)
        return result
    if kind == "tables":
        order = int(desc["order"])
        group, components = _grading_from_json(desc.get("grading"), order)
        if group.cyclic_orders != ring.group.cyclic_orders:
            raise ValueError("module grading group must match the ring's")
        return validate_module(
            ring=ring,
            order=order,
            add_table=desc["add"],
            zero=int(desc.get("zero", 0)),
            action=desc["action"],
            components=components,
            labels=desc.get("labels"),
            name=desc.get("name", "module"),
        )
    raise ValueError(f"unknown module kind {desc.get('kind')!r}")


def build_instance(desc: dict, *, max_order: int = 64, enumerate_all: bool = True) -> Instance:
    """Reconstruct the instance named by a descriptor (deterministic)."""
    kind = desc["kind"]
    if kind in ("z_int", "z_mod"):
        if kind == "z_int":
            z = ZInstance("z_int", m=int(desc["m"]))
        else:
            z = ZInstance("z_mod", n=int(desc["n"]), d=int(desc["d"]))
        ring, module, sub = surrogate(z)
        return Instance(
            descriptor=desc,
            key=descriptor_key(desc),
            ring=ring,
            module=module,
            submodules=[sub],
            ideals=[],
            s_sets=[],
            zinstance=z,
        )

    if kind == "product":
        ring = make_zn(int(desc["n"]))
        module = module_from_descriptor(ring, {"kind": "product", "copies": desc["copies"]})
    else:
        ring = ring_from_descriptor(desc)
        module = module_from_descriptor(ring, desc.get("module"))

    submodules: list[GradedSubmodule] = []
    ideals: list[GradedIdeal] = []
    s_sets: list[MultiplicativeSet] = []
    if enumerate_all:
        submodules = enumerate_graded_submodules(module, max_order=max_order)
        ideals = enumerate_graded_ideals(ring, max_order=max_order)
        s_sets = enumerate_multiplicative_sets(ring, max_order=max_order)
    return Instance(
        descriptor=desc,
        key=descriptor_key(desc),
        ring=ring,
        module=module,
        submodules=submodules,
        ideals=ideals,
        s_sets=s_sets,
    )


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _declared_order(desc: dict) -> int:
    kind = desc["kind"]
    if kind == "zn":
        return desc["n"]
    if kind == "quadratic":
        return desc["n"] ** 2
    if kind == "product":
        return desc["n"] ** desc["copies"]
    if kind == "z_int":
        return desc["m"]
    if kind == "z_mod":
        return desc["n"]
    return 0


def default_descriptors(budget: Budget) -> list[dict]:
    """The default suite, in a fixed deterministic order; the enumeration
    bound caps the stream rather than aborting it."""
    descs: list[dict] = []
    for n in range(2, budget.max_zn + 1):
        descs.append({"kind": "zn", "n": n})
    for n in (2, 3, 5):
        if n > budget.max_quadratic_n:
            continue
        for a in sorted({0, 1, n - 1}):
            descs.append({"kind": "quadratic", "n": n, "a": a})
    if budget.include_products:
        descs.append({"kind": "product", "n": 2, "copies": 2})
    for m in range(2, budget.z_int_max + 1):
        descs.append({"kind": "z_int", "m": m})
    for n in range(2, budget.z_mod_max + 1):
        for d in _divisors(n):
            descs.append({"kind": "z_mod", "n": n, "d": d})
    return [d for d in descs if _declared_order(d) <= budget.max_order]


def enumerate_instances(budget: Budget) -> list[Instance]:
    return [build_instance(d, max_order=budget.max_order) for d in default_descriptors(budget)]


# ---------------------------------------------------------------------------
# structure files and selectors
# ---------------------------------------------------------------------------


def parse_selector(module: GradedModule, text: str) -> GradedSubmodule:
    """'gen:8' or 'gen:1,2' generates; 'members:0,8,16' names an explicit set."""
    if ":" not in text:
        raise ValueError(f"bad selector {text!r}; expected 'gen:...' or 'members:...'")
    op, _, payload = text.partition(":")
    values = [int(v) for v in payload.split(",") if v.strip() != ""]
    if any(not 0 <= v < module.order for v in values):
        raise ValueError(f"selector {text!r} names elements outside the module")
    if op == "gen":
        return submodule_generated_by(module, values)
    if op == "members":
        from .modules import as_graded_submodule

        return as_graded_submodule(module, values)
    raise ValueError(f"unknown selector operation {op!r}")


def load_structure_file(path: str | Path) -> Instance:
    """Parse the JSON structure-file format (see the README for the schema)."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if "ring" not in data:
        raise ValueError("structure file must have a 'ring' entry")
    ring = ring_from_descriptor(data["ring"])
    module = module_from_descriptor(ring, data.get("module"))
    submodules = []
    for spec in data.get("submodules", []):
        if "gen" in spec:
            submodules.append(submodule_generated_by(module, spec["gen"]))
        elif "members" in spec:
            from .modules import as_graded_submodule

            submodules.append(as_graded_submodule(module, spec["members"]))
        else:
            raise ValueError(f"bad submodule spec {spec!r}")
    s_sets = [validate_multiplicative_set(ring, s) for s in data.get("s_sets", [])]
    desc = {"kind": "tables", "name": data.get("name", Path(path).stem)}
    return Instance(
        descriptor=desc,
        key=desc["name"],
        ring=ring,
        module=module,
        submodules=submodules,
        ideals=[],
        s_sets=s_sets,
    )
