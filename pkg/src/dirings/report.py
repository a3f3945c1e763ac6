"""Analysis reports: the JSON schema and the human rendering.

Reports reference elements by label only, never by index, so they are
stable under relabeling and identical across runs and job counts.
"""

from __future__ import annotations

import json

from .diring import DiringTable, digroup_check, halo_identities_check, \
    induced_ring_product
from .groups import mask_indices
from .ideals import IdealHandle, enumerate_ideals, quotient_diring, \
    simplicity_class
from .modules import (
    LeftModuleTable,
    enumerate_submodules,
    is_3_irreducible,
    module_halo_identities_check,
)
from .radical import (
    RadicalReport,
    annihilator,
    is_3_primitive,
    is_3_semi_primitive,
    rad3,
    radical_quotient_check,
    semi_primitivity_characterizations,
)

SCHEMA_VERSION = 1


def _labels(D, mask: int) -> list[str]:
    return [D.label(i) for i in mask_indices(mask)]


def radical_dict(D: DiringTable, rep: RadicalReport) -> dict:
    return {
        "three_maximal_left_ideals": [_labels(D, m)
                                      for m in rep.three_maximal_left_ideals],
        "primitive_ideals": [_labels(D, m) for m in rep.primitive_ideals],
        "via_module_annihilators": _labels(D, rep.rad3_via_annihilators),
        "via_primitive_ideals": _labels(D, rep.rad3_via_primitive_ideals),
        "agrees": rep.agrees,
        "family_empty": rep.family_empty,
    }


def build_diring_analysis(D: DiringTable, name: str) -> dict:
    rep = rad3(D)
    out = {
        "schema_version": SCHEMA_VERSION,
        "kind": "diring",
        "name": name,
        "valid": True,
        "side": D.side,
        "order": D.order,
        "elements": list(D.names),
        "is_diring": D.is_diring(),
        "halos": {
            "left_mult": _labels(D, D.left_halo),
            "right_mult": _labels(D, D.right_halo),
            "two_sided_mult": _labels(D, D.two_sided_halo),
            "additive": _labels(D, D.additive_halo),
        },
        "ideals": {
            "two_sided": [_labels(D, h.mask)
                          for h in enumerate_ideals(D, "two_sided")],
            "left": [_labels(D, h.mask) for h in enumerate_ideals(D, "left")],
        },
        "simplicity": simplicity_class(D),
        "rad3": radical_dict(D, rep),
        "is_3_primitive": is_3_primitive(D)[0],
        "is_3_semi_primitive": is_3_semi_primitive(D),
    }
    props = {
        "halo_identities": halo_identities_check(D).ok,
        "radical_two_formulas_agree": rep.agrees,
        "radical_quotient_vanishes": radical_quotient_check(D).ok,
    }
    if D.order > 1:
        sp = semi_primitivity_characterizations(D)
        props["semi_primitivity_characterizations_agree"] = sp.agree
    ring_products = {}
    for e in mask_indices(D.two_sided_halo):
        _, ring_rep = induced_ring_product(D, e)
        ring_products[D.label(e)] = {
            "unital_ring": ring_rep.ok,
            "digroup": digroup_check(D, e).ok,
        }
    if ring_products:
        out["ring_product"] = ring_products
        props["induced_ring_and_digroup"] = all(
            v["unital_ring"] and v["digroup"] for v in ring_products.values())
    out["propositions"] = props
    return out


def build_module_analysis(M: LeftModuleTable, name: str, ring_name: str) -> dict:
    D = M.ring
    ann = annihilator(D, M)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "module",
        "name": name,
        "over": ring_name,
        "valid": True,
        "order": M.order,
        "elements": list(M.carrier.names),
        "halo": M.labels(M.halo),
        "even_part": M.labels(M.even_part),
        "submodules": [M.labels(s) for s in enumerate_submodules(M)],
        "three_irreducible": is_3_irreducible(M),
        "annihilator": [D.label(i) for i in mask_indices(ann)],
        "faithful": ann == 1,
        "propositions": {
            "module_halo_identities": module_halo_identities_check(M).ok,
        },
    }


def to_json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _set_str(labels: list[str]) -> str:
    return "{" + ", ".join(labels) + "}"


def render_diring_analysis(rep: dict) -> str:
    lines = [
        f"diring {rep['name']}: valid {rep['side']} diring, order {rep['order']}",
        f"  two-sided bar-unit exists (is a diring): "
        f"{'yes' if rep['is_diring'] else 'no'}",
        f"  left mult halo:      {_set_str(rep['halos']['left_mult'])}",
        f"  right mult halo:     {_set_str(rep['halos']['right_mult'])}",
        f"  two-sided mult halo: {_set_str(rep['halos']['two_sided_mult'])}",
        f"  additive halo:       {_set_str(rep['halos']['additive'])}",
        f"  two-sided ideals: "
        + ", ".join(_set_str(s) for s in rep["ideals"]["two_sided"]),
        f"  left ideals:      "
        + ", ".join(_set_str(s) for s in rep["ideals"]["left"]),
        f"  simplicity: {rep['simplicity']}",
        f"  3-maximal left ideals: "
        + (", ".join(_set_str(s)
                     for s in rep["rad3"]["three_maximal_left_ideals"]) or "none"),
        f"  3-primitive ideals: "
        + (", ".join(_set_str(s) for s in rep["rad3"]["primitive_ideals"]) or "none"),
        f"  rad3 = {_set_str(rep['rad3']['via_module_annihilators'])} "
        f"(formulas agree: {rep['rad3']['agrees']}, "
        f"family empty: {rep['rad3']['family_empty']})",
        f"  3-primitive: {rep['is_3_primitive']}, "
        f"3-semi-primitive: {rep['is_3_semi_primitive']}",
    ]
    props = rep.get("propositions", {})
    lines.append("  proposition checks: "
                 + ", ".join(f"{k}={v}" for k, v in props.items()))
    return "\n".join(lines)


def render_module_analysis(rep: dict) -> str:
    return "\n".join([
        f"module {rep['name']} over {rep['over']}: valid, order {rep['order']}",
        f"  halo:      {_set_str(rep['halo'])}",
        f"  even part: {_set_str(rep['even_part'])}",
        f"  submodules: " + ", ".join(_set_str(s) for s in rep["submodules"]),
        f"  3-irreducible: {rep['three_irreducible']}",
        f"  annihilator: {_set_str(rep['annihilator'])} "
        f"(faithful: {rep['faithful']})",
    ])
