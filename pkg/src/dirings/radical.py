"""Annihilators, 3-primitive ideals, and the 3-radical.

Every quantity with two defining routes is computed both ways and the
results are required to agree:

  * (I:R) by the direct row scan and as the annihilator of R/I;
  * 3-primitive ideals as {(I:R) | I 3-maximal} and by testing each
    quotient diring for 3-primitivity;
  * the radical as an intersection of module annihilators and as an
    intersection of 3-primitive ideals;
  * 3-semi-primitivity as "radical is zero" and elementwise from the
    annihilator definition.

When no 3-maximal left ideal exists the module family is empty and the
radical is the whole diring by the empty-intersection convention; the
report flags this so consumers can tell the degenerate case apart.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .diring import DiringTable, verify_one_sided_diring
from .groups import (
    group_product,
    mask_all,
    mask_from,
    mask_indices,
    mask_key,
    mask_size,
)
from .ideals import (
    DiringHom,
    IdealHandle,
    enumerate_ideals,
    is_ideal,
    kernel,
    quotient_diring,
    verify_hom,
)
from .modules import (
    LeftModuleTable,
    component_masks,
    direct_sum,
    is_3_irreducible,
    is_3_maximal,
    is_completely_3_reducible,
    quotient_module,
    regular_module,
    require_module,
    submodule_as_module,
    verify_internal_decomposition,
)
from .validation import CapExceeded, ValidationReport

DECOMP_FULL_SEARCH_CAP = 16


def annihilator(D: DiringTable, M: LeftModuleTable) -> int:
    """{a | a -o M == 0 and a o- M == 0}, verified to be a two-sided ideal."""
    mask = mask_from(a for a in range(D.order)
                     if not M.lact[a].any() and not M.ract[a].any())
    ok, witness = is_ideal(D, mask, "two_sided")
    assert ok, f"annihilator is not an ideal: {witness}"
    return mask


def is_faithful(D: DiringTable, M: LeftModuleTable) -> bool:
    return annihilator(D, M) == 1


def colon_ideal(D: DiringTable, I: IdealHandle) -> int:
    """The largest two-sided ideal inside a left ideal I.

    Computed as {a | a -* R inside I and a *- R inside I} and, as an
    independent route, as the annihilator of the quotient module R/I;
    the two must agree.  Containment inside I itself is guaranteed only
    when a two-sided bar-unit exists, and is asserted in that case.
    """
    ok, witness = is_ideal(D, I.mask, I.kind)
    if not ok:
        raise ValueError(f"not a {I.kind} ideal: {witness}")
    by_scan = 0
    for a in range(D.order):
        inside = all((I.mask >> int(v)) & 1 for v in D.lprod[a]) and \
                 all((I.mask >> int(v)) & 1 for v in D.rprod[a])
        if inside:
            by_scan |= 1 << a
    reg = regular_module(D)
    q, _ = quotient_module(reg, I.mask)
    by_annihilator = annihilator(D, q)
    assert by_scan == by_annihilator, "the two colon-ideal routes disagree"
    for K in enumerate_ideals(D, "two_sided"):
        if K.mask & ~I.mask == 0:
            assert K.mask & ~by_scan == 0, "a contained ideal escapes (I:R)"
    if D.two_sided_halo:
        assert by_scan & ~I.mask == 0, "(I:R) not inside I despite a bar-unit"
    return by_scan


def three_maximal_left_ideals(D: DiringTable) -> list[int]:
    """Left ideals whose regular-module quotient is 3-irreducible."""
    reg = regular_module(D)
    return [h.mask for h in enumerate_ideals(D, "left")
            if is_3_maximal(reg, h.mask)]


def is_3_primitive(D: DiringTable):
    """(flag, witness module): true when some 3-maximal left ideal has a
    zero colon ideal; the witness R/I is then faithful and 3-irreducible."""
    reg = regular_module(D)
    for I in three_maximal_left_ideals(D):
        if colon_ideal(D, IdealHandle(I, "left")) == 1:
            witness, _ = quotient_module(reg, I)
            assert is_faithful(D, witness) and is_3_irreducible(witness)
            return True, witness
    return False, None


def three_primitive_ideals(D: DiringTable) -> list[int]:
    """{(I:R) | I 3-maximal left ideal}, deduplicated, and cross-checked
    against the quotient-diring definition: a two-sided ideal is
    3-primitive exactly when R/H is a 3-primitive diring."""
    via_colon = sorted(
        {colon_ideal(D, IdealHandle(I, "left"))
         for I in three_maximal_left_ideals(D)}, key=mask_key)
    via_quotient = []
    for H in enumerate_ideals(D, "two_sided"):
        q, _ = quotient_diring(D, H)
        if is_3_primitive(q)[0]:
            via_quotient.append(H.mask)
    via_quotient.sort(key=mask_key)
    assert via_colon == via_quotient, \
        "primitive-ideal double inclusion fails"
    return via_colon


@dataclass
class RadicalReport:
    three_maximal_left_ideals: list[int]
    primitive_ideals: list[int]
    rad3_via_annihilators: int
    rad3_via_primitive_ideals: int
    agrees: bool
    family_empty: bool

    @property
    def rad3(self) -> int:
        return self.rad3_via_annihilators


def rad3(D: DiringTable) -> RadicalReport:
    """The 3-radical by both formulas.

    Route one intersects the annihilators of the quotient modules R/I
    over the 3-maximal left ideals I (a complete family of 3-irreducible
    modules up to isomorphism); route two intersects the 3-primitive
    ideals.  An empty family yields the whole diring, flagged."""
    reg = regular_module(D)
    maximal = three_maximal_left_ideals(D)
    full = mask_all(D.order)
    if not maximal:
        via_ann = full
    else:
        via_ann = full
        for I in maximal:
            q, _ = quotient_module(reg, I)
            via_ann &= annihilator(D, q)
    primitive = three_primitive_ideals(D)
    via_prim = full
    for H in primitive:
        via_prim &= H
    return RadicalReport(
        three_maximal_left_ideals=maximal,
        primitive_ideals=primitive,
        rad3_via_annihilators=via_ann,
        rad3_via_primitive_ideals=via_prim,
        agrees=via_ann == via_prim,
        family_empty=not maximal,
    )


def is_3_semi_primitive(D: DiringTable) -> bool:
    """radical == 0, cross-checked against the elementwise definition:
    every nonzero a avoids the annihilator of some 3-irreducible module."""
    rep = rad3(D)
    via_radical = rep.rad3_via_annihilators == 1
    reg = regular_module(D)
    anns = [annihilator(D, quotient_module(reg, I)[0])
            for I in rep.three_maximal_left_ideals]
    via_definition = all(
        any(not (ann >> a) & 1 for ann in anns)
        for a in range(1, D.order))
    assert via_radical == via_definition, \
        "the two semi-primitivity routes disagree"
    return via_radical


# ---------------------------------------------------------------------------
# direct and subdirect products

def direct_product(factors: list[DiringTable]):
    """Componentwise product diring with verified surjective projections.

    The additive and left halos are asserted componentwise.  Axiom scans
    are skipped above the full-scan cap, where the componentwise
    construction carries the laws."""
    if not factors:
        raise ValueError("direct product of no factors")
    total = 1
    for f in factors:
        total *= f.order
    if total > 4096:
        raise CapExceeded(f"direct product order {total} exceeds cap")

    G = factors[0].group
    for f in factors[1:]:
        G = group_product(G, f.group)
    sizes = [f.order for f in factors]
    tuples = list(itertools.product(*[range(s) for s in sizes]))

    def flat(tup):
        v = 0
        for s, i in zip(sizes, tup):
            v = v * s + i
        return v

    n = total
    lprod = np.zeros((n, n), dtype=G.add.dtype)
    rprod = np.zeros((n, n), dtype=G.add.dtype)
    for tx in tuples:
        x = flat(tx)
        for ty in tuples:
            y = flat(ty)
            lprod[x, y] = flat(tuple(int(f.lprod[a, b])
                                     for f, a, b in zip(factors, tx, ty)))
            rprod[x, y] = flat(tuple(int(f.rprod[a, b])
                                     for f, a, b in zip(factors, tx, ty)))
    got = verify_one_sided_diring(G, lprod, rprod, require_side="left")
    assert isinstance(got, DiringTable), got.summary()

    expected_left = mask_from(flat(t) for t in tuples
                              if all((f.left_halo >> i) & 1
                                     for f, i in zip(factors, t)))
    expected_add = mask_from(flat(t) for t in tuples
                             if all((f.additive_halo >> i) & 1
                                    for f, i in zip(factors, t)))
    assert got.left_halo == expected_left, "product left halo not componentwise"
    assert got.additive_halo == expected_add, "product additive halo not componentwise"

    projections = []
    for k, f in enumerate(factors):
        # itertools.product order matches the flat index order
        pmap = np.array([t[k] for t in tuples], dtype=G.add.dtype)
        phi = DiringHom(source=got, target=f, map=pmap)
        rep = verify_hom(phi)
        assert rep.ok, rep.summary()
        assert len(set(pmap.tolist())) == f.order, "projection not surjective"
        projections.append(phi)
    return got, projections


def subdirect_product_verify(D: DiringTable, factors: list[DiringTable],
                             phi: DiringHom) -> ValidationReport:
    """phi must be an injective diring homomorphism into the direct
    product whose composite with every projection is onto."""
    product, projections = direct_product(factors)
    report = ValidationReport(kind="subdirect product")
    if phi.target.key() != product.key():
        report.add("subdirect-target", (), "map does not land in the product")
        return report
    hom_rep = verify_hom(phi)
    if not hom_rep.ok:
        report.merge(hom_rep)
    if len(set(phi.map.tolist())) != D.order:
        report.add("subdirect-injective", (), "embedding is not injective")
    for k, proj in enumerate(projections):
        composite = proj.map[phi.map]
        if len(set(composite.tolist())) != factors[k].order:
            report.add("subdirect-onto", (str(k),),
                       f"component {k} is not surjective")
    return report


@dataclass
class SemiPrimitivityReport:
    semi_primitive: bool            # radical route
    faithful_reducible: bool        # a faithful completely 3-reducible module exists
    subdirect: bool                 # embeds subdirectly into 3-primitive quotients
    agree: bool
    detail: str = ""


def semi_primitivity_characterizations(D: DiringTable) -> SemiPrimitivityReport:
    """Constructively evaluate the three equivalent descriptions of
    3-semi-primitivity on a nonzero diring.

    The candidate module is the direct sum of R/I over the 3-maximal left
    ideals; the candidate embedding sends a to its cosets modulo the
    annihilators of those quotients."""
    if D.order == 1:
        raise ValueError("requires a nonzero diring")
    cond1 = is_3_semi_primitive(D)

    reg = regular_module(D)
    maximal = three_maximal_left_ideals(D)
    detail = []
    if not maximal:
        cond2 = False
        cond3 = False
        detail.append("no 3-maximal left ideals, so no 3-irreducible modules")
    else:
        summands = [quotient_module(reg, I)[0] for I in maximal]
        big = direct_sum(summands)
        anns = [annihilator(D, s) for s in summands]
        inter = mask_all(D.order)
        for a in anns:
            inter &= a
        big_ann = annihilator(D, big)
        assert big_ann == inter, "sum annihilator is not the intersection"
        faithful = big_ann == 1
        parts = component_masks([s.order for s in summands])
        reducible = verify_internal_decomposition(big, parts)
        if big.order <= DECOMP_FULL_SEARCH_CAP:
            assert is_completely_3_reducible(big).ok == reducible
        cond2 = faithful and reducible
        detail.append(f"sum of {len(summands)} quotient modules, "
                      f"order {big.order}")

        primitive = three_primitive_ideals(D)
        quotients = []
        proj_maps = []
        for H in primitive:
            q, p = quotient_diring(D, IdealHandle(H, "two_sided"))
            quotients.append(q)
            proj_maps.append(p.map)
        if not quotients:
            cond3 = False
        else:
            product, _ = direct_product(quotients)
            sizes = [q.order for q in quotients]

            def flat(tup):
                v = 0
                for s, i in zip(sizes, tup):
                    v = v * s + i
                return v

            emb = np.array([flat(tuple(int(pm[a]) for pm in proj_maps))
                            for a in range(D.order)], dtype=product.add.dtype)
            phi = DiringHom(source=D, target=product, map=emb)
            sub_rep = subdirect_product_verify(D, quotients, phi)
            prim_ok = all(is_3_primitive(q)[0] for q in quotients)
            cond3 = sub_rep.ok and prim_ok

    agree = cond1 == cond2 == cond3
    return SemiPrimitivityReport(cond1, cond2, cond3, agree, "; ".join(detail))


# ---------------------------------------------------------------------------
# transport along quotients

def deflate_module(M: LeftModuleTable, H: int):
    """View an R-module killed by the two-sided ideal H as a module over
    R/H; 3-irreducibility and the annihilator correspondence are asserted."""
    D = M.ring
    ann = annihilator(D, M)
    if H & ~ann:
        raise ValueError("ideal does not annihilate the module")
    Dq, proj = quotient_diring(D, IdealHandle(H, "two_sided"))
    reps = [int(np.nonzero(proj.map == c)[0][0]) for c in range(Dq.order)]
    qlact = M.lact[reps]
    qract = M.ract[reps]
    assert (M.lact == qlact[proj.map]).all() and (M.ract == qract[proj.map]).all()
    Mq = require_module(Dq, M.carrier, qlact, qract)
    assert is_3_irreducible(M) == is_3_irreducible(Mq)
    ann_q = annihilator(Dq, Mq)
    expected = mask_from(int(proj.map[a]) for a in mask_indices(ann))
    assert ann_q == expected, "annihilator correspondence fails"
    return Mq, Dq, proj


def inflate_module(Mq: LeftModuleTable, D: DiringTable, proj: DiringHom
                   ) -> LeftModuleTable:
    """Pull a module over R/H back to R along the projection."""
    lact = Mq.lact[proj.map]
    ract = Mq.ract[proj.map]
    M = require_module(D, Mq.carrier, lact, ract)
    assert is_3_irreducible(M) == is_3_irreducible(Mq)
    return M


def radical_quotient_check(D: DiringTable) -> ValidationReport:
    """The radical of R/rad3 must vanish; vacuous when rad3 is all of R.

    Also asserts the ideal-lattice correspondence between R/rad3 and the
    ideals of R containing rad3."""
    report = ValidationReport(kind="radical of the radical quotient")
    rep = rad3(D)
    full = mask_all(D.order)
    if rep.rad3 == full and D.order > 1:
        return report  # vacuous: the quotient is the zero diring
    Dq, proj = quotient_diring(D, IdealHandle(rep.rad3, "two_sided"))
    qrep = rad3(Dq)
    if qrep.rad3 != 1:
        report.add("radical-quotient", (),
                   "rad3 of the quotient by rad3 is nonzero")
    above = sorted(
        {mask_from(int(proj.map[a]) for a in mask_indices(H.mask))
         for H in enumerate_ideals(D, "two_sided")
         if rep.rad3 & ~H.mask == 0}, key=mask_key)
    quotient_ideals = sorted({H.mask for H in enumerate_ideals(Dq, "two_sided")},
                             key=mask_key)
    if above != quotient_ideals:
        report.add("radical-lattice", (),
                   "ideal lattice correspondence fails for the quotient")
    return report
