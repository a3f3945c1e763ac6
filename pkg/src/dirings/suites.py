"""Property suites: every structural identity the package promises, run
over a single diring or over the whole small-order census.

A suite run counts every instance it checks and collects violations.
Disagreements between the three characterizations of 3-irreducibility
are collected separately as findings (they are logged, not failed).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .census import census_all_dirings, enumerate_modules
from .diring import (
    DiringTable,
    digroup_check,
    halo_identities_check,
    induced_ring_product,
)
from .groups import mask_all, mask_indices
from .ideals import IdealHandle, enumerate_ideals, first_iso_check, is_ideal, \
    kernel, quotient_diring, rng_with_left_identity_check, simplicity_class
from .modules import (
    LeftModuleTable,
    enumerate_submodules,
    hom_group,
    hom_halo_check,
    hom_image,
    hom_kernel,
    irreducibility_characterizations,
    is_3_irreducible,
    is_3_maximal,
    left_translation_check,
    module_from_translations,
    module_halo_identities_check,
    quotient_module,
    regular_module,
    schur_check,
)
from .radical import (
    colon_ideal,
    is_3_semi_primitive,
    rad3,
    radical_quotient_check,
    semi_primitivity_characterizations,
    three_primitive_ideals,
)


@dataclass
class SuiteResult:
    checks: Counter = field(default_factory=Counter)
    violations: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, name: str, n: int = 1) -> None:
        self.checks[name] += n

    def fail(self, name: str, detail: str) -> None:
        self.violations.append(f"{name}: {detail}")

    def merge(self, other: "SuiteResult") -> None:
        self.checks.update(other.checks)
        self.violations.extend(other.violations)
        self.findings.extend(other.findings)

    def render(self) -> str:
        lines = [f"{name}: {n} instance(s)" for name, n in sorted(self.checks.items())]
        if self.findings:
            lines.append(f"findings ({len(self.findings)}):")
            lines.extend(f"  {f}" for f in self.findings)
        if self.violations:
            lines.append(f"VIOLATIONS ({len(self.violations)}):")
            lines.extend(f"  {v}" for v in self.violations)
        else:
            lines.append("all suites green")
        return "\n".join(lines)


def _expect(result: SuiteResult, name: str, ok: bool, detail: str) -> None:
    result.count(name)
    if not ok:
        result.fail(name, detail)


def run_diring_suite(D: DiringTable, name: str, module_max: int = 4,
                     jobs: int | None = None,
                     with_modules: bool = True) -> SuiteResult:
    """All per-diring checks, plus the module suites over its census."""
    r = SuiteResult()

    _expect(r, "halo-identities", halo_identities_check(D).ok, name)

    hp = D.additive_halo
    ok, _ = is_ideal(D, hp, "two_sided")
    _expect(r, "halo-is-ideal", ok, name)
    two_sided = enumerate_ideals(D, "two_sided")
    masks = {h.mask for h in two_sided}
    if hp != 1:
        _expect(r, "three-ideals-present",
                {1, hp, mask_all(D.order)} <= masks, name)
    _expect(r, "simplicity-classifies", simplicity_class(D) in
            ("three_simple", "two_simple", "neither"), name)

    for I in two_sided:
        Q, phi = quotient_diring(D, I)
        _expect(r, "quotient-kernel", kernel(phi).mask == I.mask,
                f"{name} ideal {D.labels(I.mask)}")
        _expect(r, "first-isomorphism", first_iso_check(phi),
                f"{name} ideal {D.labels(I.mask)}")
        if hp & ~I.mask == 0:
            _expect(r, "rng-with-left-identity",
                    rng_with_left_identity_check(D, I),
                    f"{name} ideal {D.labels(I.mask)}")

    for I in enumerate_ideals(D, "left"):
        colon_ideal(D, I)  # dual routes and containments asserted inside
        r.count("colon-dual-route")

    for e in mask_indices(D.two_sided_halo):
        _, ring_rep = induced_ring_product(D, e)
        _expect(r, "induced-ring", ring_rep.ok, f"{name} e={D.label(e)}")
        _expect(r, "digroup", digroup_check(D, e).ok, f"{name} e={D.label(e)}")

    rep = rad3(D)
    _expect(r, "radical-two-formulas", rep.agrees, name)
    three_primitive_ideals(D)  # double inclusion asserted inside
    r.count("primitive-double-inclusion")
    is_3_semi_primitive(D)     # cross-oracle asserted inside
    r.count("semi-primitive-cross-oracle")
    _expect(r, "radical-quotient", radical_quotient_check(D).ok, name)
    if D.order > 1:
        sp = semi_primitivity_characterizations(D)
        _expect(r, "semi-primitivity-characterizations", sp.agree,
                f"{name}: {sp.semi_primitive}/{sp.faithful_reducible}/"
                f"{sp.subdirect} ({sp.detail})")

    if with_modules:
        r.merge(run_module_suites(D, name, module_max=module_max, jobs=jobs))
    return r


def run_module_suites(D: DiringTable, name: str, module_max: int = 4,
                      jobs: int | None = None) -> SuiteResult:
    r = SuiteResult()
    mods: list[tuple[str, LeftModuleTable]] = []
    for m in range(1, module_max + 1):
        for rec in enumerate_modules(D, m, jobs=jobs):
            mods.append((f"{name}/{rec.name}", rec.structure))

    reg = regular_module(D)
    left_ideal_masks = {h.mask for h in enumerate_ideals(D, "left")}
    _expect(r, "regular-submodules-are-left-ideals",
            set(enumerate_submodules(reg)) == left_ideal_masks, name)

    for mname, M in mods:
        _expect(r, "module-halo-identities",
                module_halo_identities_check(M).ok, mname)
        _expect(r, "translations", left_translation_check(M).ok, mname)
        rebuilt = module_from_translations(
            D, M.carrier, [M.lact[a] for a in range(D.order)],
            [M.ract[a] for a in range(D.order)])
        _expect(r, "translations-roundtrip",
                not isinstance(rebuilt, type(None))
                and (rebuilt.lact == M.lact).all()
                and (rebuilt.ract == M.ract).all(), mname)

        subs = enumerate_submodules(M)
        _expect(r, "submodule-lattice-base",
                1 in subs and M.halo in subs and mask_all(M.order) in subs,
                mname)
        for N in subs:
            quotient_module(M, N)     # halo formula asserted inside
            r.count("quotient-halo-formula")
            is_3_maximal(M, N)        # lattice cross-check asserted inside
            r.count("three-maximal-cross-check")

        if M.halo not in (1, mask_all(M.order)):
            ch = irreducibility_characterizations(M)
            r.count("irreducibility-characterizations")
            if not ch.agree:
                r.findings.append(
                    f"{mname}: characterizations disagree "
                    f"(lattice={ch.lattice}, generation={ch.generation}, "
                    f"quotient={ch.quotient_iso})")

    for mname, M in mods:
        for nname, N in mods:
            for phi in hom_group(M, N):
                hom_kernel(phi)   # submodule property asserted inside
                hom_image(phi)
                _expect(r, "hom-halo-image", hom_halo_check(phi),
                        f"{mname} -> {nname}")
            r.count("hom-pairs")

    irr = [(mname, M) for mname, M in mods if is_3_irreducible(M)]
    for mname, M in irr:
        for nname, N in irr:
            _expect(r, "schur", schur_check(M, N).ok, f"{mname} vs {nname}")
    return r


def run_census_suites(max_order: int = 4, module_max: int = 4,
                      jobs: int | None = None) -> SuiteResult:
    """Every suite over the full census of left dirings of order
    <= max_order and all their modules of order <= module_max."""
    total = SuiteResult()
    for rec in census_all_dirings(max_order=max_order, jobs=jobs,
                                  with_invariants=False):
        total.merge(run_diring_suite(rec.structure, rec.name,
                                     module_max=module_max, jobs=jobs))
        total.count("dirings-processed")
    return total
