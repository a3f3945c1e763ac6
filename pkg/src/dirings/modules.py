"""Left modules over a left diring as validated action tables.

Actions are written a -o x (lact) and a o- x (ract).  The module laws,
numbered M1..M6 here and referenced by these ids in reports:

    M1   a * (x+y) == a*x + a*y              for * in {-o, o-}
    M2   (a+b) * x == a*x + b*x              for * in {-o, o-}
    M3a  (a -* b) -o x == a -o (b -o x)
    M3b  (a -* b) -o x == a -o (b o- x)
    M4   (a *- b) -o x == a o- (b -o x)
    M5a  (a -* b) o- x == a o- (b o- x)
    M5b  (a *- b) o- x == a o- (b o- x)
    M6   e o- x == x    for a left bar-unit e of the diring

The additive halo of a module is {x | e -o x == 0}; it is a submodule,
independent of the bar-unit choice, and splits the carrier as
(e -o M) + halo with trivial intersection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .diring import DiringTable
from .groups import (
    FiniteAbelianGroup,
    additive_homs,
    additive_isos,
    enumerate_subgroups,
    group_product,
    is_subgroup,
    mask_all,
    mask_from,
    mask_indices,
    mask_size,
    quotient_group,
    require_group,
)
from .validation import CapExceeded, ValidationReport

DECOMPOSITION_SEARCH_CAP = 16
DIRECT_SUM_CAP = 4096


@dataclass(frozen=True, eq=False)
class LeftModuleTable:
    """A validated left module over a left diring.

    `lact` and `ract` are |R| x |M| tables of carrier indices;
    `chosen_e` is the least-index left bar-unit, used for the cached
    halo and the even/odd decomposition.
    """

    ring: DiringTable
    carrier: FiniteAbelianGroup
    lact: np.ndarray
    ract: np.ndarray
    chosen_e: int
    halo: int
    even_part: int   # chosen_e -o M

    @property
    def order(self) -> int:
        return self.carrier.order

    def label(self, x: int) -> str:
        return self.carrier.names[x]

    def labels(self, mask: int) -> list[str]:
        return self.carrier.labels(mask)

    def key(self) -> bytes:
        return (self.ring.key() + self.carrier.key()
                + self.lact.astype(np.int32).tobytes()
                + self.ract.astype(np.int32).tobytes())

    def __repr__(self) -> str:
        return f"LeftModuleTable(|R|={self.ring.order}, |M|={self.order})"


def _witness(report, axiom, cube, rnames, mnames, msg):
    bad = np.argwhere(~cube)
    if len(bad):
        a, b, x = bad[0]
        report.add(axiom, (rnames[a], rnames[b], mnames[x]), msg)


def module_law_cubes(lprod, rprod, lact, ract):
    """Boolean cubes for M3a..M5b (shape |R| x |R| x |M|)."""
    return {
        "M3a": lact[lprod] == np.take(lact, lact, axis=1),
        "M3b": lact[lprod] == np.take(lact, ract, axis=1),
        "M4": lact[rprod] == np.take(ract, lact, axis=1),
        "M5a": ract[lprod] == np.take(ract, ract, axis=1),
        "M5b": ract[rprod] == np.take(ract, ract, axis=1),
    }


def verify_module(D: DiringTable, carrier: FiniteAbelianGroup, lact, ract
                  ) -> LeftModuleTable | ValidationReport:
    """Exhaustive check of M1..M6; valid modules come back with the halo
    and even part cached and the least-index bar-unit recorded."""
    nR, nM = D.order, carrier.order
    report = ValidationReport(kind="left module")
    lact = np.ascontiguousarray(lact, dtype=carrier.add.dtype)
    ract = np.ascontiguousarray(ract, dtype=carrier.add.dtype)
    for name, t in (("lact", lact), ("ract", ract)):
        if t.shape != (nR, nM):
            report.add("shape", (), f"{name} must be {nR}x{nM}, got {t.shape}")
            return report
        if t.min() < 0 or t.max() >= nM:
            report.add("closure", (), f"{name} has an out-of-range entry")
            return report

    addM, addR = carrier.add, D.group.add
    rnames, mnames = D.group.names, carrier.names
    # M1, row by row to stay cheap on large carriers
    for name, t in (("-o", lact), ("o-", ract)):
        for a in range(nR):
            row = t[a]
            cube = row[addM] == addM[row[:, None], row[None, :]]
            bad = np.argwhere(~cube)
            if len(bad):
                x, y = bad[0]
                report.add("M1", (rnames[a], mnames[x], mnames[y]),
                           f"{name} is not additive in the module argument")
                break
    for name, t in (("-o", lact), ("o-", ract)):
        cube = t[addR] == addM[t[:, None, :], t[None, :, :]]
        _witness(report, "M2", cube, rnames, mnames,
                 f"{name} is not additive in the ring argument")
    for axiom, cube in module_law_cubes(D.lprod, D.rprod, lact, ract).items():
        _witness(report, axiom, cube, rnames, mnames, "module law fails")

    ar = np.arange(nM, dtype=addM.dtype)
    unit_rows = [e for e in mask_indices(D.left_halo) if (ract[e] == ar).all()]
    if not unit_rows:
        report.add("M6", (), "no left bar-unit acts as the identity via o-")
    if not report.ok:
        return report
    # with M5 verified, the identity action extends to every bar-unit
    assert unit_rows == mask_indices(D.left_halo)

    e = unit_rows[0]
    halos = [mask_from(x for x in range(nM) if lact[ee, x] == 0)
             for ee in unit_rows]
    assert all(h == halos[0] for h in halos), "halo depends on the bar-unit"
    halo = halos[0]
    even = mask_from(int(v) for v in lact[e])
    lact.flags.writeable = False
    ract.flags.writeable = False
    return LeftModuleTable(ring=D, carrier=carrier, lact=lact, ract=ract,
                           chosen_e=e, halo=halo, even_part=even)


def require_module(D, carrier, lact, ract) -> LeftModuleTable:
    got = verify_module(D, carrier, lact, ract)
    if isinstance(got, ValidationReport):
        raise ValueError(got.summary())
    return got


def regular_module(D: DiringTable) -> LeftModuleTable:
    """The diring acting on itself, with lact = lprod and ract = rprod."""
    return require_module(D, D.group, D.lprod, D.rprod)


def module_halo(M: LeftModuleTable) -> int:
    return M.halo


def decompose(M: LeftModuleTable) -> tuple[int, int]:
    """(even part, halo) masks; checked to split the carrier directly."""
    m0, m1 = M.even_part, M.halo
    assert m0 & m1 == 1
    total = 0
    for x in mask_indices(m0):
        for y in mask_indices(m1):
            total |= 1 << int(M.carrier.add[x, y])
    assert total == mask_all(M.order)
    return m0, m1


def components(M: LeftModuleTable, x: int) -> tuple[int, int]:
    """The unique splitting x = x0 + x1 with x0 in the even part and
    x1 in the halo; x0 is e -o x."""
    x0 = int(M.lact[M.chosen_e, x])
    x1 = M.carrier.sub(x, x0)
    assert (M.even_part >> x0) & 1 and (M.halo >> x1) & 1
    assert int(M.lact[M.chosen_e, x0]) == x0
    return x0, x1


def module_halo_identities_check(M: LeftModuleTable) -> ValidationReport:
    """The basic halo identities of a module:

    1. R -o halo(M) == 0;
    2. halo(R) o- M == 0 and halo(R) -o M lands inside halo(M);
    3. for every left bar-unit e, the even part e -o M meets the halo
       only in 0, together they span M, and e -o fixes the even part.
    """
    report = ValidationReport(kind="module halo identities")
    D = M.ring
    for x in mask_indices(M.halo):
        if M.lact[:, x].any():
            report.add("halo-kill-lact", (M.label(x),),
                       "R -o halo is nonzero")
            break
    for a in mask_indices(D.additive_halo):
        if M.ract[a].any():
            report.add("ring-halo-kill-ract", (D.label(a),),
                       "halo(R) o- M is nonzero")
        bad = [x for x in range(M.order)
               if not (M.halo >> int(M.lact[a, x])) & 1]
        if bad:
            report.add("ring-halo-into-halo", (D.label(a), M.label(bad[0])),
                       "halo(R) -o M escapes halo(M)")
    full = mask_all(M.order)
    for e in mask_indices(D.left_halo):
        even = mask_from(int(v) for v in M.lact[e])
        if even & M.halo != 1:
            report.add("decomposition-meet", (D.label(e),),
                       "even part meets the halo beyond 0")
            continue
        span = 0
        for x in mask_indices(even):
            for y in mask_indices(M.halo):
                span |= 1 << int(M.carrier.add[x, y])
        if span != full:
            report.add("decomposition-span", (D.label(e),),
                       "even part plus halo does not cover M")
        if any(int(M.lact[e, x]) != x for x in mask_indices(even)):
            report.add("even-idempotent", (D.label(e),),
                       "e -o does not fix its even part")
    return report


def left_translation_check(M: LeftModuleTable) -> ValidationReport:
    """Composition laws of the translation operators x -> a*x, and the
    round trip: the module rebuilt from its translations equals itself."""
    report = ValidationReport(kind="left translations")
    D = M.ring
    addR = D.group.add
    L, V = M.lact, M.ract
    rnames = D.group.names
    n = D.order

    def comp(A, B):
        return A[B]

    for a in range(n):
        for b in range(n):
            la_lb = comp(L[a], L[b])
            if not (la_lb == L[D.lprod[a, b]]).all():
                report.add("trans-ll", (rnames[a], rnames[b]),
                           "L_a L_b != L_{a -* b}")
            if not (comp(L[a], V[b]) == L[D.lprod[a, b]]).all():
                report.add("trans-lv", (rnames[a], rnames[b]),
                           "L_a V_b != L_{a -* b}")
            if not (comp(V[a], V[b]) == V[D.lprod[a, b]]).all() or \
               not (comp(V[a], V[b]) == V[D.rprod[a, b]]).all():
                report.add("trans-vv", (rnames[a], rnames[b]),
                           "V_a V_b != V_{a * b} for both products")
            if not (comp(V[a], L[b]) == L[D.rprod[a, b]]).all():
                report.add("trans-vl", (rnames[a], rnames[b]),
                           "V_a L_b != L_{a *- b}")
        # additivity in a is already M2; spot the operator form anyway
        for b in range(n):
            s = int(addR[a, b])
            if not (M.carrier.add[L[a], L[b]] == L[s]).all():
                report.add("trans-additive", (rnames[a], rnames[b]),
                           "a -> L_a is not additive")
                break
    e = M.chosen_e
    ar = np.arange(M.order, dtype=M.carrier.add.dtype)
    if not (V[e] == ar).all():
        report.add("trans-unit", (rnames[e],), "V_e is not the identity")
    # round trip: tables rebuilt from the translation operators
    rebuilt_l = np.stack([L[a] for a in range(n)])
    rebuilt_r = np.stack([V[a] for a in range(n)])
    if not ((rebuilt_l == M.lact).all() and (rebuilt_r == M.ract).all()):
        report.add("trans-roundtrip", (), "rebuilt tables differ")
    return report


def module_from_translations(D: DiringTable, carrier, lmaps, rmaps
                             ) -> LeftModuleTable | ValidationReport:
    """Package translation operators back into a module (converse check)."""
    lact = np.stack([np.asarray(m) for m in lmaps])
    ract = np.stack([np.asarray(m) for m in rmaps])
    return verify_module(D, carrier, lact, ract)


def is_submodule(M: LeftModuleTable, S: int) -> bool:
    if not is_subgroup(M.carrier, S):
        return False
    idx = mask_indices(S)
    for t in (M.lact, M.ract):
        for x in idx:
            col = t[:, x]
            if any(not (S >> int(v)) & 1 for v in col):
                return False
    return True


def enumerate_submodules(M: LeftModuleTable) -> list[int]:
    """Subgroups of the carrier closed under both actions."""
    out = [S for S in enumerate_subgroups(M.carrier) if is_submodule(M, S)]
    assert 1 in out and (mask_all(M.order)) in out and M.halo in out
    return out


def is_3_irreducible(M: LeftModuleTable) -> bool:
    """The halo is strictly between 0 and M and is the only proper
    submodule (strict reading: halo 0 or halo M both disqualify)."""
    full = mask_all(M.order)
    if M.halo == 1 or M.halo == full:
        return False
    proper = [S for S in enumerate_submodules(M) if S not in (1, full)]
    return proper == [M.halo]


def submodule_as_module(M: LeftModuleTable, S: int) -> LeftModuleTable:
    """The restriction of M to a submodule, reindexed."""
    if not is_submodule(M, S):
        raise ValueError("not a submodule")
    idx = mask_indices(S)
    back = {old: new for new, old in enumerate(idx)}
    remap = np.vectorize(back.__getitem__, otypes=[M.carrier.add.dtype])
    sub_group = require_group([M.label(i) for i in idx],
                              remap(M.carrier.add[np.ix_(idx, idx)]))
    return require_module(M.ring, sub_group,
                          remap(M.lact[:, idx]), remap(M.ract[:, idx]))


def quotient_module(M: LeftModuleTable, N: int):
    """Quotient by a submodule; the halo formula
    halo(M/N) == (N + halo(M)) / N is asserted."""
    if not is_submodule(M, N):
        raise ValueError("not a submodule")
    Q, proj = quotient_group(M.carrier, N)
    reps = [int(np.nonzero(proj == c)[0][0]) for c in range(Q.order)]
    qlact = proj[M.lact[:, reps]]
    qract = proj[M.ract[:, reps]]
    assert (proj[M.lact] == qlact[:, proj]).all()
    assert (proj[M.ract] == qract[:, proj]).all()
    qmod = require_module(M.ring, Q, qlact, qract)
    lifted = 0
    for x in mask_indices(N):
        for h in mask_indices(M.halo):
            lifted |= 1 << int(proj[M.carrier.add[x, h]])
    assert qmod.halo == lifted, "quotient halo formula fails"
    return qmod, proj


def is_3_maximal(M: LeftModuleTable, N: int) -> bool:
    """N with a 3-irreducible quotient; cross-checked against the lattice
    criterion that N + halo is the unique proper submodule between N and M."""
    qmod, _ = quotient_module(M, N)
    via_quotient = is_3_irreducible(qmod)

    add = M.carrier.add
    lifted = 0
    for x in mask_indices(N):
        for h in mask_indices(M.halo):
            lifted |= 1 << int(add[x, h])
    full = mask_all(M.order)
    between = [S for S in enumerate_submodules(M)
               if (S | N == S) and S not in (N, full)]
    via_lattice = (lifted not in (N, full)) and between == [lifted]
    assert via_quotient == via_lattice, "quotient and lattice criteria disagree"
    return via_quotient


def direct_sum(mods: list[LeftModuleTable]) -> LeftModuleTable:
    """External direct sum with componentwise actions.

    The component halos are asserted to assemble into the halo of the sum.
    Axiom scans above the full-scan cap are skipped; the construction is
    componentwise so the laws are inherited from the summands.
    """
    if not mods:
        raise ValueError("direct sum of no modules; use a zero module instead")
    D = mods[0].ring
    if any(m.ring.key() != D.key() for m in mods):
        raise ValueError("direct sum over mixed rings")
    total = 1
    for m in mods:
        total *= m.order
    if total > DIRECT_SUM_CAP:
        raise CapExceeded(f"direct sum order {total} exceeds cap {DIRECT_SUM_CAP}")

    carrier = mods[0].carrier
    for m in mods[1:]:
        carrier = group_product(carrier, m.carrier)

    sizes = [m.order for m in mods]

    def flat(tup):
        v = 0
        for s, i in zip(sizes, tup):
            v = v * s + i
        return v

    idx_tuples = list(itertools.product(*[range(s) for s in sizes]))
    nR = D.order
    lact = np.zeros((nR, total), dtype=carrier.add.dtype)
    ract = np.zeros((nR, total), dtype=carrier.add.dtype)
    for a in range(nR):
        for tup in idx_tuples:
            j = flat(tup)
            lact[a, j] = flat(tuple(int(m.lact[a, i]) for m, i in zip(mods, tup)))
            ract[a, j] = flat(tuple(int(m.ract[a, i]) for m, i in zip(mods, tup)))
    out = require_module(D, carrier, lact, ract)
    expected_halo = mask_from(
        flat(tup) for tup in idx_tuples
        if all((m.halo >> i) & 1 for m, i in zip(mods, tup)))
    assert out.halo == expected_halo, "sum halo is not componentwise"
    return out


def component_masks(sizes: list[int]) -> list[int]:
    """Masks of the canonical component copies inside a direct sum."""
    masks = []
    for k in range(len(sizes)):
        mask = 0
        for tup in itertools.product(*[range(s) for s in sizes]):
            if all(i == 0 for j, i in enumerate(tup) if j != k):
                v = 0
                for s, i in zip(sizes, tup):
                    v = v * s + i
                mask |= 1 << v
        masks.append(mask)
    return masks


@dataclass
class DecompositionResult:
    ok: bool
    parts: list[int] | None
    empty: bool = False


def verify_internal_decomposition(M: LeftModuleTable, parts: list[int]) -> bool:
    """parts are 3-irreducible submodules spanning M directly."""
    if not parts:
        return M.order == 1
    span = 1
    size = 1
    for S in parts:
        if not is_submodule(M, S):
            return False
        if not is_3_irreducible(submodule_as_module(M, S)):
            return False
        if span & S != 1:
            return False
        new_span = 0
        for x in mask_indices(span):
            for y in mask_indices(S):
                new_span |= 1 << int(M.carrier.add[x, y])
        size *= mask_size(S)
        if mask_size(new_span) != size:
            return False
        span = new_span
    return span == mask_all(M.order)


def is_completely_3_reducible(M: LeftModuleTable) -> DecompositionResult:
    """Search for an internal direct-sum decomposition into 3-irreducible
    submodules.  The zero module counts as the empty decomposition."""
    if M.order == 1:
        return DecompositionResult(ok=True, parts=[], empty=True)
    if M.order > DECOMPOSITION_SEARCH_CAP:
        raise CapExceeded(
            f"order {M.order} exceeds decomposition search cap")
    candidates = [S for S in enumerate_submodules(M)
                  if S != 1 and is_3_irreducible(submodule_as_module(M, S))]
    full = mask_all(M.order)

    def extend(span: int, size: int, start: int, chosen: list[int]):
        if span == full:
            return list(chosen)
        for k in range(start, len(candidates)):
            S = candidates[k]
            if span & S != 1:
                continue
            new_span = 0
            for x in mask_indices(span):
                for y in mask_indices(S):
                    new_span |= 1 << int(M.carrier.add[x, y])
            new_size = size * mask_size(S)
            if mask_size(new_span) != new_size:
                continue
            got = extend(new_span, new_size, k + 1, chosen + [S])
            if got is not None:
                return got
        return None

    parts = extend(1, 1, 0, [])
    if parts is None:
        return DecompositionResult(ok=False, parts=None)
    assert verify_internal_decomposition(M, parts)
    return DecompositionResult(ok=True, parts=parts)


# ---------------------------------------------------------------------------
# homomorphisms

@dataclass(frozen=True, eq=False)
class ModHom:
    source: LeftModuleTable
    target: LeftModuleTable
    map: np.ndarray

    def is_zero(self) -> bool:
        return not self.map.any()

    def __call__(self, x: int) -> int:
        return int(self.map[x])


def hom_group(M: LeftModuleTable, N: LeftModuleTable) -> list[ModHom]:
    """All module homomorphisms M -> N, as additive maps commuting with
    both actions, in a deterministic order."""
    if M.ring.key() != N.ring.key():
        raise ValueError("modules over different rings")
    out = []
    for f in additive_homs(M.carrier, N.carrier):
        if (f[M.lact] == N.lact[:, f]).all() and (f[M.ract] == N.ract[:, f]).all():
            out.append(ModHom(source=M, target=N, map=f))
    return out


def verify_mod_hom(phi: ModHom) -> ValidationReport:
    report = ValidationReport(kind="module homomorphism")
    M, N, f = phi.source, phi.target, phi.map
    if (f[M.carrier.add] != N.carrier.add[f[:, None], f[None, :]]).any():
        report.add("modhom-add", (), "does not preserve addition")
    if (f[M.lact] != N.lact[:, f]).any():
        report.add("modhom-lact", (), "does not commute with -o")
    if (f[M.ract] != N.ract[:, f]).any():
        report.add("modhom-ract", (), "does not commute with o-")
    return report


def hom_kernel(phi: ModHom) -> int:
    mask = mask_from(x for x in range(phi.source.order) if phi.map[x] == 0)
    assert is_submodule(phi.source, mask)
    return mask


def hom_image(phi: ModHom) -> int:
    mask = mask_from(int(v) for v in phi.map)
    assert is_submodule(phi.target, mask)
    return mask


def hom_halo_check(phi: ModHom) -> bool:
    """The image of the halo lands in halo(N) and the image's own halo is
    exactly halo(N) restricted to the image."""
    M, N = phi.source, phi.target
    mapped = mask_from(int(phi.map[x]) for x in mask_indices(M.halo))
    img = hom_image(phi)
    img_mod = submodule_as_module(N, img)
    img_halo_in_N = mask_from(mask_indices(img)[i]
                              for i in mask_indices(img_mod.halo))
    inside = mapped & ~(N.halo & img) == 0
    return inside and img_halo_in_N == (N.halo & img)


def end_ring(M: LeftModuleTable):
    """(endomorphism list, composition table); closure, the identity,
    and associativity are asserted."""
    homs = hom_group(M, M)
    keys = {h.map.tobytes(): i for i, h in enumerate(homs)}
    k = len(homs)
    table = np.zeros((k, k), dtype=np.int64)
    for i, f in enumerate(homs):
        for j, g in enumerate(homs):
            comp = f.map[g.map]
            b = comp.astype(M.carrier.add.dtype).tobytes()
            assert b in keys, "composition left the endomorphism set"
            table[i, j] = keys[b]
    ident = np.arange(M.order, dtype=M.carrier.add.dtype).tobytes()
    assert ident in keys
    assert (table[table] == np.take(table, table, axis=1)).all()
    return homs, table


def schur_check(M: LeftModuleTable, N: LeftModuleTable) -> ValidationReport:
    """Between 3-irreducible modules every nonzero homomorphism must be
    bijective; endomorphisms of one must form a division ring."""
    if not (is_3_irreducible(M) and is_3_irreducible(N)):
        raise ValueError("schur check requires 3-irreducible modules")
    report = ValidationReport(kind="schur")
    for phi in hom_group(M, N):
        if phi.is_zero():
            continue
        if len(set(phi.map.tolist())) != N.order or M.order != N.order:
            report.add("schur-bijective", (), "nonzero hom is not bijective")
    if M.key() == N.key():
        homs, table = end_ring(M)
        ident_idx = next(i for i, h in enumerate(homs)
                         if (h.map == np.arange(M.order)).all())
        for i, h in enumerate(homs):
            if h.is_zero():
                continue
            has_inverse = any(
                table[i, j] == ident_idx and table[j, i] == ident_idx
                for j in range(len(homs)))
            if not has_inverse:
                report.add("schur-division", (),
                           "nonzero endomorphism without a two-sided inverse")
    return report


def are_isomorphic_modules(M: LeftModuleTable, N: LeftModuleTable) -> ModHom | None:
    """A bijective additive map commuting with both actions, if one exists.

    Modules must be over the same diring; carriers are matched through
    every additive isomorphism (cheap at census scale)."""
    if M.ring.key() != N.ring.key() or M.order != N.order:
        return None
    if mask_size(M.halo) != mask_size(N.halo):
        return None
    for f in additive_isos(M.carrier, N.carrier):
        if (f[M.lact] == N.lact[:, f]).all() and (f[M.ract] == N.ract[:, f]).all():
            return ModHom(source=M, target=N, map=f)
    return None


# ---------------------------------------------------------------------------
# the three characterizations of 3-irreducibility

@dataclass
class IrreducibilityReport:
    lattice: bool          # 3-irreducible by the submodule lattice
    generation: bool       # M == R -o x0 and halo == R o- x1 for all nonzero picks
    quotient_iso: bool     # isomorphic to R/I for a 3-maximal left ideal I
    agree: bool


def irreducibility_characterizations(M: LeftModuleTable) -> IrreducibilityReport:
    """Evaluate the three equivalent descriptions of 3-irreducibility for a
    module whose halo is strictly between 0 and M (hypotheses required).
    Disagreements are reported, not raised; callers may log them."""
    full = mask_all(M.order)
    if M.halo == 1 or M.halo == full:
        raise ValueError("hypotheses unmet: halo must be strictly between 0 and M")

    lattice = is_3_irreducible(M)

    generation = True
    for x0 in mask_indices(M.even_part):
        if x0 == 0:
            continue
        if mask_from(int(v) for v in M.lact[:, x0]) != full:
            generation = False
    for x1 in mask_indices(M.halo):
        if x1 == 0:
            continue
        if mask_from(int(v) for v in M.ract[:, x1]) != M.halo:
            generation = False

    reg = regular_module(M.ring)
    quotient_iso = False
    for I in enumerate_submodules(reg):
        if I == mask_all(reg.order):
            continue
        if not is_3_maximal(reg, I):
            continue
        q, _ = quotient_module(reg, I)
        if are_isomorphic_modules(M, q) is not None:
            quotient_iso = True
            break

    agree = lattice == generation == quotient_iso
    return IrreducibilityReport(lattice, generation, quotient_iso, agree)
