"""Exhaustive census of left dirings and left modules at small orders,
up to isomorphism.

Generation works through additive-endomorphism images: a distributive
product on G is exactly an additive map G -> End(G), and a module action
over R on carrier M is an additive map R -> End(M).  Candidates are the
tables these maps produce; the kernel scans filter them by the dimonoid
or module laws, and representatives are deduplicated by the minimum
serialized form over the additive automorphisms of the carrier.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .diring import DiringTable, verify_left_diring
from .groups import (
    FiniteAbelianGroup,
    abelian_groups_of_order,
    additive_homs,
    additive_isos,
    automorphisms,
    mask_indices,
    mask_size,
    require_group,
)
from .ideals import DiringHom, enumerate_ideals, simplicity_class
from .modules import (
    LeftModuleTable,
    ModHom,
    are_isomorphic_modules,
    is_3_irreducible,
    require_module,
)
from .validation import CapExceeded

DIRING_CENSUS_CAP = 4
MODULE_CENSUS_CAP = 4
HOM_SOURCE_CAP = 8


def default_jobs() -> int:
    env = os.environ.get("DIRING_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


@dataclass
class CensusRecord:
    kind: str                       # "diring" | "module"
    name: str
    structure: object
    canonical_form: bytes
    invariants: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# candidate generation

def _endomorphism_group(G: FiniteAbelianGroup):
    """End(G) under pointwise addition, as a group plus the endo vectors."""
    endos = additive_homs(G, G)
    stack = np.stack(endos)
    index = {e.tobytes(): i for i, e in enumerate(endos)}
    k = len(endos)
    add = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            add[i, j] = index[G.add[endos[i], endos[j]].tobytes()]
    names = [str(i) for i in range(k)]
    return require_group(names, add), stack


def bilinear_tables(G: FiniteAbelianGroup, M: FiniteAbelianGroup) -> np.ndarray:
    """All G x M -> M tables additive in both arguments, shape (k,|G|,|M|).

    Rows are endomorphisms of M and the row map is additive over G, so
    these are exactly the tables satisfying the two additivity laws.
    """
    endo_group, endo_stack = _endomorphism_group(M)
    homs = additive_homs(G, endo_group)
    if not homs:
        return np.zeros((0, G.order, M.order), dtype=np.uint8)
    out = np.stack([endo_stack[h] for h in homs]).astype(np.uint8)
    return np.ascontiguousarray(out)


def _canonical_diring(add_bytes: bytes, lprod, rprod, autos):
    """(canonical key, canonical lprod bytes, canonical rprod bytes).

    The key is the minimum over all additive automorphisms of the
    relabeled, serialized table pair; the returned tables are the ones
    realizing the minimum, so every worker agrees on the representative.
    """
    n = len(lprod)
    best = None
    for sigma in autos:
        inv = np.empty_like(sigma)
        inv[sigma] = np.arange(len(sigma), dtype=sigma.dtype)
        rl = sigma[lprod[np.ix_(inv, inv)]].astype(np.uint8).tobytes()
        rr = sigma[rprod[np.ix_(inv, inv)]].astype(np.uint8).tobytes()
        if best is None or rl + rr < best[0] + best[1]:
            best = (rl, rr)
    return add_bytes + best[0] + best[1], best[0], best[1]


def _canonical_action(ring_key: bytes, add_bytes: bytes, lact, ract, autos):
    best = None
    for sigma in autos:
        inv = np.empty_like(sigma)
        inv[sigma] = np.arange(len(sigma), dtype=sigma.dtype)
        rl = sigma[lact[:, inv]].astype(np.uint8).tobytes()
        rr = sigma[ract[:, inv]].astype(np.uint8).tobytes()
        if best is None or rl + rr < best[0] + best[1]:
            best = (rl, rr)
    return ring_key + add_bytes + best[0] + best[1], best[0], best[1]


def _split(n_items: int, jobs: int) -> list[range]:
    step = (n_items + jobs - 1) // jobs if jobs > 0 else n_items
    return [range(s, min(s + step, n_items))
            for s in range(0, n_items, max(step, 1))]


# ---------------------------------------------------------------------------
# diring census

def _diring_chunk(args):
    cands_bytes, shape, rfilter, lo, hi, add_bytes, autos_bytes = args
    cands = np.frombuffer(cands_bytes, dtype=np.uint8).reshape(shape)
    autos = [np.frombuffer(a, dtype=np.int64) for a in autos_bytes]
    sub = cands[lo:hi]
    pairs = kernels.scan_product_pairs(sub, cands[rfilter])
    found = {}
    for i, j in pairs:
        lprod = sub[int(i)].astype(np.int64)
        rprod = cands[rfilter[int(j)]].astype(np.int64)
        canon, lb, rb = _canonical_diring(add_bytes, lprod, rprod, autos)
        found[canon] = (lb, rb)
    return found


def enumerate_left_dirings(G: FiniteAbelianGroup, jobs: int | None = None,
                           force: bool = False,
                           with_invariants: bool = True) -> list[CensusRecord]:
    """All left dirings on G up to isomorphism, sorted by canonical form.

    Isomorphisms fix the carrier group, so canonicalization runs over the
    additive automorphisms of G; records carry the canonical tables.
    """
    if G.order > DIRING_CENSUS_CAP and not force:
        raise CapExceeded(
            f"diring census capped at order {DIRING_CENSUS_CAP}; pass force")
    jobs = jobs or default_jobs()
    n = G.order
    cands = bilinear_tables(G, G)
    ar = np.arange(n, dtype=np.uint8)
    rfilter = np.nonzero([(c == ar).all(1).any() for c in cands])[0]
    autos = [a.astype(np.int64) for a in automorphisms(G)]
    add_bytes = G.add.astype(np.uint8).tobytes()

    work = [(cands.tobytes(), cands.shape, rfilter, r.start, r.stop,
             add_bytes, [a.tobytes() for a in autos])
            for r in _split(len(cands), jobs)]
    if jobs <= 1 or len(work) <= 1:
        results = [_diring_chunk(w) for w in work]
    else:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            results = pool.map(_diring_chunk, work)
    found = {}
    for part in results:
        found.update(part)

    records = []
    gtag = f"g{n}"
    for idx, canon in enumerate(sorted(found)):
        lb, rb = found[canon]
        lprod = np.frombuffer(lb, dtype=np.uint8).reshape(n, n).astype(G.add.dtype)
        rprod = np.frombuffer(rb, dtype=np.uint8).reshape(n, n).astype(G.add.dtype)
        D = verify_left_diring(G, lprod, rprod)
        assert isinstance(D, DiringTable), D.summary()
        rec = CensusRecord(kind="diring", name=f"{gtag}-d{idx:03d}",
                           structure=D, canonical_form=canon)
        if with_invariants:
            rec.invariants = diring_invariants(D)
        records.append(rec)
    return records


def diring_invariants(D: DiringTable) -> dict:
    from .radical import is_3_primitive, is_3_semi_primitive, rad3
    rep = rad3(D)
    return {
        "order": D.order,
        "left_halo": mask_size(D.left_halo),
        "right_halo": mask_size(D.right_halo),
        "two_sided_halo": mask_size(D.two_sided_halo),
        "additive_halo": mask_size(D.additive_halo),
        "ideals": len(enumerate_ideals(D, "two_sided")),
        "left_ideals": len(enumerate_ideals(D, "left")),
        "simplicity": simplicity_class(D),
        "rad3_size": mask_size(rep.rad3_via_annihilators),
        "rad3_family_empty": rep.family_empty,
        "is_3_primitive": is_3_primitive(D)[0],
        "is_3_semi_primitive": is_3_semi_primitive(D),
    }


def census_all_dirings(max_order: int = 4, jobs: int | None = None,
                       with_invariants: bool = True) -> list[CensusRecord]:
    """The full diring census over every abelian group of order <= max_order."""
    records = []
    for n in range(1, max_order + 1):
        for tag, G in abelian_groups_of_order(n):
            recs = enumerate_left_dirings(G, jobs=jobs,
                                          force=n > DIRING_CENSUS_CAP,
                                          with_invariants=with_invariants)
            for r in recs:
                r.name = f"{tag}-{r.name.split('-')[-1]}"
                r.invariants["group"] = tag
            records.extend(recs)
    return records


# ---------------------------------------------------------------------------
# module census

def _module_chunk(args):
    (cands_bytes, shape, rfilter, lo, hi, lprod_b, rprod_b, nR,
     ring_key, add_bytes, autos_bytes) = args
    cands = np.frombuffer(cands_bytes, dtype=np.uint8).reshape(shape)
    lprod = np.frombuffer(lprod_b, dtype=np.int64).reshape(nR, nR)
    rprod = np.frombuffer(rprod_b, dtype=np.int64).reshape(nR, nR)
    autos = [np.frombuffer(a, dtype=np.int64) for a in autos_bytes]
    sub = cands[lo:hi]
    pairs = kernels.scan_action_pairs(lprod, rprod, sub, cands[rfilter])
    found = {}
    for i, j in pairs:
        lact = sub[int(i)].astype(np.int64)
        ract = cands[rfilter[int(j)]].astype(np.int64)
        canon, lb, rb = _canonical_action(ring_key, add_bytes, lact, ract, autos)
        found[canon] = (lb, rb)
    return found


def enumerate_modules(D: DiringTable, m: int, jobs: int | None = None,
                      force: bool = False) -> list[CensusRecord]:
    """All left D-modules with carrier order m, up to module isomorphism."""
    if (m > MODULE_CENSUS_CAP or D.order > MODULE_CENSUS_CAP) and not force:
        raise CapExceeded(
            f"module census capped at order {MODULE_CENSUS_CAP}; pass force")
    jobs = jobs or default_jobs()
    records = []
    for ctag, Mc in abelian_groups_of_order(m):
        cands = bilinear_tables(D.group, Mc)
        if len(cands) == 0:
            continue
        ar = np.arange(Mc.order, dtype=np.uint8)
        bar_units = mask_indices(D.left_halo)
        rfilter = np.nonzero([any((c[e] == ar).all() for e in bar_units)
                              for c in cands])[0]
        if len(rfilter) == 0:
            continue
        autos = [a.astype(np.int64) for a in automorphisms(Mc)]
        work = [(cands.tobytes(), cands.shape, rfilter, r.start, r.stop,
                 D.lprod.astype(np.int64).tobytes(),
                 D.rprod.astype(np.int64).tobytes(), D.order,
                 D.key(), Mc.add.astype(np.uint8).tobytes(),
                 [a.tobytes() for a in autos])
                for r in _split(len(cands), jobs)]
        if jobs <= 1 or len(work) <= 1:
            results = [_module_chunk(w) for w in work]
        else:
            with multiprocessing.get_context("fork").Pool(jobs) as pool:
                results = pool.map(_module_chunk, work)
        found = {}
        for part in results:
            found.update(part)
        for idx, canon in enumerate(sorted(found)):
            lb, rb = found[canon]
            lact = np.frombuffer(lb, dtype=np.uint8).reshape(D.order, m)
            ract = np.frombuffer(rb, dtype=np.uint8).reshape(D.order, m)
            mod = require_module(D, Mc, lact.astype(Mc.add.dtype),
                                 ract.astype(Mc.add.dtype))
            rec = CensusRecord(
                kind="module", name=f"m{m}{ctag}-{idx:03d}", structure=mod,
                canonical_form=canon,
                invariants={
                    "carrier": ctag,
                    "order": m,
                    "halo": mask_size(mod.halo),
                    "three_irreducible": is_3_irreducible(mod),
                })
            records.append(rec)
    return records


# ---------------------------------------------------------------------------
# isomorphism testing and hom enumeration

def are_isomorphic(X, Y):
    """Isomorphism search for dirings or modules; None when there is none."""
    if isinstance(X, DiringTable) and isinstance(Y, DiringTable):
        return are_isomorphic_dirings(X, Y)
    if isinstance(X, LeftModuleTable) and isinstance(Y, LeftModuleTable):
        return are_isomorphic_modules(X, Y)
    raise TypeError("mismatched structure kinds")


def are_isomorphic_dirings(X: DiringTable, Y: DiringTable) -> DiringHom | None:
    """A bijective additive map preserving both products, if one exists.

    The bar-unit condition is automatic for such maps, so the search runs
    over additive isomorphisms with halo-size fingerprints as an early
    reject."""
    if X.order != Y.order:
        return None
    if (mask_size(X.left_halo) != mask_size(Y.left_halo)
            or mask_size(X.right_halo) != mask_size(Y.right_halo)
            or mask_size(X.additive_halo) != mask_size(Y.additive_halo)):
        return None
    for f in additive_isos(X.group, Y.group):
        if (f[X.lprod] == Y.lprod[f[:, None], f[None, :]]).all() and \
           (f[X.rprod] == Y.rprod[f[:, None], f[None, :]]).all():
            return DiringHom(source=X, target=Y, map=f)
    return None


def enumerate_diring_homs(X: DiringTable, Y: DiringTable,
                          iso_only: bool = False) -> list[DiringHom]:
    """All diring homomorphisms X -> Y (additive, both products, halo
    condition), capped at |X| <= 8."""
    if X.order > HOM_SOURCE_CAP:
        raise CapExceeded(f"hom enumeration capped at source order {HOM_SOURCE_CAP}")
    out = []
    for f in additive_homs(X.group, Y.group):
        if iso_only and len(set(f.tolist())) != X.order:
            continue
        if (f[X.lprod] != Y.lprod[f[:, None], f[None, :]]).any():
            continue
        if (f[X.rprod] != Y.rprod[f[:, None], f[None, :]]).any():
            continue
        mapped = 0
        for e in mask_indices(X.left_halo):
            mapped |= 1 << int(f[e])
        if not mapped & Y.left_halo:
            continue
        out.append(DiringHom(source=X, target=Y, map=f))
    return out


def enumerate_module_homs(M: LeftModuleTable, N: LeftModuleTable,
                          iso_only: bool = False) -> list[ModHom]:
    from .modules import hom_group
    homs = hom_group(M, N)
    if iso_only:
        homs = [h for h in homs if len(set(h.map.tolist())) == M.order
                and M.order == N.order]
    return homs
