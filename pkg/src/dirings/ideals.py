"""Ideals, quotient dirings, subdirings, and diring homomorphisms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diring import DiringTable, verify_one_sided_diring
from .groups import (
    enumerate_subgroups,
    is_subgroup,
    mask_all,
    mask_from,
    mask_indices,
    quotient_group,
    require_group,
)
from .validation import ValidationReport


@dataclass(frozen=True)
class IdealHandle:
    mask: int
    kind: str  # "two_sided" | "left"


@dataclass(frozen=True, eq=False)
class DiringHom:
    """An element-index map between two dirings."""

    source: DiringTable
    target: DiringTable
    map: np.ndarray

    def __call__(self, x: int) -> int:
        return int(self.map[x])


def is_ideal(D: DiringTable, S: int, kind: str):
    """Subgroup plus absorption checks.  Returns (ok, witness or None).

    A two-sided ideal absorbs both products on both sides; a left ideal
    is closed under every left multiplication a -* s and a *- s.
    """
    if kind not in ("two_sided", "left"):
        raise ValueError(f"unknown ideal kind {kind!r}")
    if not is_subgroup(D.group, S):
        return False, ("subgroup", ())
    idx = mask_indices(S)
    everything = range(D.order)
    for opname, table in (("lprod", D.lprod), ("rprod", D.rprod)):
        for a in everything:
            for s in idx:
                if not (S >> int(table[a, s])) & 1:
                    return False, (f"absorb-{opname}-left",
                                   (D.label(a), D.label(s)))
        if kind == "left":
            continue
        for s in idx:
            for a in everything:
                if not (S >> int(table[s, a])) & 1:
                    return False, (f"absorb-{opname}-right",
                                   (D.label(s), D.label(a)))
    return True, None


def enumerate_ideals(D: DiringTable, kind: str) -> list[IdealHandle]:
    """All ideals of the given kind, by filtering the subgroup lattice."""
    return [IdealHandle(S, kind) for S in enumerate_subgroups(D.group)
            if is_ideal(D, S, kind)[0]]


def simplicity_class(D: DiringTable) -> str:
    """'three_simple', 'two_simple', or 'neither'.

    three_simple: nonzero additive halo and no ideals beyond 0, halo, R.
    two_simple: exactly two ideals (which forces a zero additive halo).
    """
    ideals = {h.mask for h in enumerate_ideals(D, "two_sided")}
    full = mask_all(D.order)
    hp = D.additive_halo
    if hp != 1 and ideals == {1, hp, full}:
        return "three_simple"
    if len(ideals) == 2:
        assert hp == 1, "a 2-simple diring must have zero additive halo"
        return "two_simple"
    return "neither"


def quotient_diring(D: DiringTable, I: IdealHandle):
    """Quotient by a two-sided ideal, with the canonical projection.

    Product well-definedness on cosets is re-verified by scanning all
    representative pairs rather than trusted from the ideal property.
    """
    if I.kind != "two_sided":
        raise ValueError("quotient requires a two-sided ideal")
    ok, witness = is_ideal(D, I.mask, "two_sided")
    if not ok:
        raise ValueError(f"not a two-sided ideal: {witness}")
    Q, proj = quotient_group(D.group, I.mask)
    reps = [int(np.nonzero(proj == c)[0][0]) for c in range(Q.order)]
    qlprod = proj[D.lprod[np.ix_(reps, reps)]]
    qrprod = proj[D.rprod[np.ix_(reps, reps)]]
    # representative independence of both coset products
    assert (proj[D.lprod] == qlprod[proj[:, None], proj[None, :]]).all()
    assert (proj[D.rprod] == qrprod[proj[:, None], proj[None, :]]).all()
    got = verify_one_sided_diring(Q, qlprod, qrprod, require_side=D.side)
    assert isinstance(got, DiringTable), got.summary()
    phi = DiringHom(source=D, target=got, map=proj)
    rep = verify_hom(phi)
    assert rep.ok, rep.summary()
    return got, phi


def verify_hom(phi: DiringHom) -> ValidationReport:
    """The three homomorphism conditions: additivity, both products, and
    nonempty intersection of the mapped left halo with the target's."""
    D, T, f = phi.source, phi.target, phi.map
    report = ValidationReport(kind="diring homomorphism")
    if (f[D.group.add] != T.group.add[f[:, None], f[None, :]]).any():
        bad = np.argwhere(f[D.group.add] != T.group.add[f[:, None], f[None, :]])[0]
        report.add("hom-add", tuple(D.label(int(i)) for i in bad),
                   "does not preserve addition")
    for name, s_t, t_t in (("lprod", D.lprod, T.lprod), ("rprod", D.rprod, T.rprod)):
        if (f[s_t] != t_t[f[:, None], f[None, :]]).any():
            bad = np.argwhere(f[s_t] != t_t[f[:, None], f[None, :]])[0]
            report.add(f"hom-{name}", tuple(D.label(int(i)) for i in bad),
                       f"does not preserve {name}")
    mapped = mask_from(int(f[e]) for e in mask_indices(D.left_halo))
    if not mapped & T.left_halo:
        report.add("hom-halo", (),
                   "image of the left halo misses the target's left halo")
    return report


def kernel(phi: DiringHom) -> IdealHandle:
    mask = mask_from(a for a in range(phi.source.order) if phi.map[a] == 0)
    ok, witness = is_ideal(phi.source, mask, "two_sided")
    assert ok, f"kernel fails the ideal check: {witness}"
    return IdealHandle(mask, "two_sided")


def image(phi: DiringHom) -> int:
    return mask_from(int(v) for v in phi.map)


def is_subdiring(D: DiringTable, S: int) -> bool:
    """Additive subgroup, closed under both products, meeting the left halo."""
    if not is_subgroup(D.group, S):
        return False
    idx = mask_indices(S)
    for table in (D.lprod, D.rprod):
        for x in idx:
            for y in idx:
                if not (S >> int(table[x, y])) & 1:
                    return False
    return bool(S & D.left_halo)


def subdiring_table(D: DiringTable, S: int) -> DiringTable:
    """The restriction of D to a subdiring, reindexed."""
    if not is_subdiring(D, S):
        raise ValueError("not a subdiring")
    idx = mask_indices(S)
    back = {old: new for new, old in enumerate(idx)}
    remap = np.vectorize(back.__getitem__, otypes=[D.group.add.dtype])
    sub_group = require_group([D.label(i) for i in idx],
                              remap(D.group.add[np.ix_(idx, idx)]))
    got = verify_one_sided_diring(sub_group,
                                  remap(D.lprod[np.ix_(idx, idx)]),
                                  remap(D.rprod[np.ix_(idx, idx)]),
                                  require_side=D.side)
    assert isinstance(got, DiringTable), got.summary()
    return got


def first_iso_check(phi: DiringHom) -> bool:
    """source/kernel is isomorphic to the image, via the induced map."""
    rep = verify_hom(phi)
    if not rep.ok:
        raise ValueError("not a homomorphism")
    ker = kernel(phi)
    Q, proj = quotient_diring(phi.source, ker)
    img_mask = image(phi)
    img = subdiring_table(phi.target, img_mask)
    img_index = {old: new for new, old in enumerate(mask_indices(img_mask))}
    # induced map: coset of a  ->  phi(a), well defined by the kernel property
    induced = np.zeros(Q.order, dtype=phi.map.dtype)
    for a in range(phi.source.order):
        induced[proj.map[a]] = img_index[int(phi.map[a])]
    if len(set(induced.tolist())) != Q.order or Q.order != img.order:
        return False
    bridge = DiringHom(source=Q, target=img, map=induced)
    return verify_hom(bridge).ok


def rng_with_left_identity_check(D: DiringTable, I: IdealHandle) -> bool:
    """When the ideal contains the additive halo, the quotient's two
    products coincide and a left identity exists."""
    Q, _ = quotient_diring(D, I)
    if D.additive_halo & ~I.mask:
        return True  # nothing claimed
    return (Q.lprod == Q.rprod).all() and Q.left_halo != 0
