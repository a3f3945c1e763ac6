"""One-sided dirings: two bilinear products forming a dimonoid over an
abelian group, with bar-unit halos and the induced ring / digroup structure.

The two products are written lprod (x -* y) and rprod (x *- y).  The five
dimonoid laws, in the numbering D1..D5 used throughout this package:

    D1  (x -* y) -* z  ==  x -* (y -* z)
    D2  x -* (y *- z)  ==  x -* (y -* z)
    D3  (x *- y) -* z  ==  x *- (y -* z)
    D4  (x -* y) *- z  ==  (x *- y) *- z
    D5  x *- (y *- z)  ==  (x *- y) *- z

A left bar-unit is an element e with e *- x == x for every x; a right
bar-unit satisfies x -* e == x.  The additive halo of a left-sided
structure is {x | e -* x == 0}, independent of the bar-unit choice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import (
    FiniteAbelianGroup,
    MAX_VALIDATED_ORDER,
    _first_bad,
    mask_all,
    mask_from,
    mask_indices,
    set_op,
)
from .validation import CapExceeded, ValidationReport

# structures above this order skip the cubic axiom scans (used only for
# componentwise-constructed direct products, where the laws are inherited)
FULL_SCAN_CAP = 64


@dataclass(frozen=True, eq=False)
class DiringTable:
    """A validated one-sided diring.

    `side` records which defining bar-unit exists ("left" or "right");
    a structure with a two-sided bar-unit is recorded as left-sided.
    All four halos are cached as bitmasks.
    """

    group: FiniteAbelianGroup
    lprod: np.ndarray
    rprod: np.ndarray
    side: str
    left_halo: int
    right_halo: int
    two_sided_halo: int
    additive_halo: int

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def names(self) -> tuple[str, ...]:
        return self.group.names

    @property
    def add(self) -> np.ndarray:
        return self.group.add

    def is_diring(self) -> bool:
        """True when a two-sided bar-unit exists."""
        return self.two_sided_halo != 0

    def label(self, i: int) -> str:
        return self.group.names[i]

    def labels(self, mask: int) -> list[str]:
        return self.group.labels(mask)

    def key(self) -> bytes:
        return (self.group.key()
                + self.lprod.astype(np.int32).tobytes()
                + self.rprod.astype(np.int32).tobytes())

    def __repr__(self) -> str:
        return f"DiringTable(order={self.order}, side={self.side!r})"


# ---------------------------------------------------------------------------
# axiom scans

def _cube_ll(t: np.ndarray, u: np.ndarray) -> np.ndarray:
    """[x,y,z] = t[u[x,y], z]"""
    return t[u]


def _cube_rr(t: np.ndarray, u: np.ndarray) -> np.ndarray:
    """[x,y,z] = t[x, u[y,z]]"""
    return np.take(t, u, axis=1)


def dimonoid_cubes(lprod: np.ndarray, rprod: np.ndarray):
    """Boolean cubes for D1..D5, keyed by axiom id."""
    return {
        "D1": _cube_ll(lprod, lprod) == _cube_rr(lprod, lprod),
        "D2": _cube_rr(lprod, rprod) == _cube_rr(lprod, lprod),
        "D3": _cube_ll(lprod, rprod) == _cube_rr(rprod, lprod),
        "D4": _cube_ll(rprod, lprod) == _cube_ll(rprod, rprod),
        "D5": _cube_rr(rprod, rprod) == _cube_ll(rprod, rprod),
    }


def dimonoid_violations(group, lprod, rprod, report: ValidationReport) -> None:
    """Append each violated dimonoid law with its first witness."""
    for axiom, cube in dimonoid_cubes(lprod, rprod).items():
        w = _first_bad(cube)
        if w is not None:
            x, y, z = (group.names[i] for i in w)
            report.add(axiom, (x, y, z), "dimonoid law fails")


def distributivity_violations(group, table, which: str, report: ValidationReport) -> None:
    """Both distributive laws for one product table."""
    add = group.add
    left = np.take(table, add, axis=1) == add[table[:, :, None], table[:, None, :]]
    w = _first_bad(left)
    if w is not None:
        x, y, z = (group.names[i] for i in w)
        report.add(f"dist-{which}-2nd", (x, y, z),
                   f"x {which} (y+z) != x {which} y + x {which} z")
    right = table[add] == add[table[:, None, :], table[None, :, :]]
    w = _first_bad(right)
    if w is not None:
        y, z, x = (group.names[i] for i in w)
        report.add(f"dist-{which}-1st", (y, z, x),
                   f"(y+z) {which} x != y {which} x + z {which} x")


def _halo_masks(group: FiniteAbelianGroup, lprod, rprod):
    n = group.order
    ar = np.arange(n, dtype=lprod.dtype)
    left = mask_from(a for a in range(n) if (rprod[a] == ar).all())
    right = mask_from(a for a in range(n) if (lprod[:, a] == ar).all())
    return left, right, left & right


def _additive_halo(group, lprod, rprod, side, left, right, report=None) -> int:
    """Additive halo, checked identical across every defining bar-unit.

    Also checks the two-condition description: for a left-sided structure,
    e -* x == 0 implies x *- e == 0 (so the halo equals
    {x | e -* x == 0 and x *- e == 0}); the converse implication does not
    hold in general and is not required.
    """
    n = group.order
    masks = []
    if side == "left":
        for e in mask_indices(left):
            masks.append(mask_from(x for x in range(n) if lprod[e, x] == 0))
    else:
        for e in mask_indices(right):
            masks.append(mask_from(x for x in range(n) if rprod[x, e] == 0))
    halo = masks[0]
    if report is not None:
        if any(m != halo for m in masks[1:]):
            report.add("additive-halo-choice", (),
                       "additive halo depends on the bar-unit choice")
            return halo
        for e in mask_indices(left if side == "left" else right):
            for x in mask_indices(halo):
                other = rprod[x, e] if side == "left" else lprod[e, x]
                if other != 0:
                    report.add("additive-halo-two-sided", (group.names[x], group.names[e]),
                               "halo element not annihilated on the opposite side")
    return halo


def verify_one_sided_diring(group: FiniteAbelianGroup, lprod, rprod,
                            require_side: str | None = None,
                            full_scan: bool | None = None
                            ) -> DiringTable | ValidationReport:
    """Exhaustively verify the one-sided diring axioms.

    Checks table shape and closure, the four distributive laws, the five
    dimonoid laws, and bar-unit existence on the required side (either
    side if `require_side` is None).  Every violated law is reported with
    its lexicographically first witness.
    """
    n = group.order
    report = ValidationReport(kind="one-sided diring")
    lprod = np.ascontiguousarray(lprod, dtype=group.add.dtype)
    rprod = np.ascontiguousarray(rprod, dtype=group.add.dtype)
    for name, t in (("lprod", lprod), ("rprod", rprod)):
        if t.shape != (n, n):
            report.add("shape", (), f"{name} must be {n}x{n}, got {t.shape}")
            return report
        if t.min() < 0 or t.max() >= n:
            report.add("closure", (), f"{name} has an out-of-range entry")
            return report

    if full_scan is None:
        full_scan = n <= FULL_SCAN_CAP
    if full_scan:
        if n > MAX_VALIDATED_ORDER:
            raise CapExceeded(f"order {n} exceeds validation cap")
        distributivity_violations(group, lprod, "lprod", report)
        distributivity_violations(group, rprod, "rprod", report)
        dimonoid_violations(group, lprod, rprod, report)

    left, right, two = _halo_masks(group, lprod, rprod)
    side = None
    if require_side in (None, "left") and left:
        side = "left"
    elif require_side in (None, "right") and right:
        side = "right"
    if side is None:
        want = require_side or "left or right"
        report.add("bar-unit", (), f"no {want} bar-unit exists")
    if not report.ok:
        return report

    additive = _additive_halo(group, lprod, rprod, side, left, right, report)
    if not report.ok:
        return report
    lprod.flags.writeable = False
    rprod.flags.writeable = False
    return DiringTable(group=group, lprod=lprod, rprod=rprod, side=side,
                       left_halo=left, right_halo=right, two_sided_halo=two,
                       additive_halo=additive)


def verify_left_diring(group, lprod, rprod) -> DiringTable | ValidationReport:
    return verify_one_sided_diring(group, lprod, rprod, require_side="left")


def require_left_diring(group, lprod, rprod) -> DiringTable:
    got = verify_left_diring(group, lprod, rprod)
    if isinstance(got, ValidationReport):
        raise ValueError(got.summary())
    return got


def from_ring(group: FiniteAbelianGroup, mult) -> DiringTable:
    """A unital ring viewed as a diring (both products equal)."""
    return require_left_diring(group, mult, mult)


def halos(D: DiringTable) -> tuple[int, int, int, int]:
    """(left, right, two-sided, additive) halo masks, re-derived and checked."""
    left, right, two = _halo_masks(D.group, D.lprod, D.rprod)
    report = ValidationReport(kind="halos")
    additive = _additive_halo(D.group, D.lprod, D.rprod, D.side, left, right, report)
    assert report.ok, report.summary()
    assert (left, right, two, additive) == (
        D.left_halo, D.right_halo, D.two_sided_halo, D.additive_halo)
    return left, right, two, additive


def opposite(D: DiringTable) -> DiringTable:
    """The opposite one-sided diring: products swapped and transposed."""
    got = verify_one_sided_diring(
        D.group, np.ascontiguousarray(D.rprod.T), np.ascontiguousarray(D.lprod.T),
        require_side="right" if D.side == "left" else "left")
    assert isinstance(got, DiringTable)
    assert got.left_halo == D.right_halo and got.right_halo == D.left_halo
    return got


def induced_ring_product(D: DiringTable, e: int):
    """The associative product x*y = x*-y + x-*y - (x*-e)-*y for a
    two-sided bar-unit e, making the carrier a unital ring with identity e.

    Returns (product table, ring validation report).  The two readings of
    the three-factor term, (x*-e)-*y and x*-(e-*y), are asserted equal.
    """
    if not (D.two_sided_halo >> e) & 1:
        raise ValueError(f"{D.label(e)} is not a two-sided bar-unit")
    group, lprod, rprod = D.group, D.lprod, D.rprod
    add, neg = group.add, group.neg
    xe = rprod[:, e]
    t1 = lprod[xe]                           # (x *- e) -* y
    alt = np.take(rprod, lprod[e], axis=1)   # x *- (e -* y)
    assert (t1 == alt).all(), "parenthesization ambiguity is not harmless here"
    bullet = add[add[rprod, lprod], neg[t1]]

    report = ValidationReport(kind="induced ring")
    ar = np.arange(D.order, dtype=add.dtype)
    if not ((bullet[e] == ar).all() and (bullet[:, e] == ar).all()):
        report.add("ring-identity", (D.label(e),), "bar-unit is not a ring identity")
    w = _first_bad(_cube_ll(bullet, bullet) == _cube_rr(bullet, bullet))
    if w is not None:
        report.add("ring-associativity", tuple(D.label(i) for i in w),
                   "induced product is not associative")
    distributivity_violations(group, bullet, "ring", report)
    return bullet, report


def digroup_check(D: DiringTable, e: int) -> ValidationReport:
    """Check that the shifted additions u(x,y) = x + e-*y and
    v(x,y) = x*-e + y form a digroup over the bar-unit 0.

    Digroup is read with one-sided inverses: every x needs some z with
    u(z,x) == 0 and some y with v(x,y) == 0 (the two need not agree).
    The halo of this digroup must equal the additive halo.
    """
    if not (D.two_sided_halo >> e) & 1:
        raise ValueError(f"{D.label(e)} is not a two-sided bar-unit")
    group = D.group
    add, neg = group.add, group.neg
    n = D.order
    u = np.take(add, D.lprod[e], axis=1)      # x + (e -* y)
    v = add[D.rprod[:, e]]                    # (x *- e) + y
    report = ValidationReport(kind="digroup (one-sided-inverse reading)")
    dimonoid_violations(group, u, v, report)
    ar = np.arange(n, dtype=add.dtype)
    if not (v[0] == ar).all() or not (u[:, 0] == ar).all():
        report.add("digroup-bar-unit", ("0",), "0 is not a two-sided bar-unit")
    for x in range(n):
        z = int(neg[D.lprod[e, x]])
        if u[z, x] != 0:
            report.add("digroup-left-inverse", (D.label(x),),
                       "-(e -* x) is not a left inverse")
        if not (u[:, x] == 0).any():
            report.add("digroup-left-inverse", (D.label(x),), "no left inverse")
        y = int(neg[D.rprod[x, e]])
        if v[x, y] != 0:
            report.add("digroup-right-inverse", (D.label(x),),
                       "-(x *- e) is not a right inverse")
        if not (v[x] == 0).any():
            report.add("digroup-right-inverse", (D.label(x),), "no right inverse")
    halo = mask_from(a for a in range(n)
                     if (v[a] == ar).all() and (u[:, a] == ar).all())
    if halo != D.additive_halo:
        report.add("digroup-halo", (),
                   f"digroup halo {D.labels(halo)} != additive halo "
                   f"{D.labels(D.additive_halo)}")
    return report


def halo_identities_check(D: DiringTable) -> ValidationReport:
    """The five basic halo identities of a left-sided structure:

    1. any two products of the same pair agree modulo the additive halo;
    2. halo *- R == 0 == R -* halo;
    3. the additive halo absorbs both products on both sides;
    4. e + halo consists of left bar-units, for every left bar-unit e;
    5. with a two-sided bar-unit e, e + halo is exactly the two-sided halo.
    """
    assert D.side == "left"
    group, lprod, rprod = D.group, D.lprod, D.rprod
    n = D.order
    hp = D.additive_halo
    report = ValidationReport(kind="halo identities")

    diff = group.add[lprod, group.neg[rprod]]
    w = _first_bad(np.array([[bool((hp >> diff[x, y]) & 1) for y in range(n)]
                             for x in range(n)]))
    if w is not None:
        report.add("halo-congruence", tuple(D.label(i) for i in w),
                   "the two products differ by a non-halo element")

    full = mask_all(n)
    if set_op(D, hp, full, "rprod") != 1:
        report.add("halo-annihilation", (), "halo *- R != 0")
    if set_op(D, full, hp, "lprod") != 1:
        report.add("halo-annihilation", (), "R -* halo != 0")

    for op in ("lprod", "rprod"):
        if set_op(D, hp, full, op) & ~hp:
            report.add("halo-absorption", (), f"halo {op} R not inside the halo")
        if set_op(D, full, hp, op) & ~hp:
            report.add("halo-absorption", (), f"R {op} halo not inside the halo")

    for e in mask_indices(D.left_halo):
        translate = mask_from(int(group.add[e, h]) for h in mask_indices(hp))
        if translate & ~D.left_halo:
            report.add("bar-unit-translate", (D.label(e),),
                       "e + halo contains a non-bar-unit")

    if D.two_sided_halo:
        for e in mask_indices(D.two_sided_halo):
            translate = mask_from(int(group.add[e, h]) for h in mask_indices(hp))
            if translate != D.two_sided_halo:
                report.add("two-sided-translate", (D.label(e),),
                           "e + halo != two-sided halo")
    return report
