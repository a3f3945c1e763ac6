"""Finite abelian groups as validated Cayley tables.

Elements are dense indices 0..n-1; after validation the zero element is
always index 0, so bitmask subsets of different structures over the same
carrier are directly comparable.  Subsets (subgroups, ideals, halos, ...)
are plain Python ints used as bitmasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .validation import CapExceeded, ValidationReport

MAX_VALIDATED_ORDER = 24
SUBGROUP_ENUM_CAP = 24

DTYPE = np.int16


# ---------------------------------------------------------------------------
# bitmask helpers

def mask_from(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_size(mask: int) -> int:
    return mask.bit_count()


def mask_all(n: int) -> int:
    return (1 << n) - 1


def mask_key(mask: int) -> tuple:
    """Deterministic sort key: (size, sorted index tuple)."""
    idx = mask_indices(mask)
    return (len(idx), tuple(idx))


@dataclass(frozen=True, eq=False)
class FiniteAbelianGroup:
    """A finite abelian group given by its addition table.

    Invariants (established by validate_abelian_group): the table is
    associative, commutative, index 0 is the zero element, and `neg`
    maps each element to its additive inverse.
    """

    names: tuple[str, ...]
    add: np.ndarray   # (n, n) element indices
    neg: np.ndarray   # (n,)

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def zero(self) -> int:
        return 0

    def sub(self, x: int, y: int) -> int:
        return int(self.add[x, self.neg[y]])

    def label(self, i: int) -> str:
        return self.names[i]

    def labels(self, mask: int) -> list[str]:
        return [self.names[i] for i in mask_indices(mask)]

    def element_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != 0:
            acc = int(self.add[acc, x])
            k += 1
        return k

    def key(self) -> bytes:
        return self.add.astype(np.int32).tobytes()

    def __repr__(self) -> str:
        return f"FiniteAbelianGroup(order={self.order})"


def _first_bad(cube: np.ndarray):
    """Index of the lexicographically first False entry, or None."""
    bad = np.argwhere(~cube)
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in bad[0])


def validate_abelian_group(names, add_table) -> FiniteAbelianGroup | ValidationReport:
    """Check the abelian group axioms exhaustively.

    Returns the validated group (with the zero element reindexed to 0)
    or a report carrying the first violated axiom with a witness.
    """
    names = tuple(str(s) for s in names)
    n = len(names)
    report = ValidationReport(kind="abelian group")
    if n == 0 or len(set(names)) != n:
        report.add("elements", (), "element labels must be nonempty and distinct")
        return report
    if n > MAX_VALIDATED_ORDER:
        raise CapExceeded(f"order {n} exceeds validation cap {MAX_VALIDATED_ORDER}")

    add = np.asarray(add_table, dtype=DTYPE)
    if add.shape != (n, n):
        report.add("shape", (), f"addition table must be {n}x{n}, got {add.shape}")
        return report
    # closure: every entry is a declared element
    if add.min() < 0 or add.max() >= n:
        x, y = _first_bad((add >= 0) & (add < n))
        report.add("closure", (names[x], names[y]),
                   f"entry {int(add[x, y])} is not a declared element index")
        return report

    ar = np.arange(n, dtype=DTYPE)
    # identity
    zero = None
    for e in range(n):
        if (add[e] == ar).all() and (add[:, e] == ar).all():
            zero = e
            break
    if zero is None:
        report.add("identity", (), "no two-sided identity element")
        return report
    # inverses
    for x in range(n):
        if not (add[x] == zero).any():
            report.add("inverse", (names[x],), f"no inverse for {names[x]}")
            return report
    # associativity: (x+y)+z == x+(y+z)
    lhs = add[add]                      # [x,y,z] = add[add[x,y], z]
    rhs = np.take(add, add, axis=1)     # [x,y,z] = add[x, add[y,z]]
    w = _first_bad(lhs == rhs)
    if w is not None:
        x, y, z = w
        report.add("associativity", (names[x], names[y], names[z]),
                   f"({names[x]}+{names[y]})+{names[z]} != {names[x]}+({names[y]}+{names[z]})")
        return report
    # commutativity
    w = _first_bad(add == add.T)
    if w is not None:
        x, y = w
        report.add("commutativity", (names[x], names[y]),
                   f"{names[x]}+{names[y]} != {names[y]}+{names[x]}")
        return report

    # reindex so the zero element sits at index 0
    if zero != 0:
        perm = [zero] + [i for i in range(n) if i != zero]
        inv = np.empty(n, dtype=DTYPE)
        for new, old in enumerate(perm):
            inv[old] = new
        add = inv[add[np.ix_(perm, perm)]]
        names = tuple(names[old] for old in perm)

    neg = np.empty(n, dtype=DTYPE)
    for x in range(n):
        neg[x] = int(np.nonzero(add[x] == 0)[0][0])
    add.flags.writeable = False
    neg.flags.writeable = False
    return FiniteAbelianGroup(names=names, add=add, neg=neg)


def require_group(names, add_table) -> FiniteAbelianGroup:
    """validate_abelian_group, raising on failure (test/fixture helper)."""
    got = validate_abelian_group(names, add_table)
    if isinstance(got, ValidationReport):
        raise ValueError(got.summary())
    return got


# ---------------------------------------------------------------------------
# subgroups and subset arithmetic

def subgroup_closure(G: FiniteAbelianGroup, mask: int) -> int:
    """Smallest subgroup containing the masked elements."""
    mask |= 1  # zero element
    frontier = mask_indices(mask)
    add = G.add
    while frontier:
        x = frontier.pop()
        for y in mask_indices(mask):
            z = int(add[x, y])
            if not (mask >> z) & 1:
                mask |= 1 << z
                frontier.append(z)
    return mask


def is_subgroup(G: FiniteAbelianGroup, mask: int) -> bool:
    if not mask & 1:
        return False
    idx = mask_indices(mask)
    for x in idx:
        for y in idx:
            if not (mask >> int(G.add[x, y])) & 1:
                return False
    return True


def enumerate_subgroups(G: FiniteAbelianGroup) -> list[int]:
    """All subgroups, by closure-generation, sorted by (size, index tuple)."""
    if G.order > SUBGROUP_ENUM_CAP:
        raise CapExceeded(f"order {G.order} exceeds subgroup enumeration cap")
    found = {1}  # trivial subgroup
    frontier = [1]
    while frontier:
        s = frontier.pop()
        for x in range(1, G.order):
            if (s >> x) & 1:
                continue
            bigger = subgroup_closure(G, s | (1 << x))
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=mask_key)


def set_op(ctx, A: int, B: int, op: str) -> int:
    """Elementwise subset operation {a op b | a in A, b in B}.

    `ctx` is a group for op '+' and a diring for 'lprod'/'rprod'.
    """
    if op == "+":
        table = ctx.add if isinstance(ctx, FiniteAbelianGroup) else ctx.group.add
    elif op in ("lprod", "rprod"):
        if isinstance(ctx, FiniteAbelianGroup):
            raise TypeError("product set operation requested on a bare group")
        table = ctx.lprod if op == "lprod" else ctx.rprod
    else:
        raise ValueError(f"unknown set operation {op!r}")
    out = 0
    for a in mask_indices(A):
        for b in mask_indices(B):
            out |= 1 << int(table[a, b])
    return out


def congruent_mod(G: FiniteAbelianGroup, x: int, y: int, A: int) -> bool:
    """True iff x - y lies in the subgroup A."""
    if not is_subgroup(G, A):
        raise ValueError("modulus subset is not a subgroup")
    return bool((A >> G.sub(x, y)) & 1)


def quotient_group(G: FiniteAbelianGroup, N: int):
    """Quotient by a subgroup.

    Returns (quotient group, projection array).  Coset representatives are
    the minimal element indices, and cosets are ordered by representative,
    which puts the zero coset at index 0.
    """
    if not is_subgroup(G, N):
        raise ValueError("quotient modulus is not a subgroup")
    n = G.order
    coset_of = np.full(n, -1, dtype=DTYPE)
    reps: list[int] = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        c = len(reps)
        reps.append(x)
        for h in mask_indices(N):
            coset_of[int(G.add[x, h])] = c
    q = len(reps)
    qadd = np.empty((q, q), dtype=DTYPE)
    for i, r in enumerate(reps):
        qadd[i] = coset_of[G.add[r, reps]]
    qnames = tuple(G.names[r] for r in reps)
    Q = require_group(qnames, qadd)
    # require_group may not reorder: zero coset is already index 0
    proj = coset_of.copy()
    proj.flags.writeable = False
    return Q, proj


# ---------------------------------------------------------------------------
# additive maps between groups

def generating_sequence(G: FiniteAbelianGroup) -> list[int]:
    """Greedy generating sequence: new generators in increasing index order."""
    gens: list[int] = []
    span = 1
    for x in range(1, G.order):
        if not (span >> x) & 1:
            gens.append(x)
            span = subgroup_closure(G, span | (1 << x))
    return gens


def _span_exprs(G: FiniteAbelianGroup, gens: list[int]):
    """BFS parents: for each element a chain back to 0 through generators."""
    n = G.order
    parent = np.full(n, -1, dtype=np.int64)
    via = np.full(n, -1, dtype=np.int64)
    order = [0]
    seen = {0}
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        for gi, g in enumerate(gens):
            y = int(G.add[x, g])
            if y not in seen:
                seen.add(y)
                parent[y] = x
                via[y] = gi
                order.append(y)
    assert len(order) == n
    return order, parent, via


def additive_homs(G: FiniteAbelianGroup, H: FiniteAbelianGroup) -> list[np.ndarray]:
    """All group homomorphisms G -> H as index vectors, deterministic order."""
    gens = generating_sequence(G)
    order, parent, via = _span_exprs(G, gens)
    gen_orders = [G.element_order(g) for g in gens]
    h_orders = [H.element_order(x) for x in range(H.order)]
    choices = [
        [x for x in range(H.order) if gen_orders[i] % h_orders[x] == 0]
        for i in range(len(gens))
    ]
    out = []
    n = G.order
    for images in itertools.product(*choices):
        f = np.zeros(n, dtype=DTYPE)
        for y in order[1:]:
            f[y] = H.add[f[parent[y]], images[via[y]]]
        # full additivity check rejects ill-defined assignments
        if (f[G.add] == H.add[f[:, None], f[None, :]]).all():
            f.flags.writeable = False
            out.append(f)
    return out


def automorphisms(G: FiniteAbelianGroup) -> list[np.ndarray]:
    return [f for f in additive_homs(G, G) if len(set(f.tolist())) == G.order]


def additive_isos(G: FiniteAbelianGroup, H: FiniteAbelianGroup) -> list[np.ndarray]:
    if G.order != H.order:
        return []
    return [f for f in additive_homs(G, H) if len(set(f.tolist())) == G.order]


# ---------------------------------------------------------------------------
# stock groups

def cyclic_group(n: int) -> FiniteAbelianGroup:
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    return require_group([str(i) for i in range(n)], add)


def group_product(G: FiniteAbelianGroup, H: FiniteAbelianGroup) -> FiniteAbelianGroup:
    """Direct product with composite labels '(g,h)'."""
    n1, n2 = G.order, H.order
    add = (G.add[:, None, :, None].astype(np.int64) * n2
           + H.add[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    names = [f"({a},{b})" for a in G.names for b in H.names]
    return require_group(names, add)


def _relabel(G: FiniteAbelianGroup) -> FiniteAbelianGroup:
    return require_group([str(i) for i in range(G.order)], G.add)


def abelian_groups_of_order(n: int) -> list[tuple[str, FiniteAbelianGroup]]:
    """All abelian groups of order n up to isomorphism, as (tag, group).

    Tags name the cyclic factors, e.g. 'z4' and 'z2xz2' at order 4.
    Element labels are plain indices '0'..'n-1'.
    """
    def partitions(k):
        if k == 0:
            yield ()
            return
        for first in range(k, 0, -1):
            for rest in partitions(k - first):
                if not rest or rest[0] <= first:
                    yield (first,) + rest

    factors = {}
    m = n
    p = 2
    while m > 1:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1

    per_prime = []
    for p in sorted(factors):
        per_prime.append([tuple(p ** e for e in part)
                          for part in partitions(factors[p])])
    out = []
    for combo in itertools.product(*per_prime):
        # invariant factors: align the prime-power lists and multiply
        width = max((len(g) for g in combo), default=0)
        cyc = []
        for k in range(width):
            d = 1
            for grouping in combo:
                if k < len(grouping):
                    d *= grouping[k]
            cyc.append(d)
        if not cyc:
            cyc = [1]
        G = cyclic_group(cyc[0])
        for c in cyc[1:]:
            G = group_product(G, cyclic_group(c))
        tag = "x".join(f"z{c}" for c in cyc)
        out.append((tag, _relabel(G)))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out
