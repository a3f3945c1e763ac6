import numpy as np
import pytest

from dirings.diring import (
    DiringTable,
    digroup_check,
    halo_identities_check,
    halos,
    induced_ring_product,
    opposite,
    verify_left_diring,
    verify_one_sided_diring,
)
from dirings.groups import mask_from, require_group
from dirings.validation import ValidationReport

from conftest import H_LPROD, H_RPROD, KLEIN_ADD


def test_h_is_a_left_diring_with_the_stated_halos(H):
    assert isinstance(H, DiringTable)
    assert H.side == "left"
    assert H.labels(H.left_halo) == ["a", "b"]
    assert H.labels(H.right_halo) == []
    assert H.labels(H.two_sided_halo) == []
    assert not H.is_diring()


def test_h_additive_halo_matches_direct_scan(H, klein):
    # independent scan of the bar-unit rows of the left product
    for e in (1, 2):
        scanned = mask_from(x for x in range(4) if H_LPROD[e][x] == 0)
        assert scanned == H.additive_halo
    assert H.labels(H.additive_halo) == ["0", "c"]
    assert halos(H) == (0b0110, 0, 0, 0b1001)


def test_unital_ring_is_a_diring(z4ring):
    assert isinstance(z4ring, DiringTable)
    assert z4ring.two_sided_halo == 0b0010  # the identity 1
    assert z4ring.additive_halo == 0b0001
    assert z4ring.is_diring()


def test_perturbed_h_reports_violations(klein):
    rprod = [row[:] for row in H_RPROD]
    rprod[1][1] = 2  # a *- a changed from a to b
    got = verify_left_diring(klein, H_LPROD, rprod)
    assert isinstance(got, ValidationReport)
    axioms = {v.axiom for v in got.violations}
    assert axioms & ({"D1", "D2", "D3", "D4", "D5"}
                     | {"dist-rprod-1st", "dist-rprod-2nd"})


def test_every_violated_law_carries_its_first_witness(klein):
    got = verify_left_diring(klein, H_LPROD, [[0] * 4] * 4)
    assert isinstance(got, ValidationReport)
    axioms = [v.axiom for v in got.violations]
    # D2 fails first in scan order, and the missing bar-unit is also listed
    assert axioms[0] == "D2"
    assert got.violations[0].witness == ("a", "a", "a")
    assert "bar-unit" in axioms


def test_distributivity_consequences(H, z4ring):
    # x*0 = 0 = 0*x and (-x)*y = x*(-y) = -(x*y) on valid structures
    for D in (H, z4ring):
        neg = D.group.neg
        for t in (D.lprod, D.rprod):
            assert not t[0].any() and not t[:, 0].any()
            for x in range(D.order):
                for y in range(D.order):
                    assert t[neg[x], y] == t[x, neg[y]] == neg[t[x, y]]


def test_opposite_h_is_right_sided(H):
    opp = opposite(H)
    assert opp.side == "right"
    assert opp.labels(opp.right_halo) == ["a", "b"]
    assert opp.left_halo == 0
    back = opposite(opp)
    assert (back.lprod == H.lprod).all() and (back.rprod == H.rprod).all()


def test_opposite_of_commutative_ring_is_itself(z4ring):
    opp = opposite(z4ring)
    assert (opp.lprod == z4ring.lprod).all()
    assert (opp.rprod == z4ring.rprod).all()


def test_additive_halo_two_condition_description(H, klein):
    # on a valid left diring, e -* x == 0 forces x *- e == 0 ...
    for e in (1, 2):
        for x in range(4):
            if H.lprod[e, x] == 0:
                assert H.rprod[x, e] == 0
    # ... but the converse can fail: both products x*y = (y if x in {a,b})
    proj = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 1, 2, 3], [0, 0, 0, 0]]
    P = verify_left_diring(klein, proj, proj)
    assert isinstance(P, DiringTable)
    assert P.additive_halo == 0b0001
    assert mask_from(x for x in range(4) if P.rprod[x, 1] == 0) == 0b1001


def test_induced_ring_product_on_a_ring(z4ring):
    table, rep = induced_ring_product(z4ring, 1)
    assert rep.ok
    assert (table == z4ring.lprod).all()  # all three terms collapse


def test_induced_ring_product_trivial():
    G = require_group(["0"], [[0]])
    D = verify_left_diring(G, [[0]], [[0]])
    table, rep = induced_ring_product(D, 0)
    assert rep.ok and table[0, 0] == 0


def test_induced_ring_product_requires_two_sided_unit(H):
    with pytest.raises(ValueError):
        induced_ring_product(H, 1)


def test_digroup_check_on_rings(z4ring, f2ring):
    for D in (z4ring, f2ring):
        e = 1
        rep = digroup_check(D, e)
        assert rep.ok, rep.summary()
        # both shifted additions reduce to + when e is the ring identity
        u = D.add[:, :]
        assert (D.add[np.arange(D.order)][:, :] == u).all()


def test_digroup_inverse_formulas(z4ring):
    D = z4ring
    e = 1
    neg = D.group.neg
    for x in range(D.order):
        z = int(neg[D.lprod[e, x]])
        assert int(D.add[z, D.lprod[e, x]]) == 0
        y = int(neg[D.rprod[x, e]])
        assert int(D.add[D.rprod[x, e], y]) == 0


def test_halo_identities_h(H, klein):
    rep = halo_identities_check(H)
    assert rep.ok, rep.summary()
    # independent instance of the bar-unit translate: {a} + {0,c} = {a,b}
    translate = {int(klein.add[1, h]) for h in (0, 3)}
    assert translate == {1, 2}


def test_halo_identities_degenerate_on_rings(z4ring, f2ring):
    for D in (z4ring, f2ring):
        assert D.additive_halo == 1
        assert halo_identities_check(D).ok


def test_right_sided_structures_reject_left_verification(H):
    opp = opposite(H)
    got = verify_left_diring(H.group, opp.lprod, opp.rprod)
    assert isinstance(got, ValidationReport)
    assert any(v.axiom == "bar-unit" for v in got.violations)


def test_one_sided_verifier_accepts_either_side(H):
    opp = opposite(H)
    again = verify_one_sided_diring(H.group, opp.lprod, opp.rprod)
    assert isinstance(again, DiringTable)
    assert again.side == "right"
