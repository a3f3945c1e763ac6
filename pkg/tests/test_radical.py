import numpy as np
import pytest

from dirings.census import census_all_dirings
from dirings.diring import DiringTable
from dirings.groups import mask_all, require_group
from dirings.ideals import IdealHandle
from dirings.modules import regular_module, require_module
from dirings.radical import (
    annihilator,
    colon_ideal,
    deflate_module,
    direct_product,
    inflate_module,
    is_3_primitive,
    is_3_semi_primitive,
    is_faithful,
    rad3,
    radical_quotient_check,
    semi_primitivity_characterizations,
    subdirect_product_verify,
    three_maximal_left_ideals,
    three_primitive_ideals,
)
from dirings.ideals import DiringHom


def test_annihilator_of_zero_module(H):
    Z = require_module(H, require_group(["0"], [[0]]),
                       np.zeros((4, 1), dtype=int), np.zeros((4, 1), dtype=int))
    assert annihilator(H, Z) == mask_all(4)
    assert not is_faithful(H, Z)


def test_annihilator_of_regular_module(H):
    # rows 0 and c of both product tables vanish, rows a and b do not
    reg = regular_module(H)
    assert annihilator(H, reg) == 0b1001
    assert not is_faithful(H, reg)


def test_colon_ideal_whole(H):
    assert colon_ideal(H, IdealHandle(mask_all(4), "left")) == mask_all(4)


def test_colon_ideal_both_routes(H):
    # the dual-route comparison runs inside; freeze the value for {0,b}
    assert colon_ideal(H, IdealHandle(0b0101, "left")) == 0b1001


def test_no_three_maximal_left_ideals_in_h(H):
    assert three_maximal_left_ideals(H) == []
    assert three_primitive_ideals(H) == []
    assert not is_3_primitive(H)[0]


def test_rad3_h(H):
    rep = rad3(H)
    assert rep.rad3 == mask_all(4)
    assert rep.family_empty and rep.agrees
    assert not is_3_semi_primitive(H)


def test_rad3_trivial():
    D = DiringTable
    from dirings.diring import verify_left_diring
    T = verify_left_diring(require_group(["0"], [[0]]), [[0]], [[0]])
    rep = rad3(T)
    assert rep.rad3 == 1 and rep.agrees


def test_f2_is_not_semi_primitive(f2ring):
    rep = rad3(f2ring)
    assert rep.family_empty
    assert rep.rad3 == mask_all(2)
    assert not is_3_semi_primitive(f2ring)


def test_direct_product_halos(H):
    P, projections = direct_product([H, H])
    assert P.order == 16
    # componentwise halos: {a,b} x {a,b} and {0,c} x {0,c}
    left = 0
    for i in (1, 2):
        for j in (1, 2):
            left |= 1 << (i * 4 + j)
    add = 0
    for i in (0, 3):
        for j in (0, 3):
            add |= 1 << (i * 4 + j)
    assert P.left_halo == left
    assert P.additive_halo == add
    assert len(projections) == 2


def test_direct_product_single_factor(H):
    P, _ = direct_product([H])
    assert P.order == 4
    from dirings.census import are_isomorphic
    assert are_isomorphic(P, H) is not None


def test_subdirect_diagonal(H):
    P, _ = direct_product([H, H])
    diag = np.array([i * 4 + i for i in range(4)], dtype=P.add.dtype)
    phi = DiringHom(source=H, target=P, map=diag)
    assert subdirect_product_verify(H, [H, H], phi).ok


def test_subdirect_x_to_x0_fails(H):
    P, _ = direct_product([H, H])
    emb = np.array([i * 4 for i in range(4)], dtype=P.add.dtype)
    phi = DiringHom(source=H, target=P, map=emb)
    rep = subdirect_product_verify(H, [H, H], phi)
    assert not rep.ok
    axioms = {v.axiom for v in rep.violations}
    assert "subdirect-onto" in axioms or "hom-halo" in axioms


def test_semi_primitivity_characterizations_h(H):
    rep = semi_primitivity_characterizations(H)
    assert (rep.semi_primitive, rep.faithful_reducible, rep.subdirect) == \
        (False, False, False)
    assert rep.agree


def test_semi_primitivity_characterizations_trivial_excluded():
    from dirings.diring import verify_left_diring
    T = verify_left_diring(require_group(["0"], [[0]]), [[0]], [[0]])
    with pytest.raises(ValueError):
        semi_primitivity_characterizations(T)


def test_deflate_inflate_roundtrip(H):
    reg = regular_module(H)
    # the halo ideal annihilates the regular module
    Mq, Dq, proj = deflate_module(reg, 0b1001)
    back = inflate_module(Mq, H, proj)
    assert (back.lact == reg.lact).all() and (back.ract == reg.ract).all()

    # deflating by zero is the identity transport
    Mq0, _, proj0 = deflate_module(reg, 0b0001)
    assert (Mq0.lact == reg.lact).all()


def test_deflate_requires_annihilating_ideal(H):
    reg = regular_module(H)
    with pytest.raises(ValueError):
        deflate_module(reg, 0b1111)


def test_radical_quotient_check(H, f2ring, z4ring):
    for D in (H, f2ring, z4ring):
        assert radical_quotient_check(D).ok


def test_census_has_a_primitive_diring():
    recs = census_all_dirings(max_order=4)
    prim = [r for r in recs if r.invariants["is_3_primitive"]]
    semi = [r for r in recs if r.invariants["is_3_semi_primitive"]]
    assert prim and semi
    for r in prim:
        flag, witness = is_3_primitive(r.structure)
        assert flag and witness is not None
        assert is_faithful(r.structure, witness)
        rep = rad3(r.structure)
        assert rep.rad3 == 1 and not rep.family_empty
        # every 3-primitive ideal contains the radical
        for Hm in rep.primitive_ideals:
            assert rep.rad3 & ~Hm == 0
        sp = semi_primitivity_characterizations(r.structure)
        assert sp.agree and sp.semi_primitive
