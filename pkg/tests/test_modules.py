import numpy as np
import pytest

from dirings.groups import mask_all, require_group
from dirings.modules import (
    LeftModuleTable,
    are_isomorphic_modules,
    components,
    decompose,
    direct_sum,
    end_ring,
    enumerate_submodules,
    hom_group,
    hom_halo_check,
    hom_image,
    hom_kernel,
    irreducibility_characterizations,
    is_3_irreducible,
    is_3_maximal,
    is_completely_3_reducible,
    left_translation_check,
    module_from_translations,
    module_halo_identities_check,
    quotient_module,
    regular_module,
    require_module,
    schur_check,
    submodule_as_module,
    verify_module,
)
from dirings.validation import ValidationReport

from conftest import KLEIN_ADD


@pytest.fixture(scope="module")
def regH(H):
    return regular_module(H)


@pytest.fixture(scope="module")
def zero_action(H, klein):
    """lact identically zero, ract rows (0, id, id, 0)."""
    lact = np.zeros((4, 4), dtype=int)
    ract = np.array([[0, 0, 0, 0], [0, 1, 2, 3], [0, 1, 2, 3], [0, 0, 0, 0]])
    return require_module(H, klein, lact, ract)


def test_regular_module_validates(regH, H):
    assert isinstance(regH, LeftModuleTable)
    assert (regH.lact == H.lprod).all() and (regH.ract == H.rprod).all()
    assert regH.chosen_e == 1


def test_zero_module(H):
    Z = require_module(H, require_group(["0"], [[0]]),
                       np.zeros((4, 1), dtype=int), np.zeros((4, 1), dtype=int))
    assert Z.order == 1 and Z.halo == 1


def test_perturbed_regular_module_reports_a_law(regH, H, klein):
    lact = np.array(H.lprod)
    lact[1, 1] = 3  # a -o a changed
    got = verify_module(H, klein, lact, H.rprod)
    assert isinstance(got, ValidationReport)
    assert {v.axiom for v in got.violations} & {"M3a", "M3b", "M4", "M1", "M2"}


def test_regular_halo_and_decomposition(regH):
    assert regH.halo == 0b1001          # {0,c}
    assert regH.even_part == 0b0101     # {0,b} = a -o H
    m0, m1 = decompose(regH)
    assert (m0, m1) == (0b0101, 0b1001)
    x0, x1 = components(regH, 1)        # a = b + c
    assert (x0, x1) == (2, 3)


def test_zero_action_module_halo(zero_action):
    assert zero_action.halo == mask_all(4)
    assert zero_action.even_part == 1
    assert module_halo_identities_check(zero_action).ok


def test_module_halo_identities(regH, zero_action):
    for M in (regH, zero_action):
        assert module_halo_identities_check(M).ok


def test_translations(regH, zero_action, H):
    for M in (regH, zero_action):
        assert left_translation_check(M).ok
        rebuilt = module_from_translations(
            H, M.carrier, [M.lact[a] for a in range(4)],
            [M.ract[a] for a in range(4)])
        assert isinstance(rebuilt, LeftModuleTable)
        assert (rebuilt.lact == M.lact).all() and (rebuilt.ract == M.ract).all()


def test_submodules_of_regular_module(regH):
    assert enumerate_submodules(regH) == [0b0001, 0b0101, 0b1001, 0b1111]


def test_regular_module_is_not_3_irreducible(regH):
    assert not is_3_irreducible(regH)


def test_zero_module_not_3_irreducible(H):
    Z = require_module(H, require_group(["0"], [[0]]),
                       np.zeros((4, 1), dtype=int), np.zeros((4, 1), dtype=int))
    assert not is_3_irreducible(Z)


def test_halo_zero_disqualifies(z4ring):
    reg = regular_module(z4ring)
    assert reg.halo == 1
    assert not is_3_irreducible(reg)


def test_quotients_of_regular_module(regH):
    # by {0,b}: the coset of a lands in the halo of the quotient
    q1, proj1 = quotient_module(regH, 0b0101)
    assert q1.order == 2 and q1.halo == mask_all(2)
    assert int(proj1[2]) == 0  # b maps to the zero coset
    assert not is_3_irreducible(q1)
    assert not is_3_maximal(regH, 0b0101)

    # by {0,c}: the halo of the quotient is zero
    q2, _ = quotient_module(regH, 0b1001)
    assert q2.order == 2 and q2.halo == 1
    assert not is_3_maximal(regH, 0b1001)

    # by zero: the quotient is the module itself
    q3, _ = quotient_module(regH, 0b0001)
    assert (q3.lact == regH.lact).all() and (q3.ract == regH.ract).all()


def test_direct_sum(regH, H):
    Z = require_module(H, require_group(["0"], [[0]]),
                       np.zeros((4, 1), dtype=int), np.zeros((4, 1), dtype=int))
    S = direct_sum([regH, Z])
    assert S.order == 4
    assert are_isomorphic_modules(S, regH) is not None

    SS = direct_sum([regH, regH])
    assert SS.order == 16
    # halo is componentwise: {0,c} x {0,c}
    expected = 0
    for i in (0, 3):
        for j in (0, 3):
            expected |= 1 << (i * 4 + j)
    assert SS.halo == expected


def test_direct_sum_rejects_mixed_rings(regH, z4ring):
    with pytest.raises(ValueError):
        direct_sum([regH, regular_module(z4ring)])


def test_complete_reducibility(regH, H):
    Z = require_module(H, require_group(["0"], [[0]]),
                       np.zeros((4, 1), dtype=int), np.zeros((4, 1), dtype=int))
    res = is_completely_3_reducible(Z)
    assert res.ok and res.empty and res.parts == []
    res = is_completely_3_reducible(regH)
    assert not res.ok and res.parts is None


def test_hom_group_to_zero_module(regH, H):
    Z = require_module(H, require_group(["0"], [[0]]),
                       np.zeros((4, 1), dtype=int), np.zeros((4, 1), dtype=int))
    homs = hom_group(regH, Z)
    assert len(homs) == 1 and homs[0].is_zero()


def test_end_ring_identity_and_kernels(regH):
    homs, table = end_ring(regH)
    ids = [i for i, h in enumerate(homs)
           if (h.map == np.arange(4)).all()]
    assert len(ids) == 1
    for phi in homs:
        hom_kernel(phi)
        hom_image(phi)
        assert hom_halo_check(phi)


def test_submodule_restriction(regH):
    sub = submodule_as_module(regH, 0b0101)
    assert sub.order == 2
    assert sub.halo == 1  # a -o b = b is nonzero


def test_irreducibility_characterizations_on_regular(regH):
    rep = irreducibility_characterizations(regH)
    assert (rep.lattice, rep.generation, rep.quotient_iso) == (False, False, False)
    assert rep.agree


def test_irreducibility_characterizations_requires_hypotheses(z4ring):
    with pytest.raises(ValueError):
        irreducibility_characterizations(regular_module(z4ring))


def test_schur_on_the_3_irreducible_census_module():
    # the order-4 census contains exactly one 3-irreducible module
    from dirings.census import census_all_dirings, enumerate_modules
    found = []
    for rec in census_all_dirings(max_order=4, with_invariants=False):
        for mrec in enumerate_modules(rec.structure, 4):
            if is_3_irreducible(mrec.structure):
                found.append(mrec.structure)
    assert len(found) == 1
    M = found[0]
    assert schur_check(M, M).ok
    homs, _ = end_ring(M)
    nonzero = [h for h in homs if not h.is_zero()]
    assert all(len(set(h.map.tolist())) == M.order for h in nonzero)


def test_schur_requires_irreducible(regH):
    with pytest.raises(ValueError):
        schur_check(regH, regH)
