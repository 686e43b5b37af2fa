"""Tests for root systems, centers, and linking forms."""

from fractions import Fraction

import pytest

from moduli_brauer.finab import QmodZ, dual
from moduli_brauer.rootdata import (
    DynkinType,
    GroupSpec,
    cartan_matrix,
    center,
    coroot_gram,
    named_subgroup,
    product_center,
    simple_roots,
)

ALL_SMALL = (
    [DynkinType("A", r) for r in range(1, 9)]
    + [DynkinType("B", r) for r in range(2, 9)]
    + [DynkinType("C", r) for r in range(2, 9)]
    + [DynkinType("D", r) for r in range(3, 9)]
    + [DynkinType("E", 6), DynkinType("E", 7), DynkinType("E", 8)]
    + [DynkinType("F", 4), DynkinType("G", 2)]
)


def test_dynkin_validation():
    with pytest.raises(ValueError):
        DynkinType("H", 3)
    with pytest.raises(ValueError):
        DynkinType("E", 9)
    with pytest.raises(ValueError):
        DynkinType("D", 2)
    assert DynkinType("D", 3).rank == 3  # low-rank coincidence allowed


def test_cartan_matrices_frozen_values():
    assert cartan_matrix(DynkinType("A", 2)) == [[2, -1], [-1, 2]]
    assert cartan_matrix(DynkinType("B", 2)) == [[2, -2], [-1, 2]]
    assert cartan_matrix(DynkinType("C", 3)) == [
        [2, -1, 0],
        [-1, 2, -1],
        [0, -2, 2],
    ]
    assert cartan_matrix(DynkinType("D", 4)) == [
        [2, -1, 0, 0],
        [-1, 2, -1, -1],
        [0, -1, 2, 0],
        [0, -1, 0, 2],
    ]
    assert cartan_matrix(DynkinType("G", 2)) == [[2, -1], [-3, 2]]


def test_center_order_is_cartan_determinant():
    expected = {
        "A": lambda r: r + 1,
        "B": lambda r: 2,
        "C": lambda r: 2,
        "D": lambda r: 4,
        "E": lambda r: {6: 3, 7: 2, 8: 1}[r],
        "F": lambda r: 1,
        "G": lambda r: 1,
    }
    for t in ALL_SMALL:
        assert center(t).group.order() == expected[t.family](t.rank), t


def test_coroot_gram_even_symmetric():
    for t in ALL_SMALL:
        g = coroot_gram(t)
        n = len(g)
        for i in range(n):
            assert g[i][i] % 2 == 0
            for j in range(n):
                assert g[i][j] == g[j][i]


def test_simply_laced_gram_equals_cartan():
    for t in (DynkinType("A", 4), DynkinType("D", 5), DynkinType("E", 6)):
        assert coroot_gram(t) == cartan_matrix(t)


def test_simple_roots_counts():
    for t in ALL_SMALL[:12]:
        roots = simple_roots(t)
        assert len(roots) == t.rank


def test_center_structures():
    assert center(DynkinType("A", 3)).group.invariant_factors == [4]
    assert center(DynkinType("D", 4)).group.invariant_factors == [2, 2]
    assert center(DynkinType("D", 5)).group.invariant_factors == [4]
    assert center(DynkinType("E", 7)).group.invariant_factors == [2]
    assert center(DynkinType("G", 2)).group.invariant_factors == []


def test_form_symmetric_and_nondegenerate():
    for t in ALL_SMALL:
        cd = center(t)
        gens = cd.group.canonical_generators()
        for x in gens:
            for y in gens:
                assert cd.pairing(x, y) == cd.pairing(y, x)
        if cd.group.order() > 1:
            assert cd.is_nondegenerate() in (True, False)


def test_known_form_values():
    # cyclic Z/n center of the special linear cover: b(z, z) = (n-1)/n family
    cd = center(DynkinType("A", 3))
    z = cd.group.canonical_generators()[0]
    assert cd.pairing(z, z).order() in (2, 4)
    # the odd orthogonal cover has identically zero linking form
    cd_b = center(DynkinType("B", 4))
    zb = cd_b.group.canonical_generators()[0]
    assert cd_b.pairing(zb, zb).is_zero()
    assert cd_b.form_order(0) == 1
    # symplectic cover: order-2 form
    cd_c = center(DynkinType("C", 3))
    zc = cd_c.group.canonical_generators()[0]
    assert cd_c.pairing(zc, zc).as_fraction() == Fraction(1, 2)


def test_form_orders_by_family():
    assert center(DynkinType("C", 5)).form_order(0) == 2
    assert center(DynkinType("B", 5)).form_order(0) == 1
    assert center(DynkinType("D", 5)).form_order(0) == 4
    assert center(DynkinType("D", 6)).form_order(0) == 2
    assert center(DynkinType("A", 5)).form_order(0) == 6


def test_product_center_block_structure():
    cd = product_center((DynkinType("A", 2), DynkinType("C", 3)))
    assert cd.group.order() == 6
    x = cd.group.element_from_canonical(
        [1] * cd.group.rank
    )
    assert cd.pairing(x, x) is not None
    # cross pairing between factors vanishes
    a_gen = [1, 0, 0, 0, 0]
    c_gen = [0, 0, 0, 0, 1]
    assert cd.factor_pairing(0, c_gen, c_gen).is_zero()


def test_product_center_permutation_invariant():
    p1 = product_center((DynkinType("A", 3), DynkinType("D", 4)))
    p2 = product_center((DynkinType("D", 4), DynkinType("A", 3)))
    assert p1.group.invariant_factors == p2.group.invariant_factors
    vals1 = sorted(
        str(p1.pairing(x, y))
        for x in p1.group.canonical_generators()
        for y in p1.group.canonical_generators()
    )
    vals2 = sorted(
        str(p2.pairing(x, y))
        for x in p2.group.canonical_generators()
        for y in p2.group.canonical_generators()
    )
    assert vals1 == vals2


def test_named_subgroups():
    t = DynkinType("D", 6)
    full = named_subgroup(t, "full")
    so = named_subgroup(t, "so-kernel")
    om = named_subgroup(t, "omega-kernel")
    grp = center(t).group
    assert len(full) >= 1
    so_c = grp.canonical_coords(so[0])
    om_c = grp.canonical_coords(om[0])
    assert so_c != om_c
    assert grp.element_order(so[0]) == 2
    assert grp.element_order(om[0]) == 2
    with pytest.raises(ValueError):
        named_subgroup(t, "mu(3)")
    a = DynkinType("A", 3)
    mu2 = named_subgroup(a, "mu(2)")
    assert center(a).group.element_order(mu2[0]) == 2
    with pytest.raises(ValueError):
        named_subgroup(a, "mu(3)")


def test_trivial_named_subgroup():
    assert named_subgroup(DynkinType("C", 4), "trivial") == []


def test_groupspec_validation():
    t = DynkinType("C", 3)
    with pytest.raises(ValueError):
        GroupSpec((), (), (), 3)
    with pytest.raises(ValueError):
        GroupSpec((t,), (), (), 2)  # genus too small without override
    GroupSpec((t,), (), (), 2, "component", True)  # override allows it
    with pytest.raises(ValueError):
        GroupSpec((t,), ((1,),), (), 3, "twisted-sc")  # twisted needs trivial pi1
    with pytest.raises(ValueError):
        GroupSpec((t,), (), (1,), 3)  # delta outside pi1 in component mode
    spec = GroupSpec((t,), ((1,),), (1,), 3)
    assert spec.delta == (1,)
    assert spec.pi1_subgroup()[0].order() == 2


def test_groupspec_delta_defaults_to_zero():
    spec = GroupSpec((DynkinType("A", 3),), (), (), 3)
    assert spec.delta == (0,)
    assert center(DynkinType("A", 3)).group.is_zero_element(spec.delta_ambient())


def test_dual_of_center_matches():
    for t in (DynkinType("A", 5), DynkinType("D", 7)):
        grp = center(t).group
        assert dual(grp).invariant_factors == grp.invariant_factors
