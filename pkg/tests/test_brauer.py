"""Engine-level tests: structural invariants that hold across the grid."""

from math import comb

import pytest

from moduli_brauer.brauer import (
    GENERAL,
    br_moduli,
    br_stack,
    br_twisted_sc,
    coker_ev,
    cross_check,
    ev,
    gamma,
    h2_gamma,
    min_descending_power,
    psi,
    psi_G,
    sp_local_factoriality,
)
from moduli_brauer.finab import dual, image_cokernel, quotient
from moduli_brauer.rootdata import DynkinType, GroupSpec, center, named_subgroup


def _canon(t, vectors):
    grp = center(t).group
    return tuple(tuple(grp.canonical_coords(v)) for v in vectors)


def _so_spec(n, d=0, genus=3):
    t = DynkinType("B", n // 2) if n % 2 else DynkinType("D", n // 2)
    gens = _canon(t, named_subgroup(t, "so-kernel"))
    return GroupSpec((t,), gens, tuple(d * c for c in gens[0]), genus)


GRID = [
    GroupSpec((DynkinType("A", 4),), (), (2,), 3, "twisted-sc"),
    GroupSpec((DynkinType("C", 4),), (), (1,), 3, "twisted-sc"),
    GroupSpec((DynkinType("D", 5),), (), (1,), 3, "twisted-sc"),
    GroupSpec((DynkinType("D", 6),), (), (1, 1), 3, "twisted-sc"),
    GroupSpec((DynkinType("C", 3),), ((1,),), (1,), 3),
    GroupSpec((DynkinType("A", 3),), ((1,),), (0,), 3),
    GroupSpec((DynkinType("A", 5),), ((2,),), (2,), 4),
    _so_spec(10, 1),
    _so_spec(9, 0),
    GroupSpec((DynkinType("E", 6),), ((1,),), (0,), 3),
    GroupSpec((DynkinType("A", 2), DynkinType("C", 3)), (), (), 3),
    GroupSpec(
        (DynkinType("A", 3), DynkinType("A", 3)),
        ((1, 1),),
        (0, 0),
        3,
    ),
]


@pytest.mark.parametrize("spec", GRID, ids=lambda s: s.describe())
def test_image_coker_order_identity(spec):
    q, _ = quotient(spec.center_data.group, spec.pi1_ambient())
    dq = dual(q)
    img, _, cok, _ = image_cokernel(ev(spec))
    assert img.order() * cok.order() == dq.order()
    assert dq.order() % coker_ev(spec).order() == 0


@pytest.mark.parametrize("spec", GRID, ids=lambda s: s.describe())
def test_psi_subgroup_inclusion(spec):
    big = psi(spec)
    sub = psi_G(spec)
    assert big.group.order() % sub.group.order() == 0
    if not spec.pi1_gens:
        assert sub.group.order() == big.group.order()


@pytest.mark.parametrize("spec", GRID, ids=lambda s: s.describe())
def test_gamma_shape(spec):
    p = spec.pi1_subgroup()[0]
    g = gamma(spec)
    assert g.order() == p.order() ** (2 * spec.genus)
    h2 = h2_gamma(spec)
    if p.invariant_factors and len(set(p.invariant_factors)) == 1:
        d = p.invariant_factors[0]
        k = len(p.invariant_factors) * 2 * spec.genus
        assert h2.invariant_factors == [d] * comb(k, 2)


@pytest.mark.parametrize("spec", GRID, ids=lambda s: s.describe())
def test_resolved_order_identity(spec):
    report = br_moduli(spec)
    if report.resolved:
        assert (
            report.moduli_brauer.order()
            == report.coker_ev.order() * report.stack_brauer.order()
        )
    else:
        assert report.family == GENERAL
        names = [n for n, _ in report.moduli_pieces]
        assert "coker_ev" in names and "h2_gamma" in names


def test_descent_times_coker_is_center_dual_order():
    # single twisted factor: |image| * |coker| = |center dual|
    cells = [
        (DynkinType("A", 5), (3,)),
        (DynkinType("C", 6), (1,)),
        (DynkinType("D", 7), (2,)),
        (DynkinType("D", 8), (1, 0)),
        (DynkinType("B", 6), (1,)),
    ]
    for t, d in cells:
        power = min_descending_power(t, d)
        cok = br_twisted_sc(t, d)
        assert power * cok.order() == center(t).group.order(), (t, d)


def test_factor_swap_isomorphism():
    a = GroupSpec((DynkinType("A", 3), DynkinType("C", 4)), (), (), 3)
    b = GroupSpec((DynkinType("C", 4), DynkinType("A", 3)), (), (), 3)
    ra, rb = br_moduli(a), br_moduli(b)
    assert ra.moduli_brauer.invariant_factors == rb.moduli_brauer.invariant_factors
    assert ra.psi.group.invariant_factors == rb.psi.group.invariant_factors


def test_genus_growth():
    # only the twist-cohomology piece depends on the genus
    for g in (3, 4, 5):
        report = br_stack(_so_spec(10, 0, g))
        assert report.h2_gamma.invariant_factors == [2] * comb(2 * g, 2)
        assert report.coker_ev.invariant_factors == [2]
        zdual = [4]
        assert report.moduli_brauer.invariant_factors == sorted(
            [2] * comb(2 * g, 2) + zdual
        )


def test_twisted_sc_stack_trivial():
    report = br_stack(GroupSpec((DynkinType("C", 3),), (), (1,), 3, "twisted-sc"))
    assert report.stack_brauer.is_trivial()
    assert report.family == "twisted-simply-connected"
    assert report.descent_power == 2


def test_multi_factor_twisted_has_no_power():
    # both twists nonzero: per-factor gcd(3,1) = 1, so the group vanishes
    spec = GroupSpec(
        (DynkinType("A", 2), DynkinType("A", 2)), (), (1, 1), 3, "twisted-sc"
    )
    report = br_moduli(spec)
    assert report.descent_power is None
    assert report.moduli_brauer.is_trivial()
    # zero twist keeps the full character group of the product center
    spec0 = GroupSpec(
        (DynkinType("A", 2), DynkinType("A", 2)), (), (0, 0), 3, "twisted-sc"
    )
    report0 = br_moduli(spec0)
    assert report0.moduli_brauer.invariant_factors == [3, 3]


def test_min_descending_power_rejects_component_mode_inputs():
    with pytest.raises(ValueError):
        min_descending_power(DynkinType("A", 3), (1, 1))  # wrong coordinate length


def test_sp_local_factoriality_domain():
    with pytest.raises(ValueError):
        sp_local_factoriality(2)
    assert sp_local_factoriality(7) is True
    assert sp_local_factoriality(8) is False


def test_cross_check_unresolved_family_not_checkable():
    spec = GroupSpec((DynkinType("A", 3),), ((1,),), (0,), 3)  # adjoint type A
    res = cross_check(spec)
    assert not res.checkable
    assert res.passed is None


def test_semi_spin_vs_so_differ():
    t = DynkinType("D", 6)
    so = br_stack(_so_spec(12, 0))
    om_gens = _canon(t, named_subgroup(t, "omega-kernel"))
    om = br_stack(GroupSpec((t,), om_gens, (0,) * len(om_gens[0]), 3))
    assert so.family == "special-orthogonal"
    assert om.family == "semi-spin"
    assert (
        so.moduli_brauer.invariant_factors != om.moduli_brauer.invariant_factors
    )


def test_notes_are_stable_strings():
    report = br_stack(_so_spec(10, 0))
    assert any(n.startswith("special-orthogonal-rule") for n in report.notes)
    assert any(n.startswith("cross-path-order") for n in report.notes)
