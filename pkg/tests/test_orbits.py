import random

import pytest

from diagmaps.errors import ForeignElement, InfiniteEnumeration
from diagmaps.fgab import cyclic, free
from diagmaps.monoids import M_ELEMENTS
from diagmaps.orbits import (
    UPair,
    diagonal,
    isotropy_I,
    isotropy_J,
    orbit_decomposition,
    realizable_set,
    selfmap_monoid,
)
from diagmaps.spheres import TargetData, target_sphere, target_sphere_product, v_group

from helpers import compare_with_brute_force, synthetic_target


@pytest.mark.parametrize("n", range(2, 8))
def test_product_targets_have_injective_phi(n):
    report = orbit_decomposition(target_sphere_product(n), diagonal(target_sphere_product(n)))
    assert report.phi_injective
    assert report.table_data


@pytest.mark.parametrize("n", range(2, 6))
def test_sphere_fundamental_action_is_trivial(n):
    t = target_sphere(n)
    report = orbit_decomposition(t, diagonal(t))
    for e in report.entries:
        assert e.I.same_as(e.J)


def test_sphere_2_has_two_orbits_of_order_two():
    t = target_sphere(2)
    report = orbit_decomposition(t, diagonal(t))
    assert [str(e.cosets) for e in report.entries] == ["Z/2", "Z/2"]
    assert sorted(e.u.first.coords for e in report.entries) == [(0,), (1,)]


@pytest.mark.parametrize("n", [2, 4, 6])
def test_even_product_matches_monoid_order(n):
    t = target_sphere_product(n)
    report = orbit_decomposition(t, diagonal(t))
    v = v_group(n)
    assert len(report.entries) == len(M_ELEMENTS)
    assert all(e.cosets.order() == v.order() ** 2 for e in report.entries)
    assert report.class_count() == selfmap_monoid(n).order


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_n_isotropy_does_not_depend_on_u(n):
    t = target_sphere_product(n)
    entries = orbit_decomposition(t, diagonal(t)).entries
    assert all(e.u.w == diagonal(t) for e in entries)
    first = entries[0].I
    assert all(e.I.same_as(first) for e in entries)
    assert not orbit_decomposition(t, diagonal(t)).finite


def test_trivial_action_at_zero_first_component():
    t = target_sphere_product(4)
    v = diagonal(t)
    u = UPair(t.pi_n.zero(), v, t.tau_sign)
    assert isotropy_I(t, u).same_as(isotropy_J(t, u))


def test_realizable_pairs_on_sphere_2():
    t = target_sphere(2)
    pairs = realizable_set(t, t.pi_n.element([3]))
    assert [p.first.coords for p in pairs] == [(0,), (3,)]
    assert realizable_set(t, t.pi_n.zero())[0].first.is_zero()


def test_errors():
    t = target_sphere(2)
    with pytest.raises(ForeignElement):
        realizable_set(t, cyclic(2).generator(0))
    custom = TargetData(2, free(1), free(1), cyclic(2), free(1),
                        ((cyclic(2).zero(),),), ((free(1).zero(),),), -1)
    with pytest.raises(InfiniteEnumeration):
        realizable_set(custom, free(1).generator(0))


def test_selfmaps():
    assert selfmap_monoid(2).order == 16 and selfmap_monoid(4).order == 16
    odd = selfmap_monoid(3)
    assert odd.order is None and odd.caveat()
    assert str(odd.fibre) == "Z/12"


def test_brute_force_agreement_on_synthetic_targets():
    rng = random.Random(20)
    checked = 0
    for _ in range(20):
        target, raw = synthetic_target(rng)
        for v in raw[0].elements():
            checked += compare_with_brute_force(target, raw, v)
    assert checked > 0
