import pytest

from diagmaps.errors import InputError, UnsupportedDimension
from diagmaps.fgab import cyclic
from diagmaps.spheres import (
    SUPPORTED,
    check_table,
    sphere_entry,
    sphere_table,
    target_from_json,
    target_sphere,
    target_sphere_product,
    target_to_json,
    v_group,
    whitehead_square_order,
)

# Values of pi_2n(S^n) and V_n as shipped in the table; V_n follows by quotient.
EXPECTED = {
    2: ("Z/2", "Z/2"),
    3: ("Z/12", "Z/12"),
    4: ("Z/2 x Z/2", "Z/2"),
    5: ("Z/2", "0"),
    6: ("Z/2", "Z/2"),
    7: ("Z/120", "Z/120"),
}


@pytest.mark.parametrize("n", SUPPORTED)
def test_table_values(n):
    e = sphere_entry(n)
    pi_2n, v = EXPECTED[n]
    assert str(e.pi_2n) == pi_2n
    assert str(v_group(n)) == v
    assert str(e.pi_n1) == ("Z" if n == 2 else "Z/2")
    assert e.ii_order == whitehead_square_order(n)
    assert e.source


def test_table_invariants_hold():
    assert check_table(sphere_table()) == []
    assert whitehead_square_order(6) is None  # infinite: n is even
    assert whitehead_square_order(5) == 2
    assert [whitehead_square_order(n) for n in (1, 3, 7)] == [1, 1, 1]


def test_bracket_vanishing_pattern():
    assert sphere_entry(2).eta_bracket.is_zero() and sphere_entry(3).eta_bracket.is_zero()
    assert not sphere_entry(4).eta_bracket.is_zero() and not sphere_entry(5).eta_bracket.is_zero()


def test_corrupt_table_is_detected():
    table = dict(sphere_table())
    bad = table[4]
    table[4] = type(bad)(4, bad.pi_n1, bad.pi_2n, bad.pi_2n.zero(), bad.ii_order, bad.source)
    assert check_table(table)


@pytest.mark.parametrize("n", [0, 1, 8, 99])
def test_unsupported_dimension(n):
    with pytest.raises(UnsupportedDimension):
        sphere_entry(n)
    with pytest.raises(UnsupportedDimension):
        target_sphere(n)


@pytest.mark.parametrize("n", SUPPORTED)
def test_builtin_targets_validate(n):
    for t in (target_sphere(n), target_sphere_product(n)):
        assert t.problems() == []
        assert t.tau_sign == (1 if n % 2 else -1)
        assert t.table_data


def test_sphere_2_pairings():
    t = target_sphere(2)
    assert str(t.pi_n) == "Z" and str(t.pi_n1) == "Z" and str(t.pi_2n) == "Z/2"
    assert t.p1n(t.pi_n1.generator(0), t.pi_n.generator(0)).is_zero()


def test_product_mixed_pairings_vanish():
    t = target_sphere_product(4)
    x, y = t.pi_n.element([1, 0]), t.pi_n.element([0, 1])
    assert t.pnn(x, y).is_zero()
    assert not t.pnn(x, x).is_zero()
    assert t.p1n(t.pi_n1.element([1, 0]), y).is_zero()
    assert not t.p1n(t.pi_n1.element([1, 0]), x).is_zero()


@pytest.mark.parametrize("n", [2, 5])
def test_target_json_round_trip(n):
    t = target_sphere_product(n)
    back = target_from_json(target_to_json(t))
    assert back.pi_2n.canonical_form == t.pi_2n.canonical_form
    assert [[v.normal_form for v in row] for row in back.P1n] == [[v.normal_form for v in row] for row in t.P1n]


def test_bad_target_rejected():
    obj = target_to_json(target_sphere(3))
    obj["Pnn"] = [[{"coords": [1]}]]
    obj["pi_2n1"] = {"ambient_rank": 1, "relations": [[3]]}
    with pytest.raises(InputError):  # n odd forces 2[x, x] = 0 but Z/3 has none
        target_from_json(obj)
    obj = target_to_json(target_sphere(3))
    del obj["P1n"]
    with pytest.raises(InputError):
        target_from_json(obj)
    t = target_sphere(2)
    bad = type(t)(2, t.pi_n, t.pi_n1, t.pi_2n, cyclic(2), t.P1n, t.Pnn, -1)
    assert bad.problems()
