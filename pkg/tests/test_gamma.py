import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagmaps.errors import InfiniteEnumeration
from diagmaps.fgab import (
    IntMatrix,
    Subgroup,
    cyclic,
    direct_sum,
    free,
    from_invariants,
    group_from_presentation,
    groups_isomorphic,
    hom_make,
    identity_hom,
    tensor_product,
)
from diagmaps.gamma import (
    QuadraticMap,
    gamma22,
    gamma_group,
    gamma_on_hom,
    gamma_torsion,
    m_eta_subgroup,
)

from oracles import Cyclics, hom_count, matmul, quadratic_maps, random_unimodular


def presented(orders):
    return group_from_presentation(len(orders), [[d if i == j else 0 for i in range(len(orders))] for j, d in enumerate(orders)])


@pytest.mark.parametrize("m", range(2, 13))
def test_cyclic_table(m):
    g = gamma_group(cyclic(m))[0]
    t = gamma_torsion(cyclic(m))
    assert str(g) == (f"Z/{2 * m}" if m % 2 == 0 else f"Z/{m}")
    assert str(t) == ("Z/2" if m % 2 == 0 else "0")


def test_free_examples():
    assert str(gamma_group(free(1))[0]) == "Z"
    assert str(gamma_group(free(2))[0]) == "Z^3"
    assert gamma_torsion(free(3)).is_trivial()
    _, gamma, _ = gamma_group(free(1))
    assert gamma(free(1).element([5])).coords == (25,)


UNIVERSAL_CASES = [(m,) for m in range(2, 7)] + [(2, 2), (2, 3)]


@pytest.mark.parametrize("orders", UNIVERSAL_CASES)
def test_universal_property_against_brute_force(orders):
    """Quadratic maps A -> Z/c correspond exactly to homomorphisms Gamma(A) -> Z/c."""
    a = presented(orders)
    g, gamma, _ = gamma_group(a)
    # gamma(A) generates Gamma(A), so composing with gamma is injective on Hom
    assert Subgroup(g, tuple(gamma(x) for x in a.elements())).same_as(Subgroup(g, tuple(g.generators())))
    factors = list(g.invariant_factors) + [0] * g.free_rank
    for c in (2, 3, 4, 6, 8):
        assert len(quadratic_maps(Cyclics(orders), c)) == hom_count(factors, c)


def test_gamma_on_maps():
    z = free(1)
    assert gamma_on_hom(hom_make(z, z, [[2]])).matrix.tolist() == [[4]]
    g = from_invariants(1, (2,))
    assert gamma_on_hom(identity_hom(g)).matrix == identity_hom(gamma_group(g)[0]).matrix


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9), st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_gamma_is_functorial(f_entries, g_entries):
    z3 = free(3)
    f = hom_make(z3, z3, [f_entries[i:i + 3] for i in (0, 3, 6)])
    g = hom_make(z3, z3, [g_entries[i:i + 3] for i in (0, 3, 6)])
    assert gamma_on_hom(g.compose(f)).matrix == gamma_on_hom(g).compose(gamma_on_hom(f)).matrix


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=2), st.lists(st.integers(-20, 20), min_size=2, max_size=2))
def test_gamma_is_quadratic(a, b):
    A = from_invariants(1, (6,))
    _, gamma, bracket = gamma_group(A)
    x, y = A.element(a), A.element(b)
    assert gamma(-x) == gamma(x)
    assert gamma(x + y) - gamma(x) - gamma(y) == bracket(x, y)
    assert bracket(x, y) == bracket(y, x)
    assert bracket(x, x) == 2 * gamma(x)
    assert bracket(x + y, y) == bracket(x, y) + bracket(y, y)


def random_small_group(rng):
    orders = [rng.choice([0, 2, 3, 4, 6]) for _ in range(rng.randint(1, 2))]
    return orders


def two_presentations(rng, orders):
    """The group Z/d1 + ... presented diagonally and through random unimodular changes."""
    k = len(orders)
    diag = [[d if i == j else 0 for i in range(k)] for j, d in enumerate(orders)]  # columns
    a = group_from_presentation(k, diag)
    p = random_unimodular(rng, k)
    q = random_unimodular(rng, k)
    rel = matmul(matmul(p, [list(r) for r in zip(*diag)]), q)  # rows of P D Q
    b = group_from_presentation(k, IntMatrix.from_rows(rel))
    # also add a redundant generator tied to the first: e_new - e_0 is a relation
    cols = [list(c) + [0] for c in IntMatrix.from_rows(rel).columns()]
    cols.append([-1] + [0] * (k - 1) + [1])
    c = group_from_presentation(k + 1, cols)
    return a, b, c


def test_resolution_independence():
    rng = random.Random(11)
    for _ in range(100):
        a, b, c = two_presentations(rng, random_small_group(rng))
        assert groups_isomorphic(a, b) and groups_isomorphic(a, c)
        for other in (b, c):
            assert groups_isomorphic(gamma_group(a)[0], gamma_group(other)[0])
            assert groups_isomorphic(gamma_torsion(a), gamma_torsion(other))


def test_direct_sum_law():
    rng = random.Random(5)
    for _ in range(100):
        a = presented(random_small_group(rng))
        b = presented(random_small_group(rng))
        lhs = gamma_group(direct_sum(a, b))[0]
        rhs = direct_sum(gamma_group(a)[0], gamma_group(b)[0], tensor_product(a, b))
        assert groups_isomorphic(lhs, rhs)


def nonzero_eta_on_z2():
    z2 = cyclic(2)
    return QuadraticMap.from_matrix(z2, z2, [[1]])


def test_m_eta_examples():
    m, exact = m_eta_subgroup(nonzero_eta_on_z2())
    assert exact and str(m.group) == "Z/2 x Z/2"
    assert gamma22(nonzero_eta_on_z2()).group.is_trivial()
    zero = QuadraticMap.zero(free(2), cyclic(3))
    assert str(gamma22(zero).group) == "Z/3 x Z/3"
    assert gamma22(QuadraticMap.zero(cyclic(4), cyclic(1))).group.is_trivial()


def test_infinite_pi2_needs_a_policy():
    eta = QuadraticMap.from_matrix(free(1), cyclic(2), [[1]])
    with pytest.raises(InfiniteEnumeration):
        m_eta_subgroup(eta)
    m, exact = m_eta_subgroup(eta, "polynomial")
    assert exact
    pairs = [(eta.source.element([1]), eta.source.element([1]))]
    _, exact = m_eta_subgroup(eta, pairs)
    assert not exact


def random_eta(rng, pi2, pi3):
    g = gamma_group(pi2)[0]
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(g.ambient_rank)] for _ in range(pi3.ambient_rank)]
        try:
            return QuadraticMap.from_matrix(pi2, pi3, rows)
        except Exception:
            continue


def test_polynomial_policy_matches_enumeration_on_finite_groups():
    rng = random.Random(2)
    for _ in range(25):
        pi2 = presented([rng.choice([2, 3, 4]) for _ in range(rng.randint(1, 2))])
        pi3 = presented([rng.choice([2, 4, 6])])
        eta = random_eta(rng, pi2, pi3)
        full, _ = m_eta_subgroup(eta)
        poly, _ = m_eta_subgroup(eta, "polynomial")
        assert full.same_as(poly)


def test_polynomial_policy_matches_a_box_on_free_groups():
    rng = random.Random(4)
    for _ in range(10):
        pi2 = free(rng.randint(1, 2))
        pi3 = presented([rng.choice([0, 2, 4])])
        eta = random_eta(rng, pi2, pi3)
        box = [pi2.element(p) for p in itertools.product(range(-2, 3), repeat=pi2.ambient_rank)]
        boxed, _ = m_eta_subgroup(eta, [(x, y) for x in box for y in box])
        poly, _ = m_eta_subgroup(eta, "polynomial")
        assert boxed.same_as(poly)
