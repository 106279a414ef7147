"""Bridges from the tuple-based oracles to package objects."""

from diagmaps.fgab import group_from_presentation
from diagmaps.spheres import TargetData

from oracles import random_target


def as_group(cy):
    k = len(cy.orders)
    return group_from_presentation(k, [[d if i == j else 0 for i in range(k)] for j, d in enumerate(cy.orders)])


def synthetic_target(rng):
    """A random finite target together with its tuple description."""
    n, pi_n, pi_n1, pi_2n, pi_2n1, p1n, pnn, tau = random_target(rng)
    g_n, g_n1, g_2n, g_2n1 = map(as_group, (pi_n, pi_n1, pi_2n, pi_2n1))
    target = TargetData(
        n, g_n, g_n1, g_2n, g_2n1,
        tuple(tuple(g_2n.element(v) for v in row) for row in p1n),
        tuple(tuple(g_2n1.element(v) for v in row) for row in pnn),
        tau,
    ).check()
    return target, (pi_n, pi_n1, pi_2n, pi_2n1, p1n, pnn, tau)


def compare_with_brute_force(target, raw, v_tuple):
    """Raise AssertionError on any disagreement; return the number of u checked."""
    from diagmaps.orbits import orbit_decomposition

    from oracles import brute_orbits

    pi_n, pi_n1, pi_2n, pi_2n1, p1n, pnn, tau = raw
    brute = brute_orbits(pi_n, pi_n1, pi_2n, pi_2n1, p1n, pnn, tau, v_tuple)
    report = orbit_decomposition(target, target.pi_n.element(v_tuple))
    got = {pi_n.reduce(e.u.first.coords): e for e in report.entries}
    assert set(got) == set(brute)
    all_2n = pi_2n.elements()
    for u1, (I, J) in brute.items():
        e = got[u1]
        for t in all_2n:
            x = target.pi_2n.element(t)
            assert e.I.contains(x) == (t in I)
            assert e.J.contains(x) == (t in J)
        assert e.cosets.order() == pi_2n.order() // len(I)
        assert e.action.order() == len(J) // len(I)
    assert report.class_count() == sum(pi_2n.order() // len(I) for I, _ in brute.values())
    assert report.orbit_count() == sum(pi_2n.order() // len(J) for _, J in brute.values())
    return len(brute)
