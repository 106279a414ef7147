"""Orbit calculus for maps S^n x S^n -> U under the diagonal.

For ``v`` in pi_n(U) the classes of maps under the diagonal are a disjoint
union, over realizable pairs ``u = (u', u'')`` with ``[u', u''] = 0`` and
``u' + u'' = v``, of the coset groups ``pi_2n / I_u``.  With
``w = u'' + tau u'`` (``tau = (-1)^(n-1)`` for spheres)

    I_u = { [a, w] }            J_u = { [a, w] + [c, u'] }     a, c in pi_{n+1}

and the fundamental action has orbits ``J_u / I_u``.  Forgetting the diagonal
is injective exactly when every ``J_u / I_u`` vanishes.

Two elements f, g under the diagonal have equal homology exactly when they
lie in one orbit of the combined pinching/fundamental action, i.e. share the
same ``u``; each :class:`OrbitEntry` is one such class.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import ForeignElement, InfiniteEnumeration
from .fgab import Element, FgAbGroup, Subgroup
from .monoids import SelfMapMonoid
from .spheres import TargetData, sphere_entry, v_group


@dataclass(frozen=True)
class UPair:
    """A pair ``(u', u'')``; with ``steps`` it stands for ``(u' + s, u'' - s)``, s in span(steps)."""

    first: Element
    second: Element
    sign: int
    steps: tuple[Element, ...] = ()

    @property
    def w(self) -> Element:
        return self.second + self.sign * self.first

    @property
    def is_family(self) -> bool:
        return bool(self.steps)

    def describe(self) -> str:
        base = f"u'={list(self.first.coords)}, u''={list(self.second.coords)}"
        if not self.steps:
            return base
        span = " + ".join(f"k{i}*{list(s.coords)}" for i, s in enumerate(self.steps))
        return f"u'={list(self.first.coords)} + {span} (k in Z), u'' = v - u'"


# ---------------------------------------------------------------------------
# Realizable pairs
# ---------------------------------------------------------------------------


def _sphere_solutions(c: int, order: int | None) -> list[tuple[int, int]]:
    """Integer ``u'`` with ``u'(c - u') [i, i] = 0`` as ``(base, step)``; step 0 means a single value."""
    if order is None:
        return [(0, 0)] if c == 0 else [(0, 0), (c, 0)]
    if order == 1 or c % 2:
        return [(0, 1)]
    return [(0, 2)]


def realizable_set(target: TargetData, v: Element) -> list[UPair]:
    """All ``u`` with ``u' + u'' = v`` and ``[u', u''] = 0``, in deterministic order."""
    pi_n = target.pi_n
    if v.group != pi_n:
        raise ForeignElement("v must be an element of pi_n of the target")
    sign = target.tau_sign
    if pi_n.is_finite():
        out = []
        for u1 in pi_n.elements():
            u2 = v - u1
            if target.pnn(u1, u2).is_zero():
                out.append(UPair(u1, u2, sign))
        return out
    if target.kind not in ("sphere", "product"):
        raise InfiniteEnumeration(
            f"pi_n = {pi_n} is infinite; realizable pairs are only solved for built-in sphere targets"
        )
    order = sphere_entry(target.n).ii_order
    per_component = [_sphere_solutions(c, order) for c in v.coords]
    out = []
    for choice in itertools.product(*per_component):
        base = pi_n.element([b for b, _ in choice])
        steps = []
        for i, (_, step) in enumerate(choice):
            if step:
                steps.append(pi_n.element([step if j == i else 0 for j in range(pi_n.ambient_rank)]))
        u = UPair(base, v - base, sign, tuple(steps))
        assert target.pnn(u.first, u.second).is_zero()
        out.append(u)
    return out


# ---------------------------------------------------------------------------
# Isotropy groups
# ---------------------------------------------------------------------------


def isotropy_I(target: TargetData, u: UPair) -> Subgroup:
    w = u.w
    return Subgroup(target.pi_2n, tuple(target.p1n(a, w) for a in target.pi_n1.generators()))


def isotropy_J(target: TargetData, u: UPair) -> Subgroup:
    extra = tuple(target.p1n(c, u.first) for c in target.pi_n1.generators())
    return Subgroup(target.pi_2n, isotropy_I(target, u).generators + extra)


def _refine(target: TargetData, u: UPair) -> list[UPair]:
    """Split a family into residue classes on which I_u and J_u are constant."""
    if not u.steps:
        return [u]
    period = 1
    for s in u.steps:
        for c in target.pi_n1.generators():
            o = target.pi_2n.element_order(target.p1n(c, s))
            if o is None:
                raise InfiniteEnumeration("isotropy groups vary without period along this family")
            period = math.lcm(period, o)
    out = []
    for residues in itertools.product(range(period), repeat=len(u.steps)):
        shift = u.first.group.zero()
        for r, s in zip(residues, u.steps):
            shift = shift + r * s
        out.append(UPair(u.first + shift, u.second - shift, u.sign, tuple(period * s for s in u.steps)))
    return out


@dataclass(frozen=True)
class OrbitEntry:
    u: UPair
    I: Subgroup
    J: Subgroup
    cosets: FgAbGroup  # pi_2n / I_u
    action: FgAbGroup  # J_u / I_u

    @property
    def trivial_action(self) -> bool:
        return self.action.is_trivial()


@dataclass(frozen=True)
class OrbitReport:
    target: TargetData
    v: Element
    entries: tuple[OrbitEntry, ...]

    @property
    def phi_injective(self) -> bool:
        return all(e.trivial_action for e in self.entries)

    @property
    def table_data(self) -> bool:
        return self.target.table_data

    @property
    def finite(self) -> bool:
        return not any(e.u.is_family for e in self.entries)

    def class_count(self) -> int | None:
        """Number of classes under the diagonal: sum of |pi_2n / I_u|."""
        if not self.finite:
            return None
        orders = [e.cosets.order() for e in self.entries]
        return None if None in orders else sum(orders)

    def orbit_count(self) -> int | None:
        """Number of orbits of the fundamental action: sum of |pi_2n / J_u|."""
        if not self.finite:
            return None
        total = 0
        for e in self.entries:
            o = e.J.quotient()[0].order()
            if o is None:
                return None
            total += o
        return total


def orbit_decomposition(target: TargetData, v: Element) -> OrbitReport:
    entries = []
    for fam in realizable_set(target, v):
        for u in _refine(target, fam):
            I, J = isotropy_I(target, u), isotropy_J(target, u)
            entries.append(OrbitEntry(u, I, J, I.quotient()[0], I.quotient_of(J)))
    return OrbitReport(target, v, tuple(entries))


# ---------------------------------------------------------------------------
# Self-maps of S^n x S^n under the diagonal
# ---------------------------------------------------------------------------


def selfmap_monoid(n: int) -> SelfMapMonoid:
    """M x (V_n + V_n) for even n; for odd n the extension data over N."""
    v = v_group(n)
    if n % 2 == 0:
        return SelfMapMonoid(n, "M", v, 4 * v.order() ** 2, split_known=True)
    return SelfMapMonoid(n, "N", v, None, split_known=False)


def diagonal(target: TargetData) -> Element:
    """The class of the identity (sphere) or of the diagonal (product) in pi_n."""
    return target.pi_n.element([1] * target.pi_n.ambient_rank)
