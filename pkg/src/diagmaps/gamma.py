"""Whitehead's quadratic functor Gamma, Gamma-torsion and the groups M(eta), Gamma^2_2(eta).

Gamma of a free group ``Z^r`` is free on ``gamma(e_1), ..., gamma(e_r)``
followed by the brackets ``[e_i, e_j]`` for ``i < j`` in lexicographic order.
For a presented group ``Z^k / im(d)`` we take the cokernel of

    delta_1 = (Gamma(d), [d, 1]) : Gamma(Z^m) + Z^m (x) Z^k -> Gamma(Z^k)

and Gamma-torsion is ``ker(delta_1) / im(delta_2)`` with
``delta_2 = ([1, 1], -1 (x) d)`` on ``Z^m (x) Z^m``, for injective ``d``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import InfiniteEnumeration, PresentationError
from .fgab import (
    Element,
    FgAbGroup,
    Homomorphism,
    IntMatrix,
    Subgroup,
    direct_sum,
    free,
    hom_make,
    homology,
    lattice_basis,
    pure_tensor,
    quotient_by,
    sum_element,
    tensor_product,
    zero_hom,
)


# ---------------------------------------------------------------------------
# Free basis bookkeeping
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _bracket_index(r: int) -> dict[tuple[int, int], int]:
    return {pair: r + n for n, pair in enumerate(itertools.combinations(range(r), 2))}


def gamma_rank(r: int) -> int:
    return r * (r + 1) // 2


def gamma_free(a: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of ``gamma(sum a_k e_k)`` in the free basis of ``Gamma(Z^r)``."""
    r = len(a)
    out = [0] * gamma_rank(r)
    for k, ak in enumerate(a):
        out[k] = ak * ak
    for (k, l), idx in _bracket_index(r).items():
        out[idx] = a[k] * a[l]
    return tuple(out)


def bracket_free(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of ``[a, b] = gamma(a+b) - gamma(a) - gamma(b)``; note ``[e_k, e_k] = 2 gamma(e_k)``."""
    r = len(a)
    out = [0] * gamma_rank(r)
    for k in range(r):
        out[k] = 2 * a[k] * b[k]
    for (k, l), idx in _bracket_index(r).items():
        out[idx] = a[k] * b[l] + a[l] * b[k]
    return tuple(out)


def basis_labels(r: int) -> list[str]:
    return [f"g(e{k + 1})" for k in range(r)] + [f"[e{k + 1},e{l + 1}]" for k, l in _bracket_index(r)]


# ---------------------------------------------------------------------------
# Gamma on groups and maps
# ---------------------------------------------------------------------------


def _delta1_columns(d: Sequence[Sequence[int]], k: int) -> list[tuple[int, ...]]:
    m = len(d)
    cols = [gamma_free(d[i]) for i in range(m)]
    cols += [bracket_free(d[i], d[j]) for i, j in itertools.combinations(range(m), 2)]
    unit = [tuple(int(i == j) for i in range(k)) for j in range(k)]
    cols += [bracket_free(d[i], unit[j]) for i in range(m) for j in range(k)]
    return cols


@lru_cache(maxsize=None)
def _gamma_of(a: FgAbGroup) -> FgAbGroup:
    k = a.ambient_rank
    cols = _delta1_columns(a.relations.columns(), k)
    return FgAbGroup(gamma_rank(k), IntMatrix.from_columns(cols, gamma_rank(k)))


def gamma_group(a: FgAbGroup) -> tuple[FgAbGroup, Callable[[Element], Element], Callable[[Element, Element], Element]]:
    """``(Gamma(a), gamma, bracket)`` where ``gamma`` is the universal quadratic map.

    >>> from diagmaps.fgab import cyclic
    >>> G, gamma, bracket = gamma_group(cyclic(2))
    >>> print(G)
    Z/4
    """
    g = _gamma_of(a)

    def gamma(x: Element) -> Element:
        if x.group != a:
            raise PresentationError("gamma expects an element of its own group")
        return Element(g, gamma_free(x.coords))

    def bracket(x: Element, y: Element) -> Element:
        if x.group != a or y.group != a:
            raise PresentationError("bracket expects elements of its own group")
        return Element(g, bracket_free(x.coords, y.coords))

    return g, gamma, bracket


def gamma_on_hom(h: Homomorphism) -> Homomorphism:
    """``Gamma(h): Gamma(source) -> Gamma(target)``."""
    images = h.matrix.columns()
    r = len(images)
    cols = [gamma_free(c) for c in images]
    cols += [bracket_free(images[i], images[j]) for i, j in itertools.combinations(range(r), 2)]
    tgt = _gamma_of(h.target)
    return hom_make(_gamma_of(h.source), tgt, IntMatrix.from_columns(cols, tgt.ambient_rank))


def gamma_torsion(a: FgAbGroup) -> FgAbGroup:
    """``Gamma T(a) = ker(delta_1) / im(delta_2)`` for an injective presentation of ``a``."""
    k = a.ambient_rank
    d = lattice_basis(a.relations)
    m = len(d)
    middle = free(gamma_rank(m) + m * k)
    delta1 = Homomorphism(middle, free(gamma_rank(k)),
                          IntMatrix.from_columns(_delta1_columns(d, k), gamma_rank(k)))
    unit_m = [tuple(int(i == j) for i in range(m)) for j in range(m)]
    cols = []
    for i in range(m):
        for j in range(m):
            left = bracket_free(unit_m[i], unit_m[j])
            right = [0] * (m * k)
            for l in range(k):
                right[i * k + l] = -d[j][l]
            cols.append(left + tuple(right))
    delta2 = Homomorphism(free(m * m), middle, IntMatrix.from_columns(cols, middle.ambient_rank))
    return homology(delta2, delta1)


# ---------------------------------------------------------------------------
# Quadratic maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticMap:
    """``eta = eta_square o gamma`` for a homomorphism ``eta_square: Gamma(source) -> target``."""

    source: FgAbGroup
    target: FgAbGroup
    eta_square: Homomorphism

    def __post_init__(self):
        if self.eta_square.source != _gamma_of(self.source) or self.eta_square.target != self.target:
            raise PresentationError("eta_square must map Gamma(source) to target")

    @classmethod
    def from_matrix(cls, source: FgAbGroup, target: FgAbGroup, matrix) -> QuadraticMap:
        return cls(source, target, hom_make(_gamma_of(source), target, matrix))

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> QuadraticMap:
        return cls(source, target, zero_hom(_gamma_of(source), target))

    def __call__(self, x: Element) -> Element:
        return self.eta_square(Element(self.eta_square.source, gamma_free(x.coords)))

    def bracket(self, x: Element, y: Element) -> Element:
        """The bilinear deviation ``eta(x+y) - eta(x) - eta(y)``."""
        return self.eta_square(Element(self.eta_square.source, bracket_free(x.coords, y.coords)))

    def is_zero(self) -> bool:
        return self.eta_square.is_zero()


# ---------------------------------------------------------------------------
# M(eta) and Gamma^2_2(eta)
# ---------------------------------------------------------------------------


def _mod2(g: FgAbGroup) -> FgAbGroup:
    return quotient_by(g, [2 * e for e in g.generators()])[0]


def gamma22_ambient(pi3: FgAbGroup, pi2: FgAbGroup) -> FgAbGroup:
    """``pi3 (x) Z/2  +  pi3 (x) pi2``."""
    return direct_sum(_mod2(pi3), tensor_product(pi3, pi2))


def _simplex(dim: int, degree: int) -> Iterable[tuple[int, ...]]:
    for pt in itertools.product(range(degree + 1), repeat=dim):
        if sum(pt) <= degree:
            yield pt


def m_eta_subgroup(eta: QuadraticMap, pairs=None, assume_generating: bool = False) -> tuple[Subgroup, bool]:
    """Subgroup ``M(eta)`` of ``pi3 (x) Z/2 + pi3 (x) pi2`` and whether it is exact.

    Generated by ``(eta x) (x) x`` and
    ``[x,y]' (x) 1 + (eta x) (x) y + [y,x]' (x) x`` with ``[x,y]' = eta(x+y) - eta(y)``.

    ``pairs`` selects the (x, y) used:

    * ``None``: every pair when ``pi2`` is finite; raises
      :class:`InfiniteEnumeration` for infinite ``pi2`` unless ``eta = 0``.
    * ``"polynomial"``: both generator families are integer polynomial maps of
      degree <= 3 in the ambient coordinates, so their values at the lattice
      points with nonnegative coordinates summing to at most 3 already span
      every value.  Exact for any ``pi2``.
    * an explicit list of ``(x, y)`` pairs: exact only if ``assume_generating``.
    """
    pi2, pi3 = eta.source, eta.target
    ambient = gamma22_ambient(pi3, pi2)
    mod2 = _mod2(pi3)

    def first(x):
        return sum_element(mod2.zero(), pure_tensor(eta(x), x))

    def second(x, y):
        xy = eta(x + y)
        left = Element(mod2, (xy - eta(y)).coords)
        right = pure_tensor(eta(x), y) + pure_tensor(xy - eta(x), x)
        return sum_element(left, right)

    if eta.is_zero():
        return Subgroup(ambient), True

    exact = True
    if pairs is None:
        if not pi2.is_finite():
            raise InfiniteEnumeration(
                f"M(eta) over the infinite group {pi2} needs pairs='polynomial' or an explicit pair list"
            )
        elems = list(pi2.elements())
        xs = elems
        pair_list = [(x, y) for x in elems for y in elems]
    elif pairs == "polynomial":
        k = pi2.ambient_rank
        xs = [pi2.element(p) for p in _simplex(k, 3)]
        pair_list = [(pi2.element(p[:k]), pi2.element(p[k:])) for p in _simplex(2 * k, 3)]
    else:
        pair_list = [(x, y) for x, y in pairs]
        xs = [x for p in pair_list for x in p]
        exact = assume_generating

    gens = {first(x) for x in xs}
    gens.update(second(x, y) for x, y in pair_list)
    gens = sorted((g for g in gens if not g.is_zero()), key=lambda g: g.normal_form)
    return Subgroup(ambient, tuple(gens)), exact


@dataclass(frozen=True)
class Gamma22:
    """``Gamma^2_2(eta)`` as a quotient of ``pi3 (x) Z/2 + pi3 (x) pi2`` (same ambient generators)."""

    eta: QuadraticMap
    ambient: FgAbGroup
    m_eta: Subgroup
    group: FgAbGroup
    exact: bool

    def tensor_element(self, a: Element, y: Element) -> Element:
        """Class of ``a (x) y`` from the ``pi3 (x) pi2`` summand."""
        mod2 = _mod2(self.eta.target)
        return Element(self.group, sum_element(mod2.zero(), pure_tensor(a, y)).coords)

    def mod2_element(self, a: Element) -> Element:
        """Class of ``a (x) 1`` from the ``pi3 (x) Z/2`` summand."""
        t = tensor_product(self.eta.target, self.eta.source)
        return Element(self.group, a.coords + (0,) * t.ambient_rank)


def gamma22(eta: QuadraticMap, pairs=None, assume_generating: bool = False) -> Gamma22:
    m, exact = m_eta_subgroup(eta, pairs, assume_generating)
    q, _ = m.quotient()
    return Gamma22(eta, m.ambient, m, q, exact)
