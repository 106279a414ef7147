"""Finitely generated abelian groups presented by integer matrices.

A group is ``Z^k / L`` where ``L`` is the lattice spanned by the columns of
a relation matrix.  Every question about subgroups, quotients, kernels and
membership is reduced to a Smith normal form computation over Python's
arbitrary-precision integers.

>>> G = group_from_presentation(2, IntMatrix.from_columns([[2, 0], [0, 3]], 2))
>>> print(G)
Z/6
>>> x = G.element([1, 1])
>>> G.element_order(x)
6
>>> print(tensor_product(cyclic(4), cyclic(6)))
Z/2
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import ForeignElement, InfiniteEnumeration, NotWellDefined, PresentationError


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix with explicit shape (so 3x0 and 0x3 are distinct)."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise PresentationError(f"entries do not have shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(a) for a in r) for r in rows]
        if cols is None:
            if not rows:
                raise PresentationError("column count of an empty row list is ambiguous")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        columns = [tuple(int(a) for a in c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise PresentationError(f"every column must have length {rows}")
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_columns(self.entries, self.cols) if self.rows else IntMatrix.zeros(self.cols, 0)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise PresentationError("hstack needs equal row counts")
        return IntMatrix(self.rows, self.cols + other.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise PresentationError(f"vector of length {len(vector)} for a {self.rows}x{self.cols} matrix")
        return tuple(sum(a * b for a, b in zip(r, vector)) for r in self.entries)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise PresentationError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise PresentationError("determinant of a non-square matrix")
        n = self.rows
        a = [list(r) for r in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Smith:
    diagonal: tuple[int, ...]  # min(rows, cols) entries, nonnegative, divisibility chain
    U: IntMatrix
    U_inv: IntMatrix
    V: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def _smith(m: IntMatrix) -> _Smith:
    nr, nc = m.shape
    a = [list(r) for r in m.entries]
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    Ui = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]

    # Every row operation is mirrored on U and, inverted, on the columns of U_inv.
    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row[dst] += q * row[src]
        ad, as_ = a[dst], a[src]
        for k in range(nc):
            ad[k] += q * as_[k]
        ud, us = U[dst], U[src]
        for k in range(nr):
            ud[k] += q * us[k]
        for r in Ui:
            r[src] -= q * r[dst]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_col(dst, src, q):  # col[dst] += q * col[src]
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    diag = []
    for t in range(min(nr, nc)):
        while True:
            # smallest absolute nonzero entry, row-major first
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            negate_row(t)
        diag.append(a[t][t])

    def freeze(rows, ncols):
        return IntMatrix(len(rows), ncols, tuple(tuple(r) for r in rows))

    return _Smith(tuple(diag), freeze(U, nr), freeze(Ui, nr), freeze(V, nc))


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(S, U, V)`` with ``U @ m @ V == S``, ``U``, ``V`` unimodular.

    ``S`` is diagonal with nonnegative entries ``s_1 | s_2 | ...`` (zeros last).
    Pivots are chosen as the smallest absolute nonzero entry, first in
    row-major order, so the output is deterministic.

    >>> S, U, V = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    >>> S.tolist()
    [[1, 0], [0, 6]]
    """
    sm = _smith(m)
    rows = [[0] * m.cols for _ in range(m.rows)]
    for i, d in enumerate(sm.diagonal):
        rows[i][i] = d
    return IntMatrix(m.rows, m.cols, tuple(tuple(r) for r in rows)), sm.U, sm.V


def integer_kernel(m: IntMatrix) -> list[tuple[int, ...]]:
    """A basis of ``{x in Z^cols : m x = 0}``."""
    sm = _smith(m)
    return [sm.V.column(j) for j in range(sm.rank, m.cols)]


def lattice_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """A basis of the lattice spanned by the columns of ``m``."""
    sm = _smith(m)
    # m V = U^-1 S, so the first rank columns of m V span the column lattice.
    mv = m @ sm.V
    return [mv.column(j) for j in range(sm.rank)]


class _Solver:
    """Solve ``A y = b`` over the integers for a fixed ``A``."""

    def __init__(self, a: IntMatrix):
        self.a = a
        self.sm = _smith(a)

    def solve(self, b: Sequence[int]) -> tuple[int, ...] | None:
        sm, a = self.sm, self.a
        c = sm.U.apply(b)
        z = [0] * a.cols
        for i, ci in enumerate(c):
            d = sm.diagonal[i] if i < len(sm.diagonal) else 0
            if d == 0:
                if ci:
                    return None
            elif ci % d:
                return None
            else:
                z[i] = ci // d
        return sm.V.apply(z)


# ---------------------------------------------------------------------------
# Groups and elements
# ---------------------------------------------------------------------------


def _format_canonical(free_rank: int, factors: Sequence[int]) -> str:
    parts = []
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")
    parts.extend(f"Z/{d}" for d in factors)
    return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class FgAbGroup:
    """``Z^ambient_rank`` modulo the column span of ``relations``.

    Groups compare equal when their presentations are identical; use
    :func:`groups_isomorphic` for abstract isomorphism.
    """

    ambient_rank: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.rows != self.ambient_rank:
            raise PresentationError(
                f"relation matrix has {self.relations.rows} rows, ambient rank is {self.ambient_rank}"
            )

    @cached_property
    def _smith(self) -> _Smith:
        return _smith(self.relations)

    @cached_property
    def _moduli(self) -> tuple[int, ...]:
        # one modulus per ambient coordinate after the change of basis U; 0 = free
        diag = list(self._smith.diagonal)
        return tuple(diag + [0] * (self.ambient_rank - len(diag)))

    @cached_property
    def _kept(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self._moduli) if d != 1)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self._moduli if d > 1)

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self._moduli if d == 0)

    @property
    def canonical_form(self) -> tuple[int, tuple[int, ...]]:
        return self.free_rank, self.invariant_factors

    def __str__(self) -> str:
        return _format_canonical(self.free_rank, self.invariant_factors)

    def is_trivial(self) -> bool:
        return not self._kept

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Group order, or ``None`` when infinite."""
        return math.prod(self.invariant_factors) if self.is_finite() else None

    def exponent(self) -> int | None:
        if not self.is_finite():
            return None
        return self.invariant_factors[-1] if self.invariant_factors else 1

    # elements ---------------------------------------------------------

    def element(self, coords: Iterable[int]) -> Element:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ambient_rank:
            raise PresentationError(f"element needs {self.ambient_rank} coordinates, got {len(coords)}")
        return Element(self, coords)

    def zero(self) -> Element:
        return Element(self, (0,) * self.ambient_rank)

    def generator(self, i: int) -> Element:
        return Element(self, tuple(int(i == j) for j in range(self.ambient_rank)))

    def generators(self) -> list[Element]:
        return [self.generator(i) for i in range(self.ambient_rank)]

    def normal_form(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates in ``Z/d_1 + ... + Z/d_k + Z^r`` (torsion first).

        Two ambient vectors give the same normal form iff they differ by a relation.
        """
        y = self._smith.U.apply(coords)
        return tuple(y[i] % self._moduli[i] if self._moduli[i] else y[i] for i in self._kept)

    def from_normal_form(self, canonical: Sequence[int]) -> Element:
        y = [0] * self.ambient_rank
        for i, c in zip(self._kept, canonical, strict=True):
            y[i] = int(c)
        return Element(self, self._smith.U_inv.apply(y))

    def element_is_zero(self, coords: Sequence[int]) -> bool:
        y = self._smith.U.apply(coords)
        return all((yi % d == 0) if d else yi == 0 for yi, d in zip(y, self._moduli))

    def element_order(self, e: Element) -> int | None:
        nf = self.normal_form(e.coords)
        order = 1
        for c, i in zip(nf, self._kept):
            d = self._moduli[i]
            if d == 0:
                if c:
                    return None
            elif c:
                order = math.lcm(order, d // math.gcd(c, d))
        return order

    def elements(self) -> Iterator[Element]:
        """All elements, in lexicographic order of their normal forms."""
        if not self.is_finite():
            raise InfiniteEnumeration(f"cannot enumerate the infinite group {self}")
        for nf in itertools.product(*(range(self._moduli[i]) for i in self._kept)):
            yield self.from_normal_form(nf)


@dataclass(frozen=True, eq=False)
class Element:
    """An ambient coordinate vector read modulo the relations of ``group``."""

    group: FgAbGroup
    coords: tuple[int, ...]

    def _check(self, other: Element) -> None:
        if not isinstance(other, Element) or (other.group is not self.group and other.group != self.group):
            raise ForeignElement("elements belong to different groups")

    def __add__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Element:
        return Element(self.group, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> Element:
        if not isinstance(k, int):
            return NotImplemented
        return Element(self.group, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.group.element_is_zero(self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        if other.group is not self.group and other.group != self.group:
            return False
        return self.group.element_is_zero(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __hash__(self) -> int:
        return hash(self.group.normal_form(self.coords))

    @property
    def normal_form(self) -> tuple[int, ...]:
        return self.group.normal_form(self.coords)

    def __repr__(self) -> str:
        return f"Element({list(self.coords)} in {self.group})"


def element_is_zero(e: Element) -> bool:
    return e.is_zero()


def group_from_presentation(ambient_rank: int, relations: IntMatrix | Sequence[Sequence[int]] | None = None) -> FgAbGroup:
    """Build ``Z^ambient_rank / <relations>``; ``relations`` may be given as a list of columns."""
    if relations is None:
        relations = IntMatrix.zeros(ambient_rank, 0)
    elif not isinstance(relations, IntMatrix):
        relations = IntMatrix.from_columns(relations, ambient_rank)
    if relations.rows != ambient_rank:
        raise PresentationError(f"relations have {relations.rows} rows, expected {ambient_rank}")
    return FgAbGroup(ambient_rank, relations)


def free(rank: int) -> FgAbGroup:
    return group_from_presentation(rank)


def cyclic(d: int) -> FgAbGroup:
    """``Z/d``; ``d = 0`` gives ``Z``."""
    return group_from_presentation(1, [[d]] if d else None)


def from_invariants(free_rank: int = 0, factors: Sequence[int] = ()) -> FgAbGroup:
    factors = [d for d in factors if d != 1]
    k = len(factors) + free_rank
    cols = [[d if i == j else 0 for i in range(k)] for j, d in enumerate(factors)]
    return group_from_presentation(k, cols)


def groups_isomorphic(a: FgAbGroup, b: FgAbGroup) -> bool:
    return a.canonical_form == b.canonical_form


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Homomorphism:
    """Sends ambient generator ``j`` of ``source`` to column ``j`` of ``matrix``."""

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __call__(self, x: Element) -> Element:
        if x.group is not self.source and x.group != self.source:
            raise ForeignElement("element is not in the source of this homomorphism")
        return Element(self.target, self.matrix.apply(x.coords))

    def compose(self, inner: Homomorphism) -> Homomorphism:
        """``self`` after ``inner``."""
        if inner.target != self.source:
            raise ForeignElement("cannot compose: target and source differ")
        return Homomorphism(inner.source, self.target, self.matrix @ inner.matrix)

    __matmul__ = compose

    def images(self) -> list[Element]:
        return [Element(self.target, c) for c in self.matrix.columns()]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.images())

    def is_injective(self) -> bool:
        return hom_kernel(self)[0].is_trivial()

    def is_surjective(self) -> bool:
        return hom_cokernel(self)[0].is_trivial()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()


def hom_make(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix | Sequence[Sequence[int]]) -> Homomorphism:
    """Validated homomorphism; ``matrix`` is ``target.ambient_rank x source.ambient_rank``."""
    if not isinstance(matrix, IntMatrix):
        matrix = IntMatrix.from_rows(matrix, source.ambient_rank) if target.ambient_rank else \
            IntMatrix.zeros(0, source.ambient_rank)
    if matrix.shape != (target.ambient_rank, source.ambient_rank):
        raise PresentationError(
            f"matrix shape {matrix.shape} does not match {target.ambient_rank}x{source.ambient_rank}"
        )
    for j, rel in enumerate(source.relations.columns()):
        if not target.element_is_zero(matrix.apply(rel)):
            raise NotWellDefined(f"relation {j} of the source does not map into the relations of the target")
    return Homomorphism(source, target, matrix)


def hom_from_images(source: FgAbGroup, target: FgAbGroup, images: Sequence[Element | Sequence[int]]) -> Homomorphism:
    cols = [e.coords if isinstance(e, Element) else tuple(e) for e in images]
    return hom_make(source, target, IntMatrix.from_columns(cols, target.ambient_rank))


def identity_hom(g: FgAbGroup) -> Homomorphism:
    return Homomorphism(g, g, IntMatrix.identity(g.ambient_rank))


def zero_hom(source: FgAbGroup, target: FgAbGroup) -> Homomorphism:
    return Homomorphism(source, target, IntMatrix.zeros(target.ambient_rank, source.ambient_rank))


def subgroup_generated(g: FgAbGroup, elements: Sequence[Element]) -> tuple[FgAbGroup, Homomorphism]:
    """The subgroup spanned by ``elements``, as an abstract group with its inclusion.

    The abstract group has one ambient generator per element given.
    """
    for e in elements:
        if e.group is not g and e.group != g:
            raise ForeignElement("subgroup generators must lie in the ambient group")
    t = len(elements)
    gens = IntMatrix.from_columns([e.coords for e in elements], g.ambient_rank)
    # c in Z^t is a relation iff gens c lies in the relation lattice of g
    ker = integer_kernel(gens.hstack(g.relations))
    sub = group_from_presentation(t, [v[:t] for v in ker])
    return sub, Homomorphism(sub, g, gens)


def quotient_by(g: FgAbGroup, elements: Sequence[Element]) -> tuple[FgAbGroup, Homomorphism]:
    for e in elements:
        if e.group is not g and e.group != g:
            raise ForeignElement("quotient generators must lie in the ambient group")
    extra = IntMatrix.from_columns([e.coords for e in elements], g.ambient_rank)
    q = FgAbGroup(g.ambient_rank, g.relations.hstack(extra))
    return q, Homomorphism(g, q, IntMatrix.identity(g.ambient_rank))


def hom_kernel(h: Homomorphism) -> tuple[FgAbGroup, Homomorphism]:
    k = h.source.ambient_rank
    sols = integer_kernel(h.matrix.hstack(h.target.relations))
    return subgroup_generated(h.source, [Element(h.source, v[:k]) for v in sols])


def hom_image(h: Homomorphism) -> tuple[FgAbGroup, Homomorphism]:
    return subgroup_generated(h.target, h.images())


def hom_cokernel(h: Homomorphism) -> tuple[FgAbGroup, Homomorphism]:
    return quotient_by(h.target, h.images())


def homology(incoming: Homomorphism, outgoing: Homomorphism) -> FgAbGroup:
    """``ker(outgoing) / im(incoming)`` for composable maps with zero composite."""
    if incoming.target != outgoing.source:
        raise ForeignElement("maps are not composable")
    kgroup, incl = hom_kernel(outgoing)
    solver = _Solver(incl.matrix.hstack(incl.target.relations))
    lifted = []
    for img in incoming.images():
        sol = solver.solve(img.coords)
        if sol is None:
            raise NotWellDefined("image of the incoming map is not contained in the kernel")
        lifted.append(Element(kgroup, sol[:kgroup.ambient_rank]))
    return quotient_by(kgroup, lifted)[0]


# ---------------------------------------------------------------------------
# Subgroups of a fixed ambient group
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Subgroup:
    """The span of ``generators`` inside ``ambient``."""

    ambient: FgAbGroup
    generators: tuple[Element, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for e in self.generators:
            if e.group != self.ambient:
                raise ForeignElement("subgroup generator outside the ambient group")

    @cached_property
    def _solver(self) -> _Solver:
        gens = IntMatrix.from_columns([e.coords for e in self.generators], self.ambient.ambient_rank)
        return _Solver(gens.hstack(self.ambient.relations))

    @cached_property
    def _abstract(self) -> tuple[FgAbGroup, Homomorphism]:
        return subgroup_generated(self.ambient, list(self.generators))

    @property
    def group(self) -> FgAbGroup:
        return self._abstract[0]

    @property
    def inclusion(self) -> Homomorphism:
        return self._abstract[1]

    def contains(self, x: Element) -> bool:
        if x.group != self.ambient:
            raise ForeignElement("element outside the ambient group")
        return self._solver.solve(x.coords) is not None

    __contains__ = contains

    def is_subgroup_of(self, other: Subgroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_as(self, other: Subgroup) -> bool:
        return self.is_subgroup_of(other) and other.is_subgroup_of(self)

    def join(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.ambient, self.generators + other.generators)

    def is_trivial(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def quotient(self) -> tuple[FgAbGroup, Homomorphism]:
        """``ambient / self``."""
        return quotient_by(self.ambient, list(self.generators))

    def quotient_of(self, larger: Subgroup) -> FgAbGroup:
        """``larger / self`` for ``self`` contained in ``larger``."""
        q, _ = self.quotient()
        return subgroup_generated(q, [Element(q, g.coords) for g in larger.generators])[0]

    def order(self) -> int | None:
        return self.group.order()

    def elements(self) -> set[Element]:
        return {g for g in self.ambient.elements() if self.contains(g)}


def image_subgroup(h: Homomorphism) -> Subgroup:
    return Subgroup(h.target, tuple(h.images()))


def kernel_subgroup(h: Homomorphism) -> Subgroup:
    _, incl = hom_kernel(h)
    return Subgroup(h.source, tuple(incl.images()))


# ---------------------------------------------------------------------------
# Sums and tensor products
# ---------------------------------------------------------------------------


def _block_diagonal(mats: Sequence[IntMatrix]) -> IntMatrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            out[r0 + i][c0:c0 + m.cols] = m.entries[i]
        r0 += m.rows
        c0 += m.cols
    return IntMatrix(rows, cols, tuple(tuple(r) for r in out))


@lru_cache(maxsize=None)
def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    """Direct sum; ambient coordinates are concatenated in argument order."""
    return FgAbGroup(sum(g.ambient_rank for g in groups), _block_diagonal([g.relations for g in groups]))


def summand_inclusion(groups: Sequence[FgAbGroup], index: int) -> Homomorphism:
    total = direct_sum(*groups)
    offset = sum(g.ambient_rank for g in groups[:index])
    k = groups[index].ambient_rank
    cols = [[int(i == offset + j) for i in range(total.ambient_rank)] for j in range(k)]
    return Homomorphism(groups[index], total, IntMatrix.from_columns(cols, total.ambient_rank))


def summand_projection(groups: Sequence[FgAbGroup], index: int) -> Homomorphism:
    total = direct_sum(*groups)
    offset = sum(g.ambient_rank for g in groups[:index])
    k = groups[index].ambient_rank
    rows = [[int(j == offset + i) for j in range(total.ambient_rank)] for i in range(k)]
    return Homomorphism(total, groups[index], IntMatrix(k, total.ambient_rank, tuple(map(tuple, rows))))


def sum_element(*elements: Element) -> Element:
    """The element ``(e_1, ..., e_k)`` of the direct sum of the elements' groups."""
    total = direct_sum(*(e.group for e in elements))
    return Element(total, tuple(c for e in elements for c in e.coords))


@lru_cache(maxsize=None)
def tensor_product(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """``a (x) b`` on generators ``a_i (x) b_j`` at ambient index ``i * rank(b) + j``."""
    ka, kb = a.ambient_rank, b.ambient_rank
    cols = []
    for r in a.relations.columns():
        for j in range(kb):
            cols.append([r[i] if jj == j else 0 for i in range(ka) for jj in range(kb)])
    for i in range(ka):
        for s in b.relations.columns():
            cols.append([s[jj] if ii == i else 0 for ii in range(ka) for jj in range(kb)])
    return group_from_presentation(ka * kb, cols)


def pure_tensor(x: Element, y: Element) -> Element:
    """``x (x) y`` in ``tensor_product(x.group, y.group)``."""
    t = tensor_product(x.group, y.group)
    return Element(t, tuple(p * q for p in x.coords for q in y.coords))


def tensor_hom(f: Homomorphism, g: Homomorphism) -> Homomorphism:
    """``f (x) g`` between the tensor products."""
    src = tensor_product(f.source, g.source)
    tgt = tensor_product(f.target, g.target)
    fm, gm = f.matrix, g.matrix
    rows = [[fm.entries[i][k] * gm.entries[j][l] for k in range(fm.cols) for l in range(gm.cols)]
            for i in range(fm.rows) for j in range(gm.rows)]
    return Homomorphism(src, tgt, IntMatrix(len(rows), src.ambient_rank, tuple(map(tuple, rows))))
