"""Sphere homotopy data and the homotopy data of a target space U.

The numerical values of pi_{2n}(S^n) and of the element [eta_{n+1}, i_n]
ship in ``data/spheres.json`` with citations; anything computed from them is
flagged with ``table_data = True``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import InputError, UnsupportedDimension
from .fgab import Element, FgAbGroup, cyclic, direct_sum, free, quotient_by
from .serialize import element_from_json, element_to_json, group_from_json, group_to_json

SUPPORTED = range(2, 8)


def whitehead_square_order(n: int) -> int | None:
    """Order of [i_n, i_n] in pi_{2n-1}(S^n): ``None`` (infinite) for n even, 1 for n = 1, 3, 7, else 2."""
    if n % 2 == 0:
        return None
    return 1 if n in (1, 3, 7) else 2


@dataclass(frozen=True)
class SphereEntry:
    n: int
    pi_n1: FgAbGroup
    pi_2n: FgAbGroup
    eta_bracket: Element
    ii_order: int | None
    source: str


def _load_entries() -> dict[int, SphereEntry]:
    raw = json.loads(resources.files("diagmaps").joinpath("data/spheres.json").read_text())
    table = {}
    for obj in raw["entries"]:
        pi_2n = group_from_json(obj["pi_2n"])
        order = obj["ii_order"]
        table[obj["n"]] = SphereEntry(
            n=obj["n"],
            pi_n1=group_from_json(obj["pi_n1"]),
            pi_2n=pi_2n,
            eta_bracket=element_from_json(obj["eta_bracket"], pi_2n),
            ii_order=None if order == "inf" else int(order),
            source=obj["source"],
        )
    return table


def check_table(table: dict[int, SphereEntry]) -> list[str]:
    """Invariants the shipped table must satisfy; returns the violations."""
    problems = []
    for n, e in table.items():
        expect = "Z" if n == 2 else "Z/2"
        if str(e.pi_n1) != expect:
            problems.append(f"n={n}: pi_(n+1)(S^n) is {e.pi_n1}, expected {expect}")
        if e.ii_order != whitehead_square_order(n):
            problems.append(f"n={n}: order of [i_n,i_n] is {e.ii_order}")
        if n in (2, 3) and not e.eta_bracket.is_zero():
            problems.append(f"n={n}: [eta, i_n] must vanish")
        if n in (4, 5) and e.eta_bracket.is_zero():
            problems.append(f"n={n}: [eta, i_n] must be nonzero")
    return problems


@lru_cache(maxsize=None)
def sphere_table() -> dict[int, SphereEntry]:
    table = _load_entries()
    problems = check_table(table)
    if problems:
        raise RuntimeError("corrupt sphere table: " + "; ".join(problems))
    return table


def sphere_entry(n: int) -> SphereEntry:
    if n not in SUPPORTED:
        raise UnsupportedDimension(n, SUPPORTED)
    return sphere_table()[n]


def v_group(n: int) -> FgAbGroup:
    """``V_n = pi_{2n}(S^n) / <[eta_{n+1}, i_n]>``."""
    e = sphere_entry(n)
    return quotient_by(e.pi_2n, [e.eta_bracket])[0]


# ---------------------------------------------------------------------------
# Target data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TargetData:
    """Homotopy data of a target ``U`` in dimension ``n``.

    ``P1n[i][j]`` is the Whitehead product of generator ``i`` of pi_{n+1} with
    generator ``j`` of pi_n (in pi_{2n}); ``Pnn[i][j]`` is the product of
    generators ``i`` and ``j`` of pi_n (in pi_{2n-1}).  Both extend bilinearly.
    """

    n: int
    pi_n: FgAbGroup
    pi_n1: FgAbGroup
    pi_2n: FgAbGroup
    pi_2n1: FgAbGroup
    P1n: tuple[tuple[Element, ...], ...]
    Pnn: tuple[tuple[Element, ...], ...]
    tau_sign: int
    table_data: bool = False
    name: str = "custom"
    kind: str = "custom"  # "sphere" and "product" have structurally solved realizability

    def p1n(self, alpha: Element, x: Element) -> Element:
        out = self.pi_2n.zero()
        for a, row in zip(alpha.coords, self.P1n):
            if a:
                for b, val in zip(x.coords, row):
                    if b:
                        out = out + (a * b) * val
        return out

    def pnn(self, x: Element, y: Element) -> Element:
        out = self.pi_2n1.zero()
        for a, row in zip(x.coords, self.Pnn):
            if a:
                for b, val in zip(y.coords, row):
                    if b:
                        out = out + (a * b) * val
        return out

    def problems(self) -> list[str]:
        out = []
        if self.tau_sign not in (1, -1):
            out.append("tau_sign must be +1 or -1")
        k1, kn = self.pi_n1.ambient_rank, self.pi_n.ambient_rank
        if len(self.P1n) != k1 or any(len(r) != kn for r in self.P1n):
            return out + [f"P1n must be {k1}x{kn}"]
        if len(self.Pnn) != kn or any(len(r) != kn for r in self.Pnn):
            return out + [f"Pnn must be {kn}x{kn}"]
        for row in self.P1n:
            if any(v.group != self.pi_2n for v in row):
                out.append("P1n values must lie in pi_2n")
        for row in self.Pnn:
            if any(v.group != self.pi_2n1 for v in row):
                out.append("Pnn values must lie in pi_2n1")
        if out:
            return out
        # bilinear extension must respect relations on both sides
        for r in self.pi_n1.relations.columns():
            for x in self.pi_n.generators():
                if not self.p1n(self.pi_n1.element(r), x).is_zero():
                    out.append("P1n does not vanish on a relation of pi_n1")
        for s in self.pi_n.relations.columns():
            rel = self.pi_n.element(s)
            for a in self.pi_n1.generators():
                if not self.p1n(a, rel).is_zero():
                    out.append("P1n does not vanish on a relation of pi_n")
            for x in self.pi_n.generators():
                if not (self.pnn(rel, x).is_zero() and self.pnn(x, rel).is_zero()):
                    out.append("Pnn does not vanish on a relation of pi_n")
        sign = (-1) ** self.n
        for i in range(kn):
            for j in range(kn):
                if self.Pnn[i][j] != sign * self.Pnn[j][i]:
                    out.append(f"Pnn violates graded symmetry at ({i}, {j})")
        return out

    def check(self) -> TargetData:
        problems = self.problems()
        if problems:
            raise InputError("invalid target data: " + "; ".join(problems))
        return self


def target_sphere(n: int) -> TargetData:
    """The target ``S^n``; pi_{2n-1} is represented by the cyclic subgroup generated by [i_n, i_n]."""
    e = sphere_entry(n)
    pi_2n1 = cyclic(e.ii_order or 0)
    return TargetData(
        n=n,
        pi_n=free(1),
        pi_n1=e.pi_n1,
        pi_2n=e.pi_2n,
        pi_2n1=pi_2n1,
        P1n=((e.eta_bracket,),),
        Pnn=((pi_2n1.generator(0),),),
        tau_sign=(-1) ** (n - 1),
        table_data=True,
        name=f"S^{n}",
        kind="sphere",
    )


def target_sphere_product(n: int) -> TargetData:
    """``S^n x S^n``: groups doubled; products between different factors vanish."""
    s = target_sphere(n)

    def double(g):
        return direct_sum(g, g)

    pi_n, pi_n1, pi_2n, pi_2n1 = map(double, (s.pi_n, s.pi_n1, s.pi_2n, s.pi_2n1))

    def block(table, k_rows, k_cols, group):
        rows = []
        for half_i in range(2):
            for i in range(k_rows):
                row = []
                for half_j in range(2):
                    for j in range(k_cols):
                        val = table[i][j].coords if half_i == half_j else (0,) * len(table[i][j].coords)
                        pad = (0,) * len(val)
                        row.append(group.element(val + pad if half_i == 0 else pad + val))
                rows.append(tuple(row))
        return tuple(rows)

    return TargetData(
        n=n,
        pi_n=pi_n,
        pi_n1=pi_n1,
        pi_2n=pi_2n,
        pi_2n1=pi_2n1,
        P1n=block(s.P1n, s.pi_n1.ambient_rank, s.pi_n.ambient_rank, pi_2n),
        Pnn=block(s.Pnn, s.pi_n.ambient_rank, s.pi_n.ambient_rank, pi_2n1),
        tau_sign=(-1) ** (n - 1),
        table_data=True,
        name=f"S^{n} x S^{n}",
        kind="product",
    )


def target_from_json(obj: dict) -> TargetData:
    try:
        n = int(obj["n"])
        groups = {key: group_from_json(obj[key]) for key in ("pi_n", "pi_n1", "pi_2n", "pi_2n1")}
        p1n = tuple(tuple(element_from_json(v, groups["pi_2n"]) for v in row) for row in obj["P1n"])
        pnn = tuple(tuple(element_from_json(v, groups["pi_2n1"]) for v in row) for row in obj["Pnn"])
        tau = int(obj.get("tau_sign", (-1) ** (n - 1)))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad target data: missing or malformed {exc}") from exc
    return TargetData(n, P1n=p1n, Pnn=pnn, tau_sign=tau, **groups).check()


def target_to_json(t: TargetData) -> dict:
    return {
        "n": t.n,
        "pi_n": group_to_json(t.pi_n),
        "pi_n1": group_to_json(t.pi_n1),
        "pi_2n": group_to_json(t.pi_2n),
        "pi_2n1": group_to_json(t.pi_2n1),
        "P1n": [[element_to_json(v) for v in row] for row in t.P1n],
        "Pnn": [[element_to_json(v) for v in row] for row in t.Pnn],
        "tau_sign": t.tau_sign,
    }
