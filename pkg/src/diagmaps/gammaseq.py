"""Five-dimensional Gamma-sequences.

A Gamma-sequence is an exact sequence

    H5 -b5-> Gamma4 -i4-> pi4 -h4-> H4 -b4-> Gamma(pi2) -eta^-> pi3 -h3-> H3 -> 0

with H5 free, together with a short exact sequence
``Gamma^2_2(eta) -j-> Gamma4 -q-> Gamma T(pi2)``.  Gamma4 is supplied by the
caller (it is never constructed here except as the split candidate in
:func:`nontrivial_action_example`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .fgab import (
    Element,
    FgAbGroup,
    Homomorphism,
    Subgroup,
    cyclic,
    direct_sum,
    free,
    groups_isomorphic,
    hom_cokernel,
    hom_kernel,
    identity_hom,
    image_subgroup,
    kernel_subgroup,
    summand_inclusion,
    summand_projection,
    tensor_product,
    zero_hom,
)
from .gamma import Gamma22, QuadraticMap, gamma22, gamma_group, gamma_torsion
from .serialize import group_from_json, group_to_json, hom_from_json, hom_to_json
from .spheres import TargetData


def _gamma22_for(eta: QuadraticMap) -> Gamma22:
    # "polynomial" is exact and avoids enumerating an infinite pi2
    return gamma22(eta, None if eta.source.is_finite() else "polynomial")


@dataclass(frozen=True)
class GammaSequence:
    H3: FgAbGroup
    H4: FgAbGroup
    H5: FgAbGroup
    pi2: FgAbGroup
    pi3: FgAbGroup
    pi4: FgAbGroup
    eta: QuadraticMap
    gamma4: FgAbGroup
    gamma_t: FgAbGroup
    b5: Homomorphism
    i4: Homomorphism
    h4: Homomorphism
    b4: Homomorphism
    h3: Homomorphism
    j: Homomorphism
    q: Homomorphism
    g22: Gamma22 = field(compare=False, default=None)

    def __post_init__(self):
        if self.g22 is None:
            object.__setattr__(self, "g22", _gamma22_for(self.eta))

    @property
    def gamma_pi2(self) -> FgAbGroup:
        return gamma_group(self.pi2)[0]

    def replace(self, **changes) -> GammaSequence:
        fields = {k: getattr(self, k) for k in self.__dataclass_fields__ if k != "g22"}
        fields.update(changes)
        if "eta" not in changes:
            fields["g22"] = self.g22
        return GammaSequence(**fields)


@dataclass
class ValidationReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    @property
    def failure(self) -> tuple[str, str] | None:
        for name, passed, detail in self.checks:
            if not passed:
                return name, detail
        return None

    def __str__(self) -> str:
        if self.ok:
            return f"valid Gamma-sequence ({len(self.checks)} checks)"
        name, detail = self.failure
        return f"invalid at {name}: {detail}"


def _exact(incoming: Homomorphism, outgoing: Homomorphism) -> tuple[bool, str]:
    im, ker = image_subgroup(incoming), kernel_subgroup(outgoing)
    if not im.is_subgroup_of(ker):
        return False, "composite is not zero (image not inside kernel)"
    if not ker.is_subgroup_of(im):
        return False, f"kernel {ker.group} is larger than image {im.group}"
    return True, f"im = ker = {im.group}"


def validate_gamma_sequence(seq: GammaSequence) -> ValidationReport:
    """Check freeness, typing, exactness and the short exact sequence; stops at the first failure."""
    report = ValidationReport()
    g_pi2 = seq.gamma_pi2

    def record(name, passed, detail=""):
        report.checks.append((name, passed, detail))
        return passed

    if not record("H5 free", not seq.H5.invariant_factors, f"H5 = {seq.H5}"):
        return report
    typing = [
        ("b5", seq.b5, seq.H5, seq.gamma4), ("i4", seq.i4, seq.gamma4, seq.pi4),
        ("h4", seq.h4, seq.pi4, seq.H4), ("b4", seq.b4, seq.H4, g_pi2),
        ("eta^", seq.eta.eta_square, g_pi2, seq.pi3), ("h3", seq.h3, seq.pi3, seq.H3),
        ("j", seq.j, seq.g22.group, seq.gamma4), ("q", seq.q, seq.gamma4, seq.gamma_t),
    ]
    for name, h, src, tgt in typing:
        if not record(f"{name} typing", h.source == src and h.target == tgt, "source/target mismatch"):
            return report
    for node, inc, out in [
        ("Gamma4", seq.b5, seq.i4), ("pi4", seq.i4, seq.h4), ("H4", seq.h4, seq.b4),
        ("Gamma(pi2)", seq.b4, seq.eta.eta_square), ("pi3", seq.eta.eta_square, seq.h3),
    ]:
        ok, detail = _exact(inc, out)
        if not record(f"exact at {node}", ok, detail):
            return report
    if not record("h3 surjective", seq.h3.is_surjective(), f"coker h3 = {_coker(seq.h3)}"):
        return report
    gt = gamma_torsion(seq.pi2)
    if not record("Gamma T(pi2)", groups_isomorphic(gt, seq.gamma_t), f"expected {gt}, got {seq.gamma_t}"):
        return report
    if not record("j injective", seq.j.is_injective(), f"ker j = {kernel_subgroup(seq.j).group}"):
        return report
    if not record("q surjective", seq.q.is_surjective(), f"coker q = {_coker(seq.q)}"):
        return report
    ok, detail = _exact(seq.j, seq.q)
    record("im j = ker q", ok, detail)
    return report


def _coker(h: Homomorphism) -> FgAbGroup:
    return image_subgroup(h).quotient()[0]


# ---------------------------------------------------------------------------
# Bracket subgroups and isotropy
# ---------------------------------------------------------------------------


def bracket_subgroup(seq: GammaSequence, y: Element, level: str = "pi4") -> Subgroup:
    """Image of ``pi3 (x) <y>`` in Gamma^2_2(eta) (``level="gamma22"``) or in pi4."""
    if y.group != seq.pi2:
        raise InputError("y must be an element of pi2")
    gens = [seq.g22.tensor_element(a, y) for a in seq.pi3.generators()]
    if level == "gamma22":
        return Subgroup(seq.g22.group, tuple(gens))
    if level != "pi4":
        raise InputError("level must be 'pi4' or 'gamma22'")
    return Subgroup(seq.pi4, tuple(seq.i4(seq.j(g)) for g in gens))


@dataclass(frozen=True)
class SequenceIsotropy:
    I: Subgroup
    J: Subgroup
    quotient: FgAbGroup  # J_u / I_u


def isotropy_from_sequence(seq: GammaSequence, w: Element, u1: Element) -> SequenceIsotropy:
    """``I_u = [pi3, w]`` and ``J_u = [pi3, w] + [pi3, u']``.

    The caller asserts ``[u', u''] = 0`` for ``u'' = w + u'``; that condition is
    not visible in the sequence itself.
    """
    I = bracket_subgroup(seq, w)
    J = I.join(bracket_subgroup(seq, u1))
    return SequenceIsotropy(I, J, I.quotient_of(J))


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def minimal_sequence(pi2: FgAbGroup, pi3: FgAbGroup, eta: QuadraticMap | None = None) -> GammaSequence:
    """The smallest sequence around ``eta`` (default 0) with H5 = 0.

    Gamma4 = pi4 = Gamma^2_2(eta) + Gamma T(pi2) with i4 = id and h4 = 0,
    H4 = ker(eta^) with b4 its inclusion (Gamma(pi2) with b4 = id when eta = 0),
    H3 = coker(eta^) with h3 the projection (pi3 with h3 = id when eta = 0).
    """
    eta = eta or QuadraticMap.zero(pi2, pi3)
    g22 = _gamma22_for(eta)
    gt = gamma_torsion(pi2)
    parts = [g22.group, gt]
    gamma4 = direct_sum(*parts)
    g_pi2 = gamma_group(pi2)[0]
    if eta.is_zero():
        h4_group, b4 = g_pi2, identity_hom(g_pi2)
        h3_group, h3 = pi3, identity_hom(pi3)
    else:
        h4_group, b4 = hom_kernel(eta.eta_square)
        h3_group, h3 = hom_cokernel(eta.eta_square)
    h5 = free(0)
    return GammaSequence(
        H3=h3_group, H4=h4_group, H5=h5, pi2=pi2, pi3=pi3, pi4=gamma4, eta=eta, gamma4=gamma4, gamma_t=gt,
        b5=zero_hom(h5, gamma4), i4=identity_hom(gamma4), h4=zero_hom(gamma4, h4_group),
        b4=b4, h3=h3, j=summand_inclusion(parts, 0), q=summand_projection(parts, 1), g22=g22,
    )


@dataclass(frozen=True)
class ActionExample:
    sequence: GammaSequence
    validation: ValidationReport
    w: Element
    u1: Element
    isotropy: SequenceIsotropy
    expected_I: FgAbGroup  # pi3 (x) <w>
    expected_J: FgAbGroup  # pi3 (x) (<w> + <u'>)
    expected_orbit: FgAbGroup  # pi3 (x) <u'>

    @property
    def matches_prediction(self) -> bool:
        return (groups_isomorphic(self.isotropy.I.group, self.expected_I)
                and groups_isomorphic(self.isotropy.J.group, self.expected_J)
                and groups_isomorphic(self.isotropy.quotient, self.expected_orbit))

    @property
    def nontrivial(self) -> bool:
        return not self.isotropy.quotient.is_trivial()


def nontrivial_action_example(pi2_prime: FgAbGroup, w_order: int | None, u_order: int | None,
                              pi3: FgAbGroup) -> ActionExample:
    """Build ``pi2 = pi2' + <w> + <u'>`` with eta = 0, H5 = 0 and compute the orbit group.

    Orders are ``None`` (or 0) for infinite cyclic.
    """
    cw, cu = cyclic(w_order or 0), cyclic(u_order or 0)
    pi2 = direct_sum(pi2_prime, cw, cu)
    seq = minimal_sequence(pi2, pi3)
    k = pi2_prime.ambient_rank
    w, u1 = pi2.generator(k), pi2.generator(k + 1)
    return ActionExample(
        sequence=seq,
        validation=validate_gamma_sequence(seq),
        w=w,
        u1=u1,
        isotropy=isotropy_from_sequence(seq, w, u1),
        expected_I=tensor_product(pi3, cw),
        expected_J=tensor_product(pi3, direct_sum(cw, cu)),
        expected_orbit=tensor_product(pi3, cu),
    )


def target_from_sequence(seq: GammaSequence) -> TargetData:
    """Homotopy data in dimension 2 read off a Gamma-sequence.

    [a, y] for a in pi3, y in pi2 is the image of a (x) y in pi4; the product
    pi2 x pi2 -> pi3 is the bracket of eta.
    """
    g = seq.pi2.generators()
    p1n = tuple(tuple(seq.i4(seq.j(seq.g22.tensor_element(a, y))) for y in g) for a in seq.pi3.generators())
    pnn = tuple(tuple(seq.eta.bracket(x, y) for y in g) for x in g)
    return TargetData(2, seq.pi2, seq.pi3, seq.pi4, seq.pi3, p1n, pnn, tau_sign=-1,
                      name="realization of a Gamma-sequence").check()


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

_MAPS = ("b5", "i4", "h4", "b4", "h3", "j", "q")


def sequence_from_json(obj: dict) -> GammaSequence:
    try:
        groups = {k: group_from_json(obj[k]) for k in ("H3", "H4", "H5", "pi2", "pi3", "pi4", "gamma4")}
        g_pi2 = gamma_group(groups["pi2"])[0]
        eta = QuadraticMap(groups["pi2"], groups["pi3"], hom_from_json(obj["eta_square"], g_pi2, groups["pi3"]))
        g22 = _gamma22_for(eta)
        gamma_t = group_from_json(obj["gamma_t"]) if "gamma_t" in obj else gamma_torsion(groups["pi2"])
        ends = {
            "b5": (groups["H5"], groups["gamma4"]), "i4": (groups["gamma4"], groups["pi4"]),
            "h4": (groups["pi4"], groups["H4"]), "b4": (groups["H4"], g_pi2),
            "h3": (groups["pi3"], groups["H3"]), "j": (g22.group, groups["gamma4"]),
            "q": (groups["gamma4"], gamma_t),
        }
        maps = {k: hom_from_json(obj[k], *ends[k]) for k in _MAPS}
    except KeyError as exc:
        raise InputError(f"Gamma-sequence JSON is missing {exc}") from exc
    return GammaSequence(eta=eta, gamma_t=gamma_t, g22=g22, **groups, **maps)


def sequence_to_json(seq: GammaSequence) -> dict:
    out = {k: group_to_json(getattr(seq, k)) for k in ("H3", "H4", "H5", "pi2", "pi3", "pi4", "gamma4", "gamma_t")}
    out["eta_square"] = hom_to_json(seq.eta.eta_square)
    out.update({k: hom_to_json(getattr(seq, k)) for k in _MAPS})
    return out
