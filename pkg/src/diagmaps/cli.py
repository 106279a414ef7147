"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 malformed input.  Every subcommand
accepts ``--json`` for machine-readable output; text output is the default.
"""

from __future__ import annotations

import argparse
import sys
from functools import lru_cache
from pathlib import Path
from typing import Any, Sequence

from .errors import DomainError, InputError
from .fgab import FgAbGroup, IntMatrix, Subgroup, cyclic, direct_sum, smith_normal_form
from .gamma import QuadraticMap, gamma22, gamma_group, gamma_torsion
from .gammaseq import (
    isotropy_from_sequence,
    nontrivial_action_example,
    sequence_from_json,
    sequence_to_json,
    validate_gamma_sequence,
)
from .monoids import (
    BimodulePair,
    ExtElement,
    NMatrix,
    check_bimodule_axioms,
    format_table,
    multiplication_table,
    mn_compose,
)
from .orbits import diagonal, orbit_decomposition, selfmap_monoid
from .serialize import (
    dumps,
    element_from_json,
    element_to_json,
    group_from_json,
    group_to_json,
    hom_from_json,
    load_json,
    parse_group_text,
)
from .spheres import sphere_entry, target_from_json, target_sphere, target_sphere_product, v_group

TABLE_NOTE = "table data: sphere homotopy groups taken from the shipped table"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _load(arg: str) -> Any:
    return load_json(arg)


def _group_arg(arg: str) -> FgAbGroup:
    """A group given as a JSON file, inline JSON, or canonical text like ``Z x Z/3``."""
    text = arg.strip()
    if text.startswith(("{", '"')) or Path(text).is_file():
        return group_from_json(load_json(text))
    return parse_group_text(text)


def _subgroup_json(s: Subgroup) -> dict:
    return {"generators": [element_to_json(g) for g in s.generators], "group": group_to_json(s.group)}


# ---------------------------------------------------------------------------
# fgab
# ---------------------------------------------------------------------------


def _cmd_fgab_snf(args) -> tuple[Any, str]:
    obj = _load(args.matrix)
    rows = obj.get("matrix") if isinstance(obj, dict) else obj
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("matrix must be {'matrix': [[...], ...]}")
    cols = obj.get("cols") if isinstance(obj, dict) else None
    try:
        m = IntMatrix.from_rows(rows, cols)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad matrix: {exc}") from exc
    s, u, v = smith_normal_form(m)
    data = {"S": s.tolist(), "U": u.tolist(), "V": v.tolist(),
            "diagonal": [s.entries[i][i] for i in range(min(s.shape))]}
    text = "\n".join(f"{k} = {data[k]}" for k in ("diagonal", "S", "U", "V"))
    return data, text


def _cmd_fgab_group(args) -> tuple[Any, str]:
    g = _group_arg(args.group)
    return group_to_json(g), str(g)


# ---------------------------------------------------------------------------
# gamma
# ---------------------------------------------------------------------------


def _cmd_gamma_group(args) -> tuple[Any, str]:
    g = gamma_group(_group_arg(args.group))[0]
    return group_to_json(g), str(g)


def _cmd_gamma_torsion(args) -> tuple[Any, str]:
    g = gamma_torsion(_group_arg(args.group))
    return group_to_json(g), str(g)


def _cmd_gamma_gamma22(args) -> tuple[Any, str]:
    obj = _load(args.eta)
    try:
        pi2, pi3 = group_from_json(obj["pi2"]), group_from_json(obj["pi3"])
        eta_sq = hom_from_json(obj["eta_square"], gamma_group(pi2)[0], pi3)
    except (KeyError, TypeError) as exc:
        raise InputError(f"eta JSON needs pi2, pi3 and eta_square: {exc}") from exc
    g22 = gamma22(QuadraticMap(pi2, pi3, eta_sq), args.pairs)
    data = {"group": group_to_json(g22.group), "M_eta": _subgroup_json(g22.m_eta),
            "ambient": group_to_json(g22.ambient), "exact": g22.exact}
    text = f"{g22.group}\nM(eta) = {g22.m_eta.group} inside {g22.ambient}"
    return data, text


# ---------------------------------------------------------------------------
# monoid
# ---------------------------------------------------------------------------


def _cmd_monoid_table(args) -> tuple[Any, str]:
    data = [[p.name() for p in row] for row in multiplication_table()]
    return {"labels": ["I", "T", "P'", "P''"], "table": data}, format_table()


def _cmd_monoid_check(args) -> tuple[Any, str]:
    r = check_bimodule_axioms(args.n, args.scope, args.samples, args.seed)
    data = {"n": r.n, "scope": r.scope, "checked": r.checked, "passed": r.passed,
            "counterexample": r.counterexample, "seed": args.seed}
    return data, str(r)


def _ext_from_json(obj: Any, n: int) -> ExtElement:
    v = v_group(n)
    try:
        m = NMatrix.from_rows(obj["m"])
        pair = BimodulePair(element_from_json(obj["x"], v), element_from_json(obj["y"], v), n)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"element JSON needs m, x and y: {exc}") from exc
    return ExtElement(m, pair)


def _ext_to_json(e: ExtElement) -> dict:
    return {"m": e.m.rows(), "x": element_to_json(e.pair.x), "y": element_to_json(e.pair.y),
            "assumed_split": e.assumed_split}


def _cmd_monoid_compose(args) -> tuple[Any, str]:
    e, f = (_ext_from_json(_load(a), args.n) for a in (args.first, args.second))
    r = mn_compose(e, f, args.assume_split)
    data = _ext_to_json(r)
    text = f"m = {r.m.rows()} ({r.m.name()}), x = {list(r.pair.x.normal_form)}, y = {list(r.pair.y.normal_form)}"
    if r.assumed_split:
        text += "\n(assuming the extension splits)"
    return data, text


# ---------------------------------------------------------------------------
# orbits and selfmaps
# ---------------------------------------------------------------------------


def _target_arg(arg: str):
    if arg.startswith("builtin:"):
        parts = arg.split(":")
        if len(parts) != 3 or parts[1] not in ("sphere", "product"):
            raise InputError("builtin targets are builtin:sphere:<n> or builtin:product:<n>")
        try:
            n = int(parts[2])
        except ValueError as exc:
            raise InputError(f"bad dimension {parts[2]!r}") from exc
        return (target_sphere if parts[1] == "sphere" else target_sphere_product)(n)
    return target_from_json(_load(arg))


def _cmd_orbits(args) -> tuple[Any, str]:
    target = _target_arg(args.target)
    if args.v in ("diagonal", "id"):
        v = diagonal(target)
    else:
        v = element_from_json(_load(args.v), target.pi_n)
    report = orbit_decomposition(target, v)
    entries = []
    lines = [f"target {target.name}, n = {target.n}, v = {list(v.coords)}",
             "u | w | I_u | J_u | pi_2n/I_u | J_u/I_u"]
    for e in report.entries:
        entries.append({
            "u_first": element_to_json(e.u.first), "u_second": element_to_json(e.u.second),
            "steps": [element_to_json(s) for s in e.u.steps], "w": element_to_json(e.u.w),
            "I": _subgroup_json(e.I), "J": _subgroup_json(e.J),
            "cosets": group_to_json(e.cosets), "action": group_to_json(e.action),
        })
        lines.append(f"{e.u.describe()} | {list(e.u.w.coords)} | {e.I.group} | {e.J.group} | {e.cosets} | {e.action}")
    data = {"target": target.name, "n": target.n, "v": element_to_json(v), "entries": entries,
            "phi_injective": report.phi_injective, "class_count": report.class_count(),
            "orbit_count": report.orbit_count(), "table_data": report.table_data}
    lines.append(f"phi_injective = {str(report.phi_injective).lower()}")
    if report.class_count() is not None:
        lines.append(f"classes = {report.class_count()}, orbits = {report.orbit_count()}")
    if report.table_data:
        lines.append(TABLE_NOTE)
    return data, "\n".join(lines)


def _cmd_selfmaps(args) -> tuple[Any, str]:
    mon = selfmap_monoid(args.n)
    entry = sphere_entry(args.n)
    fibre = mon.fibre
    data = {"n": args.n, "base": mon.base, "V_n": group_to_json(fibre),
            "fibre": group_to_json(_square(fibre)), "order": mon.order,
            "split": mon.split_known, "caveat": mon.caveat(), "table_data": True,
            "source": entry.source}
    lines = [f"n = {args.n}", f"base monoid: {mon.base}", f"V_{args.n} = {fibre}",
             f"fibre V+V = {_square(fibre)}"]
    if mon.order is not None:
        lines.append(f"order = {mon.order} (split extension M x (V+V))")
    else:
        lines.append(f"order: infinite; {mon.caveat()}")
    lines.append(TABLE_NOTE)
    return data, "\n".join(lines)


def _square(g: FgAbGroup) -> FgAbGroup:
    return direct_sum(g, g)


# ---------------------------------------------------------------------------
# gammaseq
# ---------------------------------------------------------------------------


def _cmd_seq_validate(args) -> tuple[Any, str]:
    report = validate_gamma_sequence(sequence_from_json(_load(args.seq)))
    data = {"valid": report.ok, "checks": [{"check": n, "passed": p, "detail": d} for n, p, d in report.checks]}
    return data, str(report)


def _cmd_seq_isotropy(args) -> tuple[Any, str]:
    seq = sequence_from_json(_load(args.seq))
    w, u1 = (element_from_json(_load(a), seq.pi2) for a in (args.w, args.u))
    iso = isotropy_from_sequence(seq, w, u1)
    data = {"I": _subgroup_json(iso.I), "J": _subgroup_json(iso.J), "quotient": group_to_json(iso.quotient)}
    text = f"I_u = {iso.I.group}\nJ_u = {iso.J.group}\nJ_u/I_u = {iso.quotient}"
    return data, text


def _order_arg(text: str) -> int:
    text = text.strip().lower()
    if text in ("inf", "z", "0"):
        return 0
    try:
        k = int(text)
    except ValueError as exc:
        raise InputError(f"order must be 'inf' or a positive integer, got {text!r}") from exc
    if k < 1:
        raise InputError("order must be positive")
    return k


def _cmd_seq_example(args) -> tuple[Any, str]:
    parts = args.wu.split(",")
    if len(parts) != 2:
        raise InputError("--wu takes two orders, e.g. inf,4")
    w_order, u_order = (_order_arg(p) for p in parts)
    pi2_prime = _group_arg(args.pi2prime) if args.pi2prime else cyclic(1)
    ex = nontrivial_action_example(pi2_prime, w_order, u_order, _group_arg(args.pi3))
    iso = ex.isotropy
    data = {"sequence": sequence_to_json(ex.sequence), "valid": ex.validation.ok,
            "I": group_to_json(iso.I.group), "J": group_to_json(iso.J.group),
            "orbit_group": group_to_json(iso.quotient), "nontrivial_action": ex.nontrivial,
            "matches_prediction": ex.matches_prediction}
    text = "\n".join([
        f"pi2 = {ex.sequence.pi2}, pi3 = {ex.sequence.pi3}, eta = 0, H5 = 0",
        "fill: H4 = Gamma(pi2), b4 = id; H3 = pi3, h3 = id; pi4 = Gamma4 = Gamma^2_2(0) + Gamma T(pi2), i4 = id",
        str(ex.validation),
        f"I_u = {iso.I.group}",
        f"J_u = {iso.J.group}",
        f"orbit group J_u/I_u = {iso.quotient}",
        f"fundamental action {'non-trivial' if ex.nontrivial else 'trivial'}",
    ])
    return data, text


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="diagmaps", description="Maps under the diagonal: algebraic computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fg = sub.add_parser("fgab", help="abelian group utilities").add_subparsers(dest="op", required=True)
    q = fg.add_parser("snf", parents=[common], help="Smith normal form of an integer matrix")
    q.add_argument("matrix")
    q.set_defaults(func=_cmd_fgab_snf)
    q = fg.add_parser("group", parents=[common], help="canonical form of a group")
    q.add_argument("group")
    q.set_defaults(func=_cmd_fgab_group)

    ga = sub.add_parser("gamma", help="Whitehead's quadratic functor").add_subparsers(dest="op", required=True)
    for name, func in (("group", _cmd_gamma_group), ("torsion", _cmd_gamma_torsion)):
        q = ga.add_parser(name, parents=[common])
        q.add_argument("group")
        q.set_defaults(func=func)
    q = ga.add_parser("gamma22", parents=[common], help="Gamma^2_2 of a quadratic map")
    q.add_argument("eta")
    q.add_argument("--pairs", choices=["polynomial"], default=None,
                   help="exact generating set for infinite pi2")
    q.set_defaults(func=_cmd_gamma_gamma22)

    mo = sub.add_parser("monoid", help="the monoids N, M and M_n").add_subparsers(dest="op", required=True)
    q = mo.add_parser("table", parents=[common])
    q.set_defaults(func=_cmd_monoid_table)
    q = mo.add_parser("check", parents=[common], help="bimodule axioms")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--scope", choices=["M", "N"], default="M")
    q.add_argument("--samples", type=int, default=1000)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=_cmd_monoid_check)
    q = mo.add_parser("compose", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("--assume-split", action="store_true")
    q.set_defaults(func=_cmd_monoid_compose)

    q = sub.add_parser("orbits", parents=[common], help="classes of maps under the diagonal")
    q.add_argument("--target", required=True, help="JSON file or builtin:sphere:<n> / builtin:product:<n>")
    q.add_argument("--v", required=True, help="element JSON, or 'diagonal' / 'id'")
    q.set_defaults(func=_cmd_orbits)

    q = sub.add_parser("selfmaps", parents=[common], help="self-maps of S^n x S^n fixing the diagonal")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=_cmd_selfmaps)

    gs = sub.add_parser("gammaseq", help="Gamma-sequences").add_subparsers(dest="op", required=True)
    q = gs.add_parser("validate", parents=[common])
    q.add_argument("seq")
    q.set_defaults(func=_cmd_seq_validate)
    q = gs.add_parser("isotropy", parents=[common])
    q.add_argument("seq")
    q.add_argument("--w", required=True)
    q.add_argument("--u", required=True)
    q.set_defaults(func=_cmd_seq_isotropy)
    q = gs.add_parser("example", parents=[common])
    q.add_argument("--pi3", required=True, help="group, e.g. 'Z/3'")
    q.add_argument("--wu", default="inf,inf", help="orders of w and u', e.g. inf,4")
    q.add_argument("--pi2prime", default=None, help="extra summand of pi2")
    q.set_defaults(func=_cmd_seq_example)

    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        data, text = args.func(args)
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 2
    print(dumps(data) if args.json else text, file=out)
    return 0


def main() -> None:
    sys.exit(run())
