import io
import json
import subprocess
import sys

import pytest

from diagmaps.cli import run
from diagmaps.gammaseq import (
    minimal_sequence,
    sequence_from_json,
    sequence_to_json,
    target_from_sequence,
    validate_gamma_sequence,
)
from diagmaps.fgab import cyclic, free
from diagmaps.serialize import group_from_json
from diagmaps.spheres import target_sphere_product, target_to_json

GOLDEN_TABLE = """\
    | I  | T  | P' | P''
------------------------
I   | I  | T  | P' | P''
T   | T  | I  | P' | P''
P'  | P' | P''| P' | P''
P'' | P''| P' | P' | P''
"""


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_monoid_table_golden():
    code, out, _ = call("monoid", "table")
    assert code == 0 and out == GOLDEN_TABLE
    data = call_json("monoid", "table")
    assert data["table"][2] == ["P'", "P''", "P'", "P''"]


def test_selfmaps():
    code, out, _ = call("selfmaps", "--n", "2")
    assert code == 0
    assert "order = 16" in out and "base monoid: M" in out and "Z/2 x Z/2" in out and "table data" in out
    data = call_json("selfmaps", "--n", "4")
    assert data["order"] == 16 and data["V_n"]["canonical"] == "Z/2"
    odd = call_json("selfmaps", "--n", "3")
    assert odd["order"] is None and odd["caveat"]


@pytest.mark.parametrize("argv, code", [
    (("selfmaps", "--n", "99"), 1),
    (("selfmaps",), 2),
    (("selfmaps", "--n", "two"), 2),
    (("nonsense",), 2),
    (("monoid", "table", "--bogus"), 2),
    (("monoid", "compose", "--n", "3", '{"m": [[1,0],[0,1]], "x": [0], "y": [0]}', '{"m": [[1,0],[0,1]], "x": [0], "y": [0]}'), 1),
    (("fgab", "group", "{not json"), 2),
    (("fgab", "group", "/no/such/file.json"), 2),
    (("orbits", "--target", "builtin:torus:2", "--v", "id"), 2),
    (("orbits", "--target", "builtin:sphere:9", "--v", "id"), 1),
])
def test_exit_codes(argv, code):
    got, _, err = call(*argv)
    assert got == code
    assert err.startswith("error:")


def test_fgab_commands():
    data = call_json("fgab", "snf", '{"matrix": [[2, 0], [0, 3]]}')
    assert data["diagonal"] == [1, 6]
    code, out, _ = call("fgab", "group", '{"ambient_rank": 2, "relations": [[2, 0], [0, 2]]}')
    assert out.strip() == "Z/2 x Z/2"
    code, out, _ = call("fgab", "group", "Z/6 x Z/4 x Z")
    assert out.strip() == "Z x Z/2 x Z/12"


def test_gamma_commands(tmp_path):
    assert call("gamma", "group", "Z/2")[1].strip() == "Z/4"
    assert call("gamma", "torsion", "Z/6")[1].strip() == "Z/2"
    eta = {"pi2": "Z/2", "pi3": "Z/2", "eta_square": {"matrix": [[1]]}}
    path = tmp_path / "eta.json"
    path.write_text(json.dumps(eta))
    data = call_json("gamma", "gamma22", str(path))
    assert data["group"]["canonical"] == "0" and data["exact"]
    free_eta = {"pi2": "Z", "pi3": "Z/2", "eta_square": {"matrix": [[1]]}}
    assert call("gamma", "gamma22", json.dumps(free_eta))[0] == 1
    assert call("gamma", "gamma22", json.dumps(free_eta), "--pairs", "polynomial")[0] == 0


def test_monoid_commands():
    data = call_json("monoid", "check", "--n", "2", "--scope", "N", "--seed", "0")
    assert not data["passed"] and data["counterexample"]["law"] == "right multiplicativity"
    assert call_json("monoid", "check", "--n", "3", "--scope", "N")["passed"]
    e = '{"m": [[0,1],[1,0]], "x": [1], "y": [0]}'
    f = '{"m": [[0,1],[1,0]], "x": [0], "y": [1]}'
    r = call_json("monoid", "compose", "--n", "2", e, f)
    assert r["m"] == [[1, 0], [0, 1]] and r["x"] == {"coords": [2]} and r["y"] == {"coords": [0]}
    r = call_json("monoid", "compose", "--n", "3", e, f, "--assume-split")
    assert r["assumed_split"]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_orbits_builtin(n):
    data = call_json("orbits", "--target", f"builtin:product:{n}", "--v", "diagonal")
    assert data["phi_injective"] and data["table_data"]
    code, out, _ = call("orbits", "--target", f"builtin:product:{n}", "--v", "diagonal")
    assert "phi_injective = true" in out and "u | w | I_u | J_u | pi_2n/I_u | J_u/I_u" in out


def test_orbits_from_files(tmp_path):
    t = tmp_path / "target.json"
    t.write_text(json.dumps(target_to_json(target_from_sequence(minimal_sequence(cyclic(4), cyclic(2))))))
    v = tmp_path / "v.json"
    v.write_text('{"coords": [1]}')
    data = call_json("orbits", "--target", str(t), "--v", str(v))
    assert len(data["entries"]) == 4 and data["class_count"] is not None
    assert not data["table_data"]  # user-supplied data carries no table annotation
    # an infinite pi_n is only solved for the built-in targets
    t.write_text(json.dumps(target_to_json(target_sphere_product(2))))
    v.write_text('{"coords": [1, 1]}')
    assert call("orbits", "--target", str(t), "--v", str(v))[0] == 1


def test_gammaseq_commands(tmp_path):
    path = tmp_path / "seq.json"
    path.write_text(json.dumps(sequence_to_json(minimal_sequence(free(2), cyclic(3)))))
    assert call_json("gammaseq", "validate", str(path))["valid"]
    iso = call_json("gammaseq", "isotropy", str(path), "--w", "[1, 0]", "--u", "[0, 1]")
    assert iso["quotient"]["canonical"] == "Z/3"
    ex = call_json("gammaseq", "example", "--pi3", "Z/3", "--wu", "inf,inf")
    assert ex["orbit_group"]["canonical"] == "Z/3" and ex["nontrivial_action"] and ex["valid"]
    ex = call_json("gammaseq", "example", "--pi3", "Z/6", "--wu", "inf,4")
    assert ex["orbit_group"]["canonical"] == "Z/2"
    assert call("gammaseq", "example", "--pi3", "Z/3", "--wu", "inf")[0] == 2


def test_json_output_round_trips():
    g = call_json("fgab", "group", "Z/4 x Z/6")
    assert str(group_from_json(g)) == g["canonical"] == "Z/2 x Z/12"
    ex = call_json("gammaseq", "example", "--pi3", "Z/3")
    seq = sequence_from_json(ex["sequence"])
    assert validate_gamma_sequence(seq).ok
    data = call_json("orbits", "--target", "builtin:product:2", "--v", "diagonal")
    for e in data["entries"]:
        assert str(group_from_json(e["cosets"])) == e["cosets"]["canonical"]


@pytest.mark.parametrize("argv", [
    ("monoid", "check", "--n", "4", "--scope", "N", "--seed", "3"),
    ("orbits", "--target", "builtin:product:3", "--v", "diagonal", "--json"),
    ("gammaseq", "example", "--pi3", "Z/6", "--wu", "2,4", "--json"),
])
def test_output_is_deterministic(argv):
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "diagmaps", "monoid", "table"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == GOLDEN_TABLE
