from __future__ import annotations

import json
import subprocess
import sys

import pytest

from orbicycle.cli import main
from orbicycle.errors import BadSpec
from orbicycle.graphs import GraphSpec
from orbicycle.perm import PGL2, C, Prod, S, Wr
from orbicycle.poly import IntPoly, parse_poly
from orbicycle.specs import parse_graph, parse_group, parse_permutation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ----------------------------------------------------------------- grammars


def test_group_grammar():
    assert parse_group("S5") == S(5)
    assert parse_group(" prod( S3 , C2 ) ") == Prod(S(3), C(2))
    assert parse_group("wr(S3,S2)") == Wr(S(3), S(2))
    assert parse_group("PGL2(7)") == PGL2(7)
    spec = parse_group("gens(4;(1 2),(1 2 3 4))")
    assert spec.kind == "gens" and spec.args[0] == 4
    assert [g.to_cycle_string() for g in spec.args[1]] == ["(1 2)", "(1 2 3 4)"]
    for bad in ("Q3", "prod(S3", "gens(3)", "wr(S2)", "PGL2(x)"):
        with pytest.raises(BadSpec):
            parse_group(bad)


def test_group_spec_text_round_trip():
    for text in ("S5", "A4", "C6", "D4", "T3", "PGL2(7)", "prod(S3,C2)", "wr(S3,S2)", "wr(prod(C2,C2),S3)"):
        assert str(parse_group(text)) == text


def test_permutation_grammar():
    assert parse_permutation(4, "(1 2)(3 4)").images == (1, 0, 3, 2)
    assert parse_permutation(3, "()").is_identity()
    with pytest.raises(BadSpec):
        parse_permutation(3, "1 2")


def test_graph_grammar():
    assert parse_graph("K5") == GraphSpec("K", (5,))
    assert parse_graph("Kmulti(3,3)") == GraphSpec("Kmulti", (3, 3))
    assert parse_graph("edges(4; 1-2, 2-3, 3-4)") == GraphSpec("edges", (4, ((0, 1), (1, 2), (2, 3))))
    assert parse_graph("join(K2,N3)").kind == "join"
    assert parse_graph("union(K3,K3,K3)").args == (GraphSpec("K", (3,)),) * 3
    for bad in ("Z3", "edges(4;1+2)", "Kmulti(a)"):
        with pytest.raises(BadSpec):
            parse_graph(bad)


# ------------------------------------------------------------------ commands


def test_cycle_poly(capsys):
    assert run(capsys, "cycle-poly", "S4")[:2] == (0, "x^4 + 6x^3 + 11x^2 + 6x\n")
    code, out, _ = run(capsys, "cycle-poly", "PGL2(5)", "--closed-form")
    assert code == 0 and parse_poly(out.strip())(1) == 120
    code, out, _ = run(capsys, "cycle-poly", "D4", "--json")
    data = json.loads(out)
    assert list(data) == ["group", "cycle_poly"]
    assert IntPoly.from_json(data["cycle_poly"]) == parse_poly("x^4 + 2x^3 + 3x^2 + 2x")


def test_json_output_is_stable(capsys):
    first = run(capsys, "check", "Cyc4", "D4", "--json")[1]
    second = run(capsys, "check", "Cyc4", "D4", "--json")[1]
    assert first == second
    assert list(json.loads(first))[:3] == ["graph", "group", "orbital_poly"]


def test_cycle_index_parker_fixed_point(capsys):
    assert run(capsys, "cycle-index", "S3")[1] == "s1^3 + 3 s1 s2 + 2 s3\n"
    data = json.loads(run(capsys, "cycle-index", "C2", "--json")[1])
    assert data["terms"] == [{"exponents": [2, 0], "coeff": "1"}, {"exponents": [0, 1], "coeff": "1"}]
    assert run(capsys, "parker", "S3")[1] == "(1, 1/2, 1/3)\n"
    assert run(capsys, "parker", "S3", "--conventional")[1] == "(1, 1, 1)\n"
    assert run(capsys, "fixed-point", "S3")[1] == "x^3 + 3x + 2\n"


def test_chromatic_and_orbital(capsys):
    assert run(capsys, "chromatic", "Path3")[1] == "x^3 - 2x^2 + x\n"
    assert run(capsys, "orbital", "Cyc4", "D4")[1] == "x^4 - 2x^3 + 3x^2 - 2x\n"
    assert run(capsys, "orbital", "Cyc4", "aut")[1] == "x^4 - 2x^3 + 3x^2 - 2x\n"
    data = json.loads(run(capsys, "chromatic", "K3", "--json")[1])
    assert data["graph"] == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "Cyc4", "D4")
    assert code == 0
    assert "x^4 - 2x^3 + 3x^2 - 2x" in out and "reciprocal pair" in out
    code, out, _ = run(capsys, "check", "Kmulti(3,3)", "wr(S3,S2)")
    assert code == 1 and "not reciprocal" in out
    code, _, err = run(capsys, "check", "Cyc4", "S4")
    assert code == 2 and "NotInvariant" in err


def test_domain_and_usage_errors(capsys):
    code, _, err = run(capsys, "cycle-poly", "PGL2(9)")
    assert code == 65 and err.startswith("NotPrime")
    code, _, err = run(capsys, "chromatic", "Q7")
    assert code == 65 and err.startswith("BadSpec")
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["verify", "unknown-suite"])
    assert exc.value.code == 64


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "S4")
    assert code == 0 and out.splitlines() == ["root,multiplicity", "-3,1", "-2,1", "-1,1", "0,1"]
    code, out, _ = run(capsys, "roots", "A5", "--numeric", "--tol", "1e-12")
    lines = out.splitlines()
    assert lines[0] == "re,im,residual" and len(lines) == 6
    for line in lines[1:]:
        re, im, res = map(float, line.split(","))
        assert abs(re) < 1e-8 and res < 1e-12


@pytest.mark.parametrize("suite", ["parity", "product", "wreath", "pgl", "star-theorem", "paper-examples"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0
    assert out.splitlines()[-1].endswith("passed")
    assert "FAIL" not in out


def test_search_command(capsys, tmp_path):
    path = tmp_path / "pairs.json"
    code, out, _ = run(capsys, "search", "--n", "4", "--out", str(path), "--threads", "1")
    assert code == 0 and "17 reciprocal pairs" in out
    filtered = json.loads(path.read_text())
    code, out, _ = run(capsys, "search", "--n", "4", "--no-filters", "--threads", "2")
    unfiltered = json.loads(out)
    strip = lambda cs: [{k: v for k, v in c.items() if k != "filters"} for c in cs]
    assert strip(filtered) == strip(unfiltered)


def test_polynomials_in_json_round_trip(capsys):
    for argv in (["cycle-poly", "wr(S3,S2)", "--json"], ["fixed-point", "PGL2(5)", "--json"], ["orbital", "join(K2,N3)", "aut", "--json"]):
        data = json.loads(run(capsys, *argv)[1])
        key = next(k for k in data if k.endswith("poly"))
        P = IntPoly.from_json(data[key])
        assert P.to_json() == data[key]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orbicycle", "cycle-poly", "S3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "x^3 + 3x^2 + 2x\n"
