import io
import json

import pytest

from revlexgin.borel import HilbertFunction, MonomialIdeal
from revlexgin.cli import run
from revlexgin.curves import CurveSpec
from revlexgin.groebner import GroebnerBasis

SECTION = {"x2^3", "x2^2*x3", "x2^2*x4", "x2*x5", "x3^2", "x3*x4", "x3*x5", "x4^2", "x4*x5", "x5^2"}
TWISTED = "x0*x2 - x1^2\nx1*x3 - x2^2\nx0*x3 - x1*x2\n"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def cli_json(*argv):
    code, out, err = cli(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def twisted_file(tmp_path):
    path = tmp_path / "twisted.txt"
    path.write_text(TWISTED)
    return str(path)


def test_expand_prints_six_ordered_terms():
    code, out, _ = cli("expand", "x0", "x1", "x2")
    assert code == 0
    assert out.split() == ["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]


def test_almost_revlex_and_segment():
    data = cli_json("almost-revlex", 5, 8, 0)
    J = MonomialIdeal.from_json(data["ideal"])
    assert len(J.gens) == 15 and all(e[0] == 0 for e in J.gens)
    assert HilbertFunction.from_json(data["hilbert_function"]).upto(3) == [1, 6, 17, 25]
    data = cli_json("segment", 5, 8)
    assert set(data["ideal"]["terms"]) == SECTION


def test_verify_reports_equality():
    data = cli_json("verify", 4, 5, 0, "--seed", 1)
    assert data["equal"] is True
    assert data["report"]["stages"]["section"]["segment"] is True


def test_same_arguments_give_identical_output(twisted_file):
    for argv in (("verify", 4, 5, 0, "--seed", 3, "--no-screen"), ("gin", twisted_file, "--seed", 2), ("curve", "--random", 3, 5)):
        first = cli(*argv, "--json")
        assert first[0] == 0
        assert cli(*argv, "--json") == first
        assert cli(*argv)[1] == cli(*argv)[1]


def test_basis_and_ideal_json_round_trip(twisted_file):
    data = cli_json("gb", twisted_file)
    G = GroebnerBasis.from_json(data["basis"])
    assert [str(f) for f in G.polys] == ["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]
    data = cli_json("in", twisted_file)
    assert set(MonomialIdeal.from_json(data["ideal"]).gen_strings()) == {"x1^2", "x1*x2", "x2^2"}
    data = cli_json("gin", twisted_file, "--seed", 5)
    assert set(MonomialIdeal.from_json(data["ideal"]).gen_strings()) == {"x2^2", "x2*x3", "x3^2"}
    data = cli_json("hf", twisted_file, "--up-to", 4)
    assert HilbertFunction.from_json(data["hilbert_function"]).upto(4) == [1, 4, 7, 10, 13]


def test_curve_json_round_trip(tmp_path):
    data = cli_json("curve", "--rnc", 4)
    assert CurveSpec.from_json(data["curve"]) == CurveSpec.from_json({"param": ["u^4", "u^3*v", "u^2*v^2", "u*v^3", "v^4"]})
    path = tmp_path / "golden.json"
    path.write_text(json.dumps({"param": ["u^9 + v^9", "u^8*v + u*v^8", "u^7*v^2 + v^9", "u^2*v^7"]}))
    data = cli_json("curve", str(path), "--up-to", 6)
    H = HilbertFunction.from_json(data["hilbert_function"])
    assert H.upto(6) == [1, 4, 10, 20, 33, 44, 54] and list(H.poly) == [1, 9]


def test_other_subcommands(tmp_path):
    assert cli_json("gotzmann", 1, 8)["gotzmann_number"] == 29
    assert cli_json("gotzmann", "--curve", 8, 0)["gotzmann_number"] == 29
    path = tmp_path / "sat.txt"
    path.write_text("x0*x1\nx1^2\n")
    assert cli_json("saturate", str(path))["ideal"]["terms"] == ["x1"]
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text("x2^2\nx1*x2\nx1^2\n")
    b.write_text("x2^2\nx1*x2\nx1^3\nx0*x1^2\n")
    assert cli_json("compare", str(a), str(a))["result"] == "equal"
    # the two ideals differ in degree 2 but agree in degree 3, the comparison degree
    assert cli_json("compare", str(a), str(b))["result"] == "equal"
    found = cli_json("enumerate", "--points", 3, 3, "--saturated")["ideals"]
    assert len(found) == 1
    assert len(cli_json("screen", 4, 4, 0)["candidates"]) == 1
    assert cli_json("section", "--random", 5, 8, "--seed", 2)["ideal"]["terms"]
    data = cli_json("attach-line", "--rnc", 4)
    assert set(data["selection"]["certificates"].values()) == {True}


def test_exit_codes(tmp_path):
    assert cli("almost-revlex", 3, 2, 0)[0] == 2
    assert cli("verify", 3, 9, 0)[0] == 2
    assert cli("hf", str(tmp_path / "missing.txt"))[0] == 2
    assert cli("enumerate", "--curve", 5, 8, 0, "--node-cap", 3)[0] == 2
    code, _, err = cli("screen", 3, 9, 0, "--node-cap", 2)
    assert code == 2 and err.startswith("error:")
    assert cli("no-such-command")[0] == 2
