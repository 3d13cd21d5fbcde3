import json

import pytest

from etalgebra.cli import run

M2Q = {"kind": "matrix", "n": 2, "field": "QQ"}
HAM = {"kind": "quaternion", "a": -1, "b": -1, "field": "QQ"}


@pytest.fixture
def call(tmp_path, capsys):
    def _call(verb, algebra=None, data=None, *extra):
        argv = [verb]
        if algebra is not None:
            (tmp_path / "alg.json").write_text(json.dumps(algebra))
            argv += ["--algebra", str(tmp_path / "alg.json")]
        if data is not None:
            (tmp_path / "in.json").write_text(json.dumps(data))
            argv += ["--input", str(tmp_path / "in.json")]
        code = run(argv + list(extra))
        out = capsys.readouterr()
        return code, (json.loads(out.out) if out.out else None), out.err
    return _call


def test_psi_verbs(call):
    code, out, _ = call("psi", M2Q, {"element": [1, 0, 0, 2]})
    assert code == 0 and out["basis"] == [["1/1", "0/1", "0/1", "0/1"], ["0/1", "0/1", "0/1", "1/1"]]
    code, out, err = call("psi", M2Q, {"element": [1, 0, 0, 1]})
    assert code == 2 and out is None and "NotInU" in err


def test_minpoly_idempotents_type(call):
    assert call("minpoly", HAM, {"element": [0, 1, 0, 0]})[1] == {"degree": 2, "min_poly": ["1/1", "0/1", "1/1"]}
    code, out, _ = call("idempotents", M2Q, {"element": [1, 0, 0, 2]})
    assert code == 0 and out["roots"] == ["1/1", "2/1"] and out["field"] == "QQ"
    code, out, _ = call("type", HAM, {"subalgebra": [[1, 0, 0, 0], [0, 1, 0, 0]]})
    assert out["type"] == [1, 1]
    assert call("is-subfield", HAM, {"subalgebra": [[1, 0, 0, 0], [0, 1, 0, 0]]})[1] == {"is_subfield": True}


def test_phi_verb(call):
    data = {"generator": [0, 0, 0, 1], "subalgebra": [[1, 0, 0, 1], [0, 1, 0, 2]]}
    code, out, _ = call("phi", M2Q, data)
    assert code == 0
    data["subalgebra"] = [[1, 0, 0, 1], [0, 1, 1, 0]]
    assert call("phi", M2Q, data)[0] == 2


def test_ideal_system_round_trip(call):
    code, sys_, _ = call("ideal-system", HAM, {"subalgebra": [[1, 0, 0, 0], [0, 1, 0, 0]]})
    assert code == 0 and sys_["ranks"] == [1, 1]
    code, out, _ = call("from-ideal-system", HAM, {"field": sys_["field"], "ideals": sys_["ideals"]})
    assert code == 0 and out["field"] == "QQ"
    assert out["basis"] == [["1/1", "0/1", "0/1", "0/1"], ["0/1", "1/1", "0/1", "0/1"]]


def test_plucker_verbs(call):
    assert call("plucker", None, {"plane": [[1, 0, 0, 0], [0, 1, 0, 0]]})[1]["plucker"][0] == "1/1"
    code, out, _ = call("plucker-inv", None, {"point": [0, 0, 0, 0, 0, 1], "field": "GF(7)"})
    assert code == 0 and out["plane"] == [[0, 0, 1, 0], [0, 0, 0, 1]]
    assert call("plucker-inv", None, {"point": [1, 0, 0, 0, 0, 1]})[0] == 2


def test_quadric_verbs(call):
    gram = [[0, 0, 0, "1/2"], [0, 0, "-1/2", 0], [0, "-1/2", 0, 0], ["1/2", 0, 0, 0]]
    code, out, _ = call("intersect", None, {"gram": gram, "plane": [[1, 0, 0, 0], [0, 0, 0, 1]]})
    assert code == 0 and out["kind"] == "pair"
    code, out, _ = call("pair-to-line", None, {"gram": gram, "points": [[1, 0, 0, 0], [0, 0, 0, 1]]})
    assert code == 0 and out["plane"] == [["1/1", "0/1", "0/1", "0/1"], ["0/1", "0/1", "0/1", "1/1"]]
    code, _, _ = call("pair-to-line", None, {"gram": gram, "plane": [[1, 0, 0, 0], [0, 1, 1, 0]]})
    assert code == 2


def test_enumerate_and_verify(call):
    m22 = {"kind": "matrix", "n": 2, "field": "GF(2)"}
    code, out, _ = call("enumerate", m22, {"dim": 2})
    assert code == 0 and out["count"] == 4
    code, out, _ = call("verify-moduli", m22, None, "--rho", "1,1")
    assert code == 0 and (out["count_subalgebras"], out["count_systems"], out["match"]) == (4, 4, True)
    assert "seconds" not in out
    assert call("verify-moduli", m22, None, "--rho", "1,1", "--timing")[1]["seconds"] >= 0
    assert call("verify-moduli", m22, None, "--rho", "1,1", "--budget", "1")[0] == 3


def test_malformed_input_exit_one(call, tmp_path):
    assert call("psi", M2Q, {"element": [1, 2]})[0] == 1
    assert call("psi", M2Q, {})[0] == 1
    assert call("psi", None, {"element": [1, 0, 0, 2]})[0] == 1
    assert call("psi", {"kind": "bogus"}, {"element": [1]})[0] == 1
    assert call("verify-moduli", {"kind": "matrix", "n": 2, "field": "GF(2)"})[0] == 1
    assert run(["psi", "--algebra", str(tmp_path / "missing.json")]) == 1
    (tmp_path / "bad.json").write_text("{not json")
    assert run(["psi", "--algebra", str(tmp_path / "bad.json")]) == 1


def test_unknown_verb_exits_one():
    with pytest.raises(SystemExit) as info:
        run(["frobnicate"])
    assert info.value.code == 1


def test_output_file(tmp_path):
    (tmp_path / "a.json").write_text(json.dumps(M2Q))
    (tmp_path / "i.json").write_text(json.dumps({"element": [1, 0, 0, 2]}))
    out = tmp_path / "out.json"
    assert run(["psi", "--algebra", str(tmp_path / "a.json"), "--input", str(tmp_path / "i.json"),
                "--output", str(out)]) == 0
    assert json.loads(out.read_text())["dim"] == 2
