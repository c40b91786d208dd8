import json

import pytest

from fourpoints import linalg as la
from fourpoints import quiver as q
from fourpoints.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_ring(capsys):
    code, out = run(capsys, "ring", "--degree", "3")
    assert code == 0
    assert "1 3 4 4" in out.out


def test_mf_verify(capsys):
    code, out = run(capsys, "mf", "verify", "--t", "0:1", "--variant", "phi", "--sign", "+")
    assert code == 0
    assert "[PASS]" in out.out and "Q_t I" in out.out


def test_module_betti(capsys):
    code, out = run(capsys, "module", "betti", "--module", "N", "--t", "3:1", "--length", "6")
    assert code == 0
    assert "0: 2 2 2 2 2 2 2" in out.out


def test_module_json_emit(capsys):
    code, out = run(capsys, "module", "invariants", "--module", "kst", "--emit", "json")
    rows = json.loads(out.out)
    assert code == 0
    assert rows[0]["detail"]["nu"] == 2 and rows[0]["detail"]["e"] == 4


def test_module_from_file(tmp_path, capsys):
    from fourpoints import factorizations as mf
    path = tmp_path / "m.json"
    path.write_text(json.dumps(mf.point_module(2).to_json()))
    code, out = run(capsys, "module", "invariants", "--module", str(path))
    assert code == 0 and "nu = 1" in out.out


def test_rep_round_trip(tmp_path, capsys):
    path = tmp_path / "r.json"
    M = q.named(q.reg_hom_name((2, 1), 1)) + q.projective(2)
    path.write_text(json.dumps(M.to_json()))
    code, out = run(capsys, "rep", "decompose", str(path))
    assert code == 0
    assert "1 x RegHom(2:1,1)" in out.out and "1 x Proj(2,0)" in out.out
    code, out = run(capsys, "rep", "identify", str(path))
    assert code == 1
    code, out = run(capsys, "rep", "tau", str(path), "--inverse")
    assert code == 0 and json.loads(out.out)["dims"] == [4, 2, 1, 2, 2]


def test_rep_named_and_lines(capsys):
    code, out = run(capsys, "rep", "named", '{"kind": "RegExc", "t": [0, 1], "r": 1, "sign": "+"}')
    assert code == 0 and json.loads(out.out)["dims"] == [1, 1, 0, 0, 1]
    code, out = run(capsys, "rep", "normalize-lines", "--lines", "0,1;1,1;1,0;2,1")
    assert code == 0 and "t = 2:1" in out.out


def test_bridge(capsys):
    code, out = run(capsys, "bridge", "apply-E", "--module", "D", "--t", "0", "--sign", "+")
    assert code == 0 and "RegExc(0,1,+)" in out.out
    code, out = run(capsys, "bridge", "verify", "--suite", "tilting")
    assert code == 0
    code, out = run(capsys, "bridge", "verify", "--suite", "images", "--samples", "3")
    assert code == 0 and out.out.count("[PASS]") == 3 + 6 + 5


def test_cres(capsys):
    code, out = run(capsys, "cres", "window", "--target", "L2", "--lo", "-2", "--hi", "3", "--check")
    assert code == 0 and "[PASS]" in out.out


def test_verify_subset_is_deterministic(capsys):
    _, first = run(capsys, "verify", "all", "--only", "1,12", "--seed", "7", "--emit", "json")
    _, second = run(capsys, "verify", "all", "--only", "1,12", "--seed", "7", "--emit", "json")
    assert first.out == second.out
    assert all(r["status"] == "PASS" for r in json.loads(first.out))


def test_invalid_inputs(capsys, tmp_path):
    assert main(["module", "betti", "--module", "N"]) == 2
    assert main(["module", "betti", "--module", "Q7"]) == 2
    assert main(["rep", "normalize-lines", "--lines", "0,1;0,2;1,0;1,1"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["rep", "identify", str(bad)]) == 2
    assert main(["ring", "--prime", "12"]) == 2
    with pytest.raises(SystemExit) as err:
        main(["mf", "verify", "--t", "0", "--sign", "x"])
    assert err.value.code == 2


def test_prime_flag(capsys):
    code, out = run(capsys, "mf", "verify", "--t", "2:1", "--prime", "10007")
    assert code == 0
    la.set_prime(la.DEFAULT_PRIME)
