import json

import pytest

from liepencil.cli import main
from liepencil.liealg import LieAlgebra, build_classical


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_run_and_json(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "run", "sl2_inner_involution", "--json", str(out_file))
    assert code == 0 and out.strip().endswith("ALL PASS")
    assert json.loads(out_file.read_text())["passed"] is True


def test_run_failure_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.scn"
    p.write_text(json.dumps({"format": 1, "algebra": {"series": "A", "rank": 1},
                             "automorphism": {"kind": "kac_inner", "labels": [1, 1]},
                             "checks": [{"check": "ind_zero_equals_rank", "expect": 5}]}))
    code, out, _ = run(capsys, "run", str(p))
    assert code == 1 and "FAIL ind_zero_equals_rank" in out


def test_errors_exit_2(capsys, tmp_path):
    p = tmp_path / "broken.scn"
    p.write_text("{ not json")
    code, _, err = run(capsys, "run", str(p))
    assert code == 2 and "broken.scn:1:" in err
    code, _, err = run(capsys, "contract", "sl2_inner_involution", "--at", "sometimes")
    assert code == 2


def test_list_checks(capsys):
    code, out, _ = run(capsys, "list-checks")
    assert code == 0 and "ind_infty_formula" in out and "sl3_outer_order4.scn" in out


def test_contract(capsys):
    code, out, _ = run(capsys, "contract", "sl2_inner_involution", "--at", "inf")
    a = LieAlgebra.from_json(out)
    assert a.structure == {(1, 2): {0: 1}}
    _, out, _ = run(capsys, "contract", "sl2_inner_involution", "--at", "t=1")
    assert LieAlgebra.from_json(out).structure == build_classical("A", 1).structure
    _, out, _ = run(capsys, "contract", "sl2_inner_involution", "--at", "0")
    assert LieAlgebra.from_json(out).structure == {(0, 1): {1: 2}, (0, 2): {2: -2}}


def test_index(capsys):
    code, out, _ = run(capsys, "index", "sl3_outer_order4", "--target", "qinf", "--samples", "5")
    rep = json.loads(out)
    assert code == 0 and rep["index_upper_bound"] == 4 and rep["samples"] == 5


def test_invariants_and_decompose(capsys, tmp_path):
    _, out, _ = run(capsys, "invariants", "sl2_inner_involution")
    assert json.loads(out)["generators"][0]["text"] == "1/2*H1^2 + 2*E(1,2)*E(2,1)"
    f = tmp_path / "gens.json"
    f.write_text(json.dumps([[[[2, 0, 0], "1"], [[0, 1, 1], "4"]]]))
    _, out, _ = run(capsys, "invariants", "sl2_inner_involution", "--set", "file", "--file", str(f))
    assert json.loads(out)["degrees"] == [2]
    _, out, _ = run(capsys, "decompose", "sl2_inner_involution")
    comps = json.loads(out)["generators"][0]["components"]
    assert comps == {"0": "1/2*H1^2", "2": "2*E(1,2)*E(2,1)"}


@pytest.mark.parametrize("which,count", [("zx", 4), ("zinf", 4), ("zinf-g0", 2), ("tilde", 3)])
def test_z_generators(capsys, which, count):
    _, out, _ = run(capsys, "z-generators", "sl3_outer_order4", "--which", which)
    assert json.loads(out)["count"] == count


def test_ggs(capsys):
    _, out, _ = run(capsys, "ggs-check", "sl3_outer_order4", "--weights", "tilde")
    rep = json.loads(out)
    assert rep["sum_top_degrees"] == rep["D"] == 22 and rep["is_ggs"]
