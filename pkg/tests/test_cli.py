import io
import json

import pytest

from poisson_forge import cli
from poisson_forge.fixtures import FIXTURES, NEGATIVE_CONTROL, PENCILS
from poisson_forge.tensors import tensor_of_mvec


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_cp3_json(capsys):
    code, out, _ = run(capsys, "check-cp3", FIXTURES["ex3.5.1"].source, "--format", "json")
    assert code == 0
    assert out == '{"poisson": true, "nontrivial": true, "bracket_zero_on_C4": true}\n'


def test_check_cp3_rejects_negative_control(capsys):
    for method in ("quotient", "charts"):
        code, out, _ = run(capsys, "check-cp3", NEGATIVE_CONTROL, "--method", method)
        assert code == 1
        assert "poisson: false" in out


def test_check_hp1(capsys):
    code, out, _ = run(capsys, "check-hp1", FIXTURES["ex4.7.3"].source, "--format", "json")
    assert code == 0
    assert json.loads(out) == {"poisson": True, "phi_real": True, "cp3_poisson": True, "nontrivial": True}
    code, out, _ = run(capsys, "check-hp1", FIXTURES["ex3.5.1"].source)
    assert code == 1
    assert "phi_real: false" in out


def test_chart_golden(capsys):
    code, out, _ = run(capsys, "chart", FIXTURES["ex3.5.1"].source, "--chart", "0")
    assert code == 0
    assert out.splitlines() == ["chart: U0", "bivector: zeta2*dzeta1/\\dzeta3", "bracket_zero: true"]


def test_chart_v0(capsys):
    code, out, _ = run(capsys, "chart", FIXTURES["ex4.7.4"].source, "--chart", "v0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["chart"] == "V0" and doc["bracket_zero"] is True


def test_tensor_input(capsys, tmp_path, monkeypatch):
    t = tensor_of_mvec(FIXTURES["ex3.5.2"].mvec(), 2)
    path = tmp_path / "t.json"
    path.write_text(t.to_json(), encoding="utf-8")
    assert run(capsys, "check-cp3", "--tensor", str(path))[0] == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(t.to_json()))
    assert run(capsys, "check-cp3", "--tensor", "-")[0] == 0


def test_realify(capsys):
    code, out, _ = run(capsys, "realify", FIXTURES["ex4.7.2"].source, "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"real", "part_2_0", "part_1_1", "part_0_2"}
    assert doc["part_2_0"] == "(-i*z2^2 + i*z3^2)*d0/\\d1"


def test_from_foliation(capsys):
    f, g = PENCILS["ex4.7.2"]
    code, out, _ = run(capsys, "from-foliation", "--f", f, "--g", g, "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["bivector"] == "(i*z0^2 - i*z1^2)*d2/\\d3"
    assert doc["cp3"]["poisson"] and doc["hp1"]["poisson"]
    code, out, _ = run(capsys, "from-foliation", "--form", "z1*z2*z3*dz0 - z0*z2*z3*dz1")
    assert code == 0 and out.startswith("form: z1*z2*z3*dz0")


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "z0*d1", "z1*d2")
    assert (code, out) == (0, "bracket: z0*d2\n")


def test_examples(capsys):
    code, out, _ = run(capsys, "examples", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] == doc["total"] == len(FIXTURES)
    code, out, _ = run(capsys, "examples", "ex3.5.2")
    assert (code, out) == (0, "ex3.5.2: pass\n1/1 pass\n")


@pytest.mark.parametrize("argv, fragment", [
    (["check-cp3", "z5*d0"], "column 1: unknown identifier z5"),
    (["check-cp3", "z0*d1/\\d2"], "not homogeneous"),
    (["check-cp3"], "give a bivector"),
    (["examples", "ex9.9"], "unknown fixture"),
    (["realify", "z0*z2*d1/\\d3"], "Phi-fixed"),
    (["from-foliation", "--f", "z0^2"], "needs --form"),
    (["from-foliation", "--form", "z0^2*z1*dz0"], "Euler"),
    (["check-cp3", "--tensor", "/nonexistent/t.json"], "No such file"),
])
def test_usage_errors_exit_2(capsys, argv, fragment):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("poisson-forge: error: ") and fragment in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["chart", "z0*z1*d0/\\d1", "--chart", "7"])
    assert exc.value.code == 2


def test_invariant_violation_exit_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "contract_to_form", lambda w: None)
    code, _, err = run(capsys, "from-foliation", "--f", "z0^2 + z1^2", "--g", "i*z0*z1")
    assert code == 3 and "internal error" in err


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "examples", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1
