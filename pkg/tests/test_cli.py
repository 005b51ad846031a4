import json
import subprocess
import sys

import pytest

from zeta_forge.cli import main
from zeta_forge.zeta import ZetaValue, zeta_validated


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_zeta_exact(capsys):
    code, out, _ = run(capsys, "zeta", "--k", "6", "--format", "exact")
    assert code == 0 and out.strip() == "691/638512875 * pi^12"


def test_zeta_json(capsys):
    code, out, _ = run(capsys, "zeta", "--k", "6", "--format", "json")
    assert json.loads(out) == {"k": 6, "coeff": "691/638512875", "pi_power": 12, "routes_agreed": True}


@pytest.mark.parametrize("route", ["tangent", "cotangent", "recurrence", "bernoulli", "all"])
def test_zeta_routes(capsys, route):
    code, out, _ = run(capsys, "zeta", "--k", "4", "--route", route)
    assert code == 0 and out.strip() == "1/9450 * pi^8"


@pytest.mark.parametrize("k", [1, 7, 23, 60])
def test_exact_output_roundtrips(capsys, k):
    _, out, _ = run(capsys, "zeta", "--k", str(k))
    assert ZetaValue.parse(out.strip()) == zeta_validated(k)


def test_zeta_decimal(capsys):
    _, out, _ = run(capsys, "zeta", "--k", "1", "--format", "decimal")
    assert out.strip() == "1.64493406684823"


def test_zeta_k0_is_usage_error(capsys):
    code, _, err = run(capsys, "zeta", "--k", "0")
    assert code == 2 and "usage:" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["zeta"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_route_disagreement_exit_3(capsys, monkeypatch):
    import zeta_forge.cli as cli
    from zeta_forge.zeta import RouteDisagreementError

    def boom(k):
        raise RouteDisagreementError("forced")

    monkeypatch.setitem(cli.ZETA_ROUTES, "all", boom)
    code, _, err = run(capsys, "zeta", "--k", "2")
    assert code == 3 and "forced" in err


def test_tangent_and_bernoulli(capsys):
    _, out, _ = run(capsys, "tangent", "--max-index", "11", "--format", "json")
    data = json.loads(out)
    assert data["values"]["11"] == "353792" and data["kind"] == "Tangent"
    _, out, _ = run(capsys, "bernoulli", "--max-index", "6")
    assert out.splitlines()[2] == "4\t-1/30"
    _, out, _ = run(capsys, "cotangent", "--max-index", "2")
    assert out.splitlines()[-1] == "2\t-2/3"


def test_polygamma_half(capsys):
    _, out, _ = run(capsys, "polygamma-half", "--k", "1")
    assert out.strip() == "1/2 * pi^2"


def test_force_and_potential(capsys):
    _, out, _ = run(capsys, "force", "--x", "0.5", "--terms", "1000", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"partial_sum", "terms", "tail", "estimate"} and data["terms"] == 1000
    code, _, _ = run(capsys, "potential", "--x", "1.0")
    assert code == 2


def test_verify_ode(capsys):
    code, out, _ = run(capsys, "verify-ode", "--grid", "0.2:0.8:0.05", "--h", "1e-3", "--threshold", "1e-4")
    data = json.loads(out)
    assert code == 0 and data["max_abs_residual"] <= 1e-4 and len(data["points"]) == 13


def test_verify_fails_above_threshold(capsys):
    code, out, _ = run(capsys, "verify-ode", "--grid", "0.2:0.8:0.3", "--threshold", "1e-20")
    assert code == 1 and json.loads(out)["passed"] is False


@pytest.mark.parametrize("cmd", ["verify-series", "verify-reflection", "verify-pv", "verify-plemelj", "verify-fubini"])
def test_verify_defaults_pass(capsys, cmd):
    code, out, _ = run(capsys, cmd)
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["max_abs_residual"] <= data["threshold"]


def test_verify_plemelj_nonmonotone_fails(capsys):
    code, out, _ = run(capsys, "verify-plemelj", "--eps-list", "1e-3,1e-3")
    assert code == 1 and json.loads(out)["monotone"] is False


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "--max-k", "5")
    assert code == 0
    assert "| 2 | 4 | 1/90 | 1/90 * pi^4 |" in out
    assert "| 5 | 10 | 1/93555 | 1/93555 * pi^10 |" in out


def test_table_csv(capsys):
    _, out, _ = run(capsys, "table", "--max-k", "1", "--format", "csv")
    lines = out.strip().splitlines()
    assert len(lines) == 2 and lines[1].split(",")[2] == "1/6"


def test_table_json_and_output_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--max-k", "3", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    rows = json.loads(path.read_text())
    assert rows[2]["coeff"] == "1/945" and rows[2]["T_2k-1"] == "16" and rows[2]["B_2k"] == "1/42"


def test_table_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "table", "--max-k", "0")
    assert code == 2
    code, _, _ = run(capsys, "table", "--max-k", "2", "--output", str(tmp_path / "missing" / "x.csv"))
    assert code == 4


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "zeta_forge", "zeta", "--k", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "1/90 * pi^4"
