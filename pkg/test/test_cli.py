"""
test_cli.py
============================================================
명령행 서브커맨드 테스트 (main(argv) 직접 호출)

테스트 내용:
1. geometry: CSV / JSON 출력, Koch 세대 제한 → exit 2
2. jet make → jet check → solve 흐름
3. 사용 오류 (잘못된 --tol, --grid, 설정, 누락된 --jet) → exit 2
4. verify identities: exit 0, 같은 seed 면 같은 리포트

실행:
    pytest test/test_cli.py
"""

import cmath
import json

import pytest

from cli.main import EXIT_OK, EXIT_USAGE, main


@pytest.fixture()
def out(tmp_path):
    return tmp_path / "out"


# =========================
# 1) geometry
# =========================
def test_geometry_circle(out, capsys):
    code = main(["geometry", "--circle", "1", "--segments", "64", "--depth", "5", "--d", "1.5", "--out", str(out)])
    assert code == EXIT_OK
    rows = (out / "curve.csv").read_text(encoding="utf-8").splitlines()
    assert rows[0] == "x,y"
    assert len(rows) == 65
    report = json.loads((out / "geometry_report.json").read_text(encoding="utf-8"))
    assert report["n_segments"] == 64
    assert report["d"] == 1.5
    assert len(report["d_sum_increments"]) == 6
    assert "[DONE]" in capsys.readouterr().out


def test_geometry_koch_generation_limit(out, capsys):
    assert main(["geometry", "--koch", "9", "--out", str(out)]) == EXIT_USAGE
    assert "DepthTooLargeError" in capsys.readouterr().err


def test_geometry_curve_file(tmp_path, out):
    path = tmp_path / "square.csv"
    path.write_text("x,y\n0,0\n0,1\n1,1\n1,0\n", encoding="utf-8")
    assert main(["geometry", "--curve-file", str(path), "--depth", "4", "--out", str(out)]) == EXIT_OK
    assert (out / "decomposition.csv").is_file()


# =========================
# 2) jet / solve
# =========================
def test_jet_make_check_and_solve(out):
    assert main(["jet", "make", "--field", "z2", "--segments", "128", "--out", str(out)]) == EXIT_OK
    jet_path = out / "jet.csv"
    assert jet_path.is_file()

    assert main(["jet", "check", "--jet", str(jet_path), "--out", str(out)]) == EXIT_OK
    report = json.loads((out / "jet_report.json").read_text(encoding="utf-8"))
    assert report["valid"] is True

    assert main(["solve", "--jet", str(jet_path), "--grid", "7x7", "--out", str(out)]) == EXIT_OK
    solution = json.loads((out / "solution.json").read_text(encoding="utf-8"))
    assert solution["method"] == "cauchy_transform"
    assert solution["jet_file"] == str(jet_path)
    assert solution["growth"]["radii"] == [10.0, 100.0, 1000.0]
    header = (out / "solution.csv").read_text(encoding="utf-8").splitlines()[0]
    assert header == "x,y,region,re,im"


def test_jet_check_invalid_exits_2(tmp_path, out):
    path = tmp_path / "bad_jet.csv"
    rows = ["x,y,f0_re,f0_im,f1_re,f1_im,f2_re,f2_im"]
    for k in range(64):
        t = cmath.exp(2j * cmath.pi * k / 64)
        rows.append(f"{t.real!r},{t.imag!r},{t.real!r},{t.imag!r},0,0,0,0")
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    assert main(["jet", "check", "--jet", str(path), "--out", str(out)]) == EXIT_USAGE
    assert json.loads((out / "jet_report.json").read_text(encoding="utf-8"))["valid"] is False


def test_cauchy_transform_grid(out):
    assert main(["cauchy-transform", "--field", "one", "--segments", "64", "--grid", "6x6", "--out", str(out)]) == EXIT_OK
    lines = (out / "cauchy_transform.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,y,region,re,im"
    assert len(lines) > 1


# =========================
# 3) 사용 오류
# =========================
@pytest.mark.parametrize("argv", [
    ["solve"],
    ["verify", "identities", "--tol", "jump_f0"],
    ["verify", "identities", "--tol", "jump_f9=1e-3"],
    ["geometry", "--grid", "5by5"],
    ["geometry", "--lambda", "-2", "--mu", "1"],
    ["geometry", "--nu", "1.5"],
    ["jet", "make", "--field", "nonsense"],
    ["verify", "spectral"],
    ["geometry", "--config", "missing.json"],
])
def test_usage_errors(argv, out):
    assert main(argv + ["--out", str(out)]) == EXIT_USAGE


def test_help_exits_ok(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "verify" in capsys.readouterr().out


# =========================
# 4) verify
# =========================
def test_verify_identities_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a", tmp_path / "b"
    assert main(["verify", "identities", "--seed", "3", "--out", str(first)]) == EXIT_OK
    assert main(["verify", "identities", "--seed", "3", "--out", str(second)]) == EXIT_OK
    a = (first / "identities_report.json").read_bytes()
    b = (second / "identities_report.json").read_bytes()
    assert a == b
    assert json.loads(a)["passed"] is True
    assert "[OK] identities.coefficient_identity" in capsys.readouterr().out


def test_verify_with_config_file(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"lambda": 1.0, "mu": 1.0, "seed": 5, "tolerances": {"kernel_fd": 1e-5}}),
                   encoding="utf-8")
    out = tmp_path / "out"
    assert main(["verify", "identities", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    report = json.loads((out / "identities_report.json").read_text(encoding="utf-8"))
    assert report["tolerances"]["kernel_fd"] == 1e-5
    assert report["seed"] == 5
