"""
test_run_config.py
============================================================
실행 설정 / 파서 / verify 스위트 레지스트리 테스트

테스트 내용:
1. parse_grid, parse_tolerance (실패 시 None)
2. merge_tolerances 의 덮어쓰기 순서와 모르는 이름
3. load_run_config: 설정 파일 + 플래그, "lambda" 키, 잘못된 파일
4. validate_run_config
5. VERIFY_SUITES 와 스위트 함수 / stage 기록

실행:
    pytest test/test_run_config.py
"""

import json

import pytest

from commands.registry import VERIFY_SUITES, validate_suite
from config import DEFAULT_TOLERANCES
from schemas.run_config import (
    RunConfig,
    load_run_config,
    merge_tolerances,
    parse_grid,
    parse_tolerance,
    validate_run_config,
)
from verification.runner import StageLogger, run_suite, write_report
from verification.suites import SUITE_FUNCTIONS


# =========================
# 1) 파서
# =========================
@pytest.mark.parametrize("text, expected", [
    ("41x41", (41, 41)),
    (" 8 X 16 ", (8, 16)),
    ("0x5", None),
    ("5by5", None),
    ("", None),
])
def test_parse_grid(text, expected):
    assert parse_grid(text) == expected


@pytest.mark.parametrize("item, expected", [
    ("jump_f0=5e-3", ("jump_f0", 5e-3)),
    ("growth_ratio_factor = 3", ("growth_ratio_factor", 3.0)),
    ("jump_f0", None),
    ("=1e-3", None),
    ("jump_f0=abc", None),
    ("jump_f0=nan", None),
])
def test_parse_tolerance(item, expected):
    assert parse_tolerance(item) == expected


# =========================
# 2) 허용오차 병합
# =========================
def test_merge_tolerances_order():
    merged = merge_tolerances({"jump_f0": 1e-3}, {"jump_f0": 2e-3, "lame_residual": 0.1})
    assert merged["jump_f0"] == 2e-3
    assert merged["lame_residual"] == 0.1
    assert merged["identity"] == DEFAULT_TOLERANCES["identity"]


def test_merge_tolerances_unknown_name():
    with pytest.raises(ValueError, match="unknown tolerance"):
        merge_tolerances(None, {"jump_f9": 1.0})


# =========================
# 3) load_run_config
# =========================
def test_defaults():
    cfg = load_run_config()
    assert cfg.lam == 1.0 and cfg.mu == 1.0
    assert cfg.grid == (41, 41)
    assert cfg.tolerances == DEFAULT_TOLERANCES


def test_file_then_flags(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({
        "lambda": 2.0,
        "mu": 0.5,
        "depth": 6,
        "tolerances": {"jump_f0": 5e-3, "jump_f1": 1e-2},
    }), encoding="utf-8")
    cfg = load_run_config(str(path), {"mu": 1.5, "lam": None, "grid": (9, 7)}, {"jump_f1": 2e-2})
    assert cfg.lam == 2.0
    assert cfg.mu == 1.5
    assert cfg.depth == 6
    assert cfg.grid == (9, 7)
    assert cfg.tolerances["jump_f0"] == 5e-3
    assert cfg.tolerances["jump_f1"] == 2e-2


def test_flag_lambda_wins_over_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"lambda": 2.0}), encoding="utf-8")
    assert load_run_config(str(path), {"lam": 3.0}).lam == 3.0


@pytest.mark.parametrize("content", ["{not json", "[1, 2]", json.dumps({"colour": "red"})])
def test_bad_config_file(tmp_path, content):
    path = tmp_path / "run.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ValueError):
        load_run_config(str(path))


def test_missing_config_file(tmp_path):
    with pytest.raises(ValueError, match="not found"):
        load_run_config(str(tmp_path / "missing.json"))


# =========================
# 4) validate_run_config
# =========================
@pytest.mark.parametrize("fields", [
    {"lam": -1.0, "mu": 1.0},
    {"mu": 0.0},
    {"nu": 1.2},
    {"d": 2.5},
    {"depth": 0},
    {"curve": "file"},
])
def test_validate_run_config_rejects(fields):
    ok, reason = validate_run_config(RunConfig(**fields))
    assert not ok
    assert reason


def test_validate_run_config_accepts():
    assert validate_run_config(RunConfig(d=1.5, curve="koch")) == (True, "ok")


def test_out_dir_is_created(tmp_path):
    cfg = RunConfig(out=str(tmp_path / "nested" / "out"))
    assert cfg.out_dir().is_dir()


# =========================
# 5) 레지스트리 / 실행기
# =========================
def test_registry_matches_suite_functions():
    assert set(VERIFY_SUITES) == set(SUITE_FUNCTIONS)
    for suite in VERIFY_SUITES.values():
        assert suite["description"]
        for entry in suite["checks"].values():
            assert entry["anchor"]
            assert entry["tolerance"] is None or entry["tolerance"] in DEFAULT_TOLERANCES


def test_validate_suite():
    assert validate_suite("jumps") == (True, "ok")
    ok, reason = validate_suite("spectral")
    assert not ok and "unknown suite" in reason
    with pytest.raises(ValueError):
        run_suite("spectral")


def test_stage_logger():
    stages = StageLogger("identities", seed=7)
    stages.begin("load")
    record = stages.end("load", message="done")
    assert record.status == "ok"
    assert record.elapsed_s >= 0.0
    assert stages.records == [record]


def test_identities_suite_report(tmp_path):
    report = run_suite("identities", seed=7)
    assert report.passed
    assert {c.name for c in report.checks} == set(VERIFY_SUITES["identities"]["checks"])
    symmetric = next(c for c in report.checks if c.name == "symmetric_sum")
    assert symmetric.tolerance is None
    assert symmetric.value == pytest.approx(-4.0 / 3.0)

    report_path, stages_path = write_report(report, tmp_path)
    payload = json.loads(report_path.read_text(encoding="utf-8"))
    assert "stages" not in payload
    assert payload["seed"] == 7
    assert json.loads(stages_path.read_text(encoding="utf-8"))[0]["stage"] == "run_checks"
