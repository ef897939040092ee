"""Command-line behavior: outputs, exit codes, determinism."""

import json

import pytest

from linv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTate:
    def test_prime_square(self, capsys):
        code, out, _ = run(capsys, "tate", "--p", "5", "--q", "25")
        assert code == 0
        assert "O(5^" in out
        assert "5^0*0" not in out  # zero prints as a bound, not a fake unit

    def test_tate_curve_parameter(self, capsys):
        code, out, _ = run(capsys, "tate", "--p", "11", "--q", "1452")
        assert code == 0
        assert "11^1*" in out

    def test_unit_rejected(self, capsys):
        code, _, err = run(capsys, "tate", "--p", "5", "--q", "3")
        assert code == 2
        assert "unit" in err

    def test_bad_prime(self, capsys):
        code, _, err = run(capsys, "tate", "--p", "4", "--q", "12")
        assert code == 2


class TestClassify:
    @pytest.mark.parametrize(
        "eta0,want",
        [
            ("x*abs", "second(0)"),
            ("triv", "third(0)"),
            ("{at_p:2,teich:0,at_gamma:1}", "first"),
        ],
    )
    def test_cases(self, capsys, eta0, want):
        code, out, _ = run(
            capsys, "classify", "--p", "5", "--delta0", "triv", "--eta0", eta0
        )
        assert code == 0
        assert out.strip() == want


class TestVerify:
    def test_random_pass(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--random", "--count", "2", "--seed", "0", "--p", "5"
        )
        assert code == 0
        assert out.count("PASS") == 2

    def test_json_reports(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--random", "--count", "1", "--seed", "3", "--p", "7",
            "--k", "2", "--format", "json",
        )
        assert code == 0
        reports = json.loads(out)
        assert reports[0]["case"] == "second(2)"
        assert reports[0]["passed"] is True
        assert reports[0]["certified_modulus"].startswith("7^")

    def test_deterministic(self, capsys):
        args = ("verify", "--random", "--count", "3", "--seed", "5", "--p", "5",
                "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_scenario_file(self, capsys, tmp_path):
        doc = {
            "p": 5,
            "delta": {"at_p": "2", "teich": 0, "at_gamma": "6"},
            "eta": {
                "at_p": "2",
                "teich": 1,
                "at_gamma": {"body": "36", "tangent": ["[4,4]@1"]},
            },
            "q0": {"a": "1", "b": "0"},
            "label": "from-file",
        }
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0
        assert "from-file" in out and "PASS" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", "no-such-file.json")
        assert code == 2

    def test_crystalline_file_fails(self, capsys, tmp_path):
        doc = {
            "p": 5,
            "delta": "triv",
            "eta": "x*abs",
            "q0": {"a": "0", "b": "1"},
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 3
        assert "CrystallineSpecializationError" in out

    def test_needs_input(self, capsys):
        code, _, err = run(capsys, "verify")
        assert code == 2


class TestCharAndLinv:
    def test_weight(self, capsys):
        code, out, _ = run(capsys, "char", "weight", "--p", "5", "--a", "x*abs")
        assert code == 0
        assert "weight" in out

    def test_mul_json(self, capsys):
        code, out, _ = run(
            capsys, "char", "mul", "--p", "5", "--a", "x", "--b", "abs",
            "--format", "json",
        )
        assert code == 0
        assert "character" in json.loads(out)

    def test_pair(self, capsys):
        code, out, _ = run(
            capsys, "linv", "pair", "--p", "5",
            "--q", "{a:1,b:2}", "--h", "{at_p:0,at_gamma:1}",
        )
        assert code == 0
        assert "5^0*2" in out

    def test_L_inv_infinity(self, capsys):
        code, out, _ = run(capsys, "linv", "L_inv", "--p", "5", "--q", "{a:0,b:1}")
        assert code == 0
        assert "Infinity" in out

    def test_missing_operand(self, capsys):
        code, _, err = run(capsys, "linv", "pair", "--p", "5", "--q", "{a:1,b:0}")
        assert code == 2


class TestPrecisionFlag:
    def test_too_small(self, capsys):
        code, _, err = run(capsys, "tate", "--p", "5", "--q", "25", "--precision", "4")
        assert code == 2

    def test_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("LINV_PRECISION", "20")
        code, out, _ = run(capsys, "tate", "--p", "5", "--q", "50")
        assert code == 0
        assert "O(5^20)" in out

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LINV_PRECISION", "20")
        code, out, _ = run(
            capsys, "tate", "--p", "5", "--q", "50", "--precision", "30"
        )
        assert code == 0
        assert "O(5^30)" in out
