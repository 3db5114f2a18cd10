import json

import numpy as np
import pytest

from mubkit.cli import RunConfig, main, parse_args
from mubkit.serialize import dumps, format_float, mubset_from_doc, mubset_to_doc
from mubkit.mub import build_complete_set, verify_set


class TestParseArgs:
    def test_verify(self, tmp_path):
        path = tmp_path / "f.json"
        config = parse_args(["verify", "--set", str(path), "--tol", "1e-8"])
        assert config.command == "verify"
        assert config.tol == 1e-8
        assert config.set_path == path

    def test_ffz(self):
        config = parse_args(["ffz", "--dim", "3", "--a", "0", "--max-m", "6"])
        assert config.command == "ffz"
        assert (config.dim, config.a, config.max_m) == (3, 0, 6)

    def test_su2(self):
        config = parse_args(["su2", "--two-j", "7", "--a", "3"])
        assert config.command == "su2"
        assert (config.two_j, config.a) == (7, 3)

    def test_set_flags(self):
        config = parse_args(["set", "--dim", "5", "--exact", "--format", "json"])
        assert isinstance(config, RunConfig)
        assert config.dim == 5 and config.exact and config.format == "json"

    def test_missing_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as err:
            parse_args([])
        assert err.value.code == 2

    def test_unknown_command_exits_2(self):
        with pytest.raises(SystemExit) as err:
            parse_args(["frobnicate"])
        assert err.value.code == 2

    def test_nonpositive_tol_rejected(self):
        with pytest.raises(SystemExit) as err:
            parse_args(["set", "--dim", "3", "--tol", "-1"])
        assert err.value.code == 2

    def test_env_tolerance(self, monkeypatch):
        monkeypatch.setenv("MUBKIT_TOL", "1e-7")
        assert parse_args(["set", "--dim", "3"]).tol == 1e-7
        monkeypatch.delenv("MUBKIT_TOL")
        assert parse_args(["set", "--dim", "3"]).tol == 1e-10


class TestFloatFormatting:
    def test_17_digits(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert format_float(1.0) == "1"

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            format_float(float("nan"))

    def test_dumps_round_trips_through_stdlib(self):
        doc = {"a": [1, 2.5, None, True], "b": {"c": "x"}}
        assert json.loads(dumps(doc)) == doc


class TestSetCommand:
    def test_prime_dim_exit_0(self, tmp_path, capsys):
        out = tmp_path / "set5.json"
        rc = main(["set", "--dim", "5", "--exact", "--output", str(out)])
        assert rc == 0
        doc = json.loads(out.read_text())
        assert doc["dim"] == 5 and doc["exact"] is True
        assert len(doc["bases"]) == 6

    def test_non_prime_exit_2(self, capsys):
        rc = main(["set", "--dim", "6"])
        assert rc == 2
        assert "not prime" in capsys.readouterr().err

    def test_force_downgrades_to_exit_1(self, tmp_path, capsys):
        out = tmp_path / "set6.json"
        rc = main(["set", "--dim", "6", "--force", "--output", str(out)])
        assert rc == 1
        err = capsys.readouterr().err
        assert "unbiasedness failed" in err
        assert "not complete by construction" in err
        assert json.loads(out.read_text())["dim"] == 6

    def test_csv_format(self, tmp_path):
        out = tmp_path / "set3.csv"
        assert main(["set", "--dim", "3", "--format", "csv", "--output", str(out)]) == 0
        rows = out.read_text().strip().split("\n")
        assert len(rows) == 12  # 4 bases x 3 vectors
        assert all(len(r.split(",")) == 6 for r in rows)  # interleaved re/im


class TestVerifyCommand:
    @pytest.mark.parametrize("dim", [3, 5, 7])
    def test_round_trip(self, dim, tmp_path, capsys):
        out = tmp_path / f"set{dim}.json"
        assert main(["set", "--dim", str(dim), "--exact", "--output", str(out)]) == 0
        rc = main(["verify", "--set", str(out)])
        assert rc == 0
        report = json.loads(capsys.readouterr().out)
        assert report["pass"] is True
        assert report["exact"] is True

    def test_numeric_round_trip(self, tmp_path, capsys):
        out = tmp_path / "set7.json"
        assert main(["set", "--dim", "7", "--output", str(out)]) == 0
        assert main(["verify", "--set", str(out)]) == 0

    def test_forced_set_fails_verification(self, tmp_path, capsys):
        out = tmp_path / "set6.json"
        main(["set", "--dim", "6", "--force", "--output", str(out)])
        capsys.readouterr()
        rc = main(["verify", "--set", str(out)])
        assert rc == 1
        report = json.loads(capsys.readouterr().out)
        assert report["pass"] is False
        assert report["failing_pairs"]

    def test_missing_file_exit_2(self, tmp_path, capsys):
        rc = main(["verify", "--set", str(tmp_path / "nope.json")])
        assert rc == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["set", "--dim", "5", "--exact"],
            ["set", "--dim", "7"],
            ["sumrule", "--dim", "5"],
            ["composite", "--p", "2", "--e", "2"],
            ["gen", "--dim", "6", "--a", "4"],
            ["su2", "--two-j", "5"],
            ["ffz", "--dim", "3", "--a", "1"],
        ],
    )
    def test_byte_identical_runs(self, argv, tmp_path):
        out1, out2 = tmp_path / "run1", tmp_path / "run2"
        assert main(argv + ["--output", str(out1)]) == 0
        assert main(argv + ["--output", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()


class TestSumruleCommand:
    def test_d7_magnitudes(self, capsys):
        rc = main(["sumrule", "--dim", "7"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["pass"] is True
        magnitudes = {round(e["magnitude"], 9) for e in doc["entries"]}
        assert magnitudes == {
            round(v, 9) for v in (7.0, 0.0, np.sqrt(7))
        }

    def test_non_prime_rejected(self, capsys):
        assert main(["sumrule", "--dim", "6"]) == 2

    def test_csv(self, tmp_path):
        out = tmp_path / "sum.csv"
        assert main(["sumrule", "--dim", "3", "--format", "csv", "--output", str(out)]) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "a,b,n_alpha,n_beta,magnitude,expected_sq,exact_match"
        assert len(lines) == 1 + 3**4


class TestSu2Command:
    def test_single_a(self, capsys):
        assert main(["su2", "--two-j", "7", "--a", "3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["two_j"] == 7 and doc["a"] == 3 and doc["pass"]
        assert set(doc["residuals"]) == {"jz_jp", "jz_jm", "jp_jm", "casimir", "action"}

    def test_sweep_all_a(self, capsys):
        assert main(["su2", "--two-j", "4"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["reports"]) == 5 and doc["pass"]


class TestFfzCommand:
    def test_single_a(self, capsys):
        assert main(["ffz", "--dim", "3", "--a", "0", "--max-m", "6"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["sign_convention"] == -1
        assert doc["m_range"] == [0, 6]
        assert doc["opposite_sign_residual_at_basic_pair"] > 0.1

    def test_all_a(self, capsys):
        assert main(["ffz", "--dim", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["reports"]) == 2 and doc["pass"]


class TestGenCommand:
    def test_json_matrix(self, capsys):
        assert main(["gen", "--dim", "3", "--a", "1"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["dim"] == 3
        assert len(doc["entries"]) == 9
        assert len(doc["exact"]) == 9
        q = np.exp(2j * np.pi / 3)
        entry = doc["entries"][1]
        assert complex(entry[0], entry[1]) == pytest.approx(q, abs=1e-12)

    def test_clock_matrix_csv(self, capsys):
        assert main(["gen", "--dim", "2", "--matrix", "z", "--format", "csv"]) == 0
        out = capsys.readouterr().out.strip().split("\n")
        assert out[0] == "1,0,0,0"
        assert out[1] == "0,0,-1,0"


class TestCompositeCommand:
    def test_d4(self, capsys):
        assert main(["composite", "--p", "2", "--e", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["dim"] == 4
        assert len(doc["bases"]) == 5
        assert all(b["label"].startswith("class:") for b in doc["bases"])
        assert all("class_labels" in b for b in doc["bases"])

    def test_a_params_broadcast(self, capsys):
        assert main(["composite", "--p", "2", "--e", "2", "--a", "1"]) == 0

    def test_bad_a_list(self, capsys):
        assert main(["composite", "--p", "2", "--e", "2", "--a", "0,7"]) == 2


class TestSerializeRoundTrip:
    @pytest.mark.parametrize("exact", [True, False])
    def test_doc_round_trip(self, exact):
        original = build_complete_set(5)
        doc = mubset_to_doc(original, exact=exact)
        restored = mubset_from_doc(json.loads(dumps(doc)))
        assert restored.dim == 5
        assert [b.label for b in restored.bases] == ["s", 0, 1, 2, 3, 4]
        rep = verify_set(restored)
        assert rep.passed
        assert rep.details["exact"] is exact
        for basis_a, basis_b in zip(original.bases, restored.bases):
            assert np.abs(basis_a.as_array() - basis_b.as_array()).max() < 1e-15

    def test_exact_serialization_needs_exact_set(self):
        from mubkit.composite import build_composite_set

        numeric_set = build_composite_set(2, 2)
        with pytest.raises(ValueError, match="exact"):
            mubset_to_doc(numeric_set, exact=True)
