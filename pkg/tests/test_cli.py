"""End-to-end tests for the command line: exit codes, output, config files."""

from pathlib import Path

import numpy as np
import pytest

import trish.cli as cli
from trish.cli import (
    EXIT_DATA,
    EXIT_HYPOTHESIS,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    _UsageError,
    main,
    parse_config_file,
)
from trish.harness import RUN_CSV_HEADER, VERIFY_CSV_HEADER, TheoremReport

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "trish" / "data"
TRAIN = str(DATA_DIR / "train.libsvm")

SYNTHETIC_CONFIG = """\
# tiny quadratic run, kept fast on purpose
method = trish
problem = quadratic
gamma1 = 2.0
gamma2 = 0.5
alpha = 0.1
sigma = 0.1
max_iterations = 8
n_seeds = 2
checkpoint_fractions = 0.5, 1.0
"""


@pytest.fixture
def synthetic_config(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text(SYNTHETIC_CONFIG)
    return str(path)


class TestParseConfigFile:
    def test_typed_values(self, tmp_path):
        path = tmp_path / "ok.conf"
        path.write_text(
            "# heading comment\n"
            "\n"
            "method = sg\n"
            "alpha = 0.5\n"
            "batch_size = 16\n"
            "dataset = some/train.libsvm\n"
            "checkpoint_fractions = 0.5, 1.0\n"
            "tune_alpha = 0.1, 0.2\n"
            "tune_batch_size = 5, 10\n"
        )
        values = parse_config_file(str(path))
        assert values == {
            "method": "sg",
            "alpha": 0.5,
            "batch_size": 16,
            "dataset": "some/train.libsvm",
            "checkpoint_fractions": (0.5, 1.0),
            "tune_alpha": [0.1, 0.2],
            "tune_batch_size": [5, 10],
        }

    @pytest.mark.parametrize(
        "line, fragment",
        [
            ("alpha = abc", "cannot parse"),
            ("foo = 1", "unknown key"),
            ("tune_method = sg", "not a tunable field"),
            ("alpha 0.5", "expected 'key = value'"),
            ("alpha =", "expected 'key = value'"),
        ],
    )
    def test_rejections(self, tmp_path, line, fragment):
        path = tmp_path / "bad.conf"
        path.write_text(line + "\n")
        with pytest.raises(_UsageError, match=fragment):
            parse_config_file(str(path))

    def test_duplicate_key(self, tmp_path):
        path = tmp_path / "dup.conf"
        path.write_text("alpha = 0.5\nalpha = 0.6\n")
        with pytest.raises(_UsageError, match="duplicate key"):
            parse_config_file(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(_UsageError, match="cannot read config file"):
            parse_config_file(str(tmp_path / "absent.conf"))

    def test_error_carries_position(self, tmp_path):
        path = tmp_path / "bad.conf"
        path.write_text("alpha = 0.5\nfoo = 1\n")
        with pytest.raises(_UsageError, match=rf"{path}:2"):
            parse_config_file(str(path))


class TestExitCodes:
    def test_unknown_flag(self, capsys):
        assert main(["run", "--bogus"]) == EXIT_USAGE
        capsys.readouterr()

    def test_missing_subcommand(self, capsys):
        assert main([]) == EXIT_USAGE
        capsys.readouterr()

    def test_missing_required_flag(self, capsys):
        assert main(["verify"]) == EXIT_USAGE
        capsys.readouterr()

    def test_config_file_problems_are_usage_errors(self, tmp_path, capsys):
        bad = tmp_path / "bad.conf"
        bad.write_text("frobnicate = 1\n")
        assert main(["run", "--config", str(bad)]) == EXIT_USAGE
        assert "unknown key" in capsys.readouterr().err

    def test_run_rejects_tune_keys(self, tmp_path, capsys):
        conf = tmp_path / "t.conf"
        conf.write_text(SYNTHETIC_CONFIG + "tune_alpha = 0.1, 0.2\n")
        assert main(["run", "--config", str(conf)]) == EXIT_USAGE
        assert "tune command" in capsys.readouterr().err

    def test_missing_dataset_is_a_data_error(self, tmp_path, capsys):
        rc = main(
            [
                "run", "--dataset", str(tmp_path / "absent.libsvm"),
                "--gamma1", "2.0", "--gamma2", "0.8", "--alpha", "0.5",
            ]
        )
        assert rc == EXIT_DATA
        capsys.readouterr()

    def test_malformed_dataset_reports_position(self, tmp_path, capsys):
        bad = tmp_path / "bad.libsvm"
        bad.write_text("1 1:1.0\n1 0:5\n")
        rc = main(
            [
                "run", "--dataset", str(bad),
                "--gamma1", "2.0", "--gamma2", "0.8", "--alpha", "0.5",
            ]
        )
        assert rc == EXIT_DATA
        err = capsys.readouterr().err
        assert f"{bad}:2:3:" in err
        assert "index 0 below 1" in err

    def test_hypothesis_rejection(self, capsys):
        rc = main(["verify", "--theorem", "1", "--gamma2", "0.01", "--seeds", "5"])
        assert rc == EXIT_HYPOTHESIS
        err = capsys.readouterr().err
        assert "hypothesis rejected" in err
        assert "gamma1/gamma2" in err

    def test_too_few_seeds_is_usage(self, capsys):
        assert main(["verify", "--theorem", "1", "--seeds", "1"]) == EXIT_USAGE
        assert "two trajectories" in capsys.readouterr().err

    def test_violations_exit_code(self, monkeypatch, capsys, tmp_path):
        report = TheoremReport(
            theorem_id=1,
            k=np.array([1, 2]),
            empirical=np.array([0.5, 0.9]),
            standard_error=np.array([0.0, 0.01]),
            bound=np.array([0.5, 0.4]),
            violated=np.array([False, True]),
            n_seeds=5,
            n_se=3.0,
        )
        monkeypatch.setattr(cli, "verify_theorem", lambda *a, **kw: report)
        out_path = tmp_path / "verify.csv"
        rc = main(["verify", "--theorem", "1", "--seeds", "5", "--out", str(out_path)])
        assert rc == EXIT_VIOLATION
        out = capsys.readouterr().out
        assert "violations=1" in out
        assert "first violation at k=2" in out
        lines = out_path.read_text().splitlines()
        assert lines[0] == VERIFY_CSV_HEADER
        assert lines[2].endswith(",1")


class TestRunCommand:
    def test_synthetic_run_output(self, synthetic_config, tmp_path, capsys):
        out_path = tmp_path / "records.csv"
        rc = main(["run", "--config", synthetic_config, "--out", str(out_path)])
        assert rc == EXIT_OK
        out = capsys.readouterr().out
        first = out.splitlines()[0]
        assert first.startswith("config ")
        assert "problem=quadratic method=trish iterations=8 seeds=2" in first
        assert "seed 0: iter=8" in out
        assert "seed 1: iter=8" in out
        assert "final mean:" in out
        assert f"wrote {out_path}" in out
        lines = out_path.read_text().splitlines()
        assert lines[0] == RUN_CSV_HEADER
        assert len(lines) == 1 + 2 * 2  # two seeds, two checkpoints

    def test_flags_override_config(self, synthetic_config, capsys):
        rc = main(["run", "--config", synthetic_config, "--seeds", "1", "--method", "sg"])
        assert rc == EXIT_OK
        out = capsys.readouterr().out
        assert "method=sg" in out
        assert "seed 1:" not in out

    def test_flags_alone_suffice(self, capsys):
        rc = main(
            [
                "run", "--dataset", TRAIN, "--method", "sg", "--alpha", "0.5",
                "--batch", "50", "--seeds", "1",
            ]
        )
        assert rc == EXIT_OK
        assert "problem=logistic" in capsys.readouterr().out


class TestTuneCommand:
    def test_grid_and_best_line(self, tmp_path, capsys):
        conf = tmp_path / "tune.conf"
        conf.write_text(
            "method = trish\n"
            "problem = quadratic\n"
            "sigma = 0.1\n"
            "max_iterations = 5\n"
            "n_seeds = 1\n"
            "checkpoint_fractions = 1.0\n"
            "gamma1 = 2.0\n"
            "gamma2 = 0.5\n"
            "tune_alpha = 0.05, 0.1\n"
        )
        out_path = tmp_path / "best.csv"
        rc = main(["tune", "--config", str(conf), "--out", str(out_path)])
        assert rc == EXIT_OK
        out = capsys.readouterr().out
        lines = out.splitlines()
        entry_lines = [l for l in lines if l.startswith("alpha=")]
        assert len(entry_lines) == 2
        assert all("train_loss=" in l for l in entry_lines)
        best = [l for l in lines if l.startswith("best: ")]
        assert len(best) == 1
        assert out_path.read_text().startswith(RUN_CSV_HEADER)

    def test_gamma_pairing_rule(self, tmp_path, capsys):
        conf = tmp_path / "tune.conf"
        conf.write_text(
            "method = trish\n"
            "problem = quadratic\n"
            "sigma = 0.1\n"
            "max_iterations = 5\n"
            "n_seeds = 1\n"
            "checkpoint_fractions = 1.0\n"
            "alpha = 0.1\n"
            "tune_gamma1 = 2.0, 4.0\n"
        )
        rc = main(["tune", "--config", str(conf)])
        assert rc == EXIT_OK
        out = capsys.readouterr().out
        entry_lines = [l for l in out.splitlines() if l.startswith("gamma1=")]
        assert len(entry_lines) == 2
        assert "gamma1=2 gamma2=0.8" in entry_lines[0]
        assert "gamma1=4 gamma2=1.6" in entry_lines[1]

    def test_tune_without_grid_keys(self, synthetic_config, capsys):
        assert main(["tune", "--config", synthetic_config]) == EXIT_USAGE
        assert "tune_<field>" in capsys.readouterr().err


class TestVerifyCommand:
    def test_theorem1_passes_quickly(self, capsys):
        rc = main(["verify", "--theorem", "1", "--seeds", "40"])
        assert rc == EXIT_OK
        out = capsys.readouterr().out
        assert "theorem 1: horizon=200 seeds=40 violations=0" in out


class TestStatsCommand:
    def test_bundled_train_stats(self, capsys):
        rc = main(["stats", "--dataset", TRAIN])
        assert rc == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert "count=600" in out
        assert "max_index=120" in out
        assert "nnz=6036" in out
        assert "label_balance=0.465" in out

    def test_missing_dataset(self, tmp_path, capsys):
        rc = main(["stats", "--dataset", str(tmp_path / "none.libsvm")])
        assert rc == EXIT_DATA
        capsys.readouterr()
