"""Drive every subcommand through main() in process."""

import json

import pytest

from taquin.cli import main
from taquin.dynamics import is_pieri
from taquin.tableaux import StandardTableau, validate

from fixtures import CHAIN_SOURCE_REPAIRED


def write_tableau(path, rows):
    path.write_text(StandardTableau(rows).to_text())


@pytest.fixture(scope="module")
def atlas_file(tmp_path_factory):
    out = tmp_path_factory.mktemp("atlas") / "a.atlas"
    code = main(
        ["atlas", "build", "--n", "8", "--samples", "120", "--seed", "5",
         "--out", str(out), "--grid", "16"]
    )
    assert code == 0
    return out


class TestSample:
    def test_sample_to_stdout(self, capsys):
        assert main(["sample", "--shape", "3 2", "--seed", "4", "--count", "2"]) == 0
        blocks = capsys.readouterr().out.split("\n\n")
        assert len(blocks) == 2
        for block in blocks:
            t = StandardTableau.from_text(block)
            assert t.shape.rows == (3, 2)
            assert validate(t) is None

    def test_sample_deterministic(self, capsys):
        main(["sample", "--shape", "4 2 1", "--seed", "9", "--count", "3"])
        first = capsys.readouterr().out
        main(["sample", "--shape", "4 2 1", "--seed", "9", "--count", "3"])
        assert capsys.readouterr().out == first

    def test_sample_pieri_to_file(self, tmp_path, capsys):
        out = tmp_path / "draws.txt"
        code = main(
            ["sample", "--shape", "3 3 3", "--seed", "2", "--count", "4",
             "--pieri", "2", "--out", str(out)]
        )
        assert code == 0
        for block in out.read_text().split("\n\n"):
            assert is_pieri(StandardTableau.from_text(block), 2)

    def test_bad_shape(self, capsys):
        assert main(["sample", "--shape", "three two", "--seed", "0"]) == 1
        assert "error:" in capsys.readouterr().err


class TestEvolve:
    def test_evolve_writes_slid_tableau(self, tmp_path, capsys):
        src = tmp_path / "t.txt"
        out = tmp_path / "slid.txt"
        src.write_text(CHAIN_SOURCE_REPAIRED.to_text())
        assert main(["evolve", "--in", str(src), "--steps", "2", "--out", str(out)]) == 0
        slid = StandardTableau.from_text(out.read_text())
        assert slid.size == CHAIN_SOURCE_REPAIRED.size - 2
        # labels are retained, so the two smallest are gone
        assert min(v for row in slid.rows for v in row) == 3

    def test_record_path_csv(self, tmp_path, capsys):
        src = tmp_path / "t.txt"
        write_tableau(src, ((1, 2), (3, 4)))
        assert main(["evolve", "--in", str(src), "--steps", "3", "--record-path"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "step,x,y"
        assert len(lines) == 5
        assert lines[1] == "0,2,2"
        assert lines[-1] == "3,1,1"

    def test_rejects_nonstandard_input(self, tmp_path, capsys):
        src = tmp_path / "bad.txt"
        src.write_text("2 1\n1 3\n3\n")
        assert main(["evolve", "--in", str(src), "--steps", "1"]) == 1
        assert "not standard" in capsys.readouterr().err

    def test_rejects_too_many_steps(self, tmp_path, capsys):
        src = tmp_path / "t.txt"
        write_tableau(src, ((1, 2), (3, 4)))
        assert main(["evolve", "--in", str(src), "--steps", "4"]) == 1
        assert "steps must lie in 0..3" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["evolve", "--in", "/nonexistent/t.txt", "--steps", "0"]) == 1
        assert "error:" in capsys.readouterr().err


class TestAtlas:
    def test_build_reports_stats(self, atlas_file, capsys):
        # the fixture already ran; rebuild to capture the line
        code = main(
            ["atlas", "build", "--n", "8", "--samples", "120", "--seed", "5",
             "--out", str(atlas_file), "--grid", "16"]
        )
        assert code == 0
        line = capsys.readouterr().out
        assert "atlas side=8 samples=120 grid=16" in line

    def test_query_point(self, atlas_file, capsys):
        code = main(["atlas", "query", "--atlas", str(atlas_file), "--point", "0.5", "0.5"])
        assert code == 0
        out = dict(
            line.split(" ", 1) for line in capsys.readouterr().out.splitlines()
        )
        assert 0.0 <= float(out["latitude"]) <= 1.0
        assert 0.0 <= float(out["longitude"]) <= 1.0

    def test_query_meridian(self, atlas_file, capsys):
        code = main(["atlas", "query", "--atlas", str(atlas_file), "--meridian", "0.5", "0.5"])
        assert code == 0
        out = dict(line.split(" ", 1) for line in capsys.readouterr().out.splitlines())
        assert 0.0 <= float(out["x"]) <= 1.0
        assert 0.0 <= float(out["y"]) <= 1.0

    def test_query_uncovered_latitude_fails_cleanly(self, atlas_file, capsys):
        code = main(["atlas", "query", "--atlas", str(atlas_file), "--meridian", "0.005", "0.5"])
        assert code == 1
        assert "outside atlas coverage" in capsys.readouterr().err

    def test_build_guard_propagates(self, tmp_path, capsys):
        code = main(
            ["atlas", "build", "--n", "4", "--samples", "120", "--seed", "0",
             "--out", str(tmp_path / "x.atlas"), "--grid", "16"]
        )
        assert code == 1
        assert "side >= 8" in capsys.readouterr().err


class TestExperiment:
    def test_end_to_end_with_prebuilt_atlas(self, tmp_path, capsys):
        atlas_path = tmp_path / "a.atlas"
        main(["atlas", "build", "--n", "8", "--samples", "120", "--seed", "5",
              "--out", str(atlas_path), "--grid", "16"])
        capsys.readouterr()
        out_dir = tmp_path / "rep"
        code = main(
            ["experiment", "lazy", "--n", "10", "--trials", "3", "--seed", "7",
             "--atlas", str(atlas_path), "--out", str(out_dir)]
        )
        assert code == 0
        console = capsys.readouterr().out
        assert "ks_statistic" in console
        payload = json.loads((out_dir / "summary.json").read_text())
        assert payload["kind"] == "lazy"
        assert payload["atlas_side"] == 8
        lines = (out_dir / "paths.csv").read_text().splitlines()
        assert lines[0].startswith("# taquin-paths kind=lazy")


class TestVerify:
    def test_identities_pass(self, capsys):
        code = main(["verify", "identities", "--trials", "4", "--seed", "0", "--max-n", "9"])
        assert code == 0
        out = capsys.readouterr().out
        for name in ("happy-box", "shift", "path-equivalence",
                     "greene-vs-insertion", "pieri-preservation", "psi-monotone"):
            assert name in out
        assert "FAIL" not in out

    def test_lemma_pass(self, capsys):
        code = main(["verify", "lemma", "--shape", "2 2", "--a", "3", "--b", "4",
                     "--poly", "p1"])
        assert code == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "lhs -1"
        assert out[1] == "rhs -1"
        assert out[2] == "equal True"

    def test_lemma_bad_poly(self, capsys):
        code = main(["verify", "lemma", "--shape", "2 2", "--a", "3", "--b", "4",
                     "--poly", "q9"])
        assert code == 1
        assert "error:" in capsys.readouterr().err


class TestUsage:
    def test_no_command_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
