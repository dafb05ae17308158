"""Experiment drivers: configuration, determinism, aggregation, emission."""

import json

import pytest

from taquin.experiments import (
    ExperimentConfig,
    _quantiles,
    emit_reports,
    run_evacuation_experiment,
    run_lazy_path_experiment,
)
from taquin.geography import build_atlas
from taquin.rng import RngSpec
from taquin.stats import ks_uniformity


@pytest.fixture(scope="module")
def atlas():
    return build_atlas(8, 150, RngSpec(77, 0), grid_size=16, alphas=(0.2, 0.4, 0.6, 0.8))


def small_config(**kw):
    base = dict(side=10, trials=8, master_seed=21, t_grid=(0.25, 0.75))
    base.update(kw)
    return ExperimentConfig(**base)


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(side=0, trials=1, master_seed=0)
        with pytest.raises(ValueError):
            ExperimentConfig(side=4, trials=-1, master_seed=0)
        with pytest.raises(ValueError):
            ExperimentConfig(side=4, trials=1, master_seed=0, boundary_cut=0.6)
        with pytest.raises(ValueError):
            ExperimentConfig(side=4, trials=1, master_seed=0, t0=0.95)
        with pytest.raises(ValueError):
            ExperimentConfig(side=4, trials=1, master_seed=0, t_grid=(0.5, 1.5))

    def test_defaults_are_valid(self):
        cfg = ExperimentConfig(side=6, trials=2, master_seed=0)
        assert cfg.t0 == 0.5
        assert 0.5 in cfg.t_grid


class TestQuantiles:
    def test_empty(self):
        assert _quantiles([]) == {}

    def test_median_and_nearest_rank(self):
        q = _quantiles([4.0, 1.0, 3.0, 2.0])
        assert q == {"0.5": 2.5, "0.9": 4.0}
        q = _quantiles([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0])
        assert q["0.5"] == 5.5
        assert q["0.9"] == 9.0


class TestKsUniformity:
    def test_frozen_values(self):
        assert ks_uniformity([0.5]) == 0.5
        assert abs(ks_uniformity([0.2, 0.4, 0.6, 0.8]) - 0.2) < 1e-15

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            ks_uniformity([])


class TestRuns:
    def test_zero_trials(self, atlas):
        summary, reports = run_evacuation_experiment(small_config(trials=0), atlas)
        assert reports == []
        assert summary.ks_statistic is None
        assert summary.latitude_sup_quantiles == {}

    def test_deterministic_and_worker_invariant(self, atlas):
        cfg = small_config()
        s1, r1 = run_evacuation_experiment(cfg, atlas)
        s2, r2 = run_evacuation_experiment(cfg, atlas)
        assert s1 == s2 and r1 == r2
        s4, r4 = run_evacuation_experiment(cfg, atlas, workers=2)
        assert s4 == s1 and r4 == r1

    def test_kinds_differ(self, atlas):
        cfg = small_config()
        se, _ = run_evacuation_experiment(cfg, atlas)
        sl, _ = run_lazy_path_experiment(cfg, atlas)
        assert se.kind == "evacuation"
        assert sl.kind == "lazy"

    def test_points_cover_grid_and_t0(self, atlas):
        cfg = small_config()
        _, reports = run_lazy_path_experiment(cfg, atlas)
        assert len(reports) == cfg.trials
        for rep in reports:
            ts = tuple(p.t for p in rep.points)
            assert ts == (0.25, 0.5, 0.75)
            at_t0 = next(p for p in rep.points if p.t == cfg.t0)
            assert rep.psi == at_t0.longitude

    @pytest.mark.parametrize("kind", ["evacuation", "lazy"])
    def test_sups_recomputable_from_points(self, atlas, kind):
        cfg = small_config(trials=5)
        run = run_evacuation_experiment if kind == "evacuation" else run_lazy_path_experiment
        _, reports = run(cfg, atlas)
        lo, hi = cfg.boundary_cut, 1 - cfg.boundary_cut
        for rep in reports:
            window = [p for p in rep.points if lo - 1e-9 <= p.t <= hi + 1e-9]
            assert window
            target = (lambda t: 1 - t) if kind == "evacuation" else (lambda t: t)
            want = max(abs(p.latitude - target(p.t)) for p in window)
            assert rep.latitude_sup == want


class TestEmission:
    def test_csv_and_json_shape(self, atlas, tmp_path):
        cfg = small_config(trials=3)
        summary, reports = run_evacuation_experiment(cfg, atlas)
        csv_path, summary_path = emit_reports(reports, summary, tmp_path)
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "# taquin-paths kind=evacuation side=10"
        assert lines[1] == "trial,t,x,y,latitude,longitude"
        assert len(lines) == 2 + 3 * 3  # trials x grid points
        first = lines[2].split(",")
        assert first[0] == "0"
        assert float(first[1]) == 0.25

        payload = json.loads(summary_path.read_text())
        assert payload["kind"] == "evacuation"
        assert payload["side"] == 10
        assert payload["trials"] == 3
        assert payload["t_grid"] == [0.25, 0.75]
        assert payload["ks_statistic"] == summary.ks_statistic
        assert set(payload["latitude_sup_quantiles"]) == {"0.5", "0.9"}

    def test_zero_trial_emission(self, atlas, tmp_path):
        cfg = small_config(trials=0)
        summary, reports = run_lazy_path_experiment(cfg, atlas)
        csv_path, summary_path = emit_reports(reports, summary, tmp_path)
        assert csv_path.read_text().splitlines()[1] == "trial,t,x,y,latitude,longitude"
        assert json.loads(summary_path.read_text())["ks_statistic"] is None
