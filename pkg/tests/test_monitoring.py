import importlib
import logging
from fractions import Fraction

import pandas as pd
import pytest

from src.monitoring import solver_metrics
from src.monitoring.solver_metrics import PROMETHEUS_AVAILABLE, SolverMetrics, with_metrics
from src.pipelines.benchmark import benchmark_instance, fit_loglog_slope, run_benchmark
from src.generators.graph_generator import WeightScheme, gen_named
from src.solvers.cubic import solve_cubic
from src.solvers.solution import SpanningTreeSolution
from src.utils import config
from src.utils.errors import InvariantViolation, UnknownFamily
from src.utils.logger import COLUMNS, log_solve_result

needs_prometheus = pytest.mark.skipif(not PROMETHEUS_AVAILABLE, reason="prometheus_client not installed")


class TestConfig:
    """Environment-driven configuration"""

    def test_defaults(self):
        assert config.get_solver_config()['oracle_cap'] == 16
        assert config.get_generator_config()['uniform_max'] == 100

    def test_getters_return_copies(self):
        solver = config.get_solver_config()
        solver['oracle_cap'] = 1
        assert config.get_solver_config()['oracle_cap'] != 1

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv('MAXWIST_ORACLE_CAP', '12')
        monkeypatch.setenv('MAXWIST_STRICT_CHECKS', 'off')
        try:
            reloaded = importlib.reload(config)
            assert reloaded.get_solver_config() == {'oracle_cap': 12, 'strict_checks': False}
        finally:
            monkeypatch.undo()
            importlib.reload(config)


def test_run_log_appends_rows(tmp_path):
    """Two solves give one header and two rows"""
    path = tmp_path / "logs" / "runs.csv"
    sol = SpanningTreeSolution(((0, 1), (1, 2), (2, 3)), 2, 4, Fraction(0), "cubic", 4, 6)
    row = log_solve_result(sol, "k4", str(path))
    log_solve_result(sol, "k4-again", str(path))

    assert list(row.columns) == COLUMNS
    frame = pd.read_csv(path)
    assert list(frame["graph"]) == ["k4", "k4-again"]
    assert list(frame["bound"]) == ["0/1", "0/1"]
    assert frame["ratio"].iloc[0] == pytest.approx(0.5)


def test_solver_logs_milestones(caplog):
    with caplog.at_level(logging.INFO):
        solve_cubic(gen_named("prism"))
    assert any(record.message.startswith("✅ Cubic solve") for record in caplog.records)


class TestSolverMetrics:
    def test_disabled_is_silent(self):
        metrics = SolverMetrics(enabled=False)
        metrics.record_solve("cubic", "completed", 0.1, 0.5)
        metrics.record_violation("spanning")
        assert metrics.render() == ""

    @needs_prometheus
    def test_exposition(self):
        metrics = SolverMetrics(enabled=True)
        metrics.record_solve("cubic", "completed", 0.01, 0.75)
        metrics.record_violation("leaf-charge")
        text = metrics.render()
        assert 'maxwist_solves_total{algo="cubic",status="completed"} 1.0' in text
        assert 'maxwist_invariant_violations_total{label="leaf-charge"} 1.0' in text
        assert 'maxwist_last_ratio{algo="cubic"} 0.75' in text

    @needs_prometheus
    def test_decorator_counts_outcomes(self, monkeypatch):
        metrics = SolverMetrics(enabled=True)
        monkeypatch.setattr(solver_metrics, "_metrics_instance", metrics)

        @with_metrics("probe")
        def broken():
            raise InvariantViolation("spanning", "forced")

        with pytest.raises(InvariantViolation):
            broken()
        text = metrics.render()
        assert 'maxwist_solves_total{algo="probe",status="violation"} 1.0' in text
        assert 'maxwist_invariant_violations_total{label="spanning"} 1.0' in text


class TestBenchmark:
    def test_frame_shape(self):
        frame = run_benchmark([8, 16], seed=2)
        assert list(frame.columns) == ["n", "millis"]
        assert list(frame["n"]) == [8, 16]
        assert (frame["millis"] >= 0).all()

    def test_clawfree_family(self):
        g = benchmark_instance("line-graph-of-cubic-random", 8, 0, WeightScheme("unit"))
        assert g.n == 12
        frame = run_benchmark([8], algo="clawfree-dfs")
        assert list(frame["n"]) == [12]

    def test_unknown_inputs(self):
        with pytest.raises(UnknownFamily):
            run_benchmark([8], algo="exact")
        with pytest.raises(UnknownFamily):
            benchmark_instance("petersen", 10, 0, WeightScheme("unit"))

    def test_slope_of_linear_timings(self):
        frame = pd.DataFrame({"n": [1000, 2000, 4000, 8000], "millis": [1.0, 2.0, 4.0, 8.0]})
        assert fit_loglog_slope(frame) == pytest.approx(1.0)

    def test_slope_of_quadratic_timings(self):
        frame = pd.DataFrame({"n": [10, 100, 1000], "millis": [1.0, 100.0, 10000.0]})
        assert fit_loglog_slope(frame) == pytest.approx(2.0)

    def test_slope_needs_two_points(self):
        with pytest.raises(ValueError):
            fit_loglog_slope(pd.DataFrame({"n": [10, 20], "millis": [1.0, 0.0]}))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
