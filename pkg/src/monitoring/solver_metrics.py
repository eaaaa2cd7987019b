"""
Prometheus metrics for solver runs

Collects solve durations, outcomes, invariant failures and the last
achieved ratio per algorithm. Every call is a no-op when prometheus_client
is not installed.
"""

import functools
import logging
import time
from typing import Any, Dict, Optional

# Prometheus metrics
try:
    from prometheus_client import (
        CollectorRegistry,
        Counter,
        Gauge,
        Histogram,
        generate_latest,
        start_http_server,
    )
    PROMETHEUS_AVAILABLE = True
except ImportError:
    PROMETHEUS_AVAILABLE = False
    logging.warning("Prometheus client not available. Metrics will be disabled.")

from src.utils.config import get_metrics_config
from src.utils.errors import InvariantViolation

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class SolverMetrics:
    """Metrics registry for the MaxwIST solvers"""

    def __init__(self, enabled: Optional[bool] = None):
        config = get_metrics_config()
        self.port = config['port']
        self.enabled = PROMETHEUS_AVAILABLE and (config['enabled'] if enabled is None else enabled)
        self.metrics: Dict[str, Any] = {}
        self.server_started = False

        if self.enabled:
            self.registry = CollectorRegistry()
            self._setup_prometheus_metrics()
        else:
            self.registry = None
            logger.warning("⚠️ Solver metrics disabled")

    def _setup_prometheus_metrics(self):
        self.metrics['solve_duration'] = Histogram(
            'maxwist_solve_duration_seconds',
            'Wall time of one solver call',
            ['algo'],
            registry=self.registry
        )

        self.metrics['solves_total'] = Counter(
            'maxwist_solves_total',
            'Solver calls by outcome',
            ['algo', 'status'],
            registry=self.registry
        )

        self.metrics['invariant_violations_total'] = Counter(
            'maxwist_invariant_violations_total',
            'Internal invariant failures by label',
            ['label'],
            registry=self.registry
        )

        self.metrics['last_ratio'] = Gauge(
            'maxwist_last_ratio',
            'Internal weight over total weight of the latest solution',
            ['algo'],
            registry=self.registry
        )

    def start_server(self, port: Optional[int] = None):
        """Expose /metrics over HTTP; opt-in"""
        if not self.enabled or self.server_started:
            return
        port = port or self.port
        try:
            start_http_server(port, registry=self.registry)
            self.server_started = True
            logger.info(f"✅ Metrics server started on port {port}")
        except Exception as e:
            logger.error(f"❌ Failed to start metrics server: {e}")
            raise

    def record_solve(self, algo: str, status: str, duration: float, ratio: Optional[float] = None):
        if not self.enabled:
            return
        self.metrics['solves_total'].labels(algo=algo, status=status).inc()
        self.metrics['solve_duration'].labels(algo=algo).observe(duration)
        if ratio is not None:
            self.metrics['last_ratio'].labels(algo=algo).set(ratio)

    def record_violation(self, label: str):
        if not self.enabled:
            return
        self.metrics['invariant_violations_total'].labels(label=label).inc()

    def render(self) -> str:
        """Text exposition of every metric, empty when disabled"""
        if not self.enabled:
            return ""
        return generate_latest(self.registry).decode("utf-8")


_metrics_instance: Optional[SolverMetrics] = None


def get_metrics() -> SolverMetrics:
    """Get global metrics instance"""
    global _metrics_instance
    if _metrics_instance is None:
        _metrics_instance = SolverMetrics()
    return _metrics_instance


def render_metrics() -> str:
    return get_metrics().render()


def start_server(port: Optional[int] = None):
    get_metrics().start_server(port)


def with_metrics(algo: str):
    """Decorator timing a solver call and counting its outcome"""
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            metrics = get_metrics()
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except InvariantViolation as e:
                metrics.record_violation(e.label)
                metrics.record_solve(algo, "violation", time.perf_counter() - start_time)
                raise
            except Exception:
                metrics.record_solve(algo, "failed", time.perf_counter() - start_time)
                raise
            ratio = getattr(result, "ratio", None)
            metrics.record_solve(
                algo, "completed", time.perf_counter() - start_time,
                float(ratio) if ratio is not None else None,
            )
            return result
        return wrapper
    return decorator
