"""
Configuration for the MaxwIST toolkit

Library defaults with environment variable overrides. Command-line flags
always take precedence over these values.
"""

import os
from typing import Dict, Any


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


# Solver configuration
SOLVER_CONFIG = {
    'oracle_cap': int(os.getenv('MAXWIST_ORACLE_CAP', '16')),
    'strict_checks': _flag('MAXWIST_STRICT_CHECKS', '1'),
}

# Generator configuration
GENERATOR_CONFIG = {
    'max_retries': int(os.getenv('MAXWIST_GEN_MAX_RETRIES', '1000')),
    'default_seed': int(os.getenv('MAXWIST_SEED', '0')),
    'uniform_max': int(os.getenv('MAXWIST_UNIFORM_MAX', '100')),
}

# Run log configuration
LOGGING_CONFIG = {
    'run_log_path': os.getenv('MAXWIST_RUN_LOG', 'logs/maxwist_runs.csv'),
    'level': os.getenv('MAXWIST_LOG_LEVEL', 'INFO'),
}

# Prometheus metrics configuration
METRICS_CONFIG = {
    'port': int(os.getenv('MAXWIST_METRICS_PORT', '8000')),
    'enabled': _flag('MAXWIST_METRICS', '1'),
}


def get_solver_config() -> Dict[str, Any]:
    """Get solver configuration"""
    return SOLVER_CONFIG.copy()


def get_generator_config() -> Dict[str, Any]:
    """Get graph generator configuration"""
    return GENERATOR_CONFIG.copy()


def get_logging_config() -> Dict[str, Any]:
    """Get run log configuration"""
    return LOGGING_CONFIG.copy()


def get_metrics_config() -> Dict[str, Any]:
    """Get Prometheus metrics configuration"""
    return METRICS_CONFIG.copy()
