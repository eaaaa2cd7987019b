"""
Solver traces and independent verification
"""

from .trace import KINDS as EVENT_KINDS, Trace, TraceEvent
from .verifier import (
    AUDIT_LABELS,
    VerificationReport,
    Violation,
    audit_invariants,
    bound_for,
    render,
    verify_solution,
)

__all__ = [
    'EVENT_KINDS',
    'Trace',
    'TraceEvent',
    'AUDIT_LABELS',
    'VerificationReport',
    'Violation',
    'audit_invariants',
    'bound_for',
    'render',
    'verify_solution',
]
