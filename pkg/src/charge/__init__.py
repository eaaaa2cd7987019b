"""
Charge accounting for the claw-free solver
"""

from .ledger import FREE, HALF, WHOLE, ChargeLedger

__all__ = ['FREE', 'HALF', 'WHOLE', 'ChargeLedger']
