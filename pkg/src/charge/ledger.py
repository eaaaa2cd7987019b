"""
Charge ledger for the claw-free rewiring

Every vertex starts with a charge equal to its weight, stored in
half-weight units (2 * w). Charge is tracked as parcels keyed by
(source, location) where location is a holder vertex or FREE. Parcels
are never created or destroyed, only moved, so the per-source sum stays
2 * w(source) throughout a run.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.utils.errors import InsufficientCharge, InvariantViolation

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

FREE = -1
HALF = "half"
WHOLE = "whole"

MoveHook = Callable[[int, int, int, int], None]


def _where(location: int) -> str:
    return "free" if location == FREE else str(location)


class ChargeLedger:
    """Parcel-based account of vertex charges in half-weight units"""

    def __init__(self, weights: Sequence[int], on_move: Optional[MoveHook] = None):
        self.weights = tuple(weights)
        self.on_move = on_move
        self._parcels: Dict[Tuple[int, int], int] = {}
        self._held: Dict[int, int] = {}
        for v, w in enumerate(self.weights):
            if w > 0:
                self._parcels[(v, v)] = 2 * w
                self._held[v] = 2 * w

    def units(self, source: int, fraction: str) -> int:
        """Half-units making up the given fraction of source's original charge"""
        if fraction == WHOLE:
            return 2 * self.weights[source]
        if fraction == HALF:
            return self.weights[source]
        raise ValueError(f"unknown fraction {fraction!r}")

    def amount_at(self, source: int, location: int) -> int:
        return self._parcels.get((source, location), 0)

    def held(self, location: int) -> int:
        return self._held.get(location, 0)

    def free_of(self, source: int) -> int:
        return self.amount_at(source, FREE)

    def total(self) -> int:
        return sum(self._parcels.values())

    def move(self, source: int, units: int, frm: int, to: int) -> None:
        """Move units of source's charge from frm to to"""
        if units < 0:
            raise InvariantViolation("conservation", f"negative move of {units} units of {source}", source)
        if units == 0 or frm == to:
            return
        available = self.amount_at(source, frm)
        if available < units:
            raise InsufficientCharge(
                f"{_where(frm)} holds {available} units of {source}, {units} requested", source
            )
        remaining = available - units
        if remaining:
            self._parcels[(source, frm)] = remaining
        else:
            del self._parcels[(source, frm)]
        self._parcels[(source, to)] = self.amount_at(source, to) + units
        if frm != FREE:
            self._held[frm] -= units
        if to != FREE:
            self._held[to] = self.held(to) + units
        logger.debug(f"move {units} of {source}: {_where(frm)} -> {_where(to)}")
        if self.on_move is not None:
            self.on_move(source, units, frm, to)

    def transfer(self, source: int, fraction: str, frm: int, to: int) -> None:
        self.move(source, self.units(source, fraction), frm, to)

    def release(self, source: int, fraction: str, frm: int) -> None:
        self.move(source, self.units(source, fraction), frm, FREE)

    def release_all(self, source: int, frm: int) -> int:
        """Release whatever portion of source frm holds; returns the amount"""
        amount = self.amount_at(source, frm)
        self.move(source, amount, frm, FREE)
        return amount

    def claim_free(self, source: int, to: int, units: Optional[int] = None) -> int:
        """
        Move free charge of source to `to`.

        Free charge is the FREE pool first, then whatever source still holds
        of its own charge. Without units, everything free is claimed.
        """
        pools = [FREE] if to == source else [FREE, source]
        available = sum(self.amount_at(source, p) for p in pools)
        wanted = available if units is None else units
        if available < wanted:
            raise InsufficientCharge(f"only {available} free units of {source}, {wanted} requested", source)
        left = wanted
        for pool in pools:
            take = min(left, self.amount_at(source, pool))
            self.move(source, take, pool, to)
            left -= take
        return wanted

    def split_transfer_to_two(
        self,
        parcels: Sequence[Tuple[int, int]],
        frm: int,
        first: int,
        first_need: int,
        second: int,
        second_need: int,
    ) -> None:
        """
        Hand the (source, units) parcels held by frm to two holders.

        first is filled up to first_need, splitting at most one parcel, and
        everything else goes to second, which must end with at least
        second_need.
        """
        available = sum(units for _, units in parcels)
        if available < first_need + second_need:
            raise InsufficientCharge(
                f"{available} units cannot cover {first_need} + {second_need}", frm
            )
        missing = first_need
        for source, units in parcels:
            to_first = min(missing, units)
            self.move(source, to_first, frm, first)
            self.move(source, units - to_first, frm, second)
            missing -= to_first

    def check_conservation(self) -> None:
        per_source: Dict[int, int] = {}
        for (source, _), units in self._parcels.items():
            if units <= 0:
                raise InvariantViolation("conservation", f"empty parcel of {source}", source)
            per_source[source] = per_source.get(source, 0) + units
        for v, w in enumerate(self.weights):
            if per_source.get(v, 0) != 2 * w:
                raise InvariantViolation(
                    "conservation", f"parcels sum to {per_source.get(v, 0)}, expected {2 * w}", v
                )

    def dump(self) -> List[str]:
        """One "source amount location" line per parcel"""
        return [
            f"{source} {units} {_where(location)}"
            for (source, location), units in sorted(self._parcels.items())
        ]
