import pytest

from src.charge.ledger import FREE, HALF, WHOLE, ChargeLedger
from src.utils.errors import InsufficientCharge, InvariantViolation


@pytest.fixture
def ledger():
    """Weights 3, 0, 5, 2 -> charges 6, 0, 10, 4 half-units"""
    return ChargeLedger([3, 0, 5, 2])


class TestInitialState:
    def test_each_vertex_holds_its_own_charge(self, ledger):
        assert ledger.held(0) == 6
        assert ledger.held(1) == 0
        assert ledger.held(2) == 10
        assert ledger.amount_at(2, 2) == 10
        assert ledger.total() == 20

    def test_units(self, ledger):
        assert ledger.units(2, WHOLE) == 10
        assert ledger.units(2, HALF) == 5
        with pytest.raises(ValueError):
            ledger.units(2, "third")

    def test_dump(self, ledger):
        assert ledger.dump() == ["0 6 0", "2 10 2", "3 4 3"]


class TestMoves:
    """Moving parcels between holders and the free pool"""

    def test_transfer_half(self, ledger):
        ledger.transfer(2, HALF, 2, 0)
        assert ledger.held(0) == 11
        assert ledger.held(2) == 5
        assert ledger.amount_at(2, 0) == 5
        ledger.check_conservation()

    def test_move_to_free_and_back(self, ledger):
        ledger.release(0, WHOLE, 0)
        assert ledger.held(0) == 0
        assert ledger.free_of(0) == 6
        assert ledger.total() == 20
        ledger.move(0, 6, FREE, 3)
        assert ledger.held(3) == 10
        ledger.check_conservation()

    def test_release_all(self, ledger):
        ledger.transfer(2, HALF, 2, 3)
        assert ledger.release_all(2, 3) == 5
        assert ledger.held(3) == 4
        assert ledger.free_of(2) == 5

    def test_overdraw(self, ledger):
        with pytest.raises(InsufficientCharge) as info:
            ledger.move(0, 7, 0, 2)
        assert info.value.label == "insufficient-charge"
        assert ledger.held(0) == 6

    def test_negative_move(self, ledger):
        with pytest.raises(InvariantViolation):
            ledger.move(0, -1, 0, 2)

    def test_zero_move_is_silent(self):
        moves = []
        ledger = ChargeLedger([1, 1], on_move=lambda *args: moves.append(args))
        ledger.move(0, 0, 0, 1)
        ledger.move(0, 2, 0, 0)
        assert moves == []

    def test_hook_sees_every_move(self):
        moves = []
        ledger = ChargeLedger([2, 1], on_move=lambda *args: moves.append(args))
        ledger.transfer(0, HALF, 0, 1)
        ledger.release(1, WHOLE, 1)
        assert moves == [(0, 2, 0, 1), (1, 2, 1, FREE)]


class TestClaimFree:
    """Free charge comes from the pool first, then the source itself"""

    def test_pool_then_self(self, ledger):
        ledger.release(2, HALF, 2)
        assert ledger.claim_free(2, 0, 8) == 8
        assert ledger.free_of(2) == 0
        assert ledger.amount_at(2, 2) == 2
        assert ledger.amount_at(2, 0) == 8

    def test_claim_everything(self, ledger):
        ledger.release(2, HALF, 2)
        assert ledger.claim_free(2, 3) == 10
        assert ledger.held(2) == 0
        assert ledger.held(3) == 14

    def test_claim_to_self_uses_pool_only(self, ledger):
        ledger.release(2, HALF, 2)
        with pytest.raises(InsufficientCharge):
            ledger.claim_free(2, 2, 6)
        assert ledger.claim_free(2, 2) == 5
        assert ledger.held(2) == 10

    def test_zero_units(self, ledger):
        assert ledger.claim_free(0, 2, 0) == 0
        assert ledger.held(2) == 10


class TestSplit:
    def test_split_fills_first_then_second(self):
        """15 units over two parcels: 6 to the first holder, 9 to the second"""
        ledger = ChargeLedger([5, 0, 0, 5, 0])
        ledger.move(0, 10, 0, 1)
        ledger.move(3, 5, 3, 1)
        ledger.split_transfer_to_two([(0, 10), (3, 5)], 1, 2, 6, 4, 8)
        assert ledger.held(2) == 6
        assert ledger.held(4) == 9
        assert ledger.held(1) == 0
        assert ledger.amount_at(0, 4) == 4
        assert ledger.amount_at(3, 4) == 5
        ledger.check_conservation()

    def test_split_too_small(self):
        ledger = ChargeLedger([2, 0, 0, 0])
        ledger.move(0, 4, 0, 1)
        with pytest.raises(InsufficientCharge):
            ledger.split_transfer_to_two([(0, 4)], 1, 2, 3, 3, 2)


def test_conservation_detects_tampering(ledger):
    ledger._parcels[(2, 0)] = 1
    with pytest.raises(InvariantViolation) as info:
        ledger.check_conservation()
    assert info.value.label == "conservation"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
