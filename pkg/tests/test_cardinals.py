import pytest
from hypothesis import given
from hypothesis import strategies as st

from template_chroma import (
    aleph,
    ALEPH_0,
    ALEPH_OMEGA,
    card_sum,
    Cardinal,
    compare,
    ContinuumSetting,
    finite,
    least_aleph_reaching,
    OMEGA,
    parse_cardinal,
    successor_n,
)
from template_chroma.errors import IndexOutOfRange, UnsupportedIndex

cardinals = st.one_of(
    st.integers(0, 30).map(finite),
    st.integers(0, 30).map(aleph),
    st.just(ALEPH_OMEGA),
)


class TestOrder:
    def test_finite_below_aleph(self):
        assert compare(finite(7), ALEPH_0) == -1

    def test_equal(self):
        assert compare(aleph(2), aleph(2)) == 0

    def test_aleph_omega_tops_finite_indices(self):
        assert compare(aleph(3), ALEPH_OMEGA) == -1

    @given(cardinals, cardinals)
    def test_total_order_consistent(self, a, b):
        assert compare(a, b) == -compare(b, a)
        assert (compare(a, b) == 0) == (a == b)

    @given(cardinals, cardinals, cardinals)
    def test_transitive(self, a, b, c):
        if a <= b <= c:
            assert a <= c


class TestSuccessor:
    def test_examples(self):
        assert successor_n(ALEPH_0, 2) == aleph(2)
        assert successor_n(aleph(3), 0) == aleph(3)

    def test_aleph_omega_rejected(self):
        with pytest.raises(UnsupportedIndex):
            successor_n(ALEPH_OMEGA, 1)
        assert successor_n(ALEPH_OMEGA, 0) == ALEPH_OMEGA

    def test_finite_rejected(self):
        with pytest.raises(UnsupportedIndex):
            successor_n(finite(3), 1)

    def test_omega_steps(self):
        assert successor_n(aleph(5), OMEGA) == ALEPH_OMEGA
        with pytest.raises(UnsupportedIndex):
            successor_n(ALEPH_OMEGA, OMEGA)


class TestSum:
    def test_examples(self):
        assert card_sum(finite(3), ALEPH_0) == ALEPH_0
        assert card_sum(aleph(1), ALEPH_0) == aleph(1)
        assert card_sum(finite(2), finite(5)) == finite(7)

    @given(cardinals, cardinals)
    def test_commutative_and_max_when_infinite(self, a, b):
        assert card_sum(a, b) == card_sum(b, a)
        if not (a.is_finite and b.is_finite):
            assert card_sum(a, b) == max(a, b)


def scan_least_reaching(c: int, steps: int) -> Cardinal:
    """Independent oracle: scan aleph indices upward; no finite qualifies."""
    target = aleph(c)
    m = 0
    while True:
        if successor_n(aleph(m), steps) >= target:
            return aleph(m)
        m += 1


class TestLeastAlephReaching:
    def test_frozen_examples(self):
        assert least_aleph_reaching(ContinuumSetting(1), 0) == aleph(1)
        assert least_aleph_reaching(ContinuumSetting(1), 1) == ALEPH_0
        assert least_aleph_reaching(ContinuumSetting(3), 1) == aleph(2)

    def test_exhaustive_scan(self):
        for c in range(1, 11):
            for steps in range(0, 11):
                assert least_aleph_reaching(ContinuumSetting(c), steps) == scan_least_reaching(c, steps)

    def test_monotone(self):
        for c in range(1, 8):
            for steps in range(0, 8):
                here = least_aleph_reaching(ContinuumSetting(c), steps)
                assert least_aleph_reaching(ContinuumSetting(c), steps + 1) <= here
                assert least_aleph_reaching(ContinuumSetting(c + 1), steps) >= here

    def test_no_finite_qualifies(self):
        # successor arithmetic refuses finite cardinals outright
        with pytest.raises(UnsupportedIndex):
            successor_n(finite(10**6), 3)


class TestRendering:
    def test_examples(self):
        assert finite(5).render() == "5"
        assert aleph(3).render() == "aleph_3"
        assert ALEPH_OMEGA.render() == "aleph_omega"

    @given(cardinals)
    def test_round_trip(self, x):
        assert parse_cardinal(x.render()) == x

    def test_rejects_garbage(self):
        for bad in ["aleph", "aleph_", "-3", "aleph_-1", "omega", "five"]:
            with pytest.raises(UnsupportedIndex):
                parse_cardinal(bad)


class TestSetting:
    def test_continuum_value(self):
        assert ContinuumSetting(2).continuum == aleph(2)

    def test_rejects_zero(self):
        with pytest.raises(IndexOutOfRange):
            ContinuumSetting(0)
