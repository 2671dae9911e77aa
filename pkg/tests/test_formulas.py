from fractions import Fraction

import pytest

from twobridge import (
    ChiralBranch,
    CrossingClass,
    InexactDivision,
    Mode,
    NonIntegerResult,
    avg_genus,
    avg_genus_mirror,
    binom,
    correction,
    correction_mirror,
    residual,
    residual_mirror,
    stratum_closed_A,
    stratum_closed_B,
    tally,
    tg_closed,
    tg_mirror_by_strata,
    tg_mirror_closed,
    tk_closed,
    tk_mirror_closed,
)
from twobridge.formulas import _as_int, _exact_div


def stratum_sum_A(k, l, parity):
    """Direct summation over the genus window, the defining expression."""
    if parity == "even":
        return sum(
            binom(k + l - 1, 2 * l) * binom(k - l - 1, 2 * m - 2 * l - 1)
            for m in range(l + 1, (k + l) // 2 + 1)
        )
    total = 0
    for m in range(l + 1, (k + l + 1) // 2 + 1):
        total += binom(k + l, 2 * l + 1) * binom(k - l - 1, 2 * m - 2 * l - 2)
        if (k + l) % 2 == 1:
            total += binom((k + l - 1) // 2, l) * binom((k - l - 1) // 2, m - l - 1)
    return total


def stratum_sum_B(k, l, parity):
    if parity == "even":
        return sum(
            m * binom(k + l - 1, 2 * l) * binom(k - l - 1, 2 * m - 2 * l - 1)
            for m in range(l + 1, (k + l) // 2 + 1)
        )
    total = 0
    for m in range(l + 1, (k + l + 1) // 2 + 1):
        total += m * binom(k + l, 2 * l + 1) * binom(k - l - 1, 2 * m - 2 * l - 2)
        if (k + l) % 2 == 1:
            total += (
                m * binom((k + l - 1) // 2, l) * binom((k - l - 1) // 2, m - l - 1)
            )
    return total


class TestCrossingClass:
    def test_residues_are_pure_functions_of_c(self):
        for c in range(3, 50):
            cc = CrossingClass.of(c)
            assert cc == CrossingClass.of(c)
            assert cc.mod4 == c % 4

    def test_even_residues_share_the_chiral_branch(self):
        assert CrossingClass.of(4).chiral is ChiralBranch.EVEN
        assert CrossingClass.of(6).chiral is ChiralBranch.EVEN
        assert CrossingClass.of(5).chiral is ChiralBranch.ONE_MOD_4
        assert CrossingClass.of(7).chiral is ChiralBranch.THREE_MOD_4

    def test_rejects_small_c(self):
        with pytest.raises(ValueError):
            CrossingClass.of(2)


class TestKnotCounts:
    @pytest.mark.parametrize("c,expected", [(7, 14), (13, 704), (4, 1)])
    def test_tk(self, c, expected):
        assert tk_closed(c) == expected

    @pytest.mark.parametrize("c,expected", [(8, 44), (15, 10646), (3, 2)])
    def test_tg(self, c, expected):
        assert tg_closed(c) == expected

    @pytest.mark.parametrize("c,expected", [(12, 176), (5, 2), (6, 3)])
    def test_tk_mirror(self, c, expected):
        assert tk_mirror_closed(c) == expected

    @pytest.mark.parametrize("c,expected", [(14, 2485), (11, 259), (4, 1)])
    def test_tg_mirror(self, c, expected):
        assert tg_mirror_closed(c) == expected

    def test_rejects_small_c(self):
        for fn in (tk_closed, tg_closed, tk_mirror_closed, tg_mirror_closed):
            with pytest.raises(ValueError):
                fn(2)


class TestAverages:
    @pytest.mark.parametrize(
        "c,expected",
        [(6, Fraction(8, 5)), (9, Fraction(19, 8)), (13, Fraction(107, 32))],
    )
    def test_avg_genus(self, c, expected):
        assert avg_genus(c) == expected

    @pytest.mark.parametrize(
        "c,expected",
        [
            (8, Fraction(25, 12)),
            (14, Fraction(355, 99)),
            (15, Fraction(5323, 1387)),
        ],
    )
    def test_avg_genus_mirror(self, c, expected):
        assert avg_genus_mirror(c) == expected

    @pytest.mark.parametrize(
        "c,expected",
        [(6, Fraction(1, 60)), (5, Fraction(1, 6)), (7, Fraction(1, 42))],
    )
    def test_residual(self, c, expected):
        assert residual(c) == expected
        assert correction(c) == expected

    def test_residual_equals_correction(self):
        for c in range(3, 2001):
            assert residual(c) == correction(c)
            assert residual_mirror(c) == correction_mirror(c)

    def test_consistency_triangle(self):
        for c in range(3, 10_001):
            assert avg_genus(c) * tk_closed(c) == tg_closed(c)

    def test_averages_agree_at_odd_c(self):
        for c in range(3, 2001, 2):
            assert avg_genus_mirror(c) == avg_genus(c)


class TestMirrorRelations:
    def test_odd_crossings_halve_exactly(self):
        for c in range(3, 10_001, 2):
            assert tk_closed(c) == 2 * tk_mirror_closed(c)
            assert tg_closed(c) == 2 * tg_mirror_closed(c)


class TestStratumClosedForms:
    def test_examples(self):
        assert stratum_closed_A(3, 0, "even") == 2
        assert stratum_closed_A(2, 1, "even") == 0
        # At three crossings the single stratum holds the chiral pair of
        # trefoils: two mirror-distinct classes of genus one each.
        assert stratum_closed_A(1, 0, "odd") == 2
        assert stratum_closed_B(1, 0, "odd") == 2
        assert tally(3, Mode.MIRROR_DISTINCT).by_ell[1] == (2, 2)

    def test_against_direct_sums(self):
        for c in range(3, 61):
            k, parity = c // 2, ("even" if c % 2 == 0 else "odd")
            for l in range(k):
                assert stratum_closed_A(k, l, parity) == stratum_sum_A(k, l, parity)
                assert stratum_closed_B(k, l, parity) == stratum_sum_B(k, l, parity)

    def test_sums_reproduce_totals(self):
        spots = list(range(3, 501)) + [1000, 2005, 5000]
        for c in spots:
            k, parity = c // 2, ("even" if c % 2 == 0 else "odd")
            assert sum(stratum_closed_A(k, l, parity) for l in range(k)) == tk_closed(c)
            assert sum(stratum_closed_B(k, l, parity) for l in range(k)) == tg_closed(c)

    def test_argument_checks(self):
        with pytest.raises(ValueError):
            stratum_closed_A(2, 2, "even")
        with pytest.raises(ValueError):
            stratum_closed_A(2, 0, "both")
        with pytest.raises(ValueError):
            stratum_closed_B(1, 0, "even")


class TestMirrorGenusByStrata:
    def test_matches_closed_form(self):
        for c in range(4, 201, 2):
            assert tg_mirror_by_strata(c) == tg_mirror_closed(c)

    def test_matches_enumeration(self):
        for c in range(4, 15, 2):
            assert tg_mirror_by_strata(c) == tally(c, Mode.MIRROR_COLLAPSED).total_genus

    def test_odd_c_rejected(self):
        with pytest.raises(ValueError):
            tg_mirror_by_strata(5)


class TestSentinels:
    def test_inexact_division(self):
        with pytest.raises(InexactDivision):
            _exact_div(5, 3)
        assert _exact_div(6, 3) == 2

    def test_non_integer_result(self):
        with pytest.raises(NonIntegerResult):
            _as_int(Fraction(1, 2))
        assert _as_int(Fraction(4, 2)) == 2
