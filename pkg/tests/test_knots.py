from itertools import product

import pytest
from hypothesis import given, strategies as st

from twobridge import (
    EvenSequence,
    KnotClass,
    Mode,
    ParityMismatch,
    StratumKey,
    binom,
    canonicalize,
    cf_value,
    enumerate_classes,
    enumerate_sequences,
    is_amphichiral,
    negate,
    reverse,
    reverse_negate,
    stratum_members,
    stratum_of,
    tally,
)

D = Mode.MIRROR_DISTINCT
C = Mode.MIRROR_COLLAPSED


@st.composite
def even_sequences(draw, max_m=5, max_abs=6):
    m = draw(st.integers(1, max_m))
    return EvenSequence(
        2 * draw(st.integers(1, max_abs)) * draw(st.sampled_from((1, -1)))
        for _ in range(2 * m)
    )


class TestCanonicalize:
    def test_singleton_orbit(self):
        assert tuple(canonicalize((2, -2), D).canonical) == (2, -2)

    def test_two_element_orbit(self):
        # reverse-negation of (4, 2) is (-2, -4), which precedes it.
        assert tuple(canonicalize((4, 2), D).canonical) == (-2, -4)

    def test_collapsed_orbit(self):
        assert tuple(canonicalize((2, -2), C).canonical) == (-2, 2)

    def test_idempotent(self):
        for mode in (D, C):
            kc = canonicalize((4, -2, 2, 6), mode)
            assert canonicalize(kc.canonical, mode) == kc

    @given(even_sequences(), st.sampled_from((D, C)))
    def test_constant_on_orbits(self, seq, mode):
        images = [reverse_negate(seq)]
        if mode is C:
            images += [negate(seq), reverse(seq)]
        base = canonicalize(seq, mode)
        for g in images:
            assert canonicalize(g, mode) == base

    def test_text_round_trip(self):
        kc = canonicalize((4, 2), D)
        assert kc.to_text() == "D:-2,-4"
        assert KnotClass.from_text("D:-2,-4") == kc


class TestAmphichiral:
    def test_examples(self):
        assert is_amphichiral((2, 2)) is True
        assert is_amphichiral((2, -2)) is False
        assert is_amphichiral((2, 4)) is False

    def test_single_amphichiral_class_at_six_crossings(self):
        amph = [
            kc
            for kc in enumerate_classes(6, D)
            if is_amphichiral(kc.canonical)
        ]
        assert len(amph) == 1
        assert tuple(amph[0].canonical) == (-2, 2, 2, -2)

    def test_never_at_odd_crossing_number(self):
        for c in (3, 5, 7, 9):
            assert not any(
                is_amphichiral(kc.canonical) for kc in enumerate_classes(c, D)
            )

    def test_same_class_as_negation_iff_palindrome(self):
        # Measured up to 12 crossings and pinned: a sequence shares its
        # mirror-distinct class with its negation exactly when it is a
        # palindrome, and never when its magnitude vector is asymmetric.
        for c in range(3, 13):
            for s in enumerate_sequences(c):
                t = tuple(s)
                same = canonicalize(t, D) == canonicalize(negate(t), D)
                assert same == (t == t[::-1])
                mags = tuple(abs(e) for e in t)
                if mags != mags[::-1]:
                    assert not same


class TestStrata:
    @pytest.mark.parametrize(
        "seq,b,ell",
        [
            ((2, 2), (1, 1), 0),
            ((2, -2), (1, 1), 1),
            ((4, -2, 2, 2), (2, 1, 1, 1), 2),
        ],
    )
    def test_stratum_of(self, seq, b, ell):
        key = stratum_of(seq)
        assert key.b == b
        assert key.ell == ell

    def test_key_rejects_unrealizable_ell(self):
        with pytest.raises(ParityMismatch):
            StratumKey((1, 1), 2)

    def test_key_rejects_bad_magnitudes(self):
        with pytest.raises(ValueError):
            StratumKey((1, 0), 0)
        with pytest.raises(ValueError):
            StratumKey((1, 1, 1), 0)

    def test_members_examples(self):
        got = {k.canonical for k in stratum_members(StratumKey((1, 1), 1), D)}
        assert got == {
            canonicalize((2, -2), D).canonical,
            canonicalize((-2, 2), D).canonical,
        }
        assert len(stratum_members(StratumKey((1, 1), 0), D)) == 1
        two = stratum_members(StratumKey((1, 2), 0), D)
        assert {k.canonical for k in two} == {
            canonicalize((2, 4), D).canonical,
            canonicalize((-2, -4), D).canonical,
        }

    def test_member_cardinalities(self):
        # Asymmetric magnitudes give 2 C(2m-1, ell) classes; symmetric
        # magnitudes give C(2m-1, ell) for even ell and
        # C(2m-1, ell) + C(m-1, (ell-1)/2) for odd ell.
        for m in (1, 2, 3):
            for b in product(range(1, 4), repeat=2 * m):
                for ell in range(2 * m):
                    got = len(stratum_members(StratumKey(b, ell), D))
                    if b[::-1] != b:
                        want = 2 * binom(2 * m - 1, ell)
                    elif ell % 2 == 0:
                        want = binom(2 * m - 1, ell)
                    else:
                        want = binom(2 * m - 1, ell) + binom(m - 1, (ell - 1) // 2)
                    assert got == want, (b, ell)


class TestModeRelations:
    def test_collapsed_classes_contain_one_or_two_distinct(self):
        for c in range(3, 11):
            groups = {}
            for kc in enumerate_classes(c, D):
                key = canonicalize(kc.canonical, C)
                groups.setdefault(key, []).append(kc)
            assert len(groups) == tally(c, C).knot_count
            for key, members in groups.items():
                assert len(members) in (1, 2)
                amph = is_amphichiral(members[0].canonical)
                assert (len(members) == 1) == amph

    def test_odd_crossings_double(self):
        for c in (3, 5, 7, 9, 11):
            assert tally(c, D).knot_count == 2 * tally(c, C).knot_count

    def test_fraction_separates_classes(self):
        # Consistency audit: distinct classes with a common denominator p
        # are never related by q1 == q2 or q1 q2 == 1 mod p, while the
        # two presentations inside one class always are.
        for c in range(3, 13):
            by_den = {}
            for kc in enumerate_classes(c, D):
                v = cf_value(kc.canonical)
                w = cf_value(reverse_negate(kc.canonical))
                assert w.denominator == v.denominator
                p = v.denominator
                qs = {v.numerator % p, w.numerator % p}
                by_den.setdefault(p, []).append(qs)
            for p, entries in by_den.items():
                for i in range(len(entries)):
                    for j in range(i + 1, len(entries)):
                        for q1 in entries[i]:
                            for q2 in entries[j]:
                                assert q1 != q2
                                assert (q1 * q2) % p != 1 % p
