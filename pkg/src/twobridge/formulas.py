"""Closed forms for 2-bridge knot counts, total genus and average genus.

Every function returns exact integers or fractions.  The knot count and
total genus split into branches by the residue of the crossing number c
mod 4, with the two even residues sharing a branch in the
mirror-distinct forms; the average genus in either counting mode is
c/4 + 1/12 plus an exponentially small correction.  Divisions are
checked: the closed forms are integral by construction, so an inexact
division can only mean an implementation fault and raises instead of
truncating.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .identities import binom


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder (bug sentinel)."""


class BranchMismatch(ArithmeticError):
    """Two independent evaluations of the same value disagree (bug sentinel)."""


class NonIntegerResult(ArithmeticError):
    """A quantity that must be an integer came out fractional (bug sentinel)."""


def _exact_div(n: int, d: int) -> int:
    q, r = divmod(n, d)
    if r:
        raise InexactDivision(f"{n} is not divisible by {d}")
    return q


def _require_c(c: int):
    if c < 3:
        raise ValueError("crossing number must be >= 3")


class ChiralBranch(enum.Enum):
    """Case selector for the mirror-distinct forms; even residues merge."""

    EVEN = "even"
    ONE_MOD_4 = "1 mod 4"
    THREE_MOD_4 = "3 mod 4"


@dataclass(frozen=True)
class CrossingClass:
    """Residue data steering the piecewise closed forms.

    ``chiral`` drives the mirror-distinct branches (one shared branch
    for even c), ``mod4`` the four mirror-collapsed branches.  Both are
    pure functions of c.
    """

    c: int
    chiral: ChiralBranch
    mod4: int

    @classmethod
    def of(cls, c: int) -> "CrossingClass":
        _require_c(c)
        if c % 2 == 0:
            chiral = ChiralBranch.EVEN
        elif c % 4 == 1:
            chiral = ChiralBranch.ONE_MOD_4
        else:
            chiral = ChiralBranch.THREE_MOD_4
        return cls(c, chiral, c % 4)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"expected an integer, got {x}")
    return x.numerator


def tk_closed(c: int) -> int:
    """Number of 2-bridge knots with crossing number c, mirrors distinct."""
    branch = CrossingClass.of(c).chiral
    if branch is ChiralBranch.EVEN:
        return _exact_div(2 ** (c - 2) - 1, 3)
    if branch is ChiralBranch.ONE_MOD_4:
        return _exact_div(2 ** (c - 2) + 2 ** ((c - 1) // 2), 3)
    return _exact_div(2 ** (c - 2) + 2 ** ((c - 1) // 2) + 2, 3)


def tg_closed(c: int) -> int:
    """Total genus of all 2-bridge knots with crossing number c, mirrors distinct."""
    branch = CrossingClass.of(c).chiral
    lead = (3 * c + 1) * 2 ** (c - 2)
    if branch is ChiralBranch.EVEN:
        return _exact_div(lead - 16, 36)
    mid = (3 * c + 5) * 2 ** ((c - 1) // 2)
    if branch is ChiralBranch.ONE_MOD_4:
        return _exact_div(lead + mid + 8, 36)
    return _exact_div(lead + mid + 24, 36)


def tk_mirror_closed(c: int) -> int:
    """Number of 2-bridge knots with crossing number c, mirrors collapsed."""
    r = CrossingClass.of(c).mod4
    if r == 0:
        return _exact_div(2 ** (c - 3) + 2 ** ((c - 4) // 2), 3)
    if r == 1:
        return _exact_div(2 ** (c - 3) + 2 ** ((c - 3) // 2), 3)
    if r == 2:
        return _exact_div(2 ** (c - 3) + 2 ** ((c - 4) // 2) - 1, 3)
    return _exact_div(2 ** (c - 3) + 2 ** ((c - 3) // 2) + 1, 3)


def tg_mirror_closed(c: int) -> int:
    """Total genus with crossing number c, mirrors collapsed.

    For odd c this is exactly half the mirror-distinct total, since no
    knot with odd crossing number equals its own mirror image.
    """
    r = CrossingClass.of(c).mod4
    lead = (3 * c + 1) * 2 ** (c - 2)
    if r == 0:
        return _exact_div(lead + (3 * c + 2) * 2 ** ((c - 2) // 2) - 8, 72)
    if r == 1:
        return _exact_div(lead + (3 * c + 5) * 2 ** ((c - 1) // 2) + 8, 72)
    if r == 2:
        return _exact_div(lead + (3 * c + 2) * 2 ** ((c - 2) // 2) - 24, 72)
    return _exact_div(lead + (3 * c + 5) * 2 ** ((c - 1) // 2) + 24, 72)


def correction(c: int) -> Fraction:
    """The exponentially small term in the mirror-distinct average genus."""
    branch = CrossingClass.of(c).chiral
    if branch is ChiralBranch.EVEN:
        return Fraction(c - 5, 2**c - 4)
    if branch is ChiralBranch.ONE_MOD_4:
        return Fraction(1, 3 * 2 ** ((c - 3) // 2))
    return Fraction(
        2 ** ((c + 1) // 2) - 3 * c + 11,
        12 * (2 ** (c - 3) + 2 ** ((c - 3) // 2) + 1),
    )


def correction_mirror(c: int) -> Fraction:
    """The exponentially small term in the mirror-collapsed average genus."""
    r = CrossingClass.of(c).mod4
    if r == 0:
        return Fraction(2 ** ((c - 4) // 2) - 4, 3 * (2 ** (c - 1) + 2 ** (c // 2)))
    if r == 2:
        return Fraction(
            2 ** ((c - 4) // 2) + 3 * c - 11,
            12 * (2 ** (c - 3) + 2 ** ((c - 4) // 2) - 1),
        )
    return correction(c)


def avg_genus(c: int) -> Fraction:
    """Average genus at crossing number c, mirrors distinct.

    Evaluated both as total genus over knot count and through the
    piecewise form c/4 + 1/12 + correction(c); the two must agree.
    """
    via_totals = Fraction(tg_closed(c), tk_closed(c))
    piecewise = Fraction(c, 4) + Fraction(1, 12) + correction(c)
    if via_totals != piecewise:
        raise BranchMismatch(f"c={c}: {via_totals} != {piecewise}")
    return via_totals


def avg_genus_mirror(c: int) -> Fraction:
    """Average genus at crossing number c, mirrors collapsed.

    Equals the mirror-distinct average for odd c.
    """
    via_totals = Fraction(tg_mirror_closed(c), tk_mirror_closed(c))
    piecewise = Fraction(c, 4) + Fraction(1, 12) + correction_mirror(c)
    if via_totals != piecewise:
        raise BranchMismatch(f"c={c}: {via_totals} != {piecewise}")
    return via_totals


def residual(c: int) -> Fraction:
    """avg_genus(c) - c/4 - 1/12, exactly."""
    return avg_genus(c) - Fraction(c, 4) - Fraction(1, 12)


def residual_mirror(c: int) -> Fraction:
    """avg_genus_mirror(c) - c/4 - 1/12, exactly."""
    return avg_genus_mirror(c) - Fraction(c, 4) - Fraction(1, 12)


def _check_stratum_args(k: int, l: int, parity: str):
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    kmin = 2 if parity == "even" else 1
    if k < kmin:
        raise ValueError(f"k={k} gives a crossing number below 3")
    if not 0 <= l <= k - 1:
        raise ValueError(f"l={l} outside [0, {k - 1}]")


def stratum_closed_A(k: int, l: int, parity: str) -> int:
    """Knot count of the sign-change stratum, mirrors distinct.

    ``parity`` selects crossing number c = 2k (``"even"``, stratum of
    2l sign changes) or c = 2k+1 (``"odd"``, stratum of 2l+1 changes).
    For odd c the count includes the classes built from symmetric
    magnitude vectors, which exist exactly when k+l is odd.
    """
    _check_stratum_args(k, l, parity)
    if parity == "even":
        if l == k - 1:
            return 0
        return 2 ** (k - l - 2) * binom(k + l - 1, k - l - 1)
    symmetric = 0
    if (k + l) % 2 == 1:
        symmetric = binom((k + l - 1) // 2, l) * 2 ** ((k - l - 1) // 2)
    if l == k - 1:
        return 1 + symmetric
    return binom(k + l, 2 * l + 1) * 2 ** (k - l - 2) + symmetric


def stratum_closed_B(k: int, l: int, parity: str) -> Fraction:
    """Genus sum of the sign-change stratum, mirrors distinct.

    Always an integer; the return type carries the halved intermediate
    terms of the boundary cases l = k-2 and l = k-1 exactly, and a
    fractional final value raises NonIntegerResult.
    """
    _check_stratum_args(k, l, parity)
    two = Fraction(2)
    if parity == "even":
        twice = (k + 3 * l + 1) * two ** (k - l - 3) * binom(k + l - 1, k - l - 1)
        if l == k - 2:
            twice += Fraction(2 * k - 3, 2)
        elif l == k - 1:
            twice -= Fraction(2 * k - 1, 2)
        value = twice / 2
    else:
        value = (k + 3 * l + 3) * two ** (k - l - 4) * binom(k + l, 2 * l + 1)
        if l == k - 2:
            value -= Fraction(k - 1, 2)
        elif l == k - 1:
            value += Fraction(k, 2)
        if (k + l) % 2 == 1:
            value += (
                (k + 3 * l + 3)
                * two ** ((k - l - 5) // 2)
                * binom((k + l - 1) // 2, l)
            )
    return Fraction(_as_int(value))


def tg_mirror_by_strata(c: int) -> int:
    """Mirror-collapsed total genus for even c by direct double summation.

    Sums half a genus per mirror-distinct class over all strata, plus
    half a genus per class fixed by mirroring (built from symmetric
    sign assignments over symmetric magnitude vectors).  Provided as an
    independent evaluation route for the even-c closed form.
    """
    _require_c(c)
    if c % 2:
        raise ValueError("direct double summation is defined for even c")
    k = c // 2
    total = Fraction(0)
    for l in range(k):
        for m in range(l + 1, (k + l) // 2 + 1):
            total += (
                Fraction(m, 2) * binom(k + l - 1, 2 * m - 1) * binom(2 * m - 1, 2 * l)
            )
        if (l + k) % 2 == 0:
            for m in range(l + 1, (k + l) // 2 + 1):
                total += (
                    Fraction(m, 2)
                    * binom((k + l - 2) // 2, m - 1)
                    * binom(m - 1, l)
                )
    return _as_int(total)
