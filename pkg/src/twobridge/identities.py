"""Point checks of the binomial-coefficient identities behind the closed forms.

Every check compares a direct summation against a closed form or a
recurrence, exactly, over a range of integer (and rational) points, and
reports the first counterexample if any.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the vanishing convention outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check over a range of evaluation points."""

    identity_id: str
    n_range: tuple
    x_values: tuple = ()
    passed: bool = True
    counterexample: str | None = None

    @property
    def status(self) -> str:
        if self.passed:
            return "pass"
        return f"fail: {self.counterexample}"

    def __str__(self) -> str:
        xs = ""
        if self.x_values:
            xs = " at x in {" + ", ".join(str(x) for x in self.x_values) + "}"
        return (
            f"{self.identity_id}: n in [{self.n_range[0]}, {self.n_range[1]}]"
            f"{xs}: {self.status}"
        )


def alpha_sum(n: int, x) -> Fraction:
    """Sum of x^q * C(2n-1-q, q) over q = 0 .. n-1."""
    x = Fraction(x)
    return sum((x**q * binom(2 * n - 1 - q, q) for q in range(n)), Fraction(0))


def beta_sum(n: int, x) -> Fraction:
    """Sum of x^q * C(2n-q, q) over q = 0 .. n."""
    x = Fraction(x)
    return sum((x**q * binom(2 * n - q, q) for q in range(n + 1)), Fraction(0))


def alpha_recurrence_check(n_max: int, x) -> IdentityReport:
    """Verify a(n+1) = (2x+1) a(n) - x^2 a(n-1) and b(n) = a(n+1) - x a(n).

    Both recurrences are checked against the direct sums for all
    1 <= n < n_max at the given rational x.
    """
    x = Fraction(x)
    a = [alpha_sum(n, x) for n in range(n_max + 1)]
    b = [beta_sum(n, x) for n in range(n_max)]
    for n in range(1, n_max):
        lhs = a[n + 1]
        rhs = (2 * x + 1) * a[n] - x * x * a[n - 1]
        if lhs != rhs:
            return IdentityReport(
                "alpha_recurrence", (1, n_max - 1), (x,), False,
                f"n={n}: {lhs} != {rhs}",
            )
        if b[n] != a[n + 1] - x * a[n]:
            return IdentityReport(
                "alpha_recurrence", (1, n_max - 1), (x,), False,
                f"n={n}: beta {b[n]} != {a[n + 1] - x * a[n]}",
            )
    return IdentityReport("alpha_recurrence", (1, n_max - 1), (x,))


def x2_specialization_check(n_max: int) -> IdentityReport:
    """At x = 2: alpha sums to (4^n - 1)/3 and beta to (2*4^n + 1)/3."""
    for n in range(n_max + 1):
        if alpha_sum(n, 2) != Fraction(4**n - 1, 3):
            return IdentityReport(
                "x2_specialization", (0, n_max), (Fraction(2),), False,
                f"alpha n={n}",
            )
        if beta_sum(n, 2) != Fraction(2 * 4**n + 1, 3):
            return IdentityReport(
                "x2_specialization", (0, n_max), (Fraction(2),), False,
                f"beta n={n}",
            )
    return IdentityReport("x2_specialization", (0, n_max), (Fraction(2),))


def weighted_sum_check(n_max: int) -> IdentityReport:
    """Closed forms of the q-weighted sums at base 2, against direct summation.

    For all 1 <= n <= n_max:
      sum q 2^q C(2n-1-q, q), q=0..n-1  ==  (2/27) ((4^n - 1)(3n - 2) - 3n)
      sum q 2^q C(2n-q, q),   q=0..n    ==  (2/27) ((4^n - 1)(6n - 1) + 12n)
    """
    for n in range(1, n_max + 1):
        first = sum(q * 2**q * binom(2 * n - 1 - q, q) for q in range(n))
        rhs1 = Fraction(2, 27) * ((4**n - 1) * (3 * n - 2) - 3 * n)
        if first != rhs1:
            return IdentityReport(
                "weighted_sums", (1, n_max), (), False, f"first, n={n}"
            )
        second = sum(q * 2**q * binom(2 * n - q, q) for q in range(n + 1))
        rhs2 = Fraction(2, 27) * ((4**n - 1) * (6 * n - 1) + 12 * n)
        if second != rhs2:
            return IdentityReport(
                "weighted_sums", (1, n_max), (), False, f"second, n={n}"
            )
    return IdentityReport("weighted_sums", (1, n_max))


def wellknown_check(n_max: int) -> IdentityReport:
    """The four standard binomial identities, exactly, for n <= n_max.

    Subset-of-subset product, row sum 2^n, even-index row sum 2^(n-1)
    (for n >= 1), and the weighted row sum n 2^(n-1).
    """
    for a in range(n_max + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                if binom(a, b) * binom(b, c) != binom(a, c) * binom(a - c, b - c):
                    return IdentityReport(
                        "wellknown", (0, n_max), (), False,
                        f"product, a={a} b={b} c={c}",
                    )
    for n in range(1, n_max + 1):
        if sum(binom(n, q) for q in range(n + 1)) != 2**n:
            return IdentityReport(
                "wellknown", (0, n_max), (), False, f"row sum, n={n}"
            )
        if sum(binom(n, 2 * q) for q in range(n // 2 + 1)) != 2 ** (n - 1):
            return IdentityReport(
                "wellknown", (0, n_max), (), False, f"even row sum, n={n}"
            )
        if sum(q * binom(n, q) for q in range(n + 1)) != n * 2 ** (n - 1):
            return IdentityReport(
                "wellknown", (0, n_max), (), False, f"weighted row sum, n={n}"
            )
    return IdentityReport("wellknown", (0, n_max))
