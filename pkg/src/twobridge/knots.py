"""Knot identity for even sequences.

Two sequences present the same knot exactly when one is the
reverse-negation of the other.  Negating (equivalently, reversing) a
sequence presents the mirror image.  Canonical forms are therefore
taken over a two-element orbit when mirrors are kept distinct and over
a four-element orbit when they are collapsed; the representative is the
lexicographic minimum under plain entrywise integer comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .contfrac import EvenSequence, sign_changes


class ParityMismatch(ValueError):
    """The sign-change count of a stratum key is not realizable."""


class Mode(enum.Enum):
    """Whether mirror-image knots count as distinct or as one."""

    MIRROR_DISTINCT = "D"
    MIRROR_COLLAPSED = "C"


def negate(seq) -> EvenSequence:
    """Entrywise negation (presents the mirror image)."""
    return EvenSequence(-e for e in tuple(seq))


def reverse(seq) -> EvenSequence:
    """Reversed entry order (also presents the mirror image)."""
    return EvenSequence(tuple(seq)[::-1])


def reverse_negate(seq) -> EvenSequence:
    """Reversed and negated (presents the same knot)."""
    return EvenSequence(tuple(-e for e in tuple(seq)[::-1]))


def _orbit_min(entries: tuple, mode: Mode) -> tuple:
    # Hot path: plain tuples in, plain tuple out.
    rn = tuple(-e for e in entries[::-1])
    if mode is Mode.MIRROR_DISTINCT:
        return entries if entries <= rn else rn
    return min(entries, rn, tuple(-e for e in entries), entries[::-1])


@dataclass(frozen=True)
class KnotClass:
    """Canonical representative of an equivalence class of even sequences."""

    canonical: EvenSequence
    mode: Mode

    def to_text(self) -> str:
        return f"{self.mode.value}:{self.canonical.to_text()}"

    @classmethod
    def from_text(cls, text: str) -> "KnotClass":
        letter, _, body = text.partition(":")
        return cls(EvenSequence.from_text(body), Mode(letter))


def canonicalize(seq, mode: Mode) -> KnotClass:
    """Orbit minimum of ``seq`` under the identifications of ``mode``.

    Constant on orbits and idempotent: canonicalizing a canonical
    representative returns it unchanged.
    """
    s = EvenSequence(seq)
    return KnotClass(EvenSequence(_orbit_min(tuple(s), mode)), mode)


def is_amphichiral(seq) -> bool:
    """True when the knot equals its own mirror image.

    Decided through canonical forms: the sequence and its negation must
    share a mirror-distinct class.  Only possible at even crossing
    number.
    """
    t = tuple(EvenSequence(seq))
    d = Mode.MIRROR_DISTINCT
    return _orbit_min(t, d) == _orbit_min(tuple(-e for e in t), d)


@dataclass(frozen=True)
class StratumKey:
    """Magnitude vector (entries halved) plus a sign-change count."""

    b: tuple
    ell: int

    def __post_init__(self):
        b = tuple(self.b)
        object.__setattr__(self, "b", b)
        if len(b) < 2 or len(b) % 2:
            raise ValueError(f"magnitude vector length {len(b)} not even >= 2")
        if any(not isinstance(x, int) or x < 1 for x in b):
            raise ValueError("magnitudes must be integers >= 1")
        if not 0 <= self.ell <= len(b) - 1:
            raise ParityMismatch(
                f"sign-change count {self.ell} not realizable for length {len(b)}"
            )


def stratum_of(seq) -> StratumKey:
    """Key of the stratum containing ``seq``."""
    s = EvenSequence(seq)
    return StratumKey(tuple(abs(e) // 2 for e in s), sign_changes(s))


def stratum_members(key: StratumKey, mode: Mode) -> set:
    """All knot classes realizing the key's magnitudes and sign changes.

    A class belongs to the stratum of ``b`` exactly when it belongs to
    the stratum of reversed ``b``, so sequences are generated from both
    orderings and deduplicated through canonical forms.
    """
    from .enumeration import sign_patterns

    if not 0 <= key.ell <= len(key.b) - 1:
        raise ParityMismatch(
            f"sign-change count {key.ell} not realizable for length {len(key.b)}"
        )
    doubled = [tuple(2 * x for x in key.b)]
    if key.b[::-1] != key.b:
        doubled.append(tuple(2 * x for x in key.b[::-1]))
    out = set()
    for mags in doubled:
        for signs in sign_patterns(len(mags), key.ell):
            entries = tuple(m * s for m, s in zip(mags, signs))
            out.add(KnotClass(EvenSequence(_orbit_min(entries, mode)), mode))
    return out
