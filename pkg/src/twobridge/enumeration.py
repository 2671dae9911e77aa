"""Brute-force generation of all 2-bridge knots with a given crossing number.

Sequences with crossing number c are generated stratum by stratum: the
sign-change count ell runs over the residue class of c mod 2, the genus
m over the feasible window, the magnitude vector over all positive
compositions of (c + ell)/2 into 2m parts, and the signs over all
patterns with exactly ell changes.  Deduplicating through canonical
forms turns the sequence stream into knot counts, which serve as the
oracle for every closed form in :mod:`twobridge.formulas`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .contfrac import EvenSequence
from .knots import KnotClass, Mode, _orbit_min


def compositions(total: int, parts: int):
    """Yield every list of ``parts`` positive integers summing to ``total``.

    Lexicographic order; yields nothing when total < parts.
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if total < parts:
        return
    if parts == 1:
        yield (total,)
        return
    for cuts in combinations(range(1, total), parts - 1):
        yield tuple(b - a for a, b in zip((0,) + cuts, cuts + (total,)))


def sign_patterns(length: int, ell: int):
    """Yield every +/-1 tuple of ``length`` with exactly ``ell`` adjacent changes.

    2 * C(length-1, ell) patterns: a leading sign (positive first) and a
    choice of change positions, in lexicographic position order.
    """
    if not 0 <= ell <= length - 1:
        return
    for first in (1, -1):
        for changes in combinations(range(length - 1), ell):
            pat = [first] * length
            cur = first
            j = 0
            for i in range(1, length):
                if j < ell and changes[j] == i - 1:
                    cur = -cur
                    j += 1
                pat[i] = cur
            yield tuple(pat)


def strata(c: int):
    """Feasible (ell, m) pairs for crossing number c, in generation order."""
    if c < 3:
        raise ValueError("crossing number must be >= 3")
    for ell in range(c % 2, c - 1, 2):
        for m in range(ell // 2 + 1, (c + ell) // 4 + 1):
            yield ell, m


def _raw_sequences(c, ell, m):
    total = (c + ell) // 2
    patterns = list(sign_patterns(2 * m, ell))
    for b in compositions(total, 2 * m):
        mags = tuple(2 * x for x in b)
        for signs in patterns:
            yield tuple(x * s for x, s in zip(mags, signs))


def enumerate_sequences(c: int):
    """Yield every valid even sequence with crossing number ``c`` exactly once.

    Sequences, not knots: each knot usually appears twice (once per
    presentation).  Order is deterministic: ell ascending, genus
    ascending, compositions and sign patterns lexicographic.
    """
    for ell, m in strata(c):
        for entries in _raw_sequences(c, ell, m):
            yield EvenSequence(entries)


def enumerate_classes(c: int, mode: Mode):
    """Yield each knot class with crossing number ``c`` once.

    First-encounter order within the deterministic sequence stream.
    """
    for ell, m in strata(c):
        seen = set()
        for entries in _raw_sequences(c, ell, m):
            key = _orbit_min(entries, mode)
            if key not in seen:
                seen.add(key)
                yield KnotClass(EvenSequence(key), mode)


@dataclass(frozen=True)
class Tally:
    """Aggregate knot counts for one crossing number and counting mode.

    ``by_genus`` maps genus to class count; ``by_ell`` maps sign-change
    count to a (class count, genus sum) pair.
    """

    c: int
    mode: Mode
    knot_count: int
    total_genus: int
    by_genus: dict
    by_ell: dict


def _unit_count(c: int, ell: int, m: int, mode: Mode) -> int:
    # Canonical forms preserve ell, genus and the magnitude multiset, so
    # classes from different (ell, m) units never collide; one set per
    # unit is a complete dedupe.
    seen = set()
    add = seen.add
    for entries in _raw_sequences(c, ell, m):
        add(_orbit_min(entries, mode))
    return len(seen)


def _unit_worker(args):
    c, ell, m, mode = args
    return ell, m, _unit_count(c, ell, m, mode)


def tally(c: int, mode: Mode, threads: int = 1) -> Tally:
    """Count knot classes with crossing number ``c``, stratified.

    ``threads`` > 1 distributes the independent (ell, m) units over a
    process pool; results are merged in a fixed order, so the outcome is
    identical to the serial run.
    """
    units = list(strata(c))
    if threads > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = {
                (ell, m): n
                for ell, m, n in pool.map(
                    _unit_worker, [(c, ell, m, mode) for ell, m in units]
                )
            }
    else:
        results = {(ell, m): _unit_count(c, ell, m, mode) for ell, m in units}

    knot_count = 0
    total_genus = 0
    by_genus = {}
    by_ell = {}
    for ell, m in units:
        n = results[(ell, m)]
        if n == 0:
            continue
        knot_count += n
        total_genus += m * n
        by_genus[m] = by_genus.get(m, 0) + n
        cnt, gsum = by_ell.get(ell, (0, 0))
        by_ell[ell] = (cnt + n, gsum + m * n)
    return Tally(c, mode, knot_count, total_genus, by_genus, by_ell)
