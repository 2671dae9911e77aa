"""Command-line front end: tables, enumeration streams and verification runs.

Usage:
    twobridge table1 --max-c 15            # closed forms vs enumeration
    twobridge formulas --max-c 30          # closed forms only
    twobridge enumerate --crossings 9      # canonical sequences, one per line
    twobridge knot --cf "2,-2"             # invariants of one presentation
    twobridge verify --max-c 14 --max-n 32 # identity and oracle sweeps

Global flags: ``--format table|csv|json`` and ``--threads T`` (T may be
"auto"; the TWOBRIDGE_THREADS environment variable overrides the
default).  Rationals print as "p/q" in tables and CSV; JSON carries
them as {"num": "...", "den": "..."} decimal strings, and unbounded
integer columns as decimal strings, so consumers never face 64-bit
overflow.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from fractions import Fraction

import click

from . import formulas, identities
from .contfrac import (
    SequenceError,
    EvenSequence,
    cf_value,
    crossing_number,
    genus,
    sign_changes,
)
from .enumeration import enumerate_classes, tally
from .knots import Mode, canonicalize, is_amphichiral

MODES = {"D": Mode.MIRROR_DISTINCT, "C": Mode.MIRROR_COLLAPSED}


def _frac_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _cell_text(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return _frac_text(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _cell_json(v):
    # Counts can exceed 2^53 for large c, so integers travel as strings.
    if isinstance(v, Fraction):
        return {"num": str(v.numerator), "den": str(v.denominator)}
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    return v


def _emit_rows(rows, columns, fmt):
    if fmt == "json":
        click.echo(
            json.dumps(
                [{k: _cell_json(row[k]) for k in columns} for row in rows],
                indent=2,
            )
        )
        return
    text = [[_cell_text(row[k]) for k in columns] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(columns)
        writer.writerows(text)
        click.echo(buf.getvalue(), nl=False)
        return
    widths = [
        max(len(col), *(len(r[i]) for r in text)) if text else len(col)
        for i, col in enumerate(columns)
    ]
    click.echo("  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip())
    for r in text:
        click.echo("  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip())


def _parse_threads(value: str) -> int:
    if value == "auto":
        return os.cpu_count() or 1
    try:
        n = int(value)
    except ValueError:
        raise click.BadParameter("threads must be a positive integer or 'auto'")
    if n < 1:
        raise click.BadParameter("threads must be >= 1")
    return n


@click.group()
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "csv", "json"]),
    default="table",
    show_default=True,
    help="Output format.",
)
@click.option(
    "--threads",
    default="1",
    show_default=True,
    envvar="TWOBRIDGE_THREADS",
    help="Worker processes for enumeration ('auto' for CPU count).",
)
@click.pass_context
def main(ctx, fmt, threads):
    """Exact 2-bridge knot counts, genera and verification sweeps."""
    ctx.obj = {"fmt": fmt, "threads": _parse_threads(threads)}


def _formula_row(c: int) -> dict:
    return {
        "c": c,
        "tk": formulas.tk_closed(c),
        "tg": formulas.tg_closed(c),
        "avg_genus": formulas.avg_genus(c),
        "tk_mirror": formulas.tk_mirror_closed(c),
        "tg_mirror": formulas.tg_mirror_closed(c),
        "avg_genus_mirror": formulas.avg_genus_mirror(c),
    }


@main.command("formulas")
@click.option("--max-c", type=int, required=True, help="Largest crossing number.")
@click.pass_context
def cmd_formulas(ctx, max_c):
    """Closed-form counts, total genera and average genera per row."""
    if max_c < 3:
        raise click.BadParameter("--max-c must be >= 3")
    rows = [_formula_row(c) for c in range(3, max_c + 1)]
    columns = [
        "c", "tk", "tg", "avg_genus", "tk_mirror", "tg_mirror", "avg_genus_mirror",
    ]
    _emit_rows(rows, columns, ctx.obj["fmt"])


@main.command("table1")
@click.option("--max-c", type=int, required=True, help="Largest crossing number.")
@click.option(
    "--cutoff",
    type=int,
    default=18,
    show_default=True,
    help="Largest crossing number that is also cross-checked by enumeration.",
)
@click.pass_context
def cmd_table1(ctx, max_c, cutoff):
    """Closed forms with an enumeration cross-check column.

    Rows up to the cutoff carry the enumerated counts and a match flag;
    the exit status is nonzero if any row mismatches.
    """
    if max_c < 3:
        raise click.BadParameter("--max-c must be >= 3")
    threads = ctx.obj["threads"]
    rows = []
    mismatch = False
    for c in range(3, max_c + 1):
        row = _formula_row(c)
        if c <= cutoff:
            td = tally(c, Mode.MIRROR_DISTINCT, threads=threads)
            tc = tally(c, Mode.MIRROR_COLLAPSED, threads=threads)
            row.update(
                enum_tk=td.knot_count,
                enum_tg=td.total_genus,
                enum_tk_mirror=tc.knot_count,
                enum_tg_mirror=tc.total_genus,
            )
            ok = (
                td.knot_count == row["tk"]
                and td.total_genus == row["tg"]
                and tc.knot_count == row["tk_mirror"]
                and tc.total_genus == row["tg_mirror"]
            )
            row["match"] = "ok" if ok else "MISMATCH"
            mismatch = mismatch or not ok
        else:
            row.update(
                enum_tk=None,
                enum_tg=None,
                enum_tk_mirror=None,
                enum_tg_mirror=None,
                match=None,
            )
        rows.append(row)
    columns = [
        "c", "tk", "tg", "avg_genus", "tk_mirror", "tg_mirror", "avg_genus_mirror",
        "enum_tk", "enum_tg", "enum_tk_mirror", "enum_tg_mirror", "match",
    ]
    _emit_rows(rows, columns, ctx.obj["fmt"])
    if mismatch:
        ctx.exit(1)


@main.command("enumerate")
@click.option("--crossings", type=int, required=True, help="Crossing number.")
@click.option(
    "--mode",
    type=click.Choice(["D", "C"]),
    default="D",
    show_default=True,
    help="D keeps mirror images distinct, C collapses them.",
)
@click.pass_context
def cmd_enumerate(ctx, crossings, mode):
    """Stream canonical sequences, or export the tally as CSV/JSON."""
    if crossings < 3:
        raise click.BadParameter("--crossings must be >= 3")
    m = MODES[mode]
    fmt = ctx.obj["fmt"]
    if fmt == "table":
        click.echo(f"c={crossings} mode={mode}")
        for kc in enumerate_classes(crossings, m):
            click.echo(kc.canonical.to_text())
        return
    t = tally(crossings, m, threads=ctx.obj["threads"])
    gmax = (crossings - 1) // 2
    row = {"c": t.c, "mode": mode, "knot_count": t.knot_count,
           "total_genus": t.total_genus}
    for g in range(1, gmax + 1):
        row[f"g{g}"] = t.by_genus.get(g, 0)
    columns = list(row)
    if fmt == "csv":
        _emit_rows([row], columns, "csv")
    else:
        # Tally counts stay far below 2^53, so they travel as numbers.
        click.echo(json.dumps(row, indent=2))


@main.command("knot")
@click.option("--cf", "text", required=True, help="Sequence text, e.g. \"2,-2\".")
@click.pass_context
def cmd_knot(ctx, text):
    """Invariants and canonical forms of one presentation."""
    try:
        seq = EvenSequence.from_text(text)
    except SequenceError as exc:
        raise click.ClickException(str(exc))
    row = {
        "sequence": seq.to_text(),
        "value": cf_value(seq),
        "genus": genus(seq),
        "sign_changes": sign_changes(seq),
        "crossing_number": crossing_number(seq),
        "canonical_mirror_distinct": canonicalize(seq, Mode.MIRROR_DISTINCT).to_text(),
        "canonical_mirror_collapsed": canonicalize(seq, Mode.MIRROR_COLLAPSED).to_text(),
        "amphichiral": is_amphichiral(seq),
    }
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        payload = dict(row)
        payload["value"] = _cell_json(row["value"])
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "csv":
        _emit_rows([row], list(row), "csv")
    else:
        width = max(len(k) for k in row)
        for k, v in row.items():
            click.echo(f"{k.ljust(width)}  {_cell_text(v)}")


def _verify_identities(max_n) -> bool:
    reports = [
        identities.wellknown_check(max_n),
        identities.x2_specialization_check(max_n),
        identities.weighted_sum_check(max_n),
    ]
    for x in (0, 1, 2, -1, Fraction(3, 2)):
        reports.append(identities.alpha_recurrence_check(max_n, x))
    ok = True
    for rep in reports:
        click.echo(f"  {rep}")
        ok = ok and rep.passed
    return ok


def _verify_totals(max_c, threads) -> tuple[bool, dict]:
    ok = True
    tallies = {}
    for c in range(3, max_c + 1):
        td = tally(c, Mode.MIRROR_DISTINCT, threads=threads)
        tc = tally(c, Mode.MIRROR_COLLAPSED, threads=threads)
        tallies[c] = td
        good = (
            td.knot_count == formulas.tk_closed(c)
            and td.total_genus == formulas.tg_closed(c)
            and tc.knot_count == formulas.tk_mirror_closed(c)
            and tc.total_genus == formulas.tg_mirror_closed(c)
        )
        click.echo(
            f"  c={c}: distinct {td.knot_count}/{td.total_genus}"
            f" collapsed {tc.knot_count}/{tc.total_genus}"
            f" {'ok' if good else 'MISMATCH'}"
        )
        ok = ok and good
    return ok, tallies


def _verify_strata(max_c, tallies) -> bool:
    ok = True
    for c in range(3, max_c + 1):
        td = tallies[c]
        k, parity = c // 2, ("even" if c % 2 == 0 else "odd")
        good = True
        for l in range(k):
            ell = 2 * l + (c % 2)
            count, gsum = td.by_ell.get(ell, (0, 0))
            good = (
                good
                and formulas.stratum_closed_A(k, l, parity) == count
                and formulas.stratum_closed_B(k, l, parity) == gsum
            )
        click.echo(f"  c={c}: strata {'ok' if good else 'MISMATCH'}")
        ok = ok and good
    return ok


@main.command("verify")
@click.option("--max-c", type=int, default=14, show_default=True,
              help="Largest crossing number for the enumeration sweeps.")
@click.option("--max-n", type=int, default=32, show_default=True,
              help="Largest n for the identity checks.")
@click.option("--identities", "identities_only", is_flag=True,
              help="Run only the identity checks.")
@click.pass_context
def cmd_verify(ctx, max_c, max_n, identities_only):
    """Run every oracle comparison and print a summary.

    Exit status is a bitmask of failing suites: 1 identities, 2 closed
    forms vs enumeration, 4 strata.  The full desk-scale sweep is
    ``verify --max-c 22 --max-n 64`` and takes a few minutes.
    """
    if max_c < 3:
        raise click.BadParameter("--max-c must be >= 3")
    if max_n < 1:
        raise click.BadParameter("--max-n must be >= 1")
    status = 0
    click.echo(f"identities (n <= {max_n}):")
    if not _verify_identities(max_n):
        status |= 1
    if not identities_only:
        click.echo(f"closed forms vs enumeration (c <= {max_c}, both modes):")
        totals_ok, tallies = _verify_totals(max_c, ctx.obj["threads"])
        if not totals_ok:
            status |= 2
        click.echo(f"stratum closed forms vs enumeration (c <= {max_c}):")
        if not _verify_strata(max_c, tallies):
            status |= 4
    click.echo("summary: " + ("all checks passed" if status == 0 else f"FAILURES (status {status})"))
    ctx.exit(status)


if __name__ == "__main__":
    main()
