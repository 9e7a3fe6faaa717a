"""Command-line surface: conversions, reductions, identity checks, evaluation.

Every command exits 0 on success, 1 on a mathematical mismatch and 2 on a
usage error.  With ``--format json`` the output is a single canonical JSON
document (sorted keys, no whitespace) carrying the run configuration and the
package version, and is byte-stable across runs and ``--jobs`` settings;
timings are reported in human mode only.
"""

from __future__ import annotations

import concurrent.futures
import json
import sys
import time
from fractions import Fraction

import click
import mpmath

from . import __version__, fixtures
from . import identities as I
from . import numeval as NE
from . import relations as REL
from . import words as W
from .words import ParseError

EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _emit_json(command: str, config: dict, payload: dict):
    doc = {"command": command, "config": config, "version": __version__, **payload}
    click.echo(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


@click.group()
def main():
    """Double-shuffle algebra for alternating Euler sums."""


def _detect(text: str):
    """Classify an input string as a word, composite word, or signed index."""
    if text and all(ch in "abc" for ch in text):
        return "word", W.parse_word(text)
    if text and text[0] in ("b", "g") and any(ch.isdigit() for ch in text):
        return "composite", W.parse_composite(text)
    return "index", W.parse_index(text)


@main.command()
@click.argument("text")
@click.option("--format", "fmt", type=click.Choice(["human", "json"]), default="human")
def convert(text, fmt):
    """Print all representations of a word, composite word, or signed index."""
    try:
        kind, value = _detect(text)
        if kind == "word":
            if value.endswith("a") or not value:
                raise ParseError(text, max(len(text) - 1, 0),
                                 "word ends in 'a': admits no index or composite form")
            cw = W.to_composite(value)
        elif kind == "composite":
            cw = value
        else:
            cw = W.index_to_word(value)
        index = W.word_to_index(cw)
        word = W.flatten(cw)
    except (ParseError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    payload = {
        "input": text,
        "word": word,
        "composite": W.format_composite(cw),
        "index": W.format_index(index),
        "weight": W.weight(word),
        "depth": W.depth(cw),
        "admissible": W.is_admissible(word),
        "convergent": W.is_convergent(index),
    }
    if fmt == "json":
        _emit_json("convert", {"input": text}, payload)
    else:
        for key in ("word", "composite", "index", "weight", "depth", "admissible", "convergent"):
            click.echo(f"{key:11} {payload[key]}")


@main.command()
@click.option("--weight", "-w", type=int, required=True)
@click.option("--basis", type=click.Choice(["paper", "zlobin", "auto"]), default="paper")
@click.option("--max-m", type=int, default=None, help="largest leading-b exponent in the regularized family")
@click.option("--format", "fmt", type=click.Choice(["human", "json"]), default="human")
@click.option("--check-fixtures", is_flag=True, help="compare against the shipped golden tables")
def reduce(weight, basis, max_m, fmt, check_fixtures):
    """Generate relations at a weight and reduce every atom over a basis."""
    if weight < 2:
        click.echo("error: --weight must be >= 2", err=True)
        sys.exit(EXIT_USAGE)
    t0 = time.monotonic()
    try:
        table = REL.reduce_weight(weight, basis, max_m)
    except REL.SolveError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_MISMATCH)
    corank_fds, corank_all = REL.rank_profile(weight, max_m)
    elapsed = time.monotonic() - t0

    mismatches, extras = [], []
    if check_fixtures:
        bad = fixtures.verify_checksums()
        if bad:
            click.echo(f"error: fixture checksum mismatch: {', '.join(bad)}", err=True)
            sys.exit(EXIT_MISMATCH)
        try:
            fix = fixtures.table_fixture(weight, basis)
        except KeyError:
            click.echo(f"error: no fixture for weight {weight} basis {basis}", err=True)
            sys.exit(EXIT_USAGE)
        fix_basis = fix["basis"]
        got_basis = [W.format_index(W.word_to_index(W.to_composite(b))) for b in table.basis]
        if fix_basis != got_basis:
            mismatches.append(("basis", got_basis, fix_basis))
        for key, vec in fix["rows"].items():
            got = table.row_for_index(W.parse_index(key))
            want = tuple(Fraction(v) for v in vec)
            if got != want:
                mismatches.append((key, [str(c) for c in got], [str(c) for c in want]))
        covered = set(fix["rows"]) | set(fix_basis)
        for w in table.rows:
            key = W.format_index(W.word_to_index(W.to_composite(w)))
            if key not in covered:
                extras.append(key)

    doc = table.to_json()
    doc["corank"] = {"fds": corank_fds, "fds_eds": corank_all}
    doc["integrality"] = [
        {"row": row, "basis": b, "coeff": _frac_str(c)} for row, b, c in REL.integrality_report(table)
    ]
    if check_fixtures:
        doc["fixture"] = {"mismatches": [list(x) for x in mismatches], "rows_not_in_fixture": sorted(extras)}

    if fmt == "json":
        _emit_json("reduce", {"weight": weight, "basis": basis, "max_m": max_m,
                              "check_fixtures": check_fixtures}, doc)
    else:
        names = doc["basis"]
        click.echo(f"weight {weight}, basis " + ", ".join(f"z({b})" for b in names))
        width = max(len(k) for k in doc["rows"])
        for key, vec in doc["rows"].items():
            terms = [f"{Fraction(p)}*z({b})" for p, b in zip(vec, names) if Fraction(p) != 0]
            click.echo(f"z({key:{width}}) = " + (" + ".join(terms).replace("+ -", "- ") or "0"))
        click.echo(f"coranks: fds={corank_fds} fds+eds={corank_all}")
        click.echo("integrality: " + ("all integer" if not doc["integrality"] else
                                      f"{len(doc['integrality'])} non-integer entries"))
        if check_fixtures:
            for key in extras:
                click.echo(f"note: z({key}) not in fixture (computed anyway)")
            click.echo(f"fixture check: {'PASS' if not mismatches else 'FAIL'}")
        click.echo(f"elapsed: {elapsed:.2f}s")
    if check_fixtures and mismatches:
        sys.exit(EXIT_MISMATCH)


def _symbolic_checks(n: int) -> dict:
    res = {
        "stuffle": I.check_stuffle_identity(n),
        "shuffle_c": I.check_shuffle_identity(n, "c-lead"),
        "shuffle_b": I.check_shuffle_identity(n, "b-lead"),
        "key": I.check_key_identity(n),
    }
    return {name: {"ok": r.ok, "terms": r.terms, "residual_terms": len(r.residual)}
            for name, r in res.items()}


@main.command()
@click.option("--n", "n_max", type=int, required=True, help="verify for 1..n")
@click.option("--prec", type=int, default=40, help="working decimal digits for the numeric checks")
@click.option("--jobs", type=int, default=1, help="parallel workers for the symbolic checks")
@click.option("--format", "fmt", type=click.Choice(["human", "json"]), default="human")
def verify(n_max, prec, jobs, fmt):
    """Run the symbolic identity suite and the numeric distribution checks."""
    if n_max < 1:
        click.echo("error: --n must be >= 1", err=True)
        sys.exit(EXIT_USAGE)
    tol = mpmath.mpf(10) ** (-(prec - 15))
    ctx = NE.PrecisionContext(digits=prec)
    report = {}
    t0 = time.monotonic()
    ns = list(range(1, n_max + 1))
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            symbolic = list(pool.map(_symbolic_checks, ns))
    else:
        symbolic = [_symbolic_checks(n) for n in ns]
    ok = True
    for n, sym in zip(ns, symbolic):
        with mpmath.workdps(ctx.dps):
            dist = I.distribution_residual(n, ctx)
            thm = I.block_identity_residual(n, ctx)
        entry = dict(sym)
        entry["distribution_residual"] = mpmath.nstr(dist, 8)
        entry["identity_residual"] = mpmath.nstr(thm, 8)
        entry["numeric_ok"] = bool(dist < tol and thm < tol)
        report[str(n)] = entry
        ok = ok and entry["numeric_ok"] and all(v["ok"] for v in sym.values())
        if fmt == "human":
            flags = " ".join(f"{k}={'ok' if v['ok'] else 'FAIL'}" for k, v in sym.items())
            click.echo(f"n={n}: {flags} dist={mpmath.nstr(dist, 3)} thm={mpmath.nstr(thm, 3)} "
                       f"[{time.monotonic() - t0:.1f}s]")
    if fmt == "json":
        # jobs only schedules work; leaving it out keeps json bytes identical
        # across parallelism settings
        _emit_json("verify", {"n": n_max, "prec": prec},
                   {"tolerance": mpmath.nstr(tol, 3), "checks": report, "ok": ok})
    else:
        click.echo(f"verify: {'PASS' if ok else 'FAIL'} ({time.monotonic() - t0:.1f}s)")
    if not ok:
        sys.exit(EXIT_MISMATCH)


@main.command("eval")
@click.argument("text")
@click.option("--prec", type=int, default=30, help="decimal digits")
@click.option("--oracle", "use_oracle", is_flag=True, help="also run the direct-series oracle")
@click.option("--format", "fmt", type=click.Choice(["human", "json"]), default="human")
def eval_cmd(text, prec, use_oracle, fmt):
    """Evaluate an admissible word or convergent index numerically."""
    t0 = time.monotonic()
    try:
        kind, value = _detect(text)
        if kind == "word":
            res = NE.eval_word(value, NE.PrecisionContext(digits=prec))
            index = W.word_to_index(W.to_composite(value)) if value else ()
        else:
            index = value if kind == "index" else W.word_to_index(value)
            res = NE.eval_index(index, NE.PrecisionContext(digits=prec))
    except (ParseError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    payload = {"value": mpmath.nstr(res.value, prec), "bound": mpmath.nstr(res.bound, 3)}
    if use_oracle:
        payload["oracle"] = repr(NE.oracle_eval(index))
    if fmt == "json":
        _emit_json("eval", {"input": text, "prec": prec, "oracle": use_oracle}, payload)
    else:
        click.echo(f"value  {payload['value']}")
        click.echo(f"bound  {payload['bound']}")
        if use_oracle:
            click.echo(f"oracle {payload['oracle']}")
        click.echo(f"elapsed: {time.monotonic() - t0:.2f}s")


@main.command()
@click.option("--weight", "-w", type=int, required=True)
@click.option("--max-m", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["human", "json"]), default="human")
def rank(weight, max_m, fmt):
    """Corank of the atom space modulo the plain and regularized relation spans."""
    if weight < 2:
        click.echo("error: --weight must be >= 2", err=True)
        sys.exit(EXIT_USAGE)
    corank_fds, corank_all = REL.rank_profile(weight, max_m)
    atoms = len(W.enumerate_admissible(weight))
    if fmt == "json":
        _emit_json("rank", {"weight": weight, "max_m": max_m},
                   {"atoms": atoms, "corank_fds": corank_fds, "corank_fds_eds": corank_all})
    else:
        click.echo(f"atoms={atoms} corank(fds)={corank_fds} corank(fds+eds)={corank_all}")


if __name__ == "__main__":
    main()
