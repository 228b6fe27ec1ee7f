"""
murank command line.

    python main.py bound 8 5
    python main.py table 2 --to 20 --format csv
    python main.py asym 4 --t-max 6
    python main.py selfcheck --k-max 8 --report audit.csv
"""

import json
import logging
import sys
from functools import wraps

import click

import config
from asymptotics import best_asymptotic
from bilinear import (
    NotFound, brute_force_min_rank, build_interpolation_algorithm, verify_decomposition,
)
from bounds import best_bound, load_certificate, recheck, save_certificate
from bounds.table import bound_certificates, table_csv, table_json_rows
from constants import CONSTANT_FUNCTIONS, c_q_rows, gamma, load_known_values
from errors import (
    BelowThresholdError, MissingTableEntryError, MuRankError, NonPrimeError, NotASquareError,
    RangeError, TableFormatError, UnsupportedSizeError,
)
from fields import prime_power
from towers import families_for, find_step, run_selfcheck

logger = logging.getLogger(__name__)

# --- Exit codes ---
EXIT_INTERNAL = 1
EXIT_BAD_INPUT = 2
EXIT_RECHECK_FAILED = 3

BAD_INPUT_ERRORS = (
    NonPrimeError, UnsupportedSizeError, RangeError, BelowThresholdError,
    NotASquareError, MissingTableEntryError, TableFormatError,
)


def fail(message: str, code: int):
    click.echo(f"❌ {message}", err=True)
    sys.exit(code)


def handle_errors(func):
    """Map library errors onto exit codes: 2 for bad input, 1 for anything else."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BAD_INPUT_ERRORS as exc:
            fail(str(exc), EXIT_BAD_INPUT)
        except MuRankError as exc:
            fail(f"internal error: {exc}", EXIT_INTERNAL)
    return wrapper


def parse_q(value: int):
    return prime_power(value)


@click.group()
@click.option("--table", "table_file", type=click.Path(dir_okay=False), default=None,
              help="Constants file (overrides MURANK_TABLE).")
@click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
@click.pass_context
def cli(ctx, table_file, verbose):
    """Certified upper bounds on the bilinear complexity mu_q(n)."""
    logging.basicConfig(level=logging.DEBUG if verbose else config.LOG_LEVEL,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.ensure_object(dict)
    ctx.obj["table_file"] = table_file


def load_table(ctx):
    if "table" not in ctx.obj:
        try:
            ctx.obj["table"] = load_known_values(ctx.obj.get("table_file"))
        except TableFormatError as exc:
            fail(str(exc), EXIT_BAD_INPUT)
    return ctx.obj["table"]


@cli.command()
@click.argument("q", type=int)
@click.argument("n", type=int)
@click.option("--certificate", "cert_path", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON certificate here and recheck it.")
@click.option("--json", "as_json", is_flag=True, help="Print the certificate as JSON.")
@click.pass_context
@handle_errors
def bound(ctx, q, n, cert_path, as_json):
    """Best certified bound on mu_q(n)."""
    table = load_table(ctx)
    cert = best_bound(parse_q(q), n, table)
    if as_json:
        click.echo(json.dumps(cert.to_dict(), indent=2))
    else:
        click.echo(f"{cert.value_floor} ({cert.kind})")
    if cert_path:
        save_certificate(cert, cert_path)
        if not recheck(load_certificate(cert_path), table):
            fail(f"certificate for mu_{q}({n}) does not recheck", EXIT_RECHECK_FAILED)


@cli.command()
@click.argument("q", type=int)
@click.option("--to", "n_to", type=int, required=True, help="Last n of the table.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--output", type=click.Path(dir_okay=False), default=None,
              help="Write to a file instead of stdout.")
@click.pass_context
@handle_errors
def table(ctx, q, n_to, fmt, output):
    """One best_bound row per n in 2..N."""
    certs = bound_certificates(parse_q(q), n_to, load_table(ctx))
    text = table_csv(certs) if fmt == "csv" else json.dumps(table_json_rows(certs), indent=2) + "\n"
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        click.echo(f"✅ {len(certs)} rows written to {output}")
    else:
        click.echo(text, nl=False)


@cli.command()
@click.argument("q", type=int)
@click.option("--t-max", type=int, default=config.DEFAULT_T_MAX, show_default=True)
@click.pass_context
@handle_errors
def asym(ctx, q, t_max):
    """Upper bound on M_q = limsup mu_q(n)/n."""
    result = best_asymptotic(parse_q(q), t_max, load_table(ctx))
    click.echo(f"M_{q} <= {result.value} ({result.route})")
    if result.mu_qt_used:
        t, mu, provenance = result.mu_qt_used
        click.echo(f"  mu_{q}({t}) <= {mu}: {provenance}")


@cli.command("verify-interp")
@click.argument("q", type=int)
@click.argument("n", type=int)
@handle_errors
def verify_interp(q, n):
    """Build and verify the rank 2n-1 interpolation algorithm."""
    dec = build_interpolation_algorithm(parse_q(q), n)
    ok = verify_decomposition(dec)
    click.echo(f"rank {dec.rank} ({'verified' if ok else 'FAILED'})")
    if not ok or dec.rank != 2 * n - 1:
        fail(f"interpolation algorithm for q={q}, n={n} did not verify", EXIT_INTERNAL)


@cli.command()
@click.option("--k-max", type=int, default=config.DEFAULT_SELFCHECK_K_MAX, show_default=True)
@click.option("--kummer-k-max", type=int, default=None, help="Defaults to --k-max.")
@click.option("--report", type=click.Path(dir_okay=False), default=None,
              help="Write the step profile audit CSV here.")
@click.pass_context
@handle_errors
def selfcheck(ctx, k_max, kummer_k_max, report):
    """Run the tower lemma suite."""
    result = run_selfcheck(k_max, kummer_k_max, load_table(ctx))
    summary = result.summary()
    if not summary.empty:
        click.echo(summary.to_string(index=False))
    for failure in result.failures:
        click.echo(f"❌ {failure.lemma} on {failure.tower} k={failure.k} s={failure.s}: {failure.detail}")
    if report:
        result.write_csv(report)
        click.echo(f"✅ Profile report written to {report}")
    if not result.passed:
        fail(f"{len(result.failures)} lemma violations", EXIT_INTERNAL)
    click.echo(f"✅ all {len(result.checks)} lemma instances pass")


@cli.command("brute-force")
@click.argument("q", type=int)
@click.argument("n", type=int)
@click.argument("cap", type=int)
@click.option("--budget", type=int, default=None, help="Overrides MURANK_BRUTE_FORCE_BUDGET.")
@handle_errors
def brute_force(q, n, cap, budget):
    """Exact tensor rank of F_{q^n}/F_q by exhaustive search, up to CAP."""
    found = brute_force_min_rank(parse_q(q), n, cap, budget)
    if isinstance(found, NotFound):
        click.echo(str(found))
    else:
        click.echo(f"rank {found}")


@cli.command("constants")
@click.argument("q", type=int)
@click.pass_context
@handle_errors
def constants_cmd(ctx, q):
    """epsilon, alpha, e, gamma and C_q for one q."""
    pq = parse_q(q)
    table = load_table(ctx)
    for name, func in CONSTANT_FUNCTIONS.items():
        try:
            click.echo(f"{name:<8} {func(pq)}")
        except MissingTableEntryError as exc:
            click.echo(f"{name:<8} ⚠️ {exc}")
    for d in (1, 2, 4):
        try:
            click.echo(f"gamma_{d:<2} {gamma(pq, d, table)}")
        except MissingTableEntryError as exc:
            click.echo(f"gamma_{d:<2} ⚠️ {exc}")
    for row, value in c_q_rows(pq):
        click.echo(f"  C_q row {row}: {value}")
    click.echo(f"table v{table.version} ({table.source})")


@cli.command("check-cert")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@handle_errors
def check_cert(ctx, path):
    """Recheck a certificate written by `bound --certificate`."""
    cert = load_certificate(path)
    if not recheck(cert, load_table(ctx)):
        fail(f"certificate for mu_{cert.q}({cert.n}) does not recheck", EXIT_RECHECK_FAILED)
    click.echo(f"✅ mu_{cert.q}({cert.n}) <= {cert.value_floor} rechecks ({cert.kind})")


@cli.command()
@click.argument("q", type=int)
@click.argument("n", type=int)
@handle_errors
def steps(q, n):
    """The step find_step picks in every tower family for (q, n)."""
    towers = families_for(parse_q(q))
    if not towers:
        click.echo(f"⚠️ no tower family targets q={q}")
    for tower in towers:
        try:
            p = find_step(tower, n)
        except MuRankError as exc:
            click.echo(f"{tower.label:<28} ⚠️ {exc}")
            continue
        click.echo(f"{tower.label:<28} {p.label:<10} g in [{p.genus_lower}, {p.genus_upper}] "
                   f"W >= {p.weighted_places_lower} D = {p.D} n0 >= {p.n0_lower}")


if __name__ == "__main__":
    cli()
