"""Command-line interface for cyarith.

Usage:
    cyarith table --fn d --nmax 12
    cyarith verify --identity lemma-b --t 2 --nmax 10000
    cyarith classify --fn omega --bound 2000
    cyarith waring --s 2 --t 4 --order 2048 --check-bruteforce 200
    cyarith probnum --beta omega --M 10000

Exit codes: 0 success, 1 failed check or runtime error, 2 bad arguments.
"""
from __future__ import annotations

import contextlib
import json
import logging
import sys
from fractions import Fraction

import attrs
import click
import mpmath

from cyarith import __version__, fns, functions, identities, probnum, waring
from cyarith.classify import ADDITIVE, MULTIPLICATIVE, classify, exp_transform, verify_decomposable
from cyarith.errors import CyarithError, InvalidArgumentError
from cyarith.reports import render_csv, render_json, to_document
from cyarith.sieve import build_sieve
from cyarith.util import format_rational, rational

logger = logging.getLogger(__name__)

__all__ = [
    "cli",
]

PROBNUM_BETAS = ("omega", "bigomega", "L", "d", "pi")


class RationalType(click.ParamType):
    """Exact rational given as ``p/q`` or ``p``."""

    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return rational(str(value))
        except (InvalidArgumentError, TypeError):
            self.fail(f"{value!r} is not a rational of the form p/q", param, ctx)


RATIONAL = RationalType()


def _load_config(ctx, param, value):
    if not value:
        return
    try:
        with open(value, encoding="utf-8") as fh:
            ctx.default_map = json.load(fh)
    except (OSError, ValueError) as e:
        raise click.BadParameter(f"cannot read config: {e}", ctx=ctx, param=param)


@contextlib.contextmanager
def _runtime_errors():
    try:
        yield
    except CyarithError as e:
        raise click.ClickException(str(e))


def output_options(default_format):
    def decorator(f):
        f = click.option(
            "--format",
            "fmt",
            type=click.Choice(["csv", "json"]),
            default=default_format,
            show_default=True,
            help="csv table or structured json document",
        )(f)
        f = click.option(
            "--out",
            type=click.Path(dir_okay=False, writable=True),
            default=None,
            help="Write the report here instead of standard output",
        )(f)
        return f

    return decorator


def _header(command, **parameters):
    return {"tool": "cyarith", "version": __version__, "command": command, "parameters": parameters}


def _emit(text, out):
    with click.open_file(out or "-", "w", encoding="utf-8") as fh:
        fh.write(text)


def _decimal(value: Fraction) -> str:
    return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, 15)


@click.group()
@click.version_option(version=__version__, prog_name="cyarith")
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    callback=_load_config,
    is_eager=True,
    expose_value=False,
    help="JSON file of per-subcommand defaults; flags win",
)
@click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logging")
def cli(verbose):
    """Exact arithmetical functions, Euler-product identities and Waring counts."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("cyarith").setLevel(level)


def _table_values(name, t, nmax):
    if name == "partition":
        return functions.partition_counts(nmax)[1:]
    if name == "pi":
        sieve = build_sieve(max(nmax, 2))
        values, count = [], 0
        for n in range(1, nmax + 1):
            count += sieve.is_prime(n)
            values.append(count)
        return values
    handle = fns.lookup(name, t)
    return [handle(n) for n in range(1, nmax + 1)]


def _check_t(name, t):
    if name == "L" and t < 1:
        raise click.BadParameter("L needs t >= 1", param_hint="--t")


@cli.command()
@click.option("--fn", "fn_name", type=click.Choice(fns.NAMES), required=True, help="Function id")
@click.option("--nmax", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--t", "t", type=click.IntRange(min=0), default=1, show_default=True, help="t for sigma and L")
@output_options("csv")
def table(fn_name, nmax, t, fmt, out):
    """
    Tabulate f(n) for n = 1..nmax.

    Examples:

        cyarith table --fn d --nmax 12

        cyarith table --fn sigma --t 2 --nmax 50 --format json
    """
    _check_t(fn_name, t)
    with _runtime_errors():
        values = _table_values(fn_name, t, nmax)
    rows = list(zip(range(1, nmax + 1), values))
    if fmt == "csv":
        text = render_csv(["n", "value"], rows)
    else:
        text = render_json(_header("table", fn=fn_name, nmax=nmax, t=t), {"function": fn_name, "rows": rows})
    _emit(text, out)


def _verify_lemma(identity, t, nmax, x, k, prime_bound, exp_bound, tolerance):
    try:
        spec = identities.builtin_spec(identity, t)
    except InvalidArgumentError as e:
        raise click.BadParameter(str(e), param_hint="--t")
    direct_alpha, direct_beta = identities.direct_functions(identity, t)
    report = identities.verify_per_term(spec, direct_alpha, direct_beta, nmax)
    k = spec.min_exponent() if k is None else k
    if abs(x) >= 1:
        logger.warning("|x| = %s >= 1: the truncations need not converge", abs(x))
    body = {"identity": identity, "spec": spec.name, "k": k}
    if k <= spec.growth + 1:
        body["numeric_skipped"] = f"series diverges for k <= {spec.growth + 1}"
        report = attrs.evolve(report, k=k)
    else:
        check = identities.numeric_check(spec, x, k, prime_bound, exp_bound, nmax)
        report = attrs.evolve(report, k=k, numeric_check=check, tolerance=tolerance)
        body["numeric"] = {
            "product": _decimal(check.lhs),
            "sum": _decimal(check.rhs),
            "gap": mpmath.nstr(check.difference_mpf(), 15),
        }
    body.update(
        report=report,
        per_term_passed=report.per_term_passed,
        numeric_passed=report.numeric_passed,
        passed=report.passed,
    )
    return body


@cli.command()
@click.option(
    "--identity",
    type=click.Choice(identities.BUILTIN_SPECS + ("euler-product", "partition-product")),
    required=True,
)
@click.option("--t", "t", type=click.IntRange(min=0), default=None, help="t for lemma-b and lemma-d")
@click.option("--nmax", type=click.IntRange(min=2), default=10000, show_default=True)
@click.option("--order", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--x", "x", type=RATIONAL, default="1/2", show_default=True)
@click.option("--k", "k", type=click.IntRange(min=2), default=None, help="exponent of n (default: smallest convergent)")
@click.option("--s", "s", type=click.IntRange(min=2), default=2, show_default=True, help="zeta exponent")
@click.option("--prime-bound", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--exp-bound", type=click.IntRange(min=1), default=16, show_default=True)
@click.option(
    "--tolerance", type=RATIONAL, default=format_rational(identities.DEFAULT_TOLERANCE), show_default=True
)
@output_options("json")
@click.pass_context
def verify(ctx, identity, t, nmax, order, x, k, s, prime_bound, exp_bound, tolerance, fmt, out):
    """
    Verify an Euler-product identity, term by term and numerically.

    Examples:

        cyarith verify --identity lemma-b --t 2 --nmax 10000

        cyarith verify --identity partition-product --order 1000
    """
    header = _header(
        "verify", identity=identity, t=t, nmax=nmax, order=order, x=x, k=k, s=s,
        prime_bound=prime_bound, exp_bound=exp_bound, tolerance=tolerance,
    )
    with _runtime_errors():
        if identity == "euler-product":
            check = identities.euler_zeta_check(s, nmax, prime_bound)
            passed = check.difference < tolerance
            body = {
                "identity": identity,
                "report": check,
                "sum": _decimal(check.sum_value),
                "product": _decimal(check.product_value),
                "difference": _decimal(check.difference),
                "zeta": mpmath.nstr(check.reference(), 12),
                "passed": passed,
            }
        elif identity == "partition-product":
            report = identities.partition_product_check(order)
            passed = report.passed
            body = {"identity": identity, "report": report, "passed": passed}
        else:
            body = _verify_lemma(identity, t, nmax, x, k, prime_bound, exp_bound, tolerance)
            passed = body["passed"]
    if fmt == "csv":
        text = render_csv(["identity", "passed"], [(identity, passed)])
    else:
        text = render_json(header, body)
    _emit(text, out)
    if not passed:
        click.echo(f"{identity}: check failed", err=True)
        ctx.exit(1)


@cli.command(name="classify")
@click.option("--fn", "fn_name", type=click.Choice(fns.NAMES + ("log",)), required=True)
@click.option("--t", "t", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--bound", type=click.IntRange(min=4), default=2000, show_default=True)
@click.option("--exp-base", type=click.IntRange(min=2), default=None, help="classify n -> base^f(n) instead")
@output_options("json")
def classify_command(fn_name, t, bound, exp_base, fmt, out):
    """
    Classify a function as multiplicative / additive on 1..bound.

    Examples:

        cyarith classify --fn sigma --t 1 --bound 2000

        cyarith classify --fn omega --exp-base 2
    """
    _check_t(fn_name, t)
    handle = fns.lookup(fn_name, t)
    if exp_base is not None:
        handle = exp_transform(handle, exp_base)
    with _runtime_errors():
        report = classify(handle, bound)
        decomposable = {
            mode: verify_decomposable(handle, mode, bound) for mode in (MULTIPLICATIVE, ADDITIVE)
        }
    if fmt == "csv":
        laws = ("multiplicative", "completely_multiplicative", "additive", "completely_additive")
        rows = [(law, getattr(report, law), ",".join(map(str, report.witnesses.get(law, ())))) for law in laws]
        text = render_csv(["law", "holds", "witness"], rows)
    else:
        header = _header("classify", fn=fn_name, t=t, bound=bound, exp_base=exp_base)
        text = render_json(header, {"report": report, "decomposable": decomposable})
    _emit(text, out)


@cli.command(name="waring")
@click.option("--s", "s", type=click.IntRange(min=1), default=2, show_default=True, help="even power")
@click.option("--t", "t", type=click.IntRange(min=1), default=4, show_default=True, help="number of summands")
@click.option("--order", type=click.IntRange(min=0), default=1024, show_default=True)
@click.option("--check-bruteforce", type=click.IntRange(min=0), default=None, help="compare with enumeration up to m")
@click.option("--lemma-g", nargs=2, type=click.IntRange(min=1), default=None, help="T R: check U(t+r) = U(t) U(r)")
@output_options("json")
@click.pass_context
def waring_command(ctx, s, t, order, check_bruteforce, lemma_g, fmt, out):
    """
    Count representations as sums of t s-th powers.

    Examples:

        cyarith waring --s 2 --t 4 --order 2048 --check-bruteforce 200

        cyarith waring --s 2 --lemma-g 2 2 --order 512
    """
    if s % 2:
        raise click.BadParameter(f"odd s={s} is unsupported; only even powers are handled", param_hint="--s")
    if check_bruteforce is not None and check_bruteforce > order:
        raise click.BadParameter("must not exceed --order", param_hint="--check-bruteforce")
    with _runtime_errors():
        counts = waring.waring_counts(s, t, order)
        checks = {}
        if check_bruteforce is not None:
            oracle = waring.brute_force_table(check_bruteforce, s, t)
            mismatches = [m for m in range(check_bruteforce + 1) if oracle[m] != counts[m]]
            checks["bruteforce"] = {"limit": check_bruteforce, "mismatches": mismatches, "passed": not mismatches}
        if lemma_g:
            report = waring.verify_lemma_g(s, lemma_g[0], lemma_g[1], order)
            checks["lemma_g"] = {"report": report, "passed": report.passed}
    passed = all(check["passed"] for check in checks.values())
    if fmt == "csv":
        text = render_csv(["m", "count"], enumerate(counts.counts))
    else:
        header = _header(
            "waring", s=s, t=t, order=order, check_bruteforce=check_bruteforce,
            lemma_g=list(lemma_g) if lemma_g else None,
        )
        text = render_json(header, {"table": counts, "checks": checks, "passed": passed})
    _emit(text, out)
    if not passed:
        click.echo("waring: cross-check failed", err=True)
        ctx.exit(1)


@cli.command(name="probnum")
@click.option("--beta", "beta_name", type=click.Choice(PROBNUM_BETAS), default="omega", show_default=True)
@click.option("--M", "M", type=click.IntRange(min=1), required=True, help="polynomial runs over n = 1..M")
@click.option("--t", "t", type=click.IntRange(min=1), default=1, show_default=True, help="t for L")
@click.option("--roots", is_flag=True, help="scan J(x) - (M+1) for real zeros")
@click.option("--radius", type=RATIONAL, default="4", show_default=True)
@click.option("--step", type=RATIONAL, default="1/16", show_default=True)
@output_options("json")
def probnum_command(beta_name, M, t, roots, radius, step, fmt, out):
    """
    Exponent histogram, PMF and moments of x^beta(n) over 1..M.

    Examples:

        cyarith probnum --beta omega --M 10000

        cyarith probnum --beta omega --M 30 --roots
    """
    if radius <= 0 or step <= 0:
        raise click.BadParameter("radius and step must be positive")
    beta = fns.lookup(beta_name, t)
    with _runtime_errors():
        result = probnum.summary(beta, M, roots=roots, radius=radius, step=step)
    if fmt == "csv":
        pmf = dict(result.pmf.support)
        rows = [(s, result.polynomial.coefficient(s), pmf[s]) for s, _ in result.pmf.support]
        text = render_csv(["s", "count", "probability"], rows)
    else:
        header = _header("probnum", beta=beta_name, M=M, t=t, roots=roots, radius=radius, step=step)
        text = render_json(header, result)
    _emit(text, out)
