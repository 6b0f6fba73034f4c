"""Command-line front end.

Exit status is 0 when every claim passes, 1 when any claim fails and 2 on a
usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .bundles import SplitBundle, h0_bundle, h1_bundle, sym_pow
from .filtration import build_filtration, generic_multiplicity_along_C
from .moduli import DEFAULT_ISOMETRY_BOUND, aut_dim, moduli_report
from .projbundle import DivisorClass, PBundle, cohomology_pbundle, special_bundle, pushforward
from .report import DEFAULT_PSI_MAX_N, SCHEMA_VERSION, run_range, run_suite
from .sections import monomial_basis
from .surfaces import SurfaceClass, fixed_component_decomposition


class BundleType(click.ParamType):
    name = "bundle"

    def convert(self, value, param, ctx):
        if isinstance(value, SplitBundle):
            return value
        try:
            return SplitBundle.parse(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class ClassType(click.ParamType):
    name = "a,b"

    def convert(self, value, param, ctx):
        try:
            a, b = (int(x) for x in value.strip("() ").split(","))
        except ValueError:
            self.fail(f"expected a class 'a,b', got {value!r}", param, ctx)
        return a, b


BUNDLE = BundleType()
# lets "-4" through as an argument rather than an unknown option
NUMERIC_ARGS = {"ignore_unknown_options": True}


def _check_n(n: int) -> None:
    if n < 3:
        raise click.UsageError(f"n must be >= 3, got {n}")


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text)
    else:
        out.write_text(text + "\n")


@click.group()
def main():
    """Exact checks for anticanonical hypersurfaces in P^n-bundles over P^1."""


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--psi-max-n", type=int, default=DEFAULT_PSI_MAX_N, show_default=True)
@click.option("--isometry-bound", type=int, default=DEFAULT_ISOMETRY_BOUND, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def verify(n, psi_max_n, isometry_bound, fmt, out):
    """Run the full claim suite for one n."""
    _check_n(n)
    rep = run_suite(n, psi_max_n=psi_max_n, isometry_bound=isometry_bound)
    _emit(rep.to_json() if fmt == "structured" else rep.format_text(), out)
    sys.exit(0 if rep.ok else 1)


@main.command("verify-range")
@click.option("--from", "n_lo", type=int, required=True)
@click.option("--to", "n_hi", type=int, required=True)
@click.option("--psi-max-n", type=int, default=DEFAULT_PSI_MAX_N, show_default=True)
@click.option("--isometry-bound", type=int, default=DEFAULT_ISOMETRY_BOUND, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def verify_range(n_lo, n_hi, psi_max_n, isometry_bound, fmt, out):
    """Run the claim suite for every n in a range."""
    if not 3 <= n_lo <= n_hi:
        raise click.UsageError(f"need 3 <= --from <= --to, got {n_lo}..{n_hi}")
    reports = run_range(n_lo, n_hi, psi_max_n, isometry_bound)
    failed = [r.n for r in reports if not r.ok]
    total = sum(len(r.claims) for r in reports)
    summary = (
        f"{len(reports)} reports, {total} claims, "
        + (f"failures at n = {failed}" if failed else "all passed")
    )
    if fmt == "structured":
        doc = {
            "schema": SCHEMA_VERSION,
            "reports": [r.as_dict() for r in reports],
            "summary": summary,
        }
        text = json.dumps(doc, indent=2)
    else:
        text = "\n\n".join(r.format_text() for r in reports) + "\n\n" + summary
    _emit(text, out)
    sys.exit(1 if failed else 0)


@main.command()
@click.argument("bundle", type=BUNDLE)
def h0(bundle):
    """h^0 and h^1 of a split bundle on P^1."""
    click.echo(f"h0 = {h0_bundle(bundle)}")
    click.echo(f"h1 = {h1_bundle(bundle)}")


@main.command()
@click.argument("bundle", type=BUNDLE)
@click.argument("d", type=click.IntRange(min=0))
def sympow(bundle, d):
    """Symmetric power S^d of a split bundle."""
    click.echo(str(sym_pow(bundle, d)))


def _pbundle(bundle: SplitBundle) -> PBundle:
    try:
        return PBundle(bundle)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@main.command("pushforward", context_settings=NUMERIC_ARGS)
@click.argument("bundle", type=BUNDLE)
@click.argument("a", type=click.IntRange(min=0))
@click.argument("b", type=int)
def pushforward_cmd(bundle, a, b):
    """pi_* O(a t + b f) on P(bundle)."""
    click.echo(str(pushforward(_pbundle(bundle), DivisorClass(a, b))))


@main.command(context_settings=NUMERIC_ARGS)
@click.argument("bundle", type=BUNDLE)
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.argument("i", type=int)
def cohomology(bundle, a, b, i):
    """h^i(P(bundle), O(a t + b f))."""
    P = _pbundle(bundle)
    if not 0 <= i <= P.n + 1:
        raise click.UsageError(f"i must lie in 0..{P.n + 1}")
    click.echo(str(cohomology_pbundle(P, DivisorClass(a, b), i)))


@main.command()
@click.option("--n", "n", type=int, required=True)
def multiplicity(n):
    """Filtration table and generic multiplicity along C."""
    _check_n(n)
    table = build_filtration(n)
    click.echo(table.format())
    click.echo(f"multiplicity along C = {generic_multiplicity_along_C(table)}")


@main.command()
@click.option("--n", "n", type=int, required=True)
def moduli(n):
    """Aut dimensions and moduli counts."""
    _check_n(n)
    mr = moduli_report(n)
    for key, value in mr.as_dict().items():
        click.echo(f"{key:>14} = {_plain(value)}")
    br = aut_dim(special_bundle(n))
    click.echo(
        f"Aut(P_2) entries: {br.constant_entries} constant, {br.linear_entries} linear,"
        f" {br.quadratic_entries} quadratic"
    )


def _plain(value):
    return str(value).lower() if isinstance(value, bool) else value


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--class", "cls", type=ClassType(), required=True)
@click.option("--limit", type=int, default=50, show_default=True,
              help="print at most this many basis elements")
def sections(n, cls, limit):
    """Monomial basis of H^0(O(a t + b f)) on P_2."""
    _check_n(n)
    a, b = cls
    if a < 0:
        raise click.UsageError("a must be >= 0")
    basis = monomial_basis(n, a, b)
    h = h0_bundle(pushforward(PBundle(special_bundle(n)), DivisorClass(a, b)))
    click.echo(f"class ({a},{b}): {len(basis)} basis sections, h0(pushforward) = {h}")
    for e in basis.elements[:limit]:
        click.echo(f"  {e}")
    if len(basis) > limit:
        click.echo(f"  ... {len(basis) - limit} more")


@main.command()
@click.option("--class", "cls", type=ClassType(), default="4,6", show_default=True,
              help="surface class c,f meaning c*C + f*fibre")
@click.option("--e", "e", type=click.IntRange(min=0), default=2, show_default=True)
def surface(cls, e):
    """Fixed-component decomposition on the Hirzebruch surface F_e."""
    try:
        dec = fixed_component_decomposition(SurfaceClass(cls[0], cls[1], e), trace=True)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(dec.format_trace())


if __name__ == "__main__":
    main()
