"""Command-line entry point: ssg construct | analyze | verify."""
import sys

import click

from . import corpus, report, semigroup, verify
from .errors import SemigroupError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _fail_input(exc):
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_INPUT)


def _write(S, output):
    data = semigroup.serialize(S)
    if output == "-":
        click.echo(data.decode("utf-8"), nl=False)
    else:
        with open(output, "wb") as fh:
            fh.write(data)
        click.echo(f"wrote {S.name} ({S.size} elements) to {output}", err=True)


def _read(path):
    try:
        return semigroup.load(path)
    except OSError as exc:
        _fail_input(exc)


@click.group()
def cli():
    """Finite semigroup analysis."""


@cli.group()
def construct():
    """Build a semigroup and write it as a .sgp file."""


def _output_option(f):
    return click.option("-o", "--output", default="-", show_default=True, help="target .sgp path")(f)


@construct.command("zn")
@click.argument("n", type=int)
@_output_option
def construct_zn(n, output):
    """Z_n under multiplication mod n."""
    try:
        _write(semigroup.make_zn_mul(n), output)
    except SemigroupError as exc:
        _fail_input(exc)


@construct.command("tn")
@click.argument("n", type=int)
@_output_option
def construct_tn(n, output):
    """All maps of {1..n} to itself."""
    try:
        _write(semigroup.make_full_transformation(n), output)
    except SemigroupError as exc:
        _fail_input(exc)


@construct.command("mat")
@click.argument("k", type=int)
@click.argument("m", type=int)
@_output_option
def construct_mat(k, m, output):
    """k x k matrices over Z_m."""
    try:
        _write(semigroup.make_matrix_semigroup(k, m), output)
    except SemigroupError as exc:
        _fail_input(exc)


@construct.command("product")
@click.argument("left", type=click.Path(dir_okay=False))
@click.argument("right", type=click.Path(dir_okay=False))
@_output_option
def construct_product(left, right, output):
    """Direct product of two .sgp files."""
    try:
        _write(semigroup.direct_product(_read(left), _read(right)), output)
    except SemigroupError as exc:
        _fail_input(exc)


@construct.command("table")
@click.argument("source", type=click.Path(dir_okay=False))
@_output_option
def construct_table(source, output):
    """Validate a JSON or plain-text table and re-emit it as .sgp."""
    try:
        _write(_read(source), output)
    except SemigroupError as exc:
        _fail_input(exc)


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--mode", type=click.Choice(["any-idempotent", "global-identity-only"]),
              default="any-idempotent", show_default=True)
@click.option("--min-subgroup-size", type=int, default=2, show_default=True)
@click.option("--max-group-order", type=int, default=720, show_default=True)
@click.option("--coset", "cosets", multiple=True,
              help="comma-separated element labels of a subgroup whose cosets to report")
@click.option("--json", "as_json", is_flag=True, help="emit the JSON report")
@click.option("--timing", is_flag=True, help="include wall-clock time (breaks byte-identical output)")
def analyze(path, mode, min_subgroup_size, max_group_order, cosets, as_json, timing):
    """Classify the semigroup stored in PATH."""
    try:
        S = _read(path)
        rep = report.build_report(S, mode, min_subgroup_size, max_group_order, cosets, timing)
    except SemigroupError as exc:
        _fail_input(exc)
    click.echo(report.to_json(rep) if as_json else report.to_text(rep), nl=False)


def _run_checks(title, checks):
    ok, failed = verify.summarize(checks)
    mark = "PASS" if ok else "FAIL"
    click.echo(f"[{mark}] {title} ({len(checks) - len(failed)}/{len(checks)} checks)")
    for ch in failed:
        click.echo(f"    failed: {ch.label}: {ch.detail}")
    return ok


@cli.command("verify")
@click.argument("suite", type=click.Choice(["book", "errata", "properties"]))
@click.option("--extra", is_flag=True, help="errata: include claims found beyond the seed catalogue")
def verify_cmd(suite, extra):
    """Replay worked examples, the errata ledger, or the property suites."""
    all_ok = True
    if suite == "book":
        for k, (title, fn) in verify.BOOK_CRITERIA.items():
            all_ok &= _run_checks(f"{k}. {title}", fn())
    elif suite == "properties":
        all_ok = _run_checks("property suites", verify.criterion_12())
    else:
        entries = corpus.run_errata_suite(include_extra=extra)
        ok, problems = corpus.errata_matches(entries)
        for e in entries:
            click.echo(f"{e.claim_id}: {e.status} - {e.oracle_verdict}")
            if e.witness is not None:
                click.echo(f"    witness: {e.witness}")
        for p in problems:
            click.echo(f"    mismatch: {p}")
        all_ok = ok
    sys.exit(EXIT_OK if all_ok else EXIT_FAIL)


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="ssg", standalone_mode=True)
    except SemigroupError as exc:  # pragma: no cover
        _fail_input(exc)


if __name__ == "__main__":
    main()
