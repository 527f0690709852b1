"""
The ``pysteiner`` command line program.

Reports go to stdout, either as indented ``key: value`` text or as JSON.
Log records and error messages go to stderr. The exit code is 0 on
success, 2 when an enumeration exceeds the budget and 1 for every other
error.
"""
import json
import logging
import sys

import click
from pysteiner.exceptions import (
    SteinerBudgetError,
    SteinerConditionError,
    SteinerError,
    SteinerInvalidInput,
    SteinerInvariantViolation,
)
from pysteiner.fileio import dumps_bundle, loads_triplet, read_bundle, write_bundle
from pysteiner.helpers import format_report
from pysteiner.oracle import brute_rank_one_scan, tecnico_bound_property
from pysteiner.src import (
    classify_max,
    config,
    enumerate_jumping_pairs,
    is_steiner,
    random_steiner,
    reduced_summand,
    span_report,
    verify_transform_laws,
)

logger = logging.getLogger(__name__)

BUNDLE_FILE = click.Path(exists=True, dir_okay=False)


def _emit(ctx, data):
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(format_report(data))


def _write(pres, output):
    if output is None:
        click.echo(dumps_bundle(pres))
    else:
        write_bundle(pres, output)
        logger.info("Wrote %r to %s", pres, output)


@click.group()
@click.option(
    "--budget",
    type=click.IntRange(min=1),
    default=None,
    help="Largest number of projective points one enumeration may visit "
    "[default: 10**7, or PYSTEINER_BUDGET].",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="How reports are printed.",
)
@click.option("-v", "--verbose", count=True, help="Log to stderr; repeat for debug.")
@click.pass_context
def cli(ctx, budget, output_format, verbose):
    """
    Steiner bundles over finite fields: construct them, find their jumping
    pairs, transform and classify them.
    """
    ctx.obj = {"format": output_format}
    if verbose:
        logging.basicConfig(
            stream=sys.stderr,
            level=logging.DEBUG if verbose > 1 else logging.INFO,
            format="%(levelname)s %(name)s: %(message)s",
        )
    if budget is not None:
        ctx.with_resource(config(budget=budget))


@cli.command()
@click.option(
    "--triplet",
    required=True,
    help='Triplet document, inline (\'{"p": 5, "p1": [2, 2]}\') or a file.',
)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def construct(triplet, output):
    """
    Build the bundle of a triplet and write its bundle document.
    """
    _write(loads_triplet(triplet).build(), output)


@cli.command()
@click.argument("bundle", type=BUNDLE_FILE)
@click.pass_context
def check(ctx, bundle):
    """
    Check the Steiner condition and split off the trivial summand.
    """
    pres = read_bundle(bundle)
    result = is_steiner(pres)
    data = {
        "p": pres.field.p,
        "n": pres.n,
        "s": pres.s,
        "t": pres.t,
        "steiner": result.holds,
        "witness": None if result.holds else list(result.witness),
    }
    if result.holds:
        red = reduced_summand(pres)
        data.update(t0=red.t0, kernel_dim=red.kernel_dim, reduced=red.kernel_dim == 0)
    _emit(ctx, data)
    if not result.holds:
        raise SteinerConditionError(
            f"Steiner condition fails at u = {result.witness}.", witness=result.witness
        )


@cli.command()
@click.argument("bundle", type=BUNDLE_FILE)
@click.pass_context
def jumping(ctx, bundle):
    """
    Report the jumping pairs of a bundle.
    """
    red = reduced_summand(read_bundle(bundle))
    report = enumerate_jumping_pairs(red)
    data = report.to_dict()
    data["spans"] = span_report(report, red)
    _emit(ctx, data)


@cli.command()
@click.argument("bundle", type=BUNDLE_FILE)
@click.option(
    "--pair",
    "index",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Index of the pair in the sorted jumping locus.",
)
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
@click.pass_context
def transform(ctx, bundle, index, output):
    """
    Transform a bundle at one of its jumping pairs and check the laws
    relating the two jumping loci.
    """
    red = reduced_summand(read_bundle(bundle))
    pairs = enumerate_jumping_pairs(red).pairs
    if index >= len(pairs):
        raise SteinerInvalidInput(
            f"Pair index {index} out of range, the bundle has {len(pairs)} pairs."
        )
    report = verify_transform_laws(red, pairs[index])
    _write(report.step.output.as_presentation(), output)
    _emit(ctx, report.to_dict())


@cli.command()
@click.argument("bundle", type=BUNDLE_FILE)
@click.pass_context
def classify(ctx, bundle):
    """
    Recognize a bundle whose jumping locus is as large as possible.
    """
    _emit(ctx, classify_max(reduced_summand(read_bundle(bundle))).to_dict())


@cli.command()
@click.option("--s", "dim_s", type=int, required=True, help="Dimension of S.")
@click.option("--t", "dim_t", type=int, required=True, help="Dimension of T.")
@click.option("--n", "dim_n", type=int, required=True, help="Dimension of P^n.")
@click.option("--p", "modulus", type=int, required=True, help="Odd prime.")
@click.option("--seed", type=int, required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def random(dim_s, dim_t, dim_n, modulus, seed, output):
    """
    Draw a random Steiner bundle.
    """
    _write(random_steiner(dim_s, dim_t, dim_n, modulus, seed=seed), output)


@cli.group()
def oracle():
    """
    Brute-force checks.
    """


@oracle.command()
@click.argument("bundle", type=BUNDLE_FILE)
@click.pass_context
def scan(ctx, bundle):
    """
    Find the jumping pairs by testing every point of P(T0) for rank 1.
    """
    pairs = brute_rank_one_scan(reduced_summand(read_bundle(bundle)))
    _emit(ctx, {"count": len(pairs), "pairs": [pair.to_dict() for pair in pairs]})


@oracle.command()
@click.option("--trials", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--p", "modulus", type=int, default=5, show_default=True)
@click.option("--seed", type=int, required=True)
@click.pass_context
def tecnico(ctx, trials, modulus, seed):
    """
    Test the bound on dim{f in W : f(B) in A} on random spans.
    """
    violations = tecnico_bound_property(trials=trials, field=modulus, seed=seed)
    _emit(ctx, {"trials": trials, "violations": violations})
    if violations:
        raise SteinerInvariantViolation(f"{len(violations)} trials break the bound.")


def run(argv=None):
    """
    Run the program on a list of arguments and return the exit code.
    """
    try:
        result = cli.main(args=argv, prog_name="pysteiner", standalone_mode=False)
    except SteinerBudgetError as err:
        click.echo(f"Error: {err}", err=True)
        return 2
    except SteinerError as err:
        click.echo(f"Error: {err}", err=True)
        return 1
    except click.ClickException as err:
        err.show()
        return 1
    except click.Abort:
        return 1
    return result if isinstance(result, int) else 0


def main():
    "Console script entry point."
    sys.exit(run())
