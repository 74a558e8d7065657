"""
Crystal Forge
Main Entry Point

Highest weight crystals, Demazure crystals, ideal subsets and atoms, and
local tests deciding which subsets are Demazure crystals.
"""

import functools
import sys

import click

from config.logging_setup import configure_logging
from config.storage import Storage
from controllers.crystal_controller import CrystalController, parse_generators, parse_word
from controllers.verify_controller import resolve_suites, run_suites
from utils.errors import CrystalForgeError
from views import report_view

EXIT_ERROR = 1
EXIT_VERIFY_FAILED = 2


def handle_errors(fn):
    """Turn library errors into a console line and exit status 1"""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CrystalForgeError as e:
            report_view.error(str(e))
            sys.exit(EXIT_ERROR)

    return wrapper


def emit_json(document, out=None):
    """Write a document to a file, or canonical JSON to stdout"""
    if out:
        path = Storage().write_json(out, document)
        report_view.success(f"Wrote {path}")
    else:
        click.echo(Storage.dumps(document).decode(), nl=False)


@click.group()
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
@click.option("--log-format", type=click.Choice(["json", "plain"]), default=None)
@click.pass_context
def cli(ctx, log_level, log_format):
    """Build crystals and classify their subsets"""
    configure_logging(log_level, log_format)
    ctx.obj = CrystalController()


@cli.command()
@click.argument("cartan_type")
@click.argument("rank", type=int)
@click.argument("hw")
@click.option("-o", "--out", default=None, help="output file (default: stdout)")
@click.pass_obj
@handle_errors
def build(controller, cartan_type, rank, hw, out):
    """Build the tableau crystal of highest weight HW, e.g. build A 2 2,1"""
    graph = controller.build(cartan_type, rank, hw)
    emit_json(graph.to_dict(), out)


@cli.command()
@click.argument("crystal")
@click.option("-o", "--out", default=None, help="rewrite in canonical form")
@click.pass_obj
@handle_errors
def load(controller, crystal, out):
    """Validate a crystal document"""
    graph = controller.load(crystal)
    hw = graph.highest_weight_ids
    report_view.success(
        f"Valid crystal: {len(graph)} elements, {len(graph.edges())} edges, "
        f"{len(hw)} highest weight element(s)"
    )
    if out:
        controller.save(graph, out)
        report_view.success(f"Wrote {out}")


@cli.command()
@click.argument("crystal")
@click.argument("spec")
@click.option("-o", "--out", default=None)
@click.pass_obj
@handle_errors
def subset(controller, crystal, spec, out):
    """Resolve a subset specification, e.g. "hw; f1 @hw; f2 @hw" """
    graph = controller.load(crystal)
    emit_json(controller.subset(graph, spec).to_dict(), out)


@cli.command()
@click.argument("crystal")
@click.argument("word")
@click.option("-o", "--out", default=None)
@click.pass_obj
@handle_errors
def demazure(controller, crystal, word, out):
    """Demazure crystal B_w for a word, e.g. 2,1"""
    graph = controller.load(crystal)
    emit_json(controller.demazure(graph, parse_word(word)).to_dict(), out)


@cli.command()
@click.argument("crystal")
@click.argument("generators")
@click.option("-o", "--out", default=None)
@click.pass_obj
@handle_errors
def ideal(controller, crystal, generators, out):
    """Ideal subset B_I for generator words, e.g. "1;2" """
    graph = controller.load(crystal)
    emit_json(controller.ideal(graph, parse_generators(generators)).to_dict(), out)


@cli.command()
@click.argument("crystal")
@click.option("--ideal", "generators", default=None, help="generator words, e.g. 1;2")
@click.pass_obj
@handle_errors
def atoms(controller, crystal, generators):
    """Atomic decomposition of an ideal subset (default: the whole crystal)"""
    graph = controller.load(crystal)
    gens = parse_generators(generators) if generators else None
    found, monomials = controller.atoms(graph, gens)
    click.echo(report_view.atom_table(found, monomials))
    report_view.success(f"{len(found)} atoms, {sum(len(a) for a in found)} elements")


@cli.command()
@click.argument("crystal")
@click.argument("spec")
@click.option("--json", "as_json", is_flag=True, help="print the JSON report")
@click.pass_obj
@handle_errors
def classify(controller, crystal, spec, as_json):
    """Decide extremal, ideal, principal and Demazure for a subset"""
    graph = controller.load(crystal)
    report = controller.classify(controller.subset(graph, spec))
    if as_json:
        emit_json(report)
    else:
        click.echo(report_view.classification_table(report))


@cli.command()
@click.argument("crystal")
@click.argument("spec")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
@handle_errors
def character(controller, crystal, spec, as_json):
    """Formal character of a subset"""
    graph = controller.load(crystal)
    char, text = controller.character(controller.subset(graph, spec))
    if as_json:
        emit_json(char.to_dict())
        return
    click.echo(report_view.character_table(char))
    if text is not None:
        click.echo(f"\n{text}")


@cli.command()
@click.argument("crystal")
@click.argument("first")
@click.argument("second")
@click.option("-o", "--out", default=None)
@click.pass_obj
@handle_errors
def intersect(controller, crystal, first, second, out):
    """B_I & B_J for two generator lists, e.g. "1,2" "2,1" """
    graph = controller.load(crystal)
    result = controller.intersect(graph, parse_generators(first), parse_generators(second))
    emit_json(result.to_dict(), out)


@cli.command()
@click.argument("suites", nargs=-1)
@click.option("--crystal", default=None, help="crystal document to verify")
@click.option("--type", "cartan_type", default="A")
@click.option("--rank", type=int, default=2)
@click.option("--hw", default="2,1")
@click.option("--w", "top", default="all", help="word of w bounding the atom suites, or all")
@click.option("--force", is_flag=True, help="allow sweeps above the exhaustive cap")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
@handle_errors
def verify(controller, suites, crystal, cartan_type, rank, hw, top, force, as_json):
    """Run verification suites or statements, e.g. verify theoremC (default: all)"""
    names = list(suites) if suites and suites != ("all",) else None
    if names:
        try:
            resolve_suites(names)
        except KeyError as e:
            raise click.UsageError(e.args[0])
    top = None if top == "all" else parse_word(top)
    graph = controller.load(crystal) if crystal else controller.build(cartan_type, rank, hw)
    results = run_suites(graph, names, force=force, top=top)

    if as_json:
        emit_json([r.to_dict() for r in results])
    else:
        report_view.banner(f"Verifying {len(graph)}-element crystal")
        click.echo(report_view.suite_table(results))
        for r in results:
            for failure in r.failures:
                report_view.failure(f"{r.name}: {failure}")

    if not all(r.passed for r in results):
        sys.exit(EXIT_VERIFY_FAILED)


@cli.command("export-dot")
@click.argument("crystal")
@click.option("--subset", "spec", default=None, help="subset to fill")
@click.option("-o", "--out", default=None)
@click.pass_obj
@handle_errors
def export_dot(controller, crystal, spec, out):
    """Graphviz DOT text for a crystal"""
    graph = controller.load(crystal)
    chosen = controller.subset(graph, spec) if spec else None
    text = controller.export_dot(graph, chosen)
    if out:
        Storage().write_text(out, text)
        report_view.success(f"Wrote {out}")
    else:
        click.echo(text, nl=False)


def main():
    """Main function - entry point"""
    cli()


if __name__ == "__main__":
    main()
