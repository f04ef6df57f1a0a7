"""Command line interface."""

from __future__ import annotations

import json
import sys

import click


@click.group()
def main() -> None:
    """Property graph middleware: schema validation, GraphQL synthesis, transpilation."""


def _load_schema(schema_file):
    from .schema import SchemaFormatError, parse_schema_json

    try:
        return parse_schema_json(schema_file.read())
    except SchemaFormatError as err:
        raise click.ClickException(str(err))


def _validated_schema(schema_file):
    from .validation import validate as check

    schema = _load_schema(schema_file)
    violations = check(schema)
    if violations:
        for v in violations:
            click.echo(f"{v.rule} {v.subject}: {v.message}", err=True)
        raise SystemExit(1)
    return schema


@main.command()
@click.option("--host", default="127.0.0.1", envvar="GRAPHFORGE_HOST", show_default=True,
              help="Interface to bind.")
@click.option("--port", default=8000, type=int, envvar="GRAPHFORGE_PORT", show_default=True,
              help="Port to bind.")
@click.option("--data-dir", default=None, envvar="GRAPHFORGE_DATA_DIR",
              type=click.Path(file_okay=False), help="Directory for persisted schemas and stores.")
def serve(host: str, port: int, data_dir: str | None) -> None:
    """Run the REST service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(data_dir), host=host, port=port)


@main.command("validate")
@click.argument("schema_file", type=click.File("rb"))
def validate_command(schema_file) -> None:
    """Validate a schema document; exits non-zero when rules are violated."""
    schema = _validated_schema(schema_file)
    click.echo(f"ok: {len(schema.vertices)} vertex types, {len(schema.edges)} edge types")


@main.command("sdl")
@click.argument("schema_file", type=click.File("rb"))
def sdl_command(schema_file) -> None:
    """Print the GraphQL schema synthesized from a schema document."""
    from .synth import synthesize

    schema = _validated_schema(schema_file)
    click.echo(synthesize(schema).sdl, nl=False)


@main.command("transpile")
@click.argument("schema_file", type=click.File("rb"))
@click.argument("query")
@click.option("--flavor", type=click.Choice(["python", "groovy"]), default="python",
              show_default=True)
@click.option("--variables", default=None, help="Request variables as a JSON object.")
@click.option("--counters", is_flag=True, help="Also print complexity counters.")
def transpile_command(schema_file, query: str, flavor: str, variables: str | None,
                      counters: bool) -> None:
    """Compile one GraphQL request into a Gremlin traversal."""
    from .frontend import RequestValidationError
    from .gql.lexer import GraphQLSyntaxError
    from .ir import serialize
    from .synth import synthesize
    from .transpiler import transpile_request

    schema = _validated_schema(schema_file)
    doc = synthesize(schema)
    bound = json.loads(variables) if variables else None
    try:
        result = transpile_request(query, doc, bound)
    except (GraphQLSyntaxError, RequestValidationError) as err:
        raise click.ClickException(str(err))
    click.echo(serialize(result.steps, flavor))
    if counters:
        c = result.counters
        click.echo(f"S={c.s} W={c.w} K={c.k} D={c.d} fieldVisits={c.field_visits}", err=True)


@main.command("bench")
@click.option("--data-dir", default=None, type=click.Path(file_okay=False),
              help="Where the review dataset files live (generated when absent).")
@click.option("--output", default=None, type=click.Path(dir_okay=False),
              help="Write the full report as JSON.")
def bench_command(data_dir: str | None, output: str | None) -> None:
    """Run the performance measurements and print a report."""
    from .bench import format_report, run_bench

    report = run_bench(data_dir)
    click.echo(format_report(report))
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2)
            handle.write("\n")


if __name__ == "__main__":
    sys.exit(main())
