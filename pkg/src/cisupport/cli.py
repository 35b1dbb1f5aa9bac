"""Command line entry point: run DSL files, the golden examples, or a quick self test."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import lab
from .cache import NullCache, ResultCache, resolve_cache_dir
from .config import EngineConfig
from .dsl import parse_program
from .errors import CISupportError, ParseError
from .errors import NameError as UndeclaredName
from .runner import Report, _check_result, _config_echo, render_report, run_program

EXIT_OK, EXIT_QUERY_ERROR, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2, 3


def _engine_options(f):
    opts = [
        click.option("--field", default="QQ", show_default=True, help="QQ or Fp:<p>"),
        click.option("--order", type=click.Choice(["grevlex", "lex"]), default="grevlex", show_default=True),
        click.option("--res-bound", type=click.IntRange(min=2), default=None, help="resolution length bound"),
        click.option("--ann-window", type=click.IntRange(min=1), default=2, show_default=True),
        click.option("--seed", type=int, default=0, show_default=True),
        click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True),
        click.option("--cache-dir", type=click.Path(file_okay=False), default=None),
        click.option("--no-cache", is_flag=True, default=False),
        click.option("--no-timing", is_flag=True, default=False, help="zero all timing fields"),
    ]
    for o in reversed(opts):
        f = o(f)
    return f


def _config(field, order, res_bound, ann_window, seed) -> EngineConfig:
    try:
        return EngineConfig(field=field, order=order, res_bound=res_bound, ann_window=ann_window, seed=seed)
    except (ValueError, CISupportError) as exc:
        raise click.UsageError(str(exc)) from exc


def _cache(cache_dir, no_cache):
    return NullCache() if no_cache else ResultCache(resolve_cache_dir(cache_dir))


def _emit(report: Report, fmt: str, no_timing: bool) -> int:
    click.echo(render_report(report, fmt, timing=not no_timing).decode("utf-8"), nl=False)
    return report.exit_code


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Cohomological support varieties over graded complete intersections."""


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@_engine_options
def run(file, field, order, res_bound, ann_window, seed, fmt, cache_dir, no_cache, no_timing):
    """Parse and run a program file."""
    cfg = _config(field, order, res_bound, ann_window, seed)
    text = Path(file).read_text(encoding="utf-8")
    try:
        program = parse_program(text)
    except (ParseError, UndeclaredName) as exc:
        click.echo(f"{file}: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    sys.exit(_emit(run_program(program, cfg, _cache(cache_dir, no_cache)), fmt, no_timing))


def _examples(which, field, order, res_bound, ann_window, seed, fmt, cache_dir, no_cache, no_timing):
    cfg = _config(field, order, res_bound, ann_window, seed)
    labels = [w.strip().upper() for w in which.split(",") if w.strip()] if which else list(lab.GOLDEN)
    bad = [w for w in labels if w not in lab.GOLDEN]
    if bad:
        raise click.UsageError(f"unknown example(s): {', '.join(bad)}")
    report = Report(_config_echo(cfg))
    for w in labels:
        report.results.append(_check_result(f"examples({w});", lab.GOLDEN[w](cfg)))
    sys.exit(_emit(report, fmt, no_timing))


@cli.command()
@click.option("--only", "which", default="", help="comma separated labels among A,B,C,D,E")
@_engine_options
def examples(**kw):
    """Reproduce the five golden examples and compare with the expected outputs."""
    _examples(**kw)


@cli.command(name="paper", hidden=True)
@click.option("--only", "which", default="")
@_engine_options
def paper(**kw):
    _examples(**kw)


SELFTEST_PROGRAM = """
ring Q = QQ[x, y];
ci R = Q/(x*y);
module M = R/(x + y);
module N = R/(x);
support(M);
support(N);
check_join(M, N);
check_dim(M, N);
probe(M, N);
betti(N, 4);
"""


@cli.command()
@_engine_options
def selftest(field, order, res_bound, ann_window, seed, fmt, cache_dir, no_cache, no_timing):
    """Quick end-to-end run: a small program plus golden examples A and E."""
    cfg = _config(field, order, res_bound, ann_window, seed)
    report = run_program(parse_program(SELFTEST_PROGRAM), cfg, NullCache())
    for w in ("A", "E"):
        report.results.append(_check_result(f"examples({w});", lab.GOLDEN[w](cfg)))
    sys.exit(_emit(report, fmt, no_timing))


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="cisupport", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
