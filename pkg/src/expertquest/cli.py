"""Command-line entry points: search, dump, eval, vectorize, serve.

Every option resolves as flag > EXPERTQUEST_* environment variable >
config-file default. Exit codes: 0 success, 1 runtime failure, 2 usage
error. Fixture-mode commands never open a network connection.
"""

from __future__ import annotations

import json
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import quote

import click

from .config import (
    canonical_json,
    demo_corpus_path,
    language_by_name,
    load_credentials,
    load_languages,
)
from .evaluation import (
    load_recorded_counts,
    replay_rows,
    run_sweep,
    summarize_run,
    write_reports,
)
from .search import (
    DEFAULT_PARALLELISM,
    DEFAULT_SEARCH_COUNT,
    DEFAULT_TIMELINE_COUNT,
    SearchFailed,
    SearchParams,
    find_experts,
)
from .service import candidate_projection, create_app, search_response_body
from .sources import FixtureBackend, LiveBackend
from .textpipe import DEFAULT_VECTOR_SIZE, cosine_similarity, vectorize

logger = logging.getLogger(__name__)

# the three standard sweep configurations (search count : timeline count)
DEFAULT_RUN_CONFIGS = "10:5,30:15,50:25"


@dataclass
class CliConfig:
    backend_kind: str
    fixtures: str | None
    credentials: str | None
    languages_path: str | None
    vector_size: int
    parallelism: int

    def make_backend(self):
        if self.backend_kind == "fixture":
            if not self.fixtures:
                raise click.UsageError("--fixtures is required with --backend fixture")
            root = demo_corpus_path() if self.fixtures == "demo" else Path(self.fixtures)
            return FixtureBackend(root)
        if not self.credentials:
            raise click.UsageError("--credentials is required with --backend live")
        return LiveBackend.from_config(credentials=load_credentials(self.credentials))

    def load_languages(self):
        return load_languages(self.languages_path)


_CONFIG_KEYS = ("backend", "fixtures", "credentials", "languages", "vector_size", "parallelism")


def _apply_config_file(ctx: click.Context, config_path: str | None) -> None:
    """Fill in values from a JSON config file for params neither flag nor
    environment supplied."""
    if not config_path:
        return
    try:
        defaults = json.loads(Path(config_path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read config file {config_path}: {exc}")
    for key in _CONFIG_KEYS:
        if key in defaults:
            source = ctx.get_parameter_source(key)
            if source is click.core.ParameterSource.DEFAULT:
                ctx.params[key] = defaults[key]


@click.group()
@click.option("--backend", type=click.Choice(["live", "fixture"]), default="fixture",
              envvar="EXPERTQUEST_BACKEND", show_default=True,
              help="Data source: recorded corpus or live HTTP APIs.")
@click.option("--fixtures", envvar="EXPERTQUEST_FIXTURES", metavar="PATH",
              help="Fixture corpus directory ('demo' for the bundled corpus).")
@click.option("--credentials", envvar="EXPERTQUEST_CREDENTIALS", metavar="PATH",
              help="JSON credentials file for live backends.")
@click.option("--languages", envvar="EXPERTQUEST_LANGUAGES", metavar="PATH",
              help="Language config file (default: bundled Tiobe top-50+ list).")
@click.option("--vector-size", type=int, default=DEFAULT_VECTOR_SIZE,
              envvar="EXPERTQUEST_VECTOR_SIZE", show_default=True,
              help="Feature vector bucket count.")
@click.option("--parallelism", type=int, default=DEFAULT_PARALLELISM,
              envvar="EXPERTQUEST_PARALLELISM", show_default=True,
              help="Concurrent candidate scorers per search.")
@click.option("--config", envvar="EXPERTQUEST_CONFIG", metavar="PATH",
              help="JSON file with defaults for the options above.")
@click.pass_context
def main(ctx, backend, fixtures, credentials, languages, vector_size, parallelism, config):
    """Find programming-language experts across social and code services."""
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    _apply_config_file(ctx, config)
    p = ctx.params
    if p["vector_size"] < 1 or p["parallelism"] < 1:
        raise click.UsageError("--vector-size and --parallelism must be >= 1")
    ctx.obj = CliConfig(
        backend_kind=p["backend"],
        fixtures=p["fixtures"],
        credentials=p["credentials"],
        languages_path=p["languages"],
        vector_size=p["vector_size"],
        parallelism=p["parallelism"],
    )


def _resolve_language(cfg: CliConfig, name: str):
    languages = cfg.load_languages()
    entry = language_by_name(languages, name)
    if entry is None:
        raise click.UsageError(f"unknown language {name!r}; see `expertquest languages`")
    return entry


def _format_table(candidates) -> str:
    headers = ["rank", "name", "handle", "bytes of code", "code-host followers",
               "mentions %", "microblog followers", "links"]
    rows = []
    for position, c in enumerate(candidates, start=1):
        projection = candidate_projection(c)
        rows.append([
            str(position),
            c.display_name,
            c.handle,
            str(c.bytes_of_code),
            str(c.github_followers),
            f"{projection['mentions_percent']}%",
            str(c.twitter_followers),
            f"{c.microblog_profile_url} {c.codehost_profile_url}",
        ])
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)


@main.command()
@click.argument("language")
@click.option("--search-count", type=int, default=DEFAULT_SEARCH_COUNT,
              envvar="EXPERTQUEST_SEARCH_COUNT", show_default=True)
@click.option("--timeline-count", type=int, default=DEFAULT_TIMELINE_COUNT,
              envvar="EXPERTQUEST_TIMELINE_COUNT", show_default=True)
@click.option("--format", "output_format", type=click.Choice(["table", "json"]),
              default="table", envvar="EXPERTQUEST_FORMAT", show_default=True)
@click.pass_obj
def search(cfg: CliConfig, language, search_count, timeline_count, output_format):
    """Search one language and print the ranked candidates."""
    entry = _resolve_language(cfg, language)
    backend = cfg.make_backend()
    params = SearchParams(
        language=entry,
        search_count=search_count,
        timeline_count=timeline_count,
        vector_size=cfg.vector_size,
    )
    started = time.perf_counter()
    try:
        candidates = find_experts(params, backend, parallelism=cfg.parallelism)
    except SearchFailed as exc:
        raise click.ClickException(str(exc))
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    if output_format == "json":
        body = search_response_body(entry.display_name, candidates, elapsed_ms)
        click.echo(json.dumps(body, indent=2, ensure_ascii=False))
    elif not candidates:
        click.echo(f"no candidates found for {entry.display_name}")
    else:
        click.echo(_format_table(candidates))


@main.command()
@click.pass_obj
def languages(cfg: CliConfig):
    """List the configured language names."""
    for entry in cfg.load_languages():
        click.echo(entry.display_name)


@main.command()
@click.option("--search-count", type=int, default=DEFAULT_SEARCH_COUNT,
              envvar="EXPERTQUEST_SEARCH_COUNT", show_default=True)
@click.option("--timeline-count", type=int, default=DEFAULT_TIMELINE_COUNT,
              envvar="EXPERTQUEST_TIMELINE_COUNT", show_default=True)
@click.option("--out", required=True, envvar="EXPERTQUEST_OUT", metavar="DIR",
              help="Directory for the per-language result files.")
@click.pass_obj
def dump(cfg: CliConfig, search_count, timeline_count, out):
    """Run every configured language and write one JSON file per language."""
    backend = cfg.make_backend()
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for entry in cfg.load_languages():
        params = SearchParams(
            language=entry,
            search_count=search_count,
            timeline_count=timeline_count,
            vector_size=cfg.vector_size,
        )
        try:
            candidates = find_experts(params, backend, parallelism=cfg.parallelism)
        except SearchFailed as exc:
            logger.warning("search failed for %s: %s", entry.display_name, exc)
            candidates = []
        path = out_dir / f"{quote(entry.display_name, safe='')}.json"
        path.write_text(
            canonical_json([c.to_dict() for c in candidates]), encoding="utf-8"
        )
    click.echo(f"wrote {len(cfg.load_languages())} files to {out_dir}")


def _parse_run_configs(raw: str) -> list[tuple[int, int]]:
    configs = []
    for part in raw.split(","):
        try:
            search_count, timeline_count = part.strip().split(":")
            configs.append((int(search_count), int(timeline_count)))
        except ValueError:
            raise click.UsageError(
                f"bad run config {part!r}; expected SEARCH:TIMELINE pairs like {DEFAULT_RUN_CONFIGS!r}"
            )
    return configs


@main.command(name="eval")
@click.option("--runs", default=DEFAULT_RUN_CONFIGS, show_default=True,
              envvar="EXPERTQUEST_RUNS",
              help="Comma-separated SEARCH:TIMELINE count pairs.")
@click.option("--out", required=True, envvar="EXPERTQUEST_OUT", metavar="DIR",
              help="Directory for the CSV/JSON report pairs.")
@click.option("--replay", envvar="EXPERTQUEST_REPLAY", metavar="CSV",
              help="Replay recorded language,candidates,experts counts instead of searching.")
@click.option("--search-count", type=int, default=None,
              envvar="EXPERTQUEST_SEARCH_COUNT",
              help="Search count the replayed counts were recorded with.")
@click.option("--timeline-count", type=int, default=None,
              envvar="EXPERTQUEST_TIMELINE_COUNT",
              help="Timeline count the replayed counts were recorded with.")
@click.pass_obj
def eval_command(cfg: CliConfig, runs, out, replay, search_count, timeline_count):
    """Precision/recall reports, either from fresh searches or replayed counts."""
    language_names = [e.display_name for e in cfg.load_languages()]
    if replay:
        if not search_count:
            raise click.UsageError("--replay requires --search-count")
        rows = replay_rows(load_recorded_counts(replay), search_count, language_names)
        summary = summarize_run(search_count, timeline_count or 0, rows)
        write_reports(summary, out)
        click.echo(
            f"replayed {replay}: avg precision {summary.average_precision:.9f}, "
            f"avg recall {summary.average_recall:.9f}"
        )
        return
    backend = cfg.make_backend()
    summaries = run_sweep(
        backend,
        cfg.load_languages(),
        _parse_run_configs(runs),
        vector_size=cfg.vector_size,
        parallelism=cfg.parallelism,
        out_dir=out,
    )
    for summary in summaries:
        click.echo(
            f"run {summary.search_count}:{summary.timeline_count} — "
            f"avg precision {summary.average_precision:.9f}, "
            f"avg recall {summary.average_recall:.9f}, "
            f"avg cosine {summary.average_cosine:.9f}"
        )


@main.command(name="vectorize")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def vectorize_command(cfg: CliConfig, path):
    """Vectorize a text file and print the counts, token total, and timing."""
    text = Path(path).read_text(encoding="utf-8")
    started = time.perf_counter()
    vector = vectorize(text, cfg.vector_size)
    elapsed = time.perf_counter() - started
    click.echo(" ".join(str(count) for count in vector.counts))
    click.echo(f"retained tokens: {sum(vector.counts)}")
    click.echo(f"wall time: {elapsed:.3f}s")


@main.command(name="cosine")
@click.argument("path_a", type=click.Path(exists=True, dir_okay=False))
@click.argument("path_b", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def cosine_command(cfg: CliConfig, path_a, path_b):
    """Cosine similarity of two text files run through the pipeline."""
    vector_a = vectorize(Path(path_a).read_text(encoding="utf-8"), cfg.vector_size)
    vector_b = vectorize(Path(path_b).read_text(encoding="utf-8"), cfg.vector_size)
    click.echo(f"{cosine_similarity(vector_a, vector_b):.6f}")


@main.command()
@click.option("--bind", default="127.0.0.1:8000", envvar="EXPERTQUEST_BIND",
              show_default=True, metavar="HOST:PORT")
@click.option("--search-timeout", type=float, default=300.0,
              envvar="EXPERTQUEST_SEARCH_TIMEOUT", show_default=True,
              help="Server-side bound on one search, seconds.")
@click.option("--cors-origin", "cors_origins", multiple=True,
              envvar="EXPERTQUEST_CORS_ORIGIN",
              help="Allowed UI origin (repeatable; default: all).")
@click.pass_obj
def serve(cfg: CliConfig, bind, search_timeout, cors_origins):
    """Run the HTTP service until terminated."""
    import uvicorn

    try:
        host, port_text = bind.rsplit(":", 1)
        port = int(port_text)
    except ValueError:
        raise click.UsageError(f"bad --bind {bind!r}; expected HOST:PORT")
    app = create_app(
        cfg.make_backend(),
        cfg.load_languages(),
        vector_size=cfg.vector_size,
        parallelism=cfg.parallelism,
        search_timeout=search_timeout,
        cors_origins=list(cors_origins) or None,
    )
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    except OSError as exc:
        raise click.ClickException(f"cannot bind {bind}: {exc}")
    except SystemExit as exc:
        if exc.code:
            raise click.ClickException(f"server failed to start on {bind}")


if __name__ == "__main__":
    sys.exit(main())
