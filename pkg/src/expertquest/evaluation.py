"""Evaluation harness: expert classification, per-language precision/recall,
cross-run averaging, and multi-config sweeps.

A candidate counts as a full expert only when they hold repository code in
the queried language (bytes_of_code > 0). Per language:

    precision = experts found / candidates found   (0 when no candidates)
    recall    = experts found / microblog search count

Run averages are arithmetic means over ALL configured languages, so
languages with zero candidates contribute zeros. Ratios are kept at full
precision internally; reports round to 3 decimals for display only.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .search import CandidateProfile, LanguageEntry, SearchFailed, SearchParams, find_experts
from .sources.base import Backend
from .textpipe import DEFAULT_VECTOR_SIZE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalRow:
    language: str
    candidates_found: int
    experts_found: int
    precision: float
    recall: float


@dataclass(frozen=True)
class RunSummary:
    search_count: int
    timeline_count: int
    rows: tuple[EvalRow, ...]
    average_precision: float
    average_recall: float
    average_cosine: float


def is_expert(candidate: CandidateProfile) -> bool:
    """Full expert: holds repository code in the queried language."""
    return candidate.bytes_of_code > 0


def evaluate_language(
    language: str, candidates: list[CandidateProfile], search_count: int
) -> EvalRow:
    if search_count < 1:
        raise ValueError("search_count must be >= 1")
    found = len(candidates)
    experts = sum(1 for c in candidates if is_expert(c))
    return EvalRow(
        language=language,
        candidates_found=found,
        experts_found=experts,
        precision=experts / found if found else 0.0,
        recall=experts / search_count,
    )


def row_from_counts(
    language: str, candidates_found: int, experts_found: int, search_count: int
) -> EvalRow:
    """Rebuild a row from recorded counts (for replaying past runs)."""
    if experts_found > candidates_found:
        raise ValueError(f"{language}: experts {experts_found} > candidates {candidates_found}")
    return EvalRow(
        language=language,
        candidates_found=candidates_found,
        experts_found=experts_found,
        precision=experts_found / candidates_found if candidates_found else 0.0,
        recall=experts_found / search_count,
    )


def summarize_run(
    search_count: int,
    timeline_count: int,
    rows: list[EvalRow],
    cosines: list[float] | None = None,
) -> RunSummary:
    """Arithmetic means over all given rows (one per configured language)."""
    n = len(rows)
    cosines = cosines or []
    return RunSummary(
        search_count=search_count,
        timeline_count=timeline_count,
        rows=tuple(rows),
        average_precision=sum(r.precision for r in rows) / n if n else 0.0,
        average_recall=sum(r.recall for r in rows) / n if n else 0.0,
        average_cosine=sum(cosines) / len(cosines) if cosines else 0.0,
    )


def run_sweep(
    backend: Backend,
    languages: list[LanguageEntry],
    run_configs: list[tuple[int, int]],
    *,
    vector_size: int = DEFAULT_VECTOR_SIZE,
    parallelism: int = 4,
    out_dir: str | Path | None = None,
) -> list[RunSummary]:
    """Search every configured language under each (search_count,
    timeline_count) config; optionally write a report pair per run.

    A language whose search fails outright contributes a zero row.
    """
    summaries = []
    for search_count, timeline_count in run_configs:
        rows: list[EvalRow] = []
        cosines: list[float] = []
        for language in languages:
            params = SearchParams(
                language=language,
                search_count=search_count,
                timeline_count=timeline_count,
                vector_size=vector_size,
            )
            try:
                candidates = find_experts(params, backend, parallelism=parallelism)
            except SearchFailed as exc:
                logger.warning("search failed for %s: %s", language.display_name, exc)
                candidates = []
            rows.append(evaluate_language(language.display_name, candidates, search_count))
            cosines.extend(c.cosine for c in candidates)
        summary = summarize_run(search_count, timeline_count, rows, cosines)
        summaries.append(summary)
        if out_dir is not None:
            write_reports(summary, out_dir)
    return summaries


def load_recorded_counts(path: str | Path) -> list[tuple[str, int, int]]:
    """Read recorded per-language counts: CSV columns
    language,candidates,experts."""
    rows = []
    with open(path, newline="", encoding="utf-8") as handle:
        for record in csv.DictReader(handle):
            rows.append(
                (record["language"], int(record["candidates"]), int(record["experts"]))
            )
    return rows


def replay_rows(
    recorded: list[tuple[str, int, int]],
    search_count: int,
    languages: list[str],
) -> list[EvalRow]:
    """Rows for every configured language: recorded counts where present,
    zeros elsewhere."""
    by_language = {name: (c, e) for name, c, e in recorded}
    unknown = set(by_language) - set(languages)
    if unknown:
        raise ValueError(f"recorded counts for unconfigured languages: {sorted(unknown)}")
    return [
        row_from_counts(name, *by_language.get(name, (0, 0)), search_count)
        for name in languages
    ]


def write_reports(summary: RunSummary, out_dir: str | Path) -> tuple[Path, Path]:
    """Write the per-run CSV (3-decimal display) and JSON summary
    (full precision)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"run_{summary.search_count}_{summary.timeline_count}"
    csv_path = out / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["language", "candidates", "experts", "precision", "recall"])
        for row in summary.rows:
            writer.writerow(
                [
                    row.language,
                    row.candidates_found,
                    row.experts_found,
                    f"{row.precision:.3f}",
                    f"{row.recall:.3f}",
                ]
            )
    json_path = out / f"{stem}_summary.json"
    json_path.write_text(
        json.dumps(
            {
                "search_count": summary.search_count,
                "timeline_count": summary.timeline_count,
                "avg_precision": summary.average_precision,
                "avg_recall": summary.average_recall,
                "avg_cosine": summary.average_cosine,
            },
            indent=2,
        )
        + "\n",
        encoding="utf-8",
    )
    return csv_path, json_path
