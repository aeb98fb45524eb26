"""HTTP facade over the search workflow.

Endpoints:

    GET  /api/languages   configured display names, config order
    POST /api/search      run a search, return ranked candidates
    GET  /healthz         liveness, version, backend kind

Searches are synchronous: the response is sent when the search finishes,
bounded by a configurable server-side timeout. Each request's pipeline
state is private, so concurrent identical searches return identical
result lists.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeoutError

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import __version__
from .config import language_by_name
from .search import (
    CandidateProfile,
    DEFAULT_PARALLELISM,
    DEFAULT_SEARCH_COUNT,
    DEFAULT_TIMELINE_COUNT,
    LanguageEntry,
    SearchFailed,
    SearchParams,
    find_experts,
)
from .sources.base import Backend, RateLimited, SourceError
from .textpipe import DEFAULT_VECTOR_SIZE

logger = logging.getLogger(__name__)

MAX_COUNT = 100
DEFAULT_SEARCH_TIMEOUT = 300.0


class SearchRequest(BaseModel):
    language: str
    search_count: int | None = None
    timeline_count: int | None = None


class CandidateOut(BaseModel):
    handle: str
    display_name: str
    twitter_followers: int
    github_followers: int
    bytes_of_code: int
    cosine: float
    mentions_percent: int
    microblog_profile_url: str
    codehost_profile_url: str


class SearchResponse(BaseModel):
    language: str
    elapsed_ms: int
    results: list[CandidateOut]


def candidate_projection(candidate: CandidateProfile) -> dict:
    """Response shape for one candidate; the cosine also appears as an
    integer percentage for the UI's progress bar."""
    payload = candidate.to_dict()
    payload["mentions_percent"] = round(candidate.cosine * 100)
    return payload


def search_response_body(
    language: str, candidates: list[CandidateProfile], elapsed_ms: int
) -> dict:
    return {
        "language": language,
        "elapsed_ms": elapsed_ms,
        "results": [candidate_projection(c) for c in candidates],
    }


def create_app(
    backend: Backend,
    languages: list[LanguageEntry],
    *,
    vector_size: int = DEFAULT_VECTOR_SIZE,
    parallelism: int = DEFAULT_PARALLELISM,
    search_timeout: float = DEFAULT_SEARCH_TIMEOUT,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    app = FastAPI(title="expertquest", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins if cors_origins is not None else ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    # bounds the wait for a search, not the number of concurrent searches
    executor = ThreadPoolExecutor(thread_name_prefix="search")

    @app.get("/api/languages")
    def list_languages() -> list[str]:
        return [entry.display_name for entry in languages]

    @app.post("/api/search", response_model=SearchResponse)
    def search(request: SearchRequest) -> dict:
        entry = language_by_name(languages, request.language)
        if entry is None:
            raise HTTPException(400, f"unknown language {request.language!r}")
        search_count = (
            request.search_count if request.search_count is not None else DEFAULT_SEARCH_COUNT
        )
        timeline_count = (
            request.timeline_count if request.timeline_count is not None else DEFAULT_TIMELINE_COUNT
        )
        for name, value in (("search_count", search_count), ("timeline_count", timeline_count)):
            if not 1 <= value <= MAX_COUNT:
                raise HTTPException(400, f"{name} must be within [1, {MAX_COUNT}]")
        params = SearchParams(
            language=entry,
            search_count=search_count,
            timeline_count=timeline_count,
            vector_size=vector_size,
        )
        started = time.perf_counter()
        future = executor.submit(find_experts, params, backend, parallelism=parallelism)
        try:
            candidates = future.result(timeout=search_timeout)
        except FutureTimeoutError:
            future.cancel()
            raise HTTPException(502, f"search timed out after {search_timeout:.0f}s")
        except (SearchFailed, RateLimited, SourceError) as exc:
            cause = exc.__cause__ if isinstance(exc, SearchFailed) else exc
            if isinstance(cause, RateLimited):
                headers = {}
                if cause.retry_after is not None:
                    headers["Retry-After"] = str(max(1, int(cause.retry_after)))
                raise HTTPException(429, f"upstream rate limit: {exc}", headers=headers)
            raise HTTPException(502, f"search failed: {exc}")
        elapsed_ms = int((time.perf_counter() - started) * 1000)
        return search_response_body(entry.display_name, candidates, elapsed_ms)

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "version": __version__, "backend": backend.kind}

    return app
