"""HTTP backends for the three data sources.

All clients share one transport policy: up to 3 retries with exponential
backoff (1s, 2s, 4s) on transient transport failures and 5xx responses, no
retry on auth failures, and a per-host rate-limit gate — after a 429 no
request is sent to that host until the indicated retry time has passed.

Base URLs are configurable so tests can point every client at a local stub
server; the clock and sleep functions are injectable for the same reason.
"""

from __future__ import annotations

import logging
import threading
import time
from typing import Callable
from urllib.parse import quote

import httpx

from .base import (
    Abstract,
    AuthFailure,
    BackendUnreachable,
    CodeHostUser,
    MalformedDocument,
    Post,
    RateLimited,
    ResourceNotFound,
    SourceError,
    UserNotFound,
)

logger = logging.getLogger(__name__)

DEFAULT_TIMEOUT = 30.0
BACKOFF_SECONDS = (1.0, 2.0, 4.0)
DEFAULT_RETRY_AFTER = 60.0

DEFAULT_BASE_URLS = {
    "microblog": "https://api.twitter.com/1.1",
    "codehost": "https://api.github.com",
    "encyclopedia": "https://dbpedia.org",
}

MICROBLOG_PROFILE_BASE = "https://twitter.com/"


class _NotFound(Exception):
    """Internal signal: the host answered 404 for this path."""


class HttpTransport:
    """GET-JSON with retries, backoff, and a rate-limit gate for one host."""

    def __init__(
        self,
        base_url: str,
        *,
        token: str | None = None,
        timeout: float = DEFAULT_TIMEOUT,
        clock: Callable[[], float] = time.monotonic,
        sleep: Callable[[float], None] = time.sleep,
        client: httpx.Client | None = None,
    ):
        headers = {"Accept": "application/json"}
        if token:
            headers["Authorization"] = f"Bearer {token}"
        self._client = client or httpx.Client(
            base_url=base_url, headers=headers, timeout=timeout
        )
        self._clock = clock
        self._sleep = sleep
        self._lock = threading.Lock()
        self._blocked_until = 0.0

    def close(self) -> None:
        self._client.close()

    def _check_gate(self) -> None:
        with self._lock:
            remaining = self._blocked_until - self._clock()
        if remaining > 0:
            raise RateLimited(
                f"rate limited, retry in {remaining:.0f}s", retry_after=remaining
            )

    def _trip_gate(self, response: httpx.Response) -> RateLimited:
        header = response.headers.get("Retry-After")
        try:
            retry_after = float(header) if header is not None else DEFAULT_RETRY_AFTER
        except ValueError:
            retry_after = DEFAULT_RETRY_AFTER
        with self._lock:
            self._blocked_until = max(
                self._blocked_until, self._clock() + retry_after
            )
        return RateLimited(
            f"rate limited by {response.request.url.host}", retry_after=retry_after
        )

    def get_json(self, path: str, params: dict | None = None):
        self._check_gate()
        last_error: Exception | None = None
        for attempt in range(1 + len(BACKOFF_SECONDS)):
            if attempt > 0:
                self._sleep(BACKOFF_SECONDS[attempt - 1])
            try:
                response = self._client.get(path, params=params)
            except httpx.TransportError as exc:
                last_error = exc
                logger.warning("transport failure on %s (attempt %d): %s", path, attempt + 1, exc)
                continue
            if response.status_code == 429:
                raise self._trip_gate(response)
            if response.status_code in (401, 403):
                raise AuthFailure(f"auth failure ({response.status_code}) on {path}")
            if response.status_code == 404:
                raise _NotFound(path)
            if response.status_code >= 500:
                last_error = SourceError(f"server error {response.status_code} on {path}")
                logger.warning("server error %d on %s (attempt %d)", response.status_code, path, attempt + 1)
                continue
            if response.status_code != 200:
                raise SourceError(f"unexpected status {response.status_code} on {path}")
            try:
                return response.json()
            except ValueError as exc:
                raise MalformedDocument(f"non-JSON response from {path}") from exc
        raise BackendUnreachable(f"giving up on {path}: {last_error}") from last_error


class MicroblogClient:
    """Search and user-timeline calls against a Twitter-style JSON API."""

    def __init__(self, transport: HttpTransport):
        self._transport = transport

    @staticmethod
    def _post(status: dict) -> Post:
        try:
            user = status["user"]
            return Post(
                author_handle=user["screen_name"],
                author_display_name=user.get("name", user["screen_name"]),
                author_follower_count=int(user.get("followers_count", 0)),
                text=status["text"],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedDocument(f"bad status object: {exc}") from exc

    def search_posts(self, query: str, count: int) -> list[Post]:
        if count < 1:
            raise ValueError("count must be >= 1")
        try:
            data = self._transport.get_json(
                "/search/tweets.json",
                params={"q": query, "count": count, "result_type": "recent"},
            )
        except _NotFound as exc:
            raise MalformedDocument("search endpoint missing") from exc
        statuses = data.get("statuses")
        if not isinstance(statuses, list):
            raise MalformedDocument("search response lacks a statuses array")
        return [self._post(s) for s in statuses[:count]]

    def get_timeline(self, handle: str, count: int) -> list[Post]:
        if count < 1:
            raise ValueError("count must be >= 1")
        try:
            data = self._transport.get_json(
                "/statuses/user_timeline.json",
                params={"screen_name": handle, "count": count},
            )
        except _NotFound as exc:
            raise UserNotFound(f"no such microblog user {handle!r}") from exc
        if not isinstance(data, list):
            raise MalformedDocument("timeline response is not an array")
        return [self._post(s) for s in data[:count]]


class CodeHostClient:
    """User and repository calls against a GitHub-style JSON API.

    Repository objects are expected to embed their per-language byte map
    under a ``languages`` key, the shape the per-repo languages endpoint
    returns.
    """

    def __init__(self, transport: HttpTransport):
        self._transport = transport

    def get_user(self, handle: str) -> CodeHostUser | None:
        try:
            data = self._transport.get_json(f"/users/{quote(handle, safe='')}")
        except _NotFound:
            return None
        try:
            return CodeHostUser(
                handle=data["login"],
                follower_count=int(data.get("followers", 0)),
                profile_url=data.get("html_url", ""),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedDocument(f"bad user object for {handle!r}: {exc}") from exc

    def get_repo_language_bytes(self, handle: str, language: str) -> int:
        try:
            repos = self._transport.get_json(f"/users/{quote(handle, safe='')}/repos")
        except _NotFound as exc:
            raise UserNotFound(f"no such code-host user {handle!r}") from exc
        if not isinstance(repos, list):
            raise MalformedDocument("repo list response is not an array")
        total = 0
        for repo in repos:
            languages = repo.get("languages") or {}
            total += int(languages.get(language, 0))
        return total


ABSTRACT_PREDICATE = "http://dbpedia.org/ontology/abstract"


class EncyclopediaClient:
    """Abstract extraction from a Linked-Data JSON document service."""

    def __init__(
        self,
        transport: HttpTransport,
        resource_prefix: str = "http://dbpedia.org/resource/",
    ):
        self._transport = transport
        self._resource_prefix = resource_prefix

    def get_abstract(self, resource_id: str) -> Abstract:
        name = resource_id.replace(" ", "_")
        try:
            doc = self._transport.get_json(f"/data/{quote(name, safe='')}.json")
        except _NotFound as exc:
            raise ResourceNotFound(f"no such resource {resource_id!r}") from exc
        if not isinstance(doc, dict):
            raise MalformedDocument("linked-data document is not an object")
        properties = doc.get(self._resource_prefix + name)
        if properties is None:
            raise ResourceNotFound(
                f"document does not describe {resource_id!r}"
            )
        if not isinstance(properties, dict):
            raise MalformedDocument("resource properties are not an object")
        text = ""
        for entry in properties.get(ABSTRACT_PREDICATE, []):
            if not isinstance(entry, dict):
                raise MalformedDocument("abstract entry is not an object")
            if entry.get("lang") == "en":
                text = entry.get("value", "")
                break
        return Abstract(resource_id=resource_id, text=text)


class LiveBackend:
    """The five source operations over live HTTP services."""

    kind = "live"

    def __init__(
        self,
        microblog: MicroblogClient,
        codehost: CodeHostClient,
        encyclopedia: EncyclopediaClient,
    ):
        self._microblog = microblog
        self._codehost = codehost
        self._encyclopedia = encyclopedia

    @classmethod
    def from_config(
        cls,
        base_urls: dict[str, str] | None = None,
        credentials: dict[str, dict] | None = None,
        *,
        timeout: float = DEFAULT_TIMEOUT,
        clock: Callable[[], float] = time.monotonic,
        sleep: Callable[[float], None] = time.sleep,
    ) -> "LiveBackend":
        urls = dict(DEFAULT_BASE_URLS)
        urls.update(base_urls or {})
        creds = credentials or {}

        def transport(service: str) -> HttpTransport:
            return HttpTransport(
                urls[service],
                token=creds.get(service, {}).get("token"),
                timeout=timeout,
                clock=clock,
                sleep=sleep,
            )

        return cls(
            microblog=MicroblogClient(transport("microblog")),
            codehost=CodeHostClient(transport("codehost")),
            encyclopedia=EncyclopediaClient(transport("encyclopedia")),
        )

    def search_posts(self, query: str, count: int) -> list[Post]:
        return self._microblog.search_posts(query, count)

    def get_timeline(self, handle: str, count: int) -> list[Post]:
        return self._microblog.get_timeline(handle.lower(), count)

    def get_code_user(self, handle: str) -> CodeHostUser | None:
        return self._codehost.get_user(handle.lower())

    def get_repo_language_bytes(self, handle: str, language: str) -> int:
        return self._codehost.get_repo_language_bytes(handle.lower(), language)

    def get_abstract(self, resource_id: str) -> Abstract:
        return self._encyclopedia.get_abstract(resource_id)
