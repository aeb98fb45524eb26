"""Backend serving recorded API responses from a directory of JSON files.

Corpus layout (one file per API call, recordable from live runs):

    searches/<url-encoded-query>.json      array of Post objects
    timelines/<handle>.json                array of Post objects, newest first
    users/<handle>.json                    CodeHostUser object
    repos/<handle>.json                    array of {language: bytes} maps
    abstracts/<url-encoded-resource>.json  Abstract object

Handles used as filenames are lowercased; queries and resource ids are
percent-encoded with no safe characters. All files are UTF-8 JSON.
"""

from __future__ import annotations

import json
import threading
from collections import Counter
from pathlib import Path
from urllib.parse import quote

from .base import (
    Abstract,
    CodeHostUser,
    MalformedDocument,
    Post,
    ResourceNotFound,
    UserNotFound,
)


def _encode(name: str) -> str:
    return quote(name, safe="")


class FixtureBackend:
    """Deterministic, offline backend over a recorded corpus.

    The corpus is never written to; ``call_counts`` tracks how many times
    each operation ran, which tests use to bound the request complexity of
    a search.
    """

    kind = "fixture"

    def __init__(self, root: str | Path):
        self.root = Path(root)
        if not self.root.is_dir():
            raise FileNotFoundError(f"fixture corpus directory not found: {self.root}")
        self.call_counts: Counter[str] = Counter()
        self._lock = threading.Lock()

    def _record(self, op: str) -> None:
        with self._lock:
            self.call_counts[op] += 1

    def reset_counts(self) -> None:
        with self._lock:
            self.call_counts.clear()

    def _load(self, relative: str):
        path = self.root / relative
        if not path.is_file():
            return None
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise MalformedDocument(f"unreadable fixture file {path}: {exc}") from exc

    @staticmethod
    def _post(data: dict) -> Post:
        try:
            return Post(
                author_handle=data["author_handle"],
                author_display_name=data["author_display_name"],
                author_follower_count=int(data["author_follower_count"]),
                text=data["text"],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedDocument(f"bad post record: {exc}") from exc

    def search_posts(self, query: str, count: int) -> list[Post]:
        if count < 1:
            raise ValueError("count must be >= 1")
        self._record("search_posts")
        data = self._load(f"searches/{_encode(query)}.json")
        if data is None:
            return []
        return [self._post(item) for item in data[:count]]

    def get_timeline(self, handle: str, count: int) -> list[Post]:
        if count < 1:
            raise ValueError("count must be >= 1")
        self._record("get_timeline")
        data = self._load(f"timelines/{handle.lower()}.json")
        if data is None:
            raise UserNotFound(f"no recorded timeline for {handle!r}")
        return [self._post(item) for item in data[:count]]

    def get_code_user(self, handle: str) -> CodeHostUser | None:
        self._record("get_code_user")
        data = self._load(f"users/{handle.lower()}.json")
        if data is None:
            return None
        try:
            return CodeHostUser(
                handle=data["handle"],
                follower_count=int(data["follower_count"]),
                profile_url=data["profile_url"],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedDocument(f"bad user record for {handle!r}: {exc}") from exc

    def get_repo_language_bytes(self, handle: str, language: str) -> int:
        self._record("get_repo_language_bytes")
        if self._load(f"users/{handle.lower()}.json") is None:
            raise UserNotFound(f"no recorded user {handle!r}")
        repos = self._load(f"repos/{handle.lower()}.json") or []
        total = 0
        for repo in repos:
            total += int(repo.get(language, 0))
        return total

    def get_abstract(self, resource_id: str) -> Abstract:
        self._record("get_abstract")
        data = self._load(f"abstracts/{_encode(resource_id)}.json")
        if data is None:
            raise ResourceNotFound(f"no recorded abstract for {resource_id!r}")
        try:
            return Abstract(resource_id=data["resource_id"], text=data["text"])
        except KeyError as exc:
            raise MalformedDocument(
                f"bad abstract record for {resource_id!r}: {exc}"
            ) from exc
