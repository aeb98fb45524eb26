"""Shared contract for the three data sources.

A backend bundles microblog search/timelines, code-host users/repositories,
and encyclopedia abstracts behind one interface. Two implementations exist:
:class:`~expertquest.sources.fixture.FixtureBackend` (recorded JSON corpus,
deterministic, offline) and :class:`~expertquest.sources.live.LiveBackend`
(HTTP). Both satisfy the same post-conditions and raise the same errors, so
callers cannot tell them apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable


@dataclass(frozen=True)
class Post:
    """One microblog post with the author details the search needs."""

    author_handle: str
    author_display_name: str
    author_follower_count: int
    text: str


@dataclass(frozen=True)
class CodeHostUser:
    handle: str
    follower_count: int
    profile_url: str


@dataclass(frozen=True)
class Abstract:
    """Encyclopedia abstract text for one resource.

    ``text`` may be empty when the resource exists but carries no abstract;
    a missing resource raises ``ResourceNotFound`` instead.
    """

    resource_id: str
    text: str


class SourceError(Exception):
    """Base class for all data-source failures."""


class BackendUnreachable(SourceError):
    pass


class RateLimited(SourceError):
    def __init__(self, message: str, retry_after: float | None = None):
        super().__init__(message)
        self.retry_after = retry_after


class AuthFailure(SourceError):
    pass


class UserNotFound(SourceError):
    pass


class ResourceNotFound(SourceError):
    pass


class MalformedDocument(SourceError):
    pass


@runtime_checkable
class Backend(Protocol):
    """The five source operations the search workflow consumes."""

    kind: str

    def search_posts(self, query: str, count: int) -> list[Post]:
        """At most ``count`` posts matching ``query``, backend order."""

    def get_timeline(self, handle: str, count: int) -> list[Post]:
        """At most ``count`` most recent posts by ``handle``, newest first."""

    def get_code_user(self, handle: str) -> CodeHostUser | None:
        """The code-host account, or None when no such account exists."""

    def get_repo_language_bytes(self, handle: str, language: str) -> int:
        """Total bytes of ``language`` code across the user's repositories."""

    def get_abstract(self, resource_id: str) -> Abstract:
        """English abstract for an encyclopedia resource."""
