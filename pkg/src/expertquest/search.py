"""Search workflow: from a language query to a ranked list of candidates.

Steps: build the disambiguated query, search the microblog, keep authors
with a matching code-host account, fetch the language abstract once, score
each candidate's recent posts against the abstract, rank on four keys.

Per-candidate scoring may run concurrently; results are ranked after
collection so output order never depends on completion order. One failing
candidate is dropped with a warning instead of failing the whole search.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .sources.base import Abstract, Backend, CodeHostUser, Post, SourceError, UserNotFound
from .textpipe import DEFAULT_VECTOR_SIZE, cosine_similarity, vectorize

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_COUNT = 50
DEFAULT_TIMELINE_COUNT = 25
DEFAULT_PARALLELISM = 4
MICROBLOG_PROFILE_BASE = "https://twitter.com/"


class SearchFailed(Exception):
    """The microblog search or the abstract fetch failed outright."""


@dataclass(frozen=True)
class LanguageEntry:
    """A searchable language: UI name plus its disambiguated encyclopedia
    resource (e.g. "Java" vs "Java (programming language)")."""

    display_name: str
    resource_id: str

    def __post_init__(self) -> None:
        if not self.display_name or not self.resource_id:
            raise ValueError("display_name and resource_id must be non-empty")


@dataclass(frozen=True)
class SearchParams:
    language: LanguageEntry
    search_count: int = DEFAULT_SEARCH_COUNT
    timeline_count: int = DEFAULT_TIMELINE_COUNT
    vector_size: int = DEFAULT_VECTOR_SIZE

    def __post_init__(self) -> None:
        if self.search_count < 1 or self.timeline_count < 1 or self.vector_size < 1:
            raise ValueError("search_count, timeline_count and vector_size must be >= 1")


@dataclass(frozen=True)
class CandidateProfile:
    """One expert candidate with the four ranking signals."""

    handle: str
    display_name: str
    twitter_followers: int
    github_followers: int
    bytes_of_code: int
    cosine: float
    microblog_profile_url: str
    codehost_profile_url: str

    def to_dict(self) -> dict:
        return {
            "handle": self.handle,
            "display_name": self.display_name,
            "twitter_followers": self.twitter_followers,
            "github_followers": self.github_followers,
            "bytes_of_code": self.bytes_of_code,
            "cosine": self.cosine,
            "microblog_profile_url": self.microblog_profile_url,
            "codehost_profile_url": self.codehost_profile_url,
        }


def build_query(language: LanguageEntry) -> str:
    """Search query for a language; the "github" suffix steers homonyms
    (Python, Ruby, ...) toward programming results."""
    return f"{language.display_name} github"


def _match(posts: list[Post], backend: Backend) -> list[tuple[str, CodeHostUser, Post]]:
    """Unique post authors that also exist on the code host.

    Handles are compared lowercased; the first post seen for an author is
    kept as a fallback source of display name and follower count.
    """
    matched: list[tuple[str, CodeHostUser, Post]] = []
    seen: set[str] = set()
    for post in posts:
        handle = post.author_handle.lower()
        if handle in seen:
            continue
        seen.add(handle)
        user = backend.get_code_user(handle)
        if user is not None:
            matched.append((handle, user, post))
    return matched


def match_handles(posts: list[Post], backend: Backend) -> list[str]:
    """Deduplicated author handles that have a code-host account,
    first-seen order preserved."""
    return [handle for handle, _, _ in _match(posts, backend)]


def score_candidate(
    handle: str,
    language: LanguageEntry,
    params: SearchParams,
    abstract: Abstract,
    backend: Backend,
    *,
    code_user: CodeHostUser | None = None,
    seed_post: Post | None = None,
) -> CandidateProfile:
    """Build the full profile for one matched handle.

    The abstract is fetched once per search and passed in; this fetches the
    candidate's timeline and repository statistics only.
    """
    user = code_user if code_user is not None else backend.get_code_user(handle)
    if user is None:
        raise UserNotFound(f"{handle!r} has no code-host account")
    timeline = backend.get_timeline(handle, params.timeline_count)
    timeline_text = " ".join(post.text for post in timeline)
    cosine = cosine_similarity(
        vectorize(timeline_text, params.vector_size),
        vectorize(abstract.text, params.vector_size),
    )
    bytes_of_code = backend.get_repo_language_bytes(handle, language.display_name)
    source_post = timeline[0] if timeline else seed_post
    return CandidateProfile(
        handle=handle,
        display_name=source_post.author_display_name if source_post else handle,
        twitter_followers=source_post.author_follower_count if source_post else 0,
        github_followers=user.follower_count,
        bytes_of_code=bytes_of_code,
        cosine=cosine,
        microblog_profile_url=MICROBLOG_PROFILE_BASE + handle,
        codehost_profile_url=user.profile_url,
    )


def rank(candidates: list[CandidateProfile]) -> list[CandidateProfile]:
    """Best first: bytes of code, then code-host followers, then cosine,
    then microblog followers, all descending; ties broken by handle."""
    return sorted(
        candidates,
        key=lambda c: (
            -c.bytes_of_code,
            -c.github_followers,
            -c.cosine,
            -c.twitter_followers,
            c.handle,
        ),
    )


def find_experts(
    params: SearchParams,
    backend: Backend,
    *,
    parallelism: int = DEFAULT_PARALLELISM,
) -> list[CandidateProfile]:
    """Run the whole workflow for one language and return ranked candidates."""
    language = params.language
    try:
        posts = backend.search_posts(build_query(language), params.search_count)
    except SourceError as exc:
        raise SearchFailed(f"microblog search failed: {exc}") from exc
    matched = _match(posts, backend)
    if not matched:
        return []
    try:
        abstract = backend.get_abstract(language.resource_id)
    except SourceError as exc:
        raise SearchFailed(f"abstract fetch failed: {exc}") from exc

    def score(entry: tuple[str, CodeHostUser, Post]) -> CandidateProfile | None:
        handle, user, post = entry
        try:
            return score_candidate(
                handle, language, params, abstract, backend,
                code_user=user, seed_post=post,
            )
        except SourceError as exc:
            logger.warning("dropping candidate %r: %s", handle, exc)
            return None

    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as executor:
            scored = list(executor.map(score, matched))
    else:
        scored = [score(entry) for entry in matched]
    return rank([c for c in scored if c is not None])
