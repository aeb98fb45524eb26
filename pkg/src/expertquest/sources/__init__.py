from .base import (
    Abstract,
    AuthFailure,
    Backend,
    BackendUnreachable,
    CodeHostUser,
    MalformedDocument,
    Post,
    RateLimited,
    ResourceNotFound,
    SourceError,
    UserNotFound,
)
from .fixture import FixtureBackend
from .live import LiveBackend

__all__ = [
    "Abstract",
    "AuthFailure",
    "Backend",
    "BackendUnreachable",
    "CodeHostUser",
    "FixtureBackend",
    "LiveBackend",
    "MalformedDocument",
    "Post",
    "RateLimited",
    "ResourceNotFound",
    "SourceError",
    "UserNotFound",
]
