"""Text comparison pipeline: clean, filter to nouns/verbs, stem, feature-hash,
cosine.

Every function here is pure: each ``vectorize`` call owns a private
accumulator, so any number of searches can run the pipeline concurrently
without interfering with one another.
"""

from __future__ import annotations

import math
import re
import zlib
from dataclasses import dataclass

from .porter import porter_stem
from .tagging import DEFAULT_TAGGER, Tagger, TokenClass

__all__ = [
    "DEFAULT_VECTOR_SIZE",
    "FeatureVector",
    "clean_string",
    "classify_token",
    "cosine_similarity",
    "hash_index",
    "porter_stem",
    "preprocess",
    "vectorize",
]

DEFAULT_VECTOR_SIZE = 256

_NON_WORD = re.compile(r"[^\w\s]")


@dataclass(frozen=True)
class FeatureVector:
    """Fixed-size vector of token-occurrence counts.

    ``sum(counts)`` equals the number of tokens the preprocessing kept, so
    bucket collisions add counts together rather than losing them.
    """

    size: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("vector size must be >= 1")
        if len(self.counts) != self.size:
            raise ValueError(
                f"counts length {len(self.counts)} does not match size {self.size}"
            )
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")


def clean_string(text: str) -> str:
    """Lowercase, drop everything but letters/digits/whitespace, collapse
    whitespace runs."""
    stripped = _NON_WORD.sub("", text.lower()).replace("_", "")
    return " ".join(stripped.split())


def classify_token(word: str, tagger: Tagger | None = None) -> TokenClass:
    """Classify one cleaned token as noun, verb, or other."""
    return (tagger or DEFAULT_TAGGER).classify(word)


def preprocess(text: str, tagger: Tagger | None = None) -> list[str]:
    """Clean, keep nouns and verbs, stem. Order and duplicates preserved."""
    tagger = tagger or DEFAULT_TAGGER
    stems: dict[str, str] = {}
    out: list[str] = []
    for token in clean_string(text).split():
        if tagger.classify(token) is TokenClass.OTHER:
            continue
        stem = stems.get(token)
        if stem is None:
            stem = stems[token] = porter_stem(token)
        out.append(stem)
    return out


def hash_index(word: str, size: int) -> int:
    """Bucket index for a token: CRC-32 of its UTF-8 bytes, modulo size."""
    if size < 1:
        raise ValueError("vector size must be >= 1")
    return zlib.crc32(word.encode("utf-8")) % size


def vectorize(
    text: str,
    size: int = DEFAULT_VECTOR_SIZE,
    tagger: Tagger | None = None,
) -> FeatureVector:
    """Turn a string into a feature-hash count vector of length ``size``."""
    if size < 1:
        raise ValueError("vector size must be >= 1")
    counts = [0] * size
    for token in preprocess(text, tagger=tagger):
        counts[zlib.crc32(token.encode("utf-8")) % size] += 1
    return FeatureVector(size=size, counts=tuple(counts))


def cosine_similarity(a: FeatureVector, b: FeatureVector) -> float:
    """Cosine of two count vectors, in [0, 1]. Zero-norm input gives 0.0."""
    if a.size != b.size:
        raise ValueError(f"vector sizes differ: {a.size} != {b.size}")
    dot = sum(x * y for x, y in zip(a.counts, b.counts))
    norm_a = math.sqrt(sum(x * x for x in a.counts))
    norm_b = math.sqrt(sum(y * y for y in b.counts))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return min(1.0, max(0.0, dot / (norm_a * norm_b)))
