"""Configuration loading: language list, service credentials, packaged data.

The language config is a JSON array of {"display": ..., "resource": ...}
objects; the shipped default covers the Tiobe top-50+ list with resource
ids disambiguated for the encyclopedia (searching "Java" there returns the
island, not the language).

Credentials live in a JSON file keyed by service ("microblog", "codehost",
"encyclopedia"), each value an object of string fields (e.g. {"token":
...}); they are never read from source code.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .search import LanguageEntry

def packaged_data_path(name: str = "") -> Path:
    path = resources.files("expertquest") / "data"
    return Path(str(path / name if name else path))


def demo_corpus_path() -> Path:
    """Location of the demo fixture corpus shipped with the package."""
    return packaged_data_path("demo_corpus")


def load_languages(path: str | Path | None = None) -> list[LanguageEntry]:
    """Language entries from a config file, or the shipped default list."""
    if path is None:
        raw = packaged_data_path("languages.json").read_text(encoding="utf-8")
    else:
        raw = Path(path).read_text(encoding="utf-8")
    data = json.loads(raw)
    entries = [LanguageEntry(item["display"], item["resource"]) for item in data]
    names = [e.display_name for e in entries]
    if len(set(names)) != len(names):
        raise ValueError("duplicate display names in language config")
    return entries


def language_by_name(languages: list[LanguageEntry], name: str) -> LanguageEntry | None:
    for entry in languages:
        if entry.display_name == name:
            return entry
    return None


def load_credentials(path: str | Path) -> dict[str, dict]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError("credentials file must contain a JSON object")
    return data


def canonical_json(payload) -> str:
    """The one serialization used for dumps, expected-result files, and
    byte-for-byte comparisons."""
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
