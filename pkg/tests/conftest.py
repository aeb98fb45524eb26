"""Shared fixtures. The whole suite runs with external networking blocked:
only loopback (and unix-domain) sockets may connect, so every test that
needs a server talks to a local stub."""

from __future__ import annotations

import socket

import pytest

from expertquest.config import demo_corpus_path, load_languages
from expertquest.sources import FixtureBackend

_REAL_CONNECT = socket.socket.connect


def _is_loopback(host) -> bool:
    if isinstance(host, bytes):
        host = host.decode("ascii", "replace")
    return host in ("localhost", "::1") or host.startswith("127.")


def _guarded_connect(self, address, *args, **kwargs):
    if self.family in (socket.AF_INET, socket.AF_INET6):
        host = address[0] if isinstance(address, tuple) else address
        if not _is_loopback(host):
            raise OSError(f"external network access blocked in tests: {address!r}")
    return _REAL_CONNECT(self, address, *args, **kwargs)


@pytest.fixture(autouse=True, scope="session")
def no_external_network():
    socket.socket.connect = _guarded_connect
    yield
    socket.socket.connect = _REAL_CONNECT


@pytest.fixture(scope="session")
def demo_corpus():
    return demo_corpus_path()


@pytest.fixture()
def demo_backend(demo_corpus):
    return FixtureBackend(demo_corpus)


@pytest.fixture(scope="session")
def default_languages():
    return load_languages()
