"""Top-level acceptance suite.

One test per release criterion, each printing a PASS line with the measured
numbers (run with ``pytest -s tests/test_acceptance.py`` to watch them).
The whole suite runs with external networking disabled via conftest.
"""

import json
import random
import socket
import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from urllib.parse import quote

import pytest
from fastapi.testclient import TestClient

from expertquest.config import (
    canonical_json,
    demo_corpus_path,
    language_by_name,
    packaged_data_path,
)
from expertquest.evaluation import load_recorded_counts, replay_rows, summarize_run
from expertquest.search import CandidateProfile, SearchParams, find_experts, rank
from expertquest.service import create_app
from expertquest.textpipe import (
    cosine_similarity,
    hash_index,
    preprocess,
    vectorize,
)
from oracle_helpers import bag_cosine, brute_force_rank, collision_free, crc32_bitwise

DEMO_LANGUAGES = ("Clojure", "Scala", "Python")

EXAMPLE_STRING_PAIRS = [
    ("white dog", "black dog", 1.00),
    ("run jump play hide", "run jump play seek", 0.75),
    ("running dog", "running and barking dog", 0.82),
    ("runner jump", "running jump", 0.50),
    ("the mouse ran up the clock", "the elephant ran over the clock", 0.67),
    ("the mouse ran up the clock", "the clock ran over the mouse", 1.00),
]

RECORDED_RUN_AVERAGES = [
    ("recorded_run_10_5.csv", 10, 0.158265948, 0.052830189),
    ("recorded_run_30_15.csv", 30, 0.171069182, 0.020754717),
    ("recorded_run_50_25.csv", 50, 0.20215256, 0.050943396),
]


def expected_results(name: str) -> str:
    path = demo_corpus_path() / "expected" / "default" / f"{quote(name, safe='')}.json"
    return path.read_text(encoding="utf-8")


def test_example_string_pairs_reproduced():
    """Six reference string pairs hit their documented cosines within 0.01,
    in under a second."""
    started = time.perf_counter()
    scores = []
    for text_a, text_b, want in EXAMPLE_STRING_PAIRS:
        got = cosine_similarity(vectorize(text_a), vectorize(text_b))
        assert got == pytest.approx(want, abs=0.01), (text_a, text_b)
        scores.append(got)
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"\nACCEPTANCE PASS: example pairs {[round(s, 2) for s in scores]} "
          f"in {elapsed * 1000:.0f}ms")


def test_recorded_run_averages_reproduced(default_languages):
    """Replaying the recorded per-language counts reproduces the published
    run averages within 5e-6."""
    names = [entry.display_name for entry in default_languages]
    precisions, recalls = [], []
    for filename, search_count, want_precision, want_recall in RECORDED_RUN_AVERAGES:
        recorded = load_recorded_counts(packaged_data_path(filename))
        rows = replay_rows(recorded, search_count, names)
        summary = summarize_run(search_count, 0, rows)
        assert summary.average_precision == pytest.approx(want_precision, abs=5e-6)
        assert summary.average_recall == pytest.approx(want_recall, abs=5e-6)
        precisions.append(summary.average_precision)
        recalls.append(summary.average_recall)
    print(f"\nACCEPTANCE PASS: run averages precision={precisions} recall={recalls}")


def test_hash_determinism():
    """CRC-32 matches the standard check value and an independent bit-by-bit
    implementation; bucket assignment is stable across runs and threads."""
    assert zlib.crc32(b"123456789") == 0xCBF43926
    assert crc32_bitwise(b"123456789") == 0xCBF43926
    assert hash_index("123456789", 2**32) == 0xCBF43926
    assert hash_index("123456789", 256) == 38
    rng = random.Random(1)
    words = ["".join(rng.choice("abcdefghijklmnop") for _ in range(8)) for _ in range(200)]
    for word in words:
        assert zlib.crc32(word.encode()) == crc32_bitwise(word.encode())
    with ThreadPoolExecutor(max_workers=8) as executor:
        all_runs = list(executor.map(lambda _: [hash_index(w, 256) for w in words], range(16)))
    assert all(run == all_runs[0] for run in all_runs)
    print("\nACCEPTANCE PASS: hash determinism (check value 0xCBF43926, "
          "200 words vs independent CRC, 16 threads)")


def test_oracle_equivalence_on_small_texts():
    """Hashed-vector cosine equals explicit bag-of-words cosine on 100
    collision-free random texts, within 1e-9."""
    rng = random.Random(424242)
    alphabet = "bcdfgkmpqvxz"
    size = 4096
    checked = 0
    attempts = 0
    worst = 0.0
    while checked < 100:
        attempts += 1
        assert attempts < 2000
        vocabulary = [
            "".join(rng.choice(alphabet) for _ in range(rng.randint(3, 8)))
            for _ in range(rng.randint(1, 20))
        ]
        text_a = " ".join(rng.choices(vocabulary, k=rng.randint(1, 30)))
        text_b = " ".join(rng.choices(vocabulary, k=rng.randint(1, 30)))
        tokens_a, tokens_b = preprocess(text_a), preprocess(text_b)
        if not tokens_a or not tokens_b or len(set(tokens_a) | set(tokens_b)) > 20:
            continue
        if not collision_free(tokens_a, tokens_b, size):
            continue
        hashed = cosine_similarity(vectorize(text_a, size), vectorize(text_b, size))
        explicit = bag_cosine(tokens_a, tokens_b)
        assert hashed == pytest.approx(explicit, abs=1e-9)
        worst = max(worst, abs(hashed - explicit))
        checked += 1
    print(f"\nACCEPTANCE PASS: oracle equivalence on {checked} texts, "
          f"max |delta|={worst:.2e}")


def test_fixture_end_to_end_determinism(demo_backend, default_languages):
    """Each demo language reproduces its documented ranked list byte for
    byte: serially, at parallelism 4, and under 8 concurrent service
    requests."""
    for name in DEMO_LANGUAGES:
        entry = language_by_name(default_languages, name)
        want = expected_results(name)
        for parallelism in (1, 4):
            got = find_experts(
                SearchParams(language=entry), demo_backend, parallelism=parallelism
            )
            assert canonical_json([c.to_dict() for c in got]) == want, (name, parallelism)

    app = create_app(demo_backend, default_languages)
    with TestClient(app) as client:
        def run(_):
            response = client.post("/api/search", json={"language": "Clojure"})
            assert response.status_code == 200
            return json.dumps(response.json()["results"], sort_keys=True)

        with ThreadPoolExecutor(max_workers=8) as executor:
            bodies = list(executor.map(run, range(8)))
    assert len(set(bodies)) == 1
    want_projection = json.loads(expected_results("Clojure"))
    for item in want_projection:
        item["mentions_percent"] = round(item["cosine"] * 100)
    assert json.loads(bodies[0]) == want_projection
    print("\nACCEPTANCE PASS: fixture determinism (3 languages, serial & "
          "parallel-4, 8 concurrent service requests)")


def test_ranking_matches_brute_force_oracle():
    """1,000 random candidate sets rank exactly as the brute-force oracle;
    input permutation never changes the output."""
    rng = random.Random(20260809)

    def random_candidate():
        return CandidateProfile(
            handle=f"user{rng.randint(0, 11)}",
            display_name="X",
            twitter_followers=rng.randint(0, 3),
            github_followers=rng.randint(0, 3),
            bytes_of_code=rng.choice([0, 0, 10, 10, 500, 4000]),
            cosine=rng.choice([0.0, 0.1, 0.1, 0.5, 0.93]),
            microblog_profile_url="https://twitter.com/x",
            codehost_profile_url="https://host/x",
        )

    for _ in range(1000):
        candidates = [random_candidate() for _ in range(rng.randint(0, 10))]
        ranked = rank(candidates)
        assert [c.to_dict() for c in ranked] == brute_force_rank(
            [c.to_dict() for c in candidates]
        )
        shuffled = list(candidates)
        rng.shuffle(shuffled)
        assert rank(shuffled) == ranked
    print("\nACCEPTANCE PASS: ranking oracle (1000 sets + permutations)")


def test_novel_scale_vectorization_performance():
    """A ~105,000-word text vectorizes well inside the 5s target."""
    rng = random.Random(7)
    vocabulary = [
        "".join(rng.choice("abcdefghijklmnopqrstuvwxyz") for _ in range(rng.randint(3, 10)))
        for _ in range(12000)
    ]
    filler = ["the", "and", "with", "very", "over", "was", "is", "a"]
    words = rng.choices(vocabulary, k=105_000)
    for index in range(0, len(words), 4):
        words[index] = rng.choice(filler)
    text = " ".join(words)

    started = time.perf_counter()
    vector = vectorize(text)
    elapsed = time.perf_counter() - started
    assert sum(vector.counts) == len(preprocess(text))
    assert sum(vector.counts) > 50_000
    assert elapsed < 5.0, f"vectorization took {elapsed:.2f}s"
    print(f"\nACCEPTANCE PASS: {len(words)} words vectorized in {elapsed:.2f}s "
          f"({sum(vector.counts)} retained tokens)")


def test_no_external_network_possible():
    """The guard that the whole suite runs under refuses non-loopback
    connections."""
    assert socket.socket.connect.__name__ == "_guarded_connect"
    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as sock:
        sock.settimeout(1.0)
        with pytest.raises(OSError, match="blocked"):
            sock.connect(("93.184.216.34", 80))
    print("\nACCEPTANCE PASS: external networking blocked for the whole suite")
