"""Seeded G(n, p) corpora.

Each graph draws from its own ``random.Random`` (Mersenne Twister) seeded
with the string ``"qtrd-gnp/{seed}/{n}/{p}/{index}"``. String seeds are
hashed with SHA-512 by the standard library, so a (seed, n, p, index) tuple
yields the same graph on every platform and Python release, and graphs can
be generated independently of one another in any order.
"""

from __future__ import annotations

import hashlib
import json
import random
from itertools import combinations
from pathlib import Path

from .graph import Graph
from .graphio import format_graph

DEFAULT_PROBABILITIES = (0.2, 0.5, 0.8)


def _seed_string(seed: int, n: int, p: float, index: int) -> str:
    return f"qtrd-gnp/{seed}/{n}/{p!r}/{index}"


def gnp(n: int, p: float, seed: int, index: int = 0) -> Graph:
    """Edge ``uv`` (u < v, lexicographic order) is present iff ``random() < p``."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(_seed_string(seed, n, p, index))
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def graph_id(n: int, p: float, seed: int, index: int) -> str:
    return f"gnp-n{n}-p{p}-s{seed}-{index}"


def random_corpus(n: int, p: float, count: int, seed: int) -> list[tuple[str, Graph]]:
    return [(graph_id(n, p, seed, i), gnp(n, p, seed, i)) for i in range(count)]


def standard_corpus(
    orders=range(7, 13), probabilities=DEFAULT_PROBABILITIES, count: int = 1000, seed: int = 0
) -> list[tuple[str, Graph]]:
    """Randomized corpus over every (n, p) pair."""
    out = []
    for n in orders:
        for p in probabilities:
            out.extend(random_corpus(n, p, count, seed))
    return out


def write_corpus(directory: str | Path, n: int, p: float, count: int, seed: int) -> dict:
    """Write ``count`` edge-list files and ``manifest.json``; returns the manifest."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    files = []
    for i in range(count):
        text = format_graph(gnp(n, p, seed, i))
        name = f"{graph_id(n, p, seed, i)}.txt"
        (root / name).write_text(text, encoding="utf-8")
        files.append({"file": name, "sha256": hashlib.sha256(text.encode()).hexdigest()})
    manifest = {
        "schema_version": 1,
        "generator": "gnp",
        "prng": "mt19937 via random.Random, string seed per graph",
        "seed": seed,
        "n": n,
        "p": p,
        "count": count,
        "files": files,
    }
    (root / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                                        encoding="utf-8")
    return manifest
