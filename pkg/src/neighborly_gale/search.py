"""Exhaustive, symmetry-broken search for the facet-vertex gap minimum.

Enumerates k-neighborly reduced diagrams with center 0, one representative
per dihedral class, over spaces restricted by three prune levels:

* ``marcus``   -- labels at most k+1, label sum at most 4(k+1), any number of
  diameters up to the sum cap, properties P2/P3 enforced.  This is the
  correctness baseline; it provably contains a gap-minimizing diagram.
* ``minimal``  -- marcus plus minimality (no label can be decremented).
* ``extremal`` -- minimal plus the local structure a gap-minimizing diagram
  must have: adjacent label sums at least 2, and tighter per-n label and
  diameter-count caps.  Justified for optima only.

The minimum itself is computed exactly with a branch-and-bound cut that only
uses label-monotonicity of the cofacet count: a prefix whose cofacets already
exceed best + (max possible vertex count) cannot complete to an improvement.
Subtrees that could still tie the best value are never cut while tied
witnesses are wanted.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from multiprocessing import Pool

from ._core import run_shard
from .diagram import GaleDiagram, canonical_form, count_cofacets
from .errors import ParameterError

PRUNE_LEVELS = ("marcus", "minimal", "extremal")


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search run.

    ``sum_cap`` and ``n_max`` override the default search-space caps (label
    sum 4(k+1), which also bounds the diameter count); they exist so tests
    can scan a slack space beyond the default caps.
    """

    k: int
    prune_level: str = "extremal"
    emit_all: bool = False
    jobs: int = 1
    sum_cap: int | None = None
    n_max: int | None = None

    def __post_init__(self):
        if self.k < 2:
            raise ParameterError(f"k must be >= 2, got {self.k}")
        if self.prune_level not in PRUNE_LEVELS:
            raise ParameterError(f"unknown prune level {self.prune_level!r}")
        if self.jobs < 1:
            raise ParameterError(f"jobs must be >= 1, got {self.jobs}")
        if self.sum_cap is not None and self.sum_cap < 2 * (self.k + 1):
            raise ParameterError("sum_cap below 2(k+1) leaves an empty space")
        if self.n_max is not None and self.n_max < 2:
            raise ParameterError("n_max must be >= 2")


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    evaluated: int
    wall_time: float


@dataclass(frozen=True)
class SearchResult:
    k: int
    prune_level: str
    delta3: int
    witnesses: tuple[GaleDiagram, ...]
    stats: SearchStats

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "prune_level": self.prune_level,
            "delta3": self.delta3,
            "witnesses": [w.to_json() for w in self.witnesses],
            "stats": {
                "nodes": self.stats.nodes,
                "evaluated": self.stats.evaluated,
                "wall_time": self.stats.wall_time,
            },
        }


def delta3_closed_form(k: int) -> int:
    """Minimum facet-vertex gap over k-neighborly polytopes with d+3 vertices."""
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if k in (2, 3):
        return (k + 2) * (k * k + k - 3) // 3
    return 2 * (k * k - 1)


def _sum_cap(config: SearchConfig) -> int:
    return config.sum_cap if config.sum_cap is not None else 4 * (config.k + 1)


def _n_range(config: SearchConfig) -> range:
    k = config.k
    hi = _sum_cap(config)  # P3 forces label sum >= n
    if config.prune_level == "extremal":
        hi = min(hi, k + 2 if k % 2 == 0 else k + 3)
    if config.n_max is not None:
        hi = min(hi, config.n_max)
    return range(2, hi + 1)


def _label_cap(config: SearchConfig, n: int) -> int:
    k = config.k
    cap = k + 1
    if config.prune_level == "extremal":
        cap = min(cap, k + 5 - n if n % 2 == 0 else k + 4 - n)
    return cap


def _shards(config: SearchConfig) -> list[tuple[int, int]]:
    out = []
    for n in _n_range(config):
        cap = _label_cap(config, n)
        if cap < 0:
            continue
        for first in range(0, cap + 1):
            out.append((n, first))
    return out


def _seed_gap(k: int) -> int:
    """Gap of the 4-gon diagram with all labels k+1; always inside the space."""
    square = GaleDiagram(n=2, labels=(k + 1,) * 4)
    return count_cofacets(square) - square.vertex_count


def _shard_task(args):
    (k, n, first, level, sum_cap, label_cap, seed) = args
    best, wits, _, nodes, evaluated = run_shard(
        k, n, first, level, sum_cap, label_cap, seed, False
    )
    return best, wits, n, nodes, evaluated


def enumerate_diagrams(config: SearchConfig):
    """Yield one canonical representative per dihedral class in the space.

    Diagrams are emitted in canonical form, grouped by diameter count.  No
    branch-and-bound cut is applied: this is the full stream, which grows
    very quickly with k at the marcus level.
    """
    sum_cap = _sum_cap(config)
    for n, first in _shards(config):
        _, _, shard_leaves, _, _ = run_shard(
            config.k, n, first, config.prune_level, sum_cap,
            _label_cap(config, n), None, True,
        )
        for labels, _, _ in shard_leaves:
            yield canonical_form(GaleDiagram(n=n, labels=labels))


def find_delta3(config: SearchConfig) -> SearchResult:
    """Exact minimum of (cofacets - vertices) over the configured space.

    Deterministic for any ``jobs``: shards never exchange bounds, so the
    explored tree is identical under any work distribution.
    """
    start = time.monotonic()
    sum_cap = _sum_cap(config)
    seed = _seed_gap(config.k)
    tasks = [
        (config.k, n, first, config.prune_level, sum_cap, _label_cap(config, n), seed)
        for (n, first) in _shards(config)
    ]

    if config.jobs > 1:
        with Pool(processes=config.jobs) as pool:
            outcomes = pool.map(_shard_task, tasks)
    else:
        outcomes = [_shard_task(t) for t in tasks]

    best = None
    found: list[GaleDiagram] = []
    nodes = 0
    evaluated = 0
    for shard_best, wits, n, shard_nodes, shard_eval in outcomes:
        nodes += shard_nodes
        evaluated += shard_eval
        if not wits:
            continue
        if best is None or shard_best < best:
            best = shard_best
            found = [canonical_form(GaleDiagram(n=n, labels=w)) for w in wits]
        elif shard_best == best:
            found.extend(canonical_form(GaleDiagram(n=n, labels=w)) for w in wits)

    if best is None:
        raise ParameterError("empty search space; nothing to minimize")

    found.sort(key=lambda d: (d.n, d.labels))
    if not config.emit_all:
        found = found[:1]
    stats = SearchStats(nodes=nodes, evaluated=evaluated, wall_time=time.monotonic() - start)
    return SearchResult(
        k=config.k,
        prune_level=config.prune_level,
        delta3=best,
        witnesses=tuple(found),
        stats=stats,
    )


def verify_theorem1(
    k_max: int, prune_level: str = "extremal", jobs: int = 1, emit_all: bool = False
) -> list[dict]:
    """Search values against the closed form for k = 2 .. k_max.

    Each row carries the searched minimum, the closed-form value and a match
    flag.  A searched minimum below zero aborts earlier with the offending
    witness, so a completed table doubles as the facets >= vertices check.
    """
    if not 2 <= k_max <= 7:
        raise ParameterError(f"k_max must be between 2 and 7, got {k_max}")
    rows = []
    for k in range(2, k_max + 1):
        result = find_delta3(
            SearchConfig(k=k, prune_level=prune_level, jobs=jobs, emit_all=emit_all)
        )
        closed = delta3_closed_form(k)
        rows.append(
            {
                "k": k,
                "searched": result.delta3,
                "closed_form": closed,
                "match": result.delta3 == closed,
                "witnesses": [w.to_json() for w in result.witnesses],
            }
        )
    return rows


def write_results_jsonl(result: SearchResult, stream) -> None:
    """One line per witness, then a summary line with the run statistics."""
    for w in result.witnesses:
        stream.write(
            json.dumps(
                {
                    "k": result.k,
                    "delta3": result.delta3,
                    "diagram": w.to_json(),
                    "cofacets": count_cofacets(w),
                    "vertices": w.vertex_count,
                }
            )
            + "\n"
        )
    stream.write(
        json.dumps(
            {
                "k": result.k,
                "delta3": result.delta3,
                "prune_level": result.prune_level,
                "witness_count": len(result.witnesses),
                "nodes": result.stats.nodes,
                "evaluated": result.stats.evaluated,
                "wall_time": result.stats.wall_time,
            }
        )
        + "\n"
    )
