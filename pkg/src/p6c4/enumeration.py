"""Exhaustive enumeration of pattern-free graphs and minimal obstructions.

Graphs are generated level by level: every n-vertex candidate arises from
an (n-1)-vertex parent by attaching one new vertex to an admissible
neighborhood.  Forbidden patterns are hereditary, so a candidate is
checked only around the new vertex; isomorphic duplicates are removed by
canonical code within each level.  Every graph in the target family is
reachable this way — deleting any non-cut vertex of a connected family
member leaves a smaller connected family member.

The obstruction search additionally prunes extensions of graphs that are
already non-k-colorable: such a graph either is a minimal obstruction
(recorded, never extended) or properly contains one (hence no extension
can be minimal).
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator

from .graphs import Graph, bits
from . import canon, codec, coloring, detect, families, structure


@dataclass(frozen=True)
class PruneFlags:
    """Optional search prunes; disabling either never changes the output."""

    forbidden_early: bool = True  # reject forbidden patterns during growth
    obstruction_containment: bool = True  # never extend non-k-colorable graphs


@dataclass(frozen=True)
class SearchConfig:
    k: int = 3
    n_max: int = 8
    forbidden: tuple[Graph, ...] = ()
    connected_only: bool = True
    prune: PruneFlags = field(default_factory=PruneFlags)
    workers: int = 1

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


def p6c4_config(**kw) -> SearchConfig:
    """A SearchConfig with the (P6,C4) forbidden family preloaded."""
    kw.setdefault("forbidden", (families.path_graph(6), families.cycle_graph(4)))
    return SearchConfig(**kw)


def _child_ok(child: Graph, forbidden: tuple[Graph, ...]) -> bool:
    w = child.n - 1
    return all(not detect.has_pattern_through(child, pat, w) for pat in forbidden)


def _expand_parent(
    parent: Graph, forbidden: tuple[Graph, ...], connected_only: bool, early: bool
):
    """All admissible one-vertex extensions of ``parent`` (with codes)."""
    out = []
    lo = 1 if connected_only else 0
    for mask in range(lo, 1 << parent.n):
        child = parent.add_vertex(mask)
        if not early or _child_ok(child, forbidden):
            out.append((canon.canonical_code(child), child))
    return out


def _expand_chunk(args: tuple[list[str], list[str], bool, bool]) -> list[tuple[bytes, str]]:
    parent_lines, forbidden_lines, connected_only, early = args
    forbidden = tuple(codec.from_graph6(line) for line in forbidden_lines)
    out = []
    for line in parent_lines:
        parent = codec.from_graph6(line)
        for code, child in _expand_parent(parent, forbidden, connected_only, early):
            out.append((code, codec.to_graph6(child)))
    return out


def _free_filter(level: list[Graph], cfg: SearchConfig) -> list[Graph]:
    """Drop non-free graphs when the growth-time filter was disabled.

    With the early prune on, every generated graph is already free, so this
    is the identity; with it off, the whole-graph search replays the check
    the localized one would have done one level earlier.
    """
    if cfg.prune.forbidden_early or not cfg.forbidden:
        return level
    return [g for g in level if detect.is_free(g, list(cfg.forbidden))[0]]


def _next_level(
    parents: list[Graph], cfg: SearchConfig, pool: ProcessPoolExecutor | None
) -> list[Graph]:
    """One augmentation level, deduplicated and sorted by canonical code."""
    seen: dict[bytes, Graph] = {}
    early = cfg.prune.forbidden_early
    if pool is None:
        for parent in parents:
            for code, child in _expand_parent(
                parent, cfg.forbidden, cfg.connected_only, early
            ):
                if code not in seen:
                    seen[code] = child
    else:
        lines = [codec.to_graph6(p) for p in parents]
        forb = [codec.to_graph6(f) for f in cfg.forbidden]
        chunk = max(1, len(lines) // (cfg.workers * 4))
        jobs = [
            (lines[i : i + chunk], forb, cfg.connected_only, early)
            for i in range(0, len(lines), chunk)
        ]
        for result in pool.map(_expand_chunk, jobs):
            for code, line in result:
                if code not in seen:
                    seen[code] = codec.from_graph6(line)
    return [seen[code] for code in sorted(seen)]


def _seeds(cfg: SearchConfig) -> list[Graph]:
    k1 = Graph.from_edges(1, [])
    if _child_ok(k1, cfg.forbidden):
        return [k1]
    return []


def enumerate_family(cfg: SearchConfig) -> Iterator[Graph]:
    """Every pattern-free graph with 1 <= n <= n_max, one per isomorphism
    class, in (order, canonical code) order.  Connected only by default."""
    level = _seeds(cfg)
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        n = 1
        while level:
            yield from level
            if n == cfg.n_max:
                break
            # extending a non-free graph only yields non-free graphs, so
            # growing from the filtered level loses nothing
            level = _free_filter(_next_level(level, cfg, pool), cfg)
            n += 1
    finally:
        if pool is not None:
            pool.shutdown()


def is_minimal_obstruction(g: Graph, k: int) -> bool:
    """Not k-colorable, but every proper induced subgraph is."""
    if coloring.k_color(g, k) is not None:
        return False
    from .graphs import induced_subgraph

    for v in range(g.n):
        sub, _ = induced_subgraph(g, set(range(g.n)) - {v})
        if coloring.k_color(sub, k) is None:
            return False
    return True


@dataclass
class CriticalRun:
    """Result of an obstruction search: entries plus run metadata."""

    k: int
    n_max: int
    obstructions: list[coloring.ObstructionEntry]
    level_sizes: dict[int, int]


def enumerate_critical(
    cfg: SearchConfig,
    checkpoint: str | Path | None = None,
    log=None,
) -> CriticalRun:
    """All minimal non-k-colorable graphs in the family, up to n_max vertices.

    Found obstructions are re-audited on the spot: minimum degree >= k and
    the absence of a clique cutset are theorems for minimal obstructions,
    so their failure is an internal bug, not a filter.
    """
    state = _load_checkpoint(checkpoint, cfg) if checkpoint else None
    if state is None:
        seeds = _seeds(cfg)
        found: list[tuple[bytes, Graph]] = []
        start_n = 1
        level_sizes: dict[int, int] = {1: len(seeds)}
        extendable = _sift_level(seeds, cfg, found)
    else:
        extendable, found, start_n, level_sizes = state
        if log:
            log(f"resumed at level {start_n}")

    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        for n in range(start_n + 1, cfg.n_max + 1):
            t0 = time.monotonic()
            level = _free_filter(_next_level(extendable, cfg, pool), cfg)
            level_sizes[n] = len(level)
            extendable = _sift_level(level, cfg, found)
            if log:
                log(
                    f"level {n}: {len(level)} graphs, "
                    f"{len(found)} obstructions so far "
                    f"({time.monotonic() - t0:.1f}s)"
                )
            if checkpoint:
                _save_checkpoint(checkpoint, cfg, extendable, found, n, level_sizes)
            if not extendable:
                break
    finally:
        if pool is not None:
            pool.shutdown()

    found.sort(key=lambda cg: cg[0])
    entries = [
        coloring.ObstructionEntry(
            id=f"M{cfg.k}_{i}",
            k=cfg.k,
            graph=g,
            provenance="enumeration-derived",
            verified={
                "non_k_colorable": True,
                "minimal": True,
                "min_degree_ge_k": True,
                "no_clique_cutset": True,
            },
        )
        for i, (code, g) in enumerate(found)
    ]
    return CriticalRun(cfg.k, cfg.n_max, entries, level_sizes)


def _sift_level(level, cfg, found) -> list[Graph]:
    """Record this level's minimal obstructions; return what to extend."""
    extendable = []
    for g in level:
        if coloring.k_color(g, cfg.k) is None:
            # Non-colorable graphs are either minimal (recorded, and no
            # extension of them can be minimal) or contain a smaller
            # obstruction (so no extension can be minimal either).
            if is_minimal_obstruction(g, cfg.k):
                assert g.min_degree() >= cfg.k, "minimal obstruction with low degree"
                assert (
                    structure.find_clique_cutset(g) is None
                ), "minimal obstruction with clique cutset"
                found.append((canon.canonical_code(g), g))
        else:
            extendable.append(g)
    return extendable if cfg.prune.obstruction_containment else list(level)


def _config_fingerprint(cfg: SearchConfig) -> dict:
    return {
        "k": cfg.k,
        "forbidden": sorted(codec.to_graph6(f) for f in cfg.forbidden),
        "connected_only": cfg.connected_only,
        "prune": [cfg.prune.forbidden_early, cfg.prune.obstruction_containment],
    }


def _save_checkpoint(path, cfg, extendable, found, n, level_sizes) -> None:
    payload = {
        "config": _config_fingerprint(cfg),
        "level": n,
        "extendable": [codec.to_graph6(g) for g in extendable],
        "obstructions": [codec.to_graph6(g) for _, g in found],
        "level_sizes": {str(k): v for k, v in level_sizes.items()},
    }
    Path(path).write_text(json.dumps(payload))


def _load_checkpoint(path, cfg):
    path = Path(path)
    if not path.exists():
        return None
    payload = json.loads(path.read_text())
    if payload["config"] != _config_fingerprint(cfg):
        raise ValueError("checkpoint was produced by a different configuration")
    extendable = [codec.from_graph6(line) for line in payload["extendable"]]
    found = []
    for line in payload["obstructions"]:
        g = codec.from_graph6(line)
        found.append((canon.canonical_code(g), g))
    level_sizes = {int(k): v for k, v in payload["level_sizes"].items()}
    return extendable, found, payload["level"], level_sizes


# -- nice critical graphs ----------------------------------------------------


@dataclass(frozen=True)
class NiceWitness:
    """An independent triple whose removal preserves the clique number.

    For a k-critical graph h (minimal non-(k-1)-colorable) the witness
    requires omega(h) = k - 1 and omega(h - triple) = k - 1.
    """

    triple: tuple[int, int, int]
    omega: int


def nice_check(h: Graph, k: int) -> NiceWitness | None:
    """First nice witness of a k-critical graph in ascending triple order.

    Raises ``ValueError`` if ``h`` is not k-critical.
    """
    if k < 2:
        raise ValueError("criticality needs k >= 2")
    if not is_minimal_obstruction(h, k - 1):
        raise ValueError("graph is not k-critical")
    omega = len(detect.max_clique(h))
    if omega != k - 1:
        return None
    from .graphs import induced_subgraph

    for a in range(h.n):
        for b in range(a + 1, h.n):
            if h.has_edge(a, b):
                continue
            for c in range(b + 1, h.n):
                if h.has_edge(a, c) or h.has_edge(b, c):
                    continue
                rest, _ = induced_subgraph(h, set(range(h.n)) - {a, b, c})
                if len(detect.max_clique(rest)) == omega:
                    return NiceWitness((a, b, c), omega)
    return None


def find_nice_critical(
    k: int, n_max: int, forbidden: tuple[Graph, ...], workers: int = 1
) -> list[tuple[Graph, NiceWitness]]:
    """k-critical graphs in the family admitting a nice witness."""
    cfg = SearchConfig(k=k - 1, n_max=n_max, forbidden=forbidden, workers=workers)
    run = enumerate_critical(cfg)
    out = []
    for entry in run.obstructions:
        w = nice_check(entry.graph, k)
        if w is not None:
            out.append((entry.graph, w))
    return out
