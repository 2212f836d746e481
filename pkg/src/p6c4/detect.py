"""Induced-subgraph detection: paths, cycles, holes, cliques, general patterns.

All searches are exhaustive and deterministic (lowest-index branching), so
the first witness found is stable across runs.  Worst-case exponential by
design; inputs here are desk-scale.

An :class:`Embedding` maps pattern vertices to host vertices and must
preserve both edges and non-edges (induced copies throughout).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, mask_of


@dataclass(frozen=True)
class Embedding:
    """``vmap[i]`` is the host vertex playing pattern vertex ``i``."""

    pattern_order: int
    vmap: tuple[int, ...]


def verify_embedding(g: Graph, pattern: Graph, emb: Embedding) -> bool:
    """Check that ``emb`` is an induced copy of ``pattern`` in ``g``."""
    if emb.pattern_order != pattern.n or len(emb.vmap) != pattern.n:
        return False
    if len(set(emb.vmap)) != pattern.n:
        return False
    if any(not 0 <= v < g.n for v in emb.vmap):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != g.has_edge(emb.vmap[i], emb.vmap[j]):
                return False
    return True


# -- induced paths ---------------------------------------------------------


def find_induced_path(g: Graph, t: int) -> Embedding | None:
    """First induced path on ``t`` vertices, as a P_t embedding in path order."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if t > g.n:
        return None
    if t == 1:
        return Embedding(1, (0,))
    adj = g.adj
    for s in range(g.n):
        found = _grow_path([s], 1 << s, 0, t, adj)
        if found is not None:
            return Embedding(t, tuple(found))
    return None


def _grow_path(
    path: list[int], pmask: int, earlier_nbrs: int, t: int, adj: tuple[int, ...]
) -> list[int] | None:
    """Extend a chordless path at its right end to total length t."""
    if len(path) == t:
        return path
    last = path[-1]
    allowed = adj[last] & ~pmask & ~earlier_nbrs
    for u in bits(allowed):
        res = _grow_path(path + [u], pmask | (1 << u), earlier_nbrs | adj[last], t, adj)
        if res is not None:
            return res
    return None


# -- induced cycles --------------------------------------------------------


def find_induced_cycle(g: Graph, l: int) -> Embedding | None:
    """First induced cycle on ``l`` vertices, as a C_l embedding in ring order."""
    if l < 3:
        raise ValueError("l must be at least 3")
    if l > g.n:
        return None
    adj = g.adj
    for s in range(g.n):
        gt = ~((1 << (s + 1)) - 1)  # vertices > s, so s is the ring minimum
        res = _grow_cycle([s], 1 << s, 0, l, adj, s, gt)
        if res is not None:
            return Embedding(l, tuple(res))
    return None


def _grow_cycle(path, pmask, mid_nbrs, l, adj, s, gt):
    """Chordless paths from s using vertices > s; close back to s at length l.

    ``mid_nbrs`` holds neighbours of path[0..-2] except s's own (tracked so
    the closing vertex may touch s but nothing else before the end).
    """
    last = path[-1]
    if len(path) == l - 1:
        allowed = adj[last] & adj[s] & ~pmask & ~mid_nbrs & gt
        for u in bits(allowed):
            return path + [u]
        return None
    allowed = adj[last] & ~pmask & ~mid_nbrs & gt
    if len(path) >= 2:
        allowed &= ~adj[s]
    for u in bits(allowed):
        nxt = mid_nbrs | (adj[last] if len(path) >= 2 else 0)
        res = _grow_cycle(path + [u], pmask | (1 << u), nxt, l, adj, s, gt)
        if res is not None:
            return res
    return None


def find_all_induced_cycles(g: Graph, l: int) -> list[Embedding]:
    """Every induced C_l, one embedding per cycle (canonical ring order)."""
    if l < 3:
        raise ValueError("l must be at least 3")
    out: list[Embedding] = []
    adj = g.adj

    def grow(path, pmask, mid_nbrs, s, gt):
        last = path[-1]
        if len(path) == l - 1:
            allowed = adj[last] & adj[s] & ~pmask & ~mid_nbrs & gt
            for u in bits(allowed):
                ring = path + [u]
                if ring[1] < ring[-1]:  # fix direction: one embedding per cycle
                    out.append(Embedding(l, tuple(ring)))
            return
        allowed = adj[last] & ~pmask & ~mid_nbrs & gt
        if len(path) >= 2:
            allowed &= ~adj[s]
        for u in bits(allowed):
            nxt = mid_nbrs | (adj[last] if len(path) >= 2 else 0)
            grow(path + [u], pmask | (1 << u), nxt, s, gt)

    for s in range(g.n):
        gt = ~((1 << (s + 1)) - 1)
        grow([s], 1 << s, 0, s, gt)
    return out


def find_hole(g: Graph) -> Embedding | None:
    """Smallest chordless cycle of length at least 4, if any."""
    for l in range(4, g.n + 1):
        emb = find_induced_cycle(g, l)
        if emb is not None:
            return emb
    return None


# -- chordality ------------------------------------------------------------


def _lexbfs_order(g: Graph) -> list[int]:
    labels: list[list[int]] = [[] for _ in range(g.n)]
    order = []
    numbered = 0
    for step in range(g.n, 0, -1):
        best = -1
        for v in range(g.n):
            if not numbered >> v & 1 and (best < 0 or labels[v] > labels[best]):
                best = v
        order.append(best)
        numbered |= 1 << best
        for u in bits(g.adj[best] & ~numbered):
            labels[u].append(step)
    return order


def is_chordal(g: Graph) -> tuple[bool, tuple[int, ...] | Embedding | None]:
    """Chordality with a certificate.

    Returns ``(True, peo)`` with a perfect elimination order, or
    ``(False, hole)`` with a chordless cycle embedding of length >= 4.
    """
    if g.n == 0:
        return True, ()
    visit = _lexbfs_order(g)
    peo = tuple(reversed(visit))
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        for u in later:
            if u != parent and not g.has_edge(parent, u):
                hole = find_hole(g)
                assert hole is not None, "PEO check failed on a graph with no hole"
                return False, hole
    return True, peo


# -- cliques ---------------------------------------------------------------


def max_clique(g: Graph) -> frozenset[int]:
    """An exact maximum clique (deterministic branch and bound)."""
    best: list[int] = []
    adj = g.adj

    def expand(r: list[int], cand: int) -> None:
        nonlocal best
        if len(r) + cand.bit_count() <= len(best):
            return
        if not cand:
            if len(r) > len(best):
                best = r[:]
            return
        while cand:
            if len(r) + cand.bit_count() <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            expand(r + [v], cand & adj[v])

    expand([], g.full_mask())
    return frozenset(best)


def has_clique(g: Graph, k: int) -> Embedding | None:
    """An induced K_k embedding if one exists (early-exit search)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > g.n:
        return None
    adj = g.adj
    found: list[int] | None = None

    def expand(r: list[int], cand: int) -> bool:
        nonlocal found
        if len(r) == k:
            found = r[:]
            return True
        if len(r) + cand.bit_count() < k:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            if expand(r + [v], cand & adj[v]):
                return True
            if len(r) + cand.bit_count() < k:
                return False
        return False

    expand([], g.full_mask())
    return Embedding(k, tuple(found)) if found is not None else None


# -- general patterns ------------------------------------------------------


def find_induced_copy(g: Graph, pattern: Graph) -> Embedding | None:
    """First induced copy of ``pattern`` in ``g`` (lowest-index branching)."""
    p = pattern.n
    if p == 0:
        return Embedding(0, ())
    if p > g.n:
        return None
    gdeg = [g.degree(v) for v in range(g.n)]
    pdeg = [pattern.degree(i) for i in range(p)]
    assign: list[int] = []
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == p:
            return True
        allowed = g.full_mask() & ~used
        for j in range(i):
            if pattern.has_edge(j, i):
                allowed &= g.adj[assign[j]]
            else:
                allowed &= ~g.adj[assign[j]]
        for v in bits(allowed):
            if gdeg[v] < pdeg[i]:
                continue
            assign.append(v)
            used |= 1 << v
            if rec(i + 1):
                return True
            assign.pop()
            used &= ~(1 << v)
        return False

    if rec(0):
        return Embedding(p, tuple(assign))
    return None


def is_free(
    g: Graph, patterns: list[Graph] | tuple[Graph, ...]
) -> tuple[bool, int | None, Embedding | None]:
    """Whether no pattern embeds; otherwise the first witness in list order."""
    for idx, pat in enumerate(patterns):
        emb = _dispatch_find(g, pat)
        if emb is not None:
            return False, idx, emb
    return True, None, None


def _pattern_shape(pat: Graph) -> tuple[str, int]:
    """Classify a pattern as ('path', t), ('cycle', l), or ('generic', n)."""
    n = pat.n
    degs = sorted(pat.degree(v) for v in range(n))
    if n >= 2 and pat.is_connected() and degs == [1, 1] + [2] * (n - 2):
        return "path", n
    if n == 1:
        return "path", 1
    if n >= 3 and pat.is_connected() and degs == [2] * n:
        return "cycle", n
    return "generic", n


def _dispatch_find(g: Graph, pat: Graph) -> Embedding | None:
    kind, size = _pattern_shape(pat)
    if kind == "path":
        return find_induced_path(g, size)
    if kind == "cycle":
        return find_induced_cycle(g, size)
    return find_induced_copy(g, pat)


# -- localized variants (used by the enumerator on freshly added vertices) --


def has_c4_through(g: Graph, w: int) -> bool:
    """Is there an induced C4 containing vertex ``w``?"""
    adj = g.adj
    nw = adj[w]
    outside = g.full_mask() & ~nw & ~(1 << w)
    nbrs = list(bits(nw))
    for ai in range(len(nbrs)):
        a = nbrs[ai]
        for ci in range(ai + 1, len(nbrs)):
            c = nbrs[ci]
            if adj[a] >> c & 1:
                continue
            if adj[a] & adj[c] & outside:
                return True
    return False


def has_path_through(g: Graph, t: int, w: int) -> bool:
    """Is there an induced P_t containing vertex ``w``?

    A P_t through ``w`` splits into two chordless arms meeting at ``w``;
    arms are mutually non-adjacent apart from their shared endpoint.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if t > g.n:
        return False
    if t == 1:
        return True
    adj = g.adj

    def grow_left(path, pmask, earlier, r, rmask, rblock):
        if len(path) - 1 == r:
            return True
        last = path[-1]
        allowed = adj[last] & ~pmask & ~earlier & ~rmask & ~rblock
        for u in bits(allowed):
            if grow_left(path + [u], pmask | (1 << u), earlier | adj[last], r, rmask, rblock):
                return True
        return False

    def grow_right(path, pmask, earlier, m):
        if len(path) - 1 == m:
            r = t - 1 - m
            if r == 0:
                return True
            rblock = 0
            for x in path[1:]:
                rblock |= adj[x]
            return grow_left([w], 1 << w, 0, r, pmask & ~(1 << w), rblock)
        last = path[-1]
        allowed = adj[last] & ~pmask & ~earlier
        for u in bits(allowed):
            if grow_right(path + [u], pmask | (1 << u), earlier | adj[last], m):
                return True
        return False

    return any(grow_right([w], 1 << w, 0, m) for m in range(t - 1, -1, -1))


def has_cycle_through(g: Graph, l: int, w: int) -> bool:
    """Is there an induced C_l containing vertex ``w``?"""
    adj = g.adj
    full = g.full_mask()

    def grow(path, pmask, mid_nbrs):
        last = path[-1]
        if len(path) == l - 1:
            return bool(adj[last] & adj[w] & ~pmask & ~mid_nbrs & full)
        allowed = adj[last] & ~pmask & ~mid_nbrs
        if len(path) >= 2:
            allowed &= ~adj[w]
        for u in bits(allowed):
            nxt = mid_nbrs | (adj[last] if len(path) >= 2 else 0)
            if grow(path + [u], pmask | (1 << u), nxt):
                return True
        return False

    return grow([w], 1 << w, 0)


def has_pattern_through(g: Graph, pat: Graph, w: int) -> bool:
    """Is there an induced copy of ``pat`` using vertex ``w``?

    Specialized for paths/cycles; general patterns fall back to a matcher
    that pins one pattern vertex to ``w``.
    """
    kind, size = _pattern_shape(pat)
    if kind == "path":
        return has_path_through(g, size, w)
    if kind == "cycle":
        return has_cycle_through(g, size, w)
    for anchor in range(pat.n):
        if _find_copy_pinned(g, pat, anchor, w):
            return True
    return False


def _find_copy_pinned(g: Graph, pat: Graph, anchor: int, w: int) -> bool:
    p = pat.n
    order = [anchor] + [i for i in range(p) if i != anchor]
    assign: dict[int, int] = {}
    used = 0

    def rec(idx: int) -> bool:
        nonlocal used
        if idx == p:
            return True
        i = order[idx]
        allowed = g.full_mask() & ~used
        if idx == 0:
            allowed &= 1 << w
        for j in assign:
            if pat.has_edge(j, i):
                allowed &= g.adj[assign[j]]
            else:
                allowed &= ~g.adj[assign[j]]
        for v in bits(allowed):
            assign[i] = v
            used |= 1 << v
            if rec(idx + 1):
                return True
            del assign[i]
            used &= ~(1 << v)
        return False

    return rec(0)
