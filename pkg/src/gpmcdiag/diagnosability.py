"""Exhaustive computation of the restricted diagnosability parameters.

``is_ts_diagnosable`` decides whether every two distinct in-bound consistent
fault pairs are distinguishable.  Two exact methods are provided:

- "full": enumerate every consistent pair within bounds and compare all of
  them pairwise.  The reference method; practical up to 8-vertex graphs.
- "local": search directly for the difference structure of an
  indistinguishable pair.  Writing X1 = F1 - F2, X2 = F2 - F1, C = F1 & F2,
  a witness exists exactly when disjoint (X1, X2, C) exist with X1 or X2
  nonempty, |X1| + |C| <= t, |X2| + |C| <= t, and each of X1, X2 sends at
  most s edges to vertices outside X1 | X2 | C.  The faulty edge sets are
  then forced (each side's uncovered neighbors are blocked by the other
  side's edges), so no edge subsets are ever enumerated.  This makes the
  4-dimensional hypercube cheap while remaining exact; the test suite
  cross-validates the two methods on every small graph in the gallery.

Vertex-transitive graphs are searched from the single seed vertex 0, since
any witness can be translated to one whose smallest difference vertex is 0;
``audit=True`` disables that shortcut and sweeps every seed.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from . import _masks
from .errors import InputError
from .faults import FaultPair, make_fault_pair
from .graph import Graph, incident_edges, min_degree


class TsResult(NamedTuple):
    diagnosable: bool
    witness: tuple[FaultPair, FaultPair] | None
    stats: dict


@dataclass
class DiagnosabilityReport:
    """Computed parameter value with the extremal witness proving value+1 fails."""

    graph_name: str
    kind: str                    # "edge-restricted" or "vertex-restricted-edge"
    level: int                   # h (edge budget) or r (vertex budget)
    value: int
    witness: tuple[FaultPair, FaultPair] | None
    elapsed_seconds: float
    stats: dict = field(default_factory=dict)
    outside_analyzed_range: bool = False


@dataclass(frozen=True)
class AnalyticBounds:
    """Closed-form upper bounds implied by the minimum degree."""

    t_h_bound: int
    s1_bound: int


def analytic_upper_bounds(g: Graph, h: int) -> AnalyticBounds:
    """Bounds t_h <= delta - h and s_1 <= delta - 2, clamped at zero.

    Only valid for h up to the minimum degree; beyond that the construction
    backing the bound does not exist and the request is rejected.
    """
    delta = min_degree(g)
    if not 0 <= h <= delta:
        raise InputError(f"edge budget h={h} outside the analyzed range 0..{delta}")
    return AnalyticBounds(t_h_bound=max(delta - h, 0), s1_bound=max(delta - 2, 0))


# ---------------------------------------------------------------------------
# witness constructions
# ---------------------------------------------------------------------------

def construct_indistinguishable_witness(g: Graph, u: int, h: int) -> tuple[FaultPair, FaultPair]:
    """The vertex-seeded indistinguishable pair with edge budget h.

    With u's neighbors ordered by ascending id, the first pair makes u and the
    last d(u) - h neighbors faulty; the second makes only those neighbors
    faulty and instead blames the first h incident edges.  A good tester can
    never reach u over a non-blamed edge, so the two circumstances produce a
    common syndrome.  Proves t_h <= d(u) - h; tight when d(u) is minimum.
    """
    g.check_vertex(u)
    nbrs = sorted(g._adj[u])
    if not 0 <= h <= len(nbrs):
        raise InputError(f"edge budget h={h} outside 0..deg({u})={len(nbrs)}")
    first, rest = nbrs[:h], nbrs[h:]
    p1 = make_fault_pair(g, {u, *rest}, set())
    p2 = make_fault_pair(g, rest, {(min(u, w), max(u, w)) for w in first})
    _assert_witness(g, p1, p2)
    return p1, p2


def construct_edge_witness(g: Graph, e) -> tuple[FaultPair, FaultPair]:
    """The edge-seeded indistinguishable pair ({u}, NE(v)-e) vs ({v}, NE(u)-e).

    Each side blames the opposite endpoint's remaining incident edges, so every
    test that could expose the difference is blocked.  Both faulty edge sets
    have size degree-1; with both endpoints at minimum degree this refutes
    (1, delta-1)-diagnosability and hence bounds the single-fault edge
    diagnosability by delta - 2.
    """
    ce = g.check_edge(e)
    delta = min_degree(g)
    a, b = ce
    if len(g._adj[a]) == delta:
        u, v = a, b
    elif len(g._adj[b]) == delta:
        u, v = b, a
    else:
        raise InputError(f"edge {a}-{b} has no endpoint of minimum degree {delta}")
    p1 = make_fault_pair(g, {u}, incident_edges(g, v) - {ce})
    p2 = make_fault_pair(g, {v}, incident_edges(g, u) - {ce})
    _assert_witness(g, p1, p2)
    return p1, p2


def _assert_witness(g: Graph, p1: FaultPair, p2: FaultPair):
    lay = _masks.layout_of(g)
    if not _masks.pairs_indistinguishable(lay, p1.f_mask, p1.s_mask, p2.f_mask, p2.s_mask):
        raise AssertionError(f"constructed witness {p1} vs {p2} is distinguishable")
    ff1, fp1 = _masks.forced_masks(lay, p1.f_mask, p1.s_mask)
    ff2, fp2 = _masks.forced_masks(lay, p2.f_mask, p2.s_mask)
    if not _masks.share_syndrome(ff1, fp1, ff2, fp2):
        raise AssertionError("condition check and forced-outcome check disagree")


# ---------------------------------------------------------------------------
# full method: literal pair enumeration
# ---------------------------------------------------------------------------

def _candidate_groups(g: Graph, t: int, s: int):
    """Consistent (f_mask, [s_mask, ...]) groups in lexicographic order."""
    lay = _masks.layout_of(g)
    groups = []
    for fsize in range(min(t, g.vertex_count) + 1):
        for fverts in combinations(range(g.vertex_count), fsize):
            fmask = 0
            touched = 0
            for v in fverts:
                fmask |= 1 << v
                touched |= lay.inc_mask[v]
            free = [k for k in range(lay.m) if not (touched >> k) & 1]
            smasks = []
            for ssize in range(min(s, len(free)) + 1):
                for sel in combinations(free, ssize):
                    sm = 0
                    for k in sel:
                        sm |= 1 << k
                    smasks.append(sm)
            groups.append((fmask, smasks))
    return groups


def _full_search(g: Graph, t: int, s: int):
    """First indistinguishable pair in lexicographic order, or None.

    Pairs sharing the same faulty vertex set are always distinguishable (the
    extra faulty edge has fault-free endpoints on both sides), so comparisons
    are only made across distinct vertex sets.
    """
    lay = _masks.layout_of(g)
    groups = _candidate_groups(g, t, s)
    flat = [(f, sm) for f, smasks in groups for sm in smasks]
    starts = {}
    pos = 0
    for f, smasks in groups:
        starts[pos] = pos + len(smasks)
        pos += len(smasks)
    checked = 0
    indist = _masks.pairs_indistinguishable
    i = 0
    block_end = 0
    for i, (f1, s1) in enumerate(flat):
        if i in starts:
            block_end = starts[i]
        for j in range(block_end, len(flat)):
            f2, s2 = flat[j]
            checked += 1
            if indist(lay, f1, s1, f2, s2):
                return (f1, s1, f2, s2), {"candidates": len(flat), "pairs_examined": checked}
    return None, {"candidates": len(flat), "pairs_examined": checked}


# ---------------------------------------------------------------------------
# local method: difference-structure search
# ---------------------------------------------------------------------------

def _cover_subset(cands, need1, need2, cmax):
    """A subset of candidate vertices achieving both gain targets, or None.

    ``cands`` is a list of (vertex, gain1, gain2); depth-first with an
    admissible remaining-gain bound, first solution wins, so the result is
    deterministic for a fixed candidate order.
    """
    k = len(cands)
    suf1 = [0] * (k + 1)
    suf2 = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suf1[i] = max(suf1[i + 1], cands[i][1])
        suf2[i] = max(suf2[i + 1], cands[i][2])

    def walk(i, left, n1, n2, acc):
        if n1 <= 0 and n2 <= 0:
            return acc
        if left == 0 or i == k:
            return None
        if n1 > left * suf1[i] or n2 > left * suf2[i]:
            return None
        v, g1, g2 = cands[i]
        taken = walk(i + 1, left - 1, n1 - g1, n2 - g2, acc + [v])
        if taken is not None:
            return taken
        return walk(i + 1, left, n1, n2, acc)

    return walk(0, cmax, need1, need2, [])


def _search_seed(g: Graph, t: int, s: int, seed: int):
    """Difference-structure witness whose smallest difference vertex is ``seed``.

    Returns ((f1, s1, f2, s2) masks or None, structures_examined).
    """
    lay = _masks.layout_of(g)
    n = g.vertex_count
    nbr = lay.nbr_mask
    rest = range(seed + 1, n)
    examined = 0
    for size1 in range(1, min(t, n) + 1):
        for tail in combinations(rest, size1 - 1):
            x1 = (seed,) + tail
            x1mask = 0
            for v in x1:
                x1mask |= 1 << v
            pool = [v for v in rest if not (x1mask >> v) & 1]
            for size2 in range(0, min(t, len(pool)) + 1):
                cmax_all = min(t - size1, t - size2)
                if cmax_all < 0:
                    continue
                for x2 in combinations(pool, size2):
                    examined += 1
                    x2mask = 0
                    for v in x2:
                        x2mask |= 1 << v
                    xmask = x1mask | x2mask
                    outside = ~xmask
                    cover1 = sum((nbr[v] & outside).bit_count() for v in x1)
                    cover2 = sum((nbr[v] & outside).bit_count() for v in x2)
                    cmask = 0
                    if cover1 > s or cover2 > s:
                        if cmax_all == 0:
                            continue
                        need1 = cover1 - s
                        need2 = cover2 - s
                        cand_mask = 0
                        for v in x1 if need1 > 0 else ():
                            cand_mask |= nbr[v]
                        for v in x2 if need2 > 0 else ():
                            cand_mask |= nbr[v]
                        cand_mask &= outside
                        cands = []
                        for c in _masks.bits(cand_mask):
                            g1 = (nbr[c] & x1mask).bit_count()
                            g2 = (nbr[c] & x2mask).bit_count()
                            cands.append((c, g1, g2))
                        cands.sort(key=lambda cg: (-(cg[1] + cg[2]), cg[0]))
                        chosen = _cover_subset(cands, need1, need2, cmax_all)
                        if chosen is None:
                            continue
                        for c in chosen:
                            cmask |= 1 << c
                    f1 = x1mask | cmask
                    f2 = x2mask | cmask
                    umask = xmask | cmask
                    s1 = 0
                    for v in x2:
                        for vb, eb, _w, _e in lay.adj_entries[v]:
                            if vb & umask == 0:
                                s1 |= eb
                    s2 = 0
                    for v in x1:
                        for vb, eb, _w, _e in lay.adj_entries[v]:
                            if vb & umask == 0:
                                s2 |= eb
                    return (f1, s1, f2, s2), examined
    return None, examined


def _seed_task(payload):
    g, t, s, seed = payload
    return _search_seed(g, t, s, seed)


def _local_search(g: Graph, t: int, s: int, audit: bool, jobs: int):
    if g.vertex_transitive and not audit:
        seeds = [0] if g.vertex_count else []
    else:
        seeds = list(range(g.vertex_count))
    examined = 0
    if jobs > 1 and len(seeds) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_seed_task, [(g, t, s, m) for m in seeds]))
        # stats mirror the sequential early-exit walk regardless of worker order
        for hit, count in results:
            examined += count
            if hit is not None:
                return hit, {"structures_examined": examined, "seeds": len(seeds)}
        return None, {"structures_examined": examined, "seeds": len(seeds)}
    for m in seeds:
        hit, count = _search_seed(g, t, s, m)
        examined += count
        if hit is not None:
            return hit, {"structures_examined": examined, "seeds": len(seeds)}
    return None, {"structures_examined": examined, "seeds": len(seeds)}


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

FULL_METHOD_VERTEX_LIMIT = 8


def _resolve_method(g: Graph, method: str) -> str:
    if method == "auto":
        return "full" if g.vertex_count <= FULL_METHOD_VERTEX_LIMIT else "local"
    if method not in ("full", "local"):
        raise InputError(f"unknown search method {method!r}")
    return method


def _witness_pairs(g: Graph, masks) -> tuple[FaultPair, FaultPair]:
    lay = _masks.layout_of(g)
    f1, s1, f2, s2 = masks
    p1 = make_fault_pair(g, set(_masks.bits(f1)), {lay.edges[k] for k in _masks.bits(s1)})
    p2 = make_fault_pair(g, set(_masks.bits(f2)), {lay.edges[k] for k in _masks.bits(s2)})
    _assert_witness(g, p1, p2)
    return p1, p2


def is_ts_diagnosable(g: Graph, t: int, s: int, *, method: str = "auto",
                      audit: bool = False, jobs: int = 1) -> TsResult:
    """Whether every two distinct consistent pairs within (t, s) are distinguishable.

    On failure the witness is an indistinguishable pair, re-validated against
    both distinguishability routes before being returned.
    """
    if t < 0 or s < 0:
        raise InputError("bounds t and s must be non-negative")
    chosen = _resolve_method(g, method)
    if chosen == "full":
        masks, stats = _full_search(g, t, s)
    else:
        masks, stats = _local_search(g, t, s, audit, jobs)
    stats = {"method": chosen, **stats}
    if masks is None:
        return TsResult(True, None, stats)
    return TsResult(False, _witness_pairs(g, masks), stats)


def _merge_stats(total: dict, level_stats: dict):
    for key in ("pairs_examined", "structures_examined", "candidates"):
        if key in level_stats:
            total[key] = total.get(key, 0) + level_stats[key]


def edge_restricted_diagnosability(g: Graph, h: int, *, method: str = "auto",
                                   audit: bool = False, jobs: int = 1) -> DiagnosabilityReport:
    """Largest t such that the graph is (t, h)-diagnosable, by ascending search.

    A failure at (t, s) is also a failure at any larger bounds, so the search
    stops at the first non-diagnosable level and attaches its witness.  Edge
    budgets beyond the minimum degree are computed all the same but flagged,
    since the closed-form bounds no longer apply there.
    """
    if g.vertex_count == 0:
        raise InputError("diagnosability of the empty graph is undefined")
    if not 0 <= h <= len(g.edges):
        raise InputError(f"edge budget h={h} outside 0..{len(g.edges)}")
    started = time.perf_counter()
    stats: dict = {}
    value = -1
    witness = None
    t = 0
    while t <= g.vertex_count:
        result = is_ts_diagnosable(g, t, h, method=method, audit=audit, jobs=jobs)
        stats.setdefault("method", result.stats["method"])
        _merge_stats(stats, result.stats)
        if result.diagnosable:
            value = t
            t += 1
            continue
        witness = result.witness
        break
    return DiagnosabilityReport(
        graph_name=g.name,
        kind="edge-restricted",
        level=h,
        value=value,
        witness=witness,
        elapsed_seconds=time.perf_counter() - started,
        stats=stats,
        outside_analyzed_range=h > min_degree(g),
    )


def vertex_restricted_edge_diagnosability(g: Graph, r: int, *, method: str = "auto",
                                          audit: bool = False, jobs: int = 1) -> DiagnosabilityReport:
    """Largest s such that the graph is (r, s)-diagnosable.

    With no faulty vertices allowed every edge status is pinned by its two
    tests, so r=0 yields the edge count with no search.  For r >= 1 the value
    is -1 when even (r, 0) fails (possible only on degenerate graphs such as
    a single vertex or an isolated edge component).
    """
    if g.vertex_count == 0:
        raise InputError("diagnosability of the empty graph is undefined")
    if r < 0:
        raise InputError("vertex budget r must be non-negative")
    started = time.perf_counter()
    if r == 0:
        return DiagnosabilityReport(
            graph_name=g.name,
            kind="vertex-restricted-edge",
            level=0,
            value=len(g.edges),
            witness=None,
            elapsed_seconds=time.perf_counter() - started,
            stats={"method": "analytic"},
        )
    stats: dict = {}
    value = -1
    witness = None
    s = 0
    while s <= len(g.edges) + 1:
        result = is_ts_diagnosable(g, r, s, method=method, audit=audit, jobs=jobs)
        stats.setdefault("method", result.stats["method"])
        _merge_stats(stats, result.stats)
        if result.diagnosable:
            value = s
            s += 1
            continue
        witness = result.witness
        break
    return DiagnosabilityReport(
        graph_name=g.name,
        kind="vertex-restricted-edge",
        level=r,
        value=value,
        witness=witness,
        elapsed_seconds=time.perf_counter() - started,
        stats=stats,
    )


def pmc_diagnosability(g: Graph, *, method: str = "auto", audit: bool = False,
                       jobs: int = 1) -> int:
    """Classical diagnosability: vertex faults only, no edge budget."""
    return edge_restricted_diagnosability(g, 0, method=method, audit=audit, jobs=jobs).value
