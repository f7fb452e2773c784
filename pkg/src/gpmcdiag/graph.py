"""Simple undirected graphs with dense integer vertex ids, plus topology builders.

Graphs are immutable after construction; every query here is pure, so values
can be shared freely between threads or worker processes.
"""

from __future__ import annotations

import math
import random
from collections import deque
from itertools import combinations

from .errors import InputError

#: Largest supported hypercube dimension.  2^20 vertices is already far past
#: the exhaustive-search scale this library targets; memory grows as n * 2^n.
HYPERCUBE_DIMENSION_CAP = 20


def edge(u: int, v: int) -> tuple[int, int]:
    """Canonical (min, max) form of an undirected edge."""
    if u == v:
        raise InputError(f"self-loop at vertex {u} is not a valid edge")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..vertex_count-1.

    Edges are stored canonically as (min, max) pairs; edge identity is by
    endpoints.  ``labels`` optionally attaches a text label per vertex
    (hypercubes use their bit strings).  ``vertex_transitive`` is set by
    builders whose output provably looks the same from every vertex; search
    code uses it to fix a single seed vertex.
    """

    __slots__ = (
        "vertex_count",
        "edges",
        "labels",
        "name",
        "vertex_transitive",
        "_adj",
        "_edge_set",
        "_layout",
    )

    def __init__(self, vertex_count, edges, labels=None, name="graph",
                 vertex_transitive=False):
        if vertex_count < 0:
            raise InputError("vertex_count must be non-negative")
        canon = []
        for (u, v) in edges:
            e = edge(u, v)
            if not (0 <= e[0] and e[1] < vertex_count):
                raise InputError(f"edge {u}-{v} has an endpoint outside 0..{vertex_count - 1}")
            canon.append(e)
        edge_set = frozenset(canon)
        if len(canon) != len(edge_set):
            raise InputError("duplicate edge in edge list")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != vertex_count:
                raise InputError("labels must cover every vertex")
        self.vertex_count = vertex_count
        self.edges = tuple(sorted(edge_set))
        self.labels = labels
        self.name = name
        self.vertex_transitive = vertex_transitive
        adj = [set() for _ in range(vertex_count)]
        for (u, v) in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._edge_set = edge_set
        self._layout = None  # test-layout cache, built on demand by faults

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._edge_set

    def check_vertex(self, u: int) -> int:
        if not isinstance(u, int) or not 0 <= u < self.vertex_count:
            raise InputError(f"vertex id {u!r} is not in 0..{self.vertex_count - 1}")
        return u

    def check_edge(self, e) -> tuple[int, int]:
        u, v = e
        ce = edge(self.check_vertex(u), self.check_vertex(v))
        if ce not in self._edge_set:
            raise InputError(f"edge {u}-{v} is not an edge of {self.name}")
        return ce

    def __repr__(self):
        return f"Graph({self.name}: {self.vertex_count} vertices, {len(self.edges)} edges)"


# ---------------------------------------------------------------------------
# structural queries
# ---------------------------------------------------------------------------

def neighbors(g: Graph, u: int) -> frozenset[int]:
    """All vertices adjacent to u."""
    return g._adj[g.check_vertex(u)]


def incident_edges(g: Graph, u: int) -> frozenset[tuple[int, int]]:
    """All edges having u as an endpoint."""
    g.check_vertex(u)
    return frozenset(edge(u, v) for v in g._adj[u])


def degree(g: Graph, u: int) -> int:
    return len(neighbors(g, u))


def min_degree(g: Graph) -> int:
    if g.vertex_count == 0:
        raise InputError("minimum degree of the empty graph is undefined")
    return min(len(s) for s in g._adj)


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices adjacent to both u and v; u and v must be distinct."""
    if u == v:
        raise InputError("common_neighbors requires two distinct vertices")
    return neighbors(g, u) & neighbors(g, v)


def girth(g: Graph):
    """Length of a shortest cycle, or math.inf for forests.

    BFS from every vertex; a non-tree edge seen at BFS level d closes a cycle
    of length at most d(u) + d(v) + 1, and the minimum over all start vertices
    is exact.  Fine at the graph sizes this library works with.
    """
    best = math.inf
    for source in range(g.vertex_count):
        dist = {source: 0}
        parent = {source: None}
        queue = deque([source])
        while queue:
            cur = queue.popleft()
            if dist[cur] * 2 >= best:
                continue
            for nxt in g._adj[cur]:
                if nxt not in dist:
                    dist[nxt] = dist[cur] + 1
                    parent[nxt] = cur
                    queue.append(nxt)
                elif parent[cur] != nxt:
                    best = min(best, dist[cur] + dist[nxt] + 1)
        if best == 3:
            return 3
    return best


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_hypercube(n: int) -> Graph:
    """The n-dimensional hypercube: 2^n vertices, adjacency = one flipped bit.

    Vertex i carries the label format(i, "0nb").  Label positions are counted
    from 1 starting at the leftmost character, so flipping position d of the
    label toggles integer bit (n - d).  This is the one place that fixes the
    label/bit mapping; hypercube_neighbor follows it.
    """
    if not 1 <= n <= HYPERCUBE_DIMENSION_CAP:
        raise InputError(f"hypercube dimension must be in 1..{HYPERCUBE_DIMENSION_CAP}")
    size = 1 << n
    edges = [(v, v ^ (1 << b)) for v in range(size) for b in range(n) if v < v ^ (1 << b)]
    labels = [format(v, f"0{n}b") for v in range(size)]
    return Graph(size, edges, labels=labels, name=f"hypercube-{n}", vertex_transitive=True)


def hypercube_neighbor(label: str, dim: int) -> str:
    """Label of the neighbor across dimension ``dim`` (1-based, from the left)."""
    if not label or any(c not in "01" for c in label):
        raise InputError(f"{label!r} is not a binary string")
    if not 1 <= dim <= len(label):
        raise InputError(f"dimension {dim} out of range 1..{len(label)}")
    i = dim - 1
    flipped = "1" if label[i] == "0" else "0"
    return label[:i] + flipped + label[i + 1:]


def build_path(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"path-{n}")


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least three vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n, edges, name=f"cycle-{n}", vertex_transitive=True)


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs at least one vertex")
    return Graph(n, list(combinations(range(n), 2)), name=f"complete-{n}",
                 vertex_transitive=True)


def build_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with each candidate edge kept independently; fixed seed, fixed graph."""
    if n < 1:
        raise InputError("random graph needs at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise InputError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges, name=f"random-{n}-p{p}-s{seed}")


_BUILDERS = {
    "hypercube": lambda n=None, **kw: build_hypercube(_need_int("n", n)),
    "path": lambda n=None, **kw: build_path(_need_int("n", n)),
    "cycle": lambda n=None, **kw: build_cycle(_need_int("n", n)),
    "complete": lambda n=None, **kw: build_complete(_need_int("n", n)),
    "random": lambda n=None, p=None, seed=None, **kw: build_random(
        _need_int("n", n), _need_float("p", p), _need_int("seed", seed)),
}


def _need_int(name, value):
    if value is None:
        raise InputError(f"topology parameter {name!r} is required")
    return int(value)


def _need_float(name, value):
    if value is None:
        raise InputError(f"topology parameter {name!r} is required")
    return float(value)


def build_named_topology(name: str, **params) -> Graph:
    """Build one of the stock topologies: hypercube, path, cycle, complete, random."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        known = ", ".join(sorted(_BUILDERS))
        raise InputError(f"unknown topology {name!r} (known: {known})") from None
    return builder(**params)


# ---------------------------------------------------------------------------
# edge-list text format and DOT export
# ---------------------------------------------------------------------------

def parse_edge_list(text: str, name: str = "edge-list") -> Graph:
    """Parse the plain text format: first line "n m", then m lines "u v".

    Lines starting with '#' and blank lines are ignored.  Errors carry the
    1-based line number of the offending line.
    """
    header = None
    edges = []
    expected = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two fields, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            header = (a, b)
            expected = b
            continue
        edges.append((lineno, a, b))
    if header is None:
        raise InputError("line 1: missing 'n m' header line")
    n, m = header
    if len(edges) != expected:
        raise InputError(f"header declares {m} edges but {len(edges)} were given")
    try:
        return Graph(n, [(a, b) for (_, a, b) in edges], name=name)
    except InputError:
        # rescan to report the offending line
        seen = set()
        for lineno, a, b in edges:
            try:
                e = edge(a, b)
            except InputError as exc:
                raise InputError(f"line {lineno}: {exc}") from None
            if not 0 <= e[0] <= e[1] < n:
                raise InputError(f"line {lineno}: edge {a}-{b} outside 0..{n - 1}") from None
            if e in seen:
                raise InputError(f"line {lineno}: duplicate edge {a}-{b}") from None
            seen.add(e)
        raise


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for (u, v) in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph) -> str:
    """GraphViz source for the graph, vertex labels included when present."""
    lines = ["graph G {"]
    for v in range(g.vertex_count):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for (u, v) in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
