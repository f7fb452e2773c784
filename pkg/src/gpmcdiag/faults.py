"""Fault pairs, directed tests, syndromes, and syndrome generation.

The fault model: a fault circumstance is a pair (F, S) of faulty vertices and
faulty edges where no edge of S touches a vertex of F.  Every edge carries two
directed tests, one per endpoint acting as tester.  A good tester reports
exactly whether its testee or the test edge is faulty; a faulty tester reports
an arbitrary but fixed value per test.  A syndrome is one complete assignment
of results to all tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import NamedTuple

from . import _masks
from .errors import ConsistencyError, GraphMismatchError, InputError
from .graph import Graph, edge


class TestOutcome(IntEnum):
    PASS = 0
    FAIL = 1


class ForcedOutcome(Enum):
    FORCED_PASS = "forced-pass"
    FORCED_FAIL = "forced-fail"
    ARBITRARY = "arbitrary"


class Test(NamedTuple):
    """Directed test: ``tester`` evaluates adjacent ``testee`` across ``edge``."""

    tester: int
    testee: int
    edge: tuple[int, int]


@dataclass(frozen=True)
class FaultPair:
    """A consistent fault circumstance bound to one graph.

    Constructing an inconsistent pair (an edge of S incident to a vertex of F)
    raises ConsistencyError; silent normalization would corrupt experiments.
    """

    graph: Graph
    faulty_vertices: frozenset[int]
    faulty_edges: frozenset[tuple[int, int]]
    f_mask: int = field(init=False, repr=False, compare=False, default=0)
    s_mask: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        g = self.graph
        for v in self.faulty_vertices:
            g.check_vertex(v)
        lay = _masks.layout_of(g)
        fm = _masks.vertex_mask(self.faulty_vertices)
        sm = 0
        for e in self.faulty_edges:
            ce = g.check_edge(e)
            if ce != e:
                raise InputError(f"edge {e} is not in canonical (min, max) form")
            if fm & lay.edge_vmask[lay.edge_index[ce]]:
                raise ConsistencyError(
                    f"faulty edge {ce[0]}-{ce[1]} is incident to a faulty vertex", edge=ce)
            sm |= 1 << lay.edge_index[ce]
        object.__setattr__(self, "f_mask", fm)
        object.__setattr__(self, "s_mask", sm)

    def __str__(self):
        fs = ",".join(map(str, sorted(self.faulty_vertices)))
        ss = ",".join(f"{u}-{v}" for (u, v) in sorted(self.faulty_edges))
        return f"(F={{{fs}}}, S={{{ss}}})"

    def to_record(self) -> dict:
        """Serializable form: {"F": [...], "S": [[u, v], ...]}."""
        return {
            "F": sorted(self.faulty_vertices),
            "S": [list(e) for e in sorted(self.faulty_edges)],
        }


def make_fault_pair(g: Graph, faulty_vertices, faulty_edges) -> FaultPair:
    """Validated fault pair; edges may be given in either endpoint order."""
    canon_edges = frozenset(edge(u, v) for (u, v) in faulty_edges)
    return FaultPair(g, frozenset(faulty_vertices), canon_edges)


def fault_pair_from_record(g: Graph, record: dict) -> FaultPair:
    try:
        fs, ss = record["F"], record["S"]
    except (KeyError, TypeError):
        raise InputError("fault pair record must have keys 'F' and 'S'") from None
    return make_fault_pair(g, fs, [tuple(e) for e in ss])


def _pair_from_masks(g: Graph, lay, f_mask: int, s_mask: int) -> FaultPair:
    return FaultPair(
        g,
        frozenset(_masks.bits(f_mask)),
        frozenset(lay.edges[k] for k in _masks.bits(s_mask)),
    )


# ---------------------------------------------------------------------------
# tests and forced outcomes
# ---------------------------------------------------------------------------

def enumerate_tests(g: Graph) -> tuple[Test, ...]:
    """Both directed tests of every edge, in canonical edge order."""
    out = []
    for (u, v) in g.edges:
        out.append(Test(u, v, (u, v)))
        out.append(Test(v, u, (u, v)))
    return tuple(out)


def _test_index(g: Graph, tester: int, testee: int) -> int:
    lay = _masks.layout_of(g)
    e = edge(tester, testee)
    k = lay.edge_index.get(e)
    if k is None:
        raise InputError(f"vertices {tester} and {testee} are not adjacent in {g.name}")
    return 2 * k if tester < testee else 2 * k + 1


def forced_outcome(t: Test, fp: FaultPair) -> ForcedOutcome:
    """What the model forces for one test under a fault pair."""
    g = fp.graph
    idx = _test_index(g, t.tester, t.testee)
    if g.edges[idx // 2] != edge(*t.edge):
        raise InputError(f"test edge {t.edge} does not join {t.tester} and {t.testee}")
    if t.tester in fp.faulty_vertices:
        return ForcedOutcome.ARBITRARY
    if t.testee in fp.faulty_vertices or edge(*t.edge) in fp.faulty_edges:
        return ForcedOutcome.FORCED_FAIL
    return ForcedOutcome.FORCED_PASS


# ---------------------------------------------------------------------------
# syndromes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Syndrome:
    """A complete test-result assignment; results align with enumerate_tests."""

    graph: Graph
    results: tuple[int, ...]

    def __post_init__(self):
        m = len(self.graph.edges)
        if len(self.results) != 2 * m:
            raise InputError(f"syndrome must assign all {2 * m} tests")
        if any(r not in (0, 1) for r in self.results):
            raise InputError("syndrome results must be 0 (pass) or 1 (fail)")

    @property
    def fail_mask(self) -> int:
        mask = 0
        for i, r in enumerate(self.results):
            if r:
                mask |= 1 << i
        return mask

    def outcome(self, tester: int, testee: int) -> TestOutcome:
        return TestOutcome(self.results[_test_index(self.graph, tester, testee)])

    def to_triples(self) -> list[tuple[int, int, int]]:
        """(tester, testee, outcome) rows in canonical test order."""
        return [(t.tester, t.testee, int(r))
                for t, r in zip(enumerate_tests(self.graph), self.results)]

    def __len__(self):
        return len(self.results)


def syndrome_from_triples(g: Graph, triples) -> Syndrome:
    results: list = [None] * (2 * len(g.edges))
    for tester, testee, outcome in triples:
        results[_test_index(g, tester, testee)] = int(outcome)
    missing = results.count(None)
    if missing:
        raise InputError(f"syndrome is incomplete: {missing} tests unassigned")
    return Syndrome(g, tuple(results))


def _syndrome_from_mask(g: Graph, fail_mask: int) -> Syndrome:
    m = len(g.edges)
    return Syndrome(g, tuple((fail_mask >> i) & 1 for i in range(2 * m)))


ADVERSARY_STRATEGIES = ("all-pass", "all-fail", "random", "explicit")


def generate_syndrome(fp: FaultPair, strategy: str = "all-pass", *,
                      seed: int | None = None, assignments=None) -> Syndrome:
    """A syndrome the fault pair can produce, with adversary-chosen free results.

    Tests with good testers get their forced value.  Tests by faulty testers
    are assigned by ``strategy``: "all-pass", "all-fail", "random" (requires
    ``seed``; same seed, same syndrome), or "explicit" (``assignments`` maps
    every (tester, testee) with a faulty tester to 0 or 1).
    """
    g = fp.graph
    lay = _masks.layout_of(g)
    ff, fp_mask = _masks.forced_masks(lay, fp.f_mask, fp.s_mask)
    arb = lay.all_tests & ~(ff | fp_mask)
    fail = ff
    if strategy == "all-pass":
        pass
    elif strategy == "all-fail":
        fail |= arb
    elif strategy == "random":
        if seed is None:
            raise InputError("random adversary requires an explicit seed")
        rng = random.Random(seed)
        for i in _masks.bits(arb):
            if rng.random() < 0.5:
                fail |= 1 << i
    elif strategy == "explicit":
        if assignments is None:
            raise InputError("explicit adversary requires assignments")
        assigned = dict(assignments)
        for i in _masks.bits(arb):
            t = enumerate_tests(g)[i]
            key = (t.tester, t.testee)
            if key not in assigned:
                raise InputError(f"no assignment for adversary-controlled test {key}")
            if assigned.pop(key):
                fail |= 1 << i
        if assigned:
            extra = sorted(assigned)
            raise InputError(f"assignments given for tests not adversary-controlled: {extra}")
    else:
        raise InputError(f"unknown adversary strategy {strategy!r}")
    return _syndrome_from_mask(g, fail)


def is_consistent(sig: Syndrome, fp: FaultPair) -> bool:
    """True when no test result contradicts its forced outcome under fp."""
    if sig.graph is not fp.graph:
        raise GraphMismatchError("syndrome and fault pair belong to different graphs")
    lay = _masks.layout_of(fp.graph)
    ff, fpm = _masks.forced_masks(lay, fp.f_mask, fp.s_mask)
    fail = sig.fail_mask
    return (ff & ~fail) == 0 and (fpm & fail) == 0


# ---------------------------------------------------------------------------
# consistent-pair enumeration (syndrome decoding core)
# ---------------------------------------------------------------------------

def _candidate_masks(lay, fail_mask: int, t: int, s: int, limit=None):
    """(f_mask, s_mask) of every in-bound fault pair consistent with the syndrome.

    Given a candidate F, the syndrome pins everything else down: a test by a
    good tester into a faulty testee must read fail; an edge between two good
    vertices must read the same in both directions, and reads fail exactly
    when the edge is faulty.  So S is forced per F, there is nothing to search.
    Results come out in (|F|, F) lexicographic order.
    """
    from itertools import combinations

    n, m = lay.n, lay.m
    found = []
    for fsize in range(t + 1):
        for fverts in combinations(range(n), fsize):
            f = 0
            for v in fverts:
                f |= 1 << v
            arb = 0
            bad_testee = 0
            touched = 0
            for v in fverts:
                arb |= lay.out_tests[v]
                bad_testee |= lay.in_tests[v]
                touched |= lay.inc_mask[v]
            # good tester, faulty testee: must fail
            if bad_testee & ~arb & ~fail_mask:
                continue
            # edges between good vertices: both directions forced equal
            good_edges = lay.all_edges & ~touched
            smask = 0
            ok = True
            ge = good_edges
            while ge:
                low = ge & -ge
                k = low.bit_length() - 1
                r1 = (fail_mask >> (2 * k)) & 1
                r2 = (fail_mask >> (2 * k + 1)) & 1
                if r1 != r2:
                    ok = False
                    break
                if r1:
                    smask |= low
                ge ^= low
            if not ok or smask.bit_count() > s:
                continue
            found.append((f, smask))
            if limit is not None and len(found) >= limit:
                return found
    return found


def enumerate_consistent_pairs(g: Graph, sig: Syndrome, t: int, s: int) -> list[FaultPair]:
    """All consistent fault pairs with |F| <= t and |S| <= s explaining sig."""
    if sig.graph is not g:
        raise GraphMismatchError("syndrome belongs to a different graph")
    if t < 0 or s < 0:
        raise InputError("bounds must be non-negative")
    lay = _masks.layout_of(g)
    return [_pair_from_masks(g, lay, f, sm)
            for f, sm in _candidate_masks(lay, sig.fail_mask, t, s)]
