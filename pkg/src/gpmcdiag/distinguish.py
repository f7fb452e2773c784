"""Deciding whether two fault pairs can be told apart by some syndrome.

Two routes are kept deliberately separate so each can check the other:

- ``distinguishable`` evaluates the two structural conditions (a fault-free
  vertex that can test a one-sided faulty vertex over a non-faulty edge, or a
  one-sided faulty edge with both endpoints fault-free on the other side).
- ``distinguishable_oracle`` compares forced outcomes test by test: the
  syndrome sets of two patterns intersect exactly when no test is forced to
  opposite values, because unconstrained tests can always be set to agree.
- ``distinguishable_enumerated`` literally materializes both syndrome sets and
  intersects them; it exists to validate the forced-outcome reduction and is
  limited to graphs with at most 12 tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _masks
from .errors import GraphMismatchError, InputError
from .faults import FaultPair
from .graph import Graph


@dataclass(frozen=True)
class Witness:
    """Which condition fired, at which edge, and which pair plays the first role."""

    condition: int              # 1 = testable faulty vertex, 2 = testable faulty edge
    edge: tuple[int, int]
    direction: int              # 1 or 2: which input pair holds the fault being exposed


@dataclass(frozen=True)
class Verdict:
    distinguishable: bool
    witness: Witness | None = None


def _check_pair_args(g: Graph, p1: FaultPair, p2: FaultPair):
    if p1.graph is not g or p2.graph is not g:
        raise GraphMismatchError("fault pairs must be bound to the given graph")
    if p1.faulty_vertices == p2.faulty_vertices and p1.faulty_edges == p2.faulty_edges:
        raise InputError("distinguishability is defined for two distinct fault pairs")


def distinguishable(g: Graph, p1: FaultPair, p2: FaultPair) -> Verdict:
    """Structural-condition route; returns a checkable witness when positive.

    The reported witness uses the lexicographically smallest qualifying edge.
    """
    _check_pair_args(g, p1, p2)
    lay = _masks.layout_of(g)
    hit = _masks.find_condition_witness(lay, p1.f_mask, p1.s_mask, p2.f_mask, p2.s_mask)
    if hit is None:
        return Verdict(False)
    condition, e, direction = hit
    return Verdict(True, Witness(condition, e, direction))


def distinguishable_oracle(g: Graph, p1: FaultPair, p2: FaultPair) -> bool:
    """Forced-outcome route: the syndrome sets are disjoint iff some test is
    forced to pass under one pair and to fail under the other."""
    _check_pair_args(g, p1, p2)
    lay = _masks.layout_of(g)
    ff1, fp1 = _masks.forced_masks(lay, p1.f_mask, p1.s_mask)
    ff2, fp2 = _masks.forced_masks(lay, p2.f_mask, p2.s_mask)
    # sanity: a pattern always shares a syndrome with itself
    assert _masks.share_syndrome(ff1, fp1, ff1, fp1)
    assert _masks.share_syndrome(ff2, fp2, ff2, fp2)
    return not _masks.share_syndrome(ff1, fp1, ff2, fp2)


ENUMERATION_TEST_LIMIT = 12


def _sigma_set(lay, f_mask: int, s_mask: int) -> frozenset[int]:
    """Every syndrome (as a fail bitmask) the pattern can produce."""
    ff, fp = _masks.forced_masks(lay, f_mask, s_mask)
    arb_positions = list(_masks.bits(lay.all_tests & ~(ff | fp)))
    out = set()
    for assignment in range(1 << len(arb_positions)):
        fail = ff
        for i, pos in enumerate(arb_positions):
            if (assignment >> i) & 1:
                fail |= 1 << pos
        out.add(fail)
    return frozenset(out)


def distinguishable_enumerated(g: Graph, p1: FaultPair, p2: FaultPair) -> bool:
    """Literal syndrome-set intersection; only for graphs with <= 12 tests."""
    _check_pair_args(g, p1, p2)
    lay = _masks.layout_of(g)
    if 2 * lay.m > ENUMERATION_TEST_LIMIT:
        raise InputError(
            f"literal enumeration is limited to graphs with <= {ENUMERATION_TEST_LIMIT} tests")
    s1 = _sigma_set(lay, p1.f_mask, p1.s_mask)
    s2 = _sigma_set(lay, p2.f_mask, p2.s_mask)
    return s1.isdisjoint(s2)


def all_consistent_pairs(g: Graph, max_vertices: int, max_edges: int) -> list[FaultPair]:
    """Every consistent fault pair within the size bounds, in lexicographic
    (|F|, F, |S|, S) order.  Intended for exhaustive checks on small graphs."""
    from .faults import make_fault_pair

    out = []
    for fsize in range(max_vertices + 1):
        for fverts in combinations(range(g.vertex_count), fsize):
            fset = set(fverts)
            free_edges = [e for e in g.edges if e[0] not in fset and e[1] not in fset]
            for ssize in range(max_edges + 1):
                for sedges in combinations(free_edges, ssize):
                    out.append(make_fault_pair(g, fverts, sedges))
    return out
