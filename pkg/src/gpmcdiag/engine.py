"""Syndrome decoding: locate the fault pair from observed test results.

Decoding enumerates the consistent fault pairs within the (t, s) bounds.  On a
(t, s)-diagnosable graph a syndrome produced by an in-bound pair has exactly
one in-bound explanation, so the decoder pinpoints it; otherwise the result
honestly reports every candidate rather than ranking them, because the model
gives no grounds to prefer one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from . import _masks
from .errors import GraphMismatchError, InputError
from .faults import FaultPair, Syndrome, _candidate_masks, _pair_from_masks
from .graph import Graph


class DiagnosisStatus(Enum):
    UNIQUE = "unique"
    AMBIGUOUS = "ambiguous"
    NO_CANDIDATE = "no-candidate"


DEFAULT_CANDIDATE_CAP = 64


@dataclass(frozen=True)
class DiagnosisResult:
    """Decoding outcome; ``total_candidates`` is always exact, the candidate
    list is truncated to the cap when an ambiguity explodes."""

    status: DiagnosisStatus
    candidates: tuple[FaultPair, ...]
    total_candidates: int

    @property
    def unique_pair(self) -> FaultPair:
        if self.status is not DiagnosisStatus.UNIQUE:
            raise InputError(f"diagnosis is {self.status.value}, not unique")
        return self.candidates[0]


def diagnose(g: Graph, sig: Syndrome, t: int, s: int, *,
             candidate_cap: int = DEFAULT_CANDIDATE_CAP) -> DiagnosisResult:
    """All in-bound fault pairs consistent with the syndrome, classified."""
    if sig.graph is not g:
        raise GraphMismatchError("syndrome belongs to a different graph")
    if t < 0 or s < 0:
        raise InputError("bounds t and s must be non-negative")
    if candidate_cap < 1:
        raise InputError("candidate cap must be positive")
    lay = _masks.layout_of(g)
    found = _candidate_masks(lay, sig.fail_mask, t, s)
    total = len(found)
    if total == 0:
        return DiagnosisResult(DiagnosisStatus.NO_CANDIDATE, (), 0)
    status = DiagnosisStatus.UNIQUE if total == 1 else DiagnosisStatus.AMBIGUOUS
    shown = tuple(_pair_from_masks(g, lay, f, sm) for f, sm in found[:candidate_cap])
    return DiagnosisResult(status, shown, total)


EXHAUSTIVE_ADVERSARY_LIMIT = 16
SAMPLED_ADVERSARY_COUNT = 256


def adversarial_roundtrip(g: Graph, fp: FaultPair, t: int, s: int, *,
                          seed: int = 0) -> bool:
    """True when every adversary choice still decodes to the injected pair.

    Every assignment of the faulty testers' results is tried when there are at
    most 16 of them, otherwise 256 seeded random assignments.  Intended for
    graphs already known (t, s)-diagnosable; a False from an in-bound pair on
    such a graph would contradict diagnosability.
    """
    if fp.graph is not g:
        raise GraphMismatchError("fault pair belongs to a different graph")
    if len(fp.faulty_vertices) > t or len(fp.faulty_edges) > s:
        raise InputError("injected pair exceeds the diagnosis bounds")
    lay = _masks.layout_of(g)
    ff, fpm = _masks.forced_masks(lay, fp.f_mask, fp.s_mask)
    arb_positions = list(_masks.bits(lay.all_tests & ~(ff | fpm)))
    k = len(arb_positions)
    if k <= EXHAUSTIVE_ADVERSARY_LIMIT:
        assignments = range(1 << k)
    else:
        rng = random.Random(seed)
        assignments = [rng.getrandbits(k) for _ in range(SAMPLED_ADVERSARY_COUNT)]
    expected = (fp.f_mask, fp.s_mask)
    for assignment in assignments:
        fail = ff
        for i, pos in enumerate(arb_positions):
            if (assignment >> i) & 1:
                fail |= 1 << pos
        found = _candidate_masks(lay, fail, t, s, limit=2)
        if len(found) != 1 or found[0] != expected:
            return False
    return True
