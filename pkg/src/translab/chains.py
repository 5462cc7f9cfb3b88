"""Chains of conditions and finite approximations of the limit objects.

A chain is a strictly increasing sequence of conditions; its approximation
snapshots the last stage and certifies stability (earlier stages are exact
restrictions of later ones).  On top of approximations live the
four-witness intersection check, the sum trichotomy and the triangle scan.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .errors import ClaimViolation, StabilityError
from .poset import (
    SUM_ETA_ETA,
    SUM_ETA_ETA_RHO,
    SUM_RHO,
    Condition,
    extend_with_label,
    minimal_condition,
    sum_class_table,
    validate,
)
from .words import Word, express_in_basis, is_prefix, restrict


@dataclass(frozen=True)
class Chain:
    stages: tuple[Condition, ...]

    def last(self) -> Condition:
        return self.stages[-1]


def _labels_only_reach(count: int, target_n: int) -> bool:
    """Would adding count labels to a minimal condition reach target_n?"""
    n, size = 1, 1
    for _ in range(count):
        n += size + 1
        size += 1
    return n >= target_n


def build_chain(labels: list[int], target_n: int, seed: int = 0) -> Chain:
    """Chain from a minimal condition absorbing every label, reaching target_n.

    User labels are added in list order.  When they alone cannot reach
    target_n, scratch-label extensions (fresh integers past every label)
    are interleaved among them in an order driven by the seed.
    """
    if not labels:
        raise ValueError("need at least one label")
    if len(set(labels)) != len(labels):
        raise ValueError(f"labels must be distinct, got {labels}")
    rng = random.Random(seed)
    stages = [minimal_condition(labels[0])]
    pending = list(labels[1:])
    need_scratch = not _labels_only_reach(len(pending), target_n)
    scratch_base = max(labels) + 1
    while pending or stages[-1].n < target_n:
        current = stages[-1]
        if pending and (not need_scratch or current.n >= target_n or rng.random() < 0.5):
            nxt = pending.pop(0)
        else:
            nxt = max(scratch_base, max(current.u) + 1)
        stages.append(extend_with_label(current, nxt, assume_valid=True))
    return Chain(tuple(stages))


@dataclass(frozen=True)
class GenericApproximation:
    """Finite-stage snapshot: per-label words h, leaf sets T, links r."""

    n: int
    h: dict[int, Word]
    T: tuple[frozenset[Word], ...]
    r: dict[tuple[int, int], Word]


def approximation(chain: Chain, *, assume_valid: bool = False) -> GenericApproximation:
    """Snapshot of the last stage, after a full stability sweep.

    For every stage pair s < t the sweep requires t's eta and rho words to
    restrict onto s's, K and ell to be preserved, and t's level-n_s tree
    slices to equal s's leaf sets.  A failure raises StabilityError.
    """
    if not chain.stages:
        raise ValueError("empty chain")
    if not assume_valid:
        for idx, stage in enumerate(chain.stages):
            violations = validate(stage)
            if violations:
                raise ValueError(f"stage {idx} invalid: {violations[0]}")
    for (i, s), (j, t) in itertools.combinations(enumerate(chain.stages), 2):
        for a in s.u:
            if restrict(t.eta[a], s.n) != s.eta[a]:
                raise StabilityError(f"stages {i},{j}: eta[{a}] not an extension")
            if s.K[a] != t.K[a]:
                raise StabilityError(f"stages {i},{j}: K[{a}] changed")
        for a, b in s.pairs():
            if s.ell(a, b) != t.ell(a, b):
                raise StabilityError(f"stages {i},{j}: ell{(a, b)} changed")
            if not is_prefix(s.rho(a, b), t.rho(a, b)):
                raise StabilityError(f"stages {i},{j}: rho{(a, b)} not extended")
        for m in range(s.m_star):
            if t.trees[m].level(s.n) != s.trees[m].leaves:
                raise StabilityError(f"stages {i},{j}: tree {m} slice changed")
    top = chain.last()
    return GenericApproximation(
        n=top.n,
        h=dict(top.eta),
        T=tuple(t.leaves for t in top.trees),
        r={pair: rho for pair, (rho, _) in top.mu.items()},
    )


@dataclass(frozen=True)
class WitnessSet:
    """The four certified common members of the two translated leaf unions.

    ``certificates[w]`` holds ((m_a, leaf_a), (m_b, leaf_b)) with
    w = h[alpha] + leaf_a, leaf_a in T[m_a], and symmetrically for beta.
    """

    words: tuple[Word, Word, Word, Word]
    certificates: dict[Word, tuple[tuple[int, Word], tuple[int, Word]]]

    def as_set(self) -> frozenset[Word]:
        return frozenset(self.words)


def intersection_witnesses(g: GenericApproximation, alpha: int, beta: int) -> WitnessSet:
    """Zero, the link word, the eta sum, and the shifted eta sum, certified.

    Each must be expressible as h[alpha] + leaf and as h[beta] + leaf with
    the certifying trees named; a missing certificate or a collision is a
    ClaimViolation.
    """
    if alpha == beta or alpha not in g.h or beta not in g.h:
        raise ValueError(f"need two distinct labels of the approximation, got {alpha}, {beta}")
    key = (alpha, beta) if alpha < beta else (beta, alpha)
    ha, hb, r = g.h[alpha], g.h[beta], g.r[key]
    words = (Word.zeros(g.n), r, ha + hb, ha + hb + r)
    if len(set(words)) != 4:
        raise ClaimViolation(f"witnesses collide for labels {alpha}, {beta}: {words}")
    leaf_to_tree = {w: m for m, leaves in enumerate(g.T) for w in leaves}
    certificates = {}
    for w in words:
        sides = []
        for h_side in (ha, hb):
            leaf = w + h_side
            m = leaf_to_tree.get(leaf)
            if m is None:
                raise ClaimViolation(
                    f"witness {w} has no leaf certificate on the {h_side} side"
                )
            sides.append((m, leaf))
        certificates[w] = (sides[0], sides[1])
    return WitnessSet(words=words, certificates=certificates)


@dataclass(frozen=True)
class SumClassification:
    kind: str  # eta-eta | eta-eta-rho | rho | other
    alpha: Optional[int] = None
    beta: Optional[int] = None

    @property
    def color(self) -> Optional[int]:
        if self.kind == SUM_ETA_ETA:
            return 1
        if self.kind in (SUM_ETA_ETA_RHO, SUM_RHO):
            return 0
        return None


SUM_OTHER = "other"


def classify_sum(p: Condition, s: Word) -> SumClassification:
    """Trichotomy of a sum against the condition's independent vectors.

    eta[a]+eta[b] is color 1; eta[a]+eta[b]+rho(a,b) and rho(a,b) are color
    0; everything else is 'other'.  Decided by expressing s in the clause-C9
    basis; for out-of-poset data with dependent vectors, a direct candidate
    table is used instead.
    """
    if s.n != p.n:
        raise ValueError(f"sum has length {s.n}, condition height is {p.n}")
    basis = [p.eta[a] for a in p.u] + [p.mu[pr][0] for pr in sorted(p.mu)]
    try:
        support = express_in_basis(s, basis)
    except ValueError:
        hit = sum_class_table(p).get(s.bits)
        if hit is None:
            return SumClassification(SUM_OTHER)
        kind, alpha, beta = hit
        return SumClassification(kind, alpha, beta)
    if support is None:
        return SumClassification(SUM_OTHER)
    n_eta = len(p.u)
    eta_idx = sorted(i for i in support if i < n_eta)
    rho_idx = sorted(i - n_eta for i in support if i >= n_eta)
    pair_list = sorted(p.mu)
    if len(eta_idx) == 2 and not rho_idx:
        a, b = p.u[eta_idx[0]], p.u[eta_idx[1]]
        return SumClassification(SUM_ETA_ETA, a, b)
    if len(eta_idx) == 2 and len(rho_idx) == 1:
        a, b = p.u[eta_idx[0]], p.u[eta_idx[1]]
        if pair_list[rho_idx[0]] == (a, b):
            return SumClassification(SUM_ETA_ETA_RHO, a, b)
    if not eta_idx and len(rho_idx) == 1:
        a, b = pair_list[rho_idx[0]]
        return SumClassification(SUM_RHO, a, b)
    return SumClassification(SUM_OTHER)


@dataclass(frozen=True)
class TriangleCounterexample:
    sums: tuple[Word, Word, Word]
    kinds: tuple[str, str, str]


def triangle_scan(p: Condition) -> Optional[TriangleCounterexample]:
    """Search for three pairwise sums, all color 0, closing a triangle.

    Sums realized by leaf pairs and classified color 0 are paired up; if
    some xor of two of them again classifies color 0, that triple is the
    counterexample (for conditions in the poset, independence of the
    clause-C9 vectors makes this impossible).  Returns None on pass.
    Accepts out-of-poset data deliberately: negative controls with
    dependent vectors are how the scan's teeth are demonstrated.
    """
    table = sum_class_table(p)
    bits = [w.bits for w in p.leaves()]
    realized: set[int] = set()
    for i in range(len(bits)):
        bi = bits[i]
        for j in range(i + 1, len(bits)):
            realized.add(bi ^ bits[j])
    color0 = sorted(
        s for s in realized if s in table and table[s][0] in (SUM_ETA_ETA_RHO, SUM_RHO)
    )
    for x, y in itertools.combinations(color0, 2):
        z = x ^ y
        hit = table.get(z)
        if hit is not None and hit[0] in (SUM_ETA_ETA_RHO, SUM_RHO):
            return TriangleCounterexample(
                sums=(Word(p.n, x), Word(p.n, y), Word(p.n, z)),
                kinds=(table[x][0], table[y][0], hit[0]),
            )
    return None
