"""Conditions over binary words: validation, order, extension, amalgamation.

A condition bundles a finite label set u, a height n, words eta per label,
m_star trees given by their height-n leaf sets, a map mu assigning each
label pair a linking word rho and a tree index ell, and a tree index K per
label.  The validator checks the nine structural clauses C1 to C9; the
order is componentwise end-extension (O1 to O4).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import ConstructionError
from .words import Word, is_prefix, lex_key, pad_zeros, rank_bits, restrict


@dataclass(frozen=True)
class FiniteTree:
    """A prefix-closed tree given by its nonempty set of height-n leaves."""

    height: int
    leaves: frozenset[Word]

    def __post_init__(self):
        if self.height < 1:
            raise ValueError(f"tree height must be positive, got {self.height}")
        if not self.leaves:
            raise ValueError("empty trees are not allowed")
        if any(w.n != self.height for w in self.leaves):
            raise ValueError(f"every leaf must have length {self.height}")

    def level(self, k: int) -> frozenset[Word]:
        """The level-k nodes (restrictions of leaves)."""
        return frozenset(restrict(w, k) for w in self.leaves)

    def pad(self, k: int) -> "FiniteTree":
        """Zero-extend every leaf by k coordinates."""
        return FiniteTree(self.height + k, frozenset(pad_zeros(w, k) for w in self.leaves))

    def contains(self, w: Word) -> bool:
        return w.n <= self.height and any(is_prefix(w, leaf) for leaf in self.leaves)


def tree_from_leaves(leaves: Iterable[Word]) -> FiniteTree:
    ws = frozenset(leaves)
    if not ws:
        raise ValueError("empty trees are not allowed")
    return FiniteTree(next(iter(ws)).n, ws)


@dataclass(frozen=True)
class Condition:
    u: tuple[int, ...]
    n: int
    m_star: int
    eta: dict[int, Word]
    trees: tuple[FiniteTree, ...]
    mu: dict[tuple[int, int], tuple[Word, int]]
    K: dict[int, int]

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in itertools.combinations(self.u, 2)]

    def rho(self, a: int, b: int) -> Word:
        return self.mu[_pair_key(a, b)][0]

    def ell(self, a: int, b: int) -> int:
        return self.mu[_pair_key(a, b)][1]

    def leaves(self) -> list[Word]:
        """All tree leaves, lex-sorted."""
        out: set[Word] = set()
        for t in self.trees:
            out |= t.leaves
        return sorted(out, key=lex_key)


def _pair_key(a: int, b: int) -> tuple[int, int]:
    if a == b:
        raise ValueError(f"label pair needs distinct labels, got {a} twice")
    return (a, b) if a < b else (b, a)


def make_condition(
    u: Iterable[int],
    n: int,
    m_star: int,
    eta: Mapping[int, Word],
    trees: Sequence[FiniteTree],
    mu: Mapping[tuple[int, int], tuple[Word, int]],
    K: Mapping[int, int],
) -> Condition:
    """Normalize raw components into a Condition (no clause validation)."""
    return Condition(
        u=tuple(sorted(u)),
        n=n,
        m_star=m_star,
        eta=dict(eta),
        trees=tuple(trees),
        mu={_pair_key(*k): (rho, ell) for k, (rho, ell) in mu.items()},
        K=dict(K),
    )


@dataclass(frozen=True)
class Violation:
    clause: str
    detail: str

    def __str__(self) -> str:
        return f"{self.clause}: {self.detail}"


def validate(p: Condition) -> list[Violation]:
    """Clause-by-clause check; an empty list means p is a condition."""
    out: list[Violation] = []
    shape_ok = True

    # C1: label set, height, tree count, eta domain and lengths.
    if not p.u:
        out.append(Violation("C1", "label set u is empty"))
        shape_ok = False
    if list(p.u) != sorted(set(p.u)) or any(a < 0 for a in p.u):
        out.append(Violation("C1", f"u must be sorted distinct non-negative labels, got {p.u}"))
        shape_ok = False
    if p.n < 1:
        out.append(Violation("C1", f"height n must be positive, got {p.n}"))
        shape_ok = False
    if p.m_star < 1:
        out.append(Violation("C1", f"tree count m_star must be positive, got {p.m_star}"))
        shape_ok = False
    if set(p.eta) != set(p.u):
        out.append(Violation("C1", f"eta domain {sorted(p.eta)} differs from u {list(p.u)}"))
        shape_ok = False
    else:
        for a in p.u:
            if p.eta[a].n != p.n:
                out.append(Violation("C1", f"eta[{a}] has length {p.eta[a].n}, expected {p.n}"))
                shape_ok = False

    # C2: trees of the right height (leaf nonemptiness holds by construction).
    if len(p.trees) != p.m_star:
        out.append(Violation("C2", f"{len(p.trees)} trees for m_star = {p.m_star}"))
        shape_ok = False
    else:
        for m, t in enumerate(p.trees):
            if t.height != p.n:
                out.append(Violation("C2", f"tree {m} has height {t.height}, expected {p.n}"))
                shape_ok = False

    # C3: mu total on unordered pairs, with in-range components.
    expected_pairs = {(a, b) for a, b in itertools.combinations(sorted(set(p.u)), 2)}
    if set(p.mu) != expected_pairs:
        missing = sorted(expected_pairs - set(p.mu))
        extra = sorted(set(p.mu) - expected_pairs)
        out.append(Violation("C3", f"mu pairs off: missing {missing}, extra {extra}"))
        shape_ok = False
    else:
        for pair, (rho, ell) in sorted(p.mu.items()):
            if rho.n != p.n:
                out.append(Violation("C3", f"rho{pair} has length {rho.n}, expected {p.n}"))
                shape_ok = False
            if not 0 <= ell < p.m_star:
                out.append(Violation("C3", f"ell{pair} = {ell} outside [0, {p.m_star})"))
                shape_ok = False

    # K domain (checked with C5 below but needed for shape).
    if set(p.K) != set(p.u):
        out.append(Violation("C5", f"K domain {sorted(p.K)} differs from u {list(p.u)}"))
        shape_ok = False

    if not shape_ok:
        return out

    # C4: both shifted words land in the linked tree.
    for a, b in p.pairs():
        rho, ell = p.mu[(a, b)]
        leaves = p.trees[ell].leaves
        for lab in (a, b):
            w = p.eta[lab] + rho
            if w not in leaves:
                out.append(Violation("C4", f"eta[{lab}]+rho{(a, b)} = {w} not a leaf of tree {ell}"))

    # C5: eta words sit in their K-tree.
    for a in p.u:
        if not 0 <= p.K[a] < p.m_star:
            out.append(Violation("C5", f"K[{a}] = {p.K[a]} outside [0, {p.m_star})"))
        elif p.eta[a] not in p.trees[p.K[a]].leaves:
            out.append(Violation("C5", f"eta[{a}] = {p.eta[a]} not a leaf of tree {p.K[a]}"))

    # C6: the index triple of (a, c) never coincides with that of (b, c).
    for a, b, c in itertools.combinations(p.u, 3):
        left = {p.K[a], p.K[c], p.ell(a, c)}
        right = {p.K[b], p.K[c], p.ell(b, c)}
        if left == right:
            out.append(Violation("C6", f"labels {a} < {b} < {c} share index set {sorted(left)}"))

    # C7: leaf sets pairwise disjoint.
    seen: dict[Word, int] = {}
    for m, t in enumerate(p.trees):
        for w in t.leaves:
            if w in seen:
                out.append(Violation("C7", f"trees {seen[w]} and {m} share leaf {w}"))
            else:
                seen[w] = m

    # C8: every leaf is an eta or a shifted eta.
    decomposable = {p.eta[a] for a in p.u}
    for a, b in p.pairs():
        rho = p.rho(a, b)
        decomposable.add(p.eta[a] + rho)
        decomposable.add(p.eta[b] + rho)
    for m, t in enumerate(p.trees):
        for w in t.leaves:
            if w not in decomposable:
                out.append(Violation("C8", f"leaf {w} of tree {m} is not an eta or shifted eta"))

    # C9: the eta and rho words are linearly independent.
    vectors = [p.eta[a].bits for a in p.u] + [p.mu[pr][0].bits for pr in sorted(p.mu)]
    if rank_bits(vectors) != len(vectors):
        out.append(
            Violation("C9", f"{len(vectors)} eta/rho vectors have rank {rank_bits(vectors)}")
        )
    return out


def _require_valid(p: Condition, who: str) -> None:
    violations = validate(p)
    if violations:
        details = "; ".join(str(v) for v in violations[:4])
        raise ValueError(f"{who}: invalid condition ({details})")


def minimal_condition(label: int) -> Condition:
    """Smallest condition: one label, height 1, one single-leaf tree."""
    if label < 0:
        raise ValueError(f"labels are non-negative, got {label}")
    one = Word.ones(1)
    return make_condition(
        u=[label],
        n=1,
        m_star=1,
        eta={label: one},
        trees=[FiniteTree(1, frozenset([one]))],
        mu={},
        K={label: 0},
    )


def leq_explain(p: Condition, q: Condition, *, assume_valid: bool = False) -> Optional[str]:
    """None when p <= q, else the first failing order clause."""
    if not assume_valid:
        _require_valid(p, "leq")
        _require_valid(q, "leq")
    if not set(p.u) <= set(q.u):
        return f"O1: labels {sorted(set(p.u) - set(q.u))} lost"
    if p.n > q.n:
        return f"O1: height shrinks {p.n} -> {q.n}"
    if p.m_star > q.m_star:
        return f"O1: tree count shrinks {p.m_star} -> {q.m_star}"
    for a in p.u:
        if restrict(q.eta[a], p.n) != p.eta[a]:
            return f"O2: eta[{a}] restriction mismatch"
    for m in range(p.m_star):
        if q.trees[m].level(p.n) != p.trees[m].leaves:
            return f"O3: tree {m} level-{p.n} slice changed"
    for a in p.u:
        if p.K[a] != q.K[a]:
            return f"O4: K[{a}] changed {p.K[a]} -> {q.K[a]}"
    for a, b in p.pairs():
        if p.ell(a, b) != q.ell(a, b):
            return f"O4: ell{(a, b)} changed"
        if not is_prefix(p.rho(a, b), q.rho(a, b)):
            return f"O4: rho{(a, b)} not extended"
    return None


def leq(p: Condition, q: Condition, *, assume_valid: bool = False) -> bool:
    return leq_explain(p, q, assume_valid=assume_valid) is None


def extend_with_label(p: Condition, alpha: int, *, assume_valid: bool = False) -> Condition:
    """One density step: absorb a fresh label, growing n and m_star by |u|+1.

    Follows the explicit recipe: old words get zero tails, the fresh label's
    eta gets the first new coordinate, each old label is linked to the fresh
    one through its own fresh coordinate and a fresh two-leaf tree, and the
    fresh eta gets a final single-leaf tree.
    """
    if alpha < 0:
        raise ValueError(f"labels are non-negative, got {alpha}")
    if alpha in p.u:
        raise ValueError(f"label {alpha} already present")
    if not assume_valid:
        _require_valid(p, "extend_with_label")
    enum = list(p.u)
    k = len(enum) - 1
    pad = k + 2
    n_new = p.n + pad
    m_new = p.m_star + pad

    eta = {a: pad_zeros(p.eta[a], pad) for a in enum}
    eta[alpha] = Word(n_new, 1 << p.n)

    mu: dict[tuple[int, int], tuple[Word, int]] = {
        pair: (pad_zeros(rho, pad), ell) for pair, (rho, ell) in p.mu.items()
    }
    for i, a_i in enumerate(enum):
        rho_i = Word(n_new, 1 << (p.n + i + 1))
        mu[_pair_key(a_i, alpha)] = (rho_i, p.m_star + i)

    K = dict(p.K)
    K[alpha] = p.m_star + k + 1

    trees = [t.pad(pad) for t in p.trees]
    for i, a_i in enumerate(enum):
        rho_i = mu[_pair_key(a_i, alpha)][0]
        trees.append(tree_from_leaves([eta[a_i] + rho_i, eta[alpha] + rho_i]))
    trees.append(tree_from_leaves([eta[alpha]]))

    q = make_condition(sorted(enum + [alpha]), n_new, m_new, eta, trees, mu, K)
    violations = validate(q)
    if violations:
        raise ConstructionError(
            f"label extension of u={p.u} by {alpha} failed re-validation", violations
        )
    return q


def extend(
    p: Condition, alpha: int, min_n: int = 0, min_m: int = 0, *, assume_valid: bool = False
) -> Condition:
    """Density: a condition above p containing alpha with n, m_star thresholds.

    Applies label extensions, with fresh scratch labels past every used
    label once alpha is in, until the thresholds are met.
    """
    if not assume_valid:
        _require_valid(p, "extend")
    q = p
    if alpha not in q.u:
        q = extend_with_label(q, alpha, assume_valid=True)
    while q.n < min_n or q.m_star < min_m:
        q = extend_with_label(q, max(q.u) + 1, assume_valid=True)
    return q


def alignment(
    p: Condition, q: Condition, *, assume_valid: bool = False
) -> tuple[Optional[dict[int, int]], Optional[str]]:
    """Order isomorphism witnessing that p, q form an amalgamable pair.

    Returns (pi, None) on success, (None, reason) otherwise.  Requires equal
    numeric data and trees, a nonempty common root that is an initial
    segment of both label sets, p's tail strictly below q's tail, and all
    per-label data transported by the order isomorphism.
    """
    if not assume_valid:
        _require_valid(p, "alignment")
        _require_valid(q, "alignment")
    if p.n != q.n:
        return None, f"heights differ ({p.n} vs {q.n})"
    if p.m_star != q.m_star:
        return None, f"tree counts differ ({p.m_star} vs {q.m_star})"
    if p.trees != q.trees:
        return None, "tree lists differ"
    up, uq = set(p.u), set(q.u)
    root = up & uq
    p_tail = sorted(up - uq)
    q_tail = sorted(uq - up)
    if not root:
        return None, "label sets are disjoint"
    if not p_tail or not q_tail:
        return None, "one label set contains the other"
    if len(p.u) != len(q.u):
        return None, f"label counts differ ({len(p.u)} vs {len(q.u)})"
    if max(root) > min(p_tail) or max(root) > min(q_tail):
        return None, "common labels are not an initial segment of both"
    if max(p_tail) >= min(q_tail):
        return None, f"tails interleave ({max(p_tail)} !< {min(q_tail)})"
    pi = dict(zip(p.u, q.u))
    for a in p.u:
        if p.K[a] != q.K[pi[a]]:
            return None, f"K mismatch at {a} -> {pi[a]}"
        if p.eta[a] != q.eta[pi[a]]:
            return None, f"eta mismatch at {a} -> {pi[a]}"
    for a, b in p.pairs():
        if p.mu[(a, b)] != q.mu[_pair_key(pi[a], pi[b])]:
            return None, f"mu mismatch at {(a, b)} -> {(pi[a], pi[b])}"
    return pi, None


def aligned(p: Condition, q: Condition, *, assume_valid: bool = False) -> bool:
    return alignment(p, q, assume_valid=assume_valid)[0] is not None


def amalgam_tail_indices(k0: int, k1: int) -> dict:
    """Fresh-coordinate assignments used by amalgamation, for inspection.

    Keys: "eta_beta" (per q-tail position), "gamma_beta" and "alpha_beta"
    and "beta_beta" (per pair).  All assigned indices must be distinct and
    below "k_star"; that freshness is what keeps the vectors independent.
    """
    k_star = (k1 + 1) * (k0 + k1 + 3) + (k1 - 1) * (k1 + 2) // 2 + 1
    eta_beta = {i: i for i in range(k1 + 1)}
    gamma_beta = {
        (i, j): (k1 + 1) + i * (k1 + 1) + j
        for i in range(k0 + 1)
        for j in range(k1 + 1)
    }
    alpha_beta = {
        (i, j): (k0 + 2) * (k1 + 1) + i * (k1 + 1) + j
        for i in range(k1 + 1)
        for j in range(k1 + 1)
    }
    beta_beta = {
        (i, j): (k1 + 1) * (k0 + k1 + 3) + i * (2 * k1 - i + 1) // 2 + (j - i - 1)
        for i in range(k1 + 1)
        for j in range(i + 1, k1 + 1)
    }
    return {
        "k_star": k_star,
        "eta_beta": eta_beta,
        "gamma_beta": gamma_beta,
        "alpha_beta": alpha_beta,
        "beta_beta": beta_beta,
    }


def amalgamate(p: Condition, q: Condition, *, assume_valid: bool = False) -> Condition:
    """Common upper bound of an aligned pair.

    p keeps zero tails; q's tail labels and the cross links get pairwise
    distinct fresh unit coordinates (see amalgam_tail_indices), and every
    new link is housed in its own fresh two-leaf tree.
    """
    pi, reason = alignment(p, q, assume_valid=assume_valid)
    if pi is None:
        raise ValueError(f"not aligned: {reason}")
    up, uq = set(p.u), set(q.u)
    gammas = sorted(up & uq)
    alphas = sorted(up - uq)
    betas = sorted(uq - up)
    k0, k1 = len(gammas) - 1, len(alphas) - 1
    idx = amalgam_tail_indices(k0, k1)
    k_star = idx["k_star"]
    n_new = p.n + k_star
    m_new = p.m_star + (k1 + 1) ** 2

    def tail_bit(t: int) -> int:
        return 1 << (p.n + t)

    eta: dict[int, Word] = {a: pad_zeros(p.eta[a], k_star) for a in p.u}
    for i, b_i in enumerate(betas):
        eta[b_i] = Word(n_new, q.eta[b_i].bits | tail_bit(idx["eta_beta"][i]))

    K = dict(p.K)
    for b_i in betas:
        K[b_i] = q.K[b_i]

    mu: dict[tuple[int, int], tuple[Word, int]] = {
        pair: (pad_zeros(rho, k_star), ell) for pair, (rho, ell) in p.mu.items()
    }
    for i, g_i in enumerate(gammas):
        for j, b_j in enumerate(betas):
            rho_q, ell_q = q.mu[_pair_key(g_i, b_j)]
            rho = Word(n_new, rho_q.bits | tail_bit(idx["gamma_beta"][(i, j)]))
            mu[_pair_key(g_i, b_j)] = (rho, ell_q)
    for i, a_i in enumerate(alphas):
        for j, b_j in enumerate(betas):
            rho = Word(n_new, tail_bit(idx["alpha_beta"][(i, j)]))
            mu[_pair_key(a_i, b_j)] = (rho, q.m_star + i * (k1 + 1) + j)
    for i, b_i in enumerate(betas):
        for j in range(i + 1, k1 + 1):
            b_j = betas[j]
            rho_q, ell_q = q.mu[_pair_key(b_i, b_j)]
            rho = Word(n_new, rho_q.bits | tail_bit(idx["beta_beta"][(i, j)]))
            mu[_pair_key(b_i, b_j)] = (rho, ell_q)

    trees: list[FiniteTree] = []
    for m in range(p.m_star):
        leaves = {pad_zeros(w, k_star) for w in p.trees[m].leaves}
        for i, b_i in enumerate(betas):
            if K[b_i] == m:
                leaves.add(eta[b_i])
        for g_i in gammas:
            for b_j in betas:
                rho, ell = mu[_pair_key(g_i, b_j)]
                if ell == m:
                    leaves.add(eta[g_i] + rho)
                    leaves.add(eta[b_j] + rho)
        for i in range(k1 + 1):
            for j in range(i + 1, k1 + 1):
                rho, ell = mu[_pair_key(betas[i], betas[j])]
                if ell == m:
                    leaves.add(eta[betas[i]] + rho)
                    leaves.add(eta[betas[j]] + rho)
        trees.append(FiniteTree(n_new, frozenset(leaves)))
    for i, a_i in enumerate(alphas):
        for j, b_j in enumerate(betas):
            rho, ell = mu[_pair_key(a_i, b_j)]
            assert ell == len(trees)
            trees.append(tree_from_leaves([eta[a_i] + rho, eta[b_j] + rho]))

    r = make_condition(sorted(up | uq), n_new, m_new, eta, trees, mu, K)
    violations = validate(r)
    if violations:
        raise ConstructionError(
            f"amalgamation of u={p.u} and u={q.u} failed re-validation", violations
        )
    return r


SUM_ETA_ETA = "eta-eta"
SUM_ETA_ETA_RHO = "eta-eta-rho"
SUM_RHO = "rho"


def sum_class_table(p: Condition) -> dict[int, tuple[str, int, int]]:
    """Map from word value to its certified sum decomposition.

    Values eta[a]+eta[b] map to eta-eta, eta[a]+eta[b]+rho to eta-eta-rho,
    rho itself to rho.  On a valid condition the three families are
    disjoint (independence); insertion order fixes precedence otherwise.
    """
    table: dict[int, tuple[str, int, int]] = {}
    prs = p.pairs()
    for a, b in prs:
        table.setdefault(p.eta[a].bits ^ p.eta[b].bits, (SUM_ETA_ETA, a, b))
    for a, b in prs:
        table.setdefault(
            p.eta[a].bits ^ p.eta[b].bits ^ p.rho(a, b).bits, (SUM_ETA_ETA_RHO, a, b)
        )
    for a, b in prs:
        table.setdefault(p.rho(a, b).bits, (SUM_RHO, a, b))
    return table


SHAPE_ETAS = "two-etas"
SHAPE_CROSS = "eta-with-other-shifted"
SHAPE_OWN = "eta-with-own-shifted"


def _pair_shape(pair_bits: frozenset[int], p: Condition, a: int, b: int) -> Optional[str]:
    ea, eb = p.eta[a].bits, p.eta[b].bits
    r = p.rho(a, b).bits
    if pair_bits == {ea, eb}:
        return SHAPE_ETAS
    if pair_bits in ({ea ^ r, eb}, {eb ^ r, ea}):
        return SHAPE_CROSS
    if pair_bits in ({ea ^ r, ea}, {eb ^ r, eb}):
        return SHAPE_OWN
    return None


@dataclass(frozen=True)
class QuadrupleReport:
    """One equal-sum pairing of four distinct leaves, with its certificate."""

    total: Word
    pair0: tuple[Word, Word]
    pair1: tuple[Word, Word]
    alpha: Optional[int]
    beta: Optional[int]
    shapes: tuple[Optional[str], Optional[str]]
    violation: Optional[str]

    @property
    def certified(self) -> bool:
        return self.violation is None


def scan_equal_sums(p: Condition, *, assume_valid: bool = False) -> list[QuadrupleReport]:
    """Every pairing of two disjoint leaf pairs with equal sums, certified.

    Each pairing must be explained by a label pair (a, b): the four leaves
    are exactly eta[a], eta[b] and their rho-shifts, and at least one side
    of the pairing matches a certified shape.  Anything else is reported as
    a violation.
    """
    if not assume_valid:
        _require_valid(p, "scan_equal_sums")
    leaves = p.leaves()
    bits = [w.bits for w in leaves]
    buckets: dict[int, list[tuple[int, int]]] = {}
    for i in range(len(bits)):
        bi = bits[i]
        for j in range(i + 1, len(bits)):
            buckets.setdefault(bi ^ bits[j], []).append((i, j))
    table = sum_class_table(p)
    reports: list[QuadrupleReport] = []
    for total_bits, prs in buckets.items():
        if len(prs) < 2:
            continue
        for (i0, j0), (i1, j1) in itertools.combinations(prs, 2):
            quad = {bits[i0], bits[j0], bits[i1], bits[j1]}
            assert len(quad) == 4, "equal-sum pairs sharing a leaf must be identical"
            alpha = beta = None
            shapes: tuple[Optional[str], Optional[str]] = (None, None)
            violation: Optional[str] = None
            cert = table.get(total_bits)
            if cert is None:
                violation = "sum admits no certified decomposition"
            else:
                _, alpha, beta = cert
                ea, eb = p.eta[alpha].bits, p.eta[beta].bits
                r = p.rho(alpha, beta).bits
                if quad != {ea, eb, ea ^ r, eb ^ r}:
                    violation = (
                        f"leaf set is not the eta/shifted-eta quadruple of ({alpha}, {beta})"
                    )
                else:
                    shapes = (
                        _pair_shape(frozenset({bits[i0], bits[j0]}), p, alpha, beta),
                        _pair_shape(frozenset({bits[i1], bits[j1]}), p, alpha, beta),
                    )
                    if shapes[0] is None and shapes[1] is None:
                        violation = "neither pair matches a certified shape"
            reports.append(
                QuadrupleReport(
                    total=Word(p.n, total_bits),
                    pair0=(leaves[i0], leaves[j0]),
                    pair1=(leaves[i1], leaves[j1]),
                    alpha=alpha,
                    beta=beta,
                    shapes=shapes,
                    violation=violation,
                )
            )
    return reports
