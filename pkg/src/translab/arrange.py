"""Four-arrangements and extraction of 1-homogeneous sets from pair colorings.

A pair coloring assigns 0 or 1 to every unordered pair of distinct
length-ell words.  The generated strategies all have a triangle-free
zero-graph; under that hypothesis ``extract_homogeneous`` produces a
certified set of at least five words, pairwise colored 1, containing a
four-arrangement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .errors import LemmaViolation
from .words import Word, first_diff, lex_key, lex_less, rev_bits

STRATEGIES = ("all-one", "matching", "bipartite", "seeded-triangle-free")

_KIND_CODES = {
    "all-one": kernels.ALL_ONE,
    "matching": kernels.MATCHING,
    "bipartite": kernels.BIPARTITE,
    "seeded-triangle-free": kernels.SEEDED,
    "all-zero": kernels.ALL_ZERO,
    "table": kernels.TABLE,
}

# Full-space enumeration bound for zero-neighborhoods (memory, 2^ell values).
MAX_ENUM_ELL = 26


@dataclass(frozen=True)
class PairColoring:
    """Symmetric 2-coloring of pairs of distinct length-ell words."""

    ell: int
    kind: str
    seed: int = 0
    table: Optional[np.ndarray] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in _KIND_CODES:
            raise ValueError(f"unknown coloring kind {self.kind!r}")
        if self.ell < 1:
            raise ValueError(f"coloring needs positive word length, got {self.ell}")
        if self.kind == "table":
            size = 1 << self.ell
            if self.table is None or self.table.shape != (size, size):
                raise ValueError(f"table coloring needs a {size}x{size} matrix")

    @classmethod
    def from_table(cls, ell: int, table: np.ndarray) -> "PairColoring":
        """Stored-graph coloring from an explicit 0/1 matrix."""
        arr = np.asarray(table, dtype=np.uint8)
        if not np.array_equal(arr, arr.T):
            raise ValueError("coloring table must be symmetric")
        if arr.max(initial=0) > 1:
            raise ValueError("coloring table entries must be 0 or 1")
        return cls(ell=ell, kind="table", table=arr)

    @property
    def representation(self) -> str:
        return "stored-graph" if self.kind == "table" else "explicit-rule"

    def _params(self) -> tuple:
        s1, s2 = kernels.derive_seeds(self.seed)
        table = self.table if self.table is not None else kernels.DUMMY_TABLE
        return (_KIND_CODES[self.kind], s1, s2, self.ell, table)

    def color_bits(self, a: int, b: int) -> int:
        return kernels.color_bits(self._params(), a, b)

    def color(self, a: Word, b: Word) -> int:
        if a.n != self.ell or b.n != self.ell:
            raise ValueError(f"coloring is over length {self.ell}, got {a.n} and {b.n}")
        if a == b:
            raise ValueError("coloring is defined on distinct pairs only")
        return self.color_bits(a.bits, b.bits)


def gen_star_coloring(ell: int, strategy: str, seed: int = 0) -> PairColoring:
    """A coloring whose zero-graph is triangle-free by construction.

    all-one: zero-graph empty.  matching: exactly the complement pairs are
    0-colored (a perfect matching).  bipartite: 0 iff exactly one word starts
    with 1 (complete bipartite).  seeded-triangle-free: words get a seeded
    pseudorandom side bit and cross-side pairs are 0-colored when a symmetric
    seeded edge hash fires (a subgraph of complete bipartite).
    """
    if ell < 2:
        raise ValueError(f"strategy colorings need ell >= 2, got {ell}")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    return PairColoring(ell=ell, kind=strategy, seed=seed)


def is_four_arrangement(a: Word, b: Word, c: Word, d: Word) -> bool:
    """Lex-increasing quadruple whose four cross first-difference indices agree."""
    if not (a.n == b.n == c.n == d.n):
        raise ValueError("arrangement words must share one length")
    if a.n <= 1:
        raise ValueError("arrangements live in word length > 1")
    if not (lex_less(a, b) and lex_less(b, c) and lex_less(c, d)):
        return False
    k = first_diff(a, c)
    return first_diff(b, c) == k and first_diff(a, d) == k and first_diff(b, d) == k


def _fd_bits(x: int, y: int) -> int:
    z = x ^ y
    return (z & -z).bit_length() - 1


def _exhaustive_arrangement(sorted_words: list[Word]) -> Optional[tuple[Word, Word, Word, Word]]:
    for a, b, c, d in itertools.combinations(sorted_words, 4):
        k = _fd_bits(a.bits, c.bits)
        if (
            _fd_bits(b.bits, c.bits) == k
            and _fd_bits(a.bits, d.bits) == k
            and _fd_bits(b.bits, d.bits) == k
        ):
            return (a, b, c, d)
    return None


def _structured_arrangement_bits(bits_lex: np.ndarray, ell: int) -> Optional[tuple[int, int, int, int]]:
    """Complete search on a lex-sorted uint64 value array.

    An arrangement exists iff at some level k a length-k prefix has at least
    two extensions on each side of coordinate k; equal-prefix words are
    contiguous in lex order with the 0-side first, so the first eligible
    group yields the lex-least witnesses.
    """
    n = bits_lex.size
    for k in range(ell):
        pref = bits_lex & np.uint64((1 << k) - 1)
        side = (bits_lex >> np.uint64(k)) & np.uint64(1)
        starts = np.r_[0, np.flatnonzero(pref[1:] != pref[:-1]) + 1]
        ends = np.r_[starts[1:], n]
        count0 = np.add.reduceat((side == 0).astype(np.int64), starts)
        sizes = ends - starts
        eligible = np.flatnonzero((count0 >= 2) & (sizes - count0 >= 2))
        if eligible.size:
            g = int(eligible[0])
            s, z = int(starts[g]), int(count0[g])
            return (
                int(bits_lex[s]),
                int(bits_lex[s + 1]),
                int(bits_lex[s + z]),
                int(bits_lex[s + z + 1]),
            )
    return None


def _structured_arrangement_py(sorted_words: list[Word]) -> Optional[tuple[Word, ...]]:
    ell = sorted_words[0].n
    for k in range(ell):
        mask = (1 << k) - 1
        groups: dict[int, tuple[list[Word], list[Word]]] = {}
        for w in sorted_words:
            zeros, ones = groups.setdefault(w.bits & mask, ([], []))
            target = ones if (w.bits >> k) & 1 else zeros
            if len(target) < 2:
                target.append(w)
        for pref in sorted(groups, key=lambda p: rev_bits(p, k)):
            zeros, ones = groups[pref]
            if len(zeros) >= 2 and len(ones) >= 2:
                return (zeros[0], zeros[1], ones[0], ones[1])
    return None


def find_four_arrangement(words: Iterable[Word]) -> Optional[tuple[Word, Word, Word, Word]]:
    """Some four-arrangement from the set, or None; complete either way.

    Exhausts all quadruples for up to 64 words, otherwise runs the complete
    prefix-split search.
    """
    ws = sorted(set(words), key=lex_key)
    if len({w.n for w in ws}) > 1:
        raise ValueError("arrangement search needs words of one length")
    if len(ws) < 4:
        return None
    ell = ws[0].n
    if len(ws) <= 64:
        return _exhaustive_arrangement(ws)
    if ell <= kernels.KERNEL_MAX_ELL:
        bits_lex = np.array([w.bits for w in ws], dtype=np.uint64)
        quad = _structured_arrangement_bits(bits_lex, ell)
        if quad is None:
            return None
        return tuple(Word(ell, b) for b in quad)  # type: ignore[return-value]
    return _structured_arrangement_py(ws)  # type: ignore[return-value]


def check_no_zero_triangle(
    h: PairColoring, mode: str = "exhaustive", *, count: int = 1_000_000, seed: int = 0
) -> Optional[tuple[Word, Word, Word]]:
    """None when no zero-monochromatic triple is found, else the first one.

    Exhaustive mode scans every triple of distinct words and is permitted
    only for ell <= 8 (the triple count grows as 2^(3 ell), about 2.8e6 at
    ell = 8).  Sampled mode scans ``count`` seeded-random distinct triples.
    """
    params = h._params()
    if mode == "exhaustive":
        if h.ell > 8:
            raise ValueError(
                f"exhaustive triple scan rejected at ell = {h.ell}: 2^(3*ell) triples; "
                "use mode='sampled' beyond ell = 8"
            )
        hit = kernels.scan_triangles_exhaustive(params)
        if hit is None:
            return None
        triple = tuple(Word(h.ell, v) for v in hit)
        return tuple(sorted(triple, key=lex_key))  # type: ignore[return-value]
    if mode == "sampled":
        if h.ell < 2:
            raise ValueError("sampled triple scan needs ell >= 2 (no distinct triples below)")
        rng = np.random.default_rng(seed)
        remaining = count
        space = 1 << h.ell
        while remaining > 0:
            block = min(remaining, 1 << 18)
            draw = rng.integers(0, space, size=(block, 3), dtype=np.uint64)
            distinct = (
                (draw[:, 0] != draw[:, 1])
                & (draw[:, 0] != draw[:, 2])
                & (draw[:, 1] != draw[:, 2])
            )
            draw = draw[distinct]
            if draw.size == 0:
                continue
            idx = kernels.scan_triangle_batch(params, draw[:, 0], draw[:, 1], draw[:, 2])
            if idx is not None:
                triple = tuple(Word(h.ell, int(v)) for v in draw[idx])
                return tuple(sorted(triple, key=lex_key))  # type: ignore[return-value]
            remaining -= draw.shape[0]
        return None
    raise ValueError(f"unknown mode {mode!r}, expected 'exhaustive' or 'sampled'")


def _zero_neighborhood_bits(h: PairColoring, a_bits: int) -> np.ndarray:
    if h.ell > MAX_ENUM_ELL:
        raise ValueError(f"zero-neighborhood enumeration capped at ell = {MAX_ENUM_ELL}")
    return kernels.zero_set_bits(h._params(), a_bits)


def zero_neighborhood(h: PairColoring, a: Word) -> set[Word]:
    """All words x != a with color(x, a) = 0."""
    if a.n != h.ell:
        raise ValueError(f"coloring is over length {h.ell}, got {a.n}")
    return {Word(h.ell, int(b)) for b in _zero_neighborhood_bits(h, a.bits)}


@dataclass(frozen=True)
class ArrangementCertificate:
    """A 1-homogeneous set of >= 5 words together with a four-arrangement.

    ``branch`` records which construction produced it: the staged pick
    sequence or a zero-neighborhood promoted wholesale (``origin`` then
    names the word whose neighborhood it is).
    """

    ell: int
    members: frozenset[Word]
    arrangement: tuple[Word, Word, Word, Word]
    branch: str = "staged"
    origin: Optional[Word] = None


def verify_certificate(cert: ArrangementCertificate, h: PairColoring) -> list[str]:
    """Independent re-check of a certificate; returns found problems."""
    problems: list[str] = []
    if h.ell != cert.ell:
        return [f"certificate length {cert.ell} does not match coloring {h.ell}"]
    if len(cert.members) < 5:
        problems.append(f"only {len(cert.members)} members, need >= 5")
    if any(w.n != cert.ell for w in cert.members):
        problems.append("member word of wrong length")
        return problems
    if len(set(cert.arrangement)) != 4:
        problems.append("arrangement entries not pairwise distinct")
    if not set(cert.arrangement) <= cert.members:
        problems.append("arrangement not drawn from members")
    try:
        if not is_four_arrangement(*cert.arrangement):
            problems.append("quadruple fails the arrangement conditions")
    except ValueError as exc:
        problems.append(f"arrangement rejected: {exc}")
    bits = sorted(w.bits for w in cert.members)
    if cert.ell <= kernels.KERNEL_MAX_ELL:
        arr = np.array(bits, dtype=np.uint64)
        hit = kernels.find_nonhom_pair(h._params(), arr)
        if hit is not None:
            i, j = hit
            problems.append(
                f"pair colored 0: {Word(cert.ell, bits[i])} / {Word(cert.ell, bits[j])}"
            )
    else:
        for x, y in itertools.combinations(bits, 2):
            if h.color_bits(x, y) == 0:
                problems.append(f"pair colored 0: {Word(cert.ell, x)} / {Word(cert.ell, y)}")
                break
    return problems


class _FallbackNeeded(Exception):
    """A staged pick failed; every candidate was 0-colored against ``point``."""

    def __init__(self, point: int, witnesses: list[int]):
        super().__init__("staged pick exhausted a cell")
        self.point = point
        self.witnesses = witnesses


def _level_patterns(level: int, fixed: dict[int, int]) -> list[int]:
    """All level-length patterns matching the fixed coordinates, lex order."""
    base = 0
    for k, bit in fixed.items():
        base |= bit << k
    free = [k for k in range(level) if k not in fixed]
    pats = []
    for combo in range(1 << len(free)):
        bits = base
        for t, k in enumerate(free):
            bits |= ((combo >> t) & 1) << k
        pats.append(bits)
    pats.sort(key=lambda p: rev_bits(p, level))
    return pats


def _extensions(sigma: int, level: int, ell: int) -> list[int]:
    exts = [sigma | (t << level) for t in range(1 << (ell - level))]
    exts.sort(key=lambda x: rev_bits(x >> level, ell - level))
    return exts


def _staged_pick(
    h: PairColoring,
    fixed: dict[int, int],
    filters: Sequence[int],
    final_point: int,
    trace: list,
) -> int:
    """Generic staged selection through levels ell-3, ell-6, ...

    Stage 1 picks, in every level-(ell-3) cell matching ``fixed``, the
    lex-least full word colored 1 against filters[0].  Each later filter
    regroups the survivors three levels down and keeps one per group.  The
    final point picks a single survivor.  A cell with no valid candidate
    aborts the branch; the failure witnesses that the filter point's
    zero-neighborhood swallowed the whole cell.
    """
    ell = h.ell
    level = ell - 3
    current: list[tuple[int, int]] = []
    f0 = filters[0]
    for sigma in _level_patterns(level, fixed):
        chosen = -1
        for x in _extensions(sigma, level, ell):
            if h.color_bits(f0, x) == 1:
                chosen = x
                break
        if chosen < 0:
            raise _FallbackNeeded(f0, _extensions(sigma, level, ell))
        current.append((sigma, chosen))
    trace.append(("stage", 1, len(current)))
    for depth, f in enumerate(filters[1:], start=2):
        level -= 3
        mask = (1 << level) - 1
        regrouped: list[tuple[int, int]] = []
        i = 0
        while i < len(current):
            pref = current[i][0] & mask
            j = i
            chosen = -1
            while j < len(current) and current[j][0] & mask == pref:
                if chosen < 0 and h.color_bits(f, current[j][1]) == 1:
                    chosen = current[j][1]
                j += 1
            if chosen < 0:
                raise _FallbackNeeded(f, [x for _, x in current[i:j]])
            regrouped.append((pref, chosen))
            i = j
        current = regrouped
        trace.append(("stage", depth, len(current)))
    for _, x in current:
        if h.color_bits(final_point, x) == 1:
            return x
    raise _FallbackNeeded(final_point, [x for _, x in current])


def extract_homogeneous(h: PairColoring) -> ArrangementCertificate:
    """Certified 1-homogeneous set with an arrangement, assuming the
    coloring has a triangle-free zero-graph.

    Runs the staged construction first (a = the zero word, d from the
    lex-top block, then b, c, e through successively filtered cells); any
    pick failure certifies that some zero-neighborhood is large, and the
    search switches to that neighborhood wholesale.  Either way the
    returned certificate is re-verified from scratch; failure of both
    branches or of re-verification raises LemmaViolation.
    """
    ell = h.ell
    if ell < 16:
        raise ValueError(f"staged extraction needs ell >= 16, got {ell}")
    trace: list = []
    a = 0
    cert: Optional[ArrangementCertificate] = None
    try:
        top_base = (1 << (ell - 3)) - 1
        top_block = [top_base | (t << (ell - 3)) for t in range(8)]
        top_block.sort(key=lambda x: rev_bits(x, ell), reverse=True)
        d = -1
        for x in top_block:
            if h.color_bits(a, x) == 1:
                d = x
                break
        if d < 0:
            raise _FallbackNeeded(a, top_block)
        trace.append(("picked-d", Word(ell, d).to_string()))
        b = _staged_pick(h, {0: 0, 1: 1}, [a], d, trace)
        c = _staged_pick(h, {0: 1, 1: 0}, [a, b], d, trace)
        e = _staged_pick(h, {0: 0, 1: 0, 2: 1}, [a, b, c], d, trace)
        members = frozenset(Word(ell, x) for x in (a, b, c, d, e))
        arrangement = tuple(Word(ell, x) for x in (a, b, c, d))
        cert = ArrangementCertificate(ell, members, arrangement, branch="staged")  # type: ignore[arg-type]
    except _FallbackNeeded as fb:
        point = Word(ell, fb.point)
        trace.append(("fallback", point.to_string(), len(fb.witnesses)))
        zbits = _zero_neighborhood_bits(h, fb.point)
        if zbits.size >= 5:
            order = np.argsort([rev_bits(int(v), ell) for v in zbits])
            quad = _structured_arrangement_bits(zbits[order], ell)
            if quad is not None:
                members = frozenset(Word(ell, int(v)) for v in zbits)
                arrangement = tuple(Word(ell, v) for v in quad)
                cert = ArrangementCertificate(
                    ell, members, arrangement, branch="zero-set", origin=point  # type: ignore[arg-type]
                )
        if cert is None:
            raise LemmaViolation(
                f"zero-neighborhood of {point} has no usable arrangement "
                f"(size {zbits.size}); input coloring violates the triangle-free "
                "hypothesis or the extraction is buggy",
                trace,
            ) from None
    problems = verify_certificate(cert, h)
    if problems:
        raise LemmaViolation("certificate failed independent re-verification", trace + problems)
    return cert
