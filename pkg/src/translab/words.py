"""Fixed-length binary words with XOR addition and GF(2) linear algebra.

A word is an explicit length plus an int bitset; bit k of ``bits`` is
coordinate k, so coordinate 0 is the leftmost character of the textual
form.  Words are immutable values and all cross-length operations are
rejected rather than coerced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True, slots=True)
class Word:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative word length {self.n}")
        if self.bits < 0 or (self.bits >> self.n):
            raise ValueError(f"bits 0x{self.bits:x} do not fit length {self.n}")

    @classmethod
    def from_string(cls, s: str) -> "Word":
        """Parse '0110'-style text; leftmost character is coordinate 0."""
        bits = 0
        for k, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << k
            elif ch != "0":
                raise ValueError(f"invalid word character {ch!r} in {s!r}")
        return cls(len(s), bits)

    @classmethod
    def from_bits(cls, seq: Iterable[int]) -> "Word":
        bits = 0
        n = 0
        for k, b in enumerate(seq):
            if b not in (0, 1):
                raise ValueError(f"invalid bit {b!r} at coordinate {k}")
            bits |= b << k
            n = k + 1
        return cls(n, bits)

    @classmethod
    def zeros(cls, n: int) -> "Word":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "Word":
        return cls(n, (1 << n) - 1)

    def bit(self, k: int) -> int:
        if not 0 <= k < self.n:
            raise IndexError(f"coordinate {k} out of range for length {self.n}")
        return (self.bits >> k) & 1

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> k) & 1 else "0" for k in range(self.n))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Word({self.to_string()!r})"

    def __add__(self, other: "Word") -> "Word":
        return add(self, other)


def word(s: str) -> Word:
    """Shorthand constructor from the textual encoding."""
    return Word.from_string(s)


def _require_same_length(a: Word, b: Word) -> None:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")


def add(a: Word, b: Word) -> Word:
    """Coordinatewise addition mod 2."""
    _require_same_length(a, b)
    return Word(a.n, a.bits ^ b.bits)


def first_diff(a: Word, b: Word) -> Optional[int]:
    """Least coordinate where a and b differ, None when equal."""
    _require_same_length(a, b)
    x = a.bits ^ b.bits
    if x == 0:
        return None
    return (x & -x).bit_length() - 1


def lex_less(a: Word, b: Word) -> bool:
    """Strict lexicographic order: at the first differing coordinate a has 0."""
    _require_same_length(a, b)
    x = a.bits ^ b.bits
    if x == 0:
        return False
    k = (x & -x).bit_length() - 1
    return (b.bits >> k) & 1 == 1


def lex_key(w: Word):
    """Sort key realizing lexicographic order (bit-reversed value)."""
    rev = 0
    bits = w.bits
    for k in range(w.n):
        rev = (rev << 1) | ((bits >> k) & 1)
    return (w.n, rev)


def rev_bits(bits: int, n: int) -> int:
    """Bit-reversed value of an n-bit word; ascending order = lex order."""
    rev = 0
    for k in range(n):
        rev = (rev << 1) | ((bits >> k) & 1)
    return rev


def pad_zeros(w: Word, k: int) -> Word:
    """Append k zero coordinates."""
    if k < 0:
        raise ValueError(f"negative pad count {k}")
    return Word(w.n + k, w.bits)


def restrict(w: Word, k: int) -> Word:
    """Keep the first k coordinates."""
    if not 0 <= k <= w.n:
        raise ValueError(f"cannot restrict length-{w.n} word to {k}")
    return Word(k, w.bits & ((1 << k) - 1))


def is_prefix(a: Word, b: Word) -> bool:
    """True iff a is an initial segment of b (allowing a = b)."""
    return a.n <= b.n and (b.bits & ((1 << a.n) - 1)) == a.bits


def _reduced_echelon(vecs: Sequence[int]) -> list[tuple[int, int, int]]:
    """Reduced echelon rows as (pivot, row, combo) triples over GF(2).

    Pivots are lowest-set-bit first; ``combo`` records which original rows
    were folded into each echelon row as an index bitmask.
    """
    ech: list[tuple[int, int, int]] = []
    for i, v in enumerate(vecs):
        row, combo = v, 1 << i
        for pivot, erow, ecombo in ech:
            if (row >> pivot) & 1:
                row ^= erow
                combo ^= ecombo
        if row == 0:
            continue
        pivot = (row & -row).bit_length() - 1
        # Keep the form reduced: clear the new pivot from existing rows.
        for j, (epivot, erow, ecombo) in enumerate(ech):
            if (erow >> pivot) & 1:
                ech[j] = (epivot, erow ^ row, ecombo ^ combo)
        ech.append((pivot, row, combo))
    return ech


def rank_bits(vecs: Sequence[int]) -> int:
    """GF(2) rank of int-bitset rows."""
    return len(_reduced_echelon(vecs))


def _check_family(ws: Sequence[Word]) -> int:
    lengths = {w.n for w in ws}
    if len(lengths) > 1:
        raise ValueError(f"mixed word lengths {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def rank(ws: Sequence[Word]) -> int:
    """Dimension of the span over GF(2); empty family has rank 0."""
    _check_family(ws)
    return rank_bits([w.bits for w in ws])


def is_independent(ws: Sequence[Word]) -> bool:
    return rank(ws) == len(ws)


def express_in_basis(target: Word, basis: Sequence[Word]) -> Optional[frozenset[int]]:
    """Unique index set S with XOR of basis[S] = target, or None outside the span.

    The basis must be independent (rejected otherwise).
    """
    n = _check_family(basis)
    if basis and target.n != n:
        raise ValueError(f"length mismatch: target {target.n} vs basis {n}")
    ech = _reduced_echelon([w.bits for w in basis])
    if len(ech) != len(basis):
        raise ValueError("dependent basis")
    rem, combo = target.bits, 0
    for pivot, erow, ecombo in ech:
        if (rem >> pivot) & 1:
            rem ^= erow
            combo ^= ecombo
    if rem != 0:
        return None
    return frozenset(i for i in range(len(basis)) if (combo >> i) & 1)
