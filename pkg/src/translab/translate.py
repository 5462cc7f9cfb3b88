"""Recovering the translation that carries a set into an independent family.

If every pairwise sum of A lands in B + B for an independent B and A has
at least five members, there is exactly one x with A + x a subset of B;
``recover_translation`` finds it constructively and ``brute_translation``
is the independent oracle.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import LemmaViolation
from .words import Word, add, express_in_basis, is_independent, lex_key


def _pair_support(s: Word, basis: Sequence[Word], name: str) -> frozenset[int]:
    support = express_in_basis(s, basis)
    if support is None or len(support) != 2:
        size = "outside span" if support is None else f"support size {len(support)}"
        raise ValueError(f"pairwise sum {name} = {s} is not a sum of two basis members ({size})")
    return support


def decompose_shared(
    a: Word, b: Word, c: Word, basis: Sequence[Word]
) -> tuple[Word, Word, Word]:
    """Pairwise distinct eta, nu, rho in the basis with a+b = eta+nu and a+c = eta+rho.

    Requires each pairwise sum of {a, b, c} to be a sum of two distinct basis
    members; the offending pair is named otherwise.
    """
    if len({a, b, c}) != 3:
        raise ValueError("decompose_shared needs three pairwise distinct words")
    if not is_independent(basis):
        raise ValueError("dependent basis")
    s_ab = _pair_support(add(a, b), basis, "(a, b)")
    s_ac = _pair_support(add(a, c), basis, "(a, c)")
    _pair_support(add(b, c), basis, "(b, c)")
    shared = s_ab & s_ac
    if len(shared) != 1:
        # Cannot happen once all three sums have 2-element support; defensive.
        raise ValueError(f"supports of a+b and a+c share {len(shared)} elements, expected 1")
    (eta_idx,) = shared
    (nu_idx,) = s_ab - shared
    (rho_idx,) = s_ac - shared
    return basis[eta_idx], basis[nu_idx], basis[rho_idx]


def recover_translation(members: Iterable[Word], basis: Sequence[Word]) -> Word:
    """The unique x with {a + x : a in A} inside the basis family.

    Decomposes the first three members (lex order) to locate the shared
    basis element, then verifies every member; a verification failure is a
    LemmaViolation since the preconditions guarantee success.
    """
    family = sorted(set(members), key=lex_key)
    if len(family) < 5:
        raise ValueError(f"translation recovery needs at least 5 members, got {len(family)}")
    if not is_independent(basis):
        raise ValueError("dependent basis")
    a0, a1, a2 = family[0], family[1], family[2]
    eta, _, _ = decompose_shared(a0, a1, a2, basis)
    x = add(a0, eta)
    basis_set = set(basis)
    misses = [a for a in family if add(a, x) not in basis_set]
    if misses:
        raise LemmaViolation(
            f"computed translation {x} fails membership verification",
            [f"{a} + {x} = {add(a, x)} not in basis" for a in misses],
        )
    return x


def brute_translation(
    members: Iterable[Word], basis: Sequence[Word], *, full_scan: bool = False
) -> set[Word]:
    """All x with A + x inside the basis family, by direct search.

    Default candidates are {a0 + beta} plus the zero word, which is complete
    because any valid x satisfies a0 + x in B.  ``full_scan`` checks all 2^n
    words instead (n <= 20).
    """
    family = sorted(set(members), key=lex_key)
    if not family:
        raise ValueError("empty member set")
    n = family[0].n
    if any(w.n != n for w in family) or any(w.n != n for w in basis):
        raise ValueError("mixed word lengths")
    a0 = family[0]
    if full_scan:
        if n > 20:
            raise ValueError(f"full scan capped at length 20, got {n}")
        candidates = (Word(n, v) for v in range(1 << n))
    else:
        candidates = iter({add(a0, beta) for beta in basis} | {Word.zeros(n)})
    basis_set = set(basis)
    return {x for x in candidates if all(add(a, x) in basis_set for a in family)}
