"""Seeded random instance generators for the verification drivers and tests."""

from __future__ import annotations

import random

from .chains import Chain, build_chain
from .poset import Condition, make_condition
from .words import Word, is_independent


def random_labels(rng: random.Random, count: int, bound: int = 1000) -> list[int]:
    return rng.sample(range(bound), count)


def random_chain(
    rng: random.Random, max_labels: int = 6, max_target_n: int = 60
) -> Chain:
    """A seeded chain with 1..max_labels labels and a random height target."""
    count = rng.randint(1, max_labels)
    labels = random_labels(rng, count)
    target_n = rng.randint(1, max_target_n)
    return build_chain(labels, target_n, seed=rng.getrandbits(32))


def random_condition(rng: random.Random, max_labels: int = 5, max_target_n: int = 20) -> Condition:
    return random_chain(rng, max_labels, max_target_n).last()


def rename_labels(p: Condition, mapping: dict[int, int]) -> Condition:
    """Transport a condition along a strictly increasing relabeling of u."""
    old = list(p.u)
    new = [mapping.get(a, a) for a in old]
    if sorted(new) != new or len(set(new)) != len(new):
        raise ValueError("relabeling must be strictly increasing on u")
    return make_condition(
        u=new,
        n=p.n,
        m_star=p.m_star,
        eta={mapping.get(a, a): w for a, w in p.eta.items()},
        trees=p.trees,
        mu={
            tuple(sorted((mapping.get(a, a), mapping.get(b, b)))): val
            for (a, b), val in p.mu.items()
        },
        K={mapping.get(a, a): m for a, m in p.K.items()},
    )


def aligned_pair(rng: random.Random, max_labels: int = 5) -> tuple[Condition, Condition]:
    """A condition and its tail-renamed copy, ready for amalgamation.

    The common root is a random proper initial segment of the label set;
    the copy's tail labels are fresh integers above everything in p.
    """
    count = rng.randint(2, max(2, max_labels))
    labels = sorted(random_labels(rng, count))
    p = build_chain(labels, target_n=rng.randint(1, 12), seed=rng.getrandbits(32)).last()
    u = list(p.u)
    root_size = rng.randint(1, len(u) - 1)
    tail = u[root_size:]
    base = max(u) + 1
    mapping = {a: base + i for i, a in enumerate(tail)}
    return p, rename_labels(p, mapping)


def random_independent_family(rng: random.Random, n: int, size: int) -> list[Word]:
    """A random independent family of ``size`` length-n words."""
    if size > n:
        raise ValueError(f"cannot fit {size} independent vectors in length {n}")
    family: list[Word] = []
    while len(family) < size:
        w = Word(n, rng.getrandbits(n))
        if not w.is_zero() and is_independent(family + [w]):
            family.append(w)
    return family


def translation_instance(
    rng: random.Random, max_n: int = 24
) -> tuple[set[Word], list[Word], Word]:
    """(members, basis, x) with members a >= 5 subset of the basis shifted by x."""
    n = rng.randint(6, max_n)
    size = rng.randint(5, min(12, n))
    basis = random_independent_family(rng, n, size)
    x = Word(n, rng.getrandbits(n))
    chosen = rng.sample(basis, rng.randint(5, size))
    members = {b + x for b in chosen}
    return members, basis, x
