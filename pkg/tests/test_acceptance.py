"""Acceptance suite: one test per criterion, one PASS line each (run with -s).

The chain corpus is shared: criteria 4, 5 and 6 sweep every condition that
criteria 1 to 3 produced.
"""

import itertools
import random
import time

import pytest

from translab.arrange import STRATEGIES, extract_homogeneous, gen_star_coloring, verify_certificate
from translab.chains import approximation, intersection_witnesses, triangle_scan
from translab.errors import LemmaViolation
from translab.generators import (
    aligned_pair,
    random_chain,
    random_condition,
    translation_instance,
)
from translab.poset import amalgam_tail_indices, amalgamate, extend, leq, scan_equal_sums, validate
from translab.serialize import dumps, loads
from translab.translate import brute_translation, recover_translation
from translab.words import Word, add, is_independent, word

CHAIN_SEED = 20260809
EXTEND_SEED = 411
AMALGAM_SEED = 802
LEMMA2_SEED = 1309
LEMMA3_SEED = 2718
KERNEL_SEED = 3141
ROUNDTRIP_SEED = 5050


def _announce(num: int, message: str) -> None:
    print(f"\nACCEPTANCE {num} PASS: {message}")


@pytest.fixture(scope="module")
def chain_corpus():
    t0 = time.perf_counter()
    rng = random.Random(CHAIN_SEED)
    chains = [random_chain(rng, max_labels=6, max_target_n=60) for _ in range(1000)]
    return chains, time.perf_counter() - t0


@pytest.fixture(scope="module")
def extend_corpus():
    rng = random.Random(EXTEND_SEED)
    cases = []
    for _ in range(200):
        p = random_condition(rng, max_labels=3, max_target_n=12)
        alpha = max(p.u) + rng.randint(1, 40)
        min_n = rng.randint(1, 40)
        min_m = rng.randint(1, 40)
        cases.append((p, alpha, min_n, min_m, extend(p, alpha, min_n, min_m)))
    return cases


@pytest.fixture(scope="module")
def amalgam_corpus():
    rng = random.Random(AMALGAM_SEED)
    cases = []
    for _ in range(200):
        p, q = aligned_pair(rng, max_labels=5)
        cases.append((p, q, amalgamate(p, q)))
    return cases


@pytest.fixture(scope="module")
def all_conditions(chain_corpus, extend_corpus, amalgam_corpus):
    chains, _ = chain_corpus
    out = [stage for chain in chains for stage in chain.stages]
    for p, _, _, _, q in extend_corpus:
        out.extend((p, q))
    for p, q, r in amalgam_corpus:
        out.extend((p, q, r))
    return out


def test_criterion_1_chain_soundness(chain_corpus):
    chains, build_elapsed = chain_corpus
    t0 = time.perf_counter()
    for chain in chains:
        for stage in chain.stages:
            assert validate(stage) == []
        for a, b in zip(chain.stages, chain.stages[1:]):
            assert leq(a, b, assume_valid=True)
    elapsed = build_elapsed + time.perf_counter() - t0
    assert elapsed < 120.0, f"criterion 1 budget exceeded: {elapsed:.1f}s"
    stages = sum(len(c.stages) for c in chains)
    _announce(1, f"1000 chains / {stages} stages validate and chain under leq in {elapsed:.1f}s")


def test_criterion_2_density(extend_corpus):
    for p, alpha, min_n, min_m, q in extend_corpus:
        assert alpha in q.u
        assert q.n >= min_n and q.m_star >= min_m
        assert validate(q) == []
        assert leq(p, q, assume_valid=True)
    _announce(2, "200 seeded density extensions meet label and threshold contracts")


def test_criterion_3_amalgamation(amalgam_corpus):
    for p, q, r in amalgam_corpus:
        assert validate(r) == []
        assert leq(p, r, assume_valid=True)
        assert leq(q, r, assume_valid=True)
        k1 = len(set(p.u) - set(q.u)) - 1
        k0 = len(set(p.u) & set(q.u)) - 1
        idx = amalgam_tail_indices(k0, k1)
        used = (
            list(idx["eta_beta"].values())
            + list(idx["gamma_beta"].values())
            + list(idx["alpha_beta"].values())
            + list(idx["beta_beta"].values())
        )
        assert len(used) == len(set(used))
        assert all(0 <= k < idx["k_star"] for k in used)
    _announce(3, "200 amalgams validate, sit above both inputs, fresh indices injective")


def test_criterion_4_equal_sum_certificates(all_conditions):
    pairings = 0
    for p in all_conditions:
        reports = scan_equal_sums(p, assume_valid=True)
        pairings += len(reports)
        bad = [r for r in reports if not r.certified]
        assert not bad, f"uncertified equal-sum pairing: {bad[0]}"
    _announce(4, f"{len(all_conditions)} conditions scanned, {pairings} pairings all certified")


def test_criterion_5_intersection_witnesses(chain_corpus):
    chains, _ = chain_corpus
    total = 0
    for chain in chains:
        g = approximation(chain, assume_valid=True)
        labels = sorted(g.h)
        for a, b in itertools.combinations(labels, 2):
            ws = intersection_witnesses(g, a, b)
            assert len(ws.as_set()) == 4
            assert len(ws.certificates) == 4
            total += 1
    _announce(5, f"{total} label pairs produced exactly 4 distinct certified witnesses")


def test_criterion_6_triangle_scan(all_conditions):
    for p in all_conditions:
        assert triangle_scan(p) is None
    _announce(6, f"triangle scan clean on all {len(all_conditions)} conditions")


def test_criterion_7_homogeneous_extraction():
    rng = random.Random(LEMMA2_SEED)
    runs_per_strategy = 25
    slowest = 0.0
    for strategy in STRATEGIES:
        for _ in range(runs_per_strategy):
            coloring = gen_star_coloring(16, strategy, seed=rng.getrandbits(32))
            t0 = time.perf_counter()
            try:
                cert = extract_homogeneous(coloring)
            except LemmaViolation as exc:  # pragma: no cover - must not happen
                pytest.fail(f"extraction violated the lemma on {strategy}: {exc}")
            problems = verify_certificate(cert, coloring)
            elapsed = time.perf_counter() - t0
            slowest = max(slowest, elapsed)
            assert problems == []
            assert len(cert.members) >= 5
            assert elapsed <= 10.0, f"{strategy} run took {elapsed:.1f}s"
    _announce(7, f"100 extractions at ell=16 verified; slowest run {slowest:.2f}s")


def test_criterion_8_translation_recovery():
    rng = random.Random(LEMMA3_SEED)
    for _ in range(1000):
        members, basis, x = translation_instance(rng, max_n=24)
        recovered = recover_translation(members, basis)
        oracle = brute_translation(members, basis)
        assert recovered == x
        assert oracle == {recovered}, "uniqueness must hold for five or more members"
    # necessity of the size bound: two members admit two translations
    basis3 = [word("100"), word("010"), word("001")]
    two = brute_translation({basis3[0], basis3[1]}, basis3, full_scan=True)
    assert two == {Word.zeros(3), add(basis3[0], basis3[1])}
    _announce(8, "1000 recoveries match the brute oracle; 2-member counterexample reproduced")


def test_criterion_9_independence_oracle():
    rng = random.Random(KERNEL_SEED)
    for _ in range(500):
        n = rng.randint(4, 16)
        count = rng.randint(1, 12)
        ws = [Word(n, rng.getrandbits(n)) for _ in range(count)]
        oracle = True
        for size in range(1, count + 1):
            for combo in itertools.combinations(ws, size):
                xor = 0
                for w in combo:
                    xor ^= w.bits
                if xor == 0:
                    oracle = False
                    break
            if not oracle:
                break
        assert is_independent(ws) == oracle
    _announce(9, "500 families: elimination agrees with the exhaustive subset-xor oracle")


def test_criterion_10_serialization_roundtrips(chain_corpus):
    chains, _ = chain_corpus
    rng = random.Random(ROUNDTRIP_SEED)
    objects = []
    objects.extend(rng.choice(chains).last() for _ in range(400))
    objects.extend(rng.choice(chains) for _ in range(95))
    for strategy in ("all-one", "matching", "seeded-triangle-free"):
        objects.append(extract_homogeneous(gen_star_coloring(16, strategy, seed=5)))
    objects.append(extract_homogeneous(gen_star_coloring(16, "seeded-triangle-free", seed=6)))
    objects.append(extract_homogeneous(gen_star_coloring(16, "matching", seed=7)))
    assert len(objects) == 500
    for obj in objects:
        text = dumps(obj)
        assert loads(text) == obj
        assert dumps(loads(text)) == text
    _announce(10, "500 serialization round-trips bit-exact")
