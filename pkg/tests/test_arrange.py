import itertools
import random

import pytest

from translab.arrange import (
    PairColoring,
    STRATEGIES,
    _exhaustive_arrangement,
    _structured_arrangement_py,
    check_no_zero_triangle,
    extract_homogeneous,
    find_four_arrangement,
    gen_star_coloring,
    is_four_arrangement,
    verify_certificate,
    zero_neighborhood,
)
from translab.errors import LemmaViolation
from translab.words import Word, lex_key, word


def test_arrangement_examples():
    assert is_four_arrangement(word("00"), word("01"), word("10"), word("11"))
    assert not is_four_arrangement(word("000"), word("001"), word("010"), word("100"))
    quad = [Word.from_string("1" * 13 + tail) for tail in ("000", "001", "100", "101")]
    assert is_four_arrangement(*quad)


def test_arrangement_rejects_bad_input():
    with pytest.raises(ValueError):
        is_four_arrangement(word("0"), word("1"), word("0"), word("1"))
    with pytest.raises(ValueError):
        is_four_arrangement(word("00"), word("01"), word("10"), word("110"))


def test_find_examples():
    assert find_four_arrangement({word("00"), word("01"), word("10"), word("11")}) == (
        word("00"),
        word("01"),
        word("10"),
        word("11"),
    )
    assert find_four_arrangement({word("000"), word("001"), word("011")}) is None
    block = {Word(16, ((1 << 13) - 1) | (t << 13)) for t in range(8)}
    quad = find_four_arrangement(block)
    assert quad is not None and is_four_arrangement(*quad)


def test_structured_search_matches_exhaustive_oracle():
    rng = random.Random(4111)
    for _ in range(300):
        n = rng.randint(2, 8)
        size = rng.randint(1, min(20, 2**n))
        ws = sorted({Word(n, rng.getrandbits(n)) for _ in range(size)}, key=lex_key)
        via_struct = _structured_arrangement_py(ws)
        via_scan = _exhaustive_arrangement(ws)
        assert (via_struct is None) == (via_scan is None)
        if via_struct is not None:
            assert is_four_arrangement(*via_struct)


def test_find_uses_complete_structured_search_on_large_sets():
    # 80 words with a unique deep split: arrangement exists and is found.
    base = word("0" * 10)
    ws = {Word(10, v) for v in range(76)}  # plenty of small values
    quad = find_four_arrangement(ws)
    assert quad is not None and is_four_arrangement(*quad)
    assert base in ws


def test_strategy_color_examples():
    matching = gen_star_coloring(3, "matching")
    assert matching.color(word("000"), word("111")) == 0
    assert matching.color(word("000"), word("110")) == 1
    all_one = gen_star_coloring(3, "all-one")
    for a, b in itertools.combinations(range(8), 2):
        assert all_one.color_bits(a, b) == 1
    bipartite = gen_star_coloring(3, "bipartite")
    assert bipartite.color(word("000"), word("100")) == 0
    assert bipartite.color(word("010"), word("011")) == 1


def test_coloring_rejects_bad_pairs():
    h = gen_star_coloring(3, "all-one")
    with pytest.raises(ValueError):
        h.color(word("000"), word("000"))
    with pytest.raises(ValueError):
        h.color(word("00"), word("000"))
    with pytest.raises(ValueError):
        gen_star_coloring(1, "all-one")
    with pytest.raises(ValueError):
        gen_star_coloring(4, "rainbow")


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize("ell", [3, 5, 8])
def test_generated_colorings_have_no_zero_triangle(strategy, ell):
    for seed in (0, 5, 1234):
        h = gen_star_coloring(ell, strategy, seed=seed)
        assert check_no_zero_triangle(h, "exhaustive") is None


def test_zero_triangle_counterexample_and_bounds():
    all_zero = PairColoring(ell=2, kind="all-zero")
    assert check_no_zero_triangle(all_zero, "exhaustive") == (word("00"), word("01"), word("10"))
    with pytest.raises(ValueError, match="sampled"):
        check_no_zero_triangle(gen_star_coloring(9, "all-one"), "exhaustive")
    with pytest.raises(ValueError):
        check_no_zero_triangle(gen_star_coloring(4, "all-one"), "randomly")


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_million_sampled_triples_at_ell_16(strategy):
    h = gen_star_coloring(16, strategy, seed=40)
    assert check_no_zero_triangle(h, "sampled", count=1_000_000, seed=8) is None


def test_sampled_triangle_check_deterministic():
    h = gen_star_coloring(16, "seeded-triangle-free", seed=3)
    assert check_no_zero_triangle(h, "sampled", count=50_000, seed=9) is None
    bad = PairColoring(ell=16, kind="all-zero")
    t1 = check_no_zero_triangle(bad, "sampled", count=1000, seed=9)
    t2 = check_no_zero_triangle(bad, "sampled", count=1000, seed=9)
    assert t1 == t2 and t1 is not None


def test_zero_neighborhood_examples():
    assert zero_neighborhood(gen_star_coloring(4, "all-one"), word("0101")) == set()
    matching = gen_star_coloring(4, "matching")
    assert zero_neighborhood(matching, word("0101")) == {word("1010")}
    bipartite = gen_star_coloring(4, "bipartite")
    z = zero_neighborhood(bipartite, Word.zeros(4))
    assert len(z) == 8
    assert all(w.bit(0) == 1 for w in z)
    quad = find_four_arrangement(z)
    assert quad is not None and is_four_arrangement(*quad)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_zero_neighborhoods_are_1_homogeneous(strategy):
    h = gen_star_coloring(8, strategy, seed=21)
    rng = random.Random(3)
    for trial in range(6):
        a = Word(8, rng.getrandbits(8))
        z = sorted(zero_neighborhood(h, a), key=lex_key)
        if len(z) <= 200:
            pairs = itertools.combinations(z, 2)
        else:
            pairs = ((rng.choice(z), rng.choice(z)) for _ in range(2000))
        for x, y in pairs:
            if x != y:
                assert h.color(x, y) == 1


def test_large_zero_neighborhood_sample_checked():
    h = gen_star_coloring(16, "bipartite")
    z = sorted(zero_neighborhood(h, Word.zeros(16)), key=lex_key)
    assert len(z) > 200
    rng = random.Random(5)
    for _ in range(2000):
        x, y = rng.choice(z), rng.choice(z)
        if x != y:
            assert h.color(x, y) == 1


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_extract_homogeneous_all_strategies(strategy):
    for seed in (0, 7):
        h = gen_star_coloring(16, strategy, seed=seed)
        cert = extract_homogeneous(h)
        assert verify_certificate(cert, h) == []
        assert len(cert.members) >= 5
        assert is_four_arrangement(*cert.arrangement)


def test_extract_all_one_uses_staged_branch():
    cert = extract_homogeneous(gen_star_coloring(16, "all-one"))
    assert cert.branch == "staged"
    assert Word.zeros(16) in cert.members
    assert Word.ones(16) in cert.members
    assert cert.arrangement[0] == Word.zeros(16)
    assert cert.arrangement[3] == Word.ones(16)


def test_extract_bipartite_promotes_zero_neighborhood():
    h = gen_star_coloring(16, "bipartite")
    cert = extract_homogeneous(h)
    assert cert.branch == "zero-set"
    assert cert.origin == Word.zeros(16)
    assert len(cert.members) == 2**15
    assert cert.members == frozenset(zero_neighborhood(h, Word.zeros(16)))


def test_extract_matching_avoids_matched_pairs():
    h = gen_star_coloring(16, "matching")
    cert = extract_homogeneous(h)
    assert cert.branch == "staged"
    members = sorted(cert.members, key=lex_key)
    for x, y in itertools.combinations(members, 2):
        assert x.bits ^ y.bits != (1 << 16) - 1


def test_extract_rejects_small_ell_and_detects_violations():
    with pytest.raises(ValueError, match="16"):
        extract_homogeneous(gen_star_coloring(8, "all-one"))
    with pytest.raises(LemmaViolation):
        extract_homogeneous(PairColoring(ell=16, kind="all-zero"))


def test_certificate_verification_catches_planted_faults():
    h = gen_star_coloring(16, "matching")
    cert = extract_homogeneous(h)
    # same members against a hostile coloring: homogeneity must fail
    problems = verify_certificate(cert, PairColoring(ell=16, kind="all-zero"))
    assert problems and "colored 0" in problems[0]
