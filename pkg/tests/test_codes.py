"""Codes: counting, bounds, spreads, duality, self-duality, file verification."""

import itertools
import json
import random

import pytest

from orbitcodes import (
    SubspaceCode,
    code_from_generators,
    code_from_words,
    distance,
    dualize,
    etzion_vardy_bound,
    from_exponents,
    gaussian_coefficient,
    is_cyclic,
    is_quasi_cyclic,
    is_self_dual,
    load_code_file,
    make_field,
    min_distance,
    orthogonal_complement,
    span,
    spread_code,
    verify_code_file,
)
from orbitcodes.errors import BadModulus, NotADivisor, OddDistance, TooSmall
from tests.conftest import data_path


# -- Gaussian coefficients and bounds --------------------------------------------


def q_pascal(n, k, q, cache={}):
    """Independent oracle: the q-analogue Pascal recurrence."""
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    key = (n, k, q)
    if key not in cache:
        cache[key] = q_pascal(n - 1, k - 1, q) + q ** k * q_pascal(n - 1, k, q)
    return cache[key]


def test_gaussian_matches_q_pascal_oracle():
    for q in (2, 3):
        for n in range(17):
            for k in range(n + 1):
                assert gaussian_coefficient(n, k, q) == q_pascal(n, k, q)


def test_gaussian_symmetry():
    for n in range(17):
        for k in range(n + 1):
            assert gaussian_coefficient(n, k, 2) == gaussian_coefficient(n, n - k, 2)


def test_bound_paper_values():
    assert etzion_vardy_bound(10, 4, 3, 2) == 24893
    assert etzion_vardy_bound(8, 4, 4, 2) == 6477
    assert etzion_vardy_bound(10, 10, 5, 2) == 33


def test_bound_rejects_odd_distance():
    with pytest.raises(OddDistance):
        etzion_vardy_bound(10, 3, 3, 2)


# -- code construction and distance -----------------------------------------------


def test_code_from_generators_orbit_union(f16):
    g = from_exponents(f16, [0, 1, 4])
    C = code_from_generators(f16, 1, [g])
    assert C.size == 15 and C.constant_dimension
    assert C.params() == (4, 2, 15, 2)


def test_duplicate_generators_flagged(f16):
    g = from_exponents(f16, [0, 1, 4])
    C = code_from_generators(f16, 1, [g, g])
    assert C.size == 15
    assert C.duplicate_generators == (1,)


def test_bad_modulus_rejected(f16):
    g = from_exponents(f16, [0, 1, 4])
    with pytest.raises(BadModulus):
        code_from_generators(f16, 4, [g])


def test_min_distance_orbit_vs_all_pairs(f64):
    """Shift-identity computation agrees with the naive all-pairs scan."""
    rng = random.Random(7)
    for _ in range(10):
        exps = rng.sample(range(63), 3)
        gens = [span(f64, exps)]
        for m in (1, 7, 9):
            C = code_from_generators(f64, m, gens)
            if C.size < 2:
                continue
            naive = min(distance(a, b)
                        for a, b in itertools.combinations(C.words, 2))
            assert min_distance(C) == naive


def test_min_distance_needs_two_words(f16):
    C = code_from_words(f16, [from_exponents(f16, [0, 1, 4])])
    with pytest.raises(TooSmall):
        min_distance(C)


def test_mixed_dimension_params(f16):
    C = code_from_words(f16, [from_exponents(f16, [2]),
                              from_exponents(f16, [0, 1, 4])])
    assert not C.constant_dimension
    assert C.params() == (4, 2, 3)  # [n, size, d]: the words intersect trivially


# -- spreads -----------------------------------------------------------------------


def test_spread_n6(f64):
    C = spread_code(f64, 3)
    assert C.params() == (6, 3, 9, 6)
    assert C.size == etzion_vardy_bound(6, 6, 3, 2)  # spreads meet the bound


def test_spread_requires_divisor(f64):
    with pytest.raises(NotADivisor):
        spread_code(f64, 4)


def test_spread_n10_is_example_code():
    f = make_field(2, 10)
    C = spread_code(f, 5)
    assert C.params() == (10, 5, 33, 10)


# -- duality -----------------------------------------------------------------------


def load_dual_table(name):
    with open(data_path(name)) as fh:
        return json.load(fh)


def test_dual_table_n5_all_rows(f32):
    doc = load_dual_table("dual_table_n5.json")
    assert len(doc["rows"]) == 31
    for row in doc["rows"]:
        got = orthogonal_complement(from_exponents(f32, row["word"]))
        assert sorted(got.exponents) == sorted(row["dual"])


def test_dual_table_n6_spread_all_rows(f64):
    doc = load_dual_table("dual_table_n6_spread.json")
    assert len(doc["rows"]) == 9
    spread = spread_code(f64, 3)
    table_words = {tuple(sorted(r["word"])) for r in doc["rows"]}
    assert {tuple(w.exponents) for w in spread.words} == table_words
    for row in doc["rows"]:
        got = orthogonal_complement(from_exponents(f64, row["word"]))
        assert sorted(got.exponents) == sorted(row["dual"])


def test_dual_of_cyclic_code_not_cyclic(f32):
    C = code_from_generators(f32, 1, [from_exponents(f32, [0, 13, 14])])
    assert is_cyclic(C)
    D = dualize(C)
    assert not is_cyclic(D)
    assert dualize(D).words == C.words  # involution


def test_duality_preserves_parameters_random(f64):
    """Size, dimension flip, and min distance are preserved on random codes."""
    rng = random.Random(3)
    for _ in range(100):
        words = set()
        while len(words) < 4:
            words.add(span(f64, rng.sample(range(63), 2)))
        C = code_from_words(f64, words)
        D = dualize(C)
        assert D.size == C.size
        assert {6 - k for k in C.dims} == set(D.dims)
        assert min_distance(D) == min_distance(C)


# -- self-duality and quasi-cyclicity -------------------------------------------------


def test_quasi_cyclic_predicate(f16):
    g = from_exponents(f16, [2, 3, 6])
    C = code_from_generators(f16, 3, [g])
    assert C.size == 5
    assert is_quasi_cyclic(C, 3)
    assert not is_cyclic(C)
    with pytest.raises(BadModulus):
        is_quasi_cyclic(C, 4)


def test_published_5word_code_is_not_self_dual(f16):
    """The claimed self-dual 3-quasi [4,2,5,2] code fails the definition:

    two of its five words have orthogonal complements outside the code
    (under the same inner product that reproduces the 31-row dual table).
    """
    g = from_exponents(f16, [2, 3, 6])
    C = code_from_generators(f16, 3, [g])
    assert not is_self_dual(C)
    outside = [w for w in C.words
               if orthogonal_complement(w) not in C.words]
    assert len(outside) == 2


def test_self_dual_examples_verify(f16, f64, f256):
    pairs = [
        (f16, 5, [[2, 7, 12], [4, 9, 14]]),
        (f64, 21, [[9, 24, 30, 33, 43, 50, 51]]),
        (f256, 85, [[27, 34, 46, 54, 76, 112, 119, 131, 139, 161, 197, 204,
                     216, 224, 246],
                    [5, 27, 63, 70, 82, 90, 112, 148, 155, 167, 175, 197,
                     233, 240, 252]]),
    ]
    for field, m, gens in pairs:
        C = code_from_generators(field, m, [from_exponents(field, g) for g in gens])
        assert is_self_dual(C)
        assert is_quasi_cyclic(C, m)


def test_mixed_dims_missing_pair_not_self_dual(f16):
    C = code_from_words(f16, [from_exponents(f16, [2]),
                              from_exponents(f16, [0, 1, 4])])
    assert not is_self_dual(C)


# -- code files --------------------------------------------------------------------


def test_verify_example1_optimal():
    r = verify_code_file(data_path("example1_n10k5.json"))
    assert (r["size"], r["dims"], r["min_dist"]) == (33, [5], 10)
    assert r["matches_claim"] and r["optimal"] and r["bound"] == 33


def test_verify_quasi3_code():
    r = verify_code_file(data_path("quasi3_n8k4.json"))
    assert (r["size"], r["dims"], r["min_dist"]) == (2992, [4], 4)
    assert r["matches_claim"]
    assert r["orbit_sizes"].count(85) == 35 and r["orbit_sizes"].count(17) == 1


def test_verify_example3_reports_shortfall():
    """The 20 listed generators contain a duplicate; expansion reaches 4505,
    one 85-orbit short of the claimed 4590."""
    r = verify_code_file(data_path("example3_n8k4.json"))
    assert r["duplicate_generators"] == [18]
    assert r["size"] == 4505
    assert r["matches_claim"] is False
    assert any("4590" in note for note in r["notes"])


def test_verify_selfdual_files():
    for name in ("selfdual_p2_4_m5.json", "selfdual_p2_6_m21.json",
                 "selfdual_p2_8_m85.json"):
        cf = load_code_file(data_path(name))
        C = code_from_generators(cf.field, cf.m, cf.generators)
        assert is_self_dual(C)
        assert is_quasi_cyclic(C, cf.m)


def test_constant_dimension_codes_respect_bound():
    for name in ("cyclic_n5k2.json", "spread_n6k3.json", "quasi3_n8k4.json"):
        r = verify_code_file(data_path(name))
        k = r["dims"][0]
        assert r["size"] <= etzion_vardy_bound(r["field"]["n"], r["min_dist"],
                                               k, r["field"]["q"])
