import math
from itertools import permutations, product

import pytest

from repcode.dpgp import (
    DpgpDecodeFailure,
    DpgpParams,
    dpgp_decode,
    dpgp_encode,
    dpgp_enumerate,
    dpgp_size,
    dpgp_size_product,
    is_dpgp_member,
    perm_rank,
    perm_unrank,
)
from repcode.errors import DomainError, ResourceError
from repcode.perm import code_min_distance


def brute_dpgp(n, d):
    return {p for p in permutations(range(n)) if all(x % d == i % d for i, x in enumerate(p))}


def test_membership():
    assert is_dpgp_member((0, 1, 2, 3), 2)
    assert is_dpgp_member((2, 1, 0, 3), 2)
    assert not is_dpgp_member((1, 0, 2, 3), 2)
    with pytest.raises(DomainError):
        is_dpgp_member((0, 1), 3)


def test_size_examples():
    assert dpgp_size(4, 2) == len(brute_dpgp(4, 2)) == 4
    assert dpgp_size(6, 2) == len(brute_dpgp(6, 2)) == 36
    assert dpgp_size(5, 5) == 1
    with pytest.raises(DomainError):
        dpgp_size(3, 4)


def test_divisible_case_is_quotient_factorial_power():
    # the factorial form reduces to ((n/d)!)^d when d divides n
    for d in range(1, 9):
        for k in range(1, 8):
            assert dpgp_size(k * d, d) == math.factorial(k) ** d


def test_size_forms_agree_to_60():
    for n in range(1, 61):
        for d in range(1, n + 1):
            assert dpgp_size(n, d) == dpgp_size_product(n, d)


def test_enumerate_examples():
    assert set(dpgp_enumerate(4, 2)) == {(0, 1, 2, 3), (0, 3, 2, 1), (2, 1, 0, 3), (2, 3, 0, 1)}
    assert list(dpgp_enumerate(3, 3)) == [(0, 1, 2)]
    assert sum(1 for _ in dpgp_enumerate(6, 3)) == 8
    with pytest.raises(ResourceError):
        list(dpgp_enumerate(7, 1, cap=100))


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_brute_force(n):
    for d in range(1, n + 1):
        words = list(dpgp_enumerate(n, d))
        assert len(words) == len(set(words)) == dpgp_size(n, d)
        assert set(words) == brute_dpgp(n, d)
        if d < n:
            dist = code_min_distance(words)
            assert dist >= d
            if any(len(range(i, n, d)) >= 2 for i in range(d)):
                assert dist == d


def test_lehmer_rank_round_trip():
    for k in range(6):
        perms = sorted(permutations(range(k)))
        for r, p in enumerate(perms):
            assert perm_rank(p) == r
            assert perm_unrank(r, k) == p
    with pytest.raises(DomainError):
        perm_unrank(6, 3)


def test_encode_examples():
    params = DpgpParams(4, 2)
    assert dpgp_encode(params, (0, 0)) == (0, 1, 2, 3)
    assert dpgp_encode(params, (1, 0)) == (2, 1, 0, 3)
    with pytest.raises(DomainError):
        dpgp_encode(params, (2, 0))
    with pytest.raises(DomainError):
        DpgpParams(3, 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_encode_is_bijective_and_round_trips(n):
    for d in range(1, n + 1):
        params = DpgpParams(n, d)
        all_ranks = product(*(range(math.factorial(k)) for k in params.class_sizes()))
        seen = set()
        for ranks in all_ranks:
            w = dpgp_encode(params, ranks)
            assert is_dpgp_member(w, d)
            assert dpgp_decode(params, w) == ranks
            seen.add(w)
        assert len(seen) == dpgp_size(n, d)


def test_decode_zero_noise():
    assert dpgp_decode(DpgpParams(4, 2), (0, 1, 2, 3)) == (0, 0)


def test_decode_tie_breaks_low_and_signals_failure():
    # positions 1 and 3 both see 2, halfway between 1 and 3; both go to 1
    with pytest.raises(DpgpDecodeFailure) as info:
        dpgp_decode(DpgpParams(4, 2), (0, 2, 2, 2))
    assert info.value.estimate == (0, 1, 2, 1)


def test_decode_out_of_range_values_project_into_range():
    params = DpgpParams(5, 2)
    assert dpgp_decode(params, (-3, 1, 2, 9, 4)) == dpgp_decode(params, (0, 1, 2, 3, 4))


def test_decode_corrects_noise_below_half_distance():
    params = DpgpParams(5, 3)
    words = list(dpgp_enumerate(5, 3))
    assert len(words) == 4
    for w in words:
        ranks = dpgp_decode(params, w)
        for e in product((-1, 0, 1), repeat=5):
            r = [a + b for a, b in zip(w, e)]
            assert dpgp_decode(params, r) == ranks
            assert dpgp_encode(params, dpgp_decode(params, r)) == w
