import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repcode.codec import (
    decode,
    encode_natural,
    encode_sequential,
    heads_from_message,
    message_from_heads,
)
from repcode.errors import DomainError
from repcode.rep import RepSpec, kloeve_spec, optimal_spec, rep_enumerate, rep_size
from repcode.verify import random_spec

SMALL = RepSpec.from_lists([[0], [0, 1], [1]])


def naive_decode(spec, received):
    """Scan every head with a plain list of unused symbols."""
    n = spec.n
    free = list(range(n))
    heads = [None] * n
    for i, rho in enumerate(received):
        S = spec[n - 1 - i]
        best = None
        for h in S:
            if best is None or abs(rho - free[h]) < abs(rho - free[best]):
                best = h
        heads[n - 1 - i] = best
        free.pop(best)
    return tuple(heads)


def messages(spec):
    return product(*(range(len(S)) for S in spec))


def test_message_mapping_examples():
    spec = optimal_spec(3, 2)
    assert heads_from_message(spec, (0, 0, 1)) == (0, 0, 2)
    assert heads_from_message(spec, (0, 0, 0)) == (0, 0, 0)
    assert message_from_heads(SMALL, (0, 1, 1)) == (0, 1, 0)
    assert message_from_heads(RepSpec.from_lists([[0], [1], [2]]), (0, 1, 2)) == (0, 0, 0)
    with pytest.raises(DomainError):
        heads_from_message(spec, (0, 1, 0))
    with pytest.raises(DomainError):
        message_from_heads(spec, (0, 0, 1))
    with pytest.raises(DomainError):
        heads_from_message(spec, (0, 0))


@pytest.mark.parametrize("n", range(1, 7))
def test_message_mapping_round_trip(n):
    for d in range(1, n + 1):
        spec = optimal_spec(n, d)
        for x in messages(spec):
            assert message_from_heads(spec, heads_from_message(spec, x)) == x


def test_natural_encoder_examples():
    assert encode_natural(SMALL, (0, 0, 1)) == (1, 0, 2)
    assert encode_natural(SMALL, (0, 1, 1)) == (1, 2, 0)
    assert encode_natural(RepSpec.from_lists([[0]] * 3), (0, 0, 0)) == (0, 1, 2)
    with pytest.raises(DomainError):
        encode_natural(SMALL, (0, 1, 0))


def test_sequential_encoder_examples():
    assert encode_sequential(SMALL, (0, 1, 1)) == (1, 2, 0)
    assert encode_sequential(SMALL, (0, 0, 1)) == (1, 0, 2)
    spec = optimal_spec(50, 3)
    assert encode_sequential(spec, (0,) * 50) == tuple(range(50))
    with pytest.raises(DomainError):
        encode_sequential(SMALL, (0, 2, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_encoders_agree_on_every_message(n):
    rng = random.Random(n)
    specs = [optimal_spec(n, d) for d in range(1, n + 1)]
    specs += [kloeve_spec(n, d, q) for q in range(2, n + 1) for d in range(1, n) if (q - 1) * d < n]
    specs += [random_spec(rng, n) for _ in range(20)]
    for spec in specs:
        image = set()
        code = set(rep_enumerate(spec))
        for x in messages(spec):
            s = heads_from_message(spec, x)
            w = encode_sequential(spec, s)
            assert w == encode_natural(spec, s)
            assert w in code
            image.add(w)
        assert len(image) == rep_size(spec)


@settings(max_examples=50)
@given(st.integers(1, 300), st.integers(1, 20), st.randoms(use_true_random=False))
def test_encoders_agree_on_long_words(n, d, rnd):
    spec = optimal_spec(n, min(d, n))
    s = [S[rnd.randrange(len(S))] for S in spec]
    assert encode_sequential(spec, s) == encode_natural(spec, s)


def test_decode_hand_trace():
    res = decode(optimal_spec(4, 3), [1, 0, 1, 2])
    assert res.heads == (0, 0, 0, 0)
    assert res.ranks == (0, 0, 0, 0)
    assert res.rebuilt == (0, 1, 2, 3)


def test_decode_zero_noise_long():
    rng = random.Random(5)
    for n, d in ((10, 3), (1000, 7), (10_000, 50)):
        spec = optimal_spec(n, d)
        x = [rng.randrange(len(S)) for S in spec]
        s = heads_from_message(spec, x)
        c = encode_sequential(spec, s)
        res = decode(spec, c)
        assert res.heads == s and res.ranks == tuple(x) and res.rebuilt == c


def test_decode_radius_exhaustive_5_3():
    spec = optimal_spec(5, 3)
    assert rep_size(spec) == 4
    for x in messages(spec):
        s = heads_from_message(spec, x)
        c = encode_sequential(spec, s)
        for e in product((-1, 0, 1), repeat=5):
            res = decode(spec, [a + b for a, b in zip(c, e)])
            assert res.heads == s and res.rebuilt == c


@given(st.integers(1, 9).flatmap(
    lambda n: st.tuples(
        st.randoms(use_true_random=False),
        st.lists(st.integers(-3, n + 3), min_size=n, max_size=n),
    )
))
def test_decode_matches_linear_scan(case):
    rnd, received = case
    spec = random_spec(rnd, len(received))
    res = decode(spec, received)
    assert res.heads == naive_decode(spec, received)
    assert res.rebuilt == encode_sequential(spec, res.heads)
    assert res.ranks == message_from_heads(spec, res.heads)


def test_decode_tie_prefers_smaller_head():
    # candidates 0 and 2 at position 0, received 1
    spec = RepSpec.from_lists([[0], [0], [0, 2]])
    assert decode(spec, [1, 0, 0]).heads[2] == 0


def test_decode_length_mismatch():
    with pytest.raises(DomainError):
        decode(SMALL, [0, 1])
