"""Encoders and the sequential decoder for REP codes.

A message is a rank vector ``x`` with ``x[j] < len(S[j])``; it maps to the
head sequence ``s[j] = S[j][x[j]]``.  Codeword position ``i`` is governed by
the head of step ``n - 1 - i``: the last extension writes position 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .orderstat import RankSelectSet
from .perm import EPSILON, Permutation, extend
from .rep import RepSpec

Message = tuple[int, ...]
HeadSequence = tuple[int, ...]


@dataclass(frozen=True)
class DecodeResult:
    heads: HeadSequence
    ranks: Message
    rebuilt: Permutation


def _check_length(spec: RepSpec, seq: Sequence[int], what: str) -> None:
    if len(seq) != spec.n:
        raise DomainError(f"{what} has length {len(seq)}, spec has n={spec.n}")


def _check_heads(spec: RepSpec, heads: Sequence[int]) -> None:
    _check_length(spec, heads, "head sequence")
    for j, (s, S) in enumerate(zip(heads, spec)):
        if s not in S:
            raise DomainError(f"head {s} at step {j} not in {list(S)}")


def heads_from_message(spec: RepSpec, x: Sequence[int]) -> HeadSequence:
    _check_length(spec, x, "message")
    heads = []
    for j, (r, S) in enumerate(zip(x, spec)):
        if not 0 <= r < len(S):
            raise DomainError(f"rank {r} at step {j} outside [0, {len(S)})")
        heads.append(S[r])
    return tuple(heads)


def message_from_heads(spec: RepSpec, s: Sequence[int]) -> Message:
    _check_length(spec, s, "head sequence")
    return tuple(S.index(h) for h, S in zip(s, spec))


def encode_natural(spec: RepSpec, s: Sequence[int]) -> Permutation:
    """Extend the empty word by ``s[0]``, then ``s[1]``, ...; O(n^2)."""
    _check_heads(spec, s)
    word = EPSILON
    for h in s:
        word = extend(word, h)
    return word


def encode_sequential(spec: RepSpec, s: Sequence[int]) -> Permutation:
    """Emit position ``i`` as the ``s[n-1-i]``-th smallest unused symbol.

    Produces the same codeword as `encode_natural` in O(n log n).
    """
    _check_heads(spec, s)
    n = len(s)
    free = RankSelectSet(n)
    pop = free.pop
    return tuple([pop(s[n - 1 - i]) for i in range(n)])


def decode(spec: RepSpec, received: Sequence[int]) -> DecodeResult:
    """Sequential nearest-candidate decoding.

    At position ``i`` the candidates are ``k``-th smallest unused symbols
    for ``k`` in ``S[n-1-i]``; the one closest to ``received[i]`` wins, ties
    going to the smaller head.  Exact whenever every ``|error| < d/2`` for a
    spec whose multi-head steps all have gaps ``>= d``.
    """
    _check_length(spec, received, "received word")
    n = spec.n
    free = RankSelectSet(n)
    select = free.select
    heads = [0] * n
    ranks = [0] * n
    rebuilt = []
    for i, rho in enumerate(received):
        j = n - 1 - i
        S = spec[j]
        # candidate symbols increase with the head, so the closest one is
        # adjacent to the first candidate >= rho
        lo, hi = 0, len(S)
        while lo < hi:
            mid = (lo + hi) // 2
            if select(S[mid]) < rho:
                lo = mid + 1
            else:
                hi = mid
        k = lo
        if k == len(S) or (k > 0 and rho - select(S[k - 1]) <= select(S[k]) - rho):
            k -= 1
        heads[j] = S[k]
        ranks[j] = k
        rebuilt.append(free.pop(S[k]))
    return DecodeResult(tuple(heads), tuple(ranks), tuple(rebuilt))
