"""Permutations under the Chebyshev metric and the head-extension map.

Permutations are plain tuples of ints.  The empty tuple is the formal
length-zero codeword, whose only extension is ``extend((), 0) == (0,)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DomainError

Permutation = tuple[int, ...]
DistanceValue = Union[int, float]

#: Minimum distance of a singleton head set or a one-word code.
INFINITY: float = math.inf

EPSILON: Permutation = ()


def is_permutation(seq: Sequence[int]) -> bool:
    n = len(seq)
    return sorted(seq) == list(range(n))


def as_permutation(seq: Iterable[int]) -> Permutation:
    """Return ``seq`` as a tuple, raising `DomainError` unless it is a
    bijection on ``range(len(seq))``."""
    p = tuple(int(x) for x in seq)
    if not is_permutation(p):
        raise DomainError(f"not a permutation of [{len(p)}]: {list(p)}")
    return p


def identity(n: int) -> Permutation:
    return tuple(range(n))


def phi_symbol(x: int, s: int, n: int | None = None) -> int:
    """Shift symbol ``x`` past head ``s``: ``x`` if ``x < s`` else ``x + 1``.

    When ``n`` is given the arguments are checked against ``0 <= x < n`` and
    ``0 <= s <= n``.
    """
    if x < 0 or s < 0 or (n is not None and (x >= n or s > n)):
        raise DomainError(f"phi_symbol({x}, {s}) outside n={n}")
    return x + 1 if x >= s else x


def extend(p: Sequence[int], s: int) -> Permutation:
    """Prepend head ``s`` to ``p`` and shift every symbol ``>= s`` up by one.

    >>> extend((0, 1, 2, 3), 2)
    (2, 0, 1, 3, 4)
    >>> extend((), 0)
    (0,)
    """
    n = len(p)
    if not 0 <= s <= n:
        raise DomainError(f"head {s} outside [0, {n}]")
    return (s, *[x + 1 if x >= s else x for x in p])


def contract(p: Sequence[int]) -> tuple[Permutation, int]:
    """Inverse of `extend`: split ``p`` into its tail permutation and head."""
    if len(p) == 0:
        raise DomainError("cannot contract the empty permutation")
    s = p[0]
    return tuple(x - 1 if x > s else x for x in p[1:]), s


def chebyshev(p: Sequence[int], q: Sequence[int]) -> int:
    """Maximum coordinate-wise absolute difference (0 for empty words)."""
    if len(p) != len(q):
        raise DomainError(f"length mismatch: {len(p)} != {len(q)}")
    return max((abs(a - b) for a, b in zip(p, q)), default=0)


@dataclass(frozen=True, eq=False)
class HeadSet:
    """A non-empty ascending set of heads drawn from ``range(context_len)``.

    ``heads`` may be a `range` so that arithmetic progressions cost O(1)
    memory; any other sequence is stored as a tuple.
    """

    heads: Sequence[int]
    context_len: int

    def __post_init__(self) -> None:
        heads = self.heads
        if not isinstance(heads, range):
            heads = tuple(int(h) for h in heads)
            object.__setattr__(self, "heads", heads)
        if len(heads) == 0:
            raise DomainError("head set is empty")
        if isinstance(heads, range):
            if heads.step <= 0:
                raise DomainError("head range must ascend")
        elif any(a >= b for a, b in zip(heads, heads[1:])):
            raise DomainError(f"heads not strictly ascending: {list(heads)}")
        if heads[0] < 0 or heads[-1] >= self.context_len:
            raise DomainError(
                f"heads {list(heads)} not inside [0, {self.context_len})"
            )

    def __len__(self) -> int:
        return len(self.heads)

    def __iter__(self):
        return iter(self.heads)

    def __getitem__(self, i: int) -> int:
        return self.heads[i]

    def __contains__(self, s: object) -> bool:
        return s in self.heads

    def index(self, s: int) -> int:
        """Rank of head ``s`` within the set (0 = smallest)."""
        try:
            return self.heads.index(s)
        except ValueError:
            raise DomainError(f"{s} is not in head set {list(self.heads)}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeadSet):
            return NotImplemented
        return self.context_len == other.context_len and tuple(self.heads) == tuple(
            other.heads
        )

    def __hash__(self) -> int:
        return hash((tuple(self.heads), self.context_len))

    def __repr__(self) -> str:
        return f"HeadSet({list(self.heads)}, context_len={self.context_len})"


def headset_min_distance(S: HeadSet | Sequence[int]) -> DistanceValue:
    """Smallest gap between distinct heads; `INFINITY` for a singleton."""
    heads = S.heads if isinstance(S, HeadSet) else sorted(set(S))
    if len(heads) < 2:
        return INFINITY
    if isinstance(heads, range):
        return heads.step
    return min(b - a for a, b in zip(heads, heads[1:]))


def code_min_distance(C: Iterable[Sequence[int]]) -> DistanceValue:
    """Brute-force pairwise minimum distance of a code.

    Duplicate words are collapsed first; a one-word code has distance
    `INFINITY`.
    """
    words = sorted({tuple(c) for c in C})
    if not words:
        raise DomainError("code is empty")
    if len({len(w) for w in words}) != 1:
        raise DomainError("codewords have mixed lengths")
    if len(words) == 1:
        return INFINITY
    if len(words[0]) == 0:
        return INFINITY
    a = np.asarray(words, dtype=np.int64)
    best = None
    for i in range(len(a) - 1):
        d = int(np.abs(a[i + 1 :] - a[i]).max(axis=1).min())
        if best is None or d < best:
            best = d
            if best == 1:
                break
    return best


def extend_code(C: Iterable[Sequence[int]], S: HeadSet) -> frozenset[Permutation]:
    """All extensions of words of ``C`` by heads of ``S``."""
    out = set()
    for p in C:
        if len(p) + 1 != S.context_len:
            raise DomainError(
                f"head set context {S.context_len} does not fit length {len(p)}"
            )
        out.update(extend(p, s) for s in S)
    return frozenset(out)


@dataclass(frozen=True, order=True)
class Interval:
    """The integer set ``(lo, hi]``; always non-empty (``lo < hi``)."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise DomainError(f"degenerate interval ({self.lo}, {self.hi}]")

    @classmethod
    def between(cls, x: int, y: int) -> Interval | None:
        """Canonical interval between two symbols, or None when equal."""
        if x == y:
            return None
        return cls(min(x, y), max(x, y))

    def __len__(self) -> int:
        return self.hi - self.lo

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and self.lo < a <= self.hi

    def contains(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def disjoint(self, other: Interval) -> bool:
        return self.hi <= other.lo or other.hi <= self.lo

    def extended(self, s: int) -> Interval:
        """Image of the interval under the head-``s`` shift."""
        return Interval(phi_symbol(self.lo, s), phi_symbol(self.hi, s))


def interval_set(p: Sequence[int], q: Sequence[int]) -> frozenset[Interval]:
    if len(p) != len(q):
        raise DomainError(f"length mismatch: {len(p)} != {len(q)}")
    return frozenset(Interval(min(a, b), max(a, b)) for a, b in zip(p, q) if a != b)


def maximum_interval(p: Sequence[int], q: Sequence[int]) -> Interval | None:
    """The interval of the pair that contains every other one, if any."""
    intervals = interval_set(p, q)
    if not intervals:
        return None
    widest = max(intervals, key=len)
    if all(widest.contains(j) for j in intervals):
        return widest
    return None
