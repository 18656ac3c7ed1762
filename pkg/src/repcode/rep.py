"""Recursively extended permutation (REP) codes.

A REP code of length ``n`` is built from the empty word by ``n`` successive
extensions; step ``j`` prepends a head drawn from ``S[j] ⊆ range(j + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ResourceError, SpecValidationError
from .perm import (
    EPSILON,
    INFINITY,
    DistanceValue,
    HeadSet,
    Permutation,
    extend,
    headset_min_distance,
)


@dataclass(frozen=True)
class RepSpec:
    """Head sets ``S[0], ..., S[n-1]``; ``S[j]`` has context length ``j + 1``."""

    head_sets: tuple[HeadSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "head_sets", tuple(self.head_sets))
        bad = [
            (j, f"context length {S.context_len}, expected {j + 1}")
            for j, S in enumerate(self.head_sets)
            if S.context_len != j + 1
        ]
        if bad:
            raise SpecValidationError(bad)

    @classmethod
    def from_lists(cls, lists: Iterable[Iterable[int]]) -> RepSpec:
        """Build a spec from plain head lists, reporting every bad step."""
        sets, problems = [], []
        for j, heads in enumerate(lists):
            try:
                sets.append(HeadSet(heads if isinstance(heads, range) else tuple(heads), j + 1))
            except DomainError as exc:
                problems.append((j, str(exc)))
        if problems:
            raise SpecValidationError(problems)
        return cls(tuple(sets))

    @property
    def n(self) -> int:
        return len(self.head_sets)

    def __len__(self) -> int:
        return len(self.head_sets)

    def __getitem__(self, j: int) -> HeadSet:
        return self.head_sets[j]

    def __iter__(self) -> Iterator[HeadSet]:
        return iter(self.head_sets)

    def to_lists(self) -> list[list[int]]:
        return [list(S.heads) for S in self.head_sets]


@dataclass(frozen=True)
class SpecReport:
    """Summary of a spec against a target distance ``d``.

    ``certified`` is a sufficient condition only: every multi-head step has
    gaps of at least ``d``, which guarantees distance ``>= d``.  A spec can
    fail the certificate and still reach distance ``d``.
    """

    n: int
    d: int
    code_size: int
    step_distances: tuple[DistanceValue, ...]
    guaranteed_distance: DistanceValue
    certified: bool
    failing_steps: tuple[int, ...]
    certificate_kind: str = "sufficient"


def optimal_spec(n: int, d: int) -> RepSpec:
    """Largest head sets with spacing ``d``: ``S[j] = {0, d, ..., (j//d)*d}``."""
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got n={n}, d={d}")
    return RepSpec(tuple(HeadSet(range(0, (j // d) * d + 1, d), j + 1) for j in range(n)))


def kloeve_spec(n: int, d: int, q: int) -> RepSpec:
    """The q-ary family: ``q`` heads per step once ``j >= (q-1)*d``.

    Size is ``q ** (n - (q-1)*d)`` with distance at least ``d``.
    """
    if q < 2 or d < 1 or not (q - 1) * d < n:
        raise DomainError(f"need q >= 2, d >= 1, (q-1)*d < n; got n={n}, d={d}, q={q}")
    sets = []
    for j in range(n):
        if j < (q - 1) * d:
            heads: Sequence[int] = (0,)
        else:
            step = j // (q - 1)
            heads = tuple(sorted({step * x for x in range(q - 1)} | {j}))
        sets.append(HeadSet(heads, j + 1))
    return RepSpec(tuple(sets))


def rep_size(spec: RepSpec) -> int:
    return math.prod(len(S) for S in spec)


def optimal_rep_size(n: int, d: int) -> int:
    """Largest size of a length-``n`` REP code with distance ``>= d``."""
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got n={n}, d={d}")
    return math.prod(j // d + 1 for j in range(n))


def validate_spec(spec: RepSpec | Iterable[Iterable[int]], d: int) -> SpecReport:
    if not isinstance(spec, RepSpec):
        spec = RepSpec.from_lists(spec)
    if d < 1:
        raise DomainError(f"target distance must be positive, got {d}")
    dists = tuple(headset_min_distance(S) for S in spec)
    failing = tuple(j for j, g in enumerate(dists) if g < d)
    return SpecReport(
        n=spec.n,
        d=d,
        code_size=rep_size(spec),
        step_distances=dists,
        guaranteed_distance=min(dists, default=INFINITY),
        certified=not failing,
        failing_steps=failing,
    )


def rep_enumerate(spec: RepSpec, cap: int = 10**6) -> Iterator[Permutation]:
    """Stream every codeword; heads ascend at each level, last step fastest."""
    size = rep_size(spec)
    if size > cap:
        raise ResourceError(f"code has {size} words, cap is {cap}")
    sets = spec.head_sets
    n = len(sets)

    def walk(j: int, word: Permutation) -> Iterator[Permutation]:
        if j == n:
            yield word
            return
        for s in sets[j]:
            yield from walk(j + 1, extend(word, s))

    return walk(0, EPSILON)


def c1_headset(S: HeadSet | Sequence[int], d: int) -> int:
    """Total increments needed to stretch every gap shorter than ``d`` to ``d``."""
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    heads = list(S.heads if isinstance(S, HeadSet) else sorted(set(S)))
    return sum(d - (b - a) for a, b in zip(heads, heads[1:]) if b - a < d)


# spec files: one line of ascending heads per step, '#' comments and blank
# lines ignored


def parse_spec(text: str) -> RepSpec:
    """Parse spec file text; errors carry 1-based line numbers."""
    rows: list[tuple[int, list[int]]] = []
    problems: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            heads = [int(tok) for tok in line.split()]
        except ValueError:
            problems.append((lineno, f"non-integer token in {line!r}"))
            continue
        rows.append((lineno, heads))
    sets = []
    for j, (lineno, heads) in enumerate(rows):
        try:
            sets.append(HeadSet(heads, j + 1))
        except DomainError as exc:
            problems.append((lineno, f"step {j}: {exc}"))
    if problems:
        raise SpecValidationError(sorted(problems), unit="line")
    return RepSpec(tuple(sets))


def format_spec(spec: RepSpec) -> str:
    return "".join(" ".join(map(str, S)) + "\n" for S in spec)


def load_spec(path: str | Path) -> RepSpec:
    return parse_spec(Path(path).read_text(encoding="utf-8"))


def save_spec(spec: RepSpec, path: str | Path) -> None:
    Path(path).write_text(format_spec(spec), encoding="utf-8")
