"""Direct product group permutation (DPGP) codes.

A DPGP code of length ``n`` and distance ``d`` holds every permutation with
``p[i] % d == i % d``: each residue class of positions carries an
arbitrary arrangement of the symbols in the same class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .errors import DomainError, ResourceError
from .orderstat import RankSelectSet
from .perm import Permutation

ClassRanks = tuple[int, ...]


@dataclass(frozen=True)
class DpgpParams:
    n: int
    d: int

    def __post_init__(self) -> None:
        _check_params(self.n, self.d)

    def residue_class(self, i: int) -> range:
        """Positions (equivalently symbols) congruent to ``i`` mod ``d``."""
        return range(i, self.n, self.d)

    def class_sizes(self) -> list[int]:
        return [len(self.residue_class(i)) for i in range(self.d)]


class DpgpDecodeFailure(DomainError):
    """The symbol-wise projection of a received word is not a permutation.

    ``estimate`` carries the projected symbols anyway.
    """

    def __init__(self, estimate: Permutation) -> None:
        self.estimate = estimate
        super().__init__(f"projection {list(estimate)} is not a permutation")


def _check_params(n: int, d: int) -> None:
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got n={n}, d={d}")


def perm_rank(seq: Sequence[int]) -> int:
    """Lexicographic rank of a permutation of ``range(len(seq))``."""
    k = len(seq)
    free = RankSelectSet(k)
    rank = 0
    for i, v in enumerate(seq):
        rank = rank * (k - i) + free.rank(v)
        free.remove(v)
    return rank


def perm_unrank(rank: int, k: int) -> Permutation:
    """Inverse of `perm_rank` over permutations of ``range(k)``."""
    if not 0 <= rank < math.factorial(k):
        raise DomainError(f"rank {rank} outside [0, {k}!)")
    digits = []
    for radix in range(1, k + 1):
        rank, r = divmod(rank, radix)
        digits.append(r)
    free = RankSelectSet(k)
    return tuple(free.pop(r) for r in reversed(digits))


def is_dpgp_member(p: Sequence[int], d: int) -> bool:
    _check_params(len(p), d)
    return all(x % d == i % d for i, x in enumerate(p))


def dpgp_size_product(n: int, d: int) -> int:
    """Size as the product of ``j // d + 1`` over positions ``j``."""
    _check_params(n, d)
    return math.prod(j // d + 1 for j in range(n))


def dpgp_size(n: int, d: int) -> int:
    """Exact code size from the residue-class factorial formula.

    The product form is computed alongside and must agree.
    """
    _check_params(n, d)
    r = n % d
    size = math.factorial(-(-n // d)) ** r * math.factorial(n // d) ** (d - r)
    assert size == dpgp_size_product(n, d), (n, d)
    return size


def dpgp_enumerate(n: int, d: int, cap: int = 10**6) -> Iterator[Permutation]:
    params = DpgpParams(n, d)
    size = dpgp_size(n, d)
    if size > cap:
        raise ResourceError(f"DPGP code has {size} words, cap is {cap}")
    classes = [params.residue_class(i) for i in range(d)]
    for parts in product(*(permutations(c) for c in classes)):
        word = [0] * n
        for positions, values in zip(classes, parts):
            for j, v in zip(positions, values):
                word[j] = v
        yield tuple(word)


def dpgp_encode(params: DpgpParams, ranks: Sequence[int]) -> Permutation:
    """Place the ``ranks[i]``-th lexicographic arrangement of class ``i``."""
    if len(ranks) != params.d:
        raise DomainError(f"expected {params.d} class ranks, got {len(ranks)}")
    word = [0] * params.n
    for i, rank in enumerate(ranks):
        cls = params.residue_class(i)
        arrangement = perm_unrank(rank, len(cls))
        for j, a in zip(cls, arrangement):
            word[j] = cls[a]
    return tuple(word)


def project_symbol(value: int, position: int, params: DpgpParams) -> int:
    """Nearest symbol congruent to ``position`` mod d inside ``[0, n)``.

    Ties go to the smaller candidate.
    """
    d = params.d
    c = position % d
    k, rem = divmod(value - c, d)
    if d - rem < rem:
        k += 1
    k = min(max(k, 0), (params.n - 1 - c) // d)
    return c + k * d


def dpgp_decode(params: DpgpParams, received: Sequence[int]) -> ClassRanks:
    """Project each symbol onto its residue class, then rank each class.

    Correct whenever every ``|error| < d/2``.  Raises `DpgpDecodeFailure`
    when the projection is not a permutation.
    """
    if len(received) != params.n:
        raise DomainError(f"received length {len(received)} != n={params.n}")
    est = tuple(project_symbol(v, i, params) for i, v in enumerate(received))
    if sorted(est) != list(range(params.n)):
        raise DpgpDecodeFailure(est)
    d = params.d
    return tuple(
        perm_rank([est[j] // d for j in params.residue_class(i)]) for i in range(d)
    )
