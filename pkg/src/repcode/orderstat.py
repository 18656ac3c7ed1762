"""Counting tree over ``range(n)`` with k-th smallest selection and deletion.

Every operation walks one root-to-leaf path of a complete binary tree, so
select, pop, remove and rank all cost O(log n).
"""

from __future__ import annotations


class RankSelectSet:
    """The set ``{0, ..., n-1}`` minus whatever has been removed so far.

    >>> s = RankSelectSet(5)
    >>> s.pop(2), s.pop(2), s.select(0), len(s)
    (2, 3, 0, 3)
    """

    __slots__ = ("_n", "_size", "_tree")

    def __init__(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"negative size {n}")
        size = 1
        while size < n:
            size <<= 1
        tree = [0] * (2 * size)
        tree[size : size + n] = [1] * n
        for i in range(size - 1, 0, -1):
            tree[i] = tree[2 * i] + tree[2 * i + 1]
        self._n = n
        self._size = size
        self._tree = tree

    def __len__(self) -> int:
        return self._tree[1] if self._n else 0

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < self._n and self._tree[self._size + x] == 1

    def __iter__(self):
        base = self._size
        tree = self._tree
        return (i for i in range(self._n) if tree[base + i])

    def select(self, k: int) -> int:
        """The ``k``-th smallest remaining element, 0-indexed."""
        tree = self._tree
        if not 0 <= k < len(self):
            raise IndexError(f"rank {k} out of range for {len(self)} elements")
        size = self._size
        node = 1
        while node < size:
            node <<= 1
            c = tree[node]
            if k >= c:
                k -= c
                node += 1
        return node - size

    def pop(self, k: int) -> int:
        """Remove and return the ``k``-th smallest remaining element."""
        tree = self._tree
        if not 0 <= k < len(self):
            raise IndexError(f"rank {k} out of range for {len(self)} elements")
        size = self._size
        node = 1
        while node < size:
            tree[node] -= 1
            node <<= 1
            c = tree[node]
            if k >= c:
                k -= c
                node += 1
        tree[node] = 0
        return node - size

    def remove(self, x: int) -> None:
        if x not in self:
            raise KeyError(x)
        tree = self._tree
        node = self._size + x
        while node:
            tree[node] -= 1
            node >>= 1

    def rank(self, x: int) -> int:
        """Number of remaining elements strictly smaller than ``x``."""
        if x <= 0:
            return 0
        if x >= self._n:
            return len(self)
        tree = self._tree
        node = self._size + x
        r = 0
        while node > 1:
            if node & 1:
                r += tree[node - 1]
            node >>= 1
        return r
