"""Compositions of integers: the index set shared by every basis in this package.

A composition is represented as a plain tuple of positive integers.  The empty
tuple is a legal composition (of 0) and acts as the unit for concatenation.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

Composition = tuple[int, ...]


def check_composition(parts) -> Composition:
    """Coerce to a tuple and reject non-positive parts."""
    comp = tuple(int(p) for p in parts)
    if any(p < 1 for p in comp):
        raise ValueError(f"composition parts must be >= 1, got {comp}")
    return comp


def weight(comp: Composition) -> int:
    return sum(comp)


def descent_set(comp: Composition) -> set[int]:
    """Strict partial sums of the parts, the weight itself excluded.

    >>> sorted(descent_set((2, 3, 1, 2)))
    [2, 5, 6]
    >>> descent_set((4,))
    set()
    """
    out, acc = set(), 0
    for part in comp[:-1]:
        acc += part
        out.add(acc)
    return out


def from_descent_set(descents, n: int) -> Composition:
    """Composition of n whose descent set is the given subset of 1..n-1."""
    if n == 0:
        return ()
    bounds = sorted(descents)
    if bounds and not (0 < bounds[0] and bounds[-1] < n):
        raise ValueError(f"descents {bounds} out of range for weight {n}")
    prev, parts = 0, []
    for b in bounds + [n]:
        parts.append(b - prev)
        prev = b
    return tuple(parts)


def complement(comp: Composition) -> Composition:
    """Composition of the same weight with the complementary descent set.

    This is the reverse of the conjugate composition; it is an involution and
    sends length l to n - l + 1.

    >>> complement((2, 3, 1, 2))
    (1, 2, 1, 3, 1)
    >>> complement((3, 2))
    (1, 1, 2, 1)
    """
    n = weight(comp)
    des = descent_set(comp)
    return from_descent_set(set(range(1, n)) - des, n)


def conjugate(comp: Composition) -> Composition:
    """Transpose of the ribbon diagram, i.e. reverse(complement(comp))."""
    return tuple(reversed(complement(comp)))


def maj(comp: Composition) -> int:
    """Sum of the descent set.

    >>> maj((2, 3, 2))
    7
    """
    return sum(descent_set(comp))


def ribbon_prefix(comp: Composition, k: int) -> Composition:
    """Composition formed by the first k boxes of the ribbon diagram.

    Whole leading parts are kept and at most one final part is truncated.

    >>> ribbon_prefix((3, 2), 4)
    (3, 1)
    >>> ribbon_prefix((3, 2), 2)
    (2,)
    """
    n = weight(comp)
    if not 0 <= k <= n:
        raise ValueError(f"prefix size {k} out of range for weight {n}")
    parts, left = [], k
    for part in comp:
        if left == 0:
            break
        take = min(part, left)
        parts.append(take)
        left -= take
    return tuple(parts)


def ribbon_suffix(comp: Composition, k: int) -> Composition:
    """Composition formed by the last k boxes of the ribbon diagram."""
    return tuple(reversed(ribbon_prefix(tuple(reversed(comp)), k)))


def concat(left: Composition, right: Composition) -> Composition:
    return left + right


def near_concat(left: Composition, right: Composition) -> Composition:
    """Concatenation with the boundary parts merged into one."""
    if not left or not right:
        raise ValueError("near-concatenation needs two nonempty compositions")
    return left[:-1] + (left[-1] + right[0],) + right[1:]


def compositions(n: int):
    """All compositions of n >= 0, via descent subsets."""
    if n == 0:
        yield ()
        return
    for r in range(n):
        for des in combinations(range(1, n), r):
            yield from_descent_set(des, n)


def compositions_ordered(n: int) -> list[Composition]:
    """The 2^(n-1) compositions of n sorted by length, then lexicographically.

    This ordering is what makes the U-to-F transition matrices triangular, and
    all table output follows it.

    >>> compositions_ordered(3)
    [(3,), (1, 2), (2, 1), (1, 1, 1)]
    """
    if n < 1:
        raise ValueError("compositions_ordered needs n >= 1")
    return sorted(compositions(n), key=lambda c: (len(c), c))


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
