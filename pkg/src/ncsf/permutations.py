"""Permutations as words on 1..n, and the statistics attached to them.

Everything here treats a permutation as an immutable tuple of values; all
functions are pure.
"""
from __future__ import annotations

from itertools import permutations as _permutations

from .compositions import Composition

Permutation = tuple[int, ...]


def check_permutation(word) -> Permutation:
    """Coerce to a tuple and verify it is a permutation of 1..n.

    >>> check_permutation([2, 1, 3])
    (2, 1, 3)
    """
    perm = tuple(int(v) for v in word)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def all_permutations(n: int):
    """Every element of S_n in lexicographic order."""
    return _permutations(range(1, n + 1))


def inverse(perm: Permutation) -> Permutation:
    inv = [0] * len(perm)
    for pos, val in enumerate(perm, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def inversions(perm: Permutation) -> int:
    """Number of pairs appearing in decreasing order.

    >>> inversions((1, 3, 2))
    1
    """
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def ltr_maxima_positions(perm: Permutation) -> list[int]:
    """1-based positions of the left-to-right maxima."""
    out, best = [], 0
    for pos, val in enumerate(perm, start=1):
        if val > best:
            out.append(pos)
            best = val
    return out


def saillance_composition(perm: Permutation) -> Composition:
    """Block lengths of the unique split into maximal initially dominated words.

    A word is initially dominated when its first letter exceeds every later
    letter; the blocks of the split start exactly at the left-to-right maxima,
    and the block maxima increase.

    >>> saillance_composition((3, 5, 1, 2, 7, 4, 6, 9, 8))
    (1, 3, 3, 2)
    """
    starts = ltr_maxima_positions(perm)
    bounds = starts + [len(perm) + 1]
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(starts)))


def recoil_set(perm: Permutation) -> set[int]:
    """Values i such that i+1 appears to the left of i (descents of the inverse)."""
    pos = {val: p for p, val in enumerate(perm)}
    return {i for i in range(1, len(perm)) if pos[i + 1] < pos[i]}


def recoil_composition(perm: Permutation) -> Composition:
    """Composition of n whose descent set is the recoil set.

    >>> recoil_composition((1, 3, 2))
    (2, 1)
    """
    from .compositions import from_descent_set

    return from_descent_set(recoil_set(perm), len(perm))


def descent_composition(perm: Permutation) -> Composition:
    """Composition of n whose descent set is {i : perm_i > perm_(i+1)}."""
    from .compositions import from_descent_set

    descents = {i for i in range(1, len(perm)) if perm[i - 1] > perm[i]}
    return from_descent_set(descents, len(perm))


def cycles(perm: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its smallest element, ordered by that element."""
    seen = [False] * (len(perm) + 1)
    out = []
    for start in range(1, len(perm) + 1):
        if seen[start]:
            continue
        cyc, v = [], start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = perm[v - 1]
        out.append(tuple(cyc))
    return out


def ordered_cycle_type(perm: Permutation) -> Composition:
    """Cycle lengths listed by increasing cycle maximum.

    >>> ordered_cycle_type((1, 2, 4, 3))
    (1, 1, 2)
    """
    return tuple(len(c) for c in sorted(cycles(perm), key=max))


def foata_first(perm: Permutation) -> Permutation:
    """Write the cycles smallest-element-first in increasing order and erase parentheses."""
    out = []
    for cyc in cycles(perm):
        out.extend(cyc)
    return tuple(out)


def invc(perm: Permutation) -> int:
    """Inversions of the image under the cycle-flattening map.

    >>> invc((3, 2, 1))
    1
    """
    return inversions(foata_first(perm))


def ltr_minima_values(perm: Permutation) -> tuple[int, ...]:
    """Values with only greater values to their left; strictly decreasing, ends in 1.

    >>> ltr_minima_values((7, 3, 9, 4, 6, 5, 2, 8, 1))
    (7, 3, 2, 1)
    """
    out: list[int] = []
    for val in perm:
        if not out or val < out[-1]:
            out.append(val)
    return tuple(out)


def shuffles(left: tuple, right: tuple):
    """All interleavings of two words, preserving each word's internal order."""
    if not left:
        yield right
        return
    if not right:
        yield left
        return
    for rest in shuffles(left[1:], right):
        yield (left[0],) + rest
    for rest in shuffles(left, right[1:]):
        yield (right[0],) + rest


def shifted(perm: Permutation, offset: int) -> tuple[int, ...]:
    return tuple(v + offset for v in perm)


def shifted_shuffle(alpha: Permutation, beta: Permutation) -> list[Permutation]:
    """Interleavings of alpha with beta shifted past it; C(m+k, m) permutations.

    >>> sorted(shifted_shuffle((1,), (1,)))
    [(1, 2), (2, 1)]
    """
    return list(shuffles(alpha, shifted(beta, len(alpha))))


def standardize(word: tuple[int, ...]) -> Permutation:
    """Replace the letters of a duplicate-free word by their ranks."""
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    return tuple(rank[v] for v in word)


def canonical_representative(comp: Composition) -> Permutation:
    """A fixed permutation whose saillance composition is the given one.

    Block j covers values s_{j-1}+1 .. s_j and is written with s_j first.

    >>> canonical_representative((2, 3, 2))
    (2, 1, 5, 3, 4, 7, 6)
    """
    if not comp:
        raise ValueError("needs a nonempty composition")
    word, acc = [], 0
    for part in comp:
        word.append(acc + part)
        word.extend(range(acc + 1, acc + part))
        acc += part
    return tuple(word)


def mirror(perm: Permutation) -> Permutation:
    """Reverse the word."""
    return tuple(reversed(perm))
