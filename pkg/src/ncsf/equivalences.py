"""Pattern-replacement equivalences on permutations and their insertion algorithms.

Three relations are built in, each generated by two unordered pairs of
length-3 patterns acting on arbitrary (not necessarily adjacent) position
triples:

* ``eq1``    : 312 ~ 321 and 123 ~ 132
* ``eq2``    : 213 ~ 231 and 123 ~ 132
* ``mirror`` : 321 ~ 231 and 312 ~ 132  (the reversal conjugate of eq2)

``eq1`` classes are fibered by an alternating chain of prefix extrema (the
W-chain); ``eq2`` classes by the left-to-right minima values.  Both chains
extend to a bijective pair of same-shape trees, a value tree P and an
increasing position tree Q, and the linear extensions of P recover exactly
the class.  Classes therefore number 2^(n-1) and their sizes obey the hook
formula, which gives a census path that scales far beyond brute force.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .compositions import Composition
from .forests import LabeledForest, hook_count, linear_extensions, min_extension
from .permutations import (
    Permutation,
    all_permutations,
    inverse,
    mirror,
    saillance_composition,
    standardize,
)

BFS_LIMIT = 8
CHAIN_LIMIT = 12


@dataclass(frozen=True)
class PatternRelation:
    """Unordered pairs of size-3 patterns generating the equivalence."""

    name: str
    pairs: tuple[tuple[Permutation, Permutation], ...]

    def __post_init__(self):
        for a, b in self.pairs:
            if sorted(a) != [1, 2, 3] or sorted(b) != [1, 2, 3] or a == b:
                raise ValueError("patterns must be distinct permutations of 1..3")


EQ1 = PatternRelation("eq1", (((3, 1, 2), (3, 2, 1)), ((1, 2, 3), (1, 3, 2))))
EQ2 = PatternRelation("eq2", (((2, 1, 3), (2, 3, 1)), ((1, 2, 3), (1, 3, 2))))
MIRROR = PatternRelation("mirror", (((3, 2, 1), (2, 3, 1)), ((3, 1, 2), (1, 3, 2))))

RELATIONS = {rel.name: rel for rel in (EQ1, EQ2, MIRROR)}


def pattern_neighbors(word: Permutation, relation: PatternRelation) -> list[Permutation]:
    """One replacement step: rearrange the letters at some position triple."""
    out = []
    for i, j, k in combinations(range(len(word)), 3):
        triple = (word[i], word[j], word[k])
        pattern = standardize(triple)
        for a, b in relation.pairs:
            if pattern == a:
                target = b
            elif pattern == b:
                target = a
            else:
                continue
            values = sorted(triple)
            new = list(word)
            for slot, rank in zip((i, j, k), target):
                new[slot] = values[rank - 1]
            out.append(tuple(new))
    return out


def pattern_closure(word: Permutation, relation: PatternRelation) -> set[Permutation]:
    """Equivalence class of the word under repeated replacements (BFS)."""
    word = tuple(word)
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for other in pattern_neighbors(w, relation):
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    return seen


def equivalence_partition(n: int, relation: PatternRelation) -> dict[Permutation, Permutation]:
    """Map every word of S_n to the minimum of its class (exhaustive BFS)."""
    if n > BFS_LIMIT:
        raise ValueError(f"BFS partition limited to n <= {BFS_LIMIT}")
    rep: dict[Permutation, Permutation] = {}
    for word in all_permutations(n):
        if word in rep:
            continue
        closure = pattern_closure(word, relation)
        rep_word = min(closure)
        for member in closure:
            rep[member] = rep_word
    return rep


# -- chains and insertion -----------------------------------------------------


def w_chain(perm: Permutation) -> list[int]:
    """Positions of the alternating prefix-extremum chain, built from the right.

    The last position holds whichever of the values 1 and n sits further
    right; each earlier position holds the other extremum of the prefix
    ending at its successor.

    >>> w_chain((5, 3, 2, 4, 9, 8, 6, 1, 7))
    [1, 3, 5, 8]
    """
    n = len(perm)
    if n == 0:
        raise ValueError("empty word")
    position = {v: i for i, v in enumerate(perm, start=1)}
    p = max(position[1], position[n])
    chain = [p]
    while p > 1:
        prefix = perm[:p]
        top, bottom = max(prefix), min(prefix)
        other = bottom if perm[p - 1] == top else top
        p = position[other]
        chain.append(p)
    return chain[::-1]


def _chain_tree(chain_values: tuple[int, ...], n: int) -> LabeledForest:
    """Tree for an alternating extremum chain: leaves join the topmost chain
    element whose gap to the next chain element contains their value."""
    parent: dict[int, int | None] = {chain_values[0]: None}
    for upper, lower in zip(chain_values, chain_values[1:]):
        parent[lower] = upper
    in_chain = set(chain_values)
    for v in range(1, n + 1):
        if v in in_chain:
            continue
        for upper, lower in zip(chain_values, chain_values[1:]):
            lo, hi = min(upper, lower), max(upper, lower)
            if lo < v < hi:
                parent[v] = upper
                break
        else:
            raise ValueError(f"value {v} fits no chain interval of {chain_values}")
    return LabeledForest(parent, parents_first=True)


def _lrm_tree(lrm_values: tuple[int, ...], n: int) -> LabeledForest:
    """Tree for a left-to-right-minima chain: other values join the topmost
    chain element smaller than them."""
    parent: dict[int, int | None] = {lrm_values[0]: None}
    for upper, lower in zip(lrm_values, lrm_values[1:]):
        parent[lower] = upper
    in_chain = set(lrm_values)
    for v in range(1, n + 1):
        if v in in_chain:
            continue
        for c in lrm_values:
            if c < v:
                parent[v] = c
                break
        else:
            raise ValueError(f"value {v} exceeds no chain element of {lrm_values}")
    return LabeledForest(parent, parents_first=True)


@dataclass
class InsertionPair:
    """Value tree, same-shape increasing position tree, and their node pairing."""

    p: LabeledForest
    q: LabeledForest
    value_to_position: dict[int, int]

    def permutation(self) -> Permutation:
        word = [0] * len(self.value_to_position)
        for value, pos in self.value_to_position.items():
            word[pos - 1] = value
        return tuple(word)


def _pair_from_tree(perm: Permutation, tree: LabeledForest) -> InsertionPair:
    mapping = {v: i for i, v in enumerate(perm, start=1)}
    return InsertionPair(tree, tree.relabel(mapping), mapping)


def insertion_pair(perm: Permutation) -> InsertionPair:
    """P and Q symbols for the eq1 relation, from the W-chain."""
    values = tuple(perm[s - 1] for s in w_chain(perm))
    return _pair_from_tree(perm, _chain_tree(values, len(perm)))


def insertion_pair2(perm: Permutation) -> InsertionPair:
    """P2 and Q2 symbols for the eq2 relation, from the left-to-right minima."""
    from .permutations import ltr_minima_values

    return _pair_from_tree(perm, _lrm_tree(ltr_minima_values(perm), len(perm)))


def insert_p(perm: Permutation) -> LabeledForest:
    return insertion_pair(perm).p


def insert_q(perm: Permutation) -> LabeledForest:
    return insertion_pair(perm).q


def insert_p2(perm: Permutation) -> LabeledForest:
    return insertion_pair2(perm).p


def insert_q2(perm: Permutation) -> LabeledForest:
    return insertion_pair2(perm).q


# -- class enumeration without brute force ------------------------------------


def eq1_chain_values(n: int):
    """All 2^(n-1) W-chain value sequences, top-down.

    A chain is a subset containing 1 and n together with the choice of which
    of them sits at the bottom; going up alternately takes the remaining
    extremes.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    if n == 1:
        yield (1,)
        return
    middle = list(range(2, n))
    for r in range(len(middle) + 1):
        for extra in combinations(middle, r):
            values = set(extra) | {1, n}
            for bottom in (1, n):
                remaining = set(values)
                seq = [bottom]
                remaining.discard(bottom)
                take_max = bottom == 1
                while remaining:
                    v = max(remaining) if take_max else min(remaining)
                    seq.append(v)
                    remaining.discard(v)
                    take_max = not take_max
                yield tuple(reversed(seq))


def eq2_lrm_values(n: int):
    """All 2^(n-1) left-to-right-minima value sequences, top-down (decreasing)."""
    if n < 1:
        raise ValueError("needs n >= 1")
    upper = list(range(2, n + 1))
    for r in range(len(upper) + 1):
        for extra in combinations(upper, r):
            yield tuple(sorted(set(extra) | {1}, reverse=True))


def class_trees(n: int, relation: PatternRelation) -> list[LabeledForest]:
    """One value tree per equivalence class, enumerated from the chains."""
    if n > CHAIN_LIMIT:
        raise ValueError(f"chain enumeration limited to n <= {CHAIN_LIMIT}")
    if relation.name == "eq1":
        return [_chain_tree(c, n) for c in eq1_chain_values(n)]
    if relation.name in ("eq2", "mirror"):
        return [_lrm_tree(c, n) for c in eq2_lrm_values(n)]
    raise ValueError(f"no chain enumeration for {relation.name}")


def classes_with_sizes(n: int, relation: PatternRelation, method: str = "auto") -> list[tuple[Permutation, int]]:
    """(minimum member, size) per class, sorted by the minimum member.

    With ``method="chains"`` the sizes come from the hook formula and the
    minima from greedy extensions, so large n stay cheap; ``"bfs"`` walks the
    replacement graph.  The mirror classes are the word-reversals of the eq2
    classes, so their chain path flips the tree orientation before reading
    the minimum.
    """
    if method == "auto":
        method = "bfs" if n <= BFS_LIMIT else "chains"
    if method == "bfs":
        rep = equivalence_partition(n, relation)
        sizes = Counter(rep.values())
        return sorted(sizes.items())
    if method != "chains":
        raise ValueError(f"unknown method {method!r}")
    out = []
    for tree in class_trees(n, relation):
        size = hook_count(tree)
        if relation.name == "mirror":
            flipped = LabeledForest({v: tree.parent(v) for v in tree.labels}, parents_first=False)
            out.append((min_extension(flipped), size))
        else:
            out.append((min_extension(tree), size))
    return sorted(out)


def class_census(n: int, relation: PatternRelation, method: str = "auto") -> tuple[int, Counter]:
    """Number of classes and the multiset of their sizes."""
    pairs = classes_with_sizes(n, relation, method)
    return len(pairs), Counter(size for _, size in pairs)


def classes_by_first_letter(n: int) -> dict[int, int]:
    """How many eq1 classes start with each letter.

    Every member of a class opens with the top W-chain value, so this counts
    chains by their top.
    """
    counts: dict[int, int] = {}
    for chain in eq1_chain_values(n):
        counts[chain[0]] = counts.get(chain[0], 0) + 1
    return counts


def v_permutation(perm: Permutation) -> Permutation:
    """Normal form for eq2: orient the replacements so each one sorts.

    Whenever some position triple shows its maximum in the middle, swapping
    the last two letters applies one oriented rewriting step; the fixed point
    is the lexicographically smallest member of the class.

    >>> v_permutation((2, 3, 1))
    (2, 1, 3)
    """
    word = list(perm)
    n = len(word)
    changed = True
    while changed:
        changed = False
        for j in range(1, n - 1):
            if not any(word[i] < word[j] for i in range(j)):
                continue
            for k in range(j + 1, n):
                if word[k] < word[j]:
                    word[j], word[k] = word[k], word[j]
                    changed = True
                    break
            if changed:
                break
    return tuple(word)


# -- the cross-relation bijection ---------------------------------------------


def _subtree_shape(tree: LabeledForest, node: int):
    return tuple(sorted(_subtree_shape(tree, c) for c in tree.children(node)))


def _tree_isomorphism(src: LabeledForest, dst: LabeledForest) -> dict[int, int]:
    """Shape-preserving node matching; equal-shape siblings pair in label order."""
    iso: dict[int, int] = {}

    def match(nodes1, nodes2):
        key1 = sorted(nodes1, key=lambda v: (_subtree_shape(src, v), v))
        key2 = sorted(nodes2, key=lambda v: (_subtree_shape(dst, v), v))
        if len(key1) != len(key2):
            raise ValueError("shape mismatch")
        for a, b in zip(key1, key2):
            if _subtree_shape(src, a) != _subtree_shape(dst, b):
                raise ValueError("shape mismatch")
            iso[a] = b
            match(src.children(a), dst.children(b))

    match(src.roots, dst.roots)
    return iso


def class_bijection(n: int) -> dict[Permutation, Permutation]:
    """Size-preserving matching of eq1 classes with eq2 classes, by minimum member.

    Classes pair up through their naked tree shapes: each shape carries
    exactly two labelings per relation, distinguished by whether 1 hangs
    below n (eq1) respectively below 2 (eq2).
    """
    trees1 = class_trees(n, EQ1)
    trees2 = class_trees(n, EQ2)
    return {
        min_extension(t1): min_extension(t2) for t1, t2 in _paired_class_trees(trees1, trees2)
    }


def _paired_class_trees(trees1, trees2):
    buckets1: dict[tuple, list[LabeledForest]] = {}
    for t in trees1:
        buckets1.setdefault(t.shape_key(), []).append(t)
    buckets2: dict[tuple, list[LabeledForest]] = {}
    for t in trees2:
        buckets2.setdefault(t.shape_key(), []).append(t)
    if set(buckets1) != set(buckets2):
        raise ValueError("relations produce different shape sets")
    pairs = []
    for shape, group1 in buckets1.items():
        group2 = buckets2[shape]
        if len(group1) != len(group2):
            raise ValueError("shape multiplicity mismatch")
        if len(group1) == 1:
            pairs.append((group1[0], group2[0]))
            continue
        n = len(group1[0])
        one_below_n = [t for t in group1 if t.parent(1) == n]
        other1 = [t for t in group1 if t.parent(1) != n]
        one_below_two = [t for t in group2 if t.parent(1) == 2]
        other2 = [t for t in group2 if t.parent(1) != 2]
        if len(one_below_n) != 1 or len(one_below_two) != 1:
            raise ValueError("labeling rule failed to split the shape bucket")
        pairs.append((one_below_n[0], one_below_two[0]))
        pairs.append((other1[0], other2[0]))
    return pairs


def permutation_class_bijection(n: int) -> dict[Permutation, Permutation]:
    """The induced bijection of S_n: relabel each eq1 class along the shape
    isomorphism onto its paired eq2 class; position trees are untouched."""
    out: dict[Permutation, Permutation] = {}
    for t1, t2 in _paired_class_trees(class_trees(n, EQ1), class_trees(n, EQ2)):
        iso = _tree_isomorphism(t1, t2)
        for word in linear_extensions(t1):
            out[word] = tuple(iso[v] for v in word)
    return out


# -- the saillance correspondence ---------------------------------------------


def saillance_correspondence_check(n: int, use_inverse: bool = True) -> bool:
    """Whether saillance fibers match the mirror-relation classes.

    With ``use_inverse=True`` (the convention adopted here) the check is:
    SC(s) = SC(t) iff the inverses of s and t are mirror-equivalent.  The
    literal variant without inverses fails already at n = 3 and is kept
    callable for documentation.
    """
    rep = equivalence_partition(n, MIRROR)
    fiber_to_rep: dict[Composition, Permutation] = {}
    reps_seen: set[Permutation] = set()
    for word in all_permutations(n):
        key = saillance_composition(word)
        r = rep[inverse(word)] if use_inverse else rep[word]
        if key in fiber_to_rep:
            if fiber_to_rep[key] != r:
                return False
        else:
            if r in reps_seen:
                return False
            fiber_to_rep[key] = r
            reps_seen.add(r)
    return True
