"""Rooted forests with distinct integer labels, their linear extensions and hooks.

A forest stores parent links plus an orientation flag.  With
``parents_first=True`` a linear extension lists every node after its parent
(the convention of the insertion trees); with ``parents_first=False`` every
node comes before its parent (the convention of the saillance posets, whose
spine tops are read last).  The two extension sets are word-reversals of each
other.
"""
from __future__ import annotations

import warnings
from math import factorial

from .compositions import Composition
from .permutations import Permutation, inversions
from .qpoly import QPoly, q_factorial, q_int


class LabeledForest:
    """Immutable labeled forest; children are unordered and reported sorted."""

    __slots__ = ("_parent", "parents_first", "_children", "_roots")

    def __init__(self, parent: dict[int, int | None], parents_first: bool = True):
        self._parent = {int(k): (None if v is None else int(v)) for k, v in parent.items()}
        self.parents_first = parents_first
        children: dict[int, list[int]] = {k: [] for k in self._parent}
        roots = []
        for node, par in self._parent.items():
            if par is None:
                roots.append(node)
            else:
                if par not in self._parent:
                    raise ValueError(f"parent {par} of {node} is not a node")
                children[par].append(node)
        for v in children.values():
            v.sort()
        self._children = children
        self._roots = tuple(sorted(roots))
        if len(self._walk()) != len(self._parent):
            raise ValueError("parent links contain a cycle")

    def _walk(self) -> list[int]:
        seen, stack = [], list(self._roots)
        while stack:
            node = stack.pop()
            seen.append(node)
            stack.extend(self._children[node])
        return seen

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(self._parent))

    @property
    def roots(self) -> tuple[int, ...]:
        return self._roots

    def parent(self, node: int) -> int | None:
        return self._parent[node]

    def children(self, node: int) -> tuple[int, ...]:
        return tuple(self._children[node])

    def __len__(self) -> int:
        return len(self._parent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledForest):
            return NotImplemented
        return (
            self.parents_first == other.parents_first and self._parent == other._parent
        )

    def __hash__(self):
        return hash((self.parents_first, frozenset(self._parent.items())))

    def __repr__(self):
        return f"LabeledForest({self.to_paren()!r}, parents_first={self.parents_first})"

    def relabel(self, mapping: dict[int, int]) -> "LabeledForest":
        """Apply a bijection to every label, keeping the shape and orientation."""
        parent = {
            mapping[k]: (None if v is None else mapping[v]) for k, v in self._parent.items()
        }
        return LabeledForest(parent, self.parents_first)

    def subtree_labels(self, node: int) -> set[int]:
        out, stack = set(), [node]
        while stack:
            v = stack.pop()
            out.add(v)
            stack.extend(self._children[v])
        return out

    def shape_key(self):
        """Canonical encoding of the unlabeled forest (children unordered)."""

        def enc(node):
            return tuple(sorted(enc(c) for c in self._children[node]))

        return tuple(sorted(enc(r) for r in self._roots))

    # -- serialization -------------------------------------------------------

    def to_paren(self) -> str:
        """Parenthesized rendering, children sorted by label: "6(3(1(2) 4 5) 7)"."""

        def enc(node):
            kids = self._children[node]
            if not kids:
                return str(node)
            return f"{node}(" + " ".join(enc(c) for c in kids) + ")"

        return " ".join(enc(r) for r in self._roots)

    def to_pairs(self) -> list[list]:
        """JSON-ready [node, parent] pairs sorted by node; roots pair with None."""
        return [[k, self._parent[k]] for k in sorted(self._parent)]

    @classmethod
    def from_pairs(cls, pairs, parents_first: bool = True) -> "LabeledForest":
        return cls({int(k): v for k, v in pairs}, parents_first)


def linear_extensions(forest: LabeledForest) -> list[Permutation]:
    """All words compatible with the forest's orientation.

    Labels must be exactly 1..n so the extensions are permutation words.
    """
    n = len(forest)
    if sorted(forest.labels) != list(range(1, n + 1)):
        raise ValueError("linear extensions need labels exactly 1..n")
    out: list[Permutation] = []
    word: list[int] = []
    available = sorted(forest.roots)
    pending = {node: len(forest.children(node)) + 0 for node in forest.labels}

    def rec(available: list[int]):
        if len(word) == n:
            out.append(tuple(word))
            return
        for i, node in enumerate(available):
            word.append(node)
            nxt = available[:i] + available[i + 1 :] + list(forest.children(node))
            rec(nxt)
            word.pop()

    rec(available)
    if not forest.parents_first:
        out = [tuple(reversed(w)) for w in out]
    out.sort()
    return out


def min_extension(forest: LabeledForest) -> Permutation:
    """Lexicographically smallest linear extension, found greedily."""
    n = len(forest)
    if forest.parents_first:
        blocked = {node: 1 if forest.parent(node) is not None else 0 for node in forest.labels}
        release = forest.children
    else:
        blocked = {node: len(forest.children(node)) for node in forest.labels}
        release = lambda node: () if forest.parent(node) is None else (forest.parent(node),)
    word = []
    ready = sorted(node for node, b in blocked.items() if b == 0)
    while ready:
        node = ready.pop(0)
        word.append(node)
        for other in release(node):
            blocked[other] -= 1
            if blocked[other] == 0:
                ready.append(other)
        ready.sort()
    if len(word) != n:
        raise ValueError("forest is not acyclic")
    return tuple(word)


def hook_lengths(forest: LabeledForest) -> dict[int, int]:
    """Subtree size of every node."""
    return {node: len(forest.subtree_labels(node)) for node in forest.labels}


def hook_count(forest: LabeledForest) -> int:
    """Number of linear extensions: n! over the product of the hooks."""
    n = len(forest)
    prod = 1
    for h in hook_lengths(forest).values():
        prod *= h
    count, rem = divmod(factorial(n), prod)
    if rem:
        raise ArithmeticError("hook product does not divide n!")
    return count


def is_recursive_labeling(forest: LabeledForest) -> bool:
    """Sufficient check for the q-hook-length factorization.

    Requires the label sets of sibling subtrees (including the root subtrees
    of the forest) to occupy pairwise disjoint intervals of values; shuffling
    such blocks contributes plain q-binomials to the inversion count.
    """

    def separated(nodes) -> bool:
        spans = sorted(
            (min(s), max(s)) for s in (forest.subtree_labels(v) for v in nodes)
        )
        return all(a[1] < b[0] for a, b in zip(spans, spans[1:]))

    if not separated(forest.roots):
        return False
    return all(separated(forest.children(v)) for v in forest.labels if forest.children(v))


def forced_inversions(forest: LabeledForest) -> int:
    """Inversions present in every linear extension (ancestor/descendant pairs only)."""
    count = 0
    for node in forest.labels:
        for desc in forest.subtree_labels(node) - {node}:
            if forest.parents_first:
                count += node > desc
            else:
                count += desc > node
    return count


def bw_q_count(forest: LabeledForest) -> QPoly:
    """Inversion-generating polynomial of the linear extensions.

    For a recursively labeled forest this is
    q^(min inversions) * [n]_q! / prod_v [hook(v)]_q; otherwise the extensions
    are enumerated directly and a warning is emitted.
    """
    n = len(forest)
    if not is_recursive_labeling(forest):
        warnings.warn(
            "forest labeling is not recursive; enumerating extensions instead",
            RuntimeWarning,
            stacklevel=2,
        )
        total = QPoly()
        for w in linear_extensions(forest):
            total = total + QPoly.q(inversions(w))
        return total
    poly = q_factorial(n)
    for h in hook_lengths(forest).values():
        poly = poly.exact_div(q_int(h))
    return poly.shift(forced_inversions(forest))


# -- the saillance poset ----------------------------------------------------


def comb_poset(comp: Composition) -> LabeledForest:
    """Tree on 1..n whose extensions are the inverses of the saillance fiber.

    Block j of the composition spans values s_{j-1}+1 .. s_j.  The block
    leaders s_{j-1}+1 form the spine, each attached under the next leader, and
    the remaining block values hang off their own leader.  The orientation is
    bottom-up: extensions list children before parents, so the last leader is
    read last.
    """
    if not comp:
        raise ValueError("needs a nonempty composition")
    parent: dict[int, int | None] = {}
    acc = 0
    leaders = []
    for part in comp:
        leader = acc + 1
        leaders.append(leader)
        for member in range(acc + 2, acc + part + 1):
            parent[member] = leader
        acc += part
    for low, high in zip(leaders, leaders[1:]):
        parent[low] = high
    parent[leaders[-1]] = None
    return LabeledForest(parent, parents_first=False)


def minimal_extension(comp: Composition) -> Permutation:
    """The inversion-minimal extension of the saillance poset, in closed form.

    Block j contributes s_{j-1}+2, ..., s_j followed by its leader s_{j-1}+1;
    the word has exactly n - length(comp) inversions.

    >>> minimal_extension((2, 3, 2))
    (2, 1, 4, 5, 3, 7, 6)
    """
    word: list[int] = []
    acc = 0
    for part in comp:
        word.extend(range(acc + 2, acc + part + 1))
        word.append(acc + 1)
        acc += part
    return tuple(word)
