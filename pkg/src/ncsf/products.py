"""Closed product formulas for the V and V' bases, and the shuffle oracle.

All expansions are returned as plain {composition: integer} maps.  The closed
formula is binomial: writing l(I)=m, l(J)=p, l(K)=q and r=q-p, a composition K
carries coefficient

    prod_i C(k_i - 1, j_i - 1)            if q = p,
    prod_i C(k_{i+r} - 1, j_i - 1)        if r > 0, K starts with the first
                                          r-1 parts of I and k_r <= i_r,
    0                                     otherwise.

The boundary case k_r = i_r is included: the shuffle oracle and the worked
expansions force the weak inequality.  The oracle itself counts saillance
compositions over one shifted shuffle of fiber representatives, which is
legitimate because the fiber product is representative-independent (see
``bases.quotient_class_check``).
"""
from __future__ import annotations

from math import prod

from .compositions import (
    Composition,
    binomial,
    complement,
    compositions,
    ribbon_prefix,
    weight,
)
from .permutations import canonical_representative, saillance_composition, shifted_shuffle

Expansion = dict[Composition, int]


def vprime_product(I: Composition, J: Composition) -> Expansion:
    """Expansion of V'_I V'_J over the V' basis.

    >>> vprime_product((2,), (3, 1)) == {
    ...     (1, 3, 2): 1, (1, 4, 1): 3, (2, 3, 1): 1, (3, 3): 1, (4, 2): 3, (5, 1): 6}
    True
    """
    I, J = tuple(I), tuple(J)
    if not I:
        return {J: 1}
    if not J:
        return {I: 1}
    m, p = len(I), len(J)
    out: Expansion = {}
    for K in compositions(weight(I) + weight(J)):
        r = len(K) - p
        if r == 0:
            coeff = prod(binomial(K[i] - 1, J[i] - 1) for i in range(p))
        elif 0 < r <= m and K[: r - 1] == I[: r - 1] and K[r - 1] <= I[r - 1]:
            coeff = prod(binomial(K[i + r] - 1, J[i] - 1) for i in range(p))
        else:
            coeff = 0
        if coeff:
            out[K] = coeff
    return out


def vprime_product_oracle(I: Composition, J: Composition, degree_bound: int = 9) -> Expansion:
    """Brute-force structure constants: saillance census of one shifted shuffle.

    Independent of the closed formula; only touches canonical fiber
    representatives.
    """
    I, J = tuple(I), tuple(J)
    if weight(I) + weight(J) > degree_bound:
        raise ValueError(f"total weight exceeds the oracle bound {degree_bound}")
    if not I:
        return {J: 1}
    if not J:
        return {I: 1}
    alpha = canonical_representative(I)
    beta = canonical_representative(J)
    out: Expansion = {}
    for gamma in shifted_shuffle(alpha, beta):
        key = saillance_composition(gamma)
        out[key] = out.get(key, 0) + 1
    return out


def v_product(I: Composition, J: Composition) -> Expansion:
    """Expansion of V_I V_J over the V basis, via complementation of indices."""
    raw = vprime_product(complement(tuple(I)), complement(tuple(J)))
    return {complement(K): coeff for K, coeff in raw.items()}


def pieri_lambda(I: Composition, k: int) -> Expansion:
    """Multiplication of V'_I by the degree-k elementary function.

    n+1 terms: the ribbon prefix keeping n-j boxes, extended by a final part
    k+j, with coefficient C(k+j-1, k-1).

    >>> pieri_lambda((3, 2), 3) == {
    ...     (3, 2, 3): 1, (3, 1, 4): 3, (3, 5): 6, (2, 6): 10, (1, 7): 15, (8,): 21}
    True
    """
    if k < 1:
        raise ValueError("needs k >= 1")
    I = tuple(I)
    n = weight(I)
    out: Expansion = {}
    for j in range(n + 1):
        out[ribbon_prefix(I, n - j) + (k + j,)] = binomial(k + j - 1, k - 1)
    return out


def alternating_reconstruction(I: Composition) -> dict[tuple[Composition, int], int]:
    """Signed coefficients rebuilding V'_I from prefix-times-elementary products.

    Keyed by (prefix composition, final degree k) for k from the last part up
    to n; expanding each product with the Pieri rule telescopes back to V'_I.
    """
    I = tuple(I)
    if not I:
        raise ValueError("needs a nonempty composition")
    n, last = weight(I), I[-1]
    out: dict[tuple[Composition, int], int] = {}
    for k in range(last, n + 1):
        sign = -1 if (k - last) % 2 else 1
        out[(ribbon_prefix(I, n - k), k)] = sign * binomial(k - 1, last - 1)
    return out


def expansion_mass(expansion: Expansion) -> int:
    return sum(expansion.values())
