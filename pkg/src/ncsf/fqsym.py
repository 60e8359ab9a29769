"""Free quasi-symmetric functions: F/G bases, (co)products, and half-products.

Elements are finite integer combinations of permutations.  The F-basis
product is the shifted shuffle; the coproduct splits a word into standardized
prefix and suffix.  The G basis is the image of F under inversion of the
indexing permutation, and the dendriform half-products split a product by the
origin of the last letter (transported verbatim to the G side through the
inversion).

The sums of G-terms over saillance fibers are the combinatorial heart of this
package: they multiply and comultiply within their own span, which is what
projects them onto a basis of QSym.
"""
from __future__ import annotations

from .compositions import Composition, compositions, weight
from .permutations import (
    Permutation,
    all_permutations,
    canonical_representative,
    descent_composition,
    inverse,
    saillance_composition,
    shifted,
    shuffles,
    standardize,
)

FQSYM_BASES = ("F", "G")


def _add_term(acc: dict, key, coeff) -> None:
    val = acc.get(key, 0) + coeff
    if val:
        acc[key] = val
    else:
        acc.pop(key, None)


class FQSymElement:
    """Integer combination of permutations in the F or the G picture."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms=None):
        if basis not in FQSYM_BASES:
            raise ValueError(f"unknown FQSym basis {basis!r}")
        self.basis = basis
        self._terms = {}
        for word, coeff in (terms or {}).items():
            if coeff:
                self._terms[tuple(word)] = coeff

    @classmethod
    def monomial(cls, basis: str, word, coeff=1) -> "FQSymElement":
        return cls(basis, {tuple(word): coeff})

    @classmethod
    def unit(cls, basis: str = "F") -> "FQSymElement":
        return cls.monomial(basis, ())

    def terms(self) -> dict[Permutation, object]:
        return dict(self._terms)

    def coefficient(self, word):
        return self._terms.get(tuple(word), 0)

    def support(self) -> set[Permutation]:
        return set(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "FQSymElement") -> "FQSymElement":
        if self.basis != other.basis:
            raise ValueError("basis mismatch; convert explicitly")
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            _add_term(out, word, coeff)
        return FQSymElement(self.basis, out)

    def __neg__(self):
        return FQSymElement(self.basis, {w: -v for w, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff) -> "FQSymElement":
        return FQSymElement(self.basis, {w: coeff * v for w, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FQSymElement):
            return NotImplemented
        if self.basis == other.basis:
            return self._terms == other._terms
        return self.to_f()._terms == other.to_f()._terms

    def __repr__(self):
        body = " + ".join(
            f"{v}*{self.basis}_{''.join(map(str, w)) or 'e'}" for w, v in sorted(self._terms.items())
        )
        return f"FQSymElement({body or '0'})"

    def to_f(self) -> "FQSymElement":
        if self.basis == "F":
            return self
        return FQSymElement("F", {inverse(w): v for w, v in self._terms.items()})

    def to_g(self) -> "FQSymElement":
        if self.basis == "G":
            return self
        return FQSymElement("G", {inverse(w): v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, FQSymElement):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


def product(x: FQSymElement, y: FQSymElement) -> FQSymElement:
    """Bilinear shifted-shuffle product, computed in the F basis.

    >>> product(FQSymElement.monomial("F", (1,)), FQSymElement.monomial("F", (1,))).terms()
    {(1, 2): 1, (2, 1): 1}
    """
    out: dict = {}
    for alpha, va in x.to_f()._terms.items():
        for beta, vb in y.to_f()._terms.items():
            coeff = va * vb
            for gamma in shuffles(alpha, shifted(beta, len(alpha))):
                _add_term(out, gamma, coeff)
    result = FQSymElement("F", out)
    return result.to_g() if x.basis == "G" else result


def coproduct(x: FQSymElement) -> dict[tuple[Permutation, Permutation], object]:
    """Tensor expansion of the coproduct, returned in the element's own basis.

    On an F-term the word splits at every position into standardized prefix
    and suffix; on G-terms the splitting is transported through inversion.
    """
    out: dict = {}
    for word, coeff in x.to_f()._terms.items():
        for k in range(len(word) + 1):
            left = standardize(word[:k])
            right = standardize(word[k:])
            _add_term(out, (left, right), coeff)
    if x.basis == "G":
        return {(inverse(a), inverse(b)): v for (a, b), v in out.items()}
    return out


def half_products(x: FQSymElement, y: FQSymElement) -> tuple[FQSymElement, FQSymElement]:
    """The two dendriform halves (x < y, x > y) of the product.

    A shuffle term lands in the left half when its last letter comes from the
    left factor.  Both arguments must have no empty-word term.  G-basis
    arguments are split by the same rule transported through inversion, the
    convention under which the saillance fiber sums satisfy their left/right
    recursions.
    """
    if x.coefficient(()) or y.coefficient(()):
        raise ValueError("half-products are undefined on the unit part")
    left_out: dict = {}
    right_out: dict = {}
    for alpha, va in x.to_f()._terms.items():
        for beta, vb in y.to_f()._terms.items():
            coeff = va * vb
            last_left = alpha[-1]
            for gamma in shuffles(alpha, shifted(beta, len(alpha))):
                if gamma[-1] == last_left:
                    _add_term(left_out, gamma, coeff)
                else:
                    _add_term(right_out, gamma, coeff)
    left = FQSymElement("F", left_out)
    right = FQSymElement("F", right_out)
    if x.basis == "G":
        return left.to_g(), right.to_g()
    return left, right


def left_half(x: FQSymElement, y: FQSymElement) -> FQSymElement:
    return half_products(x, y)[0]


def right_half(x: FQSymElement, y: FQSymElement) -> FQSymElement:
    return half_products(x, y)[1]


# -- saillance fiber sums -----------------------------------------------------


def saillance_fiber(comp: Composition) -> list[Permutation]:
    """All permutations with the given saillance composition."""
    comp = tuple(comp)
    return [w for w in all_permutations(weight(comp)) if saillance_composition(w) == comp]


def cc(comp: Composition) -> FQSymElement:
    """Sum of G-terms over the saillance fiber of the composition.

    >>> sorted(cc((1, 2)).support())
    [(1, 3, 2), (2, 3, 1)]
    """
    comp = tuple(comp)
    if not comp:
        raise ValueError("needs a nonempty composition")
    return FQSymElement("G", {w: 1 for w in saillance_fiber(comp)})


def cc_by_dendriform(comp: Composition) -> FQSymElement:
    """The same fiber sums built from the half-product recursions.

    A one-part sum is g_1 < g_1^(n-1); longer indices fold with the right
    half-product, left-nested.
    """
    comp = tuple(comp)
    if not comp:
        raise ValueError("needs a nonempty composition")

    def single(n: int) -> FQSymElement:
        g1 = FQSymElement.monomial("G", (1,))
        if n == 1:
            return g1
        power = g1
        for _ in range(n - 2):
            power = product(power, g1)
        return left_half(g1, power)

    acc = single(comp[0])
    for part in comp[1:]:
        acc = right_half(acc, single(part))
    return acc


def z_series(n: int) -> dict[Composition, FQSymElement]:
    """Degree-n slice of the generating series: composition -> fiber sum."""
    if n == 0:
        return {(): FQSymElement.unit("G")}
    return {comp: cc(comp) for comp in compositions(n)}


def z_series_by_recursion(n: int) -> dict[Composition, FQSymElement]:
    """Degree-n slice rebuilt through Z = 1 + Z > C, for cross-checking."""
    if n == 0:
        return {(): FQSymElement.unit("G")}
    out: dict[Composition, FQSymElement] = {}
    for k in range(1, n + 1):
        tail = cc_by_dendriform((k,))
        for comp, element in z_series_by_recursion(n - k).items():
            key = comp + (k,)
            term = tail if not comp else right_half(element, tail)
            out[key] = out[key] + term if key in out else term
    return out


def coalgebra_coefficients(n: int) -> dict[tuple[Composition, Composition, Composition], int]:
    """Structure constants of the coproduct on the span of the fiber sums.

    The coefficient keyed (I, J, K) counts, for one representative pair with
    saillance compositions J and K, the shuffle terms whose saillance
    composition is I; the count does not depend on the representatives, which
    ``coalgebra_coefficients_independent`` verifies.
    """
    out: dict[tuple[Composition, Composition, Composition], int] = {}
    for j in range(n + 1):
        k = n - j
        for left in compositions(j):
            alpha = canonical_representative(left) if left else ()
            for right in compositions(k):
                beta = canonical_representative(right) if right else ()
                for gamma in shuffles(alpha, shifted(beta, j)):
                    key = (saillance_composition(gamma), left, right)
                    out[key] = out.get(key, 0) + 1
    return out


def coalgebra_coefficients_independent(n: int) -> bool:
    """Whether every representative pair yields the same shuffle distribution."""
    for j in range(1, n):
        k = n - j
        fibers_left: dict[Composition, list] = {}
        for w in all_permutations(j):
            fibers_left.setdefault(saillance_composition(w), []).append(w)
        fibers_right: dict[Composition, list] = {}
        for w in all_permutations(k):
            fibers_right.setdefault(saillance_composition(w), []).append(w)
        for alphas in fibers_left.values():
            for betas in fibers_right.values():
                reference = None
                for alpha in alphas:
                    for beta in betas:
                        dist: dict[Composition, int] = {}
                        for gamma in shuffles(alpha, shifted(beta, j)):
                            _add_term(dist, saillance_composition(gamma), 1)
                        if reference is None:
                            reference = dist
                        elif dist != reference:
                            return False
    return True


def coproduct_cc(comp: Composition) -> dict[tuple[Permutation, Permutation], int]:
    """Coproduct of a fiber sum, in the G tensor square."""
    return coproduct(cc(comp))


def commutative_image(x: FQSymElement):
    """Projection onto QSym: an F-term maps to the fundamental of its descent
    composition (equivalently, a G-term maps to the fundamental of its recoil
    composition)."""
    from .bases import QSymElement

    out: dict = {}
    for word, coeff in x.to_f()._terms.items():
        _add_term(out, descent_composition(word), coeff)
    return QSymElement("F", out)


def shuffle_lemma_check(u: tuple, a: int, v: tuple) -> bool:
    """Verify the signed prefix-splitting identity for the word u a v.

    Splitting u as u1 u2 over all cut points, the alternating sum of the
    shuffles u1 sh (a . (reverse(u2) sh v)) collapses to the single word uav.
    """
    word = tuple(u) + (a,) + tuple(v)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError("u, a, v must assemble into a permutation word")
    total: dict = {}
    for cut in range(len(u) + 1):
        u1, u2 = tuple(u[:cut]), tuple(u[cut:])
        sign = -1 if len(u2) % 2 else 1
        inner: dict = {}
        for w in shuffles(tuple(reversed(u2)), tuple(v)):
            _add_term(inner, (a,) + w, 1)
        for w, coeff in inner.items():
            for full in shuffles(u1, w):
                _add_term(total, full, sign * coeff)
    return total == {word: 1}
