"""QSym and NSym elements; the U basis, its transition matrices, and the dual V basis.

The U basis of QSym collects, over the permutations whose saillance
composition is the complement of the index, the fundamental functions of
their recoil compositions.  Expressed on the fundamental basis and ordered by
``compositions_ordered`` the transition matrix M_n is upper unitriangular, so
the dual V basis of NSym is reached through the exact integer inverse:
reading row I of M_n expands the ribbon R_I over the V_J, and row J of the
inverse expands V_J over ribbons.  All other NSym bases (complete, elementary,
power sum, and the complemented V') are funneled through the ribbon basis,
which owns the closed two-term product rule.
"""
from __future__ import annotations

from functools import lru_cache

from .compositions import (
    Composition,
    complement,
    compositions_ordered,
    concat,
    conjugate,
    near_concat,
    ribbon_prefix,
    ribbon_suffix,
    weight,
)
from .matrices import IntMatrix, matrix_inverse
from .permutations import (
    all_permutations,
    recoil_composition,
    saillance_composition,
    shifted_shuffle,
)

NSYM_BASES = ("R", "S", "L", "Psi", "V", "Vp")
QSYM_BASES = ("F", "U")


def _add_term(acc: dict, key, coeff) -> None:
    val = acc.get(key, 0) + coeff
    if val:
        acc[key] = val
    else:
        acc.pop(key, None)


def _ribbon_multiply(left: dict, right: dict) -> dict:
    """Bilinear extension of R_I R_J = R_{I.J} + R_{I|>J}."""
    out: dict = {}
    for ci, vi in left.items():
        for cj, vj in right.items():
            coeff = vi * vj
            if not ci or not cj:
                _add_term(out, ci + cj, coeff)
                continue
            _add_term(out, concat(ci, cj), coeff)
            _add_term(out, near_concat(ci, cj), coeff)
    return out


class NSymElement:
    """Finite linear combination of basis labels (compositions).

    Coefficients may be ints or QPoly; addition requires matching bases while
    multiplication goes through the ribbon basis.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms=None):
        if basis not in NSYM_BASES:
            raise ValueError(f"unknown NSym basis {basis!r}")
        self.basis = basis
        self._terms = {}
        for comp, coeff in (terms or {}).items():
            if coeff:
                self._terms[tuple(comp)] = coeff

    @classmethod
    def monomial(cls, basis: str, comp: Composition, coeff=1) -> "NSymElement":
        return cls(basis, {tuple(comp): coeff})

    def terms(self) -> dict[Composition, object]:
        return dict(self._terms)

    def coefficient(self, comp: Composition):
        return self._terms.get(tuple(comp), 0)

    def support(self) -> set[Composition]:
        return set(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "NSymElement") -> "NSymElement":
        if self.basis != other.basis:
            raise ValueError(f"cannot add {self.basis} and {other.basis} terms directly")
        out = dict(self._terms)
        for comp, coeff in other._terms.items():
            _add_term(out, comp, coeff)
        return NSymElement(self.basis, out)

    def __neg__(self) -> "NSymElement":
        return NSymElement(self.basis, {c: -v for c, v in self._terms.items()})

    def __sub__(self, other: "NSymElement") -> "NSymElement":
        return self + (-other)

    def scale(self, coeff) -> "NSymElement":
        return NSymElement(self.basis, {c: coeff * v for c, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NSymElement):
            product = _ribbon_multiply(self.to_ribbon()._terms, other.to_ribbon()._terms)
            return NSymElement("R", product)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NSymElement):
            return NotImplemented
        if self.basis == other.basis:
            return self._terms == other._terms
        return self.to_ribbon()._terms == other.to_ribbon()._terms

    def __repr__(self):
        body = " + ".join(f"{v!r}*{self.basis}_{c}" for c, v in sorted(self._terms.items()))
        return f"NSymElement({body or '0'})"

    # -- basis changes -------------------------------------------------------

    def to_ribbon(self) -> "NSymElement":
        if self.basis == "R":
            return self
        out: dict = {}
        for comp, coeff in self._terms.items():
            expansion = _basis_word_in_ribbon(self.basis, comp)
            for rib, v in expansion.items():
                _add_term(out, rib, coeff * v)
        return NSymElement("R", out)

    def to_v(self) -> "NSymElement":
        out: dict = {}
        for comp, coeff in self.to_ribbon()._terms.items():
            for lab, v in transition_matrix(weight(comp)).row(comp).items():
                _add_term(out, lab, coeff * v)
        return NSymElement("V", out)

    def to_vprime(self) -> "NSymElement":
        terms = {complement(c): v for c, v in self.to_v()._terms.items()}
        return NSymElement("Vp", terms)

    def to_lambda(self) -> "NSymElement":
        """Rewrite over products of elementary functions.

        Peels the shortest ribbon term each time: the fully merged ribbon term
        of a product of elementaries indexed by J is the complement of J and
        carries coefficient 1, while every other term is strictly longer.
        """
        residue = dict(self.to_ribbon()._terms)
        out: dict = {}
        while residue:
            comp = min(residue, key=lambda c: (len(c), c))
            coeff = residue.pop(comp)
            index = complement(comp)
            out[index] = coeff
            for rib, v in _basis_word_in_ribbon("L", index).items():
                if rib != comp:
                    _add_term(residue, rib, -coeff * v)
        return NSymElement("L", out)


@lru_cache(maxsize=None)
def _generator_in_ribbon(basis: str, part: int) -> tuple:
    if basis == "S":
        return (((part,), 1),)
    if basis == "L":
        return (((1,) * part, 1),)
    if basis == "Psi":
        return tuple(psi_ribbon(part).terms().items())
    raise ValueError(f"{basis} is not multiplicative")


def _basis_word_in_ribbon(basis: str, comp: Composition) -> dict:
    """Ribbon expansion of one basis label."""
    if basis == "R":
        return {comp: 1}
    if basis == "V":
        return dict(inverse_transition_matrix(weight(comp)).row(comp)) if comp else {(): 1}
    if basis == "Vp":
        return _basis_word_in_ribbon("V", complement(comp)) if comp else {(): 1}
    out = {(): 1}
    for part in comp:
        out = _ribbon_multiply(out, dict(_generator_in_ribbon(basis, part)))
    return out


def ribbon_product(I: Composition, J: Composition) -> NSymElement:
    """R_I R_J = R_{I.J} + R_{I|>J} (concatenation and near-concatenation).

    >>> sorted(ribbon_product((2,), (2,)).terms())
    [(2, 2), (4,)]
    """
    return NSymElement("R", _ribbon_multiply({tuple(I): 1}, {tuple(J): 1}))


@lru_cache(maxsize=None)
def psi_ribbon(n: int) -> NSymElement:
    """Power-sum generator on the ribbon basis, from n S_n = sum S_{n-k} Psi_k."""
    if n < 1:
        raise ValueError("psi_ribbon needs n >= 1")
    acc = {(n,): n}
    for k in range(1, n):
        correction = _ribbon_multiply({(n - k,): 1}, psi_ribbon(k)._terms)
        for comp, coeff in correction.items():
            _add_term(acc, comp, -coeff)
    return NSymElement("R", acc)


# -- transition matrices and the U basis -------------------------------------


_matrix_store: dict[int, IntMatrix] = {}


def compute_transition_matrix(n: int) -> IntMatrix:
    """Build M_n from a single sweep of S_n.

    Each permutation contributes 1 to the cell indexed by its recoil
    composition (row) and the complement of its saillance composition
    (column).
    """
    labels = compositions_ordered(n)
    cells: dict[tuple[Composition, Composition], int] = {}
    for word in all_permutations(n):
        key = (recoil_composition(word), complement(saillance_composition(word)))
        cells[key] = cells.get(key, 0) + 1
    return IntMatrix.from_entries(labels, lambda r, c: cells.get((r, c), 0))


def transition_matrix(n: int) -> IntMatrix:
    """M_n: column J holds the fundamental expansion of U_J; memoized per degree."""
    matrix = _matrix_store.get(n)
    if matrix is None:
        matrix = compute_transition_matrix(n)
        _matrix_store[n] = matrix
    return matrix


def seed_transition_matrix(matrix: IntMatrix) -> None:
    """Install a previously computed M_n (the CLI feeds its disk cache through here)."""
    if not matrix.labels:
        raise ValueError("empty matrix")
    n = weight(matrix.labels[0])
    if tuple(matrix.labels) != tuple(compositions_ordered(n)):
        raise ValueError("matrix labels are not in the canonical order")
    _matrix_store[n] = matrix
    inverse_transition_matrix.cache_clear()


@lru_cache(maxsize=None)
def inverse_transition_matrix(n: int) -> IntMatrix:
    return matrix_inverse(transition_matrix(n))


class QSymElement:
    """Quasi-symmetric function on the fundamental or the U basis."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms=None):
        if basis not in QSYM_BASES:
            raise ValueError(f"unknown QSym basis {basis!r}")
        self.basis = basis
        self._terms = {}
        for comp, coeff in (terms or {}).items():
            if coeff:
                self._terms[tuple(comp)] = coeff

    def terms(self) -> dict[Composition, object]:
        return dict(self._terms)

    def coefficient(self, comp: Composition):
        return self._terms.get(tuple(comp), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "QSymElement") -> "QSymElement":
        if self.basis != other.basis:
            raise ValueError("basis mismatch")
        out = dict(self._terms)
        for comp, coeff in other._terms.items():
            _add_term(out, comp, coeff)
        return QSymElement(self.basis, out)

    def __neg__(self):
        return QSymElement(self.basis, {c: -v for c, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff) -> "QSymElement":
        return QSymElement(self.basis, {c: coeff * v for c, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        if self.basis == other.basis:
            return self._terms == other._terms
        return self.to_fundamental()._terms == other.to_fundamental()._terms

    def __repr__(self):
        body = " + ".join(f"{v!r}*{self.basis}_{c}" for c, v in sorted(self._terms.items()))
        return f"QSymElement({body or '0'})"

    def to_fundamental(self) -> "QSymElement":
        if self.basis == "F":
            return self
        out: dict = {}
        for comp, coeff in self._terms.items():
            for lab, v in transition_matrix(weight(comp)).column(comp).items():
                _add_term(out, lab, coeff * v)
        return QSymElement("F", out)

    def to_u(self) -> "QSymElement":
        if self.basis == "U":
            return self
        out: dict = {}
        for comp, coeff in self._terms.items():
            for lab, v in inverse_transition_matrix(weight(comp)).column(comp).items():
                _add_term(out, lab, coeff * v)
        return QSymElement("U", out)


def u_basis(comp: Composition) -> QSymElement:
    """Fundamental expansion of U_I: a column of the transition matrix.

    >>> u_basis((2, 1)).terms() == {(1, 2): 1, (2, 1): 1}
    True
    """
    comp = tuple(comp)
    if not comp:
        raise ValueError("needs a nonempty composition")
    return QSymElement("F", transition_matrix(weight(comp)).column(comp))


def v_in_ribbon(comp: Composition) -> NSymElement:
    """Ribbon expansion of V_I: row I of the inverse transition matrix."""
    return NSymElement("R", _basis_word_in_ribbon("V", tuple(comp)))


def ribbon_in_v(comp: Composition) -> NSymElement:
    """V expansion of the ribbon R_I: row I of the transition matrix."""
    comp = tuple(comp)
    return NSymElement.monomial("R", comp).to_v()


def ribbon_lambda_conversion(element: NSymElement) -> NSymElement:
    """Round-trip between the ribbon and elementary pictures."""
    if element.basis == "L":
        return element.to_ribbon()
    return element.to_lambda()


def psi_in_v(n: int) -> NSymElement:
    """V expansion of the degree-n power sum; 2^(n-1) terms with signs by length."""
    return psi_ribbon(n).to_v()


def coproduct_f(comp: Composition) -> dict[tuple[Composition, Composition], int]:
    """Coproduct of a fundamental quasi-symmetric function.

    Cutting the ribbon diagram after k boxes splits F_I into prefix and suffix
    fundamentals; this is the dual of the two-term ribbon product rule.
    """
    comp = tuple(comp)
    n = weight(comp)
    return {(ribbon_prefix(comp, k), ribbon_suffix(comp, n - k)): 1 for k in range(n + 1)}


def quotient_class_check(total_degree: int) -> bool:
    """Whether saillance fibers multiply consistently in every split of the degree.

    For each pair of fibers, every choice of representatives must give the
    same saillance distribution over the shifted shuffle; this is what makes
    the span of the fiber sums an ideal and the quotient product well-defined.
    """
    for a in range(1, total_degree):
        b = total_degree - a
        fibers_a: dict[Composition, list] = {}
        for word in all_permutations(a):
            fibers_a.setdefault(saillance_composition(word), []).append(word)
        fibers_b: dict[Composition, list] = {}
        for word in all_permutations(b):
            fibers_b.setdefault(saillance_composition(word), []).append(word)
        for alphas in fibers_a.values():
            for betas in fibers_b.values():
                reference = None
                for alpha in alphas:
                    for beta in betas:
                        dist: dict[Composition, int] = {}
                        for gamma in shifted_shuffle(alpha, beta):
                            _add_term(dist, saillance_composition(gamma), 1)
                        if reference is None:
                            reference = dist
                        elif dist != reference:
                            return False
    return True
