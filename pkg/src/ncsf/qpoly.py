"""Exact univariate polynomials in q with arbitrary-precision integer coefficients.

Every graded count in this package is a QPoly; there is no floating point
anywhere.  Instances are immutable and hashable, and mix freely with ints in
arithmetic.
"""
from __future__ import annotations


class QPoly:
    """Sparse polynomial {exponent: coefficient}; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise ValueError("negative exponent")
            if v:
                c[int(e)] = int(v)
        self._c = c

    @classmethod
    def q(cls, exponent: int = 1) -> "QPoly":
        return cls({exponent: 1})

    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def coefficient(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def lowest_exponent(self) -> int:
        return min(self._c) if self._c else -1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return QPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        out = QPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        return QPoly({e + k: v for e, v in self._c.items()})

    def mirror(self, top: int) -> "QPoly":
        """q^top * p(1/q); requires top >= degree."""
        if self._c and top < self.degree():
            raise ValueError("mirror exponent below degree")
        return QPoly({top - e: v for e, v in self._c.items()})

    def exact_div(self, other) -> "QPoly":
        """Exact polynomial division; raises ValueError if it does not divide."""
        other = _coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._c)
        quot: dict[int, int] = {}
        dlead = other.degree()
        dcoef = other._c[dlead]
        while rem:
            e = max(rem)
            if e < dlead:
                raise ValueError(f"{other} does not divide exactly")
            c, r = divmod(rem[e], dcoef)
            if r:
                raise ValueError(f"{other} does not divide exactly")
            quot[e - dlead] = c
            for de, dv in other._c.items():
                k = e - dlead + de
                nv = rem.get(k, 0) - c * dv
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return QPoly(quot)

    def __call__(self, value: int) -> int:
        """Evaluate at an integer point."""
        return sum(v * value**e for e, v in self._c.items())

    def __repr__(self):
        return f"QPoly({self._c!r})"

    def __str__(self):
        """Render with descending powers, matching the table output style."""
        if not self._c:
            return "0"
        chunks = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if a == 1 else f"{a}{var}"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(value):
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly(value)
    return NotImplemented


ZERO = QPoly()
ONE = QPoly(1)


def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1).

    >>> str(q_int(3))
    'q^2 + q + 1'
    """
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return QPoly({e: 1 for e in range(n)})


def q_factorial(n: int) -> QPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out
