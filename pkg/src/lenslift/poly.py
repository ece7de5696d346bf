"""Exact one-variable Laurent polynomials with integer coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["LaurentPolynomial"]


class LaurentPolynomial:
    """An immutable map exponent -> nonzero integer coefficient.

    >>> A = LaurentPolynomial.monomial(1)
    >>> str(-A**2 - A**-2)
    '-1*A^-2 + -1*A^2'
    """

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "A"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            c = int(c)
            if c:
                clean[int(e)] = clean.get(int(e), 0) + c
                if not clean[int(e)]:
                    del clean[int(e)]
        self._terms = dict(sorted(clean.items()))
        self.var = var
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "A") -> LaurentPolynomial:
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "A") -> LaurentPolynomial:
        return cls({0: c}, var)

    # --- accessors

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def key(self) -> tuple[tuple[int, int], ...]:
        """Total order used for canonical choices (mirror resolution)."""
        return tuple(self._terms.items())

    # --- arithmetic

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial({-e * (-n): c ** (-n)}, self.var)
        out = LaurentPolynomial.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPolynomial:
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()}, self.var)

    def mirror(self) -> LaurentPolynomial:
        """Substitute x -> x^-1."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()}, self.var)

    def substitute_power(self, k: int) -> LaurentPolynomial:
        """Substitute x -> x^k."""
        return LaurentPolynomial({e * k: c for e, c in self._terms.items()}, self.var)

    def divmod_exact(self, other: LaurentPolynomial) -> LaurentPolynomial:
        """Exact quotient; raises ArithmeticError if ``other`` does not divide ``self``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial({}, self.var)
        lo_n, lo_d = self.min_degree(), other.min_degree()
        num = {e - lo_n: Fraction(c) for e, c in self._terms.items()}
        den = {e - lo_d: c for e, c in other._terms.items()}
        dd = max(den)
        lead = den[dd]
        quot: dict[int, int] = {}
        while num:
            top = max(num)
            if top < dd:
                raise ArithmeticError("not exactly divisible")
            c = num[top] / lead
            if c.denominator != 1:
                raise ArithmeticError("quotient is not integral")
            k = top - dd
            quot[k] = int(c)
            for e, dc in den.items():
                v = num.get(e + k, 0) - c * dc
                if v:
                    num[e + k] = v
                else:
                    num.pop(e + k, None)
        return LaurentPolynomial(quot, self.var).shift(lo_n - lo_d)

    def __floordiv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.divmod_exact(other)

    def evaluate(self, x):
        return sum(c * x**e for e, c in self._terms.items())

    # --- comparison, hashing

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # --- text

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{self.var}^{e}" for e, c in self._terms.items())

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"

    _TERM = re.compile(r"^\s*(-?\d+)\*([A-Za-z]\w*)\^(-?\d+)\s*$")

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        """Inverse of ``str``: ``"c0*A^e0 + c1*A^e1 + ..."``."""
        text = text.strip()
        if text == "0":
            return cls({})
        terms = []
        var = None
        for chunk in text.split(" + "):
            m = cls._TERM.match(chunk)
            if not m:
                raise ValueError(f"bad polynomial term {chunk!r}")
            c, v, e = m.groups()
            if var is not None and v != var:
                raise ValueError("mixed variables")
            var = v
            terms.append((int(e), int(c)))
        return cls(terms, var or "A")
