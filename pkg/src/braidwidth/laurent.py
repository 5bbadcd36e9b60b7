"""Laurent polynomials in one variable ``t`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "T", "ONE", "ZERO"]


class LaurentPoly:
    """Immutable, finitely supported map exponent -> nonzero integer."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        items = {} if terms is None else terms
        self._terms = tuple(sorted((int(e), int(c)) for e, c in items.items() if c != 0))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], shift: int = 0) -> LaurentPoly:
        return cls({shift + j: c for j, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def coefficients(self) -> list[int]:
        """Dense coefficient list from ``min_degree`` up to ``max_degree``."""
        if not self._terms:
            return []
        lo = self.min_degree
        out = [0] * (self.max_degree - lo + 1)
        for e, c in self._terms:
            out[e - lo] = c
        return out

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms})

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
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only units can be raised to negative powers")
            (e, c), = self._terms
            return LaurentPoly({e * k: c ** (-k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, j: int) -> LaurentPoly:
        """Multiply by ``t**j``."""
        return LaurentPoly({e + j: c for e, c in self._terms})

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient in Z[t, 1/t]; raises ArithmeticError if it does not exist."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        num = self.coefficients()
        den = other.coefficients()
        lead = den[-1]
        quot = [0] * max(len(num) - len(den) + 1, 0)
        for j in range(len(quot) - 1, -1, -1):
            c = num[j + len(den) - 1]
            if c % lead:
                raise ArithmeticError("inexact division")
            q = c // lead
            quot[j] = q
            if q:
                for k, d in enumerate(den):
                    num[j + k] -= q * d
        if any(num):
            raise ArithmeticError("inexact division")
        return LaurentPoly.from_coefficients(quot, self.min_degree - other.min_degree)

    def __call__(self, value):
        return sum(c * value ** e for e, c in self._terms) if self._terms else 0

    def normalized(self) -> LaurentPoly:
        """Representative up to units: lowest exponent 0, constant term positive."""
        if not self._terms:
            return self
        p = self.shift(-self.min_degree)
        return -p if p._terms[0][1] < 0 else p

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


ONE = LaurentPoly({0: 1})
ZERO = LaurentPoly()
T = LaurentPoly({1: 1})
