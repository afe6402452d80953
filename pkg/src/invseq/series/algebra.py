"""Exact polynomial and truncated power-series arithmetic over ``Fraction``."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

__all__ = [
    "ValuationError", "LaurentPoly", "MultiPoly", "TruncatedSeries", "digest",
]


class ValuationError(ArithmeticError):
    """Division or shift needs more leading zeros than the operand has."""


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class LaurentPoly:
    """Univariate Laurent polynomial; ``terms`` maps exponent -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self.terms = {int(e): _frac(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, low: int = 0) -> "LaurentPoly":
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{e}" for e, c in sorted(self.terms.items()))

    @property
    def low(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def high(self) -> int:
        return max(self.terms) if self.terms else 0

    def coeff(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def reflect(self) -> "LaurentPoly":
        """Substitute x -> 1/x."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def positive_part(self) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self.terms.items() if e > 0})

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self.terms.items() if e < 0})

    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def exact_div(self, other) -> "LaurentPoly":
        """Quotient when ``other`` divides ``self`` in the Laurent ring; raises otherwise."""
        if isinstance(other, (int, Rational)):
            return self * (Fraction(1) / _frac(other))
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        # shift both to ordinary polynomials with non-zero constant term in the divisor
        b_low, b_high = other.low, other.high
        rem = {e - self.low: c for e, c in self.terms.items()}
        lead = other.terms[b_high]
        quot: dict[int, Fraction] = {}
        span = b_high - b_low
        while rem:
            top = max(rem)
            if top < span:
                raise ArithmeticError(f"{other!r} does not divide {self!r}")
            q = rem[top] / lead
            shift = top - span
            quot[shift] = q
            for e, c in other.terms.items():
                k = e - b_low + shift
                v = rem.get(k, 0) - q * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly({e + self.low - b_low: c for e, c in quot.items()})

    def canonical(self) -> list:
        return [[e, str(c)] for e, c in sorted(self.terms.items())]


class MultiPoly:
    """Sparse polynomial in named variables (negative exponents allowed)."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(variables)
        self.terms = {tuple(e): _frac(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: 1})

    @classmethod
    def const(cls, c, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Rational)):
            return MultiPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.vars}, {dict(sorted(self.terms.items()))})"

    def swap(self, a: str, b: str) -> "MultiPoly":
        ia, ib = self.vars.index(a), self.vars.index(b)
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[ia], e[ib] = e[ib], e[ia]
            out[tuple(e)] = c
        return MultiPoly(self.vars, out)

    def exact_div(self, other) -> "MultiPoly":
        """Division by a scalar or a single monomial."""
        if isinstance(other, (int, Rational)):
            return self * (Fraction(1) / _frac(other))
        other = self._coerce(other)
        if len(other.terms) != 1:
            raise ArithmeticError("MultiPoly only divides by monomials")
        (oe, oc), = other.terms.items()
        return MultiPoly(self.vars, {tuple(a - b for a, b in zip(e, oe)): c / oc
                                     for e, c in self.terms.items()})

    def canonical(self) -> list:
        return [[list(e), str(c)] for e, c in sorted(self.terms.items())]


def _canonical(c) -> object:
    if hasattr(c, "canonical"):
        return c.canonical()
    return str(_frac(c))


def digest(coeff) -> str:
    """Short sha256 of the canonical serialisation of one coefficient."""
    blob = json.dumps(_canonical(coeff), separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


class TruncatedSeries:
    """Power series in ``var`` known exactly through ``t^order``.

    Coefficients may be Fractions, LaurentPolys or MultiPolys; all arithmetic
    stays inside that ring and never reads past ``order``.
    """

    __slots__ = ("var", "order", "coeffs", "zero")

    def __init__(self, coeffs: Iterable, order: int, zero=Fraction(0), var: str = "t"):
        coeffs = list(coeffs)[:order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.var, self.order, self.coeffs, self.zero = var, order, coeffs, zero

    @classmethod
    def constant(cls, c, order: int, zero=Fraction(0), var: str = "t") -> "TruncatedSeries":
        return cls([c], order, zero, var)

    @classmethod
    def monomial(cls, c, k: int, order: int, zero=Fraction(0), var: str = "t") -> "TruncatedSeries":
        return cls([zero] * k + [c], order, zero, var)

    def _like(self, coeffs, order=None) -> "TruncatedSeries":
        return TruncatedSeries(coeffs, self.order if order is None else order, self.zero, self.var)

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.var != self.var:
                raise ValueError(f"series variable mismatch {self.var} vs {other.var}")
            return other
        return self._like([self.zero + other])

    def __getitem__(self, n: int):
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other):
        other = self._lift(other)
        order = min(self.order, other.order)
        return self._like([a + b for a, b in zip(self.coeffs, other.coeffs)], order)

    __radd__ = __add__

    def __neg__(self):
        return self._like([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self._like([a * other for a in self.coeffs])
        other = self._lift(other)
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = self.zero
            for i in range(n + 1):
                a = self.coeffs[i]
                if a:
                    b = other.coeffs[n - i]
                    if b:
                        acc = acc + a * b
            out.append(acc)
        return self._like(out, order)

    def __rmul__(self, other):
        return self._like([other * a for a in self.coeffs])

    def valuation(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def shift(self, k: int) -> "TruncatedSeries":
        """Divide by var^k; the leading k coefficients must vanish."""
        v = self.valuation()
        if v is not None and v < k:
            raise ValuationError(f"series has valuation {v}, cannot divide by {self.var}^{k}")
        return self._like(self.coeffs[k:], self.order - k)

    def times_var(self, k: int = 1) -> "TruncatedSeries":
        return self._like([self.zero] * k + self.coeffs, self.order)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self._like([_div(a, other) for a in self.coeffs])
        other = self._lift(other)
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by the zero series")
        num, den = self, other
        if v:
            sv = self.valuation()
            if sv is not None and sv < v:
                raise ValuationError(f"dividend valuation {sv} is below divisor valuation {v}")
            num, den = self.shift(v), other.shift(v)
        order = min(num.order, den.order)
        b0 = den.coeffs[0]
        q = []
        for n in range(order + 1):
            acc = num.coeffs[n]
            for j in range(1, n + 1):
                b = den.coeffs[j]
                if b and q[n - j]:
                    acc = acc - b * q[n - j]
            q.append(_div(acc, b0))
        return self._like(q, order)

    def sqrt(self) -> "TruncatedSeries":
        """Newton iteration s <- (s + a/s)/2 from s = 1; needs constant term 1."""
        one = self.zero + 1
        if self.coeffs[0] != one:
            raise ValueError("sqrt needs constant term 1")
        s = self._like([one], 0)
        prec = 0
        while prec < self.order:
            prec = min(2 * prec + 1, self.order)
            a = self._like(self.coeffs, prec)
            s = self._like(s.coeffs, prec)
            s = (s + a / s) * Fraction(1, 2)
        if (s * s) != self:
            raise ArithmeticError("series square root failed its squaring check")
        return s

    def map(self, fn: Callable) -> "TruncatedSeries":
        return self._like([fn(c) for c in self.coeffs])

    def truncate(self, order: int) -> "TruncatedSeries":
        return self._like(self.coeffs, min(order, self.order))

    def agrees(self, other: "TruncatedSeries", order: int | None = None) -> bool:
        order = min(self.order, other.order) if order is None else order
        if order > self.order or order > other.order:
            raise ValueError("comparison beyond a truncation order")
        return all(self.coeffs[n] == other.coeffs[n] for n in range(order + 1))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.agrees(other)

    def __repr__(self):
        return f"TruncatedSeries({self.var}, order={self.order}, {self.coeffs!r})"

    def digests(self) -> list[str]:
        return [digest(c) for c in self.coeffs]


def _div(a, b):
    if isinstance(a, (LaurentPoly, MultiPoly)):
        return a.exact_div(b)
    if isinstance(b, (LaurentPoly, MultiPoly)):
        return (b * 0 + a).exact_div(b)
    return _frac(a) / _frac(b)
