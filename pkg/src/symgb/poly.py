"""Sparse multivariate polynomial arithmetic over Q.

Monomials are dense exponent tuples of a fixed arity; ``exps[i-1]`` is the
exponent of the variable ``x_i``.  Polynomials are canonical sorted term
lists with exact :class:`fractions.Fraction` coefficients.  The only
monomial order provided is lexicographic with the highest-index variable
most significant (``x_n > x_{n-1} > ... > x_1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

Monomial = tuple
Coefficient = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ArityMismatchError(ValueError):
    """Raised when operands live in rings with different variable counts."""


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


class PolyParseError(ValueError):
    """Raised on malformed polynomial text."""


def _require_same_arity(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise ArityMismatchError(f"arity mismatch: {len(a)} vs {len(b)}")


def mono_one(arity: int) -> Monomial:
    return (0,) * arity


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _require_same_arity(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b, i.e. exponents of a are componentwise <= those of b."""
    _require_same_arity(a, b)
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """Return b / a.  Raises ValueError when a does not divide b."""
    _require_same_arity(a, b)
    if not all(x <= y for x, y in zip(a, b)):
        raise ValueError(f"{a} does not divide {b}")
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _require_same_arity(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class LexOrder:
    """Lex order comparing the exponent of x_n first, then x_{n-1}, ..."""

    arity: int
    kind: str = "lex-descending"

    def key(self, m: Monomial):
        return m[::-1]

    def compare(self, a: Monomial, b: Monomial) -> int:
        _require_same_arity(a, b)
        ka, kb = a[::-1], b[::-1]
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0


def mono_compare(a: Monomial, b: Monomial, order: LexOrder) -> int:
    """-1, 0 or 1 as a <, =, > b under the order."""
    return order.compare(a, b)


def _as_fraction(c: Coefficient) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c)!r}")


class Polynomial:
    """Immutable polynomial in canonical form.

    ``terms`` is a tuple of (monomial, coefficient) pairs with distinct
    monomials, nonzero coefficients, sorted strictly decreasing under lex.
    The empty tuple is the zero polynomial.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Iterable = ()):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        merged: dict = {}
        for mono, coeff in terms:
            mono = tuple(mono)
            if len(mono) != arity:
                raise ArityMismatchError(
                    f"monomial arity {len(mono)} != polynomial arity {arity}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = merged.get(mono, _ZERO) + _as_fraction(coeff)
            if c:
                merged[mono] = c
            else:
                merged.pop(mono, None)
        self.arity = arity
        self.terms = tuple(
            sorted(merged.items(), key=lambda t: t[0][::-1], reverse=True))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "Polynomial":
        return cls(arity)

    @classmethod
    def one(cls, arity: int) -> "Polynomial":
        return cls(arity, [(mono_one(arity), 1)])

    @classmethod
    def constant(cls, c: Coefficient, arity: int) -> "Polynomial":
        return cls(arity, [(mono_one(arity), c)])

    @classmethod
    def variable(cls, i: int, arity: int) -> "Polynomial":
        """The polynomial x_i (1-based index)."""
        if not 1 <= i <= arity:
            raise ValueError(f"variable index {i} out of range 1..{arity}")
        exps = [0] * arity
        exps[i - 1] = 1
        return cls(arity, [(tuple(exps), 1)])

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: Coefficient = 1) -> "Polynomial":
        return cls(len(mono), [(tuple(mono), coeff)])

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return (len(self.terms) == 1
                and self.terms[0][0] == mono_one(self.arity)
                and self.terms[0][1] == 1)

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return max(mono_degree(m) for m, _ in self.terms)

    # -- leading data ------------------------------------------------------

    def leading_term(self) -> tuple:
        """(coefficient, monomial) of the lex-maximal term."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        mono, coeff = self.terms[0]
        return coeff, mono

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[1]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[0]

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self * (Fraction(1) / lc)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.arity != self.arity:
                raise ArityMismatchError(
                    f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.arity)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.arity, list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.arity, [(m, -c) for m, c in self.terms])

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return -(self - other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Polynomial.zero(self.arity)
            return Polynomial(self.arity, [(m, cc * c) for m, cc in self.terms])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(x + y for x, y in zip(m1, m2))
                c = acc.get(m, _ZERO) + c1 * c2
                if c:
                    acc[m] = c
                else:
                    del acc[m]
        return Polynomial(self.arity, acc.items())

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            return self * (Fraction(1) / c)
        return NotImplemented

    def __pow__(self, exp: int) -> "Polynomial":
        if exp < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one(self.arity)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    def mul_term(self, mono: Monomial, coeff: Coefficient) -> "Polynomial":
        """Fast multiplication by a single term."""
        c = _as_fraction(coeff)
        if not c:
            return Polynomial.zero(self.arity)
        return Polynomial(
            self.arity,
            [(tuple(x + y for x, y in zip(m, mono)), cc * c) for m, cc in self.terms],
        )

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.arity)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.arity, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.arity}, {format_polynomial(self)!r})"


# -- canonical text grammar -------------------------------------------------
#
#   poly := ['-'] term (('+'|'-') term)*
#   term := coeff | powprod | coeff '*' powprod
#   powprod := factor ('*' factor)*
#   factor := 'x'INT ['^'INT]
#   coeff := INT ['/'INT]
#
# Canonical printing: terms in decreasing lex order, coefficient 1 elided in
# front of a power product, no denominator 1, no '+' before the first term.

def _format_mono(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for idx, (mono, coeff) in enumerate(p.terms):
        neg = coeff < 0
        mag = -coeff if neg else coeff
        mono_s = _format_mono(mono)
        if not mono_s:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono_s
        else:
            body = f"{_format_coeff(mag)}*{mono_s}"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("-" if neg else "+") + body)
    return "".join(out)


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_COEFF_RE = re.compile(r"^(\d+)(?:/(\d+))?$")


def _split_terms(text: str) -> Iterator[tuple]:
    """Yield (sign, term_text) pairs from the top-level +/- structure."""
    i = 0
    n = len(text)
    sign = 1
    if text.startswith("-"):
        sign = -1
        i = 1
    elif text.startswith("+"):
        raise PolyParseError("no '+' allowed before the first term")
    start = i
    while i <= n:
        if i == n or text[i] in "+-":
            chunk = text[start:i]
            if not chunk:
                raise PolyParseError(f"empty term in {text!r}")
            yield sign, chunk
            if i < n:
                sign = 1 if text[i] == "+" else -1
            i += 1
            start = i
        else:
            i += 1


def parse_polynomial(text: str, arity: int) -> Polynomial:
    """Parse the text grammar above into a polynomial of the given arity."""
    text = text.strip().replace(" ", "")
    if not text:
        raise PolyParseError("empty polynomial text")
    terms = []
    for sign, chunk in _split_terms(text):
        coeff = Fraction(sign)
        exps = [0] * arity
        saw_factor = False
        for pos, tok in enumerate(chunk.split("*")):
            fm = _FACTOR_RE.match(tok)
            if fm:
                i = int(fm.group(1))
                if not 1 <= i <= arity:
                    raise PolyParseError(
                        f"variable x{i} out of range 1..{arity}")
                exps[i - 1] += int(fm.group(2) or 1)
                saw_factor = True
                continue
            cm = _COEFF_RE.match(tok)
            if cm and pos == 0:
                den = int(cm.group(2) or 1)
                if den == 0:
                    raise PolyParseError(f"zero denominator in {tok!r}")
                coeff *= Fraction(int(cm.group(1)), den)
                continue
            raise PolyParseError(f"bad token {tok!r} in {chunk!r}")
        if not saw_factor and not _COEFF_RE.match(chunk.split("*")[0]):
            raise PolyParseError(f"bad term {chunk!r}")
        terms.append((tuple(exps), coeff))
    return Polynomial(arity, terms)
