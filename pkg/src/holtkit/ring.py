"""Exact coefficient ring: rationals and sparse polynomials in k1, k2, k3.

Coefficients are arbitrary-precision rationals throughout; high-order
bracket expansions overflow 64-bit integers, so fixed-width arithmetic is
never used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

# fractions.Fraction already guarantees lowest terms, positive denominator,
# and 0/1 for zero, which is exactly the coefficient contract we need.
Rational = Fraction

Triple = tuple[int, int, int]
Scalar = Union[int, Fraction]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class ParamPoly:
    """Sparse polynomial in the coupling parameters k1, k2, k3.

    Terms map an exponent triple (e1, e2, e3) to a nonzero Rational; the
    zero polynomial is the empty mapping.  Instances are immutable: every
    operation returns a fresh normalized polynomial.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Triple, Scalar] | None = None):
        normalized: dict[Triple, Fraction] = {}
        if terms:
            for triple, coeff in terms.items():
                e1, e2, e3 = triple
                if e1 < 0 or e2 < 0 or e3 < 0:
                    raise ValueError(f"negative parameter exponent in {triple}")
                c = _frac(coeff)
                if c:
                    normalized[(e1, e2, e3)] = c
        self.terms = normalized

    @classmethod
    def const(cls, value: Scalar) -> "ParamPoly":
        return cls({(0, 0, 0): _frac(value)})

    @classmethod
    def gen(cls, index: int) -> "ParamPoly":
        """The generator k1, k2, or k3 (index 1, 2, 3)."""
        if index not in (1, 2, 3):
            raise ValueError("parameter index must be 1, 2, or 3")
        triple = tuple(1 if i == index else 0 for i in (1, 2, 3))
        return cls({triple: Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "ParamPoly | None":
        if isinstance(other, ParamPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly.const(other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    __hash__ = None  # mutable mapping inside; identity by term set only

    def __add__(self, other) -> "ParamPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for triple, coeff in o.terms.items():
            acc = out.get(triple, 0) + coeff
            if acc:
                out[triple] = acc
            else:
                out.pop(triple, None)
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly({t: -c for t, c in self.terms.items()})

    def __sub__(self, other) -> "ParamPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "ParamPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "ParamPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Triple, Fraction] = {}
        for (a1, a2, a3), ca in self.terms.items():
            for (b1, b2, b3), cb in o.terms.items():
                key = (a1 + b1, a2 + b2, a3 + b3)
                acc = out.get(key, 0) + ca * cb
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return ParamPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ParamPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ParamPoly.const(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, k1: Scalar, k2: Scalar, k3: Scalar) -> Fraction:
        """Exact substitution of rational parameter values."""
        k1, k2, k3 = _frac(k1), _frac(k2), _frac(k3)
        total = Fraction(0)
        for (e1, e2, e3), coeff in self.terms.items():
            total += coeff * k1**e1 * k2**e2 * k3**e3
        return total

    def substitute(self, k1: Scalar | None = None, k2: Scalar | None = None,
                   k3: Scalar | None = None) -> "ParamPoly":
        """Substitute the given parameters exactly, leave the rest symbolic."""
        values = (k1, k2, k3)
        out: dict[Triple, Fraction] = {}
        for triple, coeff in self.terms.items():
            c = coeff
            key = list(triple)
            for i, v in enumerate(values):
                if v is not None:
                    c *= _frac(v) ** triple[i]
                    key[i] = 0
            if c:
                k = (key[0], key[1], key[2])
                acc = out.get(k, 0) + c
                if acc:
                    out[k] = acc
                else:
                    out.pop(k, None)
        return ParamPoly(out)

    def float_at(self, k1: float, k2: float, k3: float) -> float:
        """Double-precision value of the polynomial at float parameters."""
        total = 0.0
        for (e1, e2, e3), coeff in self.terms.items():
            total += float(coeff) * k1**e1 * k2**e2 * k3**e3
        return total

    def render(self) -> str:
        """Canonical text: k1 terms before k2 before k3, constants last."""
        if not self.terms:
            return "0"
        pieces = []
        for triple in sorted(self.terms, reverse=True):
            pieces.append(_term_text(self.terms[triple], triple))
        return _join_signed(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ParamPoly({self.render()!r})"


K1 = ParamPoly.gen(1)
K2 = ParamPoly.gen(2)
K3 = ParamPoly.gen(3)
ONE = ParamPoly.const(1)
ZERO = ParamPoly()

_PARAM_NAMES = ("k1", "k2", "k3")


def _term_text(coeff: Fraction, triple: Triple,
               extra_factors: tuple[tuple[str, int], ...] = ()) -> tuple[str, str]:
    """(sign, body) for one rendered term; body follows the expression grammar."""
    factors = []
    for name, e in tuple(zip(_PARAM_NAMES, triple)) + extra_factors:
        if e == 0:
            continue
        factors.append(name if e == 1 else f"{name}^{e}")
    magnitude = abs(coeff)
    if not factors or magnitude != 1:
        factors.insert(0, str(magnitude))
    return ("-" if coeff < 0 else "+", "*".join(factors))


def _join_signed(pieces: list[tuple[str, str]]) -> str:
    sign, body = pieces[0]
    text = body if sign == "+" else "-" + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
