"""Phase-space Laurent polynomials and their Hamiltonian calculus.

Coordinates are x, y with momenta px, py.  All Holt-family potentials live
in fractional powers of y, so the kernel works with the cube-root generator
u, fixed by y = u**3: every power y^(n/3) becomes the integer power u^n,
the ring closes under multiplication, and d/dy acts on monomials as
u^n -> (n/3) u^(n-3).  Only the u exponent may be negative.

Coefficients are exact ParamPoly values in the couplings k1, k2, k3, so
equality to zero is decidable and every identity check here is a proof.

The Poisson bracket convention is

    {f, g} = f_x g_px + f_y g_py - f_px g_x - f_py g_y

with the y-derivative realized through u as above.  Under this convention
the third- and fourth-order integrals of the linear-in-x potential bracket
to +108 k2^3, matching the sign the catalog transcriptions assume.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Union

from .ring import ParamPoly, Rational, Scalar, _frac, _join_signed, _term_text


class DomainError(ValueError):
    """Numeric evaluation outside the y > 0 half-plane."""


class Monomial(NamedTuple):
    """Exponents of one monomial x^ex * u^eu * px^epx * py^epy."""

    ex: int = 0
    eu: int = 0
    epx: int = 0
    epy: int = 0

    @property
    def momentum_degree(self) -> int:
        return self.epx + self.epy

    def sort_key(self):
        # momentum-leading order, matching how the integrals are written
        return (self.epx, self.epy, self.ex, self.eu)


Coefficient = Union[ParamPoly, int, Fraction]


def _param(value: Coefficient) -> ParamPoly:
    if isinstance(value, ParamPoly):
        return value
    return ParamPoly.const(_frac(value))


class PhasePoly:
    """Sparse sum of monomials with ParamPoly coefficients.

    Immutable; the zero polynomial is the empty mapping and equality is
    term-set equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None):
        normalized: dict[Monomial, ParamPoly] = {}
        if terms:
            for mono, coeff in terms.items():
                m = Monomial(*mono)
                if m.ex < 0 or m.epx < 0 or m.epy < 0:
                    raise ValueError(f"negative exponent outside u in {m}")
                c = _param(coeff)
                if not c.is_zero:
                    normalized[m] = c
        self.terms = normalized

    @classmethod
    def zero(cls) -> "PhasePoly":
        return cls()

    @classmethod
    def constant(cls, value: Coefficient) -> "PhasePoly":
        return cls({Monomial(): value})

    @classmethod
    def monomial(cls, coeff: Coefficient = 1, ex: int = 0, eu: int = 0,
                 epx: int = 0, epy: int = 0) -> "PhasePoly":
        return cls({Monomial(ex, eu, epx, epy): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def momentum_order(self) -> int:
        """Highest total momentum degree over all terms (0 for the zero poly)."""
        return max((m.momentum_degree for m in self.terms), default=0)

    def _coerce(self, other) -> "PhasePoly | None":
        if isinstance(other, PhasePoly):
            return other
        if isinstance(other, (ParamPoly, int, Fraction)):
            return PhasePoly.constant(other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    __hash__ = None

    def __add__(self, other) -> "PhasePoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in o.terms.items():
            acc = out.get(mono, 0) + coeff
            if acc.is_zero:
                out.pop(mono, None)
            else:
                out[mono] = acc
        return PhasePoly(out)

    __radd__ = __add__

    def __neg__(self) -> "PhasePoly":
        return PhasePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "PhasePoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "PhasePoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "PhasePoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Monomial, ParamPoly] = {}
        for ma, ca in self.terms.items():
            for mb, cb in o.terms.items():
                key = Monomial(ma.ex + mb.ex, ma.eu + mb.eu,
                               ma.epx + mb.epx, ma.epy + mb.epy)
                acc = out.get(key, 0) + ca * cb
                if acc.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return PhasePoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PhasePoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = PhasePoly.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff(self, var: str) -> "PhasePoly":
        """Partial derivative along x, u, px, py, or y.

        The y-derivative is the chain rule through u: a monomial u^n maps
        to (n/3) u^(n-3), which keeps the result inside the ring.
        """
        out: dict[Monomial, ParamPoly] = {}
        for m, c in self.terms.items():
            if var == "x":
                if m.ex == 0:
                    continue
                key, factor = m._replace(ex=m.ex - 1), Fraction(m.ex)
            elif var == "u":
                if m.eu == 0:
                    continue
                key, factor = m._replace(eu=m.eu - 1), Fraction(m.eu)
            elif var == "y":
                if m.eu == 0:
                    continue
                key, factor = m._replace(eu=m.eu - 3), Fraction(m.eu, 3)
            elif var == "px":
                if m.epx == 0:
                    continue
                key, factor = m._replace(epx=m.epx - 1), Fraction(m.epx)
            elif var == "py":
                if m.epy == 0:
                    continue
                key, factor = m._replace(epy=m.epy - 1), Fraction(m.epy)
            else:
                raise ValueError(f"unknown direction {var!r}")
            acc = out.get(key, 0) + factor * c
            if acc.is_zero:
                out.pop(key, None)
            else:
                out[key] = acc
        return PhasePoly(out)

    def momentum_part(self, epx: int, epy: int) -> "PhasePoly":
        """Coefficient of px^epx * py^epy: matching terms with momenta stripped."""
        return PhasePoly({m._replace(epx=0, epy=0): c
                          for m, c in self.terms.items()
                          if m.epx == epx and m.epy == epy})

    def substitute_params(self, k1: Scalar | None = None, k2: Scalar | None = None,
                          k3: Scalar | None = None) -> "PhasePoly":
        """Exact parameter specialization; None leaves a parameter symbolic."""
        out: dict[Monomial, ParamPoly] = {}
        for m, c in self.terms.items():
            cc = c.substitute(k1=k1, k2=k2, k3=k3)
            if cc.is_zero:
                continue
            acc = out.get(m, 0) + cc
            if acc.is_zero:
                out.pop(m, None)
            else:
                out[m] = acc
        return PhasePoly(out)

    def compile(self, k1: float = 0.0, k2: float = 0.0, k3: float = 0.0) -> "CompiledPoly":
        """Freeze parameters to floats for fast repeated numeric evaluation."""
        terms = []
        for m, c in self.terms.items():
            value = c.float_at(k1, k2, k3)
            if value != 0.0:
                terms.append((value, m.ex, m.eu, m.epx, m.epy))
        terms.sort(key=lambda t: t[1:])
        return CompiledPoly(tuple(terms))

    def evaluate(self, x: float, y: float, px: float, py: float, *,
                 k1: float = 0.0, k2: float = 0.0, k3: float = 0.0) -> float:
        """Double-precision value at a phase-space point with y > 0."""
        return self.compile(k1, k2, k3)(x, y, px, py)

    def render(self) -> str:
        """Canonical text form; deterministic and parseable.

        Terms are sorted momentum-first (epx, epy, ex, eu descending), and a
        multi-term parameter coefficient is flattened into one rendered term
        per parameter monomial so the output stays inside the grammar.
        """
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=Monomial.sort_key, reverse=True):
            coeff = self.terms[m]
            extra = (("x", m.ex), ("u", m.eu), ("px", m.epx), ("py", m.epy))
            for triple in sorted(coeff.terms, reverse=True):
                pieces.append(_term_text(coeff.terms[triple], triple, extra))
        return _join_signed(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PhasePoly({self.render()!r})"


class CompiledPoly:
    """Parameter-frozen polynomial, evaluated in double precision."""

    __slots__ = ("terms",)

    def __init__(self, terms: tuple[tuple[float, int, int, int, int], ...]):
        self.terms = terms

    def __call__(self, x: float, y: float, px: float, py: float) -> float:
        if y <= 0.0:
            raise DomainError(f"evaluation requires y > 0, got y = {y}")
        u = y ** (1.0 / 3.0)
        total = 0.0
        for c, ex, eu, epx, epy in self.terms:
            total += c * x**ex * u**eu * px**epx * py**epy
        return total


# generators for building expressions algebraically
X = PhasePoly.monomial(ex=1)
U = PhasePoly.monomial(eu=1)
Y = PhasePoly.monomial(eu=3)
PX = PhasePoly.monomial(epx=1)
PY = PhasePoly.monomial(epy=1)


def upow(n: int) -> PhasePoly:
    """The Laurent monomial u^n (n may be negative)."""
    return PhasePoly.monomial(eu=n)


def poisson_bracket(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    """{f, g} = f_x g_px + f_y g_py - f_px g_x - f_py g_y, exactly."""
    return (f.diff("x") * g.diff("px") + f.diff("y") * g.diff("py")
            - f.diff("px") * g.diff("x") - f.diff("py") * g.diff("y"))


@dataclass(frozen=True)
class VectorField:
    """Flow components along x, y, px, py."""

    cx: PhasePoly
    cy: PhasePoly
    cpx: PhasePoly
    cpy: PhasePoly

    @property
    def is_zero(self) -> bool:
        return (self.cx.is_zero and self.cy.is_zero
                and self.cpx.is_zero and self.cpy.is_zero)

    @property
    def momentum_order(self) -> int:
        return max(c.momentum_order for c in self.components())

    def components(self) -> tuple[PhasePoly, PhasePoly, PhasePoly, PhasePoly]:
        return (self.cx, self.cy, self.cpx, self.cpy)

    def apply(self, f: PhasePoly) -> PhasePoly:
        """Directional derivative of f along the field (y via the u chain rule)."""
        return (self.cx * f.diff("x") + self.cy * f.diff("y")
                + self.cpx * f.diff("px") + self.cpy * f.diff("py"))

    def __add__(self, other: "VectorField") -> "VectorField":
        if not isinstance(other, VectorField):
            return NotImplemented
        return VectorField(self.cx + other.cx, self.cy + other.cy,
                           self.cpx + other.cpx, self.cpy + other.cpy)

    def __sub__(self, other: "VectorField") -> "VectorField":
        if not isinstance(other, VectorField):
            return NotImplemented
        return VectorField(self.cx - other.cx, self.cy - other.cy,
                           self.cpx - other.cpx, self.cpy - other.cpy)

    def __neg__(self) -> "VectorField":
        return VectorField(-self.cx, -self.cy, -self.cpx, -self.cpy)

    def __mul__(self, scalar) -> "VectorField":
        if not isinstance(scalar, (PhasePoly, ParamPoly, int, Fraction)):
            return NotImplemented
        return VectorField(self.cx * scalar, self.cy * scalar,
                           self.cpx * scalar, self.cpy * scalar)

    __rmul__ = __mul__

    def render(self) -> str:
        names = ("dx/dt", "dy/dt", "dpx/dt", "dpy/dt")
        return "; ".join(f"{n} = {c.render()}" for n, c in zip(names, self.components()))

    def __str__(self) -> str:
        return self.render()


ZERO_FIELD = VectorField(PhasePoly.zero(), PhasePoly.zero(),
                         PhasePoly.zero(), PhasePoly.zero())


def hamiltonian_vf(f: PhasePoly) -> VectorField:
    """Hamiltonian vector field (f_px, f_py, -f_x, -f_y).

    Applying the field of g to f reproduces poisson_bracket(f, g), so the
    sign couples to the bracket convention in the module docstring.
    """
    return VectorField(f.diff("px"), f.diff("py"), -f.diff("x"), -f.diff("y"))


def vf_commutator(a: VectorField, b: VectorField) -> VectorField:
    """[a, b], componentwise a(b_i) - b(a_i)."""
    return VectorField(a.apply(b.cx) - b.apply(a.cx),
                       a.apply(b.cy) - b.apply(a.cy),
                       a.apply(b.cpx) - b.apply(a.cpx),
                       a.apply(b.cpy) - b.apply(a.cpy))
