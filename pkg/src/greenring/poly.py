"""Sparse multivariate polynomials with exact rational coefficients.

Variables are ``Y``, ``Z`` and ``X1 .. X{nx}``. The number ``nx`` of X
variables is the *context* of a polynomial; arithmetic between different
contexts is refused.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, NamedTuple

from .errors import ContextError, DomainError

__all__ = ["Monomial", "Poly", "format_coeff", "poly_add", "poly_mul", "poly_eval_yz"]


class Monomial(NamedTuple):
    y: int
    z: int
    x: tuple[int, ...] = ()

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(
            self.y + other.y,
            self.z + other.z,
            tuple(a + b for a, b in zip(self.x, other.x)),
        )

    @property
    def x_degree(self) -> int:
        return sum(self.x)

    def sort_key(self):
        return (self.x_degree, self.x, self.z, self.y)

    def render(self) -> str:
        parts = []
        for name, e in [("Y", self.y), ("Z", self.z)] + [
            (f"X{i + 1}", e) for i, e in enumerate(self.x)
        ]:
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


def format_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Poly:
    """Immutable polynomial in ``Y, Z, X1..X{nx}`` over the rationals.

    Two polynomials are equal iff their contexts and term maps agree; zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "_nx", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = (), nx: int = 0):
        if nx < 0:
            raise DomainError("nx must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, c in items:
            mono = Monomial(int(mono[0]), int(mono[1]), tuple(int(e) for e in mono[2]))
            if len(mono.x) != nx:
                raise ContextError(f"monomial {mono} does not have {nx} X exponents")
            if mono.y < 0 or mono.z < 0 or any(e < 0 for e in mono.x):
                raise DomainError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, Fraction(0)) + _coerce(c)
        self._terms = {m: c for m, c in acc.items() if c != 0}
        self._nx = nx
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c, nx: int = 0) -> Poly:
        return cls({Monomial(0, 0, (0,) * nx): c}, nx)

    @classmethod
    def zero(cls, nx: int = 0) -> Poly:
        return cls({}, nx)

    @classmethod
    def monomial(cls, y: int = 0, z: int = 0, x: Iterable[int] | None = None,
                 coeff=1, nx: int = 0) -> Poly:
        x = tuple(x) if x is not None else (0,) * nx
        return cls({Monomial(y, z, x): coeff}, len(x))

    @classmethod
    def Y(cls, nx: int = 0) -> Poly:
        return cls.monomial(y=1, nx=nx)

    @classmethod
    def Z(cls, nx: int = 0) -> Poly:
        return cls.monomial(z=1, nx=nx)

    @classmethod
    def X(cls, index: int, nx: int) -> Poly:
        if not 1 <= index <= nx:
            raise ContextError(f"X{index} is not a variable when nx={nx}")
        x = [0] * nx
        x[index - 1] = 1
        return cls.monomial(x=x)

    # -- accessors ----------------------------------------------------------

    @property
    def nx(self) -> int:
        return self._nx

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (descending) order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def z_degree(self) -> int | None:
        if not self._terms:
            return None
        return max(m.z for m in self._terms)

    def total_degree(self) -> int | None:
        if not self._terms:
            return None
        return max(m.y + m.z + m.x_degree for m in self._terms)

    def has_x(self) -> bool:
        return any(m.x_degree for m in self._terms)

    def normalize(self) -> Poly:
        return Poly(self._terms, self._nx)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other._nx != self._nx:
                raise ContextError(
                    f"variable context mismatch: nx={self._nx} vs nx={other._nx}"
                )
            return other
        return Poly.const(_coerce(other), self._nx)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Poly(acc, self._nx)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()}, self._nx)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return Poly(acc, self._nx)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result = Poly.const(1, self._nx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> Poly:
        c = _coerce(c)
        return Poly({m: c * v for m, v in self._terms.items()}, self._nx)

    # -- evaluation and substitution ---------------------------------------

    def eval_yz(self, y, z):
        """Substitute scalars for ``Y`` and ``Z``.

        Exact for rational inputs, floating for real inputs.
        """
        if self.has_x():
            raise DomainError("cannot evaluate a polynomial containing X variables")
        total = 0
        for m, c in self._terms.items():
            total += c * (y ** m.y) * (z ** m.z)
        return total

    def compose(self, y: Poly, z: Poly, xs: Iterable[Poly] = ()) -> Poly:
        """Ring substitution of polynomials for the variables.

        All images must share one target context.
        """
        xs = tuple(xs)
        if len(xs) != self._nx:
            raise ContextError(f"need {self._nx} X images, got {len(xs)}")
        images = (y, z) + xs
        nx = y.nx
        if any(p.nx != nx for p in images):
            raise ContextError("substitution images live in different contexts")
        cache: dict[tuple[int, int], Poly] = {}

        def power(slot: int, e: int) -> Poly:
            key = (slot, e)
            if key not in cache:
                cache[key] = images[slot] ** e
            return cache[key]

        result = Poly.zero(nx)
        for m, c in self._terms.items():
            term = Poly.const(c, nx)
            for slot, e in enumerate((m.y, m.z) + m.x):
                if e:
                    term = term * power(slot, e)
            result = result + term
        return result

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._nx == other._nx and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other, self._nx)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nx, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = m.render()
            if not body:
                text = format_coeff(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_coeff(mag)}*{body}"
            if i == 0:
                out.append(f"-{text}" if sign == "-" else text)
            else:
                out.append(f" {sign} {text}")
        return "".join(out)

    def __repr__(self):
        return f"Poly({str(self)!r}, nx={self._nx})"


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_eval_yz(p: Poly, y, z):
    return p.eval_yz(y, z)
