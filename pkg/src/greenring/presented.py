"""Presented Green rings of the Radford Hopf algebra.

Three rings are modelled, each as a quotient of a polynomial ring with an
explicit normal-form basis:

* ``RADFORD``: ``Z[Y, Z, X1..X{m-1}]`` modulo ``Y^n - 1``,
  ``(1+Y-Z) F_n``, ``Y X1 - X1``, ``Z X1 - 2 X1``, ``X1^j - n^(j-1) Xj`` and
  ``X1^m - n^(m-2) (1+Y+...+Y^(n-1)) F_n``. With ``m = 1`` this is the Green
  ring of the Taft algebra.
* ``GROTHENDIECK``: ``Z[Y, X1..X{m-1}]`` modulo ``Y^n - 1``, ``Y X1 - X1``,
  ``X1^j - n^(j-1) Xj`` and ``X1^m - n^(m-1) (1+Y+...+Y^(n-1))``.
* ``STABLE``: ``Z[Y, Z]`` modulo ``Y^n - 1`` and ``F_n``, written in the basis
  ``y^i F_j`` (``0 <= i < n``, ``1 <= j < n``).

Reduction uses dedicated rewrite rules rather than a Groebner engine: ``Y``
exponents are taken mod ``n``, high ``Z`` powers are replaced through a
monic relation in ``Z``, and every X monomial is rewritten as a scaled power
of ``X1``. Coefficients are rational during rewriting; every public result is
checked to be integral.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Union

from .dickson import dickson_f, inverse_coefficient
from .errors import ContextError, DomainError, IntegralityError, PresentationError
from .poly import Poly

__all__ = [
    "RingKind",
    "Mono",
    "XGen",
    "StableF",
    "RingSpec",
    "RingElement",
    "make_ring",
    "reduce",
    "ring_mul",
    "stable_mul_closed",
    "to_f_basis",
    "to_monomial_basis",
    "from_monomial_coords",
    "stable_projection",
    "grothendieck_projection",
    "projective_kernel_basis",
    "defining_relations",
]


class RingKind(str, enum.Enum):
    RADFORD = "radford"
    GROTHENDIECK = "grothendieck"
    STABLE = "stable"


def _power_text(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


@dataclass(frozen=True, order=True)
class Mono:
    """Normal-form monomial ``Y^y Z^z``."""

    y: int
    z: int

    def __str__(self):
        parts = [p for p in (_power_text("Y", self.y), _power_text("Z", self.z)) if p]
        return "*".join(parts) or "1"


@dataclass(frozen=True, order=True)
class XGen:
    index: int

    def __str__(self):
        return f"X{self.index}"


@dataclass(frozen=True, order=True)
class StableF:
    """Stable basis element ``y^y F_f(y, z)``."""

    y: int
    f: int

    def __str__(self):
        head = _power_text("y", self.y)
        return f"{head}*F_{self.f}" if head else f"F_{self.f}"


Label = Union[Mono, XGen, StableF]


@dataclass(frozen=True)
class RingSpec:
    kind: RingKind
    n: int
    m: int = 1

    def __post_init__(self):
        if not isinstance(self.kind, RingKind):
            object.__setattr__(self, "kind", RingKind(self.kind))
        if self.n < 2:
            raise DomainError(f"n must be >= 2, got {self.n}")
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        if self.kind is RingKind.STABLE and self.m != 1:
            object.__setattr__(self, "m", 1)
        # Derived rewrites rely on F_n(1, 2) = n; check it rather than assume it.
        if dickson_f(self.n).eval_yz(1, 2) != self.n:
            raise PresentationError(f"F_{self.n}(1, 2) != {self.n}")

    @property
    def nx(self) -> int:
        """Number of X variables in the polynomial context."""
        return 0 if self.kind is RingKind.STABLE else self.m - 1

    @property
    def is_taft(self) -> bool:
        return self.kind is RingKind.RADFORD and self.m == 1

    @cached_property
    def basis(self) -> tuple[Label, ...]:
        n, m = self.n, self.m
        if self.kind is RingKind.STABLE:
            return tuple(StableF(i, j) for j in range(1, n) for i in range(n))
        zs = range(n) if self.kind is RingKind.RADFORD else range(1)
        monos = [Mono(y, z) for z in zs for y in range(n)]
        return tuple(monos) + tuple(XGen(k) for k in range(1, m))

    @cached_property
    def index(self) -> dict[Label, int]:
        return {b: i for i, b in enumerate(self.basis)}

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def labels(self) -> list[str]:
        return [str(b) for b in self.basis]

    def describe(self) -> str:
        if self.kind is RingKind.STABLE:
            return f"stable(n={self.n})"
        if self.is_taft:
            return f"taft(n={self.n})"
        return f"{self.kind.value}(n={self.n}, m={self.m})"

    # -- element constructors ----------------------------------------------

    def zero(self) -> RingElement:
        return RingElement(self, (0,) * self.rank)

    def one(self) -> RingElement:
        return self.basis_element(0)

    def basis_element(self, label: Label | int) -> RingElement:
        i = label if isinstance(label, int) else self.index[label]
        vec = [0] * self.rank
        vec[i] = 1
        return RingElement(self, tuple(vec))

    def element(self, coeffs: Mapping[Label, object]) -> RingElement:
        vec = [Fraction(0)] * self.rank
        for label, c in coeffs.items():
            if label not in self.index:
                raise ContextError(f"{label} is not a basis label of {self.describe()}")
            vec[self.index[label]] += Fraction(c)
        return RingElement(self, _integral(vec, self))

    def from_vector(self, vec: Iterable[int]) -> RingElement:
        vec = tuple(vec)
        if len(vec) != self.rank:
            raise ContextError(f"vector of length {len(vec)} for rank {self.rank}")
        return RingElement(self, _integral(vec, self))

    def representative(self, label: Label) -> Poly:
        """Polynomial lifting a basis label."""
        nx = self.nx
        if isinstance(label, Mono):
            return Poly.monomial(y=label.y, z=label.z, nx=nx)
        if isinstance(label, XGen):
            return Poly.X(label.index, nx)
        return Poly.monomial(y=label.y) * dickson_f(label.f)


def _integral(values, spec) -> tuple[int, ...]:
    out = []
    for v in values:
        v = Fraction(v)
        if v.denominator != 1:
            raise IntegralityError(f"non-integral coefficient {v} in {spec.describe()}")
        out.append(v.numerator)
    return tuple(out)


@dataclass(frozen=True)
class RingElement:
    """Integer coordinate vector over the normal-form basis of ``spec``."""

    spec: RingSpec
    vec: tuple[int, ...] = field(repr=False)

    @property
    def coeffs(self) -> dict[Label, int]:
        return {b: c for b, c in zip(self.spec.basis, self.vec) if c}

    def is_zero(self) -> bool:
        return not any(self.vec)

    def _check(self, other: RingElement):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.spec != self.spec:
            raise ContextError(
                f"elements of {self.spec.describe()} and {other.spec.describe()} do not mix"
            )
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = self.spec.one() * other
        other = self._check(other)
        return RingElement(self.spec, tuple(a + b for a, b in zip(self.vec, other.vec)))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.spec, tuple(-a for a in self.vec))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.spec, tuple(a * other for a in self.vec))
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result, base = self.spec.one(), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def to_poly(self) -> Poly:
        acc = Poly.zero(self.spec.nx)
        for label, c in self.coeffs.items():
            acc = acc + self.spec.representative(label).scale(c)
        return acc

    def __str__(self):
        if self.spec.kind is not RingKind.STABLE:
            return str(self.to_poly())
        return render_terms(
            (str(label), c) for label, c in reversed(list(self.coeffs.items()))
        )


def render_terms(terms: Iterable[tuple[str, int]]) -> str:
    """Render ``coeff*label`` terms, folding signs and unit coefficients."""
    out = []
    for name, c in terms:
        mag = abs(c)
        if name == "1":
            text = str(mag)
        else:
            text = name if mag == 1 else f"{mag}*{name}"
        if not out:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f" {'-' if c < 0 else '+'} {text}")
    return "".join(out) or "0"


def make_ring(kind: RingKind | str, n: int, m: int = 1) -> RingSpec:
    """Validated ring specification; ``kind='taft'`` means RADFORD with m=1."""
    if kind == "taft":
        kind, m = RingKind.RADFORD, 1
    try:
        kind = RingKind(kind)
    except ValueError:
        raise DomainError(f"unknown ring kind {kind!r}") from None
    return RingSpec(kind, n, m)


# -- reduction ---------------------------------------------------------------


def _ysum(n: int) -> Poly:
    return Poly({(i, 0, ()): 1 for i in range(n)})


def _yz_dict(p: Poly, n: int) -> dict[tuple[int, int], Fraction]:
    acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for mono, c in p.terms.items():
        acc[(mono.y % n, mono.z)] += c
    return acc


@lru_cache(maxsize=None)
def _z_modulus(kind: RingKind, n: int) -> tuple[int, dict[tuple[int, int], Fraction]]:
    """``(d, r)`` with ``Z^d == r`` and ``r`` of Z-degree below ``d``."""
    if kind is RingKind.RADFORD:
        # (1+Y-Z) F_n has leading term -Z^n.
        zn = Poly.monomial(z=n)
        rel = (Poly.const(1) + Poly.Y() - Poly.Z()) * dickson_f(n)
        return n, dict(_yz_dict(zn + rel, n))
    # F_n is monic of Z-degree n-1.
    zd = Poly.monomial(z=n - 1)
    return n - 1, dict(_yz_dict(zd - dickson_f(n), n))


class _ZPowers:
    """Lazily extended table of normal forms of ``Z^b``."""

    def __init__(self, kind: RingKind, n: int):
        self.n = n
        self.d, self.rule = _z_modulus(kind, n)
        self.table: list[dict[tuple[int, int], Fraction]] = [
            {(0, b): Fraction(1)} for b in range(self.d)
        ]

    def __getitem__(self, b: int) -> dict[tuple[int, int], Fraction]:
        n, d = self.n, self.d
        while len(self.table) <= b:
            acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
            for (a, c), v in self.table[-1].items():
                if c + 1 < d:
                    acc[(a, c + 1)] += v
                else:
                    for (a2, c2), v2 in self.rule.items():
                        acc[((a + a2) % n, c2)] += v * v2
            self.table.append({k: v for k, v in acc.items() if v})
        return self.table[b]


@lru_cache(maxsize=None)
def _zpowers(kind: RingKind, n: int) -> _ZPowers:
    return _ZPowers(kind, n)


def _reduce_yz(kind: RingKind, n: int, acc: Mapping[tuple[int, int], Fraction]):
    if kind is RingKind.GROTHENDIECK:
        return {k: v for k, v in acc.items() if v}
    zp = _zpowers(kind, n)
    out: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for (a, b), c in acc.items():
        if not c:
            continue
        for (a2, b2), v in zp[b].items():
            out[((a + a2) % n, b2)] += c * v
    return {k: v for k, v in out.items() if v}


def _check_context(spec: RingSpec, p: Poly):
    if p.nx != spec.nx:
        raise ContextError(
            f"polynomial has {p.nx} X variables, {spec.describe()} expects {spec.nx}"
        )
    if spec.kind is RingKind.GROTHENDIECK and any(mono.z for mono in p.terms):
        raise ContextError("the Grothendieck ring has no Z variable")


def _reduce_x_part(spec: RingSpec, p: Poly):
    """Split ``p`` into a Y/Z part and X-generator coefficients."""
    n, m = spec.n, spec.m
    radford = spec.kind is RingKind.RADFORD
    fn12 = dickson_f(n).eval_yz(1, 2)
    if radford:
        top = dickson_f(n) * _ysum(n) * n ** (m - 2) if m >= 2 else None
        # X1^m * X1 = n^(m-2) (sum Y^i) F_n X1 = n^(m-2) * n * F_n(1,2) X1
        loop = Fraction(n) ** (m - 2) * n * fn12 if m >= 2 else None
    else:
        top = _ysum(n) * n ** (m - 1)
        loop = Fraction(n) ** (m - 1) * n
    yz: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    xs: dict[int, Fraction] = defaultdict(Fraction)
    for mono, c in p.terms.items():
        d = sum((j + 1) * e for j, e in enumerate(mono.x))
        if d == 0:
            yz[(mono.y % n, mono.z)] += c
            continue
        # Y X1 = X1, Z X1 = 2 X1, Xj = X1^j / n^(j-1)
        c = c * 2 ** mono.z / Fraction(n) ** sum(j * e for j, e in enumerate(mono.x))
        while d > m:
            c *= loop
            d -= m
        if d < m:
            xs[d] += c * n ** (d - 1)
        else:
            for (a, b), v in _yz_dict(top, n).items():
                yz[(a, b)] += c * v
    return yz, xs


def _reduce_monomial_coords(spec: RingSpec, p: Poly) -> dict[tuple[int, int], Fraction]:
    """Normal form of an X-free polynomial in the ``y^i z^j`` basis."""
    return _reduce_yz(spec.kind, spec.n, _yz_dict(p, spec.n))


def reduce(spec: RingSpec, p: Poly) -> RingElement:
    """Normal form of ``p`` in ``spec``."""
    _check_context(spec, p)
    if spec.kind is RingKind.STABLE:
        return from_monomial_coords(spec, _reduce_monomial_coords(spec, p))
    yz, xs = _reduce_x_part(spec, p)
    coeffs: dict[Label, Fraction] = {}
    for (a, b), v in _reduce_yz(spec.kind, spec.n, yz).items():
        coeffs[Mono(a, b)] = v
    for k, v in xs.items():
        if v:
            coeffs[XGen(k)] = v
    return spec.element(coeffs)


# -- multiplication ----------------------------------------------------------


def stable_mul_closed(n: int, a: tuple[int, int], b: tuple[int, int]) -> RingElement:
    """Product ``y^i F_j * y^k F_l`` in the stable ring by the closed formula.

    The sum runs over ``t`` from ``zeta(j, l)`` to ``min(j, l) - 1`` with
    ``zeta = 0`` when ``j + l - 1 < n`` and ``j + l - n`` otherwise.
    """
    (i, j), (k, l) = a, b
    for e, f in (a, b):
        if not (0 <= e < n and 1 <= f < n):
            raise DomainError(f"stable label (y^{e}, F_{f}) out of range for n={n}")
    zeta = 0 if j + l - 1 < n else j + l - n
    top = min(j, l) - 1
    assert zeta <= top, "empty stable product sum"
    spec = make_ring(RingKind.STABLE, n)
    return spec.element(
        {StableF((i + k + t) % n, j + l - 1 - 2 * t): 1 for t in range(zeta, top + 1)}
    )


@lru_cache(maxsize=None)
def _basis_products(spec: RingSpec) -> list[list[tuple[tuple[int, int], ...] | None]]:
    return [[None] * spec.rank for _ in range(spec.rank)]


def basis_product(spec: RingSpec, i: int, j: int) -> tuple[tuple[int, int], ...]:
    """Sparse product of basis elements ``i`` and ``j`` as ``(k, N)`` pairs."""
    table = _basis_products(spec)
    cached = table[i][j]
    if cached is None:
        bi, bj = spec.basis[i], spec.basis[j]
        if spec.kind is RingKind.STABLE:
            prod = stable_mul_closed(spec.n, (bi.y, bi.f), (bj.y, bj.f))
        else:
            prod = reduce(spec, spec.representative(bi) * spec.representative(bj))
        cached = tuple((k, c) for k, c in enumerate(prod.vec) if c)
        table[i][j] = cached
    return cached


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    if not isinstance(b, RingElement) or a.spec != b.spec:
        raise ContextError("ring_mul needs two elements of the same ring")
    spec = a.spec
    out = [0] * spec.rank
    for i, ca in enumerate(a.vec):
        if not ca:
            continue
        for j, cb in enumerate(b.vec):
            if not cb:
                continue
            for k, nk in basis_product(spec, i, j):
                out[k] += ca * cb * nk
    return RingElement(spec, tuple(out))


# -- stable basis conversion ------------------------------------------------


def _require_stable(spec: RingSpec):
    if spec.kind is not RingKind.STABLE:
        raise ContextError(f"{spec.describe()} is not a stable ring")


def _to_f_coeffs(n: int, i: int, j: int) -> dict[Label, int]:
    return {
        StableF((i + k) % n, j + 1 - 2 * k): inverse_coefficient(j, k)
        for k in range(j // 2 + 1)
    }


def to_f_basis(spec: RingSpec, i: int, j: int) -> RingElement:
    """``y^i z^j`` expressed in the ``y^k F_l`` basis."""
    _require_stable(spec)
    n = spec.n
    if not (0 <= i < n and 0 <= j <= n - 2):
        raise DomainError(f"y^{i} z^{j} is not a monomial basis label for n={n}")
    return spec.element(_to_f_coeffs(n, i, j))


def from_monomial_coords(spec: RingSpec, coords: Mapping[tuple[int, int], object]) -> RingElement:
    """Stable element from coordinates over ``{y^i z^j}``, ``j <= n-2``."""
    _require_stable(spec)
    n = spec.n
    acc: dict[Label, Fraction] = defaultdict(Fraction)
    for (i, j), c in coords.items():
        if not (0 <= j <= n - 2):
            raise DomainError(f"z exponent {j} is not reduced for n={n}")
        for label, v in _to_f_coeffs(n, i % n, j).items():
            acc[label] += Fraction(c) * v
    return spec.element(acc)


def to_monomial_basis(spec: RingSpec, e: RingElement) -> dict[tuple[int, int], int]:
    """Coordinates of a stable element over ``{y^i z^j}``."""
    _require_stable(spec)
    if e.spec != spec:
        raise ContextError("element does not belong to this ring")
    n = spec.n
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for label, c in e.coeffs.items():
        for mono, v in dickson_f(label.f).terms.items():
            acc[((label.y + mono.y) % n, mono.z)] += c * int(v)
    return {k: v for k, v in sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0])) if v}


# -- relations and projections ----------------------------------------------


def defining_relations(spec: RingSpec) -> list[Poly]:
    """Generators of the defining ideal, in the ring's polynomial context."""
    n, m, nx = spec.n, spec.m, spec.nx
    one, y = Poly.const(1, nx), Poly.Y(nx)
    ysum = sum((y ** i for i in range(n)), Poly.zero(nx))
    rels = [y ** n - one]
    if spec.kind is RingKind.STABLE:
        return rels + [dickson_f(n)]
    x = [Poly.X(k, nx) for k in range(1, m)]
    if spec.kind is RingKind.RADFORD:
        z = Poly.Z(nx)
        fn = dickson_f(n).compose(y, z, ()) if nx else dickson_f(n)
        rels.append((one + y - z) * fn)
        if m >= 2:
            rels += [y * x[0] - x[0], z * x[0] - 2 * x[0]]
            rels += [x[0] ** j - x[j - 1].scale(n ** (j - 1)) for j in range(1, m)]
            rels.append(x[0] ** m - (ysum * fn).scale(n ** (m - 2)))
        return rels
    if m >= 2:
        rels.append(y * x[0] - x[0])
        rels += [x[0] ** j - x[j - 1].scale(n ** (j - 1)) for j in range(1, m)]
        rels.append(x[0] ** m - ysum.scale(n ** (m - 1)))
    return rels


def _require_radford(a: RingElement):
    if a.spec.kind is not RingKind.RADFORD:
        raise ContextError(f"projection source must be a Radford Green ring, got {a.spec.describe()}")


@lru_cache(maxsize=None)
def _stable_images(n: int, m: int) -> tuple[RingSpec, tuple[RingElement, ...]]:
    src = make_ring(RingKind.RADFORD, n, m)
    dst = make_ring(RingKind.STABLE, n)
    nx = src.nx
    zero_x = [Poly.zero(0)] * nx
    y, z = Poly.Y(), Poly.Z()
    for rel in defining_relations(src):
        image = rel.compose(y, z, zero_x)
        if not reduce(dst, image).is_zero():
            raise PresentationError(f"stable projection does not kill relation {rel}")
    images = []
    for label in src.basis:
        if isinstance(label, XGen):
            images.append(dst.zero())
        else:
            images.append(reduce(dst, Poly.monomial(y=label.y, z=label.z)))
    return dst, tuple(images)


@lru_cache(maxsize=None)
def _grothendieck_images(n: int, m: int) -> tuple[RingSpec, tuple[RingElement, ...]]:
    src = make_ring(RingKind.RADFORD, n, m)
    dst = make_ring(RingKind.GROTHENDIECK, n, m)
    nx = src.nx
    y = Poly.Y(nx)
    z_image = Poly.const(1, nx) + y
    xs = [Poly.X(k, nx) for k in range(1, m)]
    for rel in defining_relations(src):
        if not reduce(dst, rel.compose(y, z_image, xs)).is_zero():
            raise PresentationError(f"Grothendieck projection does not kill relation {rel}")
    images = []
    for label in src.basis:
        images.append(reduce(dst, src.representative(label).compose(y, z_image, xs)))
    return dst, tuple(images)


def _apply_linear(dst: RingSpec, images, a: RingElement) -> RingElement:
    out = [0] * dst.rank
    for c, img in zip(a.vec, images):
        if c:
            for k, v in enumerate(img.vec):
                out[k] += c * v
    return RingElement(dst, tuple(out))


def stable_projection(a: RingElement) -> RingElement:
    """Ring map ``r(H) -> r_st(H)``: ``Y -> y``, ``Z -> z``, ``Xj -> 0``."""
    _require_radford(a)
    dst, images = _stable_images(a.spec.n, a.spec.m)
    return _apply_linear(dst, images, a)


def grothendieck_projection(a: RingElement) -> RingElement:
    """Ring map ``r(H) -> G_0(H)``: ``Y -> Y``, ``Z -> 1 + Y``, ``Xj -> Xj``."""
    _require_radford(a)
    dst, images = _grothendieck_images(a.spec.n, a.spec.m)
    return _apply_linear(dst, images, a)


def projection_matrix(spec: RingSpec, target: str = "stable") -> list[list[int]]:
    """Matrix of a projection (rows = target coordinates)."""
    if spec.kind is not RingKind.RADFORD:
        raise ContextError("projection source must be a Radford Green ring")
    images = (_stable_images if target == "stable" else _grothendieck_images)(spec.n, spec.m)[1]
    return [list(col) for col in zip(*(img.vec for img in images))]


def projective_kernel_basis(spec: RingSpec) -> list[RingElement]:
    """Integer basis of the kernel of :func:`stable_projection`.

    Normal forms of ``Y^i F_n`` for ``i < n`` followed by ``X1 .. X{m-1}``.
    """
    if spec.kind is not RingKind.RADFORD:
        raise ContextError("projective kernel is defined on the Radford Green ring")
    nx, n = spec.nx, spec.n
    y = Poly.Y(nx)
    fn = dickson_f(n).compose(y, Poly.Z(nx), ()) if nx else dickson_f(n)
    basis = [reduce(spec, y ** i * fn) for i in range(n)]
    basis += [spec.basis_element(XGen(k)) for k in range(1, spec.m)]
    return basis
