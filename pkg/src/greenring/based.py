"""Finite-rank based rings given by integer structure constants.

A :class:`BasedRing` stores ``b_i b_j = sum_k N_ij^k b_k`` sparsely. On top of
it live the unit-coefficient bilinear form ``[x, y] = coefficient of the unit
in x y``, its integer radicals, the duality involution read off from that
form, Frobenius-Perron dimensions and the transitivity test for fusion rings.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import InitVar, dataclass, field, replace
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    ContextError,
    ConvergenceError,
    InvolutionError,
    PreconditionError,
    StructureError,
)
from .lattice import integer_kernel, transpose
from .presented import RingSpec, basis_product
from .report import Report

__all__ = [
    "BasedRing",
    "FormReport",
    "TransitivityReport",
    "based_from_presented",
    "unit_coeff_form",
    "gram",
    "gram_and_radicals",
    "detect_involution",
    "fpdim",
    "check_transitive",
    "structure_violations",
    "fusion_report",
    "thread_count",
]

EXHAUSTIVE_ASSOC_RANK = 64
SAMPLED_QUADRUPLES = 1000


def thread_count() -> int:
    """Worker cap from ``GREENRING_THREADS`` (``0`` or unset means auto)."""
    raw = os.environ.get("GREENRING_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


@dataclass(frozen=True)
class BasedRing:
    labels: tuple[str, ...]
    unit_index: int
    constants: Mapping[tuple[int, int], tuple[tuple[int, int], ...]]
    involution: tuple[int, ...] | None = None
    source: RingSpec | None = field(default=None, compare=False)
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        object.__setattr__(self, "labels", tuple(self.labels))
        cleaned = {}
        r = len(self.labels)
        for (i, j), terms in self.constants.items():
            if not (0 <= i < r and 0 <= j < r):
                raise StructureError(f"constant index ({i}, {j}) out of range for rank {r}")
            acc: dict[int, int] = {}
            for k, c in terms:
                if not 0 <= k < r:
                    raise StructureError(f"constant target {k} out of range for rank {r}")
                if int(c) != c:
                    raise StructureError(f"structure constant {c} is not an integer")
                acc[k] = acc.get(k, 0) + int(c)
            acc = {k: c for k, c in sorted(acc.items()) if c}
            if acc:
                cleaned[(int(i), int(j))] = tuple(acc.items())
        object.__setattr__(self, "constants", cleaned)
        if not 0 <= self.unit_index < r:
            raise StructureError(f"unit index {self.unit_index} out of range")
        if self.involution is not None:
            object.__setattr__(self, "involution", tuple(int(s) for s in self.involution))
        if validate:
            problems = structure_violations(self)
            if problems:
                raise StructureError("; ".join(problems))

    @property
    def rank(self) -> int:
        return len(self.labels)

    @cached_property
    def tensor(self) -> np.ndarray:
        """Dense ``N[i, j, k]`` as int64."""
        r = self.rank
        t = np.zeros((r, r, r), dtype=np.int64)
        for (i, j), terms in self.constants.items():
            for k, c in terms:
                t[i, j, k] = c
        return t

    def product(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        return self.constants.get((i, j), ())

    def multiply(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        """Exact product of two coordinate vectors."""
        if len(x) != self.rank or len(y) != self.rank:
            raise ContextError(f"vectors must have length {self.rank}")
        out = [0] * self.rank
        xs = [(i, c) for i, c in enumerate(x) if c]
        ys = [(j, c) for j, c in enumerate(y) if c]
        for i, a in xs:
            for j, b in ys:
                for k, n in self.constants.get((i, j), ()):
                    out[k] += a * b * n
        return out

    def basis_vector(self, i: int) -> list[int]:
        v = [0] * self.rank
        v[i] = 1
        return v

    def left_matrix(self, i: int) -> np.ndarray:
        """Matrix of left multiplication by ``b_i``: column ``j`` holds ``b_i b_j``."""
        return self.tensor[i].T.astype(float)

    def with_involution(self, sigma: Sequence[int]) -> BasedRing:
        sigma = tuple(int(s) for s in sigma)
        if sorted(sigma) != list(range(self.rank)):
            raise InvolutionError("involution is not a permutation of the basis")
        if any(sigma[s] != i for i, s in enumerate(sigma)):
            raise InvolutionError("involution does not square to the identity")
        return replace(self, involution=sigma, validate=False)


def structure_violations(r: BasedRing, *, seed: int = 0) -> list[str]:
    """Unit, associativity and involution problems, as messages."""
    problems = []
    u, rank = r.unit_index, r.rank
    for j in range(rank):
        for name, prod in (("left", r.product(u, j)), ("right", r.product(j, u))):
            if prod != ((j, 1),):
                problems.append(f"unit fails on the {name} for {r.labels[j]}")
    bad = _associativity_failure(r, seed)
    if bad is not None:
        problems.append("associativity fails at (%s, %s, %s)" % tuple(r.labels[i] for i in bad))
    if r.involution is not None:
        sigma = r.involution
        if sorted(sigma) != list(range(rank)) or any(sigma[s] != i for i, s in enumerate(sigma)):
            problems.append("involution is not an order-two permutation")
    return problems


def _associativity_failure(r: BasedRing, seed: int):
    rank = r.rank
    if rank <= EXHAUSTIVE_ASSOC_RANK:
        t = r.tensor
        bound = float(np.abs(t).max(initial=0)) ** 2 * rank
        if bound < 2.0 ** 52:
            tf = t.astype(float)
            lhs = np.einsum("ijt,tkl->ijkl", tf, tf, optimize=True)
            rhs = np.einsum("jkt,itl->ijkl", tf, tf, optimize=True)
            diff = np.argwhere(lhs != rhs)
            return tuple(diff[0][:3]) if len(diff) else None
        triples = [(i, j, k) for i in range(rank) for j in range(rank) for k in range(rank)]
    else:
        rng = random.Random(seed)
        triples = [tuple(rng.randrange(rank) for _ in range(3)) for _ in range(SAMPLED_QUADRUPLES)]
    for i, j, k in triples:
        bi, bj, bk = (r.basis_vector(a) for a in (i, j, k))
        if r.multiply(r.multiply(bi, bj), bk) != r.multiply(bi, r.multiply(bj, bk)):
            return (i, j, k)
    return None


def based_from_presented(spec: RingSpec, *, involution: bool = True) -> BasedRing:
    """Structure constants of a presented ring over its normal-form basis.

    The duality involution is attached when the unit-coefficient form
    determines one.
    """
    constants = {
        (i, j): basis_product(spec, i, j) for i in range(spec.rank) for j in range(spec.rank)
    }
    ring = BasedRing(tuple(spec.labels), 0, constants, source=spec)
    if involution:
        try:
            ring = ring.with_involution(detect_involution(ring))
        except InvolutionError:
            pass
    return ring


# -- bilinear form -------------------------------------------------------------


def unit_coeff_form(r: BasedRing, x: Sequence[int], y: Sequence[int]) -> int:
    """Coefficient of the unit in ``x y``."""
    return r.multiply(x, y)[r.unit_index]


def gram(r: BasedRing) -> list[list[int]]:
    g = [[0] * r.rank for _ in range(r.rank)]
    u = r.unit_index
    for (i, j), terms in r.constants.items():
        for k, c in terms:
            if k == u:
                g[i][j] = c
    return g


@dataclass(frozen=True)
class FormReport:
    gram: list[list[int]]
    left_radical: list[list[int]]
    right_radical: list[list[int]]

    @property
    def nondegenerate(self) -> bool:
        return not self.left_radical and not self.right_radical

    def to_dict(self, labels: Sequence[str] | None = None) -> dict:
        out = {}
        if labels is not None:
            out["labels"] = list(labels)
        out.update(
            gram=self.gram,
            left_radical=self.left_radical,
            right_radical=self.right_radical,
            nondegenerate=self.nondegenerate,
        )
        return out


def gram_and_radicals(r: BasedRing) -> FormReport:
    """Gram matrix of the unit-coefficient form and its saturated radicals.

    Left radical: ``v^T G = 0``. Right radical: ``G v = 0``.
    """
    g = gram(r)
    return FormReport(g, integer_kernel(transpose(g), r.rank), integer_kernel(g, r.rank))


def detect_involution(r: BasedRing) -> tuple[int, ...]:
    """The permutation ``i -> i*`` with ``N_{i, i*}^unit = 1``.

    Each row of the Gram matrix must contain exactly one nonzero entry, equal
    to one.
    """
    g = gram(r)
    sigma = []
    for i, row in enumerate(g):
        hits = [j for j, c in enumerate(row) if c]
        if len(hits) != 1:
            raise InvolutionError(
                f"{r.labels[i]} pairs with {len(hits)} basis elements to the unit"
            )
        if row[hits[0]] != 1:
            raise InvolutionError(
                f"unit multiplicity {row[hits[0]]} in {r.labels[i]} * {r.labels[hits[0]]}"
            )
        sigma.append(hits[0])
    if any(sigma[s] != i for i, s in enumerate(sigma)):
        raise InvolutionError("duality map does not square to the identity")
    return tuple(sigma)


# -- Frobenius-Perron dimension ------------------------------------------------


def _perron_root(m: np.ndarray, rtol: float, max_iter: int) -> float:
    # Shift by the identity so periodic nonnegative matrices still converge.
    a = m + np.eye(len(m))
    v = np.ones(len(m))
    v /= np.linalg.norm(v)
    prev = None
    for it in range(1, max_iter + 1):
        w = a @ v
        lam = float(v @ w)
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        v = w / norm
        if prev is not None and abs(lam - prev) < rtol:
            return lam - 1.0
        prev = lam
    raise ConvergenceError(f"power iteration did not converge in {max_iter} iterations", max_iter)


def fpdim(r: BasedRing, tol: float = 1e-9, *, rtol: float = 1e-12,
          max_iter: int = 100_000) -> np.ndarray:
    """Frobenius-Perron dimension of every basis element.

    Each value is the dominant eigenvalue of the left multiplication matrix,
    found by power iteration from the all-ones vector. ``tol`` is the slack
    callers apply to the lower bound ``FPdim >= 1``; see :func:`fusion_report`.
    """
    if (r.tensor < 0).any():
        raise PreconditionError("FPdim needs nonnegative structure constants")
    workers = min(thread_count(), r.rank)

    def one(i):
        return _perron_root(r.left_matrix(i), rtol, max_iter)

    if workers > 1 and r.rank > 8:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(one, range(r.rank)))
    else:
        values = [one(i) for i in range(r.rank)]
    return np.array(values)


# -- transitivity --------------------------------------------------------------


@dataclass(frozen=True)
class TransitivityReport:
    transitive: bool
    failing: tuple[int, int] | None = None
    side: str | None = None

    def __bool__(self):
        return self.transitive


def check_transitive(r: BasedRing) -> TransitivityReport:
    """For all ``i, j``: some ``b_j b_k`` and some ``b_l b_j`` contain ``b_i``."""
    t = r.tensor > 0
    right = t.any(axis=1)  # right[j, i]: exists k with N_jk^i > 0
    left = t.any(axis=0)  # left[j, i]: exists l with N_lj^i > 0
    for name, ok in (("right", right), ("left", left)):
        bad = np.argwhere(~ok)
        if len(bad):
            j, i = (int(v) for v in bad[0])
            return TransitivityReport(False, (i, j), name)
    return TransitivityReport(True)


# -- fusion verification -------------------------------------------------------


def fusion_report(r: BasedRing, tol: float = 1e-9) -> Report:
    """Check that ``r`` is a transitive fusion ring with a non-degenerate form."""
    rep = Report("fusion")
    problems = structure_violations(r)
    rep.add("structure", not problems, detail="; ".join(problems))
    nonneg = not (r.tensor < 0).any()
    rep.add("nonnegative", nonneg)
    form = gram_and_radicals(r)
    rep.add("form_nondegenerate", form.nondegenerate,
            detail=f"left radical rank {len(form.left_radical)}, right radical rank {len(form.right_radical)}")
    sigma = r.involution
    try:
        detected = detect_involution(r)
        rep.add("involution", sigma is None or tuple(sigma) == detected)
        sigma = detected
    except InvolutionError as exc:
        rep.add("involution", False, detail=str(exc))
        sigma = None
    if nonneg:
        tr = check_transitive(r)
        detail = "" if tr else f"{tr.side} witness missing for ({r.labels[tr.failing[0]]}, {r.labels[tr.failing[1]]})"
        rep.add("transitive", tr.transitive, detail=detail)
        try:
            dims = fpdim(r, tol)
        except ConvergenceError as exc:
            rep.add("fpdim_converged", False, detail=str(exc))
            return rep
        rep.residual_check("fpdim_lower_bound", max(0.0, float(1.0 - dims.min())), tol)
        rep.residual_check("fpdim_multiplicative", fpdim_multiplicativity_residual(r, dims), max(tol, 1e-8))
        if sigma is not None:
            rep.residual_check("fpdim_duality", float(np.abs(dims - dims[list(sigma)]).max()), tol)
    return rep


def fpdim_multiplicativity_residual(r: BasedRing, dims: np.ndarray) -> float:
    """``max |FPdim(b_i b_j) - FPdim_i FPdim_j|`` over all pairs."""
    prod = np.einsum("ijk,k->ij", r.tensor.astype(float), dims)
    return float(np.abs(prod - np.outer(dims, dims)).max())
