"""Moving between End(M)[X] and End_{R[X]}(M[X]).

A :class:`MatPoly` is a polynomial whose coefficients are matrices (X is
central, coefficients multiply noncommutatively). A "polymat" is a plain
:class:`~cayley.matrix.Matrix` over ``PolyRing(base, 1)``. The two maps here
are mutually inverse ring isomorphisms.
"""

from __future__ import annotations

import random

from .matrix import Matrix, identity, random_matrix, zero
from .poly import Poly
from .rings import PolyRing, Ring, RingMismatch, as_ring, make_ring

__all__ = [
    "MatPoly",
    "to_polymat",
    "to_matpoly",
    "matpoly_add",
    "matpoly_sub",
    "matpoly_mul",
    "matpoly_scalar",
    "random_matpoly",
]


class MatPoly:
    """f_0 + f_1 X + ... + f_k X^k with square-matrix coefficients, trailing zeros trimmed."""

    __slots__ = ("ring", "dim", "coeffs")

    def __init__(self, ring, dim: int, coeffs=()):
        ring = as_ring(ring)
        coeffs = list(coeffs)
        for f in coeffs:
            if f.ring is not ring:
                raise RingMismatch(f"coefficient over {f.ring.desc} in MatPoly over {ring.desc}")
            if f.dim != dim:
                raise ValueError(f"coefficient of dimension {f.dim} in MatPoly of dimension {dim}")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring, self.dim, self.coeffs = ring, dim, tuple(coeffs)

    @classmethod
    def unit(cls, ring, dim: int) -> MatPoly:
        return cls(ring, dim, [identity(ring, dim)])

    @classmethod
    def x(cls, ring, dim: int) -> MatPoly:
        return cls(ring, dim, [zero(ring, dim), identity(ring, dim)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Matrix:
        return self.coeffs[k] if k < len(self.coeffs) else zero(self.ring, self.dim)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: MatPoly) -> MatPoly:
        return matpoly_add(self, other)

    def __sub__(self, other: MatPoly) -> MatPoly:
        return matpoly_sub(self, other)

    def __mul__(self, other: MatPoly) -> MatPoly:
        return matpoly_mul(self, other)

    def __neg__(self) -> MatPoly:
        return MatPoly(self.ring, self.dim, [-f for f in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        return self.ring is other.ring and self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.desc, self.dim, self.coeffs))

    def __repr__(self):
        return f"MatPoly({self.ring.desc}, dim={self.dim}, {list(self.coeffs)!r})"


def _check(p: MatPoly, q: MatPoly):
    if p.ring is not q.ring:
        raise RingMismatch(f"{p.ring.desc} vs {q.ring.desc}")
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")


def matpoly_add(p: MatPoly, q: MatPoly) -> MatPoly:
    _check(p, q)
    k = max(len(p.coeffs), len(q.coeffs))
    return MatPoly(p.ring, p.dim, [p.coefficient(i) + q.coefficient(i) for i in range(k)])


def matpoly_sub(p: MatPoly, q: MatPoly) -> MatPoly:
    _check(p, q)
    k = max(len(p.coeffs), len(q.coeffs))
    return MatPoly(p.ring, p.dim, [p.coefficient(i) - q.coefficient(i) for i in range(k)])


def matpoly_mul(p: MatPoly, q: MatPoly) -> MatPoly:
    """Cauchy product; f_i g_j keeps its order since matrices do not commute."""
    _check(p, q)
    if p.is_zero() or q.is_zero():
        return MatPoly(p.ring, p.dim)
    out = [zero(p.ring, p.dim)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, f in enumerate(p.coeffs):
        if f.is_zero():
            continue
        for j, g in enumerate(q.coeffs):
            out[i + j] = out[i + j] + f @ g
    return MatPoly(p.ring, p.dim, out)


def matpoly_scalar(chi: Poly, dim: int) -> MatPoly:
    """Lift a scalar polynomial c_0 + c_1 X + ... to c_0 I + c_1 I X + ..."""
    ring = chi.ring
    ident = identity(ring, dim)
    return MatPoly(ring, dim, [ident.scale(c) for c in chi.payload])


def to_polymat(p: MatPoly) -> Matrix:
    """Entry (i, j) of the result is sum_k (f_k)_ij X^k."""
    px = make_ring(PolyRing(p.ring.desc, 1))
    n = p.dim
    rows = tuple(
        tuple(px.canonical([f.rows[i][j] for f in p.coeffs]) for j in range(n))
        for i in range(n)
    )
    return Matrix._raw(px, rows)


def to_matpoly(m: Matrix) -> MatPoly:
    """Inverse of :func:`to_polymat` for a matrix over ``PolyRing(base, 1)``."""
    px = m.ring
    if px.desc.kind != "Poly" or px.desc.var_count != 1:
        raise RingMismatch(f"expected a matrix over a univariate polynomial ring, got {px.desc}")
    base: Ring = px.base
    n = m.dim
    k = max((len(x) for row in m.rows for x in row), default=0)
    coeffs = []
    for d in range(k):
        coeffs.append(
            Matrix._raw(
                base,
                tuple(
                    tuple(m.rows[i][j][d] if d < len(m.rows[i][j]) else base.zero for j in range(n))
                    for i in range(n)
                ),
            )
        )
    return MatPoly(base, n, coeffs)


def random_matpoly(ring, dim: int, max_degree: int, rng: random.Random) -> MatPoly:
    ring = as_ring(ring)
    deg = rng.randint(0, max_degree)
    return MatPoly(ring, dim, [random_matrix(ring, dim, rng) for _ in range(deg + 1)])
