"""The action of End(M)[X] on End(M) attached to a fixed endomorphism ``a``.

A matrix coefficient f acts by left multiplication, X acts by right
multiplication with ``a``; hence p = sum f_k X^k sends g to sum f_k g a^k.
"""

from __future__ import annotations

from .matrix import Matrix, identity
from .rings import RingMismatch
from .transport import MatPoly

__all__ = ["act", "right_subst", "left_subst", "t_of"]


def _check(p: MatPoly, *ms: Matrix):
    for m in ms:
        if m.ring is not p.ring:
            raise RingMismatch(f"{m.ring.desc} vs {p.ring.desc}")
        if m.dim != p.dim:
            raise ValueError(f"dimension mismatch: {m.dim} vs {p.dim}")


def act(p: MatPoly, g: Matrix, a: Matrix) -> Matrix:
    """p acting on g through a: f_0 g + f_1 g a + ... + f_k g a^k."""
    _check(p, g, a)
    acc = g.zeros_like()
    h = g
    for k, f in enumerate(p.coeffs):
        if k:
            h = h @ a
        if not f.is_zero():
            acc = acc + f @ h
    return acc


def right_subst(p: MatPoly, a: Matrix) -> Matrix:
    """f_0 + f_1 a + ... + f_k a^k, i.e. p acting on the identity."""
    return act(p, identity(p.ring, p.dim), a)


def left_subst(p: MatPoly, a: Matrix) -> Matrix:
    """f_0 + a f_1 + ... + a^k f_k."""
    _check(p, a)
    acc = a.zeros_like()
    power = a.identity_like()
    for k, f in enumerate(p.coeffs):
        if k:
            power = power @ a
        acc = acc + power @ f
    return acc


def t_of(a: Matrix) -> MatPoly:
    """a - X as an element of End(M)[X]: coefficients (a, -I)."""
    return MatPoly(a.ring, a.dim, [a, -a.identity_like()])
