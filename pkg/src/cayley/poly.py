"""Univariate and multivariate polynomials over a ring from :mod:`cayley.rings`.

``Poly`` and ``MPoly`` are thin views over payloads of the polynomial rings
``PolyRing(base, 1)`` (dense tuple) and ``PolyRing(base, k)`` (sparse dict);
all arithmetic is delegated to those ring handles.
"""

from __future__ import annotations

from .rings import (
    PolyRing,
    Ring,
    RingElement,
    RingError,
    RingMismatch,
    as_ring,
    grlex_order,
    make_ring,
    sparse_poly_ring,
)

__all__ = [
    "NEG_INF",
    "NonCommutingArguments",
    "Poly",
    "MPoly",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_neg",
    "poly_degree",
    "poly_eval_scalar",
    "poly_eval_matrix",
    "mpoly_add",
    "mpoly_mul",
    "mpoly_var",
    "mpoly_eval_commuting",
]

# Degree of the zero polynomial.
NEG_INF = float("-inf")


class NonCommutingArguments(ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(f"arguments {i} and {j} do not commute; substitution is ill-defined")
        self.pair = (i, j)


class Poly:
    """Element of R[X]; ``payload`` is the trimmed dense coefficient tuple."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring, coeffs=()):
        ring = as_ring(ring)
        self.ring = ring
        self.payload = _uni(ring).canonical(list(coeffs))

    @classmethod
    def _raw(cls, ring: Ring, payload: tuple) -> Poly:
        p = object.__new__(cls)
        p.ring, p.payload = ring, payload
        return p

    @classmethod
    def x(cls, ring) -> Poly:
        ring = as_ring(ring)
        return cls._raw(ring, (ring.zero, ring.one))

    @classmethod
    def from_element(cls, e: RingElement) -> Poly:
        """View an element of ``PolyRing(base, 1)`` as a Poly over ``base``."""
        return cls._raw(e.ring.base, e.payload)

    def to_element(self) -> RingElement:
        return _uni(self.ring).element(self.payload)

    @property
    def coeffs(self) -> tuple[RingElement, ...]:
        return tuple(self.ring.element(c) for c in self.payload)

    def coefficient(self, k: int) -> RingElement:
        return self.ring.element(self.payload[k] if k < len(self.payload) else self.ring.zero)

    @property
    def degree(self):
        return poly_degree(self)

    def leading_coefficient(self) -> RingElement:
        return self.ring.element(self.payload[-1] if self.payload else self.ring.zero)

    def _other(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise RingMismatch(f"{self.ring.desc} vs {other.ring.desc}")
            return other.payload
        if isinstance(other, (int, RingElement)):
            return _uni(self.ring).canonical([other])
        return NotImplemented

    def __add__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return Poly._raw(self.ring, _uni(self.ring).add(self.payload, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return Poly._raw(self.ring, _uni(self.ring).sub(self.payload, y))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return Poly._raw(self.ring, _uni(self.ring).mul(self.payload, y))

    __rmul__ = __mul__

    def __neg__(self):
        return Poly._raw(self.ring, _uni(self.ring).neg(self.payload))

    def __pow__(self, k: int):
        return Poly._raw(self.ring, _uni(self.ring).pow(self.payload, k))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.payload == other.payload
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.desc, _uni(self.ring).hashable(self.payload)))

    def __call__(self, x):
        return poly_eval_scalar(self, x)

    def __str__(self):
        return _uni(self.ring).format(self.payload)

    def __repr__(self):
        return f"Poly({self.ring.desc}, {self})"


class MPoly:
    """Element of R[X1..Xk]; ``payload`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "var_count", "payload")

    def __init__(self, ring, var_count: int, terms=None):
        ring = as_ring(ring)
        self.ring, self.var_count = ring, var_count
        self.payload = _multi(ring, var_count).canonical(dict(terms or {}))

    @classmethod
    def _raw(cls, ring: Ring, var_count: int, payload: dict) -> MPoly:
        p = object.__new__(cls)
        p.ring, p.var_count, p.payload = ring, var_count, payload
        return p

    @classmethod
    def from_element(cls, e: RingElement) -> MPoly:
        """View an element of ``PolyRing(base, k)`` as an MPoly (also accepts k = 1)."""
        base, k = e.ring.base, e.ring.desc.var_count
        if not isinstance(e.payload, dict):
            return cls._raw(base, 1, {(i,): c for i, c in enumerate(e.payload) if not base.is_zero(c)})
        return cls._raw(base, k, e.payload)

    def to_element(self) -> RingElement:
        return _multi(self.ring, self.var_count).element(self.payload)

    @property
    def terms(self) -> dict[tuple[int, ...], RingElement]:
        return {e: self.ring.element(c) for e, c in self.payload.items()}

    def coefficient(self, exps) -> RingElement:
        return self.ring.element(self.payload.get(tuple(exps), self.ring.zero))

    @property
    def total_degree(self):
        return max((sum(e) for e in self.payload), default=NEG_INF)

    def is_zero(self) -> bool:
        return not self.payload

    def _other(self, other):
        if isinstance(other, MPoly):
            if other.ring is not self.ring or other.var_count != self.var_count:
                raise RingMismatch(
                    f"{self.ring.desc}[{self.var_count} vars] vs {other.ring.desc}[{other.var_count} vars]"
                )
            return other.payload
        if isinstance(other, (int, RingElement)):
            return _multi(self.ring, self.var_count).canonical(
                {(0,) * self.var_count: self.ring.coerce(other)}
            )
        return NotImplemented

    def __add__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return MPoly._raw(self.ring, self.var_count, _multi(self.ring, self.var_count).add(self.payload, y))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return MPoly._raw(self.ring, self.var_count, _multi(self.ring, self.var_count).mul(self.payload, y))

    __rmul__ = __mul__

    def __neg__(self):
        return MPoly._raw(self.ring, self.var_count, _multi(self.ring, self.var_count).neg(self.payload))

    def __pow__(self, k: int):
        return MPoly._raw(self.ring, self.var_count, _multi(self.ring, self.var_count).pow(self.payload, k))

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return (
                self.ring is other.ring
                and self.var_count == other.var_count
                and self.payload == other.payload
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.desc, self.var_count, _multi(self.ring, self.var_count).hashable(self.payload)))

    def __str__(self):
        return _multi(self.ring, self.var_count).format(self.payload)

    def __repr__(self):
        return f"MPoly({self.ring.desc}, {self.var_count}, {self})"


def _uni(ring: Ring) -> Ring:
    return make_ring(PolyRing(ring.desc, 1))


def _multi(ring: Ring, var_count: int) -> Ring:
    if var_count < 1:
        raise RingError("an MPoly needs at least one variable")
    return sparse_poly_ring(ring.desc, var_count)


def _same(p, q):
    if p.ring is not q.ring:
        raise RingMismatch(f"{p.ring.desc} vs {q.ring.desc}")


def poly_add(p: Poly, q: Poly) -> Poly:
    _same(p, q)
    return p + q


def poly_sub(p: Poly, q: Poly) -> Poly:
    _same(p, q)
    return p - q


def poly_mul(p: Poly, q: Poly) -> Poly:
    _same(p, q)
    return p * q


def poly_neg(p: Poly) -> Poly:
    return -p


def poly_degree(p: Poly):
    """Degree of ``p``; the zero polynomial has degree ``NEG_INF``."""
    return len(p.payload) - 1 if p.payload else NEG_INF


def poly_eval_scalar(p: Poly, x: RingElement) -> RingElement:
    ring = p.ring
    x = ring.coerce(x)
    acc = ring.zero
    for c in reversed(p.payload):
        acc = ring.add(ring.mul(acc, x), c)
    return ring.element(acc)


def poly_eval_matrix(p: Poly, a):
    """Horner evaluation of a scalar-coefficient polynomial at a square matrix."""
    if p.ring is not a.ring:
        raise RingMismatch(f"{p.ring.desc} vs {a.ring.desc}")
    acc = a.zeros_like()
    for c in reversed(p.payload):
        acc = (acc @ a).add_scalar(c)
    return acc


def _same_m(p: MPoly, q: MPoly):
    if p.ring is not q.ring or p.var_count != q.var_count:
        raise RingMismatch("ring or arity mismatch between multivariate polynomials")


def mpoly_add(p: MPoly, q: MPoly) -> MPoly:
    _same_m(p, q)
    return p + q


def mpoly_mul(p: MPoly, q: MPoly) -> MPoly:
    _same_m(p, q)
    return p * q


def mpoly_var(ring, var_count: int, i: int) -> MPoly:
    """The variable X_{i+1} (0-based ``i``)."""
    ring = as_ring(ring)
    if not 0 <= i < var_count:
        raise IndexError(f"variable index {i} out of range for {var_count} variables")
    e = [0] * var_count
    e[i] = 1
    return MPoly._raw(ring, var_count, {tuple(e): ring.one})


def mpoly_eval_commuting(P: MPoly, args):
    """Substitute pairwise-commuting square matrices for the variables of ``P``.

    Scalar coefficients act as ``c*I``. Raises :class:`NonCommutingArguments`
    when some pair of arguments fails to commute, since the value would then
    depend on the order of factors inside each monomial.
    """
    args = list(args)
    if len(args) != P.var_count:
        raise ValueError(f"expected {P.var_count} arguments, got {len(args)}")
    if not args:
        raise ValueError("no arguments")
    first = args[0]
    for m in args:
        if m.ring is not P.ring:
            raise RingMismatch(f"matrix over {m.ring.desc} substituted into polynomial over {P.ring.desc}")
        if m.dim != first.dim:
            raise ValueError("arguments have different dimensions")
    for i in range(len(args)):
        for j in range(i + 1, len(args)):
            if args[i] @ args[j] != args[j] @ args[i]:
                raise NonCommutingArguments(i, j)

    powers = []
    for i, m in enumerate(args):
        top = max((e[i] for e in P.payload), default=0)
        table = [first.identity_like()]
        for _ in range(top):
            table.append(table[-1] @ m)
        powers.append(table)

    acc = first.zeros_like()
    for e in grlex_order(P.payload):
        term = first.identity_like().scale(P.payload[e])
        for i, k in enumerate(e):
            if k:
                term = term @ powers[i][k]
        acc = acc + term
    return acc
