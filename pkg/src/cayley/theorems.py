"""End-to-end checkers for Cayley-Hamilton and its multivariate generalization.

``check_cayley_hamilton`` follows the action-based argument step by step:

    chi(a) = chi . id = (adj(t) t) . id = adj(t) . (t . id) = adj(t) . 0 = 0

where ``t = a - X``, ``.`` is the action from :mod:`cayley.action`, and
``adj(t)`` is computed over R[X] and moved back to End(M)[X].

``check_generalized`` handles matrices f_i, a_i with sum f_i a_i = 0 and the
a_i pairwise commuting: P = det(f_1 X_1 + ... + f_n X_n) vanishes at (a_1..a_n).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .action import act, right_subst, t_of
from .matrix import Matrix, adjugate_cofactor, charpoly, commute_check, det_cofactor, random_matrix
from .poly import MPoly, Poly, mpoly_eval_commuting, poly_eval_matrix
from .rings import Ring, RingMismatch, as_ring, sparse_poly_ring
from .transport import MatPoly, matpoly_mul, matpoly_scalar, to_matpoly, to_polymat

__all__ = [
    "CHReport",
    "GenInstance",
    "GenReport",
    "HypothesisViolation",
    "check_cayley_hamilton",
    "build_p",
    "general_P",
    "check_generalized",
    "generate_instance",
    "example_instance",
    "random_commuting_pair",
    "check_ch_special_case",
]

TRACE_STEPS = (
    "chi(a) = chi . id",
    "(adj(t) t) . id",
    "adj(t) . (t . id)",
    "adj(t) . 0",
)


class HypothesisViolation(ValueError):
    """An instance fails a hypothesis of the generalized statement.

    ``hypothesis`` is 1 (sum f_i a_i != 0) or 2 (some a_i, a_j do not
    commute, with ``pair`` = (i, j), 0-based).
    """

    def __init__(self, hypothesis: int, message: str, pair: tuple[int, int] | None = None):
        super().__init__(f"hypothesis ({hypothesis}) violated: {message}")
        self.hypothesis = hypothesis
        self.pair = pair


@dataclass(frozen=True)
class CHReport:
    ring: Ring
    dim: int
    a: Matrix
    chi: Poly
    adj_t: MatPoly
    proof_trace: tuple[Matrix, Matrix, Matrix, Matrix]
    factorization_holds: bool
    verdict: bool

    def failed_step(self) -> str | None:
        """Name of the first trace value that is nonzero, if any."""
        for name, value in zip(TRACE_STEPS, self.proof_trace):
            if not value.is_zero():
                return name
        return None


def check_cayley_hamilton(a: Matrix) -> CHReport:
    chi = charpoly(a)
    t = t_of(a)
    adj_t = to_matpoly(adjugate_cofactor(to_polymat(t)))
    ident = a.identity_like()

    chi_lift = matpoly_scalar(chi, a.dim)
    product = matpoly_mul(adj_t, t)
    trace = (
        right_subst(chi_lift, a),
        act(product, ident, a),
        act(adj_t, act(t, ident, a), a),
        act(adj_t, a.zeros_like(), a),
    )
    verdict = all(v.is_zero() for v in trace) and all(v == trace[0] for v in trace)
    return CHReport(
        ring=a.ring,
        dim=a.dim,
        a=a,
        chi=chi,
        adj_t=adj_t,
        proof_trace=trace,
        factorization_holds=product == chi_lift,
        verdict=verdict,
    )


@dataclass(frozen=True)
class GenInstance:
    ring: Ring
    dim: int
    n: int
    f: tuple[Matrix, ...]
    a: tuple[Matrix, ...]

    def validate(self) -> None:
        """Raise :class:`HypothesisViolation` unless both hypotheses hold."""
        if len(self.f) != self.n or len(self.a) != self.n:
            raise ValueError(f"expected {self.n} matrices f_i and a_i, got {len(self.f)} and {len(self.a)}")
        if self.n < 1:
            raise ValueError("need at least one variable")
        for m in self.f + self.a:
            if m.ring is not self.ring:
                raise RingMismatch(f"{m.ring.desc} vs {self.ring.desc}")
            if m.dim != self.dim:
                raise ValueError(f"dimension mismatch: {m.dim} vs {self.dim}")
        total = self.a[0].zeros_like()
        for fi, ai in zip(self.f, self.a):
            total = total + fi @ ai
        if not total.is_zero():
            raise HypothesisViolation(1, "f_1 a_1 + ... + f_n a_n is not zero")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if not commute_check(self.a[i], self.a[j]):
                    raise HypothesisViolation(2, f"a_{i + 1} and a_{j + 1} do not commute", (i, j))


@dataclass(frozen=True)
class GenReport:
    instance: GenInstance
    P: MPoly
    value: Matrix
    verdict: bool


def _check_fs(f) -> tuple[Ring, int]:
    f = list(f)
    if not f:
        raise ValueError("need at least one matrix f_i")
    ring, dim = f[0].ring, f[0].dim
    for m in f:
        if m.ring is not ring:
            raise RingMismatch(f"{m.ring.desc} vs {ring.desc}")
        if m.dim != dim:
            raise ValueError(f"dimension mismatch: {m.dim} vs {dim}")
    return ring, dim


def build_p(f) -> Matrix:
    """f_1 X_1 + ... + f_n X_n as a matrix over R[X_1..X_n]."""
    f = list(f)
    ring, dim = _check_fs(f)
    n = len(f)
    px = sparse_poly_ring(ring.desc, n)
    units = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    rows = []
    for r in range(dim):
        row = []
        for c in range(dim):
            entry = {}
            for i, fi in enumerate(f):
                x = fi.rows[r][c]
                if not ring.is_zero(x):
                    entry[units[i]] = x
            row.append(entry)
        rows.append(tuple(row))
    return Matrix._raw(px, tuple(rows))


def general_P(f) -> MPoly:
    """det(f_1 X_1 + ... + f_n X_n), via the same cofactor determinant as everything else."""
    return MPoly.from_element(det_cofactor(build_p(f)))


def check_generalized(inst: GenInstance) -> GenReport:
    inst.validate()
    P = general_P(inst.f)
    value = mpoly_eval_commuting(P, inst.a)
    return GenReport(instance=inst, P=P, value=value, verdict=value.is_zero())


def _random_scalar_poly(ring: Ring, rng: random.Random, max_degree: int = 2) -> Poly:
    return Poly(ring, [ring.element(ring.random(rng)) for _ in range(rng.randint(1, max_degree + 1))])


def random_commuting_pair(ring, dim: int, rng: random.Random) -> tuple[Matrix, Matrix]:
    """Two polynomials (degree <= 2) in one random matrix, hence commuting."""
    ring = as_ring(ring)
    c = random_matrix(ring, dim, rng)
    return (
        poly_eval_matrix(_random_scalar_poly(ring, rng), c),
        poly_eval_matrix(_random_scalar_poly(ring, rng), c),
    )


def generate_instance(ring, dim: int, n: int, rng: random.Random) -> GenInstance:
    """A random instance satisfying both hypotheses by construction.

    a_1..a_{n-1} are polynomials in one random matrix, a_n = I, and f_n is
    chosen as -(f_1 a_1 + ... + f_{n-1} a_{n-1}).
    """
    if n < 2:
        raise ValueError("instance generation needs n >= 2")
    ring = as_ring(ring)
    c = random_matrix(ring, dim, rng)
    a = [poly_eval_matrix(_random_scalar_poly(ring, rng), c) for _ in range(n - 1)]
    a.append(c.identity_like())
    f = [random_matrix(ring, dim, rng) for _ in range(n - 1)]
    total = c.zeros_like()
    for fi, ai in zip(f, a):
        total = total + fi @ ai
    f.append(-total)
    return GenInstance(ring=ring, dim=dim, n=n, f=tuple(f), a=tuple(a))


def example_instance(a: Matrix, b: Matrix) -> GenInstance:
    """p = bX - aY evaluated at (a, b); hypothesis (1) reads ba - ab = 0."""
    return GenInstance(ring=a.ring, dim=a.dim, n=2, f=(b, -a), a=(a, b))


def check_ch_special_case(a: Matrix) -> tuple[GenReport, Poly, bool]:
    """Cayley-Hamilton as the instance f = (a, -I), arguments (I, a).

    Returns the generalized report, P(1, X) as a univariate polynomial, and
    whether that polynomial equals charpoly(a).
    """
    ident = a.identity_like()
    report = check_generalized(GenInstance(ring=a.ring, dim=a.dim, n=2, f=(a, -ident), a=(ident, a)))
    ring = a.ring
    coeffs = [ring.zero] * (a.dim + 1)
    for (_, k), c in report.P.payload.items():
        if k >= len(coeffs):
            coeffs.extend([ring.zero] * (k + 1 - len(coeffs)))
        coeffs[k] = ring.add(coeffs[k], c)
    restricted = Poly(ring, [ring.element(c) for c in coeffs])
    return report, restricted, restricted == charpoly(a)
