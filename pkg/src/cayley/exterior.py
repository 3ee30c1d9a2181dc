"""Exterior powers of R^n, and det/adjugate taken straight from their wedge identities.

Basis k-vectors are indexed by strictly increasing 0-based index tuples
(lexicographic order). The determinant is the scalar by which the top power
of ``a`` acts; the adjugate is the matrix ``adj`` with

    a x_1 ^ ... ^ a x_{n-1} ^ y  ==  x_1 ^ ... ^ x_{n-1} ^ adj(y).

Both are deliberately slow; :mod:`cayley.matrix` has the fast cofactor paths.
"""

from __future__ import annotations

from itertools import combinations

from .matrix import Matrix, identity
from .rings import Ring, RingElement, RingMismatch, as_ring

__all__ = [
    "ExteriorVector",
    "basis_wedge",
    "wedge",
    "induced_map",
    "det_exterior",
    "adjugate_exterior",
    "adjugate_identity_holds",
]


def sort_with_sign(indices) -> tuple[tuple[int, ...], int]:
    """Sorted indices plus the parity of their inversion count; sign 0 on a repeat."""
    idx = tuple(indices)
    if len(set(idx)) != len(idx):
        return tuple(sorted(idx)), 0
    inversions = 0
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                inversions += 1
    return tuple(sorted(idx)), -1 if inversions % 2 else 1


class ExteriorVector:
    """An element of Λ^grade(R^dim), stored sparsely by basis subset."""

    __slots__ = ("ring", "dim", "grade", "coeffs")

    def __init__(self, ring, dim: int, grade: int, coeffs=None):
        ring = as_ring(ring)
        if not 0 <= grade <= dim:
            raise ValueError(f"grade {grade} outside [0, {dim}]")
        out = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != grade or any(b <= a for a, b in zip(key, key[1:])) or any(
                not 0 <= s < dim for s in key
            ):
                raise ValueError(f"{key!r} is not a strictly increasing {grade}-subset of range({dim})")
            c = ring.coerce(c)
            if not ring.is_zero(c):
                out[key] = c
        self.ring, self.dim, self.grade, self.coeffs = ring, dim, grade, out

    @classmethod
    def _raw(cls, ring: Ring, dim: int, grade: int, coeffs: dict) -> ExteriorVector:
        v = object.__new__(cls)
        v.ring, v.dim, v.grade, v.coeffs = ring, dim, grade, coeffs
        return v

    def coefficient(self, subset) -> RingElement:
        return self.ring.element(self.coeffs.get(tuple(subset), self.ring.zero))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if other.ring is not self.ring:
            raise RingMismatch(f"{self.ring.desc} vs {other.ring.desc}")
        if (other.dim, other.grade) != (self.dim, self.grade):
            raise ValueError("exterior vectors live in different spaces")

    def __add__(self, other: ExteriorVector) -> ExteriorVector:
        self._check(other)
        r = self.ring
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = r.add(out[key], c) if key in out else c
            if r.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        return ExteriorVector._raw(r, self.dim, self.grade, out)

    def scale(self, c) -> ExteriorVector:
        """Multiply by a payload scalar."""
        r = self.ring
        out = {}
        for key, x in self.coeffs.items():
            y = r.mul(c, x)
            if not r.is_zero(y):
                out[key] = y
        return ExteriorVector._raw(r, self.dim, self.grade, out)

    def wedge_vector(self, vec) -> ExteriorVector:
        """self ^ v for a payload coordinate vector v (appended on the right)."""
        r = self.ring
        out: dict = {}
        for key, c in self.coeffs.items():
            for i, x in enumerate(vec):
                if r.is_zero(x) or i in key:
                    continue
                new, sign = sort_with_sign(key + (i,))
                term = r.mul(c, x)
                if sign < 0:
                    term = r.neg(term)
                out[new] = r.add(out[new], term) if new in out else term
        out = {k: v for k, v in out.items() if not r.is_zero(v)}
        return ExteriorVector._raw(r, self.dim, self.grade + 1, out)

    def __eq__(self, other):
        if not isinstance(other, ExteriorVector):
            return NotImplemented
        return (
            self.ring is other.ring
            and (self.dim, self.grade) == (other.dim, other.grade)
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = " + ".join(
            f"{self.ring.format(c)}*e{'^e'.join(str(s + 1) for s in key) if key else ''}"
            for key, c in sorted(self.coeffs.items())
        )
        return f"ExteriorVector({self.ring.desc}, dim={self.dim}, grade={self.grade}, {terms or '0'})"


def basis_wedge(ring, dim: int, indices) -> ExteriorVector:
    """e_{i1} ^ ... ^ e_{ik} for 0-based indices in any order."""
    ring = as_ring(ring)
    key, sign = sort_with_sign(indices)
    coeffs = {}
    if sign:
        coeffs[key] = ring.one if sign > 0 else ring.neg(ring.one)
    return ExteriorVector._raw(ring, dim, len(key), coeffs)


def _unit(ring: Ring, dim: int) -> ExteriorVector:
    return ExteriorVector._raw(ring, dim, 0, {(): ring.one})


def _wedge_payloads(ring: Ring, dim: int, vectors) -> ExteriorVector:
    if len(vectors) > dim:
        raise ValueError(f"cannot wedge {len(vectors)} vectors in dimension {dim}")
    acc = _unit(ring, dim)
    for v in vectors:
        if len(v) != dim:
            raise ValueError(f"vector of length {len(v)} in dimension {dim}")
        acc = acc.wedge_vector(v)
    return acc


def wedge(vectors, ring=None, dim: int | None = None) -> ExteriorVector:
    """v_1 ^ ... ^ v_k for coordinate vectors given as sequences of elements or ints.

    ``ring`` may be omitted when some entry is a RingElement; ``dim`` is only
    needed for an empty product.
    """
    vectors = [list(v) for v in vectors]
    if ring is None:
        found = [x.ring for v in vectors for x in v if isinstance(x, RingElement)]
        if not found:
            raise ValueError("cannot infer the ring; pass ring=")
        ring = found[0]
    ring = as_ring(ring)
    if dim is None:
        if not vectors:
            raise ValueError("dimension of an empty wedge must be given")
        dim = len(vectors[0])
    payloads = [tuple(ring.coerce(x) for x in v) for v in vectors]
    return _wedge_payloads(ring, dim, payloads)


def induced_map(a: Matrix, k: int, v: ExteriorVector) -> ExteriorVector:
    """Λ^k(a) applied to v: e_S maps to a(e_s1) ^ ... ^ a(e_sk), extended linearly."""
    if v.ring is not a.ring:
        raise RingMismatch(f"{a.ring.desc} vs {v.ring.desc}")
    if v.dim != a.dim or v.grade != k:
        raise ValueError("grade or dimension mismatch")
    cols = [a.column(j) for j in range(a.dim)]
    acc = ExteriorVector._raw(a.ring, a.dim, k, {})
    for key, c in v.coeffs.items():
        image = _wedge_payloads(a.ring, a.dim, [cols[s] for s in key])
        acc = acc + image.scale(c)
    return acc


def det_exterior(a: Matrix) -> RingElement:
    """The scalar by which Λ^n(a) multiplies e_1 ^ ... ^ e_n."""
    n = a.dim
    top = tuple(range(n))
    return induced_map(a, n, basis_wedge(a.ring, n, top)).coefficient(top)


def adjugate_exterior(a: Matrix) -> Matrix:
    """Adjugate read off its defining wedge identity, one entry at a time.

    For y = e_j and x's = the basis vectors other than e_i (increasing), the
    right-hand side reduces to (-1)^(n-1-i) * adj[i][j] * e_1^...^e_n
    (0-based i), so adj[i][j] is that sign times the top coefficient of the
    left-hand side. For n = 1 the identity reads y = adj(y), forcing adj = id.
    """
    r, n = a.ring, a.dim
    if n == 1:
        return identity(r, 1)
    cols = [a.column(j) for j in range(n)]
    basis = [tuple(r.one if k == j else r.zero for k in range(n)) for j in range(n)]
    top = tuple(range(n))
    out = [[r.zero] * n for _ in range(n)]
    for i in range(n):
        head = _wedge_payloads(r, n, [cols[s] for s in top if s != i])
        for j in range(n):
            c = head.wedge_vector(basis[j]).coeffs.get(top, r.zero)
            out[i][j] = c if (n - 1 - i) % 2 == 0 else r.neg(c)
    return Matrix._raw(r, tuple(map(tuple, out)))


def adjugate_identity_holds(a: Matrix, xs, y, adj: Matrix | None = None) -> bool:
    """Check a x_1 ^ ... ^ a x_{n-1} ^ y == x_1 ^ ... ^ x_{n-1} ^ adj(y) for payload vectors."""
    if adj is None:
        adj = adjugate_exterior(a)
    n, r = a.dim, a.ring
    if len(xs) != n - 1:
        raise ValueError(f"need {n - 1} vectors x_i, got {len(xs)}")
    lhs = _wedge_payloads(r, n, [a.apply(x) for x in xs] + [tuple(y)])
    rhs = _wedge_payloads(r, n, [tuple(x) for x in xs] + [adj.apply(y)])
    return lhs == rhs


# Subsets of a given grade, lexicographic; exposed for tests that walk a basis.
def subsets(dim: int, grade: int):
    return list(combinations(range(dim), grade))
