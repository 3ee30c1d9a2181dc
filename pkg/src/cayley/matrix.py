"""Endomorphisms of R^n as square matrices, with division-free det/adjugate.

Column convention: entry (i, j) is the coefficient of e_i in a(e_j), so
a(e_j) is column j.
"""

from __future__ import annotations

import itertools
import random
import re

from .poly import Poly
from .rings import PolyRing, Ring, RingElement, RingError, RingMismatch, as_ring, make_ring, parse_ring

__all__ = [
    "Matrix",
    "MatrixParseError",
    "OracleCapExceeded",
    "identity",
    "zero",
    "mat_add",
    "mat_sub",
    "mat_mul",
    "mat_neg",
    "mat_scale",
    "det_cofactor",
    "det_leibniz",
    "adjugate_cofactor",
    "charpoly",
    "monic_charpoly",
    "commute_check",
    "random_matrix",
    "parse_matrix",
    "render_matrix",
    "permutation_sign",
]

LEIBNIZ_CAP = 6

_TOKEN = re.compile(r"\S+")


class OracleCapExceeded(ValueError):
    pass


class MatrixParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column


class Matrix:
    """Square matrix over a ring; ``rows`` holds payloads, not RingElements."""

    __slots__ = ("ring", "dim", "rows")

    def __init__(self, ring, rows):
        ring = as_ring(ring)
        rows = tuple(tuple(ring.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise ValueError("matrices must have dimension >= 1")
        if any(len(row) != n for row in rows):
            raise ValueError("matrix is not square")
        self.ring, self.dim, self.rows = ring, n, rows

    @classmethod
    def _raw(cls, ring: Ring, rows: tuple) -> Matrix:
        m = object.__new__(cls)
        m.ring, m.dim, m.rows = ring, len(rows), rows
        return m

    def __getitem__(self, ij) -> RingElement:
        i, j = ij
        return self.ring.element(self.rows[i][j])

    def tolist(self) -> list[list[RingElement]]:
        return [[self.ring.element(x) for x in row] for row in self.rows]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> Matrix:
        return Matrix._raw(self.ring, tuple(zip(*self.rows)))

    def identity_like(self) -> Matrix:
        return identity(self.ring, self.dim)

    def zeros_like(self) -> Matrix:
        return zero(self.ring, self.dim)

    def is_zero(self) -> bool:
        z = self.ring.is_zero
        return all(z(x) for row in self.rows for x in row)

    def apply(self, vec) -> tuple:
        """a(v) for a payload vector v."""
        r = self.ring
        return tuple(r.sum(r.mul(x, v) for x, v in zip(row, vec)) for row in self.rows)

    def scale(self, c) -> Matrix:
        """c*a for a payload scalar c (see :func:`mat_scale` for RingElements)."""
        r = self.ring
        return Matrix._raw(r, tuple(tuple(r.mul(c, x) for x in row) for row in self.rows))

    def add_scalar(self, c) -> Matrix:
        """a + c*I for a payload scalar c."""
        r = self.ring
        return Matrix._raw(
            r,
            tuple(
                tuple(r.add(x, c) if i == j else x for j, x in enumerate(row))
                for i, row in enumerate(self.rows)
            ),
        )

    def _check(self, other: Matrix):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatch(f"{self.ring.desc} vs {other.ring.desc}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        add = self.ring.add
        return Matrix._raw(
            self.ring,
            tuple(tuple(map(add, r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check(other)
        sub = self.ring.sub
        return Matrix._raw(
            self.ring,
            tuple(tuple(map(sub, r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> Matrix:
        neg = self.ring.neg
        return Matrix._raw(self.ring, tuple(tuple(map(neg, row)) for row in self.rows))

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        r = self.ring
        add, mul, is_zero, zero_ = r.add, r.mul, r.is_zero, r.zero
        cols = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            nz = [(k, x) for k, x in enumerate(row) if not is_zero(x)]
            new = []
            for col in cols:
                acc = zero_
                for k, x in nz:
                    acc = add(acc, mul(x, col[k]))
                new.append(acc)
            out.append(tuple(new))
        return Matrix._raw(r, tuple(out))

    def __pow__(self, k: int) -> Matrix:
        result, base = self.identity_like(), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring is other.ring and self.rows == other.rows

    def __hash__(self):
        h = self.ring.hashable
        return hash((self.ring.desc, tuple(tuple(h(x) for x in row) for row in self.rows)))

    def __str__(self):
        cells = [[self.ring.format(x) for x in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(self.ring.format(x) for x in row) + "]" for row in self.rows)
        return f"Matrix({self.ring.desc}, [{body}])"


def identity(ring, n: int) -> Matrix:
    ring = as_ring(ring)
    if n < 1:
        raise ValueError("matrices must have dimension >= 1")
    z, o = ring.zero, ring.one
    return Matrix._raw(ring, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))


def zero(ring, n: int) -> Matrix:
    ring = as_ring(ring)
    if n < 1:
        raise ValueError("matrices must have dimension >= 1")
    return Matrix._raw(ring, tuple((ring.zero,) * n for _ in range(n)))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return a - b


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_neg(a: Matrix) -> Matrix:
    return -a


def mat_scale(c, a: Matrix) -> Matrix:
    return a.scale(a.ring.coerce(c))


def _minor_det(ring: Ring, rows, row_idx: tuple, cols: tuple, memo: dict):
    # Laplace expansion along row_idx[0]; memo is keyed by (rows, columns).
    if not row_idx:
        return ring.one
    key = (row_idx, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    top, rest = rows[row_idx[0]], row_idx[1:]
    acc = ring.zero
    for pos, c in enumerate(cols):
        x = top[c]
        if ring.is_zero(x):
            continue
        term = ring.mul(x, _minor_det(ring, rows, rest, cols[:pos] + cols[pos + 1:], memo))
        acc = ring.add(acc, term) if pos % 2 == 0 else ring.sub(acc, term)
    memo[key] = acc
    return acc


def det_cofactor(a: Matrix) -> RingElement:
    """Division-free determinant by first-row Laplace expansion with memoized minors."""
    idx = tuple(range(a.dim))
    return a.ring.element(_minor_det(a.ring, a.rows, idx, idx, {}))


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (inversion count parity); 0 on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def det_leibniz(a: Matrix, cap: int = LEIBNIZ_CAP) -> RingElement:
    """Brute-force determinant: signed sum over all n! permutations."""
    if a.dim > cap:
        raise OracleCapExceeded(f"Leibniz oracle capped at dimension {cap}, got {a.dim}")
    r = a.ring
    acc = r.zero
    for perm in itertools.permutations(range(a.dim)):
        term = r.one
        for i, j in enumerate(perm):
            term = r.mul(term, a.rows[i][j])
        acc = r.add(acc, term) if permutation_sign(perm) > 0 else r.sub(acc, term)
    return r.element(acc)


def adjugate_cofactor(a: Matrix) -> Matrix:
    """Transpose of the cofactor matrix; all minors share one memo table."""
    r, n = a.ring, a.dim
    if n == 1:
        return identity(r, 1)
    memo: dict = {}
    full = tuple(range(n))
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        row_idx = full[:i] + full[i + 1:]
        for j in range(n):
            m = _minor_det(r, a.rows, row_idx, full[:j] + full[j + 1:], memo)
            out[j][i] = m if (i + j) % 2 == 0 else r.neg(m)
    return Matrix._raw(r, tuple(map(tuple, out)))


def _minus_x(a: Matrix) -> Matrix:
    """a - X*I as a matrix over R[X]."""
    px = make_ring(PolyRing(a.ring.desc, 1))
    base = a.ring
    rows = []
    for i, row in enumerate(a.rows):
        rows.append(
            tuple(
                px.canonical([x, base.neg(base.one)]) if i == j else px.canonical([x])
                for j, x in enumerate(row)
            )
        )
    return Matrix._raw(px, tuple(rows))


def charpoly(a: Matrix) -> Poly:
    """det(a - X) over R[X], the non-monic sign convention (leading coefficient (-1)^n)."""
    return Poly.from_element(det_cofactor(_minus_x(a)))


def monic_charpoly(a: Matrix) -> Poly:
    """det(X - a) = (-1)^n * charpoly(a)."""
    chi = charpoly(a)
    return -chi if a.dim % 2 else chi


def commute_check(a: Matrix, b: Matrix) -> bool:
    return a @ b == b @ a


def random_matrix(ring, n: int, rng: random.Random) -> Matrix:
    ring = as_ring(ring)
    if n < 1:
        raise ValueError("matrices must have dimension >= 1")
    return Matrix._raw(ring, tuple(tuple(ring.random(rng) for _ in range(n)) for _ in range(n)))


def render_matrix(a: Matrix) -> str:
    """Text form: ring descriptor, dimension, then one row per line."""
    lines = [str(a.ring.desc), str(a.dim)]
    lines += [" ".join(a.ring.format(x) for x in row) for row in a.rows]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixParseError(1, 1, "empty input, expected a ring descriptor")
    try:
        ring = make_ring(parse_ring(lines[0]))
    except RingError as exc:
        raise MatrixParseError(1, 1, str(exc)) from None
    if len(lines) < 2:
        raise MatrixParseError(2, 1, "missing dimension line")
    dim_text = lines[1].strip()
    if not dim_text.isdigit() or int(dim_text) < 1:
        col = len(lines[1]) - len(lines[1].lstrip()) + 1
        raise MatrixParseError(2, col, f"expected a positive integer dimension, got {dim_text!r}")
    n = int(dim_text)
    if len(lines) < n + 2:
        raise MatrixParseError(len(lines) + 1, 1, f"expected {n} matrix rows, got {len(lines) - 2}")
    if len(lines) > n + 2:
        raise MatrixParseError(n + 3, 1, f"unexpected text after {n} matrix rows")
    rows = []
    for i in range(n):
        lineno, line = i + 3, lines[i + 2]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if len(tokens) != n:
            raise MatrixParseError(lineno, 1, f"expected {n} entries, got {len(tokens)}")
        row = []
        for col, tok in tokens:
            try:
                row.append(ring.parse(tok))
            except RingError as exc:
                raise MatrixParseError(lineno, col, str(exc)) from None
        rows.append(tuple(row))
    return Matrix._raw(ring, tuple(rows))
