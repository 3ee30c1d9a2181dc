"""Commutative unital rings chosen at runtime from a descriptor.

Every ring works on raw *payloads* (ints, Fractions, tuples, dicts) through
its ``add``/``mul``/``neg`` methods; :class:`RingElement` wraps a payload
together with its ring for the public API. Matrix and polynomial code works
on payloads directly to keep the inner loops cheap.
"""

from __future__ import annotations

import operator
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from typing import Any

__all__ = [
    "RingError",
    "RingMismatch",
    "RingDescriptor",
    "Z",
    "Q",
    "Zmod",
    "Dual",
    "PolyRing",
    "Ring",
    "RingElement",
    "make_ring",
    "sparse_poly_ring",
    "as_ring",
    "parse_ring",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "random_element",
]

MAX_NESTING = 2


class RingError(ValueError):
    pass


class RingMismatch(RingError):
    pass


@dataclass(frozen=True)
class RingDescriptor:
    kind: str
    modulus: int | None = None
    base: RingDescriptor | None = None
    var_count: int | None = None

    def __post_init__(self):
        if self.kind in ("Z", "Q"):
            if self.modulus is not None or self.base is not None or self.var_count is not None:
                raise RingError(f"{self.kind} takes no parameters")
        elif self.kind == "Zmod":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise RingError(f"invalid modulus {self.modulus!r}: Zmod needs n >= 2")
        elif self.kind in ("Dual", "Poly"):
            if not isinstance(self.base, RingDescriptor):
                raise RingError(f"{self.kind} needs a base descriptor")
            if self.kind == "Poly" and (not isinstance(self.var_count, int) or self.var_count < 1):
                raise RingError(f"invalid variable count {self.var_count!r}")
            if self.depth > MAX_NESTING:
                raise RingError(f"nesting depth {self.depth} exceeds {MAX_NESTING}")
        else:
            raise RingError(f"unknown ring kind {self.kind!r}")

    @property
    def depth(self) -> int:
        return 0 if self.base is None else 1 + self.base.depth

    def __str__(self):
        if self.kind == "Zmod":
            return f"Zmod {self.modulus}"
        if self.kind == "Dual":
            return f"Dual {self.base}"
        if self.kind == "Poly":
            return f"Poly {self.var_count} {self.base}"
        return self.kind

    @property
    def token(self) -> str:
        """Whitespace-free name, used in fuzz reports and ``--rings`` lists."""
        return str(self).replace(" ", "")


Z = RingDescriptor("Z")
Q = RingDescriptor("Q")


def Zmod(n: int) -> RingDescriptor:
    return RingDescriptor("Zmod", modulus=n)


def Dual(base: RingDescriptor) -> RingDescriptor:
    return RingDescriptor("Dual", base=base)


def PolyRing(base: RingDescriptor, var_count: int = 1) -> RingDescriptor:
    return RingDescriptor("Poly", base=base, var_count=var_count)


_RING_RE = re.compile(r"(Z|Q|Zmod|Dual|Poly)(?![a-z])\s*")


def parse_ring(text: str) -> RingDescriptor:
    """Parse ``Z``, ``Q``, ``Zmod 6``, ``Dual Z``; spaces are optional (``Zmod6``, ``DualZ``)."""
    desc, rest = _parse_ring_prefix(text.strip())
    if rest.strip():
        raise RingError(f"trailing text in ring descriptor {text!r}")
    return desc


def _parse_ring_prefix(text: str) -> tuple[RingDescriptor, str]:
    m = _RING_RE.match(text)
    if not m:
        raise RingError(f"cannot parse ring descriptor {text!r}")
    kind, rest = m.group(1), text[m.end():]
    if kind in ("Z", "Q"):
        return RingDescriptor(kind), rest
    if kind == "Zmod":
        n = re.match(r"(\d+)\s*", rest)
        if not n:
            raise RingError(f"Zmod needs a modulus in {text!r}")
        return Zmod(int(n.group(1))), rest[n.end():]
    if kind == "Poly":
        k = re.match(r"(\d+)\s*", rest)
        if not k:
            raise RingError(f"Poly needs a variable count in {text!r}")
        base, rest = _parse_ring_prefix(rest[k.end():])
        return PolyRing(base, int(k.group(1))), rest
    base, rest = _parse_ring_prefix(rest)
    return Dual(base), rest


class Ring:
    """Arithmetic on canonical payloads of one ring."""

    desc: RingDescriptor
    zero: Any
    one: Any

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_zero(self, x) -> bool:
        return x == self.zero

    def eq(self, x, y) -> bool:
        return x == y

    def from_int(self, k: int):
        raise NotImplementedError

    def canonical(self, x):
        raise NotImplementedError

    def random(self, rng: random.Random):
        raise NotImplementedError

    def parse(self, text: str):
        raise RingError(f"element literals are not supported for {self.desc}")

    def format(self, x) -> str:
        return str(x)

    def hashable(self, x):
        return x

    def pow(self, x, k: int):
        result, base = self.one, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def sum(self, xs):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def coerce(self, value):
        """Payload for an int, a RingElement of this ring, or a native value."""
        if isinstance(value, RingElement):
            if value.ring is not self:
                raise RingMismatch(f"element of {value.ring.desc} used in {self.desc}")
            return value.payload
        if isinstance(value, int) and not isinstance(value, bool):
            return self.from_int(value)
        return self.canonical(value)

    def __call__(self, value) -> RingElement:
        return RingElement(self, self.coerce(value))

    def element(self, payload) -> RingElement:
        return RingElement(self, payload)

    def __repr__(self):
        return f"make_ring({self.desc!r})"

    def __str__(self):
        return str(self.desc)


class IntegerRing(Ring):
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    def __init__(self):
        self.desc, self.zero, self.one = Z, 0, 1

    def from_int(self, k):
        return k

    def canonical(self, x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        if not isinstance(x, int) or isinstance(x, bool):
            raise RingError(f"{x!r} is not an integer")
        return x

    def random(self, rng):
        return rng.randint(-3, 3)

    def parse(self, text):
        if not re.fullmatch(r"[+-]?\d+", text):
            raise RingError(f"bad integer literal {text!r}")
        return int(text)


class RationalRing(Ring):
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    def __init__(self):
        self.desc, self.zero, self.one = Q, Fraction(0), Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def canonical(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise RingError(f"{x!r} is not a rational")
        return Fraction(x)

    def random(self, rng):
        num = rng.randint(-3, 3)
        return Fraction(num, rng.randint(1, 3))

    def parse(self, text):
        m = re.fullmatch(r"([+-]?\d+)(?:/(\d+))?", text)
        if not m or (m.group(2) is not None and int(m.group(2)) == 0):
            raise RingError(f"bad rational literal {text!r}")
        return Fraction(int(m.group(1)), int(m.group(2) or 1))

    def format(self, x):
        return str(x)


class IntegersModRing(Ring):
    def __init__(self, desc):
        self.desc = desc
        self.n = n = desc.modulus
        self.zero, self.one = 0, 1
        self.add = lambda x, y: (x + y) % n
        self.sub = lambda x, y: (x - y) % n
        self.mul = lambda x, y: (x * y) % n
        self.neg = lambda x: -x % n

    def from_int(self, k):
        return k % self.n

    def canonical(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise RingError(f"{x!r} is not a residue")
        return x % self.n

    def random(self, rng):
        return rng.randrange(self.n)

    def parse(self, text):
        if not re.fullmatch(r"[+-]?\d+", text):
            raise RingError(f"bad residue literal {text!r}")
        return int(text) % self.n


class DualRing(Ring):
    """base[eps]/(eps^2); payload is the pair (value, infinitesimal part)."""

    def __init__(self, desc):
        self.desc = desc
        self.base = b = make_ring(desc.base)
        self.zero = (b.zero, b.zero)
        self.one = (b.one, b.zero)

    def add(self, x, y):
        b = self.base
        return (b.add(x[0], y[0]), b.add(x[1], y[1]))

    def sub(self, x, y):
        b = self.base
        return (b.sub(x[0], y[0]), b.sub(x[1], y[1]))

    def neg(self, x):
        return (self.base.neg(x[0]), self.base.neg(x[1]))

    def mul(self, x, y):
        b = self.base
        return (b.mul(x[0], y[0]), b.add(b.mul(x[0], y[1]), b.mul(x[1], y[0])))

    def from_int(self, k):
        return (self.base.from_int(k), self.base.zero)

    def canonical(self, x):
        if isinstance(x, tuple) and len(x) == 2:
            return (self.base.coerce(x[0]), self.base.coerce(x[1]))
        return (self.base.coerce(x), self.base.zero)

    def random(self, rng):
        return (self.base.random(rng), self.base.random(rng))

    def hashable(self, x):
        return (self.base.hashable(x[0]), self.base.hashable(x[1]))

    def parse(self, text):
        text = text.strip()
        if not text.endswith("*eps"):
            return (self._parse_base(text), self.base.zero)
        body = text[: -len("*eps")]
        cut = _last_top_level_plus(body)
        if cut is None:
            raise RingError(f"bad dual literal {text!r}")
        return (self._parse_base(body[:cut]), self._parse_base(body[cut + 1:]))

    def _parse_base(self, text):
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        return self.base.parse(text)

    def format(self, x):
        a, b = self.base.format(x[0]), self.base.format(x[1])
        if isinstance(self.base, DualRing):
            a, b = f"({a})", f"({b})"
        return f"{a}+{b}*eps"


def _last_top_level_plus(text: str) -> int | None:
    depth, found = 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0 and i > 0:
            found = i
    return found


class UnivariatePolyRing(Ring):
    """base[X]; payload is a dense coefficient tuple, low degree first, trimmed."""

    def __init__(self, desc):
        self.desc = desc
        self.base = make_ring(desc.base)
        self.zero = ()
        self.one = (self.base.one,)

    def _trim(self, cs):
        is_zero = self.base.is_zero
        end = len(cs)
        while end and is_zero(cs[end - 1]):
            end -= 1
        return tuple(cs[:end])

    def add(self, x, y):
        b, z = self.base, self.base.zero
        return self._trim([b.add(u, v) for u, v in zip_longest(x, y, fillvalue=z)])

    def sub(self, x, y):
        b, z = self.base, self.base.zero
        return self._trim([b.sub(u, v) for u, v in zip_longest(x, y, fillvalue=z)])

    def neg(self, x):
        return tuple(self.base.neg(c) for c in x)

    def mul(self, x, y):
        if not x or not y:
            return ()
        b = self.base
        add, mul, is_zero = b.add, b.mul, b.is_zero
        out = [b.zero] * (len(x) + len(y) - 1)
        for i, u in enumerate(x):
            if is_zero(u):
                continue
            for j, v in enumerate(y):
                out[i + j] = add(out[i + j], mul(u, v))
        return self._trim(out)

    def from_int(self, k):
        return self._trim([self.base.from_int(k)])

    def canonical(self, x):
        if isinstance(x, (tuple, list)):
            return self._trim([self.base.coerce(c) for c in x])
        return self._trim([self.base.coerce(x)])

    def random(self, rng):
        return self._trim([self.base.random(rng) for _ in range(rng.randint(0, 3))])

    def hashable(self, x):
        return tuple(self.base.hashable(c) for c in x)

    def format(self, x):
        return format_terms(self.base, [(c, _mono_x(k)) for k, c in enumerate(x)])


class MultivariatePolyRing(Ring):
    """base[X1..Xk]; payload is a dict exponent-tuple -> nonzero coefficient.

    Payload dicts are never mutated once returned.
    """

    def __init__(self, desc):
        self.desc = desc
        self.base = make_ring(desc.base)
        self.nvars = desc.var_count
        self.zero = {}
        self.one = {(0,) * self.nvars: self.base.one}

    def is_zero(self, x):
        return not x

    def add(self, x, y):
        b = self.base
        out = dict(x)
        for e, c in y.items():
            if e in out:
                s = b.add(out[e], c)
                if b.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return out

    def neg(self, x):
        return {e: self.base.neg(c) for e, c in x.items()}

    def mul(self, x, y):
        b = self.base
        out: dict = {}
        for e1, c1 in x.items():
            for e2, c2 in y.items():
                e = tuple(p + q for p, q in zip(e1, e2))
                c = b.mul(c1, c2)
                out[e] = b.add(out[e], c) if e in out else c
        return {e: c for e, c in out.items() if not b.is_zero(c)}

    def from_int(self, k):
        c = self.base.from_int(k)
        return {} if self.base.is_zero(c) else {(0,) * self.nvars: c}

    def canonical(self, x):
        if isinstance(x, dict):
            out = {}
            for e, c in x.items():
                e = tuple(e)
                if len(e) != self.nvars or any(k < 0 for k in e):
                    raise RingError(f"bad exponent vector {e!r}")
                c = self.base.coerce(c)
                if not self.base.is_zero(c):
                    out[e] = c
            return out
        return self.from_int(0) if x == 0 else self.canonical({(0,) * self.nvars: x})

    def variable(self, i: int):
        e = [0] * self.nvars
        e[i] = 1
        return {tuple(e): self.base.one}

    def random(self, rng):
        out = {}
        for _ in range(rng.randint(0, 3)):
            e = [0] * self.nvars
            for _ in range(rng.randint(0, 2)):
                e[rng.randrange(self.nvars)] += 1
            out = self.add(out, {tuple(e): self.base.random(rng)})
        return {e: c for e, c in out.items() if not self.base.is_zero(c)}

    def hashable(self, x):
        return frozenset((e, self.base.hashable(c)) for e, c in x.items())

    def format(self, x):
        return format_terms(self.base, [(x[e], _mono_xs(e)) for e in grlex_order(x)])


def grlex_order(exps):
    """Exponent vectors by descending total degree, then descending lex."""
    return sorted(exps, key=lambda e: (sum(e), e), reverse=True)


def _mono_x(k):
    return "" if k == 0 else "X" if k == 1 else f"X^{k}"


def _mono_xs(e):
    parts = [f"X{i + 1}" if k == 1 else f"X{i + 1}^{k}" for i, k in enumerate(e) if k]
    return "*".join(parts)


def format_terms(base: Ring, terms) -> str:
    """Render ``c*mono`` pairs as a signed sum, skipping zero coefficients."""
    out = []
    signed = isinstance(base, (IntegerRing, RationalRing))
    for c, mono in terms:
        if base.is_zero(c):
            continue
        neg = signed and c < 0
        mag = base.neg(c) if neg else c
        text = base.format(mag)
        if isinstance(base, DualRing) or (" " in text):
            text = f"({text})"
        if mono:
            text = mono if mag == base.one else f"{text}*{mono}"
        if not out:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out) or "0"


@lru_cache(maxsize=None)
def make_ring(desc: RingDescriptor) -> Ring:
    """The (cached, shared) ring handle for a descriptor."""
    if not isinstance(desc, RingDescriptor):
        raise RingError(f"expected a RingDescriptor, got {desc!r}")
    if desc.kind == "Z":
        return IntegerRing()
    if desc.kind == "Q":
        return RationalRing()
    if desc.kind == "Zmod":
        return IntegersModRing(desc)
    if desc.kind == "Dual":
        return DualRing(desc)
    if desc.var_count == 1:
        return UnivariatePolyRing(desc)
    return MultivariatePolyRing(desc)


@lru_cache(maxsize=None)
def sparse_poly_ring(base: RingDescriptor, var_count: int) -> MultivariatePolyRing:
    """Sparse handle for base[X1..Xk]. Unlike make_ring this stays sparse when k = 1."""
    if var_count > 1:
        return make_ring(PolyRing(base, var_count))
    return MultivariatePolyRing(PolyRing(base, var_count))


def as_ring(ring) -> Ring:
    if isinstance(ring, Ring):
        return ring
    if isinstance(ring, str):
        ring = parse_ring(ring)
    return make_ring(ring)


class RingElement:
    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.payload = payload

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise RingMismatch(f"{self.ring.desc} vs {other.ring.desc}")
            return other.payload
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return RingElement(self.ring, self.ring.add(self.payload, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return RingElement(self.ring, self.ring.sub(self.payload, y))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return RingElement(self.ring, self.ring.mul(self.payload, y))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.payload))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in a general ring")
        return RingElement(self.ring, self.ring.pow(self.payload, k))

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return other.ring is self.ring and self.ring.eq(self.payload, other.payload)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.eq(self.payload, self.ring.from_int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.desc, self.ring.hashable(self.payload)))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.payload)

    def __str__(self):
        return self.ring.format(self.payload)

    def __repr__(self):
        return f"RingElement({self.ring.desc}, {self.ring.format(self.payload)})"


def _check_same(x: RingElement, y: RingElement):
    if x.ring is not y.ring:
        raise RingMismatch(f"{x.ring.desc} vs {y.ring.desc}")


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    _check_same(x, y)
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    _check_same(x, y)
    return x * y


def ring_neg(x: RingElement) -> RingElement:
    return -x


def random_element(ring, rng: random.Random) -> RingElement:
    """Draw from the fixed fuzzing distribution (Z: [-3, 3]; Q: n/d with n in [-3, 3], d in [1, 3])."""
    ring = as_ring(ring)
    return RingElement(ring, ring.random(rng))
