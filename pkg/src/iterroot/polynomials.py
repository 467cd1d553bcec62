"""Dense univariate polynomials over an arbitrary commutative coefficient ring.

A coefficient ring is any object exposing ``zero``, ``one`` and
``from_int(m)``; coefficients are ring elements supporting +, -, * and ==.
This covers the exact fields from :mod:`iterroot.scalars`, the Laurent
scalars from :mod:`iterroot.epsilon`, and nested polynomial rings
(:class:`PolyRing`), which are used for two-variable identity checks.

Coefficients are stored ascending with no trailing zeros; the zero
polynomial is the empty list and its degree is the sentinel ``-inf``
(never an integer, so degree identities cannot silently pass on zero).
"""
from __future__ import annotations

import math
from collections.abc import Iterable

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Iterable):
        coeffs = list(coeffs)
        zero = ring.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring) -> "Poly":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring, c) -> "Poly":
        return cls(ring, (c,))

    @classmethod
    def x(cls, ring) -> "Poly":
        return cls(ring, (ring.zero, ring.one))

    @classmethod
    def monomial(cls, ring, k: int, c=None) -> "Poly":
        c = ring.one if c is None else c
        return cls(ring, [ring.zero] * k + [c])

    @classmethod
    def from_ints(cls, ring, ints: Iterable[int]) -> "Poly":
        return cls(ring, [ring.from_int(m) for m in ints])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"Poly({self.coeffs!r})"

    def _check_ring(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.ring != other.ring:
            raise ValueError("polynomials over different coefficient rings")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ring)
        fused = getattr(self.ring, "poly_mul_coeffs", None)
        if fused is not None:
            return Poly(self.ring, fused(self.coeffs, other.coeffs))
        zero = self.ring.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out)

    def scaled(self, c) -> "Poly":
        """Multiply every coefficient by the ring element c."""
        return Poly(self.ring, [a * c for a in self.coeffs])

    def map_coefficients(self, fn, ring) -> "Poly":
        """Apply fn to each coefficient, landing in the given ring."""
        return Poly(ring, [fn(c) for c in self.coeffs])

    # -- evaluation, composition, iteration --------------------------------

    def evaluate(self, point, lift=None):
        """Horner evaluation at a point of any algebra over the ring.

        ``lift`` embeds coefficients into the point's algebra; identity by
        default (point and coefficients live in the same ring).
        """
        if lift is None:
            lift = lambda c: c
        if not self.coeffs:
            return lift(self.ring.zero)
        acc = lift(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * point + lift(c)
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """The polynomial self(inner(x)), by Horner accumulation."""
        self._check_ring(inner)
        if not self.coeffs:
            return Poly.zero(self.ring)
        acc = Poly.constant(self.ring, self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + Poly.constant(self.ring, c)
        return acc

    def iterate(self, k: int) -> "Poly":
        """k-fold self-composition; the 0-th iterate is x."""
        if k < 0:
            raise ValueError(f"iteration order must be >= 0, got {k}")
        result = Poly.x(self.ring)
        for _ in range(k):
            # associate as result(self(x)): Horner then multiplies the large
            # accumulator by the small factor, which is much cheaper
            result = result.compose(self)
        return result

    def hasse_derivative(self, j: int) -> "Poly":
        """The j-th divided derivative: sum of p_k * C(k, j) * x^(k-j).

        Binomials are computed in arbitrary-precision integers and mapped
        into the ring, so the result is meaningful in any characteristic
        (j! times this equals the classical j-th derivative).
        """
        if j < 0:
            raise ValueError(f"derivative order must be >= 0, got {j}")
        out = []
        for k in range(j, len(self.coeffs)):
            out.append(self.coeffs[k] * self.ring.from_int(math.comb(k, j)))
        return Poly(self.ring, out)

    def derivative(self) -> "Poly":
        """Classical first derivative (equal to the first Hasse derivative)."""
        return self.hasse_derivative(1)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [self.ring.to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, ring, data: dict) -> "Poly":
        return cls(ring, [ring.parse(s) for s in data["coeffs"]])


class PolyRing:
    """Polynomials over ``base`` viewed as a coefficient ring themselves."""

    def __init__(self, base):
        self.base = base

    @property
    def zero(self) -> Poly:
        return Poly.zero(self.base)

    @property
    def one(self) -> Poly:
        return Poly.constant(self.base, self.base.one)

    def from_int(self, m: int) -> Poly:
        return Poly.constant(self.base, self.base.from_int(m))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.base == other.base

    def __hash__(self):
        return hash(("PolyRing", self.base))

    def __repr__(self):
        return f"PolyRing({self.base!r})"


def format_poly(p: Poly, var: str = "x") -> str:
    """Human-readable rendering, ascending powers."""
    if p.is_zero:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == p.ring.zero:
            continue
        cs = p.ring.to_str(c) if hasattr(p.ring, "to_str") else repr(c)
        if k == 0:
            parts.append(cs)
        elif k == 1:
            parts.append(f"{cs}*{var}")
        else:
            parts.append(f"{cs}*{var}^{k}")
    return " + ".join(parts)
