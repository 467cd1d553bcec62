"""Arithmetic in k[e, 1/e] and in k[e, 1/e][x].

Laurent scalars are finite sums of terms c * e^k with integer exponents of
either sign, stored sparsely; polynomials in x over them are plain
:class:`~iterroot.polynomials.Poly` values whose coefficient ring is a
:class:`LaurentRing`.

A ring may carry an exponent *window* E: multiplication then drops exponents
above E.  Windowed arithmetic keeps the huge iterate computations small, and
is sound for low-order assertions under the following rule.  Dropped terms
sit above E, so after multiplying by an operand whose least exponent is f
they can only contaminate exponents above E + f.  The ring conservatively
records the most negative least-exponent seen by any multiplication operand;
a congruence test modulo e^l is valid only when l <= E + min(0, floor), and
:meth:`LaurentRing.congruence_valid` enforces exactly that.  Unwindowed
arithmetic is exact and always valid.
"""
from __future__ import annotations

from .polynomials import Poly

POS_INF = float("inf")
NEG_INF = float("-inf")


class WindowSoundnessError(RuntimeError):
    """A truncation window was too small for the requested assertion."""


class SpecializationError(ValueError):
    """e = 0 substituted into a Laurent object with a negative exponent."""


class LaurentScalar:
    """A finite sum of terms c * e^k, k in Z, over an exact base field."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "LaurentRing", terms: dict):
        self.ring = ring
        self.terms = terms  # exponent -> nonzero base scalar; {} is zero

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self):
        """Least exponent with nonzero coefficient; +inf for zero."""
        return min(self.terms) if self.terms else POS_INF

    @property
    def max_exponent(self):
        return max(self.terms) if self.terms else NEG_INF

    def coefficient(self, k: int):
        return self.terms.get(k, self.ring.base.zero)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentScalar)
            and self.ring.base == other.ring.base
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset((k, v) for k, v in self.terms.items()))

    def __repr__(self):
        return format_laurent(self)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        out = dict(self.terms)
        zero = self.ring.base.zero
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v == zero:
                out.pop(e, None)
            else:
                out[e] = v
        return LaurentScalar(self.ring, out)

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def __mul__(self, other: "LaurentScalar") -> "LaurentScalar":
        ring = self.ring
        ring._note_operands(self, other)
        window = ring.window
        zero = ring.base.zero
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if window is not None and e > window:
                    continue
                v = out.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                if v == zero:
                    out.pop(e, None)
                else:
                    out[e] = v
        return LaurentScalar(ring, out)

    def __pow__(self, k: int) -> "LaurentScalar":
        if k < 0:
            raise ValueError("negative powers of Laurent scalars are not defined here")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            k >>= 1
            if base_needed:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by e^k (exact exponent shift, no truncation)."""
        return LaurentScalar(self.ring, {e + k: c for e, c in self.terms.items()})

    def evaluate(self, point):
        """Substitute e = point (a base-field scalar), exactly."""
        base = self.ring.base
        if self.ring.window is not None:
            raise WindowSoundnessError("cannot specialize a windowed Laurent value")
        if point == base.zero:
            if self.min_exponent < 0:
                raise SpecializationError("e = 0 hits a negative exponent")
            return self.terms.get(0, base.zero)
        inv = None
        acc = base.zero
        for e, c in self.terms.items():
            if e >= 0:
                acc = acc + c * point**e
            else:
                if inv is None:
                    inv = base.invert(point)
                acc = acc + c * inv ** (-e)
        return acc


class LaurentRing:
    """Ring descriptor for k[e, 1/e] over an exact base field.

    ``window`` (optional) gives truncated arithmetic as described in the
    module docstring; ``floor_seen`` records the most negative least
    exponent among all multiplication operands in this ring's lifetime.
    Create one ring per verification job; values are immutable, the ring's
    tracking state is the only mutable piece.
    """

    def __init__(self, base, window: int | None = None):
        self.base = base
        self.window = window
        self.floor_seen = POS_INF
        self.zero = LaurentScalar(self, {})
        self.one = LaurentScalar(self, {0: base.one})

    def from_int(self, m: int) -> LaurentScalar:
        c = self.base.from_int(m)
        return LaurentScalar(self, {0: c} if c != self.base.zero else {})

    def scalar(self, c) -> LaurentScalar:
        """Embed a base-field scalar as an exponent-0 Laurent scalar."""
        return LaurentScalar(self, {0: c} if c != self.base.zero else {})

    def monomial(self, exponent: int, coeff=None) -> LaurentScalar:
        coeff = self.base.one if coeff is None else coeff
        if coeff == self.base.zero:
            return self.zero
        return LaurentScalar(self, {exponent: coeff})

    def laurent(self, terms: dict) -> LaurentScalar:
        """Build from an exponent -> scalar mapping (zeros stripped)."""
        zero = self.base.zero
        clean = {}
        for e, c in terms.items():
            if c == zero:
                continue
            cur = clean.get(e)
            cur = c if cur is None else cur + c
            if cur == zero:
                clean.pop(e, None)
            else:
                clean[e] = cur
        if self.window is not None:
            clean = {e: c for e, c in clean.items() if e <= self.window}
        return LaurentScalar(self, clean)

    # -- window bookkeeping --------------------------------------------------

    def _note_operands(self, *operands: LaurentScalar):
        if self.window is None:
            return
        for op in operands:
            if op.terms:
                m = min(op.terms)
                if m < self.floor_seen:
                    self.floor_seen = m

    def congruence_valid(self, modulus_exponent: int) -> bool:
        """Whether a test modulo e^l is sound after this ring's arithmetic."""
        if self.window is None:
            return True
        floor = self.floor_seen if self.floor_seen < 0 else 0
        return modulus_exponent <= self.window + floor

    # -- fused polynomial multiplication (hot path) --------------------------

    def poly_mul_coeffs(self, ca: tuple, cb: tuple) -> list:
        """Coefficient convolution for Poly * Poly over this ring.

        Accumulates directly into per-degree term dicts, avoiding one
        LaurentScalar allocation per coefficient pair.
        """
        window = self.window
        zero = self.base.zero
        if window is not None:
            floor = self.floor_seen
            for c in ca:
                if c.terms:
                    m = min(c.terms)
                    if m < floor:
                        floor = m
            for c in cb:
                if c.terms:
                    m = min(c.terms)
                    if m < floor:
                        floor = m
            self.floor_seen = floor
        out = [None] * (len(ca) + len(cb) - 1)
        tb = [c.terms for c in cb]
        for i, a in enumerate(ca):
            ta = a.terms
            if not ta:
                continue
            for j, b in enumerate(tb):
                if not b:
                    continue
                d = out[i + j]
                if d is None:
                    d = out[i + j] = {}
                for e1, c1 in ta.items():
                    for e2, c2 in b.items():
                        e = e1 + e2
                        if window is not None and e > window:
                            continue
                        v = d.get(e)
                        v = c1 * c2 if v is None else v + c1 * c2
                        if v == zero:
                            del d[e]
                        else:
                            d[e] = v
        return [LaurentScalar(self, d) if d else self.zero for d in out]

    def __eq__(self, other):
        return (
            isinstance(other, LaurentRing)
            and self.base == other.base
            and self.window == other.window
        )

    def __hash__(self):
        return hash(("LaurentRing", self.base, self.window))

    def __repr__(self):
        suffix = f", window={self.window}" if self.window is not None else ""
        return f"LaurentRing({self.base!r}{suffix})"


# -- module-level operations on Laurent scalars and epsilon-polynomials ------


def min_exponent(value: LaurentScalar):
    return value.min_exponent


def poly_min_exponent(A: Poly):
    """Least exponent over all x-coefficients; +inf for the zero polynomial."""
    return min((c.min_exponent for c in A.coeffs), default=POS_INF)


def poly_max_exponent(A: Poly):
    return max((c.max_exponent for c in A.coeffs), default=NEG_INF)


def _require_valid(ring: LaurentRing, modulus_exponent: int):
    if not ring.congruence_valid(modulus_exponent):
        raise WindowSoundnessError(
            f"window {ring.window} with floor {ring.floor_seen} cannot decide "
            f"a congruence mod e^{modulus_exponent}"
        )


def congruent_mod(A, B, modulus_exponent: int) -> bool:
    """Whether A - B lies in e^l * k[e][x] (or k[e] for scalars), l = modulus.

    Accepts two epsilon-polynomials or two Laurent scalars.  The modulus may
    be negative.  Raises :class:`WindowSoundnessError` when the arithmetic
    window is too small for the test to be meaningful.
    """
    if isinstance(A, LaurentScalar):
        _require_valid(A.ring, modulus_exponent)
        return (A - B).min_exponent >= modulus_exponent
    if isinstance(A, Poly):
        _require_valid(A.ring, modulus_exponent)
        return poly_min_exponent(A - B) >= modulus_exponent
    raise TypeError(f"expected Poly or LaurentScalar, got {type(A).__name__}")


def lift_poly(P: Poly, ring: LaurentRing) -> Poly:
    """Embed a base-field polynomial into k[e, 1/e][x] at exponent 0."""
    return P.map_coefficients(ring.scalar, ring)


def shift_poly(A: Poly, k: int) -> Poly:
    """Multiply an epsilon-polynomial by e^k."""
    return A.map_coefficients(lambda c: c.shift(k), A.ring)


def specialize_epsilon(A: Poly, point) -> Poly:
    """Substitute e = point in every coefficient, landing in k[x].

    Requires exact (unwindowed) arithmetic; point must be nonzero whenever a
    negative exponent occurs.
    """
    ring = A.ring
    if ring.window is not None:
        raise WindowSoundnessError("cannot specialize a windowed epsilon-polynomial")
    return A.map_coefficients(lambda c: c.evaluate(point), ring.base)


def evaluate_x_at_laurent(A: Poly, value: LaurentScalar) -> LaurentScalar:
    """Horner evaluation of A at x = value inside k[e, 1/e]."""
    return A.evaluate(value)


# -- serialization ------------------------------------------------------------


def laurent_to_json(value: LaurentScalar) -> dict:
    base = value.ring.base
    return {"terms": [[e, base.to_str(c)] for e, c in sorted(value.terms.items())]}


def laurent_from_json(ring: LaurentRing, data: dict) -> LaurentScalar:
    return ring.laurent({int(e): ring.base.parse(s) for e, s in data["terms"]})


def epsilon_poly_to_json(A: Poly) -> dict:
    return {"coeffs": [laurent_to_json(c) for c in A.coeffs]}


def epsilon_poly_from_json(ring: LaurentRing, data: dict) -> Poly:
    return Poly(ring, [laurent_from_json(ring, d) for d in data["coeffs"]])


def format_laurent(value: LaurentScalar, var: str = "e") -> str:
    """Render as "c*e^k" terms, ascending in k."""
    if not value.terms:
        return "0"
    base = value.ring.base
    parts = []
    for e, c in sorted(value.terms.items()):
        cs = base.to_str(c) if hasattr(base, "to_str") else repr(c)
        if e == 0:
            parts.append(cs)
        elif e == 1:
            parts.append(f"{cs}*{var}")
        else:
            parts.append(f"{cs}*{var}^{e}")
    return " + ".join(parts)
