"""Exact coefficient fields (rationals, prime fields) and places of Q.

Rational field elements are plain ``fractions.Fraction`` values, which are
always kept in lowest terms with positive denominator.  Prime-field elements
are small immutable wrappers around a canonical residue in [0, p).  Elements
of different fields never coerce into each other; mixing them raises
``DomainError``.

Places measure rational numbers through exact multiplicative absolute
values: the archimedean one, and the p-adic ones |x|_p = p^(-v_p(x)).  All
absolute values are returned as exact ``Fraction`` values; callers render
floats only at reporting boundaries.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    """Invalid coefficient domain, or elements of distinct domains mixed."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

MAX_PRIME_MODULUS = 2**64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test; the base set is exact for n < 2^64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def smallest_prime_at_least(n: int) -> int:
    k = max(n, 2)
    while not is_prime(k):
        k += 1
    return k


class RationalField:
    """The field Q; elements are ``Fraction`` values."""

    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, m: int) -> Fraction:
        return Fraction(m)

    def invert(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("cannot invert 0 in Q")
        return 1 / a

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def to_str(self, a: Fraction) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FpElement:
    """A residue in [0, p); arithmetic stays inside one ``PrimeField``."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: "PrimeField"):
        self.value = value
        self.field = field

    def _check(self, other) -> "FpElement":
        if not isinstance(other, FpElement):
            raise DomainError(f"cannot mix F_{self.field.p} element with {type(other).__name__}")
        if other.field.p != self.field.p:
            raise DomainError(f"cannot mix elements of F_{self.field.p} and F_{other.field.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FpElement((self.value + other.value) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FpElement((self.value - other.value) % self.field.p, self.field)

    def __rsub__(self, other):
        other = self._check(other)
        return FpElement((other.value - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        other = self._check(other)
        return FpElement(self.value * other.value % self.field.p, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return self * self.field.invert(other)

    def __pow__(self, k: int):
        if k < 0:
            return self.field.invert(self) ** (-k)
        return FpElement(pow(self.value, k, self.field.p), self.field)

    def __neg__(self):
        return FpElement(-self.value % self.field.p, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, FpElement)
            and self.field.p == other.field.p
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return str(self.value)


class PrimeField:
    """The field F_p for a prime modulus p < 2^64."""

    characteristic: int

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise DomainError(f"modulus must be an integer >= 2, got {p!r}")
        if p >= MAX_PRIME_MODULUS:
            raise DomainError(f"modulus {p} too large (must be < 2^64)")
        if not is_prime(p):
            raise DomainError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = FpElement(0, self)
        self.one = FpElement(1, self)

    @property
    def name(self) -> str:
        return f"Fp:{self.p}"

    def from_int(self, m: int) -> FpElement:
        return FpElement(m % self.p, self)

    def invert(self, a: FpElement) -> FpElement:
        if a.value == 0:
            raise ZeroDivisionError(f"cannot invert 0 in F_{self.p}")
        return FpElement(pow(a.value, self.p - 2, self.p), self)

    def parse(self, text: str) -> FpElement:
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.from_int(int(num)) / self.from_int(int(den))
        return self.from_int(int(text))

    def to_str(self, a: FpElement) -> str:
        return str(a.value)

    def elements(self):
        for v in range(self.p):
            yield FpElement(v, self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def parse_field(descriptor: str):
    """Parse a field descriptor string: "Q" or "Fp:<p>"."""
    text = descriptor.strip()
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise DomainError(f"bad prime in field descriptor {descriptor!r}") from None
        return PrimeField(p)
    raise DomainError(f"unknown field descriptor {descriptor!r} (expected 'Q' or 'Fp:<p>')")


@dataclass(frozen=True)
class Place:
    """A place of Q: archimedean (prime None) or p-adic."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise DomainError(f"p-adic place needs a prime, got {self.prime}")

    @classmethod
    def archimedean(cls) -> "Place":
        return cls(None)

    @classmethod
    def p_adic(cls, p: int) -> "Place":
        return cls(p)

    @property
    def is_archimedean(self) -> bool:
        return self.prime is None

    @property
    def label(self) -> str:
        return "inf" if self.prime is None else f"p:{self.prime}"

    def __repr__(self):
        return f"Place({self.label})"


def parse_place(text: str) -> Place:
    """Parse a place label: "inf" or "p:<prime>"."""
    text = text.strip()
    if text == "inf":
        return Place.archimedean()
    if text.startswith("p:"):
        try:
            p = int(text[2:])
        except ValueError:
            raise DomainError(f"bad prime in place {text!r}") from None
        return Place.p_adic(p)
    raise DomainError(f"unknown place {text!r} (expected 'inf' or 'p:<prime>')")


def padic_valuation(a: Fraction, p: int) -> int:
    """v_p(a) for a nonzero rational."""
    if a == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    num = abs(a.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = a.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def absolute_value(a, place: Place) -> Fraction:
    """|a| at the given place, as an exact nonnegative rational.

    Archimedean: the usual absolute value.  p-adic: p^(-v_p(a)), with |0| = 0.
    """
    a = Fraction(a)
    if place.is_archimedean:
        return abs(a)
    if a == 0:
        return Fraction(0)
    v = padic_valuation(a, place.prime)
    return Fraction(1, place.prime**v) if v >= 0 else Fraction(place.prime ** (-v))
