"""Exhaustive census of r-th iterates among low-degree maps over F_p.

A polynomial of degree <= d is an r-th iterate exactly when it is Q^(r) for
some Q of degree at most floor(d^(1/r)) (degree-0 and degree-1 maps have
iterates of degree <= 1, and degree s >= 2 gives degree s^r).  The census
enumerates that full source space, composes, and counts distinct images
exactly.  Enumeration is partitioned by (degree, leading coefficient); each
partition is pure and the merge is a set union, so the result is independent
of partition order.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .scalars import DomainError, is_prime

DEFAULT_ENUMERATION_CAP = 2_000_000

CAP_ENV_VAR = "ITERROOT_CENSUS_CAP"


class SizeGuardError(ValueError):
    """The requested enumeration exceeds the configured cap."""


def enumeration_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_ENUMERATION_CAP


def integer_root(d: int, r: int) -> int:
    """floor(d^(1/r)) by exact integer bisection."""
    if d < 0 or r < 1:
        raise ValueError(f"need d >= 0, r >= 1, got d={d}, r={r}")
    lo, hi = 0, max(d, 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**r <= d:
            lo = mid
        else:
            hi = mid - 1
    return lo


@dataclass(frozen=True)
class CensusRow:
    q: int
    r: int
    d: int
    count: int
    total: int  # q^(d+1), the number of polynomials of degree <= d
    ratio: Fraction
    bound: int  # q^(floor(d^(1/r)) + 1)

    def __post_init__(self):
        if self.count > self.bound:
            raise AssertionError(f"count {self.count} exceeds bound {self.bound}")


# -- fast composition on raw coefficient tuples --------------------------------


def _normalize(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _mul_mod(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def compose_mod(outer, inner, p: int) -> tuple[int, ...]:
    """outer(inner(x)) over F_p on ascending coefficient tuples."""
    if not outer:
        return ()
    acc = [outer[-1]]
    for c in reversed(outer[:-1]):
        acc = _mul_mod(acc, inner, p)
        if acc:
            acc[0] = (acc[0] + c) % p
        else:
            acc = [c % p]
    return _normalize(acc)


def iterate_mod(coeffs, r: int, p: int) -> tuple[int, ...]:
    """r-fold self-composition over F_p; the 0-th iterate is x."""
    result = (0, 1)
    for _ in range(r):
        result = compose_mod(coeffs, result, p)
    return result


def encode_coeffs(coeffs) -> bytes:
    """Canonical byte encoding: 4 bytes per coefficient, ascending."""
    return b"".join(c.to_bytes(4, "big") for c in coeffs)


def decode_coeffs(data: bytes) -> tuple[int, ...]:
    return tuple(
        int.from_bytes(data[i : i + 4], "big") for i in range(0, len(data), 4)
    )


# -- enumeration ----------------------------------------------------------------


def _source_partitions(q: int, source_degree: int):
    """Partition descriptors (degree, leading coefficient) of the source space."""
    yield (0, None)  # all constants, including the zero polynomial
    for degree in range(1, source_degree + 1):
        for lead in range(1, q):
            yield (degree, lead)


def _iterates_of_partition(q: int, r: int, degree: int, lead, d: int) -> set:
    """Images of one (degree, leading coefficient) partition; pure, so
    partitions can run concurrently and merge by set union in any order."""
    images: set[bytes] = set()
    if degree == 0:
        for c0 in range(q):
            image = iterate_mod((c0,) if c0 else (), r, q)
            images.add(encode_coeffs(image))
        return images
    lower = [0] * degree
    while True:
        coeffs = tuple(lower) + (lead,)
        image = iterate_mod(coeffs, r, q)
        if len(image) - 1 > d:
            raise AssertionError("source degree bound violated")
        images.add(encode_coeffs(image))
        for i in range(degree):
            lower[i] += 1
            if lower[i] < q:
                break
            lower[i] = 0
        else:
            return images


def enumerate_iterates(q: int, r: int, d: int, cap: int | None = None):
    """All degree-<= d polynomials over F_q that are r-th iterates.

    Returns (sorted list of ascending coefficient tuples, CensusRow).  The
    enumeration refuses to start when the source space q^(floor(d^(1/r))+1)
    exceeds the cap.
    """
    if not is_prime(q):
        raise DomainError(f"census requires a prime field size, got {q}")
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    source_degree = integer_root(d, r)
    source_size = q ** (source_degree + 1)
    limit = enumeration_cap(cap)
    if source_size > limit:
        raise SizeGuardError(
            f"enumeration of {source_size} source maps exceeds the cap {limit}"
        )
    found: set[bytes] = set()
    for degree, lead in _source_partitions(q, source_degree):
        found |= _iterates_of_partition(q, r, degree, lead, d)
    polys = sorted((decode_coeffs(b) for b in found), key=lambda t: (len(t), t))
    row = CensusRow(
        q=q,
        r=r,
        d=d,
        count=len(polys),
        total=q ** (d + 1),
        ratio=Fraction(len(polys), q ** (d + 1)),
        bound=q ** (source_degree + 1),
    )
    return polys, row


def density_report(q: int, r: int, d_list, cap: int | None = None) -> list[CensusRow]:
    """Census rows for several degree bounds, with the envelope re-checked."""
    rows = []
    for d in d_list:
        _, row = enumerate_iterates(q, r, d, cap=cap)
        envelope = Fraction(row.bound, row.total)
        if row.ratio > envelope:
            raise AssertionError(f"ratio {row.ratio} above envelope {envelope}")
        rows.append(row)
    return rows


def normalized_iterate_sequence(q: int, r: int, d_list, cap: int | None = None):
    """The sequence q^(-d-1) * |Iterates(d^r, r)| for d in d_list.

    Data for the open asymptotic question; no limit is asserted.
    """
    out = []
    for d in d_list:
        _, row = enumerate_iterates(q, r, d**r, cap=cap)
        out.append((d, row.count, Fraction(row.count, q ** (d + 1))))
    return out
