"""Numerical demonstrations of iterate density, with exact arithmetic.

Specializing the family at a rational value e and iterating gives an exact
rational polynomial whose distance to the target is the specialization of
e * (residual); its sup-norm therefore scales like |e| at the archimedean
place and is bounded by |e|_p p-adically.  Everything here is computed with
exact rational arithmetic: places only measure results, and comparisons
against tolerances are exact rational comparisons.  Floats appear solely in
rendered reports.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construction import ConstructionData, build_family
from .epsilon import specialize_epsilon
from .polynomials import Poly
from .scalars import QQ, Place, absolute_value, is_prime


class IterationCapError(RuntimeError):
    """The schedule hit the step cap before meeting the tolerance."""


@dataclass(frozen=True)
class ApproximationTarget:
    """A target polynomial with places to approximate at and a tolerance."""

    target: Poly
    order: int
    places: tuple
    tolerance: Fraction

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"iteration order must be >= 1, got {self.order}")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if len(set(self.places)) != len(self.places):
            raise ValueError("places must be pairwise distinct")


def error_polynomial(
    Q: Poly, r: int, e: Fraction, data: ConstructionData | None = None
) -> Poly:
    """Q minus the r-th iterate of the family specialized at e, exactly.

    Specialization happens before iteration, which keeps the computation in
    plain k[x]; by the morphism property this equals specializing the
    symbolic iterate.
    """
    e = Fraction(e)
    if e == 0:
        raise ValueError("specialization point must be nonzero")
    if data is None:
        data = build_family(Q, r)
    member = specialize_epsilon(data.family, e)
    return Q - member.iterate(r)


def sup_norm(P: Poly, place: Place) -> Fraction:
    """Max of coefficient absolute values at the place (exact rational)."""
    return max((absolute_value(c, place) for c in P.coeffs), default=Fraction(0))


@dataclass(frozen=True)
class ConvergenceRow:
    epsilon: Fraction
    place: Place
    error_norm: Fraction
    ratio: Fraction  # error_norm / |epsilon| at the place


def convergence_table(Q: Poly, r: int, place: Place, e_list) -> list[ConvergenceRow]:
    """Error norms and error/|e| ratios for a list of specialization points."""
    data = build_family(Q, r)
    rows = []
    for e in e_list:
        e = Fraction(e)
        err = error_polynomial(Q, r, e, data=data)
        norm = sup_norm(err, place)
        rows.append(
            ConvergenceRow(
                epsilon=e,
                place=place,
                error_norm=norm,
                ratio=norm / absolute_value(e, place),
            )
        )
    return rows


def _schedule_parameters(places) -> tuple[list[int], int]:
    finite = sorted(p.prime for p in places if not p.is_archimedean)
    s = 2
    while s in finite or not is_prime(s):
        s += 1
    return finite, s


def find_epsilon_multi_place(
    target: ApproximationTarget, max_steps: int = 200
) -> Fraction:
    """A single nonzero rational e meeting the tolerance at every place.

    Schedule: e = (prod of the finite-place primes)^m / s^m', with s the
    smallest prime away from the finite places.  Raising m drives every
    p-adic error down without touching the others' valuations; raising m'
    then drives the archimedean error down.  Each candidate is verified by
    exact recomputation, so the returned value always re-verifies.
    """
    Q, r, eta = target.target, target.order, Fraction(target.tolerance)
    finite, s = _schedule_parameters(target.places)
    base = 1
    for p in finite:
        base *= p
    data = build_family(Q, r)
    m = 1 if finite else 0
    m_arch = 0
    for _ in range(max_steps):
        e = Fraction(base**m, s**m_arch)
        err = error_polynomial(Q, r, e, data=data)
        finite_bad = False
        arch_bad = False
        for place in target.places:
            if sup_norm(err, place) >= eta:
                if place.is_archimedean:
                    arch_bad = True
                else:
                    finite_bad = True
        if not finite_bad and not arch_bad:
            return e
        if finite_bad:
            m += 1
        else:
            m_arch += 1
    raise IterationCapError(
        f"no epsilon met tolerance {eta} within {max_steps} steps "
        "(tolerance may be pathological)"
    )


def multi_place_rows(target: ApproximationTarget, e: Fraction) -> list[ConvergenceRow]:
    """Re-verification rows for a found epsilon, one per place."""
    data = build_family(target.target, target.order)
    err = error_polynomial(target.target, target.order, e, data=data)
    return [
        ConvergenceRow(
            epsilon=e,
            place=place,
            error_norm=sup_norm(err, place),
            ratio=sup_norm(err, place) / absolute_value(e, place),
        )
        for place in target.places
    ]
