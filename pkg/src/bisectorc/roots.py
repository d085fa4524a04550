"""Exact real-root isolation and bisection refinement."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .errors import ConstantPolynomial, EndpointIsRoot, GeometricRootAnomaly
from .polynomial import (
    QPoly,
    cauchy_bound,
    poly_divrem,
    poly_eval,
    square_free_part,
    sturm_chain,
    sturm_count,
)
from .rational import Rat, as_rat

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Isolation:
    """An interval ``(lo, hi)`` holding exactly one real root of ``poly``.

    ``lo == hi`` marks an exact rational root.  ``poly`` is square-free.
    """

    lo: Rat
    hi: Rat
    poly: QPoly

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Rat:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Rat:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = as_rat(x)
        if self.is_exact:
            return x == self.lo
        return self.lo < x < self.hi


def _count(chain, lo, hi) -> int:
    return sturm_count(chain, lo, hi)


def _split(chain, lo: Rat, hi: Rat, n: int, out: List[Isolation]):
    """Recursively split ``(lo, hi)`` (both non-roots) holding ``n`` roots."""
    if n == 0:
        return
    if n == 1:
        out.append(Isolation(lo, hi, chain[0]))
        return
    mid = (lo + hi) / 2
    if poly_eval(chain[0], mid) == 0:
        out.append(Isolation(mid, mid, chain[0]))
        delta = (hi - lo) / 4
        # shrink until (mid - delta, mid + delta) holds only the root at mid
        while True:
            a, b = mid - delta, mid + delta
            if poly_eval(chain[0], a) and poly_eval(chain[0], b) and _count(chain, a, b) == 1:
                break
            delta /= 2
        _split(chain, lo, a, _count(chain, lo, a), out)
        _split(chain, b, hi, _count(chain, b, hi), out)
        return
    left = _count(chain, lo, mid)
    _split(chain, lo, mid, left, out)
    _split(chain, mid, hi, n - left, out)


def _shrink_off(iv: Isolation, points: List[Rat]) -> Isolation:
    while any(iv.lo <= r <= iv.hi for r in points):
        iv = _bisect_once(iv)
    return iv


def isolate_real_roots(p: QPoly) -> List[Isolation]:
    """Isolate every distinct real root of ``p``, sorted ascending.

    Rational roots come back as zero-width (exact) isolations.  The other
    intervals carry the square-free part of ``p`` and contain no rational
    root.
    """
    # local import: irreducibility depends on this module's siblings only
    from .irreducibility import rational_roots

    if p.is_zero() or p.degree < 1:
        raise ConstantPolynomial("cannot isolate roots of a constant")
    sqf = square_free_part(p)
    rats = rational_roots(sqf)
    deflated = sqf
    for r in rats:
        deflated = poly_divrem(deflated, QPoly([-r, 1]))[0]
    result = [Isolation(r, r, sqf) for r in rats]
    if deflated.degree >= 1:
        chain = sturm_chain(deflated)
        bound = cauchy_bound(deflated)
        boxes: List[Isolation] = []
        _split(chain, -bound, bound, _count(chain, -bound, bound), boxes)
        for box in boxes:
            if not box.is_exact:
                box = _shrink_off(box, rats)
            result.append(Isolation(box.lo, box.hi, sqf))
    return sorted(result, key=lambda iv: iv.lo)


def _bisect_once(iv: Isolation) -> Isolation:
    if iv.is_exact:
        return iv
    mid = iv.midpoint
    fm = poly_eval(iv.poly, mid)
    if fm == 0:
        return Isolation(mid, mid, iv.poly)
    flo = poly_eval(iv.poly, iv.lo)
    if (flo < 0) == (fm < 0):
        return Isolation(mid, iv.hi, iv.poly)
    return Isolation(iv.lo, mid, iv.poly)


def refine(iv: Isolation, eps) -> Isolation:
    """Bisect until ``hi - lo <= eps``; exact roots are returned unchanged."""
    eps = as_rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    while iv.width > eps:
        iv = _bisect_once(iv)
    return iv


def geometric_root(fq: QPoly) -> Isolation:
    """The unique root of ``fq`` above 1/2, i.e. the shape ratio l/b."""
    sqf = square_free_part(fq)
    chain = sturm_chain(sqf)
    try:
        n = sturm_count(chain, HALF, None)
    except EndpointIsRoot as exc:
        raise GeometricRootAnomaly(f"1/2 is a root of {fq}") from exc
    if n != 1:
        raise GeometricRootAnomaly(f"{n} roots of {fq} above 1/2")
    for iv in isolate_real_roots(fq):
        if iv.is_exact:
            if iv.lo > HALF:
                return iv
        elif iv.hi > HALF:
            if iv.lo >= HALF:
                return iv
            if poly_eval(sqf, iv.hi) != 0 and sturm_count(chain, HALF, iv.hi) == 1:
                return Isolation(HALF, iv.hi, iv.poly)
    raise GeometricRootAnomaly(f"no isolated root of {fq} above 1/2")
