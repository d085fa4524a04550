"""Isosceles triangle ABC with AB = AC = l and base BC = b.

q is the apex bisector AM (also height and median) and p is the bisector
from the base vertex B to its foot P on AC.  Lengths are carried as squares
so everything stays rational until :func:`reconstruct`.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegenerateTriangle, InvalidLength, PrecisionExceeded
from .interval import Interval
from .rational import Rat, as_rat
from .roots import Isolation, refine

HALF = Fraction(1, 2)
Number = Union[Rat, Interval]


@dataclass(frozen=True)
class TriangleInstance:
    l: Number
    b: Number
    q_sq: Number
    p_sq: Number
    cos_theta: Number
    cp_x: Number

    @property
    def t(self) -> Number:
        return self.l / self.b


def _sides(l, b):
    l, b = as_rat(l), as_rat(b)
    if not (b > 0 and 2 * l > b):
        raise DegenerateTriangle(f"need 2l > b > 0, got l={l}, b={b}")
    return l, b


def _q_sq(l, b):
    return l * l - b * b / 4


def _p_sq_closed(l, b):
    return b * b * l * (b + 2 * l) / ((b + l) * (b + l))


def _p_sq_cosine_law(l, b):
    # triangle BPC: BC = b, CP = x, angle at C has cos = b / 2l
    cos_theta = b / (2 * l)
    x = b * l / (b + l)
    return b * b + x * x - 2 * b * x * cos_theta


def bisector_length_sq(adj1, adj2, opposite):
    """Classical squared bisector length from the vertex between ``adj1`` and ``adj2``."""
    s = opposite / (adj1 + adj2)
    return adj1 * adj2 * (1 - s * s)


def q_sq_from_sides(l, b) -> Rat:
    l, b = _sides(l, b)
    q_sq = _q_sq(l, b)
    assert (2 * l + b) * (2 * l - b) == 4 * q_sq
    return q_sq


def p_sq_from_sides(l, b) -> Rat:
    l, b = _sides(l, b)
    closed = _p_sq_closed(l, b)
    chained = _p_sq_cosine_law(l, b)
    if closed != chained:
        raise ArithmeticError(f"bisector formulas disagree at l={l}, b={b}: {closed} != {chained}")
    return closed


def p_sq_from_q_t(q, t) -> Rat:
    """p^2 for apex bisector q and shape t = l/b, with b eliminated through q."""
    q, t = as_rat(q), as_rat(t)
    if q <= 0:
        raise InvalidLength(f"q must be positive, got {q}")
    if t <= HALF:
        raise DegenerateTriangle(f"need t = l/b > 1/2, got {t}")
    return 4 * q * q / (4 * t * t - 1) * t * (1 + 2 * t) / ((1 + t) * (1 + t))


def cubic_residual(l, b, p_sq, q_sq) -> Rat:
    l, b, p_sq, q_sq = (as_rat(v) for v in (l, b, p_sq, q_sq))
    return 2 * p_sq * l ** 3 + 3 * p_sq * b * l * l - 4 * q_sq * b * b * l - p_sq * b ** 3


def forward_instance(l, b) -> TriangleInstance:
    l, b = _sides(l, b)
    inst = TriangleInstance(
        l=l,
        b=b,
        q_sq=q_sq_from_sides(l, b),
        p_sq=p_sq_from_sides(l, b),
        cos_theta=b / (2 * l),
        cp_x=b * l / (b + l),
    )
    assert cubic_residual(l, b, inst.p_sq, inst.q_sq) == 0
    return inst


def _interval_instance(l: Interval, b: Interval) -> TriangleInstance:
    return TriangleInstance(
        l=l,
        b=b,
        q_sq=_q_sq(l, b),
        p_sq=_p_sq_closed(l, b),
        cos_theta=b / (2 * l),
        cp_x=b * l / (b + l),
    )


def reconstruct(q, t_box: Isolation, eps, max_rounds: int = 8) -> TriangleInstance:
    """Rebuild l and b from q and a certified box for t, to width <= eps.

    ``b = 2q / sqrt(4t^2 - 1)`` and ``l = t b``.  All lengths come back as
    :class:`Interval` enclosures; the bisector from B is recomputed from the
    enclosures and must contain a value within ``100 * eps`` of 1.
    """
    q, eps = as_rat(q), as_rat(eps)
    if q <= 0:
        raise InvalidLength(f"q must be positive, got {q}")
    if t_box.lo < HALF:
        raise DegenerateTriangle("t box must lie above 1/2")
    tol = 100 * eps
    t_eps = eps
    for _ in range(max_rounds):
        box = refine(t_box, t_eps)
        t = Interval(box.lo, box.hi)
        if t.lo <= HALF:
            t_eps /= 16
            continue
        bits = max(64, 2 * (t_eps.denominator.bit_length() - t_eps.numerator.bit_length()) + 16)
        b = 2 * q / (4 * t * t - 1).sqrt(bits)
        l = t * b
        inst = _interval_instance(l, b)
        p = inst.p_sq.sqrt(bits)
        if l.width <= eps and b.width <= eps and p.lo >= 1 - tol and p.hi <= 1 + tol:
            return inst
        t_eps /= 16
    raise PrecisionExceeded(f"could not reach width {eps} for q={q}")


def recomputed_p(inst: TriangleInstance, bits: int = 96) -> Interval:
    """Enclosure of p from an interval triangle, via the classical bisector formula."""
    l, b = Interval.coerce(inst.l), Interval.coerce(inst.b)
    return bisector_length_sq(l, b, l).sqrt(bits)
