"""Machine-checked derivation of the shape cubic from the two bisector formulas.

Every step is an exact identity between rational functions in l and b
(represented in Q[b][l]), so a single wrong sign anywhere fails the chain.
The symbolic p^2 and q^2 are produced by the same formula code the numeric
geometry uses.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from . import geometry
from .bivariate import BiPoly, bisector_cubic, general_cubic
from .polynomial import QPoly

L_VAR, B_VAR = "l", "b"


class RationalFunction:
    """Quotient of two elements of Q[b][l]; equality is by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num if isinstance(num, BiPoly) else BiPoly([num])
        self.den = BiPoly([1]) if den is None else den
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @staticmethod
    def coerce(x) -> "RationalFunction":
        return x if isinstance(x, RationalFunction) else RationalFunction(x)

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int):
        result = RationalFunction(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        o = RationalFunction.coerce(other)
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def render(self) -> str:
        num = self.num.render(L_VAR, B_VAR)
        if self.den == BiPoly([1]):
            return num
        return f"({num}) / ({self.den.render(L_VAR, B_VAR)})"


L = RationalFunction(BiPoly([0, 1]))
B = RationalFunction(BiPoly([QPoly([0, 1])]))


@dataclass(frozen=True)
class DerivationStep:
    step: str
    lhs: str
    rhs: str
    verified: bool


def _homogeneous_parts(F: BiPoly, total: int) -> bool:
    # every term l^i b^j has i + j == total
    return all(
        c == 0 or i + j == total
        for i, coeff in enumerate(F.xcoeffs)
        for j, c in enumerate(coeff.coeffs)
    )


def _dehomogenize(F: BiPoly, total: int) -> QPoly:
    """Divide by b^total and set t = l/b."""
    return QPoly(F.coeff(i).coeff(total - i) for i in range(total + 1))


def _rehomogenize(p: QPoly, total: int) -> BiPoly:
    return BiPoly(QPoly.monomial(p.coeff(i), total - i) for i in range(total + 1))


def derive() -> List[DerivationStep]:
    steps = []

    def record(name, lhs, rhs, ok):
        steps.append(DerivationStep(name, lhs, rhs, bool(ok)))

    q_sq = geometry._q_sq(L, B)
    record("eq1_factored", "(2l + b)(2l - b)", "4 q^2 with q^2 = " + q_sq.render(),
           (2 * L + B) * (2 * L - B) == 4 * q_sq)

    closed = B * B * L * (B + 2 * L) / (B + L) ** 2
    p_sq = geometry._p_sq_cosine_law(L, B)
    record("eq2_bisector_length", "b^2 + x^2 - 2 b x cos(theta), x = bl/(b+l), cos(theta) = b/(2l)",
           closed.render(), p_sq == closed and geometry._p_sq_closed(L, B) == closed)

    lhs = B * B * L / (2 * L - B)
    rhs = p_sq * (B + L) ** 2 / (4 * q_sq)
    record("combined_relation", lhs.render(), "p^2 (b + l)^2 / (4 q^2)", lhs == rhs)

    # 4 q^2 b^2 l = p^2 (b + l)^2 (2l - b) is linear in p^2 and q^2: compare
    # the coefficient of each symbol separately
    cross_p = ((B + L) ** 2 * (2 * L - B)).num
    cross_q = (-4 * B * B * L).num
    target_p = (2 * L ** 3 + 3 * B * L * L - B ** 3).num
    target_q = (-4 * B * B * L).num
    substituted = p_sq * (2 * L ** 3 + 3 * B * L * L - B ** 3) - 4 * q_sq * B * B * L
    record("cleared_identity", "p^2 (b + l)^2 (2l - b) - 4 q^2 b^2 l",
           "2 p^2 l^3 + 3 p^2 b l^2 - 4 q^2 b^2 l - p^2 b^3",
           cross_p == target_p and cross_q == target_q and substituted == 0)

    p_part = _dehomogenize(target_p, 3)
    q_part = _dehomogenize(target_q, 3)
    homogeneous = _homogeneous_parts(target_p, 3) and _homogeneous_parts(target_q, 3)
    roundtrip = _rehomogenize(p_part, 3) == target_p and _rehomogenize(q_part, 3) == target_q
    layers_ok = True
    for p in (Fraction(1), Fraction(2), Fraction(3, 7)):
        layers = general_cubic(p).q_layers()
        layers_ok = layers_ok and layers[0] == p * p * p_part and layers[2] == q_part
    record("divide_by_b3",
           "p^2 (" + p_part.render("t") + ") + q^2 (" + q_part.render("t") + "), t = l/b",
           "2 p^2 t^3 + 3 p^2 t^2 - 4 q^2 t - p^2",
           homogeneous and roundtrip and layers_ok)

    record("normalize_p", "p = 1: " + general_cubic(1).render(), bisector_cubic().render(),
           general_cubic(1) == bisector_cubic())
    return steps


def all_verified(steps: List[DerivationStep]) -> bool:
    return all(s.verified for s in steps)


