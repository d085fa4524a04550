"""Polynomials in X whose coefficients are polynomials in q, i.e. Q[q][X]."""

from fractions import Fraction
from functools import reduce
from typing import Iterable, List

from .errors import InvalidLength, ZeroPolynomial
from .polynomial import NEG_INF, QPoly, poly_eval, poly_gcd
from .rational import as_rat, rat_to_string


def _as_qpoly(c) -> QPoly:
    return c if isinstance(c, QPoly) else QPoly([c])


class BiPoly:
    """Immutable element of Q[q][X]; ``xcoeffs[k]`` multiplies ``X**k``."""

    __slots__ = ("xcoeffs",)

    def __init__(self, xcoeffs: Iterable = ()):
        cs = [_as_qpoly(c) for c in xcoeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "xcoeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_qfree(cls, p: QPoly) -> "BiPoly":
        """Lift a polynomial in X with rational coefficients."""
        return cls(QPoly([c]) for c in p.coeffs)

    @classmethod
    def from_q_layers(cls, layers: List[QPoly]) -> "BiPoly":
        """Inverse of :meth:`q_layers`: ``sum(q**j * layers[j](X))``."""
        n = max((len(p.coeffs) for p in layers), default=0)
        return cls(QPoly(layer.coeff(k) for layer in layers) for k in range(n))

    @property
    def degree(self):
        return len(self.xcoeffs) - 1 if self.xcoeffs else NEG_INF

    @property
    def q_degree(self):
        return max((c.degree for c in self.xcoeffs), default=NEG_INF)

    def coeff(self, k: int) -> QPoly:
        return self.xcoeffs[k] if 0 <= k < len(self.xcoeffs) else QPoly()

    def is_zero(self) -> bool:
        return not self.xcoeffs

    def q_layers(self) -> List[QPoly]:
        """Write self as ``sum(q**j * P_j(X))`` and return ``[P_0, P_1, ...]``."""
        if self.is_zero():
            return []
        return [
            QPoly(c.coeff(j) for c in self.xcoeffs)
            for j in range(int(self.q_degree) + 1)
        ]

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.xcoeffs == other.xcoeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.xcoeffs)

    def __repr__(self):
        return f"BiPoly({self.render()!r})"

    def __str__(self):
        return self.render()

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction, QPoly)):
            return BiPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.xcoeffs), len(other.xcoeffs))
        return BiPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(-c for c in self.xcoeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return BiPoly()
        out = [QPoly()] * (len(self.xcoeffs) + len(other.xcoeffs) - 1)
        for i, a in enumerate(self.xcoeffs):
            for j, b in enumerate(other.xcoeffs):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = BiPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def render(self, var: str = "X", qvar: str = "q") -> str:
        """Descending in X, e.g. ``2*X^3 + 3*X^2 + (-4*q^2)*X + (-1)``."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.xcoeffs) - 1, -1, -1):
            c = self.xcoeffs[k]
            if c.is_zero():
                continue
            if c.is_constant() and c.lead > 0:
                cs = rat_to_string(c.lead)
            else:
                cs = f"({c.render(qvar)})"
            if k == 0:
                parts.append(cs)
                continue
            power = var if k == 1 else f"{var}^{k}"
            parts.append(power if cs == "1" else f"{cs}*{power}")
        return " + ".join(parts)


def bisector_cubic() -> BiPoly:
    """The cubic ``2X^3 + 3X^2 - 4q^2 X - 1`` satisfied by X = l/b when p = 1."""
    return BiPoly([QPoly([-1]), QPoly([0, 0, -4]), QPoly([3]), QPoly([2])])


def general_cubic(p) -> BiPoly:
    """``2p^2 X^3 + 3p^2 X^2 - 4q^2 X - p^2`` for a base-vertex bisector of length p."""
    p = as_rat(p)
    if p <= 0:
        raise InvalidLength(f"bisector length must be positive, got {p}")
    p2 = p * p
    return BiPoly([QPoly([-p2]), QPoly([0, 0, -4]), QPoly([3 * p2]), QPoly([2 * p2])])


def bipoly_eval_q(F: BiPoly, qval) -> QPoly:
    qval = as_rat(qval)
    return QPoly(poly_eval(c, qval) for c in F.xcoeffs)


def bipoly_subst_x(F: BiPoly, c) -> QPoly:
    """Set X = c; the result lives in Q[q]."""
    c = as_rat(c)
    acc = QPoly()
    for coeff in reversed(F.xcoeffs):
        acc = acc * c + coeff
    return acc


def bipoly_content_x(F: BiPoly) -> QPoly:
    """Monic gcd in Q[q] of the X-coefficients."""
    if F.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    return reduce(poly_gcd, [c for c in F.xcoeffs if not c.is_zero()], QPoly())


def reversal(F: BiPoly) -> BiPoly:
    """``X**n * F(1/X)`` for ``n = deg_X F``."""
    return BiPoly(reversed(F.xcoeffs))


def is_unit_content(F: BiPoly) -> bool:
    return bipoly_content_x(F) == QPoly([1])

