"""Dense univariate polynomials with exact rational coefficients."""

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DivisionByZero, EndpointIsRoot, ZeroPolynomial
from .rational import Rat, as_rat, rat_to_string

# Degree of the zero polynomial.  Compares below every integer.
NEG_INF = -math.inf


class QPoly:
    """Immutable polynomial over Q, coefficients stored in ascending degree.

    The zero polynomial has no coefficients; every other polynomial has a
    nonzero last coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def constant(cls, c) -> "QPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "QPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, c, k: int) -> "QPoly":
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> Rat:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Rat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({self.render()!r})"

    def __str__(self):
        return self.render()

    # ring operations

    def _coerce(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

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
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = QPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        return poly_divrem(self, self._coerce(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return poly_eval(self, x)

    def compose(self, inner: "QPoly") -> "QPoly":
        result = QPoly()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def monic(self) -> "QPoly":
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no monic form")
        return QPoly(c / self.lead for c in self.coeffs)

    def render(self, var: str = "X") -> str:
        """Descending text form, e.g. ``2*X^3 + 3*X^2 - 4*X - 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = rat_to_string(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                term = power if mag == 1 else f"{rat_to_string(mag)}*{power}"
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f"- {term}" if c < 0 else f"+ {term}")
        return " ".join(parts)


def poly_arith(a: QPoly, b: QPoly, op: str) -> QPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_divrem(a: QPoly, b: QPoly) -> Tuple[QPoly, QPoly]:
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    if a.degree < db:
        return QPoly(), a
    quot = [Fraction(0)] * (a.degree - db + 1)
    for k in range(a.degree - db, -1, -1):
        c = rem[k + db] / b.lead
        quot[k] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[k + j] -= c * bc
    return QPoly(quot), QPoly(rem[:db])


def poly_eval(p: QPoly, x) -> Rat:
    x = as_rat(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: QPoly) -> QPoly:
    return QPoly(k * c for k, c in enumerate(p.coeffs) if k)


def poly_content_primitive(p: QPoly) -> Tuple[Rat, QPoly]:
    """Split ``p`` into ``content * primitive``.

    The primitive part has coprime integer coefficients and a positive
    leading coefficient; the content carries the sign.
    """
    if p.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    num = reduce(math.gcd, (abs(c.numerator) for c in p.coeffs))
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in p.coeffs))
    content = Fraction(num, den)
    if p.lead < 0:
        content = -content
    return content, QPoly(c / content for c in p.coeffs)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, poly_divrem(a, b)[1]
    return a.monic()


def square_free_part(p: QPoly) -> QPoly:
    if p.is_zero():
        raise ZeroPolynomial("square-free part of zero")
    if p.is_constant():
        return p
    return poly_divrem(p, poly_gcd(p, poly_derivative(p)))[0]


def sturm_chain(p: QPoly) -> List[QPoly]:
    if p.is_zero():
        raise ZeroPolynomial("Sturm chain of zero")
    chain = [p]
    nxt = poly_derivative(p)
    while not nxt.is_zero():
        chain.append(nxt)
        nxt = -poly_divrem(chain[-2], chain[-1])[1]
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sign_variations(chain: Sequence[QPoly], x: Optional[Rat], at_plus: bool = True) -> int:
    """Sign changes of ``chain`` at ``x``; ``None`` means +inf or -inf."""
    if x is None:
        if at_plus:
            return _variations([_sign(p.lead) for p in chain])
        return _variations([_sign(p.lead) * (-1) ** p.degree for p in chain])
    return _variations([_sign(poly_eval(p, x)) for p in chain])


def sturm_count(chain: Sequence[QPoly], lo: Optional[Rat], hi: Optional[Rat]) -> int:
    """Distinct real roots of ``chain[0]`` in ``(lo, hi]``.

    ``lo=None`` is -inf, ``hi=None`` is +inf.  A finite endpoint that is a
    root raises :class:`EndpointIsRoot`; perturbing is the caller's call.
    """
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    head = chain[0]
    for x in (lo, hi):
        if x is not None and poly_eval(head, x) == 0:
            raise EndpointIsRoot(x)
    return sign_variations(chain, lo, at_plus=False) - sign_variations(chain, hi, at_plus=True)


def cauchy_bound(p: QPoly) -> Rat:
    """Every real root has absolute value strictly below this bound."""
    if p.degree < 1:
        raise ValueError("root bound needs a nonconstant polynomial")
    return 1 + max(abs(c / p.lead) for c in p.coeffs[:-1])
