"""Irreducibility of the cubic over Q and over Q(q), with checkable certificates.

Over Q the test is the rational-root theorem.  Over Q(q), with q
transcendental, Q[q] is a UFD and a root ``g/h`` of ``F`` must have ``g``
dividing the constant X-coefficient and ``h`` dividing the leading one.  When
both are nonzero rationals the candidates collapse to rational constants and
the search becomes finite.
"""

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Tuple, Union

from .bivariate import BiPoly, bipoly_content_x, bipoly_subst_x, reversal
from .errors import (
    ConstantPolynomial,
    NotPrimitive,
    UnsupportedCoefficients,
    UnsupportedDegree,
)
from .polynomial import QPoly, poly_content_primitive, poly_eval, poly_gcd
from .rational import Rat, as_rat

RATIONAL_Q = "rational_q"
SYMBOLIC_Q = "symbolic_q"
NO_ROOT = "NoRootFound"
ROOT_FOUND = "RootFound"


# -- integer factoring for divisor enumeration --------------------------------

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # these bases are deterministic below 3.3e24
    for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]:
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


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``."""
    n = abs(n)
    out: dict = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack.extend([d, m // d])
    return out


def divisors(n: int) -> List[int]:
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


# -- rational roots ------------------------------------------------------------


def _integer_core(p: QPoly) -> Tuple[int, List[int]]:
    """Strip ``X**k`` and clear denominators: returns ``(k, integer coeffs)``."""
    _, prim = poly_content_primitive(p)
    k = next(i for i, c in enumerate(prim.coeffs) if c != 0)
    return k, [int(c) for c in prim.coeffs[k:]]


def rational_root_candidates(p: QPoly) -> List[Rat]:
    """Every ``±d/e`` allowed by the rational-root theorem, plus 0 if X | p."""
    if p.is_zero() or p.degree < 1:
        raise ConstantPolynomial("rational roots of a constant")
    k, ints = _integer_core(p)
    cands = {Fraction(0)} if k else set()
    if len(ints) > 1:
        for d in divisors(ints[0]):
            for e in divisors(ints[-1]):
                if math.gcd(d, e) == 1:
                    cands.add(Fraction(d, e))
                    cands.add(Fraction(-d, e))
    return sorted(cands)


def _int_eval_zero(ints: List[int], d: int, e: int) -> bool:
    # sum a_k d^k e^(n-k) == 0, i.e. e^n * p(d/e) == 0
    n = len(ints) - 1
    return sum(a * d ** k * e ** (n - k) for k, a in enumerate(ints)) == 0


def rational_roots(p: QPoly) -> List[Rat]:
    """All rational roots of ``p``, ascending, without repetition."""
    if p.is_zero() or p.degree < 1:
        raise ConstantPolynomial("rational roots of a constant")
    k, ints = _integer_core(p)
    roots = [Fraction(0)] if k else []
    if len(ints) == 1:
        return roots
    at_one = sum(ints)
    at_minus_one = sum(a * (-1) ** i for i, a in enumerate(ints))
    for d in divisors(ints[0]):
        for e in divisors(ints[-1]):
            if math.gcd(d, e) != 1:
                continue
            for num in (d, -d):
                # (e - num) | p(1) and (e + num) | p(-1) for integer primitive p
                if e - num and at_one % (e - num):
                    continue
                if e + num and at_minus_one % (e + num):
                    continue
                if _int_eval_zero(ints, num, e):
                    roots.append(Fraction(num, e))
    return sorted(set(roots))


# -- certificates ----------------------------------------------------------------

Residual = Union[Rat, QPoly, BiPoly]


@dataclass(frozen=True)
class CandidateCheck:
    """A tested root ``g/h`` and the exact value of the polynomial there."""

    g: Rat
    h: Rat
    residual: Union[Rat, QPoly]

    @property
    def value(self) -> Rat:
        return self.g / self.h


@dataclass(frozen=True)
class CertificateStep:
    tag: str
    polynomials: Tuple = ()
    residual: Optional[Residual] = None
    note: str = ""


@dataclass(frozen=True)
class RootSearchCertificate:
    mode: str
    candidates: Tuple[CandidateCheck, ...]
    conclusion: str
    narrative: Tuple[CertificateStep, ...]
    root: Optional[Rat] = None
    roots: Tuple[Rat, ...] = field(default=())

    @property
    def tags(self) -> List[str]:
        return [step.tag for step in self.narrative]


def _candidate(c: Rat, residual) -> CandidateCheck:
    # units go into h, so g = 1 unless the candidate is 0
    if c == 0:
        return CandidateCheck(Fraction(0), Fraction(1), residual)
    return CandidateCheck(Fraction(1), 1 / c, residual)


def _conclude(found: List[Rat]):
    if found:
        return ROOT_FOUND, max(found)
    return NO_ROOT, None


def rational_root_certificate(p: QPoly) -> RootSearchCertificate:
    """Exhaustive rational-root-theorem check of ``p`` over Q."""
    content, prim = poly_content_primitive(p)
    cands = rational_root_candidates(p)
    checks = tuple(_candidate(c, poly_eval(p, c)) for c in cands)
    found = [ch.value for ch in checks if ch.residual == 0]
    conclusion, root = _conclude(found)
    steps = [
        CertificateStep("clear_denominators", (p, prim), content,
                        "p = content * primitive, primitive has coprime integer coefficients"),
        CertificateStep("candidate_divisors", (prim,), Fraction(len(cands)),
                        "a rational root d/e has d | constant term and e | leading coefficient"),
    ]
    if p.degree <= 3:
        steps.append(CertificateStep(
            "degree_criterion", (p,), Fraction(len(found)),
            "a polynomial of degree 2 or 3 without roots in the field is irreducible"))
    return RootSearchCertificate(RATIONAL_Q, checks, conclusion, tuple(steps), root, tuple(sorted(found)))


def _is_nonzero_constant(c: QPoly) -> bool:
    return c.is_constant() and not c.is_zero()


def _forcing_polynomial(D: BiPoly) -> QPoly:
    """Common factor of the q-layers of ``D`` above q**0 (or layer 0 if q-free)."""
    layers = D.q_layers()
    upper = [layer for layer in layers[1:] if not layer.is_zero()]
    if not upper:
        return layers[0] if layers else QPoly()
    return reduce(poly_gcd, upper, QPoly())


def _forced_values(D: BiPoly) -> List[Rat]:
    """Rational c with ``D(c) == 0`` in Q[q]."""
    forcing = _forcing_polynomial(D)
    if forcing.is_constant():
        return []
    return [c for c in rational_roots(forcing) if bipoly_subst_x(D, c).is_zero()]


def fraction_field_root_search(F: BiPoly) -> RootSearchCertificate:
    """Search Q(q) for a root of ``F`` via the UFD divisor criterion on Q[q].

    Only the case where the leading and constant X-coefficients are nonzero
    rationals is supported; then ``g`` and ``h`` are units and every
    candidate root is a rational constant ``c``.  ``F(c)`` is a polynomial in
    q, so each q-coefficient of ``F(c)`` has to vanish separately.
    """
    if F.degree < 1:
        raise UnsupportedCoefficients("need a polynomial of positive degree in X")
    lead, const = F.coeff(F.degree), F.coeff(0)
    if not (_is_nonzero_constant(lead) and _is_nonzero_constant(const)):
        raise UnsupportedCoefficients(
            "leading and constant X-coefficients must be nonzero rationals, "
            f"got {lead.render('q')} and {const.render('q')}")

    content = bipoly_content_x(F)

    # alpha = c: F(c) must vanish in every power of q
    forcing = _forcing_polynomial(F)
    if F.q_degree >= 1:
        cand_values = [] if forcing.is_constant() else rational_roots(forcing)
    else:
        cand_values = rational_root_candidates(QPoly(c.lead for c in F.xcoeffs))
    checks = tuple(_candidate(c, bipoly_subst_x(F, c)) for c in cand_values)
    found = [ch.value for ch in checks if ch.residual.is_zero()]
    conclusion, root = _conclude(found)

    # alpha = 1/h: h^n F(1/h) = 0 is the equation h must satisfy
    E = reversal(F)
    n = E.degree
    h_lhs = BiPoly(E.coeff(k) for k in range(n))
    h_rhs = BiPoly([QPoly()] * n + [-E.coeff(n)])
    deg_lhs = -BiPoly([QPoly(), QPoly()] + [E.coeff(k) for k in range(2, n + 1)])
    deg_rhs = BiPoly([E.coeff(0), E.coeff(1)])
    D = deg_lhs - deg_rhs
    forced_h = _forced_values(D)
    h_forcing = _forcing_polynomial(D)
    if forced_h:
        const_residual = bipoly_subst_x(D, forced_h[0])
    elif not h_forcing.is_constant() and rational_roots(h_forcing):
        c0 = rational_roots(h_forcing)[0]
        const_residual = bipoly_subst_x(D, c0)
    else:
        const_residual = h_forcing

    narrative = (
        CertificateStep(
            "gauss_primitivity", tuple(F.xcoeffs), content,
            "the X-coefficients are coprime in Q[q], so irreducible over Q[q] "
            "implies irreducible over Q(q)"),
        CertificateStep(
            "g_divides_constant", (const,), QPoly([1]),
            f"g(q) | {const.render('q')} in Q[q]; units are absorbed into h, so g(q) = 1"),
        CertificateStep(
            "h_divides_leading", (h_lhs, h_rhs, lead), lead,
            f"alpha = 1/h(q) turns F(alpha) = 0 into {h_lhs.render('h')} = {h_rhs.render('h')}; "
            f"h(q) | {lead.render('q')}"),
        CertificateStep(
            "degree_argument", (deg_lhs, deg_rhs), QPoly([0]),
            f"{deg_lhs.render('h')} = {deg_rhs.render('h')} forces deg h = 0"),
        CertificateStep(
            "constant_case", (D, h_forcing), const_residual,
            f"h = c constant: {D.render('c')} must vanish identically in q; "
            f"the q-coefficients force c to be a root of {h_forcing.render('c')}"),
    )
    return RootSearchCertificate(SYMBOLIC_Q, checks, conclusion, narrative, root, tuple(sorted(found)))


@dataclass(frozen=True)
class Irreducible:
    certificate: RootSearchCertificate


@dataclass(frozen=True)
class Reducible:
    root: Rat
    certificate: RootSearchCertificate


def symbolic_irreducibility(F: BiPoly) -> Union[Irreducible, Reducible]:
    """Decide irreducibility of a primitive quadratic or cubic over Q(q)."""
    if F.degree not in (2, 3):
        raise UnsupportedDegree(f"root search decides irreducibility only in degree 2 or 3, got {F.degree}")
    if bipoly_content_x(F) != QPoly([1]):
        raise NotPrimitive(f"X-content of {F} is {bipoly_content_x(F).render('q')}")
    cert = fraction_field_root_search(F)
    if cert.conclusion == NO_ROOT:
        return Irreducible(cert)
    return Reducible(cert.root, cert)


def h_equation_check(c) -> QPoly:
    """``c^2 (4q^2 + c) - (3c + 2)`` as a polynomial in q; zero iff h = c solves the h-equation."""
    c = as_rat(c)
    return QPoly([c ** 3 - 3 * c - 2, 0, 4 * c * c])
