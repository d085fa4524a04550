"""Seeded randomized self-verification suites shared by the CLI and the tests."""

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from .bivariate import bipoly_eval_q, bisector_cubic
from .constructibility import CONSTRUCTIBLE, NOT_CONSTRUCTIBLE, analyze, constructible_family
from .geometry import cubic_residual, p_sq_from_q_t, p_sq_from_sides, q_sq_from_sides
from .polynomial import poly_eval, square_free_part, sturm_chain, sturm_count
from .report import rat_str

DEFAULT_SEED = 20130101
SYMBOLIC_TAGS = [
    "gauss_primitivity",
    "g_divides_constant",
    "h_divides_leading",
    "degree_argument",
    "constant_case",
]


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failure: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.failure is None and self.passed == self.total


def random_rat(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int = 1000) -> Fraction:
    """Uniform-ish rational in the open interval ``(lo, hi)``."""
    den = rng.randint(1, max_den)
    while math.ceil(hi * den) - math.floor(lo * den) < 2:
        den *= 2
    return Fraction(rng.randint(math.floor(lo * den) + 1, math.ceil(hi * den) - 1), den)


def random_family_s(rng: random.Random, max_den: int = 40) -> Fraction:
    while True:
        s = random_rat(rng, Fraction(0), Fraction(3, 2), max_den)
        if s * s < 2:
            return s


def _run(name: str, count: int, case: Callable[[int], Optional[dict]]) -> SuiteResult:
    res = SuiteResult(name, total=count)
    for i in range(count):
        try:
            bad = case(i)
        except Exception as exc:  # a crash is a failure with its instance
            bad = {"case": i, "error": f"{type(exc).__name__}: {exc}"}
        if bad is not None:
            res.failure = bad
            return res
        res.passed += 1
    return res


def forward_suite(seed: int = DEFAULT_SEED, count: int = 1000) -> SuiteResult:
    rng = random.Random(seed)

    def case(_):
        l = random_rat(rng, Fraction(0), Fraction(1000))
        b = random_rat(rng, Fraction(0), 2 * l)
        try:
            r = cubic_residual(l, b, p_sq_from_sides(l, b), q_sq_from_sides(l, b))
        except Exception as exc:
            return {"l": rat_str(l), "b": rat_str(b), "error": f"{type(exc).__name__}: {exc}"}
        if r != 0:
            return {"l": rat_str(l), "b": rat_str(b), "residual": rat_str(r)}
        return None

    return _run("forward_identity", count, case)


def root_equivalence_suite(seed: int = DEFAULT_SEED, count: int = 500, family: int = 200) -> SuiteResult:
    rng = random.Random(seed + 1)
    F = bisector_cubic()

    def check(q, t, expect_root):
        unit = p_sq_from_q_t(q, t) == 1
        root = poly_eval(bipoly_eval_q(F, q), t) == 0
        if unit != root or (expect_root and not root):
            return {"q": rat_str(q), "t": rat_str(t), "unit_bisector": unit, "cubic_root": root}
        return None

    def case(i):
        if i < count:
            q = random_rat(rng, Fraction(0), Fraction(100))
            t = random_rat(rng, Fraction(1, 2), Fraction(100))
            return check(q, t, False)
        s = random_family_s(rng)
        q, t = constructible_family(s)
        bad = check(q, t, True)
        if bad is None:
            v = analyze(q)
            if v.decision != CONSTRUCTIBLE or v.degree != 1 or v.witness.root != t:
                bad = {"s": rat_str(s), "q": rat_str(q), "degree": v.degree}
        return bad

    return _run("root_equivalence", count + family, case)


def geometric_root_suite(seed: int = DEFAULT_SEED, count: int = 200) -> SuiteResult:
    rng = random.Random(seed + 2)
    F = bisector_cubic()

    def case(_):
        q = random_rat(rng, Fraction(0), Fraction(100))
        if rng.random() < 0.05:
            q = Fraction(100)
        sqf = square_free_part(bipoly_eval_q(F, q))
        n = sturm_count(sturm_chain(sqf), Fraction(1, 2), None)
        return None if n == 1 else {"q": rat_str(q), "count": n}

    return _run("unique_geometric_root", count, case)


def symbolic_suite() -> SuiteResult:
    def case(_):
        v = analyze("symbolic")
        tags = v.witness.certificate.tags if v.witness.certificate else []
        if v.decision != NOT_CONSTRUCTIBLE or v.degree != 3 or tags != SYMBOLIC_TAGS:
            return {"decision": v.decision, "degree": v.degree, "tags": tags}
        return None

    return _run("symbolic_certificate", 1, case)


def run_all(seed: int = DEFAULT_SEED) -> List[SuiteResult]:
    return [
        forward_suite(seed),
        root_equivalence_suite(seed),
        geometric_root_suite(seed),
        symbolic_suite(),
    ]
