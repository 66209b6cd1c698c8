"""Realizability classification and closed-form seven-element synthesis.

Classification of a canonical target k(s+z)^2/(s+p)^2 proceeds in a fixed
order and reports every condition it evaluates:

1. positive-realness: p^2 - 6zp + z^2 <= 0;
2. four-element realizability: p = 3z or p = z/3;
3. five-element realizability: p/z in (1/3, 3), p = (2+sqrt2)z, or
   p = z/(2+sqrt2), the algebraic points via the exact surrogates
   p^2 - 4zp + 2z^2 = 0 and 2p^2 - 4zp + z^2 = 0;
4. the seven-element catalog conditions (fig3a, n4a, n5a), first on the
   parameters themselves and then on their inv/dual/gdu images, so the
   catalog is closed under the transform group (a transformed hit is
   synthesized for the transformed parameters and the network is mapped
   back through the same transform).

The three synthesizers return fully valued seven-element networks:

* fig3a: p1 is the unique positive root of
  (3z-p) p1^2 - 2p(p-z) p1 + p^2 (p-3z) = 0 (the root product is -p^2 < 0,
  so exactly one positive root exists), and the element values follow the
  closed forms  R1 = q/p1, R2 = mq/(q-m p1), C1 = (q-m p1)/q^2,
  R21 = alpha, L21 = alpha/(2p+p1), L22 = alpha*beta/gamma, C21 = 1/beta
  with  alpha = k(p-z)(2p+p1)(p^2+zp-2zp1)/(2p^4),
        beta  = 2k(p-z)(-z p1^2 + p(p-z) p1 + z p^2)/p^3,
        gamma = k p1 (p-z)(p^2+zp-2zp1)/(2p^2),
        q = k z^2 p1 / p^2 and m = k - alpha.
* n4a: applies when 16p^4 - 40zp^3 + 31z^2p^2 - 10z^3p + z^4 = 0 and
  p < z/(2+sqrt5) (surrogate p^2 + 4zp - z^2 < 0); p1 is the common root of
  two quadratics, and  R1 = m, L1 = m/(p+p1), C1 = (p+p1)/(m p p1) feed the
  three-element half while C21 = 1/alpha, C22, R21, L21 follow from
  alpha = k(p1+2z-p), beta = k(2zp1+z^2-p1 p), gamma = k p1 (z^2-p^2), m=k.
* n5a: applies on the degree-10 condition with the same bound; p1 is the
  common root of a cubic and a quartic, with
  q = p1 p/(p1+p), gamma = k p1 z^2, alpha = k p1 z^2/(p(p+2p1)),
  beta = 2k p1 z^2 (p+p1)^2/((p+2p1)^2 p) and R1 = m, C1 = 1/(mq),
  L1 = m/(p1+p).

Equality conditions on irrational loci are meant to be fed with midpoints of
isolating intervals (see n4a_root_interval / n5a_root_interval); raw scalars
are tested with |value| <= 1e-20 after normalizing z to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import mpmath
from mpmath import mp, mpf

from .biquad import CanonicalBiquad, to_rational_fn, transform_params
from .network import SPNet, apply_transform, build_config, to_netlist_json
from .ratpoly import (
    Poly,
    QuadraticRational,
    gcd,
    is_exact_scalar,
    isolate_root,
    scalar_to_str,
    squarefree_part,
    sturm_count,
    to_mpf,
)
from .verify import verify_numeric

__all__ = [
    "RealizationClass",
    "ConditionRecord",
    "RealizationReport",
    "NotRealizableError",
    "classify",
    "four_element_condition",
    "five_element_condition",
    "check_fig3a_condition",
    "check_n4a_condition",
    "check_n5a_condition",
    "synth_fig3a",
    "synth_n4a",
    "synth_n5a",
    "lemma_three_element",
    "lemma_four_element",
    "lemma_five_element_two_reactive",
    "auxiliary_condition_polynomials",
    "fig3a_p1_quadratic",
    "n4a_p1_system",
    "n5a_p1_system",
    "aux_p1_systems",
    "n4a_condition_poly",
    "n5a_condition_poly",
    "n4a_root_interval",
    "n5a_root_interval",
    "count_roots_below_sqrt5_bound",
    "EQUALITY_TOL",
]

EQUALITY_TOL = Fraction(1, 10**20)

# condition polynomials in eta = p/z (z normalized to 1), ascending degree
PR_POLY = Poly([Fraction(1), Fraction(-6), Fraction(1)])  # eta^2 - 6 eta + 1
FIG3A_QUARTIC = Poly([Fraction(5), Fraction(-14), Fraction(6), Fraction(-6), Fraction(1)])
N4A_QUARTIC = Poly([Fraction(1), Fraction(-10), Fraction(31), Fraction(-40), Fraction(16)])
N5A_DEGREE10 = Poly(
    [
        Fraction(2),
        Fraction(-28),
        Fraction(161),
        Fraction(-524),
        Fraction(1064),
        Fraction(-1372),
        Fraction(1066),
        Fraction(-476),
        Fraction(118),
        Fraction(-16),
        Fraction(1),
    ]
)
# eta < 1/(2+sqrt5)  <=>  eta^2 + 4 eta - 1 < 0
SQRT5_BOUND_POLY = Poly([Fraction(-1), Fraction(4), Fraction(1)])
# eta = 2 + sqrt2  <=>  eta^2 - 4 eta + 2 = 0 (also vanishes at 2 - sqrt2,
# which lies inside (1/3, 3) anyway)
FIVE_SURROGATE_HI = Poly([Fraction(2), Fraction(-4), Fraction(1)])
# eta = 1/(2+sqrt2)  <=>  2 eta^2 - 4 eta + 1 = 0
FIVE_SURROGATE_LO = Poly([Fraction(1), Fraction(-4), Fraction(2)])


class NotRealizableError(ValueError):
    """The requested configuration's condition does not hold."""


class RealizationClass(Enum):
    NOT_POSITIVE_REAL = "NotPositiveReal"
    FOUR_ELEMENT = "FourElement"
    FIVE_ELEMENT = "FiveElement"
    SEVEN_ELEMENT_CATALOG = "SevenElementCatalog"
    UNKNOWN_WITHIN_SCOPE = "UnknownWithinScope"


@dataclass(frozen=True)
class ConditionRecord:
    name: str
    value: str
    passed: bool


@dataclass
class RealizationReport:
    target: CanonicalBiquad
    klass: RealizationClass
    config: Optional[str]
    transform: Optional[str]
    conditions: List[ConditionRecord]
    network: Optional[SPNet]
    residual: Optional[object]
    precision_bits: int

    def to_json(self) -> dict:
        out = {
            "class": self.klass.value,
            "config": self.config,
            "transform": self.transform,
            "conditions": [
                {"name": c.name, "value": c.value, "pass": c.passed}
                for c in self.conditions
            ],
            "network": None if self.network is None else to_netlist_json(self.network),
            "residual": None if self.residual is None else scalar_to_str(self.residual),
            "precision_bits": self.precision_bits,
        }
        return out


# ---------------------------------------------------------------------------
# scalar predicates


def _eta(z, p):
    """p/z, exact when both are exact."""
    if is_exact_scalar(z) and is_exact_scalar(p):
        if isinstance(p, QuadraticRational) or isinstance(z, QuadraticRational):
            return p / z
        return Fraction(p) / Fraction(z)
    return to_mpf(p) / to_mpf(z)


def _eq_zero(value) -> bool:
    """|value| <= 1e-20, exactly for exact scalars.

    Equality loci are measure-zero; accepting near-zero values lets callers
    supply isolating-interval midpoints (or long decimal literals) for the
    irrational condition roots.
    """
    if isinstance(value, QuadraticRational):
        return abs(value) <= EQUALITY_TOL
    if is_exact_scalar(value):
        return abs(Fraction(value)) <= EQUALITY_TOL
    return abs(value) <= to_mpf(EQUALITY_TOL)


def _record(name, value, passed) -> ConditionRecord:
    return ConditionRecord(name, scalar_to_str(value), bool(passed))


# ---------------------------------------------------------------------------
# realizability conditions


def _pr_records(z, p):
    eta = _eta(z, p)
    val = PR_POLY.eval(eta)
    passed = val <= 0
    return passed, [_record("positive_real[eta^2-6eta+1<=0]", val, passed)]


def four_element_condition(z, p) -> Tuple[bool, List[ConditionRecord]]:
    """p = 3z or p = z/3."""
    eta = _eta(z, p)
    hi = eta - 3
    lo = 3 * eta - 1
    recs = [
        _record("four_element[eta=3]", hi, _eq_zero(hi)),
        _record("four_element[eta=1/3]", lo, _eq_zero(lo)),
    ]
    return _eq_zero(hi) or _eq_zero(lo), recs


def five_element_condition(z, p) -> Tuple[bool, List[ConditionRecord]]:
    """p/z in (1/3, 3), or p = (2+sqrt2)z, or p = z/(2+sqrt2)."""
    eta = _eta(z, p)
    in_interval = (3 * eta - 1 > 0) and (eta - 3 < 0)
    hi = FIVE_SURROGATE_HI.eval(eta)
    lo = FIVE_SURROGATE_LO.eval(eta)
    recs = [
        _record("five_element[1/3<eta<3]", eta, in_interval),
        _record("five_element[eta=2+sqrt2]", hi, _eq_zero(hi) and eta > 1),
        _record("five_element[eta=1/(2+sqrt2)]", lo, _eq_zero(lo) and eta < 1),
    ]
    return any(r.passed for r in recs), recs


def _fig3a_records(z, p):
    eta = _eta(z, p)
    sign_val = (eta - 1) * (eta - 3)
    quartic_val = FIG3A_QUARTIC.eval(eta)
    ok = sign_val > 0 and quartic_val < 0
    recs = [
        _record("fig3a[(eta-1)(eta-3)>0]", sign_val, sign_val > 0),
        _record("fig3a[quartic(eta)<0]", quartic_val, quartic_val < 0),
    ]
    return ok, recs


def check_fig3a_condition(z, p) -> bool:
    """(p-z)(p-3z) > 0 and p^4 - 6zp^3 + 6z^2p^2 - 14z^3p + 5z^4 < 0."""
    return _fig3a_records(z, p)[0]


def _root_locus_records(tag, poly, z, p):
    eta = _eta(z, p)
    poly_val = poly.eval(eta)
    bound_val = SQRT5_BOUND_POLY.eval(eta)
    ok = _eq_zero(poly_val) and bound_val < 0
    recs = [
        _record("%s[condition_poly(eta)=0]" % tag, poly_val, _eq_zero(poly_val)),
        _record("%s[eta<1/(2+sqrt5)]" % tag, bound_val, bound_val < 0),
    ]
    return ok, recs


def check_n4a_condition(z, p) -> bool:
    """16p^4 - 40zp^3 + 31z^2p^2 - 10z^3p + z^4 = 0 with p < z/(2+sqrt5)."""
    return _root_locus_records("n4a", N4A_QUARTIC, z, p)[0]


def check_n5a_condition(z, p) -> bool:
    """Degree-10 condition polynomial = 0 with p < z/(2+sqrt5)."""
    return _root_locus_records("n5a", N5A_DEGREE10, z, p)[0]


# ---------------------------------------------------------------------------
# p1 systems (coefficients in any ring with +,-,*: scalars or Poly)


def fig3a_p1_quadratic(z, p) -> Poly:
    """(3z-p) p1^2 - 2p(p-z) p1 + p^2(p-3z), ascending in p1."""
    return Poly([p * p * (p - 3 * z), -2 * p * (p - z), 3 * z - p])


def n4a_p1_system(z, p) -> Tuple[Poly, Poly]:
    """The two p1-quadratics whose common root drives the n4a synthesis."""
    f = Poly([-(p * p) * (p - 2 * z), z * (4 * p - z), 2 * p])
    g = Poly(
        [
            -(p**4 - 5 * z * z * p * p + 4 * z**3 * p - z**4),
            2 * p * z * (2 * p - z),
            2 * p * p - z * z,
        ]
    )
    return f, g


def n5a_p1_system(z, p) -> Tuple[Poly, Poly]:
    """The p1 cubic and quartic whose common root drives the n5a synthesis."""
    f = Poly(
        [
            -(p**3) * (p - 2 * z),
            -p * (3 * p * p - 6 * z * p + z * z),
            -(p * p - 4 * z * p + z * z),
            2 * p,
        ]
    )
    g = Poly(
        [
            z * z * p**4,
            -(p**3) * (p + z) * (p - 3 * z),
            -2 * p * p * (2 * p * p - 5 * z * p - z * z),
            -2 * p * (2 * p * p - 8 * z * p + z * z),
            2 * z * (4 * p - z),
        ]
    )
    return f, g


def aux_p1_systems() -> Dict[str, dict]:
    """Other p1 eliminations from the same catalog analysis, paired with
    their expected resultant factorizations (cross-check oracles only; no
    realizability conclusion is drawn from them)."""

    def sys_octic(z, p):
        f = Poly([-(2 * p * p - 4 * z * p + z * z), 2 * p, _one_of(p)])
        g = Poly([2 * p**3 * (p - 2 * z), -4 * p**3, p * p - 4 * z * p + z * z])
        return f, g

    def exp_octic(z, p):
        return (
            8 * p**8
            + 48 * z * p**7
            - 312 * z**2 * p**6
            + 624 * z**3 * p**5
            - 617 * z**4 * p**4
            + 336 * z**5 * p**3
            - 102 * z**6 * p**2
            + 16 * z**7 * p
            - z**8
        )

    def sys_sextic(z, p):
        f = Poly(
            [
                -p * p * (p * p - 2 * z * p + 2 * z * z),
                -p * (p * p - 2 * z * p + 3 * z * z),
                (p - z) * (p + z),
            ]
        )
        g = Poly([z * z * p, -(p * p - 2 * z * p - z * z), 2 * z])
        return f, g

    def exp_sextic(z, p):
        return -(p**4) * (
            p**6
            - 8 * z * p**5
            + 20 * z**2 * p**4
            - 28 * z**3 * p**3
            + 21 * z**4 * p**2
            - 12 * z**5 * p
            + 2 * z**6
        )

    def sys_quartic(z, p):
        f = Poly(
            [
                -2 * p**3 * (p - 2 * z),
                -2 * p * (2 * p * p - 4 * z * p + z * z),
                z * (4 * p - z),
                2 * p,
            ]
        )
        g = Poly(
            [
                2 * z * z * p**3,
                -2 * p**3 * (p - 2 * z),
                -2 * p * (p * p - 4 * z * p + z * z),
                z * (4 * p - z),
            ]
        )
        return f, g

    def exp_quartic(z, p):
        base = 2 * p**4 - 12 * z * p**3 + 18 * z**2 * p**2 - 8 * z**3 * p + z**4
        return -4 * p**6 * z**4 * base * base

    def exp_n4a(z, p):
        quartic = (
            16 * p**4 - 40 * z * p**3 + 31 * z**2 * p**2 - 10 * z**3 * p + z**4
        )
        return z * z * (p + z) * (p - z) ** 3 * quartic

    def exp_n5a(z, p):
        deg10 = (
            p**10
            - 16 * z * p**9
            + 118 * z**2 * p**8
            - 476 * z**3 * p**7
            + 1066 * z**4 * p**6
            - 1372 * z**5 * p**5
            + 1064 * z**6 * p**4
            - 524 * z**7 * p**3
            + 161 * z**8 * p**2
            - 28 * z**9 * p
            + 2 * z**10
        )
        return -4 * z**3 * p**10 * (4 * p - z) * deg10

    return {
        "n4a": {"system": n4a_p1_system, "expected": exp_n4a},
        "n5a": {"system": n5a_p1_system, "expected": exp_n5a},
        "octic": {"system": sys_octic, "expected": exp_octic},
        "sextic": {"system": sys_sextic, "expected": exp_sextic},
        "quartic_squared": {"system": sys_quartic, "expected": exp_quartic},
    }


def _one_of(x):
    """Multiplicative unit matching x's ring (scalar 1 or constant Poly)."""
    if isinstance(x, Poly):
        return Poly.constant(Fraction(1))
    if is_exact_scalar(x):
        return Fraction(1)
    return x / x


def n4a_condition_poly() -> Poly:
    return N4A_QUARTIC


def n5a_condition_poly() -> Poly:
    return N5A_DEGREE10


def auxiliary_condition_polynomials() -> Dict[str, Poly]:
    """Named condition polynomials (z normalized to 1) for root isolation
    and resultant cross-checks.  The entries beyond the three synthesis
    conditions come from eliminations whose lemmas conclude elsewhere; no
    realizability decision is drawn from them here."""
    octic = Poly(
        [Fraction(c) for c in (-1, 16, -102, 336, -617, 624, -312, 48, 8)]
    )
    sextic = Poly([Fraction(c) for c in (2, -12, 21, -28, 20, -8, 1)])
    quartic2 = Poly([Fraction(c) for c in (1, -8, 18, -12, 2)])
    # (5z-3p) p1^2 + (p-3z) p^2 at z = 1, as a p1-polynomial over Q[p]
    p1_quad = Poly(
        [
            Poly([Fraction(0), Fraction(0), Fraction(-3), Fraction(1)]),
            Poly.zero(),
            Poly([Fraction(5), Fraction(-3)]),
        ]
    )
    return {
        "fig3a_quartic": FIG3A_QUARTIC,
        "n4a_quartic": N4A_QUARTIC,
        "n5a_degree10": N5A_DEGREE10,
        "pr_boundary": PR_POLY,
        "octic_resultant_factor": octic,
        "sextic_resultant_factor": sextic,
        "quartic_resultant_factor": quartic2,
        "p1_quadratic_5z_3p": p1_quad,
    }


# ---------------------------------------------------------------------------
# root isolation for the n4a / n5a condition loci


def count_roots_below_sqrt5_bound(poly: Poly) -> int:
    """Distinct real roots of poly in (0, 1/(2+sqrt5)), exactly.

    The endpoint is irrational (the positive root of eta^2 + 4 eta - 1);
    rational under/over approximations are tightened until the Sturm counts
    agree.  Rejects polynomials sharing a root with the endpoint minimal
    polynomial, where the half-open convention would be ambiguous.
    """
    if gcd(squarefree_part(poly), SQRT5_BOUND_POLY).degree > 0:
        raise ValueError("polynomial vanishes at the interval endpoint")
    width = Fraction(1, 2**20)
    for _ in range(8):
        lo, hi = isolate_root(SQRT5_BOUND_POLY, Fraction(0), Fraction(1), width)
        c_lo = sturm_count(poly, Fraction(0), lo)
        c_hi = sturm_count(poly, Fraction(0), hi)
        if c_lo == c_hi:
            return c_lo
        width /= 2**20
    raise RuntimeError("could not stabilize the endpoint approximation")


def _isolating_interval_on_locus(poly: Poly, width) -> Tuple[Fraction, Fraction]:
    if count_roots_below_sqrt5_bound(poly) != 1:
        raise ValueError("condition polynomial does not have a unique root in range")
    under, _ = isolate_root(SQRT5_BOUND_POLY, Fraction(0), Fraction(1), Fraction(1, 2**40))
    if sturm_count(poly, Fraction(0), under) != 1:
        raise RuntimeError("root lies between the endpoint approximations")
    return isolate_root(poly, Fraction(0), under, width)


def n4a_root_interval(width=Fraction(1, 10**30)) -> Tuple[Fraction, Fraction]:
    """Isolating interval for the unique n4a condition root in
    (0, 1/(2+sqrt5)), refined to the requested width (z = 1)."""
    return _isolating_interval_on_locus(N4A_QUARTIC, Fraction(width))


def n5a_root_interval(width=Fraction(1, 10**30)) -> Tuple[Fraction, Fraction]:
    """Isolating interval for the unique n5a condition root (z = 1)."""
    return _isolating_interval_on_locus(N5A_DEGREE10, Fraction(width))


# ---------------------------------------------------------------------------
# synthesis


def _exact_sqrt(value: Fraction):
    """Fraction square root if value is a perfect rational square, else None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _positive_or_bug(values: dict, context: str) -> None:
    bad = [name for name, v in values.items() if not v > 0]
    if bad:
        raise RuntimeError(
            "internal inconsistency in %s: nonpositive element value(s) %s"
            % (context, ", ".join(sorted(bad)))
        )


def synth_fig3a(b: CanonicalBiquad, precision_bits: int = 256, exact: bool = False) -> SPNet:
    """Closed-form fig3a synthesis (seven elements, four reactive).

    With ``exact=True`` (rational k, z, p only) the element values are exact
    quadratic-extension scalars and the result verifies exactly; otherwise
    values are mpf at the requested precision.
    """
    with mp.workprec(precision_bits):
        if not check_fig3a_condition(b.z, b.p):
            raise NotRealizableError(
                "fig3a condition fails for z=%s, p=%s" % (b.z, b.p)
            )

    def finish(k, z, p, p1) -> SPNet:
        alpha = k * (p - z) * (2 * p + p1) * (p * p + z * p - 2 * z * p1) / (2 * p**4)
        beta = 2 * k * (p - z) * (-z * p1 * p1 + p * (p - z) * p1 + z * p * p) / p**3
        gamma = k * p1 * (p - z) * (p * p + z * p - 2 * z * p1) / (2 * p * p)
        q = k * z * z * p1 / (p * p)
        m = k - alpha
        values = {
            "R1": q / p1,
            "R2": m * q / (q - m * p1),
            "C1": (q - m * p1) / (q * q),
            "R21": alpha,
            "L21": alpha / (2 * p + p1),
            "L22": alpha * beta / gamma,
            "C21": 1 / beta,
        }
        _positive_or_bug(values, "fig3a synthesis")
        return build_config("fig3a", values)

    def unique_positive(roots):
        positive = [r for r in roots if r > 0]
        if len(positive) != 1:
            raise RuntimeError(
                "expected exactly one positive p1 root, found %d" % len(positive)
            )
        return positive[0]

    if exact:
        if not all(isinstance(v, (int, Fraction)) for v in (b.k, b.z, b.p)):
            raise ValueError("exact synthesis requires rational k, z, p")
        k, z, p = Fraction(b.k), Fraction(b.z), Fraction(b.p)
        disc = 2 * (p * p - 4 * p * z + 5 * z * z)
        root_of_disc = _exact_sqrt(disc)
        if root_of_disc is None:
            # adjoining sqrt(disc) only gives a field when disc is not a
            # rational square
            sq = QuadraticRational(0, 1, disc)
        else:
            sq = root_of_disc
        roots = [(p * (p - z) + s * p * sq) / (3 * z - p) for s in (1, -1)]
        return finish(k, z, p, unique_positive(roots))
    with mp.workprec(precision_bits):
        k, z, p = (to_mpf(v) for v in (b.k, b.z, b.p))
        sq = mpmath.sqrt(2 * (p * p - 4 * p * z + 5 * z * z))
        roots = [(p * (p - z) + s * p * sq) / (3 * z - p) for s in (1, -1)]
        return finish(k, z, p, unique_positive(roots))


def _newton_polish(poly: Poly, x0, iters: int = 60):
    d = poly.derivative()
    x = x0
    for _ in range(iters):
        fx = poly.eval(x)
        dx = d.eval(x)
        if dx == 0:
            break
        step = fx / dx
        x = x - step
        if abs(step) <= abs(x) * mpf(10) ** (-(mp.prec // 3)):
            fx = poly.eval(x)
            dx = d.eval(x)
            if dx != 0:
                x = x - fx / dx
            break
    return x


def _common_root(f: Poly, g: Poly):
    """Near-common root of two inexact polynomials via the Euclidean chain.

    The chain is run down to a linear remainder whose root seeds a Newton
    polish on the lower-degree input; both inputs are then required to
    nearly vanish there.
    """
    a, b = (f, g) if f.degree >= g.degree else (g, f)
    while b.degree > 1:
        a, b = b, a % b
    if b.degree != 1:
        raise NotRealizableError("p1 elimination degenerated; no common root")
    candidate = -b.coeffs[0] / b.coeffs[1]
    low = f if f.degree <= g.degree else g
    root = _newton_polish(low, candidate)
    scale_f = max(abs(c) for c in f.coeffs)
    scale_g = max(abs(c) for c in g.coeffs)
    if abs(f.eval(root)) > scale_f * mpf("1e-10") or abs(g.eval(root)) > scale_g * mpf(
        "1e-10"
    ):
        raise NotRealizableError("the two p1 systems share no root at this p")
    return root


def synth_n4a(b: CanonicalBiquad, precision_bits: int = 256) -> SPNet:
    """Closed-form n4a synthesis (seven elements, five reactive)."""
    with mp.workprec(precision_bits):
        if not check_n4a_condition(b.z, b.p):
            raise NotRealizableError("n4a condition fails for z=%s, p=%s" % (b.z, b.p))
        k, z, p = (to_mpf(v) for v in (b.k, b.z, b.p))
        f, g = n4a_p1_system(z, p)
        # both quadratics can have two positive roots; p1 is the common one
        aa, bb, cc = f.coeffs[2], f.coeffs[1], f.coeffs[0]
        sq = mpmath.sqrt(bb * bb - 4 * aa * cc)
        roots = [(-bb + sq) / (2 * aa), (-bb - sq) / (2 * aa)]
        p1 = min(roots, key=lambda r: abs(g.eval(r)))
        scale_g = max(abs(c) for c in g.coeffs)
        if abs(g.eval(p1)) > scale_g * mpf("1e-10"):
            raise NotRealizableError("the two p1 quadratics share no root at this p")
        return _build_n_values(k, z, p, p1, "fig4a")


def _build_n_values(k, z, p, p1, config_id: str) -> SPNet:
    alpha = k * (p1 + 2 * z - p)
    beta = k * (2 * z * p1 + z * z - p1 * p)
    gamma = k * p1 * (z - p) * (z + p)
    m = k
    d = 2 * alpha * p + alpha * p1 - beta
    if config_id == "fig4a":
        first = {"R1": m, "L1": m / (p + p1), "C1": (p + p1) / (m * p * p1)}
    else:
        q = p1 * p / (p1 + p)
        gamma = k * p1 * z * z
        alpha = k * p1 * z * z / (p * (p + 2 * p1))
        beta = 2 * k * p1 * z * z * (p + p1) ** 2 / ((p + 2 * p1) ** 2 * p)
        d = 2 * alpha * p + alpha * p1 - beta
        first = {"R1": m, "C1": 1 / (m * q), "L1": m / (p1 + p)}
    values = dict(first)
    values.update(
        {
            "C21": 1 / alpha,
            "C22": d / (alpha * beta),
            "R21": alpha * alpha / d,
            "L21": alpha * alpha * beta / (gamma * d),
        }
    )
    _positive_or_bug(values, "%s synthesis" % config_id)
    return build_config(config_id, values)


def synth_n5a(b: CanonicalBiquad, precision_bits: int = 256) -> SPNet:
    """Closed-form n5a synthesis (seven elements, five reactive)."""
    with mp.workprec(precision_bits):
        if not check_n5a_condition(b.z, b.p):
            raise NotRealizableError("n5a condition fails for z=%s, p=%s" % (b.z, b.p))
        k, z, p = (to_mpf(v) for v in (b.k, b.z, b.p))
        f, g = n5a_p1_system(z, p)
        p1 = _common_root(f, g)
        if not p1 > 0:
            raise NotRealizableError("common p1 root is not positive")
        return _build_n_values(k, z, p, p1, "fig5a")


_SYNTH = {
    "fig3a": synth_fig3a,
    "n4a": synth_n4a,
    "fig4a": synth_n4a,
    "n5a": synth_n5a,
    "fig5a": synth_n5a,
}


def synth_config(config_id: str, b: CanonicalBiquad, precision_bits: int = 256) -> SPNet:
    key = config_id.lower()
    if key not in _SYNTH:
        raise KeyError("no synthesizer for configuration %r" % (config_id,))
    return _SYNTH[key](b, precision_bits=precision_bits)


# ---------------------------------------------------------------------------
# classification


_CATALOG_CHECKS = (
    ("fig3a", _fig3a_records),
    ("n4a", lambda z, p: _root_locus_records("n4a", N4A_QUARTIC, z, p)),
    ("n5a", lambda z, p: _root_locus_records("n5a", N5A_DEGREE10, z, p)),
)

_TRANSFORM_ORDER = ("inv", "dual", "gdu")


def classify(
    b: CanonicalBiquad,
    precision_bits: int = 256,
    tol=Fraction(1, 10**20),
) -> RealizationReport:
    """Classify a canonical biquadratic target and synthesize when the
    seven-element catalog (closed under inv/dual/gdu) applies.

    Every condition consulted appears in the report, in the fixed order
    positive-real, four-element, five-element, fig3a, n4a, n5a, then the
    transform closure; the class is the first hit.  All conditions depend
    only on eta = p/z, and on parameters inv and dual both act as
    eta -> 1/eta while gdu fixes eta, so a transformed hit always reports
    the first transform in the order (the synthesized networks would differ,
    but each maps back to a valid realization of the input).
    """
    conditions: List[ConditionRecord] = []
    with mp.workprec(precision_bits):
        pr_ok, recs = _pr_records(b.z, b.p)
        conditions.extend(recs)
        four_ok, recs = four_element_condition(b.z, b.p)
        conditions.extend(recs)
        five_ok, recs = five_element_condition(b.z, b.p)
        conditions.extend(recs)

        catalog_hit: Optional[Tuple[str, Optional[str]]] = None
        for config_name, checker in _CATALOG_CHECKS:
            ok, recs = checker(b.z, b.p)
            conditions.extend(recs)
            if ok and catalog_hit is None:
                catalog_hit = (config_name, None)
        for t in _TRANSFORM_ORDER:
            bt = transform_params(b, t)
            for config_name, checker in _CATALOG_CHECKS:
                ok, recs = checker(bt.z, bt.p)
                conditions.extend(
                    ConditionRecord("%s[%s]" % (r.name, t), r.value, r.passed)
                    for r in recs
                )
                if ok and catalog_hit is None:
                    catalog_hit = (config_name, t)

    network = None
    residual = None
    config = None
    transform = None
    if not pr_ok:
        klass = RealizationClass.NOT_POSITIVE_REAL
    elif four_ok:
        klass = RealizationClass.FOUR_ELEMENT
    elif five_ok:
        klass = RealizationClass.FIVE_ELEMENT
    elif catalog_hit is not None:
        klass = RealizationClass.SEVEN_ELEMENT_CATALOG
        config, transform = catalog_hit
        bt = b if transform is None else transform_params(b, transform)
        net_t = synth_config(config, bt, precision_bits=precision_bits)
        with mp.workprec(precision_bits):
            network = net_t if transform is None else apply_transform(net_t, transform)
            target_rf = to_rational_fn(b)
        ok, residual = verify_numeric(
            network, target_rf, tol=tol, precision_bits=precision_bits
        )
        if not ok:
            raise RuntimeError(
                "synthesized network failed verification (residual %s)"
                % scalar_to_str(residual)
            )
    else:
        klass = RealizationClass.UNKNOWN_WITHIN_SCOPE
    return RealizationReport(
        target=b,
        klass=klass,
        config=config,
        transform=transform,
        conditions=conditions,
        network=network,
        residual=residual,
        precision_bits=precision_bits,
    )


# ---------------------------------------------------------------------------
# the three / four / five element lemma evaluators


def lemma_three_element(f) -> Tuple[bool, Optional[int]]:
    """Three-element realizability of (a s^2 + b s + g)/(s+p)^2.

    Conditions, first hit reported: 1. a = 0 and g = 0; 2. b = 0 and
    a p^2 - g = 0; 3. g = 0 and a p - 2b = 0; 4. a = 0 and 2bp - g = 0;
    5. a p^2 - b p + g = 0 (common factor with the denominator).
    """
    a, bb, g, p = f.alpha, f.beta, f.gamma, f.p
    conds = [
        _eq_zero(a) and _eq_zero(g),
        _eq_zero(bb) and _eq_zero(a * p * p - g),
        _eq_zero(g) and _eq_zero(a * p - 2 * bb),
        _eq_zero(a) and _eq_zero(2 * bb * p - g),
        _eq_zero(a * p * p - bb * p + g),
    ]
    for i, ok in enumerate(conds, start=1):
        if ok:
            return True, i
    return False, None


def lemma_four_element(f) -> Tuple[bool, Optional[int]]:
    """Four-element realizability; requires lemma_three_element false."""
    ok3, _ = lemma_three_element(f)
    if ok3:
        raise ValueError("four-element lemma requires the three-element condition false")
    a, bb, g, p = f.alpha, f.beta, f.gamma, f.p
    pos = a > 0 and bb > 0 and g > 0
    conds = [
        _eq_zero(a) and g < 2 * bb * p,
        _eq_zero(g) and a * p < 2 * bb,
        pos and _eq_zero(a * p * p - g),
        pos
        and a * p * p < g
        and (
            _eq_zero(3 * a * p * p + g - 2 * bb * p)
            or _eq_zero(bb * bb * p * p + g * g - a * g * p * p - 2 * bb * g * p)
        ),
        pos
        and a * p * p > g
        and (
            _eq_zero(a * p * p + 3 * g - 2 * bb * p)
            or _eq_zero(a * a * p * p + bb * bb - 2 * a * bb * p - a * g)
        ),
        pos
        and _eq_zero(
            a * a * p**4 - 2 * a * bb * p**3 + 6 * a * g * p * p - 2 * bb * g * p + g * g
        ),
    ]
    for i, ok in enumerate(conds, start=1):
        if ok:
            return True, i
    return False, None


def lemma_five_element_two_reactive(f) -> Tuple[bool, Optional[int]]:
    """Two-reactive five-element realizability; requires strictly positive
    numerator coefficients and both prior lemma conditions false."""
    a, bb, g, p = f.alpha, f.beta, f.gamma, f.p
    if not (a > 0 and bb > 0 and g > 0):
        raise ValueError("five-element lemma requires alpha, beta, gamma > 0")
    ok3, _ = lemma_three_element(f)
    if ok3:
        raise ValueError("five-element lemma requires the three-element condition false")
    ok4, _ = lemma_four_element(f)
    if ok4:
        raise ValueError("five-element lemma requires the four-element condition false")
    conds = [
        a * p * p > g and a * p * p + 3 * g - 2 * bb * p < 0,
        a * p * p > g and a * a * p * p + bb * bb - 2 * a * bb * p - a * g < 0,
        a * p * p < g and 3 * a * p * p + g - 2 * bb * p < 0,
        a * p * p < g and bb * bb * p * p + g * g - a * g * p * p - 2 * bb * g * p < 0,
    ]
    for i, ok in enumerate(conds, start=1):
        if ok:
            return True, i
    return False, None
