"""Target impedance types and positive-realness.

Three forms are used throughout:

* ``CanonicalBiquad``:  Z(s) = k (s+z)^2 / (s+p)^2 with k, z, p > 0, p != z;
* ``GeneralBiquad``:    Z(s) = (A s^2 + B s + C) / (D s^2 + E s + F);
* ``PoleSquaredForm``:  F(s) = (a s^2 + b s + g) / (s+p)^2, nonnegative
  numerator coefficients (zero coefficients are meaningful here).

Positive-realness of the general form is the classical biquadratic test
(sqrt(AF) - sqrt(CD))^2 <= BE, evaluated exactly by squaring (no floating
square roots); for the canonical form it collapses to p^2 - 6zp + z^2 <= 0,
i.e. p/z in [3 - 2*sqrt(2), 3 + 2*sqrt(2)].

The three parameter transforms mirror the network transforms:
Dual: (k,z,p) -> (1/k, p, z); Inv: (k z^2/p^2, 1/z, 1/p);
GDu: (p^2/(k z^2), 1/p, 1/z).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .ratpoly import (
    Poly,
    RationalFn,
    is_exact_scalar,
    scalar_from_str,
    scalar_to_str,
)

__all__ = [
    "CanonicalBiquad",
    "GeneralBiquad",
    "PoleSquaredForm",
    "canonical_to_general",
    "is_positive_real",
    "canonical_positive_real",
    "transform_params",
    "to_rational_fn",
    "target_from_json",
    "target_to_json",
]


def _positive(name, value):
    if not value > 0:
        raise ValueError("%s must be strictly positive" % name)


def _nonnegative(name, value):
    if value < 0:
        raise ValueError("%s must be nonnegative" % name)


@dataclass(frozen=True)
class CanonicalBiquad:
    """Z(s) = k (s+z)^2 / (s+p)^2, double zero at -z and double pole at -p."""

    k: object
    z: object
    p: object

    def __post_init__(self):
        _positive("k", self.k)
        _positive("z", self.z)
        _positive("p", self.p)
        if self.p == self.z:
            raise ValueError("p != z is required (otherwise Z is a resistor)")

    def is_exact(self) -> bool:
        return all(is_exact_scalar(v) for v in (self.k, self.z, self.p))


@dataclass(frozen=True)
class GeneralBiquad:
    A: object
    B: object
    C: object
    D: object
    E: object
    F: object

    def __post_init__(self):
        for name in "ABCDEF":
            _nonnegative(name, getattr(self, name))
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise ValueError("numerator is identically zero")
        if self.D == 0 and self.E == 0 and self.F == 0:
            raise ValueError("denominator is identically zero")

    def coeffs(self) -> Tuple:
        return (self.A, self.B, self.C, self.D, self.E, self.F)


@dataclass(frozen=True)
class PoleSquaredForm:
    """F(s) = (alpha s^2 + beta s + gamma) / (s+p)^2."""

    alpha: object
    beta: object
    gamma: object
    p: object

    def __post_init__(self):
        _nonnegative("alpha", self.alpha)
        _nonnegative("beta", self.beta)
        _nonnegative("gamma", self.gamma)
        _positive("p", self.p)
        if self.alpha == 0 and self.beta == 0 and self.gamma == 0:
            raise ValueError("numerator is identically zero")


Target = Union[CanonicalBiquad, GeneralBiquad, PoleSquaredForm]


def canonical_to_general(b: CanonicalBiquad, x) -> GeneralBiquad:
    """Expand k(s+z)^2/(s+p)^2 with an arbitrary common scale x > 0."""
    _positive("x", x)
    return GeneralBiquad(
        A=b.k * x,
        B=2 * b.k * b.z * x,
        C=b.k * b.z * b.z * x,
        D=x,
        E=2 * b.p * x,
        F=b.p * b.p * x,
    )


def is_positive_real(g: GeneralBiquad) -> bool:
    """Exact biquadratic positive-real test (sqrt(AF)-sqrt(CD))^2 <= BE.

    Equivalent to AF + CD - BE <= 2 sqrt(AF*CD); evaluated by squaring when
    the left side is positive, so no irrational intermediates appear.
    """
    lhs = g.A * g.F + g.C * g.D - g.B * g.E
    if lhs <= 0:
        return True
    return lhs * lhs <= 4 * (g.A * g.F) * (g.C * g.D)


def canonical_positive_real(b: CanonicalBiquad) -> bool:
    """Positive-realness of the canonical form: p^2 - 6zp + z^2 <= 0."""
    return b.p * b.p - 6 * b.z * b.p + b.z * b.z <= 0


def transform_params(b: CanonicalBiquad, t: str) -> CanonicalBiquad:
    """Parameter action of the network transforms; each is an involution."""
    t = t.lower()
    if t == "dual":
        return CanonicalBiquad(1 / b.k, b.p, b.z)
    if t == "inv":
        return CanonicalBiquad(b.k * b.z * b.z / (b.p * b.p), 1 / b.z, 1 / b.p)
    if t == "gdu":
        return CanonicalBiquad(b.p * b.p / (b.k * b.z * b.z), 1 / b.p, 1 / b.z)
    raise ValueError("unknown transform %r (expected inv, dual or gdu)" % (t,))


def to_rational_fn(target: Target) -> RationalFn:
    """Reduced rational function for any of the three target forms."""
    if isinstance(target, CanonicalBiquad):
        one = _one_like(target.k)
        num = Poly([target.z, one]) ** 2 * target.k
        den = Poly([target.p, one]) ** 2
        return RationalFn(num, den)
    if isinstance(target, GeneralBiquad):
        return RationalFn(
            Poly([target.C, target.B, target.A]), Poly([target.F, target.E, target.D])
        )
    if isinstance(target, PoleSquaredForm):
        one = _one_like(target.p)
        num = Poly([target.gamma, target.beta, target.alpha])
        den = Poly([target.p, one]) ** 2
        return RationalFn(num, den)
    raise TypeError("unsupported target %r" % (target,))


def _one_like(x):
    if is_exact_scalar(x):
        return Fraction(1)
    return x / x


# ---------------------------------------------------------------------------
# JSON


def target_to_json(target: Target) -> dict:
    if isinstance(target, CanonicalBiquad):
        return {
            "k": scalar_to_str(target.k),
            "z": scalar_to_str(target.z),
            "p": scalar_to_str(target.p),
        }
    if isinstance(target, GeneralBiquad):
        return {name: scalar_to_str(getattr(target, name)) for name in "ABCDEF"}
    if isinstance(target, PoleSquaredForm):
        return {
            "alpha": scalar_to_str(target.alpha),
            "beta": scalar_to_str(target.beta),
            "gamma": scalar_to_str(target.gamma),
            "p": scalar_to_str(target.p),
        }
    raise TypeError("unsupported target %r" % (target,))


def target_from_json(data: dict) -> Union[Target, RationalFn]:
    """Parse a target: canonical {k,z,p}, general {A..F}, pole-squared
    {alpha,beta,gamma,p}, or a raw rational function {num,den}."""
    keys = set(data)
    parse = lambda name: scalar_from_str(str(data[name]))
    if keys >= {"k", "z", "p"}:
        return CanonicalBiquad(parse("k"), parse("z"), parse("p"))
    if keys >= set("ABCDEF"):
        return GeneralBiquad(*(parse(name) for name in "ABCDEF"))
    if keys >= {"alpha", "beta", "gamma", "p"}:
        return PoleSquaredForm(parse("alpha"), parse("beta"), parse("gamma"), parse("p"))
    if keys >= {"num", "den"}:
        return RationalFn.from_json(data)
    raise ValueError("unrecognized target JSON keys: %s" % sorted(keys))
