"""Tests for classification, the lemma evaluators, and the three
seven-element synthesizers."""

import random
from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from biquadrlc.biquad import CanonicalBiquad, PoleSquaredForm, to_rational_fn, transform_params
from biquadrlc.network import (
    element_count,
    has_pure_reactive_series_arm,
    leaves,
    reactive_count,
    violates_cutset_rule,
)
from biquadrlc.ratpoly import Poly, resultant
from biquadrlc.realize import (
    EQUALITY_TOL,
    NotRealizableError,
    RealizationClass,
    auxiliary_condition_polynomials,
    aux_p1_systems,
    check_fig3a_condition,
    check_n4a_condition,
    check_n5a_condition,
    classify,
    count_roots_below_sqrt5_bound,
    fig3a_p1_quadratic,
    lemma_five_element_two_reactive,
    lemma_four_element,
    lemma_three_element,
    n4a_condition_poly,
    n4a_p1_system,
    n4a_root_interval,
    n5a_condition_poly,
    n5a_p1_system,
    n5a_root_interval,
    synth_fig3a,
    synth_n4a,
    synth_n5a,
)
from biquadrlc.verify import verify_exact, verify_numeric

F = Fraction


def B(k, z, p):
    return CanonicalBiquad(F(k), F(z), F(p))


def _mid_mpf(interval, prec=256):
    lo, hi = interval
    mid = (lo + hi) / 2
    with mp.workprec(prec):
        return mpf(mid.numerator) / mid.denominator


# ---------------------------------------------------------------------------
# classification


def test_classify_examples():
    assert classify(B(1, 1, 3)).klass is RealizationClass.FOUR_ELEMENT
    assert classify(B(1, 1, 2)).klass is RealizationClass.FIVE_ELEMENT
    assert classify(B(1, 1, 6)).klass is RealizationClass.NOT_POSITIVE_REAL
    rep = classify(B(1, 1, 5))
    assert rep.klass is RealizationClass.SEVEN_ELEMENT_CATALOG
    assert rep.config == "fig3a" and rep.transform is None
    assert rep.network is not None
    assert float(rep.residual) <= 1e-20


def test_classify_reports_condition_values():
    rep = classify(B(1, 1, 5))
    by_name = {c.name: c for c in rep.conditions}
    assert by_name["fig3a[(eta-1)(eta-3)>0]"].value == "8"
    assert by_name["fig3a[(eta-1)(eta-3)>0]"].passed
    assert by_name["fig3a[quartic(eta)<0]"].value == "-40"
    assert by_name["fig3a[quartic(eta)<0]"].passed
    assert by_name["positive_real[eta^2-6eta+1<=0]"].value == "-4"
    # transform-closure entries are reported too
    assert any(name.endswith("[dual]") for name in by_name)


def test_classify_unknown_within_scope():
    rep = classify(B(1, 1, F(11, 2)))
    assert rep.klass is RealizationClass.UNKNOWN_WITHIN_SCOPE
    assert rep.network is None


def test_classify_transform_closure_hit():
    rep = classify(B(1, 1, F(1, 4)))
    assert rep.klass is RealizationClass.SEVEN_ELEMENT_CATALOG
    assert rep.config == "fig3a"
    assert rep.transform in ("inv", "dual", "gdu")
    assert float(rep.residual) <= 1e-20


def test_classify_invariant_under_transform_group():
    rng = random.Random(20250809)
    checked = 0
    while checked < 500:
        k = F(rng.randint(1, 40), rng.randint(1, 40))
        z = F(rng.randint(1, 40), rng.randint(1, 40))
        ratio = F(rng.randint(1, 600), 100)
        p = z * ratio
        if p == z:
            continue
        b = CanonicalBiquad(k, z, p)
        base = classify(b).klass
        for t in ("inv", "dual", "gdu"):
            assert classify(transform_params(b, t)).klass is base
        checked += 1


def test_classification_independent_of_gain_and_scale():
    # the class depends only on p/z; k and a common (z, p) scale are inert
    rng = random.Random(5)
    for _ in range(40):
        z = F(rng.randint(1, 30), rng.randint(1, 30))
        ratio = F(rng.randint(1, 70), 10)
        if ratio == 1:
            continue
        base = classify(CanonicalBiquad(F(1), z, z * ratio)).klass
        k = F(rng.randint(1, 50), rng.randint(1, 50))
        c = F(rng.randint(1, 50), rng.randint(1, 50))
        assert classify(CanonicalBiquad(k, c * z, c * z * ratio)).klass is base


def test_report_json_shape():
    data = classify(B(1, 1, 5)).to_json()
    assert data["class"] == "SevenElementCatalog"
    assert data["network"]["type"] == "series"
    assert all(set(c) == {"name", "value", "pass"} for c in data["conditions"])
    assert data["residual"] is not None


# ---------------------------------------------------------------------------
# fig3a


def test_check_fig3a_condition_examples():
    assert check_fig3a_condition(F(1), F(5)) is True
    assert check_fig3a_condition(F(1), F(2)) is False
    # 256 - 384 + 96 - 56 + 5 = -83 < 0 and (3)(1) > 0
    assert check_fig3a_condition(F(1), F(4)) is True


def test_fig3a_p1_unique_positive_root():
    # root product of the p1 quadratic is -p^2 < 0: exactly one positive root
    quad = fig3a_p1_quadratic(F(1), F(5))
    assert quad == Poly([F(50), F(-40), F(-2)])
    with mp.workprec(256):
        expected = -10 + 5 * mpmath.sqrt(5)  # quadratic-formula oracle
        net = synth_fig3a(B(1, 1, 5))
        # recover p1 from the synthesized L21 = alpha/(2p + p1), R21 = alpha
        vals = {}
        for lf in leaves(net):
            vals.setdefault((lf.kind, float(lf.value)), lf.value)
        r21 = max(v for (k, _), v in vals.items() if k == "R")
        l21 = min(v for (k, _), v in vals.items() if k == "L")
        p1 = r21 / l21 - 10
        assert abs(p1 - expected) < mpf("1e-60")


def test_synth_fig3a_verifies_numerically():
    b = B(1, 1, 5)
    net = synth_fig3a(b)
    ok, residual = verify_numeric(net, to_rational_fn(b), tol=F(1, 10**25))
    assert ok and float(residual) <= 1e-25


def test_synth_fig3a_exact_quadratic_extension():
    for p in (F(5), F(4), F(1, 2), F(9, 2)):
        b = CanonicalBiquad(F(1), F(1), p)
        net = synth_fig3a(b, exact=True)
        assert verify_exact(net, to_rational_fn(b))
        assert element_count(net) == 7
        assert reactive_count(net) == 4
        assert not violates_cutset_rule(net)
        assert not has_pure_reactive_series_arm(net)


def test_synth_fig3a_exact_with_rational_square_discriminant():
    # 2(p^2 - 4pz + 5z^2) = (26/7)^2 at p = 31/7, z = 1: p1 is rational and
    # the synthesis must stay in plain rational arithmetic
    b = CanonicalBiquad(F(1), F(1), F(31, 7))
    net = synth_fig3a(b, exact=True)
    assert all(isinstance(lf.value, Fraction) for lf in leaves(net))
    assert verify_exact(net, to_rational_fn(b))


def test_synth_fig3a_rejects_outside_condition():
    with pytest.raises(NotRealizableError):
        synth_fig3a(B(1, 1, 2))


def test_synth_fig3a_random_samples_both_branches():
    rng = random.Random(99)
    done_high = done_low = 0
    while done_high < 8 or done_low < 8:
        z = F(rng.randint(1, 20), rng.randint(1, 10))
        if done_high < 8:
            ratio = F(rng.randint(3001, 5316), 1000)
        else:
            ratio = F(rng.randint(401, 999), 1000)
        p = z * ratio
        if not check_fig3a_condition(z, p):
            continue
        b = CanonicalBiquad(F(1), z, p)
        net = synth_fig3a(b)
        assert all(lf.value > 0 for lf in leaves(net))
        ok, residual = verify_numeric(net, to_rational_fn(b), tol=F(1, 10**20))
        assert ok, (z, p, residual)
        if ratio > 3:
            done_high += 1
        else:
            done_low += 1


# ---------------------------------------------------------------------------
# n4a / n5a


def test_root_counts_in_sqrt5_bounded_interval():
    assert count_roots_below_sqrt5_bound(n4a_condition_poly()) == 1
    assert count_roots_below_sqrt5_bound(n5a_condition_poly()) == 1


def test_n4a_condition_sign_change_bracket():
    # quartic16 is +0.0706 at 0.15 and -0.0544 at 0.2
    q = n4a_condition_poly()
    assert q.eval(F(15, 100)) == F(706, 10**4)
    assert q.eval(F(2, 10)) == F(-544, 10**4)


def test_n4a_condition_exact_rational_is_false():
    # quartic16(1/3) = -14/81 != 0
    assert n4a_condition_poly().eval(F(1, 3)) == F(-14, 81)
    assert check_n4a_condition(F(1), F(1, 3)) is False


def test_n5a_condition_exact_rational_is_false():
    assert n5a_condition_poly().eval(F(1, 10)) != 0
    assert check_n5a_condition(F(1), F(1, 10)) is False


@pytest.mark.parametrize("which", ["n4a", "n5a"])
def test_synthesis_at_isolated_root(which):
    if which == "n4a":
        interval, synth = n4a_root_interval(), synth_n4a
    else:
        interval, synth = n5a_root_interval(), synth_n5a
    lo, hi = interval
    assert hi - lo <= F(1, 10**30)
    p = _mid_mpf(interval)
    with mp.workprec(256):
        b = CanonicalBiquad(mpf(1), mpf(1), p)
        net = synth(b)
        assert element_count(net) == 7
        assert reactive_count(net) == 5
        assert all(lf.value > 0 for lf in leaves(net))
        assert not violates_cutset_rule(net)
        assert not has_pure_reactive_series_arm(net)
        ok, residual = verify_numeric(net, to_rational_fn(b), tol=F(1, 10**20))
        assert ok, residual


@pytest.mark.parametrize("which", ["n4a", "n5a"])
def test_synthesis_scales_with_gain_and_frequency(which):
    # conditions are homogeneous in (z, p); k only scales impedances
    interval = n4a_root_interval() if which == "n4a" else n5a_root_interval()
    synth = synth_n4a if which == "n4a" else synth_n5a
    eta = _mid_mpf(interval)
    with mp.workprec(256):
        z = mpf(5) / 2
        k = mpf(3) / 4
        b = CanonicalBiquad(k, z, z * eta)
        net = synth(b)
        ok, residual = verify_numeric(net, to_rational_fn(b), tol=F(1, 10**20))
        assert ok, residual


def test_synth_n4a_rejects_off_locus():
    with pytest.raises(NotRealizableError):
        synth_n4a(B(1, 1, F(1, 5)))
    with pytest.raises(NotRealizableError):
        synth_n5a(B(1, 1, F(1, 5)))


def test_classify_hits_n4a_at_root():
    p = _mid_mpf(n4a_root_interval())
    with mp.workprec(256):
        rep = classify(CanonicalBiquad(mpf(1), mpf(1), p))
    assert rep.klass is RealizationClass.SEVEN_ELEMENT_CATALOG
    assert rep.config == "n4a" and rep.transform is None


def test_classify_manages_its_own_precision():
    # high-precision mpf parameters must classify correctly even when the
    # ambient mpmath context is the 53-bit default
    p = _mid_mpf(n4a_root_interval())
    b = CanonicalBiquad(mpf(1), mpf(1), p)
    assert mp.prec == 53
    rep = classify(b, precision_bits=256)
    assert rep.config == "n4a"
    assert float(rep.residual) <= 1e-20


def test_fig3a_subnetwork_impedances_match_analysis_forms():
    # at (k,z,p) = (1,1,5) everything lives in Q(sqrt5): p1 = -10 + 5 sqrt5;
    # the one-reactive half must equal (ms+q)/(s+p1) and the three-reactive
    # half s(alpha s^2 + beta s + gamma)/((s+p1)(s+p)^2)
    from biquadrlc.network import build_config, impedance
    from biquadrlc.ratpoly import QuadraticRational, RationalFn

    k, z, p = F(1), F(1), F(5)
    p1 = QuadraticRational(-10, 5, 5)
    quad = fig3a_p1_quadratic(z, p)
    assert quad.eval(p1) == 0 and p1 > 0
    alpha = k * (p - z) * (2 * p + p1) * (p * p + z * p - 2 * z * p1) / (2 * p**4)
    beta = 2 * k * (p - z) * (-z * p1 * p1 + p * (p - z) * p1 + z * p * p) / p**3
    gamma = k * p1 * (p - z) * (p * p + z * p - 2 * z * p1) / (2 * p * p)
    q = k * z * z * p1 / (p * p)
    m = k - alpha

    n1 = build_config("fig7a", {"R1": q / p1, "R2": m * q / (q - m * p1), "C1": (q - m * p1) / (q * q)})
    expected_n1 = RationalFn(Poly([q, m]), Poly([p1, q / q]))
    assert impedance(n1) == expected_n1

    n2 = build_config(
        "fig9g",
        {"R21": alpha, "L21": alpha / (2 * p + p1), "L22": alpha * beta / gamma, "C21": 1 / beta},
    )
    one = q / q
    den = Poly([p1, one]) * Poly([p, one]) * Poly([p, one])
    expected_n2 = RationalFn(Poly([0 * one, gamma, beta, alpha]), den)
    assert impedance(n2) == expected_n2


def test_n4a_subnetwork_impedances_match_analysis_forms():
    # at the isolated root: the two-reactive half equals m(s^2+p p1)/((s+p1)(s+p))
    # and the fig9e half (alpha s^2 + beta s + gamma)/((s+p1)(s+p)^2)
    from biquadrlc.network import build_config, impedance
    from biquadrlc.ratpoly import RationalFn
    from biquadrlc.verify import coefficient_residual

    p = _mid_mpf(n4a_root_interval())
    with mp.workprec(256):
        k, z = mpf(1), mpf(1)
        f, g = n4a_p1_system(z, p)
        import mpmath as _mp

        aa, bb, cc = f.coeffs[2], f.coeffs[1], f.coeffs[0]
        sq = _mp.sqrt(bb * bb - 4 * aa * cc)
        p1 = min([(-bb + sq) / (2 * aa), (-bb - sq) / (2 * aa)], key=lambda r: abs(g.eval(r)))
        alpha = k * (p1 + 2 * z - p)
        beta = k * (2 * z * p1 + z * z - p1 * p)
        gamma = k * p1 * (z - p) * (z + p)
        m = k
        d = 2 * alpha * p + alpha * p1 - beta

        n1 = build_config("fig8b", {"R1": m, "L1": m / (p + p1), "C1": (p + p1) / (m * p * p1)})
        z1 = impedance(n1)
        expected1 = RationalFn(
            Poly([m * p * p1, mpf(0), m]), Poly([p1, mpf(1)]) * Poly([p, mpf(1)])
        )
        res1 = coefficient_residual(
            z1.num * expected1.den, expected1.num * z1.den, True
        )
        assert res1 < mpf("1e-70")

        n2 = build_config(
            "fig9e",
            {"C21": 1 / alpha, "C22": d / (alpha * beta), "R21": alpha * alpha / d,
             "L21": alpha * alpha * beta / (gamma * d)},
        )
        z2 = impedance(n2)
        expected2 = RationalFn(
            Poly([gamma, beta, alpha]),
            Poly([p1, mpf(1)]) * Poly([p, mpf(1)]) * Poly([p, mpf(1)]),
        )
        res2 = coefficient_residual(
            z2.num * expected2.den, expected2.num * z2.den, True
        )
        assert res2 < mpf("1e-25")


# ---------------------------------------------------------------------------
# resultant identities


def _nested_pz():
    pp = lambda *cs: Poly([F(c) for c in cs])
    p_elem = Poly([pp(0, 1)])
    z_elem = Poly([pp(), pp(1)])
    return z_elem, p_elem


def test_n4a_resultant_identity_bivariate():
    z, p = _nested_pz()
    f, g = n4a_p1_system(z, p)
    res = resultant(f, g)
    expected = aux_p1_systems()["n4a"]["expected"](z, p)
    assert res == expected or res == -expected


def test_n5a_resultant_identity_univariate():
    # published value corresponds to padding the cubic to formal degree 4,
    # an extra factor lc(g) = 2z(4p - z) relative to the Sylvester resultant
    one = F(1)
    p = Poly([F(0), F(1)])
    f, g = n5a_p1_system(one, p)
    res = resultant(f, g)
    lc = g.leading
    expected = aux_p1_systems()["n5a"]["expected"](Poly.constant(one), p)
    assert res * lc == expected or res * lc == -expected


def test_aux_resultants_at_exact_points():
    rng = random.Random(17)
    formal_factor = {"n5a": lambda z, p: 2 * z * (4 * p - z)}
    for name, data in aux_p1_systems().items():
        for _ in range(6):
            z = F(rng.randint(1, 9), rng.randint(1, 5))
            p = F(rng.randint(1, 9), rng.randint(1, 5))
            f, g = data["system"](z, p)
            if f.degree < 1 or g.degree < 1:
                continue
            res = resultant(f, g) * formal_factor.get(name, lambda z, p: F(1))(z, p)
            expected = data["expected"](z, p)
            assert res == expected or res == -expected, (name, z, p)


def test_fig3a_template_fit_agrees_with_condition():
    # independent route: multistart least squares on the fig3a template must
    # succeed where the condition holds and hit a floor where it fails
    from biquadrlc.network import config_template
    from biquadrlc.verify import fit_topology

    template = config_template("fig3a")
    realizable = to_rational_fn(B(1, 1, 5))
    fit = fit_topology(template, realizable, seed=11, starts=48, budget=12000)
    assert fit.success and fit.residual <= 1e-8

    # eta = 2 fails (eta-1)(eta-3) > 0: no positive values can fit
    not_realizable = to_rational_fn(B(1, 1, 2))
    fit = fit_topology(template, not_realizable, seed=11, starts=48, budget=12000)
    assert not fit.success
    assert fit.residual > 1e-6


# ---------------------------------------------------------------------------
# lemma evaluators


def PS(a, b, g, p):
    return PoleSquaredForm(F(a), F(b), F(g), F(p))


def test_lemma_three_element_examples():
    assert lemma_three_element(PS(1, 2, 1, 1)) == (True, 5)
    assert lemma_three_element(PS(0, 1, 2, 1)) == (True, 4)
    assert lemma_three_element(PS(1, 1, 1, 1)) == (False, None)
    assert lemma_three_element(PS(0, 3, 0, 2)) == (True, 1)


def test_lemma_four_element_examples():
    # alpha = 0 with 0 < gamma < 2 beta p and no three-element hit
    assert lemma_four_element(PS(0, 1, 1, 2)) == (True, 1)
    assert lemma_four_element(PS(1, 1, 1, 1)) == (True, 3)
    assert lemma_four_element(PS(1, 100, 2, 1)) == (False, None)


def test_lemma_four_element_precondition():
    # (0,1,1,p=1) satisfies three-element condition 5 (0 - 1 + 1 = 0)
    assert lemma_three_element(PS(0, 1, 1, 1)) == (True, 5)
    with pytest.raises(ValueError):
        lemma_four_element(PS(0, 1, 1, 1))


def test_lemma_five_element_examples():
    assert lemma_five_element_two_reactive(PS(1, 5, F(1, 2), 1)) == (True, 1)
    assert lemma_five_element_two_reactive(PS(F(1, 2), 5, 1, 1)) == (True, 3)
    # all four strict inequalities fail
    assert lemma_five_element_two_reactive(PS(1, F(1, 4), F(1, 2), 1)) == (False, None)


def test_lemma_five_element_preconditions():
    with pytest.raises(ValueError):
        lemma_five_element_two_reactive(PS(0, 1, 1, 2))
    # alpha p^2 = gamma triggers four-element condition 3, so the boundary
    # point is rejected rather than reported False
    with pytest.raises(ValueError):
        lemma_five_element_two_reactive(PS(1, 3, 1, 1))


def test_lemma_scaling_invariance():
    rng = random.Random(31)
    for _ in range(200):
        a = F(rng.randint(0, 8), rng.randint(1, 5))
        bb = F(rng.randint(0, 8), rng.randint(1, 5))
        g = F(rng.randint(0, 8), rng.randint(1, 5))
        p = F(rng.randint(1, 8), rng.randint(1, 5))
        if a == 0 and bb == 0 and g == 0:
            continue
        c = F(rng.randint(1, 60), rng.randint(1, 60))
        f1 = PoleSquaredForm(a, bb, g, p)
        f2 = PoleSquaredForm(a * c, bb * c, g * c, p)
        assert lemma_three_element(f1) == lemma_three_element(f2)
        ok3, _ = lemma_three_element(f1)
        if ok3:
            continue
        assert lemma_four_element(f1) == lemma_four_element(f2)
        ok4, _ = lemma_four_element(f1)
        if ok4 or not (a > 0 and bb > 0 and g > 0):
            continue
        assert lemma_five_element_two_reactive(f1) == lemma_five_element_two_reactive(f2)


# ---------------------------------------------------------------------------
# auxiliary polynomial catalog


def test_auxiliary_polynomials():
    aux = auxiliary_condition_polynomials()
    assert aux["octic_resultant_factor"].degree == 8
    assert aux["octic_resultant_factor"].leading == 8
    assert aux["quartic_resultant_factor"].eval(F(1)) == 1
    # transcription identities
    assert aux["n4a_quartic"] == Poly([F(1), F(-10), F(31), F(-40), F(16)])
    assert aux["sextic_resultant_factor"] == Poly(
        [F(2), F(-12), F(21), F(-28), F(20), F(-8), F(1)]
    )
    quad = aux["p1_quadratic_5z_3p"]
    assert quad.degree == 2
    # p1^2 coefficient is 5 - 3p; constant term is (p-3)p^2
    assert quad.coeffs[2] == Poly([F(5), F(-3)])
    assert quad.coeffs[0] == Poly([F(0), F(0), F(-3), F(1)])


def test_equality_tolerance_on_floats():
    # a float within 1e-20 of the locus passes; a clearly-off one fails
    p = _mid_mpf(n4a_root_interval())
    with mp.workprec(256):
        assert check_n4a_condition(mpf(1), p) is True
        assert check_n4a_condition(mpf(1), p + mpf("1e-6")) is False
    assert EQUALITY_TOL == F(1, 10**20)
