"""Estimate profiles, named constants and the tail certificate.

Scalar constants are pinned to values cross-derived with mpmath at 50
digits where a closed form exists; composite thresholds are pinned to
frozen integers and re-checked against the properties they are defined
by (the certificate really clears n + 1, the bisected thresholds really
flip the predicate they bound).
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from ramanujan_primes import (P1, P2, P3, P4, BoundProfile,
                              ResourceBudgetError, ThresholdDomainError,
                              certify_tail, get_profile, log_gap_holds,
                              n_threshold, named_threshold, pi_lower,
                              pi_upper, profile_p4, threshold_names, upsilon)
from ramanujan_primes.bounds import inflate, r, rtilde, x14, z


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

def test_builtin_profiles_registry():
    assert sorted(p.name for p in (P1, P2, P3, P4)) == ["P1", "P2", "P3", "P4"]
    assert get_profile("P2") is P2
    assert get_profile(P3) is P3
    with pytest.raises(ValueError):
        get_profile("P9")


def test_profile_validation_rejects_bad_constants():
    with pytest.raises(ValueError, match="B > A"):
        BoundProfile("bad", a=(2.0,), b=(1.0,), y_thresholds={0.0: 2.0},
                     x0=2.0)
    with pytest.raises(ValueError, match="b_j"):
        BoundProfile("bad", a=(), b=(1.0, -1.0), y_thresholds={0.0: 2.0},
                     x0=2.0)
    with pytest.raises(ValueError, match="thresholds"):
        BoundProfile("bad", a=(), b=(1.0,), y_thresholds={0.0: 1.0}, x0=2.0)


def test_y_threshold_lookup_uses_smallest_larger_offset():
    assert P4.y_threshold(0.0) == 5393.0
    assert P4.y_threshold(0.5) == 7477.0
    assert P4.y_threshold(1.0) == 7477.0
    with pytest.raises(ThresholdDomainError):
        P4.y_threshold(1.5)
    # P1 stores only the offset-1 bound; offset 0 falls back to it
    assert P1.y_threshold(0.0) == 470077.0


def test_pi_lower_stays_below_pi(cache):
    """Every stored lower offset really under-counts on random points."""
    top = 10 ** 6
    pi = cache.get(top)
    pic = pi.pi_cumulative(top + 1)
    rng = np.random.default_rng(99)
    for profile in (P1, P2, P3, P4):
        for s in sorted(profile.y_thresholds):
            lo = max(int(math.ceil(profile.y_threshold(s))), 3)
            xs = rng.integers(lo, top, size=1000)
            for x in xs:
                x = int(x)
                assert pi_lower(x, profile, s=s) < pic[x], (profile.name, s, x)


def test_pi_upper_stays_above_pi_where_sound(cache):
    """P1's upper estimate brackets pi everywhere past its floor.

    The b_1 = 1.17 estimate shared by P2/P3/P4 is only reliable below
    59753 (and again past 2.13e9, out of reach here), so those profiles
    are sampled on the clean initial stretch only; the failing region is
    pinned separately below.
    """
    top = 10 ** 6
    pi = cache.get(top)
    pic = pi.pi_cumulative(top + 1)
    rng = np.random.default_rng(98)
    for x in rng.integers(10, top, size=1000):
        x = int(x)
        assert pic[x] < pi_upper(x, P1), x
    for profile in (P2, P3, P4):
        lo = int(math.ceil(profile.x0))
        for x in rng.integers(lo, 59753, size=1000):
            x = int(x)
            assert pic[x] < pi_upper(x, profile), (profile.name, x)


def test_b117_upper_estimate_fails_in_midrange(cache):
    """x/(log x - 1 - 1.17/log x) drops below pi(x) long before 10^6.

    The registered floor x0 = 5.43 is where the denominator turns
    positive, not where the estimate starts to hold: sieving shows
    23540 violating integers in [6, 10^6], the first at 59753 = p_6041,
    and chunked scans place the last violation at p_103947136 =
    2122756621.  Everything that consumes pi_upper with these profiles
    inherits that gap; the campaign scans cross-check the affected
    results against brute force instead.
    """
    top = 10 ** 6
    pi = cache.get(top)
    pic = pi.pi_cumulative(top + 1)
    x = np.arange(6, top + 1, dtype=np.float64)
    bound = x / (np.log(x) - 1.0 - 1.17 / np.log(x))
    bad = np.flatnonzero(pic[6:] >= bound)
    assert len(bad) == 23540
    assert int(bad[0]) + 6 == 59753
    assert pi.is_prime(59753) and pi.pi(59753) == 6041
    # a mid-range witness, well past the first crossing
    for profile in (P2, P3, P4):
        assert pi_upper(929872, profile) < pic[929872] == 73466


def test_pi_lower_offset_one_on_p1(cache):
    pi = cache.get(500_000)
    # offset 1 is valid from 470077 for P1
    x = 470077
    assert pi_lower(x, P1, s=1.0) < pi.pi(x)
    with pytest.raises(ThresholdDomainError):
        pi_lower(470076, P1, s=1.0)


def test_pi_bounds_domain_errors():
    with pytest.raises(ThresholdDomainError):
        pi_lower(100, P1)
    with pytest.raises(ThresholdDomainError):
        pi_upper(2.0, P4)   # below x0 = 5.43
    with pytest.raises(ThresholdDomainError):
        upsilon(100.0, 2, P4)   # below max(5393, 2 * 5.43)


# ---------------------------------------------------------------------------
# upsilon
# ---------------------------------------------------------------------------

def test_upsilon_product_equals_difference_form():
    """The factored form equals F(x) - G(x/k) up to roundoff."""
    rng = np.random.default_rng(3)
    for _ in range(500):
        k = float(rng.uniform(1.2, 50.0))
        x = float(rng.uniform(6000 * k, 10 ** 8))
        prof = P4
        got = upsilon(x, k, prof)
        f = x / (math.log(x) - 1.0 - prof.A(x))
        g = (x / k) / (math.log(x / k) - 1.0 - prof.B(x / k))
        assert got == pytest.approx(f - g, rel=1e-9, abs=1e-6)


def test_upsilon_is_lower_bound_for_prime_gap_count(cache):
    pi = cache.get(10 ** 6)
    rng = np.random.default_rng(4)
    for _ in range(300):
        k = Fraction(int(rng.integers(11, 100)), 10)
        x = int(rng.integers(int(5393 * k) + 1, 10 ** 6))
        actual = pi.pi(x) - pi.pi(int(x / k))
        assert upsilon(x, k, P4) < actual


def test_upsilon_monotone_past_certificate_threshold():
    """Geometric-grid increase check up to 10^8."""
    for k in (1.5, 2.0, 10.0):
        start = max(5393.0, k * 5.43, k * x14(k), 20.0)
        x = math.ceil(start) + 1
        prev = upsilon(x, k, P4)
        step = 1
        while x + step <= 10 ** 8:
            x += step
            cur = upsilon(x, k, P4)
            assert cur > prev, (k, x)
            prev = cur
            step *= 10


def test_upsilon_rejects_bad_k():
    with pytest.raises(ValueError):
        upsilon(10 ** 5, 1, P4)


# ---------------------------------------------------------------------------
# log-gap predicate and X_1
# ---------------------------------------------------------------------------

def test_log_gap_equivalent_to_denominator_inequality():
    """log k - B(kx) + A(x) >= 0 iff the lower denominator at x dominates
    the upper denominator at kx."""
    rng = np.random.default_rng(5)
    for _ in range(10 ** 4):
        k = float(rng.uniform(1.1, 20.0))
        x = float(rng.uniform(2.0, 10 ** 6))
        prof = (P1, P2, P3, P4)[int(rng.integers(0, 4))]
        lhs = log_gap_holds(x, k, prof)
        rhs = (math.log(k * x) - 1.0 - prof.B(k * x)
               >= math.log(x) - 1.0 - prof.A(x))
        assert lhs == rhs


def test_x1_closed_forms_flip_the_predicate():
    # rtilde, z and the single-b form solve the predicate exactly, so the
    # flip is two-sided; P1's r(k) is a sufficient threshold only.
    tight = ((P2, 3.0), (P2, 745.8), (P3, 2.0), (P3, 143.7), (P4, 2.0),
             (P4, 1.5))
    for prof, k in tight:
        x1 = prof.x1(k)
        assert log_gap_holds(x1 * 1.001, k, prof)
        if x1 > 1.1:
            assert not log_gap_holds(x1 * 0.999, k, prof)
    for k in (1.5, 2.0, 5.0):
        assert log_gap_holds(max(P1.x1(k), 1.2) * 1.001, k, P1)


def test_x1_bisection_fallback_matches_closed_form():
    custom = BoundProfile("custom", a=(), b=(1.17,),
                          y_thresholds={0.0: 5393.0}, x0=5.43)
    for k in (1.5, 2.0, 7.0):
        want = math.exp(1.17 / math.log(k)) / k
        got = custom.x1(k)
        if want <= 1.0 + 1e-9:
            assert got <= 1.001
        else:
            assert got == pytest.approx(want, rel=1e-6)


def test_x1_bisection_refuses_positive_a():
    prof = BoundProfile("posa", a=(0.5,), b=(1.17,),
                        y_thresholds={0.0: 2.0}, x0=2.0)
    with pytest.raises(ThresholdDomainError, match="monotone"):
        prof.x1(2.0)


# ---------------------------------------------------------------------------
# scalar constants
# ---------------------------------------------------------------------------

def test_r_rtilde_z_pins():
    assert r(2) == pytest.approx(4.196203770123761, rel=1e-12)
    # the two inequalities the derivations depend on
    assert rtilde(745.8) <= 2.999966
    assert z(143.7) <= 2.0


def test_scalar_constants_against_mpmath():
    with mpmath.workdps(50):
        lk = mpmath.log(2)
        want_r = mpmath.exp(mpmath.sqrt(mpmath.mpf("3.83") / lk - 1)) / 2

        c = mpmath.log(mpmath.mpf("745.8")) - mpmath.mpf("8.27") / mpmath.log(
            mpmath.mpf("745.8"))
        want_rt = mpmath.exp(mpmath.sqrt(mpmath.mpf("7.1") + c * c / 4) - c / 2)

        cz = mpmath.log(mpmath.mpf("143.7")) - mpmath.mpf("4.47") / mpmath.log(
            mpmath.mpf("143.7"))
        want_z = mpmath.exp(mpmath.sqrt(mpmath.mpf("3.3") + cz * cz / 4) - cz / 2)

        e = mpmath.mpf("0.5")
        want_gamma = ((1 + e) * (1 + e) * (mpmath.log(2) + e)
                      + mpmath.log((1 + e) * (1 + e))) * 2

    assert r(2) == pytest.approx(float(want_r), rel=1e-13)
    assert rtilde(745.8) == pytest.approx(float(want_rt), rel=1e-13)
    assert z(143.7) == pytest.approx(float(want_z), rel=1e-13)
    got_gamma = named_threshold("gamma", k=2, eps1=0.5, eps2=0.5, eps3=0.5,
                                delta1=0.5, delta2=0.5)
    assert got_gamma == pytest.approx(float(want_gamma), rel=1e-13)


def test_gamma_pins():
    kwargs = dict(eps1=0.5, eps2=0.5, eps3=0.5, delta1=0.5, delta2=0.5)
    assert named_threshold("gamma", k=2, **kwargs) == pytest.approx(
        6.991022744952412, rel=1e-12)
    assert named_threshold("gamma", k=1.5, **kwargs) == pytest.approx(
        14.656569608109203, rel=1e-12)
    with pytest.raises(ValueError):
        named_threshold("gamma", k=2, eps1=-0.1, eps2=0.5, eps3=0.5,
                        delta1=0.5, delta2=0.5)


def test_c0_pins(cache):
    pi = cache.get(100)
    assert named_threshold("c0", pi=pi, s=0) == 4.0
    assert named_threshold("c0", pi=pi, s=2) == 8.0
    with pytest.raises(ValueError):
        named_threshold("c0", s=0)   # needs a prime table
    with pytest.raises(ValueError):
        named_threshold("c0", pi=pi, s=-1)


def test_lambda_branches():
    # eps1 > 0 uses the full expression
    assert named_threshold("lambda", eps1=0.5, eps2=0.5) == pytest.approx(
        0.5 / 2 + 0.5 * (1 + 0.25), rel=1e-12)
    # eps1 = 0 forces the eps2-only branch (sign(0) = 0)
    assert named_threshold("lambda", eps1=0, eps2=0.4) == pytest.approx(
        0.2, rel=1e-12)
    with pytest.raises(ValueError):
        named_threshold("lambda", eps1=0, eps2=0)


# ---------------------------------------------------------------------------
# named thresholds
# ---------------------------------------------------------------------------

def _valid_params(cache):
    """One valid parameter set per threshold name."""
    pi = cache.get(10 ** 6)
    e = 0.5
    eps = dict(eps1=e, eps2=e, eps3=e, eps4=e, delta1=e, delta2=e)
    return pi, {
        "r": dict(k=2), "rtilde": dict(k=2), "z": dict(k=2),
        "lambda": dict(eps1=e, eps2=e),
        "S": dict(k=2, eps1=e, eps2=e),
        "T": dict(eps1=e, eps2=e),
        "eta": dict(k=2, delta1=e),
        "gamma": dict(k=2, eps1=e, eps2=e, eps3=e, delta1=e, delta2=e),
        "c0": dict(s=0),
        "c1": dict(k=2, **{n: v for n, v in eps.items() if n != "eps3"},
                   eps3=e),
        "X2": dict(k=2, t=1, profile="P1"),
        "X3": dict(k=2), "X4": dict(k=746),
        "X5": dict(k=2, profile="P2"), "X6": dict(k=2),
        "X11": dict(), "X13": dict(k=2), "X14": dict(k=2),
        "X12": dict(k=2, a1=1.0, b1=1.17, y0=468049.0, x0=math.exp(2.547),
                    eps1=0, eps2=e, x10=10 ** 4),
        "X15": dict(k=2, eps1=0, eps2=Fraction(5, 19)),
        "X16": dict(k=2, delta1=e, delta2=e),
        "X17": dict(k=2),
        "X18": dict(k=2, eps2=e),
        "X19": dict(k=2, eps2=e, delta1=e, delta2=e),
        "X20": dict(k=2, eps1=e),
        "X21": dict(eps3=e),
        "X22": dict(k=2, eps1=e, eps2=e, eps3=e, delta1=e, delta2=e),
        "X23": dict(k=2, eps=e),
        "X24": dict(eps3=e, eps4=e),
        "X25": dict(k=2, **eps),
        "X26": dict(k=2, c2=100, **eps),
        "X27": dict(k=2, eps=e),
    }


def test_every_threshold_name_evaluates(cache):
    pi, params = _valid_params(cache)
    names = threshold_names()
    assert set(names) == set(params), "parameter map out of sync"
    for name in names:
        value = named_threshold(name, pi=pi, **params[name])
        assert math.isfinite(value) and value > 0, name


def test_named_threshold_unknown_name():
    with pytest.raises(ValueError, match="unknown threshold"):
        named_threshold("X99", k=2)


def test_threshold_pins(cache):
    pi = cache.get(10 ** 6)
    assert named_threshold("X4", k=746) == 2238.0
    assert named_threshold("X11", pi=pi) == 1.0
    assert named_threshold("X15", pi=pi, k=2, eps1=0,
                           eps2=Fraction(5, 19)) == 468049.0
    assert named_threshold("X19", pi=pi, k=10, eps2=0.5, delta1=0.5,
                           delta2=0.5) == 947.0
    assert named_threshold("X26", pi=pi, k=2, c2=100, eps1=0.5, eps2=0.5,
                           eps3=0.5, eps4=0.5, delta1=0.5,
                           delta2=0.5) == 1896.0
    assert named_threshold("c1", pi=pi, k=2, eps1=0.5, eps2=0.5, eps3=0.5,
                           eps4=0.5, delta1=0.5, delta2=0.5) == pytest.approx(
        29.464090979809647, rel=1e-12)


def test_x26_requires_c2_above_c1(cache):
    pi = cache.get(10 ** 6)
    with pytest.raises(ValueError, match="c2 > c1"):
        named_threshold("X26", pi=pi, k=2, c2=1, eps1=0.5, eps2=0.5,
                        eps3=0.5, eps4=0.5, delta1=0.5, delta2=0.5)


def test_x21_bisected_value_flips_its_predicate():
    # large eps3: the peak is already negative, any x > 1 works
    assert named_threshold("X21", eps3=0.5) == math.e
    # small eps3 exercises the bisection
    x21 = named_threshold("X21", eps3=0.1)
    assert math.log(math.log(x21 * 1.01)) < 0.1 * math.log(x21 * 1.01)
    assert math.log(math.log(x21 * 0.99)) >= 0.1 * math.log(x21 * 0.99)
    with pytest.raises(ValueError):
        named_threshold("X21", eps3=0)


def test_x24_bisected_value_flips_its_predicate():
    def g(x, eps3, eps4):
        return (math.log(1 + eps3) + math.log(x + 1)
                + math.log(x + math.log(x + 1)) - eps4 * x)

    x24 = named_threshold("X24", eps3=0.1, eps4=0.1)
    assert g(x24 * 1.001, 0.1, 0.1) <= 0
    assert g(x24 * 0.999, 0.1, 0.1) > 0
    # permissive parameters collapse to the trivial threshold
    assert named_threshold("X24", eps3=0.5, eps4=10.0) == 1.0


# ---------------------------------------------------------------------------
# integer n-thresholds
# ---------------------------------------------------------------------------

def test_n0_pin(cache):
    pi = cache.get(10 ** 6)
    assert n_threshold("n0", pi, k=2, t=1, profile="P1") == 37098


def test_n1_pin_and_conservative_variant(cache):
    """The exact ceiling is 15466; dropping the 1/(1+eps2) factor (as the
    prose summary of the same computation does) gives 19536."""
    pi = cache.get(10 ** 6)
    assert n_threshold("n1", pi, k=2, eps1=0, eps2=Fraction(5, 19)) == 15466
    x15 = named_threshold("X15", pi=pi, k=2, eps1=0, eps2=Fraction(5, 19))
    m = pi.pi(math.floor(inflate(x15))) + 1
    assert m == 39072
    assert math.ceil(Fraction(m, 2)) == 19536


def test_n2_n3_pins(cache):
    pi = cache.get(10 ** 6)
    e = 0.5
    assert n_threshold("n2", pi, k=2, eps1=e, eps2=e, eps3=e,
                       delta1=e, delta2=e) == 948
    assert n_threshold("n2", pi, k=1.5, eps1=e, eps2=e, eps3=e,
                       delta1=e, delta2=e) == 948
    n3 = n_threshold("n3", pi, k=2, eps1=e, eps2=e, eps3=e, eps4=e,
                     delta1=e, delta2=e, c2=100)
    assert n3 == 16361
    assert pi.is_prime(n3) and pi.pi(n3) == 1897


def test_n_threshold_errors(cache):
    pi = cache.get(10 ** 6)
    with pytest.raises(ValueError, match="unknown n-threshold"):
        n_threshold("n9", pi, k=2)
    with pytest.raises(ValueError):
        n_threshold("n0", pi, k=2, t=-2, profile="P1")


def test_n3_needs_enough_primes(cache):
    small = cache.get(2)   # whatever the cache holds is fine; build tiny
    from ramanujan_primes import build_table
    tiny = build_table(100)
    with pytest.raises(ResourceBudgetError):
        n_threshold("n3", tiny, k=2, eps1=0.5, eps2=0.5, eps3=0.5,
                    eps4=0.5, delta1=0.5, delta2=0.5, c2=100)


# ---------------------------------------------------------------------------
# the tail certificate
# ---------------------------------------------------------------------------

def test_certify_tail_pins():
    assert certify_tail(2, 37097) == 1018297
    assert certify_tail(2, 1) == 5394
    assert certify_tail(Fraction(3, 2), 5) == 5394


def test_certificate_clears_target_minimally():
    for k, n in ((2, 100), (Fraction(3, 2), 1000), (10, 50)):
        x = certify_tail(k, n)
        u = upsilon(x, k, P4)
        assert u >= n + 1
        start = math.ceil(inflate(max(5393.0, float(k) * 5.43,
                                      float(k) * x14(float(k)))))
        if x > start:
            below = upsilon(x - 1, k, P4)
            assert below < n + 1 + max(abs(below) * 1e-9, 1e-6)


def test_certificate_really_covers_the_scan(cache):
    """No m >= cutoff may have fewer than n primes in (m/k, m]."""
    k, n = Fraction(2), 200
    cutoff = certify_tail(k, n)
    pi = cache.get(2 * cutoff)
    for m in range(cutoff, cutoff + 2000):
        assert pi.pi(m) - pi.pi((m + 1) // 2) >= n


def test_certify_tail_rejects_unsupported_profiles():
    with pytest.raises(ThresholdDomainError):
        certify_tail(2, 10, P2)   # negative a_1
    with pytest.raises(ThresholdDomainError):
        certify_tail(2, 10, P1)   # two b terms


def test_certify_tail_budget():
    with pytest.raises(ResourceBudgetError) as info:
        certify_tail(2, 10 ** 6, hard_cap=10 ** 6)
    assert info.value.cap == 10 ** 6
    assert info.value.required > 10 ** 6


def test_certify_tail_input_validation():
    with pytest.raises(ValueError):
        certify_tail(1, 5)
    with pytest.raises(ValueError):
        certify_tail(2, -1)


def test_inflate_is_conservative():
    assert inflate(0.0) == 1e-6
    assert inflate(1e12) > 1e12
    for v in (1e-9, 1.0, 5393.0, -3.0):
        assert inflate(v) > v


def test_custom_azero_profile_certifies(cache):
    """A caller-supplied single-b profile goes end to end."""
    prof = profile_p4(b1=1.2)
    x = certify_tail(2, 50, prof)
    assert upsilon(x, 2, prof) >= 51
    pi = cache.get(x + 100)
    for m in range(x, x + 100):
        assert pi.pi(m) - pi.pi((m + 1) // 2) >= 50
