"""Explicit prime-counting estimates and the named threshold constants.

Three layers:

 1. BoundProfile: a pair of explicit estimates
        pi(x) > x/(log x - 1 - A(x)) + s   for x >= Y_s,
        pi(x) < x/(log x - 1 - B(x))       for x >= X_0,
    where A(x) = sum a_j/log^j x and B(x) = sum b_j/log^j x.  The four
    built-in profiles P1..P4 carry published constants; custom profiles
    are for callers who trust their own (A, B, thresholds).

 2. named_threshold / n_threshold: a table of closed-form constants
    (r, rtilde, z, S, T, eta, gamma, c0, c1 and the composite maxima
    X2..X27, n0..n3), each marking the point past which some inequality
    between pi(x) and pi(x/k) is guaranteed.

 3. certify_tail: the computational certificate.  Given k and n it
    returns an integer X such that pi(x) - pi(x/k) > n for every real
    x >= X, by locating the monotone region of Upsilon_k and pushing
    Upsilon_k above n + 1 there.

Everything is evaluated in double precision.  Any value used as a cutoff
or compared against a guarantee is inflated first (relative 1e-9,
absolute 1e-6), so rounding error can only make results more
conservative, never unsound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .errors import ResourceBudgetError, ThresholdDomainError

__all__ = [
    "BoundProfile", "P1", "P2", "P3", "P4", "PROFILES", "get_profile",
    "inflate", "pi_lower", "pi_upper", "log_gap_holds", "upsilon",
    "named_threshold", "threshold_names", "n_threshold", "certify_tail",
    "r", "rtilde", "z", "x14",
]

REL_SLACK = 1e-9
ABS_SLACK = 1e-6


def inflate(value: float) -> float:
    """Round a computed threshold up by the standard conservative slack."""
    return value + max(abs(value) * REL_SLACK, ABS_SLACK)


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundProfile:
    """Constants of one lower/upper estimate pair for pi(x).

    y_thresholds maps an offset s to the least x from which the lower
    bound holds with that additive offset.  Lookups take the smallest
    stored key >= s: a bound with a larger offset implies every smaller
    one, so this is always sound.
    """

    name: str
    a: tuple[float, ...]
    b: tuple[float, ...]
    y_thresholds: Mapping[float, float]
    x0: float
    x1_closed: Callable[[float], float] | None = None

    def __post_init__(self):
        # B must dominate A for large x; with positive leading terms that
        # is (b_1, b_2, ...) > (a_1, a_2, ...) lexicographically (zero
        # padded).  P1 has b_1 = a_1 = 1 and wins on the second term.
        width = max(len(self.a), len(self.b), 1)
        avec = self.a + (0.0,) * (width - len(self.a))
        bvec = self.b + (0.0,) * (width - len(self.b))
        if not bvec > avec:
            raise ValueError(f"profile {self.name}: need B > A eventually, "
                             f"got b={self.b}, a={self.a}")
        if any(bj < 0 for bj in self.b):
            raise ValueError(f"profile {self.name}: b_j must be >= 0")
        if self.x0 < 2 or any(y < 2 for y in self.y_thresholds.values()):
            raise ValueError(f"profile {self.name}: thresholds must be >= 2")

    def A(self, x: float) -> float:
        lg = math.log(x)
        return sum(aj / lg ** (j + 1) for j, aj in enumerate(self.a))

    def B(self, x: float) -> float:
        lg = math.log(x)
        return sum(bj / lg ** (j + 1) for j, bj in enumerate(self.b))

    def y_threshold(self, s: float) -> float:
        keys = [key for key in self.y_thresholds if key >= s]
        if not keys:
            raise ThresholdDomainError(
                f"profile {self.name} has no lower-bound threshold for "
                f"offset s={s} (stored: {sorted(self.y_thresholds)})")
        return self.y_thresholds[min(keys)]

    def x1(self, k: float) -> float:
        """Least x from which the log-gap predicate holds (see Eq-309 ops)."""
        k = float(k)
        if k <= 1:
            raise ValueError(f"need k > 1, got {k}")
        if self.x1_closed is not None:
            return self.x1_closed(k)
        return self._x1_bisect(k)

    def _x1_bisect(self, k: float) -> float:
        # Fallback for custom profiles.  Sound only when the predicate is
        # nondecreasing in x, which holds whenever all a_j <= 0 (the b_j
        # are already constrained to be >= 0).
        if any(aj > 0 for aj in self.a):
            raise ThresholdDomainError(
                f"profile {self.name}: no closed form for X_1 and the "
                "log-gap predicate is not provably monotone (positive a_j); "
                "supply x1_closed")

        def holds(x: float) -> bool:
            return math.log(k) - self.B(k * x) + self.A(x) >= 0

        lo, hi = 1.0 + 1e-9, 2.0
        while not holds(hi):
            lo, hi = hi, hi * 2
            if hi > 1e300:
                raise ThresholdDomainError(
                    f"profile {self.name}: log-gap predicate never holds")
        if holds(lo):
            return lo
        for _ in range(200):
            mid = (lo + hi) / 2
            if holds(mid):
                hi = mid
            else:
                lo = mid
        return inflate(hi)


def _p4_x1(b1: float) -> Callable[[float], float]:
    # With A = 0 and B(y) = b1/log y, the log-gap predicate is exactly
    # log(kx) >= b1/log k.
    return lambda k: math.exp(b1 / math.log(k)) / k


def r(k: float) -> float:
    """Log-gap threshold for P1."""
    k = float(k)
    return math.exp(math.sqrt(max(3.83 / math.log(k) - 1.0, 0.0))) / k


def rtilde(k: float) -> float:
    """Log-gap threshold for P2."""
    k = float(k)
    c = math.log(k) - 8.27 / math.log(k)
    return math.exp(math.sqrt(7.1 + 0.25 * c * c) - 0.5 * c)


def z(k: float) -> float:
    """Log-gap threshold for P3."""
    k = float(k)
    c = math.log(k) - 4.47 / math.log(k)
    return math.exp(math.sqrt(3.3 + 0.25 * c * c) - 0.5 * c)


P1 = BoundProfile("P1", a=(1.0,), b=(1.0, 3.83), y_thresholds={1.0: 470077.0},
                  x0=9.25, x1_closed=r)
P2 = BoundProfile("P2", a=(-7.1,), b=(1.17,), y_thresholds={1.0: 3.0},
                  x0=5.43, x1_closed=rtilde)
P3 = BoundProfile("P3", a=(-3.3,), b=(1.17,), y_thresholds={0.0: 2.0},
                  x0=5.43, x1_closed=z)


def profile_p4(b1: float = 1.17, x0: float = 5.43) -> BoundProfile:
    """A = 0 profile.  The default (b1, x0) pair is the published one;
    callers overriding b1 are responsible for a matching x0.

    The offset-1 threshold 7477 is the machine-checked extension of the
    offset-0 bound and does not involve b1.
    """
    return BoundProfile("P4", a=(), b=(b1,),
                        y_thresholds={0.0: 5393.0, 1.0: 7477.0},
                        x0=x0, x1_closed=_p4_x1(b1))


P4 = profile_p4()

PROFILES: dict[str, BoundProfile] = {"P1": P1, "P2": P2, "P3": P3, "P4": P4}


def get_profile(profile: BoundProfile | str) -> BoundProfile:
    if isinstance(profile, BoundProfile):
        return profile
    try:
        return PROFILES[profile]
    except KeyError:
        raise ValueError(f"unknown profile {profile!r}; "
                         f"builtins: {sorted(PROFILES)}") from None


# ---------------------------------------------------------------------------
# the four basic operations
# ---------------------------------------------------------------------------

def pi_lower(x: float, profile: BoundProfile | str, s: float = 0.0) -> float:
    """x/(log x - 1 - A(x)) + s; a strict lower bound for pi(x) when
    x >= the profile's offset-s threshold."""
    profile = get_profile(profile)
    x = float(x)
    y = profile.y_threshold(s)
    if x < y:
        raise ThresholdDomainError(
            f"pi_lower: x={x} below validity threshold {y} "
            f"({profile.name}, s={s})")
    denom = math.log(x) - 1.0 - profile.A(x)
    if denom <= 0:
        raise ThresholdDomainError(
            f"pi_lower: nonpositive denominator at x={x} ({profile.name})")
    return x / denom + s


def pi_upper(x: float, profile: BoundProfile | str) -> float:
    """x/(log x - 1 - B(x)); a strict upper bound for pi(x) when x >= X_0."""
    profile = get_profile(profile)
    x = float(x)
    if x < profile.x0:
        raise ThresholdDomainError(
            f"pi_upper: x={x} below validity threshold {profile.x0} "
            f"({profile.name})")
    denom = math.log(x) - 1.0 - profile.B(x)
    if denom <= 0:
        raise ThresholdDomainError(
            f"pi_upper: nonpositive denominator at x={x} ({profile.name})")
    return x / denom


def log_gap_holds(x: float, k, profile: BoundProfile | str) -> bool:
    """Predicate log k - B(kx) + A(x) >= 0, evaluated as written.

    Equivalent (for positive denominators) to the lower-bound denominator
    at x dominating the upper-bound denominator at kx.  The meaningful
    domain is x > 1; anywhere both A(x) and B(kx) are defined the
    predicate is still evaluated literally.
    """
    profile = get_profile(profile)
    x, k = float(x), float(k)
    if k <= 1:
        raise ValueError(f"need k > 1, got {k}")
    if x <= 0 or math.log(x) == 0 or math.log(k * x) == 0:
        raise ValueError(f"predicate undefined at x={x} (k={k})")
    return math.log(k) - profile.B(k * x) + profile.A(x) >= 0


def upsilon(x: float, k, profile: BoundProfile | str) -> float:
    """Certified lower bound for pi(x) - pi(x/k).

    Upsilon_k(x) = x/(log x - 1 - A(x)) *
                   (1 - 1/k - (1/k)(log k - A(x) + B(x/k))/(log(x/k) - 1 - B(x/k)))

    Valid (pi(x) - pi(x/k) > Upsilon_k(x)) for x >= max{Y_0, k*X_0}.
    Algebraically equal to x/(log x -1 -A(x)) - (x/k)/(log(x/k) -1 -B(x/k)).
    """
    profile = get_profile(profile)
    x, k = float(x), float(k)
    if k <= 1:
        raise ValueError(f"need k > 1, got {k}")
    lo = max(profile.y_threshold(0.0), k * profile.x0)
    if x < lo:
        raise ThresholdDomainError(
            f"upsilon: x={x} below validity threshold {lo} "
            f"({profile.name}, k={k})")
    ax = profile.A(x)
    bxk = profile.B(x / k)
    d1 = math.log(x) - 1.0 - ax
    d2 = math.log(x / k) - 1.0 - bxk
    if d1 <= 0 or d2 <= 0:
        raise ThresholdDomainError(
            f"upsilon: nonpositive denominator at x={x} ({profile.name})")
    return x / d1 * (1.0 - 1.0 / k - (math.log(k) - ax + bxk) / (k * d2))


# ---------------------------------------------------------------------------
# scalar closed forms
# ---------------------------------------------------------------------------

def x14(k: float, b1: float = 1.17) -> float:
    """Past k*x14(k) the second Upsilon factor is positive (A in {0, 1/log x})."""
    k = float(k)
    w = 0.5 + math.log(k) / (2.0 * (k - 1.0))
    return math.exp(math.sqrt(b1 + b1 / (k - 1.0) + w * w) + w)


def _x13(k: float) -> float:
    return max(k * x14(k), math.exp(2.547), 5.43 * k)


def _eps_lambda(eps1: float, eps2: float) -> tuple[float, float]:
    if eps1 < 0 or eps2 < 0 or eps1 + eps2 == 0:
        raise ValueError(
            f"need eps1 >= 0, eps2 >= 0, eps1 + eps2 != 0; "
            f"got eps1={eps1}, eps2={eps2}")
    eps = eps1 if eps1 != 0 else eps2
    sign = 1.0 if eps1 > 0 else 0.0
    lam = eps / 2.0 + eps2 * sign * (1.0 + eps / 2.0)
    return eps, lam


def _S(k, a1, b1, x0, eps1, eps2):
    k = float(k)
    eps, _ = _eps_lambda(eps1, eps2)
    g = (1.0 + eps) * math.log(k) / ((k - 1.0) * eps)
    inner = (b1
             + 2.0 * (1.0 + eps) / ((k - 1.0) * eps)
             * (b1 - a1 + a1 * math.log(k) / math.log(k * x0))
             + (0.5 + g) ** 2)
    return math.exp(math.sqrt(inner) + 0.5 + g)


def _T(a1, b1, eps1, eps2):
    eps, lam = _eps_lambda(eps1, eps2)
    h = math.log(1.0 + eps1) / (2.0 * lam)
    inner = (b1 + (b1 - a1) / lam + a1 * math.log(1.0 + eps1) / lam
             + (0.5 + h) ** 2)
    return math.exp(math.sqrt(inner) + 0.5 + h)


def _eta(k, b1, delta1):
    k = float(k)
    w = 0.5 + math.log(k) / (2.0 * delta1)
    return k * (math.sqrt(b1 * (1.0 + 1.0 / delta1) + w * w) + w)


def _gamma(k, eps1, eps2, eps3, delta1, delta2):
    k = float(k)
    for name, v in (("eps1", eps1), ("eps2", eps2), ("eps3", eps3),
                    ("delta1", delta1), ("delta2", delta2)):
        if v < 0:
            raise ValueError(f"gamma: need {name} >= 0, got {v}")
    return (((1.0 + eps2) * (1.0 + delta1) * (math.log(k) + delta2) / (k - 1.0)
             + math.log((1.0 + eps1) * (1.0 + eps3))) * k / (k - 1.0))


def _x21(eps3: float) -> float:
    """Least X (inflated) with log log x < eps3 * log x for all x >= X.

    In u = log x the condition is phi(u) = log u - eps3*u < 0; phi is
    concave with maximum at u = 1/eps3, so past the larger root it stays
    negative.  If even the maximum is negative, any X > 1 works.
    """
    if eps3 <= 0:
        raise ValueError(f"need eps3 > 0, got {eps3}")
    u0 = max(1.0, 1.0 / eps3)
    if math.log(u0) - eps3 * u0 < 0:
        return math.e
    lo, hi = u0, 2.0 * u0
    while math.log(hi) - eps3 * hi >= 0:
        hi *= 2.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if math.log(mid) - eps3 * mid >= 0:
            lo = mid
        else:
            hi = mid
    return inflate(math.exp(hi))


def _x24(eps3: float, eps4: float) -> float:
    """Least X (inflated) with
    log(1+eps3) + log(x+1) + log(x + log(x+1)) <= eps4 * x for all x >= X."""
    if eps3 <= 0 or eps4 <= 0:
        raise ValueError(f"need eps3, eps4 > 0; got {eps3}, {eps4}")

    def g(x):
        return (math.log(1.0 + eps3) + math.log(x + 1.0)
                + math.log(x + math.log(x + 1.0)) - eps4 * x)

    def gp(x):
        return (1.0 / (x + 1.0)
                + (1.0 + 1.0 / (x + 1.0)) / (x + math.log(x + 1.0)) - eps4)

    # g' is strictly decreasing from +inf to -eps4: single peak, at most
    # one crossing of zero to the right of it.
    lo, hi = 1e-9, 1.0
    while gp(hi) > 0:
        hi *= 2.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if gp(mid) > 0:
            lo = mid
        else:
            hi = mid
    peak = hi
    if g(peak) <= 0:
        return 1.0
    lo, hi = peak, 2.0 * peak
    while g(hi) > 0:
        hi *= 2.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if g(mid) > 0:
            lo = mid
        else:
            hi = mid
    return inflate(hi)


def _c0(s: float, pi) -> float:
    if s < 0:
        raise ValueError(f"need s >= 0, got {s}")
    _need_pi(pi, "c0")
    return max(4.0, 4.0 * s, (pi.pi(math.floor(2.0 + s)) - 1) * math.log(2.0))


# ---------------------------------------------------------------------------
# named thresholds
# ---------------------------------------------------------------------------

def _need_pi(pi, name: str):
    if pi is None:
        raise ValueError(f"threshold {name} needs a prime table (pi=...)")


def _pi_at(pi, x: float, name: str) -> int:
    """pi evaluated at a real threshold, conservatively rounded up first."""
    xi = math.floor(inflate(x))
    if xi > pi.limit:
        raise ResourceBudgetError(
            f"threshold {name} needs pi({xi}) but the table stops at "
            f"{pi.limit}", required=xi, cap=pi.limit)
    return pi.pi(xi)


def _x11(b1: float, x0: float, pi) -> int:
    """Least N with p_n >= n(log p_n - 1 - b1/log p_n) for all n >= N.

    For n > pi(x0) the upper estimate gives the inequality outright, so
    only finitely many n need checking.
    """
    _need_pi(pi, "X11")
    top = pi.pi(math.floor(x0))
    worst = 0
    for n in range(1, top + 1):
        p = pi.nth_prime(n)
        if p < n * (math.log(p) - 1.0 - b1 / math.log(p)):
            worst = n
    return worst + 1


def _x2(k, t, profile, pi=None):
    profile = get_profile(profile)
    k = float(k)
    rs = (t + 1) * (k - 1.0) / k
    return max(profile.x0, k * profile.x1(k), k * profile.y_threshold(rs))


def _x12(k, a1, b1, y0, x0, eps1, eps2, x10):
    k = float(k)
    s = _S(k, a1, b1, x0, eps1, eps2)
    t = _T(a1, b1, eps1, eps2)
    e1 = 1.0 + eps1
    return max(y0 / e1, k * x0 / e1, k * s / e1, t, x10 / e1)


def _x17(k, b1=1.17, x0=5.43):
    k = float(k)
    return max(5393.0, k * x0, k * x14(k, b1))


def _x16(k, b1, delta1, delta2, x0=5.43):
    k = float(k)
    return max(7477.0, k * x0, _eta(k, b1, delta1),
               k * math.exp(b1 / delta2))


def _x19(k, b1, eps2, delta1, delta2, pi, x0=5.43):
    _need_pi(pi, "X19")
    k = float(k)
    p16 = _pi_at(pi, _x16(k, b1, delta1, delta2, x0), "X19")
    p18 = _pi_at(pi, _x12(k, 0.0, b1, 5393.0, x0, 0.0, eps2, _x17(k, b1, x0)),
                 "X19")
    x11 = _x11(b1, x0, pi)
    return max(p16 + 1.0,
               (k - 1.0) * (p18 + 1.0) / (k * (1.0 + eps2)),
               (k - 1.0) * x11 / (k * (1.0 + eps2)))


def _x22(k, b1, eps1, eps2, eps3, delta1, delta2, pi, x0=5.43):
    _need_pi(pi, "X22")
    k = float(k)
    x11 = _x11(b1, x0, pi)
    x19 = _x19(k, b1, eps2, delta1, delta2, pi, x0)
    p20 = _pi_at(pi, _x12(k, 0.0, b1, 5393.0, x0, eps1, 0.0, _x17(k, b1, x0)),
                 "X22")
    return max((k - 1.0) * x11 / k, x19,
               (k - 1.0) * (p20 + 1.0) / k,
               (k - 1.0) * _x21(eps3) / k)


def _c1(k, eps1, eps2, eps3, eps4, delta1, delta2, pi):
    if eps4 <= 0:
        raise ValueError(f"need eps4 > 0, got {eps4}")
    return 1.0 + eps4 + _c0(_gamma(k, eps1, eps2, eps3, delta1, delta2), pi)


def _x25(k, b1, eps1, eps2, eps3, eps4, delta1, delta2, pi, x0=5.43):
    k = float(k)
    return max(_x22(k, b1, eps1, eps2, eps3, delta1, delta2, pi, x0),
               _x24(eps3, eps4),
               math.log(k / (k - 1.0)))


def _x26(k, b1, eps1, eps2, eps3, eps4, delta1, delta2, c2, pi, x0=5.43):
    k = float(k)
    c1 = _c1(k, eps1, eps2, eps3, eps4, delta1, delta2, pi)
    if not c2 > c1:
        raise ValueError(f"need c2 > c1; got c2={c2}, c1={c1}")
    x25 = _x25(k, b1, eps1, eps2, eps3, eps4, delta1, delta2, pi, x0)
    pow2 = 2.0 ** (c2 / (c2 - c1))
    return max(_x21(eps3),
               math.ceil(inflate(k / (k - 1.0) * x25)) + 1.0,
               float(_pi_at(pi, pow2, "X26")))


def _x23(k, b1, eps, pi=None):
    # The trailing term is X_2 for the A=0 profile with t=0, whose log-gap
    # threshold is exp(b1/log k)/k and whose fractional-offset lower-bound
    # threshold is the stored offset-1 value 7477.
    k = float(k)
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    prof = profile_p4(b1) if b1 != 1.17 else P4
    return max(5.43, 5393.0 * k, math.exp(b1 / eps),
               math.exp(b1 / math.log(k)), _x2(k, 0, prof))


def _x27(k, b1, eps, x0=5.43):
    k = float(k)
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    e = 1.0 + eps
    return max(5393.0 / e, k * x0 / e, k * _S(k, 0.0, b1, x0, eps, 0.0) / e,
               _T(0.0, b1, eps, 0.0), _x13(k) / e)


_E2547 = math.exp(2.547)

_THRESHOLDS: dict[str, Callable] = {
    "r": lambda pi=None, *, k: r(k),
    "rtilde": lambda pi=None, *, k: rtilde(k),
    "z": lambda pi=None, *, k: z(k),
    "lambda": lambda pi=None, *, eps1, eps2: _eps_lambda(eps1, eps2)[1],
    "S": lambda pi=None, *, k, a1=0.0, b1=1.17, x0=5.43, eps1, eps2:
        _S(k, a1, b1, x0, eps1, eps2),
    "T": lambda pi=None, *, a1=0.0, b1=1.17, eps1, eps2:
        _T(a1, b1, eps1, eps2),
    "eta": lambda pi=None, *, k, b1=1.17, delta1: _eta(k, b1, delta1),
    "gamma": lambda pi=None, *, k, eps1, eps2, eps3, delta1, delta2:
        _gamma(k, eps1, eps2, eps3, delta1, delta2),
    "c0": lambda pi=None, *, s: _c0(s, pi),
    "c1": lambda pi=None, *, k, eps1, eps2, eps3, eps4, delta1, delta2:
        _c1(k, eps1, eps2, eps3, eps4, delta1, delta2, pi),
    "X2": lambda pi=None, *, k, t=0, profile="P1": _x2(k, t, profile),
    "X3": lambda pi=None, *, k: max(470077.0 * float(k), float(k) * r(k)),
    "X4": lambda pi=None, *, k: max(5.43, 3.0 * float(k),
                                    float(k) * rtilde(k)),
    "X5": lambda pi=None, *, k, profile: (
        lambda kf, p: max(p.x0, kf * p.x1(kf), kf * p.y_threshold(0.0))
    )(float(k), get_profile(profile)),
    "X6": lambda pi=None, *, k: max(2.0 * float(k), 5.43, float(k) * z(k)),
    "X11": lambda pi=None, *, b1=1.17, x0=5.43: float(_x11(b1, x0, pi)),
    "X12": lambda pi=None, *, k, a1, b1, y0, x0, eps1, eps2, x10:
        _x12(k, a1, b1, y0, x0, eps1, eps2, x10),
    "X13": lambda pi=None, *, k: _x13(k),
    "X14": lambda pi=None, *, k, b1=1.17: x14(k, b1),
    "X15": lambda pi=None, *, k, eps1, eps2:
        _x12(k, 1.0, 1.17, 468049.0, _E2547, eps1, eps2, _x13(k)),
    "X16": lambda pi=None, *, k, b1=1.17, delta1, delta2, x0=5.43:
        _x16(k, b1, delta1, delta2, x0),
    "X17": lambda pi=None, *, k, b1=1.17, x0=5.43: _x17(k, b1, x0),
    "X18": lambda pi=None, *, k, b1=1.17, eps2, x0=5.43:
        _x12(k, 0.0, b1, 5393.0, x0, 0.0, eps2, _x17(k, b1, x0)),
    "X19": lambda pi=None, *, k, b1=1.17, eps2, delta1, delta2, x0=5.43:
        _x19(k, b1, eps2, delta1, delta2, pi, x0),
    "X20": lambda pi=None, *, k, b1=1.17, eps1, x0=5.43:
        _x12(k, 0.0, b1, 5393.0, x0, eps1, 0.0, _x17(k, b1, x0)),
    "X21": lambda pi=None, *, eps3: _x21(eps3),
    "X22": lambda pi=None, *, k, b1=1.17, eps1, eps2, eps3, delta1, delta2,
        x0=5.43: _x22(k, b1, eps1, eps2, eps3, delta1, delta2, pi, x0),
    "X23": lambda pi=None, *, k, b1=1.17, eps: _x23(k, b1, eps),
    "X24": lambda pi=None, *, eps3, eps4: _x24(eps3, eps4),
    "X25": lambda pi=None, *, k, b1=1.17, eps1, eps2, eps3, eps4, delta1,
        delta2, x0=5.43:
        _x25(k, b1, eps1, eps2, eps3, eps4, delta1, delta2, pi, x0),
    "X26": lambda pi=None, *, k, b1=1.17, eps1, eps2, eps3, eps4, delta1,
        delta2, c2, x0=5.43:
        _x26(k, b1, eps1, eps2, eps3, eps4, delta1, delta2, c2, pi, x0),
    "X27": lambda pi=None, *, k, b1=1.17, eps: _x27(k, b1, eps),
}


def threshold_names() -> list[str]:
    return sorted(_THRESHOLDS)


def named_threshold(name: str, pi=None, **params) -> float:
    """Evaluate a named threshold constant.

    Extra keyword arguments are the formula's parameters (k, eps1, ...);
    Fractions are accepted and converted.  Thresholds that count primes
    (c0, c1, X11, X19, X22, X25, X26) need a PrimeTable via pi.
    """
    try:
        formula = _THRESHOLDS[name]
    except KeyError:
        raise ValueError(f"unknown threshold {name!r}; "
                         f"known: {threshold_names()}") from None
    clean = {key: (value if isinstance(value, str)
                   or key == "profile" else float(value))
             for key, value in params.items()}
    return formula(pi, **clean)


# ---------------------------------------------------------------------------
# integer n-thresholds
# ---------------------------------------------------------------------------

def _ceil_real(value: float) -> int:
    return math.ceil(inflate(value))


def n_threshold(kind: str, pi, **params) -> int:
    """The integer index thresholds n_0..n_3 (ceiling of the real value).

    n0(k, t, profile): past it R_n^(k) > p_{ceil(kn/(k-1)) + t}.
    n1(k, eps1, eps2, ...): past it R_n^(k) <= (1+eps1) p_{ceil((1+eps2)kn/(k-1))};
       defaults instantiate the published a1=1, b1=1.17 configuration.
    n2(...): = X22; past it R_n^(k) - p_{ceil(kn/(k-1))} < gamma*n.
    n3(...): = p_{X26}; past it rho_k(x) <= c2/log x.

    n0 and n1 are rational-prefactor-times-integer expressions and their
    ceilings are taken exactly; n2 and n3 round a float threshold up.
    """
    k = params.get("k")
    if kind == "n0":
        t = int(params.get("t", 0))
        profile = get_profile(params.get("profile", "P1"))
        kx = Fraction(k)
        if not t > -math.ceil(kx / (kx - 1)):
            raise ValueError(f"n0: need t > -ceil(k/(k-1)), got t={t}")
        pival = _pi_at(pi, _x2(float(k), t, profile), "n0")
        return math.ceil((kx - 1) / kx * (pival - t + 1))
    if kind == "n1":
        kf = float(k)
        eps1 = float(params.get("eps1", 0.0))
        eps2x = Fraction(params.get("eps2", 0))
        a1 = float(params.get("a1", 1.0))
        b1 = float(params.get("b1", 1.17))
        y0 = float(params.get("y0", 468049.0))
        x0 = float(params.get("x0", _E2547))
        x10 = float(params.get("x10", _x13(kf)))
        x12 = _x12(kf, a1, b1, y0, x0, eps1, float(eps2x), x10)
        x11 = _x11(b1, x0, pi)
        m = max(_pi_at(pi, x12, "n1") + 1, x11)
        kx = Fraction(k)
        return math.ceil((kx - 1) / (kx * (1 + eps2x)) * m)
    if kind == "n2":
        kf = float(k)
        return _ceil_real(_x22(
            kf, float(params.get("b1", 1.17)), float(params["eps1"]),
            float(params["eps2"]), float(params["eps3"]),
            float(params["delta1"]), float(params["delta2"]), pi,
            float(params.get("x0", 5.43))))
    if kind == "n3":
        kf = float(k)
        idx = _ceil_real(_x26(
            kf, float(params.get("b1", 1.17)), float(params["eps1"]),
            float(params["eps2"]), float(params["eps3"]),
            float(params["eps4"]), float(params["delta1"]),
            float(params["delta2"]), float(params["c2"]), pi,
            float(params.get("x0", 5.43))))
        if idx > pi.prime_count:
            raise ResourceBudgetError(
                f"n3 needs the {idx}th prime but the table holds "
                f"{pi.prime_count}", required=idx, cap=pi.prime_count)
        return pi.nth_prime(idx)
    raise ValueError(f"unknown n-threshold kind {kind!r}")


# ---------------------------------------------------------------------------
# the tail certificate
# ---------------------------------------------------------------------------

def _fprime_threshold(profile: BoundProfile) -> float:
    """Least x (inflated) past which x/(log x - 1 - A(x)) is nondecreasing.

    The derivative has the sign of
        psi(x) = log x - 2 - A(x) - sum j*a_j/log^{j+1} x,
    which is increasing in x when all a_j >= 0.
    """
    def psi(x):
        lg = math.log(x)
        return (lg - 2.0 - profile.A(x)
                - sum((j + 1) * aj / lg ** (j + 2)
                      for j, aj in enumerate(profile.a)))

    lo, hi = 2.0, 16.0
    while psi(hi) < 0:
        hi *= 2.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if psi(mid) < 0:
            lo = mid
        else:
            hi = mid
    return inflate(hi)


def certify_tail(k, n: int, profile: BoundProfile | str = P4,
                 hard_cap: int = 1 << 62) -> int:
    """Integer X with pi(x) - pi(x/k) > n for every real x >= X.

    Works on profiles with all a_j >= 0 and a single b term, where the
    monotone region of Upsilon_k starts at
    max{Y_0, k*X_0, k*x14(k, b_1), F'-threshold}: there Upsilon_k is
    nondecreasing, so the first integer X with Upsilon_k(X) clearing
    n + 1 (plus slack) certifies the whole tail.
    """
    profile = get_profile(profile)
    kf = float(k)
    if kf <= 1:
        raise ValueError(f"need k > 1, got {k}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if any(aj < 0 for aj in profile.a) or len(profile.b) != 1:
        raise ThresholdDomainError(
            f"certify_tail: profile {profile.name} has no certified "
            "monotonicity threshold (need a_j >= 0 and a single b term)")
    b1 = profile.b[0]
    x_lo = max(profile.y_threshold(0.0), kf * profile.x0,
               kf * x14(kf, b1), _fprime_threshold(profile))
    start = math.ceil(inflate(x_lo))

    target = float(n + 1)

    def clears(x: int) -> bool:
        u = upsilon(float(x), kf, profile)
        return u >= target + max(abs(u) * REL_SLACK, ABS_SLACK)

    if clears(start):
        return start
    lo, hi = start, min(max(2 * start, 16), hard_cap)
    while not clears(hi):
        if hi >= hard_cap:
            raise ResourceBudgetError(
                f"certificate for k={k}, n={n} exceeds hard cap {hard_cap}",
                required=2 * hi, cap=hard_cap)
        lo = hi
        hi = min(2 * hi, hard_cap)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if clears(mid):
            hi = mid
        else:
            lo = mid
    return hi
