"""k-Ramanujan primes: certified computation and derived quantities.

R_n^(k) is the least m such that pi(x) - pi(x/k) >= n for every real
x >= m.  For integer m the infimum of pi(x) - pi(x/k) over x in
[m, m+1) is

    f*(m) = pi(m) - #{q prime : q < (m+1)/k},

because pi(x) is constant on the interval while pi(x/k) peaks as
x -> (m+1)^-.  Hence R_n^(k) = 1 + max{m : f*(m) < n}.  With k = num/den
the strict count below (m+1)/k is pi(((m+1)*den - 1) // num), exact in
integer arithmetic, so the whole scan vectorizes over a cumulative-pi
array.  A scan is complete only below a cutoff X for which the tail
x >= X is PROVEN safe; bounds.certify_tail supplies that proof, and the
suffix minimum of f* (nondecreasing by construction) turns the scan
into one searchsorted per batch of n.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import bounds
from .errors import ResourceBudgetError
from .primes import PrimeTable, build_table
from .rational import ceil_div, parse_k

__all__ = [
    "RamanujanTable", "TableCache", "NEstimate", "MpsVerdict",
    "ramanujan_prefix", "ramanujan_upto", "pi_k", "rho_k",
    "empirical_N", "empirical_N0", "mps_holds",
]

PROOF_ANALYTIC = "analytic-certificate"
PROOF_SCAN = "exhaustive-scan"


# ---------------------------------------------------------------------------
# result types
# ---------------------------------------------------------------------------

@dataclass
class RamanujanTable:
    """R_1^(k)..R_N^(k) plus the cutoff that makes the scan a proof."""

    k: Fraction
    values: list[int]
    cutoff: int
    proof: str
    profile: str

    def __post_init__(self):
        if self.proof not in (PROOF_ANALYTIC, PROOF_SCAN):
            raise ValueError(f"unknown proof kind {self.proof!r}")

    def __len__(self) -> int:
        return len(self.values)

    def value(self, n: int) -> int:
        """R_n^(k), 1-indexed."""
        if n < 1 or n > len(self.values):
            raise IndexError(f"n={n} outside computed range "
                             f"[1, {len(self.values)}]")
        return self.values[n - 1]

    def validate(self, pi: PrimeTable) -> None:
        """Check the defining invariants against a prime table."""
        num, den = self.k.numerator, self.k.denominator
        prev = 1
        for n, rv in enumerate(self.values, start=1):
            if rv <= prev:
                raise AssertionError(f"values not strictly increasing at n={n}")
            if not pi.is_prime(rv):
                raise AssertionError(f"R_{n} = {rv} is not prime")
            if rv < pi.nth_prime(n):
                raise AssertionError(f"R_{n} = {rv} below p_{n}")
            if pi.pi(rv) - pi.pi(rv * den // num) != n:
                raise AssertionError(f"pi(R_n) - pi(R_n/k) != n at n={n}")
            prev = rv

    def to_json(self) -> str:
        return json.dumps({
            "k": f"{self.k.numerator}/{self.k.denominator}",
            "values": self.values,
            "cutoff": self.cutoff,
            "proof": self.proof,
            "profile": self.profile,
        })

    @classmethod
    def from_json(cls, text: str) -> "RamanujanTable":
        raw = json.loads(text)
        num, _, den = raw["k"].partition("/")
        return cls(k=Fraction(int(num), int(den or 1)),
                   values=[int(v) for v in raw["values"]],
                   cutoff=int(raw["cutoff"]),
                   proof=raw["proof"],
                   profile=raw["profile"])


@dataclass
class NEstimate:
    """Empirical N(k) or N_0(k), with the closed form when one applies."""

    value: int
    kind: str                    # "closed-form" | "empirical"
    probe: int
    closed_form: int | None = None
    consistent: bool | None = None


@dataclass
class MpsVerdict:
    m: int
    verdict: str                 # "holds-certified" | "holds-scanned" | "fails"
    n0: int
    r_value: int | None = None
    counterexample: tuple[int, int] | None = None

    @property
    def holds(self) -> bool:
        return self.verdict != "fails"


# ---------------------------------------------------------------------------
# shared prime tables
# ---------------------------------------------------------------------------

class TableCache:
    """Grow-on-demand PrimeTable shared between computations.

    The table only ever grows (by doubling, so repeated small bumps do
    not resieve), and swaps atomically under a lock; readers always see
    a complete table.  hard_cap bounds the sieve limit.
    """

    def __init__(self, hard_cap: int = 1 << 31,
                 initial_limit: int = 1 << 20):
        self.hard_cap = int(hard_cap)
        self._initial = int(initial_limit)
        self._lock = threading.Lock()
        self._table: PrimeTable | None = None

    def current(self) -> PrimeTable | None:
        return self._table

    def get(self, limit: int) -> PrimeTable:
        limit = int(limit)
        if limit > self.hard_cap:
            raise ResourceBudgetError(
                f"sieve limit {limit} exceeds hard cap {self.hard_cap}",
                required=limit, cap=self.hard_cap)
        table = self._table
        if table is not None and table.limit >= limit:
            return table
        with self._lock:
            table = self._table
            if table is not None and table.limit >= limit:
                return table
            target = max(self._initial,
                         table.limit * 2 if table is not None else 0,
                         limit)
            target = min(target, self.hard_cap)
            self._table = build_table(target)
            return self._table


def _as_cache(cache: TableCache | None) -> TableCache:
    return cache if cache is not None else TableCache()


# ---------------------------------------------------------------------------
# the scan
# ---------------------------------------------------------------------------

def _fstar_array(k: Fraction, hi: int, pi: PrimeTable) -> np.ndarray:
    """f*(m) for m = 0..hi-1 (infimum of the prime gap count on [m, m+1))."""
    num, den = k.numerator, k.denominator
    pi_arr = pi.pi_cumulative(hi)
    m = np.arange(hi, dtype=np.int64)
    q = ((m + 1) * den - 1) // num
    return pi_arr - pi_arr[q]


def _suffix_min(arr: np.ndarray) -> np.ndarray:
    return np.minimum.accumulate(arr[::-1])[::-1]


def _scan(k: Fraction, n_max: int, cutoff: int, pi: PrimeTable) -> list[int]:
    """R_1..R_{n_max} assuming no m >= cutoff has f*(m) < n_max."""
    sufmin = _suffix_min(_fstar_array(k, cutoff, pi))
    targets = np.arange(1, n_max + 1, dtype=sufmin.dtype)
    values = np.searchsorted(sufmin, targets, side="left")
    if n_max and values[-1] >= cutoff:
        raise AssertionError(
            f"scan for k={k} hit its own cutoff {cutoff}; certificate broken")
    return [int(v) for v in values]


def ramanujan_prefix(k, n_max: int, cache: TableCache | None = None,
                     profile=bounds.P4) -> RamanujanTable:
    """R_1^(k)..R_{n_max}^(k) with an analytically certified cutoff."""
    k = parse_k(k)
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    cache = _as_cache(cache)
    profile = bounds.get_profile(profile)
    try:
        cutoff = bounds.certify_tail(k, n_max, profile,
                                     hard_cap=cache.hard_cap)
        pi = cache.get(cutoff)
    except ResourceBudgetError as err:
        raise _partial_error(err, k, n_max, cache, profile) from None
    values = _scan(k, n_max, cutoff, pi)
    return RamanujanTable(k=k, values=values, cutoff=cutoff,
                          proof=PROOF_ANALYTIC, profile=profile.name)


def _partial_error(err: ResourceBudgetError, k: Fraction, n_max: int,
                   cache: TableCache, profile) -> ResourceBudgetError:
    """Attach whatever prefix is still certifiable within the cap."""
    partial = None
    try:
        cap = cache.hard_cap
        u = bounds.upsilon(float(cap), k, profile)
        n_ok = min(n_max, max(0, math.floor(u) - 2))
        if n_ok >= 1:
            cutoff = bounds.certify_tail(k, n_ok, profile, hard_cap=cap)
            pi = cache.get(cutoff)
            partial = RamanujanTable(k=k, values=_scan(k, n_ok, cutoff, pi),
                                     cutoff=cutoff, proof=PROOF_ANALYTIC,
                                     profile=profile.name)
    except Exception:
        partial = None
    return ResourceBudgetError(str(err), required=err.required,
                               cap=err.cap, partial=partial)


def scan_with_cutoff(k, n_max: int, cutoff: int,
                     pi: PrimeTable) -> RamanujanTable:
    """Scan below a caller-supplied bound, tagged as such.

    The values are correct only if the caller's cutoff really is past
    R_{n_max}^(k); nothing here proves that.
    """
    k = parse_k(k)
    if cutoff > pi.limit + 1:
        raise ResourceBudgetError(
            f"cutoff {cutoff} beyond table limit {pi.limit}",
            required=cutoff, cap=pi.limit)
    values = _scan(k, n_max, cutoff, pi)
    return RamanujanTable(k=k, values=values, cutoff=cutoff,
                          proof=PROOF_SCAN, profile="none")


def ramanujan_upto(k, x: int, cache: TableCache | None = None,
                   profile=bounds.P4) -> RamanujanTable:
    """All k-Ramanujan primes <= x (i.e. R_1..R_{pi_k(x)})."""
    k = parse_k(k)
    if x < 2:
        return RamanujanTable(k=k, values=[], cutoff=max(2, x + 1),
                              proof=PROOF_SCAN, profile="none")
    cache = _as_cache(cache)
    count = pi_k(k, x, cache, profile)
    if count == 0:
        return RamanujanTable(k=k, values=[], cutoff=x + 1,
                              proof=PROOF_SCAN, profile="none")
    table = ramanujan_prefix(k, count, cache, profile)
    assert table.values[-1] <= x
    return table


# ---------------------------------------------------------------------------
# counting and deficiency
# ---------------------------------------------------------------------------

def pi_k(k, x: int, cache: TableCache | None = None,
         profile=bounds.P4) -> int:
    """#{n : R_n^(k) <= x}, equal to inf_{y >= x} (pi(y) - pi(y/k))."""
    k = parse_k(k)
    if x < 2:
        return 0
    cache = _as_cache(cache)
    profile = bounds.get_profile(profile)
    num, den = k.numerator, k.denominator
    pi = cache.get(x)
    fstar_x = pi.pi(x) - pi.pi(((x + 1) * den - 1) // num)
    cutoff = bounds.certify_tail(k, fstar_x + 1, profile,
                                 hard_cap=cache.hard_cap)
    hi = max(cutoff, x + 1)
    pi = cache.get(hi)
    f = _fstar_array(k, hi, pi)
    return int(f[x:].min())


def rho_k(k, x: int, cache: TableCache | None = None,
          profile=bounds.P4) -> Fraction:
    """(k-1)/k - pi_k(x)/pi(x), exact."""
    k = parse_k(k)
    if x < 2:
        raise ValueError(f"need x >= 2, got {x}")
    cache = _as_cache(cache)
    count = pi_k(k, x, cache, profile)
    total = cache.get(x).pi(x)
    return Fraction(k.numerator - k.denominator, k.numerator) \
        - Fraction(count, total)


# ---------------------------------------------------------------------------
# empirical N(k) and N_0(k)
# ---------------------------------------------------------------------------

_N_CLOSED_FROM = Fraction(7458, 10)    # N(k) = pi(3k) - 1 from here on
_N0_CLOSED_FROM = Fraction(1437, 10)   # N_0(k) = pi(2k) from here on


def _p_index(k: Fraction, n: int) -> int:
    """ceil(k*n/(k-1)) exactly."""
    num, den = k.numerator, k.denominator
    return ceil_div(num * n, num - den)


def _nth_prime_limit(idx: int) -> int:
    """A safe sieve limit containing at least idx primes."""
    if idx < 6:
        return 16
    x = idx * (math.log(idx) + math.log(math.log(idx)))
    return int(x * 1.2) + 16


def _empirical(k, n_probe: int, cache: TableCache | None, strict: bool,
               profile) -> NEstimate:
    k = parse_k(k)
    if n_probe < 1:
        raise ValueError(f"need n_probe >= 1, got {n_probe}")
    cache = _as_cache(cache)
    table = ramanujan_prefix(k, n_probe, cache, profile)
    pi = cache.get(max(_nth_prime_limit(_p_index(k, n_probe)), table.cutoff))
    rvals = np.asarray(table.values, dtype=np.int64)
    num, den = k.numerator, k.denominator
    idx = (num * np.arange(1, n_probe + 1, dtype=np.int64)
           + (num - den) - 1) // (num - den)
    pvals = np.asarray([pi.nth_prime(int(i)) for i in idx], dtype=np.int64)
    violations = np.flatnonzero(rvals <= pvals if strict else rvals < pvals)
    emp = int(violations[-1]) + 2 if len(violations) else 1

    bound = 3 if strict else 2
    closed_from = _N_CLOSED_FROM if strict else _N0_CLOSED_FROM
    if k >= closed_from:
        cf = pi.pi((bound * k.numerator) // k.denominator) - (1 if strict else 0)
        return NEstimate(value=cf, kind="closed-form", probe=n_probe,
                         closed_form=cf, consistent=(emp == cf))
    return NEstimate(value=emp, kind="empirical", probe=n_probe)


def empirical_N(k, n_probe: int, cache: TableCache | None = None,
                profile=bounds.P4) -> NEstimate:
    """Least m with R_n^(k) > p_{ceil(kn/(k-1))} for all m <= n <= n_probe.

    Closed form pi(3k) - 1 (exact, not just empirical) once k >= 745.8;
    there the probe acts as a consistency check.
    """
    return _empirical(k, n_probe, cache, True, profile)


def empirical_N0(k, n_probe: int, cache: TableCache | None = None,
                 profile=bounds.P4) -> NEstimate:
    """Same with >= in place of >; closed form pi(2k) once k >= 143.7."""
    return _empirical(k, n_probe, cache, False, profile)


# ---------------------------------------------------------------------------
# the interval conjecture reduction
# ---------------------------------------------------------------------------

def mps_holds(m: int, cache: TableCache | None = None,
              profile=bounds.P4) -> MpsVerdict:
    """Verdict for: pi(m*n) - pi(n) >= m - 1 for every n >= ceil(1.1 log 2.5m).

    Reduction: if R_{m-1}^(m) <= m * n0 the claim holds for every
    n >= n0 at once; otherwise each n up to ceil(R/m) is checked
    directly and beyond that the definition of R_{m-1}^(m) takes over.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    n0 = math.ceil(1.1 * math.log(2.5 * m))
    if m == 1:
        return MpsVerdict(m=1, verdict="holds-certified", n0=n0)
    cache = _as_cache(cache)
    table = ramanujan_prefix(Fraction(m), m - 1, cache, profile)
    rv = table.values[-1]
    if rv <= m * n0:
        return MpsVerdict(m=m, verdict="holds-certified", n0=n0, r_value=rv)
    n_hi = ceil_div(rv, m)
    pi = cache.get(m * n_hi)
    for n in range(max(n0, 1), n_hi + 1):
        if pi.pi(m * n) - pi.pi(n) < m - 1:
            return MpsVerdict(m=m, verdict="fails", n0=n0, r_value=rv,
                              counterexample=(m, n))
    return MpsVerdict(m=m, verdict="holds-scanned", n0=n0, r_value=rv)
