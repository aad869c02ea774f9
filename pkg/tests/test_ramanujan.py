"""The scan engine against an event-driven reference implementation.

The reference below shares no code with the engine: it never forms the
f* array, instead walking the event set {p*den} U {q*num} (scaled so
every x where either count can jump is an exact integer) with bisect
over a plain list.  Expected prefixes frozen into the tests came out of
this reference.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left, bisect_right
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramanujan_primes import (MpsVerdict, NEstimate, RamanujanTable,
                              ResourceBudgetError, TableCache, empirical_N,
                              empirical_N0, mps_holds, pi_k, ramanujan_prefix,
                              ramanujan_upto, rho_k)
from ramanujan_primes.ramanujan import (PROOF_ANALYTIC, PROOF_SCAN,
                                        scan_with_cutoff)


def naive_table(k: Fraction, n_max: int, primes, bound: int) -> list[int]:
    """R_1..R_{n_max} by brute enumeration of count-change events."""
    num, den = k.numerator, k.denominator
    events = {den}                    # x = 1, before any prime
    for p in primes:
        events.add(p * den)           # pi jumps at x = p
        if p * num <= bound * den:
            events.add(p * num)       # pi(x/k) jumps at x = k*p
    events = sorted(events)
    g = [bisect_right(primes, e // den) - bisect_right(primes, e // num)
         for e in events]
    sufmin = g[:]
    for i in range(len(g) - 2, -1, -1):
        sufmin[i] = min(sufmin[i], sufmin[i + 1])
    assert sufmin[-1] > n_max, "bound too small for requested n_max"
    out = []
    for n in range(1, n_max + 1):
        idx = bisect_left(sufmin, n)
        out.append(-((-events[idx]) // den))    # ceil
    return out


# frozen output of naive_table at bound 10^6
PREFIXES = {
    "4/3": [11, 31, 59, 71, 101, 151, 157, 163, 223, 227],
    "3/2": [11, 29, 37, 47, 71, 73, 101, 127, 137, 173],
    "5/3": [2, 13, 29, 41, 53, 59, 79, 89, 103, 127],
    "2": [2, 11, 17, 29, 41, 47, 59, 67, 71, 97],
    "3": [2, 3, 11, 17, 23, 29, 41, 43, 59, 61],
    "10": [2, 3, 5, 7, 11, 13, 17, 23],
}


# ---------------------------------------------------------------------------
# engine vs reference
# ---------------------------------------------------------------------------

def test_frozen_prefixes(cache):
    for ks, want in PREFIXES.items():
        got = ramanujan_prefix(ks, len(want), cache)
        assert got.values == want, ks
        assert got.proof == PROOF_ANALYTIC
        assert got.profile == "P4"
        assert got.cutoff > want[-1]


def test_matches_reference_to_n30(cache, oracle_primes):
    bound = 10 ** 5
    primes = oracle_primes[:bisect_right(oracle_primes, bound)]
    for ks in ("3/2", "2"):
        k = Fraction(ks)
        want = naive_table(k, 30, primes, bound)
        assert ramanujan_prefix(k, 30, cache).values == want, ks


@settings(max_examples=25, deadline=None)
@given(num=st.integers(2, 60), den=st.integers(1, 6), n_max=st.integers(1, 8))
def test_matches_reference_on_random_k(cache, oracle_primes, num, den, n_max):
    if num <= den:
        return              # den <= 6 keeps k >= 7/6, so R_8 sits far below bound
    k = Fraction(num, den)
    bound = 10 ** 4
    primes = oracle_primes[:bisect_right(oracle_primes, bound)]
    want = naive_table(k, n_max, primes, bound)
    assert ramanujan_prefix(k, n_max, cache).values == want


def test_landmark_values_k2(cache):
    table = ramanujan_prefix(2, 37097, cache)
    assert table.cutoff == 1018297
    pi = cache.get(table.cutoff)
    assert table.value(19) == 227 == pi.nth_prime(49)
    assert table.value(33) == 401
    assert table.value(37097) == 1003609


# ---------------------------------------------------------------------------
# result type
# ---------------------------------------------------------------------------

def test_value_is_one_indexed(cache):
    table = ramanujan_prefix("3/2", 10, cache)
    assert len(table) == 10
    assert table.value(1) == 11
    assert table.value(10) == 173
    with pytest.raises(IndexError):
        table.value(0)
    with pytest.raises(IndexError):
        table.value(11)


def test_rejects_unknown_proof_kind():
    with pytest.raises(ValueError, match="proof"):
        RamanujanTable(k=Fraction(2), values=[2], cutoff=5,
                       proof="guessed", profile="none")


def test_json_round_trip(cache):
    table = ramanujan_prefix("5/3", 10, cache)
    again = RamanujanTable.from_json(table.to_json())
    assert again == table
    raw = json.loads(table.to_json())
    assert raw["k"] == "5/3"
    assert raw["proof"] == PROOF_ANALYTIC


def test_validate_accepts_real_table(cache):
    table = ramanujan_prefix(2, 20, cache)
    table.validate(cache.get(table.cutoff))


def test_validate_catches_tampering(cache):
    pi = cache.get(10 ** 4)
    good = ramanujan_prefix(2, 10, cache)

    bad = RamanujanTable(k=good.k, values=[2, 2] + good.values[2:],
                         cutoff=good.cutoff, proof=good.proof,
                         profile=good.profile)
    with pytest.raises(AssertionError, match="strictly increasing"):
        bad.validate(pi)

    bad = RamanujanTable(k=good.k, values=[4] + good.values[1:],
                         cutoff=good.cutoff, proof=good.proof,
                         profile=good.profile)
    with pytest.raises(AssertionError, match="not prime"):
        bad.validate(pi)

    bad = RamanujanTable(k=good.k, values=[3] + good.values[1:],
                         cutoff=good.cutoff, proof=good.proof,
                         profile=good.profile)
    with pytest.raises(AssertionError, match="pi"):
        bad.validate(pi)


# ---------------------------------------------------------------------------
# prefix variants
# ---------------------------------------------------------------------------

def test_prefix_rejects_bad_n(cache):
    with pytest.raises(ValueError):
        ramanujan_prefix(2, 0, cache)


def test_upto_truncates_at_x(cache):
    assert ramanujan_upto(2, 100, cache).values == PREFIXES["2"]
    assert ramanujan_upto(2, 96, cache).values == PREFIXES["2"][:9]
    assert ramanujan_upto(3, 10, cache).values == [2, 3]


def test_upto_empty_cases(cache):
    empty = ramanujan_upto(2, 1, cache)
    assert empty.values == [] and len(empty) == 0
    assert empty.proof == PROOF_SCAN
    single = ramanujan_upto(2, 2, cache)
    assert single.values == [2]
    assert single.proof == PROOF_ANALYTIC


def test_scan_with_cutoff_is_tagged_unproven(cache):
    base = ramanujan_prefix(2, 10, cache)
    pi = cache.get(base.cutoff)
    raw = scan_with_cutoff(2, 10, base.cutoff, pi)
    assert raw.values == base.values
    assert raw.proof == PROOF_SCAN and raw.profile == "none"
    with pytest.raises(ResourceBudgetError):
        scan_with_cutoff(2, 10, pi.limit + 2, pi)


# ---------------------------------------------------------------------------
# cache behaviour and budget
# ---------------------------------------------------------------------------

def test_cache_grows_by_doubling():
    fresh = TableCache(initial_limit=1000)
    assert fresh.current() is None
    t1 = fresh.get(10)
    assert t1.limit == 1000 and fresh.current() is t1
    t2 = fresh.get(1500)
    assert t2.limit == 2000          # doubled, not just 1500
    assert fresh.get(3) is t2        # no rebuild on shrink


def test_cache_enforces_hard_cap():
    small = TableCache(hard_cap=5000)
    with pytest.raises(ResourceBudgetError) as err:
        small.get(6000)
    assert err.value.required == 6000
    assert err.value.cap == 5000


def test_budget_error_carries_partial_prefix(cache):
    small = TableCache(hard_cap=200_000)
    with pytest.raises(ResourceBudgetError) as err:
        ramanujan_prefix(2, 10_000, small)
    assert err.value.cap == 200_000
    assert err.value.required > 200_000
    partial = err.value.partial
    assert isinstance(partial, RamanujanTable)
    assert partial.proof == PROOF_ANALYTIC
    assert partial.cutoff <= 200_000
    assert len(partial) == 8240      # floor(upsilon at the cap) - 2
    reference = ramanujan_prefix(2, len(partial), cache)
    assert partial.values == reference.values


# ---------------------------------------------------------------------------
# pi_k and rho_k
# ---------------------------------------------------------------------------

def test_pi_k_pins(cache):
    for x, want in ((1, 0), (2, 1), (10, 1), (11, 2), (100, 10)):
        assert pi_k(2, x, cache) == want, x


def test_pi_k_inverts_the_table(cache):
    table = ramanujan_prefix("3/2", 10, cache)
    for n in (1, 4, 10):
        rv = table.value(n)
        assert pi_k("3/2", rv, cache) == n
        assert pi_k("3/2", rv - 1, cache) == n - 1


def test_rho_k_exact_values(cache):
    assert rho_k(2, 2, cache) == Fraction(-1, 2)
    assert rho_k(2, 41, cache) == Fraction(3, 26)
    assert rho_k(2, 100, cache) == Fraction(1, 10)
    with pytest.raises(ValueError):
        rho_k(2, 1, cache)


# ---------------------------------------------------------------------------
# empirical N and N_0
# ---------------------------------------------------------------------------

def test_empirical_N_small_k(cache):
    est = empirical_N(2, 30, cache)
    assert isinstance(est, NEstimate)
    assert est.value == 2 and est.kind == "empirical"
    assert est.closed_form is None and est.consistent is None
    assert est.probe == 30
    assert empirical_N0(2, 30, cache).value == 2
    assert empirical_N("3/2", 60, cache).value == 1


def test_empirical_N_closed_form_region(cache):
    est = empirical_N("745.8", 40, cache)
    assert est.kind == "closed-form"
    est = empirical_N(746, 700, cache)
    assert est.kind == "closed-form"
    assert est.value == est.closed_form == 331    # pi(2238) - 1
    assert est.consistent is True


def test_empirical_N0_closed_form_region(cache):
    est = empirical_N0(150, 124, cache)
    assert est.kind == "closed-form"
    assert est.value == est.closed_form == 62     # pi(300)
    assert est.consistent is True


def test_empirical_rejects_bad_probe(cache):
    with pytest.raises(ValueError):
        empirical_N(2, 0, cache)


# ---------------------------------------------------------------------------
# the interval property
# ---------------------------------------------------------------------------

def test_mps_pins(cache):
    v = mps_holds(1, cache)
    assert (v.verdict, v.n0, v.r_value) == ("holds-certified", 2, None)
    v = mps_holds(2, cache)
    assert (v.verdict, v.n0, v.r_value) == ("holds-certified", 2, 2)
    v = mps_holds(3, cache)
    assert (v.verdict, v.n0, v.r_value) == ("holds-certified", 3, 3)
    v = mps_holds(168, cache)
    assert (v.verdict, v.n0, v.r_value) == ("holds-certified", 7, 1013)
    v = mps_holds(1000, cache)
    assert (v.verdict, v.n0, v.r_value) == ("holds-certified", 9, 7937)
    assert v.holds
    with pytest.raises(ValueError):
        mps_holds(0, cache)


def test_mps_against_direct_counts(cache, oracle_primes):
    """Verdicts for 2 <= m <= 40 rechecked by counting primes directly."""
    def cnt(x):
        return bisect_right(oracle_primes, x)

    for m in range(2, 41):
        v = mps_holds(m, cache)
        assert isinstance(v, MpsVerdict) and v.holds, m
        assert v.n0 == math.ceil(1.1 * math.log(2.5 * m))
        for n in range(v.n0, 60):
            assert cnt(m * n) - cnt(n) >= m - 1, (m, n)
