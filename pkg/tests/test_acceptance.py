"""Acceptance suite: exact-value and exhaustive property checks.

Run with `pytest tests/test_acceptance.py -v -s` to see one pass/fail
line per criterion.  Bounds follow the shipped contract: word sweeps to
length 14, satellite sweeps to pattern/companion length 9, family sweeps
to p <= 12, q <= 40.  All assertions are exact; there are no tolerances.
"""

from __future__ import annotations

import math

import pytest

from lorenzknots import (
    SatelliteSpec,
    Verdict,
    Word,
    braid_to_word,
    crossing_bounds,
    crossing_count,
    cycle_structure,
    doubled_genus,
    enumerate_family,
    family_hyperbolic_closed_form,
    genus2_bounds,
    is_knot,
    is_satellite_knot,
    l_return_map,
    l_run_profile,
    min_crossing_word,
    minimal_braid,
    params_of,
    r_return_map,
    r_run_profile,
    satellite_braid,
    satellite_copies,
    satellite_word,
    standard_word,
    torus_candidate_filter,
    word_to_braid,
)
from lorenzknots.oracles import (
    _brute_torus_candidates,
    aperiodic_classes,
    aperiodic_words,
    satellite_suite,
)

WORD_SWEEP_MAX_LEN = 14
SATELLITE_SWEEP_MAX_LEN = 9
COUNTS_MAX_P, COUNTS_MAX_Q = 12, 40
BOUNDS_MAX_P, BOUNDS_MAX_Q = 10, 40
FILTER_MAX_P, FILTER_MAX_Q = 9, 40

PROPOSITION_FAMILIES = [
    (5, 7), (5, 8), (5, 12), (5, 13),
    (7, 16), (7, 19), (8, 19), (8, 21), (10, 23),
]


def _report(number: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {number:2d}] {name}: {status}{suffix}")
    assert ok, f"criterion {number} ({name}) failed {suffix}"


@pytest.fixture(scope="module")
def word_sweep():
    """One pass over every aperiodic word of length <= 14."""
    roundtrip_failures: list[str] = []
    genus_failures: list[str] = []
    checked = 0
    for n in range(2, WORD_SWEEP_MAX_LEN + 1):
        for word in aperiodic_words(n):
            checked += 1
            perm = word_to_braid(word)
            back = braid_to_word(perm)
            if back.l_maximal()[0] != word.l_maximal()[0]:
                roundtrip_failures.append(str(word))
            t = word.trip_number()
            lorenz_2g = doubled_genus(crossing_count(perm), perm.n)
            minimal_2g = doubled_genus(len(minimal_braid(perm, t)), t)
            if lorenz_2g != minimal_2g:
                genus_failures.append(str(word))
    return checked, roundtrip_failures, genus_failures


@pytest.fixture(scope="module")
def satellite_sweep():
    """Exhaustive spec sweep with |A|, |B|, |C| <= 9, both checks at once."""
    return satellite_suite(SATELLITE_SWEEP_MAX_LEN)


def test_criterion_1_golden_satellite_word():
    spec = SatelliteSpec(Word("LRRLR"), Word("LRRLRLR"), Word("LRRLR"))
    copies = [str(c) for c in satellite_copies(spec)]
    word = str(satellite_word(spec))
    ok = copies == ["LRRRRLLR", "LRRRLR", "LRRRLLR"]
    ok = ok and word == "LRRRRLLRLRRRLRLRRRLLR"
    _report(1, "golden satellite word", ok, f"word={word} copies={copies}")


def test_criterion_2_golden_permutations_and_profiles():
    pi_l = l_return_map(Word("LRRLR")).targets
    pi_r = r_return_map(Word("LRRLR")).targets
    m_r = r_run_profile(Word("LRRLRLR"))
    m_l = l_run_profile(Word("LRRLR"))
    ok = pi_l == (2, 1) and pi_r == (2, 3, 1)
    ok = ok and m_r == (1, 1, 2) and m_l == (1, 1, 0)
    _report(2, "golden return maps and run profiles", ok,
            f"pi_L={pi_l} pi_R={pi_r} m_R={m_r} m_L={m_l}")


def test_criterion_3_knot_link_criterion(satellite_sweep):
    knot_spec = SatelliteSpec(Word("LRRLR"), Word("LRRLRLR"), Word("LRRLR"))
    link_spec = SatelliteSpec(Word("LRRLR"), Word("LRLRL"), Word("LRRLR"))
    ok = is_satellite_knot(knot_spec) is True
    ok = ok and is_knot(satellite_braid(knot_spec))
    ok = ok and is_satellite_knot(link_spec) is False
    ok = ok and len(cycle_structure(satellite_braid(link_spec))) > 1
    cyclicity_failures = [
        c for c in satellite_sweep.counterexamples if "return maps say" in c]
    ok = ok and not cyclicity_failures
    _report(3, "knot/link criterion vs braid cycles", ok,
            f"{satellite_sweep.checked} specs, "
            f"{len(cyclicity_failures)} disagreements")


def test_criterion_4_satellite_consistency(satellite_sweep):
    word_failures = [
        c for c in satellite_sweep.counterexamples if "algorithm word" in c]
    ok = satellite_sweep.passed and not word_failures
    _report(4, "braid word matches insertion algorithm", ok,
            f"{satellite_sweep.checked} specs, "
            f"{len(word_failures)} word mismatches, "
            f"{len(satellite_sweep.counterexamples)} total counterexamples")


def test_criterion_5_count_formula():
    failures = []
    checked = 0
    for p in range(2, COUNTS_MAX_P + 1):
        for q in range(p + 1, COUNTS_MAX_Q + 1):
            if math.gcd(p, q) != 1:
                continue
            checked += 1
            family = enumerate_family(p, q)
            r = q % p
            expected = math.factorial(p - 1) // (
                math.factorial(r) * math.factorial(p - r))
            if len(family) != expected:
                failures.append(f"({p},{q}): {len(family)} != {expected}")
            if (p <= 4 or r in (1, p - 1)) and family != (standard_word(p, q),):
                failures.append(f"({p},{q}): degenerate family not a singleton")
    _report(5, "family count formula", not failures,
            f"{checked} families" + (f"; failures={failures[:3]}" if failures else ""))


def test_criterion_6_bounds_and_extremizers():
    failures = []
    words_checked = 0
    for p in range(2, BOUNDS_MAX_P + 1):
        for q in range(p + 1, BOUNDS_MAX_Q + 1):
            if math.gcd(p, q) != 1:
                continue
            c_low, c_high = crossing_bounds(p, q)
            g_low, g_high = genus2_bounds(p, q)
            minimizer = min_crossing_word(p, q)
            maximizer = standard_word(p, q)
            if crossing_count(word_to_braid(maximizer)) != p * q:
                failures.append(f"({p},{q}): standard word crossings != pq")
            for word in enumerate_family(p, q):
                words_checked += 1
                crossings = crossing_count(word_to_braid(word))
                genus2 = doubled_genus(crossings, len(word))
                if not c_low <= crossings <= c_high:
                    failures.append(f"({p},{q}) {word}: crossings {crossings}")
                if not g_low <= genus2 <= g_high:
                    failures.append(f"({p},{q}) {word}: 2g {genus2}")
                if crossings == c_low and word != minimizer:
                    failures.append(f"({p},{q}) {word}: min not unique")
                if crossings == c_high and word != maximizer:
                    failures.append(f"({p},{q}) {word}: max not unique")
    _report(6, "crossing/genus bounds and extremizers", not failures,
            f"{words_checked} words" + (f"; failures={failures[:3]}" if failures else ""))


def test_criterion_7_genus_consistency(word_sweep):
    checked, _, genus_failures = word_sweep
    trefoil = word_to_braid(Word("LRRLR"))
    trefoil_braid = minimal_braid(trefoil, 2)
    ok = trefoil_braid.letters == (1, 1, 1)
    ok = ok and doubled_genus(len(trefoil_braid), 2) == 2
    ok = ok and not genus_failures
    _report(7, "genus consistency across both braid routes", ok,
            f"{checked} words, {len(genus_failures)} mismatches")


def test_criterion_8_proposition_families():
    failures = []
    words = 0
    for p, q in PROPOSITION_FAMILIES:
        params = params_of(p, q)
        if not family_hyperbolic_closed_form(p, q):
            failures.append(f"({p},{q}): closed form should hold")
        standard = standard_word(p, q)
        for word in enumerate_family(p, q):
            words += 1
            verdict, _ = torus_candidate_filter(word, params)
            expected = (
                Verdict.TORUS_STANDARD if word == standard
                else Verdict.NOT_TORUS_NOT_SATELLITE)
            if verdict is not expected:
                failures.append(f"({p},{q}) {word}: {verdict}")
    _report(8, "closed-form families fully excluded", not failures,
            f"{len(PROPOSITION_FAMILIES)} families, {words} words"
            + (f"; failures={failures[:3]}" if failures else ""))


def test_criterion_9_filter_vs_brute_force():
    failures = []
    checked = 0
    for p in range(2, FILTER_MAX_P + 1):
        for q in range(p + 1, FILTER_MAX_Q + 1):
            if math.gcd(p, q) != 1:
                continue
            params = params_of(p, q)
            for word in enumerate_family(p, q):
                checked += 1
                verdict, q_prime = torus_candidate_filter(word, params)
                if verdict is Verdict.TORUS_STANDARD:
                    continue
                genus2 = doubled_genus(
                    crossing_count(word_to_braid(word)), len(word))
                brute = _brute_torus_candidates(
                    p, q, params.k, params.r, genus2)
                expected = brute == ([q_prime] if q_prime is not None else [])
                if not expected:
                    failures.append(
                        f"({p},{q}) {word}: filter q'={q_prime} brute={brute}")
    _report(9, "filter agrees with blind q' search", not failures,
            f"{checked} words" + (f"; failures={failures[:3]}" if failures else ""))


def test_criterion_10_round_trip(word_sweep):
    checked, roundtrip_failures, _ = word_sweep
    _report(10, "word/braid round trip", not roundtrip_failures,
            f"{checked} words, {len(roundtrip_failures)} failures")


def test_satellite_sweep_covers_class_space(satellite_sweep):
    # Guard on the sweep domain itself: every orbit class with both
    # pattern roles and every companion length up to the bound appears.
    classes = [w for n in range(2, SATELLITE_SWEEP_MAX_LEN + 1)
               for w in aperiodic_classes(n)]
    assert len(classes) == 125
    assert satellite_sweep.checked > 300_000
