"""Exhaustive brute-force sweeps that validate the library against itself.

Each suite replays one of the structural guarantees over every object in a
bounded domain and collects counterexamples verbatim.  The sweeps are the
acceptance evidence for the toolkit: word/braid round trips, the two
independent crossing-number routes agreeing on the genus, family counts
against the closed formula, the torus filter against a blind search, and
the satellite word algorithm against the assembled braid.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass, field

from .braids import (
    braid_to_word,
    crossing_count,
    cycle_structure,
    doubled_genus,
    is_knot,
    minimal_braid,
    word_to_braid,
)
from .satellites import (
    SatelliteSpec,
    TrivialPattern,
    is_satellite_knot,
    satellite_braid,
    satellite_word,
)
from .torus import (
    Verdict,
    count_family,
    crossing_bounds,
    enumerate_family,
    genus2_bounds,
    min_crossing_word,
    params_of,
    standard_word,
    torus_candidate_filter,
)
from .words import Word

# Default sweep bounds and the hard caps the CLI enforces.
ROUNDTRIP_MAX_LEN = 14
GENUS_MAX_LEN = 14
COUNTS_MAX_P, COUNTS_MAX_Q = 12, 40
FILTER_MAX_P, FILTER_MAX_Q = 9, 40
SATELLITE_MAX_LEN = 9

CAP_WORD_LEN = 16
CAP_SATELLITE_LEN = 10
CAP_P = 14
CAP_Q = 64


@dataclass
class OracleResult:
    suite: str
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"{status} {self.suite}: {self.checked} cases checked, "
            f"{len(self.counterexamples)} counterexamples"
        )


def aperiodic_words(length: int) -> Iterator[Word]:
    """Every aperiodic word of the given length, lexicographic order."""
    for bits in itertools.product("LR", repeat=length):
        s = "".join(bits)
        if "L" not in s or "R" not in s:
            continue
        word = Word(s)
        if word.is_aperiodic():
            yield word


def aperiodic_classes(length: int) -> Iterator[Word]:
    """One L-maximal representative per orbit of the given length."""
    for word in aperiodic_words(length):
        if word.symbols[0] == "L" and word.l_maximal()[0] == word:
            yield word


def _coprime_pairs(max_p: int, max_q: int) -> Iterator[tuple[int, int]]:
    for p in range(2, max_p + 1):
        for q in range(p + 1, max_q + 1):
            if math.gcd(p, q) == 1:
                yield p, q


def roundtrip_suite(max_len: int = ROUNDTRIP_MAX_LEN) -> OracleResult:
    """word -> braid -> word lands back in the same orbit, and the braid is a knot."""
    result = OracleResult("roundtrip")
    for n in range(2, max_len + 1):
        for word in aperiodic_words(n):
            result.checked += 1
            perm = word_to_braid(word)
            if not is_knot(perm):
                result.counterexamples.append(
                    f"word={word} braid splits into cycles {cycle_structure(perm)}")
                continue
            back = braid_to_word(perm)
            if back.l_maximal()[0] != word.l_maximal()[0]:
                result.counterexamples.append(
                    f"word={word} expected orbit of {word.l_maximal()[0]}, got {back}")
    return result


def genus_suite(max_len: int = GENUS_MAX_LEN) -> OracleResult:
    """Both crossing routes give one doubled genus: c - n + 1 = c_min - t + 1."""
    result = OracleResult("genus")
    for n in range(2, max_len + 1):
        for word in aperiodic_words(n):
            result.checked += 1
            perm = word_to_braid(word)
            t = word.trip_number()
            via_lorenz = doubled_genus(crossing_count(perm), perm.n)
            via_minimal = doubled_genus(len(minimal_braid(perm, t)), t)
            if via_lorenz != via_minimal:
                result.counterexamples.append(
                    f"word={word} lorenz 2g={via_lorenz} minimal 2g={via_minimal}")
    return result


def counts_suite(max_p: int = COUNTS_MAX_P, max_q: int = COUNTS_MAX_Q) -> OracleResult:
    """Enumerated family sizes match the closed formula; degenerate families are singletons."""
    result = OracleResult("counts")
    for p, q in _coprime_pairs(max_p, max_q):
        result.checked += 1
        family = enumerate_family(p, q)
        expected = count_family(p, q)
        if len(family) != expected:
            result.counterexamples.append(
                f"family p={p} q={q}: enumerated {len(family)}, formula {expected}")
            continue
        params = params_of(p, q)
        if p <= 4 or params.r in (1, p - 1):
            if family != (standard_word(p, q),):
                result.counterexamples.append(
                    f"family p={p} q={q}: expected the standard word alone, got "
                    f"{[str(w) for w in family]}")
    return result


def _brute_torus_candidates(p: int, q: int, k: int, r: int, genus2: int) -> list[int]:
    """Blind search for torus knots T(p, q') matching braid index and genus."""
    return [
        q_prime
        for q_prime in range(2, q)
        if (p - 1) * (q_prime - 1) == genus2
        and math.gcd(p, q_prime) == 1
        and q_prime // p == k
        and 1 < q_prime % p < r
    ]


def filter_suite(max_p: int = FILTER_MAX_P, max_q: int = FILTER_MAX_Q) -> OracleResult:
    """Closed-form torus filter agrees with the blind q' search on every family word."""
    result = OracleResult("filter")
    for p, q in _coprime_pairs(max_p, max_q):
        params = params_of(p, q)
        tallies = {verdict: 0 for verdict in Verdict}
        for word in enumerate_family(p, q):
            result.checked += 1
            verdict, q_prime = torus_candidate_filter(word, params)
            tallies[verdict] += 1
            if verdict is Verdict.TORUS_STANDARD:
                continue
            genus2 = doubled_genus(crossing_count(word_to_braid(word)), len(word))
            brute = _brute_torus_candidates(p, q, params.k, params.r, genus2)
            if verdict is Verdict.NOT_TORUS_NOT_SATELLITE and brute:
                result.counterexamples.append(
                    f"word={word} p={p} q={q}: filter excluded but brute force "
                    f"found q'={brute}")
            if verdict is Verdict.UNDECIDED_TORUS_CANDIDATE and brute != [q_prime]:
                result.counterexamples.append(
                    f"word={word} p={p} q={q}: filter kept q'={q_prime} but brute "
                    f"force found {brute}")
        result.notes.append(
            f"family p={p} q={q}: words={sum(tallies.values())} "
            f"torus={tallies[Verdict.TORUS_STANDARD]} "
            f"not_torus={tallies[Verdict.NOT_TORUS_NOT_SATELLITE]} "
            f"undecided={tallies[Verdict.UNDECIDED_TORUS_CANDIDATE]}")
    return result


def bounds_check(max_p: int, max_q: int) -> OracleResult:
    """Crossings and genus stay in their closed-form ranges, extremes unique.

    Not a CLI suite of its own, but shared by the tests: every family word
    respects both bounds, the minimum is attained only by the all-long-first
    word, the maximum only by the standard word, whose braid has exactly
    p*q crossings.
    """
    result = OracleResult("bounds")
    for p, q in _coprime_pairs(max_p, max_q):
        c_low, c_high = crossing_bounds(p, q)
        g_low, g_high = genus2_bounds(p, q)
        minimizer = min_crossing_word(p, q)
        maximizer = standard_word(p, q)
        for word in enumerate_family(p, q):
            result.checked += 1
            crossings = crossing_count(word_to_braid(word))
            genus2 = doubled_genus(crossings, len(word))
            if not c_low <= crossings <= c_high:
                result.counterexamples.append(
                    f"word={word}: crossings {crossings} outside [{c_low},{c_high}]")
            if not g_low <= genus2 <= g_high:
                result.counterexamples.append(
                    f"word={word}: 2g {genus2} outside [{g_low},{g_high}]")
            if crossings == c_low and word != minimizer:
                result.counterexamples.append(
                    f"word={word}: attains the crossing minimum but is not {minimizer}")
            if crossings == c_high and word != maximizer:
                result.counterexamples.append(
                    f"word={word}: attains the crossing maximum but is not {maximizer}")
        if crossing_count(word_to_braid(maximizer)) != p * q:
            result.counterexamples.append(
                f"standard word p={p} q={q}: braid must have exactly {p * q} crossings")
    return result


def _pattern_pools(max_len: int) -> tuple[dict[int, list[Word]], dict[int, list[Word]], list[Word]]:
    by_n_r: dict[int, list[Word]] = {}
    by_n_l: dict[int, list[Word]] = {}
    companions: list[Word] = []
    for n in range(2, max_len + 1):
        for word in aperiodic_classes(n):
            companions.append(word)
            by_n_r.setdefault(word.n_r, []).append(word)
            by_n_l.setdefault(word.n_l, []).append(word)
    return by_n_r, by_n_l, companions


def satellite_suite(max_len: int = SATELLITE_MAX_LEN) -> OracleResult:
    """Sweep every satellite spec with |A|, |B|, |C| up to max_len.

    For each spec, the return-map cyclicity verdict must match the braid's
    cycle count and the strand-count formula must hold; for knots, the
    insertion algorithm's word must match the braid's cycle word and carry
    k * t(C) syllables over k|C| + n_L(A) + n_R(B) symbols.
    """
    result = OracleResult("satellite")
    by_n_r, by_n_l, companions = _pattern_pools(max_len)
    knots = 0
    for k in range(2, max_len):
        lefts: list[Word | TrivialPattern] = [TrivialPattern(k)]
        lefts.extend(by_n_r.get(k, []))
        rights: list[Word | TrivialPattern] = [TrivialPattern(k)]
        rights.extend(by_n_l.get(k, []))
        for left, right, companion in itertools.product(lefts, rights, companions):
            result.checked += 1
            spec = SatelliteSpec(left, right, companion)
            predicted = is_satellite_knot(spec)
            braid = satellite_braid(spec)
            if braid.n != spec.strand_count:
                result.counterexamples.append(
                    f"spec=({left},{right},{companion}): braid on {braid.n} strings, "
                    f"formula gives {spec.strand_count}")
            actual = is_knot(braid)
            if predicted != actual:
                result.counterexamples.append(
                    f"spec=({left},{right},{companion}): return maps say "
                    f"knot={predicted}, braid cycles say knot={actual}")
                continue
            if not predicted:
                continue
            knots += 1
            produced = satellite_word(spec)
            from_braid = braid_to_word(braid).l_maximal()[0]
            if produced != from_braid:
                result.counterexamples.append(
                    f"spec=({left},{right},{companion}): algorithm word {produced} "
                    f"!= braid word {from_braid}")
                continue
            expected_len = k * len(companion) + _pattern_n_l(left) + _pattern_n_r(right)
            if len(produced) != expected_len:
                result.counterexamples.append(
                    f"spec=({left},{right},{companion}): word length {len(produced)}, "
                    f"formula gives {expected_len}")
            if produced.trip_number() != k * companion.trip_number():
                result.counterexamples.append(
                    f"spec=({left},{right},{companion}): trip number "
                    f"{produced.trip_number()} != k*t(C)="
                    f"{k * companion.trip_number()}")
    result.notes.append(f"knot-producing specs: {knots}")
    return result


def _pattern_n_l(pattern: Word | TrivialPattern) -> int:
    return 0 if isinstance(pattern, TrivialPattern) else pattern.n_l


def _pattern_n_r(pattern: Word | TrivialPattern) -> int:
    return 0 if isinstance(pattern, TrivialPattern) else pattern.n_r


SUITES = {
    "roundtrip": roundtrip_suite,
    "genus": genus_suite,
    "counts": counts_suite,
    "filter": filter_suite,
    "satellite": satellite_suite,
}
