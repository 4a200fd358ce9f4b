"""Torus knot words, syllable-permutation families, and exclusion filters.

The torus knot T(p,q), 1 < p < q and gcd(p,q) = 1, is the closure of the
Lorenz braid in which each of the p L strings crosses over all q R
strings.  Writing q = kp + r with 0 < r < p, its L-maximal word (the
standard word) consists of r syllables LR^{k+1} and p - r syllables LR^k,
evenly distributed.  Rearranging those syllables produces a family of
aperiodic words, all closing to knots of braid index p; this module
enumerates the family, bounds crossing numbers and genus across it, and
decides per word whether the knot can be a torus knot or a satellite.

Verdicts:

* TorusStandard: the evenly distributed word itself, a genuine torus knot.
* NotTorusNotSatellite: braid-index/genus arithmetic rules out every torus
  knot and the syllable shape rules out the satellite construction.  By
  Thurston the knot is then hyperbolic, conditional on Morton's conjecture
  that Lorenz satellites are cables over Lorenz knots.
* UndecidedTorusCandidate: exactly one torus knot T(p,q') shares braid
  index and genus; whether the knot actually is that torus knot is not
  decided here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from .braids import crossing_count, doubled_genus, word_to_braid
from .words import Word


class InvalidParamsError(ValueError):
    """(p, q) does not define a torus knot with 1 < p < q and gcd(p, q) = 1."""


@dataclass(frozen=True, slots=True)
class TorusParams:
    """Torus knot parameters with the division q = k*p + r, 0 < r < p."""

    p: int
    q: int
    k: int
    r: int


class Verdict(Enum):
    TORUS_STANDARD = "TorusStandard"
    NOT_TORUS_NOT_SATELLITE = "NotTorusNotSatellite"
    UNDECIDED_TORUS_CANDIDATE = "UndecidedTorusCandidate"


def params_of(p: int, q: int) -> TorusParams:
    """Validate (p, q) and split q = k*p + r."""
    if p <= 1:
        raise InvalidParamsError(f"p must exceed 1, got p={p}")
    if q <= p:
        raise InvalidParamsError(f"q must exceed p, got p={p}, q={q}")
    g = math.gcd(p, q)
    if g != 1:
        raise InvalidParamsError(f"p and q must be coprime: gcd({p},{q})={g}")
    return TorusParams(p, q, q // p, q % p)


def standard_word(p: int, q: int) -> Word:
    """The L-maximal evenly distributed word with p L's and q R's.

    Position j carries an L exactly when floor((j+1)p/(p+q)) exceeds
    floor(jp/(p+q)); the result is rotated to L-maximal form.  Even
    distribution is defined by syllable content, so the construction is
    checked rather than trusted: r runs of k+1 R's, p-r runs of k R's, and
    no LL blocks.
    """
    params = params_of(p, q)
    n = p + q
    chars = ["L" if (j + 1) * p // n > j * p // n else "R" for j in range(n)]
    word, _ = Word("".join(chars)).l_maximal()
    sylls = word.syllables()
    if any(a != 1 for a, _ in sylls):
        raise AssertionError(f"standard word for ({p},{q}) grew an LL block: {word}")
    runs = sorted(b for _, b in sylls)
    expected = sorted([params.k + 1] * params.r + [params.k] * (params.p - params.r))
    if runs != expected:
        raise AssertionError(
            f"standard word for ({p},{q}) has R runs {runs}, expected {expected}")
    return word


def enumerate_family(p: int, q: int) -> tuple[Word, ...]:
    """All L-maximal words sharing the standard word's syllable multiset.

    The C(p, r) placements of the long syllables are generated, each word
    rotated to L-maximal form and deduplicated; the output is sorted
    lexicographically decreasing for reproducible reports.  Every member
    is aperiodic because gcd(p, q) = 1.
    """
    params = params_of(p, q)
    seen: set[Word] = set()
    for long_slots in itertools.combinations(range(p), params.r):
        slots = set(long_slots)
        runs = (params.k + 1 if i in slots else params.k for i in range(p))
        word = Word("".join("L" + "R" * b for b in runs))
        seen.add(word.l_maximal()[0])
    return tuple(sorted(seen, key=lambda w: w.symbols, reverse=True))


def count_family(p: int, q: int) -> int:
    """Family size (p-1)! / (r! (p-r)!), exact integer arithmetic."""
    params = params_of(p, q)
    numerator = math.factorial(p - 1)
    denominator = math.factorial(params.r) * math.factorial(p - params.r)
    count, remainder = divmod(numerator, denominator)
    if remainder:
        raise AssertionError(f"family count for ({p},{q}) is not integral")
    return count


def crossing_bounds(p: int, q: int) -> tuple[int, int]:
    """Crossing range over the family: (p-r-1)(kp+1) + (r+1)(kp+r) up to pq."""
    params = params_of(p, q)
    k, r = params.k, params.r
    low = (p - r - 1) * (k * p + 1) + (r + 1) * (k * p + r)
    return low, p * q


def genus2_bounds(p: int, q: int) -> tuple[int, int]:
    """Doubled-genus range over the family: kp(p-1) + r(r-1) up to (p-1)(q-1).

    The maximum is attained exactly by the standard word, the minimum
    exactly by the word returned by min_crossing_word.
    """
    params = params_of(p, q)
    k, r = params.k, params.r
    return k * p * (p - 1) + r * (r - 1), (p - 1) * (q - 1)


def min_crossing_word(p: int, q: int) -> Word:
    """The unique family word attaining the crossing minimum.

    All long syllables first: (LR^{k+1})^r (LR^k)^{p-r}, in L-maximal form.
    """
    params = params_of(p, q)
    s = ("L" + "R" * (params.k + 1)) * params.r + ("L" + "R" * params.k) * (p - params.r)
    return Word(s).l_maximal()[0]


def _family_profile(word: Word) -> TorusParams | None:
    """TorusParams of the family the word belongs to, or None."""
    p, q = word.n_l, word.n_r
    if p <= 1 or q <= p or math.gcd(p, q) != 1:
        return None
    k, r = divmod(q, p)
    sylls = word.syllables()
    if any(a != 1 for a, _ in sylls):
        return None
    if sorted(b for _, b in sylls) != sorted([k + 1] * r + [k] * (p - r)):
        return None
    return TorusParams(p, q, k, r)


def torus_candidate_filter(
    word: Word, params: TorusParams
) -> tuple[Verdict, int | None]:
    """Decide whether a family word can close to a torus knot.

    The standard word is the torus knot itself.  For any other member, a
    torus knot sharing the braid index must be T(p, q') with
    (p-1)(q'-1) = 2g, which pins down at most one q'; that q' must also be
    below q, coprime to p, keep the quotient k, and have remainder r'
    strictly between 1 and r.  Failing any of these leaves nothing, and
    with the satellite construction excluded the knot is hyperbolic
    (conditional on Morton's conjecture).

    Returns the verdict plus the surviving q' for candidate verdicts.
    """
    canonical, _ = word.l_maximal()
    if canonical != word or _family_profile(word) != params:
        raise ValueError(
            f"word {word} is not an L-maximal member of the "
            f"({params.p},{params.q}) family")
    if word == standard_word(params.p, params.q):
        return Verdict.TORUS_STANDARD, None
    genus2 = doubled_genus(crossing_count(word_to_braid(word)), len(word))
    p, q, k, r = params.p, params.q, params.k, params.r
    if genus2 % (p - 1) != 0:
        return Verdict.NOT_TORUS_NOT_SATELLITE, None
    q_prime = genus2 // (p - 1) + 1
    r_prime = q_prime % p
    if (
        q_prime >= q
        or math.gcd(p, q_prime) != 1
        or q_prime // p != k
        or not 1 < r_prime < r
    ):
        return Verdict.NOT_TORUS_NOT_SATELLITE, None
    return Verdict.UNDECIDED_TORUS_CANDIDATE, q_prime


def satellite_excluded(word: Word) -> bool:
    """True when the syllable shape rules out the satellite construction.

    Building a word without LL blocks as a satellite would force a first
    syllable carrying at least two more R's than the shortest one.  A word
    whose L runs are all single and whose R runs take at most two
    consecutive values therefore cannot arise that way; every
    syllable-permutation family member qualifies.
    """
    sylls = word.syllables()
    if any(a != 1 for a, _ in sylls):
        return False
    runs = [b for _, b in sylls]
    return max(runs) - min(runs) <= 1


def family_hyperbolic_closed_form(p: int, q: int) -> bool:
    """Closed-form guarantee that no non-standard family word is a torus knot.

    Holds for r in {2, p-2} when p is odd, for r in {3, p-3} when p is even
    and not divisible by 3, and for every even p below 12.  When it holds,
    every non-standard family word is NotTorusNotSatellite.
    """
    params = params_of(p, q)
    if p <= 4:
        raise InvalidParamsError(f"the closed form applies to p > 4, got p={p}")
    r = params.r
    if p % 2 == 1:
        return r in (2, p - 2)
    if p < 12:
        return True
    return p % 3 != 0 and r in (3, p - 3)


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    """Per-word outcome: invariants plus the torus/satellite verdict.

    Words whose cyclic syllables match no family carry params and verdict
    None (in_family is the out-of-family marker).  morton_conditional
    records that a non-torus verdict leans on Morton's conjecture for the
    satellite half of the exclusion.
    """

    word: Word
    params: TorusParams | None
    crossings: int
    genus2: int
    verdict: Verdict | None
    candidate_q_prime: int | None
    morton_conditional: bool

    @property
    def in_family(self) -> bool:
        return self.params is not None

    def to_dict(self) -> dict:
        params = self.params
        return {
            "word": str(self.word),
            "p": params.p if params else self.word.n_l,
            "q": params.q if params else self.word.n_r,
            "k": params.k if params else None,
            "r": params.r if params else None,
            "n": len(self.word),
            "crossings": self.crossings,
            "genus2": self.genus2,
            "verdict": self.verdict.value if self.verdict else None,
            "q_prime": self.candidate_q_prime,
            "morton_conditional": self.morton_conditional,
            "in_family": self.in_family,
        }


def classify(word: Word) -> ClassificationReport:
    """Classify the orbit of an aperiodic word.

    The word is canonicalized to L-maximal form, matched against its
    syllable family, and run through the torus filter.  Internal
    cross-checks: family members must pass satellite_excluded, and a
    family covered by the closed form must not produce a candidate.
    """
    canonical, _ = word.l_maximal()
    braid = word_to_braid(canonical)
    crossings = crossing_count(braid)
    genus2 = doubled_genus(crossings, len(canonical))
    params = _family_profile(canonical)
    if params is None:
        return ClassificationReport(
            word=canonical,
            params=None,
            crossings=crossings,
            genus2=genus2,
            verdict=None,
            candidate_q_prime=None,
            morton_conditional=False,
        )
    verdict, q_prime = torus_candidate_filter(canonical, params)
    if not satellite_excluded(canonical):
        raise AssertionError(f"family word {canonical} failed satellite exclusion")
    if params.p > 4 and family_hyperbolic_closed_form(params.p, params.q):
        if verdict is Verdict.UNDECIDED_TORUS_CANDIDATE:
            raise AssertionError(
                f"closed form contradicts the filter verdict for {canonical}")
    return ClassificationReport(
        word=canonical,
        params=params,
        crossings=crossings,
        genus2=genus2,
        verdict=verdict,
        candidate_q_prime=q_prime,
        morton_conditional=verdict is not Verdict.TORUS_STANDARD,
    )
