"""Satellite Lorenz braids and the word algorithm for their closures.

A satellite braid is assembled from three Lorenz braids: a companion C
inflated k-fold (every string replaced by k parallel strings, padded with
identity strands on both sides) followed by two pattern braids, A acting
on the leftmost n(A) points and B on the rightmost n(B) points, where
k = n_R(A) = n_L(B) >= 2.  Either pattern may be the identity braid on k
strands (a trivial pattern); the companion is always a word.

The closure is a knot exactly when the composite of A's R-return
permutation followed by B's L-return permutation is a single k-cycle (the
two composition orders are conjugate, so the verdict does not depend on
it).  For a knot, the symbolic word is produced by taking k copies of the
companion word and weaving runs of R's and L's into them: the run lengths
come from the patterns' rotation profiles, the insertion points are the
companion's maximal and minimal positions, and the lane labels walk
through the right pattern's L-return map after each R insertion and the
left pattern's R-return map between copies.

Conventions: the left pattern is held in R-minimal form, the right
pattern and the companion in L-maximal form.  Profile entries are indexed
by sorted rotations: m_R(i) reads the right pattern's i-th smallest
L-started rotation, m_L(i) the left pattern's i-th smallest R-started
rotation.  Insertion points are computed on the unmodified companion
copy, the deeper insertion applied first so indices stay valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braids import (
    LorenzPermutation,
    NotAKnotError,
    braid_to_word,
    is_knot,
    word_to_braid,
)
from .words import InvalidWordError, Word


@dataclass(frozen=True, slots=True)
class TrivialPattern:
    """The identity pattern braid on k strands; contributes no symbols."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"trivial pattern needs k >= 1, got {self.k}")

    def __str__(self) -> str:
        return f"trivial:{self.k}"


Pattern = Word | TrivialPattern


def parse_pattern(text: str) -> Pattern:
    """Parse a CLI pattern: a word literal or the form trivial:K."""
    if text.lower().startswith("trivial:"):
        raw = text.split(":", 1)[1]
        try:
            k = int(raw)
        except ValueError:
            raise ValueError(f"trivial pattern size {raw!r} is not an integer") from None
        return TrivialPattern(k)
    return Word.parse(text)


def _n_l(pattern: Pattern) -> int:
    return 0 if isinstance(pattern, TrivialPattern) else pattern.n_l


def _n_r(pattern: Pattern) -> int:
    return 0 if isinstance(pattern, TrivialPattern) else pattern.n_r


@dataclass(frozen=True, slots=True)
class SatelliteSpec:
    """Satellite input: left pattern, right pattern, companion.

    Word patterns are canonicalized on construction (left to R-minimal
    form, right and companion to L-maximal form), which also enforces
    aperiodicity.  The inflation factors of the two sides must agree.
    """

    left: Pattern
    right: Pattern
    companion: Word

    def __post_init__(self) -> None:
        if isinstance(self.left, Word):
            object.__setattr__(self, "left", self.left.r_minimal()[0])
        if isinstance(self.right, Word):
            object.__setattr__(self, "right", self.right.l_maximal()[0])
        if not isinstance(self.companion, Word):
            raise ValueError("the companion must be a word, not a trivial pattern")
        object.__setattr__(self, "companion", self.companion.l_maximal()[0])
        k_left = self.left.k if isinstance(self.left, TrivialPattern) else self.left.n_r
        k_right = self.right.k if isinstance(self.right, TrivialPattern) else self.right.n_l
        if k_left != k_right:
            raise ValueError(f"n_R(A)={k_left} != n_L(B)={k_right}")
        if k_left < 2:
            raise ValueError(f"inflation factor must be at least 2, got k={k_left}")

    @property
    def k(self) -> int:
        if isinstance(self.left, TrivialPattern):
            return self.left.k
        return self.left.n_r

    @property
    def strand_count(self) -> int:
        return _n_l(self.left) + _n_r(self.right) + self.k * len(self.companion)


@dataclass(frozen=True, slots=True)
class ReturnPermutation:
    """First-return permutation on the sorted same-symbol rotations of a word."""

    side: str
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.side not in ("L", "R"):
            raise ValueError(f"side must be 'L' or 'R', got {self.side!r}")
        if sorted(self.targets) != list(range(1, len(self.targets) + 1)):
            raise ValueError("targets is not a permutation of 1..size")

    @property
    def size(self) -> int:
        return len(self.targets)

    def __call__(self, i: int) -> int:
        return self.targets[i - 1]


def _sorted_offsets(word: Word, symbol: str) -> list[int]:
    s = word.symbols
    return sorted(
        (m for m in range(len(s)) if s[m] == symbol),
        key=lambda m: s[m:] + s[:m],
    )


def _return_map(word: Word, symbol: str) -> ReturnPermutation:
    if not word.is_aperiodic():
        raise InvalidWordError(f"word {word} is periodic")
    s = word.symbols
    n = len(s)
    offsets = _sorted_offsets(word, symbol)
    label = {m: i for i, m in enumerate(offsets, start=1)}
    targets = []
    for m in offsets:
        step = (m + 1) % n
        while s[step] != symbol:
            step = (step + 1) % n
        targets.append(label[step])
    return ReturnPermutation(symbol, tuple(targets))


@lru_cache(maxsize=None)
def l_return_map(word: Word) -> ReturnPermutation:
    """First-return permutation of the shift on the L-started rotations."""
    return _return_map(word, "L")


@lru_cache(maxsize=None)
def r_return_map(word: Word) -> ReturnPermutation:
    """First-return permutation of the shift on the R-started rotations."""
    return _return_map(word, "R")


def _run_profile(word: Word, lead: str, inserted: str) -> tuple[int, ...]:
    if not word.is_aperiodic():
        raise InvalidWordError(f"word {word} is periodic")
    s = word.symbols
    n = len(s)
    out = []
    for m in _sorted_offsets(word, lead):
        count = 0
        pos = (m + 1) % n
        while s[pos] == inserted:
            count += 1
            pos = (pos + 1) % n
        out.append(count)
    return tuple(out)


@lru_cache(maxsize=None)
def r_run_profile(word: Word) -> tuple[int, ...]:
    """R-run length right after the leading L of each sorted L-started rotation.

    Entry i is 0 when another L follows immediately; this is the m_R
    profile of a right pattern.
    """
    return _run_profile(word, "L", "R")


@lru_cache(maxsize=None)
def l_run_profile(word: Word) -> tuple[int, ...]:
    """L-run length right after the leading R of each sorted R-started rotation.

    Entry i is 0 when another R follows immediately; this is the m_L
    profile of a left pattern.
    """
    return _run_profile(word, "R", "L")


def run_profiles(spec: SatelliteSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(m_L, m_R): insertion run lengths from the left and right patterns.

    Trivial patterns insert nothing and yield all-zero profiles.
    """
    k = spec.k
    if isinstance(spec.left, TrivialPattern):
        m_l: tuple[int, ...] = (0,) * k
    else:
        m_l = l_run_profile(spec.left)
    if isinstance(spec.right, TrivialPattern):
        m_r: tuple[int, ...] = (0,) * k
    else:
        m_r = r_run_profile(spec.right)
    return m_l, m_r


def _r_return_targets(pattern: Pattern, k: int) -> tuple[int, ...]:
    if isinstance(pattern, TrivialPattern):
        return tuple(range(1, k + 1))
    return r_return_map(pattern).targets


def _l_return_targets(pattern: Pattern, k: int) -> tuple[int, ...]:
    if isinstance(pattern, TrivialPattern):
        return tuple(range(1, k + 1))
    return l_return_map(pattern).targets


def is_satellite_knot(spec: SatelliteSpec) -> bool:
    """True when the assembled braid closes to a single knot.

    Tests whether A's R-return permutation followed by B's L-return
    permutation is one k-cycle; with a trivial pattern on one side the
    composite is the other side's return map, which is always cyclic.
    """
    k = spec.k
    p_r = _r_return_targets(spec.left, k)
    p_l = _l_return_targets(spec.right, k)
    composite = tuple(p_l[p_r[i - 1] - 1] for i in range(1, k + 1))
    return is_knot(composite)


def satellite_braid(spec: SatelliteSpec) -> LorenzPermutation:
    """Assemble the satellite permutation: inflation stage, then patterns.

    Stage 1 inflates the companion between identity pads of widths n_L(A)
    and n_R(B); stage 2 applies A to the leftmost n(A) points and B to the
    rightmost n(B).  The composite must itself be a Lorenz permutation;
    violating that indicates a construction bug, not bad input.
    """
    k = spec.k
    companion_perm = word_to_braid(spec.companion)
    n_c = companion_perm.n
    left_pad = _n_l(spec.left)
    right_pad = _n_r(spec.right)
    n = left_pad + k * n_c + right_pad

    stage1 = list(range(1, n + 1))
    for i in range(1, n_c + 1):
        source = left_pad + (i - 1) * k
        target = left_pad + (companion_perm(i) - 1) * k
        for a in range(1, k + 1):
            stage1[source + a - 1] = target + a

    stage2 = list(range(1, n + 1))
    if isinstance(spec.left, Word):
        for i, tgt in enumerate(word_to_braid(spec.left).targets, start=1):
            stage2[i - 1] = tgt
    if isinstance(spec.right, Word):
        right_perm = word_to_braid(spec.right)
        offset = n - right_perm.n
        for i, tgt in enumerate(right_perm.targets, start=1):
            stage2[offset + i - 1] = offset + tgt

    targets = tuple(stage2[stage1[x - 1] - 1] for x in range(1, n + 1))
    p = left_pad + k * companion_perm.p
    try:
        return LorenzPermutation(targets, p)
    except ValueError as exc:
        raise AssertionError(
            f"satellite assembly produced a non-Lorenz permutation: {exc}") from exc


def satellite_copies(spec: SatelliteSpec) -> tuple[Word, ...]:
    """The k companion copies after run insertion, in concatenation order.

    The copies mirror how the closed orbit traverses the assembled braid.
    Each pass around the inflated companion runs in one lane; hitting the
    last beam in lane j reads the right pattern's R run m_R(j) (inserted
    right after the maximal position) and exits in lane pi_L(j); hitting
    the first beam in lane j reads the left pattern's L run m_L(j)
    (inserted right after the minimal position) and exits in lane pi_R(j),
    where the next copy begins.  The label starts at j = k, and both
    insertion points refer to the unmodified companion.
    """
    if not is_satellite_knot(spec):
        raise NotAKnotError("satellite braid closes to a link, not a knot")
    k = spec.k
    m_l, m_r = run_profiles(spec)
    p_r = _r_return_targets(spec.left, k)
    p_l = _l_return_targets(spec.right, k)
    base = spec.companion.symbols
    _, minimal_pos = spec.companion.r_minimal()

    copies = []
    j = k
    for i in range(k):
        if i:
            j = p_r[j - 1]
        r_amount = m_r[j - 1]
        j = p_l[j - 1]
        l_amount = m_l[j - 1]
        # The L insertion sits deeper in the copy (minimal position >= 1),
        # so apply it first; the R insertion at index 1 is unaffected.
        s = base[: minimal_pos + 1] + "L" * l_amount + base[minimal_pos + 1 :]
        s = s[:1] + "R" * r_amount + s[1:]
        copies.append(Word(s))
    return tuple(copies)


def satellite_word(spec: SatelliteSpec) -> Word:
    """Aperiodic word of the satellite knot, in L-maximal form."""
    joined = "".join(copy.symbols for copy in satellite_copies(spec))
    return Word(joined).l_maximal()[0]


def satellite_consistency(spec: SatelliteSpec) -> bool:
    """Cross-check the two routes: braid cycle word versus insertion algorithm."""
    from_braid, _ = braid_to_word(satellite_braid(spec)).l_maximal()
    return from_braid == satellite_word(spec)
