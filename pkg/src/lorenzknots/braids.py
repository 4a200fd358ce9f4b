"""Lorenz braids as permutations, crossing counts, genus, and minimal braids.

A Lorenz braid on n = p + q strings is a simple positive braid whose p
left (L) strings cross over the q right (R) strings, with no crossings
inside either group.  It is fully determined by its permutation pi, which
is strictly increasing on the L block {1..p} and on the R block {p+1..n},
moves every L point rightwards and every R point leftwards.  Points are
numbered 1..n from the left throughout, matching the exponent formulas
below.

Sign convention: a generator letter i stands for the positive crossing of
strands i and i+1 with the left strand on top, following Birman's usage
for Lorenz braids (opposite to the sign many knot-theory texts prefer).

The braid of a word w of length n is read off its orbit: sort the n
rotations (L-started ones occupy positions 1..p), and let each rotation's
string run to the position holding its successor rotation.  The closure
is a knot exactly when pi is a single cycle, and then the doubled genus
of the closure of any positive braid is crossings - strings + 1.

The Birman-Williams minimal braid of the knot lives on t strands, t the
trip number, and is the full twist followed by blocks of ascending and
descending generator runs; its letter count is the crossing number of the
knot.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .words import InvalidWordError, Word


class NotAKnotError(ValueError):
    """A multi-cycle permutation was supplied where a knot was required."""


@dataclass(frozen=True, slots=True)
class LorenzPermutation:
    """Permutation of a simple Lorenz braid; targets[i-1] = pi(i), 1-based."""

    targets: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        n = len(self.targets)
        if not 1 <= self.p < n:
            raise ValueError(f"p={self.p} must lie in 1..{n - 1}")
        if sorted(self.targets) != list(range(1, n + 1)):
            raise ValueError("targets is not a permutation of 1..n")
        for i in range(2, n + 1):
            if i != self.p + 1 and self.targets[i - 1] <= self.targets[i - 2]:
                raise ValueError(
                    f"strings {i - 1} and {i} cross inside their own block")
        for i in range(1, self.p + 1):
            if self.targets[i - 1] <= i:
                raise ValueError(f"L point {i} must move right, maps to {self.targets[i - 1]}")
        for i in range(self.p + 1, n + 1):
            if self.targets[i - 1] >= i:
                raise ValueError(f"R point {i} must move left, maps to {self.targets[i - 1]}")

    @property
    def n(self) -> int:
        return len(self.targets)

    @property
    def q(self) -> int:
        return self.n - self.p

    def __call__(self, i: int) -> int:
        return self.targets[i - 1]

    def to_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "map": list(self.targets)}

    @classmethod
    def from_dict(cls, data: dict) -> LorenzPermutation:
        perm = cls(tuple(data["map"]), data["p"])
        if perm.n != data["n"]:
            raise ValueError(f"inconsistent n={data['n']} for map of length {perm.n}")
        return perm


@dataclass(frozen=True, slots=True)
class GeneratorBraidWord:
    """A positive braid word: generator indices 1..t-1 on t strands."""

    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.strand_count < 1:
            raise ValueError(f"strand count must be positive, got {self.strand_count}")
        for letter in self.letters:
            if not 1 <= letter <= self.strand_count - 1:
                raise ValueError(
                    f"generator {letter} out of range 1..{self.strand_count - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    def to_dict(self) -> dict:
        return {"t": self.strand_count, "letters": list(self.letters)}


@lru_cache(maxsize=None)
def word_to_braid(word: Word) -> LorenzPermutation:
    """The Lorenz permutation of an aperiodic word.

    Position i holds the i-th smallest rotation; pi(i) is the position of
    that rotation's left shift.
    """
    word._require_aperiodic()
    s = word.symbols
    n = len(s)
    offsets = sorted(range(n), key=lambda m: s[m:] + s[:m])
    position = {m: i for i, m in enumerate(offsets, start=1)}
    targets = tuple(position[(m + 1) % n] for m in offsets)
    return LorenzPermutation(targets, word.n_l)


def braid_to_word(perm: LorenzPermutation) -> Word:
    """Word of the knot a single-cycle Lorenz permutation closes to.

    Walks the cycle from point 1 recording L for points in 1..p and R
    beyond; the result is some rotation in the original word's orbit.
    """
    if not is_knot(perm):
        raise NotAKnotError(
            f"permutation has {len(cycle_structure(perm))} cycles, not a knot")
    out = []
    cur = 1
    for _ in range(perm.n):
        out.append("L" if cur <= perm.p else "R")
        cur = perm(cur)
    return Word("".join(out))


def crossing_count(perm: LorenzPermutation) -> int:
    """Crossings of the braid = inversions of pi, counted by merge sort."""
    _, inversions = _merge_count(list(perm.targets))
    return inversions


def _merge_count(seq: list[int]) -> tuple[list[int], int]:
    if len(seq) <= 1:
        return seq, 0
    mid = len(seq) // 2
    left, a = _merge_count(seq[:mid])
    right, b = _merge_count(seq[mid:])
    merged: list[int] = []
    inv = a + b
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            inv += len(left) - i
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, inv


def doubled_genus(crossings: int, strings: int) -> int:
    """2g = crossings - strings + 1 for the closure of a positive braid knot."""
    value = crossings - strings + 1
    if value < 0:
        raise ValueError(
            f"crossings={crossings}, strings={strings} give negative doubled genus")
    return value


def _targets_of(perm: LorenzPermutation | Sequence[int]) -> tuple[int, ...]:
    if isinstance(perm, LorenzPermutation):
        return perm.targets
    return tuple(perm)


def cycle_structure(perm: LorenzPermutation | Sequence[int]) -> tuple[int, ...]:
    """Cycle lengths in decreasing order; raw 1-based target lists also accepted."""
    targets = _targets_of(perm)
    n = len(targets)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        size = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = targets[cur - 1]
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


def is_knot(perm: LorenzPermutation | Sequence[int]) -> bool:
    """True when the closure has a single component."""
    return len(cycle_structure(perm)) == 1


def minimal_braid_exponents(
    perm: LorenzPermutation, t: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exponent vectors (n_1..n_{t-1}, m_1..m_{t-1}) of the minimal t-braid.

    n_i counts points j with pi(j) - j = i + 1 whose image keeps moving
    right (pi(j) < pi^2(j)); m_i counts points with j - pi(j) = i + 1 whose
    image turns back (pi(j) > pi^2(j)).
    """
    if not is_knot(perm):
        raise NotAKnotError("minimal braid exponents are defined here for knots only")
    if t < 1:
        raise ValueError(f"strand count t must be positive, got {t}")
    n_vec = [0] * (t - 1)
    m_vec = [0] * (t - 1)
    for j in range(1, perm.n + 1):
        pj = perm(j)
        ppj = perm(pj)
        if pj > j and pj < ppj:
            i = pj - j - 1
            if 1 <= i <= t - 1:
                n_vec[i - 1] += 1
        elif pj < j and pj > ppj:
            i = j - pj - 1
            if 1 <= i <= t - 1:
                m_vec[i - 1] += 1
    return tuple(n_vec), tuple(m_vec)


def full_twist(t: int) -> tuple[int, ...]:
    """The full twist on t strands as an explicit positive word of t(t-1) letters.

    Written as the half twist (1)(2 1)(3 2 1)...(t-1 ... 1) twice; any
    positive word for the full twist would do, but the letter count feeds
    the crossing-number bookkeeping, so it is spelled out.
    """
    half = [i for k in range(1, t) for i in range(k, 0, -1)]
    return tuple(half + half)


def minimal_braid(perm: LorenzPermutation, t: int) -> GeneratorBraidWord:
    """The Birman-Williams minimal braid on t strands.

    Full twist, then (1 .. i)^{n_i} for i ascending, then (t-1 .. i)^{m_{t-i}}
    for i descending; the letter count is the crossing number of the knot.
    """
    n_vec, m_vec = minimal_braid_exponents(perm, t)
    letters = list(full_twist(t))
    for i in range(1, t):
        letters.extend(list(range(1, i + 1)) * n_vec[i - 1])
    for i in range(t - 1, 0, -1):
        letters.extend(list(range(t - 1, i - 1, -1)) * m_vec[t - i - 1])
    return GeneratorBraidWord(t, tuple(letters))
