"""Finite aperiodic words over the alphabet {L, R}.

A periodic orbit on the Lorenz template is encoded by a finite aperiodic
word w = X_0 ... X_{n-1}: the itinerary of the orbit through the left and
right ears, read once around.  All operations treat words cyclically; the
shift map s rotates one symbol to the left, and the n rotations of w form
its orbit.

Rotations are ordered lexicographically with L < R.  Every aperiodic word
has a unique L-maximal rotation (it starts with L and dominates every
other L-started rotation) and a unique R-minimal rotation (starts with R,
smallest among R-started rotations); these serve as canonical orbit
representatives.  A word is displayed as its raw symbol string, uppercase,
no separators.
"""

from __future__ import annotations

from dataclasses import dataclass

# Guard against accidentally huge inputs; every interesting orbit is tiny.
MAX_LENGTH = 1_000_000


class InvalidWordError(ValueError):
    """Malformed word text, or a periodic word where aperiodicity is required."""


@dataclass(frozen=True, slots=True)
class Word:
    """An immutable word over {L, R} containing at least one of each symbol."""

    symbols: str

    def __post_init__(self) -> None:
        s = self.symbols
        if len(s) > MAX_LENGTH:
            raise InvalidWordError(
                f"word length {len(s)} exceeds the configured cap {MAX_LENGTH}")
        if len(s) < 2:
            raise InvalidWordError("a word needs at least 2 symbols")
        for pos, ch in enumerate(s, start=1):
            if ch not in "LR":
                raise InvalidWordError(f"invalid character {ch!r} at position {pos}")
        if "L" not in s or "R" not in s:
            raise InvalidWordError("a word must contain both L and R")

    @classmethod
    def parse(cls, text: str) -> Word:
        """Build a word from user text; lowercase is accepted, anything else rejected."""
        out = []
        for pos, ch in enumerate(text, start=1):
            up = ch.upper()
            if up not in "LR":
                raise InvalidWordError(f"invalid character {ch!r} at position {pos}")
            out.append(up)
        return cls("".join(out))

    def __str__(self) -> str:
        return self.symbols

    def __len__(self) -> int:
        return len(self.symbols)

    def __lt__(self, other: Word) -> bool:
        return compare(self, other) < 0

    def __le__(self, other: Word) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: Word) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: Word) -> bool:
        return compare(self, other) >= 0

    @property
    def n_l(self) -> int:
        return self.symbols.count("L")

    @property
    def n_r(self) -> int:
        return self.symbols.count("R")

    def shift(self, j: int = 1) -> Word:
        """Rotate j symbols to the left; negative j rotates right, shift(n) is the identity."""
        k = j % len(self.symbols)
        s = self.symbols
        return Word(s[k:] + s[:k])

    def orbit(self) -> tuple[Word, ...]:
        """All cyclic rotations, starting with the word itself."""
        return tuple(self.shift(j) for j in range(len(self)))

    def is_aperiodic(self) -> bool:
        """True unless the word is a proper power of a shorter word."""
        s = self.symbols
        n = len(s)
        for d in range(1, n):
            if n % d == 0 and s == s[:d] * (n // d):
                return False
        return True

    def _rotation(self, m: int) -> str:
        s = self.symbols
        return s[m:] + s[:m]

    def _require_aperiodic(self) -> None:
        if not self.is_aperiodic():
            raise InvalidWordError(f"word {self.symbols} is periodic")

    def l_maximal(self) -> tuple[Word, int]:
        """The L-maximal rotation together with the offset m at which it occurs."""
        self._require_aperiodic()
        s = self.symbols
        best = max((m for m in range(len(s)) if s[m] == "L"), key=self._rotation)
        return Word(self._rotation(best)), best

    def r_minimal(self) -> tuple[Word, int]:
        """The R-minimal rotation together with the offset m at which it occurs."""
        self._require_aperiodic()
        s = self.symbols
        best = min((m for m in range(len(s)) if s[m] == "R"), key=self._rotation)
        return Word(self._rotation(best)), best

    def sorted_orbit(self) -> SortedOrbit:
        """The orbit split by leading symbol, each part sorted increasingly."""
        self._require_aperiodic()
        s = self.symbols
        offsets = sorted(range(len(s)), key=self._rotation)
        l_words: list[Word] = []
        r_words: list[Word] = []
        index: dict[Word, int] = {}
        for m in offsets:
            w = Word(self._rotation(m))
            (l_words if s[m] == "L" else r_words).append(w)
            index[w] = m
        return SortedOrbit(tuple(l_words), tuple(r_words), index)

    def trip_number(self) -> int:
        """Number of maximal L^a R^b syllables, read cyclically.

        Equals the number of cyclic L runs, and equals the braid index of
        the Lorenz knot the word encodes.
        """
        self._require_aperiodic()
        s = self.symbols
        return sum(1 for i in range(len(s)) if s[i] == "L" and s[i - 1] == "R")

    def syllables(self) -> tuple[tuple[int, int], ...]:
        """Cyclic run decomposition into (L run, R run) pairs.

        The decomposition is anchored at the L-maximal rotation: the first
        pair is the syllable containing that rotation's first symbol.  When
        the L-maximal rotation ends in R (true for every word free of LL
        blocks), concatenating L^a R^b over the pairs reproduces it exactly;
        otherwise the concatenation is the rotation moved back to the start
        of its leading L run.
        """
        lmax, _ = self.l_maximal()
        s = lmax.symbols
        stripped = s.rstrip("L")
        tail = len(s) - len(stripped)
        if tail:
            s = s[-tail:] + stripped
        out: list[tuple[int, int]] = []
        i = 0
        n = len(s)
        while i < n:
            a = 0
            while i < n and s[i] == "L":
                a += 1
                i += 1
            b = 0
            while i < n and s[i] == "R":
                b += 1
                i += 1
            out.append((a, b))
        return tuple(out)


@dataclass(frozen=True, slots=True)
class SortedOrbit:
    """The rotations of an aperiodic word, labelled the way pattern maps need them.

    l_words holds the L-started rotations in increasing lexicographic order
    and r_words the R-started ones; shift_index maps each rotation back to
    its offset from the base word.  Do not mutate shift_index.
    """

    l_words: tuple[Word, ...]
    r_words: tuple[Word, ...]
    shift_index: dict[Word, int]


def compare(u: Word, v: Word) -> int:
    """Three-way lexicographic comparison with L < R: -1, 0 or +1.

    Words of different lengths compare by their first differing symbol.  If
    one word is a proper prefix of the other the comparison is undefined
    here (resolving it would need the terminated-itinerary convention) and
    raises InvalidWordError; this never happens within a single orbit.
    """
    a, b = u.symbols, v.symbols
    if a == b:
        return 0
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    raise InvalidWordError(
        f"cannot compare {a} with {b}: one is a proper prefix of the other")
