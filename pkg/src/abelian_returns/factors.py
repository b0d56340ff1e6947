"""Occurrence scanning, factor sets, Parikh vectors and complexity counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import NamedTuple

import numpy as np

from .errors import EmptyFactor, LengthExceedsPrefix
from .words import FiniteWord, as_word

RELIABLE_DIVISOR = 4


@total_ordering
@dataclass(frozen=True)
class ParikhVector:
    """Letter counts of a word; the canonical key of its abelian class.

    Keys sort by length first and then lexicographically on the counts.
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("letter counts must be non-negative")

    @property
    def length(self) -> int:
        return sum(self.counts)

    @property
    def alphabet_size(self) -> int:
        return len(self.counts)

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        return ParikhVector(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __lt__(self, other: "ParikhVector") -> bool:
        return (self.length, self.counts) < (other.length, other.counts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.counts)) + ")"

    def complement(self) -> "ParikhVector":
        return ParikhVector(self.counts[::-1])


# Two words share a key exactly when they are abelian equivalent.
AbelianClassKey = ParikhVector


class Complexity(NamedTuple):
    value: int
    reliable: bool


class OccurrenceList:
    """Strictly increasing start positions of a pattern inside a prefix."""

    __slots__ = ("positions", "pattern_length")

    def __init__(self, positions: np.ndarray, pattern_length: int):
        self.positions = np.asarray(positions, dtype=np.int64)
        self.pattern_length = pattern_length

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions.tolist())

    def __getitem__(self, i):
        return self.positions[i]

    def tolist(self) -> list[int]:
        return self.positions.tolist()

    def __repr__(self) -> str:
        head = self.positions[:8].tolist()
        more = ", ..." if len(self) > 8 else ""
        return f"OccurrenceList({head}{more}, pattern_length={self.pattern_length})"


def reliable_bound(length: int, divisor: int = RELIABLE_DIVISOR) -> int:
    """Largest factor length whose statistics we trust on a prefix of ``length``."""
    return length // divisor


def parikh(u) -> ParikhVector:
    u = as_word(u)
    return ParikhVector(tuple(u.count(a) for a in range(u.alphabet_size)))


def key_of(u, alphabet_size: int | None = None) -> ParikhVector:
    """Abelian class key of a word, or pass a key through unchanged."""
    if isinstance(u, ParikhVector):
        return u
    return parikh(as_word(u, alphabet_size))


def window_counts(p, length: int) -> np.ndarray:
    """Letter counts of every length-``length`` window, one row per start position."""
    w = as_word(p)
    if length > len(w):
        return np.zeros((0, w.alphabet_size), dtype=np.int64)
    cc = w.cumulative_counts
    return cc[length:] - cc[: len(w) - length + 1]


def occurrences(p, u) -> OccurrenceList:
    """Every (possibly overlapping) occurrence of ``u`` inside ``p``."""
    w, u = as_word(p), as_word(u)
    m = len(u)
    if m == 0:
        raise EmptyFactor("cannot locate the empty word")
    span = len(w) - m + 1
    if span <= 0:
        return OccurrenceList(np.zeros(0, dtype=np.int64), m)
    arr = w.array
    hit = arr[:span] == u[0]
    for k in range(1, m):
        hit &= arr[k : k + span] == u[k]
    return OccurrenceList(np.flatnonzero(hit), m)


def abelian_occurrences(p, key) -> OccurrenceList:
    """Start positions of every window of ``p`` abelian equivalent to ``key``.

    Window counts come from differences of cumulative letter counts, so each
    shift costs O(1) per letter.
    """
    w = as_word(p)
    key = key_of(key, w.alphabet_size)
    m = key.length
    if m == 0:
        raise EmptyFactor("the empty class has no occurrences to scan")
    k = w.alphabet_size
    if any(key.counts[k:]):
        return OccurrenceList(np.zeros(0, dtype=np.int64), m)
    target = np.zeros(k, dtype=np.int64)
    target[: min(k, len(key.counts))] = key.counts[:k]
    hit = np.all(window_counts(w, m) == target, axis=1)
    return OccurrenceList(np.flatnonzero(hit), m)


def _check_length(w: FiniteWord, n: int):
    if n < 0 or n > len(w):
        raise LengthExceedsPrefix(f"factor length {n} exceeds prefix length {len(w)}")


def distinct_factors(p, n: int) -> set[FiniteWord]:
    w = as_word(p)
    _check_length(w, n)
    s, k = w.symbols, w.alphabet_size
    return {FiniteWord(b, k) for b in {s[i : i + n] for i in range(len(s) - n + 1)}}


def abelian_classes(p, n: int) -> list[ParikhVector]:
    """Sorted keys of the length-``n`` abelian classes realized in ``p``."""
    w = as_word(p)
    _check_length(w, n)
    rows = np.unique(window_counts(w, n), axis=0)
    return sorted(ParikhVector(tuple(r)) for r in rows.tolist())


def factors_by_class(p, n: int) -> dict[ParikhVector, set[FiniteWord]]:
    out: dict[ParikhVector, set[FiniteWord]] = {}
    for f in distinct_factors(p, n):
        out.setdefault(parikh(f), set()).add(f)
    return out


def factor_complexity(p, n: int, bound: int | None = None) -> Complexity:
    w = as_word(p)
    bound = reliable_bound(len(w)) if bound is None else bound
    return Complexity(len(distinct_factors(w, n)), n <= bound)


def abelian_complexity(p, n: int, bound: int | None = None) -> Complexity:
    w = as_word(p)
    bound = reliable_bound(len(w)) if bound is None else bound
    return Complexity(len(abelian_classes(w, n)), n <= bound)
