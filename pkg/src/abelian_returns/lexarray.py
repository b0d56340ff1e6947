"""Lexicographic arrays of binary cyclic words with coprime ``(p, q)``.

The array of a word of length ``q`` with ``p`` ones is the ``q x q`` matrix of
its cyclic shifts in increasing lexicographic order. For the balanced orbit the
array can also be written down column by column, and the abelian returns of a
class can be read from it without scanning any text.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ClassAbsent, InvalidSpec, NotBalanced, NotCoprime, NotPrimitive
from .factors import ParikhVector, key_of
from .words import FiniteWord, as_word


@dataclass(frozen=True)
class LexArray:
    p: int
    q: int
    rows: tuple[FiniteWord, ...]

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.array([list(r.symbols) for r in self.rows], dtype=np.uint8).reshape(
            self.q, self.q
        )

    @cached_property
    def prefix_ones(self) -> np.ndarray:
        """``prefix_ones[i, j]`` is the number of 1s in the length-``j+1`` prefix of row ``i``."""
        return np.cumsum(self.matrix, axis=1, dtype=np.int64)

    @property
    def representative(self) -> FiniteWord:
        return self.rows[0]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return int(self.matrix[i % self.q, j % self.q])

    def row_prefix(self, i: int, j: int) -> FiniteWord:
        """The length-``j+1`` prefix of row ``i``."""
        return self.rows[i % self.q][: j + 1]

    def render(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def _orbit_parameters(w: FiniteWord) -> tuple[int, int]:
    if w.alphabet_size != 2 or (w.symbols and max(w.symbols) > 1):
        raise InvalidSpec("lexicographic arrays are defined for binary words")
    q = len(w)
    if q == 0:
        raise InvalidSpec("the empty word has no orbit")
    return w.count(1), q


def build_lex_array(w) -> LexArray:
    """Sort the cyclic shifts of ``w``."""
    w = as_word(w)
    p, q = _orbit_parameters(w)
    shifts = {w.rotate(k) for k in range(q)}
    if len(shifts) != q:
        raise NotPrimitive(f"{w} is a proper power; its shifts are not distinct")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    return LexArray(p, q, tuple(sorted(shifts)))


def balanced_array_by_columns(p: int, q: int) -> LexArray:
    """Array of the balanced orbit with ``p`` ones, built without sorting.

    Column ``j`` is the word ``0^(q-p) 1^p`` shifted left by ``j * p``.
    """
    if not 0 < p < q:
        raise InvalidSpec("need 0 < p < q")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    u = np.r_[np.zeros(q - p, dtype=np.uint8), np.ones(p, dtype=np.uint8)]
    idx = (np.arange(q)[:, None] + p * np.arange(q)[None, :]) % q
    mat = u[idx]
    return LexArray(p, q, tuple(FiniteWord(row.tobytes(), 2) for row in mat))


def is_balanced_orbit(a: LexArray) -> bool:
    """Ones-counts of same-length row prefixes never decrease down the array."""
    if a.q < 2:
        return True
    ones = a.prefix_ones
    return bool(np.all(ones[:-1] <= ones[1:]))


def shift_links(a: LexArray) -> bool:
    """Whether ``A[i][m] == A[i + q - p][m + 1]`` holds for every cell."""
    m = a.matrix
    rolled = np.roll(np.roll(m, -(a.q - a.p), axis=0), -1, axis=1)
    return bool(np.array_equal(m, rolled))


def abelian_returns_via_array(a: LexArray, key) -> set[ParikhVector]:
    """Abelian returns of a class in the periodic word ``(row_0)^omega``.

    The class is normalized to be the one poorer in 1s (by complementing the
    orbit if necessary). Its occurrences are then exactly a top block of rows
    ``0..n``; shifting a row by one position moves ``p`` rows down, so the
    return starting at row ``i`` has the length of the first ``k > 0`` with
    ``(i + k p) mod q`` back inside the block.
    """
    if not is_balanced_orbit(a):
        raise NotBalanced("returns can only be read from the array of a balanced orbit")
    key = key_of(key)
    L = key.length
    if not 0 < L < a.q:
        raise ClassAbsent(f"class length must be in 1..{a.q - 1}")
    ones = key.counts[1] if len(key.counts) > 1 else 0
    if len(key.counts) > 2 and any(key.counts[2:]):
        raise ClassAbsent(f"{key} uses letters outside the binary alphabet")

    richer = a.prefix_ones[:, L - 1]
    if ones == richer.max() and ones > richer.min():
        flipped = _complement_array(a)
        found = abelian_returns_via_array(flipped, ParikhVector((ones, L - ones)))
        return {k.complement() for k in found}

    block = np.flatnonzero(richer == ones)
    if len(block) == 0:
        raise ClassAbsent(f"{key} is not realized by any row prefix")
    # rows whose length-L prefix is in the class form the block 0..n
    n = int(block[-1])
    if not np.array_equal(block, np.arange(n + 1)):
        raise NotBalanced("class rows are not a top block of the array")

    found = set()
    for i in range(n + 1):
        k = 1
        while (i + k * a.p) % a.q > n:
            k += 1
        found.add(ParikhVector((k - int(a.prefix_ones[i, k - 1]), int(a.prefix_ones[i, k - 1]))))
    return found


def _complement_array(a: LexArray) -> LexArray:
    # complementing reverses the lexicographic order of the rows
    rows = tuple(r.complement() for r in reversed(a.rows))
    return LexArray(a.q - a.p, a.q, rows)
