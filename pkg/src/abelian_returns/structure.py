"""Structural predicates on prefixes: balance, special and singular factors,
Christoffel words, and block lengths of letters."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import LengthExceedsPrefix, LetterAbsent
from .factors import ParikhVector, factors_by_class, reliable_bound, window_counts
from .words import FiniteWord, as_word


class SpecialKind(str, enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    BISPECIAL = "bispecial"


class BalanceResult(NamedTuple):
    balanced: bool
    witness: tuple[FiniteWord, FiniteWord] | None = None

    def __bool__(self) -> bool:
        return self.balanced


@dataclass(frozen=True)
class BlockProfile:
    letter: int
    block_lengths: frozenset[int]

    @property
    def isolated(self) -> bool:
        return self.block_lengths <= {1}


def is_k_balanced(p, k: int = 1, max_len: int | None = None) -> BalanceResult:
    """Check ``||u|_a - |v|_a| <= k`` over all windows of length up to ``max_len``.

    On failure the witness ``(u, v)`` is the first offending pair found, with
    ``u`` holding more copies of the letter than ``v``. Letters are examined
    from the highest down.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    w = as_word(p)
    max_len = len(w) if max_len is None else min(max_len, len(w))
    for n in range(1, max_len + 1):
        counts = window_counts(w, n)
        hi, lo = counts.max(axis=0), counts.min(axis=0)
        for a in reversed(range(w.alphabet_size)):
            if hi[a] - lo[a] > k:
                i = int(np.argmax(counts[:, a]))
                j = int(np.argmin(counts[:, a]))
                return BalanceResult(False, (w[i : i + n], w[j : j + n]))
    return BalanceResult(True)


def _extensions(w: FiniteWord, n: int, right: bool) -> dict[bytes, set[int]]:
    s = w.symbols
    ext: dict[bytes, set[int]] = {}
    for i in range(len(s) - n):
        if right:
            ext.setdefault(s[i : i + n], set()).add(s[i + n])
        else:
            ext.setdefault(s[i + 1 : i + n + 1], set()).add(s[i])
    return ext


def special_factors(p, n: int, kind=SpecialKind.RIGHT, bound: int | None = None) -> set[FiniteWord]:
    """Length-``n`` factors with at least two extensions inside the prefix.

    Only windows of length ``n + 1`` are inspected, so a factor occurring
    solely at the very end (where its extension is cut off) is ignored.
    """
    w = as_word(p)
    kind = SpecialKind(kind)
    bound = reliable_bound(len(w)) if bound is None else bound
    if n < 0 or n + 1 > bound:
        raise LengthExceedsPrefix(f"length {n} + 1 exceeds the reliable bound {bound}")

    def pick(right: bool) -> set[bytes]:
        return {f for f, e in _extensions(w, n, right).items() if len(e) >= 2}

    if kind is SpecialKind.RIGHT:
        found = pick(True)
    elif kind is SpecialKind.LEFT:
        found = pick(False)
    else:
        found = pick(True) & pick(False)
    return {FiniteWord(f, w.alphabet_size) for f in found}


def singular_classes(p, n: int, bound: int | None = None) -> set[ParikhVector]:
    """Classes of length ``n`` that contain exactly one factor of the prefix."""
    w = as_word(p)
    bound = reliable_bound(len(w)) if bound is None else bound
    if n > bound:
        raise LengthExceedsPrefix(f"length {n} exceeds the reliable bound {bound}")
    return {key for key, members in factors_by_class(w, n).items() if len(members) == 1}


def lower_christoffel(p: int, q: int) -> FiniteWord:
    """Lower Christoffel word of length ``q`` with ``p`` ones (digital line below ``y = px/q``)."""
    return FiniteWord(bytes(((i + 1) * p) // q - (i * p) // q for i in range(q)), 2)


def is_christoffel(u) -> bool:
    """A letter, or a lower or upper Christoffel word; i.e. ``aBb`` with ``B`` central."""
    u = as_word(u)
    q = len(u)
    if q == 0 or (u.symbols and max(u.symbols) > 1):
        return False
    if q == 1:
        return True
    p = u.count(1)
    if math.gcd(p, q) != 1:
        return False
    lower = lower_christoffel(p, q)
    return u == lower or u == lower.reversed()


def block_profile(p, letter: int) -> BlockProfile:
    """Lengths of maximal runs of ``letter``; runs touching either end are skipped."""
    w = as_word(p)
    s = w.symbols
    if bytes([letter]) not in s:
        raise LetterAbsent(f"letter {letter} does not occur")
    lengths = set()
    i, n = 0, len(s)
    while i < n:
        if s[i] != letter:
            i += 1
            continue
        j = i
        while j < n and s[j] == letter:
            j += 1
        if i > 0 and j < n:
            lengths.add(j - i)
        i = j
    return BlockProfile(letter, frozenset(lengths))


def is_cyclically_balanced(w, k: int = 1) -> BalanceResult:
    """Balance of the periodic word ``w^omega``, checked on ``ww``."""
    w = as_word(w)
    return is_k_balanced(w * 2, k, len(w))
