"""Finite words and deterministic generators for the infinite words we study.

An infinite word is never materialized; it is described by a *spec* (a small
frozen dataclass) and any finite prefix can be regenerated from it on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, total_ordering
from itertools import cycle, islice
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import DirectiveTooShort, InvalidSlope, InvalidSpec, NotProlongable

DIGITS = "0123456789abcdef"
MAX_ALPHABET = len(DIGITS)


@total_ordering
@dataclass(frozen=True, eq=True)
class FiniteWord:
    """Immutable word over the alphabet ``{0, ..., alphabet_size - 1}``.

    Symbols are stored one per byte. Comparison is lexicographic on the
    symbol sequence.
    """

    symbols: bytes
    alphabet_size: int = 2

    def __post_init__(self):
        if not isinstance(self.symbols, bytes):
            object.__setattr__(self, "symbols", bytes(self.symbols))
        if not 1 <= self.alphabet_size <= MAX_ALPHABET:
            raise InvalidSpec(f"alphabet size must be in 1..{MAX_ALPHABET}")
        if self.symbols and max(self.symbols) >= self.alphabet_size:
            raise InvalidSpec(
                f"symbol {max(self.symbols)} outside alphabet of size {self.alphabet_size}"
            )

    @classmethod
    def from_str(cls, text: str, alphabet_size: int | None = None) -> "FiniteWord":
        try:
            syms = bytes(DIGITS.index(ch) for ch in text.strip().lower())
        except ValueError:
            raise InvalidSpec(f"not a digit word: {text!r}") from None
        if alphabet_size is None:
            alphabet_size = max(2, max(syms) + 1) if syms else 2
        return cls(syms, alphabet_size)

    def __str__(self) -> str:
        return "".join(DIGITS[s] for s in self.symbols)

    def __repr__(self) -> str:
        return f"FiniteWord({str(self)!r})"

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return FiniteWord(self.symbols[item], self.alphabet_size)
        return self.symbols[item]

    def __add__(self, other: "FiniteWord") -> "FiniteWord":
        return FiniteWord(
            self.symbols + other.symbols, max(self.alphabet_size, other.alphabet_size)
        )

    def __mul__(self, power: int) -> "FiniteWord":
        return FiniteWord(self.symbols * power, self.alphabet_size)

    def __lt__(self, other: "FiniteWord") -> bool:
        return self.symbols < other.symbols

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.frombuffer(self.symbols, dtype=np.uint8)
        return arr

    @cached_property
    def cumulative_counts(self) -> np.ndarray:
        """``(len + 1, alphabet_size)`` table of letter counts in each prefix."""
        table = np.zeros((len(self) + 1, self.alphabet_size), dtype=np.int64)
        if len(self):
            onehot = self.array[:, None] == np.arange(self.alphabet_size, dtype=np.uint8)
            np.cumsum(onehot, axis=0, out=table[1:])
        return table

    def count(self, letter: int) -> int:
        return self.symbols.count(bytes([letter]))

    def reversed(self) -> "FiniteWord":
        return FiniteWord(self.symbols[::-1], self.alphabet_size)

    def complement(self) -> "FiniteWord":
        """Swap 0 and 1 in a binary word."""
        if self.alphabet_size != 2:
            raise InvalidSpec("complement is defined for binary words only")
        return FiniteWord(self.symbols.translate(bytes([1, 0]) + bytes(254)), 2)

    def rotate(self, k: int) -> "FiniteWord":
        if not self.symbols:
            return self
        k %= len(self)
        return FiniteWord(self.symbols[k:] + self.symbols[:k], self.alphabet_size)

    def is_prefix_of(self, other: "FiniteWord") -> bool:
        return other.symbols.startswith(self.symbols)


WordLike = Union[FiniteWord, str]


def as_word(value, alphabet_size: int | None = None) -> FiniteWord:
    """Coerce a ``str``, :class:`FiniteWord` or :class:`Prefix` to a word."""
    if isinstance(value, FiniteWord):
        return value
    if isinstance(value, Prefix):
        return value.word
    if isinstance(value, str):
        return FiniteWord.from_str(value, alphabet_size)
    raise TypeError(f"cannot interpret {type(value).__name__} as a word")


@dataclass(frozen=True)
class Morphism:
    images: tuple[FiniteWord, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(as_word(w) for w in self.images))
        size = len(self.images)
        for img in self.images:
            if img.symbols and max(img.symbols) >= size:
                raise InvalidSpec("morphism image uses a letter outside its domain")

    @classmethod
    def from_strings(cls, *images: str) -> "Morphism":
        n = len(images)
        return cls(tuple(FiniteWord.from_str(s, max(n, 2)) for s in images))

    @property
    def alphabet_size(self) -> int:
        return max(len(self.images), 2)

    def __call__(self, w: FiniteWord) -> FiniteWord:
        table = [img.symbols for img in self.images]
        return FiniteWord(b"".join(map(table.__getitem__, w.symbols)), self.alphabet_size)

    def is_prolongable(self, seed: int) -> bool:
        if not 0 <= seed < len(self.images):
            return False
        img = self.images[seed]
        return len(img) >= 2 and img[0] == seed


# -- word specs ---------------------------------------------------------------


@dataclass(frozen=True)
class Morphic:
    morphism: Morphism
    seed: int = 0

    @property
    def alphabet_size(self) -> int:
        return self.morphism.alphabet_size

    def validate(self):
        if not self.morphism.is_prolongable(self.seed):
            raise NotProlongable(f"morphism is not prolongable at letter {self.seed}")


@dataclass(frozen=True)
class Mechanical:
    """Lower mechanical word of rational slope ``p/q`` and intercept ``rho_num/rho_den``."""

    p: int
    q: int
    rho_num: int = 0
    rho_den: int = 1

    alphabet_size = 2

    def validate(self):
        if self.q < 1 or not 0 <= self.p <= self.q:
            raise InvalidSlope(f"slope {self.p}/{self.q} not in [0, 1]")
        if self.rho_den < 1 or not 0 <= self.rho_num < self.rho_den:
            raise InvalidSlope(f"intercept {self.rho_num}/{self.rho_den} not in [0, 1)")


@dataclass(frozen=True)
class Directive:
    """Characteristic Sturmian word of the continued fraction ``[0; a1, a2, ...]``.

    With ``repeat=True`` the coefficient list is cycled forever, which is how
    quadratic slopes such as ``[0; 1, 2, 1, 2, ...]`` are written.
    """

    coefficients: tuple[int, ...]
    repeat: bool = False

    alphabet_size = 2

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(a) for a in self.coefficients))

    def validate(self):
        if any(a < 1 for a in self.coefficients):
            raise InvalidSpec("directive coefficients must be positive")
        if self.repeat and not self.coefficients:
            raise InvalidSpec("a repeating directive needs at least one coefficient")


@dataclass(frozen=True)
class Periodic:
    pattern: FiniteWord

    def __post_init__(self):
        object.__setattr__(self, "pattern", as_word(self.pattern))

    @property
    def alphabet_size(self) -> int:
        return self.pattern.alphabet_size

    def validate(self):
        if not len(self.pattern):
            raise InvalidSpec("periodic pattern must be nonempty")


@dataclass(frozen=True)
class BlockChoice:
    """Concatenate ``blocks[s]`` for each successive symbol ``s`` of ``selector``."""

    blocks: tuple[FiniteWord, ...]
    selector: "WordSpec"

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(as_word(b) for b in self.blocks))

    @property
    def alphabet_size(self) -> int:
        return max(b.alphabet_size for b in self.blocks)

    def validate(self):
        if not self.blocks or any(len(b) == 0 for b in self.blocks):
            raise InvalidSpec("blocks must be nonempty words")
        validate_spec(self.selector)
        if len(self.blocks) > 1 and self.selector.alphabet_size != len(self.blocks):
            raise InvalidSpec(
                f"selector alphabet has {self.selector.alphabet_size} letters "
                f"but {len(self.blocks)} blocks were given"
            )


WordSpec = Union[Morphic, Mechanical, Directive, Periodic, BlockChoice]


@dataclass(frozen=True)
class Prefix:
    """A finite window onto the infinite word denoted by ``spec``."""

    word: FiniteWord
    spec: WordSpec | None = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @classmethod
    def of(cls, spec: WordSpec, n: int) -> "Prefix":
        return cls(generate_prefix(spec, n), spec)


FIBONACCI = Morphic(Morphism.from_strings("01", "0"), 0)
THUE_MORSE = Morphic(Morphism.from_strings("01", "10"), 0)


def validate_spec(spec: WordSpec) -> None:
    if not hasattr(spec, "validate"):
        raise InvalidSpec(f"unknown spec kind {type(spec).__name__}")
    spec.validate()


# -- generators ---------------------------------------------------------------


def morphic_fixed_point(m: Morphism, seed: int, n: int) -> FiniteWord:
    """Length-``n`` prefix of the fixed point of ``m`` starting with ``seed``."""
    if not m.is_prolongable(seed):
        raise NotProlongable(f"morphism is not prolongable at letter {seed}")
    w = FiniteWord(bytes([seed]), m.alphabet_size)
    while len(w) < n:
        nxt = m(w)
        if len(nxt) <= len(w):
            raise InvalidSpec("fixed point is finite; the morphism stops growing")
        w = nxt
    return w[:n]


def mechanical_word(p: int, q: int, rho_num: int, rho_den: int, n: int) -> FiniteWord:
    """``floor((k+1)p/q + rho) - floor(kp/q + rho)`` for ``k < n``, in exact arithmetic."""
    Mechanical(p, q, rho_num, rho_den).validate()
    k = np.arange(n + 1, dtype=np.int64)
    levels = (k * p * rho_den + rho_num * q) // (q * rho_den)
    return FiniteWord(np.diff(levels).astype(np.uint8).tobytes(), 2)


def standard_word_from_directive(
    coefficients: Sequence[int] | Iterable[int], n: int
) -> FiniteWord:
    """Prefix of the standard sequence ``s_k = s_{k-1}^{a_k} s_{k-2}``, ``s_{-1}=1, s_0=0``."""
    if n <= 1:
        return FiniteWord(b"\x00"[:n], 2)
    older, old = b"\x01", b"\x00"
    for a in coefficients:
        if a < 1:
            raise InvalidSpec("directive coefficients must be positive")
        older, old = old, old * a + older
        if len(old) >= n:
            return FiniteWord(old[:n], 2)
    raise DirectiveTooShort(f"coefficients exhausted before reaching length {n}")


def block_choice_word(blocks: Sequence[FiniteWord], selector: WordSpec, n: int) -> FiniteWord:
    spec = BlockChoice(tuple(blocks), selector)
    spec.validate()
    return _block_choice(spec, n)


def _block_choice(spec: BlockChoice, n: int) -> FiniteWord:
    if n == 0:
        return FiniteWord(b"", spec.alphabet_size)
    shortest = min(len(b) for b in spec.blocks)
    picks = generate_prefix(spec.selector, n // shortest + 1)
    table = [b.symbols for b in spec.blocks]
    if len(table) == 1:
        table *= spec.selector.alphabet_size
    out = bytearray()
    for s in picks.symbols:
        out += table[s]
        if len(out) >= n:
            break
    return FiniteWord(bytes(out[:n]), spec.alphabet_size)


def generate_prefix(spec: WordSpec, n: int) -> FiniteWord:
    """Length-``n`` prefix of the infinite word described by ``spec``."""
    if n < 0:
        raise ValueError("prefix length must be non-negative")
    validate_spec(spec)
    return _generate(spec, n)


@lru_cache(maxsize=64)
def _generate(spec: WordSpec, n: int) -> FiniteWord:
    if isinstance(spec, Morphic):
        if n == 0:
            return FiniteWord(b"", spec.alphabet_size)
        return morphic_fixed_point(spec.morphism, spec.seed, n)
    if isinstance(spec, Mechanical):
        return mechanical_word(spec.p, spec.q, spec.rho_num, spec.rho_den, n)
    if isinstance(spec, Directive):
        coeffs = cycle(spec.coefficients) if spec.repeat else spec.coefficients
        if spec.repeat:
            # each step adds at least one symbol
            coeffs = islice(coeffs, n + 2)
        return standard_word_from_directive(coeffs, n)
    if isinstance(spec, Periodic):
        pat = spec.pattern
        reps = -(-n // len(pat))
        return FiniteWord((pat.symbols * reps)[:n], pat.alphabet_size)
    if isinstance(spec, BlockChoice):
        return _block_choice(spec, n)
    raise InvalidSpec(f"unknown spec kind {type(spec).__name__}")


def least_period(w: FiniteWord) -> int:
    """Smallest ``t >= 1`` with ``w[i] == w[i + t]`` for all valid ``i``."""
    s = w.symbols
    n = len(s)
    # failure function of the Knuth-Morris-Pratt automaton
    fail = [0] * (n + 1)
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k]
        if s[i] == s[k]:
            k += 1
        fail[i + 1] = k
    return n - fail[n] if n else 1


def has_period(w: FiniteWord, t: int) -> bool:
    return t >= 1 and w.symbols[t:] == w.symbols[: len(w) - t]


def coprime(a: int, b: int) -> bool:
    return math.gcd(a, b) == 1
