"""Classic, semi-abelian and abelian return words.

For a subject (a factor, or an abelian class given by its Parikh vector) let
``n_1 < n_2 < ...`` be its occurrence positions. The gap word between two
consecutive occurrences is ``w[n_i:n_{i+1}]`` on the left side and
``w[n_i + L:n_{i+1} + L]`` on the right side, where ``L`` is the subject length.

* classic returns: gap words between exact occurrences of a factor;
* semi-abelian returns: gap words between occurrences of any member of a class;
* abelian returns: the abelian classes of the semi-abelian returns.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from .errors import InvalidSpec, SubjectAbsent, TooFewOccurrences
from .factors import ParikhVector, abelian_occurrences, key_of, occurrences
from .words import FiniteWord, WordSpec, as_word, generate_prefix


class ReturnMode(str, enum.Enum):
    CLASSIC = "classic"
    SEMI_ABELIAN = "semi"
    ABELIAN = "abelian"


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


Subject = Union[FiniteWord, ParikhVector]


@dataclass(frozen=True)
class ReturnReport:
    mode: ReturnMode
    side: Side
    subject: Subject
    returns: tuple
    occurrence_count: int
    stabilized: bool = False
    prefix_length_used: int = 0
    # one exact word per entry of ``returns`` (the first one seen)
    representatives: tuple[FiniteWord, ...] = ()
    tail_occurrences: int = 0

    @property
    def count(self) -> int:
        return len(self.returns)

    def abelian_keys(self) -> frozenset[ParikhVector]:
        if self.mode is ReturnMode.ABELIAN:
            return frozenset(self.returns)
        return frozenset(key_of(r) for r in self.returns)


@dataclass(frozen=True)
class StabilizationPolicy:
    initial_prefix: int = 4096
    growth_factor: int = 2
    max_prefix: int = 2**22
    min_tail_occurrences: int = 3

    def __post_init__(self):
        if self.initial_prefix < 1 or self.initial_prefix > self.max_prefix:
            raise ValueError("need 1 <= initial_prefix <= max_prefix")
        if self.growth_factor < 2:
            raise ValueError("growth_factor must be at least 2")
        if self.min_tail_occurrences < 0:
            raise ValueError("min_tail_occurrences must be non-negative")


DEFAULT_POLICY = StabilizationPolicy()


def normalize_subject(subject, mode: ReturnMode, alphabet_size: int = 2) -> Subject:
    mode = ReturnMode(mode)
    if mode is ReturnMode.CLASSIC:
        if isinstance(subject, ParikhVector):
            raise TypeError("classic returns need an exact factor, not an abelian class")
        return as_word(subject, alphabet_size)
    return key_of(subject, alphabet_size)


def _positions(w: FiniteWord, subject: Subject, mode: ReturnMode) -> np.ndarray:
    if mode is ReturnMode.CLASSIC:
        return occurrences(w, subject).positions
    return abelian_occurrences(w, subject).positions


def compute_returns(p, subject, mode=ReturnMode.ABELIAN, side=Side.LEFT) -> ReturnReport:
    """Return set of ``subject`` read off a single finite prefix."""
    w = as_word(p)
    mode, side = ReturnMode(mode), Side(side)
    subject = normalize_subject(subject, mode, w.alphabet_size)
    pos = _positions(w, subject, mode)
    if len(pos) < 2:
        raise TooFewOccurrences(
            f"{subject} occurs {len(pos)} time(s) in a prefix of length {len(w)}"
        )
    shift = len(subject) if isinstance(subject, FiniteWord) else subject.length
    starts, ends = pos[:-1], pos[1:]
    if side is Side.RIGHT:
        starts, ends = starts + shift, ends + shift

    if mode is ReturnMode.ABELIAN:
        cc = w.cumulative_counts
        rows = cc[ends] - cc[starts]
        uniq, first = np.unique(rows, axis=0, return_index=True)
        found = sorted(
            (ParikhVector(tuple(r)), int(i)) for r, i in zip(uniq.tolist(), first.tolist())
        )
        returns = tuple(k for k, _ in found)
        firsts = [i for _, i in found]
        reps = tuple(w[int(starts[i]) : int(ends[i])] for i in firsts)
    else:
        s = w.symbols
        seen: dict[bytes, int] = {}
        for i, (a, b) in enumerate(zip(starts.tolist(), ends.tolist())):
            gap = s[a:b]
            if gap not in seen:
                seen[gap] = i
        ordered = sorted(seen.items(), key=lambda kv: (len(kv[0]), kv[0]))
        returns = tuple(FiniteWord(g, w.alphabet_size) for g, _ in ordered)
        firsts = [i for _, i in ordered]
        reps = returns

    last_new = max(firsts)
    return ReturnReport(
        mode=mode,
        side=side,
        subject=subject,
        returns=returns,
        occurrence_count=len(pos),
        prefix_length_used=len(w),
        representatives=reps,
        tail_occurrences=len(pos) - 1 - last_new,
    )


def classic_returns(p, u, side=Side.LEFT) -> ReturnReport:
    return compute_returns(p, u, ReturnMode.CLASSIC, side)


def semi_abelian_returns(p, key, side=Side.LEFT) -> ReturnReport:
    return compute_returns(p, key, ReturnMode.SEMI_ABELIAN, side)


def abelian_returns(p, key, side=Side.LEFT) -> ReturnReport:
    return compute_returns(p, key, ReturnMode.ABELIAN, side)


def returns_stabilized(
    spec: WordSpec,
    subject,
    mode=ReturnMode.ABELIAN,
    side=Side.LEFT,
    policy: StabilizationPolicy = DEFAULT_POLICY,
) -> ReturnReport:
    """Recompute the return set on growing prefixes until it stops changing.

    The report is marked stabilized once two consecutive prefix lengths give
    the same set and the subject still occurs ``min_tail_occurrences`` times
    after the last occurrence that introduced a new return.
    """
    mode, side = ReturnMode(mode), Side(side)
    subject = normalize_subject(subject, mode, spec.alphabet_size)
    n = policy.initial_prefix
    previous = None
    seen_any = False
    while True:
        w = generate_prefix(spec, n)
        try:
            report = compute_returns(w, subject, mode, side)
        except TooFewOccurrences:
            report = None
            seen_any = seen_any or len(_positions(w, subject, mode)) > 0
        else:
            seen_any = True
            if (
                previous is not None
                and report.returns == previous.returns
                and report.tail_occurrences >= policy.min_tail_occurrences
            ):
                return replace(report, stabilized=True)
        if n >= policy.max_prefix:
            break
        previous = report
        n = min(n * policy.growth_factor, policy.max_prefix)

    if not seen_any:
        raise SubjectAbsent(f"{subject} does not occur in the first {n} symbols")
    if report is None:
        return ReturnReport(mode, side, subject, (), 1, False, n)
    return report


def parse_mode(text: str) -> ReturnMode:
    aliases = {"semi-abelian": "semi", "semiabelian": "semi"}
    try:
        return ReturnMode(aliases.get(text, text))
    except ValueError:
        raise InvalidSpec(f"unknown return mode {text!r}") from None
