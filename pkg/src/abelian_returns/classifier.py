"""Finite-evidence verdicts for the Sturmian and periodicity characterizations.

A *Consistent* verdict means no counterexample was found among the subjects
that were tested; it is never a proof about the infinite word. A *Refuted*
verdict always carries the first violating subject in enumeration order
(by length, then lexicographically).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Iterator

from .factors import (
    abelian_classes,
    distinct_factors,
    factor_complexity,
    occurrences,
    reliable_bound,
)
from .returns import (
    DEFAULT_POLICY,
    ReturnMode,
    ReturnReport,
    Side,
    StabilizationPolicy,
    returns_stabilized,
)
from .structure import singular_classes
from .words import FiniteWord, WordSpec, generate_prefix, has_period


class Conclusion(str, enum.Enum):
    CONSISTENT_STURMIAN = "consistent-sturmian"
    REFUTED_STURMIAN = "refuted-sturmian"
    CONSISTENT_PERIODIC = "consistent-periodic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    subject: Any
    report: ReturnReport | None = None
    detail: str = ""


@dataclass
class Verdict:
    conclusion: Conclusion
    witnesses: list[Witness] = field(default_factory=list)
    parameters: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.conclusion is Conclusion.REFUTED_STURMIAN and not self.witnesses:
            raise ValueError("a refutation needs a witness")

    @property
    def consistent(self) -> bool:
        return self.conclusion in (
            Conclusion.CONSISTENT_STURMIAN,
            Conclusion.CONSISTENT_PERIODIC,
        )


RETURN_WINDOWS = {
    ReturnMode.CLASSIC: (2, 2),
    ReturnMode.ABELIAN: (2, 3),
    ReturnMode.SEMI_ABELIAN: (2, 3),
}


def enumeration_prefix(max_len: int, policy: StabilizationPolicy) -> int:
    return max(policy.initial_prefix, 4 * max_len)


def subjects(
    spec: WordSpec, mode: ReturnMode, max_len: int, policy: StabilizationPolicy = DEFAULT_POLICY
) -> Iterator:
    """Factors (classic mode) or abelian classes of lengths ``1..max_len``, in order."""
    w = generate_prefix(spec, enumeration_prefix(max_len, policy))
    for n in range(1, max_len + 1):
        if mode is ReturnMode.CLASSIC:
            yield from sorted(distinct_factors(w, n))
        else:
            yield from abelian_classes(w, n)


def sturmian_by_complexity(spec: WordSpec, n_max: int, prefix_len: int) -> Verdict:
    params = {"n_max": n_max, "prefix_length": prefix_len}
    if n_max > reliable_bound(prefix_len):
        return Verdict(
            Conclusion.INCONCLUSIVE,
            parameters=params | {"reason": "n_max exceeds the reliable bound"},
        )
    w = generate_prefix(spec, prefix_len)
    for n in range(n_max + 1):
        value, _ = factor_complexity(w, n)
        if value != n + 1:
            return Verdict(
                Conclusion.REFUTED_STURMIAN,
                [Witness(n, detail=f"p({n}) = {value}, expected {n + 1}")],
                params,
            )
    return Verdict(Conclusion.CONSISTENT_STURMIAN, parameters=params)


def sturmian_by_returns(
    spec: WordSpec,
    mode=ReturnMode.ABELIAN,
    max_factor_len: int = 32,
    policy: StabilizationPolicy = DEFAULT_POLICY,
    side=Side.LEFT,
) -> Verdict:
    """Check the return-count window of every subject up to ``max_factor_len``.

    Windows: exactly 2 classic returns; 2 or 3 abelian; 2 or 3 semi-abelian.
    An unstabilized report can still refute if it already exceeds the upper
    end of the window, since return sets only grow with the prefix.
    """
    mode = ReturnMode(mode)
    lo, hi = RETURN_WINDOWS[mode]
    params = {"mode": mode.value, "max_factor_len": max_factor_len, "policy": policy}
    unsettled: list[Witness] = []
    for subj in subjects(spec, mode, max_factor_len, policy):
        report = returns_stabilized(spec, subj, mode, side, policy)
        c = report.count
        if c > hi or (report.stabilized and c < lo):
            return Verdict(
                Conclusion.REFUTED_STURMIAN,
                [Witness(subj, report, f"{c} {mode.value} returns, expected {lo}..{hi}")],
                params,
            )
        if not report.stabilized:
            unsettled.append(Witness(subj, report, "not stabilized"))
    if unsettled:
        return Verdict(Conclusion.INCONCLUSIVE, unsettled[:1], params)
    return Verdict(Conclusion.CONSISTENT_STURMIAN, parameters=params)


def _period_from_spanning_factor(w: FiniteWord, k: int) -> int | None:
    """Period from two consecutive occurrences of a factor containing all ``k`` letters."""
    for start in range(len(w)):
        seen = set()
        for end in range(start, len(w)):
            seen.add(w[end])
            if len(seen) == k:
                v = w[start : end + 1]
                pos = occurrences(w, v).positions
                if len(pos) >= 2:
                    return int(pos[1] - pos[0])
                return None
    return None


def periodicity_by_abelian_bound(
    spec: WordSpec,
    k: int | None = None,
    max_factor_len: int = 12,
    policy: StabilizationPolicy = DEFAULT_POLICY,
) -> Verdict:
    """If no tested class has more than ``k`` abelian returns, extract a period."""
    k = spec.alphabet_size if k is None else k
    params = {"k": k, "max_factor_len": max_factor_len, "policy": policy}
    unsettled = []
    for key in subjects(spec, ReturnMode.ABELIAN, max_factor_len, policy):
        report = returns_stabilized(spec, key, ReturnMode.ABELIAN, Side.LEFT, policy)
        if report.count > k:
            return Verdict(
                Conclusion.INCONCLUSIVE,
                [Witness(key, report, f"{report.count} abelian returns exceed the bound {k}")],
                params | {"bound_exceeded": True},
            )
        if not report.stabilized:
            unsettled.append(Witness(key, report, "not stabilized"))
    if unsettled:
        return Verdict(Conclusion.INCONCLUSIVE, unsettled[:1], params)
    w = generate_prefix(spec, enumeration_prefix(max_factor_len, policy))
    period = _period_from_spanning_factor(w, k)
    if period is not None and has_period(w, period):
        return Verdict(
            Conclusion.CONSISTENT_PERIODIC,
            [Witness(period, detail=f"period {period} verified on {len(w)} symbols")],
            params | {"period": period, "bound_exceeded": False},
        )
    return Verdict(
        Conclusion.INCONCLUSIVE,
        parameters=params | {"bound_exceeded": False, "reason": "no period verified"},
    )


def one_return_periodicity(
    spec: WordSpec,
    mode=ReturnMode.CLASSIC,
    max_factor_len: int = 32,
    policy: StabilizationPolicy = DEFAULT_POLICY,
) -> Verdict:
    """Look for a subject with a single classic or semi-abelian return."""
    mode = ReturnMode(mode)
    if mode is ReturnMode.ABELIAN:
        raise ValueError("one abelian return does not imply periodicity")
    params = {"mode": mode.value, "max_factor_len": max_factor_len, "policy": policy}
    w = generate_prefix(spec, enumeration_prefix(max_factor_len, policy))
    for subj in subjects(spec, mode, max_factor_len, policy):
        report = returns_stabilized(spec, subj, mode, Side.LEFT, policy)
        if report.stabilized and report.count == 1:
            period = len(report.returns[0])
            if has_period(w, period):
                return Verdict(
                    Conclusion.CONSISTENT_PERIODIC,
                    [Witness(subj, report, f"single return gives period {period}")],
                    params | {"period": period},
                )
    return Verdict(
        Conclusion.INCONCLUSIVE,
        parameters=params | {"reason": "no subject with exactly one return"},
    )


def singularity_correspondence(
    spec: WordSpec, max_len: int = 16, policy: StabilizationPolicy = DEFAULT_POLICY
) -> Verdict:
    """Compare the classes with two abelian returns against the singular classes."""
    params = {"max_len": max_len, "policy": policy}
    prefix_len = enumeration_prefix(max_len, policy)
    guard = sturmian_by_complexity(spec, min(max_len + 1, reliable_bound(prefix_len)), prefix_len)
    if guard.conclusion is not Conclusion.CONSISTENT_STURMIAN:
        return Verdict(
            Conclusion.INCONCLUSIVE,
            guard.witnesses,
            params | {"reason": "complexity guard failed; the theorem needs a Sturmian word"},
        )
    w = generate_prefix(spec, prefix_len)
    unsettled = []
    for n in range(1, max_len + 1):
        singular = singular_classes(w, n)
        for key in abelian_classes(w, n):
            report = returns_stabilized(spec, key, ReturnMode.ABELIAN, Side.LEFT, policy)
            if not report.stabilized:
                unsettled.append(Witness(key, report, "not stabilized"))
                continue
            if (report.count == 2) != (key in singular):
                what = "singular" if key in singular else "not singular"
                return Verdict(
                    Conclusion.REFUTED_STURMIAN,
                    [Witness(key, report, f"{report.count} abelian returns but {what}")],
                    params,
                )
    if unsettled:
        return Verdict(Conclusion.INCONCLUSIVE, unsettled[:1], params)
    return Verdict(Conclusion.CONSISTENT_STURMIAN, parameters=params)


def minimal_violation(verdict: Verdict) -> int | None:
    """Length of the witness subject of a refutation."""
    if verdict.conclusion is not Conclusion.REFUTED_STURMIAN:
        return None
    subj = verdict.witnesses[0].subject
    if isinstance(subj, int):
        return subj
    return len(subj) if isinstance(subj, FiniteWord) else subj.length


__all__ = [
    "Conclusion",
    "Verdict",
    "Witness",
    "minimal_violation",
    "one_return_periodicity",
    "periodicity_by_abelian_bound",
    "singularity_correspondence",
    "sturmian_by_complexity",
    "sturmian_by_returns",
    "subjects",
]
