"""Acceptance gate: one test per criterion, each at its stated tolerance and time budget.

Run ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per criterion is
printed in the terminal summary. ``python3 tests/test_acceptance.py`` prints
the same lines without pytest's output.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from math import gcd

import pytest

from abelian_returns import (
    FIBONACCI,
    THUE_MORSE,
    Conclusion,
    FiniteWord,
    ParikhVector,
    Periodic,
    ReturnMode,
    Side,
    StabilizationPolicy,
    abelian_returns_via_array,
    balanced_array_by_columns,
    build_lex_array,
    generate_prefix,
    is_christoffel,
    returns_stabilized,
    singular_classes,
    sturmian_by_complexity,
    sturmian_by_returns,
)
from abelian_returns.classifier import minimal_violation, subjects
from abelian_returns.factors import abelian_classes, distinct_factors
from conftest import BATTERY, CF12, COUNTEREXAMPLE, PERIOD24

W = FiniteWord.from_str
RESULTS: dict[str, tuple[bool, float, str]] = {}


@contextmanager
def criterion(label: str, budget: float | None = None):
    """Record the outcome of one criterion and enforce its runtime budget."""
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[label] = (False, time.perf_counter() - start, type(exc).__name__)
        raise
    elapsed = time.perf_counter() - start
    ok = budget is None or elapsed < budget
    RESULTS[label] = (ok, elapsed, "" if ok else f"over budget {budget}s")
    assert ok, f"{label} took {elapsed:.2f}s, budget {budget}s"


def pv(a, b):
    return ParikhVector((a, b))


def test_criterion_01_thue_morse_returns_of_01():
    with criterion("1 Thue-Morse returns of class(01)", 1.0):
        policy = StabilizationPolicy(initial_prefix=2**12)
        semi = returns_stabilized(THUE_MORSE, "01", ReturnMode.SEMI_ABELIAN, policy=policy)
        ab = returns_stabilized(THUE_MORSE, "01", ReturnMode.ABELIAN, policy=policy)
        assert semi.stabilized and ab.stabilized
        assert {str(r) for r in semi.returns} == {"0", "1", "01", "10"}
        assert set(ab.returns) == {pv(1, 0), pv(0, 1), pv(1, 1)}


SORTED_SHIFTS_0101001 = """\
0010101
0100101
0101001
0101010
1001010
1010010
1010100"""


def test_criterion_02_lex_array_and_array_read_returns():
    with criterion("2 lex array of 0101001 and array-read returns", 1.0):
        a = build_lex_array("0101001")
        assert a.render() == SORTED_SHIFTS_0101001
        assert abelian_returns_via_array(a, "001") == {pv(1, 0), pv(0, 1), pv(1, 1)}


def test_criterion_03_fibonacci_classic_returns():
    with criterion("3 Fibonacci: two classic returns per factor", 30.0):
        w = generate_prefix(FIBONACCI, 4096)
        checked = 0
        for n in range(1, 33):
            for f in distinct_factors(w, n):
                r = returns_stabilized(FIBONACCI, f, ReturnMode.CLASSIC)
                assert r.stabilized and r.count == 2, (f, r.returns)
                checked += 1
        assert checked == sum(n + 1 for n in range(1, 33))


_STURMIAN_REPORTS: dict[str, list] = {}


def _sturmian_reports(name, spec):
    """Abelian and semi-abelian reports of every class of length <= 32."""
    if name not in _STURMIAN_REPORTS:
        w = generate_prefix(spec, 4096)
        rows = []
        for n in range(1, 33):
            singular = singular_classes(w, n)
            for key in abelian_classes(w, n):
                ab = returns_stabilized(spec, key, ReturnMode.ABELIAN)
                semi = returns_stabilized(spec, key, ReturnMode.SEMI_ABELIAN)
                rows.append((key, key in singular, ab, semi))
        _STURMIAN_REPORTS[name] = rows
    return _STURMIAN_REPORTS[name]


@pytest.fixture(scope="module")
def sturmian_reports():
    return {name: _sturmian_reports(name, spec) for name, spec in (("fib", FIBONACCI), ("cf12", CF12))}


def test_criterion_04_return_windows_and_singular_classes():
    with criterion("4 Fibonacci and cf:[1,2,...]: 2-3 returns, 2 exactly on singular classes", 60.0):
        for name, spec in (("fib", FIBONACCI), ("cf12", CF12)):
            rows = _sturmian_reports(name, spec)
            assert len(rows) == 2 * 32  # two classes per length
            for key, singular, ab, semi in rows:
                assert ab.stabilized and semi.stabilized
                assert 2 <= ab.count <= 3, (name, key)
                assert 2 <= semi.count <= 3, (name, key)
                assert (ab.count == 2) == singular, (name, key)


def test_criterion_05_semi_abelian_returns_are_christoffel(sturmian_reports):
    with criterion("5 semi-abelian returns are Christoffel words"):
        for rows in sturmian_reports.values():
            for _, _, _, semi in rows:
                assert all(is_christoffel(r) for r in semi.returns), semi.returns


def test_criterion_06_one_return_class_per_length(sturmian_reports):
    with criterion("6 return classes of length >= 2 are unique per length"):
        for rows in sturmian_reports.values():
            for _, _, ab, _ in rows:
                lengths = [k.length for k in ab.returns if k.length >= 2]
                assert len(lengths) == len(set(lengths)), ab.returns


def test_criterion_07_counterexamples():
    with criterion("7 counterexamples: block choice and the period-24 word", 10.0):
        ab = returns_stabilized(COUNTEREXAMPLE, "11", ReturnMode.ABELIAN)
        semi = returns_stabilized(COUNTEREXAMPLE, "11", ReturnMode.SEMI_ABELIAN)
        assert ab.stabilized and ab.count == 1
        assert semi.stabilized and semi.count == 2
        counts = [
            returns_stabilized(PERIOD24, key, ReturnMode.ABELIAN).count
            for key in subjects(PERIOD24, ReturnMode.ABELIAN, 12)
        ]
        assert min(counts) >= 2
        assert max(counts) > 2


def test_criterion_08_array_reader_matches_engine():
    with criterion("8 array reader equals the returns engine for q <= 15", 60.0):
        policy = StabilizationPolicy(initial_prefix=256)
        compared = 0
        for q in range(2, 16):
            for p in range(1, q):
                if gcd(p, q) != 1:
                    continue
                a = balanced_array_by_columns(p, q)
                spec = Periodic(a.rows[0])
                cyc = a.rows[0] * 4
                for n in range(1, q):
                    for key in abelian_classes(cyc, n):
                        r = returns_stabilized(spec, key, ReturnMode.ABELIAN, policy=policy)
                        assert r.stabilized
                        assert set(r.returns) == abelian_returns_via_array(a, key), (p, q, key)
                        compared += 1
        assert compared > 1000


def test_criterion_09_side_invariance():
    with criterion("9 left and right abelian returns coincide"):
        for name, spec in sorted(BATTERY.items()):
            for key in subjects(spec, ReturnMode.ABELIAN, 16):
                left = returns_stabilized(spec, key, ReturnMode.ABELIAN, Side.LEFT)
                right = returns_stabilized(spec, key, ReturnMode.ABELIAN, Side.RIGHT)
                assert left.stabilized and right.stabilized, (name, key)
                assert set(left.returns) == set(right.returns), (name, key)


def _thue_morse_refutations():
    verdicts = {"complexity": sturmian_by_complexity(THUE_MORSE, 32, 4096)}
    for mode in ReturnMode:
        verdicts[mode.value] = sturmian_by_returns(THUE_MORSE, mode, 32)
    return {
        name: (v.conclusion, str(v.witnesses[0].subject), minimal_violation(v))
        for name, v in verdicts.items()
    }


def test_criterion_10_thue_morse_refuted_deterministically():
    with criterion("10 Thue-Morse refuted by every test, stable witnesses"):
        first = _thue_morse_refutations()
        second = _thue_morse_refutations()
        assert first == second
        assert all(c is Conclusion.REFUTED_STURMIAN for c, _, _ in first.values())
        assert {k: m for k, (_, _, m) in first.items()} == {
            "complexity": 2,
            "classic": 1,
            "semi": 2,
            "abelian": 3,
        }
        assert {k: s for k, (_, s, _) in first.items()} == {
            "complexity": "2",
            "classic": "0",
            "semi": "(0,2)",
            "abelian": "(1,2)",
        }


def summary_lines() -> list[str]:
    lines = []
    for label, (ok, elapsed, note) in sorted(RESULTS.items(), key=lambda kv: int(kv[0].split()[0])):
        tail = f" ({note})" if note else ""
        lines.append(f"{'PASS' if ok else 'FAIL'}  criterion {label}  [{elapsed:.2f}s]{tail}")
    return lines


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
