from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from abelian_returns import (
    FiniteWord,
    ParikhVector,
    Periodic,
    ReturnMode,
    StabilizationPolicy,
    abelian_returns_via_array,
    balanced_array_by_columns,
    build_lex_array,
    is_balanced_orbit,
    mechanical_word,
    parikh,
    returns_stabilized,
)
from abelian_returns.errors import ClassAbsent, NotBalanced, NotCoprime, NotPrimitive
from abelian_returns.factors import abelian_classes
from abelian_returns.lexarray import shift_links
from abelian_returns.structure import is_cyclically_balanced

W = FiniteWord.from_str

SORTED_SHIFTS_0101001 = """\
0010101
0100101
0101001
0101010
1001010
1010010
1010100"""


def coprime_pairs(max_q):
    return [(p, q) for q in range(2, max_q + 1) for p in range(1, q) if gcd(p, q) == 1]


def test_sorted_shifts_of_0101001():
    a = build_lex_array("0101001")
    assert (a.p, a.q) == (3, 7)
    assert a.render() == SORTED_SHIFTS_0101001
    assert a[0, 2] == 1 and a[6, 6] == 0


def test_small_arrays():
    assert [str(r) for r in build_lex_array("01").rows] == ["01", "10"]
    assert [str(r) for r in balanced_array_by_columns(1, 2).rows] == ["01", "10"]
    assert build_lex_array("0").q == 1


def test_rejects_non_coprime_and_powers():
    with pytest.raises(NotCoprime):
        build_lex_array("0110")
    with pytest.raises(NotPrimitive):
        build_lex_array("0101")
    with pytest.raises(NotCoprime):
        balanced_array_by_columns(2, 4)


def test_columns_of_0101001():
    a = balanced_array_by_columns(3, 7)
    assert "".join(str(a[i, 0]) for i in range(7)) == "0000111"
    assert a.render() == SORTED_SHIFTS_0101001


@pytest.mark.parametrize("p, q", coprime_pairs(20))
def test_column_construction_matches_sorting(p, q):
    a = balanced_array_by_columns(p, q)
    assert a == build_lex_array(a.rows[3 % q])
    assert a == build_lex_array(mechanical_word(p, q, 0, 1, q))
    assert shift_links(a)


def test_two_fifths_rows_are_the_shifts():
    a = balanced_array_by_columns(2, 5)
    w = str(mechanical_word(2, 5, 0, 1, 5))
    assert sorted(str(r) for r in a.rows) == sorted(oracles.rotations(w))


def test_balance_criterion():
    assert is_balanced_orbit(build_lex_array("0101001"))
    assert is_balanced_orbit(balanced_array_by_columns(1, 2))
    unbalanced = build_lex_array("00011")
    assert not is_balanced_orbit(unbalanced)
    assert not oracles.cyclic_balanced("00011")
    assert not shift_links(unbalanced)


def _all_orbits(q):
    for w in oracles.necklaces(q):
        if gcd(w.count("1"), q) == 1:
            yield w


def test_necklace_enumeration_counts():
    # one orbit per primitive necklace; 2^q words split into orbits of size q
    for q in (5, 7, 11):
        assert sum(1 for _ in _all_orbits(q)) == (2**q - 2) // q


@pytest.mark.parametrize("q", range(1, 21))
def test_balance_criterion_exhaustive(q):
    for w in _all_orbits(q):
        assert is_balanced_orbit(build_lex_array(w)) == bool(is_cyclically_balanced(w))
        if q <= 12:
            assert is_balanced_orbit(build_lex_array(w)) == oracles.cyclic_balanced(w)


def test_array_read_returns_of_001():
    found = abelian_returns_via_array(build_lex_array("0101001"), parikh("001"))
    assert found == {parikh("0"), parikh("1"), parikh("01")}


def test_rich_class_is_normalized_by_complement():
    a = build_lex_array("0101001")
    # 011 is the richer length-3 class; its returns in (0101001)^omega, by scan
    text = "0101001" * 6
    assert abelian_returns_via_array(a, "011") == {
        ParikhVector(c) for c in oracles.abelian_returns(text, "011")
    }


def test_singular_classes_of_0101001():
    a = build_lex_array("0101001")
    text = "0101001" * 8
    # singular classes of the cyclic word that recur inside one period
    for u in ("0", "1", "101"):
        assert len(abelian_returns_via_array(a, u)) == 2
        assert len(oracles.abelian_returns(text, u)) == 2
    # 00 and 10101 occur once per period, so they have a single return
    assert abelian_returns_via_array(a, "00") == {ParikhVector((4, 3))}


def test_alternating_word():
    assert abelian_returns_via_array(balanced_array_by_columns(1, 2), "0") == {parikh("01")}


def test_array_reader_errors():
    a = build_lex_array("0101001")
    with pytest.raises(ClassAbsent):
        abelian_returns_via_array(a, "0101001")
    with pytest.raises(ClassAbsent):
        abelian_returns_via_array(a, "000")
    with pytest.raises(NotBalanced):
        abelian_returns_via_array(build_lex_array("00011"), "0")


@pytest.mark.parametrize("p, q", coprime_pairs(11))
def test_array_reader_matches_engine(p, q):
    a = balanced_array_by_columns(p, q)
    spec = Periodic(a.rows[0])
    policy = StabilizationPolicy(initial_prefix=256)
    cyc = a.rows[0] * 4
    for n in range(1, q):
        for key in abelian_classes(cyc, n):
            engine = returns_stabilized(spec, key, ReturnMode.ABELIAN, policy=policy)
            assert engine.stabilized
            assert set(engine.returns) == abelian_returns_via_array(a, key)


@given(st.integers(2, 40).flatmap(lambda q: st.tuples(st.integers(1, q - 1), st.just(q))))
def test_shift_linking_identity(pq):
    p, q = pq
    if gcd(p, q) != 1:
        return
    a = balanced_array_by_columns(p, q)
    for i in range(q):
        for m in range(q):
            assert a[i, m] == a[i + q - p, m + 1]
