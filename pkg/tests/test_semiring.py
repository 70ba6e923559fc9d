import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recurlang.semiring import (
    BOOLEAN,
    NATURALS,
    LanguageSemiring,
    LengthMismatch,
    ProductSemiring,
    SemiringError,
    SeriesPrefix,
    check_semiring_axioms,
    series_add,
    series_cauchy_product,
    unit_series,
    zero_series,
)

AB = LanguageSemiring("ab")

words = st.text(alphabet="ab", max_size=3)
languages = st.frozensets(words, max_size=3)
naturals = st.integers(min_value=0, max_value=10**30)


def test_boolean_axioms():
    report = check_semiring_axioms(BOOLEAN, [False, True])
    assert report.ok
    assert report.checked == 8 * 8


def test_natural_axioms():
    assert check_semiring_axioms(NATURALS, [0, 1, 2, 3]).ok


def test_language_axioms_on_small_samples():
    samples = [frozenset(), frozenset({""}), frozenset({"a"}), frozenset({"ab", "b"})]
    assert check_semiring_axioms(AB, samples).ok


def test_axiom_report_names_the_broken_axiom():
    class Minus(type(NATURALS)):
        def add(self, a, b):
            return a - b

    report = check_semiring_axioms(Minus(), [0, 1, 2])
    assert not report.ok
    assert "add commutative" in report.failed_axioms()
    name, witness = report.failures[0]
    assert len(witness) == 3


def test_empty_samples_rejected():
    with pytest.raises(ValueError):
        check_semiring_axioms(BOOLEAN, [])


@settings(max_examples=60)
@given(st.lists(naturals, min_size=1, max_size=4))
def test_naturals_axioms_random(samples):
    assert check_semiring_axioms(NATURALS, samples).ok


@settings(max_examples=60)
@given(st.lists(languages, min_size=1, max_size=4))
def test_language_axioms_random(samples):
    assert check_semiring_axioms(AB, samples).ok


@settings(max_examples=40)
@given(st.lists(st.tuples(languages, st.integers(0, 20)), min_size=1, max_size=3))
def test_product_axioms_random(samples):
    assert check_semiring_axioms(ProductSemiring(AB, NATURALS), samples).ok


def test_concatenation_is_graded():
    left = frozenset({"ab", "ba"})
    right = frozenset({"a", "b"})
    assert {len(w) for w in AB.mul(left, right)} == {3}


def test_language_elements_are_checked():
    assert AB.letters("ba") == frozenset({"a", "b"})
    with pytest.raises(SemiringError):
        AB.element(["ac"])
    with pytest.raises(SemiringError):
        AB.letters(["ab"])
    with pytest.raises(SemiringError):
        LanguageSemiring("aa")


def test_sorted_follows_declaration_order():
    assert LanguageSemiring("ba").sorted({"a", "b", "ab", "bb"}) == ["b", "a", "bb", "ab"]


# -- series -------------------------------------------------------------------

def nat(*cs):
    return SeriesPrefix(NATURALS, cs)


def lang(*cs):
    return SeriesPrefix(AB, tuple(frozenset(c) for c in cs))


def test_series_add():
    assert series_add(nat(0, 1, 2), nat(5, 0, 1)).coeffs == (5, 1, 3)
    assert series_add(lang([], ["a"]), lang([""], ["b"])).coeffs == (frozenset({""}), frozenset({"a", "b"}))
    s = nat(4, 0, 9)
    assert series_add(s, zero_series(NATURALS, 2)).equals(s)


def test_series_cauchy_product():
    assert series_cauchy_product(nat(1, 1, 1), nat(1, 1, 1)).coeffs == (1, 2, 3)
    s = nat(3, 1, 4, 1)
    assert series_cauchy_product(s, unit_series(NATURALS, 3)).equals(s)
    assert series_cauchy_product(unit_series(NATURALS, 3), s).equals(s)
    # ({eps}, {a}) * ({eps}, {b}) truncated at N=1; the {ab} term lands at index 2 and is dropped
    got = series_cauchy_product(lang([""], ["a"]), lang([""], ["b"]))
    assert got.coeffs == (frozenset({""}), frozenset({"a", "b"}))


def test_series_length_mismatch():
    with pytest.raises(LengthMismatch):
        series_add(nat(1, 2), nat(1))
    with pytest.raises(LengthMismatch):
        series_cauchy_product(nat(1, 2), nat(1))


prefixes = st.integers(0, 8).flatmap(
    lambda N: st.tuples(*[st.lists(st.integers(0, 50), min_size=N + 1, max_size=N + 1)] * 3)
)


@settings(max_examples=100)
@given(prefixes)
def test_cauchy_associative_and_distributive(triple):
    s, t, u = (nat(*c) for c in triple)
    mul, add = series_cauchy_product, series_add
    assert mul(mul(s, t), u).equals(mul(s, mul(t, u)))
    assert mul(s, add(t, u)).equals(add(mul(s, t), mul(s, u)))
    assert mul(add(s, t), u).equals(add(mul(s, u), mul(t, u)))
