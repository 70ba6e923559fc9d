import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recurlang.closure import (
    AlphabetMismatch,
    Concat,
    EmptySet,
    Epsilon,
    Letter,
    RegexSyntaxError,
    Star,
    Union,
    compile_regex,
    concat,
    empty_automaton,
    epsilon_automaton,
    letter_automaton,
    parse_regex,
    regex_to_text,
    star,
    union,
)
from recurlang.language import LanguageAutomaton, cross_section, enumerate_up_to

from helpers import (
    ab_star_a,
    ab_star_a_star,
    all_words,
    brute_force_section,
    make_rng,
    random_language_automaton,
    random_regex,
)


def sections(A, N=6):
    return [s.as_set() for s in enumerate_up_to(A, N)]


def rx(text, alphabet="ab"):
    return compile_regex(parse_regex(text, alphabet), alphabet)


a, b = letter_automaton("ab", "a"), letter_automaton("ab", "b")


def test_union_examples():
    assert cross_section(union(a, b), 1).words == ("a", "b")
    L = ab_star_a_star()
    assert sections(union(L, empty_automaton("ab"))) == sections(L)
    assert sections(union(L, L)) == sections(L)


def test_union_layout():
    u = union(a, b)
    assert u.size == 5
    assert u.letters[0][2] == frozenset("a") and u.letters[0][4] == frozenset("b")
    assert u.final == (False, False, True, False, True)
    assert union(epsilon_automaton("ab"), a).final[0]


def test_concat_examples():
    assert cross_section(concat(a, b), 2).words == ("ab",)
    L = ab_star_a_star()
    assert sections(concat(epsilon_automaton("ab"), L)) == sections(L)
    LL = concat(L, L)
    expected = {u + v for p in range(5) for u in cross_section(L, p).words for v in cross_section(L, 4 - p).words}
    assert cross_section(LL, 4).as_set() == expected == {"aaaa", "abba"}


def test_star_examples():
    assert sections(star(empty_automaton("ab")), 4) == [{""}, set(), set(), set(), set()]
    aa = star(rx("aa"))
    for n in range(9):
        assert bool(cross_section(aa, n).words) == (n % 2 == 0)
    assert sections(star(ab_star_a()), 8) == sections(ab_star_a_star(), 8)


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        union(a, letter_automaton("abc", "c"))
    with pytest.raises(AlphabetMismatch):
        concat(a, letter_automaton("ba", "b"))


def test_parallel_edges_are_merged():
    # ab*: f2 is final with a b-loop; the restart copy of f1's a-edge lands on that loop
    A = LanguageAutomaton.build("ab", 2, {(0, 1): "a", (1, 1): "b"}, [1])
    s = star(A)
    assert s.letters[2][2] == frozenset("ab")
    assert s.letters[0][2] == frozenset("a")


# -- parser -------------------------------------------------------------------

def test_parse_examples():
    a_, b_ = Letter("a"), Letter("b")
    assert parse_regex("(ab*a)*") == Star(Concat(Concat(a_, Star(b_)), a_))
    assert parse_regex("a|b") == Union(a_, b_)
    assert parse_regex("a**") == Star(Star(a_))
    assert parse_regex(" a | ! & ") == Union(a_, Concat(EmptySet(), Epsilon()))
    assert parse_regex("ab|ba") == Union(Concat(a_, b_), Concat(b_, a_))


@pytest.mark.parametrize(
    "text, position",
    [("a|", 3), ("(a", 3), ("a)", 2), ("*a", 1), ("", 1), ("a|*", 3), ("a+b", 2)],
)
def test_syntax_errors(text, position):
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex(text)
    assert info.value.position == position


def test_unknown_letter():
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex("ac", "ab")
    assert info.value.position == 2


def test_compile_base_cases():
    empty = compile_regex(EmptySet(), "ab")
    assert empty.size == 1 and not empty.final[0] and all(not c for row in empty.letters for c in row)
    assert sections(empty, 4) == [set()] * 5
    eps = compile_regex(Epsilon(), "ab")
    assert eps.size == 1 and eps.final == (True,)
    letter = compile_regex(Letter("a"), "ab")
    assert letter.size == 2 and letter.final == (False, True)
    assert letter.letters == ((frozenset(), frozenset("a")), (frozenset(), frozenset()))
    assert cross_section(letter, 1).words == ("a",)
    assert cross_section(rx("(ab*a)*"), 4).words == ("aaaa", "abba")


def test_reference_semantics_agree_with_re():
    # sanity check of the test oracle itself against Python's regex engine
    rng = make_rng(7)
    for _ in range(100):
        ast = random_regex(rng, "ab", 4)
        pattern = regex_to_text(ast).replace("!", "(?!)").replace("&", "")
        for n in range(6):
            want = {w for w in all_words("ab", n) if re.fullmatch(pattern, w)}
            assert brute_force_section(ast, "ab", n) == want


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_compiled_regex_matches_reference(seed):
    ast = random_regex(make_rng(seed), "ab", 4)
    A = compile_regex(ast, "ab")
    reparsed = compile_regex(parse_regex(regex_to_text(ast), "ab"), "ab")
    for n, section in enumerate(enumerate_up_to(A, 7)):
        assert section.as_set() == brute_force_section(ast, "ab", n)
        assert cross_section(reparsed, n) == section


def star_sections(sec, N):
    """Cross-sections of L* from cross-sections of L, by dynamic programming over lengths."""
    out = [{""}]
    for n in range(1, N + 1):
        words = set()
        for p in range(1, n + 1):
            words |= {u + v for u in sec[p] for v in out[n - p]}
        out.append(words)
    return out


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_closure_section_identities(seed):
    rng = make_rng(seed)
    A, B = random_language_automaton(rng), random_language_automaton(rng)
    N = 7
    sa, sb = sections(A, N), sections(B, N)
    assert sections(union(A, B), N) == [x | y for x, y in zip(sa, sb)]
    conv = [{u + v for p in range(n + 1) for u in sa[p] for v in sb[n - p]} for n in range(N + 1)]
    assert sections(concat(A, B), N) == conv
    assert sections(star(A), N) == star_sections(sa, N)
    for C in (union(A, B), concat(A, B), star(A)):
        assert C.validate() == []
