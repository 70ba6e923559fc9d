"""Union, concatenation and star of letter-set automata, and a regex compiler built on them.

Layouts are fixed so outputs are reproducible: a fresh initial state (when
one is needed) comes first, then the states of the left operand, then those
of the right operand.  Parallel edges created by a construction are merged
by taking the union of their letter sets.
"""
from __future__ import annotations

from dataclasses import dataclass

from .language import LanguageAutomaton, LanguageError


class AlphabetMismatch(LanguageError):
    pass


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _blank(k):
    return [[frozenset()] * k for _ in range(k)]


def _place(letters, A: LanguageAutomaton, offset: int):
    for i, j, cell in A.edges():
        letters[i + offset][j + offset] |= cell


def _same_alphabet(A, B):
    if A.alphabet != B.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {A.alphabet!r} vs {B.alphabet!r}")


def union(A: LanguageAutomaton, B: LanguageAutomaton) -> LanguageAutomaton:
    _same_alphabet(A, B)
    k, m = A.size, B.size
    offA, offB = 1, 1 + k
    letters = _blank(1 + k + m)
    _place(letters, A, offA)
    _place(letters, B, offB)
    # fresh initial state copies both old initial states' out-edges
    for j in range(k):
        letters[0][j + offA] |= A.letters[0][j]
    for j in range(m):
        letters[0][j + offB] |= B.letters[0][j]
    final = [A.final[0] or B.final[0]] + list(A.final) + list(B.final)
    return LanguageAutomaton(A.alphabet, letters, final)


def concat(A: LanguageAutomaton, B: LanguageAutomaton) -> LanguageAutomaton:
    _same_alphabet(A, B)
    k, m = A.size, B.size
    offB = k
    letters = _blank(k + m)
    _place(letters, A, 0)
    _place(letters, B, offB)
    finals_A = A.final_states
    for i in range(k):
        into_final = frozenset().union(*(A.letters[i][j] for j in finals_A))
        letters[i][offB] |= into_final
    if A.final[0]:
        for j in range(m):
            letters[0][j + offB] |= B.letters[0][j]
    final = [False] * k + list(B.final)
    final[0] = A.final[0] and B.final[0]
    return LanguageAutomaton(A.alphabet, letters, final)


def star(A: LanguageAutomaton) -> LanguageAutomaton:
    k = A.size
    letters = _blank(1 + k)
    _place(letters, A, 1)
    restart = A.letters[0]
    for j in range(k):
        letters[0][j + 1] |= restart[j]
        for i in A.final_states:
            letters[i + 1][j + 1] |= restart[j]
    return LanguageAutomaton(A.alphabet, letters, [True] + list(A.final))


# -- regular expressions ----------------------------------------------------

@dataclass(frozen=True)
class EmptySet:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Union:
    left: object
    right: object


@dataclass(frozen=True)
class Concat:
    left: object
    right: object


@dataclass(frozen=True)
class Star:
    child: object


Regex = EmptySet | Epsilon | Letter | Union | Concat | Star


class _Parser:
    """Recursive descent: union < concatenation < postfix star."""

    def __init__(self, text: str, alphabet: str | None):
        # keep original positions (1-based) while skipping whitespace
        self.tokens = [(c, i + 1) for i, c in enumerate(text) if not c.isspace()]
        self.end = len(text) + 1
        self.pos = 0
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def where(self):
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else self.end

    def parse(self):
        node = self.union()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.where())
        return node

    def union(self):
        node = self.concat()
        while self.peek() == "|":
            self.pos += 1
            node = Union(node, self.concat())
        return node

    def concat(self):
        node = None
        while self.peek() is not None and self.peek() not in "|)":
            item = self.postfix()
            node = item if node is None else Concat(node, item)
        if node is None:
            raise RegexSyntaxError("expected an expression", self.where())
        return node

    def postfix(self):
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self):
        c, where = self.peek(), self.where()
        if c == "(":
            self.pos += 1
            node = self.union()
            if self.peek() != ")":
                raise RegexSyntaxError("expected ')'", self.where())
            self.pos += 1
            return node
        if c == "!":
            self.pos += 1
            return EmptySet()
        if c == "&":
            self.pos += 1
            return Epsilon()
        if c is not None and c.isalnum():
            if self.alphabet is not None and c not in self.alphabet:
                raise RegexSyntaxError(f"letter {c!r} is not in the alphabet", where)
            self.pos += 1
            return Letter(c)
        raise RegexSyntaxError(f"unexpected {c!r}" if c else "unexpected end of input", where)


def parse_regex(text: str, alphabet: str | None = None) -> Regex:
    """Parse the surface syntax: ``|``, juxtaposition, postfix ``*``, ``!`` (empty set), ``&`` (epsilon)."""
    return _Parser(text, alphabet).parse()


def empty_automaton(alphabet: str) -> LanguageAutomaton:
    return LanguageAutomaton(alphabet, [[frozenset()]], [False])


def epsilon_automaton(alphabet: str) -> LanguageAutomaton:
    return LanguageAutomaton(alphabet, [[frozenset()]], [True])


def letter_automaton(alphabet: str, symbol: str) -> LanguageAutomaton:
    return LanguageAutomaton.build(alphabet, 2, {(0, 1): symbol}, [1])


def compile_regex(ast: Regex, alphabet: str) -> LanguageAutomaton:
    """Structural induction: base automata for the empty set, epsilon and letters, closure for the rest."""
    if isinstance(ast, EmptySet):
        return empty_automaton(alphabet)
    if isinstance(ast, Epsilon):
        return epsilon_automaton(alphabet)
    if isinstance(ast, Letter):
        if ast.symbol not in alphabet:
            raise LanguageError(f"letter {ast.symbol!r} is not in the alphabet {alphabet!r}")
        return letter_automaton(alphabet, ast.symbol)
    if isinstance(ast, Union):
        return union(compile_regex(ast.left, alphabet), compile_regex(ast.right, alphabet))
    if isinstance(ast, Concat):
        return concat(compile_regex(ast.left, alphabet), compile_regex(ast.right, alphabet))
    if isinstance(ast, Star):
        return star(compile_regex(ast.child, alphabet))
    raise TypeError(f"not a regex node: {ast!r}")


def regex_to_text(ast: Regex) -> str:
    """Render an AST back to surface syntax, fully parenthesized where needed."""
    if isinstance(ast, EmptySet):
        return "!"
    if isinstance(ast, Epsilon):
        return "&"
    if isinstance(ast, Letter):
        return ast.symbol
    if isinstance(ast, Union):
        return f"({regex_to_text(ast.left)}|{regex_to_text(ast.right)})"
    if isinstance(ast, Concat):
        return f"({regex_to_text(ast.left)}{regex_to_text(ast.right)})"
    if isinstance(ast, Star):
        return f"({regex_to_text(ast.child)})*"
    raise TypeError(f"not a regex node: {ast!r}")
