"""Counting automata over sets of letters, read as recognizers of regular languages.

Evaluating the system ``f_i(n+1) = U_j L_ij . f_j(n)`` from the initial
state yields exactly the words of length n in the language, so the language
comes split into its cross-sections for free.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .automaton import CountingAutomaton, ResourceLimit, freeze_matrix
from .semiring import EPSILON, LanguageSemiring

DEFAULT_MAX_WORDS = 10**6
DEFAULT_MAX_STATES = 20


class LanguageError(ValueError):
    pass


class AlphabetError(LanguageError):
    pass


@dataclass(frozen=True)
class LanguageAutomaton:
    """Counting automaton whose weights are letter sets; state 0 is initial.

    ``letters[i][j]`` is the frozenset of letters on the edge i -> j (empty
    means no edge) and ``final[i]`` says whether state i carries final weight
    ``{eps}``.
    """

    alphabet: str
    letters: tuple
    final: tuple
    names: tuple | None = None

    def __post_init__(self):
        rows = freeze_matrix(tuple(frozenset(x) for x in row) for row in self.letters)
        object.__setattr__(self, "letters", rows)
        object.__setattr__(self, "final", tuple(bool(f) for f in self.final))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
        problems = self.validate()
        if problems:
            raise LanguageError("; ".join(problems))

    def validate(self) -> list[str]:
        problems = []
        k = len(self.final)
        if k < 1:
            problems.append("automaton needs at least one state")
        if len(set(self.alphabet)) != len(self.alphabet):
            problems.append(f"alphabet has repeated symbols: {self.alphabet!r}")
        if len(self.letters) != k or any(len(row) != k for row in self.letters):
            problems.append(f"transition matrix is not {k}x{k}")
        sigma = set(self.alphabet)
        for i, row in enumerate(self.letters):
            for j, cell in enumerate(row):
                if not cell <= sigma:
                    problems.append(f"edge {i}->{j} has letters {sorted(cell - sigma)} outside the alphabet")
        if self.names is not None and (len(self.names) != k or len(set(self.names)) != k):
            problems.append("state names must be unique, one per state")
        return problems

    @classmethod
    def build(
        cls,
        alphabet: str,
        size: int,
        edges: Mapping[tuple[int, int], Iterable[str]],
        finals: Iterable[int],
        names=None,
    ) -> LanguageAutomaton:
        """Convenience constructor from a sparse ``{(i, j): letters}`` map."""
        letters = [[frozenset()] * size for _ in range(size)]
        for (i, j), ls in edges.items():
            letters[i][j] = letters[i][j] | frozenset(ls)
        finals = set(finals)
        return cls(alphabet, letters, [i in finals for i in range(size)], names)

    @classmethod
    def from_counting(cls, automaton: CountingAutomaton) -> LanguageAutomaton:
        K = automaton.semiring
        if not isinstance(K, LanguageSemiring):
            raise LanguageError("automaton is not over a language semiring")
        if automaton.initial != 0:
            raise LanguageError("the initial state must be the first state")
        for i, w in enumerate(automaton.final):
            if w not in (K.zero, K.one):
                raise LanguageError(f"final weight of state {i} must be empty or {{eps}}, got {sorted(w)}")
        for row in automaton.matrix:
            for cell in row:
                if any(len(w) != 1 for w in cell):
                    raise LanguageError("transition weights must be sets of single letters")
        return cls(K.alphabet, automaton.matrix, [w == K.one for w in automaton.final], automaton.names)

    @property
    def semiring(self) -> LanguageSemiring:
        return LanguageSemiring(self.alphabet)

    @property
    def size(self) -> int:
        return len(self.final)

    @property
    def final_states(self) -> frozenset:
        return frozenset(i for i, f in enumerate(self.final) if f)

    def state_names(self) -> tuple:
        return self.names if self.names is not None else tuple(f"q{i + 1}" for i in range(self.size))

    def counting(self) -> CountingAutomaton:
        K = self.semiring
        return CountingAutomaton(
            K, self.letters, [K.one if f else K.zero for f in self.final], 0, self.names
        )

    def edges(self):
        """Yield ``(i, j, letters)`` for every non-empty edge in index order."""
        for i, row in enumerate(self.letters):
            for j, cell in enumerate(row):
                if cell:
                    yield i, j, cell


@dataclass(frozen=True)
class CrossSection:
    n: int
    words: tuple

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return word in self.words

    def as_set(self) -> frozenset:
        return frozenset(self.words)


def _step(A: LanguageAutomaton, vector):
    out = []
    for row in A.letters:
        acc = set()
        for cell, words in zip(row, vector):
            if cell and words:
                acc.update(a + w for a in cell for w in words)
        out.append(frozenset(acc))
    return out


def _check_guard(vector, max_words):
    total = sum(len(v) for v in vector)
    if total > max_words:
        raise ResourceLimit(f"{total} intermediate words exceed the limit of {max_words}")


def _sections(A: LanguageAutomaton, N: int, max_words: int):
    vector = [frozenset({EPSILON}) if f else frozenset() for f in A.final]
    yield vector[0]
    for _ in range(N):
        vector = _step(A, vector)
        _check_guard(vector, max_words)
        yield vector[0]


def _section(A: LanguageAutomaton, n: int, words) -> CrossSection:
    return CrossSection(n, tuple(A.semiring.sorted(words)))


def cross_section(A: LanguageAutomaton, n: int, max_words: int = DEFAULT_MAX_WORDS) -> CrossSection:
    """Words of length n recognized by ``A``, sorted in alphabet order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    words = frozenset()
    for words in _sections(A, n, max_words):
        pass
    return _section(A, n, words)


def enumerate_up_to(A: LanguageAutomaton, N: int, max_words: int = DEFAULT_MAX_WORDS) -> list[CrossSection]:
    if N < 0:
        raise ValueError("N must be non-negative")
    return [_section(A, n, words) for n, words in enumerate(_sections(A, N, max_words))]


def member(A: LanguageAutomaton, word: str) -> bool:
    """Scan ``word`` left to right tracking the set of reachable states."""
    bad = set(word) - set(A.alphabet)
    if bad:
        raise AlphabetError(f"symbols {sorted(bad)} are not in the alphabet {A.alphabet!r}")
    current = {0}
    for c in word:
        current = {j for i in current for j in range(A.size) if c in A.letters[i][j]}
        if not current:
            return False
    return any(A.final[i] for i in current)


def is_deterministic(A: LanguageAutomaton) -> bool:
    for row in A.letters:
        seen: set = set()
        for cell in row:
            if seen & cell:
                return False
            seen |= cell
    return True


def determinize(A: LanguageAutomaton, max_states: int = DEFAULT_MAX_STATES) -> LanguageAutomaton:
    """Subset construction over reachable state sets only.

    Subsets are numbered in breadth-first discovery order, exploring letters
    in alphabet order, so the output is reproducible.
    """
    if A.size > max_states:
        raise ResourceLimit(f"{A.size} states exceed the determinization guard of {max_states}")
    start = frozenset({0})
    index = {start: 0}
    order = [start]
    edges: dict[tuple[int, int], set] = {}
    queue = deque([start])
    while queue:
        S = queue.popleft()
        for a in A.alphabet:
            T = frozenset(j for i in S for j in range(A.size) if a in A.letters[i][j])
            if not T:
                continue
            if T not in index:
                index[T] = len(order)
                order.append(T)
                queue.append(T)
            edges.setdefault((index[S], index[T]), set()).add(a)
    finals = [i for i, S in enumerate(order) if any(A.final[q] for q in S)]
    return LanguageAutomaton.build(A.alphabet, len(order), edges, finals)


# -- grammars ---------------------------------------------------------------

@dataclass(frozen=True)
class Production:
    """``source -> terminal target``, or ``source -> eps`` when terminal is None."""

    source: int
    terminal: str | None = None
    target: int | None = None

    @property
    def is_epsilon(self) -> bool:
        return self.terminal is None


@dataclass(frozen=True)
class RegularGrammar:
    """Right-linear grammar; nonterminal 0 is the start symbol ``S``."""

    nonterminals: tuple
    terminals: str
    productions: tuple

    def sorted_productions(self) -> list[Production]:
        rank = {c: i for i, c in enumerate(self.terminals)}

        def key(p):
            if p.is_epsilon:
                return (p.source, len(rank), -1)
            return (p.source, rank[p.terminal], p.target)

        return sorted(set(self.productions), key=key)

    def to_text(self) -> str:
        lines = []
        for p in self.sorted_productions():
            lhs = self.nonterminals[p.source]
            rhs = "eps" if p.is_epsilon else f"{p.terminal} {self.nonterminals[p.target]}"
            lines.append(f"{lhs} -> {rhs}")
        return "\n".join(lines) + ("\n" if lines else "")


def nonterminal_names(k: int) -> tuple:
    return ("S",) + tuple(f"A{i + 1}" for i in range(1, k))


def to_grammar(A: LanguageAutomaton) -> RegularGrammar:
    prods = []
    for i, j, cell in A.edges():
        prods.extend(Production(i, a, j) for a in cell)
    prods.extend(Production(i) for i in range(A.size) if A.final[i])
    g = RegularGrammar(nonterminal_names(A.size), A.alphabet, tuple(prods))
    return RegularGrammar(g.nonterminals, g.terminals, tuple(g.sorted_productions()))


def parse_grammar(text: str, terminals: str) -> RegularGrammar:
    """Read the ``X -> a Y`` / ``X -> eps`` line format back into a grammar.

    Nonterminals are numbered in order of first appearance, with ``S`` first.
    """
    names: list[str] = ["S"]
    prods = []

    def idx(name):
        if name not in names:
            names.append(name)
        return names.index(name)

    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        lhs, sep, rhs = line.partition("->")
        if not sep:
            raise LanguageError(f"line {lineno}: missing '->'")
        lhs, parts = lhs.strip(), rhs.split()
        if parts == ["eps"]:
            prods.append(Production(idx(lhs)))
        elif len(parts) == 2 and len(parts[0]) == 1 and parts[0] in terminals:
            source = idx(lhs)
            prods.append(Production(source, parts[0], idx(parts[1])))
        else:
            raise LanguageError(f"line {lineno}: not a right-linear production: {line!r}")
    return RegularGrammar(tuple(names), terminals, tuple(prods))


def grammar_generate(grammar: RegularGrammar, n: int, max_forms: int = DEFAULT_MAX_WORDS) -> frozenset:
    """All words of length n derivable from ``S``, by breadth-first derivation.

    Sentential forms are ``(prefix, nonterminal)`` pairs; after n letter
    steps the final step must be an epsilon production.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    step: dict[int, list[tuple[str, int]]] = {}
    ends = set()
    for p in grammar.productions:
        if p.is_epsilon:
            ends.add(p.source)
        else:
            step.setdefault(p.source, []).append((p.terminal, p.target))
    forms = {(EPSILON, 0)}
    for _ in range(n):
        forms = {(prefix + a, B) for prefix, A in forms for a, B in step.get(A, ())}
        if len(forms) > max_forms:
            raise ResourceLimit(f"{len(forms)} sentential forms exceed the limit of {max_forms}")
    return frozenset(prefix for prefix, A in forms if A in ends)
