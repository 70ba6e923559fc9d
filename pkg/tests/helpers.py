"""Independent oracles and random instance builders shared by the tests.

Nothing here calls the evaluation code under test: regexes are judged by
plain set semantics, path counts by explicit enumeration of state
sequences, and recurrences by direct unrolling.
"""
import itertools
import random

from recurlang.automaton import CountingAutomaton
from recurlang.closure import Concat, EmptySet, Epsilon, Letter, Star, Union
from recurlang.language import LanguageAutomaton
from recurlang.semiring import NATURALS, LanguageSemiring


def ab_star_a_star():
    """The two-state machine for (ab*a)*: f1 -a-> f2, f2 -a-> f1, f2 -b-> f2, f1 final."""
    return LanguageAutomaton.build("ab", 2, {(0, 1): "a", (1, 0): "a", (1, 1): "b"}, [0])


def two_bs():
    """Deterministic machine for a*ba*ba*: loops on a, advances on b, third state final."""
    return LanguageAutomaton.build(
        "ab", 3, {(0, 0): "a", (0, 1): "b", (1, 1): "a", (1, 2): "b", (2, 2): "a"}, [2]
    )


def ab_star_a():
    """ab*a without the outer star: f1 -a-> f2, f2 -b-> f2, f2 -a-> f3, f3 final."""
    return LanguageAutomaton.build("ab", 3, {(0, 1): "a", (1, 1): "b", (1, 2): "a"}, [2])


def all_words(alphabet, n):
    return ["".join(p) for p in itertools.product(alphabet, repeat=n)]


def fibonacci(n):
    """F_0 = 0, F_1 = 1, by a plain loop."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# -- reference regex semantics ------------------------------------------------

def regex_words(ast, alphabet, max_len):
    """All words of length <= max_len in the language of ``ast``, by set semantics."""
    if isinstance(ast, EmptySet):
        return set()
    if isinstance(ast, Epsilon):
        return {""}
    if isinstance(ast, Letter):
        return {ast.symbol} if max_len >= 1 else set()
    if isinstance(ast, Union):
        return regex_words(ast.left, alphabet, max_len) | regex_words(ast.right, alphabet, max_len)
    if isinstance(ast, Concat):
        left = regex_words(ast.left, alphabet, max_len)
        right = regex_words(ast.right, alphabet, max_len)
        return {u + v for u in left for v in right if len(u) + len(v) <= max_len}
    if isinstance(ast, Star):
        base = regex_words(ast.child, alphabet, max_len) - {""}
        result = {""}
        frontier = {""}
        while frontier:
            frontier = {u + v for u in frontier for v in base if len(u) + len(v) <= max_len} - result
            result |= frontier
        return result
    raise TypeError(ast)


def brute_force_section(ast, alphabet, n):
    """Filter every word of length n through the reference semantics."""
    language = regex_words(ast, alphabet, n)
    return {w for w in all_words(alphabet, n) if w in language}


def random_regex(rng, alphabet, depth):
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.08:
            return EmptySet()
        if r < 0.16:
            return Epsilon()
        return Letter(rng.choice(alphabet))
    kind = rng.choice(["union", "concat", "concat", "star"])
    if kind == "star":
        return Star(random_regex(rng, alphabet, depth - 1))
    left = random_regex(rng, alphabet, depth - 1)
    right = random_regex(rng, alphabet, depth - 1)
    return Union(left, right) if kind == "union" else Concat(left, right)


# -- random automata ------------------------------------------------------------

def random_language_automaton(rng, alphabet="ab", max_states=4, density=0.4):
    k = rng.randint(1, max_states)
    letters = [
        [frozenset(a for a in alphabet if rng.random() < density) for _ in range(k)] for _ in range(k)
    ]
    final = [rng.random() < 0.4 for _ in range(k)]
    return LanguageAutomaton(alphabet, letters, final)


def random_nondeterministic(rng, alphabet="ab", max_states=4):
    """Random letter automaton that shares at least one letter between two edges of one state."""
    while True:
        A = random_language_automaton(rng, alphabet, max_states, density=0.5)
        if A.size >= 2 and not _is_det(A):
            return A


def _is_det(A):
    for row in A.letters:
        seen = []
        for cell in row:
            seen.extend(cell)
        if len(seen) != len(set(seen)):
            return False
    return True


def random_natural_automaton(rng, max_states=5, max_weight=3, zero_rate=0.5):
    k = rng.randint(1, max_states)
    matrix = [[0 if rng.random() < zero_rate else rng.randint(1, max_weight) for _ in range(k)] for _ in range(k)]
    final = [0 if rng.random() < 0.5 else rng.randint(1, max_weight) for _ in range(k)]
    return CountingAutomaton(NATURALS, matrix, final, rng.randrange(k))


def random_letter_counting_automaton(rng, alphabet="ab", max_states=5, density=0.4):
    """Letter-set automaton seen as a generic counting automaton, with a random initial state."""
    A = random_language_automaton(rng, alphabet, max_states, density)
    K = LanguageSemiring(alphabet)
    final = [K.one if f else K.zero for f in A.final]
    return CountingAutomaton(K, A.letters, final, rng.randrange(A.size))


def random_01_automaton(rng, max_states=6):
    return random_natural_automaton(rng, max_states, max_weight=1)


# -- brute-force path oracles ---------------------------------------------------

def count_paths_by_sequences(automaton, n):
    """Count state sequences of length n+1 from the initial state to a final state along non-zero edges."""
    K = automaton.semiring
    k = automaton.size
    total = 0
    for rest in itertools.product(range(k), repeat=n):
        seq = (automaton.initial,) + rest
        if all(not K.is_zero(automaton.matrix[p][q]) for p, q in zip(seq, seq[1:])) and not K.is_zero(
            automaton.final[seq[-1]]
        ):
            total += 1
    return total


def state_behavior_by_paths(automaton, state, n):
    """Sum over all length-n state sequences from ``state`` of the product of weights times final weight."""
    K = automaton.semiring
    k = automaton.size
    total = K.zero
    for rest in itertools.product(range(k), repeat=n):
        seq = (state,) + rest
        w = K.one
        for p, q in zip(seq, seq[1:]):
            w = K.mul(w, automaton.matrix[p][q])
        total = K.add(total, K.mul(w, automaton.final[seq[-1]]))
    return total


def unroll_higher_degree(system, N):
    """Values f_i(0..N) straight from f_i(n + d) = sum_j a_ij f_j(n) and the seeds."""
    K = system.semiring
    eqs = {eq.target: eq for eq in system.equations}
    k = len(eqs)
    values = [[None] * (N + 1) for _ in range(k)]
    for n in range(N + 1):
        for i, eq in eqs.items():
            if n < eq.degree:
                values[i][n] = eq.seeds[n]
            else:
                m = n - eq.degree
                values[i][n] = K.sum(K.mul(eq.row[j], values[j][m]) for j in range(k))
    return values


def make_rng(seed):
    return random.Random(seed)
