"""Counting automata: weighted automata over a one-letter alphabet.

States are indexed from 0; state 0 is the conventional initial state but any
index may be chosen.  The sole letter is implicit, so a transition is just a
weight in the transition matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .semiring import Semiring

Matrix = tuple  # tuple of row tuples
Path = tuple  # tuple of state indices (q_0, ..., q_n)

DEFAULT_PATH_GUARD = 16
DEFAULT_PATH_LIMIT = 10**6


class AutomatonError(ValueError):
    pass


class InvalidPath(AutomatonError):
    pass


class ResourceLimit(RuntimeError):
    """A brute-force computation would exceed its configured guard."""


def freeze_matrix(rows) -> Matrix:
    return tuple(tuple(row) for row in rows)


def mat_vec(K: Semiring, M: Matrix, v: Sequence) -> tuple:
    out = []
    for row in M:
        acc = K.zero
        for a, x in zip(row, v):
            if K.is_zero(a):
                continue
            acc = K.add(acc, K.mul(a, x))
        out.append(acc)
    return tuple(out)


def mat_mul(K: Semiring, A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    return tuple(
        tuple(K.sum(K.mul(a, b) for a, b in zip(row, col)) for col in cols) for row in A
    )


def identity_matrix(K: Semiring, k: int) -> Matrix:
    return tuple(tuple(K.one if i == j else K.zero for j in range(k)) for i in range(k))


def validate_components(
    K: Semiring, matrix, final_weights, initial_weights, names=None
) -> list[str]:
    """Check raw automaton parts, returning every violation found.

    ``initial_weights`` is the full initial-weight vector; it must contain
    exactly one ``one`` and zeros elsewhere.
    """
    problems = []
    k = len(final_weights)
    if k < 1:
        problems.append("automaton needs at least one state")
    if len(matrix) != k or any(len(row) != k for row in matrix):
        shape = f"{len(matrix)}x{max((len(r) for r in matrix), default=0)}"
        problems.append(f"matrix shape {shape} does not match {k} states")
    if len(initial_weights) != k:
        problems.append(f"{len(initial_weights)} initial weights for {k} states")
    initial = [i for i, w in enumerate(initial_weights) if not K.is_zero(w)]
    if len(initial) > 1:
        problems.append(f"multiple initial states: {initial}")
    elif not initial:
        problems.append("no initial state")
    if any(not K.is_zero(w) and not K.eq(w, K.one) for w in initial_weights):
        problems.append("initial weights must be zero or one")
    if names is not None:
        if len(names) != k:
            problems.append(f"{len(names)} state names for {k} states")
        if len(set(names)) != len(names):
            problems.append("state names are not unique")
    return problems


@dataclass(frozen=True)
class CountingAutomaton:
    """Weighted automaton over a one-letter alphabet.

    ``matrix[i][j]`` is the weight of the transition from state i to state j,
    ``final[i]`` the final weight of state i (zero means non-final), and
    ``initial`` the index of the unique initial state.
    """

    semiring: Semiring
    matrix: Matrix
    final: tuple
    initial: int = 0
    names: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", freeze_matrix(self.matrix))
        object.__setattr__(self, "final", tuple(self.final))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))

    @classmethod
    def from_weights(cls, semiring, matrix, final, initial_weights, names=None):
        problems = validate_components(semiring, matrix, final, initial_weights, names)
        if problems:
            raise AutomatonError("; ".join(problems))
        initial = next(i for i, w in enumerate(initial_weights) if not semiring.is_zero(w))
        return cls(semiring, matrix, final, initial, names)

    @property
    def size(self) -> int:
        return len(self.final)

    @property
    def initial_weights(self) -> tuple:
        K = self.semiring
        return tuple(K.one if i == self.initial else K.zero for i in range(self.size))

    @property
    def final_states(self) -> frozenset:
        return frozenset(i for i, w in enumerate(self.final) if not self.semiring.is_zero(w))

    def state_names(self) -> tuple:
        return self.names if self.names is not None else tuple(f"q{i + 1}" for i in range(self.size))

    def validate(self) -> list[str]:
        # an out-of-range initial index gives an all-zero vector: "no initial state"
        return validate_components(
            self.semiring, self.matrix, self.final, self.initial_weights, self.names
        )

    def check(self) -> "CountingAutomaton":
        problems = self.validate()
        if problems:
            raise AutomatonError("; ".join(problems))
        return self

    def has_edge(self, i: int, j: int) -> bool:
        return not self.semiring.is_zero(self.matrix[i][j])

    def successors(self, i: int) -> list[int]:
        return [j for j in range(self.size) if self.has_edge(i, j)]


def _check_path(automaton: CountingAutomaton, path: Path):
    if not path:
        raise InvalidPath("a path has at least one state")
    k = automaton.size
    for q in path:
        if not 0 <= q < k:
            raise InvalidPath(f"state {q} out of range")
    for p, q in zip(path, path[1:]):
        if not automaton.has_edge(p, q):
            raise InvalidPath(f"no transition {p} -> {q}")


def path_weight(automaton: CountingAutomaton, path: Path) -> Any:
    """Return iota(q_0) * a_1 * ... * a_n * phi(q_n), multiplied left to right."""
    _check_path(automaton, path)
    K = automaton.semiring
    w = automaton.initial_weights[path[0]]
    for p, q in zip(path, path[1:]):
        w = K.mul(w, automaton.matrix[p][q])
    return K.mul(w, automaton.final[path[-1]])


def state_behavior(automaton: CountingAutomaton, state: int, n: int) -> Any:
    """Total weight of length-n paths starting at ``state`` (initial weight taken as one)."""
    if not 0 <= state < automaton.size:
        raise AutomatonError(f"state {state} out of range")
    return behavior_vector(automaton, n)[state]


def behavior_vector(automaton: CountingAutomaton, n: int) -> tuple:
    """State behaviors of every state at length n, i.e. M^n applied to the final weights."""
    if n < 0:
        raise ValueError("n must be non-negative")
    v = automaton.final
    for _ in range(n):
        v = mat_vec(automaton.semiring, automaton.matrix, v)
    return v


def behavior(automaton: CountingAutomaton, n: int) -> Any:
    return behavior_vector(automaton, n)[automaton.initial]


def enumerate_successful_paths(
    automaton: CountingAutomaton,
    n: int,
    max_length: int = DEFAULT_PATH_GUARD,
    max_paths: int = DEFAULT_PATH_LIMIT,
) -> list[Path]:
    """Brute-force list of successful paths of length n, in lexicographic order.

    Intended as a test oracle only; refuses lengths above ``max_length`` and
    stops once more than ``max_paths`` partial paths would be held.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_length:
        raise ResourceLimit(f"path length {n} exceeds guard {max_length}")
    finals = automaton.final_states
    succ = [automaton.successors(i) for i in range(automaton.size)]
    out: list[Path] = []
    stack = [(automaton.initial,)]
    while stack:
        path = stack.pop()
        if len(path) == n + 1:
            if path[-1] in finals:
                out.append(path)
                if len(out) > max_paths:
                    raise ResourceLimit(f"more than {max_paths} paths")
            continue
        for j in reversed(succ[path[-1]]):
            stack.append(path + (j,))
        if len(stack) > max_paths:
            raise ResourceLimit(f"more than {max_paths} partial paths")
    return out


@dataclass(frozen=True)
class GeneralWeightedAutomaton:
    """Weighted automaton over an arbitrary finite alphabet, one matrix per letter."""

    semiring: Semiring
    alphabet: tuple
    transitions: dict
    final: tuple
    initial: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "final", tuple(self.final))
        object.__setattr__(
            self, "transitions", {x: freeze_matrix(m) for x, m in self.transitions.items()}
        )

    @property
    def size(self) -> int:
        return len(self.final)

    def validate(self) -> list[str]:
        problems = []
        k = self.size
        if set(self.transitions) != set(self.alphabet):
            problems.append("need exactly one transition matrix per letter")
        for x, m in self.transitions.items():
            if len(m) != k or any(len(row) != k for row in m):
                problems.append(f"matrix for {x!r} is not {k}x{k}")
        if not 0 <= self.initial < k:
            problems.append("initial state out of range")
        return problems
