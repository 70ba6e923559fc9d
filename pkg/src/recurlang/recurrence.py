"""Systems of first-order linear recurrences and their counting automata.

A system ``f_i(n+1) = sum_j a_ij f_j(n)`` with ``f_i(0) = c_i`` is the same
data as a counting automaton whose transition matrix is ``a`` and whose final
weights are ``c``; the conversions here are therefore exact inverses.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .automaton import CountingAutomaton, freeze_matrix, identity_matrix, mat_mul, mat_vec
from .semiring import BooleanSemiring, NaturalSemiring, Semiring


class RecurrenceError(ValueError):
    pass


class SeedCountError(RecurrenceError):
    pass


@dataclass(frozen=True)
class RecurrenceSystem:
    semiring: Semiring
    coefficients: tuple
    initial_values: tuple
    labels: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "coefficients", freeze_matrix(self.coefficients))
        object.__setattr__(self, "initial_values", tuple(self.initial_values))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        k = len(self.initial_values)
        if len(self.coefficients) != k or any(len(r) != k for r in self.coefficients):
            raise RecurrenceError(f"coefficient matrix is not {k}x{k}")
        if self.labels is not None and len(self.labels) != k:
            raise RecurrenceError(f"{len(self.labels)} labels for {k} functions")

    @property
    def size(self) -> int:
        return len(self.initial_values)

    def function_labels(self) -> tuple:
        return self.labels if self.labels is not None else tuple(f"f{i + 1}" for i in range(self.size))


def automaton_to_recurrence(automaton: CountingAutomaton) -> RecurrenceSystem:
    """One function per state: coefficients are transition weights, seeds are final weights.

    Function order follows state order, so function ``initial`` is the one
    whose values give the automaton's behavior.
    """
    return RecurrenceSystem(
        automaton.semiring, automaton.matrix, automaton.final, automaton.names
    )


def recurrence_to_automaton(system: RecurrenceSystem, initial: int = 0) -> CountingAutomaton:
    return CountingAutomaton(
        system.semiring, system.coefficients, system.initial_values, initial, system.labels
    )


def evaluate(system: RecurrenceSystem, n: int) -> tuple:
    """Return ``(f_1(n), ..., f_k(n))`` by stepping the system n times."""
    if n < 0:
        raise ValueError("n must be non-negative")
    v = system.initial_values
    for _ in range(n):
        v = mat_vec(system.semiring, system.coefficients, v)
    return v


def evaluate_prefix(system: RecurrenceSystem, n: int) -> list[tuple]:
    """Value vectors for 0..n in a single sweep."""
    if n < 0:
        raise ValueError("n must be non-negative")
    v = system.initial_values
    out = [v]
    for _ in range(n):
        v = mat_vec(system.semiring, system.coefficients, v)
        out.append(v)
    return out


def matrix_power(K: Semiring, M, n: int):
    result = identity_matrix(K, len(M))
    base = M
    while n:
        if n & 1:
            result = mat_mul(K, result, base)
        n >>= 1
        if n:
            base = mat_mul(K, base, base)
    return result


def evaluate_matrix_power(system: RecurrenceSystem, n: int) -> tuple:
    """Compute ``M^n c`` by square-and-multiply.  Only for naturals and Booleans."""
    if not isinstance(system.semiring, (NaturalSemiring, BooleanSemiring)):
        raise TypeError("matrix-power evaluation is restricted to naturals and Booleans")
    if n < 0:
        raise ValueError("n must be non-negative")
    return mat_vec(system.semiring, matrix_power(system.semiring, system.coefficients, n),
                   system.initial_values)


# -- higher-degree systems --------------------------------------------------

@dataclass(frozen=True)
class HigherDegreeEquation:
    """``f_target(n + degree) = sum_j row[j] f_j(n)`` with seeds ``f_target(0..degree-1)``."""

    target: int
    degree: int
    row: tuple
    seeds: tuple

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(self.row))
        object.__setattr__(self, "seeds", tuple(self.seeds))


@dataclass(frozen=True)
class HigherDegreeSystem:
    semiring: Semiring
    equations: tuple
    labels: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def size(self) -> int:
        return len(self.equations)

    def validate(self) -> list[str]:
        problems = []
        k = self.size
        targets = sorted(eq.target for eq in self.equations)
        if targets != list(range(k)):
            problems.append("each function must be the target of exactly one equation")
        for eq in self.equations:
            if eq.degree < 1:
                problems.append(f"f{eq.target + 1}: degree must be at least 1")
            if len(eq.row) != k:
                problems.append(f"f{eq.target + 1}: coefficient row has {len(eq.row)} entries, expected {k}")
        return problems


@dataclass(frozen=True)
class Reduction:
    """A first-order system plus where each original and auxiliary function landed.

    ``auxiliaries[(i, t)]`` is the index of the t-th helper (t = 1..d-1) created
    for original function i, whose value at n is ``f_i(n + t)``.
    """

    system: RecurrenceSystem
    originals: tuple
    auxiliaries: dict = field(default_factory=dict)


def reduce_to_first_order(system: HigherDegreeSystem) -> Reduction:
    """Chain d-1 helpers behind every degree-d equation.

    ``f(n+1) = g_1(n)``, ``g_t(n+1) = g_{t+1}(n)`` and ``g_{d-1}(n+1)`` gets the
    original right-hand side.  Helpers are appended after the original
    functions, ordered by original index then chain position.
    """
    problems = system.validate()
    if problems:
        raise RecurrenceError("; ".join(problems))
    K = system.semiring
    eqs = sorted(system.equations, key=lambda e: e.target)
    for eq in eqs:
        if len(eq.seeds) != eq.degree:
            raise SeedCountError(
                f"f{eq.target + 1} has degree {eq.degree} but {len(eq.seeds)} seeds"
            )
    k = len(eqs)
    aux: dict[tuple[int, int], int] = {}
    for eq in eqs:
        for t in range(1, eq.degree):
            aux[(eq.target, t)] = k + len(aux)
    total = k + len(aux)

    def unit_row(j):
        return tuple(K.one if c == j else K.zero for c in range(total))

    def widen(row):
        return tuple(row) + (K.zero,) * (total - k)

    rows: list = [None] * total
    init: list = [None] * total
    base_labels = system.labels or tuple(f"f{i + 1}" for i in range(k))
    labels: list = list(base_labels) + [None] * len(aux)
    for eq in eqs:
        i, d = eq.target, eq.degree
        init[i] = eq.seeds[0]
        if d == 1:
            rows[i] = widen(eq.row)
            continue
        rows[i] = unit_row(aux[(i, 1)])
        for t in range(1, d):
            idx = aux[(i, t)]
            init[idx] = eq.seeds[t]
            labels[idx] = f"{base_labels[i]}_g{t}"
            rows[idx] = unit_row(aux[(i, t + 1)]) if t < d - 1 else widen(eq.row)
    if system.labels is None and not aux:
        labels = None
    reduced = RecurrenceSystem(K, rows, init, labels)
    return Reduction(reduced, tuple(range(k)), aux)


def first_order_as_higher(system: RecurrenceSystem) -> HigherDegreeSystem:
    """Wrap a first-order system as a higher-degree system with every degree 1."""
    eqs = [
        HigherDegreeEquation(i, 1, system.coefficients[i], (system.initial_values[i],))
        for i in range(system.size)
    ]
    return HigherDegreeSystem(system.semiring, eqs, system.labels)


def evaluate_originals(reduction: Reduction, n: int) -> tuple:
    values = evaluate(reduction.system, n)
    return tuple(values[i] for i in reduction.originals)

