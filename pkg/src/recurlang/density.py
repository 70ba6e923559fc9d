"""Counting successful paths, and words per length of a regular language.

The density system replaces every letter set on an edge by its size.  For a
deterministic automaton each word has at most one successful path, so the
first function of that system is exactly the number of words of each length.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .automaton import CountingAutomaton, GeneralWeightedAutomaton
from .language import DEFAULT_MAX_STATES, LanguageAutomaton, determinize, is_deterministic
from .recurrence import RecurrenceSystem, evaluate, evaluate_matrix_power, evaluate_prefix
from .semiring import NATURALS, ProductSemiring


class NondeterministicError(ValueError):
    pass


def path_counting(source: CountingAutomaton) -> CountingAutomaton:
    """0/1 shadow over the naturals: edge weight 1 wherever the source has a non-zero weight."""
    K = source.semiring
    matrix = [[0 if K.is_zero(a) else 1 for a in row] for row in source.matrix]
    final = [0 if K.is_zero(c) else 1 for c in source.final]
    return CountingAutomaton(NATURALS, matrix, final, source.initial, source.names)


def self_counting(source: CountingAutomaton) -> CountingAutomaton:
    """Pair each weight with its path-counting shadow, over ``K x naturals``.

    The first coordinate of the behavior reproduces the source, the second
    counts successful paths.
    """
    shadow = path_counting(source)
    K = ProductSemiring(source.semiring, NATURALS)
    matrix = [
        [(a, b) for a, b in zip(row, shadow_row)]
        for row, shadow_row in zip(source.matrix, shadow.matrix)
    ]
    final = list(zip(source.final, shadow.final))
    return CountingAutomaton(K, matrix, final, source.initial, source.names)


def collapse_alphabet(source: GeneralWeightedAutomaton) -> CountingAutomaton:
    """Identify every letter with a single one: the matrix becomes the sum of all letter matrices."""
    K = source.semiring
    k = source.size
    matrix = [
        [K.sum(source.transitions[x][i][j] for x in source.alphabet) for j in range(k)]
        for i in range(k)
    ]
    return CountingAutomaton(K, matrix, source.final, source.initial)


@dataclass(frozen=True)
class DensitySystem:
    system: RecurrenceSystem
    source: LanguageAutomaton


def density_system(source: LanguageAutomaton, require_deterministic: bool = True) -> DensitySystem:
    """Naturals-valued system with coefficients ``|L_ij|`` and seeds ``|c_i|``.

    On a nondeterministic automaton the first function only bounds the word
    count from above; pass ``require_deterministic=False`` to get it anyway.
    """
    if require_deterministic and not is_deterministic(source):
        raise NondeterministicError("automaton is not deterministic; determinize it first")
    coefficients = [[len(cell) for cell in row] for row in source.letters]
    initial = [1 if f else 0 for f in source.final]
    return DensitySystem(RecurrenceSystem(NATURALS, coefficients, initial, source.names), source)


def _deterministic(source: LanguageAutomaton, max_states: int) -> LanguageAutomaton:
    return source if is_deterministic(source) else determinize(source, max_states)


def density(
    source: LanguageAutomaton,
    n: int,
    matrix_power: bool = True,
    max_states: int = DEFAULT_MAX_STATES,
) -> int:
    """Number of words of length n; nondeterministic inputs are determinized first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    system = density_system(_deterministic(source, max_states)).system
    values = evaluate_matrix_power(system, n) if matrix_power else evaluate(system, n)
    return values[0]


def density_prefix(source: LanguageAutomaton, N: int, max_states: int = DEFAULT_MAX_STATES) -> list[int]:
    """``[density(source, n) for n in 0..N]`` in one sweep."""
    if N < 0:
        raise ValueError("N must be non-negative")
    system = density_system(_deterministic(source, max_states)).system
    return [v[0] for v in evaluate_prefix(system, N)]


# -- growth classification --------------------------------------------------

@dataclass(frozen=True)
class Growth:
    """Heuristic density class read off a finite prefix."""

    kind: str  # "zero" | "bounded" | "polynomial" | "exponential"
    degree: int | None = None
    base: float | None = None

    def __str__(self):
        label = f"polynomial({self.degree})" if self.kind == "polynomial" else self.kind
        return f"{label} (heuristic)"


RATIO_TOLERANCE = 0.01
DEFAULT_WINDOW = 16


def _differences(xs):
    return [b - a for a, b in zip(xs, xs[1:])]


def _polynomial_degree(tail) -> int | None:
    """Smallest d whose d-th differences are a non-zero constant over ``tail``."""
    diffs = list(tail)
    for d in range(len(tail) - 3):
        if len(set(diffs)) == 1:
            return d if diffs[0] != 0 else None
        diffs = _differences(diffs)
    return None


def _steady_ratio(values) -> float | None:
    """Common ratio of consecutive entries, if all agree to within 1% and exceed 1."""
    if len(values) < 2 or any(v == 0 for v in values):
        return None
    ratios = [b / a for a, b in zip(values, values[1:])]
    c = ratios[-1]
    if c > 1 + RATIO_TOLERANCE and all(abs(r - c) <= RATIO_TOLERANCE * c for r in ratios):
        return c
    return None


def _zero_period(tail) -> int | None:
    pattern = [v == 0 for v in tail]
    for p in range(2, len(tail) // 3 + 1):
        if all(pattern[i] == pattern[i + p] for i in range(len(tail) - p)):
            return p
    return None


def estimate_growth(prefix: Sequence[int], window: int = DEFAULT_WINDOW) -> Growth:
    """Classify a density prefix as zero, bounded, polynomial or exponential.

    Looks only at the last ``2 * window + 4`` entries.  Exact integer finite
    differences are tried before ratios, since slowly growing polynomials
    also have ratios close to a constant.  Periodic gaps (entries that are
    zero on a fixed period) are handled by looking at one residue class.
    """
    need = 2 * window + 4
    if len(prefix) < need:
        raise ValueError(f"prefix of length {len(prefix)} is shorter than {need}")
    tail = list(prefix[-need:])
    last, prev = tail[-window:], tail[-2 * window:-window]
    if not any(last):
        return Growth("zero")
    if max(last) <= max(prev):
        return Growth("bounded")

    period = 1 if all(tail) else _zero_period(tail)
    if period is not None:
        start = next(i for i, v in enumerate(tail) if v)
        strand = tail[start::period]
        degree = _polynomial_degree(strand)
        if degree is not None:
            return Growth("bounded") if degree == 0 else Growth("polynomial", degree)
        window_strand = strand[-max(window // period, 2):]
        base = _steady_ratio(window_strand)
        if base is not None:
            return Growth("exponential", base=base ** (1 / period))

    # fallback: fit an exponent to the growth of the window maxima
    n = len(prefix) - 1
    g = max(last) / max(max(prev), 1)
    d = math.log(g) / math.log(n / max(n - window, 1))
    if d > window / 2:
        return Growth("exponential", base=g ** (1 / window))
    return Growth("polynomial", max(1, round(d)))
