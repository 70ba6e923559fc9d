"""Semirings used as weights and coefficients, plus truncated one-letter power series.

Elements are plain Python values: ``bool`` for the Boolean semiring, ``int`` for
the naturals, ``frozenset`` of ``str`` words for languages, and 2-tuples for
direct products.  Every semiring object is stateless apart from its
configuration, so values and semirings can be shared freely between threads.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

EPSILON = ""


class SemiringError(ValueError):
    pass


class LengthMismatch(SemiringError):
    pass


class Semiring:
    """Interface: ``zero``, ``one``, ``add``, ``mul`` and element equality."""

    name = "semiring"

    @property
    def zero(self) -> Any:
        raise NotImplementedError

    @property
    def one(self) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def sum(self, items: Iterable) -> Any:
        total = self.zero
        for item in items:
            total = self.add(total, item)
        return total

    def product(self, items: Iterable) -> Any:
        total = self.one
        for item in items:
            total = self.mul(total, item)
        return total


@dataclass(frozen=True)
class BooleanSemiring(Semiring):
    name = "boolean"

    @property
    def zero(self):
        return False

    @property
    def one(self):
        return True

    def add(self, a, b):
        return a or b

    def mul(self, a, b):
        return a and b


@dataclass(frozen=True)
class NaturalSemiring(Semiring):
    """Non-negative integers with ordinary arithmetic (Python ints never overflow)."""

    name = "naturals"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b


@dataclass(frozen=True)
class LanguageSemiring(Semiring):
    """Finite languages over ``alphabet``: union and element-wise concatenation.

    A word is a ``str`` whose characters are alphabet symbols; the empty word
    is ``""``.  Declaration order of the alphabet fixes the sort order used by
    :meth:`sorted`.
    """

    alphabet: str
    name = "letters"

    def __post_init__(self):
        if len(set(self.alphabet)) != len(self.alphabet):
            raise SemiringError(f"alphabet has repeated symbols: {self.alphabet!r}")

    @property
    def zero(self):
        return frozenset()

    @property
    def one(self):
        return frozenset({EPSILON})

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        if not a or not b:
            return frozenset()
        return frozenset(u + v for u in a for v in b)

    def element(self, words: Iterable[str]) -> frozenset:
        """Build a language from ``words``, rejecting symbols outside the alphabet."""
        out = frozenset(words)
        for w in out:
            bad = set(w) - set(self.alphabet)
            if bad:
                raise SemiringError(f"word {w!r} uses symbols {sorted(bad)} outside {self.alphabet!r}")
        return out

    def letters(self, letters: Iterable[str]) -> frozenset:
        """Build an element of P(alphabet): every member is a single symbol."""
        out = self.element(letters)
        for w in out:
            if len(w) != 1:
                raise SemiringError(f"{w!r} is not a single letter")
        return out

    def sort_key(self, word: str):
        return (len(word), tuple(self.alphabet.index(c) for c in word))

    def sorted(self, words: Iterable[str]) -> list[str]:
        return sorted(words, key=self.sort_key)


@dataclass(frozen=True)
class ProductSemiring(Semiring):
    """Direct product of two semirings with component-wise operations."""

    first: Semiring
    second: Semiring

    @property
    def name(self):
        return f"{self.first.name}x{self.second.name}"

    @property
    def zero(self):
        return (self.first.zero, self.second.zero)

    @property
    def one(self):
        return (self.first.one, self.second.one)

    def add(self, a, b):
        return (self.first.add(a[0], b[0]), self.second.add(a[1], b[1]))

    def mul(self, a, b):
        return (self.first.mul(a[0], b[0]), self.second.mul(a[1], b[1]))

    def eq(self, a, b):
        return self.first.eq(a[0], b[0]) and self.second.eq(a[1], b[1])


BOOLEAN = BooleanSemiring()
NATURALS = NaturalSemiring()


# -- axiom checking ---------------------------------------------------------

@dataclass
class AxiomReport:
    checked: int = 0
    failures: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed_axioms(self) -> set[str]:
        return {name for name, _ in self.failures}


def check_semiring_axioms(semiring: Semiring, samples: Sequence) -> AxiomReport:
    """Evaluate every semiring axiom over all triples drawn from ``samples``.

    Each violated axiom instance is recorded with its witness triple.
    """
    if not samples:
        raise ValueError("samples must be non-empty")
    K = semiring
    add, mul, eq = K.add, K.mul, K.eq
    report = AxiomReport()

    def check(name, holds, witness):
        report.checked += 1
        if not holds:
            report.failures.append((name, witness))

    for a, b, c in itertools.product(samples, repeat=3):
        w = (a, b, c)
        check("add associative", eq(add(add(a, b), c), add(a, add(b, c))), w)
        check("add commutative", eq(add(a, b), add(b, a)), w)
        check("add identity", eq(add(a, K.zero), a) and eq(add(K.zero, a), a), w)
        check("mul associative", eq(mul(mul(a, b), c), mul(a, mul(b, c))), w)
        check("mul identity", eq(mul(a, K.one), a) and eq(mul(K.one, a), a), w)
        check("left distributive", eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))), w)
        check("right distributive", eq(mul(add(a, b), c), add(mul(a, c), mul(b, c))), w)
        check("zero annihilates", eq(mul(K.zero, a), K.zero) and eq(mul(a, K.zero), K.zero), w)
    return report


# -- truncated formal power series over a one-letter alphabet ---------------

@dataclass(frozen=True)
class SeriesPrefix:
    """Coefficients ``s(x^0) .. s(x^N)`` of a one-letter power series."""

    semiring: Semiring
    coeffs: tuple

    @property
    def length(self) -> int:
        """Truncation length N (the index of the last kept coefficient)."""
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def equals(self, other: SeriesPrefix) -> bool:
        return len(self.coeffs) == len(other.coeffs) and all(
            self.semiring.eq(a, b) for a, b in zip(self.coeffs, other.coeffs)
        )


def zero_series(semiring: Semiring, length: int) -> SeriesPrefix:
    return SeriesPrefix(semiring, (semiring.zero,) * (length + 1))


def unit_series(semiring: Semiring, length: int) -> SeriesPrefix:
    """The multiplicative identity: one at x^0, zero elsewhere."""
    return SeriesPrefix(semiring, (semiring.one,) + (semiring.zero,) * length)


def _same_length(s: SeriesPrefix, t: SeriesPrefix):
    if len(s.coeffs) != len(t.coeffs):
        raise LengthMismatch(f"series truncated at {s.length} and {t.length}")


def series_add(s: SeriesPrefix, t: SeriesPrefix) -> SeriesPrefix:
    _same_length(s, t)
    K = s.semiring
    return SeriesPrefix(K, tuple(K.add(a, b) for a, b in zip(s.coeffs, t.coeffs)))


def series_cauchy_product(s: SeriesPrefix, t: SeriesPrefix) -> SeriesPrefix:
    _same_length(s, t)
    K = s.semiring
    N = s.length
    out = []
    for n in range(N + 1):
        out.append(K.sum(K.mul(s.coeffs[p], t.coeffs[n - p]) for p in range(n + 1)))
    return SeriesPrefix(K, tuple(out))
