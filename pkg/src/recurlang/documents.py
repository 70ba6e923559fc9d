"""JSON documents for automata, recurrence systems and higher-degree systems.

Automaton document::

    {"alphabet": ["a", "b"], "states": ["f1", "f2"], "initial": "f1",
     "final": ["f1"], "transitions": [{"from": "f1", "to": "f2", "letters": ["a"]}]}

Recurrence document::

    {"semiring": "naturals", "functions": ["f1", "f2"],
     "coefficients": [[0, 1], [1, 1]], "initial": [1, 0]}

With ``"semiring": "letters"`` an ``alphabet`` field is added, coefficients
are letter arrays and initial values are ``"eps"`` or ``"empty"`` (an array
of words is also accepted for seeds that are neither).

Higher-degree document (input of ``reduce``)::

    {"semiring": "naturals", "functions": ["f1", "f2"],
     "equations": [{"target": "f1", "degree": 4, "coefficients": [0, 1],
                    "seeds": [1, 0, 0, 0]}, ...]}
"""
from __future__ import annotations

import json

from .language import LanguageAutomaton
from .recurrence import HigherDegreeEquation, HigherDegreeSystem, RecurrenceSystem
from .semiring import EPSILON, NATURALS, LanguageSemiring, NaturalSemiring


class DocumentError(ValueError):
    """A document parsed as JSON but does not describe a valid object."""


def _require(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise DocumentError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise DocumentError(f"field {key!r} has the wrong type")
    return value


def _alphabet(doc) -> str:
    symbols = _require(doc, "alphabet", list)
    if not all(isinstance(c, str) and len(c) == 1 for c in symbols):
        raise DocumentError("alphabet entries must be 1-character strings")
    if len(set(symbols)) != len(symbols):
        raise DocumentError("alphabet has repeated symbols")
    return "".join(symbols)


def _names(doc, key) -> list:
    names = _require(doc, key, list)
    if not all(isinstance(s, str) for s in names):
        raise DocumentError(f"{key} must be strings")
    if len(set(names)) != len(names):
        raise DocumentError(f"{key} are not unique")
    if not names:
        raise DocumentError(f"{key} must not be empty")
    return names


def automaton_from_document(doc) -> LanguageAutomaton:
    """Build a language automaton; the initial state is moved to the front if needed."""
    alphabet = _alphabet(doc)
    states = _names(doc, "states")
    initial = _require(doc, "initial", str)
    if initial not in states:
        raise DocumentError(f"initial state {initial!r} is not a state")
    final = _require(doc, "final", list)
    for f in final:
        if f not in states:
            raise DocumentError(f"final state {f!r} is not a state")
    order = [initial] + [s for s in states if s != initial]
    index = {s: i for i, s in enumerate(order)}
    edges = {}
    for t in _require(doc, "transitions", list):
        src, dst = _require(t, "from", str), _require(t, "to", str)
        letters = _require(t, "letters", list)
        for s in (src, dst):
            if s not in index:
                raise DocumentError(f"transition mentions unknown state {s!r}")
        bad = [c for c in letters if not isinstance(c, str) or c not in alphabet or len(c) != 1]
        if bad:
            raise DocumentError(f"letters {bad} are not in the alphabet")
        key = (index[src], index[dst])
        if key in edges:
            raise DocumentError(f"more than one transition record from {src!r} to {dst!r}")
        edges[key] = letters
    return LanguageAutomaton.build(alphabet, len(order), edges, [index[f] for f in final], order)


def automaton_to_document(A: LanguageAutomaton) -> dict:
    names = A.state_names()
    K = A.semiring
    return {
        "alphabet": list(A.alphabet),
        "states": list(names),
        "initial": names[0],
        "final": [names[i] for i in range(A.size) if A.final[i]],
        "transitions": [
            {"from": names[i], "to": names[j], "letters": K.sorted(cell)}
            for i, j, cell in A.edges()
        ],
    }


def _letters_value(value, K: LanguageSemiring):
    if value == "eps":
        return K.one
    if value == "empty":
        return K.zero
    if isinstance(value, list) and all(isinstance(w, str) for w in value):
        return K.element("" if w == "&" else w for w in value)
    raise DocumentError(f"bad language value {value!r}")


def _letters_cell(value, K: LanguageSemiring):
    if not isinstance(value, list) or not all(isinstance(c, str) and len(c) == 1 for c in value):
        raise DocumentError(f"bad letter set {value!r}")
    try:
        return K.letters(value)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _nat(value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise DocumentError(f"{value!r} is not a natural number")
    return value


def _semiring(doc):
    kind = _require(doc, "semiring", str)
    if kind == "naturals":
        return NATURALS, _nat, _nat
    if kind == "letters":
        K = LanguageSemiring(_alphabet(doc))
        return K, (lambda v: _letters_cell(v, K)), (lambda v: _letters_value(v, K))
    raise DocumentError(f"unknown semiring {kind!r}")


def recurrence_from_document(doc) -> RecurrenceSystem:
    K, cell, value = _semiring(doc)
    functions = _names(doc, "functions")
    k = len(functions)
    rows = _require(doc, "coefficients", list)
    initial = _require(doc, "initial", list)
    if len(rows) != k or any(not isinstance(r, list) or len(r) != k for r in rows) or len(initial) != k:
        raise DocumentError(f"shapes do not match {k} functions")
    return RecurrenceSystem(K, [[cell(x) for x in r] for r in rows], [value(v) for v in initial], functions)


def _dump_value(K, v):
    if isinstance(K, NaturalSemiring):
        return v
    if v == K.one:
        return "eps"
    if v == K.zero:
        return "empty"
    return ["&" if w == EPSILON else w for w in K.sorted(v)]


def recurrence_to_document(system: RecurrenceSystem) -> dict:
    K = system.semiring
    doc: dict = {"semiring": K.name}
    if isinstance(K, LanguageSemiring):
        doc["alphabet"] = list(K.alphabet)
        coefficients = [[K.sorted(x) for x in row] for row in system.coefficients]
    elif isinstance(K, NaturalSemiring):
        coefficients = [list(row) for row in system.coefficients]
    else:
        raise DocumentError(f"no document format for the {K.name} semiring")
    doc["functions"] = list(system.function_labels())
    doc["coefficients"] = coefficients
    doc["initial"] = [_dump_value(K, v) for v in system.initial_values]
    return doc


def higher_degree_from_document(doc) -> HigherDegreeSystem:
    K, cell, value = _semiring(doc)
    functions = _names(doc, "functions")
    index = {f: i for i, f in enumerate(functions)}
    equations = []
    for eq in _require(doc, "equations", list):
        target = _require(eq, "target", str)
        if target not in index:
            raise DocumentError(f"unknown function {target!r}")
        degree = _nat(_require(eq, "degree", int))
        row = _require(eq, "coefficients", list)
        if len(row) != len(functions):
            raise DocumentError(f"equation for {target!r} has {len(row)} coefficients")
        seeds = [value(v) for v in _require(eq, "seeds", list)]
        equations.append(HigherDegreeEquation(index[target], degree, [cell(x) for x in row], seeds))
    return HigherDegreeSystem(K, equations, functions)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
