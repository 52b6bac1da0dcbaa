"""Writing ``D_t^+`` as Lie words in the root-degree-one generators.

The generators are ``D_t^+`` with ``rdeg(t) == 1`` (plus the one-vertex
tree). :func:`decompose` returns right-nested iterated brackets
``[x1, [x2, ... [x_{k-1}, x_k] ...]]`` with rational coefficients.
"""

from __future__ import annotations

import enum
import time
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .algebra import Basis, Element, bracket, bracket_basis, parse_basis
from .trees import RootedTree, _intern, enumerate_trees, ladder

__all__ = [
    "Bracket",
    "Generator",
    "LiePolynomial",
    "Prec",
    "Sum",
    "decompose",
    "decompose_step",
    "evaluate",
    "from_json",
    "generators_of",
    "ladder_free_check",
    "prec",
    "to_json",
]


class Prec(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _rank(t: RootedTree) -> tuple[int, int]:
    # s < t iff this key is smaller: deeper first, then fewer root children
    return (-t.depth, t.rdeg)


def prec(s: RootedTree, t: RootedTree) -> Prec:
    """Compare two trees of equal size in the depth/root-degree order."""
    if s.size != t.size:
        raise ValueError("prec compares trees of equal size only")
    if s == t:
        return Prec.EQUAL
    ks, kt = _rank(s), _rank(t)
    if ks < kt:
        return Prec.LESS
    if ks > kt:
        return Prec.GREATER
    return Prec.INCOMPARABLE


@dataclass(frozen=True)
class Generator:
    b: Basis


@dataclass(frozen=True)
class Bracket:
    left: "LiePolynomial"
    right: "LiePolynomial"


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[Fraction, "LiePolynomial"], ...]


LiePolynomial = Union[Generator, Bracket, Sum]


def _join(components) -> RootedTree:
    return _intern("(" + "".join(sorted(c.canon for c in components)) + ")")


def decompose_step(t: RootedTree):
    """One rewriting step for a tree with root degree above one.

    Returns ``((t1, rest), corrections)`` such that
    ``D_t^+ = [D_t1^+, D_rest^+] - sum(c * D_u^+ for c, u in corrections)``,
    where ``t1`` is a shallowest component (smallest encoding on ties),
    ``rest`` is the root over the remaining components, and every ``u``
    precedes ``t``.
    """
    comps = list(t.children)
    if len(comps) <= 1:
        raise ValueError("decompose_step needs root degree > 1")
    t1 = min(comps, key=lambda c: (c.depth, c.canon))
    comps.remove(t1)
    rest = _join(comps)
    corrections = []
    for b, c in bracket_basis(Basis("+", t1), Basis("+", rest)).sorted_items():
        if b.tree == t:
            assert c == 1
            continue
        corrections.append((c, b.tree))
    return (t1, rest), corrections


# Lie words are tuples of generator trees read as right-nested brackets.
Word = tuple[RootedTree, ...]


def _bracket_words(u: Word, v: Word) -> dict[Word, int]:
    """Right-normed expansion of ``[u, v]`` for right-nested words."""
    if len(u) == 1:
        return {u + v: 1}
    a, w = u[:1], u[1:]
    out: dict[Word, int] = defaultdict(int)
    # [[a, w], v] = [a, [w, v]] - [w, [a, v]]
    for word, c in _bracket_words(w, v).items():
        out[a + word] += c
    for word, c in _bracket_words(w, a + v).items():
        out[word] -= c
    return out


def _combine(target: dict, src: Mapping, k) -> None:
    for word, c in src.items():
        target[word] += k * c


@lru_cache(maxsize=None)
def _decompose_words(canon: str) -> tuple[tuple[Word, Fraction], ...]:
    t = _intern(canon)
    if t.rdeg <= 1:
        return (((t,), Fraction(1)),)
    (t1, rest), corrections = decompose_step(t)
    acc: dict[Word, Fraction] = defaultdict(Fraction)
    left = _decompose_words(t1.canon)
    right = _decompose_words(rest.canon)
    for wl, cl in left:
        for wr, cr in right:
            _combine(acc, _bracket_words(wl, wr), cl * cr)
    for c, u in corrections:
        _combine(acc, dict(_decompose_words(u.canon)), -c)
    return tuple(sorted(((w, c) for w, c in acc.items() if c), key=lambda wc: [x.canon for x in wc[0]]))


def _word_to_poly(word: Word) -> LiePolynomial:
    node: LiePolynomial = Generator(Basis("+", word[-1]))
    for t in reversed(word[:-1]):
        node = Bracket(Generator(Basis("+", t)), node)
    return node


def decompose(t: RootedTree) -> LiePolynomial:
    """A Lie polynomial in the generators that evaluates to ``D_t^+``."""
    words = _decompose_words(t.canon)
    if len(words) == 1 and words[0][1] == 1:
        return _word_to_poly(words[0][0])
    return Sum(tuple((c, _word_to_poly(w)) for w, c in words))


def generators_of(p: LiePolynomial) -> list[Basis]:
    if isinstance(p, Generator):
        return [p.b]
    if isinstance(p, Bracket):
        return generators_of(p.left) + generators_of(p.right)
    return [b for _, q in p.terms for b in generators_of(q)]


def evaluate(p: LiePolynomial) -> Element:
    if isinstance(p, Generator):
        return Element.of(p.b)
    if isinstance(p, Bracket):
        return bracket(evaluate(p.left), evaluate(p.right))
    out = Element.zero()
    for c, q in p.terms:
        out = out + evaluate(q) * c
    return out


def to_json(p: LiePolynomial):
    if isinstance(p, Generator):
        return {"gen": p.b.text()}
    if isinstance(p, Bracket):
        return {"bracket": [to_json(p.left), to_json(p.right)]}
    return {"sum": [[str(c), to_json(q)] for c, q in p.terms]}


def from_json(data) -> LiePolynomial:
    if "gen" in data:
        return Generator(parse_basis(data["gen"]))
    if "bracket" in data:
        left, right = data["bracket"]
        return Bracket(from_json(left), from_json(right))
    if "sum" in data:
        return Sum(tuple((Fraction(c), from_json(q)) for c, q in data["sum"]))
    raise ValueError(f"not a Lie polynomial: {data!r}")


def ladder_free_check(m: int):
    """Check that no bracket of two positive basis elements of total degree
    ``m + 1`` has a ladder term."""
    from .verify import Report

    if m < 1:
        raise ValueError("m must be positive")
    start = time.perf_counter()
    target = Basis("+", ladder(m + 1))
    report = Report("ladder_free", {"m": m})
    for k in range(1, (m + 1) // 2 + 1):
        small, large = enumerate_trees(k), enumerate_trees(m + 1 - k)
        for i, s in enumerate(small):
            for t in large:
                if k == m + 1 - k and t < s:
                    continue
                report.cases += 1
                c = bracket_basis(Basis("+", s), Basis("+", t)).coeff(target)
                if c:
                    report.violations.append(
                        {"inputs": [s.canon, t.canon], "expected": "0", "got": str(c)}
                    )
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report
