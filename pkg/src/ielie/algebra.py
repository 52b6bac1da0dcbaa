"""The insertion-elimination Lie algebra over the rationals.

Basis: ``d`` and ``D_t^+``, ``D_t^-`` for every rooted tree ``t``. Elements
are sparse maps from basis elements to nonzero :class:`fractions.Fraction`
coefficients.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .trees import RootedTree, _cuts, _graft_all, parse, sym_count

__all__ = [
    "Basis",
    "D",
    "Element",
    "Plus",
    "Minus",
    "basis_of_degree",
    "bracket",
    "bracket_basis",
    "parse_basis",
    "parse_rational",
    "project_degree",
    "sigma",
    "tau_zero",
    "tau_zeta",
]

Scalar = Union[int, Fraction]


@dataclass(frozen=True, order=False)
class Basis:
    """One of ``d`` (kind ``"d"``), ``D_t^+`` (``"+"``) or ``D_t^-`` (``"-"``)."""

    kind: str
    tree: RootedTree | None = None

    def __post_init__(self):
        if self.kind == "d":
            if self.tree is not None:
                raise ValueError("d carries no tree")
        elif self.kind not in "+-" or self.tree is None:
            raise ValueError(f"bad basis element {self.kind!r}")

    @property
    def degree(self) -> int:
        if self.kind == "d":
            return 0
        return self.tree.size if self.kind == "+" else -self.tree.size

    def sort_key(self) -> tuple:
        # degree, then canon, then sign
        if self.kind == "d":
            return (0, "", 0)
        return (self.degree, self.tree.canon, 0 if self.kind == "+" else 1)

    def text(self) -> str:
        return "d" if self.kind == "d" else self.kind + self.tree.canon

    def __repr__(self) -> str:
        return self.text()


D = Basis("d")


def Plus(t: RootedTree | str) -> Basis:
    return Basis("+", parse(t) if isinstance(t, str) else t)


def Minus(t: RootedTree | str) -> Basis:
    return Basis("-", parse(t) if isinstance(t, str) else t)


def parse_basis(text: str) -> Basis:
    """Parse ``"d"``, ``"+<tree>"`` or ``"-<tree>"``."""
    text = text.strip()
    if text == "d":
        return D
    if text[:1] in ("+", "-"):
        return Basis(text[0], parse(text[1:]))
    raise ValueError(f"cannot parse basis element {text!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly (no decimal points)."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


class Element:
    """A finite rational linear combination of basis elements.

    Elements are immutable; arithmetic returns new elements and never
    stores zero coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Basis, Scalar] | None = None):
        clean = {}
        if terms:
            for b, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[b] = c
        self._terms: dict[Basis, Fraction] = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Basis, Fraction]) -> Element:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def of(cls, b: Basis, c: Scalar = 1) -> Element:
        return cls({b: c})

    @classmethod
    def zero(cls) -> Element:
        return cls._trusted({})

    @property
    def terms(self) -> Mapping[Basis, Fraction]:
        return self._terms

    def coeff(self, b: Basis) -> Fraction:
        return self._terms.get(b, Fraction(0))

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Basis, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def degree_support(self) -> set[int]:
        return {b.degree for b in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degree_support()) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Basis]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for b, c in other._terms.items():
            v = out.get(b, 0) + c
            if v:
                out[b] = v
            else:
                out.pop(b, None)
        return Element._trusted(out)

    def __neg__(self) -> Element:
        return Element._trusted({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: Scalar) -> Element:
        if isinstance(k, Element):
            return NotImplemented
        k = Fraction(k)
        if not k:
            return Element.zero()
        return Element._trusted({b: c * k for b, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "Element(0)"
        return "Element(" + " + ".join(f"{c}*{b.text()}" for b, c in self.sorted_items()) + ")"

    # -- wire format ---------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {}
        plus: dict[str, str] = {}
        minus: dict[str, str] = {}
        # trees listed by size, then encoding
        for b, c in sorted(self._terms.items(), key=lambda kv: (abs(kv[0].degree), kv[0].sort_key())):
            if b.kind == "d":
                out["d"] = str(c)
            elif b.kind == "+":
                plus[b.tree.canon] = str(c)
            else:
                minus[b.tree.canon] = str(c)
        if plus:
            out["plus"] = plus
        if minus:
            out["minus"] = minus
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> Element:
        unknown = set(data) - {"d", "plus", "minus"}
        if unknown:
            raise ValueError(f"unknown element keys: {sorted(unknown)}")
        terms: dict[Basis, Fraction] = {}
        if "d" in data:
            terms[D] = parse_rational(str(data["d"]))
        for key, kind in (("plus", "+"), ("minus", "-")):
            for canon, c in data.get(key, {}).items():
                terms[Basis(kind, parse(canon))] = parse_rational(str(c))
        return cls(terms)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for b, c in self.sorted_items():
            sym = "d" if b.kind == "d" else f"D^{{{b.kind}}}_{{{b.tree.canon}}}"
            mag = abs(c)
            if mag == 1:
                body = sym
            elif mag.denominator == 1:
                body = f"{mag.numerator} {sym}"
            else:
                body = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}} {sym}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _as_element(x: Element | Basis) -> Element:
    return Element.of(x) if isinstance(x, Basis) else x


def _accumulate(pairs: Iterable[tuple[Basis, int]]) -> Element:
    acc: dict[Basis, int] = defaultdict(int)
    for b, c in pairs:
        acc[b] += c
    return Element._trusted({b: Fraction(c) for b, c in acc.items() if c})


def _plus_plus(s: RootedTree, t: RootedTree) -> Element:
    # sum_r (beta(r,s,t) - beta(r,t,s)) D_r^+
    pairs = [(Basis("+", r), 1) for r in _graft_all(t.canon, s.canon)]
    pairs += [(Basis("+", r), -1) for r in _graft_all(s.canon, t.canon)]
    return _accumulate(pairs)


def _alpha_counts(host: RootedTree, pruned: RootedTree) -> dict[RootedTree, int]:
    """``R -> alpha(pruned, host, R)`` over the edges of ``host``."""
    out: dict[RootedTree, int] = defaultdict(int)
    for r, p in _cuts(host.canon):
        if p == pruned:
            out[r] += 1
    return out


def _minus_minus(s: RootedTree, t: RootedTree) -> Element:
    # sum_r (alpha(t,r,s) - alpha(s,r,t)) D_r^-; nonzero r are grafts of t on s
    # (resp. s on t), so enumerate those candidates and count cuts directly.
    pairs = []
    for r in set(_graft_all(s.canon, t.canon)):
        pairs.append((Basis("-", r), _alpha_counts(r, t).get(s, 0)))
    for r in set(_graft_all(t.canon, s.canon)):
        pairs.append((Basis("-", r), -_alpha_counts(r, s).get(t, 0)))
    return _accumulate(pairs)


def _minus_plus(s: RootedTree, t: RootedTree) -> Element:
    # [D_s^-, D_t^+] = sum_r alpha(s,t,r) D_r^+ + sum_r beta(s,t,r) D_r^- + delta_{s,t} d
    pairs: list[tuple[Basis, int]] = []
    for r, c in _alpha_counts(t, s).items():
        pairs.append((Basis("+", r), c))
    if t.size < s.size:
        for r in {r for r, p in _cuts(s.canon) if p == t}:
            c = sum(1 for u in _graft_all(r.canon, t.canon) if u == s)
            pairs.append((Basis("-", r), c))
    if s == t:
        pairs.append((D, 1))
    return _accumulate(pairs)


@lru_cache(maxsize=None)
def bracket_basis(a: Basis, b: Basis) -> Element:
    """Bracket of two basis elements."""
    if a.kind == "d":
        if b.kind == "d":
            return Element.zero()
        return Element.of(b, b.degree)
    if b.kind == "d":
        return Element.of(a, -a.degree)
    if a.kind == "+" and b.kind == "+":
        return _plus_plus(a.tree, b.tree)
    if a.kind == "-" and b.kind == "-":
        return _minus_minus(a.tree, b.tree)
    if a.kind == "-":
        return _minus_plus(a.tree, b.tree)
    return -_minus_plus(b.tree, a.tree)


def bracket(x: Element | Basis, y: Element | Basis) -> Element:
    """Bilinear extension of :func:`bracket_basis`."""
    x, y = _as_element(x), _as_element(y)
    acc: dict[Basis, Fraction] = defaultdict(Fraction)
    for a, ca in x.items():
        for b, cb in y.items():
            k = ca * cb
            for r, cr in bracket_basis(a, b).items():
                acc[r] += k * cr
    return Element._trusted({b: c for b, c in acc.items() if c})


def _linear_map(x: Element | Basis, image) -> Element:
    x = _as_element(x)
    acc: dict[Basis, Fraction] = defaultdict(Fraction)
    for b, c in x.items():
        nb, k = image(b)
        acc[nb] += c * k
    return Element._trusted({b: c for b, c in acc.items() if c})


def sigma(x: Element | Basis) -> Element:
    """The anti-involution weighted by tree symmetry counts."""

    def image(b: Basis):
        if b.kind == "d":
            return b, 1
        xi = sym_count(b.tree)
        if b.kind == "+":
            return Basis("-", b.tree), Fraction(xi)
        return Basis("+", b.tree), Fraction(1, xi)

    return _linear_map(x, image)


def tau_zeta(zeta: Scalar, x: Element | Basis) -> Element:
    """Grading automorphism ``D_t^+ -> zeta^|t| D_t^+``, ``D_t^- -> zeta^-|t| D_t^-``."""
    zeta = Fraction(zeta)
    if not zeta:
        raise ValueError("zeta must be nonzero")
    return _linear_map(x, lambda b: (b, zeta ** b.degree))


def tau_zero(x: Element | Basis) -> Element:
    """The automorphism ``sigma(-x)``."""
    return -sigma(x)


def project_degree(x: Element, n: int) -> Element:
    return Element._trusted({b: c for b, c in x.items() if b.degree == n})


@lru_cache(maxsize=None)
def basis_of_degree(n: int) -> tuple[Basis, ...]:
    """The standard basis of the weight space of degree ``n``."""
    from .trees import enumerate_trees

    if n == 0:
        return (D,)
    kind = "+" if n > 0 else "-"
    return tuple(Basis(kind, t) for t in enumerate_trees(abs(n)))
