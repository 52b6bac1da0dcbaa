"""Rooted trees up to isomorphism.

A tree is stored by its canonical parenthesis encoding: ``"()"`` is the
one-vertex tree and a vertex with children ``c1 .. ck`` is
``"(" + c1 + ... + ck + ")"`` with the children sorted ascending
(bytewise; ``"("`` sorts before ``")"``). Two trees are equal iff their
encodings are equal.

Vertices are addressed by preorder index over the canonical encoding:
the root is 0, then each child subtree in canonical child order.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import _kernel

__all__ = [
    "RootedTree",
    "TreeParseError",
    "TreeStats",
    "alpha",
    "beta",
    "cuts",
    "enumerate_trees",
    "graft",
    "graft_all",
    "graft_multi",
    "ladder",
    "m_stat",
    "parse",
    "stats",
    "sym_count",
    "trees_up_to",
]


class TreeParseError(ValueError):
    """Malformed parenthesis encoding; ``offset`` is the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class RootedTree:
    """Canonical representative of an isomorphism class of rooted trees.

    Construct through :func:`parse` or the module operations; the
    constructor trusts that ``canon`` is already canonical.
    """

    __slots__ = ("canon", "size", "__dict__")

    def __init__(self, canon: str):
        self.canon = canon
        self.size = len(canon) // 2

    @cached_property
    def children(self) -> tuple[RootedTree, ...]:
        out = []
        depth = 0
        start = 1
        for i in range(1, len(self.canon) - 1):
            depth += 1 if self.canon[i] == "(" else -1
            if depth == 0:
                out.append(_intern(self.canon[start : i + 1]))
                start = i + 1
        return tuple(out)

    @cached_property
    def depth(self) -> int:
        best = cur = 0
        for ch in self.canon:
            cur += 1 if ch == "(" else -1
            best = max(best, cur)
        return best - 1

    @property
    def rdeg(self) -> int:
        return len(self.children)

    def render(self) -> str:
        return self.canon

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RootedTree):
            return self.canon == other.canon
        return NotImplemented

    def __lt__(self, other: RootedTree) -> bool:
        return self.canon < other.canon

    def __hash__(self) -> int:
        return hash(self.canon)

    def __repr__(self) -> str:
        return f"RootedTree({self.canon!r})"

    def __str__(self) -> str:
        return self.canon

    def __reduce__(self):
        return (_intern, (self.canon,))


@lru_cache(maxsize=None)
def _intern(canon: str) -> RootedTree:
    return RootedTree(canon)


def _check_vertex(tree: RootedTree, v: int) -> None:
    if not 0 <= v < tree.size:
        raise ValueError(f"vertex index {v} out of range for tree of size {tree.size}")


def parse(text: str | bytes) -> RootedTree:
    """Parse a parenthesis encoding and return its canonical tree.

    >>> parse("(()(()))").canon
    '((())())'
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise TreeParseError("non-ASCII byte", exc.start) from None
    if not text:
        raise TreeParseError("empty input", 0)
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise TreeParseError("unmatched ')'", i)
        else:
            raise TreeParseError(f"unexpected character {ch!r}", i)
        if depth == 0 and i != len(text) - 1:
            raise TreeParseError("trailing data after tree", i + 1)
    if depth != 0:
        raise TreeParseError("unclosed '('", len(text))
    return _intern(_kernel.canonicalize(text))


def ladder(n: int) -> RootedTree:
    """The path ``l_n`` on ``n`` vertices, rooted at an end."""
    if n < 1:
        raise ValueError("ladder needs n >= 1")
    return _intern("(" * n + ")" * n)


@lru_cache(maxsize=None)
def _trees_of_size(n: int) -> tuple[RootedTree, ...]:
    if n == 1:
        return (_intern("()"),)
    # a tree on n vertices is a root over a multiset of trees summing to n - 1
    pool = [t for k in range(1, n) for t in _trees_of_size(k)]
    pool.sort(key=lambda t: (t.size, t.canon))
    found = set()

    def extend(start: int, remaining: int, chosen: list[str]) -> None:
        if remaining == 0:
            found.add("(" + "".join(sorted(chosen)) + ")")
            return
        for i in range(start, len(pool)):
            size = pool[i].size
            if size > remaining:
                break
            chosen.append(pool[i].canon)
            extend(i, remaining - size, chosen)
            chosen.pop()

    extend(0, n - 1, [])
    return tuple(_intern(c) for c in sorted(found))


def enumerate_trees(n: int) -> list[RootedTree]:
    """All trees with ``n`` vertices, each once, in ascending canon order."""
    if n < 1:
        raise ValueError("enumeration needs n >= 1")
    return list(_trees_of_size(n))


@dataclass(frozen=True)
class TreeStats:
    size: int
    depth: int
    rdeg: int
    compsize: int
    components: tuple[RootedTree, ...]


def stats(t: RootedTree) -> TreeStats:
    comps = t.children
    return TreeStats(
        size=t.size,
        depth=t.depth,
        rdeg=len(comps),
        compsize=max((c.size for c in comps), default=0),
        components=comps,
    )


@lru_cache(maxsize=65536)
def _cuts(canon: str) -> tuple[tuple[RootedTree, RootedTree], ...]:
    pairs = sorted(_kernel.cut_all(canon))
    return tuple((_intern(r), _intern(p)) for r, p in pairs)


def cuts(t: RootedTree) -> list[tuple[RootedTree, RootedTree]]:
    """One ``(R_e(t), P_e(t))`` pair per edge, sorted by encoding."""
    return list(_cuts(t.canon))


@lru_cache(maxsize=65536)
def _graft_all(s: str, t: str) -> tuple[RootedTree, ...]:
    return tuple(_intern(c) for c in _kernel.graft_all(s, t))


def graft_all(s: RootedTree, t: RootedTree) -> tuple[RootedTree, ...]:
    """``s`` grafted with ``t`` at every vertex of ``s``, in preorder."""
    return _graft_all(s.canon, t.canon)


def graft(s: RootedTree, v: int, t: RootedTree) -> RootedTree:
    """Attach the root of ``t`` below vertex ``v`` of ``s``."""
    _check_vertex(s, v)
    return _intern(_kernel.graft(s.canon, v, t.canon))


def graft_multi(r: RootedTree, v: int, t: RootedTree, m: int) -> RootedTree:
    """Attach ``m`` copies of ``t`` below vertex ``v`` of ``r``."""
    _check_vertex(r, v)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return r
    pos = [i for i, ch in enumerate(r.canon) if ch == "("][v] + 1
    return _intern(_kernel.canonicalize(r.canon[:pos] + t.canon * m + r.canon[pos:]))


def alpha(t1: RootedTree, t2: RootedTree, t3: RootedTree) -> int:
    """Number of edges of ``t2`` whose cut leaves ``t3`` at the root and prunes ``t1``."""
    if t1.size + t3.size != t2.size:
        return 0
    return sum(1 for r, p in _cuts(t2.canon) if r == t3 and p == t1)


def beta(t1: RootedTree, t2: RootedTree, t3: RootedTree) -> int:
    """Number of vertices of ``t3`` where grafting ``t2`` yields ``t1``."""
    if t3.size + t2.size != t1.size:
        return 0
    return sum(1 for u in _graft_all(t3.canon, t2.canon) if u == t1)


def m_stat(s: RootedTree, t: RootedTree, v: int) -> int:
    """Largest ``m`` with ``s = r`` grafted with ``m`` copies of ``t`` at ``v``.

    This is the number of child subtrees of vertex ``v`` equal to ``t``.
    """
    _check_vertex(s, v)
    a, b = _kernel.subtree_spans(s.canon)[v]
    return sum(1 for c in _intern(s.canon[a:b]).children if c == t)


@lru_cache(maxsize=None)
def _sym(canon: str) -> int:
    total = 1
    for child, mult in Counter(_intern(canon).children).items():
        total *= math.factorial(mult) * _sym(child.canon) ** mult
    return total


def sym_count(t: RootedTree) -> int:
    """Order of the automorphism group of ``t`` (root fixed)."""
    return _sym(t.canon)


def trees_up_to(n: int) -> list[RootedTree]:
    """Every tree with at most ``n`` vertices, by size then encoding."""
    return list(itertools.chain.from_iterable(_trees_of_size(k) for k in range(1, n + 1)))
