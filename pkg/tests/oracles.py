"""Independent reference implementations used only by the tests.

None of these share code with the package: trees are handled as parent
arrays and canonical forms are rebuilt recursively from scratch.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def rooted_tree_counts(n_max: int) -> list[int]:
    """Number of unlabeled rooted trees with 1..n_max vertices.

    Uses a(n+1) = (1/n) * sum_{k=1..n} (sum_{d | k} d a(d)) a(n-k+1).
    """
    a = [0, 1]
    for n in range(1, n_max):
        total = 0
        for k in range(1, n + 1):
            s = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
            total += s * a[n - k + 1]
        assert total % n == 0
        a.append(total // n)
    return a[1 : n_max + 1]


def to_parents(code: str) -> list[int]:
    """Parent array in preorder; the root has parent -1."""
    parents: list[int] = []
    stack: list[int] = []
    for ch in code:
        if ch == "(":
            parents.append(stack[-1] if stack else -1)
            stack.append(len(parents) - 1)
        else:
            stack.pop()
    return parents


def _children(parents: list[int]) -> dict[int, list[int]]:
    kids: dict[int, list[int]] = {i: [] for i in range(len(parents))}
    for v, p in enumerate(parents):
        if p >= 0:
            kids[p].append(v)
    return kids


def canon_from(parents: list[int], root: int | None = None, keep: set[int] | None = None) -> str:
    kids = _children(parents)
    if root is None:
        root = parents.index(-1)

    def rec(v: int) -> str:
        subs = sorted(rec(c) for c in kids[v] if keep is None or c in keep)
        return "(" + "".join(subs) + ")"

    return rec(root)


def descendants(parents: list[int], v: int) -> set[int]:
    kids = _children(parents)
    out, todo = set(), [v]
    while todo:
        u = todo.pop()
        out.add(u)
        todo.extend(kids[u])
    return out


def brute_cuts(code: str) -> list[tuple[str, str]]:
    """(remaining, pruned) for every edge."""
    parents = to_parents(code)
    out = []
    for v in range(1, len(parents)):
        below = descendants(parents, v)
        keep = set(range(len(parents))) - below
        out.append((canon_from(parents, 0, keep), canon_from(parents, v)))
    return sorted(out)


def brute_grafts(s: str, t: str) -> list[str]:
    ps, pt = to_parents(s), to_parents(t)
    out = []
    for v in range(len(ps)):
        shift = len(ps)
        merged = ps + [v if p < 0 else p + shift for p in pt]
        out.append(canon_from(merged, 0))
    return out


def brute_automorphisms(code: str) -> int:
    """Count root-fixing vertex permutations that preserve the parent map."""
    parents = to_parents(code)
    n = len(parents)
    count = 0
    for perm in itertools.permutations(range(1, n)):
        f = (0,) + perm
        if all(parents[f[v]] == f[parents[v]] for v in range(1, n)):
            count += 1
    return count


def brute_alpha(t1: str, t2: str, t3: str) -> int:
    return sum(1 for r, p in brute_cuts(t2) if r == t3 and p == t1)


def brute_beta(t1: str, t2: str, t3: str) -> int:
    return sum(1 for u in brute_grafts(t3, t2) if u == t1)


def rank_by_elimination(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                k = m[i][c] / m[rank][c]
                m[i] = [a - k * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank
