"""Pure-Python tree kernels.

All functions take and return canonical parenthesis strings. Inputs are
assumed well formed; validation lives in :mod:`ielie.trees`.
"""

from __future__ import annotations


def canonicalize(s: str) -> str:
    stack: list[list[str]] = [[]]
    for ch in s:
        if ch == "(":
            stack.append([])
        else:
            children = stack.pop()
            children.sort()
            stack[-1].append("(" + "".join(children) + ")")
    return stack[0][0]


def _open_positions(s: str) -> list[int]:
    return [i for i, ch in enumerate(s) if ch == "("]


def graft(s: str, v: int, t: str) -> str:
    pos = _open_positions(s)[v] + 1
    return canonicalize(s[:pos] + t + s[pos:])


def graft_all(s: str, t: str) -> list[str]:
    out = []
    for i, ch in enumerate(s):
        if ch == "(":
            out.append(canonicalize(s[: i + 1] + t + s[i + 1 :]))
    return out


def subtree_spans(s: str) -> list[tuple[int, int]]:
    """(start, stop) slice of every vertex's subtree, in preorder."""
    spans: list[list[int]] = []
    stack: list[int] = []
    for i, ch in enumerate(s):
        if ch == "(":
            stack.append(len(spans))
            spans.append([i, -1])
        else:
            spans[stack.pop()][1] = i + 1
    return [(a, b) for a, b in spans]


def cut_all(t: str) -> list[tuple[str, str]]:
    out = []
    for a, b in subtree_spans(t)[1:]:
        out.append((canonicalize(t[:a] + t[b:]), t[a:b]))
    return out
