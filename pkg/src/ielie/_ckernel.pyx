# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled tree kernels; same contract as ``_pykernel``."""

cpdef str canonicalize(str s):
    cdef list stack = [[]]
    cdef list children
    cdef Py_ssize_t i, n = len(s)
    cdef Py_UCS4 ch
    for i in range(n):
        ch = s[i]
        if ch == u"(":
            stack.append([])
        else:
            children = stack.pop()
            if len(children) > 1:
                children.sort()
            (<list>stack[len(stack) - 1]).append("(" + "".join(children) + ")")
    return (<list>stack[0])[0]


cpdef str graft(str s, Py_ssize_t v, str t):
    cdef Py_ssize_t i, n = len(s), seen = 0
    for i in range(n):
        if s[i] == u"(":
            if seen == v:
                return canonicalize(s[: i + 1] + t + s[i + 1 :])
            seen += 1
    raise IndexError(v)


cpdef list graft_all(str s, str t):
    cdef list out = []
    cdef Py_ssize_t i, n = len(s)
    for i in range(n):
        if s[i] == u"(":
            out.append(canonicalize(s[: i + 1] + t + s[i + 1 :]))
    return out


cpdef list subtree_spans(str s):
    cdef Py_ssize_t n = len(s)
    cdef Py_ssize_t i, top = 0, count = 0
    cdef list starts = [0] * (n // 2)
    cdef list stops = [0] * (n // 2)
    cdef list stack = [0] * (n // 2)
    for i in range(n):
        if s[i] == u"(":
            stack[top] = count
            starts[count] = i
            top += 1
            count += 1
        else:
            top -= 1
            stops[<Py_ssize_t>stack[top]] = i + 1
    return list(zip(starts, stops))


cpdef list cut_all(str t):
    cdef list out = []
    cdef list spans = subtree_spans(t)
    cdef Py_ssize_t k, a, b
    for k in range(1, len(spans)):
        a, b = spans[k]
        out.append((canonicalize(t[:a] + t[b:]), t[a:b]))
    return out
