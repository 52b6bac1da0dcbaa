"""Exhaustive and seeded checks of the algebra's structural identities."""

from __future__ import annotations

import itertools
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .algebra import (
    D,
    Basis,
    Element,
    basis_of_degree,
    bracket,
    bracket_basis,
    project_degree,
    sigma,
    tau_zero,
    tau_zeta,
)
from .linalg import RowReducer, null_space
from .trees import alpha, beta, enumerate_trees, sym_count, trees_up_to

__all__ = [
    "DEFAULT_SEED",
    "DerivationSpace",
    "Report",
    "SUITES",
    "SubalgebraClass",
    "centralizer",
    "derivation_space",
    "leading_term_check",
    "random_element",
    "run_suite",
    "self_centralizing_check",
    "subalgebra_closure",
]

DEFAULT_SEED = 42
ZETAS = (Fraction(2), Fraction(-3), Fraction(1, 2))


@dataclass
class Report:
    suite: str
    params: dict
    cases: int = 0
    violations: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "cases": self.cases,
            "violations": self.violations,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        out["pass"] = self.passed
        return out

    def merge(self, other: Report) -> None:
        self.cases += other.cases
        self.violations.extend(other.violations)
        self.elapsed_ms += other.elapsed_ms


def _el(x: Element) -> dict:
    return x.to_json()


def _basis_window(k: int) -> list[Basis]:
    """Every basis element with ``|degree| <= k``, sorted by (|degree|, key)."""
    out = [D]
    for t in trees_up_to(k):
        out.append(Basis("+", t))
        out.append(Basis("-", t))
    out.sort(key=lambda b: (abs(b.degree), b.sort_key()))
    return out


def _pairs(k: int) -> list[tuple[Basis, Basis]]:
    window = _basis_window(k)
    return [
        (a, b)
        for a, b in itertools.combinations_with_replacement(window, 2)
        if abs(a.degree) + abs(b.degree) <= k
    ]


def _triples(k: int) -> list[tuple[Basis, Basis, Basis]]:
    window = _basis_window(k)
    out = []
    for i, a in enumerate(window):
        da = abs(a.degree)
        for j in range(i, len(window)):
            b = window[j]
            db = abs(b.degree)
            if da + db > k:
                break
            for c in window[j:]:
                if da + db + abs(c.degree) > k:
                    break
                out.append((a, b, c))
    return out


# -- case generators and checkers, one pair per suite ---------------------


def _grading_cases(k: int):
    return _pairs(k)


def _grading_check(case):
    a, b = case
    got = bracket_basis(a, b)
    bad = sorted(x.degree for x in got if x.degree != a.degree + b.degree)
    if bad:
        return {"inputs": [a.text(), b.text()], "expected": a.degree + b.degree, "got": bad}
    return None


def _antisymmetry_check(case):
    a, b = case
    lhs, rhs = bracket_basis(a, b), -bracket_basis(b, a)
    if lhs != rhs:
        return {"inputs": [a.text(), b.text()], "expected": _el(rhs), "got": _el(lhs)}
    return None


def _jacobi_check(case):
    a, b, c = case
    total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
    if total:
        return {"inputs": [a.text(), b.text(), c.text()], "expected": {}, "got": _el(total)}
    return None


def _sigma_cases(k: int):
    cases = [("anti", a, b) for a, b in _pairs(k)]
    for t in trees_up_to(k + 1):
        cases.append(("square", Basis("+", t)))
        cases.append(("square", Basis("-", t)))
    cases.append(("square", D))
    return cases


def _sigma_check(case):
    if case[0] == "anti":
        _, a, b = case
        lhs = sigma(bracket_basis(a, b))
        rhs = bracket(sigma(b), sigma(a))
        if lhs != rhs:
            return {"inputs": ["anti", a.text(), b.text()], "expected": _el(rhs), "got": _el(lhs)}
        return None
    _, a = case
    got = sigma(sigma(a))
    if got != Element.of(a):
        return {"inputs": ["square", a.text()], "expected": _el(Element.of(a)), "got": _el(got)}
    return None


def _xi_cases(k: int):
    cases = []
    for n in range(2, k + 1):
        for t in enumerate_trees(n):
            for m in range(1, n):
                for r in enumerate_trees(m):
                    for s in enumerate_trees(n - m):
                        cases.append((r, s, t))
    return cases


def _xi_check(case):
    r, s, t = case
    lhs = beta(t, s, r) * sym_count(t)
    rhs = alpha(s, t, r) * sym_count(r) * sym_count(s)
    if lhs != rhs:
        return {"inputs": [r.canon, s.canon, t.canon], "expected": rhs, "got": lhs}
    return None


def _aut_cases(k: int):
    window = _basis_window(k)
    cases = [("conj", z, b) for z in ZETAS for b in window]
    cases += [("center", Fraction(-1), b) for b in window]
    hom_pairs = [(a, b) for a, b in _pairs(min(k, 6))]
    cases += [("hom", z, a, b) for z in ZETAS for a, b in hom_pairs]
    cases += [("hom0", None, a, b) for a, b in hom_pairs]
    return cases


def _aut_check(case):
    kind, z = case[0], case[1]
    if kind == "conj":
        b = case[2]
        got = tau_zero(tau_zeta(z, tau_zero(b)))
        want = tau_zeta(1 / z, b)
    elif kind == "center":
        b = case[2]
        got = tau_zeta(z, tau_zero(b))
        want = tau_zero(tau_zeta(z, b))
    elif kind == "hom":
        a, b = case[2], case[3]
        got = tau_zeta(z, bracket_basis(a, b))
        want = bracket(tau_zeta(z, a), tau_zeta(z, b))
    else:
        a, b = case[2], case[3]
        got = tau_zero(bracket_basis(a, b))
        want = bracket(tau_zero(a), tau_zero(b))
    if got != want:
        inputs = [kind, None if z is None else str(z)] + [x.text() for x in case[2:]]
        return {"inputs": inputs, "expected": _el(want), "got": _el(got)}
    return None


SUITES: dict[str, tuple[Callable, Callable]] = {
    "jacobi": (_triples, _jacobi_check),
    "antisymmetry": (_pairs, _antisymmetry_check),
    "grading": (_grading_cases, _grading_check),
    "sigma": (_sigma_cases, _sigma_check),
    "xi_identity": (_xi_cases, _xi_check),
    "aut_relation": (_aut_cases, _aut_check),
}


def _normalize_suite(name: str) -> str:
    key = name.replace("-", "_")
    if key not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return key


def _run_slice(name: str, k: int, offset: int, stride: int) -> tuple[int, list]:
    make, check = SUITES[name]
    cases = make(k)[offset::stride]
    violations = []
    for case in cases:
        v = check(case)
        if v is not None:
            violations.append(v)
    return len(cases), violations


def _run_parallel(fn, args_list: Sequence[tuple], jobs: int) -> list:
    if jobs <= 1 or len(args_list) <= 1:
        return [fn(*args) for args in args_list]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *args) for args in args_list]
        return [f.result() for f in futures]


def default_jobs() -> int:
    return os.cpu_count() or 1


def run_suite(name: str, max_total_degree: int, jobs: int = 1) -> Report:
    """Run one exhaustive identity sweep up to the given total degree.

    Cases are dealt round-robin to ``jobs`` workers; results do not depend
    on ``jobs``.
    """
    key = _normalize_suite(name)
    if max_total_degree < 1:
        raise ValueError("max_total_degree must be positive")
    start = time.perf_counter()
    jobs = max(1, jobs)
    parts = _run_parallel(_run_slice, [(key, max_total_degree, i, jobs) for i in range(jobs)], jobs)
    # restore case order: worker i held cases i, i+jobs, ...
    report = Report(key, {"max_degree": max_total_degree})
    for count, violations in parts:
        report.cases += count
        report.violations.extend(violations)
    report.violations.sort(key=lambda v: repr(v["inputs"]))
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


# -- centralizers -----------------------------------------------------------


def _homogeneous_degree(x: Element) -> int:
    if not x:
        raise ValueError("element must be nonzero")
    support = x.degree_support()
    if len(support) != 1:
        raise ValueError("element must be homogeneous")
    return next(iter(support))


def _ad_matrix(x: Element, source: Sequence[Basis]) -> list[list[Fraction]]:
    images = [bracket(x, b) for b in source]
    rows_index: dict[Basis, int] = {}
    for img in images:
        for b in img:
            rows_index.setdefault(b, len(rows_index))
    mat = [[Fraction(0)] * len(source) for _ in rows_index]
    for j, img in enumerate(images):
        for b, c in img.items():
            mat[rows_index[b]][j] = c
    return mat


def centralizer(x: Element | Basis, n: int) -> list[Element]:
    """Basis of ``{y in g_n : [x, y] = 0}`` for homogeneous nonzero ``x``."""
    if isinstance(x, Basis):
        x = Element.of(x)
    _homogeneous_degree(x)
    source = basis_of_degree(n)
    mat = _ad_matrix(x, source)
    if not mat:
        kernel = [[Fraction(int(i == j)) for j in range(len(source))] for i in range(len(source))]
    else:
        kernel = null_space(mat)
    return [Element(dict(zip(source, v))) for v in kernel]


def _generator(seed: int, *key: int) -> np.random.Generator:
    words = [seed] + [k + 2**31 for k in key]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(words)))


def random_element(rng: np.random.Generator, degree: int) -> Element:
    """A random nonzero element of one weight space.

    The support is a uniformly sized random subset of the weight basis;
    coefficients are uniform on ``{-9..9} \\ {0}``.
    """
    basis = basis_of_degree(degree)
    k = int(rng.integers(1, len(basis) + 1))
    idx = sorted(int(i) for i in rng.choice(len(basis), size=k, replace=False))
    coeffs = rng.integers(1, 10, size=k) * rng.choice([-1, 1], size=k)
    return Element({basis[i]: int(c) for i, c in zip(idx, coeffs)})


def _self_centralizing_slice(max_degree: int, trials: int, seed: int, sign: int) -> tuple[int, list]:
    cases = 0
    violations = []
    for m in range(1, max_degree + 1):
        xs = [("basis", b.text(), Element.of(b)) for b in basis_of_degree(m)]
        for i in range(trials):
            xs.append(("random", i, random_element(_generator(seed, m, i), m)))
        for label, ident, x in xs:
            if sign < 0:
                x = sigma(x)
            for n in range(1, max_degree + 1):
                cases += 1
                cent = centralizer(x, sign * n)
                problem = None
                for y in cent:
                    if bracket(x, y):
                        problem = "kernel vector does not commute"
                if n != m and cent:
                    problem = problem or f"nontrivial centralizer of dimension {len(cent)}"
                if n == m:
                    if len(cent) != 1:
                        problem = problem or f"centralizer of dimension {len(cent)}, expected 1"
                    elif not _proportional(cent[0], x):
                        problem = problem or "centralizer is not the line through x"
                if problem:
                    violations.append(
                        {
                            "inputs": [sign, m, n, label, ident],
                            "expected": "line" if n == m else "zero",
                            "got": problem,
                        }
                    )
    return cases, violations


def _proportional(y: Element, x: Element) -> bool:
    if set(y) != set(x):
        return False
    b0 = next(iter(x))
    k = y.coeff(b0) / x.coeff(b0)
    return y == x * k


def self_centralizing_check(
    max_degree: int, trials: int = 50, seed: int = DEFAULT_SEED, jobs: int = 1
) -> Report:
    """Check that positive and negative parts are completely self-centralizing.

    For ``1 <= m, n <= max_degree`` and each basis or seeded random ``x`` in
    ``g_m``, the centralizer of ``x`` in ``g_n`` must be zero for ``n != m``
    and the line through ``x`` for ``n == m``. The negative side repeats the
    check on ``sigma(x)`` inside ``g_{-n}``.
    """
    start = time.perf_counter()
    parts = _run_parallel(
        _self_centralizing_slice, [(max_degree, trials, seed, s) for s in (1, -1)], min(jobs, 2)
    )
    report = Report(
        "self_centralizing", {"max_degree": max_degree, "trials": trials, "seed": seed}
    )
    for count, violations in parts:
        report.cases += count
        report.violations.extend(violations)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


# -- leading terms ----------------------------------------------------------


def _vec(x: Element, degree: int) -> dict[Basis, Fraction]:
    return {b: c for b, c in x.items() if b.degree == degree}


def leading_term_check(x: Element, y: Element) -> tuple[int, int, Element]:
    """Locate the weight ``nu + kappa`` where ``[x, y]`` is certainly nonzero.

    ``nu`` is the top degree of ``x`` after ordering the pair so that ``y``
    has the larger top degree; ``kappa`` is the largest degree at which ``y``
    stops being a fixed multiple ``c * x`` from the top down. Returns
    ``(nu, kappa, witness)`` with ``witness`` the projection of ``[x, y]``
    onto degree ``nu + kappa``.
    """
    for z in (x, y):
        if not z:
            raise ValueError("elements must be nonzero")
        if min(z.degree_support()) <= 0:
            raise ValueError("elements must have positive degree support")
    if max(x.degree_support()) > max(y.degree_support()):
        x, y = y, x
    nu = max(x.degree_support())
    top = max(y.degree_support())
    c: Fraction | None = None
    kappa = None
    for k in range(top, 0, -1):
        xk, yk = _vec(x, k), _vec(y, k)
        if c is None:
            if not xk:
                if yk:
                    kappa = k
                    break
                continue
            b0 = next(iter(xk))
            ratio = yk.get(b0, Fraction(0)) / xk[b0]
            if all(yk.get(b, 0) == ratio * v for b, v in xk.items()) and set(yk) <= set(xk):
                c = ratio
            else:
                kappa = k
                break
        elif Element(yk) != Element(xk) * c:
            kappa = k
            break
    if kappa is None:
        raise ValueError("elements are linearly dependent")
    witness = project_degree(bracket(x, y), nu + kappa)
    return nu, kappa, witness


# -- derivations ------------------------------------------------------------


@dataclass
class DerivationSpace:
    truncation: int
    dimension: int
    basis: list[dict[Basis, Element]]

    def matches_ad_d(self) -> bool:
        """True iff the space is spanned by ``x -> [x, d]`` on the window."""
        if self.dimension != 1:
            return False
        delta = self.basis[0]
        ref = {b: bracket(b, D) for b in delta}
        scale = None
        for b, img in delta.items():
            r = ref[b]
            if not r:
                if img:
                    return False
                continue
            b0 = next(iter(r))
            k = img.coeff(b0) / r.coeff(b0)
            if scale is None:
                scale = k
            if k != scale or img != r * k:
                return False
        return scale is not None and scale != 0


def derivation_space(N: int) -> DerivationSpace:
    """Degree-0 derivations of the truncation to degrees ``|n| <= N``.

    Unknowns are the matrix entries of ``delta`` on each weight space;
    constraints are the Leibniz rule on basis pairs whose degrees and
    bracket degree all lie in the window.
    """
    if N < 1:
        raise ValueError("N must be positive")
    window = _basis_window(N)
    var: dict[tuple[Basis, Basis], int] = {}
    for b in window:
        for c in basis_of_degree(b.degree):
            var[(b, c)] = len(var)
    solver = RowReducer(len(var))
    for a, b in itertools.combinations_with_replacement(window, 2):
        if abs(a.degree + b.degree) > N:
            continue
        rows: dict[Basis, dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
        # delta([a, b])
        for e, k in bracket_basis(a, b).items():
            for f in basis_of_degree(e.degree):
                rows[f][var[(e, f)]] += k
        # - [delta(a), b] - [a, delta(b)]
        for c in basis_of_degree(a.degree):
            for f, k in bracket_basis(c, b).items():
                rows[f][var[(a, c)]] -= k
        for c in basis_of_degree(b.degree):
            for f, k in bracket_basis(a, c).items():
                rows[f][var[(b, c)]] -= k
        for row in rows.values():
            solver.add({i: v for i, v in row.items() if v})
    kernel = solver.null_space()
    basis = []
    for vec in kernel:
        images: dict[Basis, dict[Basis, Fraction]] = {b: {} for b in window}
        for (b, c), i in var.items():
            if vec[i]:
                images[b][c] = vec[i]
        basis.append({b: Element(img) for b, img in images.items()})
    return DerivationSpace(N, len(kernel), basis)


# -- finite-dimensional subalgebras ------------------------------------------


@dataclass
class SubalgebraClass:
    closed: bool
    dimension: int
    kind: str | None
    derived_dimension: int | None = None
    escaping: Element | None = None
    basis: list[Element] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "closed": self.closed,
            "dimension": self.dimension,
            "kind": self.kind,
            "derived_dimension": self.derived_dimension,
            "escaping": None if self.escaping is None else self.escaping.to_json(),
        }


class _Span:
    def __init__(self):
        self.cols: dict[Basis, int] = {}
        self.reducer = RowReducer(0)
        self.vectors: list[Element] = []

    def _row(self, x: Element) -> dict[int, Fraction]:
        for b in x:
            if b not in self.cols:
                self.cols[b] = len(self.cols)
                self.reducer.ncols = len(self.cols)
        return {self.cols[b]: c for b, c in x.items()}

    def __contains__(self, x: Element) -> bool:
        return all(b in self.cols for b in x) and self.reducer.contains(self._row(x))

    def add(self, x: Element) -> bool:
        if self.reducer.add(self._row(x)):
            self.vectors.append(x)
            return True
        return False

    def __len__(self) -> int:
        return len(self.vectors)


def subalgebra_closure(
    gens: Sequence[Element | Basis], rounds: int = 3, max_dim: int = 12
) -> SubalgebraClass:
    """Close ``span(gens)`` under brackets and classify small results.

    Each round brackets every pair of spanning vectors and adds whatever
    escapes the current span. The span is closed when a round adds nothing;
    after ``rounds`` rounds, or once the span exceeds ``max_dim``, the
    result is reported as not closed. ``escaping`` is the first bracket
    found outside the span of the generators themselves.
    """
    if not gens:
        raise ValueError("need at least one generator")
    span = _Span()
    for g in gens:
        span.add(Element.of(g) if isinstance(g, Basis) else g)
    first_escape = None
    for _ in range(rounds):
        new = []
        vecs = list(span.vectors)
        for i, j in itertools.combinations(range(len(vecs)), 2):
            z = bracket(vecs[i], vecs[j])
            if z and z not in span:
                if first_escape is None:
                    first_escape = z
                new.append(z)
        if not new:
            return _classify(span.vectors, first_escape)
        for z in new:
            span.add(z)
            if len(span) > max_dim:
                break
        if len(span) > max_dim:
            break
    return SubalgebraClass(False, len(span), None, escaping=first_escape, basis=list(span.vectors))


def _classify(vectors: list[Element], escape: Element | None) -> SubalgebraClass:
    dim = len(vectors)
    derived = _Span()
    for x, y in itertools.combinations(vectors, 2):
        z = bracket(x, y)
        if z:
            derived.add(z)
    ddim = len(derived)
    if ddim == 0:
        kind = "abelian"
    elif dim == 2:
        kind = "nonabelian_2dim"
    elif dim == 3 and ddim == 3:
        kind = "sl2"
    elif dim == 3 and ddim == 2 and _cartan_plus_opposite(vectors):
        kind = "h_plus_opposite_roots"
    else:
        kind = "other"
    return SubalgebraClass(True, dim, kind, ddim, escape, list(vectors))


def _cartan_plus_opposite(vectors: list[Element]) -> bool:
    span = _Span()
    for v in vectors:
        span.add(v)
    if Element.of(D) not in span:
        return False
    signs = set()
    for v in vectors:
        rest = Element({b: c for b, c in v.items() if b.kind != "d"})
        if rest:
            if not rest.is_homogeneous():
                return False
            signs.add(1 if next(iter(rest.degree_support())) > 0 else -1)
    return signs == {1, -1}
