"""Generalized Virasoro algebra ``V(M)`` for the cyclic group ``M = (1/q)Z``.

Basis ``e_a`` (``a`` in ``M``) and central ``z`` with
``[e_a, e_b] = (b - a) e_{a+b} + b^3 [a == -b] z``.
Homomorphisms on ``M`` are given by their value on the generator ``1/q``.
"""

from __future__ import annotations

import itertools
import time
from collections import defaultdict
from fractions import Fraction
from typing import Mapping, Union

__all__ = [
    "VElement",
    "V_SUITES",
    "Z",
    "delta_theta",
    "e",
    "kappa_zeta",
    "tau_theta",
    "v_bracket",
    "v_verify",
    "z",
]

Z = "z"
Key = Union[Fraction, str]


class VElement:
    """Sparse rational combination of ``e_a`` and ``z`` in ``V((1/q)Z)``."""

    __slots__ = ("q", "terms")

    def __init__(self, q: int, terms: Mapping[Key, Union[int, Fraction]] | None = None):
        if q < 1:
            raise ValueError("q must be a positive integer")
        self.q = q
        clean: dict[Key, Fraction] = {}
        for k, c in (terms or {}).items():
            if k != Z:
                k = Fraction(k)
                if (k * q).denominator != 1:
                    raise ValueError(f"index {k} is not in (1/{q})Z")
            c = Fraction(c)
            if c:
                clean[k] = clean.get(k, 0) + c
        self.terms = {k: c for k, c in clean.items() if c}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VElement):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: VElement) -> VElement:
        _same_q(self, other)
        out = defaultdict(Fraction, self.terms)
        for k, c in other.terms.items():
            out[k] += c
        return VElement(self.q, out)

    def __neg__(self) -> VElement:
        return VElement(self.q, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: VElement) -> VElement:
        return self + (-other)

    def __mul__(self, k) -> VElement:
        return VElement(self.q, {key: c * k for key, c in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"VElement(q={self.q}, {self.to_json()})"

    def to_json(self) -> dict:
        out: dict = {}
        if Z in self.terms:
            out["z"] = str(self.terms[Z])
        es = sorted(k for k in self.terms if k != Z)
        if es:
            out["e"] = {str(k): str(self.terms[k]) for k in es}
        return out

    @classmethod
    def from_json(cls, q: int, data: Mapping) -> VElement:
        terms: dict[Key, Fraction] = {}
        if "z" in data:
            terms[Z] = Fraction(data["z"])
        for k, c in data.get("e", {}).items():
            terms[Fraction(k)] = Fraction(c)
        return cls(q, terms)


def e(q: int, a, c=1) -> VElement:
    return VElement(q, {Fraction(a): c})


def z(q: int, c=1) -> VElement:
    return VElement(q, {Z: c})


def _same_q(x: VElement, y: VElement) -> None:
    if x.q != y.q:
        raise ValueError(f"mismatched groups: q={x.q} and q={y.q}")


def v_bracket(x: VElement, y: VElement) -> VElement:
    _same_q(x, y)
    out: dict[Key, Fraction] = defaultdict(Fraction)
    for a, ca in x.terms.items():
        if a == Z:
            continue
        for b, cb in y.terms.items():
            if b == Z:
                continue
            k = ca * cb
            out[a + b] += k * (b - a)
            if a == -b:
                out[Z] += k * b**3
    return VElement(x.q, out)


def _theta_mult(q: int, gen: Fraction, a: Fraction) -> Fraction:
    return gen ** int(a * q)


def tau_theta(theta_gen, x: VElement) -> VElement:
    """Automorphism scaling ``e_a`` by ``theta(a)`` for the character with
    ``theta(1/q) = theta_gen``; ``z`` is fixed."""
    g = Fraction(theta_gen)
    if not g:
        raise ValueError("theta_gen must be nonzero")
    return VElement(
        x.q, {k: c if k == Z else c * _theta_mult(x.q, g, k) for k, c in x.terms.items()}
    )


def kappa_zeta(zeta, x: VElement) -> VElement:
    """``e_a -> zeta e_{a/zeta}``, ``z -> z/zeta``; needs ``M/zeta == M``."""
    zeta = Fraction(zeta)
    if zeta not in (1, -1):
        raise ValueError(f"(1/{x.q})Z is not preserved by division by {zeta}")
    out: dict[Key, Fraction] = {}
    for k, c in x.terms.items():
        if k == Z:
            out[Z] = c / zeta
        else:
            out[k / zeta] = c * zeta
    return VElement(x.q, out)


def delta_theta(theta_gen, x: VElement) -> VElement:
    """Degree-0 derivation ``e_a -> theta(a) e_a``, ``z -> 0`` for the
    additive map with ``theta(1/q) = theta_gen``."""
    g = Fraction(theta_gen)
    return VElement(x.q, {k: c * g * (k * x.q) for k, c in x.terms.items() if k != Z})


V_SUITES = ("jacobi", "tau_hom", "kappa_hom", "delta_leibniz")


def v_verify(suite: str, q: int, bound: int, theta_gen=3, zeta=-1):
    """Exhaustive sweep over ``e_{k/q}`` with ``|k| <= bound`` and ``z``."""
    from .verify import Report

    key = suite.replace("-", "_")
    if key not in V_SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {list(V_SUITES)}")
    start = time.perf_counter()
    basis = [z(q)] + [e(q, Fraction(k, q)) for k in range(-bound, bound + 1)]
    params = {"q": q, "bound": bound}
    report = Report(f"virasoro_{key}", params)

    def record(inputs, want, got):
        report.cases += 1
        if want != got:
            report.violations.append(
                {"inputs": [x.to_json() for x in inputs], "expected": want.to_json(), "got": got.to_json()}
            )

    if key == "jacobi":
        for x, y, w in itertools.combinations_with_replacement(basis, 3):
            got = v_bracket(x, v_bracket(y, w)) + v_bracket(y, v_bracket(w, x)) + v_bracket(w, v_bracket(x, y))
            record((x, y, w), VElement(q), got)
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
        return report
    if key == "tau_hom":
        params["theta_gen"] = str(Fraction(theta_gen))
        f = lambda v: tau_theta(theta_gen, v)  # noqa: E731
    elif key == "kappa_hom":
        params["zeta"] = str(Fraction(zeta))
        f = lambda v: kappa_zeta(zeta, v)  # noqa: E731
    else:
        params["theta_gen"] = str(Fraction(theta_gen))
        f = lambda v: delta_theta(theta_gen, v)  # noqa: E731
    for x, y in itertools.product(basis, repeat=2):
        if key == "delta_leibniz":
            want = v_bracket(f(x), y) + v_bracket(x, f(y))
        else:
            want = v_bracket(f(x), f(y))
        record((x, y), want, f(v_bracket(x, y)))
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report
