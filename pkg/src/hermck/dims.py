"""Dimension counts for spaces of (restricted) spinor-valued polynomials.

Space kinds, for bidegree (a, b) and value-degree parameter r:

``P``  polynomials on C^{n-1} with values of degree r over f†_1..f†_{n-1}
``Q``  the same with values of degree r-1 (carried by f†_n)
``X``  Ker ∂̃z ∩ P
``Y``  Ker ∂̃z† ∩ Q
``HM`` Hermitean monogenic polynomials on C^n with values of degree r
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .poly import SpinorPoly, dirac, mul_var

__all__ = [
    "SpaceDescriptor",
    "dim_formula",
    "dim_m_alt",
    "dim_m_sum",
    "fischer_project",
    "dim_recurrences_check",
]

KINDS = ("P", "Q", "X", "Y", "HM")


@dataclass(frozen=True)
class SpaceDescriptor:
    kind: str
    n: int
    r: int
    a: int
    b: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.a < 0 or self.b < 0:
            raise ValueError("bidegree must be non-negative")
        if self.kind == "HM":
            if not 0 < self.r < self.n:
                raise ValueError("HM dimension formula needs 0 < r < n")
        elif not 0 <= self.r <= self.n:
            raise ValueError(f"value degree r={self.r} outside 0..n")


def _integral(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {q}")
    if q < 0:
        raise ArithmeticError(f"{what} evaluated to negative {q}")
    return int(q)


def _p(n, r, a, b):
    return comb(n - 1, r) * comb(a + n - 2, a) * comb(b + n - 2, b)


def _q(n, r, a, b):
    if r < 1:
        return 0
    return comb(n - 1, r - 1) * comb(a + n - 2, a) * comb(b + n - 2, b)


def _x(n, r, a, b):
    if a < 0 or b < 0:
        return 0
    if a == 0:
        # ∂̃z kills everything of z-degree 0
        return _p(n, r, a, b)
    q = Fraction(r, a + r) * comb(n - 1, r) * comb(a + n - 1, a) * comb(b + n - 2, b)
    return _integral(q, f"x[{a},{b},{r}]")


def _y(n, r, a, b):
    if a < 0 or b < 0 or r < 1:
        return 0
    if b == 0:
        # ∂̃z† kills everything of z^c-degree 0
        return _q(n, r, a, b)
    # r/(b+n-r)·C(n-1,r) rewritten as (n-r)/(b+n-r)·C(n-1,r-1), defined at r = n
    q = Fraction(n - r, b + n - r) * comb(n - 1, r - 1) * comb(a + n - 2, a) * comb(b + n - 1, b)
    return _integral(q, f"y[{a},{b},{r}]")


def _m(n, r, a, b):
    q = (
        Fraction((a + b + n) * r, (a + r) * (b + n - r))
        * comb(n - 1, r)
        * comb(a + n - 1, a)
        * comb(b + n - 1, b)
    )
    return _integral(q, f"m[{a},{b}]^({r})")


def dim_formula(s: SpaceDescriptor) -> int:
    """Closed-form dimension of the described space."""
    fn = {"P": _p, "Q": _q, "X": _x, "Y": _y, "HM": _m}[s.kind]
    return fn(s.n, s.r, s.a, s.b)


def dim_m_alt(n: int, r: int, a: int, b: int) -> int:
    """Second closed form for dim HM, written with different binomials."""
    SpaceDescriptor("HM", n, r, a, b)
    q = (
        Fraction(a + b + n, a + r)
        * comb(b + n - r - 1, b)
        * comb(b + n - 1, r - 1)
        * comb(a + n - 1, a)
    )
    return _integral(q, "alternative m")


def dim_m_sum(n: int, r: int, a: int, b: int) -> int:
    """dim HM as Σ_j x_{a,j,r} + Σ_i y_{i,b,r} (one count per initial polynomial)."""
    SpaceDescriptor("HM", n, r, a, b)
    return sum(_x(n, r, a, j) for j in range(b + 1)) + sum(_y(n, r, i, b) for i in range(a + 1))


def fischer_project(P: SpinorPoly, which: str, a: int, b: int, r: int) -> tuple:
    """Split P into kernel part and image part of a restricted Dirac operator.

    ``which='dz'``: P has bidegree (a, b) and value degree r; with ψ = ∂̃z P the
    image part is z̃ψ/(a+r).  ``which='dzdag'``: P has value degree r-1 (the
    p¹ convention, f†_n omitted); with ψ = ∂̃z† P the image part is
    z̃†ψ/(b+n-r).  Returns ``(kernel_part, image_part)``.  When the constant
    vanishes the operator is zero on the space and P is returned as kernel.
    """
    n = P.n
    if which == "dz":
        const, deg, var = a + r, r, "z"
    elif which == "dzdag":
        const, deg, var = b + n - r, r - 1, "zdag"
    else:
        raise ValueError(f"unknown side {which!r}")
    if P:
        if P.bidegrees() != {(a, b)}:
            raise ValueError(f"expected bidegree {(a, b)}, found {sorted(P.bidegrees())}")
        if P.blade_degrees() != {deg}:
            raise ValueError(f"expected value degree {deg}, found {sorted(P.blade_degrees())}")
        if P.uses_last():
            raise ValueError("P must not involve z_n, z_n^c or f†_n")
    psi = dirac(P, which, restricted=True)
    if not psi:
        # whole space is the kernel; covers the zero-constant corners a+r=0, b+n-r=0
        return P, SpinorPoly.zero(n)
    if const == 0:
        raise ValueError(f"degenerate Fischer constant for (a,b,r)=({a},{b},{r})")
    image = mul_var(psi, var, restricted=True).scale(Fraction(1, const))
    return P - image, image


def dim_recurrences_check(ns: Iterable[int], a_max: int, b_max: int) -> list:
    """Check the Fischer recurrences and the HM total over a finite range.

    Returns a list of failure descriptions; empty means every identity holds.
    """
    failures = []
    for n in ns:
        for a in range(a_max + 1):
            for b in range(b_max + 1):
                for r in range(0, n + 1):
                    lhs = _p(n, r, a, b)
                    rhs = _x(n, r, a, b) + _x(n, r + 1, a - 1, b)
                    if r <= n - 1 and lhs != rhs:
                        failures.append(f"p != x + x' at n={n} r={r} a={a} b={b}: {lhs} vs {rhs}")
                    lhs = _q(n, r, a, b)
                    rhs = _y(n, r, a, b) + _y(n, r - 1, a, b - 1)
                    if r >= 1 and lhs != rhs:
                        failures.append(f"q != y + y' at n={n} r={r} a={a} b={b}: {lhs} vs {rhs}")
                    if 0 < r < n:
                        m = _m(n, r, a, b)
                        s = dim_m_sum(n, r, a, b)
                        if m != s:
                            failures.append(f"m != Σx + Σy at n={n} r={r} a={a} b={b}: {m} vs {s}")
    return failures
