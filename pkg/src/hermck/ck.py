"""Cauchy–Kovalevskaya extension of Hermitean monogenic polynomials.

Notation follows the polynomial module: the distinguished variable pair is
(z_n, z_n^c) at index ``n - 1`` and f†_n is the last generator.  Initial
data live on C^{n-1}; ``p1`` polynomials are given without their f†_n
factor, which the engine applies itself.

Two independent routes produce the extension:

* :func:`extend_scheme` fills the triangular table of components with the
  two first-order calculation rules and sums the Taylor-like expansion.
* :func:`extend_full` sums the closed-form operator series of each initial
  polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from fractions import Fraction

from .algebra import Witt
from .poly import (
    SpinorPoly,
    bidegree_component,
    diff,
    dirac,
    join_last_poly,
    laplacian_tilde,
    left_mul,
    mul_monomial,
    restrict,
    split_last_poly,
)

__all__ = [
    "IncompatibleDataError",
    "Violation",
    "CkData",
    "check_compatibility",
    "extend_scheme",
    "fill_scheme",
    "extend_closed_m0",
    "extend_closed_m1",
    "extend_full",
    "extract_data",
    "extend_special",
    "extend_truncated_series",
    "monogenic_defects",
    "is_monogenic",
    "ck_operator",
]


class IncompatibleDataError(Exception):
    """Initial data violate a compatibility condition; no extension exists."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Violation:
    """One failed kernel condition.

    ``family`` is ``'dz'`` (∂̃z p⁰_{a,b-index} ≠ 0) or ``'dzdag'``
    (∂̃z† p¹_{a-index,b} ≠ 0); ``residual`` is the nonzero image.
    """

    family: str
    index: int
    label: str
    residual: SpinorPoly

    def __str__(self):
        op = "∂̃z" if self.family == "dz" else "∂̃z†"
        return f"{op} {self.label} ≠ 0"


def _p0_label(a, b, j):
    return f"p0[{a},{b - j}]"


def _p1_label(a, b, i):
    return f"p1[{a - i},{b}]"


def _check_shape(p: SpinorPoly, n: int, bideg: tuple, r: int, what: str) -> None:
    if p.n != n:
        raise ValueError(f"{what}: polynomial has n={p.n}, expected {n}")
    if not p:
        return
    if p.bidegrees() != {bideg}:
        raise ValueError(f"{what}: expected bidegree {bideg}, found {sorted(p.bidegrees())}")
    if p.blade_degrees() != {r}:
        raise ValueError(f"{what}: expected value degree {r}, found {sorted(p.blade_degrees())}")
    if p.uses_last():
        raise ValueError(f"{what}: must not involve z_n, z_n^c or f†_n")


@dataclass(frozen=True)
class CkData:
    """Initial data for a CK extension of bidegree (a, b) with values of degree r.

    ``top_row_0[j]`` is p⁰_{a,b-j} (j = 0..b), value degree r;
    ``right_col_1[i]`` is p¹_{a-i,b} (i = 0..a), value degree r-1.
    """

    n: int
    r: int
    a: int
    b: int
    top_row_0: tuple
    right_col_1: tuple

    def __post_init__(self):
        n, r, a, b = self.n, self.r, self.a, self.b
        object.__setattr__(self, "top_row_0", tuple(self.top_row_0))
        object.__setattr__(self, "right_col_1", tuple(self.right_col_1))
        if n < 2:
            raise ValueError("CK extension needs n >= 2")
        if not 0 < r < n:
            raise ValueError(f"general case needs 0 < r < n, got r={r}, n={n}")
        if a < 0 or b < 0:
            raise ValueError("bidegree must be non-negative")
        if len(self.top_row_0) != b + 1:
            raise ValueError(f"top_row_0 needs b+1={b + 1} polynomials")
        if len(self.right_col_1) != a + 1:
            raise ValueError(f"right_col_1 needs a+1={a + 1} polynomials")
        for j, p in enumerate(self.top_row_0):
            _check_shape(p, n, (a, b - j), r, _p0_label(a, b, j))
        for i, p in enumerate(self.right_col_1):
            _check_shape(p, n, (a - i, b), r - 1, _p1_label(a, b, i))

    @classmethod
    def zeros(cls, n, r, a, b) -> "CkData":
        z = SpinorPoly.zero(n)
        return cls(n, r, a, b, (z,) * (b + 1), (z,) * (a + 1))


def check_compatibility(d: CkData) -> list:
    """List of violated compatibility conditions (empty when compatible)."""
    out = []
    if d.r < d.n - 1:
        for j, p in enumerate(d.top_row_0):
            res = dirac(p, "dz", restricted=True)
            if res:
                out.append(Violation("dz", j, _p0_label(d.a, d.b, j), res))
    if d.r > 1:
        for i, p in enumerate(d.right_col_1):
            res = dirac(p, "dzdag", restricted=True)
            if res:
                out.append(Violation("dzdag", i, _p1_label(d.a, d.b, i), res))
    return out


def _require_compatible(d: CkData) -> None:
    bad = check_compatibility(d)
    if bad:
        raise IncompatibleDataError(bad)


def fill_scheme(d: CkData) -> tuple:
    """Complete the component table.

    Returns ``(P0, P1)`` dicts keyed by (i, j) holding p⁰_{a-i,b-j} and
    p¹_{a-i,b-j}.  Entries are produced level by level in i + j; at each
    level the p¹ entries (from p⁰ one step up) come before the p⁰ entries
    (from p¹ one step up).
    """
    _require_compatible(d)
    a, b = d.a, d.b
    P0 = {(0, j): d.top_row_0[j] for j in range(b + 1)}
    P1 = {(i, 0): d.right_col_1[i] for i in range(a + 1)}
    for level in range(1, a + b + 1):
        cells = [(i, level - i) for i in range(max(0, level - b), min(a, level) + 1)]
        for i, j in cells:
            if j >= 1:
                P1[(i, j)] = -dirac(P0[(i, j - 1)], "dzdag", restricted=True)
        for i, j in cells:
            if i >= 1:
                P0[(i, j)] = dirac(P1[(i - 1, j)], "dz", restricted=True)
    return P0, P1


def _zn_powers(n, i, j):
    alpha = [0] * n
    beta = [0] * n
    alpha[-1] = i
    beta[-1] = j
    return alpha, beta


def extend_scheme(d: CkData) -> SpinorPoly:
    """CK extension via the calculation rules; raises on incompatible data."""
    P0, P1 = fill_scheme(d)
    n = d.n
    total = SpinorPoly.zero(n)
    for (i, j), p0 in P0.items():
        p = join_last_poly(p0, P1[(i, j)])
        if p:
            alpha, beta = _zn_powers(n, i, j)
            total = total + mul_monomial(p, alpha, beta, Fraction(1, factorial(i) * factorial(j)))
    return total


def ck_operator(q: SpinorPoly) -> SpinorPoly:
    """One application of z_n ∂̃z f_n + z_n^c ∂̃z† f†_n."""
    n = q.n
    last = n - 1
    za, zb = _zn_powers(n, 1, 0)
    ca, cb = _zn_powers(n, 0, 1)
    hol = mul_monomial(dirac(left_mul(Witt(False, last), q), "dz", True), za, zb)
    anti = mul_monomial(dirac(left_mul(Witt(True, last), q), "dzdag", True), ca, cb)
    return hol + anti


def _series(start: SpinorPoly, kmax: int, shift: int) -> SpinorPoly:
    # Σ_{k=0}^{kmax} T^k start / (⌊k/2⌋! (⌊(k+1)/2⌋ + shift)!)
    total = SpinorPoly.zero(start.n)
    cur = start
    for k in range(kmax + 1):
        if k:
            cur = ck_operator(cur)
        if not cur:
            break
        coeff = Fraction(1, factorial(k // 2) * factorial((k + 1) // 2 + shift))
        total = total + cur.scale(coeff)
    return total


def _homogeneous_input(p: SpinorPoly, a: int, b: int, what: str) -> None:
    if a < 0 or b < 0:
        raise ValueError("bidegree must be non-negative")
    if p and p.bidegrees() != {(a, b)}:
        raise ValueError(f"{what}: expected bidegree {(a, b)}, found {sorted(p.bidegrees())}")
    if p.uses_last():
        raise ValueError(f"{what}: must not involve z_n, z_n^c or f†_n")


def _neg_quarter_lap(p: SpinorPoly, m: int) -> SpinorPoly:
    for _ in range(m):
        p = laplacian_tilde(p).scale(Fraction(-1, 4))
    return p


def extend_closed_m0(p0: SpinorPoly, a: int, b: int, form: str = "series") -> SpinorPoly:
    """Extension of a single p⁰_{a,b} with ∂̃z p⁰ = 0.

    ``form='series'`` sums the operator series up to k = min(2a+1, 2b);
    ``form='laplacian'`` uses the equivalent expansion in powers of -Δ̃/4.
    """
    _homogeneous_input(p0, a, b, "p0")
    res = dirac(p0, "dz", restricted=True)
    if res:
        raise IncompatibleDataError([Violation("dz", 0, f"p0[{a},{b}]", res)])
    if form == "series":
        return _series(p0, min(2 * a + 1, 2 * b), 0)
    if form != "laplacian":
        raise ValueError(f"unknown form {form!r}")
    n = p0.n
    total = SpinorPoly.zero(n)
    tail = dirac(left_mul(Witt(True, n - 1), p0), "dzdag", restricted=True)
    for m in range(min(a, b) + 1):
        alpha, beta = _zn_powers(n, m, m)
        c = Fraction(1, factorial(m) ** 2)
        total = total + mul_monomial(_neg_quarter_lap(p0, m), alpha, beta, c)
    for m in range(min(a, b - 1) + 1):
        alpha, beta = _zn_powers(n, m, m + 1)
        c = Fraction(1, factorial(m) * factorial(m + 1))
        total = total + mul_monomial(_neg_quarter_lap(tail, m), alpha, beta, c)
    return total


def extend_closed_m1(p1: SpinorPoly, a: int, b: int, form: str = "series") -> SpinorPoly:
    """Extension of f†_n p¹_{a,b} with ∂̃z† p¹ = 0 (``p1`` given without f†_n)."""
    _homogeneous_input(p1, a, b, "p1")
    res = dirac(p1, "dzdag", restricted=True)
    if res:
        raise IncompatibleDataError([Violation("dzdag", 0, f"p1[{a},{b}]", res)])
    n = p1.n
    start = left_mul(Witt(True, n - 1), p1)
    if form == "series":
        return _series(start, min(2 * a, 2 * b + 1), 0)
    if form != "laplacian":
        raise ValueError(f"unknown form {form!r}")
    total = SpinorPoly.zero(n)
    tail = dirac(p1, "dz", restricted=True)
    for m in range(min(a, b) + 1):
        alpha, beta = _zn_powers(n, m, m)
        c = Fraction(1, factorial(m) ** 2)
        total = total + mul_monomial(_neg_quarter_lap(start, m), alpha, beta, c)
    for m in range(min(a - 1, b) + 1):
        alpha, beta = _zn_powers(n, m + 1, m)
        c = Fraction(1, factorial(m + 1) * factorial(m))
        total = total + mul_monomial(_neg_quarter_lap(tail, m), alpha, beta, c)
    return total


def extend_full(d: CkData) -> SpinorPoly:
    """CK extension as a sum of closed-form series, one per initial polynomial."""
    _require_compatible(d)
    n, a, b = d.n, d.a, d.b
    total = SpinorPoly.zero(n)
    for j, p0 in enumerate(d.top_row_0):
        if not p0:
            continue
        s = _series(p0, min(2 * a + 1, 2 * b - 2 * j), j)
        alpha, beta = _zn_powers(n, 0, j)
        total = total + mul_monomial(s, alpha, beta)
    for i, p1 in enumerate(d.right_col_1):
        if not p1:
            continue
        s = _series(left_mul(Witt(True, n - 1), p1), min(2 * a - 2 * i, 2 * b + 1), i)
        alpha, beta = _zn_powers(n, i, 0)
        total = total + mul_monomial(s, alpha, beta)
    return total


def extract_data(M: SpinorPoly, r: int, a: int, b: int) -> CkData:
    """Initial data of M: restrictions of its pure z_n^c- and z_n-derivatives."""
    n = M.n
    if M:
        if M.bidegrees() != {(a, b)}:
            raise ValueError(f"expected bidegree {(a, b)}, found {sorted(M.bidegrees())}")
        if M.blade_degrees() != {r}:
            raise ValueError(f"expected value degree {r}, found {sorted(M.blade_degrees())}")
    last = n - 1
    top = []
    for j in range(b + 1):
        p0, _ = split_last_poly(restrict(diff(M, last, conj=True, order=j)))
        top.append(p0)
    right = []
    for i in range(a + 1):
        _, p1 = split_last_poly(restrict(diff(M, last, conj=False, order=i)))
        right.append(p1)
    return CkData(n, r, a, b, tuple(top), tuple(right))


def extend_special(p_list, side: str) -> SpinorPoly:
    """Extensions for value degree 0 (``side='r0'``) or n (``side='rn'``).

    r0: ``p_list[j]`` is the anti-holomorphic p_{0,b-j} with values in span(1)·I.
    rn: ``p_list[i]`` is the holomorphic p_{a-i,0} with values in span(f†_1…f†_n).
    """
    p_list = list(p_list)
    if not p_list:
        raise ValueError("at least one initial polynomial is required")
    n = p_list[0].n
    top = len(p_list) - 1
    if side not in ("r0", "rn"):
        raise ValueError(f"unknown side {side!r}")
    full = (1 << n) - 1
    last = n - 1
    bad = []
    total = SpinorPoly.zero(n)
    for k, p in enumerate(p_list):
        if p.n != n:
            raise ValueError("all polynomials must share n")
        deg = top - k
        for (alpha, beta, mask) in p.terms:
            if alpha[last] or beta[last]:
                bad.append(f"p[{k}] depends on z_n or z_n^c")
            elif side == "r0" and (any(alpha) or sum(beta) != deg):
                bad.append(f"p[{k}] is not anti-holomorphic of degree {deg}")
            elif side == "rn" and (any(beta) or sum(alpha) != deg):
                bad.append(f"p[{k}] is not holomorphic of degree {deg}")
            elif side == "r0" and mask != 0:
                bad.append(f"p[{k}] has values outside span(1)·I")
            elif side == "rn" and mask != full:
                bad.append(f"p[{k}] has values outside span(f†_1…f†_n)")
            else:
                continue
            break
        if side == "r0":
            alpha, beta = _zn_powers(n, 0, k)
        else:
            alpha, beta = _zn_powers(n, k, 0)
        total = total + mul_monomial(p, alpha, beta, Fraction(1, factorial(k)))
    if bad:
        raise IncompatibleDataError(bad)
    return total


def extend_truncated_series(F0: SpinorPoly, F1: SpinorPoly, max_degree: int) -> SpinorPoly:
    """Extend a truncated analytic datum F̃ = F0 + f†_n F1 bidegree by bidegree."""
    if F0.n != F1.n:
        raise ValueError("F0 and F1 must share n")
    for name, F in (("F0", F0), ("F1", F1)):
        if F.uses_last():
            raise ValueError(f"{name} must not involve z_n, z_n^c or f†_n")
        if F.total_degree() > max_degree:
            raise ValueError(f"{name} exceeds total degree {max_degree}")
    bad = []
    total = SpinorPoly.zero(F0.n)
    for deg in range(max_degree + 1):
        for a in range(deg + 1):
            b = deg - a
            c0 = bidegree_component(F0, a, b)
            c1 = bidegree_component(F1, a, b)
            try:
                if c0:
                    total = total + extend_closed_m0(c0, a, b)
                if c1:
                    total = total + extend_closed_m1(c1, a, b)
            except IncompatibleDataError as exc:
                bad.extend(exc.violations)
    if bad:
        raise IncompatibleDataError(bad)
    return total


def monogenic_defects(p: SpinorPoly) -> list:
    """Names of the Hermitean Dirac operators that do not annihilate p."""
    return [op for op in ("dz", "dzdag") if dirac(p, op)]


def is_monogenic(p: SpinorPoly) -> bool:
    return not monogenic_defects(p)
