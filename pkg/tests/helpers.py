"""Random data generators and the matrix-representation oracle used by the tests."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import numpy as np

from hermck.algebra import GaussianRational, SpinorElement, blade
from hermck.ck import CkData
from hermck.poly import SpinorPoly, dirac


# ------------------------------------------------------------------ oracle
#
# Jordan–Wigner matrices for f_j, f†_j on C^(2^n).  Built from Pauli factors
# only; nothing here uses the blade sign rules of hermck.algebra.

_Z = np.array([[1, 0], [0, -1]], dtype=np.int64)
_ID = np.eye(2, dtype=np.int64)
_RAISE = np.array([[0, 0], [1, 0]], dtype=np.int64)


def _kron_all(factors):
    out = np.array([[1]], dtype=np.int64)
    for m in factors:
        out = np.kron(out, m)
    return out


def jw_creation(n: int, j: int) -> np.ndarray:
    return _kron_all([_Z] * j + [_RAISE] + [_ID] * (n - j - 1))


def jw_annihilation(n: int, j: int) -> np.ndarray:
    return jw_creation(n, j).T


def jw_vacuum(n: int) -> np.ndarray:
    v = np.zeros(2**n, dtype=np.int64)
    v[0] = 1
    return v


def jw_state(n: int, indices) -> np.ndarray:
    """f†_{k1} ... f†_{kr} applied to the vacuum, rightmost factor first."""
    v = jw_vacuum(n)
    for k in reversed(indices):
        v = jw_creation(n, k) @ v
    return v


def jw_vector(v: SpinorElement) -> np.ndarray:
    """Integer-coefficient spinor as an oracle state vector."""
    out = np.zeros(2**v.n, dtype=np.int64)
    for mask, c in v.terms.items():
        assert c.is_real and c.re.denominator == 1
        idx = [k for k in range(v.n) if mask >> k & 1]
        out = out + int(c.re) * jw_state(v.n, idx)
    return out


# -------------------------------------------------------------- generators


def rand_scalar(rng: random.Random, gaussian: bool = True) -> GaussianRational:
    re = Fraction(rng.randint(-5, 5), rng.choice((1, 1, 2, 3)))
    im = Fraction(rng.randint(-3, 3), rng.choice((1, 2))) if gaussian and rng.random() < 0.4 else 0
    g = GaussianRational(re, im)
    return g if g else GaussianRational(1)


def exponents(nvars: int, n: int, d: int) -> list:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return out


def random_poly(
    rng: random.Random,
    n: int,
    a: int,
    b: int,
    degree: int,
    span: int | None = None,
    nterms: int = 4,
    gaussian: bool = True,
) -> SpinorPoly:
    """Random polynomial of bidegree (a, b), values of blade degree ``degree``.

    Variables and generators are drawn from the first ``span`` indices
    (default all n).
    """
    span = n if span is None else span
    if a < 0 or b < 0 or degree < 0 or degree > span:
        return SpinorPoly.zero(n)
    alphas = exponents(span, n, a)
    betas = exponents(span, n, b)
    blades = list(combinations(range(span), degree))
    if not alphas or not betas or not blades:
        return SpinorPoly.zero(n)
    items = [
        ((rng.choice(alphas), rng.choice(betas), blade(*rng.choice(blades))), rand_scalar(rng, gaussian))
        for _ in range(nterms)
    ]
    return SpinorPoly(n, items)


def random_mixed_poly(rng: random.Random, n: int, max_deg: int = 3, nterms: int = 6) -> SpinorPoly:
    """Random inhomogeneous polynomial with mixed blade degrees."""
    total = SpinorPoly.zero(n)
    for _ in range(nterms):
        a = rng.randint(0, max_deg)
        b = rng.randint(0, max_deg - a)
        total = total + random_poly(rng, n, a, b, rng.randint(0, n), nterms=1)
    return total


def random_ck_data(rng: random.Random, n: int, r: int, a: int, b: int) -> CkData:
    """Compatible initial data: p⁰ = ∂̃z q and p¹ = ∂̃z† q'.

    Where a compatibility family is vacuous (r = n-1, resp. r = 1) an
    arbitrary polynomial is added on top.
    """
    span = n - 1
    top = []
    for j in range(b + 1):
        q = random_poly(rng, n, a + 1, b - j, r - 1, span)
        p0 = dirac(q, "dz", restricted=True)
        if r == n - 1:
            p0 = p0 + random_poly(rng, n, a, b - j, r, span, nterms=2)
        top.append(p0)
    right = []
    for i in range(a + 1):
        q = random_poly(rng, n, a - i, b + 1, r, span)
        p1 = dirac(q, "dzdag", restricted=True)
        if r == 1:
            p1 = p1 + random_poly(rng, n, a - i, b, r - 1, span, nterms=2)
        right.append(p1)
    return CkData(n, r, a, b, tuple(top), tuple(right))


def random_case(rng: random.Random, n_range=(2, 4), deg_max: int = 3) -> tuple:
    n = rng.randint(*n_range)
    r = rng.randint(1, n - 1)
    return n, r, rng.randint(0, deg_max), rng.randint(0, deg_max)
