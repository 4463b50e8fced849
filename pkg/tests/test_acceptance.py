"""Acceptance suite: one test per criterion, each reported as PASS/FAIL in the
terminal summary.  Everything is exact, so every tolerance is zero."""
import random
import time
from fractions import Fraction
from functools import lru_cache
from math import factorial

import pytest

from hermck.algebra import GaussianRational, fd
from hermck.ck import (
    extend_full,
    extend_scheme,
    extend_special,
    extend_truncated_series,
    extract_data,
    is_monogenic,
)
from hermck.dims import (
    SpaceDescriptor,
    dim_formula,
    dim_m_alt,
    dim_recurrences_check,
    fischer_project,
)
from hermck.linalg import monogenic_basis
from hermck.poly import (
    SpinorPoly,
    dirac,
    euler_z,
    join_last_poly,
    laplacian_scalar,
    left_mul,
    mul_monomial,
    mul_var,
    number_operator,
    restrict,
)

from helpers import random_case, random_ck_data, random_mixed_poly, random_poly

SWEEP = [(n, r, a, b) for n in range(2, 5) for r in range(1, n) for a in range(4) for b in range(4)]


@lru_cache(maxsize=None)
def basis(n, r, a, b):
    return tuple(monogenic_basis(n, r, a, b))


@lru_cache(maxsize=None)
def ck_instances():
    rng = random.Random(20240501)
    out = []
    for _ in range(100):
        n, r, a, b = random_case(rng, (2, 4), 3)
        out.append(random_ck_data(rng, n, r, a, b))
    return tuple(out)


@pytest.mark.criterion(1, "dimension formula = alternative = oracle")
def test_c1_dimension_agreement():
    start = time.perf_counter()
    bad = []
    for n, r, a, b in SWEEP:
        formula = dim_formula(SpaceDescriptor("HM", n, r, a, b))
        alt = dim_m_alt(n, r, a, b)
        oracle = len(basis(n, r, a, b))
        if not formula == alt == oracle:
            bad.append(((n, r, a, b), formula, alt, oracle))
    elapsed = time.perf_counter() - start
    assert bad == []
    assert elapsed < 60, f"sweep took {elapsed:.1f}s"


@pytest.mark.criterion(2, "CK extension is h-monogenic and recovers its data")
def test_c2_ck_correctness():
    for d in ck_instances():
        M = extend_scheme(d)
        assert not dirac(M, "dz") and not dirac(M, "dzdag")
        assert extract_data(M, d.r, d.a, d.b) == d


@pytest.mark.criterion(3, "scheme = closed form")
def test_c3_scheme_equals_closed_form():
    for d in ck_instances():
        assert extend_scheme(d) == extend_full(d)


@pytest.mark.criterion(4, "basis round trip through extract/extend")
def test_c4_uniqueness_round_trip():
    count = 0
    for n, r, a, b in SWEEP:
        for p in basis(n, r, a, b):
            assert extend_scheme(extract_data(p, r, a, b)) == p
            count += 1
    assert count > 0


@pytest.mark.criterion(5, "Fischer decomposition and dimension recurrences")
def test_c5_fischer():
    rng = random.Random(77)
    for side in ("dz", "dzdag"):
        for _ in range(50):
            n = rng.randint(2, 4)
            a, b = rng.randint(0, 3), rng.randint(0, 3)
            r = rng.randint(0, n - 1) if side == "dz" else rng.randint(1, n)
            deg = r if side == "dz" else r - 1
            P = random_poly(rng, n, a, b, deg, span=n - 1, nterms=5)
            kernel, image = fischer_project(P, side, a, b, r)
            assert not dirac(kernel, side, restricted=True)
            assert kernel + image == P

    def dim(kind, n, r, a, b):
        if a < 0 or b < 0 or not 0 <= r <= n:
            return 0
        return dim_formula(SpaceDescriptor(kind, n, r, a, b))

    for n, r, a, b in SWEEP:
        assert dim("P", n, r, a, b) == dim("X", n, r, a, b) + dim("X", n, r + 1, a - 1, b)
        assert dim("Q", n, r, a, b) == dim("Y", n, r, a, b) + dim("Y", n, r - 1, a, b - 1)
    assert dim_recurrences_check(range(2, 5), 3, 3) == []


@pytest.mark.criterion(6, "operator identities")
def test_c6_operator_identities():
    rng = random.Random(606)
    for _ in range(60):
        n = rng.randint(2, 4)
        p = random_mixed_poly(rng, n)
        # isotropy
        for v in ("z", "zdag"):
            assert not mul_var(mul_var(p, v), v)
        for op in ("dz", "dzdag"):
            assert not dirac(dirac(p, op), op)
        # Laplacian decomposition
        lap = (dirac(dirac(p, "dzdag"), "dz") + dirac(dirac(p, "dz"), "dzdag")).scale(4)
        assert lap == laplacian_scalar(p, restricted=False)
        # norm identity
        x = mul_var(p, "z") + mul_var(p, "zdag")
        sq = mul_var(x, "z") + mul_var(x, "zdag")
        norm = SpinorPoly.zero(n)
        for j in range(n):
            e = tuple(int(k == j) for k in range(n))
            norm = norm + mul_monomial(p, e, e)
        assert sq == norm
        # Euler anticommutator on C^{n-1}
        anti = dirac(mul_var(p, "z", True), "dz", True) + mul_var(dirac(p, "dz", True), "z", True)
        assert anti == euler_z(p, True) + number_operator(p, True)


def _shift_last(p, k, conj):
    """(z_n^c)^k/k! · p (or z_n^k/k!), built term by term."""
    last = p.n - 1
    c = GaussianRational(Fraction(1, factorial(k)))
    out = {}
    for (alpha, beta, mask), v in p.terms.items():
        if conj:
            beta = beta[:last] + (beta[last] + k,)
        else:
            alpha = alpha[:last] + (alpha[last] + k,)
        out[(alpha, beta, mask)] = v * c
    return SpinorPoly(p.n, out.items())


@pytest.mark.criterion(7, "r=0 and r=n special extensions")
def test_c7_special_cases():
    rng = random.Random(707)
    for _ in range(40):
        n = rng.randint(2, 3)
        b = rng.randint(0, 4)
        data = [random_poly(rng, n, 0, b - j, 0, span=n - 1) for j in range(b + 1)]
        M = extend_special(data, "r0")
        assert is_monogenic(M)
        expected = SpinorPoly.zero(n)
        for j, p in enumerate(data):
            expected = expected + _shift_last(p, j, conj=True)
        assert M == expected

        a = rng.randint(0, 4)
        data = [
            left_mul(fd(n - 1), random_poly(rng, n, a - i, 0, n - 1, span=n - 1)) for i in range(a + 1)
        ]
        M = extend_special(data, "rn")
        assert is_monogenic(M)
        expected = SpinorPoly.zero(n)
        for i, p in enumerate(data):
            expected = expected + _shift_last(p, i, conj=False)
        assert M == expected


@pytest.mark.criterion(8, "truncated real-analytic extension")
def test_c8_truncated_series():
    rng = random.Random(808)
    for _ in range(30):
        n = rng.randint(2, 3)
        F0 = SpinorPoly.zero(n)
        F1 = SpinorPoly.zero(n)
        for _ in range(4):
            a = rng.randint(0, 4)
            b = rng.randint(0, 4 - a)
            Q = random_poly(rng, n, a + 1, b, rng.randint(0, n - 2), span=n - 1)
            Qp = random_poly(rng, n, a, b + 1, rng.randint(1, n - 1), span=n - 1)
            F0 = F0 + dirac(Q, "dz", restricted=True)
            F1 = F1 + dirac(Qp, "dzdag", restricted=True)
        M = extend_truncated_series(F0, F1, 4)
        assert is_monogenic(M)
        assert restrict(M) == join_last_poly(F0, F1)
