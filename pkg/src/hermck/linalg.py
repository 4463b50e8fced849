"""Exact linear algebra over Q(i) and the brute-force h-monogenic kernel.

Elimination is fraction-free (Bareiss): each row is first scaled to Gaussian
integer entries, then the one-step Bareiss update keeps every intermediate
entry integral.  Purely real matrices run on plain Python ints.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import lcm

from .algebra import GaussianRational, blade
from .poly import SpinorPoly, dirac, term_sort_key

__all__ = ["ExactMatrix", "nullspace", "rank", "monogenic_basis", "hm_columns"]


class ExactMatrix:
    """Dense matrix of Gaussian rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        entries = [[GaussianRational.coerce(x) for x in row] for row in entries]
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        z = GaussianRational(0)
        return cls([[z] * cols for _ in range(rows)], cols)

    def apply(self, v) -> list:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((x * y for x, y in zip(row, v)), GaussianRational(0)) for row in self.entries]

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


class _GaussInt:
    """Gaussian integer, only used inside elimination."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int):
        self.re = re
        self.im = im

    def __mul__(self, o):
        return _GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __sub__(self, o):
        return _GaussInt(self.re - o.re, self.im - o.im)

    def __floordiv__(self, o):
        # exact division; Bareiss guarantees divisibility
        norm = o.re * o.re + o.im * o.im
        nr = self.re * o.re + self.im * o.im
        ni = self.im * o.re - self.re * o.im
        if nr % norm or ni % norm:
            raise ArithmeticError("inexact Gaussian integer division in elimination")
        return _GaussInt(nr // norm, ni // norm)

    def __bool__(self):
        return bool(self.re or self.im)

    def field(self) -> GaussianRational:
        return GaussianRational(self.re, self.im)


def _integer_rows(M: ExactMatrix):
    """Scale rows to Gaussian-integer entries; returns (rows, is_real)."""
    real = all(not x.im for row in M.entries for x in row)
    out = []
    for row in M.entries:
        den = 1
        for x in row:
            den = lcm(den, x.re.denominator, x.im.denominator)
        if real:
            out.append([int(x.re * den) for x in row])
        else:
            out.append([_GaussInt(int(x.re * den), int(x.im * den)) for x in row])
    return out, real


def _bareiss(A: list, cols: int, one, zero) -> tuple:
    """In-place fraction-free row echelon form; returns (pivot columns, rank)."""
    nrows = len(A)
    prev = one
    pivots = []
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
        piv_row = A[r]
        pv = piv_row[c]
        for i in range(r + 1, nrows):
            row = A[i]
            lead = row[c]
            if lead:
                for j in range(c + 1, cols):
                    row[j] = (pv * row[j] - lead * piv_row[j]) // prev
            else:
                for j in range(c + 1, cols):
                    if row[j]:
                        row[j] = (pv * row[j]) // prev
            row[c] = zero
        prev = pv
        pivots.append(c)
        r += 1
    return pivots, r


def _echelon(M: ExactMatrix):
    A, real = _integer_rows(M)
    if real:
        pivots, rk = _bareiss(A, M.cols, 1, 0)
        return A, pivots, rk, Fraction, Fraction(1)
    pivots, rk = _bareiss(A, M.cols, _GaussInt(1, 0), _GaussInt(0, 0))
    return A, pivots, rk, _GaussInt.field, GaussianRational(1)


def rank(M: ExactMatrix) -> int:
    if not M.rows or not M.cols:
        return 0
    return _echelon(M)[2]


def nullspace(M: ExactMatrix) -> list:
    """Exact basis of {v : M v = 0}, one vector per free column (free entry = 1)."""
    cols = M.cols
    if not M.rows:
        return [[GaussianRational(int(i == k)) for i in range(cols)] for k in range(cols)]
    A, pivots, rk, to_field, unit = _echelon(M)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    if rk + len(free) != cols:
        raise ArithmeticError("rank-nullity bookkeeping failed")
    U = [[to_field(x) if x else 0 for x in A[k]] for k in range(rk)]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = unit
        for k in range(rk - 1, -1, -1):
            pc = pivots[k]
            row = U[k]
            s = 0
            for j in range(pc + 1, cols):
                if row[j] and v[j]:
                    s = s + row[j] * v[j]
            v[pc] = -s / row[pc] if s else 0
        basis.append([GaussianRational.coerce(x) for x in v])
    return basis


# ------------------------------------------------------------ HM oracle


def _exponents(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        yield tuple(e)


def hm_columns(n: int, r: int, a: int, b: int) -> list:
    """All (alpha, beta, blade) keys of bidegree (a, b) and value degree r, sorted."""
    keys = [
        (alpha, beta, blade(*idx))
        for alpha in _exponents(n, a)
        for beta in _exponents(n, b)
        for idx in combinations(range(n), r)
    ]
    keys.sort(key=term_sort_key)
    return keys


def _weight(key) -> tuple:
    # torus weight alpha_j - beta_j + [j in blade]; both Dirac operators preserve it
    alpha, beta, mask = key
    return tuple(x - y + ((mask >> j) & 1) for j, (x, y) in enumerate(zip(alpha, beta)))


def _kernel_block(n: int, columns: list) -> list:
    images = []
    row_index: dict = {}
    for key in columns:
        p = SpinorPoly._raw(n, {key: GaussianRational(1)})
        img = {}
        for op in ("dz", "dzdag"):
            for k, c in dirac(p, op).terms.items():
                rk = (op, k)
                if rk not in row_index:
                    row_index[rk] = len(row_index)
                img[row_index[rk]] = c
        images.append(img)
    zero = GaussianRational(0)
    entries = [[zero] * len(columns) for _ in range(len(row_index))]
    for ci, img in enumerate(images):
        for ri, c in img.items():
            entries[ri][ci] = c
    M = ExactMatrix(entries, len(columns))
    out = []
    for v in nullspace(M):
        out.append(SpinorPoly._raw(n, {key: c for key, c in zip(columns, v) if c}))
    return out


def monogenic_basis(n: int, r: int, a: int, b: int, split_weights: bool = True) -> list:
    """Exact basis of the h-monogenic polynomials of bidegree (a, b), value degree r.

    With ``split_weights`` the joint kernel is computed block by block over
    the torus weight spaces, which the operators do not mix; without it one
    stacked matrix over all columns is eliminated.
    """
    if n < 1 or not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    if a < 0 or b < 0:
        raise ValueError("bidegree must be non-negative")
    columns = hm_columns(n, r, a, b)
    if not split_weights:
        return _kernel_block(n, columns)
    blocks: dict = {}
    for key in columns:
        blocks.setdefault(_weight(key), []).append(key)
    basis = []
    for cols in blocks.values():
        basis.extend(_kernel_block(n, cols))
    return basis
