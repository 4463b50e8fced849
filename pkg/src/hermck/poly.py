"""Spinor-valued polynomials in z_1..z_n, z_1^c..z_n^c and the Hermitean calculus.

A :class:`SpinorPoly` is stored flat: ``(alpha, beta, blade) -> coefficient``
where ``alpha``/``beta`` are exponent tuples for the z and z^c variables and
``blade`` is a bitmask (see :mod:`hermck.algebra`).  Every index is 0-based,
so the mathematical z_n, f†_n are index ``n - 1`` here.

``restricted=True`` on the vector-variable and Dirac operators drops the
last index, giving the tilde objects living on C^{n-1}.
"""
from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple

from .algebra import (
    ONE,
    GaussianRational,
    SpinorElement,
    Witt,
    blade,
    blade_indices,
    contract_sign,
    wedge_sign,
)

__all__ = [
    "Monomial",
    "SpinorPoly",
    "term",
    "mul_var",
    "dirac",
    "laplacian_tilde",
    "laplacian_scalar",
    "bidegree_component",
    "restrict",
    "left_mul",
    "diff",
    "mul_monomial",
    "number_operator",
    "euler_z",
    "euler_zdag",
    "split_last_poly",
    "join_last_poly",
    "term_sort_key",
]


class Monomial(NamedTuple):
    """z^alpha (z^c)^beta."""

    alpha: tuple
    beta: tuple

    @property
    def bidegree(self) -> tuple:
        return sum(self.alpha), sum(self.beta)


def term_sort_key(key: tuple) -> tuple:
    """Deterministic order: graded lex on (alpha, beta), then blade indices."""
    alpha, beta, mask = key
    return (
        -sum(alpha),
        -sum(beta),
        tuple(-e for e in alpha),
        tuple(-e for e in beta),
        mask.bit_count(),
        blade_indices(mask),
    )


class SpinorPoly:
    """Polynomial with spinor coefficients, immutable once built."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for (alpha, beta, mask), c in items:
            alpha, beta = tuple(alpha), tuple(beta)
            if isinstance(mask, tuple):
                mask = blade(*mask)
            if len(alpha) != n or len(beta) != n:
                raise ValueError(f"exponent vectors must have length n={n}")
            if min(alpha + beta, default=0) < 0:
                raise ValueError("negative exponent")
            if mask < 0 or mask >= 1 << n:
                raise ValueError(f"blade {blade_indices(mask)} uses an index >= n={n}")
            key = (alpha, beta, mask)
            c = GaussianRational.coerce(c)
            acc[key] = acc[key] + c if key in acc else c
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "SpinorPoly":
        obj = object.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> "SpinorPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, v: SpinorElement) -> "SpinorPoly":
        z = (0,) * v.n
        return cls._raw(v.n, {(z, z, m): c for m, c in v.terms.items()})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self) -> list:
        """Terms in the canonical order."""
        return sorted(self._terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def monomials(self) -> list:
        seen = {Monomial(a, b) for a, b, _ in self._terms}
        return sorted(seen, key=lambda m: term_sort_key((m.alpha, m.beta, 0)))

    def coefficient(self, mono: Monomial) -> SpinorElement:
        alpha, beta = tuple(mono[0]), tuple(mono[1])
        return SpinorElement._raw(
            self.n,
            {m: c for (a, b, m), c in self._terms.items() if a == alpha and b == beta},
        )

    def by_monomial(self) -> Iterator:
        for mono in self.monomials():
            yield mono, self.coefficient(mono)

    def bidegrees(self) -> set:
        return {(sum(a), sum(b)) for a, b, _ in self._terms}

    def blade_degrees(self) -> set:
        return {m.bit_count() for _, _, m in self._terms}

    def total_degree(self) -> int:
        return max((sum(a) + sum(b) for a, b, _ in self._terms), default=0)

    def uses_last(self) -> bool:
        """True if z_n, z_n^c or f†_n appears anywhere."""
        k = self.n - 1
        bit = 1 << k
        return any(a[k] or b[k] or m & bit for a, b, m in self._terms)

    # arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, SpinorPoly):
            raise TypeError("SpinorPoly expected")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        _accumulate(out, other._terms.items())
        return SpinorPoly._raw(self.n, out)

    def __neg__(self):
        return SpinorPoly._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        self._check(other)
        out = dict(self._terms)
        _accumulate(out, ((k, -c) for k, c in other._terms.items()))
        return SpinorPoly._raw(self.n, out)

    def scale(self, c) -> "SpinorPoly":
        c = GaussianRational.coerce(c)
        if not c:
            return SpinorPoly.zero(self.n)
        return SpinorPoly._raw(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, GaussianRational)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SpinorPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        return f"SpinorPoly(n={self.n}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (alpha, beta, mask), c in self.items():
            factors = []
            for k, e in enumerate(alpha):
                if e:
                    factors.append(f"z{k + 1}" + (f"^{e}" if e > 1 else ""))
            for k, e in enumerate(beta):
                if e:
                    factors.append(f"zc{k + 1}" + (f"^{e}" if e > 1 else ""))
            idx = blade_indices(mask)
            factors.append("∧".join(f"f†{k + 1}" for k in idx) + " I" if idx else "I")
            parts.append(f"{c}·" + "·".join(factors))
        return " + ".join(parts)


def _accumulate(out: dict, items) -> None:
    for k, c in items:
        if k in out:
            s = out[k] + c
            if s:
                out[k] = s
            else:
                del out[k]
        elif c:
            out[k] = c


def term(n: int, z=None, zc=None, blade_idx=(), coeff=1) -> SpinorPoly:
    """Single term from 0-based ``{index: exponent}`` maps.

    >>> str(term(2, z={0: 1}, blade_idx=(0,)))
    '1·z1·f†1 I'
    """
    alpha = [0] * n
    beta = [0] * n
    for k, e in (z or {}).items():
        alpha[k] += e
    for k, e in (zc or {}).items():
        beta[k] += e
    return SpinorPoly(n, [((alpha, beta, tuple(blade_idx)), coeff)])


def _span(n: int, restricted: bool) -> range:
    return range(n - 1 if restricted else n)


def mul_var(p: SpinorPoly, which: str, restricted: bool = False) -> SpinorPoly:
    """Left multiplication by z = Σ f_j z_j (``'z'``) or z† = Σ f†_j z_j^c (``'zdag'``)."""
    if which == "z":
        on_alpha, dagger = True, False
    elif which == "zdag":
        on_alpha, dagger = False, True
    else:
        raise ValueError(f"unknown vector variable {which!r}")
    out: dict = {}
    for (alpha, beta, mask), c in p._terms.items():
        for j in _span(p.n, restricted):
            s = wedge_sign(j, mask) if dagger else contract_sign(j, mask)
            if not s:
                continue
            m = mask ^ (1 << j)
            if on_alpha:
                key = (alpha[:j] + (alpha[j] + 1,) + alpha[j + 1:], beta, m)
            else:
                key = (alpha, beta[:j] + (beta[j] + 1,) + beta[j + 1:], m)
            _accumulate(out, ((key, c if s > 0 else -c),))
    return SpinorPoly._raw(p.n, out)


def dirac(p: SpinorPoly, which: str, restricted: bool = False) -> SpinorPoly:
    """Hermitean Dirac operators ∂z = Σ f†_j ∂_{z_j} (``'dz'``), ∂z† = Σ f_j ∂_{z_j^c} (``'dzdag'``)."""
    if which == "dz":
        on_alpha, dagger = True, True
    elif which == "dzdag":
        on_alpha, dagger = False, False
    else:
        raise ValueError(f"unknown Dirac operator {which!r}")
    out: dict = {}
    for (alpha, beta, mask), c in p._terms.items():
        exps = alpha if on_alpha else beta
        for j in _span(p.n, restricted):
            e = exps[j]
            if not e:
                continue
            s = wedge_sign(j, mask) if dagger else contract_sign(j, mask)
            if not s:
                continue
            lowered = exps[:j] + (e - 1,) + exps[j + 1:]
            key = (lowered, beta, mask ^ (1 << j)) if on_alpha else (alpha, lowered, mask ^ (1 << j))
            _accumulate(out, ((key, c * (s * e)),))
    return SpinorPoly._raw(p.n, out)


def laplacian_tilde(p: SpinorPoly) -> SpinorPoly:
    """4(∂̃z∂̃z† + ∂̃z†∂̃z) p, built from the restricted Dirac operators."""
    dz = dirac(dirac(p, "dzdag", True), "dz", True)
    dzd = dirac(dirac(p, "dz", True), "dzdag", True)
    return (dz + dzd).scale(4)


def laplacian_scalar(p: SpinorPoly, restricted: bool = True) -> SpinorPoly:
    """4 Σ_j ∂_{z_j} ∂_{z_j^c} applied coefficient-wise."""
    out: dict = {}
    for (alpha, beta, mask), c in p._terms.items():
        for j in _span(p.n, restricted):
            if alpha[j] and beta[j]:
                key = (
                    alpha[:j] + (alpha[j] - 1,) + alpha[j + 1:],
                    beta[:j] + (beta[j] - 1,) + beta[j + 1:],
                    mask,
                )
                _accumulate(out, ((key, c * (4 * alpha[j] * beta[j])),))
    return SpinorPoly._raw(p.n, out)


def bidegree_component(p: SpinorPoly, a: int, b: int) -> SpinorPoly:
    if a < 0 or b < 0:
        raise ValueError("bidegree must be non-negative")
    return SpinorPoly._raw(
        p.n, {k: c for k, c in p._terms.items() if sum(k[0]) == a and sum(k[1]) == b}
    )


def restrict(p: SpinorPoly) -> SpinorPoly:
    """Set z_n = z_n^c = 0."""
    k = p.n - 1
    return SpinorPoly._raw(
        p.n, {key: c for key, c in p._terms.items() if not key[0][k] and not key[1][k]}
    )


def left_mul(gen: Witt, p: SpinorPoly) -> SpinorPoly:
    """Apply one Witt generator to every coefficient."""
    if not 0 <= gen.j < p.n:
        raise ValueError(f"generator index {gen.j} out of range for n={p.n}")
    j = gen.j
    out = {}
    for (alpha, beta, mask), c in p._terms.items():
        s = wedge_sign(j, mask) if gen.dagger else contract_sign(j, mask)
        if s:
            out[(alpha, beta, mask ^ (1 << j))] = c if s > 0 else -c
    return SpinorPoly._raw(p.n, out)


def diff(p: SpinorPoly, j: int, conj: bool = False, order: int = 1) -> SpinorPoly:
    """``order``-th partial derivative in z_j (or z_j^c when ``conj``)."""
    if order < 0:
        raise ValueError("derivative order must be non-negative")
    out = {}
    for (alpha, beta, mask), c in p._terms.items():
        exps = beta if conj else alpha
        e = exps[j]
        if e < order:
            continue
        falling = 1
        for t in range(order):
            falling *= e - t
        lowered = exps[:j] + (e - order,) + exps[j + 1:]
        key = (alpha, lowered, mask) if conj else (lowered, beta, mask)
        out[key] = c * falling
    return SpinorPoly._raw(p.n, out)


def mul_monomial(p: SpinorPoly, alpha, beta, coeff=1) -> SpinorPoly:
    """Multiply by the scalar monomial coeff·z^alpha (z^c)^beta."""
    coeff = GaussianRational.coerce(coeff)
    if not coeff:
        return SpinorPoly.zero(p.n)
    alpha, beta = tuple(alpha), tuple(beta)
    out = {}
    for (a, b, mask), c in p._terms.items():
        key = (
            tuple(x + y for x, y in zip(a, alpha)),
            tuple(x + y for x, y in zip(b, beta)),
            mask,
        )
        out[key] = c * coeff
    return SpinorPoly._raw(p.n, out)


def number_operator(p: SpinorPoly, restricted: bool = False) -> SpinorPoly:
    """Σ_j f†_j f_j: multiplies each blade by its degree (over the used indices)."""
    span = (1 << (p.n - 1 if restricted else p.n)) - 1
    out = {}
    for key, c in p._terms.items():
        d = (key[2] & span).bit_count()
        if d:
            out[key] = c * d
    return SpinorPoly._raw(p.n, out)


def _euler(p: SpinorPoly, on_alpha: bool, restricted: bool) -> SpinorPoly:
    span = _span(p.n, restricted)
    out = {}
    for key, c in p._terms.items():
        exps = key[0] if on_alpha else key[1]
        d = sum(exps[j] for j in span)
        if d:
            out[key] = c * d
    return SpinorPoly._raw(p.n, out)


def euler_z(p: SpinorPoly, restricted: bool = False) -> SpinorPoly:
    """Σ_j z_j ∂_{z_j}."""
    return _euler(p, True, restricted)


def euler_zdag(p: SpinorPoly, restricted: bool = False) -> SpinorPoly:
    """Σ_j z_j^c ∂_{z_j^c}."""
    return _euler(p, False, restricted)


def split_last_poly(p: SpinorPoly) -> tuple:
    """Coefficient-wise ``split_last``: p = p0 + f†_n p1."""
    last = 1 << (p.n - 1)
    p0, p1 = {}, {}
    for (alpha, beta, mask), c in p._terms.items():
        if mask & last:
            rest = mask & ~last
            p1[(alpha, beta, rest)] = -c if rest.bit_count() & 1 else c
        else:
            p0[(alpha, beta, mask)] = c
    return SpinorPoly._raw(p.n, p0), SpinorPoly._raw(p.n, p1)


def join_last_poly(p0: SpinorPoly, p1: SpinorPoly) -> SpinorPoly:
    """p0 + f†_n p1."""
    return p0 + left_mul(Witt(True, p0.n - 1), p1)


def one(n: int) -> SpinorPoly:
    """The constant polynomial 1·I."""
    z = (0,) * n
    return SpinorPoly._raw(n, {(z, z, 0): ONE})
