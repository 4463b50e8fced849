"""Exact scalars and the Witt-basis realization of spinor space.

Spinor space is handled as the exterior algebra on f†_1..f†_n applied to
the idempotent I.  A blade f†_{k1}∧...∧f†_{kr} I is stored as an integer
bitmask with bit k set for generator k (0-based).  The Witt generators act
on the left: f†_j wedges, f_j contracts.
"""
from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

__all__ = [
    "GaussianRational",
    "IMAG_UNIT",
    "Witt",
    "f",
    "fd",
    "blade",
    "blade_indices",
    "blade_degree",
    "wedge_sign",
    "contract_sign",
    "SpinorElement",
    "witt_left_mul",
    "degree_part",
    "split_last",
]


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_fraction(re)
        self.im = _to_fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if type(value) is cls:
            return value
        if isinstance(value, (int, Fraction)):
            return _mk(Fraction(value), _ZERO)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse a real rational such as ``'3/4'`` or ``'-2'``."""
        return _mk(Fraction(text.strip()), _ZERO)

    def __add__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Fraction)):
                return _mk(self.re + other, self.im)
            return NotImplemented
        return _mk(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Fraction)):
                return _mk(self.re - other, self.im)
            return NotImplemented
        return _mk(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return _mk(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return _mk(-self.re, -self.im)

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Fraction)):
                return _mk(self.re * other, self.im * other if self.im else _ZERO)
            return NotImplemented
        if not self.im and not other.im:
            return _mk(self.re * other.re, _ZERO)
        return _mk(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not other.im:
            return _mk(self.re / other.re, self.im / other.re if self.im else _ZERO)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def reciprocal(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("reciprocal of zero")
        return _mk(self.re / norm, -self.im / norm)

    def conjugate(self) -> "GaussianRational":
        return _mk(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        im = _imag_str(self.im)
        sep = "" if im.startswith("-") else "+"
        return f"({self.re}{sep}{im})"


def _imag_str(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


_ZERO = Fraction(0)


def _to_fraction(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def _mk(re: Fraction, im: Fraction) -> GaussianRational:
    # Skips coercion; both parts must already be Fractions.
    g = object.__new__(GaussianRational)
    g.re = re
    g.im = im
    return g


IMAG_UNIT = _mk(Fraction(0), Fraction(1))
ONE = _mk(Fraction(1), Fraction(0))

Scalar = Union[int, Fraction, GaussianRational]


# ---------------------------------------------------------------- blades


def blade(*indices: int) -> int:
    """Bitmask of the blade with the given 0-based generator indices."""
    mask = 0
    for k in indices:
        if k < 0:
            raise ValueError(f"negative generator index {k}")
        bit = 1 << k
        if mask & bit:
            raise ValueError(f"repeated generator index {k} in blade")
        mask |= bit
    return mask


def blade_indices(mask: int) -> tuple:
    """Strictly increasing 0-based indices of a blade bitmask."""
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def blade_degree(mask: int) -> int:
    return mask.bit_count()


def wedge_sign(j: int, mask: int) -> int:
    """Sign of f†_j acting on ``mask``; 0 when j already occurs."""
    bit = 1 << j
    if mask & bit:
        return 0
    return -1 if (mask & (bit - 1)).bit_count() & 1 else 1


def contract_sign(j: int, mask: int) -> int:
    """Sign of f_j acting on ``mask``; 0 when j does not occur."""
    bit = 1 << j
    if not mask & bit:
        return 0
    return -1 if (mask & (bit - 1)).bit_count() & 1 else 1


class Witt(NamedTuple):
    """Witt generator tag: ``Witt(True, j)`` is f†_j, ``Witt(False, j)`` is f_j."""

    dagger: bool
    j: int

    def __str__(self):
        return f"f{'†' if self.dagger else ''}_{self.j + 1}"


def f(j: int) -> Witt:
    return Witt(False, j)


def fd(j: int) -> Witt:
    return Witt(True, j)


def apply_witt(gen: Witt, mask: int) -> tuple:
    """(sign, new_mask) of a generator acting on a single blade."""
    if gen.dagger:
        s = wedge_sign(gen.j, mask)
        return s, mask | (1 << gen.j)
    s = contract_sign(gen.j, mask)
    return s, mask & ~(1 << gen.j)


# -------------------------------------------------------- spinor elements


class SpinorElement:
    """Finite linear combination of blades with Gaussian rational coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[int, Scalar] | Iterable = ()):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        limit = 1 << n
        for mask, c in items:
            if isinstance(mask, tuple):
                mask = blade(*mask)
            if mask < 0 or mask >= limit:
                raise ValueError(f"blade {blade_indices(mask)} uses an index >= n={n}")
            c = GaussianRational.coerce(c)
            acc[mask] = acc[mask] + c if mask in acc else c
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "SpinorElement":
        obj = object.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def idempotent(cls, n: int) -> "SpinorElement":
        """The element 1·I."""
        return cls._raw(n, {0: ONE})

    @property
    def terms(self) -> Mapping[int, GaussianRational]:
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms.items(), key=lambda kv: blade_indices(kv[0])))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "SpinorElement"):
        if not isinstance(other, SpinorElement):
            raise TypeError("SpinorElement expected")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SpinorElement._raw(self.n, out)

    def __neg__(self):
        return SpinorElement._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar) -> "SpinorElement":
        c = GaussianRational.coerce(c)
        if not c:
            return SpinorElement._raw(self.n, {})
        return SpinorElement._raw(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, GaussianRational)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SpinorElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def degrees(self) -> set:
        return {blade_degree(k) for k in self._terms}

    def __repr__(self):
        return f"SpinorElement(n={self.n}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mask, c in self:
            idx = blade_indices(mask)
            b = "∧".join(f"f†_{k + 1}" for k in idx) + " I" if idx else "I"
            parts.append(f"{c}·{b}")
        return " + ".join(parts)


def witt_left_mul(gen: Witt, v: SpinorElement) -> SpinorElement:
    """Left action of f_j or f†_j on a spinor."""
    if not 0 <= gen.j < v.n:
        raise ValueError(f"generator index {gen.j} out of range for n={v.n}")
    out = {}
    for mask, c in v._terms.items():
        s, m = apply_witt(gen, mask)
        if s:
            out[m] = c if s > 0 else -c
    return SpinorElement._raw(v.n, out)


def degree_part(v: SpinorElement, r: int) -> SpinorElement:
    """Projection onto the r-blades."""
    if not 0 <= r <= v.n:
        raise ValueError(f"blade degree {r} outside 0..{v.n}")
    return SpinorElement._raw(
        v.n, {k: c for k, c in v._terms.items() if k.bit_count() == r}
    )


def split_last(v: SpinorElement) -> tuple:
    """Write v = v0 + f†_n v1 with neither part involving generator n."""
    last = 1 << (v.n - 1)
    v0, v1 = {}, {}
    for mask, c in v._terms.items():
        if mask & last:
            rest = mask & ~last
            # f†_n · rest = (-1)^{deg rest} · mask
            v1[rest] = -c if rest.bit_count() & 1 else c
        else:
            v0[mask] = c
    return SpinorElement._raw(v.n, v0), SpinorElement._raw(v.n, v1)
