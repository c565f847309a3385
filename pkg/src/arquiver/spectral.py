"""Exact spectral-parameter arithmetic and R-matrix denominator zero sets.

Every spectral parameter used here is an element i^zeta * q^m of the group
mu_4 x q^Z; q is never evaluated numerically.  Denominators d_{k,l}(z) are
materialized as exact root multisets in that group, with quadratic factors
split into their two roots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .rootsys import FiniteType

_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}
_PARAM_RE = re.compile(r"([+-]?)(i?)q\^(-?\d+)$")
_MINUS_Q_RE = re.compile(r"\(-q\)\^(-?\d+)$")


@dataclass(frozen=True)
class SpectralParam:
    """The element i^zeta * q^m with zeta taken mod 4."""

    zeta: int
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "zeta", self.zeta % 4)

    @classmethod
    def one(cls) -> SpectralParam:
        return cls(0, 0)

    @classmethod
    def q_power(cls, m: int) -> SpectralParam:
        return cls(0, m)

    @classmethod
    def minus_q_power(cls, p: int) -> SpectralParam:
        """(-q)^p = (-1)^p q^p."""
        return cls(2 * p, p)

    @classmethod
    def parse(cls, text: str) -> SpectralParam:
        """Accepts '[+-]?i?q^<int>' and the sugar '(-q)^<int>'."""
        text = text.strip()
        m = _MINUS_Q_RE.fullmatch(text)
        if m:
            return cls.minus_q_power(int(m.group(1)))
        m = _PARAM_RE.fullmatch(text)
        if not m:
            raise ValueError(f"cannot parse spectral parameter {text!r}")
        sign, imag, power = m.groups()
        zeta = (2 if sign == "-" else 0) + (1 if imag else 0)
        return cls(zeta, int(power))

    def __str__(self) -> str:
        return f"{_PREFIX[self.zeta]}q^{self.m}"

    def __mul__(self, other: SpectralParam) -> SpectralParam:
        return SpectralParam(self.zeta + other.zeta, self.m + other.m)

    def __truediv__(self, other: SpectralParam) -> SpectralParam:
        return SpectralParam(self.zeta - other.zeta, self.m - other.m)

    def __neg__(self) -> SpectralParam:
        return SpectralParam(self.zeta + 2, self.m)

    def inverse(self) -> SpectralParam:
        return SpectralParam(-self.zeta, -self.m)

    def times_i_power(self, k: int) -> SpectralParam:
        return SpectralParam(self.zeta + k, self.m)

    def minus_q_exponent(self) -> int | None:
        """p if this equals (-q)^p, else None."""
        return self.m if self.zeta == 2 * self.m % 4 else None

    def sort_key(self) -> tuple[int, int]:
        return (self.m, self.zeta)


def sp_mul(x: SpectralParam, y: SpectralParam) -> SpectralParam:
    return x * y


def sp_ratio(x: SpectralParam, y: SpectralParam) -> SpectralParam:
    return x / y


def sp_from_minus_q_power(p: int) -> SpectralParam:
    return SpectralParam.minus_q_power(p)


@dataclass(frozen=True, order=True)
class AffineType:
    """An affine family A/D with a twist order and the integer N of the name."""

    family: str
    twist: int
    N: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.twist not in (1, 2):
            raise ValueError(f"twist must be 1 or 2, got {self.twist}")
        low = 2 if self.family == "A" else 4
        if self.N < low:
            raise ValueError(f"type {self.family} needs N >= {low}, got {self.N}")

    @classmethod
    def from_code(cls, code: str, n: int) -> AffineType:
        if len(code) != 2 or code[0] not in "AD" or code[1] not in "12":
            raise ValueError(f"unknown affine code {code!r}")
        return cls(code[0], int(code[1]), n)

    @property
    def code(self) -> str:
        return f"{self.family}{self.twist}"

    @property
    def index_set(self) -> tuple[int, ...]:
        if self.twist == 1:
            top = self.N
        elif self.family == "A":
            top = (self.N + 1) // 2
        else:
            top = self.N - 1
        return tuple(range(1, top + 1))

    def classical(self) -> FiniteType:
        """Finite type A_N/D_N underlying the untwisted member of the pair."""
        return FiniteType(self.family, self.N)

    def partner(self) -> AffineType:
        """The other member of the untwisted/twisted pair with the same N."""
        return AffineType(self.family, 3 - self.twist, self.N)


def _check_indices(g: AffineType, k: int, l: int) -> None:
    idx = g.index_set
    for name, v in (("k", k), ("l", l)):
        if v not in idx:
            raise ValueError(f"{name}={v} out of range 1..{idx[-1]} for {g.code} N={g.N}")


def _add(roots: dict[tuple[int, int], int], zeta: int, m: int) -> None:
    key = (zeta % 4, m)
    roots[key] = roots.get(key, 0) + 1


@lru_cache(maxsize=None)
def _denominator_data(
    g: AffineType, k: int, l: int
) -> tuple[tuple[str, ...], dict[tuple[int, int], int]]:
    """Factor strings and raw root multiset for sorted indices k <= l."""
    n = g.N
    factors: list[str] = []
    roots: dict[tuple[int, int], int] = {}

    def linear(e: int) -> None:
        factors.append(f"z-(-q)^{e}")
        _add(roots, 2 * e, e)

    if g.family == "A" and g.twist == 1:
        for s in range(1, min(k, l, n + 1 - k, n + 1 - l) + 1):
            linear(abs(k - l) + 2 * s)
    elif g.family == "D" and g.twist == 1:
        if l <= n - 2:
            for s in range(1, min(k, l) + 1):
                linear(abs(k - l) + 2 * s)
                linear(2 * n - 2 - k - l + 2 * s)
        elif k <= n - 2:
            for s in range(1, k + 1):
                linear(n - k - 1 + 2 * s)
        elif k != l:
            for s in range(1, (n - 1) // 2 + 1):
                linear(4 * s)
        else:
            for s in range(1, n // 2 + 1):
                linear(4 * s - 2)
    elif g.family == "A":
        for s in range(1, min(k, l) + 1):
            linear(abs(k - l) + 2 * s)
            e = 2 * s - k - l
            factors.append(f"z+q^{n + 1}(-q)^{e}")
            _add(roots, 2 * e + 2, n + 1 + e)
    else:
        spin = n - 1
        if l < spin:
            for s in range(1, min(k, l) + 1):
                for e in (abs(k - l) + 2 * s, 2 * n - 2 - k - l + 2 * s):
                    factors.append(f"z^2-(-q^2)^{e}")
                    _add(roots, e, e)
                    _add(roots, e + 2, e)
        elif k < spin:
            for s in range(1, k + 1):
                e = n - 1 - k + 2 * s
                factors.append(f"z^2+(-q^2)^{e}")
                _add(roots, e + 1, e)
                _add(roots, e + 3, e)
        else:
            for s in range(1, n):
                factors.append(f"z+(-q^2)^{s}")
                _add(roots, 2 * s + 2, 2 * s)
    return tuple(factors), roots


def denominator_roots_raw(g: AffineType, k: int, l: int) -> dict[tuple[int, int], int]:
    """Root multiset of d_{k,l} as raw (zeta, m) keys; symmetric in k, l."""
    _check_indices(g, k, l)
    return _denominator_data(g, min(k, l), max(k, l))[1]


@dataclass(frozen=True)
class DenominatorZeros:
    """The zero multiset of a denominator d_{k,l}(z), plus display factors."""

    g: AffineType
    k: int
    l: int
    factors: tuple[str, ...]
    roots: tuple[tuple[SpectralParam, int], ...]

    @property
    def degree(self) -> int:
        return sum(mult for _, mult in self.roots)

    def order_at(self, x: SpectralParam) -> int:
        return denominator_roots_raw(self.g, self.k, self.l).get((x.zeta, x.m), 0)


def denominator(g: AffineType, k: int, l: int) -> DenominatorZeros:
    """Exact zero multiset of d_{k,l}(z), with roots sorted by (m, zeta)."""
    _check_indices(g, k, l)
    factors, raw = _denominator_data(g, min(k, l), max(k, l))
    items = tuple(
        (SpectralParam(z, m), raw[(z, m)]) for z, m in sorted(raw, key=lambda t: (t[1], t[0]))
    )
    return DenominatorZeros(g, k, l, factors, items)


def zero_order(g: AffineType, k: int, l: int, x: SpectralParam) -> int:
    """Multiplicity of x as a zero of d_{k,l}(z); 0 if absent."""
    return denominator_roots_raw(g, k, l).get((x.zeta, x.m), 0)


def dual_index(g: AffineType, i: int) -> int:
    """The involution i* matching left/right duals of fundamental modules."""
    if i not in g.index_set:
        raise ValueError(f"index {i} out of range for {g.code} N={g.N}")
    if g.twist == 2:
        return i
    if g.family == "A":
        return g.N + 1 - i
    if g.N % 2 == 1 and i >= g.N - 1:
        return 2 * g.N - 1 - i
    return i


def p_star(g: AffineType) -> SpectralParam:
    """The parameter shift of duality: dual of (i, x) sits at x / p_star."""
    n = g.N
    if g.twist == 1:
        return SpectralParam.minus_q_power(n + 1 if g.family == "A" else 2 * n - 2)
    if g.family == "A":
        return SpectralParam(2, n + 1)
    return SpectralParam(2 * n, 2 * n - 2)


def dual_point(g: AffineType, i: int, x: SpectralParam) -> tuple[int, SpectralParam]:
    """Left dual: (i*, x / p_star)."""
    return dual_index(g, i), x / p_star(g)


def right_dual_point(g: AffineType, i: int, x: SpectralParam) -> tuple[int, SpectralParam]:
    """Right dual: (i*, x * p_star); inverse of dual_point."""
    return dual_index(g, i), x * p_star(g)
