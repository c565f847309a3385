"""Spectral-point quivers: class vertices, the distinguished component Se0,
the 2:1 fold maps onto twisted types, finite windows, and the Schur-Weyl
quiver attached to an AR quiver."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .quiver import ARData
from .rootsys import distance, simple_root
from .spectral import (
    AffineType,
    SpectralParam,
    dual_point,
    zero_order,
)


def has_sign_quotient(g: AffineType, i: int) -> bool:
    """Whether (i, x) and (i, -x) label the same module."""
    if g.twist != 2:
        return False
    if g.family == "A":
        return g.N % 2 == 1 and i == (g.N + 1) // 2
    return 1 <= i <= g.N - 2


@dataclass(frozen=True)
class SeVertex:
    """A vertex class (i, x); x is stored as the canonical representative."""

    g: AffineType
    i: int
    x: SpectralParam

    def __post_init__(self) -> None:
        if self.i not in self.g.index_set:
            raise ValueError(f"index {self.i} out of range for {self.g.code} N={self.g.N}")
        if has_sign_quotient(self.g, self.i) and self.x.zeta >= 2:
            object.__setattr__(self, "x", -self.x)

    def members(self) -> tuple[SpectralParam, ...]:
        """All parameters in this class (one, or two for quotient nodes)."""
        if has_sign_quotient(self.g, self.i):
            return (self.x, -self.x)
        return (self.x,)

    def __str__(self) -> str:
        return f"{self.i}:{self.x}"


def vertex_class(g: AffineType, i: int, x: SpectralParam) -> SeVertex:
    return SeVertex(g, i, x)


def class_arrow_mult(v: SeVertex, w: SeVertex) -> int:
    """Arrow multiplicity from class v to class w: the zero order of the
    denominator at the parameter ratio, checked on every representative pair."""
    if v.g != w.g:
        raise ValueError("vertices belong to different affine types")
    orders = {
        zero_order(v.g, v.i, w.i, xw / xv) for xv in v.members() for xw in w.members()
    }
    if len(orders) != 1:
        raise AssertionError(f"arrow multiplicity ill-defined between {v} and {w}")
    return orders.pop()


def _anchor(g: AffineType) -> int:
    return 1 if g.family == "A" else g.N - 1


def se0_contains(g: AffineType, i: int, x: SpectralParam) -> bool:
    """Membership of the class of (i, x) in the distinguished component Se0."""
    v = vertex_class(g, i, x)
    x = v.x
    n = g.N
    if g.twist == 1:
        e = x.minus_q_exponent()
        return e is not None and e % 2 == distance(g.classical(), _anchor(g), i) % 2
    if g.family == "A":
        if n % 2 == 0:
            return x.minus_q_exponent() is not None
        return x.zeta % 2 == 0 and x.m % 2 == (i + 1) % 2
    if i <= n - 2:
        if x.zeta == 1:
            return x.m % 2 == 0 and (n - 1 - i) % 2 == 0
        if x.zeta == 0:
            return x.m % 2 == 1 and (n - 1 - i) % 2 == 1
        return False
    return x.zeta in (0, 2) and x.m % 2 == 0


def _pi_index_mult(g1: AffineType, a: int) -> tuple[int, int]:
    """Fold target index and the i-power multiplying the parameter."""
    n = g1.N
    if g1.family == "A":
        if a <= (n + 1) // 2:
            return a, 0
        return n + 1 - a, 2 * n
    if a <= n - 2:
        return a, n - a
    return n - 1, 2 * a


def pi(g1: AffineType, i: int, x: SpectralParam) -> SeVertex:
    """The 2:1 fold of an untwisted spectral point onto its twisted partner."""
    if g1.twist != 1:
        raise ValueError("pi folds untwisted points; got a twisted type")
    j, power = _pi_index_mult(g1, i)
    return vertex_class(g1.partner(), j, x.times_i_power(power))


@lru_cache(maxsize=65536)
def pi_preimages(v: SeVertex) -> tuple[tuple[int, SpectralParam], ...]:
    """Both untwisted points folding onto the class v, in sorted order."""
    g2 = v.g
    if g2.twist != 2:
        raise ValueError("pi_preimages expects a twisted-type vertex")
    g1 = g2.partner()
    found: set[tuple[int, tuple[int, int]]] = set()
    for a in g1.index_set:
        j, power = _pi_index_mult(g1, a)
        if j != v.i:
            continue
        for w in v.members():
            y = w.times_i_power(-power)
            if pi(g1, a, y) == v:
                found.add((a, (y.zeta, y.m)))
    out = tuple(
        (a, SpectralParam(z, m)) for a, (z, m) in sorted(found, key=lambda t: (t[0], t[1][1], t[1][0]))
    )
    if len(out) != 2:
        raise AssertionError(f"fold fiber of {v} has size {len(out)}, expected 2")
    return out


def lattice_test(g: AffineType, seed: SeVertex) -> Callable[[int, SpectralParam], bool]:
    """Membership predicate for the parity lattice of Se(g) through the seed."""
    n = g.N
    if g.twist == 1:
        t = g.classical()

        def untwisted(j: int, x: SpectralParam) -> bool:
            e = (x / seed.x).minus_q_exponent()
            return e is not None and e % 2 == distance(t, seed.i, j) % 2

        return untwisted
    if g.family == "A":
        if n % 2 == 0:

            def even_a(j: int, x: SpectralParam) -> bool:
                return (x / seed.x).minus_q_exponent() is not None

            return even_a

        def odd_a(j: int, x: SpectralParam) -> bool:
            r = x / seed.x
            return r.zeta % 2 == 0 and r.m % 2 == (seed.i + j) % 2

        return odd_a

    def chi(j: int, x: SpectralParam) -> int:
        return (x.zeta + x.m + (1 if j == n - 1 else 0)) % 2

    def mu(j: int, x: SpectralParam) -> int:
        return (x.m + (n - 1 - j if j <= n - 2 else 0)) % 2

    c0, m0 = chi(seed.i, seed.x), mu(seed.i, seed.x)

    def twisted_d(j: int, x: SpectralParam) -> bool:
        return chi(j, x) == c0 and mu(j, x) == m0

    return twisted_d


@dataclass(frozen=True)
class LabeledQuiver:
    """A finite directed multigraph with string ids, display labels, and
    arrow multiplicities; loops and 2-cycles are rejected."""

    vertices: tuple[tuple[str, str], ...]
    arrows: tuple[tuple[str, str, int], ...]

    def __post_init__(self) -> None:
        ids = [vid for vid, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        known = set(ids)
        seen = set()
        for src, dst, mult in self.arrows:
            if src not in known or dst not in known:
                raise ValueError(f"arrow endpoint not a vertex: {src}->{dst}")
            if mult < 1:
                raise ValueError("arrow multiplicity must be >= 1")
            if src == dst:
                raise ValueError(f"loop at {src}")
            if (dst, src) in seen:
                raise ValueError(f"2-cycle between {src} and {dst}")
            seen.add((src, dst))

    def multiplicity(self, src: str, dst: str) -> int:
        for a, b, mult in self.arrows:
            if (a, b) == (src, dst):
                return mult
        return 0


def se_window(
    g: AffineType, seeds: Sequence[SeVertex], power_bound: int
) -> tuple[LabeledQuiver, tuple[SeVertex, ...]]:
    """Finite piece of Se(g): all classes with |q-power| <= power_bound in the
    seeds' parity lattices, with arrow multiplicities from zero orders."""
    tests = [lattice_test(g, s) for s in seeds]
    classes: set[SeVertex] = set()
    for j in g.index_set:
        for zeta in range(4):
            for m in range(-power_bound, power_bound + 1):
                v = vertex_class(g, j, SpectralParam(zeta, m))
                if any(t(v.i, v.x) for t in tests):
                    classes.add(v)
    order = sorted(classes, key=lambda v: (v.i, v.x.m, v.x.zeta))
    verts = tuple((str(v), str(v)) for v in order)
    arrows = []
    for v in order:
        for w in order:
            if v is w:
                continue
            mult = class_arrow_mult(v, w)
            if mult:
                arrows.append((str(v), str(w), mult))
    return LabeledQuiver(verts, tuple(arrows)), tuple(order)


def se0_window(g: AffineType, power_bound: int) -> tuple[SeVertex, ...]:
    """All Se0 classes with |q-power| <= power_bound, sorted."""
    out = set()
    for j in g.index_set:
        for zeta in range(4):
            for m in range(-power_bound, power_bound + 1):
                v = vertex_class(g, j, SpectralParam(zeta, m))
                if se0_contains(g, v.i, v.x):
                    out.add(v)
    return tuple(sorted(out, key=lambda v: (v.i, v.x.m, v.x.zeta)))


@dataclass(frozen=True)
class SchurWeylDatum:
    """Generator data for a Schur-Weyl quiver: one entry per simple root."""

    entries: tuple[tuple[int, int, int], ...]
    s: dict[int, int]
    X: dict[int, SpectralParam]
    quiver: LabeledQuiver
    cartan: tuple[tuple[int, ...], ...]
    qexp: dict[tuple[int, int], tuple[int, int]]


def schur_weyl_quiver(ar: ARData, t: int) -> SchurWeylDatum:
    """The quiver on the simple-root slots of the AR data, for the untwisted
    (t=1) or twisted (t=2) denominators."""
    if t not in (1, 2):
        raise ValueError("t must be 1 or 2")
    ftype = ar.quiver.ftype
    g1 = AffineType(ftype.family, 1, ftype.rank)
    entries = []
    s_map: dict[int, int] = {}
    x_map: dict[int, SpectralParam] = {}
    for r in ftype.index_set:
        i, p = ar.phi_inv[(simple_root(ftype, r), 0)]
        entries.append((r, i, p))
        point = SpectralParam.minus_q_power(p)
        if t == 1:
            s_map[r], x_map[r] = i, point
        else:
            img = pi(g1, i, point)
            s_map[r], x_map[r] = img.i, img.x
    g = g1 if t == 1 else g1.partner()
    idx = ftype.index_set
    dmat: dict[tuple[int, int], int] = {}
    for a in idx:
        for b in idx:
            if a == b:
                continue
            va = vertex_class(g, s_map[a], x_map[a])
            vb = vertex_class(g, s_map[b], x_map[b])
            dmat[(a, b)] = class_arrow_mult(va, vb)
    verts = tuple((str(r), f"{i},{p}") for r, i, p in entries)
    arrows = tuple(
        (str(a), str(b), dmat[(a, b)]) for a in idx for b in idx if a != b and dmat[(a, b)]
    )
    quiver = LabeledQuiver(verts, arrows)
    cartan = tuple(
        tuple(2 if a == b else -dmat[(a, b)] - dmat[(b, a)] for b in idx) for a in idx
    )
    qexp = {(a, b): (dmat[(a, b)], dmat[(b, a)]) for a in idx for b in idx if a < b}
    return SchurWeylDatum(tuple(entries), s_map, x_map, quiver, cartan, qexp)
