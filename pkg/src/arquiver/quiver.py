"""Dynkin quiver orientations, height functions, and Auslander-Reiten combinatorics.

The central object is the coordinate table ``phi`` identifying vertices (i, p)
of the repetition quiver with pairs (positive root, spin) and its m = 0 slice,
the AR quiver Gamma_Q.  The convex partial order on positive roots and minimal
pairs for it live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .rootsys import (
    FiniteType,
    Root,
    add_roots,
    apply_word,
    distance,
    neighbors,
    positive_roots,
    reflect,
    root_sequence,
    simple_root,
    sub_roots,
)


@dataclass(frozen=True, order=True)
class DynkinQuiver:
    """An orientation of a Dynkin diagram; arrows are (source, target) pairs."""

    ftype: FiniteType
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        undirected = sorted(tuple(sorted(a)) for a in self.arrows)
        if undirected != sorted(self.ftype.edges()):
            raise ValueError("arrows do not orient the Dynkin edges exactly once each")

    def sources(self) -> frozenset[int]:
        targets = {b for _, b in self.arrows}
        return frozenset(i for i in self.ftype.index_set if i not in targets)

    def sinks(self) -> frozenset[int]:
        starts = {a for a, _ in self.arrows}
        return frozenset(i for i in self.ftype.index_set if i not in starts)

    def reflect(self, i: int) -> DynkinQuiver:
        """Reverse every arrow incident to vertex i."""
        flipped = tuple((b, a) if i in (a, b) else (a, b) for a, b in self.arrows)
        return DynkinQuiver(self.ftype, flipped)

    def reverse(self) -> DynkinQuiver:
        return DynkinQuiver(self.ftype, tuple((b, a) for a, b in self.arrows))


def all_orientations(t: FiniteType) -> tuple[DynkinQuiver, ...]:
    """Every orientation of the diagram, in a fixed deterministic order."""
    edges = t.edges()
    out = []
    for mask in range(1 << len(edges)):
        arrows = tuple(
            (b, a) if mask >> k & 1 else (a, b) for k, (a, b) in enumerate(edges)
        )
        out.append(DynkinQuiver(t, arrows))
    return tuple(out)


def is_adapted(q: DynkinQuiver, word: Sequence[int]) -> bool:
    """Replay the defining condition: each letter is a source when reflected at."""
    cur = q
    for letter in word:
        if letter not in cur.sources():
            return False
        cur = cur.reflect(letter)
    return True


def adapted_word(q: DynkinQuiver, target: str) -> tuple[int, ...]:
    """A canonical word adapted to the orientation.

    ``target`` ``"coxeter"``: a full source sweep (each vertex once, greedy
    smallest index).  ``target`` ``"w0"``: the column reading of the AR quiver
    from the top height downward, which is verified to be an adapted reduced
    word for the longest element.
    """
    t = q.ftype
    if target == "coxeter":
        word: list[int] = []
        cur = q
        for _ in range(t.rank):
            cand = sorted(v for v in cur.sources() if v not in word)
            if not cand:
                raise AssertionError("source sweep ran out of sources")
            word.append(cand[0])
            cur = cur.reflect(cand[0])
        out = tuple(word)
        root_sequence(t, out)  # raises if not reduced
        return out
    if target != "w0":
        raise ValueError(f"unknown target {target!r}")
    xi = height_function(q)
    _, fwd, _ = _tau_data(q)
    columns: list[tuple[int, int]] = []
    for i in t.index_set:
        root, p = gamma_root(q, i), xi[i]
        columns.append((p, i))
        img = fwd[root]
        while all(c >= 0 for c in img):
            p -= 2
            columns.append((p, i))
            img = fwd[img]
    out = tuple(i for _, i in sorted(columns, key=lambda ci: (-ci[0], ci[1])))
    if not is_adapted(q, out):
        raise AssertionError("column reading is not adapted to the orientation")
    if set(root_sequence(t, out)) != positive_roots(t):
        raise AssertionError("column reading is not a longest-element word")
    return out


def height_function(q: DynkinQuiver, base_vertex: int = 1, base_value: int = 0) -> dict[int, int]:
    """The function xi with xi_a = xi_b + 1 for every arrow a -> b."""
    t = q.ftype
    if base_vertex not in t.index_set:
        raise ValueError(f"base vertex {base_vertex} not in the index set")
    arrow_set = set(q.arrows)
    xi = {base_vertex: base_value}
    frontier = [base_vertex]
    while frontier:
        nxt = []
        for v in frontier:
            for w in neighbors(t, v):
                if w in xi:
                    continue
                xi[w] = xi[v] - 1 if (v, w) in arrow_set else xi[v] + 1
                nxt.append(w)
        frontier = nxt
    return dict(sorted(xi.items()))


@lru_cache(maxsize=None)
def _tau_data(q: DynkinQuiver) -> tuple[tuple[int, ...], dict[Root, Root], dict[Root, Root]]:
    """Adapted Coxeter word plus its action (and inverse action) on positive roots."""
    t = q.ftype
    word = adapted_word(q, "coxeter")
    fwd = {}
    inv = {}
    rev = tuple(reversed(word))
    for r in positive_roots(t):
        fwd[r] = apply_word(t, word, r)
        inv[r] = apply_word(t, rev, r)
    return word, fwd, inv


def coxeter_word(q: DynkinQuiver) -> tuple[int, ...]:
    return _tau_data(q)[0]


def gamma_root(q: DynkinQuiver, i: int) -> Root:
    """Sum of the simple roots over vertices admitting a path into i."""
    t = q.ftype
    into: dict[int, list[int]] = {v: [] for v in t.index_set}
    for a, b in q.arrows:
        into[b].append(a)
    seen = {i}
    frontier = [i]
    while frontier:
        nxt = []
        for v in frontier:
            for w in into[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(1 if v in seen else 0 for v in t.index_set)


def _neg(v: Root) -> Root:
    return tuple(-c for c in v)


def phi(
    q: DynkinQuiver, xi: dict[int, int], window: tuple[int, int]
) -> dict[tuple[int, int], tuple[Root, int]]:
    """Coordinate table (i, p) -> (positive root, spin) on a height window.

    Defined on repetition-quiver vertices: p in [lo, hi] with p = xi_i mod 2.
    Row i starts from (gamma_root(q, i), 0) at p = xi_i; stepping down applies
    the Coxeter transformation tau and decrements the spin whenever the image
    turns negative, stepping up applies tau^{-1} and increments it.
    """
    lo, hi = window
    t = q.ftype
    if any(not lo <= xi[i] <= hi for i in t.index_set):
        raise ValueError("window must contain all height function values")
    _, fwd, inv = _tau_data(q)
    table: dict[tuple[int, int], tuple[Root, int]] = {}
    for i in t.index_set:
        start = gamma_root(q, i)
        table[(i, xi[i])] = (start, 0)
        root, m = start, 0
        p = xi[i]
        while p - 2 >= lo:
            img = fwd[root]
            if any(c < 0 for c in img):
                img, m = _neg(img), m - 1
            root, p = img, p - 2
            table[(i, p)] = (root, m)
        root, m = start, 0
        p = xi[i]
        while p + 2 <= hi:
            img = inv[root]
            if any(c < 0 for c in img):
                img, m = _neg(img), m + 1
            root, p = img, p + 2
            table[(i, p)] = (root, m)
    return table


@dataclass(frozen=True)
class ARData:
    """A quiver with a height function and its AR-quiver coordinate data."""

    quiver: DynkinQuiver
    height: dict[int, int]
    window: tuple[int, int]
    phi: dict[tuple[int, int], tuple[Root, int]]
    phi_inv: dict[tuple[Root, int], tuple[int, int]]
    gamma_vertices: frozenset[tuple[int, int]]
    gamma_arrows: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    m: dict[int, int]
    tau_word: tuple[int, ...]


def ar_quiver(
    q: DynkinQuiver,
    xi: dict[int, int] | None = None,
    window: tuple[int, int] | None = None,
) -> ARData:
    """Build the AR quiver Gamma_Q (the spin-0 slice of the phi table)."""
    t = q.ftype
    if xi is None:
        xi = height_function(q)
    if window is None:
        pad = 2 * t.rank * 4
        window = (min(xi.values()) - pad, max(xi.values()) + pad)
    table = phi(q, xi, window)
    inv: dict[tuple[Root, int], tuple[int, int]] = {}
    for vertex, key in table.items():
        if key in inv:
            raise AssertionError(f"phi is not injective on the window at {key}")
        inv[key] = vertex
    gamma = frozenset(v for v, (_, m) in table.items() if m == 0)
    if len(gamma) != t.num_positive_roots():
        raise AssertionError("spin-0 slice does not match the positive roots")
    arrows = []
    for (i, p) in sorted(gamma):
        for j in neighbors(t, i):
            if (j, p + 1) in gamma:
                arrows.append(((i, p), (j, p + 1)))
    _, fwd, _ = _tau_data(q)
    m_vals = {}
    for i in t.index_set:
        root = gamma_root(q, i)
        count = 0
        img = fwd[root]
        while all(c >= 0 for c in img):
            count += 1
            img = fwd[img]
        m_vals[i] = count
    return ARData(
        quiver=q,
        height=dict(xi),
        window=window,
        phi=table,
        phi_inv=inv,
        gamma_vertices=gamma,
        gamma_arrows=tuple(sorted(arrows)),
        m=m_vals,
        tau_word=coxeter_word(q),
    )


@dataclass(frozen=True)
class ConvexPartialOrder:
    """The relation beta <= gamma as a set of ordered root pairs."""

    roots: tuple[Root, ...]
    pairs: frozenset[tuple[Root, Root]]

    def leq(self, beta: Root, gamma: Root) -> bool:
        return (beta, gamma) in self.pairs


def convex_order_Q(ar: ARData) -> ConvexPartialOrder:
    """Order from AR coordinates: beta <= gamma iff d(i, j) <= a - b,
    where (i, a) and (j, b) are the spin-0 positions of beta and gamma."""
    t = ar.quiver.ftype
    roots = tuple(sorted(positive_roots(t)))
    pos = {r: ar.phi_inv[(r, 0)] for r in roots}
    pairs = set()
    for beta in roots:
        i, a = pos[beta]
        for gamma in roots:
            j, b = pos[gamma]
            if distance(t, i, j) <= a - b:
                pairs.add((beta, gamma))
    return ConvexPartialOrder(roots, frozenset(pairs))


def gamma_path_order(ar: ARData) -> ConvexPartialOrder:
    """Order by path existence inside Gamma_Q: beta <= gamma iff gamma's
    vertex reaches beta's vertex along AR-quiver arrows."""
    t = ar.quiver.ftype
    roots = tuple(sorted(positive_roots(t)))
    succ: dict[tuple[int, int], list[tuple[int, int]]] = {v: [] for v in ar.gamma_vertices}
    for a, b in ar.gamma_arrows:
        succ[a].append(b)
    reach: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for start in sorted(ar.gamma_vertices, key=lambda v: -v[1]):
        acc = {start}
        for nxt in succ[start]:
            acc |= reach[nxt]
        reach[start] = acc
    pos = {r: ar.phi_inv[(r, 0)] for r in roots}
    root_at = {v: r for r, v in pos.items()}
    pairs = set()
    for gamma in roots:
        for v in reach[pos[gamma]]:
            pairs.add((root_at[v], gamma))
    return ConvexPartialOrder(roots, frozenset(pairs))


def minimal_pairs(order: Sequence[Root], alpha: Root) -> tuple[tuple[Root, Root], ...]:
    """All minimal pairs of alpha for a convex total order.

    A pair (beta, gamma) with beta + gamma = alpha and beta < alpha < gamma is
    minimal when no other such pair nests inside the closed interval
    [beta, gamma].  Pairs are returned with the earlier root first.
    """
    seq = tuple(tuple(r) for r in order)
    pos = {r: n for n, r in enumerate(seq)}
    if len(pos) != len(seq):
        raise ValueError("order contains duplicates")
    alpha = tuple(alpha)
    if alpha not in pos:
        raise ValueError("alpha is not in the given order")
    pa = pos[alpha]
    pairs = []
    for beta in seq[:pa]:
        gamma = sub_roots(alpha, beta)
        if gamma in pos and pos[gamma] > pa:
            pairs.append((beta, gamma))
    out = []
    for beta, gamma in pairs:
        nested = any(
            (b2, g2) != (beta, gamma) and pos[beta] <= pos[b2] and pos[g2] <= pos[gamma]
            for b2, g2 in pairs
        )
        if not nested:
            out.append((beta, gamma))
    return tuple(sorted(out, key=lambda bg: pos[bg[0]]))
