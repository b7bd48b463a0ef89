"""L-S paths, their orders, wedge products and saturated sets.

A path of shape ``lam`` is a strictly decreasing chain of cosets in
``W/W_lam`` together with increasing rational cut points in ``(0, 1)``.
Coset chains are compared through the Bruhat order (partial) or through the
fixed total order of :class:`~richardson_smt.weyl.CosetSpace`, which sorts
cosets by length and then by canonical reduced word.

Everything is exact: cuts are :class:`fractions.Fraction` values.
"""
from __future__ import annotations

import os
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .weyl import (
    BoundExceeded,
    Coset,
    CosetSpace,
    RootSystem,
    Weight,
    coset_space,
    weyl_group,
)

DEFAULT_MAX_PATHS = 2_000_000

ONE = Fraction(1)
ZERO = Fraction(0)


def max_paths() -> int:
    return int(os.environ.get("SMT_MAX_PATHS", DEFAULT_MAX_PATHS))


def _space_for(shape: Weight, cosets: Sequence[Coset]) -> CosetSpace:
    group = cosets[0].group
    return coset_space(group, group.root_system.stabilizer(shape))


def _integral(vec: Iterable[Fraction]) -> tuple:
    vec = tuple(vec)
    if all(v.denominator == 1 for v in vec):
        return tuple(int(v) for v in vec)
    return vec


@dataclass(frozen=True, eq=False)
class ConvexSubset:
    """Cosets decreasing in the total order, with cuts ``0 < a_1 < ... < a_r < 1``."""

    shape: Weight
    cosets: tuple[Coset, ...]
    cuts: tuple[Fraction, ...]
    ids: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(int(x) for x in self.shape))
        object.__setattr__(self, "cosets", tuple(self.cosets))
        object.__setattr__(self, "cuts", tuple(Fraction(c) for c in self.cuts))
        if not self.cosets:
            raise ValueError("a path needs at least one coset")
        if len(self.cuts) != len(self.cosets) - 1:
            raise ValueError("need exactly one cut between consecutive cosets")
        bounds = (ZERO,) + self.cuts + (ONE,)
        if any(x >= y for x, y in zip(bounds, bounds[1:])):
            raise ValueError("cuts must be strictly increasing inside (0, 1)")
        space = _space_for(self.shape, self.cosets)
        for c in self.cosets:
            if c.parabolic != space.parabolic:
                raise ValueError(
                    f"coset {c} is not in W/W_lambda for lambda={list(self.shape)}"
                )
        ids = tuple(space.id_of(c) for c in self.cosets)
        if any(x <= y for x, y in zip(ids, ids[1:])):
            raise ValueError("cosets must be strictly decreasing in the total order")
        object.__setattr__(self, "ids", ids)

    def __eq__(self, other):
        if not isinstance(other, ConvexSubset):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.cuts == other.cuts
            and self.cosets == other.cosets
        )

    def __hash__(self):
        return hash((self.shape, self.ids, self.cuts))

    def __str__(self):
        cos = ",".join(str(c) for c in self.cosets)
        if not self.cuts:
            return f"({cos})"
        return f"({cos}; {','.join(str(a) for a in self.cuts)})"

    @property
    def space(self) -> CosetSpace:
        return _space_for(self.shape, self.cosets)

    @property
    def root_system(self) -> RootSystem:
        return self.cosets[0].group.root_system

    @property
    def initial(self) -> Coset:
        return self.cosets[0]

    @property
    def final(self) -> Coset:
        return self.cosets[-1]

    @property
    def coset_weights(self) -> tuple[Fraction, ...]:
        """``x_i = a_i - a_{i-1}``, the weight carried by each coset."""
        bounds = (ZERO,) + self.cuts + (ONE,)
        return tuple(y - x for x, y in zip(bounds, bounds[1:]))

    @property
    def weight(self) -> tuple:
        acc = [Fraction(0)] * len(self.shape)
        for x, c in zip(self.coset_weights, self.cosets):
            for k, v in enumerate(c.apply(self.shape)):
                acc[k] += x * v
        return _integral(acc)

    def lex_key(self) -> tuple:
        """Sort key for the total weighted-lexicographic order."""
        key: list = []
        for k, c in enumerate(self.ids):
            key.append(c)
            key.append(self.cuts[k] if k < len(self.cuts) else ONE)
        return tuple(key)

    def revlex_key(self) -> tuple:
        """Sort key for the total reverse weighted-lexicographic order."""
        key: list = []
        r = len(self.cuts)
        for k in range(r, -1, -1):
            key.append(self.ids[k])
            key.append(ONE - self.cuts[k - 1] if k > 0 else ONE)
        return tuple(key)


class LSPath(ConvexSubset):
    """An L-S path. Construction checks shape, cut and order bookkeeping;
    use :func:`is_ls_path` for the Bruhat and integrality conditions."""


def weight(pi: ConvexSubset) -> tuple:
    return pi.weight


def initial(pi: ConvexSubset) -> Coset:
    return pi.initial


def final(pi: ConvexSubset) -> Coset:
    return pi.final


# ---------------------------------------------------------------------------
# the path model for one shape
# ---------------------------------------------------------------------------

class PathModel:
    """Cover labels, integrality reachability and the set ``B(lam)``."""

    def __init__(self, rs: RootSystem, shape: Sequence[int]):
        shape = tuple(int(x) for x in shape)
        if not rs.is_dominant(shape):
            raise ValueError(f"weight {list(shape)} is not dominant for {rs.name}")
        self.root_system = rs
        self.shape = shape
        self.group = weyl_group(rs)
        self.space = coset_space(self.group, rs.stabilizer(shape))
        n = len(self.space)
        self.orbit = [self.space.weight(k, shape) for k in range(n)]
        # labels[a] = [(b, |<a(lam), beta^vee>|) for each cover b of a]
        self.labels: list[list[tuple[int, int]]] = []
        for a in range(n):
            self.labels.append(
                [(b, abs(rs.pair(self.orbit[a], beta))) for b, beta in self.space.covers_down(a)]
            )
        all_labels = {lab for row in self.labels for _, lab in row}
        self.denominators = sorted(
            q for q in range(2, max(all_labels, default=1) + 1)
            if any(lab % q == 0 for lab in all_labels)
        )
        fracs = sorted(
            (Fraction(p, q), q)
            for q in self.denominators
            for p in range(1, q)
            if Fraction(p, q).denominator == q
        )
        self._fractions = fracs
        self._fraction_values = [f for f, _ in fracs]
        self._reach: dict[int, list[int]] = {}

    def reach(self, q: int) -> list[int]:
        """Bitmask per coset of everything reachable downward through covers
        whose labels are all divisible by ``q`` (the coset itself included)."""
        got = self._reach.get(q)
        if got is None:
            got = []
            # ids ascend with length, so covers are always computed first
            for a in range(len(self.space)):
                mask = 1 << a
                for b, lab in self.labels[a]:
                    if lab % q == 0:
                        mask |= got[b]
                got.append(mask)
            self._reach[q] = got
        return got

    def admissible(self, a: int, b: int, cut: Fraction) -> bool:
        """Integrality condition for the step ``a -> b`` at cut ``cut``."""
        if a == b:
            return False
        q = Fraction(cut).denominator
        return bool(self.reach(q)[a] >> b & 1)

    def _enumerate(self) -> list[tuple[tuple[int, ...], tuple[Fraction, ...]]]:
        out: list = []
        bound = max_paths()
        fracs = self._fractions
        values = self._fraction_values

        def extend(ids, cuts):
            out.append((ids, cuts))
            if len(out) > bound:
                raise BoundExceeded(f"more than {bound} paths of shape {list(self.shape)}")
            last = ids[-1]
            start = bisect_right(values, cuts[-1]) if cuts else 0
            for f, q in fracs[start:]:
                mask = self.reach(q)[last] & ~(1 << last)
                b = 0
                while mask:
                    if mask & 1:
                        extend(ids + (b,), cuts + (f,))
                    mask >>= 1
                    b += 1

        for a in range(len(self.space)):
            extend((a,), ())
        return out

    @cached_property
    def paths(self) -> tuple[LSPath, ...]:
        """``B(lam)``, sorted decreasingly in the total lexicographic order."""
        raw = self._enumerate()
        cos = self.space.cosets
        paths = [
            LSPath(self.shape, tuple(cos[k] for k in ids), cuts) for ids, cuts in raw
        ]
        paths.sort(key=lambda p: p.lex_key(), reverse=True)
        return tuple(paths)

    @cached_property
    def ie_counts(self) -> list[list[int]]:
        """``M[i][e] = #{pi in B(lam) : i(pi) = i, e(pi) = e}`` (coset ids)."""
        n = len(self.space)
        m = [[0] * n for _ in range(n)]
        for p in self.paths:
            m[p.ids[0]][p.ids[-1]] += 1
        return m

    def path(self, ids: Sequence[int], cuts: Sequence[Fraction] = ()) -> LSPath:
        return LSPath(self.shape, tuple(self.space.cosets[k] for k in ids), tuple(cuts))


@lru_cache(maxsize=None)
def _cached_model(rs: RootSystem, shape: tuple[int, ...]) -> PathModel:
    return PathModel(rs, shape)


def path_model(rs: RootSystem, shape: tuple[int, ...]) -> PathModel:
    model = _cached_model(rs, tuple(shape))
    done = model.__dict__.get("paths")
    if done is not None and len(done) > max_paths():
        raise BoundExceeded(f"more than {max_paths()} paths of shape {list(model.shape)}")
    return model


def enumerate_ls_paths(lam: Sequence[int], rs: RootSystem) -> list[LSPath]:
    """All L-S paths of shape ``lam``, largest first in the total lex order."""
    return list(path_model(rs, tuple(lam)).paths)


def check_integrality(chain: tuple[Coset, Coset], a: Fraction, lam: Sequence[int]) -> bool:
    """Whether ``chain[0]`` reaches ``chain[1]`` by a descending chain of
    reflections whose pairings, scaled by ``a``, are all integers."""
    lam = tuple(lam)
    if not any(lam):
        return True
    upper, lower = chain
    rs = upper.group.root_system
    model = path_model(rs, lam)
    sp = model.space
    return model.admissible(sp.id_of(upper.rep), sp.id_of(lower.rep), Fraction(a))


def is_ls_path(pi: ConvexSubset) -> bool:
    """Bruhat decrease plus the integrality condition at every cut."""
    model = path_model(pi.root_system, pi.shape)
    sp = model.space
    for k in range(len(pi.cuts)):
        a, b = pi.ids[k], pi.ids[k + 1]
        if not (sp.leq(b, a) and a != b):
            return False
        if not model.admissible(a, b, pi.cuts[k]):
            return False
    return True


def as_ls_path(pi: ConvexSubset) -> LSPath:
    if not is_ls_path(pi):
        raise ValueError(f"{pi} is not an L-S path of shape {list(pi.shape)}")
    if isinstance(pi, LSPath):
        return pi
    return LSPath(pi.shape, pi.cosets, pi.cuts)


def is_standard_on(pi: ConvexSubset, tau: Coset, kappa: Coset) -> bool:
    """``tau >= i(pi)`` and ``e(pi) >= kappa`` in ``W/W_lam``."""
    sp = pi.space
    if tau.parabolic != sp.parabolic or kappa.parabolic != sp.parabolic:
        raise ValueError("tau and kappa must lie in W/W_lambda of the path's shape")
    return sp.leq(pi.ids[0], sp.id_of(tau)) and sp.leq(sp.id_of(kappa), pi.ids[-1])


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------

def _cmp_coset(sp: CosetSpace, a: int, b: int, total: bool):
    if a == b:
        return 0
    if total:
        return 1 if a > b else -1
    if sp.leq(b, a):
        return 1
    if sp.leq(a, b):
        return -1
    return None


def _cmp(x, y):
    return (x > y) - (x < y)


def cmp_lex(pi: ConvexSubset, eta: ConvexSubset, total: bool = False):
    """Weighted lexicographic comparison: 1, 0, -1, or ``None`` if incomparable.

    With ``total=False`` cosets are compared in the Bruhat order, otherwise
    in the fixed total order. A path that runs out of cuts reads a cut of 1.
    """
    if pi.shape != eta.shape:
        raise ValueError("paths of different shapes")
    sp = pi.space
    k = 0
    while True:
        c = _cmp_coset(sp, pi.ids[k], eta.ids[k], total)
        if c != 0:
            return c
        a = pi.cuts[k] if k < len(pi.cuts) else ONE
        b = eta.cuts[k] if k < len(eta.cuts) else ONE
        if a != b:
            return _cmp(a, b)
        if a == ONE:
            return 0
        k += 1


def cmp_revlex(pi: ConvexSubset, eta: ConvexSubset, total: bool = False):
    """Reverse weighted lexicographic comparison, read from the final coset."""
    if pi.shape != eta.shape:
        raise ValueError("paths of different shapes")
    sp = pi.space
    r, s = len(pi.cuts), len(eta.cuts)
    while True:
        c = _cmp_coset(sp, pi.ids[r], eta.ids[s], total)
        if c != 0:
            return c
        a = ONE - pi.cuts[r - 1] if r > 0 else ONE
        b = ONE - eta.cuts[s - 1] if s > 0 else ONE
        if a != b:
            return _cmp(a, b)
        if r == 0:
            return 0
        r -= 1
        s -= 1


def cmp_lex_seq(seq1: Sequence[ConvexSubset], seq2: Sequence[ConvexSubset], total: bool = False):
    for p, q in zip(seq1, seq2):
        c = cmp_lex(p, q, total)
        if c != 0:
            return c
    return 0


def cmp_revlex_seq(seq1: Sequence[ConvexSubset], seq2: Sequence[ConvexSubset], total: bool = False):
    for p, q in zip(reversed(seq1), reversed(seq2)):
        c = cmp_revlex(p, q, total)
        if c != 0:
            return c
    return 0


# ---------------------------------------------------------------------------
# saturated sets
# ---------------------------------------------------------------------------

def _universe(paths: Iterable[LSPath], universe) -> tuple[LSPath, ...]:
    if universe is not None:
        return tuple(universe)
    paths = list(paths)
    if not paths:
        return ()
    return path_model(paths[0].root_system, paths[0].shape).paths


def _gt(cmp, x, y) -> bool:
    return cmp(x, y) == 1


def _is_saturated(S, universe, cmp) -> bool:
    S = set(S)
    if not S:
        return True
    for eta in _universe(S, universe):
        if eta in S:
            continue
        above = any(_gt(cmp, p, eta) for p in S)
        if above and any(_gt(cmp, eta, p) for p in S):
            return False
    return True


def is_positive_saturated(S: Iterable[LSPath], universe=None) -> bool:
    """Closed under ``>``-intervals inside ``B(lam)``."""
    return _is_saturated(S, universe, cmp_lex)


def is_negative_saturated(S: Iterable[LSPath], universe=None) -> bool:
    return _is_saturated(S, universe, cmp_revlex)


def is_maximally_positive_saturated(S: Iterable[LSPath], universe=None) -> bool:
    S = set(S)
    return all(
        eta in S
        for eta in _universe(S, universe)
        if any(_gt(cmp_lex, eta, p) for p in S)
    )


def is_maximally_negative_saturated(S: Iterable[LSPath], universe=None) -> bool:
    S = set(S)
    return all(
        eta in S
        for eta in _universe(S, universe)
        if any(_gt(cmp_revlex, p, eta) for p in S)
    )


def positive_closure(S: Iterable[LSPath], universe=None) -> set[LSPath]:
    """All paths ``>=`` some element of ``S``."""
    S = set(S)
    return {eta for eta in _universe(S, universe) if any(cmp_lex(eta, p) in (0, 1) for p in S)}


def negative_closure(S: Iterable[LSPath], universe=None) -> set[LSPath]:
    """All paths ``<=^r`` some element of ``S``."""
    S = set(S)
    return {eta for eta in _universe(S, universe) if any(cmp_revlex(p, eta) in (0, 1) for p in S)}


# ---------------------------------------------------------------------------
# standard sequences and wedge products
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StandardSequence:
    paths: tuple[LSPath, ...]

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        if not self.paths:
            raise ValueError("empty sequence")
        shape = self.paths[0].shape
        if any(p.shape != shape for p in self.paths):
            raise ValueError("all paths of a standard sequence share one shape")
        sp = self.paths[0].space
        for p, q in zip(self.paths, self.paths[1:]):
            if not sp.leq(q.ids[0], p.ids[-1]):
                raise ValueError("sequence is not standard")

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    @property
    def shape(self) -> Weight:
        return self.paths[0].shape

    @property
    def initial(self) -> Coset:
        return self.paths[0].initial

    @property
    def final(self) -> Coset:
        return self.paths[-1].final

    @property
    def weight(self) -> tuple:
        acc = [Fraction(0)] * len(self.shape)
        for p in self.paths:
            for k, v in enumerate(p.weight):
                acc[k] += v
        return _integral(acc)


def wedge(*paths: ConvexSubset) -> ConvexSubset:
    """m-fold wedge product, a convex subset of shape ``m * lam``."""
    if len(paths) == 1 and not isinstance(paths[0], ConvexSubset):
        paths = tuple(paths[0])
    if not paths:
        raise ValueError("wedge of nothing")
    m = len(paths)
    shape = paths[0].shape
    if any(p.shape != shape for p in paths):
        raise ValueError("wedge factors must share one shape")
    weights: dict[int, Fraction] = {}
    cos: dict[int, Coset] = {}
    for p in paths:
        for k, c, x in zip(p.ids, p.cosets, p.coset_weights):
            weights[k] = weights.get(k, ZERO) + x
            cos[k] = c
    order = sorted(weights, reverse=True)
    cuts = []
    acc = ZERO
    for k in order[:-1]:
        acc += weights[k]
        cuts.append(acc / m)
    new_shape = tuple(m * x for x in shape)
    if not any(shape):
        return ConvexSubset(new_shape, (cos[order[0]],), ())
    return ConvexSubset(new_shape, tuple(cos[k] for k in order), tuple(cuts))


def unwedge(pi: ConvexSubset, m: int) -> StandardSequence:
    """The standard sequence of length ``m`` whose wedge product is ``pi``."""
    if m < 1 or any(x % m for x in pi.shape):
        raise ValueError(f"shape {list(pi.shape)} is not divisible by {m}")
    pi = as_ls_path(pi)
    shape = tuple(x // m for x in pi.shape)
    bounds = (ZERO,) + pi.cuts + (ONE,)
    pieces = []
    for j in range(1, m + 1):
        lo, hi = Fraction(j - 1, m), Fraction(j, m)
        cos, cuts = [], []
        for k, c in enumerate(pi.cosets):
            start, end = max(bounds[k], lo), min(bounds[k + 1], hi)
            if start >= end:
                continue
            if cos:
                cuts.append(m * start - (j - 1))
            cos.append(c)
        piece = LSPath(shape, tuple(cos), tuple(cuts)) if any(shape) else LSPath(shape, (cos[0],), ())
        pieces.append(as_ls_path(piece))
    return StandardSequence(tuple(pieces))


def enumerate_standard_sequences(
    lam: Sequence[int],
    m: int,
    rs: RootSystem,
    tau: Coset | None = None,
    kappa: Coset | None = None,
) -> list[StandardSequence]:
    """Standard sequences of length ``m`` with ``tau >= i`` and ``e >= kappa``."""
    model = path_model(rs, tuple(lam))
    sp = model.space
    top = sp.id_of(tau) if tau is not None else sp.top
    bottom = sp.id_of(kappa) if kappa is not None else 0
    if m < 1:
        raise ValueError("sequence length must be positive")
    paths = model.paths
    by_init: dict[int, list[LSPath]] = {}
    for p in paths:
        by_init.setdefault(p.ids[0], []).append(p)
    bound = max_paths()
    out: list[StandardSequence] = []

    def extend(prefix: tuple, allowed_top: int):
        if len(prefix) == m:
            if sp.leq(bottom, prefix[-1].ids[-1]):
                out.append(StandardSequence(prefix))
                if len(out) > bound:
                    raise BoundExceeded("too many standard sequences")
            return
        for i in sorted(by_init, reverse=True):
            if not sp.leq(i, allowed_top):
                continue
            for p in by_init[i]:
                if sp.leq(bottom, p.ids[-1]):
                    extend(prefix + (p,), p.ids[-1])

    extend((), top)
    return out
