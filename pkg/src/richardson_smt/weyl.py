"""Root systems, Weyl groups, Bruhat order and parabolic quotients.

Conventions used throughout the package:

* weights are integer tuples in the basis of fundamental weights, so entry
  ``i`` of a weight is its pairing with the ``i``-th simple coroot;
* roots are integer tuples in the basis of simple roots;
* simple reflections are labelled ``1..rank`` (words, parabolic subsets);
* ``cartan[i][j]`` is the pairing of the ``i``-th simple coroot with the
  ``j``-th simple root (0-based array indices).

Weyl group elements are canonicalised by their matrix on the weight
lattice. A parabolic subgroup is given by the set of labels of its simple
reflections; cosets ``wW_Q`` are represented by their minimal-length
representative.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_GROUP_SIZE = 40320
# Groups up to this order get their Bruhat table built eagerly.
EAGER_TABLE_SIZE = 1000

Weight = tuple[int, ...]
Root = tuple[int, ...]


class BoundExceeded(RuntimeError):
    """A configured size bound (group order, number of paths) was exceeded."""


def max_group_size() -> int:
    return int(os.environ.get("SMT_MAX_GROUP_SIZE", DEFAULT_MAX_GROUP_SIZE))


# ---------------------------------------------------------------------------
# root systems
# ---------------------------------------------------------------------------

def _chain(rank: int) -> list[list[int]]:
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki labelling.

    Raises ``ValueError`` for an invalid ``(family, rank)``.
    """
    family = family.upper()
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"invalid rank {rank!r}")
    if family == "A":
        a = _chain(rank)
    elif family in ("B", "C"):
        if rank < 2:
            raise ValueError(f"type {family} needs rank >= 2")
        a = _chain(rank)
        # B: last simple root short; C: last simple root long
        if family == "B":
            a[rank - 1][rank - 2] = -2
        else:
            a[rank - 2][rank - 1] = -2
    elif family == "D":
        if rank < 4:
            raise ValueError("type D needs rank >= 4")
        a = _chain(rank)
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    elif family == "E":
        if rank not in (6, 7, 8):
            raise ValueError("type E needs rank 6, 7 or 8")
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
        for i, j in edges:
            if j < rank:
                a[i][j] = a[j][i] = -1
    elif family == "F":
        if rank != 4:
            raise ValueError("type F needs rank 4")
        a = _chain(4)
        a[2][1] = -2
    elif family == "G":
        if rank != 2:
            raise ValueError("type G needs rank 2")
        a = [[2, -3], [-1, 2]]
    else:
        raise ValueError(f"unknown family {family!r}")
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Half squared root lengths ``d`` with ``d_i a_ij = d_j a_ji``, scaled to integers."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise ValueError("Cartan matrix is not connected")
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    return tuple(ints)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    symmetrizer: tuple[int, ...]
    # coefficients of each positive coroot in the simple coroots
    coroots: tuple[Root, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(k == i - 1) for k in range(self.rank))

    def simple_root_weight(self, i: int) -> Weight:
        """The simple root ``alpha_i`` written in fundamental weights."""
        return tuple(self.cartan[k][i - 1] for k in range(self.rank))

    def root_weight(self, beta: Root) -> Weight:
        """A root (simple-root coordinates) written in fundamental weights."""
        return tuple(
            sum(self.cartan[k][j] * beta[j] for j in range(self.rank))
            for k in range(self.rank)
        )

    def coroot(self, beta: Root) -> Root:
        return self.coroots[self.positive_roots.index(tuple(beta))]

    def pair(self, mu: Sequence[int], beta: Root) -> int:
        """``<mu, beta^vee>`` for a positive root ``beta``."""
        return sum(c * m for c, m in zip(self.coroot(beta), mu))

    def reflect(self, mu: Sequence[int], beta: Root) -> Weight:
        n = self.pair(mu, beta)
        bw = self.root_weight(beta)
        return tuple(m - n * b for m, b in zip(mu, bw))

    def is_dominant(self, mu: Sequence[int]) -> bool:
        return len(mu) == self.rank and all(m >= 0 for m in mu)

    def stabilizer(self, mu: Sequence[int]) -> frozenset[int]:
        """Labels of the simple reflections fixing a dominant weight."""
        return frozenset(i + 1 for i, m in enumerate(mu) if m == 0)

    def is_regular_for(self, mu: Sequence[int], parabolic: Iterable[int]) -> bool:
        """``mu`` is Q-regular dominant: positive exactly off the parabolic set."""
        return self.is_dominant(mu) and self.stabilizer(mu) == frozenset(parabolic)

    def simple_reflect_root(self, i: int, beta: Root) -> Root:
        k = i - 1
        c = sum(self.cartan[k][j] * beta[j] for j in range(self.rank))
        out = list(beta)
        out[k] -= c
        return tuple(out)


def _positive_roots(cartan) -> tuple[Root, ...]:
    n = len(cartan)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * beta[j] for j in range(n))
                img = list(beta)
                img[i] -= c
                img = tuple(img)
                if all(x >= 0 for x in img) and any(img) and img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(sorted(seen, key=lambda b: (sum(b), b)))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Cartan data and positive roots of the simple type ``family``/``rank``."""
    family = family.upper()
    cartan = cartan_matrix(family, rank)
    roots = _positive_roots(cartan)
    d = _symmetrizer(cartan)
    coroots = []
    for beta in roots:
        # (beta, beta)/2 in units where (alpha_i, alpha_j) = d_i a_ij
        norm = Fraction(
            sum(beta[i] * beta[j] * d[i] * cartan[i][j] for i in range(rank) for j in range(rank)),
            2,
        )
        co = [Fraction(beta[j] * d[j]) / norm for j in range(rank)]
        if any(c.denominator != 1 for c in co):
            raise AssertionError(f"non-integral coroot for {beta}")
        coroots.append(tuple(int(c) for c in co))
    return RootSystem(family, rank, cartan, roots, d, tuple(coroots))


def parse_type(text: str) -> RootSystem:
    """``"A3"`` -> root system of type A3."""
    text = text.strip()
    return build_root_system(text[0], int(text[1:]))


# ---------------------------------------------------------------------------
# Weyl group
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class WeylElement:
    matrix: tuple[tuple[int, ...], ...]
    length: int
    canonical_word: tuple[int, ...]
    group: "WeylGroup" = field(repr=False)
    index: int = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.group is other.group:
            return self.index == other.index
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __str__(self):
        return format_word(self.canonical_word)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.multiply(self, other)

    def apply(self, mu: Sequence[int]) -> Weight:
        return tuple(sum(r * m for r, m in zip(row, mu)) for row in self.matrix)

    def inverse(self) -> "WeylElement":
        return self.group.inverse(self)


def format_word(word: Sequence[int]) -> str:
    return ".".join(f"s{i}" for i in word) if word else "e"


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("e", "id", ""):
        return ()
    out = []
    for part in text.split("."):
        part = part.strip()
        if not part.startswith("s") or not part[1:].isdigit():
            raise ValueError(f"bad Weyl word {text!r}")
        out.append(int(part[1:]))
    return tuple(out)


class WeylGroup:
    """The finite Weyl group of a root system, fully enumerated.

    Elements are stored in breadth-first (hence length-nondecreasing) order;
    the Bruhat order is kept as one boolean row per element, built lazily
    and memoised.
    """

    def __init__(self, rs: RootSystem, bound: int | None = None):
        self.root_system = rs
        bound = max_group_size() if bound is None else bound
        r = rs.rank
        cols = [rs.simple_root_weight(i + 1) for i in range(r)]
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        mats = [ident]
        lengths = [0]
        key_index = {rs.rho: 0}
        right: list[list[int]] = []
        pos = 0
        while pos < len(mats):
            m = mats[pos]
            row_right = []
            for i in range(r):
                # column i of M s_i is w(omega_i) - w(alpha_i)
                walpha = [sum(m[k][j] * cols[i][j] for j in range(r)) for k in range(r)]
                new = tuple(
                    tuple(m[k][j] - (walpha[k] if j == i else 0) for j in range(r))
                    for k in range(r)
                )
                key = tuple(sum(row) for row in new)
                idx = key_index.get(key)
                if idx is None:
                    idx = len(mats)
                    if idx >= bound:
                        raise BoundExceeded(
                            f"Weyl group of {rs.name} exceeds the bound {bound}"
                        )
                    key_index[key] = idx
                    mats.append(new)
                    lengths.append(lengths[pos] + 1)
                row_right.append(idx)
            right.append(row_right)
            pos += 1
        self._key_index = key_index
        self._right = right
        self._lengths = lengths
        keys = [tuple(sum(row) for row in m) for m in mats]
        self._rho_images = keys
        self._left = []
        for key in keys:
            row_left = []
            for i in range(r):
                c = key[i]
                img = tuple(key[k] - c * cols[i][k] for k in range(r))
                row_left.append(key_index[img])
            self._left.append(row_left)
        words: list[tuple[int, ...]] = [()] * len(mats)
        for w in range(1, len(mats)):
            key = keys[w]
            i = next(k for k in range(r) if key[k] < 0)
            words[w] = (i + 1,) + words[self._left[w][i]]
        self.elements = [
            WeylElement(mats[w], lengths[w], words[w], self, w) for w in range(len(mats))
        ]
        self._left_perm = [np.array([self._left[u][i] for u in range(len(mats))]) for i in range(r)]
        self._rows: list[np.ndarray | None] = [None] * len(mats)
        self._inverse: list[int | None] = [None] * len(mats)
        if len(mats) <= EAGER_TABLE_SIZE:
            self.bruhat_table()

    # -- basic structure -------------------------------------------------
    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def element(self, word: Sequence[int] | str) -> WeylElement:
        """Product of simple reflections (not necessarily reduced)."""
        if isinstance(word, str):
            word = parse_word(word)
        w = 0
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"simple reflection s{i} out of range")
            w = self._right[w][i - 1]
        return self.elements[w]

    def from_rho_image(self, key: Sequence[int]) -> WeylElement:
        return self.elements[self._key_index[tuple(key)]]

    def rho_image(self, w: WeylElement) -> Weight:
        return self._rho_images[w.index]

    def left_mult(self, i: int, w: WeylElement) -> WeylElement:
        return self.elements[self._left[w.index][i - 1]]

    def right_mult(self, w: WeylElement, i: int) -> WeylElement:
        return self.elements[self._right[w.index][i - 1]]

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        w = u.index
        for i in v.canonical_word:
            w = self._right[w][i - 1]
        return self.elements[w]

    def inverse(self, w: WeylElement) -> WeylElement:
        cached = self._inverse[w.index]
        if cached is None:
            x = 0
            for i in reversed(w.canonical_word):
                x = self._right[x][i - 1]
            self._inverse[w.index] = cached = x
        return self.elements[cached]

    def reflection(self, beta: Root) -> WeylElement:
        rs = self.root_system
        return self.from_rho_image(rs.reflect(rs.rho, beta))

    def right_descents(self, w: WeylElement) -> frozenset[int]:
        lw = self._lengths[w.index]
        return frozenset(
            i + 1 for i, x in enumerate(self._right[w.index]) if self._lengths[x] < lw
        )

    def left_descents(self, w: WeylElement) -> frozenset[int]:
        return frozenset(i + 1 for i, c in enumerate(self._rho_images[w.index]) if c < 0)

    def inversion_count(self, w: WeylElement) -> int:
        """``#{beta > 0 : w(beta) < 0}``, computed from the root action."""
        rs = self.root_system
        count = 0
        for beta in rs.positive_roots:
            img = beta
            for i in reversed(w.canonical_word):
                img = rs.simple_reflect_root(i, img)
            if all(x <= 0 for x in img):
                count += 1
        return count

    # -- Bruhat order ----------------------------------------------------
    def _row(self, v: int) -> np.ndarray:
        row = self._rows[v]
        if row is not None:
            return row
        # iterate down the canonical word so recursion depth stays bounded
        chain = []
        x = v
        while self._rows[x] is None and x != 0:
            chain.append(x)
            x = self._left[x][self.elements[x].canonical_word[0] - 1]
        if self._rows[0] is None:
            base = np.zeros(len(self.elements), dtype=bool)
            base[0] = True
            self._rows[0] = base
        for y in reversed(chain):
            s = self.elements[y].canonical_word[0] - 1
            prev = self._rows[self._left[y][s]]
            # u <= y  iff  min(u, s u) <= s y
            self._rows[y] = prev | prev[self._left_perm[s]]
        return self._rows[v]

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        return bool(self._row(v.index)[u.index])

    def bruhat_table(self) -> np.ndarray:
        """Full boolean table ``T[u, v] = (u <= v)``."""
        n = len(self.elements)
        for v in range(n):
            self._row(v)
        return np.stack(self._rows, axis=1)

    # -- parabolic cosets --------------------------------------------------
    def min_coset_rep(self, w: WeylElement, parabolic: Iterable[int]) -> WeylElement:
        parabolic = sorted(parabolic)
        x = w.index
        changed = True
        while changed:
            changed = False
            for i in parabolic:
                y = self._right[x][i - 1]
                if self._lengths[y] < self._lengths[x]:
                    x = y
                    changed = True
        return self.elements[x]

    def coset_of(self, w: WeylElement, parabolic: Iterable[int]) -> "Coset":
        parabolic = frozenset(parabolic)
        return Coset(parabolic, self.min_coset_rep(w, parabolic))

    def cosets(self, parabolic: Iterable[int]) -> "CosetSpace":
        return coset_space(self, frozenset(parabolic))

    def parabolic_subgroup(self, parabolic: Iterable[int]) -> list[WeylElement]:
        gens = sorted(parabolic)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for i in gens:
                    y = self._right[x][i - 1]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return [self.elements[x] for x in sorted(seen)]


@lru_cache(maxsize=None)
def _cached_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)


def weyl_group(rs: RootSystem) -> WeylGroup:
    """Cached Weyl group of ``rs`` (size bound from ``SMT_MAX_GROUP_SIZE``)."""
    group = _cached_group(rs)
    bound = max_group_size()
    if len(group) > bound:
        raise BoundExceeded(f"Weyl group of {rs.name} exceeds the bound {bound}")
    return group


def enumerate_weyl(rs: RootSystem, bound: int | None = None) -> list[WeylElement]:
    """All elements of the Weyl group, identity first, in nondecreasing length."""
    if bound is None:
        return list(weyl_group(rs).elements)
    return list(WeylGroup(rs, bound).elements)


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    if u.group is not v.group:
        raise ValueError("elements of different Weyl groups")
    return u.group.bruhat_leq(u, v)


def coset_of(w: WeylElement, parabolic: Iterable[int]) -> "Coset":
    return w.group.coset_of(w, parabolic)


def apply(w: WeylElement, mu: Sequence[int]) -> Weight:
    return w.apply(mu)


def pair(rs: RootSystem, mu: Sequence[int], beta: Root) -> int:
    return rs.pair(mu, beta)


# ---------------------------------------------------------------------------
# cosets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Coset:
    """``rep W_Q`` with ``rep`` the minimal-length representative."""

    parabolic: frozenset[int]
    rep: WeylElement

    @property
    def length(self) -> int:
        return self.rep.length

    @property
    def group(self) -> WeylGroup:
        return self.rep.group

    def __str__(self):
        return str(self.rep)

    def apply(self, mu: Sequence[int]) -> Weight:
        return self.rep.apply(mu)

    def __le__(self, other: "Coset") -> bool:
        return self.group.bruhat_leq(self.rep, other.rep)

    def __ge__(self, other: "Coset") -> bool:
        return other.__le__(self)

    def __lt__(self, other: "Coset") -> bool:
        return self != other and self.__le__(other)

    def __gt__(self, other: "Coset") -> bool:
        return other.__lt__(self)

    def order_key(self) -> tuple:
        """Key of the fixed total order refining Bruhat: length, then word."""
        return (self.rep.length, self.rep.canonical_word)


class CosetSpace:
    """``W/W_Q`` with cosets numbered in the fixed total order (ascending).

    Coset ids are integers; id comparison *is* the total order that refines
    the Bruhat order, so ``a > b`` as ids means ``a`` succeeds ``b``.
    """

    def __init__(self, group: WeylGroup, parabolic: frozenset[int]):
        rank = group.rank
        if not parabolic <= frozenset(range(1, rank + 1)):
            raise ValueError(f"parabolic {sorted(parabolic)} not within 1..{rank}")
        self.group = group
        self.parabolic = parabolic
        # weight whose stabiliser is exactly W_Q
        self.defining_weight: Weight = tuple(0 if i + 1 in parabolic else 1 for i in range(rank))
        reps = [
            w for w in group.elements if not (group.right_descents(w) & parabolic)
        ]
        reps.sort(key=lambda w: (w.length, w.canonical_word))
        self.reps = reps
        self.cosets = [Coset(parabolic, w) for w in reps]
        self._by_rep = {w.index: k for k, w in enumerate(reps)}
        self._by_weight = {w.apply(self.defining_weight): k for k, w in enumerate(reps)}
        self.lengths = [w.length for w in reps]
        n = len(reps)
        table = group.bruhat_table() if len(group) <= 5040 else None
        if table is not None:
            idx = np.array([w.index for w in reps])
            self.leq_table = table[np.ix_(idx, idx)]
        else:
            self.leq_table = np.array(
                [[group.bruhat_leq(a, b) for b in reps] for a in reps], dtype=bool
            )
        self._covers_down: list[list[tuple[int, Root]]] | None = None
        self.top = n - 1

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(range(len(self.reps)))

    def id_of(self, c: Coset | WeylElement) -> int:
        if isinstance(c, Coset):
            if c.parabolic != self.parabolic:
                c = c.rep
            else:
                return self._by_rep[c.rep.index]
        return self._by_weight[c.apply(self.defining_weight)]

    def id_of_weight_image(self, mu: Sequence[int]) -> int:
        """Coset id ``c`` with ``c(defining_weight) == mu``."""
        return self._by_weight[tuple(mu)]

    def coset(self, k: int) -> Coset:
        return self.cosets[k]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.leq_table[a, b])

    def weight(self, k: int, mu: Sequence[int]) -> Weight:
        return self.reps[k].apply(mu)

    def covers_down(self, k: int) -> list[tuple[int, Root]]:
        """Cosets covered by ``k`` with the positive root of the joining reflection."""
        if self._covers_down is None:
            rs = self.group.root_system
            lam = self.defining_weight
            out = []
            for a in range(len(self.reps)):
                mu = self.weight(a, lam)
                row = []
                for beta in rs.positive_roots:
                    if rs.pair(mu, beta) == 0:
                        continue
                    b = self._by_weight[rs.reflect(mu, beta)]
                    if self.lengths[b] == self.lengths[a] - 1:
                        row.append((b, beta))
                out.append(row)
            self._covers_down = out
        return self._covers_down[k]

    def covers_up(self, k: int) -> list[int]:
        return [a for a in range(len(self.reps)) if any(b == k for b, _ in self.covers_down(a))]

    def interval(self, low: int, high: int) -> list[int]:
        return [x for x in range(len(self.reps)) if self.leq(low, x) and self.leq(x, high)]

    def project(self, k: int, coarse: "CosetSpace") -> int:
        """Image of coset ``k`` under ``W/W_Q -> W/W_P`` for ``W_Q <= W_P``."""
        return coarse.id_of(self.reps[k])

    def lifts(self, c: int, coarse: "CosetSpace") -> list[int]:
        """Cosets of this space lying over coset ``c`` of a coarser space."""
        return [k for k in range(len(self.reps)) if self.project(k, coarse) == c]

    def maximal_elements(self, ids: Iterable[int]) -> list[int]:
        ids = sorted(set(ids))
        return [a for a in ids if not any(a != b and self.leq(a, b) for b in ids)]

    def minimal_elements(self, ids: Iterable[int]) -> list[int]:
        ids = sorted(set(ids))
        return [a for a in ids if not any(a != b and self.leq(b, a) for b in ids)]

    def word(self, k: int) -> str:
        return str(self.reps[k])

    def parse(self, text: str) -> int:
        """Coset id of the coset containing the element named by ``text``."""
        return self.id_of(self.group.element(text))


@lru_cache(maxsize=None)
def coset_space(group: WeylGroup, parabolic: frozenset[int]) -> CosetSpace:
    return CosetSpace(group, parabolic)
