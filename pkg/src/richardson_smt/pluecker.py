"""Exterior-power model of the Grassmannian: an oracle that never looks at paths.

``V(omega_d)`` for ``SL_n`` is realised on ``d``-subsets of ``{1..n}``
(basis vectors ``e_I``). Demazure modules are span closures under the
raising operators, spaces of sections are ranks of evaluation matrices of
Plücker monomials at exact points, and straightening relations are solved
exactly from evaluations at random integer points.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import prod
from typing import Sequence

import flint

from .lspath import LSPath, cmp_lex, cmp_revlex, wedge
from .weyl import Coset, CosetSpace, build_root_system, coset_space, weyl_group

Subset = tuple[int, ...]


def subset_leq(a: Subset, b: Subset) -> bool:
    """Componentwise order on increasing index tuples."""
    return all(x <= y for x, y in zip(a, b))


def parse_subset(text: str) -> Subset:
    """``"14"`` or ``"1-4"`` -> ``(1, 4)``."""
    text = text.strip()
    parts = text.split("-") if "-" in text else list(text)
    return tuple(sorted(int(p) for p in parts))


def format_subset(s: Subset) -> str:
    if all(x < 10 for x in s):
        return "".join(str(x) for x in s)
    return "-".join(str(x) for x in s)


@dataclass(frozen=True)
class WedgeModel:
    n: int
    d: int
    basis: tuple[Subset, ...]
    raising: tuple[tuple[int, ...], ...] = field(repr=False)
    lowering: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def index(self) -> dict[Subset, int]:
        return _index(self.basis)

    def weight(self, s: Subset) -> tuple[int, ...]:
        """T-weight in fundamental coordinates of ``SL_n``."""
        return tuple(int(j in s) - int(j + 1 in s) for j in range(1, self.n))

    @property
    def root_system(self):
        return build_root_system("A", self.n - 1)

    @property
    def space(self) -> CosetSpace:
        parab = frozenset(range(1, self.n)) - {self.d}
        return coset_space(weyl_group(self.root_system), parab)

    def subset_of(self, c: Coset | int) -> Subset:
        sp = self.space
        k = c if isinstance(c, int) else sp.id_of(c.rep)
        omega = self.root_system.fundamental_weight(self.d)
        return _weight_to_subset(self)[sp.weight(k, omega)]

    def coset_of(self, s: Subset) -> Coset:
        sp = self.space
        return sp.cosets[self.coset_id(s)]

    def coset_id(self, s: Subset) -> int:
        # the defining weight of this coset space is omega_d itself
        return self.space.id_of_weight_image(self.weight(s))

    def apply(self, op: str, j: int, vec: Sequence[int]) -> list[int]:
        """Apply ``E_j`` (``op='e'``) or ``F_j`` (``op='f'``) to a coordinate vector."""
        table = (self.raising if op == "e" else self.lowering)[j - 1]
        out = [0] * len(self.basis)
        for a, x in enumerate(vec):
            b = table[a]
            if x and b >= 0:
                out[b] += x
        return out


@lru_cache(maxsize=None)
def _index(basis: tuple[Subset, ...]) -> dict[Subset, int]:
    return {s: k for k, s in enumerate(basis)}


@lru_cache(maxsize=None)
def _weight_to_subset(model: WedgeModel) -> dict[tuple[int, ...], Subset]:
    return {model.weight(s): s for s in model.basis}


def build_model(n: int, d: int) -> WedgeModel:
    if not (1 <= d < n <= 8):
        raise ValueError("need 1 <= d < n <= 8")
    return _build_model(n, d)


@lru_cache(maxsize=None)
def _build_model(n: int, d: int) -> WedgeModel:
    basis = tuple(combinations(range(1, n + 1), d))
    idx = {s: k for k, s in enumerate(basis)}
    raising, lowering = [], []
    for j in range(1, n):
        up, down = [], []
        for s in basis:
            # E_j: e_{j+1} -> e_j ; F_j: e_j -> e_{j+1}; order is preserved, no sign
            if j + 1 in s and j not in s:
                up.append(idx[tuple(sorted((set(s) - {j + 1}) | {j}))])
            else:
                up.append(-1)
            if j in s and j + 1 not in s:
                down.append(idx[tuple(sorted((set(s) - {j}) | {j + 1}))])
            else:
                down.append(-1)
        raising.append(tuple(up))
        lowering.append(tuple(down))
    model = WedgeModel(n, d, basis, tuple(raising), tuple(lowering))
    # [E_j, F_j] acts on e_I by the j-th weight coordinate
    for j in range(1, n):
        for k, s in enumerate(basis):
            v = [0] * len(basis)
            v[k] = 1
            ef = model.apply("e", j, model.apply("f", j, v))
            fe = model.apply("f", j, model.apply("e", j, v))
            comm = [a - b for a, b in zip(ef, fe)]
            expect = [0] * len(basis)
            expect[k] = model.weight(s)[j - 1]
            if comm != expect:
                raise AssertionError(f"commutator check failed for E_{j}, F_{j}")
    return model


def _as_subset(model: WedgeModel, x: Coset | Subset | str | int) -> Subset:
    if isinstance(x, (Coset, int)):
        return model.subset_of(x)
    if isinstance(x, str):
        return parse_subset(x)
    return tuple(x)


# ---------------------------------------------------------------------------
# Demazure modules by span closure
# ---------------------------------------------------------------------------

def _rank(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    return flint.fmpz_mat(rows).rank()


def span_closure(model: WedgeModel, start: Subset, op: str) -> list[list[int]]:
    """Basis of the smallest subspace containing ``e_start`` stable under all
    ``E_j`` (``op='e'``) or all ``F_j`` (``op='f'``)."""
    v = [0] * len(model.basis)
    v[model.index[start]] = 1
    basis = [v]
    queue = [v]
    while queue:
        w = queue.pop()
        for j in range(1, model.n):
            img = model.apply(op, j, w)
            if any(img) and _rank(basis + [img]) > len(basis):
                basis.append(img)
                queue.append(img)
    return basis


def demazure_dim(model: WedgeModel, tau) -> int:
    return len(span_closure(model, _as_subset(model, tau), "e"))


def opposite_demazure_dim(model: WedgeModel, sigma) -> int:
    return len(span_closure(model, _as_subset(model, sigma), "f"))


def intersection_dim(model: WedgeModel, tau, sigma) -> int:
    """``dim (V_tau cap V^sigma)`` by ``dim U + dim V - dim (U + V)``."""
    u = span_closure(model, _as_subset(model, tau), "e")
    v = span_closure(model, _as_subset(model, sigma), "f")
    return len(u) + len(v) - _rank(u + v)


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

def _det(rows: list[list[int]]) -> int:
    return int(flint.fmpz_mat(rows).det())


def pluecker_vector(model: WedgeModel, mat: list[list[int]]) -> list[int]:
    """Maximal minors of an ``n x d`` matrix, in basis order."""
    return [_det([mat[i - 1] for i in s]) for s in model.basis]


def generic_points(model: WedgeModel, count: int, rng: random.Random, spread: int = 40) -> list[list[int]]:
    """Plücker vectors of random integer ``n x d`` matrices."""
    out = []
    for _ in range(count):
        mat = [[rng.randint(-spread, spread) for _ in range(model.d)] for _ in range(model.n)]
        out.append(pluecker_vector(model, mat))
    return out


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def richardson_points(model: WedgeModel, tau, sigma, count: int, rng: random.Random, spread: int = 30) -> list[list[int]]:
    """Points of the cone over ``X_tau^sigma`` from the standard
    parametrisation ``g = g_1 ... g_k`` of the open Richardson cell.

    With ``w = s_{i_1} ... s_{i_k}`` the minimal representative of ``tau`` and
    the rightmost reduced subexpression for the minimal representative of
    ``sigma``, factor ``g_j`` is a signed permutation matrix at used
    positions and ``I + t E_{i+1,i}`` elsewhere.
    """
    sp = model.space
    tau_c = model.coset_of(_as_subset(model, tau))
    sigma_c = model.coset_of(_as_subset(model, sigma))
    if not sp.leq(sp.id_of(sigma_c), sp.id_of(tau_c)):
        raise ValueError("empty Richardson variety")
    group = sp.group
    word = tau_c.rep.canonical_word
    cur = sigma_c.rep
    used = [False] * len(word)
    for pos in range(len(word) - 1, -1, -1):
        nxt = group.right_mult(cur, word[pos])
        if nxt.length < cur.length:
            used[pos] = True
            cur = nxt
    if cur != group.identity:
        raise AssertionError("no subexpression for sigma inside tau")
    n = model.n
    # sanity: the permutation of w sends {1..d} to the subset of tau
    perm = list(range(1, n + 1))
    for i in reversed(word):
        perm = [i + 1 if x == i else i if x == i + 1 else x for x in perm]
    if tuple(sorted(perm[: model.d])) != model.subset_of(tau_c):
        raise AssertionError("coset/subset conventions disagree")
    out = []
    for _ in range(count):
        g = [[int(i == j) for j in range(n)] for i in range(n)]
        for pos, i in enumerate(word):
            h = [[int(a == b) for b in range(n)] for a in range(n)]
            if used[pos]:
                h[i - 1][i - 1] = h[i][i] = 0
                h[i][i - 1] = 1
                h[i - 1][i] = -1
            else:
                t = rng.randint(1, spread) * rng.choice((1, -1))
                h[i][i - 1] = t
            g = _matmul(g, h)
        cols = [row[: model.d] for row in g]
        out.append(pluecker_vector(model, cols))
    return out


# ---------------------------------------------------------------------------
# sections on Richardson varieties
# ---------------------------------------------------------------------------

def h0_dim(model: WedgeModel, tau, sigma, m: int, seed: int = 0) -> int:
    """Rank of all degree-``m`` Plücker monomials evaluated on ``X_tau^sigma``."""
    tau, sigma = _as_subset(model, tau), _as_subset(model, sigma)
    if not subset_leq(sigma, tau):
        return 0
    monos = list(combinations_with_replacement(range(len(model.basis)), m))
    rng = random.Random(f"h0:{model.n}:{model.d}:{tau}:{sigma}:{m}:{seed}")
    pts = richardson_points(model, tau, sigma, len(monos) + 8, rng)
    rows = [[prod(p[k] for k in mono) for mono in monos] for p in pts]
    return _rank(rows)


# ---------------------------------------------------------------------------
# straightening
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StraighteningRelation:
    """``p_I p_I' = sum coeff * p_J p_K`` with every ``J >= K``."""

    lhs: tuple[Subset, Subset]
    rhs: tuple[tuple[Fraction, tuple[Subset, Subset]], ...]

    def support(self) -> set[tuple[Subset, Subset]]:
        return {pair for c, pair in self.rhs if c}

    def evaluate(self, model: WedgeModel, point: Sequence[int]) -> Fraction:
        idx = model.index
        a, b = self.lhs
        val = Fraction(point[idx[a]] * point[idx[b]])
        for c, (j, k) in self.rhs:
            val -= c * point[idx[j]] * point[idx[k]]
        return val


def standard_pairs(model: WedgeModel) -> list[tuple[Subset, Subset]]:
    return [(j, k) for j in model.basis for k in model.basis if subset_leq(k, j)]


def incomparable_pairs(model: WedgeModel) -> list[tuple[Subset, Subset]]:
    b = model.basis
    return [
        (b[x], b[y])
        for x in range(len(b))
        for y in range(x + 1, len(b))
        if not subset_leq(b[x], b[y]) and not subset_leq(b[y], b[x])
    ]


@lru_cache(maxsize=None)
def straighten_all(model: WedgeModel, seed: int = 0) -> dict[tuple[Subset, Subset], StraighteningRelation]:
    """Every straightening relation of the model, solved in one exact system."""
    pairs = incomparable_pairs(model)
    if not pairs:
        return {}
    std = standard_pairs(model)
    idx = model.index
    rng = random.Random(f"straighten:{model.n}:{model.d}:{seed}")
    pts = generic_points(model, len(std) + 10, rng)
    a_rows = [[p[idx[j]] * p[idx[k]] for j, k in std] for p in pts]
    b_rows = [[p[idx[x]] * p[idx[y]] for x, y in pairs] for p in pts]
    a = flint.fmpz_mat(a_rows)
    if a.rank() != len(std):
        raise ArithmeticError("standard quadratic monomials are not independent at the sample points")
    at = a.transpose()
    normal = flint.fmpq_mat(at * a)
    sol = normal.solve(flint.fmpq_mat(at * flint.fmpz_mat(b_rows)))
    out = {}
    for col, pair in enumerate(pairs):
        coeffs = []
        for row, std_pair in enumerate(std):
            q = sol[row, col]
            c = Fraction(int(q.p), int(q.q))
            if c:
                coeffs.append((c, std_pair))
        rel = StraighteningRelation(pair, tuple(coeffs))
        for p in pts:
            if rel.evaluate(model, p) != 0:
                raise ArithmeticError(f"relation for {pair} is inconsistent")
        out[pair] = rel
    return out


def straighten(model: WedgeModel, i1, i2, seed: int = 0) -> StraighteningRelation:
    a, b = _as_subset(model, i1), _as_subset(model, i2)
    if subset_leq(a, b) or subset_leq(b, a):
        raise ValueError(f"{format_subset(a)} and {format_subset(b)} are comparable")
    key = (a, b) if model.index[a] < model.index[b] else (b, a)
    rel = straighten_all(model, seed)[key]
    return StraighteningRelation((a, b), rel.rhs)


def held_out_points(model: WedgeModel, count: int = 20, seed: int = 0) -> list[list[int]]:
    rng = random.Random(f"held-out:{model.n}:{model.d}:{seed}")
    return generic_points(model, count, rng)


def vanishes_on(model: WedgeModel, rel: StraighteningRelation, points) -> bool:
    return all(rel.evaluate(model, p) == 0 for p in points)


def satisfies_endpoint_constraints(model: WedgeModel, rel: StraighteningRelation) -> bool:
    """Every term ``p_J p_K`` has ``J > I, I'`` and ``I, I' > K`` strictly."""
    a, b = rel.lhs
    for j, k in rel.support():
        if not (j != a and j != b and subset_leq(a, j) and subset_leq(b, j)):
            return False
        if not (k != a and k != b and subset_leq(k, a) and subset_leq(k, b)):
            return False
    return True


def satisfies_wedge_constraints(model: WedgeModel, rel: StraighteningRelation) -> bool:
    """``(eta_1, eta_2) >= pi_1 ^ pi_2 >=^r (eta_1, eta_2)`` in the fixed total order."""
    omega = model.root_system.fundamental_weight(model.d)

    def path(s: Subset) -> LSPath:
        return LSPath(omega, (model.coset_of(s),), ())

    p1, p2 = (path(s) for s in rel.lhs)
    w = wedge(p1, p2)
    for j, k in rel.support():
        e1, e2 = path(j), path(k)
        v = wedge(e1, e2)
        c = cmp_lex(v, w, total=True)
        upper = c == 1 or (c == 0 and cmp_lex(e1, p1, total=True) >= 0)
        c = cmp_revlex(w, v, total=True)
        lower = c == 1 or (c == 0 and cmp_revlex(p2, e2, total=True) >= 0)
        if not (upper and lower):
            return False
    return True
