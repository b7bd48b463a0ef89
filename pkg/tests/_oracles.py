"""Small brute-force oracles used by the tests.

None of these share code paths with the package: Weyl groups are closed
under matrix multiplication, Bruhat order is tested by subwords, and type-A
characters come from Gelfand-Tsetlin patterns.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations, product

import numpy as np


def simple_reflection_matrices(cartan):
    """``s_i`` acting on fundamental coordinates: ``mu -> mu - mu_i alpha_i``."""
    r = len(cartan)
    mats = []
    for i in range(r):
        m = np.eye(r, dtype=np.int64)
        # alpha_i in fundamental coordinates is column i of the Cartan matrix
        # (entry j = <alpha_i, alpha_j^vee> = cartan[j][i])
        for j in range(r):
            m[j, i] -= cartan[j][i]
        mats.append(m)
    return mats


def closure_size(cartan) -> int:
    gens = simple_reflection_matrices(cartan)
    r = len(cartan)
    seen = {np.eye(r, dtype=np.int64).tobytes()}
    frontier = [np.eye(r, dtype=np.int64)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = m @ g
                key = p.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(p)
        frontier = nxt
    return len(seen)


def word_matrix(cartan, word):
    gens = simple_reflection_matrices(cartan)
    m = np.eye(len(cartan), dtype=np.int64)
    for i in word:
        m = m @ gens[i - 1]
    return m


def subword_leq(cartan, u_word, v_word) -> bool:
    """``u <= v`` iff a subword of a reduced word of ``v`` multiplies to ``u``."""
    target = word_matrix(cartan, u_word)
    n = len(v_word)
    for k in range(len(u_word), n + 1):
        for idx in combinations(range(n), k):
            if np.array_equal(word_matrix(cartan, [v_word[i] for i in idx]), target):
                return True
    return False


def _gt_patterns(top):
    """All Gelfand-Tsetlin patterns with the given top row."""
    if len(top) == 1:
        yield (tuple(top),)
        return
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]
    for row in product(*ranges):
        for rest in _gt_patterns(row):
            yield (tuple(top),) + rest


def type_a_character(lam) -> Counter:
    """Weight multiplicities of ``V(lam)`` for ``SL_{n+1}`` via GT patterns,
    returned in fundamental coordinates."""
    n = len(lam)
    part = [sum(lam[j:]) for j in range(n)] + [0]
    out: Counter = Counter()
    for pat in _gt_patterns(part):
        rows = list(reversed(pat))  # rows[k] has length k+1
        sums = [0] + [sum(r) for r in rows]
        eps = [sums[k + 1] - sums[k] for k in range(n + 1)]
        out[tuple(eps[i] - eps[i + 1] for i in range(n))] += 1
    return out


def type_a_dimension(lam) -> int:
    return sum(type_a_character(lam).values())


# -- L-S paths straight from the definition, on the W-orbit of lambda ------

def _orbit(rs, lam):
    seen = {tuple(lam)}
    todo = [tuple(lam)]
    simple = [tuple(int(j == i) for j in range(rs.rank)) for i in range(rs.rank)]
    while todo:
        mu = todo.pop()
        for a in simple:
            nu = tuple(rs.reflect(mu, a))
            if nu not in seen:
                seen.add(nu)
                todo.append(nu)
    return seen


def _orbit_length(rs, mu):
    return sum(1 for b in rs.positive_roots if rs.pair(mu, b) < 0)


def _down_covers(rs, mu):
    """``(nu, |<mu, beta^vee>|)`` with ``nu = s_beta mu`` one step lower."""
    n = _orbit_length(rs, mu)
    out = []
    for b in rs.positive_roots:
        p = rs.pair(mu, b)
        if p < 0:
            nu = tuple(rs.reflect(mu, b))
            if _orbit_length(rs, nu) == n - 1:
                out.append((nu, -p))
    return out


def _a_chain(rs, top, bottom, a):
    if top == bottom:
        return True
    for nu, lab in _down_covers(rs, top):
        if (a * lab).denominator == 1 and _a_chain(rs, nu, bottom, a):
            return True
    return False


def brute_force_paths(rs, lam):
    """Set of ``(weights tau_i(lam), cuts)`` for all L-S paths of shape ``lam``."""
    from fractions import Fraction

    orbit = sorted(_orbit(rs, lam))
    top = max([abs(rs.pair(lam, b)) for b in rs.positive_roots] + [1])
    fracs = sorted({Fraction(p, q) for q in range(2, top + 1) for p in range(1, q)})
    out = set()

    def extend(mus, cuts):
        out.add((tuple(mus), tuple(cuts)))
        for f in fracs:
            if cuts and f <= cuts[-1]:
                continue
            for nu in orbit:
                if nu != mus[-1] and _a_chain(rs, mus[-1], nu, f):
                    extend(mus + [nu], cuts + [f])

    for mu in orbit:
        extend([mu], [])
    return out
