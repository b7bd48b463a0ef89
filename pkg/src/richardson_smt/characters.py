"""Formal characters in the group ring of the weight lattice.

Three independent ways to produce characters of (Demazure) modules:

* the path model (sums of ``e^{pi(1)}`` over L-S paths),
* the Weyl character formula, with exact division by the Weyl denominator,
* Demazure's divided-difference operators applied along a reduced word.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .lspath import path_model
from .weyl import Coset, RootSystem, WeylElement, weyl_group


class FormalCharacter:
    """A finitely supported map weight -> integer with no stored zeros."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable = ()):
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mu, c in items:
            acc[tuple(int(x) for x in mu)] += int(c)
        self._terms = {mu: c for mu, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, mu: Sequence[int], coeff: int = 1) -> "FormalCharacter":
        return cls({tuple(mu): coeff})

    @classmethod
    def from_weights(cls, weights: Iterable[Sequence[int]]) -> "FormalCharacter":
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for mu in weights:
            acc[tuple(mu)] += 1
        return cls(acc)

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items())

    def __getitem__(self, mu) -> int:
        return self._terms.get(tuple(mu), 0)

    def __iter__(self):
        return iter(sorted(self._terms))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, FormalCharacter):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*e^{list(mu)}" for mu, c in self.sorted_terms())

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        acc = defaultdict(int, self._terms)
        for mu, c in other._terms.items():
            acc[mu] += c
        return FormalCharacter(acc)

    def __neg__(self):
        return FormalCharacter({mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalCharacter({mu: c * other for mu, c in self._terms.items()})
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for mu, c in self._terms.items():
            for nu, d in other._terms.items():
                acc[tuple(x + y for x, y in zip(mu, nu))] += c * d
        return FormalCharacter(acc)

    __rmul__ = __mul__

    def dimension(self) -> int:
        """Specialisation ``e^mu -> 1``."""
        return sum(self._terms.values())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def act(self, w: WeylElement) -> "FormalCharacter":
        return FormalCharacter({w.apply(mu): c for mu, c in self._terms.items()})


ZERO_CHARACTER = FormalCharacter()


def _sum_characters(chars: Iterable[FormalCharacter]) -> FormalCharacter:
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for ch in chars:
        for mu, c in ch._terms.items():
            acc[mu] += c
    return FormalCharacter(acc)


def is_w_invariant(ch: FormalCharacter, rs: RootSystem) -> bool:
    group = weyl_group(rs)
    return all(ch.act(group.element((i,))) == ch for i in range(1, rs.rank + 1))


# ---------------------------------------------------------------------------
# path model
# ---------------------------------------------------------------------------

def char_from_paths(lam: Sequence[int], rs: RootSystem) -> FormalCharacter:
    """``sum_{pi in B(lam)} e^{pi(1)}``."""
    return FormalCharacter.from_weights(p.weight for p in path_model(rs, tuple(lam)).paths)


def path_character_table(lam: Sequence[int], rs: RootSystem) -> dict[tuple[int, int], FormalCharacter]:
    """``(i, e) -> sum of e^{pi(1)}`` over paths with those coset ids."""
    acc: dict[tuple[int, int], list] = defaultdict(list)
    for p in path_model(rs, tuple(lam)).paths:
        acc[(p.ids[0], p.ids[-1])].append(p.weight)
    return {k: FormalCharacter.from_weights(v) for k, v in acc.items()}


def sequence_character_table(lam: Sequence[int], rs: RootSystem, m: int) -> dict[tuple[int, int], FormalCharacter]:
    """``(i, e) -> sum of e^{weight}`` over standard sequences of length ``m``."""
    if m < 1:
        raise ValueError("sequence length must be positive")
    model = path_model(rs, tuple(lam))
    sp = model.space
    base = path_character_table(lam, rs)
    # step[e'][e] = paths with i(pi) <= e' and e(pi) = e
    step: dict[int, dict[int, FormalCharacter]] = {}
    for e_prev in range(len(sp)):
        row: dict[int, list] = defaultdict(list)
        for (i, e), ch in base.items():
            if sp.leq(i, e_prev):
                row[e].append(ch)
        step[e_prev] = {e: _sum_characters(v) for e, v in row.items()}
    table = dict(base)
    for _ in range(m - 1):
        new: dict[tuple[int, int], list] = defaultdict(list)
        for (i, e_prev), ch in table.items():
            for e, ch2 in step[e_prev].items():
                new[(i, e)].append(ch * ch2)
        table = {k: s for k, v in new.items() if (s := _sum_characters(v))}
    return table


def char_standard_sequences(lam: Sequence[int], m: int, rs: RootSystem) -> FormalCharacter:
    """Sum of ``e^{weight}`` over all standard sequences of length ``m``."""
    return _sum_characters(sequence_character_table(lam, rs, m).values())


# ---------------------------------------------------------------------------
# Weyl character formula
# ---------------------------------------------------------------------------

def _divide_by_one_minus(f: FormalCharacter, rs: RootSystem, beta) -> FormalCharacter:
    """Exact quotient ``f / (1 - e^{-beta})``; raises if not divisible."""
    bw = rs.root_weight(beta)
    strings: dict[tuple, dict[Fraction, int]] = defaultdict(dict)
    for mu, c in f._terms.items():
        t = Fraction(rs.pair(mu, beta), 2)
        key = tuple(x - t * b for x, b in zip(mu, bw))
        strings[key][t] = c
    out: dict[tuple[int, ...], int] = {}
    for key, coeffs in strings.items():
        top, bottom = max(coeffs), min(coeffs)
        running = 0
        t = top
        # g(nu) = sum_{k >= 0} f(nu + k beta)
        while t >= bottom:
            running += coeffs.get(t, 0)
            if running:
                mu = tuple(x + t * b for x, b in zip(key, bw))
                out[tuple(int(x) for x in mu)] = running
            t -= 1
        if running != 0:
            raise ArithmeticError("not divisible by the Weyl denominator factor")
    return FormalCharacter(out)


def weyl_character(lam: Sequence[int], rs: RootSystem) -> FormalCharacter:
    """Character of ``V(lam)`` by the Weyl character formula."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {list(lam)} is not dominant")
    group = weyl_group(rs)
    shifted = tuple(x + 1 for x in lam)
    rho = rs.rho
    num: dict[tuple[int, ...], int] = {}
    for w in group:
        mu = w.apply(shifted)
        num[tuple(a - b for a, b in zip(mu, rho))] = -1 if w.length % 2 else 1
    f = FormalCharacter(num)
    for beta in rs.positive_roots:
        f = _divide_by_one_minus(f, rs, beta)
    return f


def weyl_dimension(lam: Sequence[int], rs: RootSystem) -> int:
    num = den = 1
    shifted = tuple(x + 1 for x in lam)
    for beta in rs.positive_roots:
        num *= rs.pair(shifted, beta)
        den *= rs.pair(rs.rho, beta)
    q = Fraction(num, den)
    assert q.denominator == 1
    return int(q)


# ---------------------------------------------------------------------------
# Demazure operators
# ---------------------------------------------------------------------------

def demazure_operator(i: int, f: FormalCharacter, rs: RootSystem) -> FormalCharacter:
    """``(f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i})`` monomial by monomial."""
    alpha = rs.simple_root_weight(i)
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for mu, c in f._terms.items():
        n = mu[i - 1]
        if n >= 0:
            for k in range(n + 1):
                acc[tuple(x - k * a for x, a in zip(mu, alpha))] += c
        elif n <= -2:
            for k in range(1, -n):
                acc[tuple(x + k * a for x, a in zip(mu, alpha))] -= c
    return FormalCharacter(acc)


def demazure_word(word: Sequence[int], lam: Sequence[int], rs: RootSystem) -> FormalCharacter:
    """Apply the operators of ``word`` to ``e^lam``, rightmost letter first."""
    f = FormalCharacter.monomial(lam)
    for i in reversed(word):
        f = demazure_operator(i, f, rs)
    return f


def demazure_character(tau: Coset | WeylElement, lam: Sequence[int]) -> FormalCharacter:
    """Character of the Demazure module ``V_tau(lam)``."""
    rep = tau.rep if isinstance(tau, Coset) else tau
    rs = rep.group.root_system
    return demazure_word(rep.canonical_word, lam, rs)


def demazure_from_paths(tau: Coset, lam: Sequence[int]) -> FormalCharacter:
    """``sum e^{pi(1)}`` over paths of shape ``lam`` with ``i(pi) <= tau``."""
    rs = tau.group.root_system
    model = path_model(rs, tuple(lam))
    sp = model.space
    t = sp.id_of(tau.rep)
    return FormalCharacter.from_weights(p.weight for p in model.paths if sp.leq(p.ids[0], t))
