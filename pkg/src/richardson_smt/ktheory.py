"""Pieri-Chevalley coefficients in equivariant K-theory and the degeneration
identities, all read off from L-S paths.

For a regular dominant ``lam`` and ``tau`` in ``W/W_lam``:

    a_{tau,kappa} = #{pi in B(lam) : i(pi) <= tau, e(pi) = kappa}
    C_{tau,kappa} = sum of e^{pi(1)} over the same paths
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .characters import (
    FormalCharacter,
    _sum_characters,
    demazure_character,
    sequence_character_table,
)
from .lspath import path_model
from .richardson import (
    RichardsonSpec,
    boundary_minus,
    count_standard_monomials,
    sequence_counts,
    standard_paths_on,
)
from .weyl import Coset, Weight


@dataclass(frozen=True)
class PieriChevalleyTable:
    tau: Coset
    lam: Weight
    rows: dict
    counts: dict

    def row_sum(self) -> FormalCharacter:
        return _sum_characters(self.rows.values())

    def is_effective(self) -> bool:
        return all(ch.is_effective() for ch in self.rows.values())


def pieri_chevalley(tau: Coset, lam: Sequence[int]) -> PieriChevalleyTable:
    lam = tuple(lam)
    rs = tau.group.root_system
    model = path_model(rs, lam)
    sp = model.space
    t = sp.id_of(tau.rep)
    weights: dict[int, list] = {}
    for p in model.paths:
        if sp.leq(p.ids[0], t):
            weights.setdefault(p.ids[-1], []).append(p.weight)
    order = sorted(weights, reverse=True)
    rows = {sp.cosets[k]: FormalCharacter.from_weights(weights[k]) for k in order}
    counts = {sp.cosets[k]: len(weights[k]) for k in order}
    return PieriChevalleyTable(sp.cosets[t], lam, rows, counts)


def pittie_ram_sum_check(tau: Coset, lam: Sequence[int]) -> bool:
    """Row sum of the table against the Demazure-operator character."""
    table = pieri_chevalley(tau, lam)
    return table.row_sum() == demazure_character(table.tau, lam)


def kernel_count(spec: RichardsonSpec, lam: Sequence[int]) -> int:
    """Sections on ``X_tau^kappa`` vanishing on the opposite boundary, counted
    as ``count(X, 1) - count(boundary_minus(X), 1)``."""
    lam = tuple(lam)
    return count_standard_monomials(spec, lam, 1) - count_standard_monomials(boundary_minus(spec), lam, 1)


def kernel_character(spec: RichardsonSpec, lam: Sequence[int]) -> FormalCharacter:
    lam = tuple(lam)
    on_x = FormalCharacter.from_weights(p.weight for p in standard_paths_on(spec, lam))
    bd = boundary_minus(spec)
    sp = spec.space
    on_bd = FormalCharacter.from_weights(
        p.weight
        for p in standard_paths_on(spec, lam)
        if any(sp.leq(p.ids[0], c.tau_id) and sp.leq(c.kappa_id, p.ids[-1]) for c in bd)
    )
    return on_x - on_bd


def degeneration_report(spec: RichardsonSpec, lam: Sequence[int], n: int) -> dict:
    """Both sides of the degeneration identities at degree ``n``, as counts
    and as characters."""
    lam = tuple(lam)
    if spec.is_empty:
        raise ValueError("empty Richardson variety")
    if n < 1:
        raise ValueError("degree must be positive")
    rs = spec.root_system
    sp = spec.space
    t, k = spec.tau_id, spec.kappa_id
    size = len(sp)

    def on(i, e, top, bottom):
        return sp.leq(i, top) and sp.leq(bottom, e)

    counts = sequence_counts(rs, lam, n)
    chars = sequence_character_table(lam, rs, n)
    chars2 = sequence_character_table(lam, rs, 2 * n)
    ends = [(i, e) for i in range(size) for e in range(size) if counts[i][e] and on(i, e, t, k)]

    pair_count = 0
    pair_chars = []
    for i1, e1 in ends:
        for i2, e2 in ends:
            if sp.leq(i2, e1):
                pair_count += counts[i1][e1] * counts[i2][e2]
                pair_chars.append(chars[(i1, e1)] * chars[(i2, e2)])
    pair_char = _sum_characters(pair_chars)

    count_2n = count_standard_monomials(spec, lam, 2 * n)
    char_2n = _sum_characters(ch for (i, e), ch in chars2.items() if on(i, e, t, k))

    split_terms = []
    split_chars = []
    for s in range(size):
        if not (sp.leq(k, s) and sp.leq(s, t)):
            continue
        a = sum(counts[s][e] for e in range(size) if sp.leq(k, e))
        b = sum(counts[i][e] for i in range(size) for e in range(size) if on(i, e, t, s))
        a_char = _sum_characters(ch for (i, e), ch in chars.items() if i == s and sp.leq(k, e))
        b_char = _sum_characters(ch for (i, e), ch in chars.items() if on(i, e, t, s))
        split_terms.append((sp.word(s), a, b))
        split_chars.append(a_char * b_char)
    split_char = _sum_characters(split_chars)
    split_total = sum(a * b for _, a, b in split_terms)
    return {
        "pairs": pair_count,
        "count_2n": count_2n,
        "split_total": split_total,
        "split_terms": split_terms,
        "characters_equal": pair_char == char_2n == split_char,
    }


def degeneration_check(spec: RichardsonSpec, lam: Sequence[int], n: int) -> bool:
    rep = degeneration_report(spec, lam, n)
    return rep["pairs"] == rep["count_2n"] == rep["split_total"] and rep["characters_equal"]
