"""The acceptance suite: one exact check per criterion.

Each check returns a :class:`CriterionResult` whose detail line contains
only computed quantities, so the printed report is reproducible byte for
byte. Wall-clock limits are enforced by the test-suite, not here.
"""
from __future__ import annotations

import itertools
import os
import subprocess
import sys
from dataclasses import dataclass
from typing import Callable

from .characters import (
    char_from_paths,
    demazure_character,
    demazure_from_paths,
    weyl_character,
    weyl_dimension,
)
from .ktheory import degeneration_check, degeneration_report, pieri_chevalley
from .lspath import enumerate_standard_sequences, is_ls_path, path_model, unwedge, wedge
from .pluecker import (
    build_model,
    h0_dim,
    held_out_points,
    incomparable_pairs,
    intersection_dim,
    parse_subset,
    satisfies_endpoint_constraints,
    satisfies_wedge_constraints,
    straighten,
    straighten_all,
    vanishes_on,
)
from .richardson import (
    RichardsonSpec,
    brute_force_defining_chains,
    count_standard_monomials,
    degree_recursion_check_nonregular,
    filtration_recursion_check_nonregular,
    finite_difference_degree,
    hilbert_recursion_check,
    is_standard_nonregular,
    max_defining_chain,
    min_defining_chain,
    nonregular_context,
)
from .weyl import build_root_system, coset_space, weyl_group


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number:2d} {status}  {self.title}: {self.detail}"


def _rs(family: str, rank: int):
    return build_root_system(family, rank)


def _small_weights(rank: int, top: int = 2):
    return [w for w in itertools.product(range(top + 1), repeat=rank) if any(w)]


GRID = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("G", 2))


def _all_specs(rs, parabolic):
    sp = coset_space(weyl_group(rs), frozenset(parabolic))
    n = len(sp)
    return sp, [RichardsonSpec.from_ids(sp, t, k) for t in range(n) for k in range(n)]


# -- 1..3: characters --------------------------------------------------------

def criterion_1(seed: int = 0) -> CriterionResult:
    bad, total = [], 0
    for fam, rank in GRID:
        rs = _rs(fam, rank)
        for lam in _small_weights(rank):
            total += 1
            if len(path_model(rs, lam).paths) != weyl_dimension(lam, rs):
                bad.append(f"{fam}{rank}{list(lam)}")
    return CriterionResult(1, "path count = Weyl dimension", not bad,
                           f"{total} weights" + (f", failures {bad}" if bad else ""))


def criterion_2(seed: int = 0) -> CriterionResult:
    bad, total = [], 0
    for fam, rank in GRID:
        rs = _rs(fam, rank)
        for lam in _small_weights(rank):
            total += 1
            if char_from_paths(lam, rs) != weyl_character(lam, rs):
                bad.append(f"{fam}{rank}{list(lam)}")
    return CriterionResult(2, "path character = Weyl character", not bad,
                           f"{total} weights" + (f", failures {bad}" if bad else ""))


def criterion_3(seed: int = 0) -> CriterionResult:
    cases = [(_rs("A", 2), lam) for lam in ((1, 0), (0, 1), (1, 1))] + [(_rs("B", 2), (1, 1))]
    bad, total = [], 0
    for rs, lam in cases:
        group = weyl_group(rs)
        parab = rs.stabilizer(lam)
        for w in group:
            total += 1
            if demazure_character(w, lam) != demazure_from_paths(group.coset_of(w, parab), lam):
                bad.append(f"{rs.name}{list(lam)}:{w}")
    return CriterionResult(3, "Demazure operators = path sums", not bad,
                           f"{total} (tau, lambda) cases" + (f", failures {bad}" if bad else ""))


# -- 4: wedge ----------------------------------------------------------------

def criterion_4(seed: int = 0) -> CriterionResult:
    rs = _rs("A", 2)
    bad, counts = [], []
    for lam in ((1, 0), (1, 1)):
        for m in (1, 2, 3):
            seqs = enumerate_standard_sequences(lam, m, rs)
            big = tuple(m * x for x in lam)
            target = set(path_model(rs, big).paths)
            images = set()
            for s in seqs:
                w = wedge(*s.paths)
                if not is_ls_path(w) or unwedge(w, m) != s:
                    bad.append(f"{list(lam)} m={m}")
                    break
                images.add(w)
            counts.append(len(seqs))
            if len(seqs) != len(target) or images != target:
                bad.append(f"{list(lam)} m={m} count")
    return CriterionResult(4, "wedge bijection onto B(m lambda)", not bad,
                           f"sequence counts {counts}" + (f", failures {bad}" if bad else ""))


# -- 5, 6: regular Richardson counts -----------------------------------------

def criterion_5(seed: int = 0) -> CriterionResult:
    bad, total = [], 0
    for rs, parab, lam in ((_rs("A", 2), (), (1, 1)), (_rs("A", 3), (1, 3), (0, 1, 0))):
        _, specs = _all_specs(rs, parab)
        for spec in specs:
            if spec.is_empty:
                continue
            total += 1
            if not hilbert_recursion_check(spec, lam, 4):
                bad.append(str(spec))
    return CriterionResult(5, "Pieri-Chevalley recursion m <= 4", not bad,
                           f"{total} varieties" + (f", failures {bad}" if bad else ""))


def criterion_6(seed: int = 0) -> CriterionResult:
    bad, nonempty, empty = [], 0, 0
    for rs, parab, lam in ((_rs("A", 2), (), (1, 1)), (_rs("A", 3), (1, 3), (0, 1, 0))):
        sp, specs = _all_specs(rs, parab)
        for spec in specs:
            raw = len(enumerate_standard_sequences(lam, 1, rs, spec.tau, spec.kappa))
            leq = sp.leq(spec.kappa_id, spec.tau_id)
            if (raw > 0) != leq:
                bad.append(f"{spec} nonempty")
                continue
            if not leq:
                empty += 1
                continue
            nonempty += 1
            expect = spec.tau.length - spec.kappa.length
            values = [count_standard_monomials(spec, lam, m) for m in range(expect + 4)]
            if finite_difference_degree(values) != expect:
                bad.append(f"{spec} degree")
    return CriterionResult(6, "nonempty iff tau >= kappa, degree = l(tau) - l(kappa)", not bad,
                           f"{nonempty} nonempty, {empty} empty" + (f", failures {bad}" if bad else ""))


# -- 7, 8: Pluecker oracle ---------------------------------------------------

def criterion_7(seed: int = 0) -> CriterionResult:
    bad, counts = [], []
    for n, d in ((4, 2), (5, 2), (6, 3)):
        model = build_model(n, d)
        rels = straighten_all(model, seed)
        pts = held_out_points(model, 20, seed)
        counts.append(len(rels))
        for pair in incomparable_pairs(model):
            rel = rels[pair]
            if not (satisfies_endpoint_constraints(model, rel)
                    and satisfies_wedge_constraints(model, rel)
                    and vanishes_on(model, rel, pts)):
                bad.append(f"Gr({d},{n}) {pair}")
    model = build_model(4, 2)
    rel = straighten(model, "14", "23", seed)
    expect = {(parse_subset("24"), parse_subset("13")), (parse_subset("34"), parse_subset("12"))}
    if rel.support() != expect or any(abs(c) != 1 for c, _ in rel.rhs):
        bad.append("Gr(2,4) support")
    return CriterionResult(7, "straightening support and vanishing", not bad,
                           f"relations {counts}" + (f", failures {bad}" if bad else ""))


def criterion_8(seed: int = 0) -> CriterionResult:
    bad, h0_cases, dim_cases = [], 0, 0
    model = build_model(4, 2)
    rs = model.root_system
    lam = rs.fundamental_weight(2)
    sp, specs = _all_specs(rs, model.space.parabolic)
    for spec in specs:
        for m in (1, 2, 3):
            h0_cases += 1
            if count_standard_monomials(spec, lam, m) != h0_dim(model, spec.tau, spec.kappa, m, seed):
                bad.append(f"{spec} m={m}")
    for n, d in ((4, 2), (5, 2)):
        model = build_model(n, d)
        lam = model.root_system.fundamental_weight(d)
        _, specs = _all_specs(model.root_system, model.space.parabolic)
        for spec in specs:
            dim_cases += 1
            if intersection_dim(model, spec.tau, spec.kappa) != count_standard_monomials(spec, lam, 1):
                bad.append(f"Gr({d},{n}) {spec}")
    return CriterionResult(8, "H0 and intersection dimensions", not bad,
                           f"{h0_cases} h0 cases, {dim_cases} intersections" + (f", failures {bad}" if bad else ""))


# -- 9, 10: K-theory -------------------------------------------------------

def criterion_9(seed: int = 0) -> CriterionResult:
    bad = []
    rs = _rs("A", 1)
    group = weyl_group(rs)
    s = group.coset_of(group.element("s1"), frozenset())
    e = group.coset_of(group.element("e"), frozenset())
    hand = {
        (1,): {"s1": ({(-1,): 1}, 1), "e": ({(1,): 1}, 1)},
        (2,): {"s1": ({(-2,): 1}, 1), "e": ({(0,): 1, (2,): 1}, 2)},
    }
    for lam, rows in hand.items():
        table = pieri_chevalley(s, lam)
        got = {str(k): (ch.terms, table.counts[k]) for k, ch in table.rows.items()}
        if got != rows:
            bad.append(f"A1 tau=s1 lambda={list(lam)}")
        t0 = pieri_chevalley(e, lam)
        if {str(k): ch.terms for k, ch in t0.rows.items()} != {"e": {lam: 1}}:
            bad.append(f"A1 tau=e lambda={list(lam)}")
    tables = 0
    checks = [(_rs("A", 1), (1,)), (_rs("A", 1), (2,)), (_rs("A", 2), (1, 1))]
    for rs, lam in checks:
        group = weyl_group(rs)
        parab = rs.stabilizer(lam)
        for w in group:
            tau = group.coset_of(w, parab)
            table = pieri_chevalley(tau, lam)
            tables += 1
            if not table.is_effective():
                bad.append(f"{rs.name} {tau} effectivity")
            if any(ch.dimension() != table.counts[k] for k, ch in table.rows.items()):
                bad.append(f"{rs.name} {tau} specialisation")
            if rs.name == "A2" and table.row_sum() != demazure_character(w, lam):
                bad.append(f"A2 {tau} row sum")
    return CriterionResult(9, "Pieri-Chevalley tables", not bad,
                           f"{tables} tables" + (f", failures {bad}" if bad else ""))


def criterion_10(seed: int = 0) -> CriterionResult:
    bad, total = [], 0
    for rs, parab, lam in ((_rs("A", 2), (), (1, 1)), (_rs("A", 3), (1, 3), (0, 1, 0))):
        _, specs = _all_specs(rs, parab)
        for spec in specs:
            if spec.is_empty:
                continue
            for n in (1, 2):
                total += 1
                if not degeneration_check(spec, lam, n):
                    bad.append(f"{spec} n={n}")
    rs = _rs("A", 1)
    spec = RichardsonSpec.from_words(rs, (), "s1", "e")
    rep = degeneration_report(spec, (1,), 1)
    if not (rep["pairs"] == rep["count_2n"] == 3
            and rep["split_terms"] == [("e", 1, 2), ("s1", 1, 1)]):
        bad.append("A1 worked instance")
    return CriterionResult(10, "degeneration identities", not bad,
                           f"{total} cases, A1 instance 3 = 1x2 + 1x1" + (f", failures {bad}" if bad else ""))


# -- 11: non-regular -----------------------------------------------------------

def _chain_check(rs, parab, lam) -> tuple[int, list[str]]:
    sp, specs = _all_specs(rs, parab)
    ctx = nonregular_context(rs, frozenset(parab), lam)
    checked, bad = 0, []
    for spec in specs:
        if spec.is_empty:
            continue
        for p in ctx.model.paths:
            chains = brute_force_defining_chains(p, spec)
            ok, _ = is_standard_nonregular(p, spec)
            if ok != bool(chains):
                bad.append(f"{spec} {p} standardness")
                continue
            if not chains:
                continue
            checked += 1
            lo, hi = min_defining_chain(p, spec), max_defining_chain(p, spec)
            if lo not in chains or hi not in chains or not all(lo <= c <= hi for c in chains):
                bad.append(f"{spec} {p}")
    return checked, bad


def criterion_11(seed: int = 0) -> CriterionResult:
    bad, varieties = [], 0
    rs = _rs("A", 2)
    for lam in ((1, 0), (0, 1)):
        _, specs = _all_specs(rs, ())
        for spec in specs:
            if spec.is_empty:
                continue
            varieties += 1
            if not filtration_recursion_check_nonregular(spec, lam, (1, 1), 3):
                bad.append(f"{spec} {list(lam)} twisted")
            if not degree_recursion_check_nonregular(spec, lam, 3):
                bad.append(f"{spec} {list(lam)} degree")
    chains = 0
    for fam, rank in (("A", 2), ("A", 3)):
        rs = _rs(fam, rank)
        for i in range(1, rank + 1):
            lam = rs.fundamental_weight(i)
            stab = sorted(rs.stabilizer(lam))
            for k in range(len(stab) + 1):
                for parab in itertools.combinations(stab, k):
                    if set(parab) == set(stab):
                        continue
                    c, b = _chain_check(rs, parab, lam)
                    chains += c
                    bad.extend(b)
    return CriterionResult(11, "non-regular recursions and defining chains", not bad,
                           f"{varieties} varieties, {chains} chains" + (f", failures {bad}" if bad else ""))


# -- 12: determinism -----------------------------------------------------------

def core_report(seed: int = 0) -> str:
    return render(run_criteria(CORE, seed), seed)


def criterion_12(seed: int = 0) -> CriterionResult:
    cmd = [sys.executable, "-m", "richardson_smt.cli", "check", "--suite", "core", "--seed", str(seed)]
    outs = []
    for _ in range(2):
        proc = subprocess.run(cmd, capture_output=True, env=dict(os.environ))
        outs.append((proc.returncode, proc.stdout))
    same = outs[0] == outs[1] and bool(outs[0][1])
    return CriterionResult(12, "byte-identical reports", same,
                           f"two runs of the core suite, {len(outs[0][1])} bytes each")


CRITERIA: dict[int, Callable[[int], CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
    9: criterion_9, 10: criterion_10, 11: criterion_11, 12: criterion_12,
}
CORE = tuple(range(1, 12))
ALL = tuple(range(1, 13))


def run_criteria(numbers, seed: int = 0) -> list[CriterionResult]:
    return [CRITERIA[k](seed) for k in numbers]


def render(results: list[CriterionResult], seed: int) -> str:
    lines = [f"acceptance suite, seed {seed}"]
    lines += [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines) + "\n"
