from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import brute_force_paths, type_a_dimension
from richardson_smt.characters import weyl_dimension
from richardson_smt.lspath import (
    ConvexSubset,
    LSPath,
    StandardSequence,
    check_integrality,
    cmp_lex,
    cmp_revlex,
    enumerate_ls_paths,
    enumerate_standard_sequences,
    final,
    initial,
    is_ls_path,
    is_maximally_positive_saturated,
    is_negative_saturated,
    is_positive_saturated,
    is_standard_on,
    negative_closure,
    path_model,
    positive_closure,
    unwedge,
    wedge,
    weight,
)
from richardson_smt.weyl import BoundExceeded, build_root_system, weyl_group

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)


def _a1_cosets():
    g = weyl_group(A1)
    return g.coset_of(g.element("s1"), ()), g.coset_of(g.element("e"), ())


def test_a1_two_omega():
    s, e = _a1_cosets()
    paths = enumerate_ls_paths((2,), A1)
    assert [str(p) for p in paths] == ["(s1)", "(s1,e; 1/2)", "(e)"]
    mid = paths[1]
    assert mid.cuts == (F(1, 2),)
    assert weight(mid) == (0,)
    assert initial(mid) == s and final(mid) == e


def test_a2_minuscule_and_zero():
    assert len(enumerate_ls_paths((1, 0), A2)) == 3
    assert all(len(p.cosets) == 1 for p in enumerate_ls_paths((1, 0), A2))
    for fam, rank in [("A", 3), ("B", 2), ("G", 2)]:
        rs = build_root_system(fam, rank)
        only = enumerate_ls_paths((0,) * rank, rs)
        assert len(only) == 1 and str(only[0]) == "(e)"


@pytest.mark.parametrize(
    "family,rank,lam",
    [("A", 1, (3,)), ("A", 2, (1, 1)), ("A", 2, (2, 1)), ("B", 2, (1, 1)), ("B", 2, (0, 2)),
     ("G", 2, (1, 0)), ("G", 2, (1, 1)), ("C", 3, (0, 1, 1)), ("A", 3, (1, 0, 1))],
)
def test_paths_match_definition_oracle(family, rank, lam):
    rs = build_root_system(family, rank)
    mine = {(tuple(c.apply(lam) for c in p.cosets), p.cuts) for p in path_model(rs, lam).paths}
    assert mine == brute_force_paths(rs, lam)


@pytest.mark.parametrize("lam", [(1, 0, 0), (1, 1, 0), (2, 0, 1), (1, 1, 1), (0, 2, 0)])
def test_type_a_counts_against_tableaux(lam):
    assert len(enumerate_ls_paths(lam, build_root_system("A", 3))) == type_a_dimension(lam)


def test_frozen_counts():
    # Weyl dimension formula values
    cases = {("B", 3, (1, 1, 1)): 512, ("G", 2, (2, 1)): 189, ("A", 4, (1, 0, 0, 1)): 24, ("D", 4, (0, 1, 0, 0)): 28}
    for (fam, rank, lam), n in cases.items():
        rs = build_root_system(fam, rank)
        assert len(enumerate_ls_paths(lam, rs)) == n == weyl_dimension(lam, rs)


def test_every_path_satisfies_integrality():
    rs = build_root_system("B", 2)
    lam = (2, 1)
    for p in enumerate_ls_paths(lam, rs):
        assert is_ls_path(p)
        for k, a in enumerate(p.cuts):
            assert check_integrality((p.cosets[k], p.cosets[k + 1]), a, lam)


def test_check_integrality_examples():
    s, e = _a1_cosets()
    assert check_integrality((s, e), F(1, 2), (2,))
    assert not check_integrality((s, e), F(1, 3), (2,))
    assert check_integrality((s, e), F(1, 3), (0,))


def test_invalid_paths():
    s, e = _a1_cosets()
    with pytest.raises(ValueError):
        ConvexSubset((2,), (e, s), (F(1, 2),))
    with pytest.raises(ValueError):
        ConvexSubset((2,), (s, e), (F(1),))
    with pytest.raises(ValueError):
        ConvexSubset((2,), (s, e), ())
    bad = ConvexSubset((2,), (s, e), (F(1, 3),))
    assert not is_ls_path(bad)


def test_is_standard_on():
    s, e = _a1_cosets()
    paths = enumerate_ls_paths((2,), A1)
    top, mid, bottom = paths
    assert is_standard_on(bottom, s, e) and is_standard_on(bottom, e, e)
    assert not is_standard_on(mid, s, s)
    assert is_standard_on(top, s, s)


def test_orders_a1():
    top, mid, bottom = enumerate_ls_paths((2,), A1)
    assert cmp_lex(top, bottom) == 1 and cmp_revlex(top, bottom) == 1
    assert cmp_lex(top, mid) == 1
    assert cmp_lex(mid, top) == -1
    assert cmp_lex(mid, mid) == 0


def test_extremes_of_b_lambda():
    rs = build_root_system("B", 2)
    lam = (1, 1)
    paths = enumerate_ls_paths(lam, rs)
    top = [p for p in paths if all(cmp_lex(p, q) in (0, 1) for q in paths)]
    bottom = [p for p in paths if all(cmp_lex(q, p) in (0, 1) for q in paths)]
    assert len(top) == 1 and len(top[0].cosets) == 1 and top[0].initial.length == 4
    assert len(bottom) == 1 and str(bottom[0]) == "(e)"


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_order_properties(data):
    paths = enumerate_ls_paths((1, 1), build_root_system("B", 2))
    p = data.draw(st.sampled_from(paths))
    q = data.draw(st.sampled_from(paths))
    for cmp in (cmp_lex, cmp_revlex):
        a, b = cmp(p, q), cmp(q, p)
        if a is None:
            assert b is None
        else:
            assert a == -b
        t = cmp(p, q, total=True)
        assert t is not None and (a is None or a == t)
    assert (cmp_lex(p, q, total=True) == 0) == (p == q)
    # the total lex order is the sort order of the model
    assert (cmp_lex(p, q, total=True) == 1) == (p.lex_key() > q.lex_key())
    assert (cmp_revlex(p, q, total=True) == 1) == (p.revlex_key() > q.revlex_key())


def test_wedge_examples():
    s, e = _a1_cosets()
    ps, pe = LSPath((1,), (s,), ()), LSPath((1,), (e,), ())
    w = wedge(ps, pe)
    assert w.shape == (2,) and w.cosets == (s, e) and w.cuts == (F(1, 2),)
    assert wedge(ps, ps) == LSPath((2,), (s,), ())
    mid = LSPath((2,), (s, e), (F(1, 2),))
    w3 = wedge(LSPath((2,), (s,), ()), mid, LSPath((2,), (e,), ()))
    assert w3.cosets == (s, e) and w3.cuts == (F(1, 2),)
    assert unwedge(w, 2) == StandardSequence((ps, pe))
    assert unwedge(LSPath((3,), (s,), ()), 3) == StandardSequence((LSPath((1,), (s,), ()),) * 3)


def test_unwedge_rejects_non_paths():
    s, e = _a1_cosets()
    with pytest.raises(ValueError):
        unwedge(ConvexSubset((2,), (s, e), (F(1, 3),)), 2)
    with pytest.raises(ValueError):
        unwedge(LSPath((3,), (s,), ()), 2)


@pytest.mark.parametrize("family,rank,lam,m", [("A", 2, (1, 0), 3), ("A", 2, (1, 1), 2), ("B", 2, (1, 1), 2), ("G", 2, (1, 0), 2), ("A", 3, (0, 1, 0), 3)])
def test_wedge_bijection(family, rank, lam, m):
    rs = build_root_system(family, rank)
    seqs = enumerate_standard_sequences(lam, m, rs)
    big = set(enumerate_ls_paths(tuple(m * x for x in lam), rs))
    assert len(seqs) == len(big)
    images = set()
    for seq in seqs:
        w = wedge(*seq.paths)
        assert is_ls_path(w)
        assert unwedge(w, m) == seq
        assert w.weight == seq.weight
        assert w.initial == seq.initial and w.final == seq.final
        images.add(w)
    assert images == big


def test_same_support_wedge_is_a_path():
    rs = build_root_system("B", 2)
    paths = enumerate_ls_paths((1, 1), rs)
    for p in paths:
        for q in paths:
            if set(p.ids) == set(q.ids):
                assert is_ls_path(wedge(p, q))


def test_standard_sequence_examples():
    s, e = _a1_cosets()
    seqs = enumerate_standard_sequences((1,), 2, A1)
    assert [[str(p) for p in q] for q in seqs] == [["(s1)", "(s1)"], ["(s1)", "(e)"], ["(e)", "(e)"]]
    only = enumerate_standard_sequences((1,), 2, A1, tau=s, kappa=s)
    assert [[str(p) for p in q] for q in only] == [["(s1)", "(s1)"]]
    one = enumerate_standard_sequences((2,), 1, A1, tau=s, kappa=e)
    assert [q.paths[0] for q in one] == enumerate_ls_paths((2,), A1)
    with pytest.raises(ValueError):
        StandardSequence((LSPath((1,), (e,), ()), LSPath((1,), (s,), ())))


def test_saturation():
    paths = enumerate_ls_paths((1,), A1)
    top, bottom = paths
    assert is_maximally_positive_saturated({top})
    assert is_positive_saturated(set()) and is_negative_saturated(set())
    assert positive_closure({bottom}) == set(paths)
    rs = build_root_system("A", 2)
    b = enumerate_ls_paths((1, 1), rs)
    # top-j sets in the total lex order are positive saturated
    for j in range(len(b) + 1):
        assert is_positive_saturated(set(b[:j]))
    for p in b:
        up = positive_closure({p})
        assert is_positive_saturated(up) and is_maximally_positive_saturated(up)
        down = negative_closure({p})
        assert is_negative_saturated(down)


def test_path_bound(monkeypatch):
    monkeypatch.setenv("SMT_MAX_PATHS", "10")
    from richardson_smt.lspath import PathModel

    with pytest.raises(BoundExceeded):
        _ = PathModel(build_root_system("A", 2), (2, 2)).paths
