import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import closure_size, subword_leq, word_matrix
from richardson_smt.weyl import (
    BoundExceeded,
    WeylGroup,
    build_root_system,
    coset_of,
    coset_space,
    enumerate_weyl,
    pair,
    parse_type,
    parse_word,
    weyl_group,
)

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)]


@pytest.mark.parametrize("family,rank,count", [("A", 1, 1), ("A", 2, 3), ("G", 2, 6), ("B", 3, 9), ("D", 4, 12), ("E", 6, 36)])
def test_positive_root_counts(family, rank, count):
    assert len(build_root_system(family, rank).positive_roots) == count


@pytest.mark.parametrize("family,rank", SMALL + [("D", 4), ("F", 4)])
def test_group_order_matches_matrix_closure(family, rank):
    rs = build_root_system(family, rank)
    assert len(enumerate_weyl(rs)) == closure_size(rs.cartan)


def test_group_orders_frozen():
    # matrix-closure oracle values
    sizes = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24, "C3": 48}
    for name, n in sizes.items():
        assert len(weyl_group(parse_type(name))) == n


@pytest.mark.parametrize("text", ["A0", "B1", "D3", "E5", "F3", "G3", "X2"])
def test_invalid_types(text):
    with pytest.raises(ValueError):
        parse_type(text)


def test_cartan_shape():
    for family, rank in SMALL + [("F", 4), ("E", 6)]:
        c = build_root_system(family, rank).cartan
        assert all(c[i][i] == 2 for i in range(rank))
        assert all(c[i][j] <= 0 for i in range(rank) for j in range(rank) if i != j)


@pytest.mark.parametrize("family,rank", SMALL)
def test_positive_roots_closed_under_simple_reflections(family, rank):
    rs = build_root_system(family, rank)
    roots = set(rs.positive_roots)
    for beta in roots:
        for i in range(1, rank + 1):
            img = rs.simple_reflect_root(i, beta)
            neg = tuple(-x for x in img)
            simple = tuple(int(j == i - 1) for j in range(rank))
            assert img in roots or neg == simple


@pytest.mark.parametrize("family,rank", SMALL)
def test_length_is_inversion_count_and_word_is_reduced(family, rank):
    rs = build_root_system(family, rank)
    group = weyl_group(rs)
    for w in group:
        assert group.inversion_count(w) == w.length == len(w.canonical_word)
        assert (word_matrix(rs.cartan, w.canonical_word) == list(w.matrix)).all()


def test_canonical_word_is_lex_least():
    from itertools import product

    rs = build_root_system("A", 3)
    group = weyl_group(rs)
    for w in group:
        words = [
            wd for wd in product(range(1, 4), repeat=w.length)
            if group.element(wd) == w
        ]
        assert w.canonical_word == min(words)


def test_bruhat_examples():
    group = weyl_group(build_root_system("A", 2))
    e, s1, s2 = group.element("e"), group.element("s1"), group.element("s2")
    assert group.bruhat_leq(e, group.element("s1.s2"))
    assert group.bruhat_leq(s1, group.element("s1.s2"))
    assert not group.bruhat_leq(s1, s2)


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_bruhat_matches_subword_oracle(family, rank):
    rs = build_root_system(family, rank)
    group = weyl_group(rs)
    for u in group:
        for v in group:
            expect = subword_leq(rs.cartan, u.canonical_word, v.canonical_word)
            assert group.bruhat_leq(u, v) == expect


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2)])
def test_bruhat_is_a_partial_order_with_extremes(family, rank):
    group = weyl_group(build_root_system(family, rank))
    t = group.bruhat_table()
    n = len(group)
    assert t.diagonal().all()
    for a in range(n):
        for b in range(n):
            if a != b and t[a, b]:
                assert not t[b, a]
    # transitivity: t @ t reaches nothing new
    assert (((t.astype(int) @ t.astype(int)) > 0) == t).all()
    assert t[group.identity.index].all()
    assert t[:, group.longest.index].all()


def test_coset_examples():
    group = weyl_group(build_root_system("A", 2))
    q = {2}
    assert str(coset_of(group.element("s2"), q)) == "e"
    assert str(coset_of(group.element("s1.s2"), q)) == "s1"
    assert str(coset_of(group.element("s2.s1"), q)) == "s2.s1"


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2)])
def test_coset_reps_are_length_minimal(family, rank):
    rs = build_root_system(family, rank)
    group = weyl_group(rs)
    for k in range(rank + 1):
        for parab in __import__("itertools").combinations(range(1, rank + 1), k):
            sub = group.parabolic_subgroup(parab)
            for w in group:
                c = group.coset_of(w, parab)
                members = [w * x for x in sub]
                assert c.rep.length == min(m.length for m in members)
                assert c.rep in members
                assert group.coset_of(c.rep, parab).rep == c.rep
                assert all(c.rep.length < group.right_mult(c.rep, i).length for i in parab)


def test_coset_order_agrees_with_lifts():
    group = weyl_group(build_root_system("A", 3))
    parab = frozenset({1, 3})
    sp = coset_space(group, parab)
    for a in range(len(sp)):
        for b in range(len(sp)):
            lifted = any(
                group.bruhat_leq(u, v)
                for u in group if sp.id_of(group.coset_of(u, parab)) == a
                for v in group if sp.id_of(group.coset_of(v, parab)) == b
            )
            assert sp.leq(a, b) == lifted


def test_coset_ids_follow_length_then_word():
    group = weyl_group(build_root_system("B", 3))
    sp = coset_space(group, frozenset({2}))
    keys = [(c.length, c.rep.canonical_word) for c in sp.cosets]
    assert keys == sorted(keys)


def test_apply_and_pair():
    a2 = build_root_system("A", 2)
    g = weyl_group(a2)
    assert g.element("e").apply((3, 5)) == (3, 5)
    assert g.element("s1").apply((1, 0)) == (-1, 1)
    a1 = build_root_system("A", 1)
    assert weyl_group(a1).element("s1").apply((2,)) == (-2,)
    assert pair(a2, (1, 1), (1, 1)) == 2
    assert pair(a1, (2,), (1,)) == 2
    for fam, rank in SMALL:
        rs = build_root_system(fam, rank)
        simple = tuple(int(j == 0) for j in range(rank))
        assert rs.pair(rs.fundamental_weight(1), simple) == 1


def test_words_round_trip():
    group = weyl_group(build_root_system("A", 3))
    for w in group:
        assert group.element(str(w)) == w
    assert parse_word("e") == ()
    with pytest.raises(ValueError):
        parse_word("s1.x2")
    with pytest.raises(ValueError):
        group.element("s4")


def test_bound(monkeypatch):
    rs = build_root_system("A", 3)
    with pytest.raises(BoundExceeded):
        WeylGroup(rs, bound=10)
    monkeypatch.setenv("SMT_MAX_GROUP_SIZE", "5")
    with pytest.raises(BoundExceeded):
        enumerate_weyl(rs)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_multiplication_properties(data):
    group = weyl_group(build_root_system("B", 3))
    els = group.elements
    u = data.draw(st.sampled_from(els))
    v = data.draw(st.sampled_from(els))
    w = data.draw(st.sampled_from(els))
    assert (u * v) * w == u * (v * w)
    assert u * u.inverse() == group.identity
    assert u.inverse().length == u.length
    mu = data.draw(st.tuples(*[st.integers(-3, 3)] * 3))
    assert (u * v).apply(mu) == u.apply(v.apply(mu))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_bruhat_subword_property(data):
    """Deleting a letter of a reduced word never gives a larger element."""
    group = weyl_group(build_root_system("A", 3))
    w = data.draw(st.sampled_from(group.elements))
    if not w.length:
        return
    k = data.draw(st.integers(0, w.length - 1))
    word = w.canonical_word[:k] + w.canonical_word[k + 1:]
    assert group.bruhat_leq(group.element(word), w)
