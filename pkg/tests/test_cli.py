import csv
import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from richardson_smt import serialize
from richardson_smt.characters import FormalCharacter
from richardson_smt.cli import main, run
from richardson_smt.ktheory import pieri_chevalley
from richardson_smt.lspath import enumerate_ls_paths
from richardson_smt.pluecker import build_model, straighten_all
from richardson_smt.richardson import RichardsonSpec, boundary_plus, pieri_filtration
from richardson_smt.weyl import build_root_system, weyl_group


def smt(*argv):
    code, out, err = run(list(argv))
    return code, out, err


def smt_json(*argv):
    code, out, err = smt(*argv)
    assert code == 0, err
    return json.loads(out)


# -- documented examples ---------------------------------------------------

def test_enumerate_paths_example():
    out = smt_json("enumerate-paths", "--type", "A", "--rank", "1", "--lambda", "2")
    assert out == [
        {"cosets": ["s1"], "cuts": [], "shape": [2]},
        {"cosets": ["s1", "e"], "cuts": ["1/2"], "shape": [2]},
        {"cosets": ["e"], "cuts": [], "shape": [2]},
    ]


def test_character_compare_example():
    assert smt_json("character", "--type", "A", "--rank", "2", "--lambda", "1,1",
                    "--oracle", "weyl", "--compare", "paths") == {"equal": True}


def test_richardson_status_example():
    assert smt_json("richardson", "--type", "A", "--rank", "2", "--tau", "s1.s2", "--kappa", "s1") == {"dimension": 1}
    assert smt_json("richardson", "--type", "A", "--rank", "2", "--tau", "s1", "--kappa", "s2") == {"empty": True}


def test_richardson_ops():
    base = ["richardson", "--type", "A", "--rank", "2", "--tau", "s1.s2", "--kappa", "e"]
    assert smt_json(*base, "--lambda", "1,0", "--degree", "3", "--op", "count") == {"count": 4}
    assert smt_json(*base, "--lambda", "1,0", "--parabolic", "", "--degree", "1", "--op", "count") == {"count": 2}
    pieri = smt_json(*base, "--lambda", "1,1", "--op", "pieri")
    assert pieri == {"entries": [{"end": "s1.s2", "twist": [2, -1]}, {"end": "s2", "twist": [0, 0]}]}
    bd = smt_json(*base, "--lambda", "1,0", "--parabolic", "", "--op", "boundary")
    assert bd["plus"] == [{"tau": "s2", "kappa": "e"}, {"tau": "s1", "kappa": "e"}]
    assert bd["lambda"] == [{"tau": "s2", "kappa": "e"}]
    chk = smt_json(*base, "--lambda", "1,1", "--degree", "4", "--op", "check")
    assert chk["pass"] and [r["m"] for r in chk["rows"]] == [1, 2, 3, 4]


def test_demazure_command():
    out = smt_json("demazure", "--type", "A", "--rank", "2", "--lambda", "1,0", "--tau", "s1")
    assert out == [{"weight": [-1, 1], "coeff": 1}, {"weight": [1, 0], "coeff": 1}]
    assert smt_json("demazure", "--type", "B", "--rank", "2", "--lambda", "1,1", "--tau", "s1.s2.s1",
                    "--compare", "paths") == {"equal": True}


def test_pieri_command_json_and_csv():
    out = smt_json("pieri", "--type", "A", "--rank", "1", "--tau", "s1", "--lambda", "2")
    assert out["rows"] == [
        {"kappa": "s1", "count": 1, "character": [{"weight": [-2], "coeff": 1}]},
        {"kappa": "e", "count": 2, "character": [{"weight": [0], "coeff": 1}, {"weight": [2], "coeff": 1}]},
    ]
    code, text, _ = smt("pieri", "--type", "A", "--rank", "1", "--tau", "s1", "--lambda", "2", "--format", "csv")
    assert code == 0
    assert list(csv.reader(io.StringIO(text))) == [["kappa", "w1", "coeff"], ["s1", "-2", "1"], ["e", "0", "1"], ["e", "2", "1"]]


def test_straighten_command():
    out = smt_json("straighten", "--n", "4", "--d", "2", "--pair", "14,23")
    assert out["lhs"] == ["14", "23"]
    assert sorted((t["pair"][0], t["pair"][1], t["coeff"]) for t in out["rhs"]) == [("24", "13", "1"), ("34", "12", "-1")]


def test_check_degeneration_command():
    out = smt_json("check", "degeneration", "--type", "A", "--rank", "1", "--tau", "s1", "--kappa", "e",
                   "--lambda", "1", "--n", "1")
    assert out["pass"] and out["pairs"] == out["count_2n"] == out["split_total"] == 3
    assert out["split_terms"] == [{"sigma": "e", "a": 1, "b": 2}, {"sigma": "s1", "a": 1, "b": 1}]
    out = smt_json("check", "pittie-ram", "--type", "A", "--rank", "2", "--tau", "s2.s1", "--lambda", "1,1")
    assert out["pass"]


def test_check_suite_subset():
    code, out, _ = smt("check", "--suite", "1,9")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "acceptance suite, seed 0"
    assert lines[1].startswith("criterion  1 PASS") and lines[2].startswith("criterion  9 PASS")
    assert lines[-1] == "2/2 criteria passed"


# -- errors and exit codes ---------------------------------------------------

@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["enumerate-paths", "--type", "A", "--rank", "2"],
    ["enumerate-paths", "--type", "A", "--rank", "2", "--lambda", "1,-1"],
    ["enumerate-paths", "--type", "A", "--rank", "2", "--lambda", "1,0,0"],
    ["enumerate-paths", "--type", "A", "--rank", "2", "--lambda", "x"],
    ["enumerate-paths", "--type", "D", "--rank", "2", "--lambda", "1,0"],
    ["richardson", "--type", "A", "--rank", "2", "--tau", "s3"],
    ["richardson", "--type", "A", "--rank", "2", "--tau", "s1", "--op", "count"],
    ["richardson", "--type", "A", "--rank", "2", "--tau", "s1", "--kappa", "s2", "--op", "boundary"],
    ["straighten", "--n", "4", "--d", "2", "--pair", "12,13"],
    ["straighten", "--n", "4", "--d", "2", "--pair", "12"],
    ["straighten", "--n", "9", "--d", "2", "--pair", "12,34"],
    ["check"],
    ["check", "--suite", "99"],
])
def test_usage_errors(argv):
    code, out, err = smt(*argv)
    assert code == 1 and out == "" and err.startswith("smt: error:")


def test_bound_exit_code(monkeypatch):
    monkeypatch.setenv("SMT_MAX_GROUP_SIZE", "10")
    code, _, err = smt("richardson", "--type", "A", "--rank", "3", "--tau", "s1")
    assert code == 2 and "bound" in err
    monkeypatch.delenv("SMT_MAX_GROUP_SIZE")
    monkeypatch.setenv("SMT_MAX_PATHS", "5")
    code, _, _ = smt("enumerate-paths", "--type", "A", "--rank", "3", "--lambda", "2,2,2")
    assert code == 2


def test_check_failure_exit_code(monkeypatch):
    import richardson_smt.cli as cli

    monkeypatch.setitem(cli.COMMANDS, "character", lambda args, cfg: (3, "{}\n"))
    assert main(["character", "--type", "A", "--rank", "1", "--lambda", "1"]) == 3


def test_output_is_deterministic():
    argv = ["straighten", "--n", "6", "--d", "3", "--pair", "145,236", "--seed", "4"]
    assert smt(*argv) == smt(*argv)
    argv = ["richardson", "--type", "B", "--rank", "2", "--tau", "s1.s2.s1", "--lambda", "1,1", "--op", "pieri"]
    assert smt(*argv) == smt(*argv)


# -- serialisation round trips ---------------------------------------------

def test_path_round_trip():
    for fam, rank, lam in [("A", 2, (2, 1)), ("G", 2, (1, 1)), ("B", 3, (0, 0, 2))]:
        rs = build_root_system(fam, rank)
        for p in enumerate_ls_paths(lam, rs):
            assert serialize.path_from_json(json.loads(json.dumps(serialize.path_to_json(p))), rs) == p


def test_table_filtration_union_relation_round_trips():
    rs = build_root_system("A", 2)
    g = weyl_group(rs)
    for w in g:
        t = pieri_chevalley(g.coset_of(w, ()), (1, 1))
        back = serialize.pieri_table_from_json(json.loads(serialize.dumps(serialize.pieri_table_to_json(t))), rs)
        assert back == t
        x = RichardsonSpec(frozenset(), g.coset_of(w, ()), g.coset_of(g.identity, ()))
        f = pieri_filtration(x, (1, 1))
        assert serialize.filtration_from_json(serialize.filtration_to_json(f), rs, ()) == f
        y = boundary_plus(x)
        assert serialize.union_from_json(serialize.union_to_json(y), rs, ()) == y
    for rel in straighten_all(build_model(5, 2)).values():
        assert serialize.relation_from_json(json.loads(json.dumps(serialize.relation_to_json(rel)))) == rel


chars = st.dictionaries(
    st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)),
    st.integers(-9, 9), max_size=8,
).map(FormalCharacter)


@settings(max_examples=100, deadline=None)
@given(chars)
def test_character_round_trip(ch):
    js = serialize.character_to_json(ch)
    assert [t["weight"] for t in js] == sorted(t["weight"] for t in js)
    assert serialize.character_from_json(json.loads(json.dumps(js))) == ch
