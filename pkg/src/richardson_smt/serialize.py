"""JSON and CSV forms of paths, characters, filtrations and relations."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable

from .characters import FormalCharacter
from .ktheory import PieriChevalleyTable
from .lspath import LSPath
from .pluecker import StraighteningRelation, format_subset, parse_subset
from .richardson import FiltrationMultiset, RichardsonSpec, RichardsonUnion
from .weyl import Coset, RootSystem, weyl_group


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _coset(rs: RootSystem, word: str, parabolic) -> Coset:
    group = weyl_group(rs)
    return group.coset_of(group.element(word), frozenset(parabolic))


# -- paths -----------------------------------------------------------------

def path_to_json(pi: LSPath) -> dict:
    return {
        "cosets": [str(c) for c in pi.cosets],
        "cuts": [str(a) for a in pi.cuts],
        "shape": list(pi.shape),
    }


def path_from_json(obj: dict, rs: RootSystem) -> LSPath:
    shape = tuple(int(x) for x in obj["shape"])
    parab = rs.stabilizer(shape)
    cosets = tuple(_coset(rs, w, parab) for w in obj["cosets"])
    cuts = tuple(Fraction(a) for a in obj["cuts"])
    return LSPath(shape, cosets, cuts)


# -- characters ------------------------------------------------------------

def character_to_json(ch: FormalCharacter) -> list[dict]:
    return [{"weight": list(mu), "coeff": c} for mu, c in ch.sorted_terms()]


def character_from_json(obj: Iterable[dict]) -> FormalCharacter:
    return FormalCharacter({tuple(t["weight"]): t["coeff"] for t in obj})


def character_to_csv(ch: FormalCharacter, prefix: Iterable[str] = ()) -> list[list]:
    prefix = list(prefix)
    return [prefix + list(mu) + [c] for mu, c in ch.sorted_terms()]


def rows_to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- Richardson data -------------------------------------------------------

def spec_to_json(spec: RichardsonSpec) -> dict:
    return {"tau": str(spec.tau), "kappa": str(spec.kappa)}


def union_to_json(y: RichardsonUnion) -> list[dict]:
    return [spec_to_json(c) for c in y]


def union_from_json(obj: list[dict], rs: RootSystem, parabolic) -> RichardsonUnion:
    return RichardsonUnion(
        tuple(RichardsonSpec.from_words(rs, parabolic, c["tau"], c["kappa"]) for c in obj)
    )


def filtration_to_json(fm: FiltrationMultiset) -> dict:
    return {"entries": [{"end": str(c), "twist": list(w)} for c, w in fm.entries]}


def filtration_from_json(obj: dict, rs: RootSystem, parabolic) -> FiltrationMultiset:
    return FiltrationMultiset(
        tuple((_coset(rs, e["end"], parabolic), tuple(e["twist"])) for e in obj["entries"])
    )


def pieri_table_to_json(table: PieriChevalleyTable) -> dict:
    return {
        "tau": str(table.tau),
        "lambda": list(table.lam),
        "rows": [
            {"kappa": str(k), "count": table.counts[k], "character": character_to_json(ch)}
            for k, ch in table.rows.items()
        ],
    }


def pieri_table_from_json(obj: dict, rs: RootSystem) -> PieriChevalleyTable:
    lam = tuple(obj["lambda"])
    parab = rs.stabilizer(lam)
    rows = {}
    counts = {}
    for r in obj["rows"]:
        k = _coset(rs, r["kappa"], parab)
        rows[k] = character_from_json(r["character"])
        counts[k] = r["count"]
    return PieriChevalleyTable(_coset(rs, obj["tau"], parab), lam, rows, counts)


def pieri_table_to_csv(table: PieriChevalleyTable) -> str:
    rank = len(table.lam)
    header = ["kappa"] + [f"w{i}" for i in range(1, rank + 1)] + ["coeff"]
    rows = []
    for k, ch in table.rows.items():
        rows.extend(character_to_csv(ch, [str(k)]))
    return rows_to_csv(header, rows)


# -- straightening -----------------------------------------------------------

def relation_to_json(rel: StraighteningRelation) -> dict:
    return {
        "lhs": [format_subset(s) for s in rel.lhs],
        "rhs": [
            {"coeff": str(c), "pair": [format_subset(j), format_subset(k)]}
            for c, (j, k) in rel.rhs
        ],
    }


def relation_from_json(obj: dict) -> StraighteningRelation:
    lhs = tuple(parse_subset(s) for s in obj["lhs"])
    rhs = tuple(
        (Fraction(t["coeff"]), (parse_subset(t["pair"][0]), parse_subset(t["pair"][1])))
        for t in obj["rhs"]
    )
    return StraighteningRelation(lhs, rhs)
