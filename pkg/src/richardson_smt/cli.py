"""Command-line front end: ``smt <subcommand> ...``.

Exit codes: 0 ok, 1 usage error, 2 computational bound exceeded,
3 a requested check failed.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import acceptance, serialize
from .characters import (
    char_from_paths,
    demazure_character,
    demazure_from_paths,
    weyl_character,
)
from .ktheory import degeneration_report, pieri_chevalley, pittie_ram_sum_check
from .lspath import path_model
from .pluecker import build_model, parse_subset, straighten
from .richardson import (
    TRIVIAL_BUNDLE,
    RichardsonSpec,
    boundary_minus,
    boundary_plus,
    count_standard_monomials,
    count_standard_nonregular,
    hilbert_recursion_rows,
    lambda_boundary,
    nonregular_degree_rows,
    pieri_filtration,
    richardson_status,
)
from .weyl import BoundExceeded, RootSystem, build_root_system, weyl_group

EXIT_OK, EXIT_USAGE, EXIT_BOUND, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class JobConfig:
    command: str
    family: str | None = None
    rank: int | None = None
    parabolic: frozenset[int] | None = None
    lam: tuple[int, ...] | None = None
    tau: str = "e"
    kappa: str = "e"
    degree: int = 1
    op: str | None = None
    fmt: str = "json"
    seed: int = 0

    @property
    def root_system(self) -> RootSystem:
        if self.family is None or self.rank is None:
            raise UsageError("--type and --rank are required")
        return build_root_system(self.family, self.rank)

    def weight(self) -> tuple[int, ...]:
        if self.lam is None:
            raise UsageError("--lambda is required")
        rs = self.root_system
        if len(self.lam) != rs.rank:
            raise UsageError(f"--lambda needs {rs.rank} coordinates")
        if not rs.is_dominant(self.lam):
            raise UsageError(f"weight {list(self.lam)} is not dominant")
        return self.lam

    def parabolic_for(self, lam=None) -> frozenset[int]:
        if self.parabolic is not None:
            return self.parabolic
        if lam is not None:
            return self.root_system.stabilizer(lam)
        return frozenset()

    def coset(self, word: str, parabolic):
        group = weyl_group(self.root_system)
        return group.coset_of(group.element(word), frozenset(parabolic))


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", dest="family", choices=list("ABCDEFG"))
    common.add_argument("--rank", type=int)
    common.add_argument("--parabolic", type=_int_list, default=None,
                        help="simple reflections generating W_Q, e.g. 1,3")
    common.add_argument("--lambda", dest="lam", type=_int_list,
                        help="fundamental coordinates, e.g. 1,0")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="smt", description="Standard monomial theory of Richardson varieties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("enumerate-paths", parents=[common], help="list B(lambda)")

    c = sub.add_parser("character", parents=[common], help="character of V(lambda)")
    c.add_argument("--oracle", choices=("paths", "weyl"), default="paths")
    c.add_argument("--compare", choices=("paths", "weyl"))

    d = sub.add_parser("demazure", parents=[common], help="Demazure character")
    d.add_argument("--tau", default="e")
    d.add_argument("--oracle", choices=("operators", "paths"), default="operators")
    d.add_argument("--compare", choices=("operators", "paths"))

    r = sub.add_parser("richardson", parents=[common], help="Richardson variety data")
    r.add_argument("--tau", default="e")
    r.add_argument("--kappa", default="e")
    r.add_argument("--degree", type=int, default=1)
    r.add_argument("--op", choices=("status", "count", "boundary", "pieri", "check"), default="status")

    k = sub.add_parser("pieri", parents=[common], help="Pieri-Chevalley table")
    k.add_argument("--tau", default="e")

    s = sub.add_parser("straighten", parents=[common], help="Grassmannian straightening relation")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--pair", required=True, help="two incomparable subsets, e.g. 14,23")

    ch = sub.add_parser("check", parents=[common], help="acceptance suite or a single identity")
    ch.add_argument("name", nargs="?", choices=("degeneration", "pittie-ram"))
    ch.add_argument("--suite", help="all, core, or a comma-separated list of criteria")
    ch.add_argument("--tau", default="e")
    ch.add_argument("--kappa", default="e")
    ch.add_argument("--n", type=int, default=1)
    return p


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, text)
# ---------------------------------------------------------------------------

def _char_out(ch, fmt: str, rank: int) -> str:
    if fmt == "csv":
        return serialize.rows_to_csv([f"w{i}" for i in range(1, rank + 1)] + ["coeff"],
                                     serialize.character_to_csv(ch))
    if fmt == "text":
        return repr(ch) + "\n"
    return serialize.dumps(serialize.character_to_json(ch))


def cmd_enumerate_paths(args, cfg: JobConfig):
    rs, lam = cfg.root_system, cfg.weight()
    paths = path_model(rs, lam).paths
    if cfg.fmt == "csv":
        rows = [[";".join(str(c) for c in p.cosets), ";".join(str(a) for a in p.cuts),
                 ",".join(str(x) for x in p.weight)] for p in paths]
        return EXIT_OK, serialize.rows_to_csv(["cosets", "cuts", "weight"], rows)
    if cfg.fmt == "text":
        return EXIT_OK, "".join(f"{p}\n" for p in paths)
    return EXIT_OK, serialize.dumps([serialize.path_to_json(p) for p in paths])


def cmd_character(args, cfg: JobConfig):
    rs, lam = cfg.root_system, cfg.weight()
    oracles = {"paths": char_from_paths, "weyl": weyl_character}
    ch = oracles[args.oracle](lam, rs)
    if args.compare:
        equal = ch == oracles[args.compare](lam, rs)
        return (EXIT_OK if equal else EXIT_CHECK), serialize.dumps({"equal": equal})
    return EXIT_OK, _char_out(ch, cfg.fmt, rs.rank)


def cmd_demazure(args, cfg: JobConfig):
    rs, lam = cfg.root_system, cfg.weight()
    w = weyl_group(rs).element(args.tau)
    tau = cfg.coset(args.tau, rs.stabilizer(lam))
    oracles = {
        "operators": lambda: demazure_character(w, lam),
        "paths": lambda: demazure_from_paths(tau, lam),
    }
    ch = oracles[args.oracle]()
    if args.compare:
        equal = ch == oracles[args.compare]()
        return (EXIT_OK if equal else EXIT_CHECK), serialize.dumps({"equal": equal})
    return EXIT_OK, _char_out(ch, cfg.fmt, rs.rank)


def _rows_json(rows):
    return [{"m": m, "lhs": a, "rhs": b} for m, a, b in rows]


def cmd_richardson(args, cfg: JobConfig):
    rs = cfg.root_system
    lam = cfg.weight() if cfg.lam is not None else None
    parab = cfg.parabolic_for(lam)
    spec = RichardsonSpec.from_words(rs, parab, args.tau, args.kappa)
    op = args.op
    if op == "status":
        return EXIT_OK, serialize.dumps(richardson_status(spec))
    if op == "boundary":
        if spec.is_empty:
            raise UsageError("boundary of an empty Richardson variety")
        out = {
            "plus": serialize.union_to_json(boundary_plus(spec)),
            "minus": serialize.union_to_json(boundary_minus(spec)),
        }
        if lam is not None and not rs.is_regular_for(lam, parab):
            bd = lambda_boundary(spec, lam)
            out["lambda"] = "trivial" if bd is TRIVIAL_BUNDLE else serialize.union_to_json(bd)
        return EXIT_OK, serialize.dumps(out)
    if lam is None:
        raise UsageError(f"--op {op} needs --lambda")
    regular = rs.is_regular_for(lam, parab)
    if op == "count":
        if cfg.degree < 0:
            raise UsageError("--degree must be >= 0")
        f = count_standard_monomials if regular else count_standard_nonregular
        return EXIT_OK, serialize.dumps({"count": f(spec, lam, cfg.degree)})
    if spec.is_empty:
        raise UsageError("empty Richardson variety")
    if op == "pieri":
        if not regular:
            raise UsageError("--op pieri needs a weight that is regular for the parabolic")
        return EXIT_OK, serialize.dumps(serialize.filtration_to_json(pieri_filtration(spec, lam)))
    # op == "check"
    if cfg.degree < 1:
        raise UsageError("--degree must be >= 1")
    rows = (hilbert_recursion_rows(spec, lam, cfg.degree) if regular
            else nonregular_degree_rows(spec, lam, cfg.degree))
    ok = all(a == b for _, a, b in rows)
    return (EXIT_OK if ok else EXIT_CHECK), serialize.dumps({"pass": ok, "rows": _rows_json(rows)})


def cmd_pieri(args, cfg: JobConfig):
    lam = cfg.weight()
    tau = cfg.coset(args.tau, cfg.root_system.stabilizer(lam))
    table = pieri_chevalley(tau, lam)
    if cfg.fmt == "csv":
        return EXIT_OK, serialize.pieri_table_to_csv(table)
    if cfg.fmt == "text":
        lines = [f"C[{table.tau},{k}] = {ch!r}  (a = {table.counts[k]})" for k, ch in table.rows.items()]
        return EXIT_OK, "\n".join(lines) + "\n"
    return EXIT_OK, serialize.dumps(serialize.pieri_table_to_json(table))


def cmd_straighten(args, cfg: JobConfig):
    parts = args.pair.split(",")
    if len(parts) != 2:
        raise UsageError("--pair needs two subsets separated by a comma")
    model = build_model(args.n, args.d)
    pair = tuple(parse_subset(x) for x in parts)
    for s in pair:
        if s not in model.index:
            raise UsageError(f"{s} is not a {args.d}-subset of 1..{args.n}")
    rel = straighten(model, pair[0], pair[1], cfg.seed)
    if cfg.fmt == "text":
        js = serialize.relation_to_json(rel)
        terms = " + ".join(f"({t['coeff']}) p{t['pair'][0]} p{t['pair'][1]}" for t in js["rhs"])
        return EXIT_OK, f"p{js['lhs'][0]} p{js['lhs'][1]} = {terms}\n"
    return EXIT_OK, serialize.dumps(serialize.relation_to_json(rel))


def _suite_numbers(text: str) -> tuple[int, ...]:
    if text == "all":
        return acceptance.ALL
    if text == "core":
        return acceptance.CORE
    nums = _int_list(text)
    if not nums or any(k not in acceptance.CRITERIA for k in nums):
        raise UsageError(f"unknown suite {text!r}")
    return nums


def cmd_check(args, cfg: JobConfig):
    if args.suite is not None:
        if args.name:
            raise UsageError("give either --suite or a check name")
        results = acceptance.run_criteria(_suite_numbers(args.suite), cfg.seed)
        ok = all(r.passed for r in results)
        return (EXIT_OK if ok else EXIT_CHECK), acceptance.render(results, cfg.seed)
    if args.name is None:
        raise UsageError("give --suite or a check name")
    rs, lam = cfg.root_system, cfg.weight()
    parab = cfg.parabolic_for(lam)
    if args.name == "pittie-ram":
        tau = cfg.coset(args.tau, rs.stabilizer(lam))
        ok = pittie_ram_sum_check(tau, lam)
        table = pieri_chevalley(tau, lam)
        return (EXIT_OK if ok else EXIT_CHECK), serialize.dumps({
            "pass": ok,
            "row_sum": serialize.character_to_json(table.row_sum()),
            "demazure": serialize.character_to_json(demazure_character(tau, lam)),
        })
    spec = RichardsonSpec.from_words(rs, parab, args.tau, args.kappa)
    if spec.is_empty:
        raise UsageError("empty Richardson variety")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if not rs.is_regular_for(lam, parab):
        raise UsageError("degeneration needs a weight that is regular for the parabolic")
    rep = degeneration_report(spec, lam, args.n)
    ok = rep["pairs"] == rep["count_2n"] == rep["split_total"] and rep["characters_equal"]
    return (EXIT_OK if ok else EXIT_CHECK), serialize.dumps({
        "pass": ok,
        "pairs": rep["pairs"],
        "count_2n": rep["count_2n"],
        "split_total": rep["split_total"],
        "split_terms": [{"sigma": w, "a": a, "b": b} for w, a, b in rep["split_terms"]],
        "characters_equal": rep["characters_equal"],
    })


COMMANDS = {
    "enumerate-paths": cmd_enumerate_paths,
    "character": cmd_character,
    "demazure": cmd_demazure,
    "richardson": cmd_richardson,
    "pieri": cmd_pieri,
    "straighten": cmd_straighten,
    "check": cmd_check,
}


def parse_config(args) -> JobConfig:
    return JobConfig(
        command=args.command,
        family=args.family,
        rank=args.rank,
        parabolic=frozenset(args.parabolic) if args.parabolic is not None else None,
        lam=args.lam,
        tau=getattr(args, "tau", "e"),
        kappa=getattr(args, "kappa", "e"),
        degree=getattr(args, "degree", 1),
        op=getattr(args, "op", None),
        fmt=args.fmt,
        seed=args.seed,
    )


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run one command; returns ``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(argv)
        cfg = parse_config(args)
        code, out = COMMANDS[args.command](args, cfg)
        return code, out, ""
    except UsageError as exc:
        return EXIT_USAGE, "", f"smt: error: {exc}\n"
    except BoundExceeded as exc:
        return EXIT_BOUND, "", f"smt: bound exceeded: {exc}\n"
    except (ValueError, KeyError) as exc:
        return EXIT_USAGE, "", f"smt: error: {exc}\n"


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
