"""Command-line front end; parsing and printing only, all math in the library."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import abaci, tableaux
from .api import SCHUR_METHODS, expand_to_schur, paths_report, schur_by_method
from .littlewood_richardson import lr_coefficient, schur_product
from .partitions import Partition, partitions_of
from .rsk import IntMatrix, burge, rsk, rsk_star
from .tableaux import Tableau, parse_word, shape_from_greene


class ParseError(Exception):
    """Bad input text; reported with exit code 2."""


def _parse(fn, *args):
    try:
        return fn(*args)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _coefficient_lines(table: dict[Partition, int], degree: int) -> list[str]:
    return [f"{lam} {table[lam]}" for lam in partitions_of(degree) if table.get(lam)]


def _cmd_schur(args) -> list[str]:
    lam = _parse(Partition.from_text, args.partition)
    return [str(schur_by_method(lam, args.vars, args.method))]


def _cmd_expand(args) -> list[str]:
    mu = _parse(Partition.from_text, args.mu)
    return _coefficient_lines(expand_to_schur(args.source, mu), mu.size())


def _cmd_kostka(args) -> list[str]:
    lam = _parse(Partition.from_text, args.shape)
    mu = _parse(Partition.from_text, args.content)
    if args.canonical:
        return str(tableaux.canonical_tableau(lam, mu)).splitlines()
    return [str(tableaux.kostka(lam, mu))]


def _cmd_lr(args) -> list[str]:
    alpha = _parse(Partition.from_text, args.alpha)
    beta = _parse(Partition.from_text, args.beta)
    if args.outer is not None:
        outer = _parse(Partition.from_text, args.outer)
        return [str(lr_coefficient(outer, alpha, beta))]
    table = schur_product(alpha, beta)
    return _coefficient_lines(table, alpha.size() + beta.size())


def _cmd_insert(args) -> list[str]:
    text = Path(args.tableau_file).read_text()
    t = _parse(Tableau.from_text, text)
    return str(tableaux.insert(t, args.letter)).splitlines()


def _cmd_pw(args) -> list[str]:
    word = _parse(parse_word, args.word)
    p = tableaux.p_tableau(word)
    lam, mu = shape_from_greene(word)
    lines = str(p).splitlines() if p.rows else []
    lines.append(f"shape {p.shape()}")
    lines.append(f"greene {lam} {mu}")
    return lines


def _cmd_rsk(args) -> list[str]:
    matrix = _parse(IntMatrix.from_text, args.matrix)
    if args.star:
        p, q = rsk_star(matrix)
    elif args.burge:
        p, q = burge(matrix)
    else:
        p, q = rsk(matrix)
    lines = ["P:"]
    lines += str(p).splitlines()
    lines.append("Q:")
    lines += str(q).splitlines()
    return lines


def _cmd_abacus(args) -> list[str]:
    w = _parse(abaci.LabeledAbacus.from_text, args.word)
    sign, shape, weight = abaci.abacus_stats(w)
    return [f"sign {sign}", f"shape {shape}", f"weight {weight}"]


def _cmd_paths(args) -> list[str]:
    lam = _parse(Partition.from_text, args.shape)
    inner = _parse(Partition.from_text, args.inner) if args.inner else None
    _, lines = paths_report(args.model, lam, args.vars, inner, args.limit)
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="Schur polynomial by any of five constructions")
    p.add_argument("partition")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--method", choices=SCHUR_METHODS, default="bialternant")
    p.set_defaults(handler=_cmd_schur)

    p = sub.add_parser("expand", help="expand a basis element in the Schur basis")
    p.add_argument("mu")
    p.add_argument("--from", dest="source", choices=("h", "e", "m", "s"), required=True)
    p.add_argument("--to", dest="target", choices=("s",), required=True)
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("kostka", help="Kostka number, or its canonical witness tableau")
    p.add_argument("shape")
    p.add_argument("content")
    p.add_argument("--canonical", action="store_true")
    p.set_defaults(handler=_cmd_kostka)

    p = sub.add_parser("lr", help="Littlewood-Richardson product table or coefficient")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("--outer")
    p.set_defaults(handler=_cmd_lr)

    p = sub.add_parser("insert", help="Schensted-insert a letter into a tableau file")
    p.add_argument("tableau_file")
    p.add_argument("letter", type=int)
    p.set_defaults(handler=_cmd_insert)

    p = sub.add_parser("pw", help="insertion tableau and Greene shape of a word")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_pw)

    p = sub.add_parser("rsk", help="insertion pair of an integer matrix")
    p.add_argument("matrix")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--star", action="store_true")
    group.add_argument("--burge", action="store_true")
    p.set_defaults(handler=_cmd_rsk)

    p = sub.add_parser("paths", help="ASCII non-crossing path systems")
    p.add_argument("--model", choices=("h", "e", "giambelli"), required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--inner")
    p.add_argument("--limit", type=int, default=3)
    p.set_defaults(handler=_cmd_paths)

    p = sub.add_parser("abacus", help="sign, shape and weight of a labeled abacus")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_abacus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        lines = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = "\n".join(lines)
    sys.stdout.write(out + "\n" if out else "\n")
    return 0


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
