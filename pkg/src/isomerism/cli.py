"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 internal inconsistency.  Errors are written to stderr as a JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .genetic import adjacent_pairs, genetic_digraph, identify, to_dot, to_table
from .groups import PRESETS, PermGroup, group_from_strings, preset, symmetric_group, subgroup_lattice
from .inverse import corollary_report, load_constraints, solve
from .perm import CycleParseError
from .tabloids import (InternalConsistencyError, Partition, burnside_count, orbit_space, partitions,
                       verify_linear_system)

EXIT_OK, EXIT_VALIDATION, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3

DEFAULT_IDENTIFY_SHAPES = ("4,2", "3,3", "4,1,1")


class ValidationError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


def _shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}: {exc}") from None


def _group_args(p: argparse.ArgumentParser):
    g = p.add_argument_group("group")
    g.add_argument("--group", action="append", default=[], metavar="CYCLES",
                   help="generator in cycle notation; repeat or separate with ';'")
    g.add_argument("--preset", metavar="NAME", help=f"named generator set: {', '.join(sorted(PRESETS))}")
    g.add_argument("--degree", type=int, help="number of sites (default: inferred from shapes, else 6)")


def _output_args(p: argparse.ArgumentParser, formats=("json", "table"), default="table"):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="isomerism",
                     description="Substitution isomer counting with permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of orbits n for one or more shapes")
    _group_args(p)
    p.add_argument("--shape", type=_shape, action="append", default=[], required=True)
    _output_args(p)

    p = sub.add_parser("orbits", help="orbit decomposition of one shape")
    _group_args(p)
    p.add_argument("--shape", type=_shape, required=True)
    _output_args(p)

    p = sub.add_parser("census", help="cycle-type census of the group")
    _group_args(p)
    _output_args(p)

    p = sub.add_parser("genetic", help="digraph of single substitutions between two shapes")
    _group_args(p)
    p.add_argument("--upper", type=_shape, required=True)
    p.add_argument("--lower", type=_shape, required=True)
    p.add_argument("--verbose", action="store_true", help="include edge multiplicities and orbits")
    _output_args(p, ("json", "dot", "table"))

    p = sub.add_parser("identify", help="blocks of orbits told apart by genetic neighbours")
    _group_args(p)
    p.add_argument("--shape", type=_shape, action="append", default=[],
                   help=f"shapes to include (default {' '.join(DEFAULT_IDENTIFY_SHAPES)})")
    _output_args(p, ("json", "dot", "table"))

    p = sub.add_parser("inverse", help="subgroup classes satisfying count constraints")
    p.add_argument("--constraints", required=True, metavar="FILE", help="JSON list of constraints")
    p.add_argument("--degree", type=int, help="default: inferred from the constraint shapes")
    p.add_argument("--transitive-only", action="store_true")
    _output_args(p, default="json")

    p = sub.add_parser("verify", help="check the orbit-counting system and Burnside against enumeration")
    _group_args(p)
    p.add_argument("--all-classes", action="store_true",
                   help="cross-check every subgroup class of S_d instead of one group")
    _output_args(p)
    return parser


def _resolve_degree(args, shapes: Sequence[Partition]) -> int:
    degrees = {lam.degree for lam in shapes}
    if args.degree is not None:
        degrees.add(args.degree)
    if len(degrees) > 1:
        raise ValidationError(f"inconsistent degrees {sorted(degrees)} from shapes/--degree")
    return degrees.pop() if degrees else 6


def _resolve_group(args, shapes: Sequence[Partition] = ()) -> PermGroup:
    degree = _resolve_degree(args, shapes)
    if args.preset and args.group:
        raise ValidationError("give either --group or --preset, not both")
    if args.preset:
        if args.preset not in PRESETS:
            raise KeyError(args.preset)
        if degree != 6:
            raise ValidationError(f"preset {args.preset} has degree 6, not {degree}")
        return preset(args.preset)
    texts = [t.strip() for g in args.group for t in g.split(";") if t.strip()]
    if not texts:
        raise ValidationError("no group given: use --group or --preset "
                              f"(presets: {', '.join(sorted(PRESETS))})")
    return group_from_strings(texts, degree)


def _emit(text: str, args):
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def cmd_count(args) -> int:
    G = _resolve_group(args, args.shape)
    counts = [(lam, burnside_count(G, lam)) for lam in args.shape]
    if args.format == "json":
        _emit(_dump({"group": G.to_json(),
                     "counts": [{"shape": list(l.parts), "n": n} for l, n in counts]}), args)
    elif len(counts) == 1:
        _emit(str(counts[0][1]), args)
    else:
        _emit("\n".join(f"{l}\t{n}" for l, n in counts), args)
    return EXIT_OK


def cmd_orbits(args) -> int:
    G = _resolve_group(args, [args.shape])
    space = orbit_space(G, args.shape)
    if args.format == "json":
        _emit(_dump(space.to_json()), args)
    else:
        lines = [f"{space.count} orbits of shape {space.shape} under a group of order {G.order}"]
        for o in space:
            lines.append(f"{o.label}_{space.shape}  size {o.size}  rep {o.representative}")
            lines.append("    " + " ".join(map(str, o.members)))
        _emit("\n".join(lines), args)
    return EXIT_OK


def cmd_census(args) -> int:
    G = _resolve_group(args)
    if args.format == "json":
        _emit(_dump({"group": G.to_json(), "census": G.census.to_json()}), args)
    else:
        lines = [f"order {G.order}"] + [f"{ct}\t{n}" for ct, n in G.census.items()]
        _emit("\n".join(lines), args)
    return EXIT_OK


def cmd_genetic(args) -> int:
    G = _resolve_group(args, [args.upper, args.lower])
    try:
        dg = genetic_digraph(G, args.upper, args.lower)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    if args.format == "json":
        _emit(_dump(dg.to_json(verbose=args.verbose)), args)
    elif args.format == "dot":
        _emit(to_dot([dg]), args)
    else:
        _emit(to_table(dg), args)
    return EXIT_OK


def cmd_identify(args) -> int:
    shapes = args.shape or [Partition.parse(s) for s in DEFAULT_IDENTIFY_SHAPES]
    G = _resolve_group(args, shapes)
    if not adjacent_pairs(shapes):
        raise ValidationError("no two of the given shapes are one simple move apart")
    result = identify(G, shapes)
    if args.format == "json":
        _emit(_dump(result.to_json()), args)
    elif args.format == "dot":
        _emit(to_dot(result.digraphs), args)
    else:
        lines = []
        for lam, part in result.partitions.items():
            blocks = "  ".join("{" + ",".join(b) + "}" for b in part.blocks)
            lines.append(f"{str(lam):<10}{blocks}")
        _emit("\n".join(lines), args)
    return EXIT_OK


def cmd_inverse(args) -> int:
    try:
        constraints = load_constraints(args.constraints)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"cannot read constraints: {exc}") from None
    degree = _resolve_degree(args, [c.shape for c in constraints])
    try:
        report = solve(constraints, degree, transitive_only=args.transitive_only)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    print(json.dumps({"search_stats": report.search_stats}), file=sys.stderr)
    if args.format == "json":
        _emit(_dump(report.to_json()), args)
    else:
        blocks = [f"{len(report.classes)} classes satisfy " + ", ".join(map(str, constraints))]
        for cls in report.classes:
            gens = ", ".join(g.format() for g in cls.representative.generators)
            blocks.append(f"<{gens}>\n" + corollary_report(cls).format().rstrip())
        _emit("\n\n".join(blocks), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    lines = []
    failed = False
    if args.all_classes:
        degree = args.degree or 6
        groups = list(subgroup_lattice(degree).representatives)
    else:
        G = _resolve_group(args)
        degree = G.degree
        groups = [G]
    shapes = partitions(degree)
    mismatches = []
    for G in groups:
        for lam in shapes:
            n_b, n_e = burnside_count(G, lam), orbit_space(G, lam).count
            if n_b != n_e:
                mismatches.append((G, lam, n_b, n_e))
    failed |= bool(mismatches)
    systems = []
    if degree == 6:
        targets = groups if not args.all_classes else [preset(p) for p in PRESETS] + [symmetric_group(6)]
        systems = [verify_linear_system(G) for G in targets]
        failed |= not all(r.ok for r in systems)
    if args.format == "json":
        payload = {"burnside_vs_enumeration": {"groups": len(groups), "shapes": len(shapes),
                                               "mismatches": [{"group": G.to_json(), "shape": str(l),
                                                               "burnside": b, "enumerated": e}
                                                              for G, l, b, e in mismatches]},
                   "linear_system": [r.to_json() for r in systems], "ok": not failed}
        _emit(_dump(payload), args)
    else:
        lines.append(f"burnside vs enumeration: {len(groups)} group(s) x {len(shapes)} shapes, "
                     f"{len(mismatches)} mismatch(es)")
        for r in systems:
            gens = ", ".join(g.format() for g in r.group.generators)
            res = " ".join(str(row.residual) for row in r.rows)
            lines.append(f"<{gens}> order {r.group.order}: residuals {res} -> {'ok' if r.ok else 'FAIL'}")
            for c in r.checks:
                state = "n/a" if not c.applicable else ("ok" if c.holds else "FAIL")
                lines.append(f"    {c.name}: {state} ({c.detail})")
        lines.append("PASS" if not failed else "FAIL")
        _emit("\n".join(lines), args)
    return EXIT_VERIFY if failed else EXIT_OK


COMMANDS = {"count": cmd_count, "orbits": cmd_orbits, "census": cmd_census, "genetic": cmd_genetic,
            "identify": cmd_identify, "inverse": cmd_inverse, "verify": cmd_verify}


def _fail(kind: str, message: str, code: int, **extra) -> int:
    print(json.dumps({"error": {"type": kind, "message": message, **extra}}), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_VALIDATION
    except ValidationError as exc:
        return _fail("validation_error", str(exc), EXIT_VALIDATION)
    try:
        return COMMANDS[args.command](args)
    except CycleParseError as exc:
        return _fail("parse_error", str(exc), EXIT_VALIDATION, text=exc.text, position=exc.position)
    except KeyError as exc:
        return _fail("unknown_preset", f"unknown preset {exc.args[0]!r}", EXIT_VALIDATION,
                     presets=sorted(PRESETS))
    except (ValidationError, ValueError) as exc:
        return _fail("validation_error", str(exc), EXIT_VALIDATION)
    except InternalConsistencyError as exc:
        return _fail("internal_inconsistency", str(exc), EXIT_INTERNAL)


if __name__ == "__main__":
    sys.exit(main())
