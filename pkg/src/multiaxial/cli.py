"""Command line front end.

Exit codes: 0 success, 2 usage error (argparse's own convention), 3 an
internal contradiction surfaced, 4 a verification or agreement failure.

JSON documents share one envelope: schema_version, tool, command, then
the command specific payload.  Key order is fixed and nothing in the
output depends on wall clock, environment or hash seeds, so repeated
runs are byte identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .family import Family
from .homology import integral_homology
from .l_homology import (
    reduced_l_homology,
    reduced_l_homology_oracle,
    relative_l_homology,
    relative_l_homology_oracle,
)
from .orbit_cells import (
    CellFiltration,
    build_chain_complex,
    orbit_space_dimension,
)
from .structure_set import (
    ActionSpec,
    InternalContradictionError,
    compute_structure_set,
    normalize,
)
from .verification import run_verification

SCHEMA_VERSION = 1


def _document(command: str, payload: dict) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "multiaxial", "version": __version__},
        "command": command,
    }
    doc.update(payload)
    return doc


def _emit(doc: dict):
    print(json.dumps(doc, indent=2))


def _spec_json(spec: ActionSpec) -> dict:
    return {
        "family": str(spec.family),
        "n": spec.n,
        "k": spec.k,
        "j": spec.j,
    }


def _add_spec_arguments(parser: argparse.ArgumentParser, with_j: bool):
    parser.add_argument("--family", required=True, help="U or Sp")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, required=True)
    if with_j:
        parser.add_argument("--j", type=int, default=0)
    parser.add_argument(
        "--format", choices=("table", "json"), default="table"
    )


def _parse_family(parser: argparse.ArgumentParser, text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_structure_set(parser, args) -> int:
    family = _parse_family(parser, args.family)
    if args.n < 0 or args.k < 0 or args.j < 0:
        parser.error("n, k, j must be nonnegative")
    spec = normalize(ActionSpec(family, args.n, args.k, args.j))
    report = compute_structure_set(spec)
    if args.format == "json":
        _emit(
            _document(
                "structure-set",
                {
                    "input": {
                        "family": str(family),
                        "n": args.n,
                        "k": args.k,
                        "j": args.j,
                    },
                    "normalized": dict(
                        _spec_json(spec),
                        trivial_action=spec.is_trivial,
                        branch=report.branch,
                    ),
                    "summands": [
                        {
                            "label": s.label,
                            "group": s.group.to_json(),
                            "source": s.source,
                        }
                        for s in report.summands
                    ],
                    "notes": list(report.notes),
                    "total": report.total.to_json(),
                },
            )
        )
        return 0
    print(f"structure set of {spec.describe()}")
    print(
        f"  normalized: family={spec.family} n={spec.n} k={spec.k} "
        f"j={spec.j}  branch={report.branch}"
    )
    width = max((len(s.label) for s in report.summands), default=0)
    for s in report.summands:
        print(f"  {s.label.ljust(width)}  {s.group}")
    for note in report.notes:
        print(f"  note: {note}")
    print(f"  total: {report.total}")
    return 0


def cmd_homology(parser, args) -> int:
    family = _parse_family(parser, args.family)
    if args.n < 1 or args.k < args.n:
        parser.error(f"need k >= n >= 1, got n={args.n}, k={args.k}")
    n, k = args.n, args.k
    d = orbit_space_dimension(family, n, k)
    if args.variant == "integral-all":
        complex_ = build_chain_complex(family, n, k)
        groups = integral_homology(complex_)
        if args.format == "json":
            _emit(
                _document(
                    "homology",
                    {
                        "variant": "integral-all",
                        "input": {"family": str(family), "n": n, "k": k},
                        "dimension": d,
                        "groups": {
                            str(p): g.to_json() for p, g in sorted(groups.items())
                        },
                    },
                )
            )
        else:
            print(
                f"integral homology of the orbit space, family={family} "
                f"n={n} k={k} (dimension {d})"
            )
            for p, g in sorted(groups.items()):
                print(f"  H_{p} = {g}")
        return 0
    if args.variant == "relative":
        closed = relative_l_homology(family, n, k)
        oracle = relative_l_homology_oracle(family, n, k)
    else:
        closed = reduced_l_homology(family, n, k)
        oracle = reduced_l_homology_oracle(family, n, k)
    agree = closed == oracle
    if args.format == "json":
        _emit(
            _document(
                "homology",
                {
                    "variant": args.variant,
                    "input": {"family": str(family), "n": n, "k": k},
                    "dimension": d,
                    "closed_form": closed.to_json(),
                    "oracle": oracle.to_json(),
                    "agree": agree,
                },
            )
        )
    else:
        print(
            f"{args.variant} top-degree homology, family={family} n={n} "
            f"k={k} (degree {d})"
        )
        print(f"  closed form: {closed}")
        print(f"  oracle:      {oracle}")
        print(f"  agree:       {'yes' if agree else 'NO'}")
    return 0 if agree else 4


def cmd_verify(parser, args) -> int:
    if args.max_n < 1 or args.max_k < 1:
        parser.error("--max-n and --max-k must be at least 1")
    if args.max_j < 0:
        parser.error("--max-j must be nonnegative")
    families = []
    for name in args.families.split(","):
        families.append(_parse_family(parser, name))
    summary = run_verification(
        args.max_n, args.max_k, args.max_j, tuple(families)
    )
    print(
        f"verification grid: n<={args.max_n} k<={args.max_k} "
        f"j<={args.max_j} families={args.families}"
    )
    for check, (passed, failed) in summary.by_check().items():
        status = "ok" if failed == 0 else "FAIL"
        print(f"  {check}: {passed} passed, {failed} failed  [{status}]")
    print(f"total: {summary.passed} passed, {summary.failed} failed")
    if not summary.ok:
        failure = summary.first_failure()
        print(f"first failure: {failure.check} at {failure.params}")
        if failure.detail:
            print(f"  detail: {failure.detail}")
        return 4
    return 0


def cmd_export_complex(parser, args) -> int:
    family = _parse_family(parser, args.family)
    if args.n < 1 or args.k < args.n:
        parser.error(f"need k >= n >= 1, got n={args.n}, k={args.k}")
    try:
        filtration = CellFiltration(args.min_rank, args.max_rank)
    except ValueError as exc:
        parser.error(str(exc))
    complex_ = build_chain_complex(family, args.n, args.k, filtration)
    degrees = [
        {
            "degree": p,
            "generators": list(complex_.generators(p)),
            "boundary": complex_.boundary_matrix(p),
        }
        for p in complex_.degrees()
    ]
    payload = {
        "input": {
            "family": str(family),
            "n": args.n,
            "k": args.k,
            "min_rank": args.min_rank,
            "max_rank": args.max_rank,
        },
        "total_cells": complex_.total_cells(),
        "euler_characteristic": complex_.euler_characteristic(),
        "degrees": degrees,
    }
    if args.format == "json":
        _emit(_document("export-complex", payload))
    else:
        print(
            f"chain complex, family={family} n={args.n} k={args.k} "
            f"ranks {args.min_rank or 1}..{args.max_rank or args.n}"
        )
        for entry in degrees:
            gens = " ".join(entry["generators"])
            print(f"  degree {entry['degree']}: {gens}")
            for row in entry["boundary"]:
                print(f"    {row}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiaxial",
        description=(
            "structure sets of multiaxial representation spheres, with "
            "independent homology cross-checks"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"multiaxial {__version__}"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_set = sub.add_parser(
        "structure-set", help="decompose one structure set"
    )
    _add_spec_arguments(p_set, with_j=True)
    p_set.set_defaults(func=cmd_structure_set)

    p_hom = sub.add_parser(
        "homology", help="closed form vs oracle homology groups"
    )
    _add_spec_arguments(p_hom, with_j=False)
    p_hom.add_argument(
        "--variant",
        choices=("relative", "reduced", "integral-all"),
        default="relative",
    )
    p_hom.set_defaults(func=cmd_homology)

    p_verify = sub.add_parser(
        "verify", help="run the cross-check grid"
    )
    p_verify.add_argument("--max-n", type=int, default=4)
    p_verify.add_argument("--max-k", type=int, default=8)
    p_verify.add_argument("--max-j", type=int, default=2)
    p_verify.add_argument("--families", default="U,Sp")
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser(
        "export-complex", help="dump a cellular chain complex"
    )
    _add_spec_arguments(p_export, with_j=False)
    p_export.add_argument("--min-rank", type=int, default=None)
    p_export.add_argument("--max-rank", type=int, default=None)
    p_export.set_defaults(func=cmd_export_complex)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except InternalContradictionError as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
