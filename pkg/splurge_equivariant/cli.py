"""
splurge_equivariant CLI - build, inspect and check finite equivariant models.

Object verbs (build, reduce, nerve, coherent-nerve, orbit-cat, diag, total, row0)
write canonical JSON. Report verbs (homology, quasicat, segal, complete, check)
print text unless --json is given.

Exit codes: 0 pass, 1 check failure, 2 input error, 3 search budget exceeded.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from . import __version__
from .bisimp import (
    TruncBiSSet,
    build_P,
    build_Q,
    completeness_evidence,
    const_space,
    diagonal,
    reduce,
    row0,
    segal_check,
    tensor,
    total,
    transpose,
    walking_isomorphism_space,
)
from .categories import FiniteCategory, group_category, ordinal
from .config import DEFAULT_CONFIG, CheckSuiteConfig, EquivariantConfig
from .exceptions import (
    SplurgeEquivariantConfigurationError,
    SplurgeEquivariantError,
    SplurgeEquivariantSearchBudgetExceededError,
    SplurgeEquivariantTypeError,
    SplurgeEquivariantValueError,
)
from .file_utils import JsonDocumentReader, YamlConfigReader, dumps_canonical
from .equivariant import tensor_orbit
from .fingroup import group_to_json, orbit_category, subgroup_from_names
from .homology import homology
from .reports import POSITIVE_VERDICTS, ReportRenderer
from .scat import SCategory, coherent_nerve, discrete_scategory
from .serialization import decode, encode
from .simpset import E, TruncSSet, boundary, circle, horn, is_quasicategory, nerve, point, standard_simplex
from .simpset import subdivided_circle
from .suite import CheckSuite, load_group

DOMAINS = ["cli"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

_LOGGER = logging.getLogger(__name__)

# name -> (argument count, builder(args, trunc))
_CONSTRUCTIONS: dict[str, tuple[int, Callable[[list[str], int], Any]]] = {
    "simplex": (1, lambda a, N: standard_simplex(int(a[0]), N)),
    "boundary": (1, lambda a, N: boundary(int(a[0]), N)),
    "horn": (2, lambda a, N: horn(int(a[0]), int(a[1]), N)),
    "point": (0, lambda a, N: point(N)),
    "circle": (0, lambda a, N: circle(N)),
    "subdivided-circle": (1, lambda a, N: subdivided_circle(int(a[0]), N)),
    "E": (0, lambda a, N: E(N)),
    "Et": (0, lambda a, N: walking_isomorphism_space(N)),
    "transpose": (1, lambda a, N: transpose(standard_simplex(int(a[0]), N))),
    "P": (2, lambda a, N: build_P(int(a[0]), int(a[1]), N)),
    "Q": (2, lambda a, N: build_Q(int(a[0]), int(a[1]), N)),
    "group": (1, lambda a, N: load_group(a[0])),
    "nerve": (1, lambda a, N: nerve(ordinal(int(a[0])), N)),
    "group-nerve": (1, lambda a, N: nerve(group_category(load_group(a[0])), N)),
    "coherent-nerve": (1, lambda a, N: coherent_nerve(discrete_scategory(ordinal(int(a[0])), N), min(N, 2))),
    "reduced-boundary": (1, lambda a, N: reduce(const_space(boundary(int(a[0]), N)))),
    "tensor": (2, lambda a, N: tensor(transpose(standard_simplex(int(a[0]), N)), standard_simplex(int(a[1]), N))),
    "orbit-tensor": (3, lambda a, N: _orbit_tensor(a[0], a[1], int(a[2]), N)),
}


def _orbit_tensor(group: str, members: str, n: int, trunc: int) -> Any:
    """``G/H ⊗ Δ[n]`` with H given by comma-separated element names."""
    G = load_group(group)
    return tensor_orbit(G, subgroup_from_names(G, members.split(",")), standard_simplex(n, trunc)).gobject


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, help="Truncation level N (default: SPLURGE_EQ_DEFAULT_TRUNC or 3)")
    common.add_argument("--budget", type=int, help="Search-node budget per enumeration")
    common.add_argument("--seed", type=int, help="Base random seed")
    common.add_argument("--family", help='Subgroup family: "all" or a JSON list of member-name lists')
    common.add_argument("--json", action="store_true", help="Print reports as canonical JSON")
    common.add_argument("-o", "--output", help="Write the JSON result to this file")
    common.add_argument("--workers", type=int, help="Worker threads for the check suite")
    common.add_argument("--verbose", action="store_true", help="Enable debug logging")
    return common


def _build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="splurge-equivariant",
        description="Finite models of equivariant (∞,1)-categories: constructions and checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Export the inner horn V[2,1]
  splurge-equivariant build horn 2 1 -o horn21.json

  # Homology of a simplicial set
  splurge-equivariant homology boundary3.json

  # Run a check suite
  splurge-equivariant check suite.yaml --workers 4 --json
        """,
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"splurge-equivariant {__version__}",
        help="Print version and exit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", parents=[common], help="Export a standard construction")
    build.add_argument("name", choices=sorted([*_CONSTRUCTIONS, "orbit-category"]))
    build.add_argument("args", nargs="*", help="Construction arguments")

    hom = sub.add_parser("homology", parents=[common], help="Integral homology of a simplicial set")
    hom.add_argument("input")
    hom.add_argument("--up-to", type=int, help="Highest degree")

    qcat = sub.add_parser("quasicat", parents=[common], help="Inner-horn filling check")
    qcat.add_argument("input")
    qcat.add_argument("--max-dim", type=int, help="Largest horn dimension (default: min(N, 3))")

    segal = sub.add_parser("segal", parents=[common], help="Segal maps of a simplicial space")
    segal.add_argument("input")
    segal.add_argument("--k", type=int, help="Largest Segal index (default: N)")

    sub.add_parser("complete", parents=[common], help="Completeness evidence").add_argument("input")
    sub.add_parser("reduce", parents=[common], help="Reduction to a Segal precategory").add_argument("input")
    sub.add_parser("nerve", parents=[common], help="Nerve of a finite category").add_argument("input")

    cnerve = sub.add_parser("coherent-nerve", parents=[common], help="Homotopy coherent nerve")
    cnerve.add_argument("input")
    cnerve.add_argument("--up-to", type=int, default=2, help="Highest simplex dimension (default: 2)")

    sub.add_parser("orbit-cat", parents=[common], help="Orbit category of a group").add_argument("group")

    check = sub.add_parser("check", parents=[common], help="Run a check-suite configuration")
    check.add_argument("config")

    for verb in ("diag", "total", "row0"):
        sub.add_parser(verb, parents=[common], help=f"{verb} of a simplicial space").add_argument("input")
    return parser


# Helpers


def _settings(args: argparse.Namespace) -> tuple[int, int]:
    env = EquivariantConfig.from_env()
    trunc = env.default_trunc if args.trunc is None else args.trunc
    budget = env.search_budget if args.budget is None else args.budget
    return trunc, budget


def _load(path: str) -> Any:
    return decode(JsonDocumentReader().read(path))


def _load_as(path: str, kind: type, label: str) -> Any:
    value = _load(path)
    if not isinstance(value, kind):
        raise SplurgeEquivariantTypeError(f"{path} does not hold a {label}", details={"field": "kind"})
    return value


def _write_object(args: argparse.Namespace, payload: dict[str, Any]) -> int:
    if args.output:
        JsonDocumentReader().write(args.output, payload)
        print(f"Wrote {args.output}")
    else:
        print(dumps_canonical(payload), end="")
    return EXIT_OK


def _write_report(args: argparse.Namespace, payload: dict[str, Any], text: str, *, passed: bool = True) -> int:
    if args.output:
        JsonDocumentReader().write(args.output, payload)
    if args.json:
        print(dumps_canonical(payload), end="")
    else:
        print(text)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _orbit_payload(G: Any) -> dict[str, Any]:
    return {"kind": "orbit-category", "group_table": group_to_json(G), **orbit_category(G).to_dict()}


def _parse_family(text: str | None) -> str | list[list[str]] | None:
    if text is None or text == "all":
        return text
    try:
        family = json.loads(text)
    except json.JSONDecodeError as e:
        raise SplurgeEquivariantConfigurationError(
            "--family must be 'all' or a JSON list of member lists", details={"details": e.msg}
        ) from e
    if not isinstance(family, list):
        raise SplurgeEquivariantConfigurationError("--family must be 'all' or a JSON list of member lists")
    return family


# Verbs


def _cmd_build(args: argparse.Namespace) -> int:
    trunc, _ = _settings(args)
    if args.name == "orbit-category":
        if len(args.args) != 1:
            raise SplurgeEquivariantValueError("build orbit-category takes a group name or file")
        return _write_object(args, _orbit_payload(load_group(args.args[0])))
    count, builder = _CONSTRUCTIONS[args.name]
    if len(args.args) != count:
        raise SplurgeEquivariantValueError(f"build {args.name} takes {count} argument(s), got {len(args.args)}")
    try:
        value = builder(args.args, trunc)
    except ValueError as e:
        raise SplurgeEquivariantValueError(f"Invalid arguments for {args.name}: {args.args}") from e
    return _write_object(args, encode(value))


def _cmd_homology(args: argparse.Namespace) -> int:
    value = _load(args.input)
    notes = []
    if isinstance(value, TruncBiSSet):
        value = diagonal(value)
        notes.append("computed on the diagonal")
    if not isinstance(value, TruncSSet):
        raise SplurgeEquivariantTypeError(f"{args.input} does not hold a simplicial set")
    result = homology(value, args.up_to)
    payload = {**result.to_dict(), "notes": notes}
    return _write_report(args, payload, ReportRenderer().render_homology(Path(args.input).name, result.to_dict()))


def _cmd_quasicat(args: argparse.Namespace) -> int:
    X = _load_as(args.input, TruncSSet, "simplicial set")
    _, budget = _settings(args)
    max_dim = min(X.trunc, 3) if args.max_dim is None else args.max_dim
    report = is_quasicategory(X, max_dim, budget=budget)
    payload = report.to_dict()
    text = ReportRenderer().render_summary(f"Inner-horn check of {Path(args.input).name}", payload)
    return _write_report(args, payload, text, passed=report.passed)


def _cmd_segal(args: argparse.Namespace) -> int:
    W = _load_as(args.input, TruncBiSSet, "simplicial space")
    top = W.trunc if args.k is None else args.k
    reports = [segal_check(W, k) for k in range(2, top + 1)]
    passed = all(r.verdict in POSITIVE_VERDICTS for r in reports)
    payload = {"passed": passed, "segal_maps": [r.to_dict() for r in reports]}
    summary = {f"k={r.k}": r.verdict for r in reports}
    text = ReportRenderer().render_summary(f"Segal maps of {Path(args.input).name}", summary)
    return _write_report(args, payload, text, passed=passed)


def _cmd_complete(args: argparse.Namespace) -> int:
    W = _load_as(args.input, TruncBiSSet, "simplicial space")
    _, budget = _settings(args)
    report = completeness_evidence(W, budget=budget)
    payload = report.to_dict()
    text = ReportRenderer().render_summary(f"Completeness of {Path(args.input).name}", payload)
    return _write_report(args, payload, text, passed=report.verdict in POSITIVE_VERDICTS)


def _cmd_reduce(args: argparse.Namespace) -> int:
    return _write_object(args, encode(reduce(_load_as(args.input, TruncBiSSet, "simplicial space"))))


def _cmd_nerve(args: argparse.Namespace) -> int:
    trunc, _ = _settings(args)
    return _write_object(args, encode(nerve(_load_as(args.input, FiniteCategory, "finite category"), trunc)))


def _cmd_coherent_nerve(args: argparse.Namespace) -> int:
    trunc, budget = _settings(args)
    value = _load(args.input)
    if isinstance(value, FiniteCategory):
        value = discrete_scategory(value, trunc)
    if not isinstance(value, SCategory):
        raise SplurgeEquivariantTypeError(f"{args.input} does not hold a category or simplicial category")
    return _write_object(args, encode(coherent_nerve(value, args.up_to, budget=budget)))


def _cmd_orbit_cat(args: argparse.Namespace) -> int:
    G = load_group(args.group)
    if args.output or args.json:
        return _write_object(args, _orbit_payload(G))
    O = orbit_category(G)  # noqa: N806
    summary = {
        "objects": len(O.objects),
        **{f"hom({i},{j})": len(maps) for (i, j), maps in sorted(O.homs.items())},
    }
    print(ReportRenderer().render_summary(f"Orbit category of {G.name}", summary))
    return EXIT_OK


def _cmd_slice(args: argparse.Namespace) -> int:
    W = _load_as(args.input, TruncBiSSet, "simplicial space")
    build = {"diag": diagonal, "total": total, "row0": row0}[args.command]
    return _write_object(args, encode(build(W)))


def _cmd_check(args: argparse.Namespace) -> int:
    path = Path(args.config)
    data = YamlConfigReader().read(path)
    overrides = {"seed": args.seed, "budget": args.budget, "trunc": args.trunc, "family": _parse_family(args.family)}
    data.update({key: value for key, value in overrides.items() if value is not None})
    config = CheckSuiteConfig.from_dict(data, base_dir=path.parent)
    _LOGGER.debug(f"Check configuration: {config.to_dict()}")
    workers = args.workers or EquivariantConfig.from_env().workers
    report = CheckSuite(config).run(workers=workers)
    payload = report.to_dict()
    if args.output:
        JsonDocumentReader().write(args.output, payload)
    if args.json:
        print(dumps_canonical(payload), end="")
    else:
        print(ReportRenderer().render_suite(report))
    if report.passed:
        return EXIT_OK
    failure = report.first_failure
    if failure is not None:
        print(
            f"First failing cell: {failure.condition} H={failure.H} K={failure.K} "
            f"generator={failure.generator} seed={failure.seed} ({failure.verdict})",
            file=sys.stderr,
        )
    return EXIT_BUDGET if report.budget_exhausted else EXIT_CHECK_FAILED


_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "build": _cmd_build,
    "homology": _cmd_homology,
    "quasicat": _cmd_quasicat,
    "segal": _cmd_segal,
    "complete": _cmd_complete,
    "reduce": _cmd_reduce,
    "nerve": _cmd_nerve,
    "coherent-nerve": _cmd_coherent_nerve,
    "orbit-cat": _cmd_orbit_cat,
    "check": _cmd_check,
    "diag": _cmd_slice,
    "total": _cmd_slice,
    "row0": _cmd_slice,
}


def run(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments and run one verb.

    Returns:
        Process exit code
    """
    args = _build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")
    try:
        DEFAULT_CONFIG.hom_warning_threshold = EquivariantConfig.from_env().hom_warning_threshold
        return _COMMANDS[args.command](args)
    except SplurgeEquivariantSearchBudgetExceededError as e:
        print(f"Search budget exceeded: {e.message}", file=sys.stderr)
        return EXIT_BUDGET
    except SplurgeEquivariantError as e:
        field = (e.details or {}).get("field")
        where = f" (field: {field})" if field else ""
        print(f"Error: {e.message}{where}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
