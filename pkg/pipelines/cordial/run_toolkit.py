"""Command-line front end for the H-cordial labeling toolkit.

Subcommands: gen, label, verify, search, catalog, hamiltonian, export-dot.
Results go to stdout and diagnostics to stderr, so commands chain:

    hcordial gen --family wheel --n 5 | hcordial label --kind h | hcordial verify --kind h

Exit codes:
    0   success (valid / found / Hamiltonian / all claims pass)
    1   negative answer (invalid / exhausted / not Hamiltonian / a claim failed)
    2   a documented precondition or obstruction rejected the input
    3   search stopped at its budget without a decision
    64  malformed flags or input files
    70  internal consistency failure (a construction or witness did not verify)
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Optional

# Add src directory to Python path
ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "src"))

import catalog
import config
from constructors import (
    h2_cordial_complete,
    h2_cordial_wheel,
    h_cordial_complete,
    h_cordial_wheel,
    semi_h_tree,
    zero_m,
)
from errors import (
    AlphabetError,
    ConstructionError,
    GraphError,
    HCordialError,
    PreconditionError,
    SearchInvariantError,
    UnknownEntryError,
)
from graphs import (
    FAMILIES,
    Graph,
    complete_graph,
    family_graph,
    hamiltonian_cycle,
    is_tree,
    parse_graph,
    random_tree,
    serialize_graph,
    wheel_graph,
)
from labeling import (
    KindName,
    Labeling,
    LabelingKind,
    obstruction,
    parse_labeled,
    serialize_labeled,
    to_dot,
    verify,
)
from loaders.filesystem import atomic_write_text
from logging_config import (
    get_logger,
    log_error_with_context,
    log_run_end,
    log_run_start,
    setup_logging,
)
from oracle import Decision, SearchConfig, decide, enumerate_labelings

logger = get_logger("hcordial.cli")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PRECONDITION = 2
EXIT_UNDECIDED = 3
EXIT_USAGE = 64
EXIT_INTERNAL = 70

GEN_FAMILIES = FAMILIES + ("random-tree",)
LABEL_KINDS = ("h", "semi-h", "zero-m", "h2")
VERIFY_KINDS = ("h", "semi-h", "zero-m", "hk")


class UsageError(HCordialError):
    """Malformed flags or unreadable input."""


class ToolkitArgumentParser(argparse.ArgumentParser):
    """argparse with the toolkit's usage exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# Input and output helpers


def _read_text(path: Optional[str]) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        try:
            atomic_write_text(out, text)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)


def _err(message: str) -> None:
    sys.stderr.write(message.rstrip("\n") + "\n")


def _kind(name: str, k: Optional[int]) -> LabelingKind:
    if name == "hk":
        if k is None:
            raise UsageError("--kind hk needs --k")
        return LabelingKind.hk_cordial(k)
    if name == "h2":
        return LabelingKind.hk_cordial(2)
    if k is not None:
        raise UsageError(f"--k only applies to --kind hk, not {name}")
    return LabelingKind(KindName(name))


def _input_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "family", None):
        if args.n is None:
            raise UsageError("--family needs --n")
        return family_graph(args.family, args.n)
    return parse_graph(_read_text(args.input))


# Subcommands


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random-tree":
        g = random_tree(args.n, seed=args.seed)
    else:
        g = family_graph(args.family, args.n)
    _emit(serialize_graph(g), args.out)
    return EXIT_OK


def _detect_family(g: Graph) -> Optional[tuple[str, int]]:
    if g.n >= 1 and g.edges == complete_graph(g.n).edges:
        return "complete", g.n
    if g.n >= 4 and g.edges == wheel_graph(g.n - 1).edges:
        return "wheel", g.n - 1
    return None


def _construct(kind_name: str, g: Graph) -> Labeling:
    """Pick the constructor for (kind, graph shape)."""
    if kind_name == "zero-m":
        return zero_m(g)
    if kind_name == "semi-h":
        if not is_tree(g):
            raise PreconditionError(
                "semi-H-cordial construction needs a tree", reason="not-a-tree"
            )
        return semi_h_tree(g)

    kind = _kind(kind_name, None)
    shape = _detect_family(g)
    if shape is not None:
        family, n = shape
        builders = {
            ("h", "complete"): h_cordial_complete,
            ("h", "wheel"): h_cordial_wheel,
            ("h2", "complete"): h2_cordial_complete,
            ("h2", "wheel"): h2_cordial_wheel,
        }
        return builders[(kind_name, family)](n)
    blocked = obstruction(g, kind)
    if blocked is not None:
        raise PreconditionError(blocked.detail, reason=blocked.reason, citation=blocked.citation)
    raise PreconditionError(
        f"no {kind} construction for this graph (only complete graphs and wheels)",
        reason="no-construction",
    )


def cmd_label(args: argparse.Namespace) -> int:
    g = _input_graph(args)
    labeling = _construct(args.kind, g)
    _emit(serialize_labeled(labeling), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    labeling = parse_labeled(_read_text(args.input))
    k = args.k
    if args.kind == "hk" and k is None:
        k = max((abs(x) for x in labeling.labels), default=1)
        _err(f"notice: --k not given, using k = {k} (largest |label| present)")
    report = verify(labeling, _kind(args.kind, k))
    if args.json:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.render() + "\n")
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_search(args: argparse.Namespace) -> int:
    g = parse_graph(_read_text(args.input))
    kind = _kind(args.kind, args.k)
    limit = None if args.enumerate == 0 else (args.enumerate or 1)
    cfg = SearchConfig(
        kind,
        canonical=args.canonical,
        limit=limit,
        budget=args.budget,
        workers=args.workers,
        prune_vertex=not args.no_prune,
        prune_cardinality=not args.no_prune,
        symmetry=args.symmetry,
    )
    outcome = enumerate_labelings(g, cfg) if args.enumerate is not None else decide(g, cfg)
    if args.json:
        sys.stdout.write(json.dumps(outcome.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(outcome.render() + "\n")
    return {
        Decision.FOUND: EXIT_OK,
        Decision.EXHAUSTED: EXIT_NEGATIVE,
        Decision.UNDECIDED: EXIT_UNDECIDED,
    }[outcome.decision]


def cmd_catalog(args: argparse.Namespace) -> int:
    options = catalog.CheckOptions(budget=args.budget, workers=args.workers)
    if args.action == "list":
        for entry in catalog.entries():
            sys.stdout.write(f"{entry.name}\t{entry.description}\n")
        return EXIT_OK
    if args.action in ("show", "check") and not args.name:
        raise UsageError(f"catalog {args.action} needs an entry name")
    if args.action == "show":
        sys.stdout.write(catalog.get_entry(args.name).to_text())
        return EXIT_OK
    if args.action == "check":
        reports = [catalog.check(args.name, options)]
    else:
        reports = catalog.check_all(options)
    if args.json:
        sys.stdout.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    else:
        sys.stdout.write("\n\n".join(r.render() for r in reports) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def cmd_hamiltonian(args: argparse.Namespace) -> int:
    g = parse_graph(_read_text(args.input))
    cycle = hamiltonian_cycle(g)
    if cycle is None:
        sys.stdout.write("not Hamiltonian\n")
        return EXIT_NEGATIVE
    sys.stdout.write("Hamiltonian cycle: " + " ".join(str(v) for v in cycle + [cycle[0]]) + "\n")
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    labeling = parse_labeled(_read_text(args.input))
    _emit(to_dot(labeling, name=args.name), args.out)
    return EXIT_OK


# Parser


def build_parser() -> ToolkitArgumentParser:
    parser = ToolkitArgumentParser(
        prog="hcordial",
        description="Construct, verify and search H-cordial family graph labelings",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="DEBUG logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a family graph in edge-list format")
    gen.add_argument("--family", required=True, choices=GEN_FAMILIES)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=None, help="seed for random-tree")
    gen.add_argument("--out")
    gen.set_defaults(handler=cmd_gen)

    label = sub.add_parser("label", help="run the constructor for a kind")
    label.add_argument("--kind", required=True, choices=LABEL_KINDS)
    source = label.add_mutually_exclusive_group()
    source.add_argument("--in", dest="input", help="graph file ('-' for stdin, the default)")
    source.add_argument("--family", choices=FAMILIES)
    label.add_argument("--n", type=int)
    label.add_argument("--out")
    label.set_defaults(handler=cmd_label)

    ver = sub.add_parser("verify", help="check a labeled graph against a definition")
    ver.add_argument("--kind", required=True, choices=VERIFY_KINDS)
    ver.add_argument("--k", type=int)
    ver.add_argument("--in", dest="input", help="labeled graph file ('-' for stdin)")
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(handler=cmd_verify)

    search = sub.add_parser("search", help="exhaustive search for a valid labeling")
    search.add_argument("--kind", required=True, choices=VERIFY_KINDS)
    search.add_argument("--k", type=int)
    search.add_argument("--in", dest="input", help="graph file ('-' for stdin)")
    search.add_argument("--enumerate", type=int, metavar="LIMIT", help="collect up to LIMIT witnesses (0 = all)")
    search.add_argument("--canonical", action="store_true")
    search.add_argument("--workers", type=int)
    search.add_argument("--budget", type=int)
    search.add_argument("--symmetry", action="store_true", help="fix the first edge positive")
    search.add_argument("--no-prune", action="store_true", help="visit every assignment")
    search.add_argument("--json", action="store_true")
    search.set_defaults(handler=cmd_search)

    cat = sub.add_parser("catalog", help="list, show or check catalog entries")
    cat.add_argument("action", choices=("list", "show", "check", "check-all"))
    cat.add_argument("name", nargs="?")
    cat.add_argument("--budget", type=int)
    cat.add_argument("--workers", type=int)
    cat.add_argument("--json", action="store_true")
    cat.set_defaults(handler=cmd_catalog)

    ham = sub.add_parser("hamiltonian", help="search for a spanning cycle")
    ham.add_argument("--in", dest="input", help="graph file ('-' for stdin)")
    ham.set_defaults(handler=cmd_hamiltonian)

    dot = sub.add_parser("export-dot", help="render a labeled graph as DOT")
    dot.add_argument("--in", dest="input", help="labeled graph file ('-' for stdin)")
    dot.add_argument("--name", default="G")
    dot.add_argument("--out")
    dot.set_defaults(handler=cmd_export_dot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging(
        level=config.LOG_LEVEL,
        log_file=config.LOG_FILE,
        json_format=config.LOG_JSON,
        verbose=args.verbose,
    )
    log_run_start(args.command)
    try:
        status = args.handler(args)
    except PreconditionError as exc:
        citation = f" ({exc.citation})" if exc.citation else ""
        _err(f"rejected [{exc.reason}]: {exc}{citation}")
        status = EXIT_PRECONDITION
    except AlphabetError as exc:
        _err(f"rejected [alphabet]: {exc}")
        status = EXIT_PRECONDITION
    except (ConstructionError, SearchInvariantError) as exc:
        log_error_with_context(exc, args.command)
        _err(f"internal error: {exc}")
        status = EXIT_INTERNAL
    except UnknownEntryError as exc:
        _err(f"error: {exc}")
        status = EXIT_USAGE
    except (UsageError, GraphError, ValueError) as exc:
        _err(f"error: {exc}")
        status = EXIT_USAGE
    log_run_end(args.command, exit_status=status)
    return status


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
