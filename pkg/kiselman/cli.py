"""
Command-line front end
kiselman 명령줄 인터페이스

Every subcommand takes ``-n/--rank``. Composite results print as JSON by
default, scalars as plain text. Exit codes: 0 success, 1 failed checks,
2 usage or parse errors, 3 resource limits.

Example:
    kiselman normalize -n 2 "1,2,1"
    kiselman check -n 3 --suite all --preset acceptance
    kiselman export-cayley-graph -n 3 --out k3.gv
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from .algebra.corner import corner_dimensions
from .algebra.element import SemigroupAlgebra
from .algebra.idempotents import primitive_idempotent
from .core.errors import KiselmanError, ResourceLimitError
from .core.io import dumps_csv, dumps_json, save_text
from .core.rewrite import normalize
from .core.words import all_contents, format_word, is_canonical, length_bound, parse_content, parse_word
from .pipeline import PRESETS, SUITES, run_pipeline
from .representations.faithful import KINDS, faithfulness_check
from .representations.matrices import matrix_to_json, psi
from .representations.polynomial import PolyMatrix, kappa, kappa_prime
from .semigroup.export import cayley_csv, cayley_dot, elements_json
from .semigroup.structure import GREEN_RELATIONS, green_classes, idempotent, nilpotent_subsemigroup
from .semigroup.table import SemigroupTable, enumerate_semigroup

logger = logging.getLogger("kiselman.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

FORMATS = ("json", "csv", "dot", "plain")

# first entry is the default
ALLOWED_FORMATS = {
    "normalize": ("plain", "json"),
    "size": ("plain", "json"),
    "check": ("json", "plain"),
    "elements": ("json", "csv", "plain"),
    "table": ("csv", "json"),
    "idempotents": ("json", "plain"),
    "green": ("json", "plain"),
    "nilpotent": ("json", "plain"),
    "repr": ("json",),
    "algebra-idempotents": ("json", "plain"),
    "corner-dims": ("json", "plain"),
    "export-cayley-graph": ("dot",),
}


@dataclass
class RunConfig:
    """Validated options of one invocation."""

    rank: int
    command: str
    format: str
    seed: Optional[int] = None
    element_cap: Optional[int] = None
    output_path: Optional[Path] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        allowed = ALLOWED_FORMATS[args.command]
        fmt = args.format or allowed[0]
        if fmt not in allowed:
            raise ValueError(f"'{args.command}' supports --format {', '.join(allowed)}; got '{fmt}'")
        if args.element_cap is not None and args.element_cap < 1:
            raise ValueError("--element-cap must be positive")
        return cls(
            rank=args.rank,
            command=args.command,
            format=fmt,
            seed=args.seed,
            element_cap=args.element_cap,
            output_path=Path(args.out) if args.out else None,
        )

    def table(self) -> SemigroupTable:
        return enumerate_semigroup(self.rank, element_cap=self.element_cap)


@dataclass
class Outcome:
    text: str
    exit_code: int = EXIT_OK


# =============================================================================
# Commands
# =============================================================================

def _word_text(words) -> List[str]:
    return [format_word(w) for w in words]


def cmd_normalize(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    w = parse_word(args.word, cfg.rank)
    v = normalize(w)
    if cfg.format == "json":
        return Outcome(dumps_json({
            "n": cfg.rank,
            "input": list(w.letters),
            "normal_form": list(v.letters),
            "input_canonical": is_canonical(w),
        }))
    return Outcome(format_word(v))


def cmd_size(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    size = cfg.table().size
    L = length_bound(cfg.rank)
    bound = 1 + cfg.rank ** L
    if cfg.format == "json":
        return Outcome(dumps_json({
            "n": cfg.rank,
            "size": size,
            "bound": bound,
            "length_bound": L,
        }))
    return Outcome(f"{size}\nbound: {bound}")


def cmd_check(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    report = run_pipeline(
        cfg.rank, suite=args.suite, seed=cfg.seed,
        preset=args.preset, element_cap=cfg.element_cap
    )
    code = EXIT_OK if report.passed else EXIT_FAILED
    if cfg.format == "json":
        return Outcome(dumps_json(report.to_dict()), code)
    lines = []
    for r in report.results:
        line = f"{r.status:<7} {r.name}"
        if r.detail:
            line += f"  ({r.detail})"
        lines.append(line)
        lines.extend(f"        - {c}" for c in r.counterexamples[:5])
    lines.append("PASSED" if report.passed else "FAILED")
    return Outcome("\n".join(lines), code)


def cmd_elements(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    table = cfg.table()
    data = elements_json(table)
    if cfg.format == "json":
        return Outcome(dumps_json(data))
    if cfg.format == "csv":
        rows = (
            [d["index"], format_word(table.word(d["index"])),
             ",".join(str(i) for i in d["content"]), d["idempotent"]]
            for d in data
        )
        return Outcome(dumps_csv(rows, ["index", "word", "content", "idempotent"]).rstrip("\n"))
    return Outcome("\n".join(format_word(w) or "e" for w in table.elements))


def cmd_table(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    table = cfg.table()
    if cfg.format == "json":
        return Outcome(dumps_json({"n": cfg.rank, "product": table.product.tolist()}))
    return Outcome(cayley_csv(table).rstrip("\n"))


def _contents(cfg: RunConfig, args: argparse.Namespace):
    if args.content is not None:
        return [parse_content(args.content, cfg.rank)]
    return all_contents(cfg.rank)


def cmd_idempotents(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    entries = [(X, idempotent(X)) for X in _contents(cfg, args)]
    if cfg.format == "json":
        return Outcome(dumps_json([
            {"content": list(X.letters), "word": list(e.letters)} for X, e in entries
        ]))
    return Outcome("\n".join(f"{X}\t{format_word(e) or 'e'}" for X, e in entries))


def cmd_green(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    table = cfg.table()
    relations = [args.relation] if args.relation else list(GREEN_RELATIONS)
    results = []
    for r in relations:
        classes = green_classes(table, r)
        results.append({
            "relation": r,
            "classes": len(classes),
            "trivial": classes.is_trivial,
            "blocks": [_word_text(table.word(x) for x in block) for block in classes.blocks],
        })
    if cfg.format == "json":
        return Outcome(dumps_json({"n": cfg.rank, "size": table.size, "relations": results}))
    return Outcome("\n".join(
        f"{d['relation']}: {d['classes']} classes ({'trivial' if d['trivial'] else 'non-trivial'})"
        for d in results
    ))


def cmd_nilpotent(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    table = cfg.table()
    blocks = [nilpotent_subsemigroup(table, X) for X in _contents(cfg, args)]
    if cfg.format == "json":
        return Outcome(dumps_json([
            {
                "content": list(b.content.letters),
                "members": [list(w.letters) for w in b.members],
                "zero": list(b.zero.letters),
                "class": b.nilpotency_class,
            }
            for b in blocks
        ]))
    return Outcome("\n".join(
        f"Nil({b.content}): {len(b.members)} elements, zero '{b.zero}', class {b.nilpotency_class}"
        for b in blocks
    ))


def cmd_repr(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    if args.word is not None:
        x = parse_word(args.word, cfg.rank)
        image = {"psi": psi, "kappa": kappa, "kappa-prime": kappa_prime}[args.kind](x)
        data = image.to_json() if isinstance(image, PolyMatrix) else matrix_to_json(image)
        return Outcome(dumps_json({"kind": args.kind, "word": list(x.letters), "matrix": data}))

    table = cfg.table()
    faithful, witness = faithfulness_check(table, args.kind)
    return Outcome(dumps_json({
        "kind": args.kind,
        "n": cfg.rank,
        "size": table.size,
        "faithful": faithful,
        "witness": None if witness is None else [list(w.letters) for w in witness],
    }))


def cmd_algebra_idempotents(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    algebra = SemigroupAlgebra(cfg.table())
    entries = [(X, primitive_idempotent(algebra, X)) for X in _contents(cfg, args)]
    if cfg.format == "json":
        return Outcome(dumps_json([
            {"content": list(X.letters), "element": e.to_json()} for X, e in entries
        ]))
    return Outcome("\n".join(f"e_{X} = {e}" for X, e in entries))


def cmd_corner_dims(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    data = corner_dimensions(SemigroupAlgebra(cfg.table()), element_cap=cfg.element_cap)
    if cfg.format == "json":
        return Outcome(dumps_json(data))
    lines = [f"{name}: {dim}" for name, dim in data["corners"].items()]
    lines.append(f"|K_{cfg.rank}| = {data['size']}, |K_{cfg.rank - 1}| = {data['previous_size']}")
    return Outcome("\n".join(lines))


def cmd_export_cayley_graph(cfg: RunConfig, args: argparse.Namespace) -> Outcome:
    return Outcome(cayley_dot(cfg.table(), skip_loops=args.skip_loops).rstrip("\n"))


COMMANDS: Dict[str, Callable[[RunConfig, argparse.Namespace], Outcome]] = {
    "normalize": cmd_normalize,
    "size": cmd_size,
    "check": cmd_check,
    "elements": cmd_elements,
    "table": cmd_table,
    "idempotents": cmd_idempotents,
    "green": cmd_green,
    "nilpotent": cmd_nilpotent,
    "repr": cmd_repr,
    "algebra-idempotents": cmd_algebra_idempotents,
    "corner-dims": cmd_corner_dims,
    "export-cayley-graph": cmd_export_cayley_graph,
}


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--rank", type=int, required=True, help="number of generators")
    common.add_argument("--format", choices=FORMATS, help="output format")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks (default: 0)")
    common.add_argument("--element-cap", type=int, help="enumeration cap")
    common.add_argument("--out", help="write the result to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="kiselman",
        description="Exact computation in Kiselman semigroups K_n.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("normalize", parents=[common], help="canonical form of a word")
    p.add_argument("word", help='comma-separated letters, e.g. "1,2,1"; "" is e')

    sub.add_parser("size", parents=[common], help="|K_n|")

    p = sub.add_parser("check", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--preset", choices=PRESETS, default="default")

    sub.add_parser("elements", parents=[common], help="canonical elements")
    sub.add_parser("table", parents=[common], help="product table")

    for name, text in (
        ("idempotents", "idempotents e_X"),
        ("nilpotent", "nilpotent subsemigroups Nil(X)"),
        ("algebra-idempotents", "primitive idempotents of QK_n"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--content", help='comma-separated set X, e.g. "1,3"; default all')

    p = sub.add_parser("green", parents=[common], help="Green's relations")
    p.add_argument("--relation", choices=GREEN_RELATIONS)

    p = sub.add_parser("repr", parents=[common], help="matrix representations")
    p.add_argument("--kind", choices=KINDS, default="psi")
    p.add_argument("--word", help="print the image of this word instead of testing faithfulness")

    sub.add_parser("corner-dims", parents=[common], help="corner algebra dimensions")

    p = sub.add_parser("export-cayley-graph", parents=[common], help="right Cayley graph as DOT")
    p.add_argument("--skip-loops", action="store_true", help="omit x -> x edges")

    return parser


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path is not None:
        save_text(text + "\n", cfg.output_path)
        logger.info("wrote %s", cfg.output_path)
    else:
        print(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI.

    :param argv: arguments without the program name (default: ``sys.argv[1:]``)
    :return: process exit code
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        cfg = RunConfig.from_args(args)
        outcome = COMMANDS[cfg.command](cfg, args)
        _emit(cfg, outcome.text)
        return outcome.exit_code
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (KiselmanError, ValueError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
