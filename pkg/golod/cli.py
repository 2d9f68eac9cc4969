#!/usr/bin/env python3
"""
cli.py - Golod Toolkit Command Line
===================================

Thin CLI over the library: every subcommand reads a complex (JSON or plain
text, '-' for stdin), runs one analysis and prints a JSON AnalysisReport on
stdout. Diagnostics go to stderr.

Exit status:
  0  success
  1  malformed input, unknown field spec, or a size cap exceeded
  2  NotGolod verdict while --expect-golod is given
  3  failed verification or an internal disagreement (a bug)

Environment Variables (with defaults):
- GOLOD_THREADS=<cores> - Worker processes for subset scans
- GOLOD_HOCHSTER_MAX_M=24 - Exhaustive subset scan cap
- GOLOD_PAIR_SCAN_LIMIT=4782969 - Disjoint pair scan cap (3**14)
- GOLOD_ORACLE_MAX_M=12 - Koszul oracle cap
- GOLOD_LOG_LEVEL=WARNING - Logging level

Usage:
  golod check complex.json --field q --field fp:2
  golod golod m2.json --field fp:2 --witness
  golod moore --p 4 --emit json | golod check -
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

try:
    from .complex_core import (
        SimplicialComplex,
        euler_characteristic,
        is_k_neighborly,
        is_surface_triangulation,
        minimal_non_faces,
        neighborliness_degree,
        one_skeleton,
        vertices_of,
    )
    from .complex_io import complex_document, dump_complex_text, format_json, load_complex, save_json
    from .errors import CapExceededError, ConsistencyError
    from .graph_chordal import is_chordal, lex_bfs
    from .hochster_tor import TorTable, hochster_table
    from .homology import betti_from_integral, clear_caches, integral_homology, reduced_betti
    from .koszul_oracle import koszul_product_nontrivial, koszul_tor_table
    from .linalg import FieldSpec, parse_field
    from .moore_complexes import MooreSpec, moore_complex, verify_moore
    from .parallel import SubsetMapper, create_mapper
    from .products_golod import (
        GolodStatus,
        find_nontrivial_product,
        golod_verdict,
        product_ranks,
        surface_golod_equivalence_report,
    )
    from .report import AnalysisReport, describe_input
    from .settings import AnalysisSettings, create_settings_from_env
except ImportError:
    sys.path.insert(0, str(Path(__file__).parent))
    from complex_core import (
        SimplicialComplex,
        euler_characteristic,
        is_k_neighborly,
        is_surface_triangulation,
        minimal_non_faces,
        neighborliness_degree,
        one_skeleton,
        vertices_of,
    )
    from complex_io import complex_document, dump_complex_text, format_json, load_complex, save_json
    from errors import CapExceededError, ConsistencyError
    from graph_chordal import is_chordal, lex_bfs
    from hochster_tor import TorTable, hochster_table
    from homology import betti_from_integral, clear_caches, integral_homology, reduced_betti
    from koszul_oracle import koszul_product_nontrivial, koszul_tor_table
    from linalg import FieldSpec, parse_field
    from moore_complexes import MooreSpec, moore_complex, verify_moore
    from parallel import SubsetMapper, create_mapper
    from products_golod import (
        GolodStatus,
        find_nontrivial_product,
        golod_verdict,
        product_ranks,
        surface_golod_equivalence_report,
    )
    from report import AnalysisReport, describe_input
    from settings import AnalysisSettings, create_settings_from_env

LOGGER = logging.getLogger("golod")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_GOLOD = 2
EXIT_VERIFY = 3

COMMANDS = ("check", "homology", "hochster", "golod", "products", "chordal", "surface", "moore", "oracle")


@dataclass
class RunContext:
    args: argparse.Namespace
    settings: AnalysisSettings
    mapper: SubsetMapper
    fields: List[FieldSpec]


# ---------------------------------------------------------------------------
# Sections
# ---------------------------------------------------------------------------

def structural_checks(K: SimplicialComplex) -> Dict[str, object]:
    chordal, order = is_chordal(one_skeleton(K))
    degree = neighborliness_degree(K)
    return {
        "surface": is_surface_triangulation(K),
        "chordal_one_skeleton": chordal,
        "elimination_order": list(order) if order else None,
        "one_neighborly": is_k_neighborly(K, 1),
        "neighborliness_degree": degree,
        "neighborly": is_k_neighborly(K, degree),
        "ghost_vertices": list(vertices_of(K.ghost_mask)),
        "euler_characteristic": euler_characteristic(K),
        "minimal_non_faces": [list(s) for s in minimal_non_faces(K)],
    }


def homology_section(K: SimplicialComplex, fields: Sequence[FieldSpec]) -> Dict[str, object]:
    H = integral_homology(K)
    betti = {}
    consistent = True
    for k in fields:
        direct = reduced_betti(K, k)
        betti[k.label] = direct.as_dict()
        if betti_from_integral(H, k).as_dict() != direct.as_dict():
            LOGGER.error("universal coefficient mismatch over %s", k)
            consistent = False
    return {"integral": H.to_json(), "betti": betti, "universal_coefficients_consistent": consistent}


def _tables(ctx: RunContext, K: SimplicialComplex) -> Dict[FieldSpec, TorTable]:
    return {k: hochster_table(K, k, ctx.settings, ctx.mapper) for k in ctx.fields}


def _add_tables(report: AnalysisReport, name: str, tables: Dict[FieldSpec, TorTable]) -> None:
    report.add(name, {k.label: t.to_json() for k, t in tables.items()},
               text="\n\n".join(t.render_text() for t in tables.values()))


def _add_verdicts(ctx: RunContext, report: AnalysisReport, K: SimplicialComplex,
                  tables: Optional[Dict[FieldSpec, TorTable]] = None) -> None:
    verdicts = []
    for k in ctx.fields:
        verdict = golod_verdict(K, k, ctx.settings, ctx.mapper, table=(tables or {}).get(k))
        entry = verdict.to_json(include_witness=ctx.args.witness)
        if verdict.witness is not None:
            entry["witness_verified"] = verdict.witness.verify(K)
            if not entry["witness_verified"]:
                LOGGER.error("witness over %s fails re-verification", k)
                report.exit_status = EXIT_VERIFY
        if not verdict.consistent:
            report.exit_status = EXIT_VERIFY
        elif verdict.status is GolodStatus.NOT_GOLOD and ctx.args.expect_golod and not report.exit_status:
            report.exit_status = EXIT_NOT_GOLOD
        verdicts.append(entry)
    report.add("verdicts", verdicts)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _load(ctx: RunContext, report: AnalysisReport) -> SimplicialComplex:
    K = load_complex(ctx.args.input)
    report.input = describe_input(K, ctx.args.input)
    LOGGER.info("loaded complex with m=%d, %d facets", K.m, len(K.facets))
    return K


def cmd_check(ctx: RunContext, report: AnalysisReport) -> None:
    K = _load(ctx, report)
    with report.timed("checks"):
        report.add("checks", structural_checks(K))
    with report.timed("homology"):
        homology = homology_section(K, ctx.fields)
        report.add("homology", homology)
    with report.timed("hochster"):
        tables = _tables(ctx, K)
        _add_tables(report, "hochster", tables)
    with report.timed("verdicts"):
        _add_verdicts(ctx, report, K, tables)
    if not homology["universal_coefficients_consistent"]:
        report.exit_status = EXIT_VERIFY


def cmd_homology(ctx: RunContext, report: AnalysisReport) -> None:
    K = _load(ctx, report)
    homology = homology_section(K, ctx.fields)
    report.add("homology", homology)
    if not homology["universal_coefficients_consistent"]:
        report.exit_status = EXIT_VERIFY


def cmd_hochster(ctx: RunContext, report: AnalysisReport) -> None:
    K = _load(ctx, report)
    with report.timed("hochster"):
        _add_tables(report, "hochster", _tables(ctx, K))


def cmd_golod(ctx: RunContext, report: AnalysisReport) -> None:
    K = _load(ctx, report)
    with report.timed("verdicts"):
        _add_verdicts(ctx, report, K)


def cmd_products(ctx: RunContext, report: AnalysisReport) -> None:
    K = _load(ctx, report)
    results = {}
    for k in ctx.fields:
        with report.timed(f"products {k.label}"):
            table = hochster_table(K, k, ctx.settings, ctx.mapper)
            witness = find_nontrivial_product(K, k, ctx.settings, ctx.mapper, table=table)
            entry: Dict[str, object] = {
                "nontrivial": witness is not None,
                "witness": witness.to_json() if witness is not None else None,
            }
            if witness is not None:
                entry["witness_verified"] = witness.verify(K)
                if not entry["witness_verified"]:
                    report.exit_status = EXIT_VERIFY
            if ctx.args.all_pairs:
                ranks = product_ranks(K, k, ctx.settings, ctx.mapper, table=table)
                entry["pairings"] = [
                    {"I": list(vertices_of(I)), "J": list(vertices_of(J)), "p": p, "q": q, "rank": r}
                    for (I, J, p, q), r in ranks.items()
                ]
            results[k.label] = entry
    report.add("products", results)


def cmd_chordal(ctx: RunContext, report: AnalysisReport) -> None:
    K = _load(ctx, report)
    G = one_skeleton(K)
    chordal, order = is_chordal(G)
    report.add("chordal", {
        "vertices": G.number_of_nodes(),
        "edges": G.number_of_edges(),
        "lex_bfs_order": list(lex_bfs(G)),
        "chordal": chordal,
        "elimination_order": list(order) if order else None,
        "one_neighborly": is_k_neighborly(K, 1),
    })


def cmd_surface(ctx: RunContext, report: AnalysisReport) -> None:
    K = _load(ctx, report)
    with report.timed("surface"):
        result = surface_golod_equivalence_report(K, ctx.settings, ctx.mapper)
    report.add("surface", result.to_json())
    if not result.agree:
        report.exit_status = EXIT_VERIFY


def cmd_oracle(ctx: RunContext, report: AnalysisReport) -> None:
    K = _load(ctx, report)
    tables = {}
    flags = {}
    for k in ctx.fields:
        with report.timed(f"oracle {k.label}"):
            tables[k] = koszul_tor_table(K, k, ctx.settings, ctx.mapper)
            flags[k.label] = koszul_product_nontrivial(K, k, ctx.settings, ctx.mapper)
    _add_tables(report, "koszul", tables)
    report.add("product_nontrivial", flags)


def cmd_moore(ctx: RunContext, report: AnalysisReport) -> None:
    args = ctx.args
    K = moore_complex(args.p)
    spec = MooreSpec(args.p)
    report.input = describe_input(K, f"moore:{args.p}")
    if args.names:
        report.add("names", {str(v): name for v, name in sorted(spec.vertex_names().items())})
    report.add("complex", complex_document(K))
    if args.verify:
        with report.timed("verify"):
            verification = verify_moore(K, args.p, ctx.mapper)
        report.add("verification", verification.to_json())
        if not verification.passed:
            report.exit_status = EXIT_VERIFY


def emit_moore(args: argparse.Namespace) -> str:
    """The M(p) complex itself in the --emit format, for piping into other subcommands."""
    K = moore_complex(args.p)
    names = MooreSpec(args.p).vertex_names()
    if args.emit == "json":
        document = complex_document(K)
        if args.names:
            document["names"] = {str(v): name for v, name in sorted(names.items())}
        return format_json(document)
    text = dump_complex_text(K)
    if args.names:
        text = "".join(f"# {v} {name}\n" for v, name in sorted(names.items())) + text
    return text


HANDLERS: Dict[str, Callable[[RunContext, AnalysisReport], None]] = {
    "check": cmd_check,
    "homology": cmd_homology,
    "hochster": cmd_hochster,
    "golod": cmd_golod,
    "products": cmd_products,
    "chordal": cmd_chordal,
    "surface": cmd_surface,
    "moore": cmd_moore,
    "oracle": cmd_oracle,
}


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", action="append", dest="fields", metavar="SPEC",
                        help="coefficient field, 'q' or 'fp:<prime>'; repeatable (default: q)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for subset scans (default: GOLOD_THREADS or all cores)")
    common.add_argument("--force", action="store_true",
                        help="lift the Hochster and pair-scan size caps")
    common.add_argument("--format", choices=("json", "text"), default="json",
                        help="report format on stdout (default: json)")
    common.add_argument("--output", metavar="PATH",
                        help="also write the JSON report to PATH (atomic)")
    common.add_argument("--timing", action="store_true",
                        help="add wall-clock timings to the report")
    common.add_argument("--verbose", "-v", action="store_true",
                        help="log progress at INFO level on stderr")

    parser = argparse.ArgumentParser(
        prog="golod",
        description="Golodness invariants of simplicial complexes",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Environment Variables:
  GOLOD_THREADS          Worker processes (default: all cores)
  GOLOD_HOCHSTER_MAX_M   Exhaustive subset scan cap (default: 24)
  GOLOD_PAIR_SCAN_LIMIT  Disjoint pair scan cap (default: 3**14)
  GOLOD_ORACLE_MAX_M     Koszul oracle cap (default: 12)
  GOLOD_LOG_LEVEL        Logging level (default: WARNING)

Examples:
  golod check rp2.json --field q --field fp:2
  golod golod m2.json --field fp:2 --witness --expect-golod
  golod moore --p 4 --emit json | golod check -
""",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help_text: str, with_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        if with_input:
            p.add_argument("input", help="complex file (JSON or plain text), '-' for stdin")
        return p

    for name, help_text in (("check", "structure, homology, Tor and verdicts in one report"),
                            ("golod", "Golod verdict per field")):
        p = add(name, help_text)
        p.add_argument("--witness", action="store_true", help="include full product witnesses")
        p.add_argument("--expect-golod", action="store_true",
                       help="exit with status 2 on a NotGolod verdict")
    add("homology", "integral homology and Betti numbers")
    add("hochster", "bigraded Tor table via the Hochster decomposition")
    p = add("products", "first non-trivial product per field")
    p.add_argument("--all-pairs", action="store_true", help="list the rank of every pairing")
    add("chordal", "chordality of the 1-skeleton")
    add("surface", "surface theorem comparison over Z/2")
    add("oracle", "Tor and products from the Koszul complex")

    p = add("moore", "the Moore space triangulation M(p)", with_input=False)
    p.add_argument("--p", type=int, required=True, help="torsion order p >= 2")
    p.add_argument("--emit", choices=("json", "txt"), default=None,
                   help="print the complex itself instead of a report")
    p.add_argument("--verify", action="store_true", help="run the structural verification")
    p.add_argument("--names", action="store_true", help="include the v/w/u vertex names")
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT, force=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point; returns the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = create_settings_from_env().with_overrides(threads=args.threads, force=args.force)
        fields = [parse_field(spec) for spec in (args.fields or ["q"])]
    except ValueError as e:
        configure_logging("WARNING")
        print(f"golod: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    configure_logging("INFO" if args.verbose else settings.log_level)

    if args.command == "moore" and args.emit and not args.verify:
        try:
            sys.stdout.write(emit_moore(args))
        except ValueError as e:
            print(f"golod: error: {e}", file=sys.stderr)
            return EXIT_INPUT
        return EXIT_OK

    report = AnalysisReport(command=args.command, timing={} if args.timing else None)
    mapper = create_mapper(settings.threads)
    ctx = RunContext(args=args, settings=settings, mapper=mapper, fields=fields)
    try:
        HANDLERS[args.command](ctx, report)
        if args.output:
            save_json(args.output, report.to_json())
    except CapExceededError as e:
        print(f"golod: size cap: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as e:
        print(f"golod: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as e:
        LOGGER.error("internal consistency check failed: %s", e)
        return EXIT_VERIFY
    finally:
        mapper.close()
        clear_caches()

    sys.stdout.write(report.render_json() if args.format == "json" else report.render_text())
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
