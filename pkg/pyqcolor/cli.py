"""
Command-line interface for PyQColor

Subcommands:
    generate  write an Erdős–Rényi graph as DIMACS
    solve     anneal a DIMACS graph, write the best trace and a summary
    sweep     H_min over a range of average degrees and color counts
    history   list solves kept in the result archive

Exit codes: 0 success, 1 usage or parameter error, 2 I/O error.
"""

import argparse
import logging
import os
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from pyqcolor import __version__
from pyqcolor.core.energy import conflicting_edges
from pyqcolor.core.enums import CSV_SCHEMA_VERSION, Preset
from pyqcolor.core.exceptions import (
    ArtifactFormatError,
    ContractError,
    DimacsParseError,
    ParameterError,
)
from pyqcolor.core.models import (
    PRESETS,
    AnnealConfig,
    MultiRunConfig,
    RunSummary,
    Schedule,
    SweepConfig,
)
from pyqcolor.data.dimacs import read_dimacs_file, write_dimacs_file
from pyqcolor.data.result_archive import ARCHIVE_DIR_ENV, ResultArchive
from pyqcolor.data.results_io import (
    write_coloring,
    write_summary_json,
    write_sweep_csv,
    write_trace_csv,
)
from pyqcolor.engine.graph_generator import generate_erdos_renyi
from pyqcolor.engine.multirun import run_many
from pyqcolor.engine.sweep import analyze_sweep, run_sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2


class QColorArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors with exit code 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_int_list(text: str) -> List[int]:
    """Parse ``"3,5,7"`` into integers."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list '{text}'") from None


def parse_degree_list(text: str) -> List[float]:
    """
    Parse average degrees.

    Comma-separated items, each a number or an inclusive range
    ``start:stop:step``; ``"1,5:100:5"`` gives 1, 5, 10, ..., 100.
    """
    values: List[float] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if ":" in part:
                start, stop, step = (float(x) for x in part.split(":"))
                if step <= 0:
                    raise ValueError
                count = int((stop - start) / step + 1e-9) + 1
                values.extend(round(start + i * step, 9) for i in range(count))
            else:
                values.append(float(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid degree list '{text}'") from None
    return values


def _add_anneal_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--preset",
        choices=[p.value for p in Preset],
        default=Preset.PAPER_1E6.value,
        help="Iteration count and schedule to start from",
    )
    parser.add_argument("--iters", type=int, help="Iterations per run (overrides preset)")
    parser.add_argument("--beta0", type=float, help="Initial inverse temperature")
    parser.add_argument(
        "--trials-factor",
        type=float,
        help="Beta is updated every trials-factor * N iterations",
    )
    parser.add_argument("--seed", type=int, default=0, help="Base random seed")
    parser.add_argument("--runs", type=int, default=1, help="Independent runs (best is kept)")
    parser.add_argument("--workers", type=int, help="Worker processes (default: CPU count)")
    parser.add_argument("--trace-stride", type=int, help="Iterations between trace samples")
    parser.add_argument("--archive", type=str, help=f"Archive directory (env {ARCHIVE_DIR_ENV})")
    parser.add_argument("--label", type=str, help="Archive label (default: output file stem)")
    parser.add_argument("--no-progress", action="store_true", help="Hide progress bars")


def _anneal_config(args: argparse.Namespace, n_colors: int) -> AnnealConfig:
    """Resolve preset and explicit flags into a run configuration."""
    preset = Preset(args.preset)
    params = PRESETS[preset]
    schedule = Schedule(
        beta0=args.beta0 if args.beta0 is not None else params.beta0,
        trials_factor=(
            args.trials_factor if args.trials_factor is not None else params.trials_factor
        ),
    )
    return AnnealConfig(
        n_colors=n_colors,
        n_iterations=args.iters if args.iters is not None else params.n_iterations,
        schedule=schedule,
        seed=args.seed,
        trace_stride=args.trace_stride,
    )


def _archive(args: argparse.Namespace) -> Optional[ResultArchive]:
    directory = args.archive or os.getenv(ARCHIVE_DIR_ENV)
    if not directory:
        return None
    return ResultArchive(directory)


def cmd_generate(args: argparse.Namespace) -> int:
    graph = generate_erdos_renyi(args.n, args.c, args.seed)
    write_dimacs_file(
        graph,
        args.out,
        comments=[f"Erdos-Renyi N={args.n} c={args.c} seed={args.seed}"],
    )
    print(graph.n_edges)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    graph = read_dimacs_file(args.graph)
    base = _anneal_config(args, n_colors=args.q)
    config = MultiRunConfig(
        base=base,
        n_runs=args.runs,
        n_workers=args.workers,
        split_budget=args.split_budget,
        show_progress=not args.no_progress,
    )

    start = time.perf_counter()
    result = run_many(graph, config)
    elapsed = time.perf_counter() - start
    best = result.best

    out_path = Path(args.out)
    write_trace_csv(out_path, best.trace)

    summary = RunSummary(
        h_min=best.h_min,
        final_beta=best.final_beta,
        n_accepted=best.n_accepted,
        all_hmins=result.all_hmins,
        elapsed_seconds=elapsed,
        config={
            "graph": str(args.graph),
            "n_vertices": graph.n_vertices,
            "n_edges": graph.n_edges,
            "preset": args.preset,
            "n_colors": base.n_colors,
            "n_iterations": best.n_iterations,
            "beta0": base.schedule.beta0,
            "trials_factor": base.schedule.trials_factor,
            "trace_stride": base.effective_trace_stride,
            "seed": base.seed,
            "runs": config.n_runs,
            "split_budget": config.split_budget,
            "run_seeds": result.seeds,
            "best_run": result.best_index,
            "version": __version__,
            "schema_version": CSV_SCHEMA_VERSION,
        },
    )
    summary_path = Path(args.summary) if args.summary else out_path.with_suffix(".json")
    write_summary_json(summary_path, summary)

    if args.coloring_out:
        write_coloring(args.coloring_out, best.best_coloring)

    archive = _archive(args)
    if archive is not None:
        archive.record_solve(summary, args.label or out_path.stem)

    print(f"h_min={best.h_min} final_beta={best.final_beta:.4f} all_hmins={result.all_hmins}")
    if args.show_conflicts:
        for u, v in conflicting_edges(graph, best.best_coloring):
            print(f"conflict {u + 1} {v + 1}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    template = _anneal_config(args, n_colors=min(args.q))
    config = SweepConfig(
        n_vertices=args.n,
        c_values=args.c,
        q_values=args.q,
        template=template,
        runs_per_cell=args.runs,
        seed=args.seed,
        n_workers=args.workers,
        show_progress=not args.no_progress,
    )
    records = run_sweep(config)
    write_sweep_csv(args.out, records)

    archive = _archive(args)
    if archive is not None:
        archive.record_sweep(records, args.label or Path(args.out).stem)

    for q, summary in analyze_sweep(records, c_fit_min=args.fit_min).items():
        slope = f"{summary.slope:.3f}" if summary.slope is not None else "n/a"
        onset = f"{summary.onset_c:g}" if summary.onset_c is not None else "none"
        print(f"q={q} onset_c={onset} slope={slope} (c >= {args.fit_min:g})")
    return EXIT_OK


def cmd_history(args: argparse.Namespace) -> int:
    archive = _archive(args)
    if archive is None:
        raise ParameterError(f"no archive directory: pass --archive or set {ARCHIVE_DIR_ENV}")
    for entry in archive.list_solves():
        print(
            f"{entry['record_date']}  {entry['label']}  h_min={entry['h_min']}  "
            f"{entry['elapsed_seconds']:.2f}s"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = QColorArgumentParser(
        prog="pyqcolor",
        description="Graph coloring by Metropolis simulated annealing",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging verbosity",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate = subparsers.add_parser("generate", help="Write an Erdős–Rényi graph")
    generate.add_argument("--n", type=int, required=True, help="Number of vertices")
    generate.add_argument("--c", type=float, required=True, help="Average degree")
    generate.add_argument("--seed", type=int, default=0, help="Random seed")
    generate.add_argument("--out", type=str, required=True, help="DIMACS output path")
    generate.set_defaults(handler=cmd_generate)

    solve = subparsers.add_parser("solve", help="Anneal a DIMACS graph")
    solve.add_argument("--graph", type=str, required=True, help="DIMACS input path")
    solve.add_argument("--q", type=int, default=5, help="Number of colors")
    solve.add_argument("--out", type=str, required=True, help="Trace CSV output path")
    solve.add_argument("--summary", type=str, help="Summary JSON path (default: <out>.json)")
    solve.add_argument("--coloring-out", type=str, help="Write the best coloring here")
    solve.add_argument(
        "--split-budget",
        action="store_true",
        help="Divide --iters among the runs instead of giving each run --iters",
    )
    solve.add_argument(
        "--show-conflicts", action="store_true", help="Print conflicting edges of the best coloring"
    )
    _add_anneal_arguments(solve)
    solve.set_defaults(handler=cmd_solve)

    sweep = subparsers.add_parser("sweep", help="H_min against average degree")
    sweep.add_argument("--n", type=int, default=1000, help="Number of vertices")
    sweep.add_argument(
        "--c",
        type=parse_degree_list,
        default=parse_degree_list("1:100:1"),
        help="Average degrees, e.g. '1,5:100:5'",
    )
    sweep.add_argument(
        "--q", type=parse_int_list, default=[3, 5, 7], help="Color counts, e.g. '3,5,7'"
    )
    sweep.add_argument("--out", type=str, required=True, help="Sweep CSV output path")
    sweep.add_argument(
        "--fit-min", type=float, default=50.0, help="Smallest c in the slope fit"
    )
    _add_anneal_arguments(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    history = subparsers.add_parser("history", help="List archived solves")
    history.add_argument("--archive", type=str, help=f"Archive directory (env {ARCHIVE_DIR_ENV})")
    history.set_defaults(handler=cmd_history)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )

    try:
        return args.handler(args)
    except (DimacsParseError, ArtifactFormatError, OSError) as e:
        logger.error(f"I/O failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except (ParameterError, ContractError, ValidationError, ValueError) as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
