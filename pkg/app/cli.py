import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

import rollbar
from rollbar.logger import RollbarHandler

from app.commands.gen_command import GenerateGameCommand
from app.commands.inspect_command import InspectGameCommand
from app.commands.plot_command import METRIC_CHOICES, PlotCommand
from app.commands.solve_command import SolveCommand
from app.commands.sweep_command import SweepCommand
from app.config import get_settings
from app.constants.exit_codes import EXIT_FAILURE, EXIT_OK
from app.constants.games import GameFamily
from app.core.logging_config import get_logger
from app.exceptions.config_exceptions import ConfigInvalidError
from app.exceptions.handlers import exit_code_for
from app.telemetry import setup_tracing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="efpe",
        description="Reward-transformation CFR with adaptive perturbation for EFPE benchmarks.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    gen = verbs.add_parser("gen", help="generate a benchmark game")
    gen.add_argument("--family", required=True, choices=[f.value for f in GameFamily])
    gen.add_argument("--rank", required=True, type=int)
    gen.add_argument("--out", type=Path, help="file to write; stdout when omitted")
    gen.add_argument("--verify-sizes", action="store_true")

    inspect = verbs.add_parser("inspect", help="print (infosets, sequences, leaves)")
    inspect.add_argument("game", help="benchmark key such as leduc3, or a game file")
    inspect.add_argument("--verify-sizes", action="store_true")

    solve = verbs.add_parser("solve", help="run one solver configuration")
    solve.add_argument("--preset", help="tuned:<game>, fixed:<game>:<eps> or cfrplus:<game>[:<eps>]")
    solve.add_argument("--config", type=Path, help="key=value configuration file")
    solve.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE")
    solve.add_argument("--until-exploitability", type=float)
    solve.add_argument("--until-max-regret", type=float)
    solve.add_argument("--verify-sizes", action="store_true")
    solve.add_argument("--out", type=Path, help="output directory")

    sweep = verbs.add_parser("sweep", help="run several configurations and compare them")
    sweep.add_argument("sweep_file", nargs="?", type=Path)
    sweep.add_argument("--preset", help="compare:<game>")
    sweep.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE")
    sweep.add_argument("--parallel", action="store_true")
    sweep.add_argument("--out", type=Path, help="sweep output directory")

    plot = verbs.add_parser("plot", help="render a comparison table")
    plot.add_argument("comparison", type=Path, help="comparison.csv or a sweep directory")
    plot.add_argument("--metric", default="exploitability", choices=sorted(METRIC_CHOICES))
    plot.add_argument("--out", type=Path)

    return parser


def configure_reporting(logger: logging.Logger) -> None:
    settings = get_settings()
    if settings.is_production and settings.rollbar_access_token:
        rollbar.init(settings.rollbar_access_token, environment=settings.environment)
        rollbar_handler = RollbarHandler()
        rollbar_handler.setLevel(logging.ERROR)
        logger.addHandler(rollbar_handler)
    if settings.otel_enabled:
        setup_tracing()


def dispatch(args: argparse.Namespace) -> int:
    if args.verb == "gen":
        generated = GenerateGameCommand().execute(
            args.family, args.rank, args.out, args.verify_sizes
        )
        if generated.text is not None:
            sys.stdout.write(generated.text)
        return EXIT_OK

    if args.verb == "inspect":
        sizes = InspectGameCommand().execute(args.game, args.verify_sizes)
        print(f"{sizes.name} {sizes.infosets} {sizes.sequences} {sizes.leaves}")
        return EXIT_OK

    if args.verb == "solve":
        outcome = SolveCommand().execute(
            preset=args.preset,
            config_path=args.config,
            overrides=args.overrides,
            until_exploitability=args.until_exploitability,
            until_max_regret=args.until_max_regret,
            verify_sizes=args.verify_sizes,
            out=args.out,
        )
        row = outcome.result.final_row
        print(
            f"{outcome.result.label} {outcome.result.status.value} "
            f"traversals={row.traversals} exploitability={row.exploitability:.6e} "
            f"max_isregret={row.max_isregret:.6e} -> {outcome.result.output_dir}"
        )
        return outcome.exit_code

    if args.verb == "sweep":
        result = SweepCommand().execute(
            sweep_path=args.sweep_file,
            preset=args.preset,
            overrides=args.overrides,
            parallel=args.parallel,
            out=args.out,
        )
        for run in result.runs:
            print(f"{run.label} {run.error or run.status}")
        return EXIT_FAILURE if result.failures else EXIT_OK

    if args.verb == "plot":
        print(PlotCommand().execute(args.comparison, args.metric, args.out))
        return EXIT_OK

    raise ConfigInvalidError(f"unknown command {args.verb!r}")


def main(argv: Optional[List[str]] = None) -> int:
    logger = get_logger()
    args = build_parser().parse_args(argv)
    configure_reporting(logger)
    try:
        return dispatch(args)
    except Exception as exc:
        code = exit_code_for(exc)
        if code == EXIT_FAILURE:
            logger.exception(f"efpe {args.verb} failed")
        else:
            logger.error(f"efpe {args.verb}: {exc}")
        return code
