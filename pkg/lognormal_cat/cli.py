"""Command-line front end.

Usage:
    python -m lognormal_cat test --input data.csv [--method cat|lrt] [--replicates 5000]
                                 [--seed U64] [--alpha 0.05] [--format json|text] [--output PATH]
    python -m lognormal_cat simulate (--input scenario.json | --suite) --output results.csv [--seed U64]
    python -m lognormal_cat serve [--host HOST] [--port PORT]

Exit codes: 0 success, 2 input error, 3 numerical failure.
"""
import argparse
import logging
import sys

from lognormal_cat import __version__
from lognormal_cat.config import configure_logging, get_settings
from lognormal_cat.errors import InputError, LognormalCatError, NumericalError
from lognormal_cat.models.results import Method, StudyResult
from lognormal_cat.models.scenario import Scenario, default_suite, load_scenarios
from lognormal_cat.simulation.study import run_study
from lognormal_cat.storage.files import check_output_path, dumps_json, write_atomic, write_studies
from lognormal_cat.tasks import format_text_report, run_test_pipeline
from lognormal_cat.utils.rng import MAX_SEED, Stream, derive_seed, fresh_seed
from lognormal_cat.utils.table import load_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CODES = {
    InputError: 2,
    NumericalError: 3,
}


def exit_code_for(exc: LognormalCatError) -> int:
    for family, status in EXIT_CODES.items():
        if isinstance(exc, family):
            return status
    return 3


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="lognormal_cat",
        description="Test equality of log-normal means (CAT, LRT) and run size/power studies",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Logging level (default from settings)")
    sub = parser.add_subparsers(dest="command", required=True)

    test = sub.add_parser("test", help="Run a test on a long-format CSV (columns group,value)")
    test.add_argument("--input", required=True, help="Path to CSV file")
    test.add_argument("--method", choices=[m.value for m in Method], default=Method.CAT.value)
    test.add_argument("--replicates", type=int, default=settings.default_replicates,
                      help="CAT replicates M")
    test.add_argument("--seed", type=_seed, default=None, help="Master seed (generated if omitted)")
    test.add_argument("--alpha", type=float, default=settings.alpha)
    test.add_argument("--format", choices=["json", "text"], default="json")
    test.add_argument("--output", default=None, help="Write the report here instead of stdout")
    test.add_argument("--threads", type=int, default=settings.threads, help="0 = auto")

    sim = sub.add_parser("simulate", help="Estimate empirical size and power")
    source = sim.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="Scenario JSON (one object or a list)")
    source.add_argument("--suite", action="store_true", help="Run the default scenario suite")
    sim.add_argument("--output", required=True, help="CSV path; full JSON is written alongside")
    sim.add_argument("--seed", type=_seed, default=None,
                     help="Seed for scenarios without one (generated if omitted)")
    sim.add_argument("--threads", type=int, default=settings.threads, help="0 = auto")
    sim.add_argument("--no-progress", action="store_true")

    serve = sub.add_parser("serve", help="Run the HTTP API")
    serve.add_argument("--host", default=settings.host)
    serve.add_argument("--port", type=int, default=settings.port)
    return parser


def cmd_test(args: argparse.Namespace) -> int:
    if args.output:
        check_output_path(args.output)
    table = load_table(args.input)
    report = run_test_pipeline(
        table,
        method=Method(args.method),
        m=args.replicates,
        seed=args.seed,
        alpha=args.alpha,
        threads=args.threads,
        run_id=args.input,
    )
    text = dumps_json(report) if args.format == "json" else format_text_report(report)
    if args.output:
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _with_seeds(scenarios: list[Scenario], seed: int | None) -> list[Scenario]:
    if all(s.seed is not None for s in scenarios):
        return scenarios
    if seed is None:
        seed = fresh_seed()
        logger.info("Generated seed %d (pass --seed to reproduce)", seed)
    return [
        s if s.seed is not None
        else s.model_copy(update={"seed": derive_seed(seed, Stream.SUITE, i)})
        for i, s in enumerate(scenarios)
    ]


def format_study_table(results: list[StudyResult]) -> str:
    lines = [f"{'scenario':<24}{'method':<8}{'null':<6}{'rate':>8}{'mc_se':>8}"
             f"{'mean_p':>8}{'fail':>6}{'time_s':>9}"]
    for r in results:
        for s in r.methods:
            lines.append(
                f"{r.scenario_id:<24}{s.method.value:<8}{str(r.is_null).lower():<6}"
                f"{s.rejection_rate:>8.4f}{s.mc_std_error:>8.4f}{s.mean_p_value:>8.4f}"
                f"{s.failures:>6}{s.wall_time_s:>9.1f}"
            )
    return "\n".join(lines) + "\n"


def cmd_simulate(args: argparse.Namespace) -> int:
    check_output_path(args.output)
    if args.suite:
        seed = args.seed if args.seed is not None else fresh_seed()
        logger.info("Default suite with seed %d", seed)
        scenarios = default_suite(seed)
    else:
        scenarios = _with_seeds(load_scenarios(args.input), args.seed)

    results = [
        run_study(s, threads=args.threads, progress=not args.no_progress)
        for s in scenarios
    ]
    csv_path, json_path = write_studies(results, args.output)
    sys.stdout.write(format_study_table(results))
    logger.info("Results: %s, %s", csv_path, json_path)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("lognormal_cat.main:app", host=args.host, port=args.port, log_level="info")
    return EXIT_OK


COMMANDS = {
    "test": cmd_test,
    "simulate": cmd_simulate,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except LognormalCatError as exc:
        status = exit_code_for(exc)
        logger.error("%s: %s", exc.code, exc.message)
        print(f"error: {exc.message}", file=sys.stderr)
        return status


if __name__ == "__main__":
    raise SystemExit(main())
