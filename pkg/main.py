#!/usr/bin/env python3
"""
Ramanujan Transformation Verifier - Main Entry Point
Sweeps, spot checks and figure data for the cubic-to-quadratic 2F1 transformation.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from config_manager import ConfigManager
from constants import EXIT_CODES, FIGURE_IDS, LOG_PREFIXES, REPORT_FORMATS
from figures import emit_figure
from hypergeometric import catalog
from hypergeometric.catalog import ClosedFormEntry, IdentityEntry, RatioFamily
from hypergeometric.errors import ConvergenceError, HypergeometricError
from log_setup import configure_logging
from sweep_state import SweepReport
from verifier import (
    EvalRecord,
    SingularRecord,
    UsageError,
    Verifier,
    eval_record_dict,
    render_report,
    write_report,
)


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog='hypverify',
        description='Ramanujan Transformation Verifier - numerical checks of 2F1 identities',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s list                                   # Show every catalog id
  %(prog)s verify RBBG --min -0.49 --max 0.99 --samples 500 --tol 1e-9
  %(prog)s verify R3 --out r3.json                # Ratio law over a in [-1, 1]
  %(prog)s eval COMM                              # Closed form vs engine
  %(prog)s eval FF3 --a 0.3333333333333333
  %(prog)s eval KUMMER --json                     # Record as JSON
  %(prog)s singular --n 9
  %(prog)s figure 3R --out fig3r.csv --samples 400
  %(prog)s --show-config                          # Show config and exit
  %(prog)s --create-config                        # Create default config and exit

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 numerical non-convergence
        """
    )

    parser.add_argument('--config', '-c', type=str,
                        help='Path to configuration file')
    parser.add_argument('--show-config', action='store_true',
                        help='Show current configuration and exit')
    parser.add_argument('--create-config', action='store_true',
                        help='Create a default config file and exit')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='Log progress (INFO level)')
    parser.add_argument('--debug', action='store_true',
                        help='Log engine routes and solver steps (DEBUG level)')
    parser.add_argument('--workers', type=int,
                        help='Worker threads for sweeps (overrides config)')

    commands = parser.add_subparsers(dest='command', metavar='command')

    verify = commands.add_parser('verify', help='Sweep an identity, ratio family or parametric closed form')
    verify.add_argument('id')
    verify.add_argument('--min', dest='lo', type=float, help='Lower end of the grid')
    verify.add_argument('--max', dest='hi', type=float, help='Upper end of the grid')
    verify.add_argument('--samples', type=int, help='Number of grid points')
    verify.add_argument('--tol', type=float, help='Relative residual tolerance')
    verify.add_argument('--out', type=str, help='Write the report to this file')
    verify.add_argument('--format', choices=REPORT_FORMATS, help='Report format')

    evaluate = commands.add_parser('eval', help='Compare a closed form with the engine')
    evaluate.add_argument('id')
    evaluate.add_argument('--a', type=float, help='Free parameter of parametric entries')
    evaluate.add_argument('--digits', type=int, help='Significant digits to print')
    evaluate.add_argument('--json', action='store_true', help='Print the record as JSON')

    singular = commands.add_parser('singular', help='Solve for the singular modulus of order n')
    singular.add_argument('--n', type=int, required=True)
    singular.add_argument('--tol', type=float, help='Residual tolerance of the ratio')

    figure = commands.add_parser('figure', help='Write the data series of a figure as CSV')
    figure.add_argument('figure_id', choices=FIGURE_IDS)
    figure.add_argument('--out', type=str, required=True)
    figure.add_argument('--samples', type=int)

    commands.add_parser('list', help='List all catalog ids')

    return parser.parse_args(argv)


# ---------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------

def print_sweep_report(report: SweepReport):
    glyph = '✅' if report.passed else '❌'
    verdict = 'PASS' if report.passed else 'FAIL'
    lo, hi = report.domain
    print(f"{LOG_PREFIXES['SWEEP']} {glyph} {report.identity_id} {verdict}")
    print(f"  • {report.variable} in [{lo!r}, {hi!r}], {report.samples} samples")
    print(f"  • max abs residual: {report.max_abs_residual:.3e}")
    print(f"  • max rel residual: {report.max_rel_residual:.3e} (tol {report.tol:g})")
    print(f"  • worst point: {report.worst_point!r}")
    print(f"  • elapsed: {report.elapsed_ms} ms")


def print_eval_record(record: EvalRecord, digits: int):
    glyph = '✅' if record.passed else '❌'
    label = record.entry_id if record.a is None else f"{record.entry_id}(a={record.a!r})"
    print(f"{LOG_PREFIXES['CATALOG']} {glyph} {label}")
    print(f"  • closed form:  {record.closed_form:.{digits}g}")
    print(f"  • engine:       {record.engine:.{digits}g}")
    print(f"  • abs residual: {record.abs_residual:.3e}")
    print(f"  • rel residual: {record.rel_residual:.3e} (tol {record.tol:g})")
    route = record.route
    if record.required_route:
        route += f" (required {record.required_route}{'' if record.route_ok else ', NOT TAKEN'})"
    print(f"  • route:        {route}")


def print_singular_record(record: SingularRecord, tol: float):
    glyph = '✅' if record.ratio_residual <= tol else '❌'
    print(f"{LOG_PREFIXES['SINGULAR']} {glyph} n = {record.n}")
    print(f"  • x_n:            {record.x_n!r}")
    print(f"  • ratio residual: {record.ratio_residual:.3e}")
    print(f"  • iterations:     {record.iterations}")
    if record.closed_form_deviation is not None:
        print(f"  • |x_9 - closed form|: {record.closed_form_deviation:.3e}")


def print_catalog():
    groups = (
        ('Identities (verify)', IdentityEntry),
        ('Closed forms (eval; parametric ones also verify)', ClosedFormEntry),
        ('Ratio families (verify, or eval --a)', RatioFamily),
    )
    for title, kind in groups:
        print(f"\n{title}:")
        for entry_id in catalog.catalog_ids():
            entry = catalog.get_entry(entry_id)
            if isinstance(entry, kind):
                print(f"  {entry_id:<10} {entry.description}")


# ---------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------

def cmd_verify(args, verifier: Verifier, config: ConfigManager) -> int:
    report = verifier.run_verify(args.id, args.lo, args.hi, args.samples, args.tol)

    if args.out:
        fmt = args.format or config.REPORT_FORMAT
        path = write_report(report, Path(args.out), fmt)
        print_sweep_report(report)
        print(f"  • report: {path}")
    elif args.format:
        sys.stdout.write(render_report(report, args.format))
    else:
        print_sweep_report(report)

    return EXIT_CODES['PASS'] if report.passed else EXIT_CODES['FAIL']


def cmd_eval(args, verifier: Verifier, config: ConfigManager) -> int:
    digits = config.DIGITS if args.digits is None else args.digits
    if not 1 <= digits <= 17:
        raise UsageError(f"--digits must lie in [1, 17] (got {digits})")
    record = verifier.run_eval(args.id, args.a)
    if args.json:
        sys.stdout.write(json.dumps(eval_record_dict(record), indent=2) + '\n')
    else:
        print_eval_record(record, digits)
    return EXIT_CODES['PASS'] if record.passed else EXIT_CODES['FAIL']


def cmd_singular(args, verifier: Verifier, config: ConfigManager) -> int:
    tol = config.SINGULAR_TOL if args.tol is None else args.tol
    record = verifier.run_singular(args.n, tol)
    print_singular_record(record, tol)
    return EXIT_CODES['PASS'] if record.ratio_residual <= tol else EXIT_CODES['FAIL']


def cmd_figure(args, verifier: Verifier, config: ConfigManager) -> int:
    samples = config.FIGURE_SAMPLES if args.samples is None else args.samples
    if samples < 2:
        raise UsageError(f"--samples must be >= 2 (got {samples})")
    series = emit_figure(args.figure_id, Path(args.out), samples, config.ENDPOINT_EPSILON)
    print(f"{LOG_PREFIXES['FIGURE']} ✅ Figure {args.figure_id}: {len(series.rows)} rows "
          f"({', '.join(series.columns)}) written to {args.out}")
    return EXIT_CODES['PASS']


def cmd_list(args, verifier: Verifier, config: ConfigManager) -> int:
    print_catalog()
    return EXIT_CODES['PASS']


COMMANDS = {
    'verify': cmd_verify,
    'eval': cmd_eval,
    'singular': cmd_singular,
    'figure': cmd_figure,
    'list': cmd_list,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point; returns the process exit code."""
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for bad usage
        return e.code if isinstance(e.code, int) else EXIT_CODES['USAGE']

    configure_logging('DEBUG' if args.debug else 'INFO' if args.verbose else None)

    # Initialize configuration
    config = ConfigManager(Path(args.config) if args.config else None)

    # Handle --create-config flag
    if args.create_config:
        try:
            path = config.create_default_config()
        except OSError as e:
            print(f"{LOG_PREFIXES['CONFIG']} ❌ Failed to create config file: {e}")
            return EXIT_CODES['USAGE']
        print(f"✅ Configuration file created at: {path}")
        return EXIT_CODES['PASS']

    if not (args.debug or args.verbose):
        configure_logging(config.LOG_LEVEL)

    # Show configuration if requested
    if args.show_config:
        config.print_summary()
        return EXIT_CODES['PASS']

    # Validate configuration
    errors = config.validate()
    if errors:
        print(f"{LOG_PREFIXES['CONFIG']} ❌ Configuration errors found:")
        for section, section_errors in errors.items():
            print(f"\n  [{section}]")
            for error in section_errors:
                print(f"    • {error}")
        print("\nPlease fix these errors and try again.")
        return EXIT_CODES['USAGE']

    if args.command is None:
        print(f"{LOG_PREFIXES['APP']} ❌ No command given; try --help")
        return EXIT_CODES['USAGE']

    if args.workers is not None and args.workers < 1:
        print(f"{LOG_PREFIXES['APP']} ❌ --workers must be >= 1")
        return EXIT_CODES['USAGE']

    verifier = Verifier(config, workers=args.workers)

    try:
        return COMMANDS[args.command](args, verifier, config)
    except ConvergenceError as e:
        print(f"{LOG_PREFIXES['APP']} ❌ Numerical non-convergence: {e}")
        return EXIT_CODES['NUMERICAL']
    except (UsageError, HypergeometricError, KeyError, ValueError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"{LOG_PREFIXES['APP']} ❌ {message}")
        return EXIT_CODES['USAGE']
    except OSError as e:
        print(f"{LOG_PREFIXES['APP']} ❌ I/O error: {e}")
        return EXIT_CODES['USAGE']


if __name__ == "__main__":
    sys.exit(main())
