"""
CLI entry point for forced/forbidden edge analysis
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__
from .config_helper import JOBS_ENV_VAR, ConfigHelper
from .errors import ForcedEdgesError, LengthMismatchError, NotGraphicError, SamplerDeadEndError
from .forced_sets import analyze, labeled_forced_edges, packing_obstruction
from .oracle import enumerate_graphic_sequences, enumerate_realizations, verify_all
from .realize import mcmc_sample, sis_sample
from .seq_core import DegreeSequence, complement, format_sequence, is_graphic, majorizes, parse_sequence

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_NOT_GRAPHIC = 3


def _require_graphic(values: Sequence[int]) -> None:
    if not is_graphic(values):
        raise NotGraphicError(f"Sequence {format_sequence(values)} is not graphic.")


def _degree_sequence(text: str) -> DegreeSequence:
    """Parse, check graphicality first (exit 3), then the sorted-order invariant (exit 2)."""
    values = parse_sequence(text)
    _require_graphic(values)
    return DegreeSequence(values)


def _emit_json(document) -> None:
    print(json.dumps(document, indent=2))


def cmd_analyze(args: argparse.Namespace, config: ConfigHelper) -> int:
    report = analyze(_degree_sequence(args.sequence))
    fmt = args.format or config.get_output_format()
    if fmt == 'json':
        _emit_json(report.to_dict())
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_sample(args: argparse.Namespace, config: ConfigHelper) -> int:
    values = parse_sequence(args.sequence)
    _require_graphic(values)
    method = args.method or config.get_sample_method()
    steps = args.steps if args.steps is not None else config.get_sample_steps()
    seed = args.seed if args.seed is not None else config.get_sample_seed()

    if method == 'mcmc':
        print(f"[SAMPLE] mcmc: {steps} steps, seed {seed}", file=sys.stderr)
        graph = mcmc_sample(values, steps=steps, seed=seed)
    else:
        print(f"[SAMPLE] sis: seed {seed}", file=sys.stderr)
        graph = sis_sample(values, seed=seed)

    fmt = args.format or config.get_output_format()
    if fmt == 'json':
        _emit_json(graph.to_dict())
    elif fmt == 'dot':
        print(graph.to_dot(highlight=labeled_forced_edges(values)))
    else:
        print(graph.to_edge_list())
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, config: ConfigHelper) -> int:
    if (args.sequence is None) == (args.n is None):
        raise ForcedEdgesError("enumerate takes either a sequence or --n, not both.")

    if args.n is not None:
        sequences = list(enumerate_graphic_sequences(args.n))
        if args.count:
            print(len(sequences))
        else:
            for seq in sequences:
                print(seq)
        return EXIT_OK

    values = parse_sequence(args.sequence)
    _require_graphic(values)
    realizations = enumerate_realizations(values, limit=args.limit, max_n=config.get_oracle_max_n())
    if args.count:
        print(sum(1 for _ in realizations))
        return EXIT_OK
    for g in realizations:
        print(",".join(str(e) for e in g.edges()) or "(empty)")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: ConfigHelper) -> int:
    jobs = args.jobs if args.jobs is not None else config.get_verify_jobs()
    report = verify_all(args.n, jobs=jobs, progress=True, settings=config.get_verify_settings())
    fmt = args.format or config.get_output_format()
    if fmt == 'json':
        _emit_json(report.to_dict())
    else:
        print(report.to_text())
    return report.exit_code


def cmd_pack_check(args: argparse.Namespace, config: ConfigHelper) -> int:
    left, right = list(parse_sequence(args.first)), list(parse_sequence(args.second))
    if len(left) != len(right):
        if not args.pad:
            raise LengthMismatchError(
                f"Sequences have lengths {len(left)} and {len(right)}; use --pad to extend with zeros."
            )
        size = max(len(left), len(right))
        left += [0] * (size - len(left))
        right += [0] * (size - len(right))
    shared = packing_obstruction(left, right)
    if shared is None:
        print("no obstruction found (no shared forced edge; packing not certified)")
    else:
        print(f"shared forced edge {shared}: cannot pack")
    return EXIT_OK


def cmd_complement(args: argparse.Namespace, config: ConfigHelper) -> int:
    print(complement(DegreeSequence(parse_sequence(args.sequence))))
    return EXIT_OK


def cmd_majorize(args: argparse.Namespace, config: ConfigHelper) -> int:
    print(majorizes(parse_sequence(args.first), parse_sequence(args.second)).value)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, ConfigHelper], int]] = {
    'analyze': cmd_analyze,
    'sample': cmd_sample,
    'enumerate': cmd_enumerate,
    'verify': cmd_verify,
    'pack-check': cmd_pack_check,
    'complement': cmd_complement,
    'majorize': cmd_majorize,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='forced-edges',
        description="Forced and forbidden edges of graphic degree sequences",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Examples:
  # Forced/forbidden structure of a sequence
  forced-edges analyze 4,4,3,3,3,1

  # Reproducible sample, forced edges highlighted
  forced-edges sample 4,4,3,3,3,1 --method mcmc --steps 1000 --seed 1 --format dot

  # Exhaustive theorem sweep over all graphic sequences of length 6
  forced-edges verify --n 6 --jobs 4

  # Shared forced edge rules out a packing
  forced-edges pack-check 4,4,4,1,1,1,1,1,1 0,1,1,0,0,0,0,0 --pad

Exit codes: 0 ok, 1 counterexample found, 2 usage or parse error, 3 sequence not graphic.
{JOBS_ENV_VAR} sets the default number of verify workers.
        """
    )
    parser.add_argument(
        '--config',
        type=str,
        help='Path to configuration file (forced_edges_config.yaml); must exist when given'
    )
    parser.add_argument(
        '--version',
        action='version',
        version=f'%(prog)s {__version__}'
    )
    parser.add_argument(
        '--debug',
        action='store_true',
        help='Enable debug mode (show full tracebacks)'
    )

    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('analyze', help='Forced/forbidden sets and derived properties')
    p.add_argument('sequence', help='Non-increasing degree sequence, e.g. 4,4,3,3,3,1')
    p.add_argument('--format', choices=['text', 'json'], help='Output format (default: config or text)')

    p = sub.add_parser('sample', help='Sample one labeled realization')
    p.add_argument('sequence', help='Labeled degree sequence')
    p.add_argument('--method', choices=['mcmc', 'sis'], help='Sampler (default: config or mcmc)')
    p.add_argument('--steps', type=int, help='MCMC proposal rounds (default: config or 1000)')
    p.add_argument('--seed', type=int, help='Random seed (default: config or 0)')
    p.add_argument('--format', choices=['text', 'json', 'dot'],
                   help='Output format (default: edge list)')

    p = sub.add_parser(
        'enumerate', help='List realizations of a sequence, or graphic sequences of length n'
    )
    p.add_argument('sequence', nargs='?', help='Labeled degree sequence (n <= 10)')
    p.add_argument('--n', type=int, help='List every graphic sequence of this length (n <= 8)')
    p.add_argument('--limit', type=int, help='Stop after this many realizations')
    p.add_argument('--count', action='store_true', help='Print only the number of results')

    p = sub.add_parser('verify', help='Check every theorem on all graphic sequences of length n')
    p.add_argument('--n', type=int, required=True, help='Sequence length (n <= 7)')
    p.add_argument('--jobs', type=int, help=f'Worker processes (default: {JOBS_ENV_VAR}, config or 1)')
    p.add_argument('--format', choices=['text', 'json'], help='Report format (default: config or text)')

    p = sub.add_parser('pack-check', help='Look for a shared forced edge between two labeled sequences')
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--pad', action='store_true', help='Extend the shorter sequence with trailing zeros')

    p = sub.add_parser('complement', help='Complement sequence')
    p.add_argument('sequence')

    p = sub.add_parser('majorize', help='Compare two sequences under majorization')
    p.add_argument('first')
    p.add_argument('second')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = ConfigHelper.from_path(args.config) if args.config else ConfigHelper()
        return COMMANDS[args.command](args, config)
    except NotGraphicError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_NOT_GRAPHIC
    except (ValueError, FileNotFoundError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\n[VERIFY] Interrupted by user", file=sys.stderr)
        return 130
    except SamplerDeadEndError as e:
        print(f"Sampler error: {e}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        if args.debug:
            import traceback

            traceback.print_exc()
        return EXIT_COUNTEREXAMPLE


if __name__ == '__main__':
    sys.exit(main())
