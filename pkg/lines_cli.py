#!/usr/bin/env python3
"""
Command-line front end: lines, check, search, witness, gen.

Exit codes: 0 success, 1 a check or certificate failed, 2 usage, parse or
precondition error. Reports go to stdout, logs to stderr.
"""
import argparse
import json
import logging
import random
import sys
from typing import Callable, Dict, List, Optional, Tuple

from line_documents import (
    InputDocument,
    certificate_to_dict,
    document_of,
    format_certificate,
    format_document,
    format_hypergraph,
    parse_input,
)
from line_search import Constraint, Engine, Mode, SearchTask, min_lines, sampled_search
from lines_config import RunConfig, configure_logging, load_config
from lines_core import (
    InvalidArgumentError,
    InvalidSizeError,
    InvariantViolation,
    LinesError,
    PreconditionError,
    all_lines,
    lines_as_lists,
)
from metric_spaces import Family, gen_family
from proofkit import (
    SpanSearch,
    extract_certificate,
    suite_antichain,
    suite_bernstein,
    suite_certificate,
    suite_lg_bound,
    suite_span,
    suite_trace,
    validate_certificate,
)

logger = logging.getLogger(__name__)

SUITES = ("antichain", "trace", "span", "lg_bound", "bernstein", "certificate")

# list keys rendered one record per item in text reports
ITEM_NAMES = {"lines": "line", "suites": "suite", "inequalities": "ineq", "witness": "hedge", "problems": "problem"}

Report = Tuple[int, Dict, Optional[str]]


def parse_shard(text: str) -> Tuple[int, int]:
    try:
        index, count = (int(part) for part in text.split("/"))
    except ValueError:
        raise InvalidArgumentError(f"shard must look like I/K, got {text!r}", kind="invalid-shard")
    if count < 1 or not 0 <= index < count:
        raise InvalidArgumentError(f"shard {text} needs 0 <= I < K", kind="invalid-shard")
    return index, count


def read_input(path: Optional[str]) -> InputDocument:
    if path is None or path == "-":
        return parse_input(sys.stdin.read())
    try:
        with open(path, 'r') as f:
            return parse_input(f.read())
    except OSError as e:
        raise InvalidArgumentError(f"cannot read {path}: {e}", kind="io-error")


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def render_text(report: Dict) -> str:
    """Text form of a report; carries the same values as the JSON form."""
    rows: List[str] = []
    for key, value in report.items():
        if isinstance(value, dict):
            rows += [f"{key} {k} {_scalar(v)}" for k, v in value.items()]
        elif isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            name = ITEM_NAMES.get(key, key)
            for item in value:
                values = item.values() if isinstance(item, dict) else item
                rows.append(" ".join([name] + [_scalar(v) for v in values]))
        elif isinstance(value, list):
            rows.append(" ".join([key] + [_scalar(v) for v in value]))
        else:
            rows.append(f"{key} {_scalar(value)}")
    return "\n".join(rows) + "\n"


def _hypergraph_of(args) -> Tuple[InputDocument, object]:
    document = read_input(args.input)
    h = document.hypergraph()
    if h.n < 2:
        raise InvalidSizeError(f"need n >= 2, got {h.n}")
    return document, h


def cmd_lines(args, config: RunConfig) -> Report:
    document, h = _hypergraph_of(args)
    lines = all_lines(h)
    report = {
        "kind": document.kind,
        "n": h.n,
        "m": lines.m,
        "universal": h.engine.universal,
        "lines": lines_as_lists(lines),
    }
    return 0, report, None


def cmd_check(args, config: RunConfig) -> Report:
    document, h = _hypergraph_of(args)
    rng = random.Random(config.seed)
    if args.suite == "all":
        names = [s for s in SUITES if s != "certificate" or document.certificate is not None]
    else:
        names = [args.suite]
    outcomes = []
    for name in names:
        if name == "antichain":
            outcome = suite_antichain(h, rng, config.sandwich_trials)
        elif name == "trace":
            outcome = suite_trace(h)
        elif name == "span":
            outcome = suite_span(h, rng, config.span_samples)
        elif name == "lg_bound":
            outcome = suite_lg_bound(h)
        elif name == "bernstein":
            outcome = suite_bernstein(config.bernstein_max_n)
        else:
            if document.certificate is None:
                raise PreconditionError("suite certificate needs a certificate document", kind="not-a-certificate")
            outcome = suite_certificate(h, document.certificate)
        if not outcome.passed:
            logger.error("suite %s failed: %s", outcome.name, outcome.detail)
        outcomes.append(outcome)
    passed = all(o.passed for o in outcomes)
    report = {
        "n": h.n,
        "suites": [{"name": o.name, "result": "PASS" if o.passed else "FAIL", "detail": o.detail} for o in outcomes],
        "result": "PASS" if passed else "FAIL",
    }
    return (0 if passed else 1), report, None


def cmd_search(args, config: RunConfig) -> Report:
    constraint = Constraint(args.constraint.replace("-", "_"))
    shard = parse_shard(args.shard) if args.shard else (0, 1)
    if Mode(args.mode) is Mode.EXHAUSTIVE:
        result = min_lines(args.n, constraint, shard=shard, engine=args.engine, iso_reject=args.iso_reject,
                           workers=config.workers, checkpoint=config.checkpoint,
                           checkpoint_every=config.checkpoint_every)
    else:
        task = SearchTask(args.n, Mode.SAMPLED, constraint, config.seed, shard)
        result = sampled_search(task, config.trials, engine=args.engine, workers=config.workers)
    report = result.to_dict()
    text = None
    if not args.json:
        witness = report.pop("witness")
        text = render_text(report)
        if witness is not None:
            text += "witness\n" + format_hypergraph(result.argmin)
        report["witness"] = witness
    return 0, report, text


def cmd_witness(args, config: RunConfig) -> Report:
    _, h = _hypergraph_of(args)
    cert = extract_certificate(h, args.epsilon, args.mode)
    problems = validate_certificate(h, cert)
    for problem in problems:
        logger.error("certificate invalid: %s", problem)
    document = format_certificate(cert, h)
    report = certificate_to_dict(cert)
    report["valid"] = not problems
    report["problems"] = problems
    code = 0 if not problems else 1
    if args.output:
        with open(args.output, 'w') as f:
            f.write(document)
        return code, report, None
    return code, report, None if args.json else document


def cmd_gen(args, config: RunConfig) -> Report:
    obj = gen_family(args.family, args.n, config.seed)
    document = format_document(document_of(obj))
    report = {"family": Family(args.family).value, "n": args.n, "seed": config.seed}
    if args.output:
        with open(args.output, 'w') as f:
            f.write(document)
        report["output"] = args.output
        return 0, report, None
    report["document"] = document
    return 0, report, None if args.json else document


COMMANDS: Dict[str, Callable[..., Report]] = {
    "lines": cmd_lines,
    "check": cmd_check,
    "search": cmd_search,
    "witness": cmd_witness,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="Input document (default: standard input)")
    common.add_argument("--json", action="store_true", help="Emit the report as JSON")
    common.add_argument("--seed", type=int, help="Random seed (default: 0)")
    common.add_argument("--shard", help="Search shard I/K (default: 0/1)")
    common.add_argument("--checkpoint", help="Search checkpoint file; resumed when it matches the task")
    common.add_argument("--workers", type=int, help="Worker processes for search (default: 1)")
    common.add_argument("--config", help="JSON config file with run settings")
    common.add_argument("--log-level", help="Logging level (default: WARNING)")

    parser = argparse.ArgumentParser(
        description="Lines of 3-uniform hypergraphs and metric spaces: count, check, search, certify",
        epilog="""Examples:
  # Lines of a hypergraph read from a file
  %(prog)s lines --input h.txt

  # Every checker on the same input, JSON report
  %(prog)s check --input h.txt --suite all --json

  # Exhaustive minimum over n = 5 in four shards
  %(prog)s search --n 5 --shard 2/4

  # Certificate for epsilon = 1/4
  %(prog)s witness --input h.txt --epsilon 1/4
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("lines", parents=[common], help="List the distinct lines")

    check = sub.add_parser("check", parents=[common], help="Run proof checkers")
    check.add_argument("--suite", choices=SUITES + ("all",), default="all")
    check.add_argument("--trials", type=int, help="Random sandwich maps for the antichain suite")

    search = sub.add_parser("search", parents=[common], help="Search for few lines")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.EXHAUSTIVE.value)
    search.add_argument("--constraint", default=Constraint.NO_UNIVERSAL.value,
                        choices=[c.value for c in Constraint] + [c.value.replace("_", "-") for c in Constraint])
    search.add_argument("--trials", type=int, help="Sampled trials (default: 10000)")
    search.add_argument("--engine", choices=[e.value for e in Engine], default=Engine.OPTIMIZED.value)
    search.add_argument("--iso-reject", action="store_true", help="Examine one hypergraph per isomorphism class")

    witness = sub.add_parser("witness", parents=[common], help="Extract and validate a bound certificate")
    witness.add_argument("--epsilon", required=True, help="Rational in (0, 1/2), e.g. 1/4")
    witness.add_argument("--mode", choices=[m.value for m in SpanSearch], default=SpanSearch.EXHAUSTIVE.value)
    witness.add_argument("--output", help="Write the certificate document here")

    gen = sub.add_parser("gen", parents=[common], help="Generate an instance of a family")
    gen.add_argument("--family", choices=[f.value for f in Family], required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--output", help="Write the document here")
    return parser


def _flags(args) -> Dict:
    flags = {
        "seed": args.seed,
        "workers": args.workers,
        "checkpoint": args.checkpoint,
        "log_level": args.log_level,
    }
    if args.command in ("check", "search"):
        key = "sandwich_trials" if args.command == "check" else "trials"
        flags[key] = args.trials
    return flags


def main(argv: Optional[List[str]] = None, environ=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config, _flags(args), environ)
        configure_logging(config.log_level)
        code, report, text = COMMANDS[args.command](args, config)
    except InvariantViolation as e:
        print(f"error[{e.kind}]: {e}", file=sys.stderr)
        return 1
    except LinesError as e:
        print(f"error[{e.kind}]: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 130

    if args.json:
        print(json.dumps(report, indent=2))
    else:
        sys.stdout.write(text if text is not None else render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
