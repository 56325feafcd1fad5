# Convfix Lab
# Command line: run, explain, gen-measure, group, init-config
# October 2026

import argparse
import logging
import sys

from config.vars import SUITES, VERSION
from src.app.logs import setup_logging
from src.app.scenario import ScenarioConfig, init_config, load_scenario
from src.app.runner.explain import explain_case, format_record, load_replay, replay
from src.app.runner.report import FAIL, UNDECIDED, encode_json, totals, write_jsonl, write_summary
from src.app.runner.runner import SuiteRunner
from src.app.runner.suites import carrier_for, inline_case, plan_profile, profile_from_plan
from src.errors import ConvfixError, UnknownCaseError
from src.groups.cayley import group_to_json
from src.measures.measure import measure_to_json
from src.measures.sampling import PROFILE_STYLES, random_contractive

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_UNKNOWN_CASE = 4


def _scenario(path: str | None) -> ScenarioConfig:
    return load_scenario(path) if path else ScenarioConfig()


def cmd_run(args) -> int:
    config = _scenario(args.config)
    runner = SuiteRunner(config)
    records = runner.run()
    write_jsonl(records, args.out, {"scenario": config.to_json(), "cases": len(records)})
    if args.summary:
        write_summary(records, args.summary)

    failed = 0
    for suite, counts in totals(records).items():
        print(f"{suite:<16} pass {counts['pass']:>6}  fail {counts[FAIL]:>4}  undecided {counts[UNDECIDED]:>4}")
        failed += counts[FAIL]
    stats = runner.get_debug_stats()
    print(f"{stats['cases_run']} cases, {failed} failed, {stats['errors_caught']} raised")
    logger.debug(f"[runner] debug stats {stats}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_explain(args) -> int:
    if args.replay:
        case_id, inputs = load_replay(args.replay)
        record = replay(case_id, inputs)
    elif args.case:
        record = explain_case(_scenario(args.config), args.case)
    else:
        suite = args.suite or ("dual" if args.dual else "fixedpoint")
        case = inline_case(_scenario(args.config), suite, args.group, args.measure, args.dual, args.p)
        record = replay(case.case_id, case.inputs)
    print(format_record(record))
    return EXIT_FAIL if record.verdict == FAIL else EXIT_OK


def cmd_gen_measure(args) -> int:
    group = carrier_for(args.group)
    profile = profile_from_plan(group, {**plan_profile(group, args.seed, 0, args.profile),
                                        **({"density": args.density} if args.density else {})})
    print(encode_json(measure_to_json(random_contractive(group, args.seed, profile))))
    return EXIT_OK


def cmd_group(args) -> int:
    group = carrier_for(args.spec)
    if args.dump:
        print(encode_json(group_to_json(group)))
    else:
        print(f"{group.name}: order {group.order}, {'abelian' if group.abelian else 'non-abelian'}")
    return EXIT_OK


def cmd_init_config(args) -> int:
    if init_config(args.out):
        print(f"wrote default scenario to {args.out}")
    else:
        print(f"{args.out} already exists, left untouched")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="convfix", description="Fixed points of convolution operators on groups")
    parser.add_argument("--version", action="version", version=f"convfix {VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the suites of a scenario")
    run.add_argument("--config", help="scenario JSON (defaults when omitted)")
    run.add_argument("--out", default="report.jsonl", help="JSON-lines report")
    run.add_argument("--summary", help="CSV summary")
    run.set_defaults(handler=cmd_run)

    explain = sub.add_parser("explain", help="replay one case verbosely")
    target = explain.add_mutually_exclusive_group(required=True)
    target.add_argument("--replay", help="a report record or bare inputs as JSON")
    target.add_argument("--case", help="case id, e.g. fixedpoint/cyclic:4/half-difference")
    target.add_argument("--measure", help="inline measure literal, e.g. '1:0.5, 3:-0.5'")
    target.add_argument("--dual", help="inline dual function char:k on a cyclic group")
    explain.add_argument("--config", help="scenario for --case, and tolerances for inline cases")
    explain.add_argument("--suite", choices=SUITES, help="suite for an inline case (fixedpoint, or dual with --dual)")
    explain.add_argument("--group", default="cyclic:4", help="group spec for an inline case (Z for the lattice)")
    explain.add_argument("--p", type=float, default=2.0, help="exponent for an inline lp case")
    explain.set_defaults(handler=cmd_explain)

    gen = sub.add_parser("gen-measure", help="print a seeded random contractive measure")
    gen.add_argument("--group", required=True)
    gen.add_argument("--profile", choices=PROFILE_STYLES, default="complex")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--density", type=float)
    gen.set_defaults(handler=cmd_gen_measure)

    group = sub.add_parser("group", help="describe a built-in group")
    group.add_argument("--spec", required=True)
    group.add_argument("--dump", action="store_true", help="print the Cayley table as JSON")
    group.set_defaults(handler=cmd_group)

    init = sub.add_parser("init-config", help="write the default scenario")
    init.add_argument("--out", default="scenario.json")
    init.set_defaults(handler=cmd_init_config)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        return args.handler(args)
    except UnknownCaseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNKNOWN_CASE
    except ConvfixError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
