"""Command-line front door.

Subcommands: check, toughness, sinks, theorem, partitions,
verify-optimality.  Every subcommand takes --json for a machine
mirror of the text output (all JSON carries "schema": 1).

Exit codes: 0 success / declared / true, 1 well-formed negative
verdict, 2 usage or input error.  TOUGHSEQ_MAX_N caps the exhaustive
sweep sizes (default 7).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .checkers import (
    check_hamiltonian_chvatal,
    check_kconnected,
    check_tough_ge1,
    check_tough_le1,
    parse_rational,
    tough_ge1_conditions,
)
from .conditions import canonicalize, format_condition, frontier_sequence, parse_condition
from .graphs import read_graph, toughness
from .partitions import count_partitions, enumerate_partitions
from .sequences import NotGraphicalError, format_sequence, majorizes, parse_sequence
from .subposet import generate_best_monotone, is_weakly_optimal, subposet_report, sweep_sinks

SCHEMA = 1


def _max_sweep_n() -> int:
    raw = os.environ.get("TOUGHSEQ_MAX_N", "7")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"TOUGHSEQ_MAX_N must be an integer, got {raw!r}") from None


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def cmd_check(args) -> int:
    seq = parse_sequence(args.seq)
    allow = args.allow_nongraphical
    if args.hamiltonian:
        prop = "forcibly hamiltonian"
        verdict = check_hamiltonian_chvatal(seq, allow_nongraphical=allow)
    elif args.connected is not None:
        prop = f"forcibly {args.connected}-connected"
        verdict = check_kconnected(seq, args.connected, allow_nongraphical=allow)
    else:
        t = parse_rational(args.tough)
        prop = f"forcibly {t}-tough"
        if t >= 1:
            verdict = check_tough_ge1(seq, t, allow_nongraphical=allow)
        else:
            verdict = check_tough_le1(seq, t, allow_nongraphical=allow)

    lines = [
        f"sequence: {format_sequence(seq)} (n = {seq.n})",
        f"property: {prop}",
        f"declared: {'yes' if verdict.declared else 'no'}",
    ]
    if not verdict.declared:
        where = f"failing index: {verdict.failing_index}"
        if verdict.failing_rule:
            where += f" (rule {verdict.failing_rule})"
        lines.append(where)
        if verdict.blocking_sequence is not None:
            lines.append(f"blocking sequence: {format_sequence(verdict.blocking_sequence)}")
        if verdict.blocking_shape is not None:
            lines.append(f"blocking graph: {verdict.shape_text()}")
    payload = {"sequence": list(seq), "property": prop, **verdict.to_json()}
    _emit(args, payload, lines)
    return 0 if verdict.declared else 1


def cmd_toughness(args) -> int:
    g = read_graph(args.graph_file)
    result = toughness(g)
    tau = result.value
    lines = [f"tau = {tau.numerator}/{tau.denominator}"]
    if result.witness_cutset is None:
        lines.append("witness cutset: none (complete graph)")
    else:
        lines.append(f"witness cutset: {{{', '.join(map(str, result.witness_cutset))}}}")
        lines.append(f"components after removal: {result.witness_components}")
    payload = {
        "n": g.n,
        "tau": {"num": tau.numerator, "den": tau.denominator},
        "witness_cutset": list(result.witness_cutset) if result.witness_cutset is not None else None,
        "witness_components": result.witness_components,
    }
    _emit(args, payload, lines)
    return 0


def cmd_sinks(args) -> int:
    report = subposet_report(args.k, m=args.m, n=args.n,
                             verify_claims=args.verify_claims)
    lines = [
        f"k: {report.k}  n: {report.n}" + (f"  m: {report.m}" if report.m is not None else ""),
        f"family size: {report.family_size}",
    ]
    for grp in report.groups:
        match = "ok" if grp.count == grp.expected_count else "MISMATCH"
        lines.append(f"group j={grp.j}: {grp.count} sequences (expected {grp.expected_count}, {match})")
    lines.append(f"sink count: {report.sink_count}")
    bound_note = ""
    if report.bound_applies:
        bound_note = " (holds)" if report.bound_holds else " (VIOLATED)"
    lines.append(f"bound: {report.bound.numerator}/{report.bound.denominator}{bound_note}")
    if args.verify_claims:
        lines.append(f"claim2 (no majorization within a group): {report.claim2}")
        lines.append(f"claim3 (large noncomplete degree implies sink): {report.claim3}")
    payload = report.to_json()
    if args.emit_conditions:
        conds = generate_best_monotone(report.sinks)
        lines.append(f"best monotone conditions ({len(conds)}):")
        lines.extend(f"  {format_condition(c)}" for c in conds)
        payload["conditions"] = [
            {"n": c.n, "clauses": [list(cl) for cl in c.clauses], "text": format_condition(c)}
            for c in conds
        ]
    _emit(args, payload, lines)
    negative = (
        not report.counts_match
        or report.bound_holds is False
        or report.claim2 is False
        or report.claim3 is False
    )
    return 1 if negative else 0


def cmd_theorem(args) -> int:
    t = parse_rational(args.t)
    n = args.n
    if args.best_monotone:
        cap = _max_sweep_n()
        if n > cap:
            raise ValueError(f"best-monotone sweep limited to n <= {cap} (TOUGHSEQ_MAX_N)")
        if t <= 0:
            raise ValueError("t must be positive")
        all_sinks, _ = sweep_sinks(n, t)
        conds = generate_best_monotone(all_sinks)
    else:
        if t < 1:
            raise ValueError("condition listing requires t >= 1; use --best-monotone for t < 1")
        conds = [canonicalize(c) for _, c in tough_ge1_conditions(t, n)]
    lines = [format_condition(c) for c in conds]
    payload = {
        "t": {"num": t.numerator, "den": t.denominator},
        "n": n,
        "best_monotone": bool(args.best_monotone),
        "conditions": [
            {"n": c.n, "clauses": [list(cl) for cl in c.clauses], "text": format_condition(c)}
            for c in conds
        ],
    }
    _emit(args, payload, lines)
    return 0


def cmd_partitions(args) -> int:
    count = count_partitions(args.r, max_parts=args.max_parts, max_part=args.max_part)
    lines = [str(count)]
    payload = {"r": args.r, "max_parts": args.max_parts, "max_part": args.max_part,
               "count": count}
    if args.list:
        parts = enumerate_partitions(args.r, max_parts=args.max_parts, max_part=args.max_part)
        lines.extend("+".join(map(str, lam)) if lam else "(empty)" for lam in parts)
        payload["partitions"] = parts
    _emit(args, payload, lines)
    return 0


def cmd_verify_optimality(args) -> int:
    if args.n is not None:
        n = args.n
    elif args.m is not None:
        n = args.m * (args.k + 1)
    else:
        raise ValueError("give --n or --m")
    cond = parse_condition(args.condition, n)
    t = Fraction(1, args.k)
    if args.family_sinks:
        sinks = tuple(subposet_report(args.k, n=n, verify_claims=False).sinks)
        source = "connected family"
    else:
        cap = _max_sweep_n()
        if n > cap:
            raise ValueError(
                f"sweep limited to n <= {cap} (TOUGHSEQ_MAX_N); pass --family-sinks for larger n"
            )
        sinks, _ = sweep_sinks(n, t)
        source = "exhaustive sweep"
    result = is_weakly_optimal(cond, sinks)
    frontier = frontier_sequence(cond)
    witness = next((s for s in sinks if majorizes(s, frontier)), None)
    lines = [
        f"condition: {format_condition(canonicalize(cond))} (n = {n})",
        f"property: 1/{args.k}-tough  (sinks from {source}: {len(sinks)})",
        f"frontier sequence: {format_sequence(frontier)}",
        f"weakly optimal: {'yes' if result else 'no'}",
    ]
    if witness is not None:
        lines.append(f"majorizing sink: {format_sequence(witness)}")
    payload = {
        "condition": {"n": n, "clauses": [list(cl) for cl in canonicalize(cond).clauses],
                      "text": format_condition(canonicalize(cond))},
        "k": args.k,
        "sink_source": source,
        "sink_count": len(sinks),
        "frontier": list(frontier),
        "weakly_optimal": result,
        "majorizing_sink": list(witness) if witness is not None else None,
    }
    _emit(args, payload, lines)
    return 0 if result else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toughseq",
        description="Degree-sequence conditions for graph toughness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run a forcibly-P checker on a degree sequence")
    p_check.add_argument("--seq", required=True, help="degree sequence, e.g. '2^2 3^3 5' or '2,2,3'")
    group = p_check.add_mutually_exclusive_group(required=True)
    group.add_argument("--hamiltonian", action="store_true", help="Chvatal's hamiltonian condition")
    group.add_argument("--connected", type=int, metavar="K", help="Bondy-Boesch k-connectivity condition")
    group.add_argument("--tough", metavar="P/Q", help="forcibly t-tough for exact rational t")
    p_check.add_argument("--allow-nongraphical", action="store_true",
                         help="judge the conditions even if the sequence is not graphical")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_tough = sub.add_parser("toughness", help="exact toughness of a graph file")
    p_tough.add_argument("graph_file", help="edge list (first line n, then 'u v' lines) or JSON {n, edges}")
    p_tough.add_argument("--json", action="store_true")
    p_tough.set_defaults(func=cmd_toughness)

    p_sinks = sub.add_parser("sinks", help="enumerate the 1/k-tough family and its sinks")
    p_sinks.add_argument("--k", type=int, required=True)
    size = p_sinks.add_mutually_exclusive_group(required=True)
    size.add_argument("--m", type=int, help="n = m(k+1)")
    size.add_argument("--n", type=int)
    p_sinks.add_argument("--emit-conditions", action="store_true",
                         help="also print the best monotone condition per sink")
    p_sinks.add_argument("--verify-claims", action="store_true",
                         help="verify the group-structure claims (quadratic in group size)")
    p_sinks.add_argument("--json", action="store_true")
    p_sinks.set_defaults(func=cmd_sinks)

    p_thm = sub.add_parser("theorem", help="print a t-tough condition list")
    p_thm.add_argument("--t", required=True, metavar="P/Q")
    p_thm.add_argument("--n", type=int, required=True)
    p_thm.add_argument("--best-monotone", action="store_true",
                       help="derive conditions from the sinks of an exhaustive sweep (small n)")
    p_thm.add_argument("--json", action="store_true")
    p_thm.set_defaults(func=cmd_theorem)

    p_part = sub.add_parser("partitions", help="count or list integer partitions")
    p_part.add_argument("--r", type=int, required=True)
    p_part.add_argument("--max-parts", type=int, default=None)
    p_part.add_argument("--max-part", type=int, default=None)
    p_part.add_argument("--list", action="store_true")
    p_part.add_argument("--json", action="store_true")
    p_part.set_defaults(func=cmd_partitions)

    p_opt = sub.add_parser("verify-optimality",
                           help="is a condition weakly optimal for 1/k-toughness?")
    p_opt.add_argument("--condition", required=True, help="e.g. 'd2>=3 | d5>=4'")
    p_opt.add_argument("--k", type=int, required=True)
    p_opt.add_argument("--n", type=int)
    p_opt.add_argument("--m", type=int, help="n = m(k+1)")
    p_opt.add_argument("--family-sinks", action="store_true",
                       help="use connected-family sinks instead of the exhaustive sweep")
    p_opt.add_argument("--json", action="store_true")
    p_opt.set_defaults(func=cmd_verify_optimality)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotGraphicalError as exc:
        print(f"error: {exc} (pass --allow-nongraphical to judge it anyway)", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
