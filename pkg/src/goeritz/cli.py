"""Command line front end.

Exit codes: 0 success (or verdict: primitive), 1 verdict: not primitive,
2 invalid input, 3 sweep found failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import DisconnectedComplexError, classify
from .farey import ConnectedComplexError, nonconnectivity_witness
from .presentations import (
    abelianize_presentation,
    amalgam_decomposition,
    display_name,
    goeritz_presentation,
    render,
)
from .primitivity import (
    FilterOutcome,
    is_primitive_positive,
    is_primitive_whitehead,
    nonprimitivity_filter,
    whitehead_trace,
)
from .report import (
    build_report,
    params_dict,
    report_dict,
    structure_dict,
    witness_dict,
)
from .sequences import InvalidParameters, make_params, pq_sequence
from .shells import ShellKind, build_shell, intersection_number
from .sweeps import DEFAULT_BOUNDS, run_sweep
from .words import WordParseError, parse_word


def _print_json(data) -> None:
    print(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=False))


def cmd_primitive(args) -> int:
    word = parse_word(args.word)
    method = args.method
    verdict = None
    outcome = None
    chain = []
    filter_verdict = None

    if method in ("auto", "filter"):
        filter_verdict = nonprimitivity_filter(word)
        if filter_verdict.outcome is FilterOutcome.NOT_PRIMITIVE:
            verdict, method = False, "filter"
        elif method == "filter":
            outcome = "inconclusive"
    if verdict is None and method in ("auto", "oz"):
        if all(letter.sign > 0 for letter in word.letters):
            verdict = is_primitive_positive(word)
            method = "oz"
        elif method == "oz":
            raise InvalidParameters(
                "the positive-word test needs a word without inverse letters; "
                "use --method whitehead"
            )
    if verdict is None and method in ("auto", "whitehead"):
        verdict, chain = whitehead_trace(word)
        method = "whitehead"

    if args.json:
        data = {
            "word": str(word),
            "method": method,
            "primitive": verdict,
            "outcome": outcome or ("primitive" if verdict else "not primitive"),
        }
        if args.trace and chain:
            data["trace"] = [{"move": str(a), "word": str(w)} for a, w in chain]
        _print_json(data)
    else:
        print(f"word: {word}")
        print(f"method: {method}")
        if outcome == "inconclusive":
            print("verdict: inconclusive (the filter is a partial test)")
        else:
            print(f"primitive: {'yes' if verdict else 'no'}")
        if args.trace:
            if chain:
                for i, (auto, image) in enumerate(chain, start=1):
                    print(f"  step {i}: {auto} => {image}")
            if filter_verdict is not None and filter_verdict.witness is not None:
                wit = filter_verdict.witness
                print(
                    f"  filter witness ({wit.normalization}): {wit.first} at {wit.first_offset}, "
                    f"{wit.second} at {wit.second_offset}"
                )
    if outcome == "inconclusive":
        return 0
    return 0 if verdict else 1


def _sequence_class(j: int, seq) -> str:
    if j in (0, seq.params.p):
        return "semiprimitive-endpoint"
    if j in seq.primitive_indices:
        return "primitive"
    return "other"


def cmd_sequence(args) -> int:
    params = make_params(args.p, args.q)
    seq = pq_sequence(params)
    rows = []
    mismatch = 0
    for j, word in enumerate(seq.words):
        row = {"j": j, "word": word.spell(), "class": _sequence_class(j, seq)}
        if args.verify:
            oracle = is_primitive_whitehead(word)
            row["oracle_primitive"] = oracle
            if oracle != (j in seq.primitive_indices):
                mismatch += 1
        rows.append(row)
    if args.json:
        data = {
            "params": params_dict(params),
            "rows": rows,
        }
        if args.verify:
            data["oracle_agreement"] = mismatch == 0
        _print_json(data)
    else:
        print(
            f"({params.p},{params.q})-sequence: q' = {params.q_prime}, "
            f"connected = {'yes' if params.connected else 'no'}"
        )
        width = max(len(r["word"]) for r in rows)
        for row in rows:
            line = f"  {row['j']:>3}  {row['word']:<{width}}  {row['class']}"
            if args.verify:
                line += f"  oracle={'primitive' if row['oracle_primitive'] else 'not-primitive'}"
            print(line)
        if args.verify:
            print(f"oracle agreement: {'ok' if mismatch == 0 else f'{mismatch} mismatches'}")
    return 0 if mismatch == 0 else 3


def cmd_shell(args) -> int:
    params = make_params(args.p, args.q)
    kind = ShellKind(args.kind)
    shell = build_shell(params, kind)
    if args.json:
        from .report import shell_dict

        _print_json({"params": params_dict(params), "shell": shell_dict(shell)})
        return 0
    p = params.p
    print(f"{shell.label()} for {params} (kind {kind.value})")
    width = max(len(str(e.boundary_word)) for e in shell.entries)
    print(f"  {'j':>3}  {'word':<{width}}  {'class':<13}  meets next  meets next+1")
    for e in shell.entries:
        meet1 = intersection_number(shell, e.index, e.index + 1) if e.index + 1 <= p else "-"
        meet2 = intersection_number(shell, e.index, e.index + 2) if e.index + 2 <= p else "-"
        print(
            f"  {e.index:>3}  {str(e.boundary_word):<{width}}  {e.disk_class.value:<13}  "
            f"{meet1!s:>10}  {meet2!s:>12}"
        )
    return 0


def cmd_witness(args) -> int:
    params = make_params(args.p, args.q)
    trace = nonconnectivity_witness(params)
    data = witness_dict(trace)
    for row, step in zip(data["disks"], trace.disks):
        row["primitive"] = is_primitive_whitehead(step.word)
    if args.json:
        _print_json({"params": params_dict(params), "witness": data})
        return 0
    print(f"{params}: disconnected (p mod q = {params.r}); replacement witness")
    print(
        f"s = {trace.s}, t = {trace.t}, s/(t+1) = {trace.s}/{trace.t + 1}, "
        f"continued fraction {list(trace.cf)}"
    )
    width = max(len(r["word"]) for r in data["disks"])
    print(f"  {'step':>4}  {'tag':<4}  {'fraction':<8}  {'d':>3}  {'e':>3}  {'primitive':<9}  word")
    for row in data["disks"]:
        print(
            f"  {row['step']:>4}  {row['tag']:<4}  {row['fraction']:<8}  {row['d']:>3}  "
            f"{row['e']:>3}  {'yes' if row['primitive'] else 'no':<9}  {row['word']}"
        )
    return 0


def cmd_classify(args) -> int:
    params = make_params(args.p, args.q)
    structure = classify(params)
    if args.json:
        _print_json({"params": params_dict(params), "structure": structure_dict(structure)})
        return 0
    d = structure_dict(structure)
    print(f"{params}: primitive disk complex")
    print(f"  connected: {'yes' if d['connected'] else 'no'}")
    print(f"  case: {d['case_tag']} {d['clause']}")
    print(f"  dimension: {d['dimension']}")
    print(f"  edge types present: {d['edge_types_present']}")
    print(f"  simplex types present: {d['simplex_types_present']}")
    print(f"  primitive triple exists: {'yes' if d['triple_exists'] else 'no'}")
    rule = d["common_dual_rule"]
    print(
        f"  common dual disks: all pairs = {'yes' if rule['all_pairs'] else 'no'}, "
        f"count when present = {rule['dual_count']}"
    )
    if d["vertex_orbits"] is not None:
        print(f"  vertex orbits: {d['vertex_orbits']}")
        orbits = ", ".join(
            f"{o['representative']}{' (exchangeable)' if o['exchangeable'] else ''}"
            for o in d["edge_orbits"]["orbits"]
        )
        print(f"  edge orbits: {d['edge_orbits']['count']}: {orbits}")
        print(f"  quotient graph: {d['quotient_graph']}")
    return 0


def cmd_presentation(args) -> int:
    params = make_params(args.p, args.q)
    pres = goeritz_presentation(params)
    sections = []
    if args.format == "json":
        data = {"params": params_dict(params), "presentation": None}
        from .presentations import _amalgam_dict, _presentation_dict

        data["presentation"] = _presentation_dict(pres)
        if args.amalgam:
            data["amalgam"] = _amalgam_dict(amalgam_decomposition(params))
        if args.abelianization:
            ab = abelianize_presentation(pres)
            data["abelianization"] = {"torsion": list(ab.torsion), "free_rank": ab.free_rank}
        _print_json(data)
        return 0
    if args.format == "text":
        sections.append(f"Goeritz group of {params}:")
        sections.append(f"  {render(pres, 'text')}")
        gens = pres.all_generators()
        if any(g.description for g in gens):
            sections.append("  generators:")
            for g in gens:
                sections.append(f"    {display_name(g.name)}: {g.description}")
    else:
        sections.append(render(pres, "gap"))
    if args.amalgam:
        sections.append("amalgam:")
        sections.append(render(amalgam_decomposition(params), args.format))
    if args.abelianization:
        ab = abelianize_presentation(pres)
        sections.append(f"abelianization: {ab.text()}")
    print("\n".join(sections))
    return 0


def cmd_report(args) -> int:
    report = build_report(args.p, args.q)
    if args.json:
        _print_json(report_dict(report))
        return 0
    d = report_dict(report)
    params = report.params
    print(f"report for {params}")
    print(
        f"  p = {params.p}, q = {params.q}, q' = {params.q_prime}, r = {params.r}, "
        f"m = {params.m}"
    )
    print(f"  homeomorphic slopes: {d['params']['homeomorphism_slopes']}")
    print(f"  connected: {'yes' if params.connected else 'no'}")
    print(f"  structure case: {d['structure']['case_tag']} {d['structure']['clause']}")
    print(f"  sequence primitive indices: {d['sequence']['primitive_indices']}")
    if report.witness is not None:
        w = d["witness"]
        print(
            f"  witness: s = {w['s']}, t = {w['t']}, continued fraction "
            f"{w['continued_fraction']}, {len(w['disks'])} disks, final word {w['disks'][-1]['word']}"
        )
    if report.presentation is not None:
        print(f"  presentation: {render(report.presentation, 'text')}")
        ab = d["abelianization"]
        print(f"  abelianization: torsion {ab['torsion']}, free rank {ab['free_rank']}")
    return 0


def cmd_sweep(args) -> int:
    result = run_sweep(args.check, args.max_p)
    if args.json:
        _print_json(
            {
                "check": result.check,
                "bound": result.bound,
                "subjects": result.subjects,
                "failures": [
                    {"subject": f.subject, "detail": f.detail} for f in result.failures
                ],
            }
        )
    else:
        print(
            f"check {result.check}: bound {result.bound}, {result.subjects} subjects, "
            f"{len(result.failures)} failures"
        )
        for f in result.failures:
            print(f"  FAIL {f.subject}: {f.detail}")
    return 0 if result.passed else 3


def _add_pq(sub) -> None:
    sub.add_argument("p", type=int)
    sub.add_argument("q", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goeritz",
        description=(
            "Word combinatorics of the genus-2 Heegaard splitting of a lens "
            "space L(p,q): primitivity tests, disk sequences and shells, "
            "primitive disk complex structure, and Goeritz group presentations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_prim = sub.add_parser("primitive", help="decide primitivity of a word")
    p_prim.add_argument("word")
    p_prim.add_argument(
        "--method", choices=("auto", "oz", "whitehead", "filter"), default="auto"
    )
    p_prim.add_argument("--trace", action="store_true", help="print the move chain")
    p_prim.add_argument("--json", action="store_true")
    p_prim.set_defaults(func=cmd_primitive)

    p_seq = sub.add_parser("sequence", help="the (p,q)-sequence of words")
    _add_pq(p_seq)
    p_seq.add_argument("--verify", action="store_true", help="run the oracle on every word")
    p_seq.add_argument("--json", action="store_true")
    p_seq.set_defaults(func=cmd_sequence)

    p_shell = sub.add_parser("shell", help="a (p, q-bar)-shell of disks")
    _add_pq(p_shell)
    p_shell.add_argument(
        "--kind", choices=tuple(k.value for k in ShellKind), default="q"
    )
    p_shell.add_argument("--json", action="store_true")
    p_shell.set_defaults(func=cmd_shell)

    p_wit = sub.add_parser("witness", help="replacement trace showing non-connectivity")
    _add_pq(p_wit)
    p_wit.add_argument("--json", action="store_true")
    p_wit.set_defaults(func=cmd_witness)

    p_cls = sub.add_parser("classify", help="structure of the primitive disk complex")
    _add_pq(p_cls)
    p_cls.add_argument("--json", action="store_true")
    p_cls.set_defaults(func=cmd_classify)

    p_pres = sub.add_parser("presentation", help="Goeritz group presentation")
    _add_pq(p_pres)
    p_pres.add_argument("--format", choices=("text", "json", "gap"), default="text")
    p_pres.add_argument("--amalgam", action="store_true")
    p_pres.add_argument("--abelianization", action="store_true")
    p_pres.set_defaults(func=cmd_presentation)

    p_rep = sub.add_parser("report", help="full report for one (p, q)")
    _add_pq(p_rep)
    p_rep.add_argument("--json", action="store_true")
    p_rep.set_defaults(func=cmd_report)

    p_sweep = sub.add_parser("sweep", help="run one verification sweep")
    p_sweep.add_argument("check", choices=sorted(DEFAULT_BOUNDS))
    p_sweep.add_argument(
        "--max-p",
        type=int,
        default=None,
        help="maximal p, or maximal word length for the word-level checks",
    )
    p_sweep.add_argument("--json", action="store_true")
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        InvalidParameters,
        WordParseError,
        DisconnectedComplexError,
        ConnectedComplexError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
