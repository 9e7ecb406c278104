"""Command-line interface.

Exit codes are a stable contract: 0 for success or a positive verdict,
1 for a negative verdict, 2 for input errors, 3 when a decision problem
exceeds its resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .digraph import find_one_way_cycle
from .errors import (
    OneWayCycleError,
    PropDigraphError,
    ResourceLimitError,
    SentenceSyntaxError,
)
from .fileformats import (
    FileFormatError,
    parse_cnf_file,
    parse_digraph_file,
    parse_fraction,
    parse_witness_file,
    serialize_witness,
)
from .logic import decide_sat, entails, parse_sentence, reduce_3sat, sentence_to_text
from .rational import realize_rational
from .realalpha import realize_real

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc.strerror}", 0)


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cycle_text(cycle, labels) -> str:
    return " -> ".join(labels[v - 1] for v in cycle)


def cmd_check(args) -> int:
    g, labels = parse_digraph_file(_read(args.graph))
    cycle = find_one_way_cycle(g)
    if cycle is None:
        _emit(args, {"verdict": "representable"}, "representable")
        return EXIT_OK
    pretty = _cycle_text(cycle, labels)
    _emit(
        args,
        {"verdict": "not-representable", "cycle": [labels[v - 1] for v in cycle]},
        f"not-representable: {pretty}",
    )
    return EXIT_NEGATIVE


def cmd_realize(args) -> int:
    g, labels = parse_digraph_file(_read(args.graph))
    alpha = parse_fraction(args.alpha)
    try:
        if args.method == "rational":
            z = realize_rational(g, alpha.numerator, alpha.denominator)
        else:
            z = realize_real(g, alpha)
    except OneWayCycleError as exc:
        pretty = _cycle_text(exc.cycle, labels)
        _emit(
            args,
            {"verdict": "not-representable",
             "cycle": [labels[v - 1] for v in exc.cycle]},
            f"not-representable: {pretty}",
        )
        return EXIT_NEGATIVE
    if z.induced_digraph(alpha) != g:
        raise AssertionError("witness failed self-verification")
    text = serialize_witness(z, alpha, labels=labels)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        summary = f"witness written to {args.output} ({z.total_points} points)"
        _emit(args, {"verdict": "ok", "output": args.output,
                     "total_points": z.total_points}, summary)
    elif args.json:
        zones = {",".join(map(str, k)): v for k, v in (
            (tuple(i + 1 for i in range(z.n) if m >> i & 1), c)
            for m, c in sorted(z.nonzero_zones().items())
        )}
        print(json.dumps({"verdict": "ok", "n": z.n, "alpha": str(alpha),
                          "zones": zones, "total_points": z.total_points}))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    z, alpha = parse_witness_file(_read(args.witness))
    target, labels = parse_digraph_file(_read(args.target))
    if target.n != z.n:
        raise FileFormatError(
            f"witness has n={z.n} but target has n={target.n}", 0
        )
    if args.beta is not None:
        beta = parse_fraction(args.beta)
        induced = z.induced_interval_digraph(alpha, beta)
    else:
        induced = z.induced_digraph(alpha)
    missing = sorted(target.edges - induced.edges)
    extra = sorted(induced.edges - target.edges)
    payload = {
        "verdict": "match" if not missing and not extra else "mismatch",
        "missing": [[labels[u - 1], labels[v - 1]] for u, v in missing],
        "extra": [[labels[u - 1], labels[v - 1]] for u, v in extra],
    }
    if not missing and not extra:
        _emit(args, payload, "match")
        return EXIT_OK
    lines = ["mismatch"]
    for u, v in missing:
        lines.append(f"  missing: {labels[u - 1]} -> {labels[v - 1]}")
    for u, v in extra:
        lines.append(f"  extra:   {labels[u - 1]} -> {labels[v - 1]}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_NEGATIVE


def _model_lines(model) -> list[str]:
    lines = []
    for sym in sorted(model.interp):
        points = ", ".join(str(p) for p in sorted(model.interp[sym]))
        lines.append(f"  {sym} = {{{points}}}")
    return lines


def _model_payload(model) -> dict:
    return {sym: sorted(model.interp[sym]) for sym in model.interp}


def cmd_logic_sat(args) -> int:
    sentence = parse_sentence(args.sentence)
    result = decide_sat(sentence)
    if not result.satisfiable:
        _emit(args, {"verdict": "UNSAT"}, "UNSAT")
        return EXIT_NEGATIVE
    text = "\n".join(["SAT"] + _model_lines(result.model))
    _emit(args, {"verdict": "SAT", "model": _model_payload(result.model)}, text)
    return EXIT_OK


def cmd_logic_model(args) -> int:
    sentence = parse_sentence(args.sentence)
    result = decide_sat(sentence)
    if not result.satisfiable:
        _emit(args, {"verdict": "UNSAT"}, "UNSAT")
        return EXIT_NEGATIVE
    text = "\n".join(_model_lines(result.model))
    _emit(args, {"verdict": "SAT", "model": _model_payload(result.model)}, text)
    return EXIT_OK


def cmd_logic_entails(args) -> int:
    premises = []
    lineno = 0
    for raw in _read(args.premises).splitlines():
        lineno += 1
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            premises.append(parse_sentence(line))
        except SentenceSyntaxError as exc:
            raise FileFormatError(str(exc), lineno)
    conclusion = parse_sentence(args.conclusion)
    if entails(premises, conclusion):
        _emit(args, {"verdict": "ENTAILED"}, "ENTAILED")
        return EXIT_OK
    _emit(args, {"verdict": "NOT-ENTAILED"}, "NOT-ENTAILED")
    return EXIT_NEGATIVE


def cmd_logic_gen3sat(args) -> int:
    clauses = parse_cnf_file(_read(args.cnf))
    sentence = reduce_3sat(clauses)
    text = sentence_to_text(sentence)
    _emit(args, {"sentence": text}, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propdigraph",
        description="Proportionality digraph representations and the logic of 'most'.",
    )
    parser.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON reports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test whether a digraph is representable")
    p.add_argument("graph", help="digraph file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", help="construct a witness for a digraph")
    p.add_argument("graph", help="digraph file")
    p.add_argument("--alpha", required=True, help="threshold as a fraction p/q")
    p.add_argument("--method", choices=("rational", "real"), default="rational")
    p.add_argument("-o", "--output", help="write the witness file here")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="check a witness against a target digraph")
    p.add_argument("witness", help="witness file")
    p.add_argument("target", help="digraph file")
    p.add_argument("--beta", help="upper fraction for the interval condition")
    p.set_defaults(func=cmd_verify)

    logic = sub.add_parser("logic", help="decision procedures for the logic of 'most'")
    logic_sub = logic.add_subparsers(dest="subcommand", required=True)

    p = logic_sub.add_parser("sat", help="decide satisfiability")
    p.add_argument("sentence")
    p.set_defaults(func=cmd_logic_sat)

    p = logic_sub.add_parser("model", help="print a model of a satisfiable sentence")
    p.add_argument("sentence")
    p.set_defaults(func=cmd_logic_model)

    p = logic_sub.add_parser("entails", help="decide entailment from a premise file")
    p.add_argument("premises", help="file with one premise sentence per line")
    p.add_argument("conclusion")
    p.set_defaults(func=cmd_logic_entails)

    p = logic_sub.add_parser("gen3sat", help="translate a 3-CNF file to a sentence")
    p.add_argument("cnf", help="DIMACS-style CNF file")
    p.set_defaults(func=cmd_logic_gen3sat)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (FileFormatError, SentenceSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PropDigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
