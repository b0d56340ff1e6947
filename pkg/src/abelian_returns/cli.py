"""Command-line front end.

Exit codes: 0 consistent / success, 1 refuted, 2 usage or precondition error,
3 subject absent, 4 not stabilized under ``--strict``, 5 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .classifier import (
    Conclusion,
    Verdict,
    one_return_periodicity,
    periodicity_by_abelian_bound,
    singularity_correspondence,
    sturmian_by_complexity,
    sturmian_by_returns,
)
from .errors import SubjectAbsent, WordError
from .factors import ParikhVector, parikh
from .lexarray import abelian_returns_via_array, balanced_array_by_columns, build_lex_array
from .returns import ReturnMode, ReturnReport, Side, StabilizationPolicy, returns_stabilized
from .specstring import format_spec, parse_spec
from .words import FiniteWord, generate_prefix

FORMAT_VERSION = 1

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_ABSENT, EXIT_UNSTABLE, EXIT_INCONCLUSIVE = range(6)

THEOREMS = {
    "classic": "classic returns: exactly two per factor",
    "vuillon": "alias of classic",
    "main": "abelian returns: two or three per class",
    "semi": "semi-abelian returns: two or three per class",
    "singular": "two abelian returns exactly on singular classes",
    "periodic-bound": "at most k abelian returns forces periodicity",
    "complexity": "factor complexity n + 1",
    "one-return": "a factor with one return gives a period",
}

DEFAULT_MAX_LEN = {"singular": 16, "periodic-bound": 12}


# -- serialization --------------------------------------------------------------


def _show(x) -> str:
    return str(x)


def _report_json(r: ReturnReport) -> dict[str, Any]:
    out = {
        "mode": r.mode.value,
        "side": r.side.value,
        "subject": _show(r.subject),
        "returns": [_show(x) for x in r.returns],
        "count": r.count,
        "occurrence_count": r.occurrence_count,
        "stabilized": r.stabilized,
        "prefix_length_used": r.prefix_length_used,
    }
    if r.mode is ReturnMode.ABELIAN:
        out["representatives"] = [str(w) for w in r.representatives]
    return out


def _policy_json(p: StabilizationPolicy) -> dict[str, int]:
    return {
        "initial_prefix": p.initial_prefix,
        "growth_factor": p.growth_factor,
        "max_prefix": p.max_prefix,
        "min_tail_occurrences": p.min_tail_occurrences,
    }


def _plain(value):
    if isinstance(value, StabilizationPolicy):
        return _policy_json(value)
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def _verdict_json(v: Verdict) -> dict[str, Any]:
    return {
        "conclusion": v.conclusion.value,
        "witnesses": [
            {
                "subject": _show(w.subject),
                "detail": w.detail,
                "report": _report_json(w.report) if w.report else None,
            }
            for w in v.witnesses
        ],
        "parameters": {k: _plain(val) for k, val in sorted(v.parameters.items())},
    }


def _record(args, spec_text: str | None, results, stabilization=None) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "tool_version": __version__,
        "command": args.echo,
        "spec": spec_text,
        "results": results,
        "stabilization": stabilization,
    }
    return json.dumps(doc, sort_keys=True, indent=2)


def _format_returns(r: ReturnReport) -> str:
    if r.mode is ReturnMode.ABELIAN:
        items = [f"{k}[{w}]" for k, w in zip(r.returns, r.representatives)]
    else:
        items = [str(x) for x in r.returns]
    return "{" + ", ".join(items) + "}"


# -- commands -------------------------------------------------------------------


def _policy(args) -> StabilizationPolicy:
    return StabilizationPolicy(
        args.initial_prefix, args.growth_factor, args.max_prefix, args.min_tail
    )


def cmd_generate(args) -> int:
    spec = parse_spec(args.spec)
    print(generate_prefix(spec, args.length))
    return EXIT_OK


def cmd_returns(args) -> int:
    spec = parse_spec(args.spec)
    mode = ReturnMode(args.mode)
    if args.factor is not None:
        subject = FiniteWord.from_str(args.factor, spec.alphabet_size)
        if mode is not ReturnMode.CLASSIC:
            subject = parikh(subject)
    else:
        if mode is ReturnMode.CLASSIC:
            raise WordError("classic returns need --factor, not --class")
        subject = parikh(FiniteWord.from_str(args.klass, spec.alphabet_size))
    policy = _policy(args)
    try:
        report = returns_stabilized(spec, subject, mode, Side(args.side), policy)
    except SubjectAbsent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ABSENT
    if args.json:
        print(_record(args, format_spec(spec), _report_json(report), _policy_json(policy)))
    else:
        kind = "factor" if mode is ReturnMode.CLASSIC else "class"
        print(f"spec: {format_spec(spec)}")
        print(f"{kind}: {report.subject}")
        print(f"mode: {mode.value} ({report.side.value})")
        print(f"returns ({report.count}): {_format_returns(report)}")
        print(f"occurrences: {report.occurrence_count}")
        stab = "yes" if report.stabilized else "no"
        print(f"stabilized: {stab} (prefix length {report.prefix_length_used})")
    if args.strict and not report.stabilized:
        return EXIT_UNSTABLE
    return EXIT_OK


def cmd_lexarray(args) -> int:
    if args.word is not None:
        array = build_lex_array(FiniteWord.from_str(args.word, 2))
    else:
        p, _, q = args.slope.partition("/")
        if not (p.isdigit() and q.isdigit()):
            raise WordError(f"bad slope {args.slope!r}; expected p/q")
        array = balanced_array_by_columns(int(p), int(q))
    found = None
    if args.klass is not None:
        found = sorted(abelian_returns_via_array(array, parikh(FiniteWord.from_str(args.klass, 2))))
    if args.json:
        results: dict[str, Any] = {"p": array.p, "q": array.q, "rows": [str(r) for r in array.rows]}
        if found is not None:
            results["class"] = str(parikh(FiniteWord.from_str(args.klass, 2)))
            results["abelian_returns"] = [str(k) for k in found]
        print(_record(args, None, results))
    else:
        print(array.render())
        if found is not None:
            words = sorted(map(_class_word, found), key=lambda t: (len(t), t))
            print(f"abelian returns ({len(found)}): " + "{" + ", ".join(words) + "}")
    return EXIT_OK


def _class_word(k: ParikhVector) -> str:
    # a binary class written as 0^a 1^b
    return "0" * k.counts[0] + "1" * k.counts[1]


def _run_theorem(name: str, spec, max_len: int, policy: StabilizationPolicy) -> Verdict:
    if name in ("classic", "vuillon"):
        return sturmian_by_returns(spec, ReturnMode.CLASSIC, max_len, policy)
    if name == "main":
        return sturmian_by_returns(spec, ReturnMode.ABELIAN, max_len, policy)
    if name == "semi":
        return sturmian_by_returns(spec, ReturnMode.SEMI_ABELIAN, max_len, policy)
    if name == "singular":
        return singularity_correspondence(spec, max_len, policy)
    if name == "periodic-bound":
        return periodicity_by_abelian_bound(spec, spec.alphabet_size, max_len, policy)
    if name == "complexity":
        return sturmian_by_complexity(spec, max_len, max(policy.initial_prefix, 4 * max_len))
    if name == "one-return":
        return one_return_periodicity(spec, ReturnMode.CLASSIC, max_len, policy)
    raise WordError(f"unknown theorem {name!r}")


def cmd_verify(args) -> int:
    spec = parse_spec(args.spec)
    max_len = args.max_len if args.max_len is not None else DEFAULT_MAX_LEN.get(args.theorem, 32)
    policy = _policy(args)
    verdict = _run_theorem(args.theorem, spec, max_len, policy)
    if args.json:
        print(_record(args, format_spec(spec), _verdict_json(verdict), _policy_json(policy)))
    else:
        print(f"theorem: {args.theorem} ({THEOREMS[args.theorem]})")
        print(f"spec: {format_spec(spec)}  max length: {max_len}")
        print(f"verdict: {verdict.conclusion.value}")
        for w in verdict.witnesses:
            line = f"witness: {w.subject}"
            if w.detail:
                line += f" -- {w.detail}"
            if w.report is not None:
                line += f" {_format_returns(w.report)}"
            print(line)
    if verdict.conclusion is Conclusion.REFUTED_STURMIAN:
        return EXIT_REFUTED
    if verdict.conclusion is Conclusion.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------


def _add_policy(p: argparse.ArgumentParser):
    g = p.add_argument_group("stabilization policy")
    g.add_argument("--initial-prefix", type=int, default=4096)
    g.add_argument("--growth-factor", type=int, default=2)
    g.add_argument("--max-prefix", type=int, default=2**22)
    g.add_argument("--min-tail", type=int, default=3, help="occurrences required after the last new return")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelian-returns",
        description="Return words, abelian returns and Sturmian checks for infinite words.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="print a prefix of an infinite word")
    g.add_argument("spec")
    g.add_argument("--length", "-n", type=int, required=True)
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("returns", help="return words of a factor or abelian class")
    r.add_argument("spec")
    who = r.add_mutually_exclusive_group(required=True)
    who.add_argument("--factor")
    who.add_argument("--class", dest="klass")
    r.add_argument("--mode", choices=[m.value for m in ReturnMode], default="abelian")
    r.add_argument("--side", choices=[s.value for s in Side], default="left")
    r.add_argument("--strict", action="store_true", help="exit 4 if the return set did not stabilize")
    r.add_argument("--json", action="store_true")
    _add_policy(r)
    r.set_defaults(func=cmd_returns)

    la = sub.add_parser("lexarray", help="lexicographic array of a cyclic binary word")
    src = la.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--slope", help="p/q; builds the balanced orbit")
    la.add_argument("--class", dest="klass")
    la.add_argument("--json", action="store_true")
    la.set_defaults(func=cmd_lexarray)

    v = sub.add_parser("verify", help="check a characterization on finite evidence")
    v.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    v.add_argument("spec")
    v.add_argument("--max-len", type=int)
    v.add_argument("--json", action="store_true")
    _add_policy(v)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(argv)
    args.echo = " ".join(argv)
    try:
        return args.func(args)
    except (WordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
