"""Command-line front end.

Exit codes: 0 success, 2 unreadable/malformed input, 3 size or budget limit,
4 verification mismatch (or a failed theorem check in ``check``).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import families as fam
from .analysis import (
    build_report,
    check_empty_characterization,
    coefficient_checks,
    report_for,
    sequence_verdict,
    vanishing_coefficients_agree,
)
from .enumerator import ENGINES, ORACLE_MAX_N, enumerate_alliances
from .errors import AllianceError, BudgetExceeded, GraphFormatError, GraphSizeError, PolynomialFormatError
from .graph import (
    Graph,
    delete_edges,
    format_edge_list,
    parse_edge_list,
    parse_graph6_lines,
    random_corpus,
)
from .polynomial import AlliancePolynomial, format_poly, min_support, poly_to_json

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_MISMATCH = 4

VERIFY_CHECKS = ("families", "knm", "double_star", "kn_minus_edges", "theorem26")
SEARCH_MAX_N = 10


def format_signed(terms: dict[int, int]) -> str:
    """Descending-power text for coefficient dicts that may hold negatives."""
    items = sorted(((k, c) for k, c in terms.items() if c), reverse=True)
    if not items:
        return "0"
    out = []
    for i, (k, c) in enumerate(items):
        mag = abs(c)
        body = str(mag) if k == 0 else ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


# -- input -------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from None


def read_graphs(path: str, fmt: str) -> list[Graph]:
    text = _read_text(path)
    if fmt == "graph6":
        graphs = parse_graph6_lines(text)
        if not graphs:
            raise GraphFormatError(f"{path}: no graph6 lines")
        return graphs
    return [parse_edge_list(text)]


def _engine_for(g: Graph, engine: str) -> str:
    if engine == "oracle" and g.n > ORACLE_MAX_N:
        raise GraphSizeError(f"oracle engine refuses n={g.n} > {ORACLE_MAX_N}")
    return engine


def _check_max_n(g: Graph, args: argparse.Namespace) -> None:
    if args.max_n is not None and g.n > args.max_n:
        raise GraphSizeError(f"graph has n={g.n} > --max-n {args.max_n}")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


# -- compute / check / family ------------------------------------------------


def cmd_compute(args: argparse.Namespace) -> int:
    graphs = read_graphs(args.input, args.format)
    reports = []
    for g in graphs:
        _check_max_n(g, args)
        p, _ = enumerate_alliances(g, _engine_for(g, args.engine), workers=args.workers, budget=args.budget)
        reports.append(report_for(g, p))
    if args.json:
        payload = [r.to_json() for r in reports]
        _emit_json(payload[0] if len(payload) == 1 else payload)
    else:
        for r in reports:
            print(format_poly(r.polynomial))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    graphs = read_graphs(args.input, args.format)
    reports = []
    for g in graphs:
        _check_max_n(g, args)
        reports.append(build_report(g, engine=_engine_for(g, args.engine), workers=args.workers, budget=args.budget))
    if args.json:
        payload = [r.to_json() for r in reports]
        _emit_json(payload[0] if len(payload) == 1 else payload)
    else:
        for g, r in zip(graphs, reports):
            v = r.verdict
            print(f"graph: n={g.n} m={g.m}")
            print(f"  polynomial:      {format_poly(r.polynomial)}")
            print(f"  alliance number: {r.alliance_number}")
            print(f"  a(G;1):          {r.total_alliances}")
            print(f"  unimodal:        {v.unimodal} (mode {v.mode_index}, unique={v.mode_unique})")
            print(f"  log-concave:     {v.log_concave}")
            for name, ok in r.theorem_checks.items():
                print(f"  {'PASS' if ok else 'FAIL'} {name}")
    return EXIT_OK if all(r.all_checks_pass for r in reports) else EXIT_MISMATCH


def cmd_family(args: argparse.Namespace) -> int:
    if not args.family:
        raise GraphFormatError("family needs --family SPEC, e.g. --family path:4")
    results = []
    for text in args.family:
        spec = _parse_family(text)
        if spec.kind == "double_star" and args.printed_form:
            terms = fam.double_star_terms(*spec.params, printed=True)
            results.append((spec, format_signed(terms), {"coeffs": {str(k): str(c) for k, c in sorted(terms.items())}}))
            continue
        try:
            p = fam.family_polynomial(spec)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
        results.append((spec, format_poly(p), poly_to_json(p)))
    if args.json:
        payload = [{"family": str(s), "polynomial": j} for s, _, j in results]
        _emit_json(payload[0] if len(payload) == 1 else payload)
    else:
        for spec, text, _ in results:
            print(text if len(results) == 1 else f"{spec}: {text}")
    return EXIT_OK


def _parse_family(text: str) -> fam.FamilySpec:
    try:
        return fam.FamilySpec.parse(text)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


# -- verify ------------------------------------------------------------------


@dataclass
class Sweep:
    name: str
    lines: list[dict] = field(default_factory=list)

    def record(self, instance: str, ok: bool, expected: str, got: str, relation: str = "=") -> None:
        self.lines.append({"instance": instance, "passed": ok, "relation": relation, "expected": expected, "got": got})

    @property
    def passed(self) -> bool:
        return all(line["passed"] for line in self.lines)

    @property
    def first_failure(self) -> dict | None:
        return next((line for line in self.lines if not line["passed"]), None)


def _enumerate(g: Graph, args: argparse.Namespace) -> AlliancePolynomial:
    engine = "oracle" if args.engine == "auto" else args.engine
    return enumerate_alliances(g, engine, workers=args.workers, budget=args.budget)[0]


def _verify_families(args, sweep: Sweep, kinds: Sequence[str]) -> None:
    for kind in kinds:
        for spec in fam.instances(kind, args.max_n):
            if not fam.has_closed_form(spec):
                continue
            want = fam.family_polynomial(spec)
            got = _enumerate(fam.family_graph(spec), args)
            sweep.record(str(spec), want == got, format_poly(want), format_poly(got))


def verify_families(args, sweep):
    _verify_families(args, sweep, fam.KINDS)


def verify_knm(args, sweep):
    _verify_families(args, sweep, ["complete_bipartite", "star"])
    for spec in fam.instances("star", args.max_n):
        n = spec.params[0]
        star = fam.family_polynomial(spec)
        knm = fam.family_polynomial(fam.FamilySpec("complete_bipartite", (n - 1, 1)))
        sweep.record(f"{spec} vs complete_bipartite:{n - 1},1", star == knm, format_poly(knm), format_poly(star))


def verify_double_star(args, sweep):
    for spec in fam.instances("double_star", args.max_n):
        terms = fam.double_star_terms(*spec.params, printed=args.printed_form)
        got = _enumerate(fam.family_graph(spec), args)
        label = f"{spec}{' (printed form)' if args.printed_form else ''}"
        sweep.record(label, terms == got.terms(), format_signed(terms), format_poly(got))


def verify_kn_minus_edges(args, sweep):
    for n in range(3, args.max_n + 1):
        kn = fam.family_polynomial(fam.FamilySpec("complete", (n,)))
        complete = fam.family_graph(fam.FamilySpec("complete", (n,)))
        if n % 2:
            got = _enumerate(delete_edges(complete, fam.matching_edges(n, 1)), args)
            sweep.record(f"K_{n} - 1 edge", got != kn, format_poly(kn), format_poly(got), relation="!=")
            continue
        for r in range(1, n // 2):
            got = _enumerate(delete_edges(complete, fam.matching_edges(n, r)), args)
            sweep.record(f"K_{n} - {r} independent edges", got == kn, format_poly(kn), format_poly(got))
        got = _enumerate(delete_edges(complete, fam.matching_edges(n, n // 2)), args)
        sweep.record(f"K_{n} - perfect matching", got != kn, format_poly(kn), format_poly(got), relation="!=")
        sweep.record(
            f"K_{n} - perfect matching: min support",
            min_support(got) == n // 2,
            str(n // 2),
            str(min_support(got)),
        )
        if n == 4:
            c4 = _enumerate(fam.family_graph(fam.FamilySpec("cycle", (4,))), args)
            sweep.record("K_4 - perfect matching vs C_4", got == c4, format_poly(c4), format_poly(got))


def verify_theorem26(args, sweep):
    for n in range(1, args.max_n + 1):
        for i, g in enumerate(random_corpus(n, args.count, args.seed)):
            p = _enumerate(g, args)
            checks = coefficient_checks(g, p)
            checks.update({f"a{k}_vanishing": ok for k, ok in vanishing_coefficients_agree(g, p).items()})
            checks["empty_characterization"] = check_empty_characterization(p, g)
            failed = sorted(k for k, ok in checks.items() if not ok)
            sweep.record(
                f"n={n} #{i} edges={g.sorted_edges()}",
                not failed,
                "all checks agree",
                "ok" if not failed else "failed: " + ", ".join(failed) + f"; a(G;x) = {format_poly(p)}",
            )


_VERIFIERS: dict[str, Callable] = {
    "families": verify_families,
    "knm": verify_knm,
    "double_star": verify_double_star,
    "kn_minus_edges": verify_kn_minus_edges,
    "theorem26": verify_theorem26,
}


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n is None:
        args.max_n = 8 if args.check == "theorem26" else 12
    sweep = Sweep(args.check)
    _VERIFIERS[args.check](args, sweep)
    if args.json:
        _emit_json({"check": sweep.name, "passed": sweep.passed, "instances": sweep.lines})
    else:
        for line in sweep.lines:
            tag = "PASS" if line["passed"] else "FAIL"
            rel = "" if line["relation"] == "=" else f" [expect {line['relation']}]"
            print(f"{tag} {line['instance']}{rel}: {line['got']}")
        bad = sum(not line["passed"] for line in sweep.lines)
        print(f"{sweep.name}: {len(sweep.lines) - bad}/{len(sweep.lines)} passed")
        first = sweep.first_failure
        if first is not None:
            print(f"first counterexample: {first['instance']}")
            print(f"  expected ({first['relation']}): {first['expected']}")
            print(f"  enumerated:   {first['got']}")
    return EXIT_OK if sweep.passed else EXIT_MISMATCH


# -- search ------------------------------------------------------------------


def _search_corpus(args: argparse.Namespace) -> list[tuple[str, Graph]]:
    corpus: list[tuple[str, Graph]] = []
    for path in args.input or []:
        for i, g in enumerate(read_graphs(path, args.format)):
            corpus.append((f"{path}#{i}", g))
    for text in args.family or []:
        if ":" in text:
            spec = _parse_family(text)
            corpus.append((str(spec), fam.family_graph(spec)))
        else:
            try:
                specs = fam.instances(text.strip(), args.max_n)
            except ValueError as exc:
                raise GraphFormatError(str(exc)) from None
            corpus.extend((str(s), fam.family_graph(s)) for s in specs)
    if args.count:
        for n in range(args.min_n, args.max_n + 1):
            corpus.extend((f"random n={n} #{i} seed={args.seed}", g) for i, g in enumerate(random_corpus(n, args.count, args.seed)))
    return corpus


def cmd_search(args: argparse.Namespace) -> int:
    if args.max_n is None:
        args.max_n = SEARCH_MAX_N
    if args.max_n > SEARCH_MAX_N:
        raise GraphSizeError(f"search is limited to --max-n <= {SEARCH_MAX_N}")
    findings = []
    for label, g in _search_corpus(args):
        _check_max_n(g, args)
        p, _ = enumerate_alliances(g, args.engine, workers=args.workers, budget=args.budget)
        if not sequence_verdict(p).unimodal:
            findings.append({"source": label, "edge_list": format_edge_list(g), "polynomial": format_poly(p)})
    if args.json:
        _emit_json(findings)
    else:
        for f in findings:
            print(f"# {f['source']}")
            print(f"# a(G;x) = {f['polynomial']}")
            print(f["edge_list"], end="")
        print(f"# {len(findings)} non-unimodal graph(s) found")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------


def _budget_arg(text: str) -> float:
    value = float(text)
    if value <= 0 or math.isnan(value):
        raise argparse.ArgumentTypeError("budget must be a positive number of seconds (or 'inf')")
    return value


def _workers_arg(text: str) -> int | str:
    if text == "max":
        return text
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("workers must be >= 1 or 'max'")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("edge-list", "graph6"), default="edge-list")
    common.add_argument("--engine", choices=ENGINES, default="auto")
    common.add_argument("--workers", type=_workers_arg, default=1, help="worker threads, or 'max'")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--budget", type=_budget_arg, default=None, help="seconds per enumeration; 'inf' lifts the n>20 guard")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="alliancepoly", description="Strong alliance polynomials of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="polynomial of a graph file")
    p.add_argument("--input", required=True, help="path, or '-' for stdin")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", parents=[common], help="full report with theorem checks")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", parents=[common], help="closed-form polynomial of a named family")
    p.add_argument("--family", action="append", help="e.g. path:4, complete_bipartite:3,5")
    p.add_argument("--printed-form", action="store_true", help="double star with the literal printed exponent")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[common], help="formula-vs-enumeration sweeps")
    p.add_argument("check", choices=VERIFY_CHECKS)
    p.add_argument("--printed-form", action="store_true")
    p.add_argument("--count", type=int, default=200, help="random graphs per n (theorem26)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="look for non-unimodal polynomials")
    p.add_argument("--input", action="append", help="graph file(s) to include")
    p.add_argument("--family", action="append", help="family spec, or bare kind for all instances up to --max-n")
    p.add_argument("--count", type=int, default=0, help="random graphs per n")
    p.add_argument("--min-n", type=int, default=1)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphSizeError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (GraphFormatError, PolynomialFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AllianceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
