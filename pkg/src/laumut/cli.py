"""Command-line front end.

Subcommands take a polynomial (``--f`` inline or ``--file``, one
polynomial per line with ``#`` comments, first entry used) and mutation
data (``--divide VAR`` naming the divided variable, or the covector
form ``--u "0,1"``, plus ``--by`` for the divisor). Output is JSON on
stdout; ``--pretty`` prepends a short human summary and indents.

Exit codes: 0 success, 1 domain failure (reported as structured JSON on
stdout), 2 usage or parse errors (message on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .deformation import FamilyError, build_family, verify_main_theorem
from .laurent import (
    LaurentPolynomial,
    ParseError,
    newton_polytope,
    parse,
    to_string,
    variable_names,
)
from .mutation import (
    MutationError,
    MutationSpec,
    apply_mutation,
    is_mutation,
    polygon_facets,
)
from .mutgraph import explore_graph
from .render import render_svg
from ._version import __version__


class UsageError(ValueError):
    pass


class DomainFailure(Exception):
    """Carries the structured failure payload for exit code 1."""

    def __init__(self, payload: dict):
        super().__init__(payload.get("error", "domain failure"))
        self.payload = payload


def _read_file_polynomials(path: str) -> list[LaurentPolynomial]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            body = line.split("#", 1)[0].strip()
            if body:
                out.append(parse(body))
    return out


def _load_polynomial(args) -> LaurentPolynomial:
    if getattr(args, "poly", None) is not None and getattr(args, "file", None) is not None:
        raise UsageError("give --f or --file, not both")
    if getattr(args, "poly", None) is not None:
        return parse(args.poly)
    if getattr(args, "file", None) is not None:
        polys = _read_file_polynomials(args.file)
        if not polys:
            raise UsageError(f"no polynomial found in {args.file}")
        return polys[0]
    raise UsageError("a polynomial is required (--f or --file)")


def _mutation_spec(f: LaurentPolynomial, args) -> MutationSpec:
    if getattr(args, "by", None) is None:
        raise UsageError("a divisor is required (--by)")
    if getattr(args, "u", None) is not None:
        try:
            direction = tuple(int(part) for part in args.u.split(","))
        except ValueError:
            raise UsageError(f"--u must be a comma-separated integer vector, got {args.u!r}")
        if len(direction) != f.rank:
            raise UsageError(f"--u has length {len(direction)}, expected {f.rank}")
    elif getattr(args, "divide", None) is not None:
        names = variable_names(f.rank)
        if args.divide not in names:
            raise UsageError(f"--divide must name one of {', '.join(names)}")
        idx = names.index(args.divide)
        direction = tuple(1 if i == idx else 0 for i in range(f.rank))
    else:
        raise UsageError("a direction is required (--divide or --u)")
    divisor = parse(args.by, rank=f.rank)
    return MutationSpec.from_direction(direction, divisor)


def _maybe_svg(args, items) -> Optional[str]:
    path = getattr(args, "svg", None)
    if path is None:
        return None
    render_svg(items, path)
    return path


# -- subcommand handlers -------------------------------------------------------


def _cmd_newton(args):
    f = _load_polynomial(args)
    p = newton_polytope(f)
    payload = {"polynomial": to_string(f), "newton": p.to_dict()}
    svg = _maybe_svg(args, [("Delta(f)", p)])
    if svg:
        payload["svg"] = svg
    summary = [f"newton polytope: {len(p.vertices)} vertices, {len(p.rays)} rays"]
    return payload, 0, summary


def _cmd_facets(args):
    f = _load_polynomial(args)
    p = newton_polytope(f)
    facets = polygon_facets(p)
    payload = {"polynomial": to_string(f), "facets": [i.to_dict() for i in facets]}
    summary = [f"{len(facets)} facets"] + [
        f"  facet {i.index}: direction ({','.join(str(c) for c in i.direction)})" for i in facets
    ]
    return payload, 0, summary


def _cmd_check(args):
    f = _load_polynomial(args)
    spec = _mutation_spec(f, args)
    from .deformation import _hypothesis_failures

    failures, details = _hypothesis_failures(f, spec)
    payload = {
        "polynomial": to_string(f),
        "spec": spec.to_dict(),
        "hypothesis_failures": failures,
        "details": details,
    }
    summary = [
        f"is mutation: {details['mutation']['is_mutation']}",
        f"hypothesis failures: {len(failures)}",
    ] + [f"  {msg}" for msg in failures]
    return payload, (1 if failures else 0), summary


def _cmd_mutate(args):
    f = _load_polynomial(args)
    spec = _mutation_spec(f, args)
    ok, report = is_mutation(f, spec)
    if not ok:
        raise DomainFailure(
            {
                "error": "not a mutation: some positive-level slice is not divisible",
                "polynomial": to_string(f),
                "spec": spec.to_dict(),
                "report": report.to_dict(),
            }
        )
    g = apply_mutation(f, spec)
    payload = {
        "polynomial": to_string(f),
        "spec": spec.to_dict(),
        "mutated": to_string(g),
        "support": [[str(c) for c in e] for e in g.support()],
    }
    svg = _maybe_svg(args, [("Delta(f)", newton_polytope(f)), ("Delta(mutated)", newton_polytope(g))])
    if svg:
        payload["svg"] = svg
    return payload, 0, [f"mutated: {to_string(g)}"]


def _cmd_family(args):
    f = _load_polynomial(args)
    spec = _mutation_spec(f, args)
    try:
        fd = build_family(f, spec)
    except FamilyError as exc:
        raise DomainFailure({"error": str(exc), "failures": exc.failures})
    payload = fd.to_dict()
    svg = _maybe_svg(
        args,
        [
            ("Delta_0", fd.delta0),
            ("Delta_inf", fd.delta_inf),
            ("Delta_0^0", fd.delta00),
            ("Delta_0^1", fd.delta01),
        ],
    )
    if svg:
        payload["svg"] = svg
    summary = [
        f"general fiber toric: {payload['general_fiber_is_toric']}",
        f"sigma_infinity rays: {payload['sigma_infinity']['rays']}",
    ]
    return payload, 0, summary


def _cmd_verify(args):
    f = _load_polynomial(args)
    spec = _mutation_spec(f, args)
    report = verify_main_theorem(f, spec, kmax=args.kmax)
    payload = report.to_dict()
    family_ok = len(report.checks) > 1 and report.checks[1].status == "pass"
    if getattr(args, "svg", None) is not None and family_ok:
        fd = build_family(f, spec)
        payload["svg"] = _maybe_svg(
            args,
            [
                ("Delta_0", fd.delta0),
                ("Delta_inf", fd.delta_inf),
                ("Delta_0^0", fd.delta00),
                ("Delta_0^1", fd.delta01),
            ],
        )
    summary = [f"passed: {report.passed}"] + [
        f"  {c.name}: {c.status}" for c in report.checks
    ]
    return payload, (0 if report.passed else 1), summary


def _cmd_graph(args):
    f = _load_polynomial(args)
    graph = explore_graph(f, args.depth)
    payload = graph.to_dict()
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    if args.dot is not None:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graph.to_dot())
    summary = [
        f"nodes: {len(payload['nodes'])}, edges: {len(payload['edges'])}, "
        f"failures: {len(payload['failures'])}, merges: {len(payload['merges'])}"
    ]
    return payload, 0, summary


def _cmd_render(args):
    f = _load_polynomial(args)
    items = []
    if args.family:
        spec = _mutation_spec(f, args)
        try:
            fd = build_family(f, spec)
        except FamilyError as exc:
            raise DomainFailure({"error": str(exc), "failures": exc.failures})
        items = [
            ("Delta_0", fd.delta0),
            ("Delta_inf", fd.delta_inf),
            ("Delta_0^0", fd.delta00),
            ("Delta_0^1", fd.delta01),
        ]
    else:
        items.append(("Delta(f)", newton_polytope(f)))
        if getattr(args, "by", None) is not None:
            spec = _mutation_spec(f, args)
            ok, report = is_mutation(f, spec)
            if not ok:
                raise DomainFailure(
                    {
                        "error": "not a mutation: some positive-level slice is not divisible",
                        "report": report.to_dict(),
                    }
                )
            items.append(("Delta(mutated)", newton_polytope(apply_mutation(f, spec))))
    render_svg(items, args.output)
    payload = {"path": args.output, "labels": [label for label, _ in items]}
    return payload, 0, [f"wrote {args.output}"]


# -- argument plumbing ----------------------------------------------------------


def _add_input_options(sub):
    sub.add_argument("--f", dest="poly", help="polynomial text")
    sub.add_argument("--file", help="file with one polynomial per line, # comments")
    sub.add_argument("--pretty", action="store_true", help="add a human summary and indent the JSON")


def _add_mutation_options(sub):
    sub.add_argument("--divide", help="name of the divided variable")
    sub.add_argument("--u", help="divided direction as a comma-separated covector")
    sub.add_argument("--by", help="divisor polynomial (in the undivided variables)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laumut",
        description="Mutations of Laurent polynomials and the toric families they glue.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    newton = subs.add_parser("newton", help="Newton polytope of a polynomial")
    _add_input_options(newton)
    newton.add_argument("--svg", help="also draw the polytope to this SVG path")
    newton.set_defaults(handler=_cmd_newton)

    facets = subs.add_parser("facets", help="list the facets of the Newton polygon")
    _add_input_options(facets)
    facets.set_defaults(handler=_cmd_facets)

    check = subs.add_parser("check", help="check mutation and family hypotheses")
    _add_input_options(check)
    _add_mutation_options(check)
    check.set_defaults(handler=_cmd_check)

    mutate = subs.add_parser("mutate", help="apply a mutation")
    _add_input_options(mutate)
    _add_mutation_options(mutate)
    mutate.add_argument("--svg", help="draw input and output polytopes to this SVG path")
    mutate.set_defaults(handler=_cmd_mutate)

    family = subs.add_parser("family", help="build the flat family data for a mutation")
    _add_input_options(family)
    _add_mutation_options(family)
    family.add_argument("--svg", help="draw the family slices to this SVG path")
    family.set_defaults(handler=_cmd_family)

    verify = subs.add_parser("verify", help="verify the combinatorial consequences of a mutation")
    _add_input_options(verify)
    _add_mutation_options(verify)
    verify.add_argument("--kmax", type=int, default=6, help="dual lattice count horizon (default 6)")
    verify.add_argument("--svg", help="draw the family slices to this SVG path")
    verify.set_defaults(handler=_cmd_verify)

    graph = subs.add_parser("graph", help="explore the mutation graph of the Newton polygon")
    _add_input_options(graph)
    graph.add_argument("--depth", type=int, required=True, help="breadth-first depth")
    graph.add_argument("-o", "--output", help="also write the JSON graph to this path")
    graph.add_argument("--dot", help="also write a DOT rendering to this path")
    graph.set_defaults(handler=_cmd_graph)

    render = subs.add_parser("render", help="draw polytopes or family slices as SVG")
    _add_input_options(render)
    _add_mutation_options(render)
    render.add_argument("--family", action="store_true", help="draw the four family slices")
    render.add_argument("-o", "--output", required=True, help="SVG output path")
    render.set_defaults(handler=_cmd_render)

    return parser


def _emit(payload: dict, pretty: bool, summary: list[str]) -> None:
    if pretty:
        for line in summary:
            print(line)
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, code, summary = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainFailure as exc:
        _emit(exc.payload, args.pretty, [f"failed: {exc.payload.get('error', '')}"])
        return 1
    except (MutationError, FamilyError, ValueError) as exc:
        _emit({"error": str(exc)}, args.pretty, [f"failed: {exc}"])
        return 1
    _emit(payload, args.pretty, summary)
    return code


if __name__ == "__main__":
    sys.exit(main())
