"""Thin command-line client.

Parses arguments, builds the request model, dispatches to the service
handlers (in-process by default, or to a running server via --server),
and emits the compact JSON response on stdout or into --output.  No
computation happens here.

Payload flags (--points, --control-points, --text) accept inline values
or @path to read the value from a file.

Exit status: 0 success, 1 domain error (machine-readable error object on
stdout), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from pydantic import BaseModel, ValidationError

from .errors import TemplateChromaError
from .service import handlers
from .service import schemas as s


class _UsageError(Exception):
    pass


def _payload(text: str, flag: str) -> str:
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            return path.read_text().strip()
        except OSError as err:
            raise _UsageError(f"cannot read {flag} payload from {path}: {err}") from err
    return text


def _json_arg(text: str, flag: str) -> Any:
    try:
        return json.loads(_payload(text, flag))
    except json.JSONDecodeError as err:
        raise _UsageError(f"{flag} is not valid JSON: {err}") from err


def _grid_arg(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as err:
        raise _UsageError(f"--grid must be comma-separated integers: {text!r}") from err


def _build_analyze(args) -> s.AnalyzeRequest:
    return s.AnalyzeRequest(
        points=_json_arg(args.points, "--points"), continuum=args.continuum
    )


def _build_enumerate(args) -> s.EnumerateRequest:
    return s.EnumerateRequest(dim=args.dim, k=args.k, simple_only=args.simple)


def _build_images(args) -> s.ImagesRequest:
    return s.ImagesRequest(points=_json_arg(args.points, "--points"))


def _build_chi_symbolic(args) -> s.SymbolicChiRequest:
    return s.SymbolicChiRequest(
        points=_json_arg(args.points, "--points"), continuum=args.continuum
    )


def _build_chi_exact(args) -> s.ExactChiRequest:
    return s.ExactChiRequest(
        grid=_grid_arg(args.grid),
        points=_json_arg(args.points, "--points"),
        include_witness=args.witness,
    )


def _build_achievable(args) -> s.AchievableRequest:
    return s.AchievableRequest(k=args.k, continuum=args.continuum)


def _build_forbidden(args) -> s.ForbiddenRequest:
    return s.ForbiddenRequest(k=args.k, kappa=args.kappa, continuum=args.continuum)


def _build_lift(args) -> s.LiftRequest:
    return s.LiftRequest(
        points=_json_arg(args.points, "--points"),
        target_dim=args.target_dim,
        reduce=args.reduce,
    )


def _build_verify(args) -> s.VerifyRequest:
    control = (
        _json_arg(args.control_points, "--control-points")
        if args.control_points
        else None
    )
    return s.VerifyRequest(
        points=_json_arg(args.points, "--points"),
        target_dim=args.target_dim,
        samples=args.samples,
        bound=args.bound,
        seed=args.seed,
        edge_fraction=args.edge_fraction,
        control_points=control,
    )


def _build_poly_gen(args) -> s.PolyGenRequest:
    return s.PolyGenRequest(
        points=_json_arg(args.points, "--points"),
        symmetrize=args.symmetrize,
        reflexive=args.reflexive,
    )


def _build_poly_parse(args) -> s.PolyParseRequest:
    return s.PolyParseRequest(text=_payload(args.text, "--text"), k=args.k, n=args.n)


def _build_zero_graph(args) -> s.ZeroGraphRequest:
    return s.ZeroGraphRequest(
        text=_payload(args.text, "--text"),
        k=args.k,
        n=args.n,
        points=_json_arg(args.points, "--points"),
    )


def _build_registry(args) -> s.RegistryRequest:
    return s.RegistryRequest(
        name=args.name,
        param=args.param,
        kappa=args.kappa,
        continuum=args.continuum,
        cardinality=args.cardinality,
    )


def _build_shift_graph(args) -> s.ShiftGraphRequest:
    return s.ShiftGraphRequest(n=args.n)


def _build_shift_color(args) -> s.ShiftColorRequest:
    return s.ShiftColorRequest(point=[args.a, args.b])


def _add_points(p: argparse.ArgumentParser):
    p.add_argument("--points", required=True, help="template points as JSON, e.g. '[[0,0],[0,1]]'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="template-chroma",
        description="Template hypergraph computations, exact and symbolic.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service (default: run in-process)",
    )
    parser.add_argument(
        "--output",
        default=None,
        help="write the JSON result to this file instead of stdout",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    template = groups.add_parser("template", help="template structure operations")
    template_sub = template.add_subparsers(dest="command", required=True)

    p = template_sub.add_parser("analyze", help="e, simplicity, connectivity, symbolic chi")
    _add_points(p)
    p.add_argument("--continuum", type=int, required=True, help="c in 2^aleph_0 = aleph_c")
    p.set_defaults(build=_build_analyze, path="/template/analyze", handler=handlers.analyze)

    p = template_sub.add_parser("enumerate", help="all isomorphism classes")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--simple", action="store_true", help="simple templates only")
    p.set_defaults(
        build=_build_enumerate, path="/template/enumerate", handler=handlers.enumerate_classes
    )

    p = template_sub.add_parser("images", help="all homomorphic images")
    _add_points(p)
    p.set_defaults(build=_build_images, path="/template/images", handler=handlers.images)

    chi = groups.add_parser("chi", help="chromatic numbers, symbolic and exact")
    chi_sub = chi.add_subparsers(dest="command", required=True)

    p = chi_sub.add_parser("symbolic", help="symbolic chi of the template hypergraph on reals")
    _add_points(p)
    p.add_argument("--continuum", type=int, required=True)
    p.set_defaults(build=_build_chi_symbolic, path="/chi/symbolic", handler=handlers.chi_symbolic)

    p = chi_sub.add_parser("exact", help="exact chi of the template hypergraph on a finite grid")
    p.add_argument("--grid", required=True, help="comma-separated sizes, e.g. 2,2")
    _add_points(p)
    p.add_argument("--witness", action="store_true", help="include a witness coloring")
    p.set_defaults(build=_build_chi_exact, path="/chi/exact", handler=handlers.chi_exact)

    p = chi_sub.add_parser("achievable", help="achievable chromatic numbers for arity k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--continuum", type=int, required=True)
    p.set_defaults(
        build=_build_achievable, path="/chi/achievable", handler=handlers.chi_achievable
    )

    p = chi_sub.add_parser("forbidden", help="forbidden family for kappa-colorability")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kappa", required=True, help="e.g. aleph_0")
    p.add_argument("--continuum", type=int, required=True)
    p.set_defaults(build=_build_forbidden, path="/chi/forbidden", handler=handlers.chi_forbidden)

    embed = groups.add_parser("embed", help="dimension lifts and sampled verification")
    embed_sub = embed.add_subparsers(dest="command", required=True)

    p = embed_sub.add_parser("lift", help="lift to a higher dimension (e preserved)")
    _add_points(p)
    p.add_argument("--target-dim", type=int, default=None)
    p.add_argument(
        "--reduce",
        action="store_true",
        help="project onto a minimum distinguisher instead of lifting",
    )
    p.set_defaults(build=_build_lift, path="/embed/lift", handler=handlers.embed_lift)

    p = embed_sub.add_parser("verify", help="sampled edge-equivalence check of the lift map")
    _add_points(p)
    p.add_argument("--target-dim", type=int, default=None)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-fraction", type=float, default=0.5)
    p.add_argument(
        "--control-points",
        default=None,
        help="negative control: verify against the lift of this template instead",
    )
    p.set_defaults(build=_build_verify, path="/embed/verify", handler=handlers.embed_verify)

    poly = groups.add_parser("poly", help="template polynomials and zero hypergraphs")
    poly_sub = poly.add_subparsers(dest="command", required=True)

    p = poly_sub.add_parser("gen", help="polynomial whose zero hypergraph matches the template")
    _add_points(p)
    p.add_argument("--symmetrize", action="store_true")
    p.add_argument("--reflexive", action="store_true")
    p.set_defaults(build=_build_poly_gen, path="/poly/gen", handler=handlers.poly_gen)

    p = poly_sub.add_parser("parse", help="parse polynomial text into the AST")
    p.add_argument("--text", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(build=_build_poly_parse, path="/poly/parse", handler=handlers.poly_parse)

    p = poly_sub.add_parser("zero-graph", help="zero hypergraph of a polynomial on given points")
    p.add_argument("--text", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--points",
        required=True,
        help="JSON list of n-tuples; rationals as strings like \"1/2\"",
    )
    p.set_defaults(
        build=_build_zero_graph, path="/poly/zero-graph", handler=handlers.poly_zero_graph
    )

    registry = groups.add_parser("registry", help="named polynomial families")
    registry_sub = registry.add_subparsers(dest="command", required=True)

    p = registry_sub.add_parser("query", help="avoidability / chromatic bound lookup")
    p.add_argument("--name", required=True, help="fox, simplex, isosceles, pythagorean, distance")
    p.add_argument("--param", type=int, default=None)
    p.add_argument("--kappa", default=None)
    p.add_argument("--continuum", type=int, default=None)
    p.add_argument("--cardinality", default=None, help="|D| for the distance entry")
    p.set_defaults(build=_build_registry, path="/registry/query", handler=handlers.registry_query)

    shift = groups.add_parser("shift", help="shift graph and its interval coloring")
    shift_sub = shift.add_subparsers(dest="command", required=True)

    p = shift_sub.add_parser("graph", help="finite shift graph on pairs below n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(build=_build_shift_graph, path="/shift/graph", handler=handlers.shift_graph)

    p = shift_sub.add_parser("color", help="canonical interval color of a rational pair")
    p.add_argument("--a", required=True, help="rational, e.g. 0 or 1/3")
    p.add_argument("--b", required=True)
    p.set_defaults(
        build=_build_shift_color, path="/shift/color", handler=handlers.shift_color_point
    )

    return parser


def render_response(model: BaseModel) -> str:
    return json.dumps(model.model_dump(), separators=(",", ":"))


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text + "\n")
    else:
        print(text)


def _run_remote(server: str, path: str, req: BaseModel, output: Optional[str]) -> int:
    import httpx

    response = httpx.post(server.rstrip("/") + path, json=req.model_dump())
    _emit(response.text, output)
    return 0 if response.status_code < 400 else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        req = args.build(args)
    except _UsageError as err:
        print(str(err), file=sys.stderr)
        return 2
    except ValidationError as err:
        print(f"invalid arguments: {err}", file=sys.stderr)
        return 2
    if args.server:
        return _run_remote(args.server, args.path, req, args.output)
    handler: Callable[[BaseModel], BaseModel] = args.handler
    try:
        response = handler(req)
    except TemplateChromaError as err:
        _emit(json.dumps({"error": err.to_json()}, separators=(",", ":")), args.output)
        return 1
    _emit(render_response(response), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
