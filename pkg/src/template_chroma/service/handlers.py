"""One handler per operation; routes and the CLI both dispatch here."""

from __future__ import annotations

from .. import __version__
from ..cardinals import ContinuumSetting, least_aleph_reaching, parse_cardinal
from ..chromatic import (
    achievable_chromatics,
    chi_template,
    distance_chromatic_upper,
    forbidden_family,
    registry_avoidable,
    registry_entry,
)
from ..distinguishers import min_distinguisher_size
from ..embeddings import (
    lift_to_dim,
    pairing_map_chain,
    reduce_to_distinguisher,
    SamplerSpec,
    verify_embedding,
)
from ..errors import DimensionMismatch, IndexOutOfRange
from ..finite_lab import (
    build_shift_graph,
    build_template_hypergraph,
    chromatic_exact,
    GridSpec,
    shift_color,
)
from ..polynomials import (
    node_to_json,
    parse_polynomial,
    render_polynomial,
    template_to_polynomial,
    zero_hypergraph_on_grid,
)
from ..templates import (
    enumerate_templates,
    homomorphic_images,
    is_connected,
    is_simple,
    Template,
    validate_template,
)
from . import schemas as s


def _template_model(t: Template) -> s.TemplateModel:
    return s.TemplateModel(dim=t.dim, points=[list(p) for p in t.points])


def analyze(req: s.AnalyzeRequest) -> s.AnalyzeResponse:
    tpl = validate_template(req.points)
    setting = ContinuumSetting(req.continuum)
    e = min_distinguisher_size(tpl)
    return s.AnalyzeResponse(
        e=e,
        simple=is_simple(tpl),
        connected=is_connected(tpl),
        chi=least_aleph_reaching(setting, e - 1).render(),
    )


def enumerate_classes(req: s.EnumerateRequest) -> s.EnumerateResponse:
    classes = enumerate_templates(req.dim, req.k, simple_only=req.simple_only)
    return s.EnumerateResponse(
        count=len(classes), templates=[_template_model(t) for t in classes]
    )


def images(req: s.ImagesRequest) -> s.ImagesResponse:
    tpl = validate_template(req.points)
    result = homomorphic_images(tpl)
    return s.ImagesResponse(count=len(result), images=[_template_model(t) for t in result])


def chi_symbolic(req: s.SymbolicChiRequest) -> s.SymbolicChiResponse:
    tpl = validate_template(req.points)
    verdict = chi_template(tpl, ContinuumSetting(req.continuum))
    return s.SymbolicChiResponse(
        chi=verdict.chi.render(),
        e=verdict.distinguisher_size,
        template=_template_model(verdict.template),
        setting=s.SettingModel(continuum=req.continuum),
        citation=verdict.rule(),
    )


def chi_exact(req: s.ExactChiRequest) -> s.ExactChiResponse | s.ExactChiWitnessResponse:
    tpl = validate_template(req.points)
    hypergraph = build_template_hypergraph(GridSpec(sizes=tuple(req.grid)), tpl)
    result = chromatic_exact(hypergraph)
    if req.include_witness:
        return s.ExactChiWitnessResponse(chi=result.chi, witness=list(result.coloring))
    return s.ExactChiResponse(chi=result.chi)


def chi_achievable(req: s.AchievableRequest) -> s.AchievableResponse:
    achievable = achievable_chromatics(req.k, ContinuumSetting(req.continuum))
    return s.AchievableResponse(
        finite_min=1,
        infinite=[c.render() for c in achievable.infinite_members()],
    )


def chi_forbidden(req: s.ForbiddenRequest) -> s.ForbiddenResponse:
    family = forbidden_family(
        req.k, parse_cardinal(req.kappa), ContinuumSetting(req.continuum)
    )
    return s.ForbiddenResponse(
        k=req.k,
        kappa=req.kappa,
        continuum=req.continuum,
        members=[
            s.ForbiddenMember(e=e, template=_template_model(t)) for e, t in family.members
        ],
    )


def embed_lift(req: s.LiftRequest) -> s.LiftResponse | s.ReduceResponse:
    tpl = validate_template(req.points)
    if req.reduce:
        data = reduce_to_distinguisher(tpl)
        payload = data.to_json()
        return s.ReduceResponse(
            template=s.TemplateModel(**payload["template"]),
            witness=payload["witness"],
            source_dim=payload["source_dim"],
            fill=payload["fill"],
            simple=payload["simple"],
            map=payload["map"],
        )
    target = req.target_dim if req.target_dim is not None else tpl.dim + 1
    lifted = lift_to_dim(tpl, target)
    return s.LiftResponse(
        template=_template_model(lifted.template),
        base=_template_model(lifted.base),
        e=min_distinguisher_size(lifted.template),
        trace=list(lifted.trace),
    )


def embed_verify(req: s.VerifyRequest) -> s.VerifyResponse:
    tpl = validate_template(req.points)
    target = req.target_dim if req.target_dim is not None else tpl.dim + 1
    if req.control_points is not None:
        control = validate_template(req.control_points)
        if control.dim != tpl.dim:
            raise DimensionMismatch(
                f"control template dim {control.dim} != {tpl.dim}", control=control.dim
            )
        lifted = lift_to_dim(control, target).template
    else:
        lifted = lift_to_dim(tpl, target).template
    report = verify_embedding(
        tpl,
        lifted,
        pairing_map_chain(target, tpl.dim),
        SamplerSpec(
            seed=req.seed,
            bound=req.bound,
            count=req.samples,
            edge_fraction=req.edge_fraction,
        ),
    )
    payload = report.to_json()
    return s.VerifyResponse(ok=report.ok, **payload)


def poly_gen(req: s.PolyGenRequest) -> s.PolyResponse:
    tpl = validate_template(req.points)
    poly = template_to_polynomial(tpl, symmetrize=req.symmetrize, reflexive=req.reflexive)
    return s.PolyResponse(
        k=poly.k,
        n=poly.n,
        symmetrized=poly.symmetrized,
        reflexive=poly.reflexive,
        text=render_polynomial(poly.body),
        ast=node_to_json(poly.body),
    )


def poly_parse(req: s.PolyParseRequest) -> s.PolyResponse:
    poly = parse_polynomial(req.text, req.k, req.n)
    return s.PolyResponse(
        k=poly.k,
        n=poly.n,
        symmetrized=poly.symmetrized,
        reflexive=poly.reflexive,
        text=render_polynomial(poly.body),
        ast=node_to_json(poly.body),
    )


def poly_zero_graph(req: s.ZeroGraphRequest) -> s.HypergraphResponse:
    poly = parse_polynomial(req.text, req.k, req.n)
    hypergraph = zero_hypergraph_on_grid(poly, req.points)
    payload = hypergraph.to_json()
    return s.HypergraphResponse(**payload)


def registry_query(
    req: s.RegistryRequest,
) -> s.RegistryAvoidableResponse | s.RegistryDistanceResponse:
    if req.name == "distance":
        if req.cardinality is None:
            raise IndexOutOfRange(
                "distance query needs --cardinality (size of the distance set)"
            )
        bound = distance_chromatic_upper(parse_cardinal(req.cardinality))
        return s.RegistryDistanceResponse(chi_upper=bound.render())
    if req.kappa is None or req.continuum is None:
        raise IndexOutOfRange("registry query needs kappa and continuum")
    entry = registry_entry(req.name, req.param)
    verdict = registry_avoidable(
        entry, parse_cardinal(req.kappa), ContinuumSetting(req.continuum)
    )
    return s.RegistryAvoidableResponse(avoidable=verdict)


def shift_graph(req: s.ShiftGraphRequest) -> s.HypergraphResponse:
    payload = build_shift_graph(req.n).to_json()
    return s.HypergraphResponse(**payload)


def shift_color_point(req: s.ShiftColorRequest) -> s.ShiftColorResponse:
    token = shift_color(req.point)
    payload = token.to_json()
    return s.ShiftColorResponse(value=payload["value"], tag=payload["tag"])


def health() -> s.HealthResponse:
    return s.HealthResponse(status="ok", version=__version__)
