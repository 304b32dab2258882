"""HTTP surface: one POST endpoint per operation, JSON in and out.

Domain errors map to 400 with a machine-readable error object; request
shape problems get FastAPI's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import TemplateChromaError
from . import handlers
from . import schemas as s

app = FastAPI(title="template-chroma", version=handlers.__version__)


@app.exception_handler(TemplateChromaError)
async def domain_error_handler(_: Request, exc: TemplateChromaError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": exc.to_json()})


@app.get("/health", response_model=s.HealthResponse)
def health() -> s.HealthResponse:
    return handlers.health()


@app.post("/template/analyze", response_model=s.AnalyzeResponse)
def template_analyze(req: s.AnalyzeRequest) -> s.AnalyzeResponse:
    return handlers.analyze(req)


@app.post("/template/enumerate", response_model=s.EnumerateResponse)
def template_enumerate(req: s.EnumerateRequest) -> s.EnumerateResponse:
    return handlers.enumerate_classes(req)


@app.post("/template/images", response_model=s.ImagesResponse)
def template_images(req: s.ImagesRequest) -> s.ImagesResponse:
    return handlers.images(req)


@app.post("/chi/symbolic", response_model=s.SymbolicChiResponse)
def chi_symbolic(req: s.SymbolicChiRequest) -> s.SymbolicChiResponse:
    return handlers.chi_symbolic(req)


@app.post(
    "/chi/exact", response_model=s.ExactChiResponse | s.ExactChiWitnessResponse
)
def chi_exact(req: s.ExactChiRequest):
    return handlers.chi_exact(req)


@app.post("/chi/achievable", response_model=s.AchievableResponse)
def chi_achievable(req: s.AchievableRequest) -> s.AchievableResponse:
    return handlers.chi_achievable(req)


@app.post("/chi/forbidden", response_model=s.ForbiddenResponse)
def chi_forbidden(req: s.ForbiddenRequest) -> s.ForbiddenResponse:
    return handlers.chi_forbidden(req)


@app.post("/embed/lift", response_model=s.LiftResponse | s.ReduceResponse)
def embed_lift(req: s.LiftRequest):
    return handlers.embed_lift(req)


@app.post("/embed/verify", response_model=s.VerifyResponse)
def embed_verify(req: s.VerifyRequest) -> s.VerifyResponse:
    return handlers.embed_verify(req)


@app.post("/poly/gen", response_model=s.PolyResponse)
def poly_gen(req: s.PolyGenRequest) -> s.PolyResponse:
    return handlers.poly_gen(req)


@app.post("/poly/parse", response_model=s.PolyResponse)
def poly_parse(req: s.PolyParseRequest) -> s.PolyResponse:
    return handlers.poly_parse(req)


@app.post("/poly/zero-graph", response_model=s.HypergraphResponse)
def poly_zero_graph(req: s.ZeroGraphRequest) -> s.HypergraphResponse:
    return handlers.poly_zero_graph(req)


@app.post(
    "/registry/query",
    response_model=s.RegistryAvoidableResponse | s.RegistryDistanceResponse,
)
def registry_query(req: s.RegistryRequest):
    return handlers.registry_query(req)


@app.post("/shift/graph", response_model=s.HypergraphResponse)
def shift_graph(req: s.ShiftGraphRequest) -> s.HypergraphResponse:
    return handlers.shift_graph(req)


@app.post("/shift/color", response_model=s.ShiftColorResponse)
def shift_color(req: s.ShiftColorRequest) -> s.ShiftColorResponse:
    return handlers.shift_color_point(req)
