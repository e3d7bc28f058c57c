"""HTTP service exposing the library; every endpoint is a stateless wrapper."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import abaci, littlewood_richardson, tableaux
from ..api import expand_to_schur, paths_report, schur_by_method
from ..partitions import Partition, partitions_of
from ..rsk import IntMatrix, burge, rsk, rsk_star
from ..tableaux import Tableau, parse_word, shape_from_greene
from .models import (
    AbacusResponse,
    CoefficientEntry,
    CoefficientTableResponse,
    ExpandRequest,
    InsertRequest,
    KostkaRequest,
    KostkaResponse,
    LRRequest,
    LRResponse,
    PathsRequest,
    PathsResponse,
    PolynomialResponse,
    PWResponse,
    RSKRequest,
    RSKResponse,
    SchurRequest,
    TableauResponse,
    WordRequest,
)


def _partition(parts) -> Partition:
    try:
        return Partition(parts)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _table_entries(table: dict[Partition, int], degree: int) -> list[CoefficientEntry]:
    return [
        CoefficientEntry(partition=list(lam.parts), coefficient=table[lam])
        for lam in partitions_of(degree)
        if table.get(lam)
    ]


def create_app() -> FastAPI:
    app = FastAPI(title="schurkit", version="0.1.0")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/schur", response_model=PolynomialResponse)
    def schur(req: SchurRequest) -> PolynomialResponse:
        lam = _partition(req.partition)
        try:
            poly = schur_by_method(lam, req.num_vars, req.method)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return PolynomialResponse(polynomial=str(poly))

    @app.post("/expand", response_model=CoefficientTableResponse)
    def expand(req: ExpandRequest) -> CoefficientTableResponse:
        mu = _partition(req.mu)
        table = expand_to_schur(req.source, mu)
        return CoefficientTableResponse(coefficients=_table_entries(table, mu.size()))

    @app.post("/kostka", response_model=KostkaResponse)
    def kostka_endpoint(req: KostkaRequest) -> KostkaResponse:
        lam = _partition(req.shape)
        value = tableaux.kostka(lam, req.content)
        witness = None
        if req.canonical:
            try:
                witness = [
                    list(row)
                    for row in tableaux.canonical_tableau(lam, _partition(req.content)).rows
                ]
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        return KostkaResponse(kostka=value, canonical_tableau=witness)

    @app.post("/lr", response_model=LRResponse)
    def lr(req: LRRequest) -> LRResponse:
        alpha = _partition(req.alpha)
        beta = _partition(req.beta)
        if req.outer is not None:
            outer = _partition(req.outer)
            return LRResponse(
                coefficient=littlewood_richardson.lr_coefficient(outer, alpha, beta)
            )
        table = littlewood_richardson.schur_product(alpha, beta)
        return LRResponse(
            coefficients=_table_entries(table, alpha.size() + beta.size())
        )

    @app.post("/insert", response_model=TableauResponse)
    def insert_endpoint(req: InsertRequest) -> TableauResponse:
        try:
            t = Tableau(req.tableau)
            result = tableaux.insert(t, req.letter)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return TableauResponse(tableau=[list(row) for row in result.rows])

    @app.post("/pw", response_model=PWResponse)
    def pw(req: WordRequest) -> PWResponse:
        try:
            word = parse_word(req.word)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        p = tableaux.p_tableau(word)
        lam, mu = shape_from_greene(word)
        return PWResponse(
            tableau=[list(row) for row in p.rows],
            shape=list(p.shape().parts),
            greene_shape=list(lam.parts),
            greene_conjugate=list(mu.parts),
        )

    @app.post("/rsk", response_model=RSKResponse)
    def rsk_endpoint(req: RSKRequest) -> RSKResponse:
        try:
            matrix = IntMatrix(req.matrix)
            if req.flavor == "rsk":
                p, q = rsk(matrix)
            elif req.flavor == "rsk_star":
                p, q = rsk_star(matrix)
            else:
                p, q = burge(matrix)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return RSKResponse(
            p=[list(row) for row in p.rows], q=[list(row) for row in q.rows]
        )

    @app.post("/abacus", response_model=AbacusResponse)
    def abacus_endpoint(req: WordRequest) -> AbacusResponse:
        try:
            w = abaci.LabeledAbacus.from_text(req.word)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        sign, shape, weight = abaci.abacus_stats(w)
        return AbacusResponse(sign=sign, shape=list(shape.parts), weight=str(weight))

    @app.post("/paths", response_model=PathsResponse)
    def paths(req: PathsRequest) -> PathsResponse:
        lam = _partition(req.shape)
        inner = _partition(req.inner) if req.inner else None
        try:
            count, lines = paths_report(req.model, lam, req.num_vars, inner, req.limit)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return PathsResponse(count=count, rendering="\n".join(lines))

    return app


app = create_app()
