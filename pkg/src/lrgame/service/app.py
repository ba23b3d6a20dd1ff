"""FastAPI service exposing the engine.

One engine instance backs the whole app, guarded by a lock (the engine is
single-owner). POST /reset swaps in a fresh engine to reclaim memory.
Domain and parse errors map to HTTP 400 with a message and, for notation
errors, the byte offset.
"""
from __future__ import annotations

import threading

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..engine import Engine
from ..equivalence import UniverseTooLargeError, enumerate_universe, equivalent_bounded
from ..notation import ParseError, format_position, parse_position
from ..rulesets import even_nim_outcome, even_nim_values, value_table
from ..simplify import simplify
from .models import (
    BirthdayResponse,
    EquivRequest,
    EquivResponse,
    EvalResponse,
    EvenNimOutcomeRequest,
    EvenNimTableRequest,
    ExprRequest,
    OutcomeResponse,
    StatusResponse,
    SubtractionTableRequest,
    TableResponse,
    TableRow,
    TextResponse,
    UniverseRequest,
    UniverseResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="lrgame",
        version=__version__,
        description="Exact engine for LR-ending partisan games",
    )
    state = {"engine": Engine()}
    lock = threading.Lock()

    def bad_request(exc: Exception) -> HTTPException:
        detail = {"message": str(exc)}
        if isinstance(exc, ParseError):
            detail["offset"] = exc.offset
        return HTTPException(status_code=400, detail=detail)

    @app.get("/health", response_model=StatusResponse)
    def health() -> StatusResponse:
        return StatusResponse(status="ok")

    @app.post("/reset", response_model=StatusResponse)
    def reset() -> StatusResponse:
        with lock:
            state["engine"] = Engine()
        return StatusResponse(status="reset")

    @app.post("/eval", response_model=EvalResponse)
    def eval_expr(req: ExprRequest) -> EvalResponse:
        with lock:
            engine = state["engine"]
            try:
                pos = parse_position(engine, req.expr)
            except ParseError as exc:
                raise bad_request(exc)
            outcome = engine.outcome(pos)
            value = format_position(engine, simplify(engine, pos), recognize_names=True)
            return EvalResponse(outcome=outcome.value, value=value)

    @app.post("/canonical", response_model=TextResponse)
    def canonical(req: ExprRequest) -> TextResponse:
        with lock:
            engine = state["engine"]
            try:
                pos = parse_position(engine, req.expr)
            except ParseError as exc:
                raise bad_request(exc)
            return TextResponse(text=format_position(engine, pos))

    @app.post("/conjugate", response_model=TextResponse)
    def conjugate(req: ExprRequest) -> TextResponse:
        with lock:
            engine = state["engine"]
            try:
                pos = parse_position(engine, req.expr)
            except ParseError as exc:
                raise bad_request(exc)
            return TextResponse(text=format_position(engine, engine.conjugate(pos)))

    @app.post("/birthday", response_model=BirthdayResponse)
    def birthday(req: ExprRequest) -> BirthdayResponse:
        with lock:
            engine = state["engine"]
            try:
                pos = parse_position(engine, req.expr)
            except ParseError as exc:
                raise bad_request(exc)
            return BirthdayResponse(birthday=engine.birthday(pos))

    @app.post("/simplify", response_model=TextResponse)
    def simplify_expr(req: ExprRequest) -> TextResponse:
        with lock:
            engine = state["engine"]
            try:
                pos = parse_position(engine, req.expr)
            except ParseError as exc:
                raise bad_request(exc)
            return TextResponse(text=format_position(engine, simplify(engine, pos)))

    @app.post("/equiv", response_model=EquivResponse)
    def equiv(req: EquivRequest) -> EquivResponse:
        with lock:
            engine = state["engine"]
            try:
                left = parse_position(engine, req.left)
                right = parse_position(engine, req.right)
                verdict = equivalent_bounded(engine, left, right, day=req.day)
            except (ParseError, UniverseTooLargeError, ValueError) as exc:
                raise bad_request(exc)
            witness = None
            if verdict.witness is not None:
                witness = format_position(engine, verdict.witness)
            return EquivResponse(
                refuted=verdict.refuted,
                witness=witness,
                contexts_checked=verdict.contexts_checked,
            )

    @app.post("/universe", response_model=UniverseResponse)
    def universe(req: UniverseRequest) -> UniverseResponse:
        with lock:
            engine = state["engine"]
            try:
                index = enumerate_universe(engine, req.day)
            except (UniverseTooLargeError, ValueError) as exc:
                raise bad_request(exc)
            members = [format_position(engine, m) for m in index.members]
            return UniverseResponse(day=index.day, members=members)

    @app.post("/tables/subtraction", response_model=TableResponse)
    def subtraction_table(req: SubtractionTableRequest) -> TableResponse:
        with lock:
            engine = state["engine"]
            try:
                table = value_table(engine, req.subtraction_set, req.max_size)
            except ValueError as exc:
                raise bad_request(exc)
            rows = [
                TableRow(
                    n=n,
                    value=format_position(engine, entry),
                    outcome=engine.outcome(entry).value,
                )
                for n, entry in enumerate(table.entries)
            ]
            return TableResponse(
                rows=rows,
                preperiod=table.detected_preperiod,
                period=table.detected_period,
            )

    @app.post("/tables/even-nim", response_model=TableResponse)
    def even_nim_table(req: EvenNimTableRequest) -> TableResponse:
        with lock:
            engine = state["engine"]
            try:
                values = even_nim_values(engine, req.max_size)
            except ValueError as exc:
                raise bad_request(exc)
            rows = [
                TableRow(
                    n=n,
                    value=format_position(engine, entry, recognize_names=True),
                    outcome=engine.outcome(entry).value,
                )
                for n, entry in values
            ]
            return TableResponse(rows=rows, preperiod=None, period=None)

    @app.post("/outcomes/even-nim", response_model=OutcomeResponse)
    def even_nim_board_outcome(req: EvenNimOutcomeRequest) -> OutcomeResponse:
        try:
            closed = even_nim_outcome(req.sizes)
        except ValueError as exc:
            raise bad_request(exc)
        return OutcomeResponse(outcome=closed.value)

    return app


app = create_app()


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)
