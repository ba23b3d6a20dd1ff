"""HTTP service endpoints, exercised in-process over ASGI."""
import asyncio

import httpx
import pytest

from lrgame.service import create_app


@pytest.fixture()
def call():
    app = create_app()

    def _call(method: str, path: str, **kwargs) -> httpx.Response:
        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://service"
            ) as client:
                return await client.request(method, path, **kwargs)

        return asyncio.run(go())

    return _call


def test_health(call):
    r = call("GET", "/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_eval_reports_outcome_and_named_value(call):
    r = call("POST", "/eval", json={"expr": "{{*L}}"})
    assert r.status_code == 200
    assert r.json() == {"outcome": "L", "value": "*L"}


def test_eval_sum_expression(call):
    r = call("POST", "/eval", json={"expr": "{*L} + {*R}"})
    assert r.json() == {"outcome": "R", "value": "*R"}


def test_eval_parse_error_carries_offset(call):
    r = call("POST", "/eval", json={"expr": "{*L,}"})
    assert r.status_code == 400
    detail = r.json()["detail"]
    assert detail["offset"] == 4
    assert "position atom" in detail["message"]


def test_canonical_orders_options(call):
    r = call("POST", "/canonical", json={"expr": "{{*R}, *L}"})
    assert r.json() == {"text": "{*L, {*R}}"}


def test_conjugate_swaps_terminals(call):
    r = call("POST", "/conjugate", json={"expr": "{*L, {*R}}"})
    assert r.json() == {"text": "{*R, {*L}}"}


def test_birthday(call):
    r = call("POST", "/birthday", json={"expr": "{{{*L}}}"})
    assert r.json() == {"birthday": 3}


def test_simplify_returns_plain_text(call):
    r = call("POST", "/simplify", json={"expr": "{*R, {*L, {*R}}}"})
    assert r.json() == {"text": "{*R}"}


def test_equiv_refuted_with_witness(call):
    r = call("POST", "/equiv", json={"left": "{*L}", "right": "*L"})
    body = r.json()
    assert body["refuted"] is True
    assert body["witness"] == "{{*L, *R}}"
    assert body["contexts_checked"] >= 1


def test_equiv_no_counterexample_at_day_one(call):
    r = call("POST", "/equiv", json={"left": "{*L}", "right": "*L", "day": 1})
    body = r.json()
    assert body == {"refuted": False, "witness": None, "contexts_checked": 5}


def test_equiv_day_past_cap_is_bad_request(call):
    r = call("POST", "/equiv", json={"left": "*L", "right": "*L", "day": 3})
    assert r.status_code == 400
    assert "capped at day 2" in r.json()["detail"]["message"]


def test_equiv_negative_day_fails_validation(call):
    r = call("POST", "/equiv", json={"left": "*L", "right": "*L", "day": -1})
    assert r.status_code == 422


def test_universe_day_one(call):
    r = call("POST", "/universe", json={"day": 1})
    assert r.json() == {
        "day": 1,
        "members": ["*L", "*R", "{*L, *R}", "{*L}", "{*R}"],
    }


def test_universe_day_three_is_bad_request(call):
    r = call("POST", "/universe", json={"day": 3})
    assert r.status_code == 400
    assert "8589934593" in r.json()["detail"]["message"]


def test_subtraction_table(call):
    r = call(
        "POST",
        "/tables/subtraction",
        json={"subtraction_set": [2, 5], "max_size": 13},
    )
    body = r.json()
    assert body["preperiod"] == 0
    assert body["period"] == 7
    assert body["rows"][0] == {"n": 0, "value": "*L", "outcome": "L"}
    assert body["rows"][5] == {"n": 5, "value": "{*L, {*R}}", "outcome": "N"}
    assert body["rows"][12]["value"] == body["rows"][5]["value"]


def test_subtraction_table_no_period_detected(call):
    r = call(
        "POST",
        "/tables/subtraction",
        json={"subtraction_set": [2, 5], "max_size": 4},
    )
    body = r.json()
    assert body["preperiod"] is None
    assert body["period"] is None


def test_subtraction_table_validation(call):
    r = call("POST", "/tables/subtraction", json={"subtraction_set": [], "max_size": 5})
    assert r.status_code == 422
    r = call("POST", "/tables/subtraction", json={"subtraction_set": [2], "max_size": -1})
    assert r.status_code == 422
    r = call("POST", "/tables/subtraction", json={"subtraction_set": [0, 2], "max_size": 5})
    assert r.status_code == 400


def test_even_nim_table_uses_names(call):
    r = call("POST", "/tables/even-nim", json={"max_size": 6})
    body = r.json()
    assert [row["n"] for row in body["rows"]] == [0, 2, 4, 6]
    assert [row["value"] for row in body["rows"]] == ["*L", "B1", "M2", "M3"]
    assert [row["outcome"] for row in body["rows"]] == ["L", "N", "N", "N"]


def test_even_nim_table_odd_max_lists_even_sizes_below_it(call):
    r = call("POST", "/tables/even-nim", json={"max_size": 5})
    assert [row["n"] for row in r.json()["rows"]] == [0, 2, 4]


def test_even_nim_outcome(call):
    r = call("POST", "/outcomes/even-nim", json={"sizes": [0, 2, 4]})
    assert r.json() == {"outcome": "P"}
    r = call("POST", "/outcomes/even-nim", json={"sizes": []})
    assert r.json() == {"outcome": "L"}
    r = call("POST", "/outcomes/even-nim", json={"sizes": [3]})
    assert r.status_code == 400


def test_reset_returns_status(call):
    r = call("POST", "/eval", json={"expr": "M3"})
    assert r.status_code == 200
    r = call("POST", "/reset")
    assert r.json() == {"status": "reset"}
    r = call("POST", "/eval", json={"expr": "M3"})
    assert r.json()["value"] == "M3"
