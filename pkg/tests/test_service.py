import pytest
from fastapi.testclient import TestClient

from skewpoly.service import app

import cases_f256

RING4 = "GF(2^2); frobenius=1"
RING256 = "GF(2^8; modulus=x^8+x^4+x^3+x^2+1; var=a); frobenius=2"
RINGT = "GF(2^4)(t); sigma: t -> (a^5)*t"


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200 and r.json()["status"] == "ok"


def test_parse_endpoint(client):
    r = client.post("/v1/parse", json={"ring": RING4, "poly": "X^2+1"})
    assert r.status_code == 200
    body = r.json()
    assert body["canonical"] == "X^2 + (1)"
    assert body["degree"] == 2


def test_parse_error_payload(client):
    r = client.post("/v1/parse", json={"ring": RING4, "poly": "X^2 + ("})
    assert r.status_code == 400
    detail = r.json()["detail"]
    assert detail["code"] == "parse_error"
    assert isinstance(detail["position"], int)


def test_mul_and_ldiv(client):
    r = client.post("/v1/mul", json={"ring": RING4, "f": "X+1", "g": "X+1",
                                     "verify": True})
    assert r.status_code == 200
    assert r.json()["result"] == ["X^2 + (1)"]
    assert r.json()["verified"] is True
    r = client.post("/v1/ldiv", json={"ring": RING4, "f": "X^2+1",
                                      "g": "X+1", "verify": True})
    body = r.json()
    assert body["quotient"] == "X + (1)" and body["remainder"] == "0"
    assert body["verified"] is True


def test_rgcd_llcm(client):
    r = client.post("/v1/rgcd", json={"ring": RING4, "f": "X+1",
                                      "g": "X+(a)", "verify": True})
    assert r.json()["result"] == ["(1)"]
    assert r.json()["verified"] is True
    r = client.post("/v1/llcm", json={"ring": RING4, "f": "X+1",
                                      "g": "X+(a)", "verify": True})
    assert r.status_code == 200
    assert r.json()["verified"] is True


def test_bound_endpoint(client):
    r = client.post("/v1/bound", json={"ring": RING4, "poly": "X+1",
                                       "verify": True, "algorithm": "v1"})
    body = r.json()
    assert body["result"] == ["X^2 + (1)"]
    assert body["central"] == {"m": 0, "fhat": "z + (1)"}
    assert body["verified"] is True


def test_oracle_bound_endpoint(client):
    r = client.post("/v1/oracle-bound", json={"ring": RING4, "poly": "X+1",
                                              "verify": True})
    assert r.json()["result"] == ["X^2 + (1)"]
    assert r.json()["verified"] is True


def test_irreducible_endpoint(client):
    r = client.post("/v1/irreducible", json={"ring": RING4, "poly": "X",
                                             "verify": True})
    assert r.json()["irreducible"] is True
    assert r.json()["verified"] is True
    r = client.post("/v1/irreducible", json={"ring": RINGT, "poly": "X+1"})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "unsupported_field"


def test_factor_endpoint_with_verification(client):
    r = client.post("/v1/factor", json={"ring": RING4, "poly": "(a)*X^2+(a)",
                                        "seed": 5, "verify": True})
    body = r.json()
    assert body["count"] == 2
    assert body["unit"] == "a"
    assert body["verified"] is True
    assert len(body["certificates"]) == 2


def test_factor_with_supplied_central(client):
    r = client.post("/v1/factor", json={
        "ring": RING4, "poly": "X^2+1", "central_factors": ["z+1"]})
    assert r.status_code == 200
    assert r.json()["count"] == 2


def test_split_endpoint(client):
    r = client.post("/v1/split", json={"ring": RING4, "poly": "X^2+1",
                                       "pi": "z+1", "verify": True})
    body = r.json()
    assert body["right"] == "X^2 + (1)"
    assert body["verified"] is True


def test_bench_endpoint(client):
    r = client.post("/v1/bench", json={"ring": RING256, "op": "bound",
                                       "degrees": [4, 8], "trials": 1,
                                       "seed": 3})
    body = r.json()
    assert len(body["rows"]) == 2
    assert body["slope"] is None or isinstance(body["slope"], float)
    r = client.post("/v1/bench", json={"ring": RING256, "op": "bound",
                                       "degrees": [6], "trials": 1})
    assert r.json()["slope"] is None  # single degree: undefined slope


def test_response_determinism(client):
    payload = {"ring": RING256, "poly": cases_f256.F_DEG100, "seed": 9}
    a = client.post("/v1/bound", json=payload)
    b = client.post("/v1/bound", json=payload)
    assert a.content == b.content


def test_factor_degree_100_verified(client):
    r = client.post("/v1/factor", json={
        "ring": RING256, "poly": cases_f256.F_DEG100, "seed": 31337,
        "verify": True})
    body = r.json()
    assert body["count"] == 9
    assert body["verified"] is True
    degs = sorted(s.count("X") and _lead_deg(s) for s in body["result"])
    assert degs == [1, 4, 5, 5, 5, 5, 5, 28, 42]


def _lead_deg(s):
    head = s.split(" + ")[0]
    if head == "X":
        return 1
    assert "X^" in head
    return int(head.split("X^")[1])


def test_zero_poly_rejected(client):
    r = client.post("/v1/bound", json={"ring": RING4, "poly": "0"})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "invalid_input"
