import pytest
from fastapi.testclient import TestClient

from main import app

DIAMOND = "4 4\n0 1\n1 3\n0 2\n2 3\n"


@pytest.fixture
def client():
    return TestClient(app)


def test_root_and_health(client):
    assert client.get("/").json()["status"] == "running"
    health = client.get("/health").json()
    assert health["status"] == "healthy"
    assert health["solvers"] == ["edge", "vertex"]


@pytest.mark.parametrize("mode", ["edge", "vertex"])
def test_solve(client, mode):
    response = client.post("/api/solve", json={"graph": DIAMOND, "mode": mode, "k": 3, "seed": 5})
    assert response.status_code == 200
    body = response.json()
    assert body["n"] == 4
    assert body["values"][0] == [None, 1, 1, 2]
    assert body["output"].startswith("-\t1\t1\t2\n")


def test_oracle(client):
    response = client.post("/api/oracle", json={"graph": DIAMOND, "mode": "edge", "k": 1})
    assert response.status_code == 200
    assert response.json()["values"][0] == [None, 1, 1, 1]


def test_bad_requests(client):
    assert client.post("/api/solve", json={"graph": "2 1\n0 7\n", "k": 2}).status_code == 400
    assert client.post("/api/solve", json={"graph": DIAMOND, "k": 0}).status_code == 400
    assert client.post("/api/solve", json={"graph": DIAMOND, "k": 2, "trials": 2}).status_code == 400
    assert client.post("/api/solve", json={"graph": DIAMOND, "mode": "flow", "k": 2}).status_code == 422


def test_verify(client):
    response = client.post(
        "/api/verify", json={"mode": "edge", "instances": 4, "max_n": 5, "max_m": 8, "seed": 3}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert body["instances"] == 4

    assert client.post("/api/verify", json={"min_n": 1}).status_code == 400
