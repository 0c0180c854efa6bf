from __future__ import annotations

import warnings

import pytest

from conftest import WORKED_ALPHA, WORKED_BETA, WORKED_PRODUCT
from twistcong.cong_finite import coatom_fc, delta_fc, enumerate_fc
from twistcong.cong_infinite import Congruence, base_partition, coatom, delta_pair
from twistcong.partition_core import identity
from twistcong.twisted_monoid import Pair

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from twistcong.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json()["status"] == "ok"


class TestMul:
    def test_partition_product(self, client):
        res = client.post("/mul", json={"a": WORKED_ALPHA.to_json(), "b": WORKED_BETA.to_json()}).json()
        assert res == {"product": WORKED_PRODUCT.to_json(), "phi": 1}

    def test_twisted_product(self, client):
        a, b = Pair(2, WORKED_ALPHA).to_json(), Pair(3, WORKED_BETA).to_json()
        res = client.post("/mul", json={"a": a, "b": b}).json()
        assert res["product"] == Pair(6, WORKED_PRODUCT).to_json()
        res = client.post("/mul", json={"a": a, "b": b, "d": 5}).json()
        assert res["product"] == {"zero": True}

    def test_mismatched_n(self, client):
        res = client.post("/mul", json={"a": identity(2).to_json(), "b": identity(3).to_json()})
        assert res.status_code == 400 and "mismatched" in res.json()["detail"]

    def test_bad_blocks(self, client):
        res = client.post("/mul", json={"a": {"n": 2, "blocks": [[1]]}, "b": identity(2).to_json()})
        assert res.status_code == 400


class TestCounting:
    @pytest.mark.parametrize("method", ["closed", "recursion", "gf", "generate", "oracle"])
    def test_methods_agree(self, client, method):
        assert client.post("/count", json={"n": 2, "d": 1, "method": method}).json()["count"] == 43

    def test_unknown_method(self, client):
        assert client.post("/count", json={"n": 2, "d": 1, "method": "guess"}).status_code == 422

    def test_cap(self, client):
        res = client.post("/count", json={"n": 3, "d": 2, "method": "generate", "cap": 10})
        assert res.status_code == 400 and "cap" in res.json()["detail"]

    def test_table(self, client):
        res = client.post("/table", json={"nmax": 2, "dmax": 2}).json()
        assert res["rows"] == [[2, 3, 4], [3, 7, 14], [9, 43, 136]]
        assert res["csv"].splitlines()[0] == "n\\d,0,1,2"


class TestLattice:
    def test_report(self, client):
        res = client.post("/lattice", json={"n": 2, "d": 1}).json()
        assert res["report"]["size"] == 43
        assert res["report"]["modular"] and not res["report"]["distributive"]
        assert res["dot"].startswith("digraph")

    def test_chain_for_n0(self, client):
        res = client.post("/lattice", json={"n": 0, "d": 3}).json()
        assert res["report"]["size"] == 5 and res["report"]["distributive"]

    def test_cap(self, client):
        assert client.post("/lattice", json={"n": 3, "d": 2, "cap": 100}).status_code == 400


class TestPrincipal:
    def test_infinite(self, client):
        a = Pair(1, base_partition(3, 2)).to_json()
        b = Pair(3, base_partition(3, 2)).to_json()
        res = client.post("/principal", json={"a": a, "b": b, "n": 3}).json()
        assert res["setting"] == "infinite" and res["case"] == 2

    def test_finite(self, client):
        a = Pair(1, base_partition(2, 1)).to_json()
        res = client.post("/principal", json={"a": a, "b": {"zero": True}, "n": 2, "d": 1}).json()
        assert res["congruence"]["grid"] == [["D", "R"], ["D", "R"], ["D", "D"]]

    def test_zero_in_infinite_rejected(self, client):
        a = Pair(0, identity(2)).to_json()
        assert client.post("/principal", json={"a": a, "b": {"zero": True}, "n": 2}).status_code == 400

    def test_element_shape_validated(self, client):
        res = client.post("/principal", json={"a": {"i": 1}, "b": {"zero": True}, "n": 2, "d": 1})
        assert res.status_code == 422


class TestIncludeAndGen:
    def test_include_finite(self, client):
        res = client.post("/include", json={"left": delta_fc(2, 1).to_json(), "right": coatom_fc(2, 1).to_json()})
        assert res.json()["relation"] == "below"

    def test_include_infinite(self, client):
        res = client.post("/include", json={"left": coatom(2).to_json(), "right": coatom(2).to_json()}).json()
        assert res["relation"] == "equal"

    def test_include_mixed_rejected(self, client):
        res = client.post("/include", json={"left": delta_fc(2, 1).to_json(), "right": coatom(2).to_json()})
        assert res.status_code == 400

    def test_invalid_matrix_rejected(self, client):
        bad = {"n": 2, "d": 1, "grid": [["D", "D"], ["D", "R"], ["D", "D"]]}
        res = client.post("/include", json={"left": bad, "right": bad})
        assert res.status_code == 400 and "invalid" in res.json()["detail"]

    def test_gen_finite_with_oracle(self, client):
        m = enumerate_fc(2, 1)[5]
        res = client.post("/gen", json={"congruence": m.to_json(), "oracle": True}).json()
        assert res["verdict"] == "verified" and res["oracle_match"] is True and res["size"] <= res["bound"]

    def test_gen_infinite(self, client):
        res = client.post("/gen", json={"congruence": Congruence(delta_pair(2)).to_json()}).json()
        assert res == {"setting": "infinite", "pairs": [], "size": 0, "bound": 5, "verdict": "verified",
                       "oracle_match": None}
