import json
import os
from fractions import Fraction

from dualdeg.linalg import null_vector, rref, solve
from dualdeg.manifest import CERTIFIED, FAILED, REPORTED, PropertyLedger, build_manifest, file_digest, write_json_atomic


def test_rref_and_solve():
    red, piv = rref([[2, 4], [1, 2]])
    assert piv == [0] and red == [[1, 2]]
    assert solve([[1, 1], [1, -1]], [2, 0]) == [1, 1]
    assert solve([[1, 1], [2, 2]], [1, 3]) is None


def test_null_vector():
    v = null_vector([[1, 1, 0]], 3)
    assert v is not None and v[0] + v[1] == 0 and any(v)
    assert null_vector([[1, 0], [0, 1]], 2) is None


def test_ledger_statuses():
    led = PropertyLedger()
    led.assert_rel("a", Fraction(1, 2), "<=", 1)
    assert led.exit_code() == 0
    led.report("b", 2, "<=", 1)
    assert led["b"].status == REPORTED and led.exit_code() == 2
    led.report("c", 0, "<=", 1)
    assert led["c"].status == CERTIFIED
    led.assert_true("d", False)
    assert led["d"].status == FAILED and led.exit_code() == 1


def test_manifest_written_atomically(tmp_path):
    led = PropertyLedger()
    led.assert_rel("x", 1, "==", 1)
    path = tmp_path / "m.json"
    write_json_atomic(str(path), build_manifest("t", {"k": 1}, led, {}, 0.5))
    data = json.loads(path.read_text())
    assert data["properties"][0] == {"name": "x", "status": CERTIFIED, "holds": True, "lhs": "1/1", "relation": "==", "rhs": "1/1"}
    assert not [p for p in os.listdir(tmp_path) if p.startswith(".tmp")]
    assert len(file_digest(str(path))) == 64
