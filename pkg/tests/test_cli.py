import json

import pytest

from dualdeg.cli import main


def run(tmp_path, capsys, *argv):
    out = tmp_path / "m.json"
    code = main(list(argv) + ["--out", str(out)])
    text = capsys.readouterr()
    return code, text.out, json.loads(out.read_text()) if out.exists() else None


def test_adeg_or2(tmp_path, capsys):
    code, out, man = run(tmp_path, capsys, "adeg", "--fn", "or", "--n", "2", "--eps", "1/3")
    assert code == 0 and out.strip() == "2"
    assert {"d": 1, "eps_opt": "1/2"} in man["results"]["ladder"]
    assert all(p["status"] == "CERTIFIED_EXACT" for p in man["properties"])


def test_decimal_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["adeg", "--fn", "or", "--n", "2", "--eps", "0.3"])
    assert exc.value.code == 1


def test_unknown_function_writes_manifest(tmp_path, capsys):
    code, _, man = run(tmp_path, capsys, "cert", "--fn", "nope", "--n", "2")
    assert code == 1 and man["properties"][0]["status"] == "FAILED"


def test_eps_and_dual(tmp_path, capsys):
    assert run(tmp_path, capsys, "eps", "--fn", "or:2", "--d", "1")[1].strip() == "1/2"
    code, out, man = run(tmp_path, capsys, "dual", "--fn", "or", "--n", "2", "--d", "2")
    assert code == 0 and man["results"]["correlation"] == "1/2"


def test_omega_check(tmp_path, capsys):
    code, _, man = run(tmp_path, capsys, "omega", "--k", "25", "--check")
    assert code == 0 and len(man["properties"]) >= 5
    assert all(p["status"] == "CERTIFIED_EXACT" for p in man["properties"])


def test_compose_amplify_masscheck(tmp_path, capsys):
    assert run(tmp_path, capsys, "compose", "--outer", "and:2", "--inner", "or:2")[0] == 0
    code, out, _ = run(tmp_path, capsys, "amplify", "--fn", "or", "--n", "2", "--M", "3")
    assert code == 0 and out.strip() == "7/8"
    assert run(tmp_path, capsys, "masscheck", "--fn", "or", "--n", "2", "--R", "2", "--N", "3")[0] == 0


def test_schedule(tmp_path, capsys):
    code, _, man = run(tmp_path, capsys, "amplify", "--schedule", "--n", "1000", "--d", "10")
    assert code == 0 and man["results"]["k"] == 16


def test_reduce_and_correct(tmp_path, capsys):
    assert run(tmp_path, capsys, "reduce", "--N", "2", "--R", "3", "--clauses", "1,2;2,3", "--width", "2")[0] == 0
    code, _, man = run(tmp_path, capsys, "correct", "--fn", "or", "--n", "2", "--d", "2")
    assert code == 2  # asymptotic targets are reported, not certified, at this size
    assert {p["status"] for p in man["properties"]} == {"CERTIFIED_EXACT", "REPORTED"}


def test_share_flow(tmp_path, capsys):
    scheme = str(tmp_path / "s.json")
    assert run(tmp_path, capsys, "share", "make", "--fn", "or", "--n", "2", "--d", "2", "--scheme", scheme)[0] == 0
    code, out, _ = run(tmp_path, capsys, "share", "audit", "--scheme", scheme, "--d", "2")
    assert code == 0 and out.strip() == "pass"
    code, out, man = run(tmp_path, capsys, "share", "split", "--scheme", scheme, "--secret", "-1", "--seed", "9")
    bundle = tmp_path / "b.json"
    bundle.write_text(json.dumps(man["results"]))
    code, out, man = run(tmp_path, capsys, "share", "reconstruct", "--scheme", scheme, "--file", str(bundle))
    assert code == 0 and out.strip() == "-1"
    assert scheme in man["inputs"]
    code, out, _ = run(tmp_path, capsys, "share", "advantage", "--scheme", scheme, "--trials", "2000", "--seed", "1")
    assert code == 0 and out.strip() == "1/2"


def test_cert_and_report(tmp_path, capsys):
    assert run(tmp_path, capsys, "cert", "--fn", "or", "--n", "3")[1].split() == ["3", "1", "3"]
    csv_path = tmp_path / "t.csv"
    code, out, _ = run(tmp_path, capsys, "report", "--fn", "or", "--n", "2", "--csv", str(csv_path))
    assert code == 0 and "1,1/2," in csv_path.read_text()


def test_byte_identical_modulo_wall_time(tmp_path, capsys):
    runs = []
    for _ in range(2):
        _, _, man = run(tmp_path, capsys, "adeg", "--fn", "maj", "--n", "3", "--eps", "1/3")
        man.pop("wall_time_s")
        runs.append(json.dumps(man, sort_keys=True))
    assert runs[0] == runs[1]
