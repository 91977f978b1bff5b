import csv
import io
import json

import pytest

from halfzeta.cli import CSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zeta_builtin_E(capsys):
    code, out, _ = run(capsys, "zeta", "builtin:E", "--p", "2")
    assert code == 0
    d = json.loads(out)
    assert d["P1"] == [1, -4, 4] and d["q"] == 4 and d["counts"] == {"1": 1, "2": 9}


def test_zeta_missing_file(capsys):
    code, _, err = run(capsys, "zeta", "/no/such/file.json")
    assert code == 2 and "no such curve file" in err


def test_zeta_singular_plane(capsys, tmp_path):
    path = tmp_path / "nodal.json"
    path.write_text(json.dumps({"p": 3, "f": 1, "kind": "plane", "genus": 1,
                                "F_coeffs": {"0,2,1": 1, "3,0,0": 2, "2,0,1": 2}}))
    code, _, err = run(capsys, "zeta", str(path))
    assert code == 1 and "certification failed" in err


def test_special_builtins(capsys):
    code, out, _ = run(capsys, "special", "builtin:p1")
    d = json.loads(out)
    assert code == 0 and (d["rho"], d["c"], d["c2"]) == (0, "-3/4", "9/16")
    code, out, _ = run(capsys, "special", "builtin:E")
    d = json.loads(out)
    assert d["rho"] == 2 and d["c2"] == "9/16" and "m" not in d
    assert d["padic"]["equal"]


def test_special_non_square_q(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"p": 3, "f": 1, "q": 27, "kind": "hyperelliptic", "genus": 1,
                                "f_coeffs": [0, 1, 0, 1]}))
    code, _, err = run(capsys, "special", str(path))
    assert code == 2 and "q must be p^{2f}" in err
    code, _, err = run(capsys, "special", "builtin:p1", "--f", "0")
    assert code == 2 and "q must be p^{2f}" in err


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--p", "3", "--f", "1",
                       "--genus", "2", "--count", "20", "--seed", "7")
    d = json.loads(out)
    assert code == 0 and d["status"] == "pass"
    assert d["header"]["seed"] == 7 and "generator" in d["header"]
    assert {c["name"] for c in d["checks"]} >= {"spec_fq_half", "padic_value", "half_shift_identity"}


def test_verify_motive_hundred(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "motive", "--count", "100")
    d = json.loads(out)
    assert code == 0 and d["checks"][0]["witness"]["motives"] == 100


def test_verify_injection(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "motive", "--count", "3", "--inject", "half_shift_identity")
    d = json.loads(out)
    assert code == 1 and d["checks"][0]["status"] == "fail" and "lhs" in d["checks"][0]["witness"]


def test_verify_deterministic(capsys):
    outs = [run(capsys, "verify", "--suite", "curve", "--count", "4", "--seed", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def _rows(out):
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_HEADER
    return [dict(zip(rows[0], r)) for r in rows[1:]]


def test_scan_elliptic_f9(capsys):
    code, out, _ = run(capsys, "scan", "--p", "3")
    rows = _rows(out)
    assert code == 0 and rows
    for r in rows:
        assert -6 <= int(r["trace_or_na"]) <= 6
        assert (r["rho"] == "2") == (r["trace_or_na"] == "6")


def test_scan_elliptic_f25(capsys):
    code, out, _ = run(capsys, "scan", "--p", "5")
    rows = _rows(out)
    assert {r["trace_or_na"] for r in rows if r["rho"] == "2"} == {"10"}


def test_scan_empty_and_bad_flags(capsys):
    code, out, _ = run(capsys, "scan", "--start", "4", "--stop", "4")
    assert code == 0 and out.strip() == ",".join(CSV_HEADER)
    code, _, _ = run(capsys, "scan", "--start", "5", "--stop", "2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--family", "nope"])
    assert exc.value.code == 2


def test_scan_random(capsys):
    code, out, _ = run(capsys, "scan", "--family", "random", "--genus", "2", "--count", "3", "--seed", "1")
    rows = _rows(out)
    assert code == 0 and len(rows) == 3 and all(r["trace_or_na"] == "na" for r in rows)


def test_efq(capsys):
    code, out, _ = run(capsys, "efq", "--p", "5")
    d = json.loads(out)
    assert code == 0 and d["q"] == 25 and d["E_order"] == 16 and d["trace"] == 10
    assert d["model"]["kind"] == "hyperelliptic"


def test_motive_command(capsys, tmp_path):
    lit = json.dumps({"q": 9, "parts": {"1": ["1", "-1", "9"]}})
    code, out, _ = run(capsys, "motive", lit)
    d = json.loads(out)
    assert code == 0 and d["half_shift_identity"] and d["rank"] == 2
    path = tmp_path / "m.json"
    path.write_text(lit)
    assert run(capsys, "motive", "@" + str(path))[0] == 0
    assert run(capsys, "motive", "not json")[0] == 2
    assert run(capsys, "motive", json.dumps({"q": 8, "parts": {}}))[0] == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert run(capsys, "efq", "--p", "4")[0] == 2
    assert run(capsys, "zeta", "builtin:nothing")[0] == 2


def test_curve_flag(capsys):
    code, out, _ = run(capsys, "special", "--curve", "builtin:p1")
    assert code == 0 and json.loads(out)["c"] == "-3/4"
    for argv in (["special"], ["zeta", "builtin:p1", "--curve", "builtin:E"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
