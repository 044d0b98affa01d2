import io
import json

import pytest

from onebridge import catalog
from onebridge.cli import SCHEMA, Report, main, run_batch


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, [json.loads(line) for line in text.splitlines() if line.strip()]


def write_ndjson(tmp_path, lines):
    path = tmp_path / "knots.ndjson"
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return str(path)


def knot_line(entry, n_values=None):
    data = entry.knot.to_json()
    if n_values is not None:
        data["n_values"] = n_values
    return json.dumps(data)


class TestCommands:
    def test_gamma(self):
        code, text = run("gamma", "--catalog", "km3", "-n", "2")
        assert code == 0
        assert "gamma: 2 - t" in text

    def test_alexander(self):
        code, text = run("alexander", "--catalog", "km4")
        assert code == 0
        assert "delta: 1 + t^2" in text

    def test_cover(self):
        code, text = run("cover", "--catalog", "km3", "-n", "3")
        assert code == 0
        assert "Z/2 ⊕ Z/2, order 4" in text

    def test_cover_infinite(self):
        code, text = run("cover", "--catalog", "trefoil", "-n", "6")
        assert code == 0
        assert "Z^2, infinite, torsion order 1" in text

    def test_explicit_knot(self):
        code, reports = run_json("lift", "--p", "1", "--q", "0", "--relator", "agagAg", "-n", "2")
        assert code == 0
        assert reports[0]["result"]["word"] == "x1^2 x2^-1"
        assert reports[0]["result"]["abelianization"] == "Z/3"

    def test_homology_and_monodromy(self):
        _, [rep] = run_json("homology", "--catalog", "km4")
        assert rep["result"]["exterior"]["group"] == "Z ⊕ Z/2"
        _, [rep] = run_json("monodromy", "--catalog", "km4", "-n", "3")
        assert rep["result"]["monodromy"] == {"n": 3, "omega_alpha": 1, "omega_gamma": 1}

    def test_verify_catalog(self):
        code, [rep] = run_json("verify", "--catalog", "km5", "--n-max", "12")
        assert code == 0 and rep["ok"]
        assert rep["result"]["golden_checked"]
        assert [w["n"] for w in rep["witnesses"]] == [n for n in range(2, 13) if n % 3]

    def test_verify_single_n(self):
        code, [rep] = run_json("verify", "--catalog", "trivial5_2", "-n", "3")
        assert code == 0 and len(rep["witnesses"]) == 1


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        ["gamma", "--catalog", "km4", "-n", "4"],
        ["gamma", "--catalog", "km3"],
        ["gamma", "--catalog", "nosuchknot", "-n", "2"],
        ["alexander", "--p", "2", "--q", "1", "--relator", "agagag"],
        ["alexander", "--p", "0", "--q", "0", "--relator", "g"],
        ["alexander", "--p", "1", "--q", "0", "--relator", "ag?"],
        ["alexander", "--p", "1", "--q", "0", "--relator", "x"],
        ["alexander", "--catalog", "km3", "--p", "1"],
        ["monodromy", "--catalog", "km3", "-n", "1"],
    ])
    def test_invalid_input_is_2(self, argv, capsys):
        assert main(argv, io.StringIO()) == 2
        assert capsys.readouterr().err.startswith("onebridge:")

    def test_coprimality_message(self, capsys):
        main(["cover", "--catalog", "km4", "-n", "4"], io.StringIO())
        assert "gcd(n,p)" in capsys.readouterr().err

    def test_failed_verification_is_1(self, capsys):
        # a valid presentation whose Fox quotient is not symmetric
        code = main(["verify", "--p", "1", "--q", "0", "--relator", "aagAG", "-n", "2"], io.StringIO())
        assert code == 1
        assert "verification failed" in capsys.readouterr().err

    def test_catalog_listing(self):
        code, text = run("catalog")
        assert code == 0
        assert "trefoil" in text and "km10" in text and "trivial7_6" in text
        code, entries = run_json("catalog")
        assert len(entries) == len(catalog.builtin())


class TestReportFormats:
    ARGVS = [
        ["homology", "--catalog", "km6"],
        ["gamma", "--catalog", "km7", "-n", "4"],
        ["alexander", "--catalog", "km5"],
        ["cover", "--catalog", "trefoil", "-n", "6"],
        ["lift", "--catalog", "km4", "-n", "5"],
        ["verify", "--catalog", "km4", "--n-max", "7"],
    ]

    @pytest.mark.parametrize("argv", ARGVS, ids=lambda a: a[0])
    def test_json_round_trip(self, argv):
        _, [data] = run_json(*argv)
        assert data["schema"] == SCHEMA
        rep = Report.from_json(data)
        assert rep.to_json() == data
        assert Report.from_json(json.loads(json.dumps(rep.to_json()))) == rep

    @pytest.mark.parametrize("argv", ARGVS, ids=lambda a: a[0])
    def test_text_and_json_agree(self, argv):
        _, text = run(*argv)
        _, [data] = run_json(*argv)
        assert text.strip() == Report.from_json(data).to_text()

    def test_polynomials_serialize_with_coefficient_maps(self):
        _, [data] = run_json("alexander", "--catalog", "km5")
        delta = data["result"]["delta"]
        assert delta["text"] == "1 - t + t^2 - t^3 + t^4"
        assert delta["coefficients"] == {"0": "1", "1": "-1", "2": "1", "3": "-1", "4": "1"}

    def test_bad_schema_rejected(self):
        with pytest.raises(ValueError):
            Report.from_json({"schema": "other/9"})


class TestBatch:
    def test_trivial_7_3(self, tmp_path):
        path = write_ndjson(tmp_path, [knot_line(catalog.trivial(7, 3), [2, 3, 4, 5])])
        reports, summary = run_batch(path)
        [rep] = reports
        assert rep.ok and len(rep.witnesses) == 4
        assert [c["gamma"]["text"] for c in rep.result["coverings"]] == ["7"] * 4
        assert summary["passed"] == 1

    def test_km5(self, tmp_path):
        path = write_ndjson(tmp_path, [knot_line(catalog.km(5), [2, 4, 7])])
        code, out = run_json("batch", path)
        assert code == 0
        rep, summary = out
        assert rep["result"]["delta"]["text"] == "1 - t + t^2 - t^3 + t^4"
        assert len(rep["witnesses"]) == 3
        assert summary["summary"] and summary["total"] == 1

    def test_empty_file(self, tmp_path):
        path = write_ndjson(tmp_path, [])
        code, out = run_json("batch", path)
        assert code == 0
        assert out == [{"schema": SCHEMA, "summary": True, "total": 0, "passed": 0,
                        "failed": 0, "invalid": 0}]

    def test_bad_lines_inline(self, tmp_path):
        lines = [knot_line(catalog.km(3), [2]), "{not json", json.dumps({"p": 2, "q": 1, "relator": "a"}),
                 knot_line(catalog.km(4), [3])]
        path = write_ndjson(tmp_path, lines)
        reports, summary = run_batch(path)
        assert [r.ok for r in reports] == [True, False, False, True]
        assert reports[1].error and reports[2].error
        assert summary == {"schema": SCHEMA, "summary": True, "total": 4, "passed": 2,
                           "failed": 0, "invalid": 2}
        assert main(["batch", path], io.StringIO()) == 2

    def test_failed_line_exit_1(self, tmp_path):
        path = write_ndjson(tmp_path, [json.dumps({"p": 1, "q": 0, "relator": "aagAG", "n_values": [2]})])
        code, out = run_json("batch", path)
        assert code == 1
        assert out[-1]["failed"] == 1

    def test_order_preserved_in_parallel(self, tmp_path):
        entries = catalog.builtin()
        path = write_ndjson(tmp_path, [knot_line(e) for e in entries])
        serial, _ = run_batch(path, n_max=8, jobs=1)
        parallel, summary = run_batch(path, n_max=8, jobs=3)
        assert [r.knot for r in parallel] == [e.knot.to_json() for e in entries]
        assert [r.result for r in parallel] == [r.result for r in serial]
        assert summary["passed"] == len(entries)

    def test_missing_file(self, tmp_path):
        assert main(["batch", str(tmp_path / "nope.ndjson")], io.StringIO()) == 2
