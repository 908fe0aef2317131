import json

import pytest

from quadsquares.cli import main, parse_n
from quadsquares.errors import ParseError, ValidationError
from quadsquares.io import dump_polygon, parse_polygon
from quadsquares.report import Check, aggregate, build_report
from quadsquares.svg import default_figure, render_svg
from quadsquares.quads import Quadrilateral

FIG1_DOC = '{"kind":"quad","vertices":[[0,0],[1,0],[2,1],[0.5,2]]}'
FIG3_DOC = '{"kind":"parallelogram","vertices":[[0,0],[1,0],[1.5,2],[0.5,2]]}'


@pytest.fixture
def docs(tmp_path):
    paths = {}
    for name, text in [("fig1", FIG1_DOC), ("fig3", FIG3_DOC),
                       ("bad_para", FIG1_DOC.replace('"quad"', '"parallelogram"')),
                       ("tri", '{"kind":"triangle","vertices":[[0,0],[4,0],[1,3]]}'),
                       ("broken", '{"kind": "quad",\n "vertices": [[0,0],}')]:
        p = tmp_path / f"{name}.json"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_fig1():
    doc = parse_polygon(FIG1_DOC)
    assert doc.kind == "quad"
    assert doc.vertices == (0j, 1 + 0j, 2 + 1j, 0.5 + 2j)


def test_parse_fig3():
    doc = parse_polygon(FIG3_DOC)
    assert doc.kind == "parallelogram"
    assert doc.vertices[2] == 1.5 + 2j


def test_parse_round_trip():
    doc = parse_polygon(FIG1_DOC)
    assert parse_polygon(dump_polygon(doc)).vertices == doc.vertices


@pytest.mark.parametrize("text", [
    '{"kind":"quad","vertices":[[0,0],[1,0],[2,1]]}',
    '{"kind":"pentagon","vertices":[]}',
    '{"kind":"quad","vertices":[[0,0],[1,0],[2,"x"],[0,1]]}',
    '{"kind":"quad","vertices":[[0,0],[1,1],[1,0],[0,1]]}',
    '{"kind":"quad","vertices":[[0,0],[1,0],[2,1],[0.5,1e999]]}',
])
def test_validation_errors(text):
    with pytest.raises(ValidationError):
        parse_polygon(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_polygon('{"kind": "quad",\n "vertices": [[0,0],}')
    assert exc.value.line == 2
    assert exc.value.column is not None


def test_parse_n():
    assert list(parse_n("2")) == [2]
    assert list(parse_n("-3..3")) == list(range(-3, 4))


def test_verify_fig1(capsys, docs):
    code, out, _ = run(capsys, ["verify", "--input", docs["fig1"], "--n=0..1"])
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["failed"] == 0
    o = rep["orientations"]
    assert o["P_1234"] > 0 and o["P_3412"] > 0 and o["P_1432"] > 0 and o["P_3214"] > 0
    assert o["P_1324"] < 0 and o["P_2413"] < 0
    assert all(c["anchor"] for c in rep["checks"])


def test_verify_fig3(capsys, docs):
    code, out, _ = run(capsys, ["verify", "--input", docs["fig3"], "--n=-1..2"])
    assert code == 0
    names = {c["check"] for c in json.loads(out)["checks"]}
    assert {"square side equality", "central symmetry", "center line collinearity"} <= names


def test_verify_not_a_parallelogram(capsys, docs):
    code, out, _ = run(capsys, ["verify", "--input", docs["bad_para"]])
    rep = json.loads(out)
    assert code == 1
    assert rep["checks"][0]["detail"]["error"] == "NotAParallelogram"


def test_verify_triangle(capsys, docs):
    code, _, _ = run(capsys, ["verify", "--input", docs["tri"]])
    assert code == 0


def test_input_errors_exit_2(capsys, docs, tmp_path):
    assert run(capsys, ["verify", "--input", docs["broken"]])[0] == 2
    assert run(capsys, ["verify", "--input", str(tmp_path / "missing.json")])[0] == 2
    assert run(capsys, ["verify"])[0] == 2
    assert run(capsys, ["sweep", "--kind", "quad", "--count", "0"])[0] == 2
    assert run(capsys, ["svg", "--input", docs["fig1"], "--out", str(tmp_path / "no" / "x.svg")])[0] == 2


def test_residuals_formatted(capsys, docs):
    _, out, _ = run(capsys, ["verify", "--input", docs["fig1"], "--n", "0"])
    r = json.loads(out)["checks"][0]["residual"]
    assert float(f"{r:.2e}") == r
    _, out, _ = run(capsys, ["verify", "--input", docs["fig1"], "--n", "0", "--verbose"])
    assert json.loads(out)["summary"]["failed"] == 0


def test_variants(capsys):
    code, out, _ = run(capsys, ["variants", "-M", "2"])
    data = json.loads(out)
    assert code == 0 and data["count"] == 64
    assert sorted(c["count"] for c in data["classes"]) == sorted([1, 1, 12, 6, 12, 12, 6, 12, 1, 1])


def test_sweep_small(capsys):
    code, out, _ = run(capsys, ["sweep", "--kind", "hexagon", "--count", "5", "--seed", "7"])
    rep = json.loads(out)
    assert code == 0 and rep["seed"] == 7 and rep["count"] == 5


def test_svg_deterministic(capsys, docs, tmp_path):
    outs = []
    for k in range(2):
        p = tmp_path / f"f{k}.svg"
        assert main(["svg", "--input", docs["fig1"], "--n", "0", "--out", str(p)]) == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
    text = outs[0].decode()
    assert text.count("<polygon") == 7
    assert "O12,0" in text and "O13,0" in text and "O14,0" in text


def test_figure_layouts():
    assert len(default_figure("quad", [0]).families) == 6
    assert len(default_figure("parallelogram", [0]).families) == 4
    assert [n for _, n in default_figure("quad", range(6)).families] == list(range(6))
    svg = render_svg(Quadrilateral([0, 1, 1.5 + 2j, 0.5 + 2j]), default_figure("parallelogram", [0]))
    assert "O12,0" in svg and "O14,0" in svg and "-0.000" not in svg


def test_report_contract():
    checks = [Check("a", 1e-12, 1e-9, {}, "x"), Check("a", 2e-12, 1e-9, {}, "x"),
              Check("b", 1.0, 0.5, {}, "y")]
    agg = {c.name: c for c in aggregate(checks)}
    assert agg["a"].residual == 2e-12 and agg["a"].passed
    assert not agg["b"].passed
    rep = build_report(list(agg.values()), seed=3)
    assert rep["summary"] == {"total": 2, "passed": 1, "failed": 1}
    assert rep["seed"] == 3
    assert not Check("c", float("nan"), 1.0).passed


def test_mean_aggregate():
    checks = [Check("rate", v, 0.05, aggregate="mean") for v in (0.0, 0.0, 1.0, 0.0)]
    assert aggregate(checks)[0].residual == 0.25
