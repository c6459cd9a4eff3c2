import io
import json

import pytest

from sepdp.cli import RunReport, main, parse_bipartite, parse_edge_list


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["p4"] = tmp_path / "p4.edges"
    paths["p4"].write_text("# path\na b\nb c\nc d\n")
    paths["c8"] = tmp_path / "c8.edges"
    paths["c8"].write_text("".join(f"v{i} v{(i + 1) % 8}\n" for i in range(8)))
    paths["star4"] = tmp_path / "star4.edges"
    paths["star4"].write_text("c x1\nc x2\nc x3\nc x4\n")
    paths["bip"] = tmp_path / "k11.bip"
    paths["bip"].write_text("red: r\nblue: b\nr b\n")
    paths["bad"] = tmp_path / "bad.edges"
    paths["bad"].write_text("a b c\n")
    return {k: str(v) for k, v in paths.items()}


def test_parse_edge_list_labels_and_isolated():
    g, names = parse_edge_list("x y  # c\n\nz\n")
    assert names == ["x", "y", "z"] and g.num_edges() == 1


def test_parse_bipartite():
    b, names = parse_bipartite("red: a b\nblue: x\na x\n")
    assert names[:3] == ["a", "b", "x"] and b.reds == 0b011


def test_parse_bipartite_missing_role():
    with pytest.raises(ValueError):
        parse_bipartite("red: a\na x\n")


def test_mis_p4(files):
    code, out, _ = run(["solve", "mis", files["p4"]])
    assert code == 0 and out.startswith("solve mis: 2")


def test_theorem1_c8(files):
    code, out, _ = run(["verify", "theorem1", "--k", "3", files["c8"]])
    assert code == 0 and out.splitlines()[0] == "4 <= 20, all mapped"


def test_cvc_star(files):
    code, out, _ = run(["solve", "cvc", "--class", "chordal", "--json", files["star4"]])
    rep = RunReport.from_json(out)
    assert code == 0 and rep.result_size == 1 and rep.witness == ["c"]


def test_report_roundtrip_and_determinism(files):
    _, a, _ = run(["solve", "mif", "--json", files["c8"]])
    _, b, _ = run(["solve", "mif", "--json", files["c8"]])
    ra, rb = RunReport.from_json(a), RunReport.from_json(b)
    assert RunReport.from_json(ra.to_json()) == ra
    ra.timing = rb.timing = 0.0
    assert ra.to_json() == rb.to_json()


def test_gen_is_deterministic(tmp_path):
    _, a, _ = run(["gen", "chordal", "--n", "12", "--seed", "4"])
    _, b, _ = run(["gen", "chordal", "--n", "12", "--seed", "4"])
    assert a == b
    _, arcs, _ = run(["gen", "arcs", "--n", "6", "--seed", "2", "--coverage", "0.6"])
    model = json.loads(arcs)
    assert model["n"] == 6 and len(model["arcs"]) == 6
    f = tmp_path / "g.edges"
    f.write_text(a)
    assert run(["solve", "cvc", "--class", "chordal", str(f)])[0] == 0


def test_arc_pipeline(tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"n": 3, "arcs": [[0, 3], [2, 5], [4, 1]]}))
    code, out, _ = run(["solve", "cvc", "--class", "circular-arc", "--json", str(f)])
    assert code == 0 and RunReport.from_json(out).result_size == 2


def test_exit_codes(files):
    assert run(["seps", files["bad"]])[0] == 2
    assert run(["seps", "/nonexistent"])[0] == 2
    assert run(["solve", "cvc", "--class", "chordal", files["c8"]])[0] == 2
    assert run(["solve", "dist-is", "--d", "3", files["p4"]])[0] == 2
    assert run(["seps", "--max-seps", "3", files["c8"]])[0] == 3
    assert run(["pmcs", "--max-pmcs", "3", files["c8"]])[0] == 3
    assert run(["bogus"])[0] == 2


def test_verify_failure_exit(files, monkeypatch):
    from sepdp import cli
    from sepdp.errors import VerificationError

    def boom(*a, **k):
        raise VerificationError("forced")

    monkeypatch.setattr(cli, "verify_power_theorem", boom)
    assert run(["verify", "theorem1", "--k", "3", files["c8"]])[0] == 4


def test_appendix_and_oracle(files):
    code, out, _ = run(["verify", "appendix-lemma", "--json", files["bip"]])
    assert code == 0 and RunReport.from_json(out).verification["bound_holds"]
    code, out, _ = run(["oracle", "mis", "--json", files["p4"]])
    assert RunReport.from_json(out).result_size == 2
    code, out, _ = run(["seps", "--list", files["p4"]])
    assert "{b}" in out and "{c}" in out
