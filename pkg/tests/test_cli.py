import json
import subprocess
import sys

import pytest

from brsc.cli import main, run
from brsc.errors import ParseError
from brsc.instances import chhs
from brsc.textio import format_faces, format_matrix, parse, read_complex
from brsc.flats import canonical_matrix


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, extra in (("noel", []), ("occur", ["--t", "3"]), ("chhs", []), ("yesel", [])):
        path = tmp_path / f"{name}.txt"
        code, _ = run(["example", name, *extra, "--emit", str(path)])
        assert code == 0
        out[name] = str(path)
    return out


def test_shellable_noel(files):
    assert run(["shellable", files["noel"]]) == (0, {"schema": 1, "shellable": True})


def test_pi1_occur3(files):
    code, rep = run(["pi1", files["occur"]])
    assert code == 0 and rep["rank"] == 1 and rep["schema"] == 1


def test_malformed_matrix_exit_2(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("matrix\n0110\n011\n")
    assert run(["faces", str(p)])[0] == 2
    p.write_text("nonsense\n")
    assert run(["faces", str(p)])[0] == 2
    assert run(["faces", str(tmp_path / "missing.txt")])[0] == 2


def test_domain_error_exit_1(tmp_path):
    p = tmp_path / "nbr.txt"
    p.write_text("faces\n1 2 3\n1 4\n")
    code, rep = run(["pi1", str(p)])
    assert code == 1 and "transversal" in rep["error"]


def test_analyze_matches_individual_commands(files):
    for name in ("chhs", "noel", "occur"):
        f = files[name]
        _, a = run(["analyze", f])
        assert a["shellable"] == run(["shellable", f])[1]["shellable"]
        assert a["pi1_rank"] == run(["pi1", f])[1]["rank"]
        assert a["betti"] == run(["homology", f])[1]["betti"]
        assert a["flat_count"] == len(run(["flats", f])[1]["flats"])
        assert a["sequentially_cohen_macaulay"] == a["shellable"]
        if a["shellable"]:
            assert a["betti_from_shelling"] == a["betti"]


def test_other_commands(files, tmp_path):
    assert run(["graph-of-flats", files["chhs"]])[1]["edges"] == [["1", "2"], ["4", "5"]]
    assert run(["homology", files["chhs"]])[1]["betti"] == [0, 2, 0]
    assert run(["betti", files["noel"]])[1]["source"] == "shelling"
    sh = run(["shelling", files["noel"]])[1]
    assert len(sh["order"]) == 14
    oc = run(["order-complex", files["noel"]])[1]
    assert oc["shellable"] is False and len(oc["facets"]) == 8
    assert run(["faces", files["chhs"]])[1]["dim"] == 2
    labels = tmp_path / "yesel.lab"
    from brsc.flats import all_flats
    from brsc.instances import yesel, yesel_labeling
    from brsc.ordercx import format_labeling

    lat = all_flats(yesel())
    labels.write_text(format_labeling(lat, yesel_labeling(lat)))
    assert run(["el-check", files["yesel"], "--labels", str(labels)])[1]["el_labeling"] is True


def test_out_flag_and_determinism(files, tmp_path):
    out = tmp_path / "r.json"
    assert main(["pi1", files["chhs"], "--out", str(out)]) == 0
    assert json.loads(out.read_text()) == {"schema": 1, "rank": 2, "s": 1, "trivial_sizes": [1, 2]}
    assert run(["shellable", files["occur"]]) == run(["shellable", files["occur"]])


def test_bench_small():
    code, rep = run(["bench", "--max-n", "60", "--reps", "1"])
    assert code == 0 and [p[0] for p in rep["points"]] == [40, 60] and "slope" in rep


def test_console_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "brsc.cli", "shellable", files["noel"]], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["shellable"] is True


def test_text_formats_round_trip():
    c = chhs()
    kind, back = parse(format_faces(c))
    assert kind == "faces" and back == c
    m = canonical_matrix(c)
    kind, mb = parse(format_matrix(m))
    assert kind == "matrix" and mb.bits == m.bits
    c2, m2 = read_complex(format_matrix(m), is_text=True)
    assert c2 == c and m2 is not None
    kind, dflt = parse("matrix\n011\n101\n110\n")
    assert dflt.cols == ("v1", "v2", "v3")
    with pytest.raises(ParseError):
        parse("faces\nvertices a b\na c\n")


def test_vertices_line_after_rows():
    kind, m = parse("matrix\n011\n101\n110\nvertices x y z\n")
    assert m.cols == ("x", "y", "z")
