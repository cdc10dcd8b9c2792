import io
import json

from hypothesis import given, settings
from hypothesis import strategies as st

from tverberg.cli import parse_document, run, verify_report
from tverberg.gallery import cross


def invoke(args, text=None, tmp_path=None):
    if text is not None:
        path = tmp_path / "input.json"
        path.write_text(text)
        args = [args[0], str(path), *args[1:]]
    out, err = io.StringIO(), io.StringIO()
    code = run(args, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def doc(points, dim=None):
    return json.dumps({"dim": dim or len(points[0]), "points": points})


LINE4 = doc([[0], [1], [2], [3]])
LINE6 = doc([[i] for i in range(6)])
CROSS = doc([[1, 0], [-1, 0], [0, 1], [0, -1], [0, 0]])


def report(args, text, tmp_path):
    code, out, err = invoke(args, text, tmp_path)
    assert code == 0, err
    data = json.loads(out)
    assert data["verified"] and verify_report(data)
    return data["result"]


def test_deps_of_three_collinear_points(tmp_path):
    res = report(["deps"], doc([[0], [1], [2]]), tmp_path)
    assert res["basis"] == [[1, -2, 1]]


def test_deps_of_a_simplex_and_the_cross(tmp_path):
    assert report(["deps"], doc([[0, 0], [1, 0], [0, 1]]), tmp_path)["basis"] == []
    assert len(report(["deps"], CROSS, tmp_path)["basis"]) == 2


def test_region_on_four_collinear_points(tmp_path):
    res = report(["region", "--r", "2"], LINE4, tmp_path)
    assert res["intervals"] == [[1, 2]] and res["dim"] == 1


def test_core_on_six_collinear_points(tmp_path):
    res = report(["core", "--r", "2", "--t", "1"], LINE6, tmp_path)
    assert res["intervals"] == [[2, 3]]


def test_empty_region_is_a_completed_verdict(tmp_path):
    res = report(["region", "--r", "3"], LINE4, tmp_path)
    assert res["empty"] and res["dim"] == -1


def test_core_member_and_depth(tmp_path):
    assert report(["core-member", "--r", "2", "--t", "1", "--point", "5/2"], LINE6, tmp_path)["member"]
    assert not report(["core-member", "--r", "2", "--t", "1", "--point", "4"], LINE6, tmp_path)["member"]
    assert report(["depth", "--point", "0,0"], CROSS, tmp_path)["depth"] == 3
    assert report(["depth", "--t", "1"], CROSS, tmp_path)["depth"] >= 2
    assert report(["rado-check", "--t", "1"], CROSS, tmp_path)["bound_met"]


def test_tverberg_and_radon(tmp_path):
    assert report(["tverberg", "--r", "3"], CROSS, tmp_path)["exists"]
    res = report(["tverberg", "--r", "4"], CROSS, tmp_path)
    assert not res["exists"] and res["refuted"] == res["total"]
    assert report(["radon"], LINE4, tmp_path)["radon"]["point"] == [1]


def test_cascade_commands(tmp_path):
    res = report(["cascade-check"], CROSS, tmp_path)
    assert res["dims"] == [2, 0, 0, -1, -1] and res["sum"] == 0
    res = report(["cascade-construct", "--t", "1"], CROSS, tmp_path)
    assert res["branch"] == "many-blocks" and len(res["partition"]["parts"]) == 3


def test_flip_path_command(tmp_path):
    res = report(["flip-path", "--point", "0,0", "--start-a", "1,2", "--start-b", "3,4"], CROSS, tmp_path)
    assert res["reachable"]
    res = report(["flip-path", "--point", "1", "--start-a", "1,3", "--start-b", "2"], doc([[0], [1], [2]]), tmp_path)
    assert not res["reachable"]


def test_gallery_instances_are_reproducible():
    outs = []
    for _ in range(2):
        out = io.StringIO()
        assert run(["gallery", "cross"], stdout=out) == 0
        data = json.loads(out.getvalue())
        data.pop("elapsed_seconds")
        outs.append(data)
    assert outs[0] == outs[1]
    assert outs[0]["result"]["cascade"]["sum"] == 0


def test_gallery_line_matches_closed_forms():
    out = io.StringIO()
    assert run(["gallery", "line-6"], stdout=out) == 0
    assert json.loads(out.getvalue())["result"]["closed_forms_match"]


def test_exit_codes(tmp_path):
    assert invoke(["gallery", "no-such-set"])[0] == 2
    assert invoke(["cascade-construct", "--t", "1"], LINE6, tmp_path)[0] == 3
    assert invoke(["tverberg", "--r", "3", "--budget", "5"], LINE6, tmp_path)[0] == 4
    assert invoke(["region"], LINE4, tmp_path)[0] == 2
    assert invoke(["depth", "--point", "0,0,0,0"], doc([[0, 0, 0, 0], [1, 0, 0, 0]]), tmp_path)[0] == 2
    assert invoke(["plot", "--r", "2"], LINE4, tmp_path)[0] == 2
    assert invoke(["nonsense"])[0] == 2


def test_float_literals_are_located(tmp_path):
    code, _, err = invoke(["deps"], '{"dim": 1,\n  "points": [[0], [0.5]]}', tmp_path)
    assert code == 2
    assert "line 2, column 20" in err


def test_fraction_strings_are_accepted():
    s, _ = parse_document('{"dim": 2, "points": [["1/2", -3], [0, "7/3"]]}')
    assert s[0][0].denominator == 2


def test_tampered_certificates_fail_verification(tmp_path):
    code, out, _ = invoke(["tverberg", "--r", "4"], CROSS, tmp_path)
    data = json.loads(out)
    cert = data["certificates"][0]
    cert["multipliers"][0] = "12345"
    assert not verify_report(data)


def test_text_format(tmp_path):
    code, out, _ = invoke(["region", "--r", "2", "--format", "text"], LINE4, tmp_path)
    assert code == 0 and "all verified" in out


def test_plot_draws_hulls_and_witness(tmp_path):
    seven = doc([[0, 0], [6, 0], [0, 6], [6, 6], [3, 1], [1, 3], [4, 4]])
    target = tmp_path / "seven.svg"
    code, _, _ = invoke(["plot", "--r", "3", "--output", str(target)], seven, tmp_path)
    svg = target.read_text()
    assert code == 0 and svg.startswith("<svg")
    assert svg.count('stroke="#') == 3  # one outline per part
    assert 'class="witness"' in svg


def test_plot_of_the_cross(tmp_path):
    code, out, _ = invoke(["plot", "--r", "2"], CROSS, tmp_path)
    assert code == 0 and out.count('class="cell-point"') == 1
    code, out, _ = invoke(["plot", "--r", "4"], CROSS, tmp_path)
    assert 'class="empty"' in out


json_text = st.recursive(
    st.none() | st.booleans() | st.integers(-5, 5) | st.floats(allow_nan=False, allow_infinity=False) | st.text(max_size=4),
    lambda inner: st.lists(inner, max_size=4) | st.dictionaries(st.sampled_from(["dim", "points", "labels", "x"]), inner, max_size=4),
    max_leaves=12,
).map(json.dumps)


@settings(max_examples=150)
@given(st.one_of(json_text, st.text(max_size=30)))
def test_malformed_input_exits_with_code_2_or_succeeds(tmp_path_factory, text):
    tmp_path = tmp_path_factory.mktemp("fuzz")
    code, out, _ = invoke(["deps"], text, tmp_path)
    assert code in (0, 2)
    if code == 0:
        assert verify_report(json.loads(out))


def test_cross_gallery_matches_the_library():
    out = io.StringIO()
    run(["gallery", "cross"], stdout=out)
    data = json.loads(out.getvalue())
    assert data["input"]["points"] == [[int(x) for x in p] for p in cross(2)]
