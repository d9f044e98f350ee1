import json
import shutil
import subprocess

import pytest

from chromadepth import io
from chromadepth.cli import main
from chromadepth.colorful import extremal_config, random_centered_rgp
from chromadepth.flips import ridges, translate_flip, verify_flip


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if code != 2 and out.lstrip().startswith("{") else out)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


def test_csd_examples(tmp_path, capsys):
    f = write(tmp_path, "e.json", io.config_to_json(extremal_config((2, 3, 4))))
    code, rep = run(capsys, "csd", f)
    assert code == 0
    r = rep["results"]
    assert (r["csd"], r["bound"], r["centered"], r["rgp"]) == (7, 7, True, True)
    assert rep["violations"] == [] and rep["command"] == "csd"
    d1 = write(tmp_path, "d1.json", {"dimension": 1, "classes": [[["-1"], ["1"]], [["-2"], ["3"]]]})
    code, rep = run(capsys, "csd", "--list", d1)
    assert code == 0 and rep["results"]["csd"] == 2 and rep["results"]["bound"] == 2
    assert sorted(rep["results"]["hitting"]) == [[[0, 0], [1, 1]], [[0, 1], [1, 0]]]


def test_csd_input_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", "{not json")
    assert main(["csd", bad]) == 2
    assert main(["csd", str(tmp_path / "missing.json")]) == 2
    wrong = write(tmp_path, "wrong.json", {"dimension": 2, "classes": [[[1]]]})
    assert main(["csd", wrong]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["csd"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_assert_bound_violation(tmp_path, capsys):
    # zero in both classes breaks general position: six hitting edges against the bound 5
    raw = {"dimension": 1, "classes": [[["0"], ["1"], ["-1"]], [["0"], ["2"], ["-2"]]]}
    f = write(tmp_path, "deg.json", raw)
    code, rep = run(capsys, "csd", f)
    assert code == 0 and rep["results"]["csd"] == 6 and not rep["results"]["rgp"]
    code, rep = run(capsys, "--reproducer-dir", str(tmp_path), "csd", "--assert-bound", f)
    assert code == 1 and rep["violations"]
    assert json.loads(open(rep["results"]["reproducer_file"]).read())["violations"]


def test_verify_passes(capsys):
    code, rep = run(capsys, "verify", "--shape", "2,2,2", "--seeds", "10")
    assert code == 0 and rep["results"]["failed"] == 0 and rep["results"]["seeds"] == 10
    code, rep = run(capsys, "verify", "--shape", "3,3", "--seeds", "10", "--checks", "bound,lower")
    assert code == 0


def test_verify_corrupted_generator_reports_seed(tmp_path, capsys):
    code, rep = run(capsys, "verify", "--shape", "2,2", "--seeds", "3", "--seed", "5",
                    "--corrupt-generator", "--reproducer-dir", str(tmp_path))
    assert code == 1
    assert rep["results"]["reproducer"]["seed"] == 5
    saved = json.loads(open(rep["results"]["reproducer_file"]).read())
    assert saved["results"]["reproducer"]["seed"] == 5


def test_verify_bad_checks(capsys):
    assert main(["verify", "--shape", "2,2", "--checks", "nonsense"]) == 2
    assert main(["verify", "--shape", "2"]) == 2
    capsys.readouterr()


def test_tmf_examples(tmp_path, capsys):
    code, rep = run(capsys, "tmf", "--extremal", "2,2")
    assert code == 0
    r = rep["results"]
    assert r["count"] == 5 and r["bound"] == 5 and r["equality"]
    code, rep = run(capsys, "tmf", "--extremal", "2,2,2", "--fans")
    assert code == 0 and rep["results"]["count"] == 9 == rep["results"]["fan_cones"]
    code, rep = run(capsys, "tmf", "--random", "2,2", "--seed", "4")
    assert code == 0 and rep["results"]["count"] <= 5
    f = write(tmp_path, "s.json", {"dimension": 1, "simplices": [[["0"], ["1"]], [["0"], ["2"]]]})
    code, rep = run(capsys, "tmf", f)
    assert code == 0 and rep["results"]["count"] == 2
    flat = write(tmp_path, "flat.json", {"dimension": 2, "simplices": [[["0", "0"], ["1", "0"], ["0", "1"]],
                                                                      [["0", "0"], ["1", "1"], ["2", "0"]]]})
    assert main(["tmf", flat]) == 2
    capsys.readouterr()


def test_gale_commands(tmp_path, capsys):
    code, rep = run(capsys, "gale", "--inverse", "--extremal", "2,2,2")
    assert code == 0 and rep["results"]["round_trip"] and len(rep["results"]["simplices"]) == 3
    sq = write(tmp_path, "sq.json", {"dimension": 2, "points": [["1", "1"], ["1", "-1"], ["-1", "1"], ["-1", "-1"]]})
    code, rep = run(capsys, "gale", sq, "--face", "0,1")
    assert code == 0 and rep["results"]["face"] is True and rep["results"]["dimension"] == 1
    code, rep = run(capsys, "gale", sq, "--face", "0,3")
    assert rep["results"]["face"] is False
    segs = write(tmp_path, "segs.json", {"dimension": 1, "points": [["0"], ["1"], ["0"], ["2"]],
                                         "classes": [[0, 1], [2, 3]]})
    code, rep = run(capsys, "gale", "--colorful", segs)
    assert code == 0 and rep["results"]["dimension"] == 1


def test_flip_commands(tmp_path, capsys):
    c = random_centered_rgp((3, 3), 1)
    path = None
    for r in ridges((3, 3)):
        try:
            p = translate_flip(c, r)
        except ValueError:
            continue
        if verify_flip(p).valid:
            path = p
            break
    cf = write(tmp_path, "c.json", io.config_to_json(c))
    ridge = ",".join(f"{k}:{i}" for k, i in path.ridge)
    code, rep = run(capsys, "flip", "--translate", cf, "--ridge", ridge, "--strict")
    assert code == 0 and rep["results"]["certificate"]["valid"]
    assert [e["ridge"] for e in rep["results"]["events"]] == [[list(m) for m in path.ridge]]
    pf = write(tmp_path, "p.json", rep["results"]["path"])
    code, rep = run(capsys, "flip", "--verify", pf)
    assert code == 0 and rep["results"]["certificate"]["valid"]
    ef = write(tmp_path, "e.json", io.config_to_json(path.end))
    code, rep = run(capsys, "flip", "--events", cf, ef, "--strict")
    assert code == 0 and len(rep["results"]["events"]) == 1
    a = write(tmp_path, "a.json", io.config_to_json(random_centered_rgp((3, 3, 3), 1)))
    b = write(tmp_path, "b.json", io.config_to_json(random_centered_rgp((3, 3, 3), 2)))
    code, first = run(capsys, "flip", "--walk", a, b, "--seed", "42")
    assert code == 0 and first["results"]["success"] and first["seed"] == 42
    code, second = run(capsys, "flip", "--walk", a, b, "--seed", "42")
    assert first["results"] == second["results"]
    assert main(["flip", "--translate", cf]) == 2
    assert main(["flip", "--translate", cf, "--ridge", "0:0,1:0"]) == 2
    with pytest.raises(SystemExit):
        main(["flip", "--translate", cf, "--walk", a, b])
    capsys.readouterr()


def test_ptransform_commands(tmp_path, capsys):
    tris = {"dimension": 3, "simplices": [[["0", "0", "0"], ["1", "0", "0"], ["0", "1", "0"]],
                                          [["0", "0", "1"], ["2", "1", "3"], ["1", "3", "-1"]]]}
    code, rep = run(capsys, "ptransform", "--coincidence", write(tmp_path, "t.json", tris))
    assert code == 0 and rep["results"]["coincidence"]
    code, rep = run(capsys, "ptransform", "--random", "1,1,1", "--seed", "3")
    assert code == 0 and rep["results"]["coincidence"]
    sq = write(tmp_path, "sq.json", {"dimension": 2, "points": [["1", "1"], ["1", "-1"], ["-1", "1"], ["-1", "-1"]]})
    code, rep = run(capsys, "ptransform", "--delta", sq)
    assert code == 0 and rep["results"]["matches_gale"]
    hp = write(tmp_path, "h.json", {"dimension": 2, "forms": [["1", "0"], ["-1", "0"], ["0", "1"], ["0", "-1"]]})
    code, rep = run(capsys, "ptransform", "--hpoly", hp, "--projection", "[[1, 0]]")
    vectors = rep["results"]["vectors"]
    assert code == 0 and vectors[:2] == [["0"], ["0"]] and int(vectors[2][0]) == -int(vectors[3][0]) != 0
    assert main(["ptransform", "--hpoly", hp, "--projection", "[[1, 0"]) == 2
    capsys.readouterr()


def test_text_format_and_flag_positions(tmp_path, capsys):
    f = write(tmp_path, "e.json", io.config_to_json(extremal_config((2, 2))))
    assert main(["--format", "text", "csd", f]) == 0
    before = capsys.readouterr().out
    assert main(["csd", f, "--format", "text"]) == 0
    after = capsys.readouterr().out
    assert "csd: 2" in before.splitlines() and not before.lstrip().startswith("{")
    # everything but the timing line agrees
    assert [x for x in before.splitlines() if not x.startswith("elapsed")] == \
        [x for x in after.splitlines() if not x.startswith("elapsed")]


@pytest.mark.skipif(shutil.which("chromadepth") is None, reason="console script not installed")
def test_console_script_exit_codes(tmp_path):
    bad = write(tmp_path, "bad.json", "[")
    assert subprocess.run(["chromadepth", "csd", bad], capture_output=True).returncode == 2
    good = write(tmp_path, "e.json", io.config_to_json(extremal_config((2, 2, 2))))
    res = subprocess.run(["chromadepth", "csd", good], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["results"]["csd"] == 2
