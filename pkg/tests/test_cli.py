import json

import pytest

from heckepaths.cli import main
from heckepaths.paths import path_from_json_dict
from heckepaths.root_system import RootGeneratingSystem


@pytest.fixture()
def files(tmp_path):
    a1 = tmp_path / "a1.json"
    a1.write_text(json.dumps({"cartan_matrix": [[2]], "names": ["a1"]}))
    a2 = tmp_path / "a2.json"
    a2.write_text(json.dumps({"cartan_matrix": [[2, -1], [-1, 2]], "names": ["a1", "a2"]}))
    fold = tmp_path / "fold.json"
    fold.write_text(
        json.dumps(
            {
                "lambda": ["1"],
                "start": ["0"],
                "directions": [[1], []],
                "breakpoints": ["0", "1/2", "1"],
            }
        )
    )
    ghost = tmp_path / "ghost.json"
    ghost.write_text(
        json.dumps(
            {
                "lambda": ["1"],
                "start": ["0"],
                "directions": [[1], []],
                "breakpoints": ["0", "3/8", "1"],
            }
        )
    )
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    return {"a1": str(a1), "a2": str(a2), "fold": str(fold), "ghost": str(ghost), "broken": str(broken)}


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestStatuses:
    def test_check_ls_yes(self, files, capsys):
        status, out, _ = run(capsys, "check-ls", "--system", files["a1"], "--path", files["fold"])
        assert status == 0 and "ls: yes" in out

    def test_check_ls_reports_certificates(self, files, capsys):
        status, out, _ = run(
            capsys, "check-ls", "--system", files["a1"], "--path", files["fold"], "--format", "json"
        )
        report = json.loads(out)
        assert status == 0 and report["certificates"]
        assert report["cross_check"]["ddim"] == 1

    def test_check_hecke_ghost_fold(self, files, capsys):
        status, out, _ = run(capsys, "check-hecke", "--system", files["a1"], "--path", files["ghost"])
        assert status == 1
        assert "condition vii fails at t=3/8" in out

    def test_broken_file_is_status_2(self, files, capsys):
        status, _, err = run(capsys, "check-ls", "--system", files["a1"], "--path", files["broken"])
        assert status == 2 and "error" in err

    def test_bad_bounds(self, files, capsys):
        status, _, err = run(capsys, "validate", "--system", files["a1"], "--h", "0")
        assert status == 2


class TestMult:
    def test_a2_zero_weight(self, files, capsys):
        status, out, _ = run(
            capsys, "mult", "--system", files["a2"], "--lambda", "1,1", "--mu", "0,0"
        )
        assert status == 0
        lines = out.strip().splitlines()
        assert lines[0] == "2"
        assert "oracle agreement: yes" in lines[1]


class TestReports:
    def test_undefined_operator_is_domain_no(self, files, capsys):
        status, out, err = run(
            capsys, "apply-op", "--system", files["a1"], "--path", files["fold"],
            "--kind", "etilde", "--index", "1", "--format", "json",
        )
        assert status == 1  # etilde undefined on the LS path (never dips below Q)
        assert "undefined" in err

    def test_apply_op_round_trip(self, files, capsys):
        status, out, _ = run(
            capsys, "apply-op", "--system", files["a1"], "--path", files["fold"],
            "--kind", "e", "--index", "1", "--format", "json",
        )
        assert status == 0
        report = json.loads(out)
        system = RootGeneratingSystem.load(files["a1"])
        path = path_from_json_dict(system, report["result"])
        assert path.endpoint == (1,)

    def test_crystal_json_round_trip(self, files, capsys):
        status, out, _ = run(
            capsys, "crystal", "--system", files["a2"], "--lambda", "1,1", "--format", "json"
        )
        assert status == 0
        report = json.loads(out)
        system = RootGeneratingSystem.load(files["a2"])
        nodes = [path_from_json_dict(system, n["path"]) for n in report["nodes"]]
        assert len(nodes) == 8

    def test_crystal_dot(self, files, capsys):
        status, out, _ = run(
            capsys, "crystal", "--system", files["a2"], "--lambda", "1,1", "--format", "dot"
        )
        assert status == 0 and out.startswith("digraph crystal {")

    def test_determinism(self, files, capsys):
        _, out1, _ = run(
            capsys, "enumerate-hecke", "--system", files["a2"], "--lambda", "1,1",
            "--y0", "0,0", "--y1", "0,0", "--format", "json",
        )
        _, out2, _ = run(
            capsys, "enumerate-hecke", "--system", files["a2"], "--lambda", "1,1",
            "--y0", "0,0", "--y1", "0,0", "--format", "json",
        )
        assert out1 == out2
        report = json.loads(out1)
        assert report["count"] == 3

    def test_gallery_and_pattern(self, files, capsys):
        status, out, _ = run(capsys, "gallery", "--system", files["a1"], "--path", files["fold"])
        assert status == 0 and "codim_tilde=1" in out
        status, out, _ = run(capsys, "pattern", "--system", files["a1"], "--path", files["fold"])
        assert status == 0 and "N=1" in out and "kappa*" in out

    def test_gallery_pattern_json_round_trip(self, files, capsys):
        from heckepaths.galleries import ParameterPattern, gallery_from_json_dict, neg_count

        system = RootGeneratingSystem.load(files["a1"])
        status, out, _ = run(
            capsys, "gallery", "--system", files["a1"], "--path", files["fold"], "--format", "json"
        )
        report = json.loads(out)
        g = gallery_from_json_dict(system, report["galleries"][0])
        assert neg_count(g) == report["galleries"][0]["neg"]
        status, out, _ = run(
            capsys, "pattern", "--system", files["a1"], "--path", files["fold"], "--format", "json"
        )
        pat = ParameterPattern.from_json_dict(json.loads(out))
        assert pat.length == 1 and pat.factors == ("kappa*",)


class TestEnvOverride:
    def test_height_env(self, files, capsys, monkeypatch):
        monkeypatch.setenv("HPL_HEIGHT_BOUND", "33")
        from heckepaths.cli import build_parser

        args = build_parser().parse_args(["validate", "--system", files["a1"]])
        assert args.h == 33
