"""Command-line behavior: reports, rendering, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from taxicassini.cli import main

FIXTURES = "fixtures/instances.jsonl"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInfo:
    def test_reference_instance(self, capsys):
        code, out, err = run(capsys, "info", "--p", "4,1", "--q", "-4,-1", "--r", "6")
        assert code == 0
        assert "topology: OneCurve" in out
        assert "r_star: 5.0" in out
        assert "g_plus: (-1.0, -4.0)" in out
        assert "curves: 1" in out
        assert out.count("kind=segment") == 4
        assert out.count("kind=arc") == 4

    def test_pinched_vertex_instance(self, capsys):
        code, out, _ = run(capsys, "info", "--p", "5,0", "--q", "-5,0", "--r", "5")
        assert code == 0
        assert "topology: PinchedVertex" in out
        assert "curves: 2" in out

    def test_degenerate_point_pair(self, capsys):
        code, out, _ = run(capsys, "info", "--p", "1,1", "--q", "1,1", "--r", "0")
        assert code == 0
        assert "topology: PointPair" in out
        assert "curves: 0" in out

    def test_malformed_point(self, capsys):
        code, _, err = run(capsys, "info", "--p", "zz", "--q", "0,0", "--r", "1")
        assert code == 2
        assert "error" in err

    def test_missing_flags(self, capsys):
        code, _, err = run(capsys, "info", "--p", "1,1")
        assert code == 2


class TestClassify:
    @pytest.mark.parametrize(
        "x,word",
        [("0,0", "Inside"), ("100,100", "Outside"), ("4,1", "Inside")],
    )
    def test_words(self, capsys, x, word):
        code, out, _ = run(capsys, "classify", "--p", "4,1", "--q", "-4,-1", "--r", "6", "--x", x)
        assert code == 0
        assert out.strip() == word

    def test_on_with_tolerance(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--p", "4,1", "--q", "-4,-1", "--r", "5", "--x", "0,0"
        )
        assert code == 0
        assert out.strip() == "On"

    def test_requires_probe_point(self, capsys):
        code, _, err = run(capsys, "classify", "--p", "4,1", "--q", "-4,-1", "--r", "5")
        assert code == 2


class TestRender:
    def test_writes_svg(self, capsys, tmp_path):
        out_path = tmp_path / "curve.svg"
        code, _, _ = run(
            capsys, "render", "--p", "8,3", "--q", "-8,-3", "--r", "16", "--out", str(out_path)
        )
        assert code == 0
        payload = out_path.read_bytes()
        assert payload.startswith(b"<?xml")
        assert b"</svg>" in payload

    def test_batch_radii_render_nested_family(self, capsys, tmp_path):
        out_path = tmp_path / "family.svg"
        code, _, _ = run(
            capsys,
            "render", "--p", "4,1", "--q", "-4,-1", "--r", "3,5,6", "--out", str(out_path),
        )
        assert code == 0
        text = out_path.read_text()
        # Two loops for r=3, two for r=5, one for r=6.
        assert text.count("<path") == 5

    def test_byte_identical_across_runs(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        args = ["render", "--p", "4,1", "--q", "-4,-1", "--r", "3,5,6"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()

    def test_overlay_oracle_layer(self, capsys, tmp_path):
        out_path = tmp_path / "overlay.svg"
        code, _, _ = run(
            capsys,
            "render", "--p", "4,1", "--q", "-4,-1", "--r", "6",
            "--out", str(out_path), "--overlay-oracle", "--grid", "64",
        )
        assert code == 0
        assert 'id="oracle"' in out_path.read_text()

    def test_io_failure_exit_code(self, capsys):
        code, _, err = run(
            capsys,
            "render", "--p", "4,1", "--q", "-4,-1", "--r", "6",
            "--out", "/nonexistent-dir/out.svg",
        )
        assert code == 3
        assert "error" in err

    def test_unknown_flag(self, capsys):
        code, _, _ = run(capsys, "render", "--p", "1,1", "--frobnicate")
        assert code == 2

    def test_zero_radius_rejected(self, capsys):
        code, _, err = run(
            capsys, "render", "--p", "4,1", "--q", "-4,-1", "--r", "0", "--out", "/tmp/x.svg"
        )
        assert code == 2


class TestInstanceFiles:
    def test_label_lookup(self, capsys):
        code, out, _ = run(
            capsys, "info", "--instances", FIXTURES, "--label", "shared-line-pinch"
        )
        assert code == 0
        assert "topology: PinchedVertex" in out

    def test_single_record_needs_no_label(self, capsys, tmp_path):
        path = tmp_path / "one.jsonl"
        path.write_text(json.dumps({"label": "solo", "p": [4, 1], "q": [-4, -1], "r": 6}) + "\n")
        code, out, _ = run(capsys, "info", "--instances", str(path))
        assert code == 0
        assert "topology: OneCurve" in out

    def test_multi_record_requires_label(self, capsys):
        code, _, err = run(capsys, "info", "--instances", FIXTURES)
        assert code == 2
        assert "--label" in err

    def test_unknown_label(self, capsys):
        code, _, err = run(capsys, "info", "--instances", FIXTURES, "--label", "nope")
        assert code == 2

    def test_duplicate_labels_rejected(self, capsys, tmp_path):
        path = tmp_path / "dup.jsonl"
        record = json.dumps({"label": "twin", "p": [0, 0], "q": [1, 1], "r": 1})
        path.write_text(record + "\n" + record + "\n")
        code, _, err = run(capsys, "info", "--instances", str(path), "--label", "twin")
        assert code == 2
        assert "duplicate" in err

    def test_conflicting_sources_rejected(self, capsys):
        code, _, err = run(
            capsys, "info", "--instances", FIXTURES, "--label", "circle", "--p", "0,0"
        )
        assert code == 2

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text("{not json}\n")
        code, _, err = run(capsys, "info", "--instances", str(path))
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "info", "--instances", "/no/such/file.jsonl")
        assert code == 2

    def test_fixtures_cover_every_topology_class(self):
        labels = set()
        with open(FIXTURES, "r", encoding="utf-8") as handle:
            for line in handle:
                labels.add(json.loads(line)["label"])
        assert {
            "family-sub",
            "family-critical",
            "family-super",
            "strips-wide",
            "shared-line-pinch",
            "circle",
        } <= labels


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--modes", "residual,union-of-intersections",
            "--trials", "5", "--grid", "20",
        )
        assert code == 0
        assert "mode=residual trials=5 failures=0" in out
        assert "mode=union-of-intersections trials=2000 failures=0" in out
        assert out.strip().endswith("overall: pass")

    def test_report_is_deterministic(self, capsys):
        args = ["verify", "--modes", "residual,cross-equalities", "--trials", "4", "--grid", "16"]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_boundary_and_topology_modes(self, capsys):
        code, out, _ = run(capsys, "verify", "--modes", "boundary")
        assert code == 0
        assert "mode=boundary" in out

    def test_unknown_mode(self, capsys):
        code, _, err = run(capsys, "verify", "--modes", "bogus")
        assert code == 2
        assert "bogus" in err

    def test_bad_config_values(self, capsys):
        assert run(capsys, "verify", "--modes", "residual", "--trials", "0")[0] == 2
        assert run(capsys, "verify", "--modes", "residual", "--grid", "8")[0] == 2
        assert run(capsys, "verify", "--modes", "residual", "--band", "-1")[0] == 2


class TestEntrypoints:
    def test_no_subcommand(self, capsys):
        assert main([]) == 2

    def test_module_execution(self):
        proc = subprocess.run(
            [sys.executable, "-m", "taxicassini.cli", "classify",
             "--p", "4,1", "--q", "-4,-1", "--r", "6", "--x", "0,0"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "Inside"
