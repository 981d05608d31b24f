"""Tests for the command-line interface and SVG rendering."""

import json
import math
import re

import pytest

from trisub import plane_model
from trisub.cli import main
from trisub.render import RenderSpec
from trisub.shape import EdgeLengths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestShapeCommand:
    def test_from_edges(self, capsys):
        code, out, _ = run(capsys, "shape", "--edges", "1,1,1")
        assert code == 0
        doc = json.loads(out)
        assert doc["edges"] == [1, 1, 1]
        assert doc["angles"][0] == pytest.approx(0.9187978721780273, abs=1e-15)
        assert doc["area"] > 0

    def test_from_angles_euclidean(self, capsys):
        code, out, _ = run(capsys, "shape", "--angles",
                           f"{math.pi/3},{math.pi/3},{math.pi/3}")
        assert code == 0
        doc = json.loads(out)
        assert doc["edges"] is None and doc["area"] == 0

    def test_domain_error_exit_code(self, capsys):
        code, out, err = run(capsys, "shape", "--edges", "1,2,5")
        assert code == 1
        assert "error" in err

    def test_usage_error_exit_code(self, capsys):
        assert run(capsys, "shape")[0] == 64
        assert run(capsys, "frobnicate")[0] == 64
        assert run(capsys, "shape", "--edges", "1,1,1", "--bogus")[0] == 64

    def test_usage_error_prints_usage(self, capsys):
        code, _, err = run(capsys, "shape", "--edges", "1,1,1", "--bogus")
        assert code == 64 and err.startswith("usage:")

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0
        assert run(capsys, "limit", "--help")[0] == 0


class TestOrbitCommand:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "orbit", "--edges", "2,2,3",
                           "--word", "ABCM")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("n,letter,A,B,C,a,b,c,S,ln_sin_A")
        assert len(lines) == 6
        assert lines[1].split(",")[1] == "-"
        assert [ln.split(",")[1] for ln in lines[2:]] == ["A", "B", "C", "M"]


class TestLimitCommand:
    def test_447_regression(self, capsys):
        code, out, _ = run(capsys, "limit", "--edges", "4,4,7", "--seq", "|M")
        assert code == 0
        doc = json.loads(out)
        assert doc["residual"] < 1e-12
        assert doc["angles"][0] == pytest.approx(0.022804857078761738, abs=1e-13)
        assert doc["angles"][2] == pytest.approx(3.0959829394322695, abs=1e-13)
        assert sum(doc["angles"]) == pytest.approx(math.pi, abs=1e-12)

    def test_bad_sequence(self, capsys):
        assert run(capsys, "limit", "--edges", "1,1,1", "--seq", "A|")[0] == 1


class TestAddressCommand:
    def test_exact(self, capsys):
        code, out, _ = run(capsys, "address", "--seq", "AM|A", "--exact")
        assert code == 0
        doc = json.loads(out)
        assert doc["bary"] == ["1/2", "1/4", "1/4"]

    def test_approx(self, capsys):
        code, out, _ = run(capsys, "address", "--seq", "|M", "--depth", "20")
        doc = json.loads(out)
        assert doc["depth"] == 20
        assert doc["error_bound"] == pytest.approx(math.sqrt(2) / 2 ** 20)
        assert doc["bary"][0] == pytest.approx(1 / 3, abs=1e-6)


class TestEquivCommand:
    def test_equivalent_with_witness(self, capsys):
        code, out, _ = run(capsys, "equiv", "--s", "AB|C", "--t", "AC|B")
        doc = json.loads(out)
        assert doc["equivalent"] is True
        assert sorted(doc["prop31_form"]["forms"]) == [2, 3]

    def test_not_equivalent(self, capsys):
        code, out, _ = run(capsys, "equiv", "--s", "|A", "--t", "|B")
        doc = json.loads(out)
        assert doc["equivalent"] is False
        assert doc["prop31_form"] is None


class TestVerifyCommand:
    def test_passing_suite_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "noncontraction")
        assert code == 0
        doc = json.loads(out)
        assert doc["pass"] is True and doc["suite"] == "noncontraction"

    def test_seeded_small_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "lemma21",
                           "--seed", "9", "--samples", "15")
        assert code == 0
        assert json.loads(out)["samples"] == 15

    def test_unknown_suite_usage(self, capsys):
        assert run(capsys, "verify", "--suite", "bogus")[0] == 64


class TestSweepCommand:
    def test_grid_rows(self, capsys):
        code, out, _ = run(capsys, "sweep", "--seq", "|M", "--grid", "2")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "A0,B0,C0,Alim,Blim,Clim"
        assert len(lines) == 1 + 8
        for ln in lines[1:]:
            vals = [float(x) for x in ln.split(",")]
            assert sum(vals[:3]) < math.pi
            assert sum(vals[3:]) == pytest.approx(math.pi, abs=1e-12)


class TestRenderCommand:
    def test_depth_zero_single_path(self, capsys, tmp_path):
        out_file = tmp_path / "t.svg"
        code, _, _ = run(capsys, "render", "--edges", "1,1,1",
                         "--depth", "0", "-o", str(out_file))
        assert code == 0
        svg = out_file.read_text()
        assert svg.count("<path") == 1  # parent outline only
        assert svg.startswith("<svg")

    def test_depth_one_klein_matches_midpoints(self, capsys, tmp_path):
        out_file = tmp_path / "t.svg"
        code, _, _ = run(capsys, "render", "--edges", "2,2,3",
                         "--depth", "1", "--model", "klein",
                         "-o", str(out_file))
        assert code == 0
        svg = out_file.read_text()
        paths = re.findall(r'd="([^"]+)"', svg)
        assert len(paths) == 1 + 4  # parent + four cells
        tri = plane_model.place(EdgeLengths(2, 2, 3))
        mids = (plane_model.midpoint(tri.p_b, tri.p_c),
                plane_model.midpoint(tri.p_c, tri.p_a),
                plane_model.midpoint(tri.p_a, tri.p_b))
        expect = {}
        for p in (*tri, *mids):
            x, y = plane_model.to_disk(p, "klein")
            expect[(round(x, 6), round(-y, 6))] = (x, -y)
        seen = set()
        for path in paths[1:]:
            nums = [float(v) for v in re.findall(r"-?\d+\.\d+", path)]
            pts = list(zip(nums[0::2], nums[1::2]))
            for x, y in pts:
                key = min(expect, key=lambda k: (k[0] - x) ** 2 + (k[1] - y) ** 2)
                assert math.hypot(expect[key][0] - x, expect[key][1] - y) < 1e-9
                seen.add(key)
        assert len(seen) == 6  # three vertices and three midpoints all used

    def test_word_mode_highlights_last_cell(self, capsys, tmp_path):
        out_file = tmp_path / "t.svg"
        code, _, _ = run(capsys, "render", "--edges", "1,1,1",
                         "--word", "M", "-o", str(out_file))
        assert code == 0
        svg = out_file.read_text()
        assert 'fill-opacity="0.25"' in svg
        assert svg.count("<path") == 2

    def test_depth_guard(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "--edges", "1,1,1",
                           "--depth", "9", "-o", str(tmp_path / "t.svg"))
        assert code == 1
        assert "guard" in err

    def test_poincare_sampling(self, capsys, tmp_path):
        out_file = tmp_path / "t.svg"
        code, _, _ = run(capsys, "render", "--edges", "1,1,1", "--depth", "1",
                         "--model", "poincare", "-o", str(out_file))
        assert code == 0
        svg = out_file.read_text()
        first = re.search(r'd="M ([^"]+?) Z"', svg).group(1)
        # 3 edges x 32 samples per edge
        assert first.count(" L ") == 3 * 32 - 1


class TestRenderSpecValidation:
    def test_exclusive_modes(self):
        with pytest.raises(ValueError):
            RenderSpec(depth=1, word="M")
        with pytest.raises(ValueError):
            RenderSpec()

    def test_bad_letters(self):
        with pytest.raises(ValueError):
            RenderSpec(word="MX")

    def test_sampling_floor(self):
        with pytest.raises(ValueError):
            RenderSpec(depth=1, samples_per_edge=1)


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("shape", "--edges", "1.1,1.2,1.3"),
        ("orbit", "--edges", "2,2,3", "--word", "MABC"),
        ("limit", "--edges", "4,4,7", "--seq", "|M"),
        ("address", "--seq", "AB|CM", "--depth", "40"),
        ("address", "--seq", "AB|CM", "--exact"),
        ("equiv", "--s", "AM|A", "--t", "MM|A"),
        ("verify", "--suite", "noncontraction"),
        ("verify", "--suite", "lemma21", "--samples", "10"),
        ("sweep", "--seq", "|M", "--grid", "2"),
    ])
    def test_byte_identical_stdout(self, capsys, argv):
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_byte_identical_svg(self, capsys, tmp_path):
        f1, f2 = tmp_path / "a.svg", tmp_path / "b.svg"
        run(capsys, "render", "--edges", "2,2,3", "--depth", "2", "-o", str(f1))
        run(capsys, "render", "--edges", "2,2,3", "--depth", "2", "-o", str(f2))
        assert f1.read_bytes() == f2.read_bytes()
