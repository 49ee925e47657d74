import json
import subprocess
import sys

import numpy as np
import pytest

from hconv import Grid, read_function, write_function
from hconv.cli import main
from hconv.samples import gaussian

REPORT_KEYS = {"name", "measured", "bound", "margin", "pass", "tolerance"}


@pytest.fixture(scope="module")
def files(tmp_path_factory, big_grid):
    d = tmp_path_factory.mktemp("cli")
    write_function(d / "f.csv", gaussian(big_grid))
    write_function(d / "g.csv", 0.1 * gaussian(big_grid))
    write_function(d / "sing.csv", (-1 / np.sqrt(2)) * gaussian(big_grid))
    return d


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestExitCodes:
    def test_transform_happy_path(self, files, capsys, big_grid):
        code, _, _ = run(["transform", "--a", 1, "--b", 1, "--grid-L", 20, "--grid-N", 2049,
                          "--input", files / "f.csv", "--output", files / "Hf.csv"], capsys)
        assert code == 0
        H = read_function(files / "Hf.csv")
        assert np.max(np.abs(H.values - np.sqrt(2) * np.exp(-big_grid.nodes**2 / 4))) <= 1e-6

    def test_inverse_round_trip(self, files, capsys, big_grid):
        run(["transform", "--input", files / "f.csv", "--output", files / "H.csv"], capsys)
        code, _, _ = run(["inverse", "--input", files / "H.csv", "--output", files / "back.csv",
                          "--method", "quadrature"], capsys)
        assert code == 0
        back = read_function(files / "back.csv")
        assert np.max(np.abs(back.values - gaussian(big_grid).values)) <= 5e-5

    def test_stdout_when_no_output(self, files, capsys):
        code, out, _ = run(["power", "--input", files / "f.csv", "--k", 2], capsys)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "x,value" and len(lines) == 2050

    @pytest.mark.parametrize("method", ["direct", "spectral"])
    def test_convolve(self, files, capsys, method, big_grid):
        code, _, _ = run(["convolve", "--input", files / "f.csv", "--input2", files / "f.csv",
                          "--method", method, "--output", files / "ff.csv"], capsys)
        assert code == 0
        ff = read_function(files / "ff.csv")
        assert np.max(np.abs(ff.values - 2 * np.exp(-big_grid.nodes**2 / 2))) <= 2e-5

    def test_convolve_three(self, files, capsys, big_grid):
        code, _, _ = run(["convolve", "--input", files / "f.csv", "--input2", files / "f.csv",
                          "--input3", files / "f.csv", "--output", files / "fff.csv"], capsys)
        assert code == 0
        fff = read_function(files / "fff.csv")
        expected = 4 / np.sqrt(3) * np.exp(-big_grid.nodes**2 / 3)
        assert np.max(np.abs(fff.values - expected)) <= 2e-5

    def test_wrong_method_family(self, files, capsys):
        code, _, err = run(["convolve", "--input", files / "f.csv", "--input2", files / "f.csv",
                            "--method", "quadrature"], capsys)
        assert code == 2 and "not a convolution method" in err

    def test_unknown_flag(self, files):
        with pytest.raises(SystemExit) as exc:
            main(["transform", "--input", str(files / "f.csv"), "--bogus"])
        assert exc.value.code == 2

    def test_missing_file(self, files, capsys):
        code, _, _ = run(["transform", "--input", files / "nope.csv"], capsys)
        assert code == 2

    def test_grid_flags_checked_against_file(self, files, capsys):
        code, _, err = run(["transform", "--grid-N", 1025, "--input", files / "f.csv"], capsys)
        assert code == 2 and "rows" in err

    def test_heat_a0_convolution(self, files, capsys):
        code, _, err = run(["solve-heat", "--a", 0, "--b", 1, "--input", files / "f.csv",
                            "--time", 0.75, "--method", "direct"], capsys)
        assert code == 2
        assert "a = 0" in err and "vanishes" in err

    def test_heat_estimate(self, files, capsys):
        code, _, err = run(["solve-heat", "--input", files / "f.csv", "--time", 0.75,
                            "--p", 1, "--q", 1, "--r", 1, "--output", files / "u.csv"], capsys)
        assert code == 0 and "[PASS]" in err

    def test_heat_partial_exponents(self, files, capsys):
        code, _, _ = run(["solve-heat", "--input", files / "f.csv", "--time", 0.75,
                          "--p", 1], capsys)
        assert code == 2

    def test_wiener_levy_singular(self, files, capsys):
        code, _, err = run(["wiener-levy", "--input", files / "sing.csv"], capsys)
        assert code == 1 and "vanishes" in err

    def test_fredholm(self, files, capsys):
        code, _, err = run(["solve-fredholm", "--input", files / "g.csv", "--input2",
                            files / "f.csv", "--output", files / "sol.csv", "--json"], capsys)
        assert code == 0
        assert {r["name"] for r in json.loads(err)} == {"fredholm_residual", "fredholm_l1_bound"}

    def test_fredholm_singular(self, files, capsys):
        code, _, _ = run(["solve-fredholm", "--input", files / "sing.csv", "--input2",
                          files / "f.csv"], capsys)
        assert code == 1

    def test_radius_json(self, files, capsys):
        code, out, _ = run(["radius", "--input", files / "f.csv", "--kmax", 4, "--json"], capsys)
        data = json.loads(out)
        assert code == 0 and len(data["roots"]) == 4
        assert data["gelfand_value"] == pytest.approx(np.sqrt(2), abs=1e-9)

    def test_config_file_with_flag_precedence(self, tmp_path, capsys):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"a": 0.0, "b": 0.0}))
        code, _, _ = run(["verify", "--suite", "heat", "--config", cfg], capsys)
        assert code == 2
        code, _, _ = run(["verify", "--suite", "heat", "--config", cfg, "--a", 1, "--b", 1],
                         capsys)
        assert code == 0

    def test_failing_verification_exits_1(self, tmp_path, capsys):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"tolerances": {"heat_closed_form": 1e-20}}))
        code, _, _ = run(["verify", "--suite", "heat", "--config", cfg], capsys)
        assert code == 1

    def test_bench_empty(self, capsys):
        code, out, _ = run(["bench", "--sizes", ""], capsys)
        assert code == 0 and out == "N,direct_time,spectral_time,max_discrepancy\n"


class TestVerifyJson:
    def test_young_suite(self, capsys):
        code, out, _ = run(["verify", "--suite", "young", "--seed", 7, "--json"], capsys)
        assert code == 0
        reports = json.loads(out)
        assert isinstance(reports, list) and len(reports) > 200
        assert all(REPORT_KEYS <= set(r) for r in reports)
        assert all(r["pass"] for r in reports)

    @pytest.mark.parametrize("suite", ["heat", "fredholm"])
    def test_deterministic(self, capsys, suite):
        argv = ["verify", "--suite", suite, "--seed", 3, "--json"]
        _, first, _ = run(argv, capsys)
        _, second, _ = run(argv, capsys)
        assert first == second

    def test_deterministic_random_suite(self, capsys):
        argv = ["verify", "--suite", "algebra", "--seed", 3, "--json", "--n-samples", 2,
                "--grid-N", 1025]
        _, first, _ = run(argv, capsys)
        _, second, _ = run(argv, capsys)
        assert first == second

    def test_seed_changes_samples(self, capsys):
        base = ["verify", "--suite", "young", "--json", "--n-samples", 2, "--grid-N", 513]
        _, a, _ = run(base + ["--seed", 1], capsys)
        _, b, _ = run(base + ["--seed", 2], capsys)
        assert a != b

    def test_extra_exponents(self, capsys):
        code, out, _ = run(["verify", "--suite", "young", "--n-samples", 2, "--grid-N", 513,
                            "--p", "4/3", "--q", "4/3", "--r", 2, "--json"], capsys)
        assert code == 0
        assert any("p=1.333" in r["name"] for r in json.loads(out))

    def test_text_lines(self, capsys):
        code, out, _ = run(["verify", "--suite", "fredholm"], capsys)
        assert code == 0
        assert all(line.startswith("[PASS]") for line in out.splitlines())


def test_console_script_usage_error():
    proc = subprocess.run([sys.executable, "-m", "hconv.cli", "frobnicate"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "usage:" in proc.stderr


def test_grid_fixture_matches_default(big_grid):
    assert big_grid == Grid(20.0, 2049)
