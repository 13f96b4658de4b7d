"""Command-line behaviour: outputs, determinism, exit codes."""

import json
import math

import numpy as np
import pytest

from diskphase.cli import EXIT_IO, EXIT_NUMERIC, EXIT_OK, EXIT_SPEC, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStateCommand:
    def test_number_state_json(self, capsys):
        code, out, _ = run(
            capsys, "state", "--json", '{"kind":"number","m":2}', "--n", "6"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["coeffs"][2] == [1.0, 0.0]
        assert payload["number_distribution"][2] == 1.0
        assert payload["norm_defect"] == 0.0

    def test_coherent_geometric(self, capsys):
        code, out, _ = run(
            capsys, "state", "--json", '{"kind":"su11_cs","z":[0.5,0]}', "--n", "8"
        )
        payload = json.loads(out)
        coeffs = [complex(re, im) for re, im in payload["coeffs"]]
        assert coeffs[1] / coeffs[0] == pytest.approx(0.5)

    def test_blaschke_values(self, capsys):
        code, out, _ = run(
            capsys, "state", "--json", '{"kind":"blaschke","z":[0.5,0]}', "--n", "4"
        )
        payload = json.loads(out)
        assert payload["coeffs"][0] == [-0.5, 0.0]
        assert payload["coeffs"][1][0] == pytest.approx(0.75)

    def test_superpose_spec(self, capsys):
        spec = json.dumps(
            {
                "kind": "superpose",
                "components": [{"kind": "number", "m": 0}, {"kind": "number", "m": 3}],
                "amplitudes": [[1, 0], [1, 0]],
            }
        )
        code, out, _ = run(capsys, "state", "--json", spec, "--n", "8")
        payload = json.loads(out)
        assert payload["coeffs"][0][0] == pytest.approx(1 / math.sqrt(2))
        assert payload["coeffs"][3][0] == pytest.approx(1 / math.sqrt(2))

    def test_weyl_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "state",
            "--json",
            '{"kind":"number","m":1}',
            "--n",
            "4",
            "--weyl",
            "2:0.0:0.0",
        )
        payload = json.loads(out)
        assert payload["coeffs"][3] == [1.0, 0.0]

    def test_csv_format(self, capsys):
        code, out, _ = run(
            capsys,
            "state",
            "--json",
            '{"kind":"number","m":1}',
            "--n",
            "3",
            "--format",
            "csv",
        )
        lines = out.strip().splitlines()
        assert lines[0] == "# norm_defect=0.0"
        assert lines[1] == "n,re_coeff,im_coeff,probability"
        assert lines[3].startswith("1,1.0,0.0,1.0")


class TestFactorCommand:
    def test_blaschke_report(self, capsys):
        code, out, _ = run(
            capsys, "factor", "--json", '{"kind":"blaschke","z":[0.5,0]}', "--n", "64"
        )
        assert code == EXIT_OK
        rep = json.loads(out)
        assert len(rep["zeros"]) == 1
        gamma = rep["zeros"][0]["gamma"]
        assert gamma[0] == pytest.approx(0.5, abs=1e-8)
        assert rep["outer_defect"] == pytest.approx(math.log(2), abs=1e-6)
        assert rep["outer"] is False
        assert rep["singular_suspected"] is False

    def test_coherent_report(self, capsys):
        code, out, _ = run(
            capsys, "factor", "--json", '{"kind":"su11_cs","z":[0.5,0]}', "--n", "64"
        )
        rep = json.loads(out)
        assert rep["zeros"] == []
        assert abs(rep["outer_defect"]) < 1e-8
        assert rep["outer"] is True

    def test_number_state_monomial_note(self, capsys):
        code, out, _ = run(
            capsys, "factor", "--json", '{"kind":"number","m":3}', "--n", "16"
        )
        rep = json.loads(out)
        assert rep["monomial_degree"] == 3
        assert rep["outer_defect"] is None
        inner = [complex(re, im) for re, im in rep["inner_coeffs"]]
        assert inner[3] == pytest.approx(1.0, abs=1e-10)


class TestDataCommands:
    def test_phase_dist_uniform(self, capsys):
        code, out, _ = run(
            capsys,
            "phase-dist",
            "--json",
            '{"kind":"number","m":2}',
            "--n",
            "8",
            "--grid",
            "32",
            "--format",
            "csv",
        )
        lines = out.strip().splitlines()
        assert lines[0] == "theta,re_theta_fn,im_theta_fn,phase_density"
        densities = [float(line.split(",")[3]) for line in lines[1:]]
        assert densities == pytest.approx([1 / (2 * np.pi)] * 32)

    def test_wigner_band(self, capsys):
        code, out, _ = run(
            capsys,
            "wigner",
            "--json",
            '{"kind":"number","m":2}',
            "--n",
            "8",
            "--grid",
            "64",
            "--n-max",
            "4",
            "--format",
            "csv",
        )
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        values = {(int(n), float(t)): float(s) for n, t, s in rows}
        assert all(v == pytest.approx(1 / (2 * np.pi)) for (n, _), v in values.items() if n == 2)
        assert all(v == 0.0 for (n, _), v in values.items() if n != 2)

    def test_wigner_json_reports_marginal_residuals(self, capsys):
        code, out, _ = run(
            capsys, "wigner", "--json", '{"kind":"su11_cs","z":[0.5,0]}', "--n", "32"
        )
        rep = json.loads(out)
        assert rep["number_marginal_residual"] < 1e-10
        assert rep["phase_marginal_residual"] < 1e-10

    def test_bg_vacuum_ray(self, capsys):
        code, out, _ = run(
            capsys,
            "bg",
            "--json",
            '{"kind":"number","m":0}',
            "--n",
            "8",
            "--format",
            "csv",
            "--tmax",
            "1.0",
            "--points",
            "5",
        )
        # ray CSV plus a JSON block with the factor-part atoms
        csv_part, json_part = out.split("{", 1)
        lines = csv_part.strip().splitlines()
        assert lines[0] == "t,re_u,im_u"
        assert all(line.split(",")[1] == "1.0" for line in lines[1:])
        atoms = json.loads("{" + json_part)
        assert atoms["atom_out"] == [2.0, 0.0]
        assert atoms["atom_in"] == [0.0, 0.0]


class TestDeterminism:
    @pytest.mark.parametrize(
        "command,fmt", [("factor", "json"), ("phase-dist", "csv"), ("wigner", "json")]
    )
    def test_identical_bytes(self, capsys, command, fmt):
        argv = (
            command,
            "--json",
            '{"kind":"pi_superposition","z":[0.8,0],"tau":2.356194490192345}',
            "--n",
            "64",
            "--format",
            fmt,
        )
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2


class TestExitCodes:
    def test_malformed_json(self, capsys):
        code, _, err = run(capsys, "state", "--json", "{not json")
        assert code == EXIT_SPEC
        assert "spec error" in err

    def test_unknown_kind(self, capsys):
        code, _, _ = run(capsys, "state", "--json", '{"kind":"squeezed"}')
        assert code == EXIT_SPEC

    def test_missing_field(self, capsys):
        code, _, _ = run(capsys, "state", "--json", '{"kind":"su11_cs"}')
        assert code == EXIT_SPEC

    def test_grid_below_bandwidth(self, capsys):
        code, _, err = run(
            capsys,
            "state",
            "--json",
            '{"kind":"number","m":0}',
            "--n",
            "64",
            "--grid",
            "64",
        )
        assert code == EXIT_NUMERIC
        assert "precondition" in err

    def test_coherent_label_on_edge(self, capsys):
        code, _, _ = run(
            capsys, "state", "--json", '{"kind":"su11_cs","z":[0.9999999,0]}'
        )
        assert code == EXIT_NUMERIC

    def test_overfull_raw_spec(self, capsys):
        code, _, _ = run(
            capsys, "state", "--json", '{"kind":"raw","coeffs":[[1,0],[1,0]]}'
        )
        assert code == EXIT_SPEC

    def test_unwritable_output(self, capsys):
        code, _, err = run(
            capsys,
            "state",
            "--json",
            '{"kind":"number","m":0}',
            "--out",
            "/nonexistent-dir/out.json",
        )
        assert code == EXIT_IO

    def test_bad_weyl_flag(self, capsys):
        code, _, _ = run(
            capsys, "state", "--json", '{"kind":"number","m":0}', "--weyl", "1:2"
        )
        assert code == EXIT_SPEC


class TestVerifyCommand:
    def test_filtered_run_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--only", "kernel", "--format", "csv")
        assert code == EXIT_OK
        assert "PASS" in out
        assert "FAIL" not in out

    def test_unknown_filter(self, capsys):
        code, _, _ = run(capsys, "verify", "--only", "nonexistent-check")
        assert code == EXIT_SPEC

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code, _, _ = run(
            capsys, "verify", "--only", "poisson", "--out", str(target)
        )
        assert code == EXIT_OK
        rep = json.loads(target.read_text())
        assert rep["results"][0]["passed"] is True
