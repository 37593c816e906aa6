from __future__ import annotations

import json
import subprocess
import sys

import pytest

from specmatch import (
    HalfIntegral,
    from_graph6,
    predicted_maximizer_connected,
    to_edge_list_text,
    to_graph6,
    Graph,
)
from specmatch.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


C5_EDGES = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"


class TestBasicCommands:
    def test_threshold_t35_n8(self, capsys):
        code, out, _ = run_cli(capsys, "threshold", "--theorem", "t35", "--n", "8")
        assert code == 0
        assert out.startswith("5.0695")

    def test_threshold_t12(self, capsys):
        code, out, _ = run_cli(capsys, "threshold", "--theorem", "t12", "--n", "8", "--beta", "2")
        assert code == 0 and out.strip() == "4"

    def test_extremal_emits_expected_graph(self, capsys):
        code, out, _ = run_cli(capsys, "extremal", "--n", "8", "--beta-star", "7/2", "--s", "1")
        assert code == 0
        g = from_graph6(out.strip())
        from specmatch import complete, empty, is_isomorphic, join, union

        assert is_isomorphic(g, join(complete(1), union(complete(5), empty(2))))

    def test_extremal_default_s(self, capsys):
        code, out, _ = run_cli(capsys, "extremal", "--n", "10", "--beta-star", "3")
        assert code == 0
        expect = predicted_maximizer_connected(10, HalfIntegral(6)).extremal_graphs[0]
        assert out.strip() == to_graph6(expect)

    def test_rho_graph6(self, capsys):
        code, out, _ = run_cli(capsys, "rho", "--graph6", "Bw")
        assert code == 0
        assert float(out) == pytest.approx(2.0, abs=1e-9)

    def test_beta_star_edge_list(self, capsys, tmp_path):
        path = tmp_path / "c5.txt"
        path.write_text(C5_EDGES)
        code, out, _ = run_cli(capsys, "beta-star", "--edges", str(path))
        assert code == 0 and out.strip() == "5/2"

    def test_beta_star_witness(self, capsys):
        code, out, _ = run_cli(capsys, "beta-star", "--graph6", "Bw", "--witness")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "3/2"
        assert all(line.startswith("edge ") for line in lines[1:])

    def test_beta_witness(self, capsys):
        code, out, _ = run_cli(capsys, "beta", "--graph6", "Bw", "--witness")
        assert code == 0
        assert out.splitlines()[0] == "1"

    def test_transversal(self, capsys):
        code, out, _ = run_cli(capsys, "transversal", "--graph6", "Bw")
        lines = out.strip().splitlines()
        assert code == 0 and lines[0] == "3/2"
        assert lines[1:] == ["vertex 0 1/2", "vertex 1 1/2", "vertex 2 1/2"]

    def test_decompose_c5(self, capsys):
        g6 = to_graph6(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]))
        code, out, _ = run_cli(capsys, "decompose", "--graph6", g6)
        assert code == 0
        assert out.startswith("part CYCLE")

    def test_decompose_without_fpm_fails(self, capsys):
        code, _, err = run_cli(capsys, "decompose", "--graph6", to_graph6(Graph(4, [(0, 1), (0, 2), (0, 3)])))
        assert code == 2
        assert "no fractional perfect matching" in err

    def test_certify_json(self, capsys):
        code, out, _ = run_cli(capsys, "certify", "--graph6", "Bw")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 3 and payload["beta_star_doubled"] == 3


class TestVerifyCommands:
    def test_verify_theorem(self, capsys, tmp_path):
        out_path = tmp_path / "report.csv"
        code, out, _ = run_cli(
            capsys, "verify", "--theorem", "t33", "--n", "5", "--out", str(out_path)
        )
        assert code == 0
        assert "result: PASS" in out
        csv = out_path.read_text()
        assert csv.splitlines()[0] == (
            "n,two_beta_star,regime,bound,max_rho,n_maximizers,argmax_g6,prediction_g6,bound_holds,argmax_matches"
        )

    def test_verify_injected_bound_failure_exit3(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--theorem", "t33", "--n", "4", "--debug-bound-offset", "-0.5"
        )
        assert code == 3
        assert "DISCREPANCY" in out

    def test_verify_certificates(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--certificates", "--n", "4")
        assert code == 0 and "result: PASS" in out

    def test_verify_audit(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--audit", "--n", "4")
        assert code == 0 and "result: PASS" in out

    def test_cross_check(self, capsys):
        code, out, _ = run_cli(capsys, "cross-check", "--n", "4")
        assert code == 0 and "64 graphs" in out and "result: PASS" in out

    def test_connected_flag_consistency(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--theorem", "t33", "--n", "4", "--connected")
        assert code == 1 and "--connected contradicts" in err
        code, out, _ = run_cli(capsys, "verify", "--theorem", "t32", "--n", "4", "--connected")
        assert code == 0 and "result: PASS" in out


class TestExitCodes:
    def test_usage_error_unknown_command(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 1

    def test_usage_error_missing_args(self, capsys):
        assert run_cli(capsys, "threshold", "--theorem", "t32", "--n", "6")[0] == 1

    def test_malformed_graph6(self, capsys):
        code, _, err = run_cli(capsys, "rho", "--graph6", "B" + chr(20))
        assert code == 1
        assert "byte offset 1" in err

    def test_bad_half_integer(self, capsys):
        assert run_cli(capsys, "extremal", "--n", "6", "--beta-star", "2.25")[0] == 1

    def test_computation_error_exit2(self, capsys):
        # enumeration cap produces a computation error
        code, _, err = run_cli(capsys, "verify", "--theorem", "t33", "--n", "8")
        assert code == 2

    def test_bad_edge_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("not an edge list\n")
        assert run_cli(capsys, "beta", "--edges", str(path))[0] == 1


class TestRoundTripGrid:
    def test_extremal_rho_matches_threshold(self, capsys):
        # 50 (n, beta*) pairs spanning both connected regimes
        pairs = []
        for n in range(8, 33):
            pairs.append((n, n - 1))  # hub regime for most n
            pairs.append((n, 2 * (n // 3)))  # join regime
        pairs = pairs[:50]
        for n, d in pairs:
            code, out, _ = run_cli(capsys, "extremal", "--n", str(n), "--beta-star", f"{d}/2")
            assert code == 0
            g6 = out.strip()
            code, out, _ = run_cli(capsys, "rho", "--graph6", g6)
            assert code == 0
            rho = float(out)
            code, out, _ = run_cli(capsys, "threshold", "--theorem", "t32", "--n", str(n), "--beta-star", f"{d}/2")
            assert code == 0
            assert rho == pytest.approx(float(out), abs=1e-8)


class TestConsoleEntry:
    def test_subprocess_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "specmatch.cli", "threshold", "--theorem", "t35", "--n", "8"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("5.0695")

    def test_stdin_edge_list(self):
        proc = subprocess.run(
            [sys.executable, "-m", "specmatch.cli", "beta-star"],
            input=C5_EDGES,
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "5/2"

    def test_stdin_graph6(self):
        proc = subprocess.run(
            [sys.executable, "-m", "specmatch.cli", "rho"],
            input="Bw\n",
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert float(proc.stdout) == pytest.approx(2.0, abs=1e-9)
