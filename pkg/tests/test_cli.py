import json
import subprocess
import sys

from pvckit import parse_wpvc
from pvckit.cli import main

PATH3 = "p wpvc 3 2 1 2\ne 0 1\ne 1 2\n"
PATH3_L3 = "p wpvc 3 2 1 3\ne 0 1\ne 1 2\n"
MCQ_PAIR = "p mcq 2 1 2\nc 0 1\nc 1 2\ne 0 1\n"


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSolve:
    def test_yes_exit_zero_with_witness(self, tmp_path, capsys):
        f = tmp_path / "path3.wpvc"
        f.write_text(PATH3)
        code, out, _ = run_cli(["solve", "--alg", "epvcbd", str(f)], capsys)
        assert code == 0
        assert "verdict=yes" in out and "witness=1" in out

    def test_no_exit_one(self, tmp_path, capsys):
        f = tmp_path / "path3L3.wpvc"
        f.write_text(PATH3_L3)
        code, out, _ = run_cli(["solve", "--alg", "epvcbd", str(f)], capsys)
        assert code == 1 and "verdict=no" in out

    def test_malformed_header_exit_two(self, tmp_path, capsys):
        f = tmp_path / "bad.wpvc"
        f.write_text("p wpvc oops\n")
        code, _, err = run_cli(["solve", "--alg", "epvcbd", str(f)], capsys)
        assert code == 2 and "parse error" in err

    def test_variant_mismatch_exit_two(self, tmp_path, capsys):
        f = tmp_path / "weighted.wpvc"
        f.write_text("p wpvc 2 1 2 1\nv 0 2\ne 0 1\n")
        code, _, err = run_cli(["solve", "--alg", "epvcbd", str(f)], capsys)
        assert code == 2 and "variant error" in err

    def test_not_bipartite_exit_two(self, tmp_path, capsys):
        f = tmp_path / "tri.wpvc"
        f.write_text("p wpvc 3 3 1 1\ne 0 1\ne 1 2\ne 0 2\n")
        code, _, err = run_cli(["solve", "--alg", "epvcbd", str(f)], capsys)
        assert code == 2 and "not bipartite" in err

    def test_json_like_dump(self, tmp_path, capsys):
        f = tmp_path / "path3.wpvc"
        f.write_text(PATH3)
        code, out, _ = run_cli(
            ["solve", "--alg", "by-L", "--json-like", str(f)], capsys)
        data = json.loads(out)
        assert code == 0 and data["verdict"] == "yes" and data["witness"] == [1]

    def test_verify_flag(self, tmp_path, capsys):
        f = tmp_path / "path3.wpvc"
        f.write_text(PATH3)
        code, out, _ = run_cli(
            ["solve", "--alg", "bounded-degree", "--verify", str(f)], capsys)
        assert code == 0 and "verify=ok" in out

    def test_pvcbm_needs_k3(self, tmp_path, capsys):
        f = tmp_path / "path3.wpvc"
        f.write_text(PATH3)
        code, _, err = run_cli(["solve", "--alg", "pvcbm", str(f)], capsys)
        assert code == 2 and "k3" in err
        code, out, _ = run_cli(
            ["solve", "--alg", "pvcbm", "--k3", "1", str(f)], capsys)
        assert code == 0 and "matching=" in out

    def test_fractional_alg(self, tmp_path, capsys):
        f = tmp_path / "frac.wpvc"
        f.write_text("p wpvc 2 1 1 2\nv 0 2\nv 1 2\ne 0 1 4\n")
        code, out, _ = run_cli(["solve", "--alg", "fractional", str(f)], capsys)
        assert code == 0 and "fractional=0 extent=1/2" in out


class TestOracleCmd:
    def test_auto_detects_wpvc(self, tmp_path, capsys):
        f = tmp_path / "path3.wpvc"
        f.write_text(PATH3)
        code, out, _ = run_cli(["oracle", str(f)], capsys)
        assert code == 0 and "witness=1" in out

    def test_auto_detects_mcq(self, tmp_path, capsys):
        f = tmp_path / "pair.mcq"
        f.write_text(MCQ_PAIR)
        code, out, _ = run_cli(["oracle", str(f)], capsys)
        assert code == 0 and "clique=0 1" in out

    def test_pvcbm_kind(self, tmp_path, capsys):
        f = tmp_path / "c4.wpvc"
        f.write_text("p wpvc 4 4 2 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n")
        code, out, _ = run_cli(["oracle", "--kind", "pvcbm", "--k3", "2", str(f)],
                               capsys)
        assert code == 0 and "matching=" in out

    def test_fractional_kind_keeps_expensive_edges(self, tmp_path, capsys):
        f = tmp_path / "frac.wpvc"
        f.write_text("p wpvc 2 1 1 2\nv 0 2\nv 1 2\ne 0 1 4\n")
        code, out, _ = run_cli(["oracle", "--kind", "fractional", str(f)], capsys)
        assert code == 0 and "fractional=0 extent=1/2" in out

    def test_variant_override_can_fail_validation(self, tmp_path, capsys):
        f = tmp_path / "weighted.wpvc"
        f.write_text("p wpvc 2 1 2 1\nv 0 2\ne 0 1\n")
        code, _, err = run_cli(["oracle", "--variant", "epvc", str(f)], capsys)
        assert code == 2 and "mismatch" in err

    def test_cap_refusal_is_exit_two(self, tmp_path, capsys):
        f = tmp_path / "big.wpvc"
        lines = ["p wpvc 25 0 1 0"]
        f.write_text("\n".join(lines) + "\n")
        code, _, err = run_cli(["oracle", "--cap", "10", str(f)], capsys)
        assert code == 2 and "oracle refused" in err


class TestReduceCmd:
    def test_reduce_writes_loadable_instance_with_provenance(self, tmp_path, capsys):
        src = tmp_path / "pair.mcq"
        src.write_text(MCQ_PAIR)
        dst = tmp_path / "out.wpvc"
        code, _, _ = run_cli(["reduce", str(src), "--out", str(dst)], capsys)
        assert code == 0
        text = dst.read_text()
        assert "# src v0 -> u0,v0" in text
        inst = parse_wpvc(text)
        assert inst.budget == 30 and inst.target == 870

    def test_pendantize_flag(self, tmp_path, capsys):
        src = tmp_path / "pair.mcq"
        src.write_text(MCQ_PAIR)
        dst = tmp_path / "out.wpvc"
        code, _, _ = run_cli(["reduce", "--pendantize", str(src), "--out", str(dst)],
                             capsys)
        assert code == 0
        inst = parse_wpvc(dst.read_text())
        assert inst.graph.n == 874 and inst.graph.m == 870


class TestGenCmd:
    def test_gen_is_byte_identical_across_runs(self, tmp_path, capsys):
        a = tmp_path / "a.wpvc"
        b = tmp_path / "b.wpvc"
        args = ["gen", "bipartite-random", "--n", "8", "--m", "12", "--seed", "7"]
        assert run_cli(args + ["--out", str(a)], capsys)[0] == 0
        assert run_cli(args + ["--out", str(b)], capsys)[0] == 0
        assert a.read_bytes() == b.read_bytes()
        assert parse_wpvc(a.read_text()).graph.m == 12

    def test_gen_bounded_degree_respects_bound(self, tmp_path, capsys):
        f = tmp_path / "bd.wpvc"
        code, _, _ = run_cli(
            ["gen", "bounded-degree", "--n", "9", "--m", "12", "--degree-bound", "3",
             "--seed", "3", "--out", str(f)], capsys)
        assert code == 0
        assert parse_wpvc(f.read_text()).graph.max_degree() <= 3

    def test_gen_infeasible_params_error(self, capsys):
        code, _, err = run_cli(
            ["gen", "bounded-degree", "--n", "3", "--m", "9", "--degree-bound", "1",
             "--seed", "0"], capsys)
        assert code == 2 and "error" in err

    def test_gen_mcq_planted_solves_yes(self, tmp_path, capsys):
        f = tmp_path / "planted.mcq"
        code, _, _ = run_cli(
            ["gen", "mcq-planted", "--k", "3", "--class-size", "2", "--seed", "11",
             "--out", str(f)], capsys)
        assert code == 0
        code, out, _ = run_cli(["oracle", str(f)], capsys)
        assert code == 0 and "verdict=yes" in out


class TestBenchCmd:
    def test_default_suite_passes(self, capsys):
        code, out, _ = run_cli(["bench"], capsys)
        assert code == 0
        assert "VIOLATION" not in out and "epvcbd" in out

    def test_empty_suite_is_fine(self, tmp_path, capsys):
        cfg = tmp_path / "empty.json"
        cfg.write_text(json.dumps({"runs": []}))
        code, out, _ = run_cli(["bench", "--config", str(cfg)], capsys)
        assert code == 0

    def test_custom_config(self, tmp_path, capsys):
        cfg = tmp_path / "suite.json"
        cfg.write_text(json.dumps(
            {"runs": [{"alg": "by-L", "grid": [2, 3], "seeds": [0]}]}))
        code, out, _ = run_cli(["bench", "--config", str(cfg)], capsys)
        assert code == 0
        assert out.count("by-L") == 2 and "epvcbd" not in out


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "pvckit.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "solve" in proc.stdout
