import json

import pytest

import gpmcdiag as gd
from gpmcdiag.cli import main

SCHEMA_KEYS = {"command", "config", "result", "stats", "version"}


def run_json(tmp_path, args, name="out.json"):
    out = tmp_path / name
    code = main(args + ["--format", "json", "--output", str(out)])
    return code, json.loads(out.read_text()), out.read_bytes()


class TestTopologyCommand:
    def test_hypercube_summary(self, tmp_path):
        code, rep, _ = run_json(tmp_path, ["topology", "--topology", "hypercube", "--n", "3"])
        assert code == 0
        assert set(rep) == SCHEMA_KEYS
        r = rep["result"]
        assert (r["vertices"], r["edges"], r["min_degree"], r["girth"]) == (8, 12, 3, 4)

    def test_cycle_summary(self, capsys):
        assert main(["topology", "--topology", "cycle", "--n", "4"]) == 0
        out = capsys.readouterr().out
        assert "vertices" in out and "4" in out

    def test_tree_girth_rendered_infinite(self, capsys):
        assert main(["topology", "--topology", "path", "--n", "5"]) == 0
        assert "infinite" in capsys.readouterr().out

    def test_exports(self, tmp_path):
        dot = tmp_path / "g.dot"
        elist = tmp_path / "g.txt"
        code = main(["topology", "--topology", "hypercube", "--n", "2",
                     "--dot", str(dot), "--edge-list-out", str(elist),
                     "--format", "json", "--output", str(tmp_path / "r.json")])
        assert code == 0
        assert dot.read_text().startswith("graph G {")
        g = gd.parse_edge_list(elist.read_text())
        assert g.edges == gd.build_hypercube(2).edges

    def test_edge_list_input(self, tmp_path):
        src = tmp_path / "in.txt"
        src.write_text("3 2\n0 1\n1 2\n")
        code, rep, _ = run_json(tmp_path, ["topology", "--edge-list", str(src)])
        assert code == 0
        assert rep["result"]["vertices"] == 3

    def test_malformed_edge_list_names_line(self, tmp_path, capsys):
        src = tmp_path / "bad.txt"
        src.write_text("3 2\n0 1\na b\n")
        assert main(["topology", "--edge-list", str(src)]) == 2
        assert "line 3" in capsys.readouterr().err

    def test_missing_source_is_input_error(self, capsys):
        assert main(["topology"]) == 2
        assert main(["topology", "--topology", "hypercube", "--n", "99"]) == 2

    def test_csv_format(self, capsys):
        assert main(["topology", "--topology", "hypercube", "--n", "3",
                     "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "name,vertices,edges,min_degree,girth"
        assert lines[1] == "hypercube-3,8,12,3,4"


class TestInjectCommand:
    def test_syndrome_roundtrips(self, tmp_path):
        code, rep, _ = run_json(tmp_path, [
            "inject", "--topology", "hypercube", "--n", "3",
            "--faulty-vertices", "0", "--faulty-edges", "3-7",
            "--adversary", "all-fail"])
        assert code == 0
        g = gd.build_hypercube(3)
        pair = gd.fault_pair_from_record(g, rep["result"]["pair"])
        sig = gd.syndrome_from_triples(g, rep["result"]["syndrome"])
        assert gd.is_consistent(sig, pair)

    def test_random_faults_need_seed(self, capsys):
        assert main(["inject", "--topology", "hypercube", "--n", "3",
                     "--random-faults", "2,1"]) == 2

    def test_random_faults_reproducible(self, tmp_path):
        args = ["inject", "--topology", "hypercube", "--n", "3",
                "--random-faults", "2,1", "--seed", "5"]
        _, rep1, raw1 = run_json(tmp_path, args, "a.json")
        _, rep2, raw2 = run_json(tmp_path, args, "b.json")
        assert raw1 == raw2
        assert len(rep1["result"]["pair"]["F"]) == 2

    def test_inconsistent_faults_rejected(self, capsys):
        assert main(["inject", "--topology", "hypercube", "--n", "3",
                     "--faulty-vertices", "0", "--faulty-edges", "0-1"]) == 2
        assert "incident" in capsys.readouterr().err


class TestDiagnoseCommand:
    def test_recovers_injected_pair(self, tmp_path):
        code, rep, _ = run_json(tmp_path, [
            "diagnose", "--topology", "hypercube", "--n", "3",
            "--faulty-vertices", "0", "--faulty-edges", "3-7",
            "--t", "1", "--s", "1", "--adversary", "all-fail"])
        assert code == 0
        r = rep["result"]
        assert r["status"] == "unique" and r["recovered"] is True
        assert r["true_pair"] == {"F": [0], "S": [[3, 7]]}

    def test_fault_free_trivial(self, tmp_path):
        code, rep, _ = run_json(tmp_path, [
            "diagnose", "--topology", "hypercube", "--n", "2",
            "--t", "0", "--s", "0"])
        assert code == 0
        assert rep["result"]["status"] == "unique"
        assert rep["result"]["candidates"] == [{"F": [], "S": []}]

    def test_bounds_must_cover_injection(self, capsys):
        assert main(["diagnose", "--topology", "hypercube", "--n", "3",
                     "--faulty-vertices", "0,3", "--t", "1", "--s", "0"]) == 2

    def test_random_adversary_needs_seed(self, capsys):
        assert main(["diagnose", "--topology", "hypercube", "--n", "3",
                     "--faulty-vertices", "0", "--t", "1", "--s", "0",
                     "--adversary", "random"]) == 2

    def test_loose_bounds_make_blocked_pattern_ambiguous(self, tmp_path):
        # vertex 0 plus two neighbors faulty, all-fail adversary: at bounds
        # (3,1) the variant blaming edge 0-1 instead of vertex 0 also fits
        code, rep, _ = run_json(tmp_path, [
            "diagnose", "--topology", "hypercube", "--n", "3",
            "--faulty-vertices", "0,2,4", "--t", "3", "--s", "1",
            "--adversary", "all-fail"])
        assert code == 0
        assert rep["result"]["status"] == "ambiguous"
        assert rep["result"]["recovered"] is False
        assert rep["result"]["total_candidates"] == 2


class TestDiagnosabilityCommand:
    def test_edge_restricted_q3(self, tmp_path):
        code, rep, _ = run_json(tmp_path, [
            "diagnosability", "--topology", "hypercube", "--n", "3",
            "--edge-restricted", "1"])
        assert code == 0
        r = rep["result"]
        assert r["value"] == 2
        assert r["analytic_bounds"] == {"t_h_bound": 2, "s1_bound": 1}
        assert r["witness"] is not None
        g = gd.build_hypercube(3)
        p1 = gd.fault_pair_from_record(g, r["witness"]["first"])
        p2 = gd.fault_pair_from_record(g, r["witness"]["second"])
        assert not gd.distinguishable_oracle(g, p1, p2)

    def test_classical_level_zero(self, tmp_path):
        code, rep, _ = run_json(tmp_path, [
            "diagnosability", "--topology", "hypercube", "--n", "3",
            "--edge-restricted", "0"])
        assert rep["result"]["value"] == 3

    def test_vertex_restricted_q4(self, tmp_path):
        code, rep, _ = run_json(tmp_path, [
            "diagnosability", "--topology", "hypercube", "--n", "4",
            "--vertex-restricted", "1"])
        assert code == 0
        assert rep["result"]["value"] == 2
        assert rep["result"]["analytic_bounds"] == {"s1_bound": 2}

    def test_structured_output_has_no_timing(self, tmp_path):
        _, rep, raw = run_json(tmp_path, [
            "diagnosability", "--topology", "hypercube", "--n", "2",
            "--edge-restricted", "1"])
        assert b"elapsed" not in raw
        assert "jobs" not in rep["config"]

    def test_table_output_has_timing(self, capsys):
        assert main(["diagnosability", "--topology", "hypercube", "--n", "2",
                     "--edge-restricted", "1"]) == 0
        assert "elapsed" in capsys.readouterr().out

    def test_jobs_do_not_change_structured_bytes(self, tmp_path):
        base = ["diagnosability", "--topology", "random", "--n", "7",
                "--p", "0.5", "--topology-seed", "8", "--edge-restricted", "1"]
        _, _, raw1 = run_json(tmp_path, base + ["--jobs", "1"], "j1.json")
        _, _, raw4 = run_json(tmp_path, base + ["--jobs", "4"], "j4.json")
        assert raw1 == raw4


class TestVerifyTheoremsCommand:
    def test_rows_report_computed_truth(self, tmp_path):
        code, rep, _ = run_json(tmp_path, ["verify-theorems", "--max-n", "2"])
        rows = {(r["kind"], r["level"]): r for r in rep["result"]["rows"]}
        # the 2-cube: computed classical value is 1 against the claimed 2,
        # and the edge-budget-1 value is 0 against the claimed 1
        assert rows[("edge-restricted", 0)]["computed"] == 1
        assert rows[("edge-restricted", 0)]["match"] is False
        assert rows[("edge-restricted", 1)]["computed"] == 0
        assert rows[("edge-restricted", 1)]["match"] is False
        assert rows[("edge-restricted", 2)]["match"] is True
        assert rows[("vertex-restricted-edge", 1)]["computed"] == 0
        assert rows[("vertex-restricted-edge", 1)]["match"] is True
        assert rep["result"]["all_match"] is False
        assert code == 1  # mismatch exit status

    def test_q3_rows(self, tmp_path):
        code, rep, _ = run_json(tmp_path, ["verify-theorems", "--max-n", "3"])
        rows = {(r["n"], r["kind"], r["level"]): r["computed"]
                for r in rep["result"]["rows"]}
        assert rows[(3, "edge-restricted", 0)] == 3
        assert rows[(3, "edge-restricted", 1)] == 2
        assert rows[(3, "edge-restricted", 2)] == 0
        assert rows[(3, "edge-restricted", 3)] == 0
        assert rows[(3, "vertex-restricted-edge", 1)] == 1

    def test_max_n_validation(self, capsys):
        assert main(["verify-theorems", "--max-n", "6"]) == 2
        assert main(["verify-theorems", "--max-n", "5"]) == 2  # needs audit flag

    def test_table_format_shows_mismatches(self, capsys):
        code = main(["verify-theorems", "--max-n", "2"])
        out = capsys.readouterr().out
        assert code == 1
        assert "all match: NO" in out

    def test_csv_rows(self, capsys):
        main(["verify-theorems", "--max-n", "2", "--format", "csv"])
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,kind,level,computed,expected,match"
        assert len(lines) == 1 + 4  # t_0, t_1, t_2, s_1

    def test_audit_sweep_matches_pruned_values(self, tmp_path):
        # self-consistency: the all-seed sweep and the single-seed shortcut
        # must compute identical values up to the 4-cube
        _, plain, _ = run_json(tmp_path, ["verify-theorems", "--max-n", "4"], "p.json")
        _, audit, _ = run_json(tmp_path, ["verify-theorems", "--max-n", "4",
                                          "--audit-full-enumeration"], "a.json")
        strip = lambda rows: [(r["n"], r["kind"], r["level"], r["computed"])
                              for r in rows]
        assert strip(plain["result"]["rows"]) == strip(audit["result"]["rows"])


class TestDeterminism:
    def test_verify_theorems_byte_identical_across_runs(self, tmp_path):
        args = ["verify-theorems", "--max-n", "3"]
        raws = [run_json(tmp_path, args, f"r{i}.json")[2] for i in range(3)]
        assert raws[0] == raws[1] == raws[2]

    def test_verify_theorems_byte_identical_across_jobs(self, tmp_path):
        args = ["verify-theorems", "--max-n", "3"]
        _, _, raw1 = run_json(tmp_path, args + ["--jobs", "1"], "j1.json")
        _, _, raw4 = run_json(tmp_path, args + ["--jobs", "4"], "j4.json")
        assert raw1 == raw4

    def test_csv_deterministic(self, tmp_path):
        args = ["verify-theorems", "--max-n", "2", "--format", "csv"]
        outs = []
        for i in range(2):
            out = tmp_path / f"c{i}.csv"
            assert main(args + ["--output", str(out)]) == 1
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]


def test_unknown_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
