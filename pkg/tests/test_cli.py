# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

import json
from pathlib import Path

import pytest
import yaml

from src import __version__
from src.cli.output import CATALOG_CSV_HEADER, CHECK_CSV_HEADER, SWEEP_CSV_HEADER
from src.config import get_settings
from src.main import EXIT_FINDINGS, EXIT_OK, EXIT_USAGE, main
from src.models.report import SweepReport
from src.services.enumeration_io import write_graph6, write_graph6_file
from src.services.pattern_catalog import complete_graph, cycle_graph


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


class TestCheck:
    def test_triangle_text(self, capsys):
        code, out = run(capsys, "check", "Bw")
        assert code == EXIT_OK
        assert "graph6: Bw" in out.out
        assert "hamiltonian: yes" in out.out
        assert "fully cycle extendable: yes" in out.out

    def test_k113_json(self, capsys, k113):
        code, out = run(capsys, "--format", "json", "check", write_graph6(k113))
        assert code == EXIT_OK
        report = json.loads(out.out)
        assert report["order"] == 5
        assert report["size"] == 7
        assert report["locally_connected"] is True
        assert report["hamiltonian"] is False
        assert report["weakly_pancyclic"] is True
        assert report["fully_cycle_extendable"] is False
        assert report["fce_witness"] == "set [0, 1, 2, 3]"
        assert report["dirac_degree_condition"] is False
        assert report["hypotheses"] == ["L1", "P2", "T_PAW_I", "T_PAW_II"]
        assert report["family_free"]["Paw"] is True
        assert report["family_free"]["Claw"] is False

    def test_c5(self, capsys):
        code, out = run(capsys, "--format", "json", "check", "Dhc")
        assert code == EXIT_OK
        report = json.loads(out.out)
        assert report["order"] == 5
        assert report["locally_connected"] is False
        assert report["common_neighbor_condition"] is False
        assert report["hypotheses"] == []

    def test_x_reports_condition_witness(self, capsys, x_graph):
        code, out = run(capsys, "--format", "json", "check", write_graph6(x_graph))
        assert code == EXIT_OK
        report = json.loads(out.out)
        assert report["common_neighbor_condition"] is False
        assert "common-neighbour condition" in report["condition_witnesses"]
        assert report["condition_witnesses"]["common-neighbour condition"] == "(4, 0, 5)"
        assert report["hypotheses"] == ["P2"]

    def test_disconnected(self, capsys):
        code, out = run(capsys, "--format", "json", "check", "Cg")
        assert code == EXIT_OK
        report = json.loads(out.out)
        assert report["connected"] is False
        assert report["diameter"] is None

    def test_file_source(self, capsys, tmp_path, k113):
        path = tmp_path / "in.g6"
        write_graph6_file(path, [k113, cycle_graph(5)])
        code, out = run(capsys, "check", "--format", "json", f"@{path}")
        assert code == EXIT_OK
        reports = json.loads(out.out)
        assert [r["order"] for r in reports] == [5, 5]
        assert reports[1]["locally_connected"] is False

    def test_csv(self, capsys):
        code, out = run(capsys, "--format", "csv", "check", "Bw")
        assert code == EXIT_OK
        lines = out.out.splitlines()
        assert lines[0] == ",".join(CHECK_CSV_HEADER)
        assert "Bw,hamiltonian,True" in lines

    @pytest.mark.parametrize("bad", ["Bx", "B", "~~~~~~~~", "B\x01"])
    def test_malformed_graph6(self, capsys, bad):
        code, out = run(capsys, "check", bad)
        assert code == EXIT_USAGE
        assert out.out == ""
        assert "lcx: error" in out.err

    def test_missing_file(self, capsys, tmp_path):
        code, _ = run(capsys, "check", f"@{tmp_path / 'absent.g6'}")
        assert code == EXIT_USAGE


class TestCatalog:
    def test_text(self, capsys):
        code, out = run(capsys, "catalog")
        assert code == EXIT_OK
        assert "K1,1,3" in out.out

    def test_json_entries(self, capsys):
        code, out = run(capsys, "--format", "json", "catalog")
        assert code == EXIT_OK
        entries = {e["pattern"]: e for e in json.loads(out.out)}
        assert (entries["Paw"]["order"], entries["Paw"]["size"]) == (4, 4)
        assert (entries["X"]["order"], entries["X"]["size"]) == (7, 12)
        assert (entries["K1,1,3"]["order"], entries["K1,1,3"]["size"]) == (5, 7)
        assert entries["K1,1,3"]["degrees"] == [4, 4, 2, 2, 2]
        assert entries["K3"]["graph6"] == "Bw"

    def test_csv_header(self, capsys):
        _, out = run(capsys, "--format", "csv", "catalog")
        assert out.out.splitlines()[0] == ",".join(CATALOG_CSV_HEADER)


class TestSweeps:
    def test_verify_clean(self, capsys):
        code, out = run(capsys, "verify", "--theorem", "T6", "--n-max", "5")
        assert code == EXIT_OK
        assert "no findings" in out.out
        assert "wall time:" in out.out

    def test_verify_json(self, capsys):
        code, out = run(
            capsys, "--format", "json", "verify", "--theorem", "P1", "--theorem", "P2",
            "--n-max", "5",
        )
        assert code == EXIT_OK
        report = SweepReport.model_validate_json(out.out)
        assert report.config == {"theorems": ["P1", "P2"], "n_max": 5, "source": "builtin"}
        assert report.counters["P1"].examined == 2 + 6 + 21
        assert report.counters["P2"].violations == 0
        assert len(report.lattice) == 10
        assert all(fact.passed for fact in report.lattice)

    def test_verify_csv(self, capsys):
        code, out = run(capsys, "--format", "csv", "verify", "--theorem", "T6", "--n-max", "4")
        assert code == EXIT_OK
        lines = out.out.splitlines()
        assert lines[0] == ",".join(SWEEP_CSV_HEADER)
        assert lines[1].startswith("counter,T6,,,8,")

    def test_verify_uses_profile(self, capsys):
        profile = {"verify": {"theorems": ["COR2"], "n_max": 4}}
        Path(get_settings().config_path).write_text(yaml.safe_dump(profile))
        code, out = run(capsys, "--format", "json", "verify")
        assert code == EXIT_OK
        report = json.loads(out.out)
        assert report["config"]["theorems"] == ["COR2"]
        assert report["config"]["n_max"] == 4

    def test_verify_file_source(self, capsys, tmp_path, k113, octahedron):
        path = tmp_path / "in.g6"
        write_graph6_file(path, [k113, octahedron])
        code, out = run(
            capsys, "--format", "json", "verify", "--theorem", "all", "--source", f"@{path}"
        )
        assert code == EXIT_OK
        report = json.loads(out.out)
        assert report["counters"]["T_PAW_II"]["verified"] == 2
        assert report["counters"]["T6"]["applicable"] == 1

    def test_malformed_profile_is_a_usage_error(self, capsys):
        Path(get_settings().config_path).write_text("verify:\n  n_max: 12\n")
        code, out = run(capsys, "verify")
        assert code == EXIT_USAGE
        assert "n_max" in out.err

    def test_oversized_graph_is_reported_as_skipped(self, capsys, tmp_path, k113):
        path = tmp_path / "big.g6"
        big = write_graph6(complete_graph(17))
        write_graph6_file(path, [k113, complete_graph(17)])
        code, out = run(capsys, "verify", "--theorem", "all", "--source", f"@{path}")
        assert code == EXIT_OK
        assert "1 graphs skipped" in out.out
        code, out = run(capsys, "--format", "csv", "search", "--source", f"@{path}")
        assert code == EXIT_OK
        assert any(line.startswith(f"skipped,,17,{big},") for line in out.out.splitlines())

    def test_search_clean(self, capsys):
        code, out = run(capsys, "search", "--conjecture", "ryjacek", "--n-max", "4")
        assert code == EXIT_OK
        assert "no findings" in out.out

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--theorem", "T99", "--n-max", "4"],
            ["verify", "--theorem", "T6", "--n-max", "9"],
            ["search", "--n-max", "2"],
            ["search", "--conjecture", "other"],
            ["frobnicate"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _ = run(capsys, *argv)
        assert code == EXIT_USAGE

    def test_exit_codes_are_distinct(self):
        assert len({EXIT_OK, EXIT_FINDINGS, EXIT_USAGE}) == 3


class TestEnumerate:
    @pytest.mark.parametrize(("flags", "count"), [([], 11), (["--connected"], 6)])
    def test_stdout(self, capsys, flags, count):
        code, out = run(capsys, "enumerate", "--n", "4", *flags)
        assert code == EXIT_OK
        assert len(out.out.splitlines()) == count

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "c5.g6"
        code, out = run(capsys, "enumerate", "--n", "5", "--connected", "--output", str(path))
        assert code == EXIT_OK
        assert out.out == ""
        assert len(path.read_text().splitlines()) == 21

    def test_out_of_range(self, capsys):
        code, _ = run(capsys, "enumerate", "--n", "9")
        assert code == EXIT_USAGE


class TestGlobalFlags:
    def test_flags_override_settings(self, capsys):
        run(capsys, "catalog", "--jobs", "3", "--quiet", "--format", "csv")
        settings = get_settings()
        assert settings.jobs == 3
        assert settings.progress is False
        assert settings.output_format == "csv"

    def test_version(self, capsys):
        code, out = run(capsys, "--version")
        assert code == EXIT_OK
        assert __version__ in out.out

    def test_schema(self, capsys):
        code, out = run(capsys, "schema")
        assert code == EXIT_OK
        schemas = json.loads(out.out)
        assert set(schemas) == {"SweepReport", "CheckReport", "CatalogEntry"}
        assert "counters" in schemas["SweepReport"]["properties"]
        assert "skipped" in schemas["SweepReport"]["properties"]
