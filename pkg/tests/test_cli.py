import csv
import io
import json

import pytest

from degsq import value_C, value_S
from degsq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMax:
    def test_plain(self, capsys):
        code, out, _ = run_cli(capsys, "max", "9", "18")
        assert code == 0
        assert out == "S=192 C=192 max=192 both-optimal\n"

    def test_sides(self, capsys):
        _, out, _ = run_cli(capsys, "max", "10", "20")
        assert out.endswith("both-optimal\n")
        _, out, _ = run_cli(capsys, "max", "10", "10")
        assert out.endswith("quasi-star-optimal\n")
        _, out, _ = run_cli(capsys, "max", "10", "40")
        assert out.endswith("quasi-complete-optimal\n")

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "max", "10", "30", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"v": 10, "e": 30, "S": 420, "C": 426, "max": 426,
                           "side": "quasi-complete-optimal"}

    def test_domain_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "max", "5", "99")
        assert code == 2
        assert "degsq:" in err

    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["max", "9"])
        assert exc.value.code == 2


class TestPartitions:
    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "partitions", "9", "18")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["optimal"]) == 6
        assert all(entry["p2"] == 192 for entry in payload["optimal"])

    def test_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "partitions", "7", "9")
        _, second, _ = run_cli(capsys, "partitions", "7", "9")
        assert first == second


class TestProfile:
    def test_csv_zero_set(self, capsys):
        code, out, _ = run_cli(capsys, "profile", "15")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 106
        zeros = [int(r["e"]) for r in rows if int(r["diff"]) == 0]
        assert zeros == [0, 1, 2, 3, 45, 60, 102, 103, 104, 105]
        positives = [int(r["e"]) for r in rows if int(r["diff"]) > 0]
        assert positives[: 41] == list(range(4, 45))

    def test_csv_roundtrip(self, capsys):
        _, out, _ = run_cli(capsys, "profile", "11")
        for row in csv.DictReader(io.StringIO(out)):
            v, e = int(row["v"]), int(row["e"])
            assert int(row["S"]) == value_S(v, e)
            assert int(row["C"]) == value_C(v, e)
            assert int(row["diff"]) == value_S(v, e) - value_C(v, e)

    def test_sidecar_file(self, capsys, tmp_path):
        sidecar = tmp_path / "profile15.json"
        code, out, _ = run_cli(capsys, "profile", "15", "--sidecar", str(sidecar))
        assert code == 0
        payload = json.loads(sidecar.read_text())
        assert payload["classification"] == "Q0_POSITIVE"
        assert payload["k0"] == 10
        assert payload["m"] == "105/2"
        assert payload["equality_edges"] == [0, 1, 2, 3, 45, 60, 102, 103, 104, 105]
        assert len(payload["segments"]) == 27

    def test_output_file_and_default_sidecar(self, capsys, tmp_path):
        target = tmp_path / "profile17.csv"
        code, out, _ = run_cli(capsys, "profile", "17", "--output", str(target))
        assert code == 0 and out == ""
        assert target.exists()
        sidecar = json.loads((tmp_path / "profile17.csv.json").read_text())
        assert sidecar["classification"] == "Q0_NEGATIVE"
        assert sidecar["r0"] == "4"

    def test_json_format(self, capsys):
        _, out, _ = run_cli(capsys, "profile", "8", "--format", "json")
        payload = json.loads(out)
        assert payload["v"] == 8
        assert len(payload["rows"]) == 29


class TestFamilies:
    def test_three(self, capsys):
        code, out, _ = run_cli(capsys, "families", "--name", "three", "--count", "3")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["v", "k", "e", "expected_optimal_count"]
        assert rows[1:] == [["22", "15", "105", "3"],
                            ["121", "85", "3570", "3"],
                            ["698", "493", "121278", "3"]]

    def test_q0zero(self, capsys):
        _, out, _ = run_cli(capsys, "families", "--name", "q0zero", "--count", "5")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["v", "k"]
        assert rows[1:] == [["2", "1"], ["2", "2"], ["3", "1"], ["3", "2"], ["6", "4"]]

    def test_eq_e0_json(self, capsys):
        _, out, _ = run_cli(capsys, "families", "--name", "eq-e0", "--count", "2", "--format", "json")
        payload = json.loads(out)
        assert payload["bigint"] is True
        assert {"v": "3", "k": "1", "variant": "P7"} in payload["members"]


class TestDensity:
    def test_plain(self, capsys):
        code, out, _ = run_cli(capsys, "density", "25")
        assert code == 0
        assert out.startswith("t=25 n=")

    def test_csv(self, capsys):
        _, out, _ = run_cli(capsys, "density", "25", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 25
        row17 = next(r for r in rows if r["v"] == "17")
        assert row17["dominant"] == "0"
        assert row17["q0_sign"] == "-1"

    def test_json(self, capsys):
        _, out, _ = run_cli(capsys, "density", "100", "--format", "json")
        payload = json.loads(out)
        assert payload["t"] == 100
        assert payload["ratio"] == f"{payload['n']}/100"


class TestVerify:
    def test_clean_run_exit_0(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--max-v-partitions", "6", "--max-v-graphs", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["disagreements"] == []

    def test_cap_violation_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--max-v-partitions", "20",
                               "--max-v-graphs", "0", "--partition-cap", "16")
        assert code == 2
        assert "cap" in err

    def test_env_cap_override(self, capsys, monkeypatch):
        monkeypatch.setenv("DEGSQ_ORACLE_CAP", "17")
        code, out, _ = run_cli(capsys, "verify", "--max-v-partitions", "17",
                               "--max-v-graphs", "0")
        del out
        assert code == 0


class TestPell:
    def test_plain(self, capsys):
        code, out, _ = run_cli(capsys, "pell", "--p", "-1", "--count", "5")
        assert code == 0
        assert out.splitlines() == ["1 1", "7 5", "41 29", "239 169", "1393 985"]

    def test_csv(self, capsys):
        _, out, _ = run_cli(capsys, "pell", "--p", "-49", "--count", "3", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows == [["V", "J", "P"], ["1", "5", "-49"], ["7", "7", "-49"], ["17", "13", "-49"]]

    def test_json_bigint_strings(self, capsys):
        _, out, _ = run_cli(capsys, "pell", "--p", "-1", "--count", "27", "--format", "json")
        payload = json.loads(out)
        assert payload["bigint"] is True
        assert all(isinstance(s["V"], str) for s in payload["solutions"])
        assert int(payload["solutions"][-1]["V"]) > 2**64

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "pell.csv"
        code, out, _ = run_cli(capsys, "pell", "--p", "7", "--count", "2",
                               "--format", "csv", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text() == "V,J,P\n3,1,7\n5,3,7\n"
