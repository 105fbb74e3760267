"""End-to-end checks of the twobridge command line.

Conventions under test: exit code 0 on success, 1 on a failed
verification, 2 on bad usage; JSON payloads carry "schema"; CSV
starts with a schema comment line; repeated runs with the same
arguments and seed are byte-identical.
"""

import json

from click.testing import CliRunner

from twobridge import sigtables
from twobridge.cli import main

EXAMPLE_WORD = "+--+-+-+--++-++-"

runner = CliRunner()


def invoke(*args):
    return runner.invoke(main, list(args))


def test_enumerate_lists_words():
    result = invoke("enumerate", "--c", "5")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["+-++--+", "+--+--+", "+--++-+"]


def test_enumerate_count_only():
    result = invoke("enumerate", "--c", "12", "--count-only")
    assert result.exit_code == 0
    assert result.output.strip() == "341"


def test_enumerate_rejects_small_c():
    result = invoke("enumerate", "--c", "2")
    assert result.exit_code == 2
    assert "crossing number" in result.stderr


def test_sig_table_csv_round_trips():
    result = invoke("sig-table", "--c", "5..6", "--method", "both")
    assert result.exit_code == 0
    blocks = result.output.split("# twobridge sig-table")
    assert len(blocks) == 3  # leading empty piece plus one block per c
    rows = dict(sigtables.row_from_csv("# twobridge sig-table" + block)
                for block in blocks[1:])
    assert rows == {5: {2: 2, 4: 1}, 6: {-2: 1, 0: 3, 2: 1}}


def test_sig_table_json_payload():
    result = invoke("sig-table", "--c", "4", "--method", "recurse",
                    "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["schema"] == 1
    assert payload["rows"] == {"4": {"0": 1}}


def test_sig_table_cache_store_and_hit(tmp_path):
    first = invoke("sig-table", "--c", "6", "--method", "enumerate",
                   "--cache-dir", str(tmp_path))
    assert first.exit_code == 0
    assert (tmp_path / "sig-c06.csv").exists()
    second = invoke("sig-table", "--c", "6", "--method", "enumerate",
                    "--cache-dir", str(tmp_path))
    assert second.exit_code == 0
    assert second.output == first.output
    assert second.stderr == ""


def test_sig_table_rederives_tampered_cache(tmp_path):
    first = invoke("sig-table", "--c", "6", "--method", "enumerate",
                   "--cache-dir", str(tmp_path))
    path = tmp_path / "sig-c06.csv"
    path.write_text(path.read_text().replace("-2,1", "-2,9"))
    again = invoke("sig-table", "--c", "6", "--method", "enumerate",
                   "--cache-dir", str(tmp_path))
    assert again.exit_code == 0
    assert "rejected" in again.stderr
    assert again.stdout == first.stdout
    # the bad file was overwritten with a valid row
    assert sigtables.load_cached_row(tmp_path, 6) == {-2: 1, 0: 3, 2: 1}


def test_cache_env_var_beats_option(tmp_path, monkeypatch):
    option_dir = tmp_path / "opt"
    env_dir = tmp_path / "env"
    option_dir.mkdir()
    env_dir.mkdir()
    monkeypatch.setenv("TB_CACHE_DIR", str(env_dir))
    result = invoke("sig-table", "--c", "5", "--method", "enumerate",
                    "--cache-dir", str(option_dir))
    assert result.exit_code == 0
    assert (env_dir / "sig-c05.csv").exists()
    assert not (option_dir / "sig-c05.csv").exists()


def test_sig_table_workers_match_serial():
    serial = invoke("sig-table", "--c", "10", "--method", "enumerate",
                    "--workers", "1")
    sharded = invoke("sig-table", "--c", "10", "--method", "enumerate",
                     "--workers", "4")
    assert serial.exit_code == 0 and sharded.exit_code == 0
    assert serial.output == sharded.output


def test_avg_sig_csv():
    result = invoke("avg-sig", "--c", "6")
    assert result.exit_code == 0
    header, columns, row = result.output.splitlines()
    assert header == "# twobridge avg-sig schema=1"
    assert columns == "c,avg_num,avg_den,avg_float,root,gap"
    fields = row.split(",")
    assert fields[:3] == ["6", "2", "3"]
    assert float(fields[5]) < 0  # c=6 sits below sqrt(2c/pi)


def test_avg_sig_json():
    result = invoke("avg-sig", "--c", "5..6", "--format", "json")
    payload = json.loads(result.output)
    assert payload["schema"] == 1
    assert payload["rows"]["6"]["avg"] == "2/3"


def test_g4_single_word_report():
    result = invoke("g4", "--word", EXAMPLE_WORD, "--s", "3")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["c"] == 12 and payload["s"] == 3
    assert payload["t"] == 3 and payload["r"] == 3
    assert payload["cut_saddles"] == 6
    assert payload["link_saddles"] == 2
    assert payload["residual"] == ["o2:aba"]
    assert payload["g4_lower"] == 1 and payload["g4_upper"] == 6


def test_g4_rejects_bad_word():
    result = invoke("g4", "--word", "+-+")
    assert result.exit_code == 2
    assert "invalid word" in result.stderr


def test_g4_needs_exactly_one_target():
    assert invoke("g4").exit_code == 2
    assert invoke("g4", "--word", "+--+", "--c", "5").exit_code == 2


def test_g4_aggregate_below_bound():
    result = invoke("g4", "--c", "9")
    payload = json.loads(result.output)
    assert payload["mean_upper"] == "316/43"
    assert payload["below_bound"] is True


def test_g4_aggregate_refuses_huge_c():
    result = invoke("g4", "--c", "40")
    assert result.exit_code == 2
    assert "refusing" in result.stderr


def test_markov_verify_passes():
    result = invoke("markov-verify", "--s", "4", "--kmax", "4")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["passed"] is True
    assert set(payload["checks"]) == {"empirical", "closed_form",
                                      "contraction", "power_identity"}


def test_walk_sim_exact():
    result = invoke("walk-sim", "--s", "2", "--t", "3", "--exact")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["mean_exact"] == "45/16"
    assert payload["pass"] is True


def test_walk_sim_exact_over_budget():
    result = invoke("walk-sim", "--s", "5", "--t", "5", "--exact")
    assert result.exit_code == 2
    assert "--exact" in result.stderr


def test_walk_sim_monte_carlo_deterministic():
    args = ("walk-sim", "--s", "3", "--t", "10", "--trials", "400",
            "--seed", "7")
    first = invoke(*args)
    second = invoke(*args)
    assert first.exit_code == 0
    assert first.output == second.output
    payload = json.loads(first.output)
    assert payload["mode"] == "monte-carlo"
    assert payload["mean"] <= payload["bound"]


def test_verify_all_reduced_budget():
    result = invoke("verify-all", "--budget-c", "8")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["passed"] is True
    assert len(payload["checks"]) == 11
    assert all(entry["passed"] for entry in payload["checks"])
    names = [entry["name"] for entry in payload["checks"]]
    assert names[0] == "counting" and names[-1] == "aggregate-g4"


def test_verify_all_rejects_tiny_budget():
    assert invoke("verify-all", "--budget-c", "2").exit_code == 2


def test_outputs_are_deterministic():
    for args in (("enumerate", "--c", "7"),
                 ("sig-table", "--c", "8"),
                 ("avg-sig", "--c", "3..9"),
                 ("g4", "--word", EXAMPLE_WORD)):
        first = invoke(*args)
        second = invoke(*args)
        assert first.exit_code == 0
        assert first.output == second.output, args
