import json
from fractions import Fraction

from epgate import models, serialize
from epgate.cli import main
from helpers import GOLDEN_Q_BH


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def test_gen_text_golden(capsys):
    code, out, _ = run_cli(capsys, "gen", "--model", "q-bh", "--N", "2")
    assert code == 0
    assert out == "-1*I  1\n1  0\n"


def test_gen_matches_library_matrices(capsys):
    cases = {
        ("q-bh", "6"): models.bh_transition(6),
        ("q-ao", "5"): models.ao_transition(5),
        ("s-rc", "4"): models.intertwiner(4),
        ("r", "6"): models.intertwiner_core(6),
        ("pascal", "5"): models.pascal_matrix(5),
        ("jordan", "3"): models.jordan_block(3, 0),
    }
    for (model, n), expected in cases.items():
        code, out, _ = run_cli(capsys, "gen", "--model", model, "--N", n,
                               "--format", "json")
        assert code == 0
        assert serialize.parse_json(out) == expected


def test_gen_hamiltonians_with_parameters(capsys):
    code, out, _ = run_cli(capsys, "gen", "--model", "bh", "--N", "3",
                           "--z", "1/2", "--format", "json")
    assert code == 0
    assert serialize.parse_json(out) == models.bh_hamiltonian(3, Fraction(1, 2))
    code, out, _ = run_cli(capsys, "gen", "--model", "ao", "--N", "4",
                           "--lambda", "1/8", "--format", "json")
    assert code == 0
    assert serialize.parse_json(out) == models.ao_hamiltonian(4, Fraction(1, 8))


def test_gen_defaults_to_ep_parameters(capsys):
    code, out, _ = run_cli(capsys, "gen", "--model", "bh", "--N", "3",
                           "--format", "json")
    assert serialize.parse_json(out) == models.bh_hamiltonian(3, 1)


def test_gen_rejects_decimal_parameter(capsys):
    code, _, err = run_cli(capsys, "gen", "--model", "bh", "--N", "3",
                           "--z", "0.5")
    assert code == 2
    assert "exact rational" in err


def test_gen_rejects_mismatched_parameter(capsys):
    code, _, _ = run_cli(capsys, "gen", "--model", "ao", "--N", "3", "--z", "1")
    assert code == 2
    code, _, _ = run_cli(capsys, "gen", "--model", "pascal", "--N", "3",
                         "--z", "1")
    assert code == 2


def test_gen_out_file(capsys, tmp_path):
    target = tmp_path / "q.json"
    code, out, _ = run_cli(capsys, "gen", "--model", "q-bh", "--N", "2",
                           "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert serialize.parse_json(target.read_text()) == GOLDEN_Q_BH[2]


def test_gen_unwritable_out(capsys, tmp_path):
    code, _, err = run_cli(capsys, "gen", "--model", "q-bh", "--N", "2",
                           "--out", str(tmp_path / "no" / "dir" / "x.txt"))
    assert code == 2
    assert "error" in err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_all_small_range(capsys):
    code, out, _ = run_cli(capsys, "verify", "--N", "2..4")
    assert code == 0
    assert "FAIL" not in out
    assert "ep-schrodinger-bh" in out


def test_verify_all_checks_to_n6(capsys):
    code, out, _ = run_cli(capsys, "verify", "--N", "2..6", "--checks", "all")
    assert code == 0
    assert "FAIL" not in out
    # every check family shows up
    for name in ("ep-schrodinger-ao", "jordanization-bh",
                 "intertwiner-factorization", "intertwine",
                 "scenario-matching", "charpoly-similarity",
                 "ep-total-degeneracy"):
        assert name in out


def test_verify_selected_checks_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--N", "2..6",
                           "--checks", "intertwine,intertwiner-factorization",
                           "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 10
    assert all(r["passed"] for r in reports)
    assert {r["check"] for r in reports} == \
        {"intertwine", "intertwiner-factorization"}


def test_verify_literal_zero_interface_fails(capsys):
    code, out, _ = run_cli(capsys, "verify", "--N", "3",
                           "--checks", "scenario-matching",
                           "--literal-zero-ep")
    assert code == 1
    assert "FAIL" in out


def test_verify_bad_check_name(capsys):
    code, _, err = run_cli(capsys, "verify", "--N", "3",
                           "--checks", "no-such-check")
    assert code == 2


def test_verify_bad_range(capsys):
    code, _, _ = run_cli(capsys, "verify", "--N", "6..2")
    assert code == 2


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def test_spectrum_json_grid(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--model", "bh", "--N", "4",
                           "--grid", "1/4:3/4:1/4", "--format", "json")
    assert code == 0
    items = json.loads(out)
    assert [i["param"] for i in items] == [0.25, 0.5, 0.75]
    assert all("exploratory_equidistant_deviation" in i for i in items)
    assert all(i["max_imag"] <= 1e-8 for i in items)


def test_spectrum_accepts_decimal_grid(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--model", "ao", "--N", "3",
                           "--grid", "0.125:0.25:0.125", "--format", "json")
    assert code == 0
    items = json.loads(out)
    assert [i["param"] for i in items] == [0.125, 0.25]
    assert all("exploratory_equidistant_deviation" not in i for i in items)


def test_spectrum_bad_grid(capsys):
    code, _, _ = run_cli(capsys, "spectrum", "--model", "bh", "--N", "4",
                         "--grid", "1/4:3/4")
    assert code == 2
    code, _, _ = run_cli(capsys, "spectrum", "--model", "bh", "--N", "4",
                         "--grid", "3/4:1/4:1/4")
    assert code == 2


# ---------------------------------------------------------------------------
# scenario
# ---------------------------------------------------------------------------

def test_scenario_samples_json(capsys):
    code, out, _ = run_cli(capsys, "scenario", "--row", "2", "--N", "3",
                           "--t", "-1/4,0,1/4", "--format", "json")
    assert code == 0
    samples = json.loads(out)
    assert [s["t"] for s in samples] == ["-1/4", "0", "1/4"]
    middle = serialize.from_jsonable(samples[1]["matrix"])
    assert middle == models.jordan_block(3, 0)


def test_scenario_invalid_row_exits_2(capsys):
    code, _, err = run_cli(capsys, "scenario", "--row", "9", "--N", "3",
                           "--t", "0")
    assert code == 2
    assert "row" in err


def test_scenario_out_of_domain_time(capsys):
    code, _, _ = run_cli(capsys, "scenario", "--row", "1", "--N", "3",
                         "--t", "-5/2")
    assert code == 2


# ---------------------------------------------------------------------------
# condition
# ---------------------------------------------------------------------------

def test_condition_json(capsys):
    code, out, _ = run_cli(capsys, "condition", "--N", "2..4",
                           "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 9
    assert {e["family"] for e in entries} == {"q-bh", "q-ao", "s-rc"}


def test_condition_text(capsys):
    code, out, _ = run_cli(capsys, "condition", "--N", "2")
    assert code == 0
    assert out.startswith("condition q-bh  N=2")


# ---------------------------------------------------------------------------
# argparse plumbing
# ---------------------------------------------------------------------------

def test_usage_error_exit_code(capsys):
    assert main(["gen"]) == 2  # missing required arguments
    assert main([]) == 2
    assert main(["no-such-command"]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
