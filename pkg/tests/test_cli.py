"""Command-line behavior: output formats, exit codes, config handling."""

import csv
import json

from supercong.cli import main
from supercong.suite import default_certificate_path

MUTATED_CERT = """\
# deliberately broken q
F: (-1)^k * (8*n+1) * poch(1/4,n)^3 * poch(1/4,n+k) / (poch(1,n)^3 * poch(1,n-k) * poch(1/4,k)^2)
G: (-1)^(k-1) * 16 * poch(1/4,n)^3 * poch(1/4,n+k-1) / (poch(1,n-1)^3 * poch(1,n-k) * poch(1/4,k)^2)
p: 4*k-3
q: 4*k-1
"""


def test_gamma_command(capsys):
    assert main(["gamma", "--p", "3", "--prec", "2", "--x", "1/2"]) == 0
    assert capsys.readouterr().out.strip() == "v=0 u=1 (mod 3^2)"
    assert main(["gamma", "--p", "7", "--prec", "1", "--x", "1"]) == 0
    assert capsys.readouterr().out.strip() == "v=0 u=6 (mod 7^1)"


def test_gamma_domain_error(capsys):
    assert main(["gamma", "--p", "3", "--prec", "2", "--x", "1/3"]) == 2
    assert "not a p-adic integer" in capsys.readouterr().err


def test_sum_command(capsys):
    assert main(["sum", "--p", "3", "--prec", "7", "--m", "60"]) == 0
    assert capsys.readouterr().out.strip() == "v=6 u=1 (mod 3^7)"


def test_check_command_holds(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["check", "--case", "thm1_1", "--p", "3", "--r", "3",
                 "--out", str(out)])
    assert code == 0
    assert "holds" in capsys.readouterr().out
    [report] = json.loads(out.read_text())
    for key in ("case", "p", "r", "t", "modulus_exponent", "lhs", "rhs",
                "holds", "excess_valuation", "wall_ms", "skipped"):
        assert key in report
    assert report["holds"] is True
    assert report["lhs"].startswith("3^3 * ")


def test_check_command_violated(tmp_path):
    code = main(["check", "--case", "lemma3_2", "--p", "3", "--r", "3",
                 "--out", str(tmp_path / "r.json")])
    assert code == 1


def test_check_command_precondition(capsys):
    assert main(["check", "--case", "thm1_1", "--p", "5", "--r", "3"]) == 2
    assert main(["check", "--case", "nonsense", "--p", "3"]) == 2


def test_check_csv_format(tmp_path):
    out = tmp_path / "report.csv"
    main(["check", "--case", "g2", "--p", "5", "--out", str(out),
          "--format", "csv"])
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 1 and rows[0]["case"] == "g2" and rows[0]["holds"] == "True"


def test_certify_command(tmp_path, capsys):
    assert main(["certify", str(default_certificate_path()), "--grid", "10"]) == 0
    assert "symbolic: PASS, numeric: PASS" in capsys.readouterr().out

    bad = tmp_path / "mutated.cert"
    bad.write_text(MUTATED_CERT)
    assert main(["certify", str(bad), "--grid", "6"]) == 1

    malformed = tmp_path / "malformed.cert"
    malformed.write_text("F: poch(1/4,,n)\nG: poch(1,n)\np: k\nq: k\n")
    assert main(["certify", str(malformed)]) == 2
    assert "line" in capsys.readouterr().err


def test_config_file_and_env(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("guard_digits = 5\ndesk_cap = 1000\nworkers = 2\n")
    # cap from config makes the (3,7) case (scale 2187) skip
    code = main(["check", "--case", "thm1_2", "--p", "3", "--r", "7",
                 "--config", str(cfg), "--out", str(tmp_path / "o.json")])
    assert code == 0
    assert "SKIPPED" in capsys.readouterr().out

    monkeypatch.setenv("SUPERCONG_CONFIG", str(cfg))
    code = main(["check", "--case", "thm1_2", "--p", "3", "--r", "7",
                 "--out", str(tmp_path / "o2.json")])
    assert code == 0
    assert "SKIPPED" in capsys.readouterr().out

    # explicit flag overrides the config cap
    code = main(["check", "--case", "thm1_2", "--p", "3", "--r", "7",
                 "--cap", str(10 ** 7), "--out", str(tmp_path / "o3.json")])
    assert code == 0
    assert "holds" in capsys.readouterr().out


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("mystery = 1\n")
    assert main(["check", "--case", "g2", "--p", "5", "--config", str(cfg)]) == 2


def test_suite_skip_semantics(tmp_path, capsys):
    """A lowered cap marks heavy cases skipped without failing the sweep."""
    out = tmp_path / "suite.json"
    main(["suite", "--cap", "1000", "--out", str(out)])
    reports = json.loads(out.read_text())
    skipped = [r for r in reports if r.get("skipped")]
    assert skipped, "expected cap-bound cases to be skipped"
    assert all(r["holds"] is None for r in skipped)
    # skipped entries never count as failures
    err = capsys.readouterr().err
    for r in skipped:
        assert f"FAILED: {r['case']} p={r['p']} r={r['r']}" not in err


def test_suite_csv_output(tmp_path):
    out = tmp_path / "suite.csv"
    main(["suite", "--cap", "1000", "--out", str(out), "--format", "csv"])
    rows = list(csv.DictReader(out.open()))
    assert len(rows) > 20
    assert set(rows[0]) == {"case", "p", "r", "t", "modulus_exponent", "lhs",
                            "rhs", "holds", "excess_valuation", "wall_ms",
                            "skipped"}
    assert any(r["case"] == "certificate" and r["holds"] == "True" for r in rows)
