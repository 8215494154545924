import importlib.resources as resources

import pytest

from comeralg import cli


def rep_path(name):
    return str(resources.files("comeralg.reps").joinpath(name + ".rep"))


def test_check_pass(capsys):
    assert cli.run(["check", "--variant", "anti", "--m", "2", "--p", "29"]) == 0
    assert capsys.readouterr().out.strip() == "pass"


def test_check_table_value(capsys):
    assert cli.run(["check", "--variant", "ramsey", "--m", "10", "--p", "3221"]) == 0
    assert capsys.readouterr().out.strip() == "pass"


def test_check_fail(capsys):
    assert cli.run(["check", "--variant", "anti", "--m", "2", "--p", "13"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("fail: C1 at shift 0")


def test_check_precondition(capsys):
    assert cli.run(["check", "--variant", "anti", "--m", "2", "--p", "15"]) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert cli.run([]) == 2
    assert cli.run(["bogus"]) == 2
    assert cli.run(["check", "--variant", "anti", "--m", "2"]) == 2
    assert cli.run(["check", "--variant", "nope", "--m", "2", "--p", "29"]) == 2
    assert cli.run(["search", "--variant", "anti", "--m-min", "2", "--m-max", "1", "--out", "-"]) == 2
    capsys.readouterr()


def test_witness(capsys):
    assert cli.run(["witness", "--p", "7", "--n", "2", "--kind", "sum"]) == 0
    assert capsys.readouterr().out.strip() == "1 1 2"
    assert cli.run(["witness", "--p", "3", "--n", "2", "--kind", "sum"]) == 1
    assert capsys.readouterr().out.strip() == "none"


def test_cycles(capsys):
    assert cli.run(["cycles", "--p", "3", "--n", "2", "--full"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "p 3 n 2 g 2 k 1 zero-shift 1"
    assert out[1] == "shift 0: {1}"
    assert out[2] == "shift 1: {} zero"
    assert out[3:] == ["0 0 1", "1 1 0"]
    assert cli.run(["cycles", "--p", "29", "--n", "5"]) == 2  # 5 does not divide 28
    capsys.readouterr()


def test_verify_pass(capsys):
    assert cli.run(["verify", "--file", rep_path("33_37")]) == 0
    assert capsys.readouterr().out.strip() == "pass: 9 atom pairs"


def test_verify_fail(capsys):
    assert cli.run(["verify", "--file", rep_path("1313_1316_literal")]) == 1
    out = capsys.readouterr().out
    assert "fail partition" in out


def test_verify_paranoid(capsys):
    assert cli.run(["verify", "--file", rep_path("77_83"), "--paranoid"]) == 0
    capsys.readouterr()


def test_verify_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.rep"
    bad.write_text("modulus 29\nindex 4\natom a 0 1 2 3\n")
    assert cli.run(["verify", "--file", str(bad)]) == 2
    assert "no converse declaration" in capsys.readouterr().err
    assert cli.run(["verify", "--file", str(tmp_path / "missing.rep")]) == 2
    capsys.readouterr()


def test_embed(capsys):
    assert cli.run([
        "embed", "--file", rep_path("77_83"),
        "--variant", "anti", "--m", "2", "--p", "29",
    ]) == 0
    out = capsys.readouterr().out
    assert "atom r 0" in out and "atom sc 3" in out
    assert cli.run([
        "embed", "--file", rep_path("35_37"),
        "--variant", "anti", "--m", "2", "--p", "29",
    ]) == 1
    assert capsys.readouterr().out.strip() == "none"
    assert cli.run([
        "embed", "--file", rep_path("77_83"),
        "--variant", "symmetric", "--m", "2", "--p", "29",
    ]) == 2
    capsys.readouterr()


def test_search_csv(tmp_path):
    out = tmp_path / "anti.csv"
    code = cli.run([
        "search", "--variant", "anti", "--m-min", "2", "--m-max", "3",
        "--out", str(out),
    ])
    assert code == 0
    assert out.read_text() == (
        "variant,m,n,p,k,g,elapsed_ms\n"
        "anti,2,4,29,7,2,\n"
        "anti,3,6,67,11,2,\n"
    )


def test_search_csv_absent_p_gives_exit_1(tmp_path):
    out = tmp_path / "r.csv"
    code = cli.run([
        "search", "--variant", "ramsey", "--m-min", "2", "--m-max", "2",
        "--out", str(out),
    ])
    assert code == 1
    assert out.read_text() == "variant,m,n,p,k,g,elapsed_ms\nramsey,2,4,,,,\n"


def test_search_jobs_byte_identical(tmp_path):
    outs = []
    for jobs in ("1", "8"):
        f = tmp_path / f"j{jobs}.csv"
        cli.run([
            "search", "--variant", "anti", "--m-min", "1", "--m-max", "3",
            "--jobs", jobs, "--out", str(f),
        ])
        outs.append(f.read_bytes())
    assert outs[0] == outs[1]


def test_search_timing_fills_column(tmp_path):
    f = tmp_path / "t.csv"
    cli.run([
        "search", "--variant", "anti", "--m-min", "2", "--m-max", "2",
        "--out", str(f), "--timing",
    ])
    last_cell = f.read_text().splitlines()[1].split(",")[-1]
    assert last_cell.isdigit()


def test_search_interrupt_writes_partial(tmp_path, monkeypatch):
    calls = []

    def fake_search(m, v, p_max=None, jobs=1):
        if len(calls) >= 1:
            raise KeyboardInterrupt
        calls.append(m)
        return 29

    monkeypatch.setattr(cli, "search_smallest", fake_search)
    f = tmp_path / "part.csv"
    code = cli.run([
        "search", "--variant", "anti", "--m-min", "2", "--m-max", "5",
        "--out", str(f),
    ])
    assert code == 130
    text = f.read_text()
    assert text.startswith("variant,m,n,p,k,g,elapsed_ms\nanti,2,4,29,")
    assert text.endswith("# incomplete\n")


def test_plotdata(tmp_path):
    f = tmp_path / "plot.csv"
    code = cli.run([
        "plotdata", "--variant", "anti", "--m-min", "2", "--m-max", "4",
        "--out", str(f), "--jobs", "2",
    ])
    assert code == 0
    assert f.read_text() == "m,p\n2,29\n3,67\n4,233\n"


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "comeralg", "check", "--variant", "anti", "--m", "2", "--p", "29"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "pass"
