import subprocess
import sys

import pytest

from conftest import Q2_WORDS, Q3_WORDS
from mixramsey.cli import build_parser, run
from mixramsey.colouring import format_words, parse_mrc


def cli(*args, cwd=None):
    proc = subprocess.run([sys.executable, "-m", "mixramsey", *map(str, args)],
                          capture_output=True, text=True, cwd=cwd)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def k14_file(tmp_path):
    p = tmp_path / "k14.words"
    p.write_text(format_words(Q2_WORDS))
    return p


def test_expand_verify_extract_pipeline(tmp_path, k14_file, capsys):
    mrc = tmp_path / "k14.mrc"
    assert run(["expand", "--q", "2", "--words", str(k14_file), "--out", str(mrc)]) == 0
    assert parse_mrc(mrc.read_text()).n == 14
    assert run(["verify", "--input", str(mrc), "--lemma-samples", "50"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("admissible true\ncolours 23\n")
    assert "lemma 50/50" in out
    assert run(["extract", "--input", str(mrc), "--q", "2"]) == 0
    assert capsys.readouterr().out == format_words(Q2_WORDS)


def test_verify_negative_exit(tmp_path, k14_file, capsys):
    mrc = tmp_path / "k14.mrc"
    run(["expand", "--q", "2", "--words", str(k14_file), "--out", str(mrc)])
    assert run(["verify", "--input", str(mrc), "--m", "3"]) == 1
    assert "mono 0 2 9" in capsys.readouterr().out


def test_q3_words(tmp_path, capsys):
    w = tmp_path / "q3.words"
    w.write_text(format_words(Q3_WORDS))
    mrc = tmp_path / "q3.mrc"
    assert run(["expand", "--q", "3", "--words", str(w), "--out", str(mrc)]) == 0
    assert run(["verify", "--input", str(mrc)]) == 0
    assert "colours 54" in capsys.readouterr().out


def test_input_errors(tmp_path, k14_file, capsys):
    assert run(["plane", "--q", "6"]) == 2
    assert run(["verify", "--input", str(tmp_path / "missing.mrc")]) == 2
    assert run(["expand", "--q", "3", "--words", str(k14_file)]) == 2
    bad = tmp_path / "bad.mrc"
    bad.write_text("not a colouring\n")
    assert run(["verify", "--input", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err


def test_budget_and_resume(tmp_path, capsys):
    cp = tmp_path / "cp.txt"
    assert run(["search", "--q", "2", "--all", "--node-budget", "100", "--checkpoint", str(cp)]) == 3
    assert cp.read_text().startswith("checkpoint 1\n")
    capsys.readouterr()
    assert run(["search", "--q", "2", "--all", "--resume", str(cp)]) == 0
    resumed = capsys.readouterr().out
    assert run(["search", "--q", "2", "--all"]) == 0
    assert capsys.readouterr().out == resumed
    assert run(["search", "--q", "2", "--count", "--resume", str(cp)]) == 2


def test_search_negative_and_count(capsys):
    assert run(["search", "--q", "2", "--palette", "1"]) == 1
    assert run(["search", "--q", "2", "--count"]) == 0
    assert capsys.readouterr().out.strip().endswith("count 426")


def test_threads_give_identical_bytes():
    outs = {t: cli("search", "--q", "2", "--all", "--threads", t) for t in (1, 4)}
    assert outs[1][0] == outs[4][0] == 0
    assert outs[1][1] == outs[4][1]
    assert outs[1][1].count("q 2") == 426


def test_other_commands(tmp_path, capsys):
    assert run(["cycle", "--q", "3"]) == 0
    out = capsys.readouterr().out
    assert "rotational true" in out and out.rstrip().endswith("true")
    assert run(["brute", "--n", "4", "--m", "4"]) == 0
    assert capsys.readouterr().out.startswith("maxr = 5\n")
    assert run(["bound", "--n", "14", "--m", "4"]) == 0
    assert capsys.readouterr().out.splitlines()[:3] == ["bound 148.162073", "pairs 91", "base_case true"]
    assert run(["sat", "--q", "2"]) == 0
    assert "p cnf 10 26" in capsys.readouterr().out
    mrc = tmp_path / "fano.mrc"
    assert run(["fano", "--out", str(mrc)]) == 0
    assert run(["verify", "--input", str(mrc)]) == 0


def test_module_entry_point():
    code, out, _ = cli("plane", "--q", "2")
    assert code == 0 and out.startswith("plane q=2")


SUBCOMMAND_FLAGS = {
    "plane": ["--q"],
    "cycle": ["--q", "--exponent"],
    "fano": ["--out"],
    "expand": ["--q", "--words", "--out"],
    "extract": ["--input", "--q"],
    "verify": ["--input", "--m", "--lemma-samples", "--rng-seed"],
    "search": ["--q", "--m", "--palette", "--all", "--count", "--node-budget", "--threads",
               "--resume", "--checkpoint", "--offsets", "--rng-seed"],
    "brute": ["--n", "--m"],
    "sat": ["--q", "--m", "--out"],
    "bound": ["--n", "--m"],
}


@pytest.mark.parametrize("name", sorted(SUBCOMMAND_FLAGS))
def test_help_lists_flags(name, capsys):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args([name, "--help"])
    assert exc.value.code == 0
    text = capsys.readouterr().out
    for flag in SUBCOMMAND_FLAGS[name]:
        assert flag in text
