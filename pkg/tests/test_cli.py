import io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from expr_oracle import within
from realcomp.cli import main

GOLDEN = json.loads((Path(__file__).parent / "golden" / "eval_corpus.json").read_text(encoding="utf-8"))


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("case", GOLDEN, ids=lambda c: f"{c['expr']}@{c['prec']}")
def test_golden_eval(case):
    code, out = run("eval", case["expr"], "--prec", str(case["prec"]))
    assert code == 0
    assert out == case["stdout"]
    assert within(Fraction(out.splitlines()[0]), case["expr"], case["prec"])


def test_eval_default_precision():
    assert run("eval", "1/3") == (0, "1/3\n0.33333333 ±2^-20\n")


def test_eval_parse_error_exit_code(capsys):
    code, out = run("eval", "1/0")
    assert code == 2
    assert out == ""
    assert "zero denominator at byte 2" in capsys.readouterr().err


@pytest.mark.parametrize("prec", ["-1", "257", "x"])
def test_eval_rejects_bad_precision(prec):
    with pytest.raises(SystemExit) as info:
        main(["eval", "1", "--prec", prec], out=io.StringIO())
    assert info.value.code == 2


def test_trace_seq2fun():
    code, out = run("trace", "seq2fun", "--i", "3", "--q", "1/10")
    assert code == 0
    assert out == "round 1: ? (*)\nround 2: ! 15/8\n"


def test_trace_runs_out_of_loops():
    code, out = run("trace", "seq2fun", "--i", "3", "--q", "1/10", "--loops", "1")
    assert code == 3
    assert out == "round 1: ? (*)\n"


@pytest.mark.parametrize("q", ["abc", "1/0", "0", "-1/2"])
def test_trace_rejects_bad_questions(q):
    assert run("trace", "seq2fun", "--i", "0", f"--q={q}")[0] == 2


def test_eval_leading_minus_after_separator():
    assert run("eval", "--prec", "4", "--", "-1/2") == (0, "-1/2\n-0.500 ±2^-4\n")


def test_dist():
    assert run("dist", "--cutoff", "8", "id", "square") == (0, "2^-2 (exact)\n")
    assert run("dist", "--cutoff", "8", "id", "id") == (0, "<= 2^-8 (certified)\n")
    assert run("dist", "--cutoff", "4", "step5", "zero") == (0, "<= 2^-4 (certified)\n")
    assert run("dist", "--cutoff", "6", "step5", "zero") == (0, "2^-5 (exact)\n")


def test_choice_demo_scan():
    code, out = run("choice-demo", "--budget", "10", "--candidate", "scan-4")
    assert code == 0
    assert out.splitlines() == [
        "fooling name: 2 3 4 5 1 1 1 1 1 1 1 1 1 1 1 1",
        "answer on {0}: 0",
        "answer on fooling name: 0",
        "fooling set contains: 5",
        "verdict: fooled",
    ]


def test_choice_demo_always_zero():
    code, out = run("choice-demo", "--budget", "0", "--candidate", "always-zero")
    assert code == 0
    assert out.splitlines()[0] == "fooling name: " + " ".join(["1"] * 16)
    assert out.splitlines()[-1] == "verdict: fooled"


def test_choice_demo_budget_exhausted():
    code, out = run("choice-demo", "--budget", "2", "--candidate", "scan-4")
    assert code == 3
    assert out.splitlines()[-1] == "verdict: budget exhausted"


def test_choice_demo_unknown_candidate():
    assert run("choice-demo", "--budget", "2", "--candidate", "oracle")[0] == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "realcomp", "eval", "lim(e1) * lim(e1)", "--prec", "50"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.decode("utf-8") == next(
        c["stdout"] for c in GOLDEN if c["expr"] == "lim(e1) * lim(e1)" and c["prec"] == 50
    )
