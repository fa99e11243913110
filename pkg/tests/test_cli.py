from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from chromtree.cli import run

FIXTURES = Path(__file__).parent / "fixtures"
TREE_FIXTURES = ["k2", "p3", "p4", "claw", "spider_321", "caterpillar_123", "stp_twin_a", "stp_twin_b"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def fixture(name):
    return FIXTURES / f"{name}.txt"


def test_xg_single_edge():
    code, out, _ = call("xg", fixture("k2"))
    assert code == 0
    assert set(out.splitlines()) == {"1 p[1,1]", "-1 p[2]"}
    assert out == "-1 p[2]\n1 p[1,1]\n"


def test_from_xg_stp_on_path(tmp_path):
    _, x, _ = call("xg", fixture("p3"))
    xfile = tmp_path / "x.txt"
    xfile.write_text(x)
    code, out, _ = call("from-xg", "stp", xfile)
    assert code == 0 and out == "2 q^1 r^1\n1 q^2 r^2\n"


@pytest.mark.parametrize("name", TREE_FIXTURES)
def test_piped_xg_matches_direct_polynomials(name, tmp_path):
    _, x, _ = call("xg", fixture(name))
    xfile = tmp_path / "x.txt"
    xfile.write_text(x)
    assert call("from-xg", "stp", xfile)[1] == call("stp", fixture(name))[1]
    assert call("from-xg", "conn", xfile)[1] == call("conn", fixture(name))[1]


def test_stp_twins_share_subtree_polynomial_only():
    assert call("stp", fixture("stp_twin_a"))[1] == call("stp", fixture("stp_twin_b"))[1]
    assert call("xg", fixture("stp_twin_a"))[1] != call("xg", fixture("stp_twin_b"))[1]


def test_girth_and_sequences(tmp_path):
    for name, want in [("k3", "3"), ("c4_pendant", "4"), ("p4", "inf")]:
        xfile = tmp_path / f"{name}.txt"
        xfile.write_text(call("xg", fixture(name))[1])
        assert call("from-xg", "girth", xfile)[1].strip() == want
    xfile = tmp_path / "claw_x.txt"
    xfile.write_text(call("xg", fixture("claw"))[1])
    code, out, _ = call("from-xg", "sequences", xfile)
    assert code == 0
    assert out.splitlines() == ["path 3 3", "star 3 3 1", "degree 3 0 1"]


@pytest.mark.parametrize(
    "flag,value,kind,want",
    [
        ("--spider", "3,2,1", "spider-2part", "spider[3,2,1]"),
        ("--spider", "2,2,1,1", "spider-stp", "spider[2,2,1,1]"),
        ("--caterpillar", "1,2,3", "caterpillar", "caterpillar(1,2,3)"),
        ("--squid", "3:2,1", "squid", "squid(g=3;[2,1])"),
        ("--crab", "3:1,2,3", "crab", "crab(g=3;(1,2,3))"),
    ],
)
def test_reconstruct_inline_specs(flag, value, kind, want, tmp_path):
    xfile = tmp_path / "x.txt"
    xfile.write_text(call("xg", flag, value)[1])
    code, out, _ = call("reconstruct", kind, xfile)
    assert (code, out.strip()) == (0, want)


def test_reconstruct_spider_from_subtree_file(tmp_path):
    sfile = tmp_path / "s.txt"
    sfile.write_text(call("stp", fixture("spider_321"))[1])
    for method in ("literal", "direct"):
        assert call("reconstruct", "spider-stp", sfile, "--method", method)[1] == "spider[3,2,1]\n"


def test_reconstruct_failure_exits_one(tmp_path):
    xfile = tmp_path / "x.txt"
    xfile.write_text(call("xg", fixture("p4"))[1])
    code, _, err = call("reconstruct", "squid", xfile)
    assert code == 1 and "reconstruction failed" in err


def test_malformed_inputs_exit_two(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 two\n")
    code, _, err = call("xg", bad)
    assert code == 2 and ":2:3:" in err
    bad.write_text("1 p[2]\n3 p[1,\n")
    code, _, err = call("from-xg", "stp", bad)
    assert code == 2 and ":2:1:" in err
    assert call("xg", tmp_path / "missing.txt")[0] == 2
    assert call("stp", fixture("k3"))[0] == 2
    assert call("xg", "--spider", "1,x")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("xg", fixture("k2"), "--spider", "1,1,1")[0] == 2


def test_scan_verbs_and_exit_codes(tmp_path):
    code, out, _ = call("scan", "trees", "--max-n", 11, "--invariant", "csf")
    assert code == 0 and "0 collisions" in out
    code, out, _ = call("scan", "trees", "--max-n", 11, "--invariant", "stp", "--no-timing")
    assert code == 0 and "smallest order with equal subtree polynomials: 11" in out
    assert call("scan", "trees", "--max-n", 11, "--invariant", "stp", "--expect-none")[0] == 1
    jsonl = tmp_path / "g.jsonl"
    code, out, _ = call("scan", "graphs", "--max-n", 5, "--jsonl", jsonl)
    assert code == 0
    records = [json.loads(line) for line in jsonl.read_text().splitlines()]
    assert records and all(r["order"] == 5 for r in records)
    assert call("scan", "graphs", "--max-n", 5, "--expect-none")[0] == 1
    assert call("scan", "trees", "--max-n", 99)[0] == 2
    assert call("scan", "graphs", "--max-n", 4, "--invariant", "stp")[0] == 2


def test_verify_and_conjecture_verbs():
    assert call("verify", "main-thm", "--max-n", 7)[0] == 0
    code, out, _ = call("verify", "identities", "--max-n", 6, "--no-timing")
    assert code == 0 and "0 failures" in out
    assert call("conjecture", "--max-n", 8)[0] == 0
    assert call("conjecture", "--max-n", 13)[0] == 2


def test_verify_failure_exits_one(monkeypatch):
    from chromtree import search

    monkeypatch.setattr(search, "given_size_holds", lambda x: False)
    assert call("verify", "identities", "--max-n", 4)[0] == 1


def test_enumerate_verb():
    code, out, _ = call("enumerate", "trees", "--n", 7)
    assert code == 0 and len(out.splitlines()) == 11
    assert call("enumerate", "spiders", "--n", 5)[1] == "spider[2,1,1]\nspider[1,1,1,1]\n"
    assert call("enumerate", "crabs", "--n", 0)[0] == 2


def test_output_is_deterministic():
    a = call("xg", fixture("caterpillar_123"))[1]
    assert a == call("xg", fixture("caterpillar_123"))[1]


def test_stdin_input(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0 1\n"))
    assert call("xg", "-")[1] == "-1 p[2]\n1 p[1,1]\n"


def test_help_lists_every_verb():
    proc = subprocess.run([sys.executable, "-m", "chromtree", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for verb in ("xg", "stp", "conn", "from-xg", "reconstruct", "scan", "verify", "conjecture", "enumerate", "CHROMTREE_WORKERS"):
        assert verb in proc.stdout
