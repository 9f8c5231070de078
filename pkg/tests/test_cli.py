import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from prothx.cli import main, proth_candidates, verify
from prothx.oracle import oracle_is_prime
from prothx.report import Report


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    return code, [json.loads(line) for line in text.splitlines()]


def test_test_prime():
    code, [d] = run_json("test", "337")
    assert code == 0
    assert d["verdict"] == {"kind": "Prime", "witness": "5"}
    assert (d["k"], d["n"]) == ("21", 4)
    assert d["regime"] == {"cube_ok": True, "square_ok": False, "classic_ok": False}
    assert d["test_used"] == "extended"


def test_test_euler_composite():
    code, [d] = run_json("test", "1649")
    assert code == 0
    assert d["verdict"]["kind"] == "Composite"
    assert d["verdict"]["evidence"] == {"type": "EulerWitness", "a": "3", "residue": "1614"}


@pytest.mark.parametrize("arg", ["12", "11", "1"])
def test_test_inapplicable(arg):
    code, _ = run("test", arg)
    assert code == 3


def test_oracle_fallback():
    code, [d] = run_json("test", "11", "--oracle-fallback")
    assert code == 0
    assert d["test_used"] == "oracle" and d["verdict"]["kind"] == "Prime"
    code, [d] = run_json("test", "12", "--oracle-fallback")
    assert code == 0
    assert d["verdict"]["evidence"] == {"type": "SharedFactor", "g": "2"}
    code, _ = run("test", "1", "--oracle-fallback")
    assert code == 3


@pytest.mark.parametrize("arg", ["abc", "-5", "3.0", "0x151", ""])
def test_test_bad_input(arg, capsys):
    code, _ = run("test", arg)
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_hex_flag():
    code, [d] = run_json("test", "0x151", "--hex")
    assert code == 0 and d["N"] == "337"


def test_pair():
    code, text = run("pair", "3", "41")
    assert code == 0
    assert "6597069766657" in text and "Prime" in text
    code, [d] = run_json("pair", "21", "4")
    assert d["N"] == "337" and d["input"] == {"k": "21", "n": 4}
    assert d["verdict"]["kind"] == "Prime"


@pytest.mark.parametrize("k, n", [("4", "4"), ("0", "3"), ("3", "0")])
def test_pair_rejects(k, n):
    assert run("pair", k, n)[0] == 2


def test_search_small():
    code, ds = run_json("search", "3", "100")
    assert code == 0
    found = [int(d["N"]) for d in ds]
    assert {3, 5, 13, 17, 41, 97} <= set(found)
    assert found == sorted(found)
    assert all(oracle_is_prime(N) for N in found)


def test_search_new_regime_only():
    code, ds = run_json("search", "300", "400", "--new-regime-only")
    assert 337 in [int(d["N"]) for d in ds]
    assert all(not d["regime"]["classic_ok"] for d in ds)


def test_search_empty_range():
    assert run("search", "50", "40")[0] == 2


def canon(lines):
    return [Report.from_json(line).canonical() for line in lines.splitlines()]


def test_search_deterministic_across_workers():
    _, one = run("search", "3", "300000", "--json")
    _, four = run("search", "3", "300000", "--json", "--workers", "4")
    assert one and canon(one) == canon(four)


def test_candidates_match_enumeration():
    brute, new = [], []
    for N in range(3, 50_001, 2):
        k, n = N - 1, 0
        while k % 2 == 0:
            k, n = k // 2, n + 1
        if 8**n > N:
            brute.append(N)
            if 2**n <= k:
                new.append(N)
    assert list(proth_candidates(3, 50_000)) == brute
    assert list(proth_candidates(1000, 2000)) == [N for N in brute if 1000 <= N <= 2000]
    assert list(proth_candidates(3, 50_000, new_regime_only=True)) == new


def test_bls_commands():
    code, [d] = run_json("bls", "19", "2", "3", "2", "--base", "2")
    assert code == 0 and d["verdict"] == {"kind": "Prime", "witness": "2"}
    code, [d] = run_json("bls", "25", "8", "3", "1", "--base-limit", "20")
    assert code == 4 and d["verdict"]["kind"] == "Inconclusive"
    assert run("bls", "19", "3", "3", "2")[0] == 2
    assert run("bls", "17", "4", "4", "1")[0] == 2  # 17 = 4*4 + 1 but 4 is not prime
    assert run("bls", "19", "2", "3", "2", "--base", "19")[0] == 2


def test_verify():
    code, text = run("verify", "2000")
    assert code == 0 and "disagreements=0" in text
    code, [d] = run_json("verify", "2")
    assert code == 0 and d["tested"] == 0
    counts, bad = verify(20_000, workers=2)
    assert bad == [] and counts["tested"] == len(list(proth_candidates(3, 20_000)))


def test_verify_reports_disagreement(monkeypatch):
    import prothx.cli as cli
    monkeypatch.setattr(cli, "oracle_is_prime", lambda N: N == 9 or oracle_is_prime(N))
    code, text = run("verify", "100")
    assert code == 5 and "N = 9" in text


def test_usage_errors():
    assert run()[0] == 2
    assert run("bogus")[0] == 2
    assert run("test", "13", "--workers", "0")[0] == 2


def test_human_and_json_state_same_facts():
    _, human = run("test", "1649")
    _, [d] = run_json("test", "1649")
    for fact in ("1649", "103", "Composite", "1614", "cube_ok=True"):
        assert fact in human
    assert "Euler witness a=3" in human and d["verdict"]["evidence"]["a"] == "3"


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10**12).map(lambda k: 2 * k - 1), st.integers(1, 60),
       st.sampled_from([(), ("--oracle-fallback",)]))
def test_report_roundtrip(k, n, flags):
    code, text = run("pair", str(k), str(n), "--json", *flags)
    for line in text.splitlines():
        r = Report.from_json(line)
        assert Report.from_json(r.to_json()) == r
        assert r.to_json() == line


@pytest.mark.parametrize("argv", [["test", "1649"], ["pair", "1", "1"], ["test", "9"],
                                  ["bls", "25", "8", "3", "1"], ["bls", "37", "4", "3", "2"],
                                  ["test", "1649", "--oracle-fallback"], ["test", "33"],
                                  ["test", "10", "--oracle-fallback"]])
def test_report_roundtrip_examples(argv):
    _, text = run(*argv, "--json")
    r = Report.from_json(text)
    assert Report.from_json(r.to_json()) == r


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "prothx", "test", "337", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"]["kind"] == "Prime"
