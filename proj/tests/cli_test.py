#!/usr/bin/env python3
"""End-to-end checks of the slopecount CLI contract."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = 0


def run(*args, expect_code=0, env=None):
    global failures
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run([BIN, *args], capture_output=True, text=True,
                          env=full_env)
    if proc.returncode != expect_code:
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}, "
              f"expected {expect_code}\n{proc.stderr}")
        failures += 1
    return proc


def check(cond, label):
    global failures
    if not cond:
        print(f"FAIL {label}")
        failures += 1


# count-zeros JSON schema and paper values
out = json.loads(run("count-zeros", "--n", "5", "--q", "2",
                     "--ideal", "J").stdout)
check(out["zeros"] == 472 and out["total"] == 1024, "count-zeros 5/2/J")
check(set(out) >= {"n", "q", "ideal", "zeros", "total", "elapsed_ms"},
      "count-zeros schema")

out = json.loads(run("count-zeros", "--n", "3", "--q", "2",
                     "--ideal", "I").stdout)
check(out["zeros"] == 8, "count-zeros 3/2/I")

out = json.loads(run("count-zeros", "--n", "4", "--q", "3",
                     "--ideal", "I", "--threads", "2").stdout)
check(out["zeros"] == 423, "count-zeros 4/3/I")

# csv format
csv = run("count-zeros", "--n", "4", "--q", "2", "--ideal", "J",
          "--format", "csv").stdout.splitlines()
check(csv[0] == "n,q,ideal,zeros,total,elapsed_ms", "csv header")
check(csv[1].startswith("4,2,J,52,64,"), "csv row")

# cache round trip: second run must serve the stored result
with tempfile.TemporaryDirectory() as tmp:
    cache = os.path.join(tmp, "cache.jsonl")
    first = json.loads(run("count-zeros", "--n", "4", "--q", "3",
                           "--ideal", "I", "--cache", cache).stdout)
    with open(cache) as fh:
        line = json.loads(fh.readline())
    check(line["subcommand"] == "count-zeros" and line["zeros"] == 423,
          "cache line")
    second = json.loads(run("count-zeros", "--n", "4", "--q", "3",
                            "--ideal", "I", "--cache", cache).stdout)
    check(second["zeros"] == first["zeros"], "cache hit")

# classify
out = json.loads(run("classify", "2:4:100101").stdout)
check(out["zero_I"] is False and out["zero_J"] is False, "classify P4 zeros")
check(out["is_cograph"] is False and out["graph"] == "4:12,23,34",
      "classify P4 graph")
out = json.loads(run("classify", "2:4:000000").stdout)
check(out["zero_I"] is True and out["is_cograph"] is True, "classify zero")
run("classify", "3:4:00x120", expect_code=65)

# verify
out = json.loads(run("verify", "--theorem", "1", "--n", "4").stdout)
check(out["pass"] and out["zeros_I"] == 52 and out["c5free_classes"] == 52,
      "verify theorem 1")
out = json.loads(run("verify", "--theorem", "cog5cyc", "--n", "4").stdout)
check(out["pass"], "verify cog5cyc")
out = json.loads(run("verify", "--theorem", "generalize").stdout)
check(out["pass"], "verify generalize")
run("verify", "--theorem", "1", "--n", "9", expect_code=2)

# table
out = json.loads(run("table", "--n", "4", "--q", "3").stdout)
rows = {r["type"]: (r["zeros"], r["nonzeros"]) for r in out["rows"]}
check(rows.get("(5,1)") == (36, 0), "table (5,1)")
check(rows.get("(3,2,1)") == (144, 216), "table (3,2,1)")
check(out["total_zeros"] == 423 and out["total_nonzeros"] == 306,
      "table totals")

# export-poly
out = run("export-poly", "--n", "4", "--ideal", "J").stdout.splitlines()
check(len(out) == 4, "export-poly n=4 J lines")
check("(m_1_2-m_2_3)*(m_1_3-m_3_4)*(m_1_4-m_2_4)-"
      "(m_1_2-m_2_4)*(m_1_3-m_2_3)*(m_1_4-m_3_4)" in out,
      "export-poly W(1;2,3,4)")
check(run("export-poly", "--n", "3").stdout == "", "export-poly n=3 empty")
out5 = run("export-poly", "--n", "5", "--ideal", "I").stdout.splitlines()
check(len(out5) == 35, "export-poly n=5 I lines")
again = run("export-poly", "--n", "5", "--ideal", "I").stdout.splitlines()
check(out5 == again, "export-poly deterministic")

# sp-sequence
out = json.loads(run("sp-sequence", "--n", "7").stdout)
check(out["s"] == [1, 2, 8, 52, 472, 5504, 78416], "sp-sequence")

# env var thread override must not change results
out = json.loads(run("count-zeros", "--n", "5", "--q", "2", "--ideal", "J",
                     env={"SLOPECOUNT_THREADS": "3"}).stdout)
check(out["zeros"] == 472, "env thread override")

# exit codes
run("count-zeros", "--n", "6", "--q", "5", "--ideal", "I", expect_code=2)
run("count-zeros", "--format", "bogus", expect_code=64)
run("nonsense", expect_code=64)

print("OK" if failures == 0 else f"{failures} failures")
sys.exit(1 if failures else 0)
