#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: exit codes, output formats,
determinism, and checkpoint merging."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1] if len(sys.argv) > 1 else "wreathchar"

failures = 0


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, ok, detail=""):
    global failures
    if ok:
        print(f"ok   {name}")
    else:
        failures += 1
        print(f"FAIL {name} {detail}")


def strip_timing(text):
    doc = json.loads(text)
    doc.pop("timing", None)
    return json.dumps(doc, sort_keys=True)


# decompose
r = run("decompose", "--p", "5", "--phi", "1,0,0,0,0", "--psi", "1,1,0,0,0", "--format", "json")
check("decompose exit 0", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
check("decompose distinct count", doc["distinct_count"] == 4)
check("decompose degree total", doc["degree_total"] == 25)
check("decompose constituent count", len(doc["constituents"]) == 4)

r = run("decompose", "--p", "3", "--phi", "1,0,0", "--psi", "2,0,0", "--format", "json")
doc = json.loads(r.stdout)
kinds = sorted(c["kind"] for c in doc["constituents"])
check("decompose constant-sum case exit 0", r.returncode == 0, r.stderr)
check("decompose constant-sum has linear constituents", "linear" in kinds)
check("decompose constant-sum degree", doc["degree_total"] == 9)

r = run("decompose", "--p", "5", "--phi", "2,2,2,2,2", "--psi", "1,0,0,0,0")
check("decompose rejects constant tuple", r.returncode == 1, str(r.returncode))

r = run("decompose", "--p", "5", "--phi", "1,0,0", "--psi", "1,1,0,0,0")
check("decompose rejects length mismatch", r.returncode == 1)

r = run("decompose", "--p", "5", "--phi", "nonsense", "--psi", "1,1,0,0,0")
check("decompose rejects malformed tuple", r.returncode == 1)

# verify-theorem
r = run("verify-theorem", "--p", "5", "--format", "json")
check("verify-theorem p=5 exit 0", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
check("verify-theorem count", doc["distinct_constituents"] == 4)
check("verify-theorem collision indices", doc["collision"]["first_index"] == 2
      and doc["collision"]["second_index"] == 4)
check("verify-theorem sums listed",
      doc["walkthrough_sums"] == ["2,1,0,0,0", "1,2,0,0,0", "1,1,1,0,0", "1,1,0,1,0", "1,1,0,0,1"])

r = run("verify-theorem", "--p", "13", "--format", "json")
check("verify-theorem p=13", r.returncode == 0 and json.loads(r.stdout)["distinct_constituents"] == 12)

r = run("verify-theorem", "--p", "4")
check("verify-theorem rejects non-prime", r.returncode == 1)
r = run("verify-theorem", "--p", "3")
check("verify-theorem rejects p=3", r.returncode == 1)

# enumerate
r = run("enumerate", "--p", "2")
check("enumerate p=2", r.returncode == 0 and r.stdout.strip() == "0,1")
r = run("enumerate", "--p", "3")
check("enumerate p=3 count", r.returncode == 0 and len(r.stdout.strip().splitlines()) == 6)
r = run("enumerate", "--p", "11")
check("enumerate refuses p=11", r.returncode == 1)

# search: exhaustive p=5
r = run("search", "--p", "5", "--mode", "exhaustive", "--format", "json")
check("search p=5 exit 0", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
check("search p=5 gap empty", doc["gap_check"]["observed"] == [])
check("search p=5 bound satisfied", doc["bound_check"]["satisfied"] is True)
counts = {entry["count"] for entry in doc["histogram"]}
check("search p=5 count 4 present", 4 in counts)
total = sum(entry["frequency"] for entry in doc["histogram"])
check("search p=5 frequencies sum to pairs", total == doc["pairs_examined"])

# determinism of the machine-readable report
r2 = run("search", "--p", "5", "--mode", "sample", "--n", "1000", "--seed", "1", "--format", "json")
r3 = run("search", "--p", "5", "--mode", "sample", "--n", "1000", "--seed", "1", "--format", "json")
check("sampled search deterministic",
      r2.returncode == 0 and strip_timing(r2.stdout) == strip_timing(r3.stdout))

# thread-count independence via the environment override: the histogram and
# witnesses may not change (only the config echo records the worker count)
r4 = subprocess.run([CLI, "search", "--p", "5", "--mode", "sample", "--n", "1000",
                     "--seed", "1", "--format", "json"],
                    capture_output=True, text=True,
                    env={"PATH": "", "WREATHCHAR_THREADS": "3"})
doc2, doc4 = json.loads(r2.stdout), json.loads(r4.stdout)
check("worker count does not change the results",
      r4.returncode == 0
      and doc4["histogram"] == doc2["histogram"]
      and doc4["witnesses"] == doc2["witnesses"]
      and doc4["pairs_examined"] == doc2["pairs_examined"]
      and doc4["config"]["worker_count"] == 3)

r = run("search", "--p", "5", "--mode", "sample", "--n", "10")
check("sample mode requires seed", r.returncode == 1)
r = run("search", "--p", "11", "--mode", "exhaustive")
check("search refuses exhaustive p=11", r.returncode == 1)
r = run("search", "--p", "5", "--mode", "exhaustive", "--shard", "9/4")
check("search rejects bad shard", r.returncode == 1)

# sharded checkpoints merge to the single-shard report
with tempfile.TemporaryDirectory() as tmp:
    single = run("search", "--p", "5", "--mode", "exhaustive", "--format", "json")
    for shard in range(4):
        rs = run("search", "--p", "5", "--mode", "exhaustive", "--shard", f"{shard}/4",
                 "--checkpoint-dir", tmp, "--format", "json")
        check(f"shard {shard}/4 exit 0", rs.returncode == 0, rs.stderr)
    check("checkpoint files written", len(list(Path(tmp).glob("shard-*.json"))) == 4)
    merged = run("search", "--merge-checkpoints", tmp, "--format", "json")
    check("merge exit 0", merged.returncode == 0, merged.stderr)
    single_doc = json.loads(single.stdout)
    merged_doc = json.loads(merged.stdout)
    check("merged histogram equals single run",
          merged_doc["histogram"] == single_doc["histogram"])
    check("merged witnesses equal single run",
          merged_doc["witnesses"] == single_doc["witnesses"])
    check("merged pair count equals single run",
          merged_doc["pairs_examined"] == single_doc["pairs_examined"])

# CSV histogram
with tempfile.TemporaryDirectory() as tmp:
    csv_path = Path(tmp) / "hist.csv"
    r = run("search", "--p", "3", "--mode", "exhaustive", "--csv", str(csv_path),
            "--format", "json")
    lines = csv_path.read_text().strip().splitlines()
    check("csv header", lines[0] == "count,frequency")
    doc = json.loads(r.stdout)
    check("csv rows match histogram", len(lines) - 1 == len(doc["histogram"]))

# oracle-check
r = run("oracle-check", "--p", "3", "--trials", "25", "--seed", "7")
check("oracle-check p=3", r.returncode == 0, r.stderr)
r = run("oracle-check", "--p", "11")
check("oracle-check refuses p=11", r.returncode == 1)

# usage errors
r = run("frobnicate")
check("unknown subcommand", r.returncode == 1)
r = run()
check("missing subcommand", r.returncode == 1)

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
