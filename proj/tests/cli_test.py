#!/usr/bin/env python3
"""End-to-end checks of the residua command line: exit codes, JSON stability."""

import json
import os
import subprocess
import sys

BIN = os.environ["RESIDUA_BIN"]
FIXTURES = os.environ["RESIDUA_FIXTURES"]

failures = []


def fx(name):
    return os.path.join(FIXTURES, name + ".json")


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [BIN, *args], capture_output=True, text=True, env=full_env, timeout=300
    )


def check(label, cond):
    print(("ok  " if cond else "FAIL") + " " + label)
    if not cond:
        failures.append(label)


# --- exit code contract ------------------------------------------------------
check("classify fig1 exits 0", run("classify", fx("fig1")).returncode == 0)
check(
    "residuate fig1 cone exits 0",
    run("residuate", fx("fig1"), "--scheme", "cone").returncode == 0,
)
r = run("residuate", fx("o6"), "--scheme", "cone")
check("residuate o6 cone exits 1 (failed check)", r.returncode == 1)
check("usage error exits 2", run("residuate", fx("o6")).returncode == 2)
check("missing file exits 2", run("classify", fx("no_such_fixture")).returncode == 2)
check("no subcommand exits 2", run().returncode == 2)
check("help exits 0", run("--help").returncode == 0)

# --- JSON round-trip ---------------------------------------------------------
for args in (
    ("classify", fx("fig1")),
    ("residuate", fx("boole4"), "--scheme", "meet"),
    ("tables", fx("boole4"), "--scheme", "cone"),
    ("generalized", fx("boole4")),
    ("generalized", fx("fig1"), "--method", "reduction"),
    ("enumerate", "--size", "4", "--require", "complementation"),
):
    out = run(*args, "--json").stdout
    body = json.loads(out)
    redumped = json.dumps(body, separators=(",", ": "), indent=2, sort_keys=True)
    check(
        "json round-trips byte-identically: " + " ".join(args),
        redumped == out.rstrip("\n"),
    )

# --- determinism across thread counts ---------------------------------------
for args in (
    ("classify", fx("fig1")),
    ("residuate", fx("fig1"), "--scheme", "cone"),
    ("generalized", fx("boole4")),
):
    a = run(*args, "--json", "--threads", "1").stdout
    b = run(*args, "--json", "--threads", "8").stdout
    check("threads 1 vs 8 identical: " + " ".join(args), a == b and a != "")

# --- report contents ---------------------------------------------------------
body = json.loads(run("classify", fx("fig1"), "--json").stdout)
checks = body["checks"]
check("fig1 pseudo-orthomodular", checks["pseudo_orthomodular"]["holds"] is True)
check("fig1 not boolean", checks["boolean"]["holds"] is False)
check("fig1 not a lattice", checks["lattice"]["holds"] is False)

body = json.loads(run("classify", fx("boole4"), "--json").stdout)
check("boole4 boolean", body["checks"]["boolean"]["holds"] is True)

body = json.loads(run("classify", fx("o6"), "--json").stdout)
oml = body["checks"]["orthomodular_lattice"]
check("o6 not orthomodular, witness (a,b)", oml["holds"] is False)
check(
    "o6 witness names",
    oml["witness"]["assignment"] == {"x": "a", "y": "b"},
)

body = json.loads(run("residuate", fx("fig1"), "--scheme", "cone", "--json").stdout)
check(
    "fig1 cone left residuated",
    body["definition1"]["left_residuated"] is True,
)
body = json.loads(run("residuate", fx("boole4"), "--scheme", "meet", "--json").stdout)
check("boole4 meet residuated", body["definition1"]["residuated"] is True)

# condition (12) fails on every nontrivial carrier (at B={} it asks
# L(U(A)) to be a subset of L(A)), so even the 2-chain is not generalized
# residuated and the command reports the failed check via exit code 1
r = run("generalized", fx("chain2"), "--json")
check("generalized chain2 exits 1", r.returncode == 1)
body = json.loads(r.stdout)
check(
    "chain2 not generalized residuated",
    body["corollary2"]["generalized_residuated"] is False,
)
check("chain2 cond11 holds", body["cond11"]["holds"] is True)
check(
    "chain2 cond12 witness present",
    body["cond12"]["holds"] is False and "witness" in body["cond12"],
)
body = json.loads(
    run("generalized", fx("fig1"), "--method", "reduction", "--json").stdout
)
check(
    "fig1 reduction verdict carries the method tag",
    body["adjointness"]["15"]["reduction"]["method"] == "reduction",
)
check(
    "fig1 fails (11) already at singletons",
    body["adjointness"]["15"]["reduction"]["holds"] is False,
)

r = run(
    "enumerate",
    "--size",
    "6",
    "--claim",
    "pseudo-orthomodular=>boolean",
    "--fixture",
    fx("fig1"),
    "--json",
)
check("claim with counterexample exits 1", r.returncode == 1)
check(
    "counterexample reported",
    json.loads(r.stdout)["counterexample"] is not None,
)

# --- carrier cap env var -----------------------------------------------------
r = run("classify", fx("fig1"), env={"RESIDUA_MAX_CARRIER": "4"})
check("RESIDUA_MAX_CARRIER rejects oversized input with exit 2", r.returncode == 2)

# --- human output is not JSON and mentions elapsed time ----------------------
out = run("classify", fx("boole4")).stdout
check("human output has a timing line", "elapsed:" in out)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
