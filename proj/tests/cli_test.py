"""End-to-end checks of the command line tool: exit codes, JSON schema,
byte-level determinism, and the environment default for the order."""

import json
import subprocess
import sys

BIN = sys.argv[1] if len(sys.argv) > 1 else "./build/quotser"

failures = []


def run(args, stdin=None, env_extra=None):
    env = None
    if env_extra is not None:
        import os

        env = dict(os.environ)
        env.update(env_extra)
    return subprocess.run(
        [BIN] + args, input=stdin, capture_output=True, text=True, env=env
    )


def check(name, cond, detail=""):
    status = "ok" if cond else "FAIL"
    print(f"{status} {name}" + (f" | {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def expect_exit(name, result, code):
    check(name, result.returncode == code,
          f"exit {result.returncode} != {code}; stderr: {result.stderr.strip()[:200]}")


# --- quot: both pipelines, default weights, agreement flag ---
r = run(["quot", "--N", "2", "--order", "8"])
expect_exit("quot both runs", r, 0)
out = json.loads(r.stdout)
check("quot settings echo defaults",
      out["settings"]["weights"] == ["2", "4"]
      and out["settings"]["method"] == "both"
      and out["settings"]["fixed_weights"] is False)
check("quot series values",
      out["series"]["coefficients"][:6] == ["1", "0", "2", "24", "163", "984"])
check("quot pipelines agree", out["agreement"] is True)
check("quot emits both series", out["series_lb"] == out["series"])

# --- determinism: repeated runs are byte-identical ---
r2 = run(["quot", "--N", "2", "--order", "8"])
check("quot output is deterministic", r.stdout == r2.stdout and r.stderr == r2.stderr)

r = run(["quot", "--N", "1", "--d", "1", "--jet", "2", "--order", "8", "--pade", "--latex"])
r2 = run(["quot", "--N", "1", "--d", "1", "--jet", "2", "--order", "8", "--pade", "--latex"])
expect_exit("quot jet run", r, 0)
check("quot jet output is deterministic", r.stdout == r2.stdout)
out = json.loads(r.stdout)
check("quot jet caps echoed", out["settings"]["jet_caps"] == [2])
check("quot pade block keyed by exponent", set(out["pade"].keys()) == {"0", "1", "2"})

# --- quot: fixed-weight evaluation differs from the limit ---
r = run(["quot", "--N", "2", "--order", "4", "--method", "oracle", "--fixed-weights"])
expect_exit("quot fixed weights runs", r, 0)
out = json.loads(r.stdout)
check("quot fixed weights flag echoed", out["settings"]["fixed_weights"] is True)
check("quot fixed weights raw values",
      out["series"]["coefficients"] == ["1", "0", "-10/3", "-56/9", "-175/27"])

# --- invalid input exits 2 ---
expect_exit("weights differing by one are rejected",
            run(["quot", "--N", "2", "--weights", "2,3", "--order", "4"]), 2)
expect_exit("repeated weights are rejected",
            run(["quot", "--N", "2", "--weights", "5,5", "--order", "4"]), 2)
expect_exit("unknown flag is rejected", run(["quot", "--N", "2", "--bogus"]), 2)
expect_exit("missing subcommand is rejected", run([]), 2)
expect_exit("non-numeric weight is rejected",
            run(["quot", "--N", "1", "--weights", "x", "--order", "4"]), 2)

# --- QUOTSER_ORDER environment default ---
r = run(["quot", "--N", "1", "--method", "lb"], env_extra={"QUOTSER_ORDER": "6"})
expect_exit("env order accepted", r, 0)
check("env order applies", json.loads(r.stdout)["settings"]["order"] == 6)
r = run(["quot", "--N", "1", "--method", "lb", "--order", "4"],
        env_extra={"QUOTSER_ORDER": "6"})
check("explicit order beats env", json.loads(r.stdout)["settings"]["order"] == 4)
expect_exit("malformed env order exits 2",
            run(["quot", "--N", "1", "--method", "lb"], env_extra={"QUOTSER_ORDER": "abc"}), 2)

# --- hilbert ---
r = run(["hilbert", "--M2", "1", "--order", "6"])
expect_exit("hilbert runs", r, 0)
check("hilbert series values",
      json.loads(r.stdout)["series"]["coefficients"] == ["1", "-1", "0", "0", "0", "0", "0"])
expect_exit("hilbert cap mismatch exits 2",
            run(["hilbert", "--alphaM", "1,2", "--jet", "1", "--order", "4"]), 2)
r = run(["hilbert", "--M2", "2", "--MK", "-1", "--K2", "1", "--alphaM", "3", "--jet", "2",
         "--monomial", "1", "--order", "8"])
expect_exit("hilbert monomial extraction runs", r, 0)
check("hilbert monomial echoed", json.loads(r.stdout)["settings"]["monomial"] == [1])

# --- p1xp1 ---
r = run(["p1xp1", "--nmax", "12", "--latex"])
expect_exit("p1xp1 runs", r, 0)
out = json.loads(r.stdout)
check("p1xp1 reconstruction",
      out["pade"]["numerator"] == ["0", "6", "-10"]
      and out["pade"]["denominator"] == ["1", "-2", "1"])
check("p1xp1 latex display",
      out["pade"]["latex"] == "\\frac{q(6 - 10q)}{(1 - q)^{2}}")
expect_exit("p1xp1 short range exits 2", run(["p1xp1", "--nmax", "5"]), 2)

# --- sigma ---
r = run(["sigma", "--a", "0", "--b", "-1", "--c", "0"])
expect_exit("sigma runs", r, 0)
out = json.loads(r.stdout)
check("sigma finds the power part",
      out["fit"]["found"] and out["fit"]["p1"] == ["0"] and out["fit"]["p2"] == ["1"])
check("sigma lists leading values", out["values"][:3] == ["1", "-2", "4"])
expect_exit("sigma requires its parameters", run(["sigma", "--a", "1"]), 2)

# --- pade from stdin ---
series = {
    "variable": "q",
    "order": 12,
    "coefficients": ["1", "0"] + [str(1 - k) for k in range(2, 13)],
}
r = run(["pade", "--max-num", "2", "--max-den", "2", "--latex"], stdin=json.dumps(series))
expect_exit("pade reconstructs from stdin", r, 0)
out = json.loads(r.stdout)
check("pade result",
      out["pade"]["numerator"] == ["1", "-2"] and out["pade"]["denominator"] == ["1", "-2", "1"])
check("pade latex", out["pade"]["latex"] == "\\frac{(1 - 2q)}{(1 - q)^{2}}")

fact = ["1"]
num, den = 1, 1
for k in range(1, 15):
    den *= k
    fact.append(f"1/{den}")
r = run(["pade", "--max-num", "3", "--max-den", "3"],
        stdin=json.dumps({"variable": "q", "order": 14, "coefficients": fact}))
expect_exit("pade reports no fit with exit 1", r, 1)
check("pade null result", json.loads(r.stdout)["pade"] is None)

expect_exit("pade rejects broken JSON", run(["pade"], stdin="{nope"), 2)
expect_exit("pade rejects wrong schema",
            run(["pade"], stdin=json.dumps({"variable": "q"})), 2)
expect_exit("pade rejects short series",
            run(["pade", "--max-num", "5", "--max-den", "5"],
                stdin=json.dumps({"variable": "q", "order": 4,
                                   "coefficients": ["1", "1", "1", "1", "1"]})), 2)

# --- verify ---
r = run(["verify", "--filter", "symfunc"])
expect_exit("verify subset passes", r, 0)
check("verify prints PASS lines", "PASS" in r.stdout and "FAIL" not in r.stdout)
expect_exit("verify unknown filter fails",
            run(["verify", "--filter", "no-such-case"]), 1)

print()
if failures:
    print(f"{len(failures)} CLI checks failed: {', '.join(failures)}")
    sys.exit(1)
print("all CLI checks passed")
