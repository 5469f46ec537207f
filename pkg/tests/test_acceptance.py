"""Acceptance criteria 1-9, each at its stated tolerance.

One ``verify all --timings`` run through the command-line entry point
(in-process) provides the check reports; criteria 1-7 select named checks
from it, criterion 8 regenerates the figure data through ``profiles`` and
``field``, and criterion 9 is the exit code and wall time of that run.
Every criterion records a PASS/FAIL line that the terminal summary prints.

Run ``python3 tests/test_acceptance.py`` to get the same lines without pytest.
"""

import contextlib
import csv
import io
import json
import math
import time

import numpy as np
import pytest

from photonpos import cli

RESULTS: dict[int, tuple[bool, str]] = {}

CRITERIA = {
    1: ("special-function identities", ["specfun.ek2f1", "specfun.gamma_quarter_K", "specfun.quartic_identity",
                                        "specfun.quartic_transforms", "specfun.raising_operator",
                                        "specfun.gamma_reflection", "specfun.jk_integral"]),
    2: ("position operator", ["operators.eigenvalue", "operators.factored_vs_explicit",
                              "operators.spin_conjugation", "operators.commutator_decay"]),
    3: ("closed-form certification", ["eigenfield.fd_from_i_beta", "oracle.damped_vs_closed"]),
    4: ("singularities and asymptotics", ["eigenfield.rs_plane_asymptotics_s0.0001",
                                          "eigenfield.rs_plane_asymptotics_s1e-05",
                                          "eigenfield.lp_plane_forms", "eigenfield.axis_limits"]),
    5: ("Debierre frame", ["eigenfield.debierre_plus_oracle", "eigenfield.debierre_minus_oracle",
                           "eigenfield.debierre_parity", "eigenfield.debierre_printed_minus_rejected"]),
    6: ("normalization", ["oracle.normalization", "eigenfield.overlaps"]),
    7: ("Hertz potential", ["hertz.t0_closed_form", "hertz.elliptic_forms", "hertz.wave_residual_scaling",
                            "hertz.rs_from_hertz"]),
}
RUNTIME_LIMITS = {1: 30.0, 3: 300.0}
VERIFY_LIMIT = 600.0


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)


def summary_lines() -> list[str]:
    out = []
    for n in range(1, 10):
        if n in RESULTS:
            ok, detail = RESULTS[n]
            out.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            out.append(f"criterion {n}: NOT RUN")
    return out


def run_cli(argv):
    buf_out, buf_err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf_out), contextlib.redirect_stderr(buf_err):
        code = cli.main(argv)
    return code, buf_out.getvalue(), buf_err.getvalue()


def table(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


@pytest.fixture(scope="module")
def verify_all(tmp_path_factory):
    path = tmp_path_factory.mktemp("acceptance") / "report.json"
    start = time.perf_counter()
    code, _, err = run_cli(["verify", "all", "--timings", "--out", str(path)])
    elapsed = time.perf_counter() - start
    reports = {r["check_name"]: r for r in json.loads(path.read_text())}
    return code, elapsed, reports, err


def check_group(n, reports):
    title, names = CRITERIA[n]
    missing = [name for name in names if name not in reports]
    failed = [name for name in names if name in reports and not reports[name]["passed"]]
    worst = max((reports[name]["max_rel_err"] / reports[name]["tolerance"]
                 for name in names if name in reports and reports[name]["tolerance"] > 0), default=0.0)
    runtime = sum(reports[name].get("elapsed", 0.0) for name in names if name in reports)
    ok = not missing and not failed
    detail = f"{title}: {len(names) - len(failed) - len(missing)}/{len(names)} checks, worst err/tol {worst:.2g}"
    if n in RUNTIME_LIMITS:
        ok = ok and runtime < RUNTIME_LIMITS[n]
        detail += f", {runtime:.1f}s (limit {RUNTIME_LIMITS[n]:.0f}s)"
    if failed:
        detail += f"; failed: {', '.join(failed)}"
    if missing:
        detail += f"; missing: {', '.join(missing)}"
    return ok, detail


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion_from_report(verify_all, n):
    _, _, reports, _ = verify_all
    ok, detail = check_group(n, reports)
    record(n, ok, detail)
    assert ok, detail


def _mirror_pairs(rows):
    n = len(rows)
    return [(rows[i], rows[n - 1 - i]) for i in range(n // 2)]


def _figure_checks():
    problems = []
    parity = {"LP": {"P_rho": -1, "P_z": 1}, "RS": {"P_rho": -1, "P_psi_regular": 1, "P_z": 1}}
    for family, cols in parity.items():
        code, out, _ = run_cli(["profiles", "--family", family, "--theta-samples", "721"])
        if code != 0:
            problems.append(f"profiles {family} exit {code}")
            continue
        rows = table(out)
        for a, b in _mirror_pairs(rows):
            if abs(float(a["theta"]) + float(b["theta"]) - math.pi) > 1e-12:
                problems.append("theta grid not mirror symmetric")
                break
            for col, sign in cols.items():
                va, vb = float(a[col]), float(b[col])
                if abs(vb - sign * va) > 1e-9 * max(abs(va), 1e-12):
                    problems.append(f"{family} {col} parity at theta={a['theta']}")
                    break
        prho = np.array([float(r["P_rho"]) for r in rows])
        th = np.array([float(r["theta"]) for r in rows])
        below, above = prho[th < math.pi / 2], prho[th > math.pi / 2]
        # P_rho flips sign across the plane and grows without bound on both sides
        if not (below[-1] * above[0] < 0 and abs(below[-1]) > 10 * abs(below[len(below) // 2])):
            problems.append(f"{family} P_rho sign change or divergence missing")
        if family == "RS":
            ppsi = np.array([float(r["P_psi_regular"]) for r in rows])
            if not (ppsi[th < math.pi / 2][-1] > 0 and ppsi[th > math.pi / 2][0] > 0):
                problems.append("RS P_psi should diverge to +inf from both sides")
        pz_ends = (float(rows[0]["P_z"]), float(rows[-1]["P_z"]))
        if family == "LP" and not all(abs(v + math.sqrt(math.pi) / 2) < 1e-4 for v in pz_ends):
            problems.append("LP P_z does not tend to -sqrt(pi)/2 at the ends")
    code, out, _ = run_cli(["field", "--family", "RS", "--sigma", "1", "--grid=-2,2,201,-2,2,201"])
    if code != 0:
        problems.append(f"field exit {code}")
    else:
        rows = table(out)
        nx = 201
        checked = 0
        # rows run over x fastest; the mirror of column i is column nx - 1 - i
        for iz in range(nx):
            for ix in range(nx // 2):
                r, mirror = rows[iz * nx + ix], rows[iz * nx + nx - 1 - ix]
                if abs(float(r["x"]) + float(mirror["x"])) > 1e-12 or r["z"] != mirror["z"]:
                    problems.append("field grid not mirror symmetric")
                    break
                if r["mask_flag"] == "1" or mirror["mask_flag"] == "1":
                    continue
                cols = ("comp_rho", "comp_psi", "comp_z")
                va = np.array([float(r[c]) for c in cols])
                vb = np.array([float(mirror[c]) for c in cols])
                # mirrored grid abscissae agree only to rounding, so compare against the field size
                if np.max(np.abs(va - vb)) > 1e-12 * np.max(np.abs(va)):
                    problems.append(f"field not symmetric about the z-axis at x={r['x']}, z={r['z']}")
                checked += 1
        if checked < 19900:
            problems.append(f"only {checked} mirror pairs compared")
    return problems


def test_criterion_8_figure_data():
    problems = _figure_checks()
    ok = not problems
    record(8, ok, "figure data: profile parities, sign change and divergence side, field z-axis symmetry"
           + ("" if ok else "; " + "; ".join(problems[:3])))
    assert ok, problems


def test_criterion_9_verify_all(verify_all):
    code, elapsed, reports, _ = verify_all
    n_fail = sum(not r["passed"] for r in reports.values())
    ok = code == 0 and elapsed < VERIFY_LIMIT
    record(9, ok, f"verify all: exit {code}, {len(reports) - n_fail}/{len(reports)} checks, "
                  f"{elapsed:.0f}s (limit {VERIFY_LIMIT:.0f}s)")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
