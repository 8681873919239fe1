"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
All comparisons are exact; timing budgets are part of the pass condition.
"""

from __future__ import annotations

import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from bernstir import bernoulli as B
from bernstir import identities as I
from bernstir.bernoulli import EvalSpec, Family
from bernstir.identities import Grid
from bernstir.rstirling import StirlingKind, rstir, rstir_enum_oracle, rstir_gf_oracle

ALPHAS = (F(1), F(2), F(5), F(1, 2), F(-5, 2), F(7, 3))
IDENTITY_GRID = Grid(max_n=8, max_k=4, max_r=3, max_q=3, p_offsets=(0, 2))
CLOSED_FORM_GRID = dict(max_n=10, max_r=3, p_offsets=(0, 1, 3), qs=(0, 1, 2))

STIRLING_BUDGET = 30.0
NEG_ORDER_BUDGET = 10.0
CLOSED_FORM_BUDGET = 60.0
IDENTITY_BUDGET = 60.0

def report(name: str, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    print(line, flush=True)
    return ok


# -- criteria ---------------------------------------------------------------

def stirling_triple_agreement():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for kind in StirlingKind:
        for N in range(11):
            for r in range(min(N, 4) + 1):
                for K in range(N + 1):
                    rec = rstir(kind, N, K, r)
                    enum = rstir_enum_oracle(kind, N, K, r)
                    # below K = r the generating function has no offset row; both sides are 0
                    gf = rstir_gf_oracle(kind, N - r, K - r, r) if K >= r else 0
                    checked += 1
                    if not rec == enum == gf:
                        bad.append((kind.name, N, K, r, rec, enum, gf))
    dt = time.perf_counter() - t0
    return report("r-Stirling recurrence = enumeration = generating function",
                  not bad and dt < STIRLING_BUDGET,
                  f"{checked} entries, {len(bad)} mismatches, {dt:.1f}s (budget {STIRLING_BUDGET:.0f}s)")


def negative_order_values():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for n in range(9):
        for k in range(9):
            for r in range(9):
                pairs = [(B.special_neg_order(Family.FIRST, n, k, r), B.oracle_eval(Family.FIRST, n, -k, r)),
                         (B.special_neg_order(Family.SECOND, n, k, r), B.oracle_eval(Family.SECOND, n, -k, -r))]
                for closed, series in pairs:
                    checked += 1
                    if closed != series:
                        bad.append((n, k, r))
    dt = time.perf_counter() - t0
    return report("negative integer order via r-Stirling numbers vs series",
                  not bad and dt < NEG_ORDER_BUDGET,
                  f"{checked} values, {len(bad)} mismatches, {dt:.1f}s (budget {NEG_ORDER_BUDGET:.0f}s)")


def _closed_form_points():
    g = CLOSED_FORM_GRID
    for fam in Family:
        for n in range(g["max_n"] + 1):
            for alpha in ALPHAS:
                for r in range(g["max_r"] + 1):
                    for x in (-r, r):
                        yield fam, n, alpha, x


def closed_forms_vs_series():
    t0 = time.perf_counter()
    checked = poles = 0
    bad, not_invariant, uncovered = [], [], []
    for fam, n, alpha, x in _closed_form_points():
        want = B.oracle_eval(fam, n, alpha, x)
        seen = set()
        # x = 0 lies in the domain of both closed forms
        routes = [r for r, ok in ((B.eval_prop1, x <= 0), (B.eval_prop2, x >= 0)) if ok]
        for route in routes:
            for off in CLOSED_FORM_GRID["p_offsets"]:
                for q in CLOSED_FORM_GRID["qs"]:
                    try:
                        got = route(fam, EvalSpec(n, alpha, x, n + off, q))
                    except B.PoleAtSampledPoint:
                        poles += 1
                        continue
                    checked += 1
                    seen.add(got)
                    if got != want:
                        bad.append((fam.value, n, alpha, x, n + off, q))
        if len(seen) > 1:
            not_invariant.append((fam.value, n, alpha, x))
        if not seen:
            uncovered.append((fam.value, n, alpha, x))
    dt = time.perf_counter() - t0
    ok = not bad and not not_invariant and dt < CLOSED_FORM_BUDGET
    return report("Melzak closed forms vs series, (p, q)-invariant",
                  ok,
                  f"{checked} evaluations, {poles} pole points skipped, {len(bad)} mismatches, "
                  f"{len(not_invariant)} non-invariant, {len(uncovered)} all-pole, "
                  f"{dt:.1f}s (budget {CLOSED_FORM_BUDGET:.0f}s)")


def carlitz_duality():
    checked, bad = 0, []
    for n in range(CLOSED_FORM_GRID["max_n"] + 1):
        for alpha in ALPHAS:
            for x in range(-CLOSED_FORM_GRID["max_r"], CLOSED_FORM_GRID["max_r"] + 1):
                checked += 1
                if B.oracle_eval(Family.FIRST, n, alpha, x) != B.oracle_eval(Family.SECOND, n, n + 1 - alpha, x - 1):
                    bad.append((n, alpha, x))
    return report("order duality between the two Bernoulli families",
                  not bad, f"{checked} points, {len(bad)} mismatches")


def classical_representations():
    bad = []
    for n in range(13):
        reps = B.bernoulli_number_reps(n)
        for key, fam in (("B_first", Family.FIRST), ("B_second", Family.FIRST),
                         ("b_first", Family.SECOND), ("b_second", Family.SECOND)):
            if reps[key] != B.oracle_eval(fam, n, 1, 0):
                bad.append((key, n))
    spots = {
        "B_2": (B.classical_B_at_int(2, 0), F(1, 6)),
        "B_4": (B.classical_B_at_int(4, 0), F(-1, 30)),
        "B_12": (B.classical_B_at_int(12, 0), F(-691, 2730)),
        "b_1": (B.classical_b_at_int(1, 0), F(1, 2)),
        "b_2": (B.classical_b_at_int(2, 0), F(-1, 6)),
    }
    for name, (got, want) in spots.items():
        if got != want or B.oracle_eval(Family.FIRST if name[0] == "B" else Family.SECOND,
                                        int(name[2:]), 1, 0) != want:
            bad.append(name)
    return report("Stirling sums for classical Bernoulli numbers (n <= 12) and spot values",
                  not bad, f"{13 * 4} sums + {len(spots)} spot values, {len(bad)} mismatches")


def genocchi_and_euler():
    bad = []
    for n in range(1, 7):
        routes = B.genocchi_routes(n)
        if len(set(routes)) != 1 or routes[0].denominator != 1 or B.genocchi(n) != routes[0]:
            bad.append(("genocchi", n, routes))
    for m in range(-8, 9, 2):
        if B.euler_at_even(1, m) != 1:
            bad.append(("E_0", m))
    if B.euler_at_even(2, 0) != F(-1, 2):
        bad.append(("E_1(0)",))
    return report("Genocchi numbers by three routes (n <= 6), Euler values at even points",
                  not bad, f"{len(bad)} mismatches")


def stirling_sum_for_bernoulli_at_r():
    bad = [(n, r) for n in range(9) for r in range(9) if B.remark2_B(n, r) != B.classical_B_at_int(n, r)]
    return report("second-kind r-Stirling sum for B_n(r), n, r <= 8",
                  not bad, f"81 points, {len(bad)} mismatches")


def _timed_reports(build):
    t0 = time.perf_counter()
    reps = build()
    return reps, time.perf_counter() - t0


def _summary(reps):
    return ", ".join(f"{r.id.value} {r.failed}/{r.checked}" for r in reps)


def order_shift_identities_corrected():
    g = IDENTITY_GRID
    reps, dt = _timed_reports(lambda: [
        I.check_c1("first", g), I.check_c1("second", g),
        I.check_c1_examples("r1", g, "first"), I.check_c1_examples("r1", g, "second"),
        I.check_c1_examples("k0", g, "first"), I.check_c1_examples("k0", g, "second"),
        I.check_c1_examples("n0", g),
    ])
    ok = all(r.verified for r in reps) and dt < IDENTITY_BUDGET
    return report("c1 family with (-1)^n on first-kind displays", ok,
                  f"failed/checked: {_summary(reps)}; {dt:.1f}s")


def order_shift_identities_as_printed():
    # The first-kind displays as printed omit a (-1)^n; this criterion is expected to fail.
    g = IDENTITY_GRID
    reps, dt = _timed_reports(lambda: [
        I.check_c1("first", g, "paper"), I.check_c1("second", g, "paper"),
        I.check_c1_examples("r1", g, "first", "paper"), I.check_c1_examples("r1", g, "second", "paper"),
        I.check_c1_examples("k0", g, "first", "paper"), I.check_c1_examples("k0", g, "second", "paper"),
        I.check_c1_examples("n0", g, sign="paper"),
    ])
    ok = all(r.verified for r in reps) and dt < IDENTITY_BUDGET
    witness = next((f for r in reps for f in r.failures), None)
    extra = f"; first witness {witness.params} lhs {witness.lhs} rhs {witness.rhs}" if witness else ""
    return report("c1 family exactly as printed", ok,
                  f"failed/checked: {_summary(reps)}; {dt:.1f}s{extra}")


def negative_order_identities():
    g = IDENTITY_GRID
    reps, dt = _timed_reports(lambda: [
        I.check_c5("first", "corrected", g), I.check_c5("second", "corrected", g),
        I.check_c5_examples("k0", g, "first"), I.check_c5_examples("k0", g, "second"),
        I.check_c5_examples("n0", g),
    ])
    ok = all(r.verified for r in reps) and dt < IDENTITY_BUDGET

    # printed sign: failures must be exactly the odd-n points with nonzero rhs, each with lhs = -rhs
    printed = I.check_c5("first", "paper", g)
    fails, odd, flipped = set(), set(), True
    for pt in I.grid_points(g, ("n", "k", "r", "q", "p")):
        lhs = I.c5_lhs(StirlingKind.FIRST, *pt)
        rhs = I.c5_rhs(StirlingKind.FIRST, *pt, convention="paper")
        if lhs != rhs:
            fails.add(pt)
            flipped &= lhs == -rhs
        if pt[0] % 2 and rhs != 0:
            odd.add(pt)
    w = printed.failures[0] if printed.failures else None
    witness_ok = (w is not None and w.params == {"n": 1, "k": 0, "r": 1, "q": 0, "p": 1}
                  and w.lhs == 3 and w.rhs == -3)
    ok = ok and fails == odd and flipped and printed.failed == len(fails) and witness_ok
    return report("c5 family, corrected sign; printed sign fails exactly on odd n", ok,
                  f"failed/checked: {_summary(reps)}; printed sign {printed.failed}/{printed.checked} "
                  f"failures (odd-n nonzero rhs: {len(odd)}, lhs = -rhs: {flipped}), "
                  f"witness {w.params if w else None} lhs {w.lhs if w else None} rhs {w.rhs if w else None}; "
                  f"{dt:.1f}s")


CLI_EXAMPLES = [
    ["stirling", "--kind", "2", "--N", "4", "--K", "3", "--r", "2"],
    ["stirling", "--kind", "1", "--N", "3", "--K", "2", "--r", "1"],
    ["stirling", "--kind", "2", "--N", "2", "--K", "2", "--r", "2"],
    ["bernoulli", "--family", "B", "--n", "2", "--alpha", "1/1", "--x", "0"],
    ["bernoulli", "--family", "b", "--n", "0", "--alpha", "7/3", "--x", "5"],
    ["bernoulli", "--family", "B", "--n", "1", "--alpha", "-1/1", "--x", "0", "--route", "both"],
    ["verify", "c5-first", "--sign", "corrected", "--max-n", "6"],
    ["verify", "c5-first", "--sign", "paper", "--max-n", "2"],
    ["verify", "a5", "--max-n", "6"],
    ["table", "genocchi", "--max", "3"],
    ["table", "bernoulli-numbers", "--max", "4"],
    ["table", "euler-even", "--n", "1", "--m-max", "4"],
]
EXIT_CASES = [
    (["verify", "a5", "--max-n", "3"], 0),
    (["verify", "c5-first", "--sign", "paper", "--max-n", "2"], 1),
    (["verify", "no-such-identity"], 2),
    (["stirling", "--kind", "2", "--N", "x", "--K", "1"], 2),
    (["table", "genocchi", "--max", "-1"], 2),
    (["bernoulli", "--family", "B", "--n", "2", "--alpha", "5", "--x", "0"], 3),
]


def _cli(argv):
    return subprocess.run([sys.executable, "-m", "bernstir", *argv], capture_output=True)


def cli_determinism():
    unstable = [a for a in CLI_EXAMPLES if len({(p.stdout, p.returncode) for p in (_cli(a), _cli(a))}) != 1]
    wrong = [(a, _cli(a).returncode, code) for a, code in EXIT_CASES if _cli(a).returncode != code]
    return report("CLI byte-determinism and exit codes 0/1/2/3",
                  not unstable and not wrong,
                  f"{len(CLI_EXAMPLES)} commands run twice, {len(unstable)} unstable; "
                  f"{len(EXIT_CASES)} exit-code cases, {len(wrong)} wrong")


CRITERIA = [
    stirling_triple_agreement,
    negative_order_values,
    closed_forms_vs_series,
    carlitz_duality,
    classical_representations,
    genocchi_and_euler,
    stirling_sum_for_bernoulli_at_r,
    order_shift_identities_corrected,
    order_shift_identities_as_printed,
    negative_order_identities,
    cli_determinism,
]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion, capsys):
    with capsys.disabled():
        print()
        ok = criterion()
    assert ok


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
