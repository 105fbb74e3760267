"""Acceptance suite: one test per named verification check.

Each test runs the corresponding entry from twobridge.checks and
prints a single PASS/FAIL line (visible under pytest -s); checks
with a stated wall-clock budget also assert it.  The same registry
backs `twobridge verify-all`, so a green run here matches exit 0
there.
"""

from twobridge.checks import run_check


def _run(name: str, budget_seconds: float | None = None):
    result = run_check(name)
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} {result.name} ({result.seconds:.2f}s): {result.detail}")
    assert result.passed, f"{name}: {result.detail}"
    if budget_seconds is not None:
        assert result.seconds < budget_seconds, (
            f"{name} took {result.seconds:.1f}s, budget {budget_seconds}s")
    return result


def test_01_counting():
    # Jacobsthal counts, palindromic counts, and the knot-count identity
    # for 3 <= c <= 20, in under a minute.
    _run("counting", budget_seconds=60)


def test_02_metric_rows():
    # Published (c_plus, s_A, sigma) triples for T(5), T(6), and the
    # two smallest torus diagrams.
    _run("metric-rows")


def test_03_signature_table():
    # Enumerated rows for 3 <= c <= 14, regenerated by the histogram
    # recursion, plus one-step recursion and symmetry up to c = 18,
    # in under two minutes.
    _run("sig-table", budget_seconds=120)


def test_04_binomial_identity():
    # s(2m+1, sigma) + s(2m+2, sigma) = C(2m-1, m-1+sigma/2) for m <= 8.
    _run("binomial")


def test_05_totals():
    # tot(2m+1) + tot(2m+2) = m C(2m, m); the even-c recursion; and the
    # exact 3 tot(c) closed forms.
    _run("totals")


def test_06_average_signature():
    # avg |sigma| at c = 6 is exactly 2/3, and the gap to sqrt(2c/pi)
    # shrinks from c = 9/10 to c = 19/20, in under two minutes.
    _run("avg-signature", budget_seconds=120)


def test_07_wallis_bounds():
    # Strict two-sided Wallis bounds for m in 1..50 and m = 1000.
    _run("wallis")


def test_08_markov_matrices():
    # Empirical transition matrices, the closed-form power, the
    # contraction rate, and the M^r identity.
    _run("markov")


def test_09_walk_distance():
    # Exact expected distances against the taxicab bound on the full
    # s*t <= 20 grid, per-class mean bounds, and a seeded Monte Carlo
    # cross-check, in under five minutes.
    _run("walk", budget_seconds=300)


def test_10_cobordism_example():
    # The twelve-crossing worked example, byte for byte, plus mirror
    # involution and fix equivariance over all summands with s <= 4.
    _run("cobordism-example")


def test_11_aggregate_g4():
    # Mean saddle-move upper bound over T(c) for 7 <= c <= 15 stays
    # below 9.75 c / log10(c), and every word's interval is ordered,
    # in under ten minutes.
    _run("aggregate-g4", budget_seconds=600)
