"""Acceptance criteria: one suite per criterion, each under a time limit.

Run under pytest (a PASS/FAIL line per criterion appears in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from ukrull import suites

# (number, title, suite call, time limit in seconds)
CRITERIA = [
    (1, "Adem engine: normal form, termination, associativity", lambda: suites.adem_suite(), 5),
    (2, "membership: F(n) in U_n and not in U_(n-1), n <= 3", lambda: suites.membership_suite(3), 30),
    (3, "Tbar^n F(1)^n is the regular representation, n <= 3",
     lambda: suites.regular_suite(3, 16), 60),
    (4, "k_0 F(1) = 0 and k_0 of F(1)/F(1)^(>1) = Sigma Z/2", lambda: suites.locally_finite_part_suite(32), 60),
    (5, "pullback module: R_0 k_1 M properly inside k_1 R_0 M", lambda: suites.example62_suite(32), 60),
    (6, "k_n GF(2)[x] = primitive filtration = binary digit span",
     lambda: suites.binary_digit_suite(32, 3), 60),
    (7, "Krull filtration properties on the 8-member corpus", lambda: suites.property_suite(16), 300),
    (8, "counit and unit of the symmetric-sequence adjunction, n <= 2",
     lambda: suites.adjunction_suite(16), 120),
    (9, "sigma on free modules, tensor powers and monoidality", lambda: suites.sigma_suite(16), 300),
    (10, "Krull filtration and sigma of unstable algebras", lambda: suites.algebra_suite(16, 4), 300),
    (11, "functor side: polynomial degree, p_n, l/Tbar bridge, splitting",
     lambda: suites.functor_suite(3), 120),
    (12, "loops lemma and its corollaries", lambda: suites.omega_suite(16), 60),
]

RESULTS = []


def run_criterion(number, title, call, limit):
    start = time.perf_counter()
    res = call()
    elapsed = time.perf_counter() - start
    ok = res.passed and elapsed < limit
    failed = [c.anchor for c in res.checks if not c.passed]
    line = (f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} "
            f"[{len(res.checks)} checks, {elapsed:.1f}s / {limit}s]")
    RESULTS.append(line)
    return ok, failed, elapsed, res


@pytest.mark.parametrize("number, title, call, limit", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, call, limit):
    ok, failed, elapsed, res = run_criterion(number, title, call, limit)
    print(RESULTS[-1])
    assert res.checks, "suite ran no checks"
    assert not failed, f"failed checks: {failed}"
    assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"


if __name__ == "__main__":
    all_ok = True
    for crit in CRITERIA:
        ok, *_ = run_criterion(*crit)
        all_ok &= ok
        print(RESULTS[-1], flush=True)
    sys.exit(0 if all_ok else 1)
