#!/usr/bin/env python3
"""Verify both closed-form certificate families across a range of boards.

For every n = 6 (mod 8) and n = 4 (mod 8) up to --max-n, builds the
family certificate, verifies it arc-by-arc against the digraph, and
cross-checks the LP route: a valid certificate must force
lp_feasible(n, n/2) to be false with min_coil >= n/2 + 1.
"""

import argparse
import time

from whirlknight import (
    build_digraph,
    build_t1,
    build_t2,
    check_facts_abc,
    lp_feasible,
    verify_certificate,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=30)
    parser.add_argument("--skip-lp", action="store_true",
                        help="certificate verification only (faster)")
    args = parser.parse_args()

    print(f"{'n':>4} {'family':>6} {'rhs':>4} {'max_lhs':>8} {'valid':>6} "
          f"{'lp(n/2)':>8} {'min_coil':>8} {'time':>7}")
    for n in range(4, args.max_n + 1, 2):
        if n % 8 == 6:
            family, cert = "t1", build_t1(n)
        elif n % 8 == 4:
            family, cert = "t2", build_t2(n)
        else:
            continue
        start = time.perf_counter()
        g = build_digraph(n)
        report = verify_certificate(g, cert)
        if family == "t1":
            assert check_facts_abc(g).all_hold
        lp_txt = min_txt = "-"
        if not args.skip_lp:
            decision = lp_feasible(g, n // 2)
            if report.valid:  # soundness: a valid certificate forces infeasibility
                assert not decision.feasible
                assert decision.min_coil >= cert.sum_alpha() + cert.sum_beta()
            lp_txt = "feas" if decision.feasible else "infeas"
            min_txt = str(decision.min_coil)
        elapsed = time.perf_counter() - start
        print(f"{n:>4} {family:>6} {report.rhs:>4} {report.max_lhs:>8} "
              f"{str(report.valid).lower():>6} {lp_txt:>8} {min_txt:>8} {elapsed:>6.2f}s")


if __name__ == "__main__":
    main()
