"""Run the claim suite at acceptance scale and print a one-line summary per claim."""

import argparse

from bqgraph.harness import SuiteConfig, run_suite


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--report", help="write the JSON report (with timings) here")
    a = p.parse_args()
    cfg = SuiteConfig(seed=a.seed, trials=a.trials, total_quotient_instances=max(500, a.trials),
                      oracle_pairs=10 * a.trials, timings=True)
    report = run_suite(config=cfg)
    for c in report.claims:
        status = "ok  " if c.passed else "FAIL"
        print(f"{status} {c.id:<28} {c.instances:>8} instances {len(c.failures):>5} failures {c.wall_time:7.2f}s")
    if a.report:
        with open(a.report, "w") as fh:
            fh.write(report.dumps(timings=True))
    raise SystemExit(1 if report.failure_count else 0)


if __name__ == "__main__":
    main()
