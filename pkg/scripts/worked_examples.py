"""Print each worked-example check with its outcome."""

from bqgraph.harness import fixture_checks


def main():
    failed = 0
    for name, check in fixture_checks():
        ok = check()
        failed += not ok
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
