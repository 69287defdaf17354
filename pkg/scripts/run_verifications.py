#!/usr/bin/env python3
"""Run every machine verification at full scale and report the results.

Exits nonzero if any identity fails. Parallelism comes from --jobs or the
GROTHLIB_JOBS environment variable.
"""

import argparse
import os
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from grothlib import VERIFIERS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int,
                    default=int(os.environ.get("GROTHLIB_JOBS", "1")))
    ap.add_argument("--only", nargs="*", choices=sorted(VERIFIERS),
                    help="restrict to these identities")
    args = ap.parse_args()

    names = args.only or sorted(VERIFIERS)
    ok = True
    for name in names:
        report = VERIFIERS[name](jobs=args.jobs)
        print(report.to_text())
        print()
        ok = ok and report.passed
    print("all verifications passed" if ok else "FAILURES above")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
