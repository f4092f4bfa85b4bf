#!/usr/bin/env python3
"""Mine the bundled bookstore dataset at thresholds 3,2,2.

Extra command line flags are forwarded, so e.g. ``--format json`` or
``--policy maximal-itemset-items`` work as usual.
"""
import sys
from pathlib import Path

from pincer_ml.cli import main

ROOT = Path(__file__).resolve().parents[1]

if __name__ == "__main__":
    sys.exit(
        main(
            [
                "mine",
                "--taxonomy", str(ROOT / "data" / "bookstore_taxonomy.csv"),
                "--transactions", str(ROOT / "data" / "bookstore.csv"),
                "--minsup", "3,2,2",
                "--format", "text",
                *sys.argv[1:],
            ]
        )
    )
