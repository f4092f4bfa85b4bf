#!/usr/bin/env python3
"""Reproduce the engine-vs-baseline work comparison on the bookstore data.

Prints per-level candidate and pass counts for the bidirectional search
next to the plain levelwise ladder.  Forwards extra flags to the CLI.
"""
import sys
from pathlib import Path

from pincer_ml.cli import main

ROOT = Path(__file__).resolve().parents[1]

if __name__ == "__main__":
    sys.exit(
        main(
            [
                "compare",
                "--taxonomy", str(ROOT / "data" / "bookstore_taxonomy.csv"),
                "--transactions", str(ROOT / "data" / "bookstore.csv"),
                "--minsup", "3,2,2",
                "--format", "text",
                *sys.argv[1:],
            ]
        )
    )
