"""Command line front end.

Subcommands
-----------
mine          run the multilevel miner and emit itemsets + rules
compare       run the bidirectional engine and the levelwise baseline
              side by side and tabulate the work done by each
oracle-check  cross-check the engine against exhaustive enumeration
gen           emit a seeded random taxonomy/transactions CSV pair

Exit codes: 0 success, 1 runtime failure (bad data, missing file,
mismatched results), 2 bad invocation, 3 exact-computation size limit.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from .baselines import ComparisonReport, compare, ml_t2l1
from .errors import (
    ConfigError,
    InvalidConfidence,
    InvalidMinsup,
    ItemsetTooLarge,
    MiningError,
    VocabularyTooLarge,
)
from .gen import random_dataset, taxonomy_csv_rows, transaction_csv_rows
from .multilevel import (
    DescentPolicy,
    LevelConfig,
    MultiLevelResult,
    mine_multilevel,
)
from .oracle import brute_force
from .rules import Rule, generate_rules
from .taxonomy import ItemCode, read_taxonomy_csv
from .transactions import TransactionDB, project_to_level, read_transactions_csv

SUPPORT_MODES = ("absolute", "fractional")
FORMATS = ("json", "text")
SEED_ENV = "PINCER_ML_SEED"

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad flags as ConfigError instead of exiting."""

    def error(self, message):
        raise ConfigError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="pincer-ml", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_policy=True):
        p.add_argument("--taxonomy", required=True, help="taxonomy CSV (code,name)")
        p.add_argument(
            "--transactions", required=True, help="transactions CSV (tid,item)"
        )
        p.add_argument(
            "--minsup",
            required=True,
            help="comma-separated per-level thresholds, most general level first",
        )
        p.add_argument(
            "--support-mode",
            choices=SUPPORT_MODES,
            default="absolute",
            help="interpret --minsup as counts or as fractions of the database",
        )
        if with_policy:
            p.add_argument(
                "--policy",
                choices=[p.value for p in DescentPolicy],
                default=DescentPolicy.FREQUENT_PARENTS.value,
                help="how each level's vocabulary descends from the level above",
            )
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--out", help="write the report here instead of stdout")

    p_mine = sub.add_parser("mine", help="mine itemsets and association rules")
    add_io(p_mine)
    p_mine.add_argument(
        "--min-conf",
        default="0.5",
        help="minimum rule confidence, a number in (0, 1]",
    )

    p_cmp = sub.add_parser(
        "compare", help="bidirectional engine vs. levelwise baseline"
    )
    add_io(p_cmp, with_policy=False)

    p_chk = sub.add_parser(
        "oracle-check", help="verify engine output by exhaustive enumeration"
    )
    add_io(p_chk)

    p_gen = sub.add_parser("gen", help="generate a random dataset")
    p_gen.add_argument("--taxonomy", required=True, help="taxonomy CSV to write")
    p_gen.add_argument(
        "--transactions", required=True, help="transactions CSV to write"
    )
    p_gen.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get(SEED_ENV, "0")),
        help=f"RNG seed (default: ${SEED_ENV} or 0)",
    )
    p_gen.add_argument("--roots", type=int, default=4)
    p_gen.add_argument("--max-children", type=int, default=3)
    p_gen.add_argument("--levels", type=int, default=3)
    p_gen.add_argument("--rows", type=int, default=20)
    p_gen.add_argument("--max-items", type=int, default=6)
    p_gen.add_argument("--format", choices=FORMATS, default="json")
    p_gen.add_argument("--out", help="write the summary here instead of stdout")
    return parser


def parse_minsup(text: str, mode: str, n_transactions: int, total_levels: int):
    """Turn ``3,2,2`` or ``0.2,0.13,0.13`` into absolute per-level counts.

    Fractional thresholds are resolved with exact arithmetic so that a
    value like 0.2 over 15 rows yields 3, never a float-rounded 4.
    """
    tokens = [tok.strip() for tok in text.split(",")]
    if len(tokens) != total_levels:
        raise ConfigError(
            f"--minsup needs {total_levels} comma-separated values, got {len(tokens)}"
        )
    values = []
    for tok in tokens:
        try:
            value = Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"bad --minsup entry {tok!r}") from None
        if mode == "absolute":
            if value.denominator != 1:
                raise ConfigError(
                    f"--minsup entry {tok!r} is not a whole count; "
                    "use --support-mode fractional for ratios"
                )
            if value < 1:
                raise ConfigError(f"--minsup entry {tok!r} must be at least 1")
            values.append(int(value))
        else:
            if not 0 < value <= 1:
                raise ConfigError(
                    f"fractional --minsup entry {tok!r} must be in (0, 1]"
                )
            values.append(max(1, math.ceil(value * n_transactions)))
    return tuple(values)


def parse_confidence(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"bad --min-conf value {text!r}") from None
    if not 0 < value <= 1:
        raise ConfigError(f"--min-conf must be in (0, 1], got {text!r}")
    return value


def _load_db(args) -> TransactionDB:
    taxonomy = read_taxonomy_csv(args.taxonomy)
    return read_transactions_csv(args.transactions, taxonomy)


def _meta(command: str) -> dict:
    from . import __version__

    return {
        "tool": "pincer-ml",
        "version": __version__,
        "command": command,
        "generated_at": datetime.now(timezone.utc).isoformat(),
    }


def _texts(itemset, vocabulary: tuple[ItemCode, ...]) -> list[str]:
    return [vocabulary[i].text for i in itemset]


# ---------------------------------------------------------------- mine


def _mine_payload(
    result: MultiLevelResult,
    rules_per_level: list[tuple[Rule, ...]],
    min_conf: Fraction,
) -> dict:
    levels = []
    for lr, rules in zip(result.levels, rules_per_level):
        vocab = lr.vocabulary
        levels.append(
            {
                "level": lr.level,
                "minsup": lr.minsup,
                "vocabulary_size": len(vocab),
                "mining_passes": lr.mining_passes,
                "expansion_passes": lr.expansion_passes,
                "maximal_frequent_sets": [
                    {"items": _texts(s, vocab), "support": c}
                    for s, c in lr.pincer.mfs.items()
                ],
                "frequent_itemsets": [
                    {
                        "items": _texts(fs.itemset, vocab),
                        "support": fs.support_count,
                        "fraction": str(fs.support_fraction),
                    }
                    for fs in lr.frequent
                ],
                "rules": [
                    {
                        "antecedent": _texts(r.antecedent, vocab),
                        "consequent": _texts(r.consequent, vocab),
                        "support": r.support_count,
                        "confidence": str(r.confidence),
                    }
                    for r in rules
                ],
            }
        )
    totals = {
        "mining_passes": result.mining_passes,
        "expansion_passes": result.expansion_passes,
        "passes": result.total_passes,
        "frequent_itemsets": sum(len(lr.frequent) for lr in result.levels),
        "rules": sum(len(rules) for rules in rules_per_level),
        "min_conf": str(min_conf),
    }
    return {"levels": levels, "totals": totals}


def _render_mine_text(payload: dict) -> str:
    lines = []
    for level in payload["levels"]:
        lines.append(
            f"level {level['level']}  minsup={level['minsup']}  "
            f"vocabulary={level['vocabulary_size']}  "
            f"passes={level['mining_passes']}+{level['expansion_passes']}"
        )
        lines.append("  maximal frequent sets:")
        for row in level["maximal_frequent_sets"]:
            lines.append(
                f"    {{{', '.join(row['items'])}}}  support={row['support']}"
            )
        if not level["maximal_frequent_sets"]:
            lines.append("    (none)")
        lines.append(
            f"  frequent itemsets: {len(level['frequent_itemsets'])}"
        )
        lines.append(f"  rules (min confidence {payload['totals']['min_conf']}):")
        for rule in level["rules"]:
            lines.append(
                "    {%s} -> {%s}  support=%d  confidence=%s"
                % (
                    ", ".join(rule["antecedent"]),
                    ", ".join(rule["consequent"]),
                    rule["support"],
                    rule["confidence"],
                )
            )
        if not level["rules"]:
            lines.append("    (none)")
        lines.append("")
    totals = payload["totals"]
    lines.append(
        f"totals: {totals['frequent_itemsets']} frequent itemsets, "
        f"{totals['rules']} rules, "
        f"{totals['mining_passes']} mining passes "
        f"+ {totals['expansion_passes']} expansion passes"
    )
    return "\n".join(lines) + "\n"


def cmd_mine(args) -> int:
    db = _load_db(args)
    min_conf = parse_confidence(args.min_conf)
    minsup = parse_minsup(
        args.minsup, args.support_mode, db.n_transactions, db.taxonomy.total_levels
    )
    config = LevelConfig(
        minsup_per_level=minsup,
        total_levels=db.taxonomy.total_levels,
        descent_policy=DescentPolicy(args.policy),
    )
    result = mine_multilevel(db, config)
    rules_per_level = [
        generate_rules(lr.frequent, min_conf, lr.level) for lr in result.levels
    ]
    payload = _mine_payload(result, rules_per_level, min_conf)
    _emit(args, payload, _render_mine_text)
    return EXIT_OK


# ------------------------------------------------------------- compare


def _compare_payload(report: ComparisonReport) -> dict:
    levels = []
    for level in report.levels:
        levels.append(
            {
                "level": level.level,
                "pincer_passes": level.pincer_passes,
                "baseline_passes": level.baseline_passes,
                "rows": [
                    {
                        "k": row.k,
                        "frequent_itemsets": [list(s) for s in row.frequent_itemsets],
                        "pincer_candidates": row.pincer_candidates,
                        "baseline_candidates": row.baseline_candidates,
                        "pincer_frequent": row.pincer_frequent,
                        "baseline_frequent": row.baseline_frequent,
                    }
                    for row in level.rows
                ],
            }
        )
    totals = {
        "pincer_passes": report.pincer_passes,
        "pincer_expansion_passes": report.pincer_expansion_passes,
        "baseline_passes": report.baseline_passes,
        "pincer_candidates": sum(
            row.pincer_candidates for level in report.levels for row in level.rows
        ),
        "baseline_candidates": sum(
            row.baseline_candidates for level in report.levels for row in level.rows
        ),
        "results_match": report.results_match,
    }
    return {"levels": levels, "totals": totals}


def _render_compare_text(payload: dict) -> str:
    lines = []
    for level in payload["levels"]:
        lines.append(
            f"level {level['level']}  "
            f"pincer passes={level['pincer_passes']}  "
            f"baseline passes={level['baseline_passes']}"
        )
        lines.append("    k  pincer-cand  baseline-cand  frequent")
        for row in level["rows"]:
            lines.append(
                f"    {row['k']}  {row['pincer_candidates']:11d}  "
                f"{row['baseline_candidates']:13d}  {row['pincer_frequent']:8d}"
            )
        lines.append("")
    totals = payload["totals"]
    lines.append(
        f"totals: pincer {totals['pincer_passes']} mining passes "
        f"({totals['pincer_candidates']} candidates) "
        f"+ {totals['pincer_expansion_passes']} expansion passes, "
        f"baseline {totals['baseline_passes']} passes "
        f"({totals['baseline_candidates']} candidates), "
        f"results {'match' if totals['results_match'] else 'DIFFER'}"
    )
    return "\n".join(lines) + "\n"


def cmd_compare(args) -> int:
    db = _load_db(args)
    minsup = parse_minsup(
        args.minsup, args.support_mode, db.n_transactions, db.taxonomy.total_levels
    )
    # The baseline only knows frequent-parents descent, so the engine is
    # run with the same policy to keep the comparison apples to apples.
    config = LevelConfig(
        minsup_per_level=minsup,
        total_levels=db.taxonomy.total_levels,
        descent_policy=DescentPolicy.FREQUENT_PARENTS,
    )
    mined = mine_multilevel(db, config)
    baseline = ml_t2l1(db, config)
    report = compare(mined, baseline)
    payload = _compare_payload(report)
    _emit(args, payload, _render_compare_text)
    return EXIT_OK if report.results_match else EXIT_RUNTIME


# -------------------------------------------------------- oracle-check


def cmd_oracle_check(args) -> int:
    db = _load_db(args)
    minsup = parse_minsup(
        args.minsup, args.support_mode, db.n_transactions, db.taxonomy.total_levels
    )
    config = LevelConfig(
        minsup_per_level=minsup,
        total_levels=db.taxonomy.total_levels,
        descent_policy=DescentPolicy(args.policy),
    )
    result = mine_multilevel(db, config)
    levels = []
    all_match = True
    for lr in result.levels:
        matrix = project_to_level(db, lr.level, frozenset(lr.vocabulary))
        oracle = brute_force(matrix, lr.minsup)
        engine_map = {fs.itemset: fs.support_count for fs in lr.frequent}
        engine_maximal = frozenset(lr.pincer.mfs)
        match = engine_map == oracle.frequent and engine_maximal == oracle.maximal
        all_match = all_match and match
        levels.append(
            {
                "level": lr.level,
                "vocabulary_size": len(lr.vocabulary),
                "engine_frequent": len(engine_map),
                "oracle_frequent": len(oracle.frequent),
                "engine_maximal": len(engine_maximal),
                "oracle_maximal": len(oracle.maximal),
                "match": match,
            }
        )
    payload = {"levels": levels, "totals": {"match": all_match}}

    def render(p):
        rows = [
            f"level {lvl['level']}: engine {lvl['engine_frequent']} frequent / "
            f"{lvl['engine_maximal']} maximal, oracle {lvl['oracle_frequent']} / "
            f"{lvl['oracle_maximal']} -> "
            + ("ok" if lvl["match"] else "MISMATCH")
            for lvl in p["levels"]
        ]
        verdict = "all levels match" if p["totals"]["match"] else "MISMATCH FOUND"
        return "\n".join(rows + [verdict]) + "\n"

    _emit(args, payload, render)
    return EXIT_OK if all_match else EXIT_RUNTIME


# ----------------------------------------------------------------- gen


def _write_csv(path: str, header: tuple[str, str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def cmd_gen(args) -> int:
    if args.rows < 0:
        raise ConfigError(f"--rows must be non-negative, got {args.rows}")
    if args.levels < 1:
        raise ConfigError(f"--levels must be positive, got {args.levels}")
    db = random_dataset(
        seed=args.seed,
        n_roots=args.roots,
        max_children=args.max_children,
        total_levels=args.levels,
        n_transactions=args.rows,
        max_items=args.max_items,
    )
    _write_csv(args.taxonomy, ("code", "name"), taxonomy_csv_rows(db.taxonomy))
    _write_csv(args.transactions, ("tid", "item"), transaction_csv_rows(db))
    payload = {
        "seed": args.seed,
        "taxonomy": args.taxonomy,
        "transactions": args.transactions,
        "leaves": len(db.taxonomy),
        "rows": db.n_transactions,
        "fingerprint": db.fingerprint(),
    }

    def render(p):
        return (
            f"wrote {p['leaves']} leaf items to {p['taxonomy']} and "
            f"{p['rows']} transactions to {p['transactions']} (seed {p['seed']})\n"
        )

    _emit(args, payload, render)
    return EXIT_OK


# ---------------------------------------------------------------- main


def _emit(args, payload: dict, render_text) -> None:
    if args.format == "json":
        report = {"meta": _meta(args.command), **payload}
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = render_text(payload)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


_DISPATCH = {
    "mine": cmd_mine,
    "compare": cmd_compare,
    "oracle-check": cmd_oracle_check,
    "gen": cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except (ConfigError, InvalidMinsup, InvalidConfidence) as exc:
        print(f"pincer-ml: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VocabularyTooLarge, ItemsetTooLarge) as exc:
        print(f"pincer-ml: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (MiningError, OSError) as exc:
        print(f"pincer-ml: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def app() -> None:
    sys.exit(main())


if __name__ == "__main__":
    app()
