"""Seeded random dataset generation for tests and the ``gen`` command.

Everything here takes an explicit ``random.Random`` so runs are
reproducible from a single seed.
"""
from __future__ import annotations

import random
import string
from collections.abc import Sequence

from .errors import ConfigError
from .taxonomy import ItemCode, Taxonomy, load_taxonomy
from .transactions import LevelMatrix, TransactionDB, load_transactions

_LETTERS = string.ascii_uppercase


def _root_symbols(count: int) -> list[str]:
    """A, B, ..., Z, AA, AB, ... — stable readable root names."""
    symbols = []
    for i in range(count):
        name = ""
        n = i
        while True:
            name = _LETTERS[n % 26] + name
            n = n // 26 - 1
            if n < 0:
                break
        symbols.append(name)
    return symbols


def random_taxonomy(
    rng: random.Random,
    n_roots: int = 4,
    max_children: int = 3,
    total_levels: int = 3,
) -> Taxonomy:
    """Build a random hierarchy with 1..max_children fanout per node."""
    if not 1 <= n_roots <= 26:
        # codes are one symbol per level, so there are at most 26 roots
        raise ConfigError(f"n_roots must be within 1..26, got {n_roots}")
    if not 1 <= max_children <= 9:
        raise ConfigError(f"max_children must be within 1..9, got {max_children}")
    prefixes = _root_symbols(n_roots)
    for _ in range(1, total_levels):
        next_prefixes = []
        for prefix in prefixes:
            for child in range(1, rng.randint(1, max_children) + 1):
                next_prefixes.append(f"{prefix}{child}")
        prefixes = next_prefixes
    records = [(leaf, f"item {leaf}") for leaf in prefixes]
    return load_taxonomy(records, total_levels=total_levels)


def random_transactions(
    rng: random.Random,
    taxonomy: Taxonomy,
    n_transactions: int = 20,
    max_items: int = 6,
) -> TransactionDB:
    """Draw each transaction as a uniform sample of 1..max_items leaves."""
    if n_transactions < 0:
        raise ConfigError(f"negative transaction count: {n_transactions}")
    leaves = sorted(taxonomy.codes)
    cap = min(max_items, len(leaves))
    if cap < 1:
        raise ConfigError("taxonomy has no leaf items to sample")
    records = []
    for tid in range(1, n_transactions + 1):
        size = rng.randint(1, cap)
        for code in sorted(rng.sample(leaves, size)):
            records.append((f"T{tid}", code.text))
    return load_transactions(records, taxonomy)


def random_dataset(
    seed: int,
    n_roots: int = 4,
    max_children: int = 3,
    total_levels: int = 3,
    n_transactions: int = 20,
    max_items: int = 6,
) -> TransactionDB:
    """One-call taxonomy + transactions from a single seed."""
    rng = random.Random(seed)
    taxonomy = random_taxonomy(rng, n_roots, max_children, total_levels)
    return random_transactions(rng, taxonomy, n_transactions, max_items)


def random_matrix(
    rng: random.Random,
    n_items: int,
    n_transactions: int,
    density: float = 0.4,
) -> LevelMatrix:
    """A bare one-level matrix for property tests, no hierarchy attached."""
    if not 0.0 <= density <= 1.0:
        raise ConfigError(f"density must be within [0, 1], got {density}")
    symbols = _root_symbols(n_items)
    vocabulary = tuple(
        ItemCode((symbol,), total_levels=1) for symbol in symbols
    )
    rows = tuple(
        sum(1 << j for j in range(n_items) if rng.random() < density)
        for _ in range(n_transactions)
    )
    return LevelMatrix(level=1, vocabulary=vocabulary, rows=rows)


def taxonomy_csv_rows(taxonomy: Taxonomy) -> list[tuple[str, str]]:
    """Leaf rows in code order, ready for ``csv.writer``."""
    return [(code.text, taxonomy.name_of(code)) for code in sorted(taxonomy.codes)]


def transaction_csv_rows(db: TransactionDB) -> list[tuple[str, str]]:
    """(tid, item) rows in original transaction order."""
    rows = []
    for tid, items in db.transactions:
        for code in sorted(items):
            rows.append((tid, code.text))
    return rows


def dataset_csv_rows(
    db: TransactionDB,
) -> tuple[Sequence[tuple[str, str]], Sequence[tuple[str, str]]]:
    return taxonomy_csv_rows(db.taxonomy), transaction_csv_rows(db)
