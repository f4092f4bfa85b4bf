"""Hierarchical item codes and the catalog that defines them.

Items live in a fixed-depth concept tree.  A code is written as a
fixed-width string with one branch symbol per level, most significant
first, padded with ``*`` for unspecified deeper levels: ``A11`` is a
leaf, ``A1*`` its parent, ``A**`` the top-level category.  Wildcards are
only ever a suffix, so every code names exactly one node.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import (
    BadHeader,
    BadLength,
    BadSymbol,
    DanglingCode,
    DuplicateCode,
    EmptyCode,
    EmptyTaxonomy,
    LevelOutOfRange,
    MiningError,
    WildcardNotSuffix,
)

WILDCARD = "*"
DEFAULT_LEVELS = 3


@dataclass(frozen=True)
class ItemCode:
    """One node of the concept tree, identified by its branch path."""

    path: tuple[str, ...]
    total_levels: int

    @property
    def depth(self) -> int:
        return len(self.path)

    @property
    def text(self) -> str:
        return "".join(self.path) + WILDCARD * (self.total_levels - self.depth)

    def __str__(self) -> str:
        return self.text

    def __lt__(self, other: "ItemCode") -> bool:
        return self.text < other.text


def parse_code(text: str, total_levels: int = DEFAULT_LEVELS) -> ItemCode:
    """Parse the fixed-width textual form of a code."""
    if len(text) != total_levels:
        raise BadLength(
            f"code {text!r}: expected {total_levels} symbols, got {len(text)}"
        )
    symbols: list[str] = []
    in_padding = False
    for ch in text:
        if ch == WILDCARD:
            in_padding = True
        elif in_padding:
            raise WildcardNotSuffix(f"code {text!r}: branch symbol after '*'")
        elif not ch.isalnum():
            raise BadSymbol(f"code {text!r}: symbol {ch!r} is not alphanumeric")
        else:
            symbols.append(ch)
    if not symbols:
        raise EmptyCode(f"code {text!r} is all wildcards")
    return ItemCode(tuple(symbols), total_levels)


def generalize(code: ItemCode, level: int) -> ItemCode:
    """Return the ancestor of ``code`` at the given depth.

    ``generalize(code, code.depth)`` is the code itself.
    """
    if not 1 <= level <= code.depth:
        raise LevelOutOfRange(
            f"cannot generalize {code.text!r} (depth {code.depth}) to level {level}"
        )
    return ItemCode(code.path[:level], code.total_levels)


def is_ancestor(a: ItemCode, b: ItemCode) -> bool:
    """True when ``a`` is a strict ancestor of ``b`` in the tree."""
    return a.depth < b.depth and b.path[: a.depth] == a.path


@dataclass(frozen=True, eq=False)
class Taxonomy:
    """All fully specified codes plus display names for every node.

    ``codes`` holds the leaves (depth == total_levels).  ``names`` maps
    every node, leaf or interior, to a display name; interior nodes that
    were never named explicitly default to their own code text.
    """

    codes: frozenset[ItemCode]
    names: Mapping[ItemCode, str]
    total_levels: int

    @cached_property
    def _by_depth(self) -> dict[int, tuple[ItemCode, ...]]:
        table: dict[int, tuple[ItemCode, ...]] = {}
        for depth in range(1, self.total_levels + 1):
            table[depth] = tuple(
                sorted({generalize(leaf, depth) for leaf in self.codes})
            )
        return table

    def codes_at_depth(self, depth: int) -> tuple[ItemCode, ...]:
        """All nodes at ``depth``, sorted by code text."""
        if not 1 <= depth <= self.total_levels:
            raise LevelOutOfRange(
                f"depth {depth} outside 1..{self.total_levels}"
            )
        return self._by_depth[depth]

    def name_of(self, code: ItemCode) -> str:
        return self.names[code]

    def __contains__(self, code: ItemCode) -> bool:
        return code in self.names

    def __len__(self) -> int:
        return len(self.codes)


def load_taxonomy(
    records: Iterable[tuple[str, str]], total_levels: int = DEFAULT_LEVELS
) -> Taxonomy:
    """Build a taxonomy from (code text, name) records.

    Records may name interior nodes as well as leaves.  Ancestors of
    every leaf are synthesized automatically; explicitly named interior
    nodes must have at least one leaf beneath them.
    """
    names: dict[ItemCode, str] = {}
    leaves: set[ItemCode] = set()
    interior: list[tuple[int, ItemCode]] = []
    seen_texts: set[str] = set()
    count = 0
    for position, (text, name) in enumerate(records, start=1):
        count += 1
        try:
            code = parse_code(text, total_levels)
        except MiningError as exc:
            raise type(exc)(f"record {position}: {exc}") from exc
        if code.text in seen_texts:
            raise DuplicateCode(f"record {position}: duplicate code {text!r}")
        seen_texts.add(code.text)
        names[code] = name
        if code.depth == total_levels:
            leaves.add(code)
        else:
            interior.append((position, code))
    if count == 0:
        raise EmptyTaxonomy("no records")
    if not leaves:
        raise EmptyTaxonomy("no fully specified codes")
    for position, code in interior:
        if not any(is_ancestor(code, leaf) for leaf in leaves):
            raise DanglingCode(
                f"record {position}: {code.text!r} has no leaf beneath it"
            )
    for leaf in leaves:
        for depth in range(1, total_levels):
            ancestor = generalize(leaf, depth)
            names.setdefault(ancestor, ancestor.text)
    return Taxonomy(frozenset(leaves), names, total_levels)


def _check_header(row: list[str] | None, expected: tuple[str, ...], path: Path) -> None:
    got = tuple(cell.strip().lower() for cell in row) if row else ()
    if got != expected:
        raise BadHeader(
            f"{path}: expected header {','.join(expected)!r}, got {row!r}"
        )


def _csv_records(path: Path, header: tuple[str, ...]) -> Iterator[tuple[str, str]]:
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        _check_header(next(reader, None), header, path)
        for row in reader:
            if not row:
                continue
            yield row[0].strip(), row[1].strip()


def read_taxonomy_csv(path: str | Path, total_levels: int | None = None) -> Taxonomy:
    """Load a taxonomy from a ``code,name`` CSV file.

    When ``total_levels`` is omitted it is inferred from the width of
    the first code in the file.
    """
    path = Path(path)
    records = list(_csv_records(path, ("code", "name")))
    if total_levels is None:
        if not records:
            raise EmptyTaxonomy(f"{path}: no records")
        total_levels = len(records[0][0])
    return load_taxonomy(records, total_levels)
