from pathlib import Path

import pytest

from pincer_ml import project_to_level, read_taxonomy_csv, read_transactions_csv

DATA = Path(__file__).resolve().parents[1] / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def bookstore_taxonomy():
    return read_taxonomy_csv(DATA / "bookstore_taxonomy.csv")


@pytest.fixture(scope="session")
def bookstore(bookstore_taxonomy):
    return read_transactions_csv(DATA / "bookstore.csv", bookstore_taxonomy)


@pytest.fixture(scope="session")
def level1(bookstore):
    return project_to_level(bookstore, 1)
