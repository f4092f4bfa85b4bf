"""End-to-end acceptance gate.

One test per shipping criterion, so ``pytest -v tests/test_acceptance.py``
prints exactly one PASSED/FAILED line for each.  Every expected value
here was frozen from the independent brute-force oracle (or recounted by
hand from the bundled CSVs) before the engine existed.
"""
import json
import random
import time
from fractions import Fraction

from conftest import DATA
from helpers import frequent_by_text, mfs_by_text, names
from pincer_ml.baselines import apriori, compare, ml_t2l1
from pincer_ml.cli import main
from pincer_ml.gen import random_matrix
from pincer_ml.multilevel import DescentPolicy, LevelConfig, mine_multilevel
from pincer_ml.oracle import brute_force
from pincer_ml.pincer import pincer_search
from pincer_ml.rules import expand_frequent, generate_rules
from pincer_ml.transactions import PassCounter, count_support

FP = DescentPolicy.FREQUENT_PARENTS
MAXIMAL = DescentPolicy.MAXIMAL_ITEMSET_ITEMS


def test_criterion_1_level1_singleton_supports(level1):
    started = time.monotonic()
    supports = {
        code.text[0]: count_support(level1, (j,))
        for j, code in enumerate(level1.vocabulary)
    }
    assert supports == {
        "A": 2, "B": 5, "C": 8, "D": 7, "E": 10, "F": 5, "G": 7, "H": 4, "I": 2,
    }
    assert time.monotonic() - started < 1.0
    print("PASS criterion 1: level-1 singleton supports match the golden counts")


def test_criterion_2_level1_maximal_border(level1):
    result = pincer_search(level1, 3)
    got = mfs_by_text(result.mfs, level1.vocabulary)
    assert got[("C**", "D**", "E**", "G**")] == 4
    assert got == {
        ("B**", "C**"): 3,
        ("E**", "F**"): 4,
        ("E**", "H**"): 3,
        ("C**", "D**", "E**", "G**"): 4,
    }
    oracle = brute_force(level1, 3)
    assert frozenset(result.mfs) == oracle.maximal
    print("PASS criterion 2: level-1 maximal border equals the oracle's")


def test_criterion_3_level3_maximal_policy(bookstore):
    result = mine_multilevel(bookstore, LevelConfig((3, 2, 2), 3, MAXIMAL))
    lr = result.levels[2]
    got = mfs_by_text(lr.pincer.mfs, lr.vocabulary)
    assert got[("D12", "E11", "G11")] == 2
    supports = frequent_by_text(lr.frequent, lr.vocabulary)
    # E12 is bought in T8, T9, T11 and T13 only, so its support is 4;
    # the golden file pins this oracle-recomputed count (hand tallies
    # of the source tables have been known to misread it as 10).
    assert supports[("E12",)] == 4
    print("PASS criterion 3: level-3 maximal list carries {D12,E11,G11}=2, E12=4")


def test_criterion_4_level2_supports(bookstore):
    result = mine_multilevel(bookstore, LevelConfig((3, 2, 2), 3, FP))
    lr = result.levels[1]
    supports = frequent_by_text(lr.frequent, lr.vocabulary)
    assert supports[("C1*",)] == 8
    assert supports[("D1*",)] == 7
    assert supports[("E1*",)] == 10
    assert supports[("F1*",)] == 5
    assert supports[("G1*",)] == 7
    assert supports[("C1*", "D1*")] == 5
    print("PASS criterion 4: level-2 frequent-parents supports match")


def test_criterion_5_pass_count_advantage(bookstore, level1):
    pincer_counter = PassCounter()
    pincer_search(level1, 3, pincer_counter)
    ladder_counter = PassCounter()
    apriori(level1, 3, ladder_counter)
    assert pincer_counter.passes == 3
    assert ladder_counter.passes == 4

    config = LevelConfig((3, 2, 2), 3, FP)
    report = compare(mine_multilevel(bookstore, config), ml_t2l1(bookstore, config))
    assert report.pincer_passes < report.baseline_passes
    assert (report.pincer_passes, report.baseline_passes) == (9, 11)
    print("PASS criterion 5: 3 vs 4 passes at level 1; 9 < 11 across levels")


def test_criterion_6_oracle_equivalence_200_seeds():
    started = time.monotonic()
    for seed in range(200):
        rng = random.Random(seed)
        matrix = random_matrix(
            rng,
            n_items=rng.randint(1, 12),
            n_transactions=rng.randint(1, 40),
            density=rng.uniform(0.15, 0.85),
        )
        minsup = rng.randint(1, 8)
        oracle = brute_force(matrix, minsup)

        border = pincer_search(matrix, minsup)
        assert frozenset(border.mfs) == oracle.maximal, f"seed {seed}"
        expanded = expand_frequent(frozenset(border.mfs), matrix, PassCounter())
        assert {
            fs.itemset: fs.support_count for fs in expanded
        } == oracle.frequent, f"seed {seed}"

        ladder = apriori(matrix, minsup, PassCounter())
        assert {
            fs.itemset: fs.support_count for fs in ladder.frequent
        } == oracle.frequent, f"seed {seed}"
    elapsed = time.monotonic() - started
    assert elapsed < 30.0, f"suite took {elapsed:.1f}s"
    print(f"PASS criterion 6: 200 seeded runs match the oracle in {elapsed:.1f}s")


def test_criterion_7_border_invariants(bookstore):
    from test_pincer import BorderRecorder
    from pincer_ml.transactions import project_to_level

    runs = 0
    for level, minsup in ((1, 3), (2, 2), (3, 2)):
        matrix = project_to_level(bookstore, level)
        recorder = BorderRecorder()
        pincer_search(matrix, minsup, observer=recorder)
        recorder.assert_invariants()
        runs += 1
    for seed in range(60):
        rng = random.Random(seed)
        matrix = random_matrix(
            rng,
            n_items=rng.randint(1, 11),
            n_transactions=rng.randint(1, 35),
            density=rng.uniform(0.2, 0.8),
        )
        recorder = BorderRecorder()
        pincer_search(matrix, rng.randint(1, 7), observer=recorder)
        recorder.assert_invariants()
        runs += 1
    print(f"PASS criterion 7: border invariants held on all {runs} runs")


def test_criterion_8_rule_correctness(level1):
    result = pincer_search(level1, 3)
    frequent = expand_frequent(frozenset(result.mfs), level1, PassCounter())
    rules = generate_rules(frequent, Fraction(1, 2), level=1)
    assert rules
    for r in rules:
        z = tuple(sorted(r.antecedent + r.consequent))
        # recount both sides straight from the bit matrix
        assert r.confidence == Fraction(
            count_support(level1, z), count_support(level1, r.antecedent)
        )
    v = level1.vocabulary
    table = {
        (names(v, r.antecedent), names(v, r.consequent)): r.confidence
        for r in rules
    }
    assert table[(("D**", "G**"), ("E**",))] == Fraction(1)
    print("PASS criterion 8: all rule confidences recount exactly; DG->E is 1")


def test_criterion_9_report_determinism(tmp_path):
    bodies = []
    for stem in ("first", "second"):
        out = tmp_path / f"{stem}.json"
        code = main(
            [
                "mine",
                "--taxonomy", str(DATA / "bookstore_taxonomy.csv"),
                "--transactions", str(DATA / "bookstore.csv"),
                "--minsup", "3,2,2",
                "--out", str(out),
            ]
        )
        assert code == 0
        report = json.loads(out.read_text())
        assert "meta" in report
        body = {k: v for k, v in report.items() if k != "meta"}
        bodies.append(json.dumps(body, sort_keys=True).encode())
    assert bodies[0] == bodies[1]
    print("PASS criterion 9: report bodies are byte-identical across runs")
