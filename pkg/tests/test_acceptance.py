"""End-to-end acceptance checks, one summary line per criterion.

Each test prints ``[PASS]`` or ``[FAIL]`` through ``record`` and the lines are
collected again at the end of the pytest run.
"""

import time

import pytest

from squared_squares import BudgetExceeded, SearchOptions, enumerate_squares
from squared_squares.compositions import (
    LEMMA_FILTERS,
    BorderComposition,
    border_compositions,
    filter_compositions,
)
from squared_squares.lemmas import verify_all
from squared_squares.oracle import naive_enumerate
from squared_squares.serialize import dumps, from_bouwkamp, from_json, loads, to_bouwkamp, to_json
from squared_squares.symmetry import canonical_key

from .conftest import record

pytestmark = pytest.mark.acceptance

EXPECTED_CLASSES = {n: (1 if n in (11, 16) else 0) for n in range(1, 18)}
FULL_RUN_SECONDS = 30 * 60
SMALL_RUN_SECONDS = 60
ORACLE_SECONDS = 10 * 60
# Unpruned search runs at roughly 1e5 nodes/s; n <= 7 needs about 3.1e6 nodes.
UNPRUNED_NODE_BUDGET = 20_000_000

SEVENTEEN = """
4+3+4+6 4+3+6+4 4+3+10 4+5+3+5 4+5+8 4+6+3+4 4+6+7 4+7+6 4+8+5 4+9+4
5+3+4+5 5+3+5+4 5+3+9 5+4+3+5 5+4+8 5+7+5 5+8+4 6+3+8 6+4+3+4 6+4+7
6+5+6 6+7+4 7+3+7 7+4+6 7+6+4 8+3+6 8+4+5 8+5+4 9+3+5 10+3+4
"""
SEVENTEEN_SURVIVORS = "4+3+4+6 4+5+8 5+3+4+5 5+4+8 5+7+5 6+5+6"


def comps(text):
    return {BorderComposition.parse(c) for c in text.split()}


@pytest.fixture(scope="module")
def theorem_run():
    reports, elapsed = {}, {}
    for n in EXPECTED_CLASSES:
        start = time.perf_counter()
        reports[n] = enumerate_squares(n, SearchOptions(collect="all_labeled"))
        elapsed[n] = time.perf_counter() - start
    return reports, elapsed


def test_1_theorem(theorem_run):
    reports, elapsed = theorem_run
    got = {n: r.canonical_count for n, r in reports.items()}
    small = sum(t for n, t in elapsed.items() if n <= 15)
    total = sum(elapsed.values())
    ok = got == EXPECTED_CLASSES and small <= SMALL_RUN_SECONDS and total <= FULL_RUN_SECONDS
    wrong = {n: c for n, c in got.items() if c != EXPECTED_CLASSES[n]}
    record(1, ok, f"classes n=1..17 {'match' if not wrong else f'differ at {wrong}'}; "
                  f"n<=15 in {small:.2f}s, n<=17 in {total:.2f}s")
    assert ok


def test_1_corner_accelerator(theorem_run):
    reports, _ = theorem_run
    fast = {n: enumerate_squares(n, SearchOptions(corner_symmetry_break=True)) for n in EXPECTED_CLASSES}
    ok = all(fast[n].canonical_keys == reports[n].canonical_keys for n in EXPECTED_CLASSES)
    nodes = sum(r.nodes_expanded for r in fast.values())
    base = sum(r.nodes_expanded for r in reports.values())
    record("1 (corner accelerator)", ok, f"same classes for n=1..17 with {nodes} vs {base} nodes")
    assert ok


def test_2_fixtures(theorem_run, eleven, sixteen):
    reports, _ = theorem_run
    ok = (reports[11].canonical_keys == (canonical_key(eleven),)
          and reports[16].canonical_keys == (canonical_key(sixteen),))
    record(2, ok, "n=11 and n=16 representatives equal the reference dissections")
    assert ok


def test_3_mirror_accounting(theorem_run):
    reports, _ = theorem_run
    pairs = {n: reports[n].reflection_pair_count for n in (11, 16)}
    ok = pairs == {11: 2, 16: 2}
    record(3, ok, f"reflection_pair_count {pairs}")
    assert ok


def test_4_lemmas():
    reports = verify_all(max_n=17)
    failed = [r.lemma_id for r in reports if not r.passed]
    ok = not failed
    record(4, ok, f"{len(reports) - len(failed)}/{len(reports)} registry entries pass at max_n=17"
                  + (f"; failed {failed}" if failed else ""))
    assert ok


def test_5_case_lists():
    seventeen = border_compositions(17, 3)
    survivors = filter_compositions(
        filter_compositions(seventeen, ["reversal_dedupe"]), LEMMA_FILTERS
    )
    four16 = filter_compositions(border_compositions(16, 4, 4), ["reversal_dedupe"])
    checks = {
        "17 has 30": len(seventeen) == 30 and set(seventeen) == comps(SEVENTEEN),
        "17 survivors": set(survivors) == comps(SEVENTEEN_SURVIVORS) and len(survivors) == 6,
        "11 three-part": set(border_compositions(11, 3)) == comps("4+3+4"),
        "16 four-part": set(four16) == comps("4+3+4+5 4+3+5+4"),
    }
    ok = all(checks.values())
    record(5, ok, ", ".join(f"{k}: {'ok' if v else 'MISMATCH'}" for k, v in checks.items()))
    assert ok


def test_6_oracle_equivalence():
    deadline = time.monotonic() + ORACLE_SECONDS
    done = {False: [], True: []}
    mismatches = []
    stopped = None
    try:
        for include_trivial in (False, True):
            opts = SearchOptions.all_tilings() if include_trivial else SearchOptions()
            for n in range(1, 13):
                oracle = naive_enumerate(n, include_trivial=include_trivial, deadline=deadline)
                mine = enumerate_squares(n, opts)
                if (oracle.canonical_keys, oracle.raw_count) != (mine.canonical_keys, mine.raw_count):
                    mismatches.append((n, include_trivial))
                done[include_trivial].append(n)
    except BudgetExceeded:
        stopped = (n, include_trivial)
    ok = not mismatches and stopped is None
    detail = (f"nontrivial mode agrees for n<={max(done[False], default=0)}, "
              f"all-tilings mode for n<={max(done[True], default=0)}")
    if stopped:
        detail += (f"; {ORACLE_SECONDS}s oracle cap reached at n={stopped[0]} "
                   f"({'all-tilings' if stopped[1] else 'nontrivial'} mode)")
    if mismatches:
        detail += f"; mismatches {mismatches}"
    record(6, ok, detail)
    assert ok


def test_7_pruning_soundness():
    budget = UNPRUNED_NODE_BUDGET
    verified, mismatches, stopped = [], [], None
    for n in range(1, 14):
        try:
            plain = enumerate_squares(n, SearchOptions.unpruned(node_budget=budget))
        except BudgetExceeded:
            stopped = n
            break
        budget -= plain.nodes_expanded
        if plain.canonical_keys != enumerate_squares(n).canonical_keys:
            mismatches.append(n)
        verified.append(n)
    ok = not mismatches and stopped is None
    detail = f"pruned == unpruned for n<={max(verified, default=0)}"
    if stopped:
        detail += f"; {UNPRUNED_NODE_BUDGET} node budget exhausted at n={stopped}"
    if mismatches:
        detail += f"; mismatches {mismatches}"
    record(7, ok, detail)
    assert ok


def test_8_parallel_determinism():
    opts = SearchOptions(collect="all_labeled")
    runs = {k: enumerate_squares(16, opts, workers=k) for k in (1, 2, 8)}
    ok = runs[1] == runs[2] == runs[8]
    record(8, ok, f"K=1,2,8 reports identical at n=16 ({runs[1].nodes_expanded} nodes each)")
    assert ok


def test_9_round_trips():
    scope = []
    for n in range(1, 18):
        scope.extend(enumerate_squares(n, SearchOptions(collect="all_labeled")).labeled)
    for n in range(1, 7):
        scope.extend(naive_enumerate(n, include_trivial=True, collect="all_labeled").labeled)
    failures = 0
    for d in scope:
        if not (loads(dumps(d)) == d and from_json(to_json(d)) == d
                and from_bouwkamp(str(to_bouwkamp(d)), d.n) == d):
            failures += 1
    ok = failures == 0 and len(scope) > 0
    record(9, ok, f"text, JSON and Bouwkamp round trips hold for {len(scope) - failures}/{len(scope)} dissections")
    assert ok
