"""Machine checks for the structural facts about small squared squares.

Each registry entry replays one claim: predicate checks run over every
squared square found without the border pruning, nonexistence checks run the
plain search for one size, and pattern checks pin the forbidden border
pattern and require the constrained search to come back empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .compositions import LEMMA_FILTERS, border_compositions, rejecting_filters
from .geometry import SIDES, Dissection, SquareElement, border_elements, border_sizes, corner_elements
from .search import EnumerationReport, SearchOptions, enumerate_squares, enumerate_with_border
from .symmetry import canonical_key

DEFAULT_MAX_N = 17


class UnknownLemma(KeyError):
    pass


@dataclass
class LemmaReport:
    lemma_id: str
    statement: str
    max_n: int
    passed: bool
    checks: int = 0
    witnesses: list[str] = field(default_factory=list)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.lemma_id:<11} {verdict}  {self.checks:>4} checks  {self.statement}"


@lru_cache(maxsize=None)
def _found(n: int) -> EnumerationReport:
    # Border pruning off so the border lemmas are not assumed by the search.
    return enumerate_squares(n, SearchOptions(prune_border_min=False, collect="all_labeled"))


def _found_upto(max_n: int):
    for n in range(1, max_n + 1):
        yield from _found(n).labeled


def _predicate(test: Callable[[Dissection], bool], describe: str):
    def check(report: LemmaReport) -> None:
        for d in _found_upto(report.max_n):
            report.checks += 1
            if not test(d):
                report.passed = False
                report.witnesses.append(f"n={d.n}: {describe} fails for {d.elements}")
        report.witnesses.append(f"{report.checks} labeled squared squares with n <= {report.max_n}")
    return check


def _none_of_size(size: int):
    def check(report: LemmaReport) -> None:
        if report.max_n < size:
            report.witnesses.append(f"vacuous: max_n < {size}")
            return
        found = _found(size)
        report.checks += 1
        report.witnesses.append(f"n={size}: {found.canonical_count} classes")
        report.passed = found.canonical_count == 0
    return check


def _none_below(size: int):
    def check(report: LemmaReport) -> None:
        for n in range(1, min(size - 1, report.max_n) + 1):
            report.checks += 1
            count = _found(n).canonical_count
            if count:
                report.passed = False
                report.witnesses.append(f"n={n}: {count} classes")
        report.witnesses.append(f"searched n = 1..{min(size - 1, report.max_n)}")
    return check


def _unique_at(size: int):
    def check(report: LemmaReport) -> None:
        from .serialize import fixtures

        if report.max_n < size:
            report.witnesses.append(f"vacuous: max_n < {size}")
            return
        ref = next(d for d in fixtures().values() if d.n == size)
        reps = _found(size).representatives
        report.checks += 1
        report.passed = len(reps) == 1 and canonical_key(reps[0]) == canonical_key(ref)
        report.witnesses.append(f"n={size}: {len(reps)} classes, matches reference: {report.passed}")
    return check


def _border_kill(filter_id: str):
    def check(report: LemmaReport) -> None:
        for n in range(1, report.max_n + 1):
            for comp in border_compositions(n):
                if filter_id not in rejecting_filters(comp, LEMMA_FILTERS):
                    continue
                found = enumerate_with_border(n, comp)
                report.checks += 1
                report.witnesses.append(f"n={n} border {comp}: {found.raw_count} completions")
                if found.raw_count:
                    report.passed = False
    return check


def _corner_pattern(report: LemmaReport) -> None:
    # 5 in the corner, 3 next to it on both sides, then 4 on both sides.
    pattern = (SquareElement(0, 0, 5), SquareElement(5, 0, 3), SquareElement(8, 0, 4),
               SquareElement(0, 5, 3), SquareElement(0, 8, 4))
    for n in range(12, report.max_n + 1):
        found = enumerate_squares(n, SearchOptions(required=pattern))
        report.checks += 1
        report.witnesses.append(f"n={n}: {found.raw_count} completions")
        if found.raw_count:
            report.passed = False


def _sixteen_three(report: LemmaReport) -> None:
    if report.max_n < 16:
        report.witnesses.append("vacuous: max_n < 16")
        return
    for comp in border_compositions(16, min_parts=3, max_parts=3):
        found = enumerate_with_border(16, comp)
        report.checks += 1
        report.witnesses.append(f"border {comp}: {found.raw_count} completions")
        if found.raw_count:
            report.passed = False
    for d in _found(16).labeled:
        report.checks += 1
        if any(len(border_sizes(d, side)) == 3 for side in SIDES):
            report.passed = False
            report.witnesses.append(f"three-element border in {d.elements}")


def _sixteen_four(report: LemmaReport) -> None:
    if report.max_n < 16:
        report.witnesses.append("vacuous: max_n < 16")
        return
    for d in _found(16).labeled:
        report.checks += 1
        counts = [len(border_sizes(d, side)) for side in SIDES]
        report.witnesses.append(f"border element counts {counts}")
        if counts != [4, 4, 4, 4]:
            report.passed = False


LEMMAS: dict[str, tuple[str, Callable[[LemmaReport], None]]] = {
    "L1": ("every border element has side >= 3",
           _predicate(lambda d: all(e.s >= 3 for e in border_elements(d)), "border side >= 3")),
    "L2": ("every corner element has side >= 4",
           _predicate(lambda d: all(e.s >= 4 for e in corner_elements(d)), "corner side >= 4")),
    "L3": ("at least six elements touch the border",
           _predicate(lambda d: len(border_elements(d)) >= 6, "six border elements")),
    "L4": ("no squared square smaller than 11", _none_below(11)),
    "L5": ("exactly one class of side 11", _unique_at(11)),
    "L6": ("no squared square of side 12", _none_of_size(12)),
    "L7": ("a 3 between two border parts >= 5 cannot be completed", _border_kill("x3y")),
    "L8": ("no squared square of side 13", _none_of_size(13)),
    "L9": ("a corner 4 cannot have a border neighbour >= 6", _border_kill("corner4_neighbor6")),
    "L10": ("no squared square of side 14", _none_of_size(14)),
    "L11": ("a border starting 4+3+x with x >= 6 cannot be completed", _border_kill("fourthree_x")),
    "L12": ("no squared square of side 15", _none_of_size(15)),
    "L13": ("a 4 between two border parts >= 6 cannot be completed", _border_kill("x4y")),
    "L_no43535": ("a corner 5 flanked by 3 then 4 on both sides cannot be completed", _corner_pattern),
    "L16_three": ("no side-16 border has exactly three elements", _sixteen_three),
    "L16_four": ("every side-16 border has exactly four elements", _sixteen_four),
}


def verify_lemma(lemma_id: str, max_n: int = DEFAULT_MAX_N) -> LemmaReport:
    try:
        statement, check = LEMMAS[lemma_id]
    except KeyError:
        raise UnknownLemma(f"unknown lemma id {lemma_id!r}; known: {', '.join(LEMMAS)}") from None
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    report = LemmaReport(lemma_id, statement, max_n, passed=True)
    check(report)
    return report


def verify_all(max_n: int = DEFAULT_MAX_N) -> list[LemmaReport]:
    return [verify_lemma(lemma_id, max_n) for lemma_id in LEMMAS]
