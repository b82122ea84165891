"""
Identity sweeps, benchmarks and grid serialization

IdentitySweeper turns an identity name plus inclusive bounds into an index
set, checks every case and summarizes the outcomes in a CheckReport.
Benchmark times the single-entry routes from cold memo tables.
"""

import csv
import io
import json
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor

from pascal_det import identities
from pascal_det.base import BaseComponent
from pascal_det.det_arrays import pd_algorithm, route
from pascal_det.exact_det import (
    condensation_identity,
    det_bareiss,
    det_condensation,
    det_laplace,
)
from pascal_det.exceptions import DomainError, RouteDisagreementError, ZeroInteriorError
from pascal_det.memo import clear_all_caches
from pascal_det.models import (
    AnchoredRect,
    BenchRecord,
    CheckOutcome,
    CheckReport,
    DetGrid,
    GridIndex,
    Method,
)

logger = logging.getLogger(__name__)

IDENTITIES = (
    "rahimpour",
    "general",
    "star",
    "cross",
    "product",
    "stick",
    "routes",
    "row-one",
    "narayana",
    "tiling",
    "condensation",
)

BENCH_METHODS = (Method.DIRECT, Method.RECURSIVE, Method.CONDENSATION, Method.CLOSED_FORM)


# ============================================================
# Index sets
# ============================================================

def _span(low, high):
    return range(low, high + 1)


def _cases_rahimpour(b):
    return [dict(i=i, j=j) for i in _span(0, b["max_i"]) for j in _span(0, b["max_j"])]


def _cases_general(b):
    return [
        dict(i=i, j=j, k=k)
        for i in _span(0, b["max_i"])
        for j in _span(0, b["max_j"])
        for k in _span(1, b["max_k"])
    ]


def _cases_star(b):
    return [
        dict(order=q, rect=AnchoredRect(GridIndex(i, j), m, l), slide=t)
        for q in _span(0, b["max_k"])
        for i in _span(0, b["max_i"])
        for j in _span(0, b["max_j"])
        for m in _span(1, b["max_m"])
        for l in _span(1, b["max_l"])
        for t in _span(1, j)
    ]


def _cases_cross(b):
    return [
        dict(order=q, corner=GridIndex(i, j), size=s, slide=t)
        for q in _span(0, b["max_k"])
        for i in _span(0, b["max_i"])
        for j in _span(0, b["max_j"])
        for s in _span(1, b["max_size"])
        for t in _span(1, j)
    ]


def _cases_product(b):
    return [dict(k=k, j=j) for k in _span(1, b["max_k"]) for j in _span(0, b["max_j"])]


def _cases_stick(b):
    return [
        dict(k=k, i=i, j=j)
        for k in _span(1, b["max_k"])
        for i in _span(0, b["max_i"])
        for j in _span(0, b["max_j"])
    ]


def _cases_routes(b):
    return [
        dict(k=k, i=i, j=j)
        for k in _span(0, b["max_k"])
        for i in _span(0, b["max_i"])
        for j in _span(0, b["max_j"])
    ]


def _cases_row_one(b):
    return [dict(k=k, j=j) for k in _span(1, b["max_k"]) for j in _span(0, b["max_j"])]


def _cases_narayana(b):
    return [
        dict(i=i, j=j)
        for i in _span(0, b["max_i"])
        for j in _span(0, b["max_j"])
        if i + j >= 1
    ]


def _cases_tiling(b):
    return [
        dict(order=q, rect=AnchoredRect(GridIndex(i, j), m, l))
        for q in _span(0, b["max_k"])
        for i in _span(0, b["max_i"])
        for j in _span(0, b["max_j"])
        for m in _span(1, b["max_m"])
        for l in _span(1, b["max_l"])
    ]


def _cases_condensation(b):
    rng = random.Random(b["seed"])
    cases = []
    for sample in range(b["samples"]):
        n = rng.randint(1, b["max_n"])
        matrix = tuple(tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n))
        cases.append(dict(sample=sample, matrix=matrix, cap=b["cap"]))
    return cases


def check_random_matrix(sample, matrix, cap=None):
    """Condensation and elimination agree with cofactor expansion on one matrix"""
    expected = det_laplace(matrix, cap)
    notes = {}
    try:
        condensed = det_condensation(matrix)
    except ZeroInteriorError as e:
        condensed = None
        notes["zero_interior"] = str(e)
    eliminated = det_bareiss(matrix)
    passed = eliminated == expected and condensed in (None, expected)
    if len(matrix) >= 3:
        lhs, rhs = condensation_identity(matrix)
        passed = passed and lhs == rhs
        notes["identity"] = f"{lhs} = {rhs}"
    return CheckOutcome(
        identity="condensation",
        passed=passed,
        indices={"sample": sample, "n": len(matrix)},
        lhs=expected,
        rhs=eliminated if condensed is None else condensed,
        notes=notes if not passed else {},
    )


SWEEPS = {
    "rahimpour": (_cases_rahimpour, identities.check_rahimpour, ("max_i", "max_j")),
    "general": (_cases_general, identities.check_generalized, ("max_i", "max_j", "max_k")),
    "star": (_cases_star, identities.check_star_of_david, ("max_i", "max_j", "max_k", "max_m", "max_l")),
    "cross": (_cases_cross, identities.check_sliding_cross, ("max_i", "max_j", "max_k", "max_size")),
    "product": (_cases_product, identities.check_product_identity, ("max_j", "max_k")),
    "stick": (_cases_stick, identities.check_double_stick, ("max_i", "max_j", "max_k")),
    "routes": (_cases_routes, identities.check_route_agreement, ("max_i", "max_j", "max_k")),
    "row-one": (_cases_row_one, identities.check_row_one, ("max_j", "max_k")),
    "narayana": (_cases_narayana, identities.check_narayana, ("max_i", "max_j")),
    "tiling": (_cases_tiling, identities.check_unit_tiling, ("max_i", "max_j", "max_k", "max_m", "max_l")),
    "condensation": (_cases_condensation, check_random_matrix, ("samples", "seed", "max_n")),
}

DEFAULT_BOUNDS = {
    "max_i": 6,
    "max_j": 6,
    "max_k": 4,
    "max_m": 4,
    "max_l": 4,
    "max_size": 5,
    "samples": 500,
    "seed": 0,
    "max_n": 6,
}


# ============================================================
# Sweeps
# ============================================================

class IdentitySweeper(BaseComponent):
    """Runs identity checks over inclusive index ranges"""

    def __init__(self, config=None, workers=None):
        super().__init__(config)
        self.workers = self.get_config("SWEEP_WORKERS", 1) if workers is None else workers
        if self.workers < 1:
            raise DomainError(f"workers must be at least 1, got {self.workers}")

    def run(self, identity, **bounds):
        """
        Check every case of an identity

        Args:
            identity (str): one of IDENTITIES
            **bounds: inclusive bounds such as max_i=6; missing ones use
                DEFAULT_BOUNDS

        Returns:
            CheckReport: failures are listed in index order
        """
        if identity not in SWEEPS:
            raise DomainError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
        build_cases, check, used = SWEEPS[identity]
        merged = {**DEFAULT_BOUNDS, **{key: value for key, value in bounds.items() if value is not None}}
        for key in used:
            if merged[key] < 0:
                raise DomainError(f"bound {key} must be non-negative, got {merged[key]}")
        ranges = {key: merged[key] for key in used}
        merged["cap"] = self.get_config("LAPLACE_CAP")
        if identity == "condensation" and not 1 <= merged["max_n"] <= merged["cap"]:
            raise DomainError(f"max_n must lie in 1..{merged['cap']}, got {merged['max_n']}")

        start = time.perf_counter()
        cases = build_cases(merged)
        if identity == "routes":
            cases = self._attach_algorithm_values(cases, merged)
        logger.info(f"Checking {identity} on {len(cases)} cases with {self.workers} worker(s)")

        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                outcomes = list(pool.map(lambda case: check(**case), cases))
        else:
            outcomes = [check(**case) for case in cases]

        failures = [outcome for outcome in outcomes if not outcome.passed]
        elapsed_ms = (time.perf_counter() - start) * 1000
        for outcome in failures[:5]:
            logger.error(f"Counterexample for {identity}: {outcome.indices}")
        logger.info(f"Finished {identity}: {len(cases)} checked, {len(failures)} failed")
        return CheckReport(
            identity=identity,
            ranges=ranges,
            checked=len(outcomes),
            failures=failures,
            elapsed_ms=elapsed_ms,
        )

    @staticmethod
    def _attach_algorithm_values(cases, bounds):
        # one staged build per order instead of one per cell
        grids = {
            k: pd_algorithm(k, bounds["max_i"] + 1, bounds["max_j"] + 1)[0]
            for k in _span(1, bounds["max_k"])
        }
        return [
            {**case, "algorithm_value": grids[case["k"]].entries[case["i"]][case["j"]]}
            if case["k"] >= 1 else case
            for case in cases
        ]


# ============================================================
# Benchmark
# ============================================================

class Benchmark(BaseComponent):
    """Times the single-entry routes on cold memo tables"""

    def run(self, order, idx, iters=None, methods=BENCH_METHODS):
        """
        Args:
            order (int): k, at least 1
            idx (GridIndex): entry to evaluate
            iters (int): repetitions per method; every repetition starts cold

        Returns:
            list: one BenchRecord per method

        Raises:
            RouteDisagreementError: if two methods return different values
        """
        if iters is None:
            iters = self.get_config("BENCH_DEFAULT_ITERS", 10)
        if iters < 1:
            raise DomainError(f"iters must be at least 1, got {iters}")
        if order < 1:
            raise DomainError(f"benchmark order must be at least 1, got {order}")

        records = []
        for method in methods:
            evaluate = route(method)
            total = 0.0
            value = None
            for _ in range(iters):
                clear_all_caches()
                start = time.perf_counter()
                value = evaluate(order, idx)
                total += time.perf_counter() - start
            logger.info(f"Benchmarked {method.value}: {total * 1000:.3f} ms over {iters} calls")
            records.append(BenchRecord(
                method=method, order=order, idx=idx, iters=iters, total_ms=total * 1000, value=value,
            ))

        values = {record.method.value: record.value for record in records}
        if len(set(values.values())) > 1:
            raise RouteDisagreementError(values)
        return records


def format_bench(records):
    """Fixed-width table; timings include memo-table construction"""
    lines = [
        "# cold caches: timings include memo-table construction, exclude process startup",
        f"{'method':<14}{'order':>6}{'i':>5}{'j':>5}{'iters':>7}{'total_ms':>14}{'per_call_ms':>14}  value",
    ]
    for record in records:
        lines.append(
            f"{record.method.value:<14}{record.order:>6}{record.idx.i:>5}{record.idx.j:>5}"
            f"{record.iters:>7}{record.total_ms:>14.3f}{record.per_call_ms:>14.3f}  {record.value}"
        )
    return "\n".join(lines) + "\n"


# ============================================================
# Grid serialization
# ============================================================

def grid_to_csv(grid):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(grid.entries)
    return buffer.getvalue()


def grid_to_json(grid):
    return json.dumps(grid.to_dict()) + "\n"


def grid_from_json(text):
    return DetGrid.from_dict(json.loads(text))


def grid_to_table(grid):
    """Right-aligned columns for reading; not a stable machine format"""
    cells = [[str(value) for value in row] for row in grid.entries]
    widths = [max(len(row[c]) for row in cells) for c in range(grid.cols)]
    return "".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)) + "\n"
        for row in cells
    )


FORMATTERS = {
    "table": grid_to_table,
    "csv": grid_to_csv,
    "json": grid_to_json,
}


def report_to_json(report):
    return json.dumps(report.to_dict(), indent=2) + "\n"
