"""
Formula-versus-oracle sweep behind ``manage.py verify``.

Cases are independent; they fan out over a process pool and the results are
merged in sorted key order so the summary does not depend on scheduling.
Jobs are ``functools.partial`` objects over module-level checks so they pickle.
"""

import functools
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np
from django.conf import settings

from formulas.linearity import is_c_linear, is_cohen_macaulay, is_support_linear, two_var_linearity
from formulas.utils import (
    betti_params,
    betti_params_recursive,
    betti_table_formula,
    cohomology_table_formula,
    guv,
    interval_nakayama_summary,
)
from formulas.vanishing import nonvanishing_witness, two_var_report, vanishing_h0, vanishing_top
from helpers import degrees
from helpers.degrees import Box
from helpers.errors import ComplexTooLarge, NakayamaError, ParseError, UsageError
from helpers.linalg import FieldSpec, get_field
from ideals.models import MonomialIdeal
from ideals.utils import (
    all_t_determined_ideals,
    alexander_dual,
    is_finite_length,
    random_t_determined_ideal,
    with_pure_powers,
)
from modreps.models import CohomologyTable
from modreps.utils import (
    alexander_dual_module,
    betti_table,
    cohomology_table,
    concentrated,
    interval_complex,
    interval_module,
    koszul_tensor,
    nakayama,
    nakayama_step,
    nakayama_table,
    pullback,
    quotient_module,
    same_module,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    key: tuple
    ok: bool
    detail: dict | None = None

    def as_json(self):
        return {"check": self.name, "case": repr(self.key), "detail": self.detail}


@dataclass
class Summary:
    checked: int = 0
    failed: int = 0
    first_failure: dict | None = None

    def add(self, result: CheckResult):
        self.checked += 1
        if not result.ok:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = result.as_json()
                logger.warning("first failure: %s on %s", result.name, result.key)

    def as_json(self):
        return {"checked": self.checked, "failed": self.failed, "first_failure": self.first_failure}


def parse_exhaustive(text: str) -> tuple[int, int]:
    """Read ``n=2,tmax=2``."""
    try:
        parts = dict(part.split("=") for part in text.split(","))
        return int(parts["n"]), int(parts["tmax"])
    except (KeyError, ValueError) as exc:
        raise ParseError(f"cannot read sweep {text!r}, expected n=<n>,tmax=<t>") from exc


def _table_check(name, key, left: CohomologyTable, right: CohomologyTable) -> CheckResult:
    return CheckResult(name, key, left == right, left.first_difference(right))


def _flag(name, key, ok, **detail) -> CheckResult:
    return CheckResult(name, key, bool(ok), None if ok else detail)


def _k_range(t):
    return Box(degrees.zeros(len(t)), degrees.add(t, degrees.ones(len(t))))


def check_case(I: MonomialIdeal, t, k, field: FieldSpec) -> list[CheckResult]:
    """Every per-(I, t, k) comparison."""
    n = len(t)
    key = (n, tuple(t), I.gens, tuple(k))
    results = []
    oracle = nakayama_table(I, t, k, field, with_mult=True)
    formula = cohomology_table_formula(I, t, k, field, with_mult=True)
    results.append(_table_check("cohomology", key, formula.without_mult(), oracle.without_mult()))
    results.append(_table_check("multiplication", key, formula, oracle))
    results.append(_table_check("betti", key, betti_table_formula(I, t, k, field), betti_table(I, t, k, field)))
    results.append(_flag(
        "bounds", key, all(0 <= i <= 2 * n - 1 for i in oracle.indices()), indices=oracle.indices(),
    ))
    if degrees.leq(degrees.ones(n), k):
        top = 2 * n - 1
        results.append(_flag("vanishing_h0", key, vanishing_h0(I, t, k) == oracle.vanishes(0)))
        results.append(_flag("vanishing_top", key, vanishing_top(I, t, k) == oracle.vanishes(top)))
        witnesses = nonvanishing_witness(I, t, k)
        results.append(_flag(
            "witnesses", key, all(not oracle.vanishes(w.i) for w in witnesses),
            witnesses=[w.as_json() for w in witnesses], indices=oracle.indices(),
        ))
        if n == 2:
            report = two_var_report(I, t, k)
            results.append(_flag(
                "two_variable", key,
                all(report.vanishing()[i] == oracle.vanishes(i) for i in range(4))
                and report.single_nonvanishing == (len(oracle.indices()) <= 1),
                report=report.as_json(), indices=oracle.indices(),
            ))
            if degrees.leq(k, t):
                window = degrees.sub(degrees.add(t, degrees.ones(n)), k)
                linear = is_c_linear(betti_table(I, t, window, field).shifted(4), degrees.sub(t, k), n)
                results.append(_flag(
                    "two_variable_linearity", key, two_var_linearity(I, t, k) == linear, oracle=linear,
                ))
    return results


def check_duality(I: MonomialIdeal, t, field: FieldSpec) -> list[CheckResult]:
    key = (len(t), tuple(t), I.gens)
    dual = alexander_dual(I, t)
    results = [_flag("dual_involution", key, alexander_dual(dual, t) == I, dual=dual.as_json())]
    box = Box.upto(t)
    identity = all(I.contains(degrees.sub(t, a)) == (not dual.contains(a)) for a in box)
    results.append(_flag("dual_membership", key, identity))
    M = quotient_module(I, t, field)
    A = alexander_dual_module(M)
    results.append(_flag("dual_module", key, same_module(alexander_dual_module(A), M)))
    results.append(_flag(
        "dual_module_support", key, all(A.dim(a) == (1 if dual.contains(a) else 0) for a in box),
    ))
    return results


def check_cm_duality(I: MonomialIdeal, t, field: FieldSpec) -> CheckResult:
    """S/I is Cohen–Macaulay iff its Alexander dual module has a support-linear resolution."""
    key = (len(t), tuple(t), I.gens)
    cm = is_cohen_macaulay(nakayama_table(I, t, degrees.ones(len(t)), field))
    dual = alexander_dual_module(quotient_module(I, t, field))
    linear = is_support_linear(cohomology_table(koszul_tensor(concentrated(dual))))
    return _flag("cm_duality", key, cm == linear, cohen_macaulay=cm, support_linear=linear)


def interval_table(summary, t) -> CohomologyTable:
    if summary.is_zero:
        return CohomologyTable(t=t)
    return CohomologyTable(t=t, dims={(summary.gamma, r): 1 for r in Box(summary.lo, summary.hi)})


def check_intervals(tmax: int, field: FieldSpec) -> list[CheckResult]:
    """One-variable identities: the interval rule, interval duality, the complexes N^k_t(t-y)."""
    results = []
    for t in range(tmax + 1):
        for a, b in itertools.combinations_with_replacement(range(t + 1), 2):
            key = (1, (t,), a, b)
            M = interval_module((t,), (a,), (b,), field)
            step = cohomology_table(nakayama_step(concentrated(M), 0))
            results.append(_table_check(
                "interval_rule", key, step, interval_table(interval_nakayama_summary((t,), (1,), (a,), (b,)), (t,)),
            ))
            for k in range(2 * t + 5):
                iterated = cohomology_table(nakayama(concentrated(M), (k,)))
                summary = interval_nakayama_summary((t,), (k,), (a,), (b,))
                results.append(_table_check("interval_iterate", key + (k,), iterated, interval_table(summary, (t,))))
            results.append(_flag(
                "interval_duality", key,
                same_module(alexander_dual_module(M), interval_module((t,), (t - b,), (t - a,), field)),
            ))
        for y in range(t + 1):
            start = concentrated(interval_module((t,), (0,), (t - y,), field))
            for k in range(t + 2):
                key = (1, (t,), "y", y, k)
                results.append(_table_check(
                    "interval_complex", key,
                    cohomology_table(interval_complex(k, t, y, field), with_mult=True),
                    cohomology_table(nakayama(start, (k,)), with_mult=True),
                ))
            for k in range(t + 1):
                for r in range(3):
                    key = (1, (t,), "y", y, k, "r", r)
                    results.append(_table_check(
                        "interval_pullback", key,
                        cohomology_table(pullback(interval_complex(k + 1, t, y, field), (k,), (r,)), with_mult=True),
                        cohomology_table(interval_complex(k + 1 + r, t + r, y + r, field), with_mult=True),
                    ))
    return results


def check_parameters() -> list[CheckResult]:
    """guv against the interval rule for t ≤ (3,3), and the Betti closed form against its recursion."""
    results = []
    for t in Box.upto((3, 3)):
        for k in _k_range(t):
            for r in Box.upto(t):
                params = guv(k, t, r)
                summary = interval_nakayama_summary(t, k, degrees.zeros(2), degrees.sub(t, r))
                ok = (
                    not summary.is_zero
                    and summary.gamma == params.gamma
                    and summary.lo == degrees.sub(t, params.v)
                    and summary.hi == degrees.sub(t, params.u)
                )
                results.append(_flag("guv", (2, t, k, r), ok, params=params.as_json(), summary=summary.as_json()))
    for t in range(5):
        for k in range(2 * t + 5):
            for r in range(t + 1):
                closed = betti_params((k,), (t,), (r,))
                recursive = betti_params_recursive((k,), (t,), (r,))
                results.append(_flag(
                    "betti_params", (1, t, k, r), closed == recursive,
                    closed=closed.as_json(), recursive=recursive.as_json(),
                ))
    return results


def check_periodicity(I: MonomialIdeal, t, field: FieldSpec) -> list[CheckResult]:
    n = len(t)
    base = nakayama_table(I, t, degrees.zeros(n), field)
    results = []
    for j in range(n):
        k = degrees.scale(t[j] + 2, degrees.unit(n, j))
        results.append(_table_check(
            "periodicity", (n, tuple(t), I.gens, k), nakayama_table(I, t, k, field), base.shifted(-2),
        ))
    return results


def check_stability(I: MonomialIdeal, t, k, r, field: FieldSpec) -> CheckResult:
    """
    H^i N^{k+1+r}_{t+r}(S/I)_d = H^i N^{k+1}_t(S/I)_{q_k^r(d)}.

    Only for S/I of finite length: when the support of S/I reaches t_j, the
    wider box sees an interval ending at t+r instead of t and the identity fails.
    """
    if not is_finite_length(I):
        raise UsageError(f"stability needs a pure power of every variable in {I}")
    n = len(t)
    one = degrees.ones(n)
    wide = degrees.add(t, r)
    left = nakayama_table(I, wide, degrees.add(degrees.add(k, one), r), field)
    right = nakayama_table(I, t, degrees.add(k, one), field).reindexed(
        lambda d: degrees.q_vector(k, r, d), wide,
    )
    return _table_check("stability", (n, tuple(t), I.gens, tuple(k), tuple(r)), left, right)


def _as_list(fn, *args) -> list[CheckResult]:
    return [fn(*args)]


def exhaustive_jobs(n: int, tmax: int, field: FieldSpec) -> Iterable[tuple[tuple, Callable[[], list[CheckResult]]]]:
    t = (tmax,) * n
    ideals = all_t_determined_ideals(t)
    for I in ideals:
        for k in _k_range(t):
            yield ("case", I.gens, k), functools.partial(check_case, I, t, k, field)
        yield ("duality", I.gens), functools.partial(check_duality, I, t, field)
        if not I.is_unit():
            yield ("cm_duality", I.gens), functools.partial(_as_list, check_cm_duality, I, t, field)
    if n == 2:
        for small in Box.upto((min(tmax, 1),) * 2):
            for I in all_t_determined_ideals(small):
                if not is_finite_length(I):
                    continue
                for k in Box.upto(small):
                    for r in Box.upto((1, 1)):
                        yield (
                            ("stability", small, I.gens, k, r),
                            functools.partial(_as_list, check_stability, I, small, k, r, field),
                        )
    yield ("intervals",), functools.partial(check_intervals, 4, field)
    yield ("parameters",), check_parameters


def random_jobs(seed: int, count: int, field: FieldSpec):
    rng = np.random.default_rng(seed)
    for index in range(count):
        n = int(rng.integers(1, 3))
        t = tuple(int(x) for x in rng.integers(1, 3, size=n))
        I = random_t_determined_ideal(rng, t)
        yield ("random", index), functools.partial(check_periodicity, I, t, field)
        if n == 2:
            k = tuple(int(rng.integers(0, tj + 1)) for tj in t)
            closed = with_pure_powers(I, t)
            yield (
                ("random_stability", index),
                functools.partial(_as_list, check_stability, closed, t, k, (1, 1), field),
            )


def _run_job(job):
    key, fn = job
    try:
        return key, fn()
    except ComplexTooLarge:
        raise
    except NakayamaError as exc:
        logger.warning("case %s raised %s", key, exc)
        return key, [CheckResult("exception", key, False, {"error": str(exc)})]


def run_verification(
    exhaustive: str | None = None,
    seed: int = 0,
    random: int = 0,
    field=None,
    workers: int | None = None,
) -> Summary:
    field = get_field(field if field is not None else settings.NAK_DEFAULT_FIELD)
    jobs = []
    if exhaustive:
        n, tmax = parse_exhaustive(exhaustive)
        jobs.extend(exhaustive_jobs(n, tmax, field))
    if random:
        jobs.extend(random_jobs(seed, random, field))
    workers = max(1, workers or settings.NAK_WORKERS)
    logger.info("running %s verification jobs on %s workers", len(jobs), workers)
    if workers == 1:
        finished = [_run_job(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            finished = list(pool.map(_run_job, jobs, chunksize=8))
    summary = Summary()
    for _, results in sorted(finished, key=lambda item: repr(item[0])):
        for result in results:
            summary.add(result)
    logger.info("verification done: %s checked, %s failed", summary.checked, summary.failed)
    return summary
