# -*- coding: utf-8 -*-

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Final, List, Optional, Sequence, Tuple

import numpy as np

from tropical_spectra.asymptotics.coupling import detect_coupling
from tropical_spectra.asymptotics.powers import PowerTrace, power_stack, power_trace
from tropical_spectra.asymptotics.representation import CyclicRepresentation
from tropical_spectra.config import Tolerance, ToleranceLike, as_tolerance
from tropical_spectra.core.scalar import vec_gap
from tropical_spectra.eigen.basis import principal_eigenbasis
from tropical_spectra.eigen.check import check_eigen
from tropical_spectra.eigen.decompose import decompose, is_extremal, span_residual
from tropical_spectra.exceptions import TropicalSpectraError
from tropical_spectra.kernels.catalog import (
    BirthDeathKernel,
    OscillatingKernel,
    Tight1Kernel,
    Tight2Kernel,
    TriangularKernel,
)
from tropical_spectra.kernels.compare import closed_form_gaps
from tropical_spectra.kernels.martin import boundary_column, martin_kernel
from tropical_spectra.kernels.window import check_window_eigen, truncate
from tropical_spectra.logging.logging import logger
from tropical_spectra.random.matrices import irreducible_suite, make_rng, random_vector
from tropical_spectra.spectral.closure import kleene_star
from tropical_spectra.spectral.mean import max_cycle_mean
from tropical_spectra.spectral.summary import spectral_summary

DEFAULT_SELFTEST_NMAX: Final[int] = 400
REPRESENTATION_SAMPLES: Final[int] = 10
REPRESENTATION_PAIRS: Final[int] = 20
SELFTEST_CASES: Final[int] = 500
SELFTEST_DENSITY: Final[float] = 0.3
BOUNDARY_COLUMNS: Final[Tuple[int, ...]] = (10, 20, 30)
BOUNDARY_WINDOW: Final[int] = 40

Outcome = Tuple[bool, str]


@dataclass(frozen=True)
class SelfTestResult:
    name: str
    passed: bool
    detail: str = ""


def _tight_closure(tol: Tolerance) -> Outcome:
    kernels = (Tight1Kernel(), Tight2Kernel())
    gaps = {k.name: closed_form_gaps(k, 50, tol) for k in kernels}
    worst = {
        name: max(g.as_dict()["plus"], g.as_dict()["star"]) for name, g in gaps.items()
    }
    return all(v <= tol.eps for v in worst.values()), f"gaps={worst}"


def _birth_eigen(tol: Tolerance) -> Outcome:
    kernel = BirthDeathKernel(p=-1.0, q=-3.0)
    window = truncate(kernel, 40)
    rho = max_cycle_mean(window.matrix)
    failed = list()
    for lam in (-2.0, -1.0, 0.0):
        u = [kernel.eigenvector(lam, k) for k in range(window.size)]
        if not check_window_eigen(window, lam, u, tol).passed:
            failed.append(lam)
    passed = tol.equal(rho, kernel.rho) and not failed
    return passed, f"rho={rho} failed_lambdas={failed}"


def _tight2_powers(tol: Tolerance) -> Outcome:
    kernel = Tight2Kernel()
    trace = power_trace(truncate(kernel, 80).matrix, 0, 0, 70, normalized=False)
    lengths = range(2, 71, 2)
    gap = vec_gap(
        [trace.at(m) for m in lengths],
        [kernel.power(0, 0, m) for m in lengths],
    )
    return gap <= tol.eps, f"gap={gap}"


def _birth_martin(tol: Tolerance) -> Outcome:
    kernel = BirthDeathKernel(p=-1.0, q=-3.0)
    gaps = dict()
    for lam in (-2.0, -1.0):
        martin = martin_kernel(kernel, lam, 0, 60, tol)
        ref = np.array(
            [[kernel.martin(lam, i, j) for j in range(31)] for i in range(31)],
            dtype=np.float64,
        )
        gaps[lam] = vec_gap(martin.values[:31, :31], ref)
    return all(v <= tol.eps for v in gaps.values()), f"gaps={gaps}"


def _triangular_boundary(tol: Tolerance) -> Outcome:
    """
    The limit column is identically zero but is not an eigenvector.
    """

    kernel = TriangularKernel()
    column = boundary_column(kernel, 0.0, 0, BOUNDARY_COLUMNS, BOUNDARY_WINDOW, tol)
    if not column.stabilized:
        return False, "not stabilized"
    zero = vec_gap(column.vector(), np.zeros(len(column.probes))) <= tol.eps
    report = column.check_eigen(kernel, tol)
    return zero and not report.passed, f"limit_zero={zero} eigen={report.verdict}"


def _tight2_boundary(tol: Tolerance) -> Outcome:
    kernel = Tight2Kernel()
    column = boundary_column(kernel, 0.0, 0, BOUNDARY_COLUMNS, BOUNDARY_WINDOW, tol)
    if not column.stabilized:
        return False, "not stabilized"
    zero = vec_gap(column.vector(), np.zeros(len(column.probes))) <= tol.eps
    report = column.check_eigen(kernel, tol)
    return zero and report.passed, f"limit_zero={zero} eigen={report.verdict}"


def _tight1_eigencolumn(tol: Tolerance) -> Outcome:
    kernel = Tight1Kernel()
    window = truncate(kernel, 30)
    column = kleene_star(window.matrix, tol).star.column(0)
    expected = [kernel.closed_forms.eigenvector(0.0, k) for k in range(window.size)]
    gap = vec_gap(column, expected)
    report = check_window_eigen(window, 0.0, column, tol)
    return gap <= tol.eps and report.passed, f"gap={gap} eigen={report.verdict}"


def _oscillating_powers(tol: Tolerance) -> Outcome:
    kernel = OscillatingKernel()
    gap = closed_form_gaps(kernel, 60, tol).as_dict()["power"]
    return gap <= tol.eps, f"gap={gap}"


@lru_cache
def example_checks() -> Dict[str, Callable[[Tolerance], Outcome]]:
    return {
        "tight-closure": _tight_closure,
        "birth-eigen": _birth_eigen,
        "tight2-powers": _tight2_powers,
        "birth-martin": _birth_martin,
        "triangular-boundary": _triangular_boundary,
        "tight2-boundary": _tight2_boundary,
        "tight1-eigencolumn": _tight1_eigencolumn,
        "oscillating-powers": _oscillating_powers,
    }


def representation_case(
    a,
    pairs: Sequence[Tuple[int, int]],
    n_max: int,
    eps: ToleranceLike = None,
) -> Outcome:
    """
    Detect the coupling of every sampled entry and cross-check the cyclic
    representation at the last powers of each trace.
    """

    tol = as_tolerance(eps)
    summary = spectral_summary(a, tol)
    stack = power_stack(a, n_max, normalized=True)
    representation = CyclicRepresentation(a, summary.sigma, tol)

    failures = list()
    for i, j in pairs:
        trace = PowerTrace.from_stack(stack, i, j, normalized=True)
        report = detect_coupling(trace, summary.sigma, tol)
        if not report.periodic:
            failures.append(f"({i},{j}) verdict={report.verdict}")
            continue
        if summary.sigma % report.sigma_ij:
            failures.append(f"({i},{j}) sigma_ij={report.sigma_ij}")
            continue

        first = max(report.n_ij, n_max - REPRESENTATION_SAMPLES + 1)
        failed = [
            n
            for n in range(first, n_max + 1)
            if not representation.check(i, j, n).passed
        ]
        if failed:
            failures.append(f"({i},{j}) failed={failed}")

    detail = f"pairs={len(pairs)} sigma={summary.sigma} failures={failures}"
    return not failures, detail


def decomposition_case(
    a,
    rng: np.random.Generator,
    eps: ToleranceLike = None,
) -> Outcome:
    """
    A random combination of the principal eigenbasis must decompose exactly;
    every basis column must be extremal and none is spanned by the others.
    """

    tol = as_tolerance(eps)
    basis = principal_eigenbasis(a, tol)
    u = basis.combine(random_vector(rng, len(basis)))
    if not check_eigen(a, basis.lam, u, tol).passed:
        return False, "combination is not an eigenvector"

    residual = decompose(a, u, tol).residual
    columns = list(basis.columns)
    extremal = all(is_extremal(column, columns, tol) for column in columns)
    spanned = [
        k
        for k, column in enumerate(columns)
        if span_residual(column, columns[:k] + columns[k + 1 :]) <= tol.eps
    ]
    passed = residual <= tol.eps and extremal and not spanned
    return passed, f"residual={residual} extremal={extremal} spanned={spanned}"


def _run(name: str, check: Callable[[], Outcome]) -> SelfTestResult:
    try:
        passed, detail = check()
    except TropicalSpectraError as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    level = logger.debug if passed else logger.warning
    level(f"Self-test {name}: {'pass' if passed else 'FAIL'} ({detail})")
    return SelfTestResult(name, passed, detail)


def run_selftest(
    seed: Optional[int] = None,
    cases: int = SELFTEST_CASES,
    eps: ToleranceLike = None,
    n_max: int = DEFAULT_SELFTEST_NMAX,
    pairs: int = REPRESENTATION_PAIRS,
) -> List[SelfTestResult]:
    tol = as_tolerance(eps)
    results = [
        _run(name, lambda c=check: c(tol)) for name, check in example_checks().items()
    ]

    rng = make_rng(seed)
    suite = irreducible_suite(seed, cases, density=SELFTEST_DENSITY)
    for index, a in enumerate(suite):
        sampled = [tuple(int(x) for x in p) for p in rng.integers(0, a.n, (pairs, 2))]
        results.append(
            _run(
                f"random-{index}-representation",
                lambda m=a, s=sampled: representation_case(m, s, n_max, tol),
            )
        )
        results.append(
            _run(
                f"random-{index}-decompose",
                lambda m=a: decomposition_case(m, rng, tol),
            )
        )
    return results
