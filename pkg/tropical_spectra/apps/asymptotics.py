# -*- coding: utf-8 -*-

from argparse import Namespace

from tropical_spectra.apps.context import VerbContext
from tropical_spectra.asymptotics.coupling import detect_coupling
from tropical_spectra.asymptotics.powers import power_trace
from tropical_spectra.asymptotics.representation import CyclicRepresentation
from tropical_spectra.asymptotics.turnpike import optimal_path, turnpike_profile
from tropical_spectra.core.graph import is_irreducible
from tropical_spectra.exceptions import AcyclicError, SearchCapReachedError
from tropical_spectra.logging.logging import logger
from tropical_spectra.reports import Report, format_table
from tropical_spectra.spectral.residue import nu_residue
from tropical_spectra.spectral.summary import spectral_summary


def powers_main(args: Namespace) -> Report:
    context = VerbContext(args)
    i, j = context.node("i"), context.node("j")
    n_max = context.args.nmax
    trace = power_trace(context.matrix, i, j, n_max, normalized=args.normalized)

    report = context.new_report()
    report.add("i", i)
    report.add("j", j)
    report.add("normalized", trace.normalized)
    if context.emit_text(format_table(("n", "value"), trace.rows())) is None:
        report.add("values", trace.values)
    report.add("last", trace.at(trace.n_max))
    return report


def _add_residue(report: Report, context: VerbContext, i: int, j: int) -> None:
    if not is_irreducible(context.matrix):
        return
    try:
        residue = nu_residue(context.matrix, i, j)
    except (AcyclicError, SearchCapReachedError) as e:
        logger.warning(f"Path length residue of ({i}, {j}) is unavailable: {e}")
        return
    report.add("gamma", residue.gamma)
    report.add("residue", residue.residue)
    report.add("residue_threshold", residue.threshold)


def coupling_main(args: Namespace) -> Report:
    context = VerbContext(args)
    a = context.matrix
    n_max = context.args.nmax
    i, j = context.node("i"), context.node("j")

    summary = spectral_summary(a, context.tol)
    normalized = not args.raw and summary.has_critical_nodes
    if normalized:
        logger.info(f"Trace of ({i}, {j}) is shifted by -rho={-summary.rho} (--raw)")
    trace = power_trace(a, i, j, n_max, normalized=normalized)
    coupling = detect_coupling(trace, summary.sigma, context.tol)

    report = context.new_report()
    report.add("i", i)
    report.add("j", j)
    report.add("normalized", normalized)
    report.add("shift", -summary.rho if normalized else 0.0)
    report.add("sigma", summary.sigma)
    report.add("coupling", coupling.verdict)
    report.add("sigma_ij", coupling.sigma_ij)
    report.add("n_ij", coupling.n_ij)
    report.add("verified_steps", coupling.verified_steps)
    _add_residue(report, context, i, j)

    if not (coupling.periodic and normalized):
        return report

    representation = CyclicRepresentation(a, summary.sigma, context.tol)
    first = max(coupling.n_ij, n_max - args.samples + 1)
    checks = [representation.check(i, j, n) for n in range(first, n_max + 1)]
    failed = [c.n for c in checks if not c.passed]
    report.add("representation_checked", [c.n for c in checks])
    report.add("representation_failed", failed)
    return report.add_verdict(not failed)


def turnpike_main(args: Namespace) -> Report:
    context = VerbContext(args)
    a = context.matrix
    i, j = context.node("i"), context.node("j")
    lengths = context.int_list("n-list", args.n_list)

    profile = turnpike_profile(a, i, j, lengths, context.tol)
    longest = optimal_path(a, i, j, max(lengths), context.tol)

    report = context.new_report()
    report.add("i", i)
    report.add("j", j)
    if context.emit_text(format_table(("n", "noncritical"), profile.counts)) is None:
        report.add("counts", profile.counts)
    report.add("max_noncritical", profile.max_noncritical)
    report.add("longest_weight", longest.weight)
    report.add("longest_path", longest.nodes)
    return report
