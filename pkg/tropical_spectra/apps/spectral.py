# -*- coding: utf-8 -*-

from argparse import Namespace

import numpy as np

from tropical_spectra.apps.context import VerbContext
from tropical_spectra.asymptotics.transience import transience_check
from tropical_spectra.core.scalar import TOP, ZERO
from tropical_spectra.logging.logging import logger
from tropical_spectra.reports import Report
from tropical_spectra.spectral.closure import kleene_star
from tropical_spectra.spectral.summary import spectral_summary


def spectral_main(args: Namespace) -> Report:
    context = VerbContext(args)
    a = context.matrix
    summary = spectral_summary(a, context.tol)

    report = context.new_report()
    report.add("n", a.n)
    report.add("rho", summary.rho)
    report.add("critical_nodes", summary.critical_nodes)
    report.add("critical_arcs", summary.critical_arcs)
    report.add("critical_classes", summary.critical_classes)
    report.add("recurrence_classes", summary.recurrence_classes)
    report.add("gamma", summary.gamma)
    report.add("sigma", summary.sigma)
    if summary.marginal_nodes or summary.marginal_arcs:
        report.add("marginal_nodes", summary.marginal_nodes)
        report.add("marginal_arcs", summary.marginal_arcs)

    transience = transience_check(a, n_max=context.args.nmax, eps=context.tol)
    report.add("transience", transience.verdict)

    window = context.source.window
    if window is not None:
        report.add("dropped_arcs", window.dropped_arcs)
        report.add("truncated_rows", window.truncated_rows)

    context.emit_matrix(a, comment=context.source.label)
    return report


def star_main(args: Namespace) -> Report:
    context = VerbContext(args)
    a = context.matrix
    closure = kleene_star(a, context.tol)
    result = closure.plus if args.plus else closure.star
    dense = result.dense

    report = context.new_report()
    report.add("n", a.n)
    report.add("closure", "plus" if args.plus else "star")
    report.add("diverged", closure.diverged)
    report.add("finite_entries", int(np.isfinite(dense).sum()))
    report.add("zero_entries", int((dense == ZERO).sum()))
    report.add("top_entries", int((dense == TOP).sum()))

    # +inf entries cannot be read back through --input.
    if not result.is_finite_valued():
        if context.args.emit:
            logger.warning(f"Diverged closure is not written to '{context.args.emit}'")
        report.add("emitted", False)
        report.add("matrix", dense)
        return report

    path = context.emit_matrix(result)
    report.add("emitted", path is not None)
    if path is None:
        report.add("matrix", dense)
    return report
