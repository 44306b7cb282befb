# -*- coding: utf-8 -*-

from argparse import Namespace

from tropical_spectra.apps.context import VerbContext
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.exceptions import UsageError
from tropical_spectra.kernels.catalog import catalog
from tropical_spectra.kernels.compare import closed_form_gaps
from tropical_spectra.kernels.martin import boundary_column, martin_matrix
from tropical_spectra.kernels.window import property_T_probe
from tropical_spectra.reports import Report
from tropical_spectra.spectral.mean import max_cycle_mean


def martin_main(args: Namespace) -> Report:
    context = VerbContext(args)
    a = context.matrix
    lam = max_cycle_mean(a) if args.lam is None else args.lam
    basepoint = context.node("basepoint")
    martin = martin_matrix(a, lam, basepoint, context.tol)

    report = context.new_report()
    report.add("lambda", lam)
    report.add("basepoint", basepoint)
    report.add("bound_excess", martin.bound_excess())
    if context.emit_matrix(TropicalMatrix.from_dense(martin.values)) is None:
        report.add("values", martin.values)

    if args.j_list:
        kernel = context.require_kernel()
        columns = context.int_list("j-list", args.j_list)
        window = context.args.window
        column = boundary_column(kernel, lam, basepoint, columns, window, context.tol)
        report.add("boundary_columns", columns)
        report.add("boundary_stabilized", column.stabilized)
        if column.stabilized:
            result = column.check_eigen(kernel, context.tol)
            report.add("boundary_vector", column.vector())
            report.add("boundary_eigen", result.verdict)
            report.add("boundary_residual", result.residual)
    return report


def probe_tight_main(args: Namespace) -> Report:
    context = VerbContext(args)
    kernel = context.require_kernel()
    n = context.args.window
    result = property_T_probe(kernel, args.i, args.j, args.beta, n, context.tol)

    report = context.new_report()
    report.add("i", result.i)
    report.add("j", result.j)
    report.add("beta", result.beta)
    report.add("level_set", result.level_set)
    report.add("saturated", result.saturated)
    return report


def example_main(args: Namespace) -> Report:
    context = VerbContext(args)
    if getattr(args, "input", None):
        raise UsageError("'example' accepts catalog kernels only")

    report = context.new_report()
    if not context.has_source:
        for kernel in catalog():
            report.add(kernel.name, kernel.doc)
            report.add(f"{kernel.name}.closed_forms", kernel.closed_forms.available())
        return report

    kernel = context.require_kernel()
    gaps = closed_form_gaps(kernel, context.args.window, context.tol)
    report.add("kernel", kernel.spec_text())
    report.add("right_locally_finite", kernel.right_locally_finite)
    report.add("inner", gaps.inner)
    report.add("closure_block", gaps.closure_block)
    report.add("lambda", gaps.lam)
    for name, gap in gaps.gaps:
        report.add(f"gap.{name}", gap)
    return report
