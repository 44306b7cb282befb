# -*- coding: utf-8 -*-

from argparse import Namespace

from tropical_spectra.apps.context import VerbContext
from tropical_spectra.eigen.basis import column_is_eigenvector, principal_eigenbasis
from tropical_spectra.eigen.check import check_eigen, check_super_eigen
from tropical_spectra.eigen.decompose import decompose
from tropical_spectra.eigen.export import export_eigenbasis
from tropical_spectra.reports import Report
from tropical_spectra.spectral.mean import max_cycle_mean


def _check_vector(context: VerbContext, lam: float) -> Report:
    args = context.args
    u = context.read_vector(args.vector)
    exempt = context.source.exempt_rows
    check = check_super_eigen if args.super else check_eigen
    result = check(context.matrix, lam, u, context.tol, exempt_rows=exempt)

    report = context.new_report()
    report.add("lambda", lam)
    report.add("relation", "super" if args.super else "eigen")
    report.add("residual", result.residual)
    report.add("exact_zero_mismatch", result.exact_zero_mismatch)
    report.add("exempt_rows", result.exempt_rows)
    return report.add_verdict(result.passed)


def eigen_main(args: Namespace) -> Report:
    context = VerbContext(args)
    a = context.matrix
    rho = max_cycle_mean(a)
    lam = rho if args.lam is None else args.lam

    if args.vector:
        return _check_vector(context, lam)

    report = context.new_report()
    if args.lam is not None and not context.tol.equal(lam, rho):
        columns = [
            i for i in range(a.n) if column_is_eigenvector(a, lam, i, context.tol)
        ]
        report.add("lambda", lam)
        report.add("rho", rho)
        report.add("eigen_columns", columns)
        return report

    basis = principal_eigenbasis(a, context.tol)
    report.add("lambda", basis.lam)
    report.add("dimension", len(basis))
    report.add("representatives", basis.representatives)
    report.add("classes", basis.classes)
    written = context.emit(lambda prefix: export_eigenbasis(basis, prefix))
    if written is None:
        report.add("columns", basis.columns)
    return report


def decompose_main(args: Namespace) -> Report:
    context = VerbContext(args)
    u = context.read_vector(args.vector)
    result = decompose(context.matrix, u, context.tol)

    report = context.new_report()
    report.add("coefficients", result.coefficients)
    report.add("reconstruction", result.reconstruction)
    report.add("residual", result.residual)
    return report.add_verdict(result.residual <= context.tol.eps)
