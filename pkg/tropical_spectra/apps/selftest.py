# -*- coding: utf-8 -*-

from argparse import Namespace

from tropical_spectra.apps.context import VerbContext
from tropical_spectra.reports import Report
from tropical_spectra.selftest import run_selftest


def selftest_main(args: Namespace) -> Report:
    context = VerbContext(args)
    results = run_selftest(
        seed=context.args.seed,
        cases=args.cases,
        eps=context.tol,
        n_max=context.args.nmax,
    )

    failed = [r for r in results if not r.passed]
    report = context.new_report()
    report.add("checks", len(results))
    report.add("passed", len(results) - len(failed))
    for result in failed:
        report.add(f"failed.{result.name}", result.detail)
    return report.add_verdict(not failed)
