# -*- coding: utf-8 -*-

from argparse import Namespace
from functools import lru_cache
from typing import Callable, Dict

from tropical_spectra.apps.asymptotics import coupling_main, powers_main, turnpike_main
from tropical_spectra.apps.eigen import decompose_main, eigen_main
from tropical_spectra.apps.kernels import example_main, martin_main, probe_tight_main
from tropical_spectra.apps.selftest import selftest_main
from tropical_spectra.apps.spectral import spectral_main, star_main
from tropical_spectra.arguments import (
    CMD_COUPLING,
    CMD_DECOMPOSE,
    CMD_EIGEN,
    CMD_EXAMPLE,
    CMD_MARTIN,
    CMD_POWERS,
    CMD_PROBE_TIGHT,
    CMD_SELFTEST,
    CMD_SPECTRAL,
    CMD_STAR,
    CMD_TURNPIKE,
)
from tropical_spectra.exceptions import UsageError
from tropical_spectra.logging.logging import logger
from tropical_spectra.reports import VERDICT_KEY, Report


@lru_cache
def cmd_apps() -> Dict[str, Callable[[Namespace], Report]]:
    return {
        CMD_SPECTRAL: spectral_main,
        CMD_STAR: star_main,
        CMD_EIGEN: eigen_main,
        CMD_DECOMPOSE: decompose_main,
        CMD_POWERS: powers_main,
        CMD_COUPLING: coupling_main,
        CMD_TURNPIKE: turnpike_main,
        CMD_MARTIN: martin_main,
        CMD_PROBE_TIGHT: probe_tight_main,
        CMD_EXAMPLE: example_main,
        CMD_SELFTEST: selftest_main,
    }


def run_app(cmd: str, args: Namespace) -> Report:
    app = cmd_apps().get(cmd, None)
    if app is None:
        raise UsageError(f"Unknown app command: {cmd}")

    logger.info(f"Run '{cmd}' ...")
    report = app(args)
    logger.info(f"Done '{cmd}' ({VERDICT_KEY}: {report.get(VERDICT_KEY, 'none')})")
    return report
