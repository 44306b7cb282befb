# -*- coding: utf-8 -*-

from argparse import Namespace
from sys import exit as sys_exit
from typing import Callable, Final, List, Optional

from tropical_spectra.apps import run_app
from tropical_spectra.arguments import (
    CMDS,
    PRINTER_ATTR_KEY,
    VERBOSE_LEVEL_2,
    get_default_arguments,
)
from tropical_spectra.exceptions import (
    KernelSpecError,
    MatrixFormatError,
    TropicalSpectraError,
    UnknownKernelError,
    UsageError,
    VerificationFailedError,
)
from tropical_spectra.logging.logging import (
    SEVERITY_NAME_DEBUG,
    add_default_colored_logging,
    add_default_logging,
    add_simple_logging,
    logger,
    set_root_level,
)
from tropical_spectra.reports import FORMAT_TEXT, Report

EXIT_SUCCESS: Final[int] = 0
EXIT_VERIFICATION_FAILED: Final[int] = 1
EXIT_USAGE: Final[int] = 2

USAGE_ERRORS = (
    UsageError,
    KernelSpecError,
    UnknownKernelError,
    MatrixFormatError,
    ValueError,
)


def _configure_logging(args: Namespace) -> None:
    if args.D:
        args.colored_logging = True
        args.default_logging = False
        args.simple_logging = False
        args.debug = True
        args.verbose = VERBOSE_LEVEL_2

    if args.colored_logging:
        add_default_colored_logging()
    elif args.default_logging:
        add_default_logging()
    elif args.simple_logging:
        add_simple_logging()

    set_root_level(SEVERITY_NAME_DEBUG if args.debug else args.severity)


def _emit_report(args: Namespace, report: Report) -> None:
    printer = getattr(args, PRINTER_ATTR_KEY, print)
    printer(report.format(getattr(args, "format", FORMAT_TEXT)), end="")

    if report.failed and getattr(args, "assert_pass", False):
        raise VerificationFailedError(f"'{args.cmd}' reported a failed verification")


def run_command(args: Namespace) -> int:
    """
    Run one verb and map its outcome to an exit status.

    The report, when one is produced, is printed before any verification
    failure is raised, so a failing ``--assert`` run still shows its evidence.
    """

    try:
        _emit_report(args, run_app(args.cmd, args))
    except VerificationFailedError as e:
        logger.error(f"Verification failed: {e}")
        return EXIT_VERIFICATION_FAILED
    except USAGE_ERRORS as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"IO error: {e}")
        return EXIT_USAGE
    except TropicalSpectraError as e:
        logger.error(f"Domain error: {type(e).__name__}: {e}")
        return EXIT_USAGE
    except KeyboardInterrupt:
        logger.warning("An interrupt signal was detected")
        return EXIT_VERIFICATION_FAILED
    except BaseException as e:
        logger.exception(e)
        return EXIT_VERIFICATION_FAILED
    return EXIT_SUCCESS


def main(
    cmdline: Optional[List[str]] = None,
    printer: Callable[..., None] = print,
) -> int:
    args = get_default_arguments(cmdline)

    if not hasattr(args, PRINTER_ATTR_KEY):
        setattr(args, PRINTER_ATTR_KEY, printer)

    if not args.cmd:
        printer("The command does not exist")
        return EXIT_USAGE

    assert args.cmd in CMDS
    assert isinstance(args.severity, str)
    assert isinstance(args.verbose, int)

    _configure_logging(args)

    if args.verbose >= VERBOSE_LEVEL_2:
        logger.debug(f"Arguments: {args}")

    return run_command(args)


if __name__ == "__main__":
    sys_exit(main())
