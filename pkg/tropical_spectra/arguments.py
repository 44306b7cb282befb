# -*- coding: utf-8 -*-

from argparse import ArgumentParser, Namespace, RawDescriptionHelpFormatter
from functools import lru_cache
from os import R_OK, access, getcwd
from os.path import isfile, join
from typing import Final, List, Optional

from tropical_spectra.config import DEFAULT_EPS
from tropical_spectra.config import get_typed_environ_value as get_eval
from tropical_spectra.logging.logging import SEVERITIES, SEVERITY_NAME_INFO
from tropical_spectra.random.matrices import DEFAULT_SEED
from tropical_spectra.reports import FORMAT_TEXT, FORMATS
from tropical_spectra.selftest import DEFAULT_SELFTEST_NMAX, SELFTEST_CASES

PROG: Final[str] = "tropical-spectra"
DESCRIPTION: Final[str] = "Max-plus spectral analysis of matrices and truncated kernels"
EPILOG = f"""
Apply general debugging options:
  {PROG} -vv -c -d ...
"""

DEFAULT_SEVERITY: Final[str] = SEVERITY_NAME_INFO

DEFAULT_WINDOW: Final[int] = 20
DEFAULT_NMAX: Final[int] = 100
DEFAULT_CASES: Final[int] = SELFTEST_CASES
DEFAULT_SAMPLES: Final[int] = 10
DEFAULT_BETA: Final[float] = -3.0
DEFAULT_N_LIST: Final[str] = "10,20,40,80"

CMD_SPECTRAL: Final[str] = "spectral"
CMD_SPECTRAL_HELP: Final[str] = (
    "Maximal circuit mean, critical structure and cyclicities"
)
CMD_SPECTRAL_EPILOG = f"""
Simply usage:
  {PROG} {CMD_SPECTRAL} --input matrix.trop
  {PROG} {CMD_SPECTRAL} --kernel tight1 --window 10
"""

CMD_STAR: Final[str] = "star"
CMD_STAR_HELP: Final[str] = "Kleene closure of the matrix"
CMD_STAR_EPILOG = f"""
Simply usage:
  {PROG} {CMD_STAR} --input matrix.trop --emit star.trop
"""

CMD_EIGEN: Final[str] = "eigen"
CMD_EIGEN_HELP: Final[str] = "Principal eigenbasis or the check of a given vector"
CMD_EIGEN_EPILOG = f"""
Simply usage:
  {PROG} {CMD_EIGEN} --input matrix.trop --emit basis
  {PROG} {CMD_EIGEN} --kernel "birth p=-1 q=-3" --window 40 --lambda -1 --vector u.vec
"""

CMD_DECOMPOSE: Final[str] = "decompose"
CMD_DECOMPOSE_HELP: Final[str] = (
    "Coefficients of an eigenvector on the critical columns"
)
CMD_DECOMPOSE_EPILOG = f"""
Simply usage:
  {PROG} {CMD_DECOMPOSE} --input matrix.trop --vector u.vec
"""

CMD_POWERS: Final[str] = "powers"
CMD_POWERS_HELP: Final[str] = "Trace of one entry of the matrix powers"
CMD_POWERS_EPILOG = f"""
Simply usage:
  {PROG} {CMD_POWERS} --kernel tight2 --window 60 --i 0 --j 0 --nmax 40
"""

CMD_COUPLING: Final[str] = "coupling"
CMD_COUPLING_HELP: Final[str] = "Coupling time and period of one entry of the powers"
CMD_COUPLING_EPILOG = f"""
Simply usage:
  {PROG} {CMD_COUPLING} --input matrix.trop --i 0 --j 1 --nmax 400
"""

CMD_TURNPIKE: Final[str] = "turnpike"
CMD_TURNPIKE_HELP: Final[str] = "Non-critical nodes of optimal paths of growing length"
CMD_TURNPIKE_EPILOG = f"""
Simply usage:
  {PROG} {CMD_TURNPIKE} --kernel tight1 --window 10 --i 10 --j 10 --n-list 20,40,80
"""

CMD_MARTIN: Final[str] = "martin"
CMD_MARTIN_HELP: Final[str] = "Martin kernel and boundary column of a window"
CMD_MARTIN_EPILOG = f"""
Simply usage:
  {PROG} {CMD_MARTIN} --kernel "birth p=-1 q=-3" --window 60 --lambda -1
"""

CMD_PROBE_TIGHT: Final[str] = "probe-tight"
CMD_PROBE_TIGHT_HELP: Final[str] = "Windowed super-level sets of the closure"
CMD_PROBE_TIGHT_EPILOG = f"""
Simply usage:
  {PROG} {CMD_PROBE_TIGHT} --kernel tight1 --window 10 --i 0 --j 0 --beta -3
"""

CMD_EXAMPLE: Final[str] = "example"
CMD_EXAMPLE_HELP: Final[str] = (
    "List catalog kernels or compare one with its closed forms"
)
CMD_EXAMPLE_EPILOG = f"""
Simply usage:
  {PROG} {CMD_EXAMPLE}
  {PROG} {CMD_EXAMPLE} --kernel tight2 --window 50
"""

CMD_SELFTEST: Final[str] = "selftest"
CMD_SELFTEST_HELP: Final[str] = "Run the embedded closed-form and random checks"
CMD_SELFTEST_EPILOG = f"""
Simply usage:
  {PROG} {CMD_SELFTEST} --seed 7 --cases 100
"""

CMDS = (
    CMD_SPECTRAL,
    CMD_STAR,
    CMD_EIGEN,
    CMD_DECOMPOSE,
    CMD_POWERS,
    CMD_COUPLING,
    CMD_TURNPIKE,
    CMD_MARTIN,
    CMD_PROBE_TIGHT,
    CMD_EXAMPLE,
    CMD_SELFTEST,
)

DEFAULT_DOTENV_FILENAME: Final[str] = ".env.local"
TEST_DOTENV_FILENAME: Final[str] = ".env.test"

PRINTER_ATTR_KEY: Final[str] = "_printer"

VERBOSE_LEVEL_0: Final[int] = 0
VERBOSE_LEVEL_1: Final[int] = 1
VERBOSE_LEVEL_2: Final[int] = 2


@lru_cache
def version() -> str:
    # [IMPORTANT] Avoid 'circular import' issues
    from tropical_spectra import __version__

    return __version__


def add_dotenv_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--no-dotenv",
        action="store_true",
        default=get_eval("NO_DOTENV", False),
        help="Do not use dot-env file",
    )
    parser.add_argument(
        "--dotenv-path",
        default=get_eval("DOTENV_PATH", join(getcwd(), DEFAULT_DOTENV_FILENAME)),
        metavar="file",
        help=f"Specifies the dot-env file (default: '{DEFAULT_DOTENV_FILENAME}')",
    )


def add_source_arguments(parser: ArgumentParser, required=True) -> None:
    source = parser.add_mutually_exclusive_group(required=required)
    source.add_argument(
        "--input",
        metavar="file",
        help="Matrix file in the tropical text format",
    )
    source.add_argument(
        "--kernel",
        "-k",
        metavar="spec",
        help="Catalog kernel with parameters, e.g. 'birth p=-1 q=-3'",
    )
    parser.add_argument(
        "--window",
        "-w",
        default=get_eval("WINDOW", DEFAULT_WINDOW),
        metavar="N",
        type=int,
        help=f"Largest node of a kernel window (default: {DEFAULT_WINDOW})",
    )


def add_common_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--eps",
        default=get_eval("EPS", DEFAULT_EPS),
        metavar="value",
        type=float,
        help=f"Tolerance of the equality tests (default: {DEFAULT_EPS})",
    )
    parser.add_argument(
        "--nmax",
        default=get_eval("NMAX", DEFAULT_NMAX),
        metavar="N",
        type=int,
        help=f"Largest power or path length (default: {DEFAULT_NMAX})",
    )
    parser.add_argument(
        "--seed",
        default=get_eval("SEED", DEFAULT_SEED),
        metavar="seed",
        type=int,
        help=f"Seed of the random suites (default: {DEFAULT_SEED})",
    )
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=get_eval("FORMAT", FORMAT_TEXT),
        help=f"Report format (default: '{FORMAT_TEXT}')",
    )
    parser.add_argument(
        "--emit",
        default=None,
        metavar="path",
        help="Write the main result (matrix, vectors or table) to this path",
    )
    parser.add_argument(
        "--assert",
        dest="assert_pass",
        action="store_true",
        default=False,
        help="Exit with status 1 when a verification fails",
    )


def add_entry_arguments(parser: ArgumentParser) -> None:
    parser.add_argument("--i", default=0, metavar="node", type=int, help="Row node")
    parser.add_argument("--j", default=0, metavar="node", type=int, help="Column node")


def add_lambda_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--lambda",
        dest="lam",
        default=None,
        metavar="value",
        type=float,
        help="Eigenvalue (default: the maximal circuit mean)",
    )


def add_vector_arguments(parser: ArgumentParser, required=False) -> None:
    parser.add_argument(
        "--vector",
        default=None,
        required=required,
        metavar="file",
        help="Vector file in the tropical text format",
    )


def _add_verb_parser(
    subparsers,
    name: str,
    help_text: str,
    epilog: str,
) -> ArgumentParser:
    # noinspection SpellCheckingInspection
    parser = subparsers.add_parser(
        name=name,
        help=help_text,
        formatter_class=RawDescriptionHelpFormatter,
        epilog=epilog,
    )
    assert isinstance(parser, ArgumentParser)
    return parser


def add_spectral_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_SPECTRAL, CMD_SPECTRAL_HELP, CMD_SPECTRAL_EPILOG
    )
    add_source_arguments(parser)
    add_common_arguments(parser)


def add_star_parser(subparsers) -> None:
    parser = _add_verb_parser(subparsers, CMD_STAR, CMD_STAR_HELP, CMD_STAR_EPILOG)
    add_source_arguments(parser)
    add_common_arguments(parser)
    parser.add_argument(
        "--plus",
        action="store_true",
        default=False,
        help="Emit A+ instead of A*",
    )


def add_eigen_parser(subparsers) -> None:
    parser = _add_verb_parser(subparsers, CMD_EIGEN, CMD_EIGEN_HELP, CMD_EIGEN_EPILOG)
    add_source_arguments(parser)
    add_common_arguments(parser)
    add_lambda_arguments(parser)
    add_vector_arguments(parser)
    parser.add_argument(
        "--super",
        action="store_true",
        default=False,
        help="Check Au <= λu instead of Au = λu",
    )


def add_decompose_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_DECOMPOSE, CMD_DECOMPOSE_HELP, CMD_DECOMPOSE_EPILOG
    )
    add_source_arguments(parser)
    add_common_arguments(parser)
    add_vector_arguments(parser, required=True)


def add_powers_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_POWERS, CMD_POWERS_HELP, CMD_POWERS_EPILOG
    )
    add_source_arguments(parser)
    add_common_arguments(parser)
    add_entry_arguments(parser)
    parser.add_argument(
        "--normalized",
        action="store_true",
        default=False,
        help="Trace the powers of the normalized matrix",
    )


def add_coupling_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_COUPLING, CMD_COUPLING_HELP, CMD_COUPLING_EPILOG
    )
    add_source_arguments(parser)
    add_common_arguments(parser)
    add_entry_arguments(parser)
    parser.add_argument(
        "--raw",
        action="store_true",
        default=False,
        help="Trace the powers of the matrix itself instead of the normalized one",
    )
    parser.add_argument(
        "--samples",
        default=DEFAULT_SAMPLES,
        metavar="count",
        type=int,
        help=(
            "Powers checked against the cyclic representation"
            f" (default: {DEFAULT_SAMPLES})"
        ),
    )


def add_turnpike_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_TURNPIKE, CMD_TURNPIKE_HELP, CMD_TURNPIKE_EPILOG
    )
    add_source_arguments(parser)
    add_common_arguments(parser)
    add_entry_arguments(parser)
    parser.add_argument(
        "--n-list",
        default=DEFAULT_N_LIST,
        metavar="list",
        help=f"Comma separated path lengths (default: '{DEFAULT_N_LIST}')",
    )


def add_martin_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_MARTIN, CMD_MARTIN_HELP, CMD_MARTIN_EPILOG
    )
    add_source_arguments(parser)
    add_common_arguments(parser)
    add_lambda_arguments(parser)
    parser.add_argument(
        "--basepoint",
        default=0,
        metavar="node",
        type=int,
        help="Basepoint of the normalization (default: 0)",
    )
    parser.add_argument(
        "--j-list",
        default=None,
        metavar="list",
        help="Comma separated columns followed toward the boundary",
    )


def add_probe_tight_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_PROBE_TIGHT, CMD_PROBE_TIGHT_HELP, CMD_PROBE_TIGHT_EPILOG
    )
    add_source_arguments(parser)
    add_common_arguments(parser)
    add_entry_arguments(parser)
    parser.add_argument(
        "--beta",
        default=DEFAULT_BETA,
        metavar="value",
        type=float,
        help=f"Level of the super-level set (default: {DEFAULT_BETA})",
    )


def add_example_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_EXAMPLE, CMD_EXAMPLE_HELP, CMD_EXAMPLE_EPILOG
    )
    add_source_arguments(parser, required=False)
    add_common_arguments(parser)


def add_selftest_parser(subparsers) -> None:
    parser = _add_verb_parser(
        subparsers, CMD_SELFTEST, CMD_SELFTEST_HELP, CMD_SELFTEST_EPILOG
    )
    add_common_arguments(parser)
    parser.set_defaults(nmax=DEFAULT_SELFTEST_NMAX, assert_pass=True)
    parser.add_argument(
        "--cases",
        default=get_eval("CASES", DEFAULT_CASES),
        metavar="count",
        type=int,
        help=f"Random matrices of the mini-suite (default: {DEFAULT_CASES})",
    )


def default_argument_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog=PROG,
        description=DESCRIPTION,
        epilog=EPILOG,
        formatter_class=RawDescriptionHelpFormatter,
    )

    add_dotenv_arguments(parser)

    logging_group = parser.add_mutually_exclusive_group()
    logging_group.add_argument(
        "--colored-logging",
        "-c",
        action="store_true",
        default=get_eval("COLORED_LOGGING", False),
        help="Use colored logging",
    )
    logging_group.add_argument(
        "--default-logging",
        action="store_true",
        default=get_eval("DEFAULT_LOGGING", False),
        help="Use default logging",
    )
    logging_group.add_argument(
        "--simple-logging",
        "-s",
        action="store_true",
        default=get_eval("SIMPLE_LOGGING", False),
        help="Use simple logging",
    )

    parser.add_argument(
        "--severity",
        choices=SEVERITIES,
        default=get_eval("SEVERITY", DEFAULT_SEVERITY),
        help=f"Logging severity (default: '{DEFAULT_SEVERITY}')",
    )

    parser.add_argument(
        "--debug",
        "-d",
        action="store_true",
        default=get_eval("DEBUG", False),
        help="Enable debugging mode and change logging severity to 'DEBUG'",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="count",
        default=get_eval("VERBOSE", 0),
        help="Be more verbose/talkative during the operation",
    )
    parser.add_argument(
        "--version",
        "-V",
        action="version",
        version=version(),
    )

    parser.add_argument(
        "-D",
        action="store_true",
        default=False,
        help="Same as ['-c', '-d', '-vv'] flags",
    )

    subparsers = parser.add_subparsers(dest="cmd")
    add_spectral_parser(subparsers)
    add_star_parser(subparsers)
    add_eigen_parser(subparsers)
    add_decompose_parser(subparsers)
    add_powers_parser(subparsers)
    add_coupling_parser(subparsers)
    add_turnpike_parser(subparsers)
    add_martin_parser(subparsers)
    add_probe_tight_parser(subparsers)
    add_example_parser(subparsers)
    add_selftest_parser(subparsers)
    return parser


def _load_dotenv(
    cmdline: Optional[List[str]] = None,
    namespace: Optional[Namespace] = None,
) -> None:
    parser = ArgumentParser(add_help=False, allow_abbrev=False, exit_on_error=False)
    add_dotenv_arguments(parser)
    args = parser.parse_known_args(cmdline, namespace)[0]

    assert isinstance(args.no_dotenv, bool)
    assert isinstance(args.dotenv_path, str)

    if args.no_dotenv:
        return
    if not isfile(args.dotenv_path):
        return
    if not access(args.dotenv_path, R_OK):
        return

    from dotenv import load_dotenv

    load_dotenv(args.dotenv_path)


def _remove_dotenv_attrs(namespace: Namespace) -> Namespace:
    assert isinstance(namespace.no_dotenv, bool)
    assert isinstance(namespace.dotenv_path, str)

    del namespace.no_dotenv
    del namespace.dotenv_path

    assert not hasattr(namespace, "no_dotenv")
    assert not hasattr(namespace, "dotenv_path")

    return namespace


def get_default_arguments(
    cmdline: Optional[List[str]] = None,
    namespace: Optional[Namespace] = None,
) -> Namespace:
    # [IMPORTANT] Dotenv related options are processed first.
    _load_dotenv(cmdline, namespace)

    parser = default_argument_parser()
    args = parser.parse_args(cmdline, namespace)

    # Remove unnecessary dotenv attrs
    return _remove_dotenv_attrs(args)
