# This file is part of ts_fundalc.
#
# Developed for the Vera Rubin Observatory Telescope and Site Systems.
# This product includes software developed by the LSST Project
# (https://www.lsst.org).
# See the COPYRIGHT file at the top-level directory of this distribution
# for details of code ownership.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

__all__ = ["execute_fundalc", "amain", "make_parser"]

import argparse
import asyncio
import logging
import sys

import jsonschema

from . import __version__
from .alcove import VDatum
from .cache import EnumerationCache
from .classifier import classify_report, is_fundamental, is_GL_fundamental, is_K_fundamental, minuscule_report
from .enumeration import enumerate_elements
from .errors import (
    CatalogueError,
    CertificateError,
    ClassificationError,
    ElementSyntaxError,
    PreconditionError,
    UnknownSuiteError,
)
from .literals import (
    certificate_to_dict,
    format_element,
    format_vector,
    newton_to_dict,
    parse_element,
    parse_vector,
    witness_to_dict,
)
from .model import load_config
from .newton import newton_point
from .plot import plot_rank2
from .reduction import straight_decomposition
from .reports import (
    CLASSIFY_COLUMNS,
    EVAL_COLUMNS,
    MINUSCULE_COLUMNS,
    TYPES_COLUMNS,
    VERIFY_COLUMNS,
    classify_records,
    minuscule_records,
    verify_records,
    write_report,
)
from .root_datum import build_root_datum, catalogue_keys, weyl_group_order
from .runner import EXIT_OK, EXIT_PROPERTY_FAILURE, EXIT_USAGE_ERROR, VerificationRunner, exit_code

log = logging.getLogger(__name__)

NEWTON_COLUMNS = ("literal", "nu", "nu_dom", "period", "kappa", "v_base", "v_directions")
ENUMERATE_COLUMNS = ("literal", "length")

USAGE_ERRORS = (
    CatalogueError,
    ElementSyntaxError,
    PreconditionError,
    UnknownSuiteError,
    jsonschema.ValidationError,
    OSError,
)
"""Exceptions reported as usage errors."""


def execute_fundalc():
    sys.exit(asyncio.run(amain()))


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv", help="Report format.")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes for verify.")
    common.add_argument("--config", default=None, help="YAML configuration file.")
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Logging level; logs go to stderr.",
    )
    common.add_argument("--omega-window", type=int, default=None, help="Omega-window for infinite Omega.")
    common.add_argument("--no-cache", action="store_true", help="Do not use the enumeration cache.")

    twisted = argparse.ArgumentParser(add_help=False)
    twisted.add_argument("--sigma", type=int, default=1, help="Use this power of the datum's sigma.")

    parser = argparse.ArgumentParser(prog="fundalc", description="Fundamental elements of affine Weyl groups.")
    parser.add_argument("--version", action="version", version=__version__)
    verbs = parser.add_subparsers(dest="verb", required=True)

    types_parser = verbs.add_parser("types", parents=[common], help="List catalogue root data.")
    types_parser.add_argument("action", choices=("list",))

    for verb, text in (("eval", "Evaluate one element."), ("newton", "Newton datum of one element.")):
        sub = verbs.add_parser(verb, parents=[common, twisted], help=text)
        sub.add_argument("datum")
        sub.add_argument("element")

    for verb, text in (("classify", "Classify enumerated elements."), ("enumerate", "List elements.")):
        sub = verbs.add_parser(verb, parents=[common, twisted], help=text)
        sub.add_argument("datum")
        sub.add_argument("--max-len", type=int, required=True)

    verify = verbs.add_parser("verify", parents=[common, twisted], help="Run verification suites.")
    verify.add_argument("suite", help="Suite name, comma-separated names, or 'all'.")
    verify.add_argument("datums", nargs="+")
    verify.add_argument("--max-len", type=int, required=True)

    minuscule = verbs.add_parser("minuscule", parents=[common, twisted], help="Minuscule double coset report.")
    minuscule.add_argument("datum")
    minuscule.add_argument("--mu", required=True, help="Comma-separated minuscule cocharacter.")
    minuscule.add_argument("--slack", type=int, default=4)

    plot = verbs.add_parser("plot", parents=[common], help="Draw rank-2 alcoves as SVG.")
    plot.add_argument("datum")
    plot.add_argument("elements", nargs="+")
    plot.add_argument("--v", default=None, help="Comma-separated vector defining the parabolic.")
    plot.add_argument("--window", type=int, default=None)
    plot.add_argument("--out", required=True)
    return parser


async def amain(argv=None, stdout=None):
    """Run the command line; returns the exit code.

    Parameters
    ----------
    argv : `list` [`str`], optional
        Arguments; ``sys.argv[1:]`` when omitted.
    stdout : file-like, optional
        Where reports are written; ``sys.stdout`` when omitted.
    """
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr, format="%(levelname)s:%(name)s: %(message)s")
    stdout = stdout or sys.stdout
    try:
        if getattr(args, "max_len", 0) < 0:
            raise PreconditionError("--max-len must be >= 0.")
        settings = load_config(
            args.config,
            omega_window=args.omega_window,
            jobs=args.jobs,
            use_cache=False if args.no_cache else None,
        )
        return await VERBS[args.verb](args, settings, stdout)
    except USAGE_ERRORS as e:
        message = e.message if isinstance(e, jsonschema.ValidationError) else str(e)
        print(f"fundalc: error: {message}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except (CertificateError, ClassificationError):
        log.exception(f"fundalc {args.verb} failed.")
        return EXIT_PROPERTY_FAILURE


def _datum_and_sigma(args):
    datum = build_root_datum(args.datum)
    return datum, datum.sigma.power(getattr(args, "sigma", 1))


def _cache(settings):
    return EnumerationCache(settings.cache_dir) if settings.use_cache else None


async def _types(args, settings, stdout):
    records = []
    for key in catalogue_keys():
        datum = build_root_datum(key)
        order = weyl_group_order(datum.cartan_type) if datum.cartan_type else len(datum.weyl_group)
        records.append(
            {
                "key": key,
                "rank": datum.rank,
                "semisimple_rank": datum.n_simple,
                "roots": len(datum.roots),
                "weyl_order": order,
                "sigma_order": datum.sigma.order,
            }
        )
    write_report(records, TYPES_COLUMNS, stdout, args.format)
    return EXIT_OK


async def _eval(args, settings, stdout):
    datum, sigma = _datum_and_sigma(args)
    x = parse_element(args.element, datum)
    newton = newton_point(x, sigma)
    fundamental, witness = is_fundamental(x, sigma)
    record = {
        "literal": format_element(x),
        "length": x.length,
        "nu_dom": format_vector(newton.nu_dom),
        "kappa": str(newton.kappa),
        "straight": fundamental,
        "k_fundamental": is_K_fundamental(x, sigma),
        "gl_fundamental": is_GL_fundamental(x, sigma),
    }
    if args.format == "json":
        record["newton"] = newton_to_dict(newton)
        record["witness"] = witness_to_dict(witness)
        record["certificate"] = certificate_to_dict(straight_decomposition(x, sigma))
    write_report([record], EVAL_COLUMNS, stdout, args.format)
    return EXIT_OK


async def _newton(args, settings, stdout):
    datum, sigma = _datum_and_sigma(args)
    x = parse_element(args.element, datum)
    newton = newton_point(x, sigma)
    data = newton_to_dict(newton)
    if args.format == "json":
        write_report([{"literal": format_element(x), **data}], NEWTON_COLUMNS, stdout, "json")
        return EXIT_OK
    record = {
        "literal": format_element(x),
        "nu": format_vector(newton.nu),
        "nu_dom": format_vector(newton.nu_dom),
        "period": data["period"],
        "kappa": data["kappa"],
        "v_base": format_vector(newton.v_base),
        "v_directions": ";".join(format_vector(d) for d in newton.v_directions),
    }
    write_report([record], NEWTON_COLUMNS, stdout, "csv")
    return EXIT_OK


async def _classify(args, settings, stdout):
    datum, sigma = _datum_and_sigma(args)
    rows = classify_report(datum, sigma, args.max_len, settings.omega_window, _cache(settings))
    write_report(classify_records(rows, args.format == "json"), CLASSIFY_COLUMNS, stdout, args.format)
    return EXIT_OK


async def _enumerate(args, settings, stdout):
    datum, sigma = _datum_and_sigma(args)
    records = [
        {"literal": format_element(x), "length": x.length}
        for x in enumerate_elements(datum, sigma, args.max_len, settings.omega_window, _cache(settings))
    ]
    write_report(records, ENUMERATE_COLUMNS, stdout, args.format)
    return EXIT_OK


async def _verify(args, settings, stdout):
    runner = VerificationRunner(settings)
    names = [name.strip() for name in args.suite.split(",") if name.strip()]
    results = await runner.verify(names, args.datums, args.max_len, args.sigma)
    write_report(verify_records(results), VERIFY_COLUMNS, stdout, args.format)
    failed = [r for r in results if r.failed]
    for result in failed:
        log.error(f"{result.suite} on {result.datum}: {result.property} failed {result.failures} times.")
    return exit_code(results)


async def _minuscule(args, settings, stdout):
    datum, sigma = _datum_and_sigma(args)
    entries = parse_vector(args.mu)
    if any(c.denominator != 1 for c in entries):
        raise PreconditionError(f"mu = {args.mu} is not integral.")
    mu = tuple(int(c) for c in entries)
    rows = minuscule_report(datum, sigma, mu, args.slack)
    write_report(minuscule_records(rows), MINUSCULE_COLUMNS, stdout, args.format)
    return EXIT_OK if all(row.ok for row in rows) else EXIT_PROPERTY_FAILURE


async def _plot(args, settings, stdout):
    datum = build_root_datum(args.datum)
    elements = [parse_element(literal, datum) for literal in args.elements]
    vdatum = None
    if args.v is not None:
        vector = parse_vector(args.v)
        if len(vector) != datum.rank:
            raise PreconditionError(f"--v needs {datum.rank} entries.")
        vdatum = VDatum.from_vector(datum, vector)
    plot_rank2(datum, elements, args.out, vdatum, args.window)
    return EXIT_OK


VERBS = {
    "types": _types,
    "eval": _eval,
    "newton": _newton,
    "classify": _classify,
    "enumerate": _enumerate,
    "verify": _verify,
    "minuscule": _minuscule,
    "plot": _plot,
}
"""Coroutine handling each verb."""
