r"""
Command line front end.

Every subcommand prints one report on stdout, as JSON (default), CSV or an aligned text
table. Errors go to stderr as ``{"error": ..., "message": ..., "details": ...}``; the exit
code is 0 on success, 1 on usage errors and 2 on domain errors.
"""

import argparse
import json
import logging
import math
import sys
import typing
from pathlib import Path

from .catalog import build_example, fermat_nonvanishing_scan, lefschetz_betti, list_catalog
from .classes import BWData
from .config import FORMATS, RunConfig
from .exceptions import TwistlabError
from .index import (
    SymplecticPath,
    bw_exceptional_model,
    bw_principal_model,
    hyperbolic_path,
    index_report,
    mean_index,
    rotation_path,
)
from .mec import (
    build_e1_strata_bw,
    chi_m_brieskorn,
    chi_m_bw,
    chi_m_cover,
    chi_m_from_e1,
    chi_m_orbifold,
    chi_m_subcritical,
    chi_m_window,
    e1_csv,
    e1_graded_dims,
    e1_page,
    e1_table,
)
from .profile import (
    ProfileConfig,
    binding_interpolation_check,
    build_rho,
    exactness_check,
    interpolation_pair,
    mapping_torus_shift,
    twisting_profile,
    unit_profile,
    verify_profile,
)
from .twist import decide_triviality, distinct_powers
from .utils.io import dumps_json, parse_rational, rows_to_csv, rows_to_table, to_jsonable
from .version import __version__

LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
MODELS = ("rotation", "hyperbolic", "bw-principal", "bw-exceptional")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class Report(typing.NamedTuple):
    payload: dict
    header: list = None
    rows: list = None
    csv: str = None
    table: str = None


def _flat_rows(payload):
    rows = []
    for key, value in sorted(to_jsonable(payload).items()):
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        rows.append((key, value))
    return rows


def render(report, output_format):
    if output_format == "json":
        return dumps_json(report.payload) + "\n"
    if output_format == "csv":
        if report.csv is not None:
            return report.csv
        if report.header is not None:
            return rows_to_csv(report.header, report.rows)
        return rows_to_csv(["key", "value"], _flat_rows(report.payload))
    if report.table is not None:
        return report.table
    if report.header is not None:
        return rows_to_table(report.header, report.rows)
    return rows_to_table(["key", "value"], _flat_rows(report.payload))


# input helpers


def _data_from_args(args):
    if getattr(args, "bw", None):
        data = BWData.from_sequence(args.bw)
        record = None
    elif getattr(args, "catalog", None):
        record = build_example(args.catalog[0], args.catalog[1:], N=args.N)
        data = record.data
    else:
        raise UsageError("give --bw n chi_M chi_H c k N or --catalog NAME [PARAMS]")
    if args.N is not None and record is None:
        data = data.with_N(args.N)
    return data, record


def _add_data_flags(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--bw", nargs=6, type=int, metavar=("n", "chiM", "chiH", "c", "k", "N"))
    group.add_argument("--catalog", nargs="+", metavar="NAME_OR_PARAM")
    parser.add_argument("--N", type=int, default=None, help="override the power N")


# subcommands


def _model_path(args, cfg):
    samples = args.samples or cfg.path_samples
    if args.model == "rotation":
        return rotation_path(parse_rational(args.winding), args.duration, samples)
    if args.model == "hyperbolic":
        return hyperbolic_path(args.rate, args.duration, samples)
    missing = [name for name in ("n", "c", "N") if getattr(args, name) is None]
    if missing:
        raise UsageError(f"--model {args.model} needs --{' --'.join(missing)}")
    if args.model == "bw-principal":
        return bw_principal_model(args.n, args.c, args.k, args.N, samples)
    if args.m is None:
        raise UsageError("--model bw-exceptional needs --m")
    return bw_exceptional_model(args.n, args.c, args.N, args.m, samples)


def cmd_maslov(args, cfg):
    if (args.path is None) == (args.model is None):
        raise UsageError("give either a path file or --model")
    if args.path is not None:
        path = SymplecticPath.from_file(args.path, symplectic_tol=cfg.symplectic_tol)
    else:
        path = _model_path(args, cfg)
    result = index_report(path, cfg.det_tol, cfg.kernel_tol, cfg.refine_iters)
    payload = result.to_dict()
    if args.mean_index is not None:
        payload["mean_index"] = mean_index(path, args.mean_index, cfg.det_tol, cfg.kernel_tol, cfg.refine_iters)
    return Report(payload)


def cmd_chi_m(args, cfg):
    if args.cover is not None and not args.bw:
        raise UsageError("--cover needs --bw")
    if args.brieskorn:
        n, N = args.brieskorn
        payload = {"kind": "brieskorn", "n": n, "N": N, "chi_m": chi_m_brieskorn(n, N)}
    elif args.subcritical:
        n, chi_W = args.subcritical
        payload = {"kind": "subcritical", "n": n, "chi_W": chi_W, "chi_m": chi_m_subcritical(n, chi_W)}
    else:
        data = BWData.from_sequence(args.bw)
        payload = {"kind": "bw", "data": data, "mu_P": data.mu_P}
        if args.cover is not None:
            payload.update(kind="cover", m=args.cover, chi_m=chi_m_cover(data, args.cover))
        else:
            payload["chi_m"] = chi_m_bw(data)
        if args.orbifold:
            payload["chi_m_orbifold"] = chi_m_orbifold(data)
    return Report(payload)


def cmd_decide(args, cfg):
    data, _ = _data_from_args(args)
    return Report(decide_triviality(data).to_dict())


def cmd_powers(args, cfg):
    data, _ = _data_from_args(args)
    report = distinct_powers(data, args.N_max)
    rows = [(v["N"], v["status"]) for v in report["verdicts"]]
    return Report(report, ["N", "status"], rows)


def cmd_e1(args, cfg):
    data, record = _data_from_args(args)
    if args.betti_M is not None:
        betti_M = tuple(args.betti_M)
    elif record is not None:
        betti_M = record.betti_M
    else:
        betti_M = lefschetz_betti(data.n - 1, data.chi_M)
    if args.betti_H is not None:
        betti_H = tuple(args.betti_H)
    elif record is not None:
        betti_H = record.betti_H
    else:
        betti_H = lefschetz_betti(data.n - 2, data.chi_H)
    strata = build_e1_strata_bw(
        data, betti_H, betti_M, periods=args.periods, validate=not args.no_validate, samples=cfg.path_samples
    )
    page = e1_page(strata)
    chi_m = chi_m_from_e1(page, data.mu_P)
    payload = {
        "data": data,
        "page": page,
        "chi_m": chi_m,
        "chi_m_bw": chi_m_bw(data),
        "chi_m_window": chi_m_window(e1_graded_dims(page, data.mu_P), cfg.window),
    }
    table = e1_table(page) + f"chi_m = {to_jsonable(chi_m)}\n"
    return Report(payload, csv=e1_csv(page), table=table)


def _write_tables(directory, tables, binding):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for table in tables:
        (directory / f"{table.name}.csv").write_text(table.to_csv())
    header = ["r"]
    columns = []
    for s, pair in binding:
        header += [f"h1_s{s:g}", f"h2_s{s:g}"]
        columns += [pair.h1, pair.h2]
    r = binding[0][1].r
    rows = zip(r.tolist(), *(c.tolist() for c in columns))
    (directory / "binding.csv").write_text(rows_to_csv(header, rows))
    LOGGER.info("wrote %d tables to %s", len(tables) + 1, directory)


def cmd_profile_verify(args, cfg):
    pcfg = ProfileConfig(args.C, args.eta, args.grid or cfg.profile_grid, args.multiplicity)
    rho = build_rho(pcfg)
    f = twisting_profile(rho)
    profile_residual = verify_profile(rho, f, pcfg.C, pcfg.multiplicity)
    # raises NonPositiveShift, so a report always carries min_h > 0
    h = mapping_torus_shift(f, pcfg.C, A=args.A, multiplicity=pcfg.multiplicity)
    exactness_residual = exactness_check(unit_profile(pcfg, cfg.exactness_grid), A=args.A)
    binding = binding_interpolation_check(pcfg, args.s_samples)
    payload = {
        "config": pcfg,
        "A": args.A,
        "profile_residual": profile_residual,
        "exactness_residual": exactness_residual,
        "min_h": float(h.values.min()),
        "min_f": float(f.values.min()),
        "max_f": float(f.values.max()),
        "binding_interpolation": binding,
        "passed": {
            "profile": profile_residual < cfg.residual_tol,
            "exactness": exactness_residual < cfg.exactness_tol,
            "binding_interpolation": binding,
        },
    }
    if args.tables_out:
        pairs = [(s, interpolation_pair(pcfg, s)) for s in (0.0, 0.5, 1.0)]
        _write_tables(args.tables_out, (rho, f, h), pairs)
    return Report(payload)


def cmd_catalog(args, cfg):
    if args.action == "list":
        entries = list_catalog()
        return Report({"entries": entries}, ["name", "parameters"], [(e["name"], " ".join(e["parameters"])) for e in entries])
    if not args.params:
        raise UsageError("catalog show needs NAME [PARAMS]")
    record = build_example(args.params[0], args.params[1:], N=args.N)
    return Report(record.to_dict())


def cmd_fermat_scan(args, cfg):
    report = fermat_nonvanishing_scan(args.n_max)
    header = ["n", "d", "f", "c", "chi_M", "chi_H"]
    return Report(report, header, [[row[k] for k in header] for row in report["rows"]])


# parser


def build_parser():
    parser = _Parser(prog="twistlab", description="Index and mean Euler characteristic calculators")
    parser.add_argument("--version", action="version", version=f"twistlab {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--format", choices=FORMATS, default=None, help="output format (default json)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("maslov", help="Robbin-Salamon index of a path")
    p.add_argument("path", nargs="?", help="JSON or CSV path file")
    p.add_argument("--model", choices=MODELS)
    p.add_argument("--winding", default="1", help="winding rate, rational")
    p.add_argument("--rate", type=float, default=1.0, help="hyperbolic rate")
    p.add_argument("--duration", type=float, default=2.0 * math.pi)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--N", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--mean-index", type=int, default=None, metavar="COVERS")
    p.add_argument("--det-tol", type=float, default=None)
    p.add_argument("--kernel-tol", type=float, default=None)
    p.set_defaults(handler=cmd_maslov)

    p = sub.add_parser("chi-m", help="mean Euler characteristic")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bw", nargs=6, type=int, metavar=("n", "chiM", "chiH", "c", "k", "N"))
    group.add_argument("--brieskorn", nargs=2, type=int, metavar=("n", "N"))
    group.add_argument("--subcritical", nargs=2, type=int, metavar=("n", "chiW"))
    p.add_argument("--cover", type=int, default=None, metavar="m")
    p.add_argument("--orbifold", action="store_true", help="also evaluate the orbifold formula (k = 1)")
    p.set_defaults(handler=cmd_chi_m)

    p = sub.add_parser("decide", help="obstruct a power of the fibered Dehn twist")
    _add_data_flags(p)
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("powers", help="which powers are told apart")
    _add_data_flags(p)
    p.add_argument("--N-max", dest="N_max", type=int, default=10)
    p.set_defaults(handler=cmd_powers)

    p = sub.add_parser("e1", help="E1 page of a Boothby-Wang orbibundle (k = 1)")
    _add_data_flags(p)
    p.add_argument("--periods", type=int, default=1)
    p.add_argument("--betti-M", dest="betti_M", nargs="+", type=int)
    p.add_argument("--betti-H", dest="betti_H", nargs="+", type=int)
    p.add_argument("--no-validate", action="store_true", help="skip the index engine cross-check")
    p.set_defaults(handler=cmd_e1)

    p = sub.add_parser("profile-verify", help="verify the twisting profile and gluing data")
    p.add_argument("--C", type=float, default=1.0)
    p.add_argument("--eta", type=float, default=0.5)
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--multiplicity", type=int, default=1)
    p.add_argument("--s-samples", dest="s_samples", type=int, default=21)
    p.add_argument("--A", type=float, default=2.0 * math.pi, help="constant of the mapping torus shift")
    p.add_argument("--exactness-grid", dest="exactness_grid", type=int, default=None)
    p.add_argument("--tol", dest="residual_tol", type=float, default=None)
    p.add_argument("--tables-out", dest="tables_out", default=None, metavar="DIR")
    p.set_defaults(handler=cmd_profile_verify)

    p = sub.add_parser("catalog", help="worked examples")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("params", nargs="*", metavar="NAME_OR_PARAM")
    p.add_argument("--N", type=int, default=None)
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("fermat-scan", help="non-vanishing scan of the Fermat polynomial")
    p.add_argument("--n-max", dest="n_max", type=int, default=12)
    p.set_defaults(handler=cmd_fermat_scan)
    return parser


def _fail(envelope, code):
    sys.stderr.write(dumps_json(envelope) + "\n")
    return code


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as err:
        return _fail({"error": "UsageError", "message": str(err), "details": {}}, 1)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING, format=LOG_FORMAT, stream=sys.stderr
    )
    try:
        cfg = RunConfig.from_env(
            output_format=args.format,
            det_tol=getattr(args, "det_tol", None),
            kernel_tol=getattr(args, "kernel_tol", None),
            residual_tol=getattr(args, "residual_tol", None),
            exactness_grid=getattr(args, "exactness_grid", None),
        )
        report = args.handler(args, cfg)
        sys.stdout.write(render(report, cfg.output_format))
    except UsageError as err:
        return _fail({"error": "UsageError", "message": str(err), "details": {}}, 1)
    except TwistlabError as err:
        return _fail(err.envelope(), 1 if isinstance(err, ValueError) else 2)
    except ValueError as err:
        return _fail({"error": type(err).__name__, "message": str(err), "details": {}}, 1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
