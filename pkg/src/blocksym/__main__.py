import json
import logging
import sys
import xml.etree.ElementTree as ET
from argparse import ArgumentParser
from dataclasses import dataclass
from functools import partial
from importlib import metadata
from typing import Any, Optional

from blocksym.config import CountMethod, OutputFormat, RunConfig, WeightMode
from blocksym.exactalg import MPoly, prime_factorization
from blocksym.exceptions import (
    BlockSymInputError, InvalidParameterError, InvalidProfileError, VerificationError,
)
from blocksym.formulas import (
    asm_count, cor1_count, cor3_rhs, macmahon_count, macmahon_q, sym_pp_count, sym_pp_q, thm15_rhs, thm1_rhs,
    thm2_rhs, trapezoid_count,
)
from blocksym.logger import logger, set_verbosity
from blocksym.paths import det_polymatrix, lgv_matrix
from blocksym.planepartitions import (
    enumerate_pp, enumerate_r_block_pp, enumerate_symmetric_pp, r_block_pp_genfun, symmetric_half_genfun,
    volume_genfun,
)
from blocksym.regions import HexagonRegion, Region, TrapezoidRegion
from blocksym.render import emit_svg, render_tiling
from blocksym.schur import principal_spec, skew_schur
from blocksym.shapes import BlockProfile
from blocksym.tilings import (
    block_pair_sum, block_symmetric_sum, enumerate_symmetric_hexagon, enumerate_tilings, signed_block_sum,
    weighted_region_sum,
)
from blocksym.verify import registry, run_suites

try:
    __version__ = metadata.version("blocksym")
except metadata.PackageNotFoundError:
    __version__ = "undefined version"

FORMULAS = ['thm1', 'cor1', 'thm15', 'cor3', 'thm2', 'macmahon', 'sympp', 'asm', 'trapezoid']


class CustomArgumentParser(ArgumentParser):
    def error(self, message):
        """Override error method to show help message on argument errors."""
        self.print_help(sys.stderr)
        logger.error(f"Error: {message}")
        sys.exit(2)


parser = CustomArgumentParser(
    "blocksym",
    description="Exact enumeration of r-block diagonally symmetric lozenge tilings and plane partitions.",
    exit_on_error=True,
)
parser.add_argument('-V', '--version', action='version', version=__version__,
                    help="Display the current version of the tool.")

common = ArgumentParser(add_help=False)
common_group = common.add_argument_group("Output")
common_group.add_argument('--format', dest='fmt', choices=[f.value for f in OutputFormat],
                          help="Output format (default: text).")
common_group.add_argument('-v', '--verbose', action='store_true', help="Log debug messages.")
common_group.add_argument('-q', '--quiet', action='store_true', help="Only log warnings and errors.")
common_group.add_argument('--unsafe-max', type=int, metavar="N",
                          help="Replace every enumeration size limit with N (use with caution).")
common_group.add_argument('--seed', type=int, help="Seed of the randomised checks.")

commands = parser.add_subparsers(dest='command', required=True, metavar="COMMAND")


def _add_command(name: str, help_: str) -> ArgumentParser:
    return commands.add_parser(name, parents=[common], help=help_, description=help_)


def _add_region_args(sub: ArgumentParser):
    group = sub.add_argument_group("Region")
    group.add_argument('--trap', metavar="HEIGHT,M", help="Trapezoid T(HEIGHT, M; P, P').")
    group.add_argument('--P', metavar="LIST", help="Right dent labels of the trapezoid.")
    group.add_argument('--Pprime', metavar="LIST", help="Left dent labels of the trapezoid.")
    group.add_argument('--hex', metavar="A,B,C", help="Hexagon H(A, B, C).")


count_parser = _add_command('count', "Number of r-block (or (r, r')-block) diagonally symmetric tilings.")
count_parser.add_argument('--r', required=True, metavar="LIST", help="Block profile r, e.g. 2,0,2,1,3.")
count_parser.add_argument('--rprime', metavar="LIST", help="Left block profile r'.")
count_parser.add_argument('--method', choices=[m.value for m in CountMethod],
                          help="formula (default), brute-force trapezoid tiler, or direct hexagon search.")

genfun_parser = _add_command('genfun', "Summed generating function over the dent sets of a profile.")
genfun_parser.add_argument('--r', required=True, metavar="LIST", help="Block profile r.")
genfun_parser.add_argument('--rprime', metavar="LIST", help="Left block profile r'.")
genfun_parser.add_argument('--weight', choices=[w.value for w in WeightMode], help="Weight of the lozenges.")
genfun_parser.add_argument('--signed', action='store_true', help="Sign each term by (-1)^d'(P').")

formula_parser = _add_command('formula', "Evaluate a closed-form product.")
formula_parser.add_argument('action', choices=FORMULAS, help="Which product.")
formula_parser.add_argument('--r', metavar="LIST")
formula_parser.add_argument('--rprime', metavar="LIST")
formula_parser.add_argument('--P', metavar="LIST", help="Dent labels for 'trapezoid'.")
formula_parser.add_argument('--q', action='store_true', help="q-version for 'macmahon' and 'sympp'.")
for _name in ('a', 'b', 'c', 'm', 'n'):
    formula_parser.add_argument(f'--{_name}', type=int)

tilings_parser = _add_command('tilings', "Enumerate the lozenge tilings of one region.")
tilings_parser.add_argument('action', choices=['count', 'list', 'genfun'])
_add_region_args(tilings_parser)
tilings_parser.add_argument('--weight', choices=[w.value for w in WeightMode], help="Weight for 'genfun'.")

pp_parser = _add_command('pp', "Plane partitions in a box, or r-block symmetric ones.")
pp_parser.add_argument('action', choices=['count', 'list', 'genfun'])
for _name in ('a', 'b', 'c', 'm', 'n'):
    pp_parser.add_argument(f'--{_name}', type=int)
pp_parser.add_argument('--r', metavar="LIST", help="Block profile; requires --m and --n.")

schur_parser = _add_command('schur', "Skew Schur polynomials.")
schur_parser.add_argument('action', choices=['eval'])
schur_parser.add_argument('--lambda', dest='lambda_', required=True, metavar="LIST")
schur_parser.add_argument('--mu', metavar="LIST")
schur_parser.add_argument('--m', type=int, required=True, help="Number of variables.")
schur_parser.add_argument('--principal', action='store_true', help="Evaluate at 1, q, ..., q^(m-1).")

lgv_parser = _add_command('lgv', "The path matrix of a profile and its determinant.")
lgv_parser.add_argument('action', choices=['genfun', 'matrix'])
lgv_parser.add_argument('--r', required=True, metavar="LIST")

render_parser = _add_command('render', "Draw one tiling as SVG.")
_add_region_args(render_parser)
render_parser.add_argument('--index', type=int, help="Index of the tiling in enumeration order (default 0).")
render_parser.add_argument('--out', help="Output file; the SVG is printed when omitted.")

verify_parser = _add_command('verify', "Run verification suites.")
verify_parser.add_argument('action', choices=registry.names() + ['all'], metavar="SUITE",
                           help=f"One of {', '.join(registry.names())} or all.")
verify_parser.add_argument('--max', dest='max_scale', type=int, help="Scale of the instances.")
verify_parser.add_argument('--jobs', type=int, help="Instances checked at once.")


@dataclass
class Result:
    value: Any
    text: str

    def print(self, fmt: OutputFormat = OutputFormat.TEXT):
        if fmt is OutputFormat.JSON:
            print(json.dumps(self.value, sort_keys=True))
        else:
            print(self.text)


def _poly_result(poly: MPoly) -> Result:
    return Result({"poly": str(poly), "terms": poly.to_json()}, str(poly))


def _int_result(value: int) -> Result:
    return Result({"value": value}, str(value))


def _weight(cfg: RunConfig, default: WeightMode) -> WeightMode:
    return cfg.weight or default


def _block_sizes(r: BlockProfile, rp: Optional[BlockProfile]):
    l = rp.total if rp is not None else 0
    m = r.total - l
    if m < 1:
        raise InvalidProfileError(f"|r| must exceed |r'|, got {r.total} and {l}", "--r")
    if rp is not None and rp.n != r.n:
        raise InvalidProfileError(f"r and r' must have the same length, got {r.n} and {rp.n}", "--rprime")
    return m, r.n, l


def _region(cfg: RunConfig) -> Region:
    if cfg.hex is not None and cfg.trap is not None:
        raise BlockSymInputError("give either --hex or --trap, not both", "--hex")
    if cfg.hex is not None:
        return HexagonRegion(*cfg.hex)
    if cfg.trap is not None:
        height, m = cfg.trap
        return TrapezoidRegion(height, m, tuple(cfg.P or ()), tuple(cfg.Pprime or ()))
    raise BlockSymInputError("a region is required", "--trap")


def cmd_count(cfg: RunConfig) -> Result:
    r, rp = cfg.profile(), cfg.profile(prime=True)
    m, n, l = _block_sizes(r, rp)
    limit = cfg.limits.max_tilings
    if rp is not None:
        total = block_pair_sum(r, rp, m, n, l, 'x', limit).evaluate()
        factors = prime_factorization(total) if total else {}
        text = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factors.items())
        return Result({"value": total, "factorization": {str(p): e for p, e in factors.items()}},
                      f"{total} = {text}" if text else str(total))
    if cfg.method is CountMethod.TILER:
        return _int_result(block_symmetric_sum(r, m, n, 'qt', limit).evaluate())
    if cfg.method is CountMethod.HEXAGON:
        return _int_result(enumerate_symmetric_hexagon(r, m, n, limit).count)
    return _int_result(cor1_count(r))


def cmd_genfun(cfg: RunConfig) -> Result:
    r, rp = cfg.profile(), cfg.profile(prime=True)
    m, n, l = _block_sizes(r, rp)
    weight = _weight(cfg, WeightMode.QT if rp is None else WeightMode.X)
    limit = cfg.limits.max_tilings
    if rp is None:
        poly = block_symmetric_sum(r, m, n, 'qt' if weight is WeightMode.QT else 'x', limit)
    elif cfg.signed:
        if rp != BlockProfile.ones(l, n):
            logger.warning(f"no product identity is known for r' = {rp}; the signed sum is exploratory")
        poly = signed_block_sum(r, rp, m, n, l, limit)
        if weight is WeightMode.QT:
            poly = poly.substitute_qt()
    else:
        poly = block_pair_sum(r, rp, m, n, l, 'qt' if weight is WeightMode.QT else 'x', limit)
    if weight is WeightMode.NUMERIC:
        return _int_result(poly.evaluate())
    return _poly_result(poly)


def cmd_formula(cfg: RunConfig) -> Result:
    name = cfg.action
    if name in ('thm1', 'cor1', 'thm15', 'cor3'):
        cfg.require('r')
        r = cfg.profile()
        if name == 'cor1':
            return _int_result(cor1_count(r))
        return _poly_result({'thm1': thm1_rhs, 'thm15': thm15_rhs, 'cor3': cor3_rhs}[name](r))
    if name == 'thm2':
        cfg.require('r', 'rprime')
        r, rp = cfg.profile(), cfg.profile(prime=True)
        m, n, l = _block_sizes(r, rp)
        return _poly_result(thm2_rhs(r, rp, m, n, l, cfg.limits.max_tilings))
    if name == 'macmahon':
        cfg.require('a', 'b', 'c')
        if cfg.q:
            return _poly_result(macmahon_q(cfg.a, cfg.b, cfg.c))
        return _int_result(macmahon_count(cfg.a, cfg.b, cfg.c))
    if name == 'sympp':
        cfg.require('m', 'n')
        if cfg.q:
            return _poly_result(sym_pp_q(cfg.m, cfg.n))
        return _int_result(sym_pp_count(cfg.m, cfg.n))
    if name == 'asm':
        cfg.require('n')
        return _int_result(asm_count(cfg.n))
    cfg.require('P', 'm')
    return _int_result(trapezoid_count(cfg.P, cfg.m))


def cmd_tilings(cfg: RunConfig) -> Result:
    region = _region(cfg)
    limit = cfg.limits.max_tilings
    if cfg.action == 'genfun':
        weight = _weight(cfg, WeightMode.X)
        if weight is WeightMode.NUMERIC:
            return _int_result(len(enumerate_tilings(region, limit)))
        return _poly_result(weighted_region_sum(region, weight, limit))
    tilings = enumerate_tilings(region, limit)
    if cfg.action == 'count':
        return _int_result(len(tilings))
    text = "\n".join(" ".join(f"{loz.right}{loz.left}" for loz in t.lozenges) for t in tilings)
    return Result({"region": str(region), "tilings": [t.to_json() for t in tilings]}, text)


def cmd_pp(cfg: RunConfig) -> Result:
    limits = cfg.limits
    if cfg.m is not None or cfg.r is not None:
        cfg.require('m', 'n')
        r = cfg.profile()
        if r is None:
            genfun = partial(symmetric_half_genfun, cfg.m, cfg.n, limits.max_tilings)
            found = partial(enumerate_symmetric_pp, cfg.m, cfg.n, limits.max_tilings)
        else:
            genfun = partial(r_block_pp_genfun, cfg.m, cfg.n, r, limits.max_tilings)
            found = partial(enumerate_r_block_pp, cfg.m, cfg.n, r, limits.max_tilings)
    else:
        cfg.require('a', 'b', 'c')
        box = (cfg.a, cfg.b, cfg.c, limits.pp_max_cells, limits.pp_max_height)
        genfun = partial(volume_genfun, *box)
        found = partial(enumerate_pp, *box)
    if cfg.action == 'genfun':
        return _poly_result(genfun())
    partitions = found()
    if cfg.action == 'count':
        return _int_result(len(partitions))
    rows = [pi.to_json() for pi in partitions]
    return Result({"plane_partitions": rows}, "\n".join(json.dumps(row) for row in rows))


def cmd_schur(cfg: RunConfig) -> Result:
    lam, mu = cfg.partition('lambda_'), cfg.partition('mu')
    if cfg.principal:
        if mu:
            raise InvalidParameterError("the principal specialisation takes no --mu", "--mu")
        return _poly_result(principal_spec(lam, cfg.m))
    return _poly_result(skew_schur(lam, mu, cfg.m))


def cmd_lgv(cfg: RunConfig) -> Result:
    r = cfg.profile()
    matrix = lgv_matrix(r, r.total, r.n)
    if cfg.action == 'matrix':
        rows = matrix.to_text()
        return Result({"matrix": rows}, "\n".join("\t".join(row) for row in rows))
    return _poly_result(det_polymatrix(matrix))


def cmd_render(cfg: RunConfig) -> Result:
    region = _region(cfg)
    tilings = enumerate_tilings(region, cfg.limits.max_tilings)
    if not tilings:
        raise InvalidParameterError(f"{region} has no tilings", "--trap" if cfg.trap else "--hex")
    if cfg.index >= len(tilings):
        raise InvalidParameterError(f"{region} has {len(tilings)} tilings, index {cfg.index} is out of range",
                                    "--index")
    tiling = tilings[cfg.index]
    if cfg.out is None:
        svg = ET.tostring(render_tiling(tiling, region), encoding="unicode")
        return Result({"svg": svg, "lozenges": len(tiling)}, svg)
    path = emit_svg(tiling, region, cfg.out)
    return Result({"path": str(path), "lozenges": len(tiling)}, str(path))


def cmd_verify(cfg: RunConfig) -> Result:
    names = registry.names() if cfg.action == 'all' else [cfg.action]
    reports = run_suites(names, cfg.max_scale, cfg.jobs, cfg.seed, progress=logger.isEnabledFor(logging.INFO))
    if cfg.fmt is not OutputFormat.JSON:
        for report in reports:
            report.print(verbose=logger.isEnabledFor(logging.DEBUG))
    # the summary line is printed in every format
    summary = [r.to_dict() for r in reports]
    print(json.dumps(summary if cfg.action == 'all' else summary[0], sort_keys=True))
    for report in reports:
        report.raise_for_failure()
    return Result(None, "")


HANDLERS = {
    'count': cmd_count,
    'genfun': cmd_genfun,
    'formula': cmd_formula,
    'tilings': cmd_tilings,
    'pp': cmd_pp,
    'schur': cmd_schur,
    'lgv': cmd_lgv,
    'render': cmd_render,
    'verify': cmd_verify,
}


def run(cfg: RunConfig) -> int:
    """
    Executes one validated invocation and prints its result.

    Returns:
        int: 0; failures are raised.

    Raises:
        BlockSymInputError: On invalid input (exit code 2).
        VerificationError: When a suite fails (exit code 1).
    """
    if cfg.fmt is OutputFormat.SVG and cfg.command != 'render':
        raise BlockSymInputError("svg output is only available for 'render'", "--format")
    result = HANDLERS[cfg.command](cfg)
    if cfg.command != 'verify':
        result.print(OutputFormat.TEXT if cfg.fmt is OutputFormat.SVG else cfg.fmt)
    return 0


def main(argv=None):
    try:
        args = parser.parse_args(argv)
        set_verbosity(args.verbose, args.quiet)
        run(RunConfig.from_namespace(args))
    except BlockSymInputError as e:
        logger.error(e.diagnostic())
        sys.exit(2)
    except VerificationError as e:
        logger.error(e)
        sys.exit(1)
    except Exception as e:
        logger.critical(e)
        sys.exit(1)
    except KeyboardInterrupt:
        print()
        logger.warning("Process interrupted by user. Exiting gracefully...")
        sys.exit(0)
    logger.debug("Process completed successfully.")
    sys.exit(0)


if __name__ == '__main__':
    main()
