"""
Exact enumeration of r-block diagonally symmetric lozenge tilings of
hexagons and of the matching plane partitions.

Modules:
    exactalg: Exact polynomials, q-rationals and integer linear algebra.
    shapes: Partitions, skew shapes, block profiles and strip tests.
    regions: Triangular lattice, hexagons and dented trapezoids.
    tilings: Lozenge tilings, enumeration and weighted sums.
    paths: Lattice path weights and the path matrix of a profile.
    schur: Skew Schur polynomials, Pieri expansions and split identities.
    formulas: Closed-form products.
    planepartitions: Plane partitions and their block symmetry.
    render: SVG drawings of tilings.
    verify: Verification suites.
    config: Validated CLI configuration.
"""

from importlib import metadata

from blocksym.exactalg import MPoly, QRatio
from blocksym.formulas import (
    asm_count, cor1_count, cor3_rhs, macmahon_count, sym_pp_count, thm15_rhs, thm1_rhs, thm2_rhs,
    trapezoid_count,
)
from blocksym.regions import HexagonRegion, TrapezoidRegion
from blocksym.shapes import BlockProfile, Partition
from blocksym.tilings import (
    block_pair_sum, block_symmetric_sum, enumerate_symmetric_hexagon, enumerate_tilings, signed_block_sum,
)

try:
    __version__ = metadata.version("blocksym")
except metadata.PackageNotFoundError:
    __version__ = "undefined version"

__all__ = (
    'MPoly',
    'QRatio',
    'Partition',
    'BlockProfile',
    'HexagonRegion',
    'TrapezoidRegion',
    'enumerate_tilings',
    'enumerate_symmetric_hexagon',
    'block_symmetric_sum',
    'block_pair_sum',
    'signed_block_sum',
    'thm1_rhs',
    'cor1_count',
    'thm15_rhs',
    'cor3_rhs',
    'thm2_rhs',
    'macmahon_count',
    'sym_pp_count',
    'asm_count',
    'trapezoid_count',

    'exactalg',
    'shapes',
    'regions',
    'tilings',
    'paths',
    'schur',
    'formulas',
    'planepartitions',
    'render',
    'verify',
    'config',
    'exceptions',
    'logger',
)
