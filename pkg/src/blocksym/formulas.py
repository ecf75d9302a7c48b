"""
Closed-form product formulas, evaluated exactly.

All q-products go through :class:`blocksym.exactalg.QRatio`, so numerator and
denominator q-integers cancel before anything is expanded and the result is
a polynomial by construction; integer counts use the same cancellation at
q = 1.

Classes:
    AlphaBeta: The exponents alpha and beta of a block profile.

Functions:
    alpha_beta: Computes alpha = sum C(S_n - S_i, 2) and beta = sum (S_n - S_i).
    thm1_rhs: (q,t)-generating function of r-block diagonally symmetric tilings.
    cor1_count: Number of r-block diagonally symmetric tilings.
    thm15_rhs: (q,t)-generating function of r-block symmetric plane partitions.
    cor3_rhs: Volume generating function of r-block symmetric plane partitions.
    thm2_rhs: Product side of the signed (r, r')-block identity.
    macmahon_count: Number of plane partitions in an a x b x c box.
    macmahon_q: Volume generating function of plane partitions in a box.
    sym_pp_q: Generating function of symmetric plane partitions by |pi|'.
    sym_pp_count: Number of symmetric plane partitions.
    asm_count: Number of n x n alternating sign matrices.
    trapezoid_count: Number of tilings of a trapezoid with one dent set.
    aztec_count: 2^(n(n+1)/2).
"""

from itertools import combinations
from math import comb, factorial
from typing import NamedTuple, Optional, Sequence

from blocksym.exactalg import MPoly, ONE, QRatio
from blocksym.exceptions import InvalidParameterError, InvalidProfileError, RingError
from blocksym.regions import TrapezoidRegion, extremal_dents
from blocksym.shapes import BlockProfile, check_dent_set
from blocksym.tilings import MAX_TILINGS, weighted_region_sum


class AlphaBeta(NamedTuple):
    alpha: int
    beta: int


def alpha_beta(profile: BlockProfile) -> AlphaBeta:
    s_n = profile.total
    gaps = [s_n - profile.S[i] for i in range(1, profile.n + 1)]
    return AlphaBeta(sum(comb(g, 2) for g in gaps), sum(gaps))


def _profile_ratio(profile: BlockProfile) -> QRatio:
    # prod_(i<j) [S_j - S_i + j - i] prod_i [S_n + i - 1]! / prod_i [S_i + i - 1]! [S_n - S_i + n - i]!
    S, n = profile.S, profile.n
    ratio = QRatio()
    for i, j in combinations(range(1, n + 1), 2):
        ratio.mul_qint(S[j] - S[i] + j - i)
    for i in range(1, n + 1):
        ratio.mul_qfactorial(S[n] + i - 1)
        ratio.div_qfactorial(S[i] + i - 1)
        ratio.div_qfactorial(S[n] - S[i] + n - i)
    return ratio


def _t_factors(m: int, step: int, shift: int) -> MPoly:
    total = ONE
    for i in range(1, m + 1):
        total = total * (ONE + MPoly.monomial(q=step * (i - 1) + shift, t=1))
    return total


def thm1_rhs(profile: BlockProfile) -> MPoly:
    """
    prod_(i=1)^m (1 + q^(i-1) t) q^alpha t^beta times the q-factorial ratio of the profile.

    Args:
        profile (BlockProfile): r = (r_1, ..., r_n), m = |r|.

    Returns:
        MPoly: A polynomial in q and t.
    """
    ab = alpha_beta(profile)
    return (_t_factors(profile.total, 1, 0)
            * MPoly.monomial(q=ab.alpha, t=ab.beta)
            * _profile_ratio(profile).to_mpoly())


def cor1_count(profile: BlockProfile) -> int:
    """
    2^m times the integer factorial ratio of the profile.

    Raises:
        RingError: If the ratio is not an integer.
    """
    return 2 ** profile.total * _profile_ratio(profile).at_one()


def thm15_rhs(profile: BlockProfile) -> MPoly:
    """The product of :func:`thm1_rhs` with q replaced by q^2 (t untouched)."""
    ab = alpha_beta(profile)
    return (_t_factors(profile.total, 2, 0)
            * MPoly.monomial(q=2 * ab.alpha, t=ab.beta)
            * _profile_ratio(profile).to_mpoly(base=2))


def cor3_rhs(profile: BlockProfile) -> MPoly:
    """prod_(i=1)^m (1 + q^(2i-1)) q^(2 alpha + beta) times the ratio in q^2."""
    ab = alpha_beta(profile)
    total = ONE
    for i in range(1, profile.total + 1):
        total = total * (ONE + MPoly.var_q(2 * i - 1))
    return total * MPoly.var_q(2 * ab.alpha + ab.beta) * _profile_ratio(profile).to_mpoly(base=2)


def thm2_rhs(r: BlockProfile, rp: BlockProfile, m: int, n: int, l: int,
             limit: Optional[int] = MAX_TILINGS) -> MPoly:
    """
    prod_(i=1)^m (1 + x_i) M_x(T(n+l, m; P_min, P'_max)).

    The single-region factor has no product formula and is computed by the
    tiler.

    Raises:
        InvalidProfileError: If |r| != m + l or the lengths differ from n.
        InvalidParameterError: Unless r' = (1^l, 0^(n-l)).
    """
    if r.total != m + l or r.n != n or rp.n != n:
        raise InvalidProfileError(f"profiles {r}, {rp} do not fit m={m}, n={n}, l={l}", "--r")
    if l > n or rp != BlockProfile.ones(l, n):
        raise InvalidParameterError(f"r' must be (1^{l}, 0^{n - l}), got {rp}", "--rprime")
    p_min, p_max = extremal_dents(r, rp)
    total = weighted_region_sum(TrapezoidRegion(n + l, m, p_min, p_max), 'x', limit)
    for i in range(1, m + 1):
        total = total * (ONE + MPoly.var_x(i))
    return total


def _check_box(*sides: int) -> None:
    if min(sides) < 1:
        raise InvalidParameterError(f"box sides must be positive, got {sides}")


def _macmahon_ratio(a: int, b: int, c: int) -> QRatio:
    ratio = QRatio()
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            ratio.mul_qint(c + i + j - 1).div_qint(i + j - 1)
    return ratio


def macmahon_count(a: int, b: int, c: int) -> int:
    """prod_(i<=a, j<=b) (c + i + j - 1) / (i + j - 1)."""
    _check_box(a, b, c)
    return _macmahon_ratio(a, b, c).at_one()


def macmahon_q(a: int, b: int, c: int) -> MPoly:
    """prod_(i<=a, j<=b) [c + i + j - 1]_q / [i + j - 1]_q."""
    _check_box(a, b, c)
    return _macmahon_ratio(a, b, c).to_mpoly()


def _sym_ratio(m: int, n: int) -> QRatio:
    ratio = QRatio()
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            ratio.mul_qint(n + i + j - 1).div_qint(i + j - 1)
    return ratio


def sym_pp_q(m: int, n: int) -> MPoly:
    """prod_(1<=i<=j<=m) [n + i + j - 1]_q / [i + j - 1]_q."""
    _check_box(m, n)
    return _sym_ratio(m, n).to_mpoly()


def sym_pp_count(m: int, n: int) -> int:
    _check_box(m, n)
    return _sym_ratio(m, n).at_one()


def asm_count(n: int) -> int:
    """prod_(k=0)^(n-1) (3k+1)! / (n+k)!."""
    if n < 1:
        raise InvalidParameterError(f"n must be positive, got {n}")
    num, den = 1, 1
    for k in range(n):
        num *= factorial(3 * k + 1)
        den *= factorial(n + k)
    if num % den:
        raise RingError(f"ASM product for n={n} is not an integer")
    return num // den


def trapezoid_count(P: Sequence[int], m: int) -> int:
    """
    Tilings of T(n, m; P) with |P| = m: prod_(i<j) (p_j - p_i) / (j - i).

    Raises:
        InvalidParameterError: If P does not have m labels.
    """
    labels = check_dent_set(P, flag="--P")
    if len(labels) != m:
        raise InvalidParameterError(f"expected {m} dents, got {len(labels)}", "--P")
    num, den = 1, 1
    for i, j in combinations(range(m), 2):
        num *= labels[j] - labels[i]
        den *= j - i
    return num // den


def aztec_count(n: int) -> int:
    return 2 ** (n * (n + 1) // 2)


__all__ = (
    'AlphaBeta',
    'alpha_beta',
    'thm1_rhs',
    'cor1_count',
    'thm15_rhs',
    'cor3_rhs',
    'thm2_rhs',
    'macmahon_count',
    'macmahon_q',
    'sym_pp_q',
    'sym_pp_count',
    'asm_count',
    'trapezoid_count',
    'aztec_count',
)
