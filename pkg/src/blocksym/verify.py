"""
Verification suites: every identity of the package checked over a range of
instances, with the two sides computed independently.

A suite yields ``(key, params)`` instances up to a scale and checks each one;
instances run as thread tasks bounded by a semaphore and the results are
sorted by key, so a report does not depend on scheduling.

Classes:
    Suite: One named family of checks.
    InstanceResult: The outcome of one instance.
    SuiteReport: Aggregated outcome of a suite run.
    SuiteRegistry: Name -> Suite mapping.

Functions:
    run_suite: Runs one registered suite and returns its report.
    run_suites: Runs several suites in order.
    limited_to_thread: Runs a function in a thread under a semaphore.

Attributes:
    registry (SuiteRegistry): The default registry with every built-in suite.
"""

import asyncio
import json
from asyncio import Semaphore
from dataclasses import dataclass, field
from itertools import combinations
from random import Random
from typing import Any, Callable, Dict, Iterable, Optional

from tqdm.asyncio import tqdm_asyncio
from typing_extensions import List, Tuple

from blocksym.config import MAX_THREADS
from blocksym.exactalg import ZERO, int_det
from blocksym.exceptions import BlockSymError, Counterexample, VerificationError, Violation
from blocksym.formulas import (
    aztec_count, asm_count, cor1_count, cor3_rhs, macmahon_count, macmahon_q, sym_pp_count, sym_pp_q,
    thm15_rhs, thm1_rhs, thm2_rhs,
)
from blocksym.logger import color_fmt, color_print, logger
from blocksym.paths import (
    LatticePoint, det_polymatrix, krattenthaler_sides, lgv_matrix, path_weight_between,
    path_weight_closed, path_weight_recursive,
)
from blocksym.planepartitions import (
    enumerate_pp, enumerate_symmetric_pp, r_block_pp_genfun, symmetric_half_genfun, volume_genfun,
)
from blocksym.regions import TrapezoidRegion
from blocksym.schur import (
    asm_via_schur, dual_pieri_expand, elementary_sym, skew_dual_pieri_expand, skew_schur,
    split_product_sides,
)
from blocksym.shapes import BlockProfile, compositions, contains, iter_partitions_up_to, lambda_of_dents, \
    mu_of_dents
from blocksym.tilings import (
    all_dents_sum, block_symmetric_sum, enumerate_symmetric_hexagon, signed_block_sum, weighted_region_sum,
)

SuiteCheckResult = Tuple[bool, str]
SuiteInstances = Callable[[int, Optional[int]], Iterable[Tuple[str, Any]]]
SuiteCheck = Callable[[Any], SuiteCheckResult]


async def limited_to_thread(semaphore: Semaphore, func, *args):
    """Run a function in a thread, limited by the semaphore."""
    async with semaphore:
        return await asyncio.to_thread(func, *args)


@dataclass
class InstanceResult:
    key: str
    ok: bool
    reason: str = ""
    error: bool = False


@dataclass
class Suite:
    """
    A family of checks.

    Attributes:
        name (str): Registry key, e.g. ``thm1``.
        description (str): One line shown in reports.
        instances (SuiteInstances): ``(scale, seed) -> [(key, params), ...]``.
        check (SuiteCheck): ``params -> (ok, reason)``.
        default_scale (int): Scale used when ``--max`` is not given.
    """
    name: str
    description: str
    instances: SuiteInstances
    check: SuiteCheck
    default_scale: int

    def run_instance(self, key: str, params: Any) -> InstanceResult:
        """
        Checks one instance; errors raised by the check count as failures.
        """
        try:
            ok, reason = self.check(params)
            return InstanceResult(key, ok, "" if ok else str(reason))
        except BlockSymError as err:
            return InstanceResult(key, False, f"{type(err).__name__}: {err}", error=True)


@dataclass
class SuiteReport:
    """
    Attributes:
        suite (str): Suite name.
        scale (int): Scale the suite ran at.
        checked (int): Number of instances.
        counterexamples (list[Counterexample]): Instances whose sides differ.
        violations (list[Violation]): Instances whose check raised.
    """
    suite: str
    scale: int
    checked: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.violations

    @classmethod
    def from_results(cls, suite: str, scale: int, results: List[InstanceResult]) -> 'SuiteReport':
        report = cls(suite, scale, len(results))
        for result in sorted(results, key=lambda r: r.key):
            if result.ok:
                continue
            if result.error:
                report.violations.append(Violation(result.key, suite, result.reason))
            else:
                report.counterexamples.append(Counterexample(result.key, suite, result.reason))
        return report

    def to_dict(self) -> Dict[str, Any]:
        first = (self.counterexamples + self.violations)[:1]
        return {
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": {"instance": first[0].path, "reason": first[0].reason} if first else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def print(self, verbose: bool = False):
        if self.passed:
            status = color_fmt("Passed:", levelname="INFO")
        else:
            status = color_fmt("Failed:", levelname="ERROR")
        print(f"{status} {self.suite} (scale {self.scale}), {self.checked} instances checked")
        failures = self.counterexamples + self.violations
        for violation in failures if verbose else failures[:1]:
            color_print(violation.format(), levelname="WARNING")

    def raise_for_failure(self):
        """
        Raises:
            VerificationError: If any instance failed.
        """
        if not self.passed:
            raise VerificationError(
                f"suite '{self.suite}' failed on {len(self.counterexamples) + len(self.violations)} "
                f"of {self.checked} instances",
                self.suite, self.checked, self.counterexamples, self.violations,
            )


class SuiteRegistry:
    """
    Maps suite names to suites.

    Methods:
        register(name, suite): Adds a suite; raises KeyError if the name is taken.
        unregister(name): Removes a suite if present.
        get_suite(name): The suite or None.
        names(): Registered names in registration order.
    """

    def __init__(self):
        self.suites: Dict[str, Suite] = {}

    def register(self, name: str, suite: Suite):
        if name in self.suites:
            raise KeyError(f"Suite {name} already exists.")
        self.suites[name] = suite

    def unregister(self, name: str):
        self.suites.pop(name, None)

    def get_suite(self, name: str) -> Optional[Suite]:
        return self.suites.get(name, None)

    def names(self) -> List[str]:
        return list(self.suites)


async def _run(suite: Suite, scale: int, seed: Optional[int], jobs: int, progress: bool) -> List[InstanceResult]:
    semaphore = Semaphore(jobs)
    tasks = [limited_to_thread(semaphore, suite.run_instance, key, params)
             for key, params in suite.instances(scale, seed)]
    logger.debug(f"suite {suite.name}: {len(tasks)} instances at scale {scale}")
    return await tqdm_asyncio.gather(*tasks, desc=suite.name, disable=not progress, leave=False)


def run_suite(name: str, scale: Optional[int] = None, jobs: int = MAX_THREADS, seed: Optional[int] = None,
              progress: bool = False, suites: Optional[SuiteRegistry] = None) -> SuiteReport:
    """
    Runs one suite.

    Args:
        name (str): Registered suite name.
        scale (int | None): Instance range; the suite default when None.
        jobs (int): Maximum number of instances checked at once.
        seed (int | None): Seed of the randomised checks.
        progress (bool): Show a progress bar.
        suites (SuiteRegistry | None): Registry to look the name up in.

    Returns:
        SuiteReport: The aggregated outcome; call ``raise_for_failure`` to
            turn a failure into ``VerificationError``.

    Raises:
        KeyError: If no suite has that name.
    """
    suite = (suites or registry).get_suite(name)
    if suite is None:
        raise KeyError(f"unknown suite {name!r}")
    scale = suite.default_scale if scale is None else scale
    results = asyncio.run(_run(suite, scale, seed, jobs, progress))
    return SuiteReport.from_results(name, scale, results)


def run_suites(names: Iterable[str], scale: Optional[int] = None, jobs: int = MAX_THREADS,
               seed: Optional[int] = None, progress: bool = False) -> List[SuiteReport]:
    return [run_suite(name, scale, jobs, seed, progress) for name in names]


def _profiles(scale: int, min_m: int = 1) -> Iterable[BlockProfile]:
    for total in range(min_m + 1, scale + 1):
        for m in range(min_m, total):
            yield from compositions(m, total - m)


def _thm1_instances(scale, seed):
    for r in _profiles(scale):
        yield f"r={r}", r


def _thm1_check(r: BlockProfile) -> SuiteCheckResult:
    m, n = r.total, r.n
    formula = thm1_rhs(r)
    tiler = block_symmetric_sum(r, m, n)
    if tiler != formula:
        return False, f"tiler gives {tiler}, product gives {formula}"
    det = det_polymatrix(lgv_matrix(r, m, n))
    if det != formula:
        return False, f"det A gives {det}, product gives {formula}"
    return True, ""


def _offdiag_instances(scale, seed):
    for n in range(1, scale + 1):
        yield f"n={n}", n


def _offdiag_check(n: int) -> SuiteCheckResult:
    r = BlockProfile((1,) * n)
    if cor1_count(r) != aztec_count(n):
        return False, f"formula gives {cor1_count(r)}, expected {aztec_count(n)}"
    if n <= 4:
        found = enumerate_symmetric_hexagon(r, n, n, None).count
        if found != aztec_count(n):
            return False, f"hexagon enumeration found {found}, expected {aztec_count(n)}"
    return True, ""


def _asm_check(n: int) -> SuiteCheckResult:
    r = BlockProfile((2,) * n)
    norm = 2 ** (2 * n) * 3 ** (n * (n - 1) // 2)
    expected = asm_count(n)
    counts = {"formula": cor1_count(r)}
    if n <= 3:
        counts["hexagon"] = enumerate_symmetric_hexagon(r, 2 * n, n, None).count
    for how, count in counts.items():
        if count != norm * expected:
            return False, f"{how} gives {count} = {count / norm} * {norm}, expected {expected}"
    if asm_via_schur(n) != expected:
        return False, f"Schur evaluation gives {asm_via_schur(n)}, expected {expected}"
    return True, ""


def _thm15_instances(scale, seed):
    seen = set()
    for r in _profiles(scale):
        seen.add(r)
        yield f"r={r}", r
    if scale >= 6:
        for m in range(1, 4):
            for r in compositions(m, 4):
                if r not in seen:
                    yield f"r={r}", r


def _thm15_check(r: BlockProfile) -> SuiteCheckResult:
    direct = r_block_pp_genfun(r.total, r.n, r)
    if direct != thm15_rhs(r):
        return False, f"enumeration gives {direct}, product gives {thm15_rhs(r)}"
    if direct.t_to_q() != cor3_rhs(r):
        return False, f"enumeration at t=q gives {direct.t_to_q()}, product gives {cor3_rhs(r)}"
    return True, ""


def _thm2_instances(scale, seed):
    for m in range(1, scale + 1):
        for n in range(1, scale + 1):
            for l in range(0, min(n, 2) + 1):
                rp = BlockProfile.ones(l, n)
                for r in compositions(m + l, n):
                    yield f"m={m},n={n},l={l},r={r}", (r, rp, m, n, l)


def _thm2_check(params) -> SuiteCheckResult:
    signed = signed_block_sum(*params)
    product = thm2_rhs(*params)
    return signed == product, f"signed sum gives {signed}, product side gives {product}"


def _af_instances(scale, seed):
    for m in range(1, scale + 1):
        for height in range(0, scale - m + 1):
            for l in range(0, height + 1):
                for P in combinations(range(1, m + height + 1), m + l):
                    for Pp in combinations(range(1, height + 1), l):
                        yield f"T({height},{m};{P};{Pp})", TrapezoidRegion(height, m, P, Pp)


def _af_check(region: TrapezoidRegion) -> SuiteCheckResult:
    lam = lambda_of_dents(region.right_dents, len(region.right_dents))
    mu = mu_of_dents(region.left_dents, len(region.left_dents))
    expected = skew_schur(lam, mu, region.m) if contains(mu, lam) else ZERO
    found = weighted_region_sum(region, 'x', None)
    return found == expected, f"tilings give {found}, s_{lam}/{mu} gives {expected}"


def _macmahon_instances(scale, seed):
    for a in range(1, scale + 1):
        for b in range(1, scale + 1):
            for c in range(1, scale + 1):
                yield f"box={a}x{b}x{c}", ("box", a, b, c)
    for m in range(1, scale + 1):
        for n in range(1, scale + 1):
            yield f"sym={m}x{m}x{n}", ("sym", m, n)


def _macmahon_check(params) -> SuiteCheckResult:
    if params[0] == "box":
        _, a, b, c = params
        found = volume_genfun(a, b, c, None, None)
        expected = macmahon_q(a, b, c)
        if found.evaluate() != macmahon_count(a, b, c):
            return False, f"{found.evaluate()} plane partitions, expected {macmahon_count(a, b, c)}"
        return found == expected, f"volume sum {found}, product {expected}"
    _, m, n = params
    found = symmetric_half_genfun(m, n, None)
    if found != sym_pp_q(m, n):
        return False, f"half-volume sum {found}, product {sym_pp_q(m, n)}"
    trapezoids = all_dents_sum(m, n, 'x', None).evaluate()
    if trapezoids != sym_pp_count(m, n):
        return False, f"trapezoids over all dent sets give {trapezoids}, expected {sym_pp_count(m, n)}"
    return True, ""


def _lemma31_instances(scale, seed):
    for a in range(-scale, 1):
        for b in range(0, scale + 1):
            yield f"a={a:+d},b={b}", (a, b)


def _lemma31_check(params) -> SuiteCheckResult:
    a, b = params
    closed = path_weight_closed(a, b)
    if closed != path_weight_recursive(a, b):
        return False, f"closed form {closed}, recurrence {path_weight_recursive(a, b)}"
    lattice = path_weight_between(LatticePoint(a, b), LatticePoint(0, 0))
    return closed == lattice, f"closed form {closed}, lattice paths {lattice}"


def _lemma32_instances(scale, seed):
    top = max(scale - 2, 0)
    for n in range(1, max(scale // 2, 1) + 1):
        for L in combinations(range(top, -1, -1), n):
            for M in range(L[0] + 1, scale + 1):
                yield f"L={L},M={M}", (L, M, n)


def _lemma32_check(params) -> SuiteCheckResult:
    det, product = krattenthaler_sides(*params)
    return det == product, f"determinant {det}, product {product}"


def _split_instances(scale, seed):
    for N in range(1, scale + 1):
        for size in range(N + 1):
            for I in combinations(range(1, N + 1), size):
                yield f"N={N},I={I}", (set(I), set(range(1, N + 1)) - set(I), N)


def _split_check(params) -> SuiteCheckResult:
    lhs, rhs = split_product_sides(*params)
    return lhs == rhs, f"left {lhs}, right {rhs}"


def _pieri_instances(scale, seed):
    shapes = list(iter_partitions_up_to(scale))
    for lam in shapes:
        for mu in shapes:
            if not contains(mu, lam):
                continue
            for i in range(0, 4):
                for m in range(1, 4):
                    yield f"lambda={lam},mu={mu},i={i},m={m}", (lam, mu, i, m)


def _pieri_check(params) -> SuiteCheckResult:
    lam, mu, i, m = params
    target = skew_schur(lam, mu, m) * elementary_sym(i, m)
    expanded = ZERO
    for term in skew_dual_pieri_expand(lam, mu, i, m):
        expanded = expanded + term.sign * skew_schur(term.outer, term.inner, m)
    if expanded != target:
        return False, f"skew expansion {expanded}, product {target}"
    if not mu:
        plain = sum((skew_schur(p, mu, m) for p in dual_pieri_expand(lam, i, m)), ZERO)
        if plain != target:
            return False, f"expansion {plain}, product {target}"
    return True, ""


def _oracle_instances(scale, seed):
    for r in _profiles(scale):
        rng = Random(f"{seed}:{r}")
        yield f"r={r}", (r, rng.randint(-5, 5), rng.randint(-5, 5))


def _oracle_check(params) -> SuiteCheckResult:
    r, q0, t0 = params
    m, n = r.total, r.n
    hexagon = enumerate_symmetric_hexagon(r, m, n, None).count
    tiler = block_symmetric_sum(r, m, n).evaluate()
    if hexagon != tiler:
        return False, f"hexagon enumeration {hexagon}, trapezoid sum {tiler}"
    matrix = lgv_matrix(r, m, n)
    numeric = int_det([[v.evaluate(q=q0, t=t0) for v in row] for row in matrix.rows])
    expected = thm1_rhs(r).evaluate(q=q0, t=t0)
    return numeric == expected, f"det A at q={q0}, t={t0} is {numeric}, product is {expected}"


def _numbers(scale, seed):
    for n in range(1, scale + 1):
        yield f"n={n}", n


registry = SuiteRegistry()
for _suite in (
        Suite("thm1", "tiler, LGV determinant and product formula agree", _thm1_instances, _thm1_check, 6),
        Suite("offdiag", "(1^n) profiles give 2^(n(n+1)/2) tilings", _offdiag_instances, _offdiag_check, 6),
        Suite("asm", "(2^n) profiles give 4^n 3^(n(n-1)/2) ASM(n) tilings", _numbers, _asm_check, 4),
        Suite("thm15", "r-block plane partitions match their product", _thm15_instances, _thm15_check, 6),
        Suite("thm2", "signed (r, r')-block sum equals its product side", _thm2_instances, _thm2_check, 3),
        Suite("ayyer-fischer", "trapezoid tilings give skew Schur polynomials", _af_instances, _af_check, 7),
        Suite("macmahon", "boxed and symmetric plane partition products", _macmahon_instances,
              _macmahon_check, 3),
        Suite("lemma31", "closed path weight equals recurrence and lattice sum", _lemma31_instances,
              _lemma31_check, 6),
        Suite("lemma32", "q-binomial determinant evaluation", _lemma32_instances, _lemma32_check, 6),
        Suite("split", "split product identity over every I in [N]", _split_instances, _split_check, 6),
        Suite("pieri", "dual Pieri and skew dual Pieri expansions", _pieri_instances, _pieri_check, 4),
        Suite("oracles", "hexagon enumerator, trapezoid sums and a random specialisation of det A",
              _oracle_instances, _oracle_check, 6),
):
    registry.register(_suite.name, _suite)


__all__ = (
    'Suite',
    'InstanceResult',
    'SuiteReport',
    'SuiteRegistry',
    'registry',
    'run_suite',
    'run_suites',
    'limited_to_thread',
)
