"""The realization proper: membership in the inequality-cut lattice set,
breadth-first enumeration of the realized highest-weight crystal,
dual-string values, weight multiplicities, and tensor-product
(Littlewood-Richardson) multiplicities.

Enumeration and the inequality description define the same set; the
enumerator can assert that agreement point by point as it runs.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import Weight
from .crystal import HIGHEST_WEIGHT, ZERO, LatticeElem, LatticePoint, epsilon, f_tilde
from .iota import IotaSequence
from .linforms import HAT, BudgetExceededError, FormSet, LinForm, generate_closure, lambda_form


class NotAmpleError(ValueError):
    """The zero vector fails the supplied system; enumeration has no seed."""


class IncompleteEnumerationError(ValueError):
    """The enumeration depth cannot certify the requested count."""


class StrictPositivityViolatedError(ValueError):
    """The dual-string formula was invoked on a set violating its hypothesis."""


class CartanNotInvertibleError(ValueError):
    """Root offsets cannot be recovered from pairings (singular Cartan matrix)."""


@dataclass
class RealizationResult:
    elements: tuple[LatticePoint, ...]
    complete: bool
    by_weight: dict[tuple[int, ...], int]
    depth_used: int

    def __len__(self):
        return len(self.elements)


def member(x: LatticePoint, fs: FormSet) -> bool:
    """True iff every form of the system is nonnegative at x.

    When the system is truncated this is a necessary condition only; callers
    can read ``fs.truncated``.  A ``zero_beyond`` cutoff is enforced exactly.
    """
    if fs.zero_beyond is not None and any(k > fs.zero_beyond for k, _ in x.entries):
        return False
    values = x.values
    return all(phi.evaluate(values) >= 0 for phi in fs.forms)


def enumerate_blambda(
    s: IotaSequence,
    lam: Weight,
    fs: FormSet,
    depth_cap: int | None = None,
    validate: bool | None = None,
    threads: int = 1,
) -> RealizationResult:
    """Breadth-first closure of the zero vector under all lowering operators.

    Depth is the coordinate sum, which every lowering step increases by one,
    so levels fill completely in order.  With ``validate`` (default: on under
    __debug__) every reached point is also checked against the inequality
    system, cross-validating enumeration against the cut-out set.
    """
    if validate is None:
        validate = __debug__
    origin = LatticePoint.build(s, lam, {}, HIGHEST_WEIGHT)
    if not member(origin, fs):
        raise NotAmpleError("the zero vector violates the supplied system")

    colors = tuple(s.cartan.indices)

    def children(point: LatticePoint):
        out = []
        for i in colors:
            nxt = f_tilde(LatticeElem(point), i)
            if nxt is not ZERO:
                out.append(nxt.point)
        return out

    seen = {origin.entries: origin}
    frontier = [origin]
    depth = 0
    complete = True
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier:
            if depth_cap is not None and depth >= depth_cap:
                complete = False
                break
            if pool is None:
                batches = map(children, frontier)
            else:
                batches = pool.map(children, frontier)
            nxt = []
            for batch in batches:
                for point in batch:
                    if point.entries in seen:
                        continue
                    if validate and not member(point, fs):
                        raise AssertionError(
                            f"enumerated point {point.render()} violates the inequality system"
                        )
                    seen[point.entries] = point
                    nxt.append(point)
            frontier = nxt
            if frontier:
                depth += 1
    finally:
        if pool is not None:
            pool.shutdown()

    elements = tuple(sorted(seen.values(), key=lambda p: (p.total, p.entries)))
    by_weight: dict[tuple[int, ...], int] = {}
    for p in elements:
        key = p.color_sums()
        by_weight[key] = by_weight.get(key, 0) + 1
    depth_used = depth_cap if not complete else depth
    return RealizationResult(elements, complete, by_weight, depth_used)


def epsilon_star(x: LatticePoint, i: int, xi_set: FormSet) -> int:
    """max of -phi(x) over the color-i generated forms.

    Valid on the weight-free realization under strict positivity; the scan
    here covers the supplied set (its own seed excluded), and assembling the
    full cross-color union is the caller's job.
    """
    s = x.iota
    first_positions = [s.first(j) for j in s.cartan.indices]
    seeds = set(xi_set.generators)
    for phi in xi_set.forms:
        if phi in seeds:
            continue
        for k in first_positions:
            if phi.coeff(k) < 0:
                raise StrictPositivityViolatedError(
                    f"form {phi!r} has a negative coefficient at first occurrence {k}"
                )
    values = x.values
    return max(-phi.evaluate(values) for phi in xi_set.forms)


def weight_multiplicity(result: RealizationResult, m) -> int:
    """Count enumerated elements whose per-color coordinate sums equal m."""
    key = tuple(int(v) for v in (m.values() if hasattr(m, "values") else m))
    depth = sum(key)
    if not result.complete and depth >= result.depth_used:
        raise IncompleteEnumerationError(
            f"depth {depth} is not strictly below the enumerated cap {result.depth_used}"
        )
    return result.by_weight.get(key, 0)


def solve_root_offset(lam_coeffs, cartan) -> tuple[int, ...] | None:
    """Solve sum_i m_i alpha_i = target (given by fundamental coefficients).

    Returns None when no nonnegative integer solution exists; raises when the
    Cartan matrix is singular (offsets are not pairing-determined then).
    """
    n = cartan.rank
    rows = [
        [Fraction(cartan.matrix[r][c]) for c in range(n)] + [Fraction(lam_coeffs[r])]
        for r in range(n)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            raise CartanNotInvertibleError("Cartan matrix is singular; finite type required")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    sol = [rows[r][n] for r in range(n)]
    if any(v.denominator != 1 or v < 0 for v in sol):
        return None
    return tuple(int(v) for v in sol)


def lr_coefficient(
    s: IotaSequence,
    lam: Weight,
    mu: Weight,
    nu: Weight,
    support_bound: int | None = None,
    max_forms: int = 20000,
    mu_result: RealizationResult | None = None,
    validate: bool | None = None,
) -> int:
    """Multiplicity of the nu component in the lam (x) mu tensor product.

    Enumerates the realized mu-crystal once to the needed depth and counts
    the elements of weight nu - lam whose string functions stay within lam's
    pairings.  An optional precomputed enumeration is reused as-is.
    """
    for w in (lam, mu, nu):
        if not w.dominant:
            raise ValueError("tensor multiplicities are defined for dominant weights")
    target = [lam.pairing(i) + mu.pairing(i) - nu.pairing(i) for i in s.cartan.indices]
    offset = solve_root_offset(target, s.cartan)
    if offset is None:
        return 0
    depth = sum(offset)
    if mu_result is None:
        if support_bound is None:
            support_bound = s.period_len * (depth + 2)
        seeds = [LinForm.unit(k) for k in range(1, support_bound + 1)]
        seeds += [lambda_form(s, mu, i) for i in s.cartan.indices]
        try:
            fs = generate_closure(s, mu, seeds, HAT, support_bound, max_forms)
        except BudgetExceededError as exc:
            fs = exc.partial
        mu_result = enumerate_blambda(s, mu, fs, depth_cap=depth + 1, validate=validate)
    elif not mu_result.complete and depth >= mu_result.depth_used:
        raise IncompleteEnumerationError(
            f"need depth {depth} strictly below the enumerated cap {mu_result.depth_used}"
        )
    count = 0
    for p in mu_result.elements:
        if _cached_sums(p) != offset:
            continue
        if all(_cached_eps(p, i) <= lam.pairing(i) for i in s.cartan.indices):
            count += 1
    return count


@lru_cache(maxsize=None)
def _cached_eps(point: LatticePoint, i: int) -> int:
    return epsilon(LatticeElem(point), i)


@lru_cache(maxsize=None)
def _cached_sums(point: LatticePoint) -> tuple[int, ...]:
    return point.color_sums()
