"""Root enumeration for the front equations and regime classification.

The front coefficient solves LHS(y) = y + N y^3. The LHS can have poles and
steep boundary layers near y = 0 (temperature problem), so the pipeline is
bracket-safe throughout: geometric-grid sign scan, bisection, then a guarded
secant polish inside the surviving bracket. All roots found in the scan
window are returned, smallest first (the principal root).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    DomainError,
    MonotonicityViolation,
    NoRootFound,
    ToleranceNotReached,
    UniquenessViolation,
)
from .model import DimensionlessParams, PhysicalParams, reduce_params
from .special import lhs_convective, lhs_limit_at_zero, lhs_temperature, rhs_eval

__all__ = [
    "SolveOptions", "RootSet", "RegimeReport",
    "critical_h0", "classify", "solve_xi", "solve_omega",
    "monotonicity_sweep", "smallest_lhs_zero",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class SolveOptions:
    scan_max: float | None = None   # default derived from the data, see _default_scan_max
    scan_points: int = 2048
    tolerance: float = 1e-12        # on |LHS - RHS| at the returned root
    scan_min: float | None = None   # default scan_max * 1e-12

    def __post_init__(self):
        if self.scan_points < 8:
            raise DomainError("scan_points must be >= 8")
        if self.tolerance <= 0.0:
            raise DomainError("tolerance must be > 0")


@dataclass
class RootSet:
    """All roots found in the scan window, strictly increasing."""

    roots: list[float]
    brackets: list[tuple[float, float]]
    residuals: list[float]
    scan_max: float
    scan_points: int

    @property
    def principal(self) -> float:
        if not self.roots:
            raise NoRootFound("root set is empty")
        return self.roots[0]

    def in_range(self, hi: float) -> list[float]:
        return [r for r in self.roots if r < hi]


@dataclass
class RegimeReport:
    """Which existence/uniqueness clause fires for the given signs of M, N.

    ``citation`` is a short clause label: pp/pm/mp/mm encode the signs of
    (M, N); the suffix names the guarantee. ``extra_conditions`` records
    every hypothesis boolean that was evaluated (None = could not be
    verified numerically, e.g. no LHS zero inside the scan window).
    """

    m_sign: str
    n_sign: str
    p_class: str
    h0_condition: str | None        # 'above' | 'equal' | 'below' vs critical
    extra_conditions: dict = field(default_factory=dict)
    guarantee: str = "Unclassified"
    citation: str = ""
    root_range: tuple[float, float] | None = None
    notes: list[str] = field(default_factory=list)


def critical_h0(phys: PhysicalParams) -> float:
    """Heat-transfer threshold (A/B) k_F / sqrt(pi d_F)."""
    return phys.critical_h0()


def _default_scan_max(dl: DimensionlessParams, b_like: float) -> float:
    cands = [1.0]
    if dl.m_par != 0.0:
        cands.append(math.sqrt(b_like / (dl.a_init * abs(dl.m_par))))
    if dl.n_par != 0.0:
        cands.append(math.sqrt(1.0 / abs(dl.n_par)))
    return 4.0 * max(cands)


def _scan_grid(scan_min: float, scan_max: float, n: int) -> np.ndarray:
    return np.geomspace(scan_min, scan_max, n)


def _bisect_secant(f, lo: float, hi: float, flo: float, fhi: float):
    """Polish a sign-change bracket: bisection to a tight interval, then a
    guarded secant refinement. Returns (root, residual)."""
    a, b, fa, fb = lo, hi, flo, fhi
    for _ in range(200):
        if b - a <= 4.0 * _EPS * max(abs(a), abs(b)):
            break
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = f(mid)
        if fm == 0.0 or not math.isfinite(fm):
            a = b = mid
            fa = fb = fm
            break
        if (fa < 0.0) == (fm < 0.0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    # secant inside the final bracket
    x0, x1, f0, f1 = a, b, fa, fb
    best_x, best_f = (x0, f0) if abs(f0) <= abs(f1) else (x1, f1)
    for _ in range(8):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        if not (lo <= x2 <= hi) or not math.isfinite(x2):
            break
        f2 = f(x2)
        if math.isfinite(f2) and abs(f2) < abs(best_f):
            best_x, best_f = x2, f2
        if f2 == 0.0:
            break
        x0, f0, x1, f1 = x1, f1, x2, f2
    return best_x, abs(best_f)


def _enumerate_roots(f_vec, f_scalar, scan_min, scan_max, n_points, tol) -> RootSet:
    grid = _scan_grid(scan_min, scan_max, n_points)
    with np.errstate(all="ignore"):
        vals = f_vec(grid)
    vals = np.asarray(vals, dtype=float)
    ok = np.isfinite(vals)

    roots, brackets, residuals = [], [], []
    for i in range(len(grid) - 1):
        if not (ok[i] and ok[i + 1]):
            continue
        a, b = grid[i], grid[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0:
            roots.append(float(a)), brackets.append((float(a), float(a)))
            residuals.append(0.0)
            continue
        if fa * fb < 0.0:
            root, res = _bisect_secant(f_scalar, float(a), float(b), float(fa), float(fb))
            if res > tol:
                raise ToleranceNotReached(
                    f"residual {res:.3e} > tolerance {tol:.3e} at root ~{root:.6g}"
                )
            roots.append(root)
            brackets.append((float(a), float(b)))
            residuals.append(res)
    # infinite starting values (temperature problem near 0) followed by a
    # finite tail: a +inf -> negative transition still brackets a root
    order = np.argsort(roots)
    return RootSet(
        roots=[roots[i] for i in order],
        brackets=[brackets[i] for i in order],
        residuals=[residuals[i] for i in order],
        scan_max=float(scan_max),
        scan_points=int(n_points),
    )


def smallest_lhs_zero(dl: DimensionlessParams, opts: SolveOptions | None = None) -> float | None:
    """Smallest positive zero q1 of the convective LHS, or None if no sign
    change lies inside the scan window."""
    opts = opts or SolveOptions()
    scan_max = opts.scan_max or _default_scan_max(dl, dl.b_ext)
    scan_min = opts.scan_min or scan_max * 1e-12
    grid = _scan_grid(scan_min, scan_max, opts.scan_points)
    with np.errstate(all="ignore"):
        vals = np.asarray(lhs_convective(grid, dl), dtype=float)
    ok = np.isfinite(vals)
    for i in range(len(grid) - 1):
        if ok[i] and ok[i + 1] and vals[i] * vals[i + 1] < 0.0:
            root, _ = _bisect_secant(
                lambda y: lhs_convective(y, dl),
                float(grid[i]), float(grid[i + 1]), float(vals[i]), float(vals[i + 1]),
            )
            return root
    return None


def _p_class(p: float) -> str:
    if p <= 1.0:
        return "p<=1"
    if p <= 2.0:
        return "1<p<=2"
    return "p>2"


def _sign_label(x: float) -> str:
    return "+" if x > 0.0 else ("-" if x < 0.0 else "0")


def classify(dl: DimensionlessParams, h0_present: bool = True,
             opts: SolveOptions | None = None) -> RegimeReport:
    """Total classification of the convective front equation by the signs of
    M and N; records every hypothesis it evaluates."""
    m, n, p = dl.m_par, dl.n_par, dl.p_par
    rep = RegimeReport(
        m_sign=_sign_label(m), n_sign=_sign_label(n), p_class=_p_class(p),
        h0_condition=None,
    )
    if not h0_present or dl.k0 is None:
        rep.notes.append("no h0 given; classification needs the convective problem")
        return rep

    gap = lhs_limit_at_zero(dl)  # delta1/K0 - delta2, same sign as h0 - critical
    rep.h0_condition = "above" if gap > 0.0 else ("equal" if gap == 0.0 else "below")
    above = gap > 0.0
    rep.extra_conditions["h0_above_critical"] = above

    if m == 0.0 or n == 0.0:
        rep.notes.append("M = 0 or N = 0: outside the four-quadrant classification")
        return rep

    b_over_am = dl.b_ext / (dl.a_init * m) if m > 0.0 else None

    if m > 0.0 and n > 0.0:
        if above:
            rep.root_range = (0.0, math.sqrt(b_over_am))
            if p <= 1.0:
                rep.guarantee, rep.citation = "UniqueInRange", "pp-unique"
            else:
                rep.guarantee, rep.citation = "AtLeastOne", "pp-at-least-one"
        else:
            if p <= 1.0:
                rep.guarantee, rep.citation = "NoneInRange", "pp-none"
                rep.root_range = (0.0, math.sqrt(b_over_am))
            # p > 1 below threshold: no clause applies
        return rep

    if m > 0.0 and n < 0.0:
        cond = dl.b_ext < dl.a_init * m / abs(n)
        rep.extra_conditions["b_lt_am_over_abs_n"] = cond
        if above and cond:
            rep.guarantee, rep.citation = "AtLeastOne", "pm-at-least-one"
            rep.root_range = (0.0, math.sqrt(b_over_am))
        return rep

    if m < 0.0 and n > 0.0:
        if above:
            q1 = smallest_lhs_zero(dl, opts)
            rep.extra_conditions["lhs_has_positive_zeros"] = (
                True if q1 is not None else None
            )
            if q1 is not None:
                rep.guarantee, rep.citation = "AtLeastOne", "mp-at-least-one"
                rep.root_range = (0.0, q1)
            else:
                rep.notes.append("no LHS zero inside scan window: hypothesis unverified")
        else:
            cond = n < dl.delta2 * math.sqrt(math.pi) * abs(m) * dl.gamma0
            rep.extra_conditions["n_lt_delta2_sqrt_pi_abs_m_gamma0"] = cond
            if cond:
                rep.guarantee, rep.citation = "AtLeastOne", "mp-at-least-one-below"
        return rep

    # m < 0, n < 0
    if above:
        q1 = smallest_lhs_zero(dl, opts)
        rep.extra_conditions["lhs_has_positive_zeros"] = (
            True if q1 is not None else None
        )
        if q1 is not None:
            bound = math.sqrt(1.0 / abs(n))
            rep.extra_conditions["q1_lt_inv_sqrt_abs_n"] = q1 < bound
            if abs(q1 - bound) <= 1e-9 * bound:
                rep.guarantee, rep.citation = "ExistsAtQ1", "mm-at-q1"
                rep.root_range = (0.0, bound)
            elif q1 < bound:
                rep.guarantee, rep.citation = "AtLeastTwo", "mm-two"
                rep.root_range = (0.0, bound)
        else:
            rep.notes.append("no LHS zero inside scan window: hypothesis unverified")
    elif gap < 0.0:
        rep.guarantee, rep.citation = "AtLeastOne", "mm-at-least-one"
    return rep


def solve_xi(dl: DimensionlessParams, opts: SolveOptions | None = None):
    """Enumerate roots of the convective front equation.

    Returns (RootSet, RegimeReport). Raises NoRootFound (with the report
    attached) when no sign change lies inside the scan window.
    """
    if dl.k0 is None:
        raise DomainError("convective solve needs h0-bearing parameters")
    opts = opts or SolveOptions()
    report = classify(dl, h0_present=True, opts=opts)
    scan_max = opts.scan_max or _default_scan_max(dl, dl.b_ext)
    scan_min = opts.scan_min or scan_max * 1e-12

    def f_scalar(y):
        return lhs_convective(y, dl) - rhs_eval(dl.n_par, y)

    def f_vec(ys):
        return lhs_convective(ys, dl) - rhs_eval(dl.n_par, ys)

    roots = _enumerate_roots(f_vec, f_scalar, scan_min, scan_max,
                             opts.scan_points, opts.tolerance)
    if not roots.roots:
        err = NoRootFound(
            "no root in scan window"
            + (": no phase change, h0 <= critical" if report.guarantee == "NoneInRange" else "")
        )
        err.report = report
        err.root_set = roots
        raise err
    if report.guarantee == "UniqueInRange" and report.root_range is not None:
        inside = roots.in_range(report.root_range[1])
        if len(inside) != 1:
            report.notes.append(
                f"uniqueness violation: {len(inside)} roots inside "
                f"(0, {report.root_range[1]:.6g})"
            )
    return roots, report


def solve_omega(dl: DimensionlessParams, opts: SolveOptions | None = None) -> RootSet:
    """Enumerate roots of the fixed-temperature front equation."""
    if dl.delta1_tilde is None or dl.b0_wall is None:
        raise DomainError("temperature solve needs B0-bearing parameters")
    opts = opts or SolveOptions()
    scan_max = opts.scan_max or _default_scan_max(dl, dl.b0_wall)
    scan_min = opts.scan_min or scan_max * 1e-12

    def f_scalar(y):
        return lhs_temperature(y, dl) - rhs_eval(dl.n_par, y)

    def f_vec(ys):
        return lhs_temperature(ys, dl) - rhs_eval(dl.n_par, ys)

    roots = _enumerate_roots(f_vec, f_scalar, scan_min, scan_max,
                             opts.scan_points, opts.tolerance)
    if not roots.roots:
        raise NoRootFound("no root of the temperature front equation in scan window")
    m, n, p = dl.m_par, dl.n_par, dl.p_par
    if m > 0.0 and n > 0.0 and p <= 2.0:
        bound = math.sqrt(dl.b0_wall / (dl.a_init * m))
        inside = roots.in_range(bound)
        if len(inside) > 1:
            raise UniquenessViolation(
                f"{len(inside)} roots inside (0, {bound:.6g}) where the "
                "temperature problem has a unique solution"
            )
        if not inside:
            raise UniquenessViolation(
                f"root outside the guaranteed interval (0, {bound:.6g})"
            )
    return roots


def _with_h0(phys: PhysicalParams, h0: float) -> PhysicalParams:
    return replace(phys, h0=h0)


def monotonicity_sweep(phys: PhysicalParams, h0_values, opts: SolveOptions | None = None,
                       max_workers: int = 1, classical: bool = False):
    """Principal root xi as a function of h0; must be strictly increasing.

    All h0 values must exceed the critical threshold. Grid points may solve
    in parallel; the returned list is ordered by h0.
    """
    h0_values = sorted(float(h) for h in h0_values)
    crit = critical_h0(phys)
    for h in h0_values:
        if h <= crit:
            raise DomainError(f"h0 = {h:.6g} is not above the critical value {crit:.6g}")

    def solve_one(h):
        roots, _ = solve_xi(reduce_params(_with_h0(phys, h), classical=classical), opts)
        return roots.principal

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            xis = list(pool.map(solve_one, h0_values))
    else:
        xis = [solve_one(h) for h in h0_values]

    pairs = list(zip(h0_values, xis))
    tol = (opts or SolveOptions()).tolerance
    for (h_a, x_a), (h_b, x_b) in zip(pairs, pairs[1:]):
        if x_b < x_a - tol:
            raise MonotonicityViolation(
                f"xi({h_b:.6g}) = {x_b:.12g} < xi({h_a:.6g}) = {x_a:.12g}"
            )
    return pairs
