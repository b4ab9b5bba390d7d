"""Independent numerical oracles used by the tests.

These deliberately avoid the package's own evaluation paths: the kernel
integral is done by adaptive quadrature of the raw integrand, and root
finding by a dense sign scan plus pure bisection.
"""

import numpy as np
from scipy.integrate import quad


def g_quad(p: float, y: float) -> float:
    """Adaptive quadrature of int_0^y exp(-r^2 + p r y) dr."""
    val, _ = quad(lambda r: np.exp(-r * r + p * r * y), 0.0, y,
                  epsabs=1e-13, epsrel=1e-13, limit=200)
    return val


def scan_bisect_roots(f, lo: float, hi: float, n_points: int = 10**6,
                      rel_tol: float = 1e-12):
    """All roots of f on a geometric grid of n_points via pure bisection."""
    grid = np.geomspace(lo, hi, n_points)
    with np.errstate(all="ignore"):
        vals = np.asarray(f(grid), dtype=float)
    ok = np.isfinite(vals)
    sign_change = ok[:-1] & ok[1:] & (vals[:-1] * vals[1:] < 0.0)
    roots = []
    for i in np.nonzero(sign_change)[0]:
        a, b = float(grid[i]), float(grid[i + 1])
        fa = float(vals[i])
        for _ in range(200):
            if b - a <= rel_tol * max(abs(a), abs(b)):
                break
            mid = 0.5 * (a + b)
            fm = float(f(mid))
            if fm == 0.0:
                a = b = mid
                break
            if (fa < 0.0) == (fm < 0.0):
                a, fa = mid, fm
            else:
                b = mid
        roots.append(0.5 * (a + b))
    zero_hits = np.nonzero(ok & (vals == 0.0))[0]
    roots.extend(float(grid[i]) for i in zero_hits)
    return sorted(roots)
