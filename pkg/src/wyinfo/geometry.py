"""Square-root pull-back geometry of the skew-information metric.

The map rho -> 2 sqrt(rho) embeds the trace-one positive matrices into the
radius-2 sphere of Hermitian matrices; its pull-back of the Hilbert-Schmidt
metric is exactly the "wy" catalog metric.  That gives closed forms for the
geodesic distance and path, which the length integrator cross-checks.

The module also carries the pull-back characterization machinery: which
kernels arise as squared difference quotients of a scalar function, dual
pairs of functions, and the self-duality scan over the power family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import InvariantViolation
from .linalg import (
    apply_kernel_superop,
    hs_inner,
    matrix_function,
    spectral_decompose,
    tangent_split,
)
from .monotone import MonotoneFunctionEntry, sampled_operator_monotonicity

# Window for clamping arccos arguments; amounts beyond it indicate a bug.
CLAMP_WINDOW = 1e-12


def _sqrt_kernel(x, y):
    return 2.0 / (np.sqrt(x) + np.sqrt(y))


def sqrt_pullback(rho) -> np.ndarray:
    """Image of rho on the radius-2 sphere: 2 sqrt(rho)."""
    return 2.0 * matrix_function(rho, np.sqrt)


def pullback_differential(rho, a) -> np.ndarray:
    """Differential of rho -> 2 sqrt(rho): the kernel 2/(sqrt x + sqrt y)."""
    return apply_kernel_superop(rho, _sqrt_kernel, a)


def pullback_metric(rho, a, b) -> float:
    """Hilbert-Schmidt product of pushed-forward tangents; equals the wy metric."""
    return hs_inner(pullback_differential(rho, a), pullback_differential(rho, b))


def wy_distance_audit(rho, sigma):
    """(distance, clamp_amount): 2 arccos Tr(sqrt(rho) sqrt(sigma)) with clamping audit."""
    arg = float(np.real(np.trace(
        matrix_function(rho, np.sqrt) @ matrix_function(sigma, np.sqrt))))
    clamped = min(1.0, max(-1.0, arg))
    return 2.0 * float(np.arccos(clamped)), abs(arg - clamped)


def wy_distance(rho, sigma) -> float:
    """Geodesic distance of the skew-information metric; at most 2 pi."""
    return wy_distance_audit(rho, sigma)[0]


@dataclass
class GeodesicPath:
    endpoint_a: np.ndarray
    endpoint_b: np.ndarray
    sampler: Callable  # t in [0, 1] -> density matrix


def wy_geodesic(rho, sigma) -> GeodesicPath:
    """Geodesic t -> M(t)^2 / Tr M(t)^2 with M(t) = (1-t) sqrt(rho) + t sqrt(sigma).

    Normalized so every sample has unit trace; endpoints reproduce the inputs.
    """
    ra = np.asarray(rho, dtype=complex)
    rb = np.asarray(sigma, dtype=complex)
    sa = matrix_function(ra, np.sqrt)
    sb = matrix_function(rb, np.sqrt)

    def sample(t: float) -> np.ndarray:
        m = (1.0 - t) * sa + t * sb
        m2 = m @ m
        return m2 / np.trace(m2).real

    return GeodesicPath(ra, rb, sample)


def path_length(entry: MonotoneFunctionEntry, path, steps: int = 1000) -> float:
    """Riemannian length of a density path by the trapezoid rule.

    Velocities come from central differences on the sample grid (one-sided,
    second order, at the ends).  Doubling `steps` shrinks the error by ~4x.
    """
    if steps < 100:
        raise InvariantViolation("steps", f"{steps} < 100")
    sampler = path.sampler if isinstance(path, GeodesicPath) else path
    h = 1.0 / steps
    ts = np.linspace(0.0, 1.0, steps + 1)
    states = [np.asarray(sampler(float(t)), dtype=complex) for t in ts]
    speeds = np.empty(steps + 1)
    for k, t in enumerate(ts):
        g = states[k]
        tr = float(np.trace(g).real)
        if abs(tr - 1.0) > 1e-10:
            raise InvariantViolation("density-sample", f"trace {tr:.12f} at t={t}")
        if k == 0:
            v = (-3.0 * states[0] + 4.0 * states[1] - states[2]) / (2.0 * h)
        elif k == steps:
            v = (3.0 * states[-1] - 4.0 * states[-2] + states[-3]) / (2.0 * h)
        else:
            v = (states[k + 1] - states[k - 1]) / (2.0 * h)
        w, u = spectral_decompose(g)
        if w[0] <= -1e-12:
            raise InvariantViolation("density-sample", f"eigenvalue {w[0]:.3e} at t={t}")
        vt = u.conj().T @ v @ u
        kmat = np.asarray(entry.c(w[:, None], w[None, :]), dtype=float)
        speeds[k] = np.sqrt(max(float(np.real(np.sum(kmat * np.abs(vt) ** 2))), 0.0))
    return float(h * (np.sum(speeds) - 0.5 * (speeds[0] + speeds[-1])))


# ---------------------------------------------------------------------------
# General pull-backs and the dual-pair classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class C1Function:
    """A scalar function on (0, inf) paired with its closed-form derivative."""

    name: str
    fn: Callable
    deriv: Callable


def power_function(p: float) -> C1Function:
    """x^p / p with derivative x^(p-1); p = 0 is excluded (use log_function)."""
    if p == 0.0:
        raise InvariantViolation("power-exponent", "p = 0 has no x^p/p representative")
    return C1Function(
        f"power[{p:g}]",
        lambda x, p=p: np.asarray(x, dtype=float) ** p / p,
        lambda x, p=p: np.asarray(x, dtype=float) ** (p - 1.0),
    )


def log_function() -> C1Function:
    return C1Function("log", np.log, lambda x: 1.0 / np.asarray(x, dtype=float))


def identity_function() -> C1Function:
    return C1Function("identity", lambda x: np.asarray(x, dtype=float),
                      lambda x: np.ones_like(np.asarray(x, dtype=float)))


def double_sqrt_function() -> C1Function:
    return C1Function("2sqrt", lambda x: 2.0 * np.sqrt(x), lambda x: 1.0 / np.sqrt(x))


def general_pullback_differential(phi: C1Function, rho, a) -> np.ndarray:
    """D phi at rho: phi'(rho) A_c + i[phi(rho), U] via the tangent split."""
    split = tangent_split(rho, a)
    dphi_rho = matrix_function(rho, phi.deriv)
    phi_rho = matrix_function(rho, phi.fn)
    out = dphi_rho @ split.commuting + 1j * (phi_rho @ split.generator - split.generator @ phi_rho)
    return 0.5 * (out + out.conj().T)


def _difference_quotient(f: C1Function, a, b):
    """(f(a) - f(b)) / (a - b), switching to f' at the midpoint for tiny gaps."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    with np.errstate(all="ignore"):
        direct = (f.fn(a) - f.fn(b)) / (a - b)
        mid = f.deriv(0.5 * (a + b))
    near = np.abs(a - b) <= 1e-6 * np.maximum(np.abs(a), np.abs(b))
    return np.where(near, mid, direct)


def pullback_condition_check(phi: C1Function, entry: MonotoneFunctionEntry,
                             grid: Optional[np.ndarray] = None) -> float:
    """Max scaled residual of ((phi(x)-phi(y))/(x-y))^2 = c(x, y) over a log grid.

    Zero (to machine precision) exactly when the metric of `entry` is the
    pull-back of the ambient metric through phi.
    """
    if grid is None:
        grid = np.logspace(-2.0, 2.0, 100)
    x = grid[:, None]
    y = grid[None, :]
    q = _difference_quotient(phi, x, y)
    c = np.asarray(entry.c(x, y), dtype=float)
    resid = np.abs(q * q - c) / (1.0 + np.abs(c))
    return float(np.max(resid))


@dataclass
class DualPairReport:
    """Flags from checking whether two functions induce a monotone-metric kernel."""

    phi_id: str
    chi_id: str
    induced_c_valid: bool
    f_normalized: bool
    f_symmetric: bool
    monotonicity_violations: int
    symmetry_residual: float
    induced_f: Callable = field(repr=False, compare=False, default=None)

    @property
    def passes(self) -> bool:
        return (self.induced_c_valid and self.f_normalized and self.f_symmetric
                and self.monotonicity_violations == 0)

    def as_dict(self) -> dict:
        return {
            "phi_id": self.phi_id,
            "chi_id": self.chi_id,
            "induced_c_valid": self.induced_c_valid,
            "f_normalized": self.f_normalized,
            "f_symmetric": self.f_symmetric,
            "monotonicity_violations": self.monotonicity_violations,
            "symmetry_residual": self.symmetry_residual,
        }


def induced_kernel(phi: C1Function, chi: C1Function) -> Callable:
    """Product of the two difference quotients; a candidate metric kernel."""

    def c(x, y):
        return _difference_quotient(phi, x, y) * _difference_quotient(chi, x, y)

    return c


def symmetry_margin(f: Callable, x: float) -> float:
    """|f(x) - x f(1/x)|, the symmetry defect of a candidate f at one point."""
    return float(abs(np.asarray(f(x)) - x * np.asarray(f(1.0 / x))))


def dual_pair_check(phi: C1Function, chi: C1Function, grid: Optional[np.ndarray] = None,
                    trials: int = 200, n: int = 3, seed: int = 0) -> DualPairReport:
    """Test whether (phi, chi) induces a normalized symmetric monotone function.

    The induced kernel is the product of difference quotients; from it,
    f(t) = 1 / c(t, 1).  Reports normalization f(1) = 1, the symmetry
    f(x) = x f(1/x) on a log grid, and sampled operator monotonicity of f.
    """
    if grid is None:
        grid = np.logspace(-2.0, 2.0, 41)
    c = induced_kernel(phi, chi)

    def f(t):
        with np.errstate(all="ignore"):
            return 1.0 / c(t, np.ones_like(np.asarray(t, dtype=float)))

    with np.errstate(all="ignore"):
        c_grid = np.asarray(c(grid[:, None], grid[None, :]), dtype=float)
    c_valid = bool(np.all(np.isfinite(c_grid)) and np.all(c_grid > 0.0))

    f1 = float(np.asarray(f(1.0)))
    normalized = bool(abs(f1 - 1.0) <= 1e-9)

    fx = np.asarray(f(grid), dtype=float)
    finv = np.asarray(f(1.0 / grid), dtype=float)
    sym_resid = float(np.max(np.abs(fx - grid * finv) / (1.0 + np.abs(fx))))
    symmetric = bool(sym_resid <= 1e-9)

    entry = MonotoneFunctionEntry(f"induced[{phi.name},{chi.name}]", f)
    violations = sampled_operator_monotonicity(entry, trials, n, seed).violations

    return DualPairReport(phi.name, chi.name, c_valid, normalized, symmetric,
                          violations, sym_resid, induced_f=f)


def self_duality_scan(p_grid, trials: int = 200, n: int = 3, seed: int = 0) -> list:
    """dual_pair_check of the power pair (phi_p, phi_p) for each exponent.

    Rows are {"p", "report", "passes"}; only p = 1/2 can pass every flag.
    """
    rows = []
    for p in p_grid:
        p = float(p)
        if p in (0.0, 1.0):
            raise InvariantViolation("power-exponent", f"p={p} excluded from the scan")
        phi = power_function(p)
        report = dual_pair_check(phi, phi, trials=trials, n=n, seed=seed)
        rows.append({"p": p, "report": report, "passes": report.passes})
    return rows
