"""Scalar curvature of monotone metrics via the spectral triple sum.

For a catalog entry with kernel c and kernel derivative dc/dx, four auxiliary
terms are assembled per eigenvalue triple (x, y, z):

    t1 = (c(x,y) - z c(x,z) c(y,z)) / ((x-z)(y-z) c(x,z) c(y,z))
    t2 = (c(x,z) - c(y,z))^2 / ((x-y)^2 c(x,y) c(x,z) c(y,z))
    t3 = z ((log c)'(z,x) - (log c)'(z,y)) / (x - y)
    t4 = z (log c)'(z,x) (log c)'(z,y)
    combined = t1 - t2/2 + 2 t3 - t4

(' is the derivative in the first kernel slot.)  The curvature of the full
positive cone is the sum of `combined` over all eigenvalue triples, counted
with multiplicity, minus the fully coincident terms; the trace-one manifold
adds the dimensional constant (n^2-1)(n^2-2)/4.

All singularities at coinciding arguments are removable.  Near-coincident
triples are evaluated through central divided differences at pair midpoints
(symmetric +/-delta jitter with two-level Richardson extrapolation where a
derivative of a closed-form auxiliary is required).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import spectral_decompose
from .monotone import MonotoneFunctionEntry

# Relative gap thresholds for switching to the removable-singularity paths.
# t1's numerator vanishes to second order when z meets x and y, so its direct
# quotient loses eps/gap^2; the crossover against the O(gap^2) truncation of
# the stable path sits near eps^(1/4) = 1e-4.  t2/t3 cancel only to first
# order, which puts their crossover near eps^(1/3).
T1_GAP_RTOL = 1e-4
T23_GAP_RTOL = 1e-5
# Relative step for the symmetric-jitter derivative stencils.
JITTER_REL = 1e-5


class AuxTerms(NamedTuple):
    t1: float
    t2: float
    t3: float
    t4: float
    combined: float


def _near(a: float, b: float, rtol: float) -> bool:
    return abs(a - b) <= rtol * max(a, b)


def _richardson_derivative(fn, m: float, d: float) -> float:
    """f'(m) from symmetric +/-d and +/-d/2 samples, Richardson-extrapolated."""
    d1 = (fn(m + d) - fn(m - d)) / (2.0 * d)
    d2 = (fn(m + 0.5 * d) - fn(m - 0.5 * d)) / d
    return (4.0 * d2 - d1) / 3.0


def _log_c_prime(entry: MonotoneFunctionEntry, z: float, x: float) -> float:
    """(log c)'(z, x): first-slot derivative of log c at (z, x)."""
    return float(entry.dc_dx(z, x)) / float(entry.c(z, x))


def _t1_phi(entry: MonotoneFunctionEntry, x: float, y: float):
    """phi(t) = c(x,y)/(c(x,t) c(y,t)) - t and its closed-form derivative.

    t1 equals the second divided difference phi[x, y, z] because phi vanishes
    at t = x and t = y.  c is symmetric, so d/dt c(x,t) = dc_dx(t, x).
    """
    cxy = float(entry.c(x, y))

    def phi(t: float) -> float:
        return cxy / (float(entry.c(x, t)) * float(entry.c(y, t))) - t

    def dphi(t: float) -> float:
        cxt = float(entry.c(x, t))
        cyt = float(entry.c(y, t))
        dxt = float(entry.dc_dx(t, x))
        dyt = float(entry.dc_dx(t, y))
        return -cxy * (dxt * cyt + cxt * dyt) / (cxt * cyt) ** 2 - 1.0

    return phi, dphi


def _t1(entry: MonotoneFunctionEntry, x: float, y: float, z: float) -> float:
    near_xz = _near(x, z, T1_GAP_RTOL)
    near_yz = _near(y, z, T1_GAP_RTOL)
    if not near_xz and not near_yz:
        # x close to y is harmless here: only the z-pairs divide.
        cxz = float(entry.c(x, z))
        cyz = float(entry.c(y, z))
        return (float(entry.c(x, y)) - z * cxz * cyz) / ((x - z) * (y - z) * cxz * cyz)
    # Chain membership: both x and y sit in z's cluster when linked directly
    # or through the third argument.
    near_xy = _near(x, y, T1_GAP_RTOL)
    cluster_x = near_xz or (near_xy and near_yz)
    cluster_y = near_yz or (near_xy and near_xz)
    if cluster_x and cluster_y:
        # All three arguments cluster: phi[x,y,z] ~= phi''(centroid) / 2,
        # with phi'' from a Richardson stencil on the closed-form phi'.
        phi, dphi = _t1_phi(entry, x, y)
        m = (x + y + z) / 3.0
        return 0.5 * _richardson_derivative(dphi, m, JITTER_REL * m)
    if near_yz:
        x, y = y, x  # t1 is symmetric in (x, y); reduce to the z ~ x case
    phi, dphi = _t1_phi(entry, x, y)
    # Newton recursion on nodes [x, z, y]: (phi[x,z] - phi[z,y]) / (x - y),
    # where phi[x,z] over the small gap is phi' at the pair midpoint; the
    # cluster test guarantees |x - y| exceeds the gap threshold.
    dd_xz = dphi(0.5 * (x + z))
    dd_zy = (phi(z) - phi(y)) / (z - y)
    return (dd_xz - dd_zy) / (x - y)


def _t2(entry: MonotoneFunctionEntry, x: float, y: float, z: float) -> float:
    if _near(x, y, T23_GAP_RTOL):
        q = float(entry.dc_dx(0.5 * (x + y), z))
    else:
        q = (float(entry.c(x, z)) - float(entry.c(y, z))) / (x - y)
    return q * q / (float(entry.c(x, y)) * float(entry.c(x, z)) * float(entry.c(y, z)))


def _t3(entry: MonotoneFunctionEntry, x: float, y: float, z: float) -> float:
    if _near(x, y, T23_GAP_RTOL):
        m = 0.5 * (x + y)
        return z * _richardson_derivative(
            lambda t: _log_c_prime(entry, z, t), m, JITTER_REL * m)
    return z * (_log_c_prime(entry, z, x) - _log_c_prime(entry, z, y)) / (x - y)


def _t4(entry: MonotoneFunctionEntry, x: float, y: float, z: float) -> float:
    return z * _log_c_prime(entry, z, x) * _log_c_prime(entry, z, y)


def scal_aux_terms(entry: MonotoneFunctionEntry, x: float, y: float, z: float) -> AuxTerms:
    """The four auxiliary terms and their combination for one triple."""
    if min(x, y, z) <= 0.0:
        raise ValueError(f"triple arguments must be positive, got ({x}, {y}, {z})")
    t1 = _t1(entry, x, y, z)
    t2 = _t2(entry, x, y, z)
    t3 = _t3(entry, x, y, z)
    t4 = _t4(entry, x, y, z)
    return AuxTerms(t1, t2, t3, t4, t1 - 0.5 * t2 + 2.0 * t3 - t4)


def wy_aux_closed_forms(x: float, y: float, z: float):
    """Exact auxiliary terms for the skew-information kernel c = 4/(sqrt x + sqrt y)^2."""
    sx, sy, sz = np.sqrt(x), np.sqrt(y), np.sqrt(z)
    t1 = (sx * sy + 3.0 * sx * sz + 3.0 * sy * sz + z) / (
        4.0 * (sx + sy) ** 2 * (sx + sz) * (sy + sz))
    t2 = (sx + sy + 2.0 * sz) ** 2 / (4.0 * (sx + sz) ** 2 * (sy + sz) ** 2)
    t3 = sz / ((sx + sy) * (sx + sz) * (sy + sz))
    t4 = 1.0 / ((sx + sz) * (sy + sz))
    return t1, t2, t3, t4


def scal1_shift(n: int) -> float:
    """Curvature shift between the positive cone and its trace-one slice."""
    return 0.25 * (n**2 - 1) * (n**2 - 2)


def wy_scal1_constant(n: int) -> float:
    """Constant trace-one curvature of the skew-information metric."""
    return scal1_shift(n)


@dataclass
class CurvatureReport:
    function_id: str
    n: int
    scal: float   # curvature of the positive cone D_n
    scal1: float  # curvature of the trace-one manifold D^1_n
    spectrum: list

    def as_dict(self) -> dict:
        return {
            "function_id": self.function_id,
            "n": self.n,
            "scal": self.scal,
            "scal1": self.scal1,
            "spectrum": list(self.spectrum),
        }


def scalar_curvature(entry: MonotoneFunctionEntry, rho) -> CurvatureReport:
    """Scalar curvature at rho from the eigenvalue triple sum.

    The sum runs over the eigenvalue list with multiplicity (n^3 ordered
    triples), then subtracts the n fully coincident terms; continuity at
    spectral degeneracies pins this convention.
    """
    w, _ = spectral_decompose(rho)
    n = len(w)
    vals = np.empty(n**3)
    idx = 0
    for x in w:
        for y in w:
            for z in w:
                vals[idx] = scal_aux_terms(entry, float(x), float(y), float(z)).combined
                idx += 1
    diag = np.array([scal_aux_terms(entry, float(x), float(x), float(x)).combined for x in w])
    scal = float(np.sum(vals) - np.sum(diag))
    return CurvatureReport(entry.id, n, scal, scal + scal1_shift(n), [float(v) for v in w])
