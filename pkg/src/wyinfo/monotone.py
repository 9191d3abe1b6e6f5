"""Catalog of operator monotone functions and the metrics they generate.

Each catalog entry bundles a normalized symmetric operator monotone function
f, its kernel c(x, y) = 1 / (y f(x/y)), and the closed-form kernel derivative
dc/dx.  The metric at a state rho is <A, B> = Tr(A c(L_rho, R_rho)(B)).

Entries: "wy" (skew information), "sld" (Bures/symmetric logarithmic
derivative), "bkm" (Kubo-Mori), "rld" (right logarithmic derivative).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import InvariantViolation
from .linalg import (
    KrausChannel,
    apply_channel,
    apply_kernel_superop,
    commutator,
    hs_inner,
    matrix_function,
    rng_from,
)

# Relative |x - y| gap below which the Kubo-Mori kernel and its derivative
# switch to midpoint series.  The direct derivative quotient loses eps/gap^2
# to cancellation, so the window is wide; the series carry enough terms to
# stay at machine precision across the whole window.
_BKM_NEAR = 3e-2


@dataclass(frozen=True)
class MonotoneFunctionEntry:
    """A named operator monotone function with its kernel and kernel derivative.

    ``complex_evaluable`` asserts f and c accept complex scalars near the
    positive real axis (enables complex-step differentiation in tests).
    """

    id: str
    f: Callable
    c: Optional[Callable] = None
    dc_dx: Optional[Callable] = None
    complex_evaluable: bool = False


# -- wy: f(x) = (sqrt(x) + 1)^2 / 4 -----------------------------------------

def _f_wy(x):
    s = np.sqrt(x)
    return 0.25 * (s + 1.0) ** 2


def _c_wy(x, y):
    return 4.0 / (np.sqrt(x) + np.sqrt(y)) ** 2


def _dc_wy(x, y):
    sx = np.sqrt(x)
    return -4.0 / (sx * (sx + np.sqrt(y)) ** 3)


# -- sld: f(x) = (1 + x) / 2 -------------------------------------------------

def _f_sld(x):
    return 0.5 * (1.0 + x)


def _c_sld(x, y):
    return 2.0 / (x + y)


def _dc_sld(x, y):
    return -2.0 / (x + y) ** 2


# -- bkm: f(x) = (x - 1) / log(x) ---------------------------------------------

def _f_bkm(x):
    x = np.asarray(x)
    w = x - 1.0
    near = np.abs(w) < 1e-4
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.where(x == 0.0, 0.0, w / np.log(np.where(x == 0.0, 1.0, x)))
        # w / log1p(w) = 1 / (1 - w/2 + w^2/3 - w^3/4 + w^4/5 + O(w^5))
        wn = np.where(near, w, 0.0)
        series = 1.0 / (1.0 - wn / 2.0 + wn**2 / 3.0 - wn**3 / 4.0 + wn**4 / 5.0)
    return np.where(near, series, direct)


def _bkm_midpoint(x, y):
    m = 0.5 * (np.asarray(x) + np.asarray(y))
    w = 0.5 * (np.asarray(x) - np.asarray(y)) / m
    return m, w


def _c_bkm(x, y):
    x = np.asarray(x)
    y = np.asarray(y)
    near = np.abs(x - y) <= _BKM_NEAR * np.maximum(np.abs(x), np.abs(y))
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = (np.log(x) - np.log(y)) / (x - y)
        m, w = _bkm_midpoint(x, y)
        w2 = np.where(near, w, 0.0) ** 2
        # (log x - log y)/(x - y) = atanh(w)/(m w); truncation ~ w^8/9
        series = (1.0 + w2 * (1.0 / 3.0 + w2 * (1.0 / 5.0 + w2 / 7.0))) / m
    return np.where(near, series, direct)


def _dc_bkm(x, y):
    x = np.asarray(x)
    y = np.asarray(y)
    near = np.abs(x - y) <= _BKM_NEAR * np.maximum(np.abs(x), np.abs(y))
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = ((x - y) / x - (np.log(x) - np.log(y))) / (x - y) ** 2
        m, w = _bkm_midpoint(x, y)
        w = np.where(near, w, 0.0)
        # d/dx [atanh(w)/(m w)] with m = (x+y)/2, w = (x-y)/(2m);
        # truncation ~ (8/9) w^7
        series = -(1.0 - (2.0 / 3.0) * w + w**2 - 0.8 * w**3 + w**4
                   - (6.0 / 7.0) * w**5 + w**6) / (2.0 * m**2)
    return np.where(near, series, direct)


# -- rld: f(x) = 2x / (1 + x) --------------------------------------------------

def _f_rld(x):
    return 2.0 * np.asarray(x) / (1.0 + np.asarray(x))


def _c_rld(x, y):
    return (np.asarray(x) + np.asarray(y)) / (2.0 * np.asarray(x) * np.asarray(y))


def _dc_rld(x, y):
    return -1.0 / (2.0 * np.asarray(x) ** 2)


_CATALOG = (
    MonotoneFunctionEntry("wy", _f_wy, _c_wy, _dc_wy, complex_evaluable=True),
    MonotoneFunctionEntry("sld", _f_sld, _c_sld, _dc_sld, complex_evaluable=True),
    MonotoneFunctionEntry("bkm", _f_bkm, _c_bkm, _dc_bkm, complex_evaluable=True),
    MonotoneFunctionEntry("rld", _f_rld, _c_rld, _dc_rld, complex_evaluable=True),
)


def catalog() -> tuple:
    """The closed catalog (wy, sld, bkm, rld)."""
    return _CATALOG


def catalog_entry(function_id: str) -> MonotoneFunctionEntry:
    for entry in _CATALOG:
        if entry.id == function_id:
            return entry
    ids = ", ".join(e.id for e in _CATALOG)
    raise InvariantViolation("function-id", f"unknown '{function_id}'; catalog: {ids}")


# ---------------------------------------------------------------------------
# Metric evaluation
# ---------------------------------------------------------------------------

def metric_eval(entry: MonotoneFunctionEntry, rho, a, b) -> float:
    """Monotone metric <A, B> at rho: Tr(A c(L_rho, R_rho)(B))."""
    return hs_inner(a, apply_kernel_superop(rho, entry.c, b))


def skew_information(rho, a) -> float:
    """Information content of rho relative to the observable A: -Tr([sqrt(rho), A]^2)."""
    root = matrix_function(rho, np.sqrt)
    comm = commutator(root, np.asarray(a, dtype=complex))
    return float(np.real(-np.trace(comm @ comm)))


def skew_identity_residual(rho, a) -> float:
    """|<i[rho, A], i[rho, A]>_wy - 4 I(rho, A)|; zero in exact arithmetic."""
    t = 1j * commutator(rho, np.asarray(a, dtype=complex))
    lhs = metric_eval(catalog_entry("wy"), rho, t, t)
    rhs = 4.0 * skew_information(rho, a)
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# Sampled certification
# ---------------------------------------------------------------------------

@dataclass
class MonotonicityReport:
    function_id: str
    trials: int
    violations: int
    worst_margin: float
    skipped: int = 0

    def as_dict(self) -> dict:
        return {
            "function_id": self.function_id,
            "trials": self.trials,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "skipped": self.skipped,
        }


def sampled_operator_monotonicity(
    entry: MonotoneFunctionEntry, trials: int, n: int, seed: int, slack: float = 1e-9
) -> MonotonicityReport:
    """Check f(A) <= f(B) on random pairs 0 <= A <= B, B = A + P^dag P.

    A violation is the smallest eigenvalue of f(B) - f(A) dipping below
    -slack; violations are counted, never raised.
    """
    if trials < 1:
        raise InvariantViolation("trials", f"{trials} < 1")
    violations = 0
    worst = np.inf
    for t in range(trials):
        rng = rng_from(seed, t)
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        p = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        a = g.conj().T @ g
        b = a + p.conj().T @ p
        fa = matrix_function(0.5 * (a + a.conj().T), entry.f)
        fb = matrix_function(0.5 * (b + b.conj().T), entry.f)
        margin = float(np.linalg.eigvalsh(fb - fa)[0])
        worst = min(worst, margin)
        if margin < -slack:
            violations += 1
    return MonotonicityReport(entry.id, trials, violations, worst)


@dataclass
class ContractionResult:
    g_before: float
    g_after: float
    refloored: bool = False
    skipped: Optional[str] = None


def contraction_check(
    entry: MonotoneFunctionEntry,
    channel: KrausChannel,
    rho,
    a,
    refloor_eps: float = 1e-3,
    min_eigenvalue: float = 1e-10,
) -> ContractionResult:
    """Metric values before/after a stochastic map; monotone metrics contract.

    If the mapped state loses strict positivity it is re-floored by mixing
    with I/n (recorded); if even that fails the check is skipped with reason.
    """
    g_before = metric_eval(entry, rho, a, a)
    rho_out = apply_channel(channel, rho)
    rho_out = 0.5 * (rho_out + rho_out.conj().T)
    a_out = apply_channel(channel, a)
    a_out = 0.5 * (a_out + a_out.conj().T)
    refloored = False
    lo = float(np.linalg.eigvalsh(rho_out)[0])
    if lo < min_eigenvalue:
        m = channel.output_dim
        rho_out = (1.0 - refloor_eps) * rho_out + refloor_eps * np.eye(m) / m
        refloored = True
        lo = float(np.linalg.eigvalsh(rho_out)[0])
        if lo <= 0.0:
            return ContractionResult(g_before, np.nan, refloored, "output not full rank")
    g_after = metric_eval(entry, rho_out, a_out, a_out)
    return ContractionResult(g_before, g_after, refloored)
