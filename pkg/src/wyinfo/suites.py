"""Seeded verification suites behind `wyinfo verify`.

Each suite reruns one family of closed-form claims on freshly generated
random inputs and reports per-check expected/actual/tolerance rows.  Reports
are deterministic functions of (suite, config).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Sequence

import numpy as np

from . import classical
from .curvature import scalar_curvature, wy_scal1_constant
from .divergence import alpha_parameter, g_catalog, g_entry, hessian_check
from .errors import InvariantViolation
from .geometry import (
    CLAMP_WINDOW,
    dual_pair_check,
    path_length,
    power_function,
    pullback_metric,
    symmetry_margin,
    wy_distance_audit,
    wy_geodesic,
)
from .linalg import random_density, random_kraus_channel, random_tangent, rng_from
from .monotone import (
    catalog,
    catalog_entry,
    contraction_check,
    metric_eval,
    skew_identity_residual,
    skew_information,
)

VERSION = "0.1.0"


@dataclass
class SuiteConfig:
    suite: str
    n_values: Sequence[int] = (2, 3)
    trials: int = 20
    seed: int = 0
    tolerances: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.trials < 1:
            raise InvariantViolation("trials", f"{self.trials} < 1")
        for n in self.n_values:
            if not 2 <= n <= 16:
                raise InvariantViolation("dimension", f"n={n} outside [2, 16]")


@dataclass
class CheckResult:
    name: str
    expected: float
    actual: float
    tolerance: float
    passed: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual,
                "tolerance": self.tolerance, "pass": self.passed}


@dataclass
class SuiteReport:
    suite: str
    passed: bool
    checks: list
    wall_time: float
    config: SuiteConfig

    def as_dict(self, include_wall_time: bool = False) -> dict:
        # wall_time is excluded by default so identical (suite, config) runs
        # serialize byte-identically.
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
            "version": VERSION,
            "config": {
                "n_values": list(self.config.n_values),
                "trials": self.config.trials,
                "seed": self.config.seed,
                "tolerances": dict(sorted(self.config.tolerances.items())),
            },
        }
        if include_wall_time:
            out["wall_time"] = self.wall_time
        return out


class _Checks:
    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.rows: list = []

    def tol(self, name: str, default: float) -> float:
        return float(self.cfg.tolerances.get(name, default))

    def close(self, name: str, expected: float, actual: float, default_tol: float,
              relative: bool = False):
        tol = self.tol(name, default_tol)
        slack = tol * abs(expected) if (relative and expected != 0.0) else tol
        self.rows.append(CheckResult(name, float(expected), float(actual), tol,
                                     abs(actual - expected) <= slack))

    def below(self, name: str, actual: float, default_bound: float):
        bound = self.tol(name, default_bound)
        self.rows.append(CheckResult(name, float(bound), float(actual), bound,
                                     actual <= bound))

    def at_least(self, name: str, actual: float, default_bound: float):
        bound = self.tol(name, default_bound)
        self.rows.append(CheckResult(name, float(bound), float(actual), bound,
                                     actual >= bound))


def _finish(name: str, cfg: SuiteConfig, checks: _Checks, t0: float) -> SuiteReport:
    return SuiteReport(name, all(c.passed for c in checks.rows), checks.rows,
                       time.perf_counter() - t0, cfg)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def run_wy_curvature(cfg: SuiteConfig) -> SuiteReport:
    """Generic triple-sum engine reproduces the constant wy curvature."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    wy = catalog_entry("wy")
    for n in cfg.n_values:
        expected = wy_scal1_constant(n)
        worst = expected
        for t in range(cfg.trials):
            seed = int(rng_from(cfg.seed, n, t).integers(2**63))
            rep = scalar_curvature(wy, random_density(n, seed))
            if abs(rep.scal1 - expected) > abs(worst - expected):
                worst = rep.scal1
        checks.close(f"scal1-constant-n{n}", expected, worst, 1e-6, relative=True)
    return _finish("wy-curvature", cfg, checks, t0)


def run_pullback(cfg: SuiteConfig) -> SuiteReport:
    """Pushed-forward Hilbert-Schmidt product equals the wy metric."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    wy = catalog_entry("wy")
    worst = 0.0
    dims = [n for n in cfg.n_values if n <= 5] or [2]
    for t in range(cfg.trials):
        n = dims[t % len(dims)]
        rho = random_density(n, int(rng_from(cfg.seed, t, 0).integers(2**63)))
        a = random_tangent(n, int(rng_from(cfg.seed, t, 1).integers(2**63)))
        b = random_tangent(n, int(rng_from(cfg.seed, t, 2).integers(2**63)))
        gm = metric_eval(wy, rho, a, b)
        worst = max(worst, abs(pullback_metric(rho, a, b) - gm) / (1.0 + abs(gm)))
    checks.below("pullback-equals-wy", worst, 1e-10)
    return _finish("pullback", cfg, checks, t0)


def _random_commuting_pair(n: int, seed: int):
    rng = rng_from(seed)
    def floored(p):
        p = (1.0 - 1e-2) * p + 1e-2 / n
        return np.diag(p / p.sum()).astype(complex)
    return floored(rng.dirichlet(np.ones(n))), floored(rng.dirichlet(np.ones(n)))


def run_geodesic_length(cfg: SuiteConfig, steps: int = 10_000) -> SuiteReport:
    """Integrated wy length of the closed-form geodesic equals the distance."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    wy = catalog_entry("wy")
    worst = 0.0
    dims = list(cfg.n_values) or [2]
    for t in range(cfg.trials):
        n = dims[t % len(dims)]
        seed = int(rng_from(cfg.seed, t).integers(2**63))
        if t % 2 == 0:
            rho, sig = random_density(n, seed), random_density(n, seed + 1)
        else:
            rho, sig = _random_commuting_pair(n, seed)
        d = wy_distance_audit(rho, sig)[0]
        length = path_length(wy, wy_geodesic(rho, sig), steps=steps)
        worst = max(worst, abs(length - d) / d)
    checks.below("length-matches-distance", worst, 1e-4)
    # Order-2 convergence on a few pairs at coarse step counts.
    ratios = []
    for t in range(min(cfg.trials, 3)):
        n = dims[t % len(dims)]
        seed = int(rng_from(cfg.seed, 1000 + t).integers(2**63))
        rho, sig = random_density(n, seed), random_density(n, seed + 1)
        d = wy_distance_audit(rho, sig)[0]
        path = wy_geodesic(rho, sig)
        e_coarse = abs(path_length(wy, path, steps=100) - d)
        e_fine = abs(path_length(wy, path, steps=200) - d)
        if e_fine > 0:
            ratios.append(e_coarse / e_fine)
    checks.close("step-halving-ratio", 4.0, min(ratios) if ratios else 0.0, 1.6)
    return _finish("geodesic-length", cfg, checks, t0)


def run_hessian(cfg: SuiteConfig, step: float = 1e-3, floor: float = 5e-2) -> SuiteReport:
    """Finite-difference entropy Hessian matches the induced metric kernel."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    dims = [n for n in cfg.n_values if n <= 4] or [2]
    for gi, g in enumerate(g_catalog()):
        worst = 0.0
        for t in range(cfg.trials):
            n = dims[t % len(dims)]
            seed = int(rng_from(cfg.seed, gi, t).integers(2**63))
            rho = random_density(n, seed)
            rho = (1.0 - n * floor) * rho + floor * np.eye(n)
            a = random_tangent(n, seed + 1)
            b = random_tangent(n, seed + 2)
            a /= np.linalg.norm(a)
            b /= np.linalg.norm(b)
            worst = max(worst, hessian_check(g, rho, a, b, step=step).residual)
        checks.below(f"hessian-{g.id}", worst, 1e-4)
    return _finish("hessian", cfg, checks, t0)


def run_monotonicity(cfg: SuiteConfig) -> SuiteReport:
    """Every catalog metric contracts under random stochastic maps."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    dims = [n for n in cfg.n_values if n <= 3] or [2]
    for ei, entry in enumerate(catalog()):
        violations = 0
        skipped = 0
        worst = 0.0
        for t in range(cfg.trials):
            n = dims[t % len(dims)]
            seed = int(rng_from(cfg.seed, ei, t).integers(2**63))
            env = 1 + t % (n * n)
            channel = random_kraus_channel(n, n, env, seed)
            rho = random_density(n, seed + 1)
            a = random_tangent(n, seed + 2)
            res = contraction_check(entry, channel, rho, a)
            if res.skipped:
                skipped += 1
                continue
            excess = res.g_after - res.g_before - 1e-9 * (1.0 + res.g_before)
            worst = max(worst, excess)
            if excess > 0:
                violations += 1
        checks.below(f"contraction-violations-{entry.id}", float(violations), 0.0)
        checks.below(f"contraction-skipped-{entry.id}", float(skipped), float(cfg.trials))
    return _finish("monotonicity", cfg, checks, t0)


DUAL_PAIR_GRID = (-1.0, -0.5, 0.25, 0.5, 0.75, 1.5, 2.0)


def run_dual_pairs(cfg: SuiteConfig) -> SuiteReport:
    """Only the square-root power pair induces a valid symmetric metric kernel."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    n = min(cfg.n_values) if cfg.n_values else 3
    passing = []
    margins = {}
    for p in DUAL_PAIR_GRID:
        phi = power_function(p)
        report = dual_pair_check(phi, phi, trials=cfg.trials, n=n, seed=cfg.seed)
        if report.passes:
            passing.append(p)
        margins[p] = symmetry_margin(report.induced_f, 10.0)
    checks.close("passing-count", 1.0, float(len(passing)), 0.0)
    checks.close("passing-p", 0.5, passing[0] if passing else np.nan, 0.0)
    checks.at_least("symmetry-margin-p-1", margins[-1.0], 1e-2)
    checks.at_least("symmetry-margin-p2", margins[2.0], 1e-2)
    return _finish("dual-pairs", cfg, checks, t0)


def run_classical(cfg: SuiteConfig) -> SuiteReport:
    """Simplex geometry: diagonal embedding, sphere pull-back, transport duality."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    wy = catalog_entry("wy")
    worst_embed = 0.0
    worst_metric = 0.0
    worst_pull = 0.0
    worst_dual = 0.0
    dims = list(cfg.n_values) or [2]
    for t in range(cfg.trials):
        n = dims[t % len(dims)]
        rng = rng_from(cfg.seed, t)
        def draw_p():
            p = rng.dirichlet(np.ones(n))
            p = (1.0 - 1e-2) * p + 1e-2 / n
            return p / p.sum()
        p, q = draw_p(), draw_p()
        worst_embed = max(worst_embed, abs(
            wy_distance_audit(np.diag(p).astype(complex), np.diag(q).astype(complex))[0]
            - classical.bhattacharyya_distance(p, q)))
        def draw_u():
            u = rng.standard_normal(n)
            return u - u.mean()
        u, v = draw_u(), draw_u()
        fr = classical.fisher_rao_metric(p, u, v)
        worst_metric = max(worst_metric, abs(
            metric_eval(wy, np.diag(p).astype(complex), np.diag(u).astype(complex),
                        np.diag(v).astype(complex)) - fr))
        pulled = float(np.dot(classical.sphere_map_differential(p, u),
                              classical.sphere_map_differential(p, v)))
        worst_pull = max(worst_pull, abs(pulled - fr))
        s = classical.score_from_tangent(u, p)
        w = classical.score_from_tangent(v, p)
        lhs = classical.score_inner(classical.mixture_transport(s, q),
                                    classical.exponential_transport(w, q))
        worst_dual = max(worst_dual, abs(lhs - classical.score_inner(s, w)))
    checks.below("diagonal-embedding", worst_embed, 1e-11)
    checks.below("diagonal-metric", worst_metric, 1e-11)
    checks.below("sphere-pullback", worst_pull, 1e-12)
    checks.below("transport-duality", worst_dual, 1e-12)
    return _finish("classical", cfg, checks, t0)


def run_skew_identity(cfg: SuiteConfig) -> SuiteReport:
    """Metric norm of i[rho, A] equals four times the skew information."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    dims = [n for n in cfg.n_values if n <= 5] or [2]
    worst = 0.0
    for t in range(cfg.trials):
        n = dims[t % len(dims)]
        seed = int(rng_from(cfg.seed, t).integers(2**63))
        rho = random_density(n, seed)
        a = random_tangent(n, seed + 1)
        resid = skew_identity_residual(rho, a)
        worst = max(worst, resid / (1.0 + 4.0 * abs(skew_information(rho, a))))
    checks.below("skew-identity", worst, 1e-9)
    return _finish("skew-identity", cfg, checks, t0)


def run_alpha(cfg: SuiteConfig) -> SuiteReport:
    """Connection parameters of the catalog convex functions."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    checks.close("alpha-g_wy", 0.0, alpha_parameter(g_entry("g_wy")), 1e-12)
    checks.close("alpha-g_umegaki", -1.0, alpha_parameter(g_entry("g_umegaki")), 1e-12)
    return _finish("alpha", cfg, checks, t0)


def run_distance_bound(cfg: SuiteConfig) -> SuiteReport:
    """wy distance never exceeds 2 pi; arccos clamping stays in its window."""
    t0 = time.perf_counter()
    checks = _Checks(cfg)
    dims = list(cfg.n_values) or [2]
    worst_d = 0.0
    worst_clamp = 0.0
    clamp_events = 0
    for t in range(cfg.trials):
        n = dims[t % len(dims)]
        seed = int(rng_from(cfg.seed, t).integers(2**63))
        d, clamp = wy_distance_audit(random_density(n, seed), random_density(n, seed + 1))
        worst_d = max(worst_d, d)
        worst_clamp = max(worst_clamp, clamp)
        clamp_events += clamp > 0.0
    checks.below("distance-bound", worst_d, 2.0 * np.pi)
    checks.below("clamp-max", worst_clamp, CLAMP_WINDOW)
    checks.below("clamp-events", float(clamp_events), float(cfg.trials))
    return _finish("distance-bound", cfg, checks, t0)


SUITES: Dict[str, Callable[[SuiteConfig], SuiteReport]] = {
    "wy-curvature": run_wy_curvature,
    "pullback": run_pullback,
    "hessian": run_hessian,
    "monotonicity": run_monotonicity,
    "geodesic-length": run_geodesic_length,
    "dual-pairs": run_dual_pairs,
    "classical": run_classical,
    "skew-identity": run_skew_identity,
    "alpha": run_alpha,
    "distance-bound": run_distance_bound,
}

SUITE_DEFAULTS: Dict[str, dict] = {
    "wy-curvature": {"n_values": (2, 3, 4), "trials": 20},
    "pullback": {"n_values": (2, 3, 4, 5), "trials": 100},
    "hessian": {"n_values": (2, 3, 4), "trials": 50},
    "monotonicity": {"n_values": (2, 3), "trials": 500},
    "geodesic-length": {"n_values": (2, 3), "trials": 20},
    "dual-pairs": {"n_values": (3,), "trials": 200},
    "classical": {"n_values": (2, 3, 4), "trials": 50},
    "skew-identity": {"n_values": (2, 3, 4, 5), "trials": 100},
    "alpha": {"n_values": (2,), "trials": 1},
    "distance-bound": {"n_values": (2, 3, 4, 5), "trials": 10_000},
}


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    try:
        fn = SUITES[cfg.suite]
    except KeyError:
        known = ", ".join(sorted(SUITES))
        raise InvariantViolation("suite-name", f"unknown '{cfg.suite}'; suites: {known}")
    return fn(cfg)


def default_config(suite: str, seed: int = 0, n_values=None, trials=None,
                   tolerances=None) -> SuiteConfig:
    base = SUITE_DEFAULTS.get(suite, {})
    return SuiteConfig(
        suite=suite,
        n_values=tuple(n_values) if n_values else tuple(base.get("n_values", (2, 3))),
        trials=int(trials) if trials else int(base.get("trials", 20)),
        seed=seed,
        tolerances=dict(tolerances or {}),
    )
