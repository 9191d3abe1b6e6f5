"""Hermitian linear-algebra substrate.

Spectral decomposition, scalar functional calculus, kernel superoperators,
the commuting/commutator tangent decomposition, Kraus channels, and seeded
random generators for states, tangents and channels.

Matrices are plain complex ndarrays; the validators below enforce the
structural invariants at construction/IO boundaries.  All functions are pure
and deterministic: randomness enters only through explicit seeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError, InvariantViolation

HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-10
# Eigenvalues closer than this (relative to max(1, lambda_max)) are treated
# as one degenerate block when splitting tangents.
DEGENERACY_GAP_RTOL = 1e-8
# random_density mixes with I/n at this weight so spectra stay away from the
# boundary of the positive cone.
DENSITY_FLOOR_EPS = 1e-3


def rng_from(seed: int, *stream: int) -> np.random.Generator:
    """Generator derived from (seed, stream indices); same inputs, same stream."""
    words = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(s) & 0xFFFFFFFFFFFFFFFF for s in stream]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(words)))


# ---------------------------------------------------------------------------
# Validators
# ---------------------------------------------------------------------------

def assert_hermitian(a, atol: float = HERMITICITY_ATOL, name: str = "matrix") -> np.ndarray:
    """Validate and return ``a`` as a square complex Hermitian ndarray."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvariantViolation("square", f"{name} has shape {a.shape}")
    if a.size:
        asym = float(np.max(np.abs(a - a.conj().T)))
        if asym > atol:
            raise InvariantViolation("hermitian", f"{name} asymmetry {asym:.3e} > {atol:.1e}")
    return a


def assert_density(rho, name: str = "density") -> np.ndarray:
    """Validate a strictly positive, unit-trace Hermitian matrix."""
    rho = assert_hermitian(rho, name=name)
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_ATOL:
        raise InvariantViolation("unit-trace", f"{name} trace {tr.real:.12f}")
    lo = float(np.linalg.eigvalsh(rho)[0])
    if lo <= 0.0:
        raise InvariantViolation("strict-positivity", f"{name} smallest eigenvalue {lo:.3e}")
    return rho


def assert_tangent(a, name: str = "tangent") -> np.ndarray:
    """Validate a traceless Hermitian matrix."""
    a = assert_hermitian(a, name=name)
    tr = abs(complex(np.trace(a)))
    if tr > TRACE_ATOL:
        raise InvariantViolation("traceless", f"{name} |trace| {tr:.3e}")
    return a


# ---------------------------------------------------------------------------
# Spectral calculus
# ---------------------------------------------------------------------------

class SpectralDecomposition(NamedTuple):
    eigenvalues: np.ndarray  # ascending
    unitary: np.ndarray      # columns are the eigenvectors


def spectral_decompose(h) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    h = np.asarray(h, dtype=complex)
    try:
        w, u = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise DomainError(f"eigendecomposition failed: {exc}") from exc
    return SpectralDecomposition(w, u)


def _eval_scalar(phi: Callable, w: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(phi(w))
        if out.shape != w.shape:
            raise TypeError
    except (TypeError, ValueError):
        out = np.asarray([phi(x) for x in w])
    return out


def matrix_function(h, phi: Callable) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix: U diag(phi(w)) U^dag."""
    w, u = spectral_decompose(h)
    with np.errstate(all="ignore"):
        fw = _eval_scalar(phi, w)
    if not np.all(np.isfinite(fw)):
        bad = w[~np.isfinite(np.asarray(fw, dtype=complex).real)]
        raise DomainError(f"scalar function undefined on eigenvalues {bad}")
    return (u * fw) @ u.conj().T


def apply_kernel_superop(rho, kernel: Callable, x) -> np.ndarray:
    """Apply k(L_rho, R_rho) to X: entrywise k(w_i, w_j) in the eigenbasis of rho."""
    w, u = spectral_decompose(rho)
    xt = u.conj().T @ np.asarray(x, dtype=complex) @ u
    with np.errstate(all="ignore"):
        try:
            k = np.asarray(kernel(w[:, None], w[None, :]), dtype=float)
        except (TypeError, ValueError):
            k = np.asarray([[kernel(a, b) for b in w] for a in w], dtype=float)
    if not np.all(np.isfinite(k)):
        raise DomainError("kernel not finite on the spectrum grid")
    return u @ (k * xt) @ u.conj().T


def hs_inner(a, b) -> float:
    """Hilbert-Schmidt inner product Tr(A^dag B); real for Hermitian arguments."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise InvariantViolation("shape-match", f"{a.shape} vs {b.shape}")
    return float(np.real(np.sum(a.conj() * b)))


def hs_norm(a) -> float:
    return float(np.sqrt(max(hs_inner(a, a), 0.0)))


def commutator(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# Tangent decomposition
# ---------------------------------------------------------------------------

class TangentSplit(NamedTuple):
    commuting: np.ndarray  # part commuting with rho
    generator: np.ndarray  # Hermitian U with orthogonal part i[rho, U]


def tangent_split(rho, a) -> TangentSplit:
    """Split a tangent A = A_c + i[rho, U] with [A_c, rho] = 0.

    In the eigenbasis of rho, A_c keeps the entries inside degenerate
    eigenvalue blocks and U_ij = A_ij / (i (w_i - w_j)) outside them, which is
    the unique choice making i[rho, U] reproduce the off-block part.
    """
    w, u = spectral_decompose(rho)
    at = u.conj().T @ np.asarray(a, dtype=complex) @ u
    gap = DEGENERACY_GAP_RTOL * max(1.0, float(w[-1]))
    # Chain consecutive near-equal eigenvalues into blocks (w is ascending).
    block = np.zeros(len(w), dtype=int)
    for i in range(1, len(w)):
        block[i] = block[i - 1] + (0 if w[i] - w[i - 1] <= gap else 1)
    same = block[:, None] == block[None, :]
    commuting_t = np.where(same, at, 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        gen_t = at / (1j * (w[:, None] - w[None, :]))
    gen_t = np.where(same, 0.0, gen_t)
    return TangentSplit(u @ commuting_t @ u.conj().T, u @ gen_t @ u.conj().T)


# ---------------------------------------------------------------------------
# Kraus channels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KrausChannel:
    """A trace-preserving completely positive map given by Kraus matrices."""

    kraus: tuple
    input_dim: int
    output_dim: int

    def __post_init__(self):
        ks = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        object.__setattr__(self, "kraus", ks)
        if not ks:
            raise InvariantViolation("kraus-nonempty", "no Kraus operators")
        for k in ks:
            if k.shape != (self.output_dim, self.input_dim):
                raise InvariantViolation(
                    "kraus-shape", f"{k.shape} != ({self.output_dim}, {self.input_dim})")
        s = sum(k.conj().T @ k for k in ks)
        resid = float(np.max(np.abs(s - np.eye(self.input_dim))))
        if resid > 1e-10:
            raise InvariantViolation("trace-preserving", f"sum K^dag K residual {resid:.3e}")


def apply_channel(channel: KrausChannel, x) -> np.ndarray:
    """Apply the channel: sum_i K_i X K_i^dag."""
    x = np.asarray(x, dtype=complex)
    if x.shape != (channel.input_dim, channel.input_dim):
        raise InvariantViolation("shape-match", f"{x.shape} vs input dim {channel.input_dim}")
    out = np.zeros((channel.output_dim, channel.output_dim), dtype=complex)
    for k in channel.kraus:
        out += k @ x @ k.conj().T
    return out


# ---------------------------------------------------------------------------
# Seeded random generators
# ---------------------------------------------------------------------------

def _complex_gaussian(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via phase-corrected QR of a Ginibre matrix."""
    q, r = np.linalg.qr(_complex_gaussian(rng, n, n))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _haar_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    if rows < cols:
        raise InvariantViolation("isometry-dims", f"{rows} rows < {cols} cols")
    q, r = np.linalg.qr(_complex_gaussian(rng, rows, cols))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_density(n: int, seed: int, floor_eps: float = DENSITY_FLOOR_EPS) -> np.ndarray:
    """Wishart-style random density, mixed with I/n so eigenvalues >= floor_eps/n."""
    if n < 2:
        raise InvariantViolation("dimension", f"n={n} < 2")
    g = _complex_gaussian(rng_from(seed), n, n)
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    rho = (1.0 - floor_eps) * rho + floor_eps * np.eye(n) / n
    return 0.5 * (rho + rho.conj().T)


def random_unitary(n: int, seed: int) -> np.ndarray:
    return haar_unitary(n, rng_from(seed))


def random_tangent(n: int, seed: int) -> np.ndarray:
    """Gaussian Hermitian matrix projected onto trace zero."""
    if n < 2:
        raise InvariantViolation("dimension", f"n={n} < 2")
    m = _complex_gaussian(rng_from(seed), n, n)
    h = 0.5 * (m + m.conj().T)
    h -= (np.trace(h).real / n) * np.eye(n)
    return h


def random_kraus_channel(n_in: int, n_out: int, env_dim: int, seed: int) -> KrausChannel:
    """Channel from a Haar-random isometry C^n_in -> C^n_out (x) C^env, env traced out."""
    if env_dim < 1:
        raise InvariantViolation("dimension", f"env_dim={env_dim} < 1")
    v = _haar_isometry(n_out * env_dim, n_in, rng_from(seed))
    v3 = v.reshape(n_out, env_dim, n_in)
    kraus = tuple(v3[:, e, :] for e in range(env_dim))
    return KrausChannel(kraus=kraus, input_dim=n_in, output_dim=n_out)
