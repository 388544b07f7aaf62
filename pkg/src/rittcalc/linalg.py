"""Dense complex linear algebra on l^p(C^d).

Resolvents (LU solves with residual certification), eigenvalues with
semisimplicity diagnosis (hand-rolled Hessenberg + shifted QR via the
backend kernel), operator p-norms with exact/lower certificates, polynomial
and exponential evaluation, and the power/difference sequences used in the
Ritt characterization.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import backend
from .errors import (
    IllConditionedWarning,
    NoConvergenceError,
    OverflowLimitError,
    SingularMatrixError,
)
from .poly import Poly

DEFAULT_COND_CAP = 1e12
DEFAULT_DIM_CAP = 512
OVERFLOW_CAP = 1e15


# ---------------------------------------------------------------------------
# matrix plumbing

def as_matrix(a) -> np.ndarray:
    """Validate and return a square complex128 matrix."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError("matrix entries must be finite")
    return m


def matrix_to_json(m: np.ndarray) -> dict:
    """Wire format: {"dim": d, "entries": [[re, im], ...]} row-major."""
    m = as_matrix(m)
    entries = [[float(z.real), float(z.imag)] for z in m.ravel()]
    return {"dim": int(m.shape[0]), "entries": entries}


def matrix_from_json(obj: dict) -> np.ndarray:
    d = int(obj["dim"])
    entries = obj["entries"]
    if len(entries) != d * d:
        raise ValueError(f"expected {d * d} entries, got {len(entries)}")
    flat = np.asarray([complex(re, im) for re, im in entries], dtype=np.complex128)
    return as_matrix(flat.reshape(d, d))


# ---------------------------------------------------------------------------
# resolvents

def resolvent(t: np.ndarray, z: complex, cond_cap: float = DEFAULT_COND_CAP) -> np.ndarray:
    """(z - T)^{-1} by partially pivoted LU, with residual certification.

    Raises SingularMatrixError when z is numerically an eigenvalue; emits
    IllConditionedWarning (and still returns) when the condition estimate
    exceeds ``cond_cap``.
    """
    t = as_matrix(t)
    d = t.shape[0]
    a = z * np.eye(d, dtype=np.complex128) - t
    try:
        x = np.linalg.solve(a, np.eye(d, dtype=np.complex128))
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"z={z} is an eigenvalue of T") from exc
    xnorm = float(np.linalg.norm(x, 2))
    residual = float(np.linalg.norm(a @ x - np.eye(d), 2))
    if not np.isfinite(xnorm) or residual > 1e-10 * max(xnorm, 1.0):
        raise SingularMatrixError(
            f"resolvent solve at z={z} failed residual check ({residual:.3e})"
        )
    cond_est = float(np.linalg.norm(a, "fro")) * float(np.linalg.norm(x, "fro"))
    if cond_est > cond_cap:
        warnings.warn(
            f"resolvent at z={z}: condition estimate {cond_est:.3e} exceeds cap",
            IllConditionedWarning,
            stacklevel=2,
        )
    return x


def resolvent_batch(t: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Stacked resolvents (len(zs), d, d); no per-point certification.

    Used by quadrature loops where clearance from the spectrum is enforced
    separately.  Fixed evaluation order keeps reductions bit-reproducible.
    """
    t = as_matrix(t)
    d = t.shape[0]
    zs = np.asarray(zs, dtype=np.complex128).ravel()
    eye = np.eye(d, dtype=np.complex128)
    a = zs[:, None, None] * eye[None, :, :] - t[None, :, :]
    return np.linalg.solve(a, np.broadcast_to(eye, (len(zs), d, d)))


# ---------------------------------------------------------------------------
# spectrum with semisimplicity diagnosis

@dataclass(frozen=True)
class Eigenvalue:
    value: complex
    algebraic_multiplicity: int
    semisimple: bool


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[Eigenvalue, ...]
    cluster_tolerance: float

    def points(self) -> np.ndarray:
        """Distinct eigenvalues (cluster representatives)."""
        return np.asarray([e.value for e in self.eigenvalues], dtype=np.complex128)

    def points_with_multiplicity(self) -> np.ndarray:
        out = []
        for e in self.eigenvalues:
            out.extend([e.value] * e.algebraic_multiplicity)
        return np.asarray(out, dtype=np.complex128)

    @property
    def dim(self) -> int:
        return sum(e.algebraic_multiplicity for e in self.eigenvalues)

    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.points())))


def _cluster(values: np.ndarray, tol: float) -> list[np.ndarray]:
    """Greedy clustering of close eigenvalues; deterministic order."""
    order = np.lexsort((values.imag, values.real))
    vals = values[order]
    used = np.zeros(len(vals), dtype=bool)
    clusters = []
    for i in range(len(vals)):
        if used[i]:
            continue
        members = [i]
        used[i] = True
        for j in range(i + 1, len(vals)):
            if not used[j] and abs(vals[j] - vals[i]) <= tol:
                members.append(j)
                used[j] = True
        clusters.append(vals[members])
    return clusters


def spectrum(
    t: np.ndarray,
    cluster_tolerance: float | None = None,
    max_sweeps: int | None = None,
    dim_cap: int = DEFAULT_DIM_CAP,
) -> Spectrum:
    """Eigenvalues via Hessenberg reduction + shifted QR, with clustering.

    Semisimplicity of each cluster is decided by the numerical rank of
    (T - lambda I): singular values below 1e-8 * ||T||_2 count as zero.
    """
    t = as_matrix(t)
    d = t.shape[0]
    if d > dim_cap:
        raise ValueError(f"dim {d} exceeds cap {dim_cap}")
    if max_sweeps is None:
        max_sweeps = 100 * d
    try:
        raw = backend.eigvals(t, max_sweeps)
    except RuntimeError as exc:
        raise NoConvergenceError(str(exc)) from exc
    scale = max(1.0, float(np.linalg.norm(t, 2)))
    if cluster_tolerance is None:
        cluster_tolerance = 1e-6 * scale
    rank_tol = 1e-8 * float(np.linalg.norm(t, 2)) if np.any(t) else 1e-8
    eigs = []
    for members in _cluster(raw, cluster_tolerance):
        lam = complex(np.mean(members))
        mult = len(members)
        if mult == 1:
            semisimple = True
        else:
            sv = np.linalg.svd(t - lam * np.eye(d), compute_uv=False)
            geo = int(np.sum(sv <= rank_tol))
            semisimple = geo >= mult
        eigs.append(Eigenvalue(lam, mult, semisimple))
    eigs.sort(key=lambda e: (round(e.value.real, 12), round(e.value.imag, 12)))
    return Spectrum(tuple(eigs), float(cluster_tolerance))


# ---------------------------------------------------------------------------
# operator p-norms

class NormEstimate(NamedTuple):
    value: float
    certificate: str  # "exact" | "lower"


def _vec_pnorm(x: np.ndarray, p: float) -> float:
    return float(np.sum(np.abs(x) ** p) ** (1.0 / p))


def _power_iteration_2norm(t: np.ndarray, rtol: float = 1e-10, max_iter: int = 50000) -> float:
    """Largest singular value via power iteration on T*T."""
    d = t.shape[0]
    if not np.any(t):
        return 0.0
    h = t.conj().T @ t
    rng = np.random.default_rng(12345)
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    v /= np.linalg.norm(v)
    lam = 0.0
    stable = 0
    for _ in range(max_iter):
        w = h @ v
        nw = float(np.linalg.norm(w))
        if nw == 0.0:
            return 0.0
        lam_new = float(np.real(np.vdot(v, w)))
        v = w / nw
        if abs(lam_new - lam) <= rtol * max(lam_new, 1e-300):
            stable += 1
            if stable >= 2:
                lam = lam_new
                break
        else:
            stable = 0
        lam = lam_new
    return float(np.sqrt(max(lam, 0.0)))


def op_norm2_batch(mats: np.ndarray, rtol: float = 1e-11, max_iter: int = 5000) -> np.ndarray:
    """Largest singular values of a stack of matrices, batched power iteration.

    Same method as the p = 2 branch of op_norm, vectorized across the stack;
    used by sampling loops that need thousands of spectral norms.
    """
    mats = np.asarray(mats, dtype=np.complex128)
    k, d = mats.shape[0], mats.shape[1]
    if k == 0:
        return np.zeros(0)
    h = np.einsum("kji,kjl->kil", mats.conj(), mats)
    rng = np.random.default_rng(12345)
    v = rng.standard_normal((k, d)) + 1j * rng.standard_normal((k, d))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    lam = np.zeros(k)
    for _ in range(max_iter):
        w = np.einsum("kij,kj->ki", h, v)
        lam_new = np.real(np.einsum("ki,ki->k", v.conj(), w))
        nw = np.linalg.norm(w, axis=1)
        nz = nw > 0
        v[nz] = w[nz] / nw[nz, None]
        if np.all(np.abs(lam_new - lam) <= rtol * np.maximum(lam_new, 1e-300)):
            lam = lam_new
            break
        lam = lam_new
    return np.sqrt(np.maximum(lam, 0.0))


def _boyd_iteration(a: np.ndarray, p: float, rtol: float = 1e-12, max_iter: int = 20000) -> float:
    """Nonlinear power iteration for ||A||_p, A entrywise nonnegative."""
    d = a.shape[1]
    if not np.any(a):
        return 0.0
    q = p / (p - 1.0)
    x = np.full(d, 1.0 / d ** (1.0 / p))
    val = 0.0
    for _ in range(max_iter):
        y = a @ x
        ny = _vec_pnorm(y, p)
        if ny == 0.0:
            return 0.0
        val_new = ny / _vec_pnorm(x, p)
        # dual step: x <- (A^T (y/|y|_p)^{p-1})^{q-1}; scale by the max entry
        # before the q-1 power so extreme exponents (p near 1) cannot overflow
        u = (y / ny) ** (p - 1.0)
        z = a.T @ u
        zmax = float(np.max(z))
        if zmax == 0.0:
            return val_new
        x = (z / zmax) ** (q - 1.0)
        x /= _vec_pnorm(x, p)
        if abs(val_new - val) <= rtol * max(val_new, 1e-300):
            return val_new
        val = val_new
    return val


def _ratio(t: np.ndarray, x: np.ndarray, p: float) -> float:
    nx = _vec_pnorm(x, p)
    if nx == 0.0:
        return 0.0
    return _vec_pnorm(t @ x, p) / nx


def _ascent_polish(t: np.ndarray, x: np.ndarray, p: float, passes: int = 30) -> tuple[np.ndarray, float]:
    """Per-coordinate complex ascent with step halving."""
    d = len(x)
    best = _ratio(t, x, p)
    step = 0.5 * max(1.0, float(np.max(np.abs(x))))
    for _ in range(passes):
        improved = False
        for k in range(d):
            for delta in (step, -step, 1j * step, -1j * step):
                cand = x.copy()
                cand[k] += delta
                r = _ratio(t, cand, p)
                if r > best * (1 + 1e-14):
                    x, best = cand, r
                    improved = True
        if not improved:
            step *= 0.5
            if step < 1e-12:
                break
    return x, best


def op_norm(
    t: np.ndarray,
    p: float,
    seed: int = 0,
    restarts: int = 8,
) -> NormEstimate:
    """Operator norm on l^p with a certificate.

    p = 2: power iteration on T*T (exact).  p != 2 entrywise nonnegative:
    Boyd nonlinear power iteration (exact at its fixed point).  General:
    best of random restarts plus coordinate ascent (certified lower bound).
    """
    t = as_matrix(t)
    if not 1.0 < p < np.inf:
        raise ValueError(f"p must lie in (1, inf), got {p}")
    if p == 2.0:
        return NormEstimate(_power_iteration_2norm(t), "exact")
    if np.all(t.imag == 0.0) and np.all(t.real >= 0.0):
        return NormEstimate(_boyd_iteration(t.real, p), "exact")
    d = t.shape[0]
    rng = np.random.default_rng(seed)
    candidates: list[np.ndarray] = [np.eye(d, dtype=np.complex128)[k] for k in range(d)]
    # informed starts: l2 singular vector and Boyd vector of the modulus matrix
    h = t.conj().T @ t
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    for _ in range(200):
        w = h @ v
        n = np.linalg.norm(w)
        if n == 0:
            break
        v = w / n
    candidates.append(v)
    for _ in range(restarts):
        candidates.append(rng.standard_normal(d) + 1j * rng.standard_normal(d))
    best_val = 0.0
    best_x = candidates[0]
    for x0 in candidates:
        x, val = _ascent_polish(t, np.asarray(x0, dtype=np.complex128), p)
        if val > best_val:
            best_val, best_x = val, x
    del best_x
    return NormEstimate(best_val, "lower")


# ---------------------------------------------------------------------------
# polynomial / exponential evaluation

def mat_poly(phi: Poly | Sequence[complex], t: np.ndarray) -> np.ndarray:
    """phi(T) by Horner's scheme."""
    phi = phi if isinstance(phi, Poly) else Poly(phi)
    return phi.at_matrix(as_matrix(t))


_PADE13_B = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0, 670442572800.0,
    33522128640.0, 1323241920.0, 40840800.0, 960960.0, 16380.0, 182.0, 1.0,
)
_PADE13_THETA = 5.371920351148152


def mat_exp(a: np.ndarray, overflow_cap: float = 1e4) -> np.ndarray:
    """exp(A) by scaling-and-squaring with the order-13 Pade approximant."""
    a = as_matrix(a)
    d = a.shape[0]
    nrm2 = _power_iteration_2norm(a)
    if nrm2 > overflow_cap:
        raise OverflowLimitError(f"||A||_2 = {nrm2:.3e} exceeds cap {overflow_cap:.0e}")
    nrm1 = float(np.linalg.norm(a, 1))
    s = max(0, int(np.ceil(np.log2(nrm1 / _PADE13_THETA))) if nrm1 > _PADE13_THETA else 0)
    x = a / (2.0**s)
    b = _PADE13_B
    eye = np.eye(d, dtype=np.complex128)
    x2 = x @ x
    x4 = x2 @ x2
    x6 = x4 @ x2
    u = x @ (
        x6 @ (b[13] * x6 + b[11] * x4 + b[9] * x2)
        + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * eye
    )
    v = (
        x6 @ (b[12] * x6 + b[10] * x4 + b[8] * x2)
        + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * eye
    )
    r = np.linalg.solve(v - u, v + u)
    for _ in range(s):
        r = r @ r
    return r


# ---------------------------------------------------------------------------
# power and difference sequences

@dataclass(frozen=True)
class PowerBounds:
    c0_hat: float
    c1_hat: float
    power_norms: tuple[float, ...]       # ||T^n||_p, n = 0..Nmax
    difference_norms: tuple[float, ...]  # n ||T^{n-1} prod(xi_j - T)||_p, n = 1..Nmax
    overflowed_at: int | None


def power_and_difference_bounds(
    t: np.ndarray,
    e_points: Sequence[complex],
    p: float,
    nmax: int,
    seed: int = 0,
    norm_restarts: int = 2,
) -> PowerBounds:
    """Sequences behind the power-boundedness characterization.

    c0_hat = max_n ||T^n||_p and c1_hat = max_n n ||T^{n-1} prod(xi - T)||_p
    up to nmax; full sequences are returned for trend diagnosis.  Powers are
    formed by repeated multiplication (valid for defective inputs); if any
    Frobenius norm passes 1e15 the sequences stop there and the overflow
    index is reported as divergence evidence.
    """
    t = as_matrix(t)
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    d = t.shape[0]
    diff = np.eye(d, dtype=np.complex128)
    for xi in e_points:
        diff = diff @ (xi * np.eye(d, dtype=np.complex128) - t)

    powers = [np.eye(d, dtype=np.complex128)]
    diffs = []
    prev = np.eye(d, dtype=np.complex128)  # T^{n-1}
    overflowed_at = None
    for n in range(1, nmax + 1):
        diffs.append(prev @ diff)
        prev = prev @ t
        powers.append(prev)
        if np.linalg.norm(prev, "fro") > OVERFLOW_CAP:
            overflowed_at = n
            break
    if p == 2.0:
        pn = op_norm2_batch(np.stack(powers))
        dn = op_norm2_batch(np.stack(diffs))
    else:
        pn = np.asarray(
            [op_norm(m, p, seed=seed, restarts=norm_restarts).value for m in powers]
        )
        dn = np.asarray(
            [op_norm(m, p, seed=seed, restarts=norm_restarts).value for m in diffs]
        )
    if overflowed_at is None and np.max(pn) > OVERFLOW_CAP:
        overflowed_at = int(np.argmax(pn > OVERFLOW_CAP))
    power_norms = tuple(float(x) for x in pn)
    difference_norms = tuple(float(n * dn[n - 1]) for n in range(1, len(diffs) + 1))
    return PowerBounds(
        c0_hat=float(max(power_norms)),
        c1_hat=float(max(difference_norms)) if difference_norms else 0.0,
        power_norms=power_norms,
        difference_norms=difference_norms,
        overflowed_at=overflowed_at,
    )
