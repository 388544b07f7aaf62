"""Pure NumPy eigensolver: Householder Hessenberg reduction + shifted QR.

Reference implementation of the compiled kernel in ``_eigen_cy``.  Both
backends run the identical algorithm: reduce to upper Hessenberg form, then
drive the subdiagonal to zero with Wilkinson-shifted QR sweeps (explicit
shift, complex Givens rotations), deflating converged trailing blocks.
"""

from __future__ import annotations

import cmath

import numpy as np

_EPS = float(np.finfo(np.float64).eps)


def hessenberg(a: np.ndarray) -> np.ndarray:
    """Return an upper Hessenberg matrix unitarily similar to ``a``."""
    h = np.array(a, dtype=np.complex128, order="C", copy=True)
    n = h.shape[0]
    scale = float(np.abs(h).max()) if n else 0.0
    for k in range(n - 2):
        x = h[k + 1 :, k]
        xnorm = float(np.linalg.norm(x))
        if xnorm <= _EPS * max(1.0, scale):
            h[k + 2 :, k] = 0.0
            continue
        alpha = -cmath.exp(1j * cmath.phase(complex(x[0]))) * xnorm if x[0] != 0 else -xnorm
        v = x.copy()
        v[0] -= alpha
        vnorm = float(np.linalg.norm(v))
        if vnorm <= _EPS * xnorm:
            h[k + 2 :, k] = 0.0
            continue
        v /= vnorm
        # two-sided Householder update, H <- P H P with P = I - 2 v v^*
        h[k + 1 :, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1 :, k:])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v.conj())
        h[k + 1, k] = alpha
        h[k + 2 :, k] = 0.0
    return h


def _eig2x2(a: complex, b: complex, c: complex, d: complex) -> tuple[complex, complex]:
    # stable quadratic for [[a, b], [c, d]]
    tr = a + d
    det = a * d - b * c
    disc = cmath.sqrt(tr * tr - 4.0 * det)
    if abs(tr + disc) >= abs(tr - disc):
        l1 = 0.5 * (tr + disc)
    else:
        l1 = 0.5 * (tr - disc)
    l2 = det / l1 if l1 != 0 else tr - l1
    return l1, l2


def _wilkinson_shift(a: complex, b: complex, c: complex, d: complex) -> complex:
    l1, l2 = _eig2x2(a, b, c, d)
    return l1 if abs(l1 - d) <= abs(l2 - d) else l2


def hessenberg_eigvals(h: np.ndarray, max_sweeps: int) -> np.ndarray:
    """Eigenvalues of an upper Hessenberg matrix by shifted QR iteration.

    Raises ``RuntimeError`` if the subdiagonal fails to deflate within
    ``max_sweeps`` QR sweeps.
    """
    h = np.array(h, dtype=np.complex128, order="C", copy=True)
    n = h.shape[0]
    eig = np.empty(n, dtype=np.complex128)
    hi = n - 1
    sweeps = 0
    stagnation = 0
    cos = np.empty(max(n, 1), dtype=np.complex128)
    sin = np.empty(max(n, 1), dtype=np.complex128)
    while hi >= 0:
        if hi == 0:
            eig[0] = h[0, 0]
            break
        # find the unreduced window [lo, hi], deflating tiny subdiagonals
        lo = hi
        while lo > 0:
            s = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if s == 0.0:
                s = 1.0
            if abs(h[lo, lo - 1]) <= _EPS * s:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eig[hi] = h[hi, hi]
            hi -= 1
            stagnation = 0
            continue
        if lo == hi - 1:
            eig[hi - 1], eig[hi] = _eig2x2(
                h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi]
            )
            hi -= 2
            stagnation = 0
            continue
        if sweeps >= max_sweeps:
            raise RuntimeError(
                f"QR iteration did not converge within {max_sweeps} sweeps"
            )
        sweeps += 1
        stagnation += 1
        if stagnation % 12 == 0:
            # exceptional shift to break rare cycling
            mu = h[hi, hi] + 0.75 * abs(h[hi, hi - 1])
        else:
            mu = _wilkinson_shift(
                h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi]
            )
        # explicit single-shift QR sweep on the window: H - mu -> QR -> RQ + mu
        for i in range(lo, hi + 1):
            h[i, i] -= mu
        for k in range(lo, hi):
            x, y = h[k, k], h[k + 1, k]
            rho = np.hypot(abs(x), abs(y))
            if rho == 0.0:
                cos[k], sin[k] = 1.0, 0.0
                continue
            ck, sk = x / rho, y / rho
            cos[k], sin[k] = ck, sk
            rowk = np.conj(ck) * h[k, k:] + np.conj(sk) * h[k + 1, k:]
            h[k + 1, k:] = -sk * h[k, k:] + ck * h[k + 1, k:]
            h[k, k:] = rowk
        for k in range(lo, hi):
            ck, sk = cos[k], sin[k]
            top = min(k + 2, hi) + 1
            colk = h[:top, k] * ck + h[:top, k + 1] * sk
            h[:top, k + 1] = -np.conj(sk) * h[:top, k] + np.conj(ck) * h[:top, k + 1]
            h[:top, k] = colk
        for i in range(lo, hi + 1):
            h[i, i] += mu
    return eig


def eigvals(a: np.ndarray, max_sweeps: int) -> np.ndarray:
    """Eigenvalues of a general dense complex matrix."""
    n = a.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.complex128)
    if n == 1:
        return np.asarray([complex(a[0, 0])], dtype=np.complex128)
    return hessenberg_eigvals(hessenberg(a), max_sweeps)
