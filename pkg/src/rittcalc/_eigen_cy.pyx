# Compiled eigensolver kernel: Householder Hessenberg reduction followed by
# Wilkinson-shifted QR with deflation.  Mirrors _eigen_py exactly; that module
# is the fallback when this extension is unavailable.

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from "complex.h":
    double cabs(double complex) nogil
    double complex csqrt(double complex) nogil
    double carg(double complex) nogil
    double complex cexp(double complex) nogil

cdef double _EPS = np.finfo(np.float64).eps


cdef void _hessenberg(double complex[:, ::1] h, int n) nogil:
    cdef int k, i, j
    cdef double xnorm, vnorm, scale, t
    cdef double complex alpha, g
    scale = 0.0
    for i in range(n):
        for j in range(n):
            t = cabs(h[i, j])
            if t > scale:
                scale = t
    if scale < 1.0:
        scale = 1.0
    cdef double complex[::1] v
    with gil:
        v = np.empty(n, dtype=np.complex128)
    for k in range(n - 2):
        xnorm = 0.0
        for i in range(k + 1, n):
            t = cabs(h[i, k])
            xnorm += t * t
        xnorm = xnorm ** 0.5
        if xnorm <= _EPS * scale:
            for i in range(k + 2, n):
                h[i, k] = 0.0
            continue
        if h[k + 1, k] != 0:
            alpha = -cexp(1j * carg(h[k + 1, k])) * xnorm
        else:
            alpha = -xnorm
        vnorm = 0.0
        for i in range(k + 1, n):
            v[i] = h[i, k]
        v[k + 1] = v[k + 1] - alpha
        for i in range(k + 1, n):
            t = cabs(v[i])
            vnorm += t * t
        vnorm = vnorm ** 0.5
        if vnorm <= _EPS * xnorm:
            for i in range(k + 2, n):
                h[i, k] = 0.0
            continue
        for i in range(k + 1, n):
            v[i] = v[i] / vnorm
        # left update: rows k+1..n-1, columns k..n-1
        for j in range(k, n):
            g = 0.0
            for i in range(k + 1, n):
                g += v[i].conjugate() * h[i, j]
            g *= 2.0
            for i in range(k + 1, n):
                h[i, j] = h[i, j] - g * v[i]
        # right update: all rows, columns k+1..n-1
        for i in range(n):
            g = 0.0
            for j in range(k + 1, n):
                g += h[i, j] * v[j]
            g *= 2.0
            for j in range(k + 1, n):
                h[i, j] = h[i, j] - g * v[j].conjugate()
        h[k + 1, k] = alpha
        for i in range(k + 2, n):
            h[i, k] = 0.0


cdef void _eig2x2(double complex a, double complex b,
                  double complex c, double complex d,
                  double complex *l1, double complex *l2) nogil:
    cdef double complex tr = a + d
    cdef double complex det = a * d - b * c
    cdef double complex disc = csqrt(tr * tr - 4.0 * det)
    if cabs(tr + disc) >= cabs(tr - disc):
        l1[0] = 0.5 * (tr + disc)
    else:
        l1[0] = 0.5 * (tr - disc)
    if l1[0] != 0:
        l2[0] = det / l1[0]
    else:
        l2[0] = tr - l1[0]


cdef int _qr_eigvals(double complex[:, ::1] h, int n,
                     double complex[::1] eig, int max_sweeps,
                     double complex[::1] cs, double complex[::1] sn) nogil:
    cdef int hi = n - 1
    cdef int lo, k, i, top, sweeps = 0, stagnation = 0
    cdef double s, rho
    cdef double complex mu, l1, l2, ck, sk, x, y, tmp
    while hi >= 0:
        if hi == 0:
            eig[0] = h[0, 0]
            break
        lo = hi
        while lo > 0:
            s = cabs(h[lo - 1, lo - 1]) + cabs(h[lo, lo])
            if s == 0.0:
                s = 1.0
            if cabs(h[lo, lo - 1]) <= _EPS * s:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eig[hi] = h[hi, hi]
            hi -= 1
            stagnation = 0
            continue
        if lo == hi - 1:
            _eig2x2(h[hi - 1, hi - 1], h[hi - 1, hi],
                    h[hi, hi - 1], h[hi, hi], &l1, &l2)
            eig[hi - 1] = l1
            eig[hi] = l2
            hi -= 2
            stagnation = 0
            continue
        if sweeps >= max_sweeps:
            return 1
        sweeps += 1
        stagnation += 1
        if stagnation % 12 == 0:
            mu = h[hi, hi] + 0.75 * cabs(h[hi, hi - 1])
        else:
            _eig2x2(h[hi - 1, hi - 1], h[hi - 1, hi],
                    h[hi, hi - 1], h[hi, hi], &l1, &l2)
            if cabs(l1 - h[hi, hi]) <= cabs(l2 - h[hi, hi]):
                mu = l1
            else:
                mu = l2
        for i in range(lo, hi + 1):
            h[i, i] = h[i, i] - mu
        for k in range(lo, hi):
            x = h[k, k]
            y = h[k + 1, k]
            rho = (cabs(x) * cabs(x) + cabs(y) * cabs(y)) ** 0.5
            if rho == 0.0:
                cs[k] = 1.0
                sn[k] = 0.0
                continue
            ck = x / rho
            sk = y / rho
            cs[k] = ck
            sn[k] = sk
            for i in range(k, n):
                tmp = ck.conjugate() * h[k, i] + sk.conjugate() * h[k + 1, i]
                h[k + 1, i] = -sk * h[k, i] + ck * h[k + 1, i]
                h[k, i] = tmp
        for k in range(lo, hi):
            ck = cs[k]
            sk = sn[k]
            top = k + 2
            if top > hi:
                top = hi
            for i in range(top + 1):
                tmp = h[i, k] * ck + h[i, k + 1] * sk
                h[i, k + 1] = -sk.conjugate() * h[i, k] + ck.conjugate() * h[i, k + 1]
                h[i, k] = tmp
        for i in range(lo, hi + 1):
            h[i, i] = h[i, i] + mu
    return 0


def hessenberg(a):
    """Return an upper Hessenberg matrix unitarily similar to ``a``."""
    h = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef int n = h.shape[0]
    if n > 2:
        _hessenberg(h, n)
    return h


def hessenberg_eigvals(hmat, max_sweeps):
    """Eigenvalues of an upper Hessenberg matrix by shifted QR iteration."""
    h = np.array(hmat, dtype=np.complex128, order="C", copy=True)
    cdef int n = h.shape[0]
    eig = np.empty(n, dtype=np.complex128)
    if n == 0:
        return eig
    cs = np.empty(n, dtype=np.complex128)
    sn = np.empty(n, dtype=np.complex128)
    cdef int status = _qr_eigvals(h, n, eig, int(max_sweeps), cs, sn)
    if status:
        raise RuntimeError(
            f"QR iteration did not converge within {max_sweeps} sweeps"
        )
    return eig


def eigvals(a, max_sweeps):
    """Eigenvalues of a general dense complex matrix."""
    n = a.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.complex128)
    if n == 1:
        return np.asarray([complex(a[0, 0])], dtype=np.complex128)
    return hessenberg_eigvals(hessenberg(a), max_sweeps)
