"""Planar geometry of peripheral sets, Stolz domains, sectors, contours.

All regions live in (or touch) the closed unit disc.  Stolz domains are
convex and star-shaped about 0, so membership goes through the radial
function; sectors use the argument test; polygons use half-plane tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    CoverageFailureError,
    DegenerateSetError,
    NoAdmissibleThetaError,
    NoPositiveSolutionError,
    NotRittError,
    NTooSmallError,
    ParallelHalflinesError,
)

TAU = 2.0 * math.pi
_TOL = 1e-12


def _mod_tau(x: float) -> float:
    return x % TAU


# ---------------------------------------------------------------------------
# peripheral sets

@dataclass(frozen=True)
class PeripheralSet:
    """Finite subset of the unit circle, sorted counterclockwise."""

    points: tuple[complex, ...]

    def __init__(self, points: Iterable[complex]):
        pts = [complex(p) for p in points]
        if not pts:
            raise ValueError("peripheral set must be nonempty")
        for p in pts:
            if abs(abs(p) - 1.0) > 1e-12:
                raise ValueError(f"point {p} is not unimodular")
        pts.sort(key=lambda p: cmath.phase(p))
        for a, b in zip(pts, pts[1:]):
            if abs(a - b) <= 1e-8:
                raise DegenerateSetError(f"points {a} and {b} are too close")
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def arguments(self) -> np.ndarray:
        return np.asarray([cmath.phase(p) for p in self.points])

    def gaps(self) -> np.ndarray:
        """Counterclockwise angular gaps between consecutive points."""
        args = self.arguments()
        if len(args) == 1:
            return np.asarray([TAU])
        diffs = np.diff(np.concatenate([args, [args[0] + TAU]]))
        return diffs

    def min_distance(self) -> float:
        if len(self) == 1:
            return 2.0
        pts = np.asarray(self.points)
        d = np.abs(pts[:, None] - pts[None, :])
        return float(np.min(d[d > 0]))

    def rotate(self, phase: complex) -> "PeripheralSet":
        return PeripheralSet([phase * p for p in self.points])

    @staticmethod
    def roots_of_unity(k: int) -> "PeripheralSet":
        return PeripheralSet([cmath.exp(2j * math.pi * j / k) for j in range(k)])

    def vanishing_poly(self):
        from .poly import Poly

        return Poly.from_roots(self.points)


# ---------------------------------------------------------------------------
# contour pieces

@dataclass(frozen=True)
class Segment:
    start: complex
    end: complex
    kind: str = "segment"  # "segment" or "chord"

    def point(self, t):
        t = np.asarray(t, dtype=np.float64)
        return self.start + t * (self.end - self.start)

    def derivative(self, t):
        t = np.asarray(t, dtype=np.float64)
        return np.broadcast_to(self.end - self.start, t.shape).copy()

    @property
    def length(self) -> float:
        return abs(self.end - self.start)

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start, self.kind)

    def endpoints(self) -> tuple[complex, complex]:
        return (self.start, self.end)


@dataclass(frozen=True)
class Arc:
    """Circular arc; sweep is signed (positive = counterclockwise)."""

    center: complex
    radius: float
    theta0: float
    sweep: float
    kind: str = "arc"

    def point(self, t):
        t = np.asarray(t, dtype=np.float64)
        ang = self.theta0 + t * self.sweep
        return self.center + self.radius * np.exp(1j * ang)

    def derivative(self, t):
        t = np.asarray(t, dtype=np.float64)
        ang = self.theta0 + t * self.sweep
        return 1j * self.sweep * self.radius * np.exp(1j * ang)

    @property
    def length(self) -> float:
        return abs(self.sweep) * self.radius

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.theta0 + self.sweep, -self.sweep)

    def endpoints(self) -> tuple[complex, complex]:
        return (complex(self.point(0.0)), complex(self.point(1.0)))


Piece = Union[Segment, Arc]


@dataclass(frozen=True)
class PiecewiseContour:
    """Closed oriented path of segments and arcs."""

    pieces: tuple[Piece, ...]
    graded: bool = False  # vertex-graded quadrature recommended

    def __post_init__(self):
        for a, b in zip(self.pieces, self.pieces[1:] + self.pieces[:1]):
            if abs(a.endpoints()[1] - b.endpoints()[0]) > 1e-9:
                raise ValueError(
                    f"contour not closed: {a.endpoints()[1]} != {b.endpoints()[0]}"
                )

    @property
    def length(self) -> float:
        return sum(p.length for p in self.pieces)

    def reversed(self) -> "PiecewiseContour":
        return PiecewiseContour(
            tuple(p.reversed() for p in reversed(self.pieces)), self.graded
        )

    def sample(self, per_piece: int = 64) -> np.ndarray:
        t = np.linspace(0.0, 1.0, per_piece, endpoint=False)
        return np.concatenate([p.point(t) for p in self.pieces])

    def winding_number(self, a: complex, per_piece: int = 256) -> int:
        """Winding about ``a`` by summing principal argument increments."""
        t = np.linspace(0.0, 1.0, per_piece + 1)
        total = 0.0
        for p in self.pieces:
            w = p.point(t) - a
            total += float(np.sum(np.angle(w[1:] / w[:-1])))
        return int(round(total / TAU))

    def is_simple(self, per_piece: int = 32) -> bool:
        """No self-intersection at sampling resolution."""
        pts = self.sample(per_piece)
        n = len(pts)
        a = pts
        b = np.roll(pts, -1)
        # segment-pair intersection test, vectorized over all pairs
        d1 = b - a
        cross = lambda u, v: np.imag(np.conj(u) * v)  # noqa: E731
        for i in range(n):
            js = np.arange(i + 2, n if i > 0 else n - 1)
            if len(js) == 0:
                continue
            p, r = a[i], d1[i]
            q, s = a[js], d1[js]
            denom = cross(r * np.ones_like(s), s)
            tnum = cross(q - p, s)
            unum = cross(q - p, r * np.ones_like(s))
            with np.errstate(divide="ignore", invalid="ignore"):
                tt = tnum / denom
                uu = unum / denom
            hit = (
                (np.abs(denom) > 1e-15)
                & (tt > 1e-9) & (tt < 1 - 1e-9)
                & (uu > 1e-9) & (uu < 1 - 1e-9)
            )
            if np.any(hit):
                return False
        return True

    def touches_unit_circle(self) -> bool:
        for p in self.pieces:
            for e in p.endpoints():
                if abs(abs(e) - 1.0) <= 1e-9:
                    return True
        return False


# ---------------------------------------------------------------------------
# Stolz domains

@dataclass(frozen=True)
class StolzDomain:
    """Interior of the convex hull of D(0, r) and the peripheral set."""

    e: PeripheralSet
    r: float
    boundary: tuple[Piece, ...]

    def contour(self) -> PiecewiseContour:
        return PiecewiseContour(self.boundary, graded=True)

    def radial(self, phi: float) -> float:
        """Boundary radius in direction phi (the domain is star-shaped at 0)."""
        phi = _mod_tau(phi)
        for piece in self.boundary:
            if isinstance(piece, Arc):
                a0 = _mod_tau(piece.theta0)
                width = piece.sweep
                rel = _mod_tau(phi - a0)
                if rel <= width + 1e-15:
                    return piece.radius
            else:
                a, b = piece.start, piece.end
                pa, pb = _mod_tau(cmath.phase(a)), _mod_tau(cmath.phase(b))
                width = _mod_tau(pb - pa)
                rel = _mod_tau(phi - pa)
                if rel <= width + 1e-15:
                    u = cmath.exp(1j * phi)
                    denom = (np.conj(u) * (b - a)).imag
                    if abs(denom) < 1e-15:
                        return min(abs(a), abs(b))
                    t = -(np.conj(u) * a).imag / denom
                    t = min(max(t, 0.0), 1.0)
                    z = a + t * (b - a)
                    return float((np.conj(u) * z).real)
        # numerical fallback (should not happen for a valid boundary)
        return self.r


def build_stolz(e: PeripheralSet, r: float) -> StolzDomain:
    """Assemble the boundary of the convex hull of D(0, r) and E.

    Between consecutive points with counterclockwise gap <= 2 arccos(r) the
    hull edge is the chord (the disc does not protrude); otherwise the edge
    is tangent segment -> arc -> tangent segment, with tangency points at
    angles arg(xi) +/- arccos(r).
    """
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    beta = math.acos(r)
    pts = list(e.points)
    args = [cmath.phase(p) for p in pts]
    n = len(pts)
    pieces: list[Piece] = []
    for j in range(n):
        xi, aj = pts[j], args[j]
        xk = pts[(j + 1) % n]
        ak = args[(j + 1) % n] + (TAU if (j + 1) == n else 0.0)
        if n == 1:
            ak = aj + TAU
        gap = ak - aj
        if gap <= 2.0 * beta + 1e-14:
            pieces.append(Segment(xi, xk, kind="chord"))
        else:
            t1 = r * cmath.exp(1j * (aj + beta))
            t2 = r * cmath.exp(1j * (ak - beta))
            pieces.append(Segment(xi, t1))
            pieces.append(Arc(0.0, r, aj + beta, gap - 2.0 * beta))
            pieces.append(Segment(t2, xk))
    return StolzDomain(e, float(r), tuple(pieces))


# ---------------------------------------------------------------------------
# sectors

@dataclass(frozen=True)
class Sector:
    """Sector with vertex ``xi`` opening toward 0: xi * (1 - Sigma_omega).

    Membership is Arg(1 - z/xi) in (-omega, omega); for unimodular xi this
    coincides with the 1 - conj(xi) z form.
    """

    vertex: complex
    half_angle: float

    def __post_init__(self):
        if self.vertex == 0:
            raise ValueError("sector vertex must be nonzero")
        if not 0.0 < self.half_angle < math.pi / 2:
            raise ValueError("half angle must lie in (0, pi/2)")

    def boundary_point(self, branch: str, t: float) -> complex:
        """Point xi (1 - t e^{-/+ i omega}) on the +/- boundary half-line."""
        sgn = -1.0 if branch == "+" else 1.0
        return self.vertex * (1.0 - t * cmath.exp(sgn * 1j * self.half_angle))

    def contains(self, z, closure: bool = False):
        z = np.asarray(z, dtype=np.complex128)
        w = 1.0 - z / self.vertex
        ang = np.abs(np.angle(w))
        if closure:
            inside = (ang <= self.half_angle + _TOL) | (np.abs(w) <= _TOL)
        else:
            inside = (ang < self.half_angle - _TOL) & (np.abs(w) > _TOL)
        return inside if inside.shape else bool(inside)


# ---------------------------------------------------------------------------
# convex polygons

@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise vertex list; strictly convex."""

    vertices: tuple[complex, ...]

    def __init__(self, vertices: Sequence[complex]):
        vs = tuple(complex(v) for v in vertices)
        if len(vs) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        object.__setattr__(self, "vertices", vs)

    def is_strictly_convex(self) -> bool:
        vs = self.vertices
        n = len(vs)
        for i in range(n):
            a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
            if (np.conj(b - a) * (c - b)).imag <= 0:
                return False
        return True

    def contains(self, z, closure: bool = False):
        z = np.asarray(z, dtype=np.complex128)
        vs = np.asarray(self.vertices)
        edges = np.roll(vs, -1) - vs
        # cross(edge, z - vertex) for every edge
        cr = np.imag(np.conj(edges)[:, None] * (z.ravel()[None, :] - vs[:, None]))
        tol = _TOL * max(1.0, float(np.max(np.abs(vs))))
        if closure:
            inside = np.all(cr >= -tol, axis=0)
        else:
            inside = np.all(cr > tol, axis=0)
        inside = inside.reshape(z.shape)
        return inside if inside.shape else bool(inside)

    def contour(self) -> PiecewiseContour:
        vs = self.vertices
        pieces = tuple(
            Segment(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
        )
        graded = any(abs(abs(v) - 1.0) <= 1e-9 for v in vs)
        return PiecewiseContour(pieces, graded=graded)

    def centroid(self) -> complex:
        return complex(np.mean(np.asarray(self.vertices)))


Region = Union[StolzDomain, Sector, ConvexPolygon]


def region_contains(region: Region, z, closure: bool = False):
    """Membership test; vectorized over ``z``."""
    if isinstance(region, Sector):
        return region.contains(z, closure)
    if isinstance(region, ConvexPolygon):
        return region.contains(z, closure)
    if isinstance(region, StolzDomain):
        zz = np.asarray(z, dtype=np.complex128)
        flat = zz.ravel()
        out = np.empty(flat.shape, dtype=bool)
        for i, w in enumerate(flat):
            rad = region.radial(cmath.phase(w)) if w != 0 else region.r
            if closure:
                out[i] = abs(w) <= rad + _TOL
            else:
                out[i] = abs(w) < rad - _TOL
        out = out.reshape(zz.shape)
        return out if out.shape else bool(out)
    raise TypeError(f"unsupported region type {type(region)!r}")


def boundary_contour(region: StolzDomain | ConvexPolygon, orientation: str = "ccw") -> PiecewiseContour:
    """Closed boundary contour; vertex-graded flag set when it touches T."""
    if isinstance(region, StolzDomain):
        c = region.contour()
    elif isinstance(region, ConvexPolygon):
        c = region.contour()
    else:
        raise TypeError(f"unsupported region type {type(region)!r}")
    c = PiecewiseContour(c.pieces, graded=c.touches_unit_circle())
    if orientation == "ccw":
        return c
    if orientation == "cw":
        return c.reversed()
    raise ValueError("orientation must be 'ccw' or 'cw'")


# ---------------------------------------------------------------------------
# the Gamma_n contour

def gamma_n_min_n(e: PeripheralSet, s: float) -> int:
    """Least n making the 4N pieces non-crossing and the small discs disjoint."""
    if not 0.0 < s < 1.0:
        raise ValueError("s must lie in (0, 1)")
    alpha = math.asin(s)
    gaps = e.gaps()
    if np.any(gaps <= math.pi - 2 * alpha + 1e-12):
        raise NTooSmallError(
            f"s={s} too small: an angular gap of E does not exceed pi - 2*arcsin(s); "
            "increase s toward 1",
            n0=None,
        )
    c = math.cos(alpha)
    bounds = [1.0, c / (1.0 - s)]
    if len(e) > 1:
        bounds.append(2.0 * c / e.min_distance())
    n0 = int(math.floor(max(bounds))) + 1
    for _ in range(8):
        try:
            contour = _gamma_pieces(e, s, n0)
            if PiecewiseContour(contour).is_simple():
                return n0
        except ValueError:
            pass
        n0 *= 2
    raise NTooSmallError("could not find an admissible n for this (E, s)", n0=None)


def _gamma_pieces(e: PeripheralSet, s: float, n: int) -> tuple[Piece, ...]:
    alpha = math.asin(s)
    c = math.cos(alpha)
    rad_small = c / n
    pts = list(e.points)
    args = [cmath.phase(p) for p in pts]
    m = len(pts)
    pieces: list[Piece] = []
    half = math.pi / 2 - alpha
    for j in range(m):
        xi, aj = pts[j], args[j]
        jn = (j + 1) % m
        xin, an = pts[jn], args[jn]
        if jn <= j:
            an += TAU
        # gamma_{j+}: outward segment on the e^{-i alpha} ray
        p_in = xi * (1.0 - rad_small * cmath.exp(-1j * alpha))
        p_out = xi * (1.0 - c * cmath.exp(-1j * alpha))
        pieces.append(Segment(p_in, p_out))
        # gamma_{j,j+1}: counterclockwise on |z| = s
        th0 = aj + half
        sweep = (an - half) - th0
        pieces.append(Arc(0.0, s, th0, sweep))
        # gamma_{(j+1)-}: inward segment on the e^{+i alpha} ray
        q_out = xin * (1.0 - c * cmath.exp(1j * alpha))
        q_in = xin * (1.0 - rad_small * cmath.exp(1j * alpha))
        pieces.append(Segment(q_out, q_in))
        # small arc around xi_{j+1}, counterclockwise, bulging outside T
        th_start = an + math.pi + alpha
        pieces.append(Arc(xin, rad_small, th_start, TAU - 2.0 * alpha))
    return tuple(pieces)


def gamma_n(e: PeripheralSet, s: float, n: int) -> PiecewiseContour:
    """The 4N-piece Jordan contour enveloping the spectrum at scale n.

    Per peripheral point: two radial-like segments meeting the circle |z| = s
    (endpoints satisfy |1 - cos(a) e^{+-ia}| = sin(a) = s), the outer arc on
    |z| = s, and the small circle of radius cos(a)/n around the point.
    """
    n0 = gamma_n_min_n(e, s)
    if n < n0:
        raise NTooSmallError(f"n={n} below least admissible n0={n0}", n0=n0)
    return PiecewiseContour(_gamma_pieces(e, s, n), graded=False)


# ---------------------------------------------------------------------------
# half-line intersections and the constructive polygon

def halfline_intersection(
    vertex1: complex, mu1: float, vertex2: complex, mu2: float
) -> complex:
    """Intersection of the '+' branch at vertex1 with the '-' branch at vertex2.

    Branches are z1 (1 - t e^{-i mu1}) and z2 (1 - t' e^{+i mu2}) with both
    parameters strictly positive.
    """
    d1 = -vertex1 * cmath.exp(-1j * mu1)
    d2 = -vertex2 * cmath.exp(1j * mu2)
    rhs = vertex2 - vertex1
    det = (np.conj(d1) * d2).imag  # cross(d1, d2)
    scale = max(abs(d1), abs(d2), 1e-300)
    if abs(det) < 1e-12 * scale * scale:
        raise ParallelHalflinesError(
            f"half-lines from {vertex1} and {vertex2} are parallel"
        )
    t = (np.conj(rhs) * d2).imag / det
    tp = (np.conj(rhs) * d1).imag / det
    if t <= 1e-12 or tp <= 1e-12:
        raise NoPositiveSolutionError(
            f"half-lines from {vertex1} and {vertex2} meet behind a vertex"
        )
    return vertex1 + t * d1


def lift_vertex(c: complex) -> complex:
    """Midpoint of c and its radial projection to the unit circle."""
    if c == 0:
        raise ValueError("cannot lift the origin")
    return 0.5 * (c + c / abs(c))


@dataclass(frozen=True)
class PolygonConfig:
    theta_grid: tuple[float, ...] = tuple(math.pi / 2 - 2.0**-k for k in range(2, 11))
    max_points_per_gap: int = 64
    membership_samples: int = 2000
    seed: int = 0


@dataclass(frozen=True)
class VertexMeta:
    vertex: complex
    angle: float
    from_e: bool


@dataclass(frozen=True)
class PolygonResult:
    delta: ConvexPolygon
    delta0: ConvexPolygon
    vertices: tuple[VertexMeta, ...]
    corners: tuple[complex, ...]       # the c_i intersections
    lifted: tuple[complex, ...]        # the d_i = (c_i + c_i/|c_i|)/2
    theta: float
    theta_prime: float
    points_per_gap: tuple[int, ...]
    epsilon: float                     # 1/3 of the min pairwise vertex distance


def _theta_admissible(e: PeripheralSet, theta: float) -> bool:
    pts = list(e.points)
    n = len(pts)
    # every other peripheral point inside each sector
    for j in range(n):
        sec = Sector(pts[j], theta)
        for k in range(n):
            if k != j and not sec.contains(pts[k]):
                return False
    # consecutive outer half-lines must miss the closed disc
    for j in range(n):
        xi, xn = pts[j], pts[(j + 1) % n]
        if n == 1:
            break
        try:
            c = halfline_intersection(xi, theta, xn, theta)
        except (ParallelHalflinesError, NoPositiveSolutionError):
            continue
        if abs(c) <= 1.0 + 1e-12:
            return False
    # room for intermediate points on every gap
    if np.any(e.gaps() <= 2.0 * (math.pi - 2.0 * theta) + 1e-9):
        return False
    return True


def build_polygon(
    t: np.ndarray,
    e: PeripheralSet,
    theta: float,
    theta_prime: float,
    cfg: PolygonConfig | None = None,
) -> PolygonResult:
    """Constructive polygon pair (Delta, Delta0) around the spectrum.

    Steps: certify theta-admissibility (auto-increasing theta along the
    configured grid if the supplied value fails); place equally spaced
    intermediate points on each scaled gap arc until every sector covers the
    spectrum and consecutive half-lines meet inside the punctured disc;
    intersect consecutive half-lines for the corners c_i; lift them to
    d_i = (c_i + c_i/|c_i|)/2.  Delta0 has vertices (zeta_1, c_1, ...) and
    Delta has vertices (zeta_1, d_1, ...).
    """
    from . import classify as _classify
    from .linalg import spectrum as _spectrum

    cfg = cfg or PolygonConfig()
    if not (0.0 < theta < math.pi / 2 and 0.0 < theta_prime < math.pi / 2):
        raise ValueError("theta and theta_prime must lie in (0, pi/2)")
    spec = _spectrum(t)
    report = _classify.is_ritt_e_fd(t, e)
    if not report.verdict:
        raise NotRittError(f"operator is not Ritt for this E: {report.reason}")

    if not _theta_admissible(e, theta):
        theta_found = None
        for cand in cfg.theta_grid:
            if cand > theta and _theta_admissible(e, cand):
                theta_found = cand
                break
        if theta_found is None:
            raise NoAdmissibleThetaError(
                "no admissible theta on the search grid up to pi/2 - 1e-3"
            )
        theta = theta_found

    eig = spec.points()
    peripheral_tol = 1e-6
    interior = [z for z in eig if min(abs(z - xi) for xi in e.points) > peripheral_tol]
    peripheral = [z for z in eig if min(abs(z - xi) for xi in e.points) <= peripheral_tol]
    rho_inner = max((abs(z) for z in interior), default=0.0)
    r_mid = 0.5 * (1.0 + rho_inner)

    pts = list(e.points)
    args = [cmath.phase(p) for p in pts]
    n = len(pts)
    half = math.pi - 2.0 * theta

    all_vertices: list[VertexMeta] = []
    points_per_gap: list[int] = []
    for j in range(n):
        aj = args[j]
        an = args[(j + 1) % n] + (TAU if (j + 1) % n <= j else 0.0)
        if n == 1:
            an = aj + TAU
        arc_start = aj + half
        arc_width = (an - half) - arc_start
        all_vertices.append(VertexMeta(pts[j], aj, True))
        chosen = None
        p = 1
        while p <= cfg.max_points_per_gap:
            cand_angles = [arc_start + arc_width * i / (p + 1) for i in range(1, p + 1)]
            cand = [r_mid * cmath.exp(1j * b) for b in cand_angles]
            if _gap_admissible(cand, pts[j], pts[(j + 1) % n], theta, theta_prime, eig):
                chosen = (cand, cand_angles)
                break
            p += 1
        if chosen is None:
            raise CoverageFailureError(
                f"gap {j}: no admissible intermediate count up to "
                f"{cfg.max_points_per_gap} (theta'={theta_prime:.4f}, r={r_mid:.4f})"
            )
        points_per_gap.append(p)
        for z, b in zip(*chosen):
            all_vertices.append(VertexMeta(z, b, False))

    zetas = [v.vertex for v in all_vertices]
    mus = [theta if v.from_e else theta_prime for v in all_vertices]
    m = len(zetas)
    corners = []
    for i in range(m):
        c = halfline_intersection(zetas[i], mus[i], zetas[(i + 1) % m], mus[(i + 1) % m])
        if abs(c) >= 1.0 - 1e-12 or abs(c) <= 1e-12:
            raise CoverageFailureError(
                f"corner {i} fell outside the punctured open disc (|c|={abs(c):.6f})"
            )
        corners.append(c)
    lifted = [lift_vertex(c) for c in corners]

    delta0_vertices = []
    delta_vertices = []
    for i in range(m):
        delta0_vertices.append(zetas[i])
        delta0_vertices.append(corners[i])
        delta_vertices.append(zetas[i])
        delta_vertices.append(lifted[i])
    delta0 = ConvexPolygon(delta0_vertices)
    delta = ConvexPolygon(delta_vertices)
    if not delta0.is_strictly_convex() or not delta.is_strictly_convex():
        raise CoverageFailureError("constructed polygon failed strict convexity")

    # final assertions: membership factorization, spectral inclusion, T-trace
    rng = np.random.default_rng(cfg.seed)
    zs = _disc_samples(rng, cfg.membership_samples)
    in_poly = delta0.contains(zs)
    in_sectors = np.ones_like(in_poly)
    for zeta, mu in zip(zetas, mus):
        in_sectors &= Sector(zeta, mu).contains(zs)
    mismatch = int(np.sum(in_poly != in_sectors))
    if mismatch:
        raise CoverageFailureError(
            f"Delta0 disagreed with the sector intersection on {mismatch} samples"
        )
    for z in eig:
        if not delta.contains(z, closure=True):
            # numerical slack: peripheral eigenvalues may sit 1e-9 off a vertex
            if min(abs(z - v) for v in delta.vertices) > 1e-6:
                raise CoverageFailureError(f"eigenvalue {z} escaped closure(Delta)")
    for v in delta.vertices:
        on_circle = abs(abs(v) - 1.0) <= 1e-9
        in_e = min(abs(v - xi) for xi in pts) <= 1e-9
        if on_circle != in_e:
            raise CoverageFailureError("closure(Delta) meets T away from E")
    vs = np.asarray(delta.vertices)
    pd = np.abs(vs[:, None] - vs[None, :])
    eps = float(np.min(pd[pd > 0]) / 3.0)
    del peripheral
    return PolygonResult(
        delta=delta,
        delta0=delta0,
        vertices=tuple(all_vertices),
        corners=tuple(corners),
        lifted=tuple(lifted),
        theta=float(theta),
        theta_prime=float(theta_prime),
        points_per_gap=tuple(points_per_gap),
        epsilon=eps,
    )


def _gap_admissible(
    cand: list[complex],
    xi_left: complex,
    xi_right: complex,
    theta: float,
    theta_prime: float,
    eigenvalues: np.ndarray,
) -> bool:
    # coverage: the whole spectrum inside every intermediate sector
    for z in cand:
        sec = Sector(z, theta_prime)
        if not np.all(sec.contains(eigenvalues, closure=False)):
            return False
    # consecutive half-lines must meet inside the punctured disc
    chain = [(xi_left, theta)] + [(z, theta_prime) for z in cand] + [(xi_right, theta)]
    for (z1, m1), (z2, m2) in zip(chain, chain[1:]):
        try:
            c = halfline_intersection(z1, m1, z2, m2)
        except (ParallelHalflinesError, NoPositiveSolutionError):
            return False
        if abs(c) >= 1.0 - 1e-12 or abs(c) <= 1e-12:
            return False
    return True


def _disc_samples(rng: np.random.Generator, count: int) -> np.ndarray:
    r = np.sqrt(rng.random(count))
    phi = rng.random(count) * TAU
    return r * np.exp(1j * phi)


def build_polygon_auto(
    t: np.ndarray,
    e: PeripheralSet,
    cfg: PolygonConfig | None = None,
    theta_prime_grid: Sequence[float] = (1.35, 1.45, 1.5, 1.54, 1.56, 1.5697),
) -> PolygonResult:
    """build_polygon with a small search over theta and theta' defaults."""
    cfg = cfg or PolygonConfig()
    last: Exception | None = None
    for theta in cfg.theta_grid:
        if not _theta_admissible(e, theta):
            continue
        for tp in theta_prime_grid:
            try:
                return build_polygon(t, e, theta, tp, cfg)
            except (CoverageFailureError, NoAdmissibleThetaError) as exc:
                last = exc
    raise CoverageFailureError(
        f"no (theta, theta') pair on the default grids succeeded: {last}"
    )
