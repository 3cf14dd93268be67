"""Brouwer degree of admissible polynomial maps, and its Burnside refinement.

Certification strategy: exact rational Lipschitz bounds from coefficients,
boundary sampling (rational points where the boundary admits them, floats
with explicit roundoff bounds where it does not), and loud failures.  Zero
counting is grid seeding + batched Newton polishing with exact symbolic
Jacobian signs; dimension two additionally has an adaptive winding method.
The equivariant degree solves the marks system exactly from fixed-subspace
degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .burnside import (
    BurnsideElement,
    MarksVector,
    TableOfMarks,
    marks_for_group,
    membership_check,
    solve_integral,
)
from .errors import (
    BoundaryZeroSuspected,
    DegenerateZero,
    DimensionMismatch,
    DomainError,
    NonIntegralSolve,
    UnsupportedDimension,
)
from .groups import SubgroupClassTable
from .linalg import RationalMatrix, gram_matrix
from .polynomials import Polynomial, PolynomialMap
from .rational import sqrt_lower, sqrt_upper
from .reps import OrthogonalRep, check_equivariance, fixed_subspace, restrict_map


# ---------------------------------------------------------------------------
# domains and configuration


@dataclass(frozen=True)
class Domain:
    """Origin of admissibility: a rational ball or box."""

    kind: str
    center: tuple[Fraction, ...]
    radius: Fraction | None = None
    half_widths: tuple[Fraction, ...] | None = None

    @staticmethod
    def ball(center: Sequence, radius) -> "Domain":
        c = tuple(Fraction(x) for x in center)
        r = Fraction(radius)
        if r <= 0:
            raise DomainError("ball radius must be positive")
        return Domain(kind="ball", center=c, radius=r)

    @staticmethod
    def box(center: Sequence, half_widths: Sequence) -> "Domain":
        c = tuple(Fraction(x) for x in center)
        w = tuple(Fraction(x) for x in half_widths)
        if len(w) != len(c):
            raise DomainError("box center/half_widths length mismatch")
        if any(x <= 0 for x in w):
            raise DomainError("box half-widths must be positive")
        return Domain(kind="box", center=c, half_widths=w)

    @property
    def dim(self) -> int:
        return len(self.center)

    def sup_norm_bound(self) -> Fraction:
        """Exact bound for |x|_inf over the closed domain."""
        if self.kind == "ball":
            return max(abs(c) for c in self.center) + self.radius if self.center else self.radius
        return max(abs(c) + w for c, w in zip(self.center, self.half_widths))


@dataclass(frozen=True)
class DegreeConfig:
    grid: int | None = None          # Newton seeds per axis; None = dimension default
    tol_residual: float = 1e-12
    tol_jacobian: float = 1e-8
    cluster_radius: float = 1e-6
    newton_iterations: int = 60
    boundary_samples: int = 32       # initial samples per boundary chart axis
    max_refinements: int = 10
    shift_attempts: int = 3          # regular-value retries on degenerate zeros
    seed: int = 0

    def grid_for(self, dim: int) -> int:
        if self.grid is not None:
            return self.grid
        # 32 per axis is the reference default; higher dimensions reduce the
        # per-axis count to keep the total seed budget bounded.
        return {1: 32, 2: 32, 3: 10, 4: 6}.get(dim, 4)

    def boundary_for(self, dim: int) -> int:
        # boundary charts are (dim-1)-dimensional grids; shrink the per-axis
        # count as the dimension grows, refinement doubles it when needed
        if dim <= 2:
            return max(2, self.boundary_samples)
        return max(4, self.boundary_samples >> (dim - 2))


@dataclass(frozen=True)
class DegreeResult:
    value: int
    method: str
    certificate: dict
    admissibility_margin: Fraction


@dataclass(frozen=True)
class EquivariantDegree:
    element: BurnsideElement
    fixed_degrees: MarksVector
    class_results: tuple[tuple[int, DegreeResult | None], ...] = ()


# ---------------------------------------------------------------------------
# fast float evaluation


class _FloatMap:
    """Vectorized float evaluation of a polynomial map and its Jacobian."""

    def __init__(self, f: PolynomialMap):
        self.f = f
        self.n = f.num_vars
        self.k = f.num_outputs
        self.comp = [self._prep(p) for p in f.components]
        self.jac = [
            [self._prep(q) for q in row] for row in f.jacobian()
        ]

    @staticmethod
    def _prep(p: Polynomial):
        if not p.terms:
            return None
        items = p.sorted_terms()
        exps = np.array([e for e, _ in items], dtype=np.int64)
        coeffs = np.array([float(c) for _, c in items], dtype=np.float64)
        return exps, coeffs

    @staticmethod
    def _eval_one(prep, pts: np.ndarray) -> np.ndarray:
        if prep is None:
            return np.zeros(pts.shape[0])
        exps, coeffs = prep
        monos = np.prod(pts[:, None, :] ** exps[None, :, :], axis=2)
        return monos @ coeffs

    def eval(self, pts: np.ndarray) -> np.ndarray:
        return np.stack([self._eval_one(c, pts) for c in self.comp], axis=1)

    def eval_jacobian(self, pts: np.ndarray) -> np.ndarray:
        rows = []
        for row in self.jac:
            rows.append(np.stack([self._eval_one(q, pts) for q in row], axis=1))
        return np.stack(rows, axis=1)


# ---------------------------------------------------------------------------
# internal regions: ball / box / origin-centered quadric {x' A x <= R^2}


class _Region:
    dim: int

    def seed_box(self) -> list[tuple[float, float]]:
        raise NotImplementedError

    def signed_level(self, point: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
        """(level(point) - boundary level, conservative level-Lipschitz bound)."""
        raise NotImplementedError

    def sup_norm_bound(self) -> Fraction:
        raise NotImplementedError

    def boundary_points_exact(self, per_axis: int) -> tuple[list[tuple[Fraction, ...]], Fraction] | None:
        """(rational boundary samples, covering radius) or None if unavailable."""
        raise NotImplementedError

    def boundary_points_float(self, per_axis: int) -> tuple[np.ndarray, Fraction]:
        """(float boundary samples, covering radius upper bound)."""
        raise NotImplementedError


def _stereographic_charts(dim: int, per_axis: int, radius: Fraction, center):
    """Rational points covering the (dim-1)-sphere of given radius.

    Two charts t -> (2t, +-(1-|t|^2)) / (1+|t|^2), t in [-1,1]^(dim-1); the
    parametrization is 2-Lipschitz, so a grid of spacing h covers the sphere
    with radius h*sqrt(dim-1).
    """
    m = dim - 1
    pts: list[tuple[Fraction, ...]] = []
    h = Fraction(2, per_axis)
    axis_vals = [Fraction(-1) + h * i for i in range(per_axis + 1)]
    grids: list[list[Fraction]] = [[]]
    for _ in range(m):
        grids = [g + [v] for g in grids for v in axis_vals]
    for t in grids:
        nrm = sum(x * x for x in t)
        den = 1 + nrm
        body = [2 * x / den for x in t]
        last = (1 - nrm) / den
        for sign in (1, -1):
            coords = tuple(
                center[i] + radius * v for i, v in enumerate(body + [sign * last])
            )
            pts.append(coords)
    covering = radius * h * sqrt_upper(Fraction(max(m, 1)))
    return pts, covering


def _stereographic_float(dim: int, per_axis: int) -> tuple[np.ndarray, Fraction]:
    """Float samples of the unit (dim-1)-sphere with the same covering bound."""
    m = dim - 1
    h = Fraction(2, per_axis)
    ts = np.linspace(-1.0, 1.0, per_axis + 1)
    if m == 0:
        pts = np.array([[1.0], [-1.0]])
        return pts, Fraction(0)
    mesh = np.meshgrid(*([ts] * m), indexing="ij")
    T = np.stack([g.ravel() for g in mesh], axis=1)
    nrm = (T * T).sum(axis=1)
    den = 1.0 + nrm
    body = 2.0 * T / den[:, None]
    last = (1.0 - nrm) / den
    up = np.concatenate([body, last[:, None]], axis=1)
    down = np.concatenate([body, -last[:, None]], axis=1)
    pts = np.concatenate([up, down], axis=0)
    covering = h * sqrt_upper(Fraction(max(m, 1)))
    return pts, covering


class _BallRegion(_Region):
    def __init__(self, center: tuple[Fraction, ...], radius: Fraction):
        self.center = center
        self.radius = radius
        self.dim = len(center)

    def seed_box(self):
        return [
            (float(c - self.radius), float(c + self.radius)) for c in self.center
        ]

    def signed_level(self, point):
        d2 = sum((p - c) ** 2 for p, c in zip(point, self.center))
        lvl = d2 - self.radius**2
        lip = 2 * (self.sup_norm_bound() + max(abs(c) for c in self.center)) * self.dim
        return lvl, max(lip, Fraction(1))

    def sup_norm_bound(self):
        return max(abs(c) for c in self.center) + self.radius

    def boundary_points_exact(self, per_axis):
        if self.dim > 3:
            return None
        return _stereographic_charts(self.dim, per_axis, self.radius, self.center)

    def boundary_points_float(self, per_axis):
        dirs, cov = _stereographic_float(self.dim, per_axis)
        center = np.array([float(c) for c in self.center])
        pts = center[None, :] + float(self.radius) * dirs
        return pts, self.radius * cov


class _BoxRegion(_Region):
    def __init__(self, center: tuple[Fraction, ...], half_widths: tuple[Fraction, ...]):
        self.center = center
        self.half = half_widths
        self.dim = len(center)

    def seed_box(self):
        return [
            (float(c - w), float(c + w)) for c, w in zip(self.center, self.half)
        ]

    def signed_level(self, point):
        # level: max_i |x_i - c_i| / w_i - 1, scaled by min width for a
        # distance-like quantity.
        ratios = [
            abs(p - c) - w for p, c, w in zip(point, self.center, self.half)
        ]
        return max(ratios), Fraction(1)

    def sup_norm_bound(self):
        return max(abs(c) + w for c, w in zip(self.center, self.half))

    def _face_points(self, per_axis: int) -> tuple[list[tuple[Fraction, ...]], Fraction]:
        pts = []
        m = self.dim - 1
        max_w = max(self.half)
        if m == 0:
            for s in (-1, 1):
                pts.append((self.center[0] + s * self.half[0],))
            return pts, Fraction(0)
        axis_grids = []
        for i in range(self.dim):
            h = 2 * self.half[i] / per_axis
            axis_grids.append([self.center[i] - self.half[i] + h * k for k in range(per_axis + 1)])
        for fixed in range(self.dim):
            others = [i for i in range(self.dim) if i != fixed]
            combos: list[list[Fraction]] = [[]]
            for i in others:
                combos = [c + [v] for c in combos for v in axis_grids[i]]
            for s in (-1, 1):
                for combo in combos:
                    p = [Fraction(0)] * self.dim
                    p[fixed] = self.center[fixed] + s * self.half[fixed]
                    for i, v in zip(others, combo):
                        p[i] = v
                    pts.append(tuple(p))
        covering = (2 * max_w / per_axis) * sqrt_upper(Fraction(max(m, 1)))
        return pts, covering

    def boundary_points_exact(self, per_axis):
        if self.dim > 3:
            return None
        return self._face_points(per_axis)

    def boundary_points_float(self, per_axis):
        n = self.dim
        lo = [float(c - w) for c, w in zip(self.center, self.half)]
        hi = [float(c + w) for c, w in zip(self.center, self.half)]
        chunks = []
        for fixed in range(n):
            others = [i for i in range(n) if i != fixed]
            axes = [np.linspace(lo[i], hi[i], per_axis + 1) for i in others]
            if others:
                mesh = np.meshgrid(*axes, indexing="ij")
                grid = np.stack([g.ravel() for g in mesh], axis=1)
            else:
                grid = np.zeros((1, 0))
            for s, val in ((0, lo[fixed]), (1, hi[fixed])):
                face = np.empty((grid.shape[0], n))
                for col, i in enumerate(others):
                    face[:, i] = grid[:, col]
                face[:, fixed] = val
                chunks.append(face)
        pts = np.concatenate(chunks, axis=0)
        covering = (2 * max(self.half) / per_axis) * sqrt_upper(
            Fraction(max(n - 1, 1))
        )
        return pts, covering


class _QuadricRegion(_Region):
    """Origin-centered {x : x' A x <= R^2} with A rational positive definite."""

    def __init__(self, A: RationalMatrix, R2: Fraction):
        self.A = A
        self.R2 = Fraction(R2)
        self.dim = A.rows
        inv = A.inverse()
        norm1 = max(
            sum(abs(inv[i, j]) for i in range(self.dim)) for j in range(self.dim)
        )
        norminf = max(
            sum(abs(inv[i, j]) for j in range(self.dim)) for i in range(self.dim)
        )
        self.lam_min_lb = Fraction(1) / sqrt_upper(norm1 * norminf)
        n1 = max(sum(abs(A[i, j]) for i in range(self.dim)) for j in range(self.dim))
        ninf = max(sum(abs(A[i, j]) for j in range(self.dim)) for i in range(self.dim))
        self.lam_max_ub = sqrt_upper(n1 * ninf)
        self.inv_diag = [inv[i, i] for i in range(self.dim)]

    def seed_box(self):
        out = []
        for i in range(self.dim):
            b = float(sqrt_upper(self.R2 * self.inv_diag[i]))
            out.append((-b, b))
        return out

    def q_exact(self, point):
        v = self.A.apply(point)
        return sum(p * w for p, w in zip(point, v))

    def signed_level(self, point):
        lvl = self.q_exact(point) - self.R2
        T = self.sup_norm_bound()
        lip = 2 * self.lam_max_ub * T * self.dim
        return lvl, max(lip, Fraction(1))

    def sup_norm_bound(self):
        return sqrt_upper(self.R2 / self.lam_min_lb)

    def boundary_points_exact(self, per_axis):
        return None

    def boundary_points_float(self, per_axis):
        # directions from stereographic charts on the unit sphere, then
        # radial scaling onto the quadric; Lipschitz bookkeeping is exact:
        # |d t(u)| <= R (1/sqrt(lam_min) + lam_max / lam_min^(3/2)) |du|
        U, cov_u = _stereographic_float(self.dim, per_axis)
        Af = np.array([[float(x) for x in row] for row in self.A.entries])
        q = np.einsum("si,ij,sj->s", U, Af, U)
        scale = math.sqrt(float(self.R2)) / np.sqrt(q)
        pts = U * scale[:, None]
        R = sqrt_upper(self.R2)
        lam_min = self.lam_min_lb
        c_map = R * (
            sqrt_upper(Fraction(1) / lam_min)
            + self.lam_max_ub * sqrt_upper(Fraction(1) / lam_min**3)
        )
        return pts, cov_u * c_map


def _region_for(domain: Domain) -> _Region:
    if domain.kind == "ball":
        return _BallRegion(domain.center, domain.radius)
    if domain.kind == "box":
        return _BoxRegion(domain.center, domain.half_widths)
    raise DomainError(f"unknown domain kind {domain.kind!r}")


# ---------------------------------------------------------------------------
# admissibility certification


def _min_abs_exact(f: PolynomialMap, pts: list[tuple[Fraction, ...]]) -> Fraction:
    best = None
    for p in pts:
        v = f.eval_exact(p)
        m2 = sum(x * x for x in v)
        if m2 == 0:
            raise BoundaryZeroSuspected("exact zero at a boundary sample")
        if best is None or m2 < best:
            best = m2
    return sqrt_lower(best)


def certify_boundary(
    f: PolynomialMap, region: _Region, config: DegreeConfig
) -> Fraction:
    """Positive rational lower bound for |f| on the region boundary.

    Doubles the sampling density until min sampled |f| beats the Lipschitz
    slack (plus float roundoff when samples are not rational); raises
    BoundaryZeroSuspected at the refinement cap.
    """
    T = region.sup_norm_bound()
    L = f.lipschitz_bound(T)
    per_axis = config.boundary_for(region.dim)
    for _ in range(config.max_refinements + 1):
        exact = region.boundary_points_exact(per_axis)
        if exact is not None:
            pts, cov = exact
            m_lb = _min_abs_exact(f, pts)
            slack = L * cov
        else:
            pts, cov = region.boundary_points_float(per_axis)
            fm = _FloatMap(f)
            vals = fm.eval(pts)
            norms = np.sqrt((vals * vals).sum(axis=1))
            m_float = float(norms.min())
            err = f.eval_error_bound(T + Fraction(1))
            m_lb = Fraction(m_float) - err
            slack = L * cov
        margin = m_lb - slack
        if margin > 0:
            return margin
        per_axis *= 2
    raise BoundaryZeroSuspected(
        f"could not certify |f| > 0 on the boundary "
        f"(min sample {float(m_lb):.3e}, Lipschitz slack {float(slack):.3e})"
    )


# ---------------------------------------------------------------------------
# one-dimensional degree: exact endpoint signs


def _poly_coeff_list(p: Polynomial) -> list[Fraction]:
    out = [Fraction(0)] * (p.total_degree() + 1)
    for exps, c in p.terms.items():
        out[exps[0]] = c
    return out


def _sign_and_margin_at_sqrt(
    coeffs: list[Fraction], c: Fraction, sqrt_sign: int
) -> tuple[int, Fraction]:
    """Exact sign and a rational lower bound for |f(s sqrt(c))|, f univariate.

    Splits f into even/odd parts: f(s sqrt(c)) = P(c) + s sqrt(c) Q(c) with
    P, Q rational, so the sign is decided by comparing P^2 against c Q^2.
    """
    P = Fraction(0)
    Q = Fraction(0)
    for i, a in enumerate(coeffs):
        if a == 0:
            continue
        if i % 2 == 0:
            P += a * c ** (i // 2)
        else:
            Q += a * c ** ((i - 1) // 2)
    Q *= sqrt_sign
    if Q == 0:
        if P == 0:
            raise BoundaryZeroSuspected("exact zero at an interval endpoint")
        return (1 if P > 0 else -1), abs(P)
    if P == 0:
        mag = abs(Q) * sqrt_lower(c)
        return (1 if Q > 0 else -1), mag
    disc = P * P - c * Q * Q
    if disc == 0:
        raise BoundaryZeroSuspected("exact zero at an interval endpoint")
    if (P > 0) == (Q > 0):
        sign = 1 if P > 0 else -1
    else:
        sign = (1 if P > 0 else -1) * (1 if disc > 0 else -1)
    denom = abs(P) + sqrt_upper(c) * abs(Q)
    return sign, abs(disc) / denom


def _degree_1d(f: PolynomialMap, region: _Region) -> DegreeResult:
    if isinstance(region, _BallRegion):
        a, b = region.center[0] - region.radius, region.center[0] + region.radius
        endpoints = [(a, None), (b, None)]
    elif isinstance(region, _BoxRegion):
        a, b = region.center[0] - region.half[0], region.center[0] + region.half[0]
        endpoints = [(a, None), (b, None)]
    else:
        # endpoints +-sqrt(R^2 / A[0,0]); signs taken exactly at the
        # quadratic irrationality via even/odd splitting
        c = region.R2 / region.A[0, 0]
        endpoints = [(c, -1), (c, +1)]
    signs = []
    margins = []
    coeffs = _poly_coeff_list(f.components[0])
    for val, sqrt_sign in endpoints:
        if sqrt_sign is None:
            fv = f.eval_exact((val,))[0]
            if fv == 0:
                raise BoundaryZeroSuspected("exact zero at an interval endpoint")
            signs.append(1 if fv > 0 else -1)
            margins.append(abs(fv))
        else:
            s, m = _sign_and_margin_at_sqrt(coeffs, val, sqrt_sign)
            signs.append(s)
            margins.append(m)
    value = (signs[1] - signs[0]) // 2
    cert = {"endpoint_signs": signs}
    return DegreeResult(
        value=value,
        method="zero-count",
        certificate=cert,
        admissibility_margin=min(margins),
    )


# ---------------------------------------------------------------------------
# affine fast path: degree = sign(det), exact


def _degree_affine(
    f: PolynomialMap, region: _Region, margin_hint: Fraction | None = None
) -> DegreeResult:
    A = f.linear_matrix()
    b = f.constant_vector()
    n = f.num_vars
    det = A.det()
    if det == 0:
        sol = A.solve([-x for x in b])
        if sol is None:
            # no zeros anywhere: degree 0; bound |f| below on the domain
            margin = margin_hint if margin_hint is not None else Fraction(0)
            if margin <= 0:
                # distance from -b to the column space, via normal equations
                At = A.transpose()
                N = At @ A
                rhs = At.apply([-x for x in b])
                y = N.solve(rhs)
                if y is None:
                    raise DegenerateZero("singular affine map defied projection")
                res = [bi + v for bi, v in zip(b, A.apply(y))]
                margin = sqrt_lower(sum(x * x for x in res))
                if margin <= 0:
                    raise DegenerateZero("singular affine map with near zeros")
            return DegreeResult(0, "zero-count", {"zeros": []}, margin)
        raise DegenerateZero("affine map with singular linear part has a zero set")
    x_star = A.solve([-x for x in b])
    lvl, lip = region.signed_level(x_star)
    if lvl == 0:
        raise BoundaryZeroSuspected("affine zero lies exactly on the boundary")
    inv = A.inverse()
    norm1 = max(sum(abs(inv[i, j]) for i in range(n)) for j in range(n))
    norminf = max(sum(abs(inv[i, j]) for j in range(n)) for i in range(n))
    opnorm_inv_ub = sqrt_upper(norm1 * norminf)
    dist_lb = abs(lvl) / lip
    margin = dist_lb / opnorm_inv_ub
    sign = 1 if det > 0 else -1
    inside = lvl < 0
    zeros = (
        [
            {
                "point": [float(x) for x in x_star],
                "det_sign": sign,
                "isolation_radius": None,
            }
        ]
        if inside
        else []
    )
    return DegreeResult(
        value=sign if inside else 0,
        method="zero-count",
        certificate={"zeros": zeros, "affine": True},
        admissibility_margin=margin,
    )


# ---------------------------------------------------------------------------
# zero counting (grid seeding + batched Newton + exact Jacobian signs)


def _newton_zeros(
    f: PolynomialMap, region: _Region, config: DegreeConfig
) -> list[tuple[float, ...]]:
    n = f.num_vars
    fm = _FloatMap(f)
    box = region.seed_box()
    per_axis = config.grid_for(n)
    axes = [np.linspace(lo, hi, per_axis) for lo, hi in box]
    mesh = np.meshgrid(*axes, indexing="ij") if n > 1 else [axes[0]]
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    escape = 4.0 * max(max(abs(lo), abs(hi)) for lo, hi in box) + 1.0

    done: list[np.ndarray] = []
    active = pts
    for _ in range(config.newton_iterations):
        if active.shape[0] == 0:
            break
        F = fm.eval(active)
        res = np.sqrt((F * F).sum(axis=1))
        conv = res < config.tol_residual
        if conv.any():
            done.append(active[conv])
            active = active[~conv]
            F = F[~conv]
            if active.shape[0] == 0:
                break
        J = fm.eval_jacobian(active)
        dets = np.linalg.det(J)
        ok = np.isfinite(dets) & (np.abs(dets) > 1e-300)
        ok &= np.all(np.isfinite(F), axis=1)
        ok &= np.max(np.abs(active), axis=1) < escape
        active = active[ok]
        if active.shape[0] == 0:
            break
        step = np.linalg.solve(J[ok], F[ok][..., None])[..., 0]
        active = active - step

    candidates = np.concatenate(done, axis=0) if done else np.zeros((0, n))
    zeros: list[tuple[float, ...]] = []
    for cand in candidates:
        c = tuple(float(x) for x in cand)
        if any(
            sum((a - b) ** 2 for a, b in zip(c, z)) < config.cluster_radius**2
            for z in zeros
        ):
            continue
        zeros.append(c)
    return zeros


def _exact_det_sign_at(
    f: PolynomialMap, point: tuple[float, ...], tol: float
) -> tuple[int, Fraction]:
    """Sign of det(exact symbolic Jacobian evaluated at the rationalized point)."""
    pt = [Fraction(x) for x in point]
    jac = f.jacobian()
    n = f.num_vars
    m = RationalMatrix([[jac[i][j].eval_exact(pt) for j in range(n)] for i in range(n)])
    det = m.det()
    if abs(det) <= Fraction(tol):
        raise DegenerateZero(
            f"|det J| = {float(det):.3e} at zero near {point}"
        )
    return (1 if det > 0 else -1), det


def _zero_count_degree(
    f: PolynomialMap, region: _Region, config: DegreeConfig, margin: Fraction
) -> DegreeResult:
    n = f.num_vars
    rng = np.random.default_rng(config.seed)
    shift_used: list[str] | None = None
    attempt_map = f
    last_err: DegenerateZero | None = None
    for attempt in range(config.shift_attempts + 1):
        try:
            zeros = _newton_zeros(attempt_map, region, config)
            L = f.lipschitz_bound(region.sup_norm_bound())
            # true zeros sit at distance >= margin/L from the boundary; a
            # polished point much closer than that cannot be classified
            guard = margin / (4 * L + 1)
            total = 0
            kept = []
            for z in zeros:
                lvl, lip = region.signed_level([Fraction(x) for x in z])
                if abs(lvl) <= lip * min(guard, Fraction(1, 10**7)):
                    raise BoundaryZeroSuspected(
                        f"zero at {z} cannot be separated from the boundary"
                    )
                if lvl >= 0:
                    continue
                sign, det = _exact_det_sign_at(attempt_map, z, config.tol_jacobian)
                total += sign
                kept.append((z, sign))
            iso = None
            if len(kept) > 1:
                iso = math.sqrt(
                    min(
                        sum((a - b) ** 2 for a, b in zip(z1, z2))
                        for i, (z1, _) in enumerate(kept)
                        for (z2, _) in kept[i + 1 :]
                    )
                ) / 2
            cert = {
                "zeros": [
                    {
                        "point": list(z),
                        "det_sign": s,
                        "isolation_radius": iso,
                    }
                    for z, s in kept
                ],
            }
            if shift_used:
                cert["regular_value_shift"] = shift_used
            return DegreeResult(
                value=total,
                method="zero-count",
                certificate=cert,
                admissibility_margin=margin,
            )
        except DegenerateZero as err:
            last_err = err
            # shift to a nearby regular value; degree is unchanged because
            # |shift| < margin keeps the straight-line homotopy admissible
            direction = rng.standard_normal(n)
            direction /= max(np.abs(direction).max(), 1e-9)
            scale = margin / (4 * (attempt + 1))
            shift = [
                Fraction(float(d)).limit_denominator(10**6) * scale for d in direction
            ]
            shift_used = [str(s) for s in shift]
            comps = [
                p - Polynomial.constant(n, s)
                for p, s in zip(f.components, shift)
            ]
            attempt_map = PolynomialMap(n, comps)
    raise last_err if last_err else DegenerateZero("zero counting failed")


# ---------------------------------------------------------------------------
# winding method (dimension 2)


def _boundary_loop(region: _Region, segments: int) -> list[tuple[Fraction, Fraction]]:
    """Ordered rational points tracing the boundary once, counterclockwise."""
    if isinstance(region, _BallRegion):
        cx, cy = region.center
        R = region.radius
        pts = []
        h = Fraction(2, segments)
        ts = [Fraction(-1) + h * i for i in range(segments)]
        right = []
        for t in ts:
            den = 1 + t * t
            right.append((cx + R * (1 - t * t) / den, cy + R * 2 * t / den))
        left = []
        for t in ts:
            den = 1 + t * t
            left.append((cx - R * (1 - t * t) / den, cy - R * 2 * t / den))
        return right + left
    if isinstance(region, _BoxRegion):
        (cx, cy), (wx, wy) = region.center, region.half
        corners = [
            (cx - wx, cy - wy),
            (cx + wx, cy - wy),
            (cx + wx, cy + wy),
            (cx - wx, cy + wy),
        ]
        pts = []
        for (x0, y0), (x1, y1) in zip(corners, corners[1:] + corners[:1]):
            for k in range(segments):
                t = Fraction(k, segments)
                pts.append((x0 + (x1 - x0) * t, y0 + (y1 - y0) * t))
        return pts
    raise UnsupportedDimension("winding boundary needs a ball or box")


def _winding_degree(
    f: PolynomialMap, region: _Region, config: DegreeConfig, margin: Fraction
) -> DegreeResult:
    if f.num_vars != 2:
        raise UnsupportedDimension("winding method requires dimension 2")
    pts = _boundary_loop(region, max(8, config.boundary_samples))

    def refine(points):
        """Insert midpoints until consecutive value angles step < pi/2."""
        for _ in range(config.max_refinements + 4):
            vals = [f.eval_exact(p) for p in points]
            if any(v[0] == 0 and v[1] == 0 for v in vals):
                raise BoundaryZeroSuspected("exact zero on the boundary loop")
            angles = [math.atan2(float(v[1]), float(v[0])) for v in vals]
            steps = []
            bad = []
            for i in range(len(points)):
                d = angles[(i + 1) % len(points)] - angles[i]
                while d <= -math.pi:
                    d += 2 * math.pi
                while d > math.pi:
                    d -= 2 * math.pi
                steps.append(d)
                if abs(d) >= math.pi / 2:
                    bad.append(i)
            if not bad:
                return points, steps
            new_pts = []
            bad_set = set(bad)
            for i, p in enumerate(points):
                new_pts.append(p)
                if i in bad_set:
                    q = points[(i + 1) % len(points)]
                    new_pts.append(_midpoint(region, p, q))
            points = new_pts
        raise BoundaryZeroSuspected("winding refinement cap reached")

    points, steps = refine(pts)
    total = sum(steps)
    value = round(total / (2 * math.pi))
    if abs(total - 2 * math.pi * value) > 0.5:
        raise BoundaryZeroSuspected("winding total is far from a multiple of 2 pi")
    return DegreeResult(
        value=int(value),
        method="winding",
        certificate={"samples": len(points), "total_angle": total},
        admissibility_margin=margin,
    )


def _midpoint(region: _Region, p, q):
    """Midpoint of two boundary points, pushed back onto the boundary."""
    mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
    if isinstance(region, _BallRegion):
        cx, cy = region.center
        dx, dy = mx - cx, my - cy
        n2 = dx * dx + dy * dy
        if n2 == 0:
            return p
        scale = region.radius / sqrt_upper(n2)
        # rational approximate re-projection; live with slight inexactness by
        # treating the point as a fresh sample (values still evaluated exactly)
        return (cx + dx * scale, cy + dy * scale)
    return (mx, my)


# ---------------------------------------------------------------------------
# public API


def brouwer_degree(
    f: PolynomialMap,
    domain: Domain,
    method: str = "auto",
    config: DegreeConfig | None = None,
) -> DegreeResult:
    """Certified Brouwer degree of f on the domain boundary-zero-free domain."""
    config = config or DegreeConfig()
    if not f.is_square():
        raise DimensionMismatch("degree needs a self-map")
    if f.num_vars != domain.dim:
        raise DimensionMismatch("map and domain dimensions differ")
    region = _region_for(domain)
    return _degree_on_region(f, region, method, config)


def _degree_on_region(
    f: PolynomialMap, region: _Region, method: str, config: DegreeConfig
) -> DegreeResult:
    n = f.num_vars
    if n == 0:
        raise UnsupportedDimension("zero-dimensional domains have no interior")
    if method == "winding" and n != 2:
        raise UnsupportedDimension("winding method requires dimension 2")
    if n == 1 and method in ("auto", "zero-count"):
        return _degree_1d(f, region)
    if f.is_affine():
        result = _degree_affine(f, region)
        if method == "winding":
            margin = result.admissibility_margin
            return _winding_degree(f, region, config, margin)
        return result
    margin = certify_boundary(f, region, config)
    if method == "auto":
        loop_ok = isinstance(region, (_BallRegion, _BoxRegion))
        method = "winding" if n == 2 and loop_ok else "zero-count"
    if method == "winding":
        return _winding_degree(f, region, config, margin)
    if method == "zero-count":
        return _zero_count_degree(f, region, config, margin)
    raise DomainError(f"unknown method {method!r}")


def degree_on_quadric(
    f: PolynomialMap,
    A: RationalMatrix,
    R2,
    config: DegreeConfig | None = None,
) -> DegreeResult:
    """Degree on the origin-centered region {x : x'Ax <= R^2}.

    This is the fixed-subspace/Galerkin workhorse; A is the Gram matrix of a
    rational basis, so the region is the exact preimage of a Euclidean ball.
    """
    config = config or DegreeConfig()
    if not f.is_square():
        raise DimensionMismatch("degree needs a self-map")
    R2 = Fraction(R2)
    if A.is_identity() and _is_square_rational(R2):
        region: _Region = _BallRegion(
            tuple(Fraction(0) for _ in range(f.num_vars)), _exact_sqrt(R2)
        )
    else:
        region = _QuadricRegion(A, R2)
    return _degree_on_region(f, region, "auto", config)


def _is_square_rational(q: Fraction) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    return rn * rn == q.numerator and rd * rd == q.denominator


def _exact_sqrt(q: Fraction) -> Fraction:
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def equivariant_degree(
    f: PolynomialMap,
    rho: OrthogonalRep,
    domain: Domain,
    marks: TableOfMarks | None = None,
    config: DegreeConfig | None = None,
) -> EquivariantDegree:
    """Burnside-ring-valued degree from fixed-subspace degrees, exactly solved."""
    config = config or DegreeConfig()
    if domain.kind != "ball" or any(c != 0 for c in domain.center):
        raise DomainError("equivariant degree needs an origin-centered ball")
    if f.num_vars != rho.dimension:
        raise DimensionMismatch("map and representation dimensions differ")
    if not check_equivariance(f, rho):
        raise DomainError("map is not equivariant for the representation")
    if marks is None:
        marks = marks_for_group(rho.group)
    table = marks.class_table
    R2 = domain.radius**2
    fixed_vals: list[int] = []
    details: list[tuple[int, DegreeResult | None]] = []
    for idx, cls in enumerate(table.classes):
        S = fixed_subspace(rho, cls.representative, idx)
        if S.dim == 0:
            at_zero = f.eval_exact([Fraction(0)] * f.num_vars)
            fixed_vals.append(1 if all(v == 0 for v in at_zero) else 0)
            details.append((idx, None))
            continue
        fh = restrict_map(f, S)
        B = S.basis_matrix()
        A = gram_matrix([B.column(j) for j in range(B.cols)])
        res = degree_on_quadric(fh, A, R2, config)
        fixed_vals.append(res.value)
        details.append((idx, res))
    vec = MarksVector(tuple(fixed_vals))
    try:
        element = solve_integral(marks, list(vec.values))
    except NonIntegralSolve as err:
        raise NonIntegralSolve(
            f"fixed degrees {vec.values} are not the marks of an integral "
            f"element: {err}"
        ) from err
    member = membership_check(marks, vec)
    if not member.congruences_ok:
        raise NonIntegralSolve(
            "integral solve passed but congruences failed; implementation bug"
        )
    return EquivariantDegree(
        element=element, fixed_degrees=vec, class_results=tuple(details)
    )


def degree_of_cocycle_at_point(cocycle, config: DegreeConfig | None = None) -> int:
    """Integer class of a trivial-group cocycle (either picture)."""
    from . import schwartz as _schwartz

    result = _schwartz.schwartz_index(cocycle, config=config)
    if isinstance(result, int):
        return result
    raise DomainError("cocycle carries a nontrivial group")


def certify_linear_homotopy(
    f: PolynomialMap, g: PolynomialMap, domain: Domain, config: DegreeConfig | None = None
) -> bool:
    """True when (1-t)f + tg is certified admissible for all t in [0,1].

    Uses margin(f) > max |g - f| on the domain,  both sides exact.
    """
    config = config or DegreeConfig()
    region = _region_for(domain)
    if f.num_vars == 1:
        res = _degree_1d(f, region)
        margin = res.admissibility_margin
    elif f.is_affine():
        margin = _degree_affine(f, region).admissibility_margin
    else:
        margin = certify_boundary(f, region, config)
    diff = g.add(f.negate())
    T = region.sup_norm_bound()
    bound2 = sum(
        (p.magnitude_bound(T) ** 2 for p in diff.components), Fraction(0)
    )
    return margin > sqrt_upper(bound2)
