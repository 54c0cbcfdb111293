"""Tensor-product quadrature on finite boxes and the real line.

Composite Gauss-Legendre is the workhorse; a truncated tanh-sinh rule is
available as an alternative for integrands with stronger endpoint
singularities.  Infinite domains are handled by the algebraic map
p = S*u/(1 - u^2), so every integral runs over a finite box internally.
Error estimates come from comparing two panel-refinement levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import xlogy

__all__ = [
    "Interval",
    "RealLine",
    "QuadratureScheme",
    "IntegralResult",
    "NonConvergenceError",
    "gauss_panels",
    "tanh_sinh_rule",
    "axis_rule",
    "momentum_map",
    "integrate",
    "entropy_integrand",
    "entropy_from_values",
]

# -d*ln(d) is treated as exactly 0 below this; avoids log underflow noise
DENSITY_FLOOR = 1e-300
# quadrature round-off can push densities slightly negative
NEGATIVE_NOISE_TOL = 1e-12


class NonConvergenceError(RuntimeError):
    """Raised when refinement fails to reach the requested tolerance."""

    def __init__(self, message, achieved_error):
        super().__init__(f"{message} (achieved error estimate {achieved_error:.3e})")
        self.achieved_error = achieved_error


@dataclass(frozen=True)
class Interval:
    """Finite integration interval [a, b]."""

    a: float
    b: float

    def __post_init__(self):
        if not self.b > self.a:
            raise ValueError(f"empty interval [{self.a}, {self.b}]")


@dataclass(frozen=True)
class RealLine:
    """The real line, integrated through u -> scale*u/(1-u^2)."""

    scale: float

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError("map scale must be positive")


@dataclass(frozen=True)
class QuadratureScheme:
    """Rule family and resolution for the integration engine.

    ``panels`` applies to 1D and 2D integrals, ``panels_3d`` to 3D ones;
    the ``line_*`` counts are used on mapped infinite axes.  Node count
    per axis is panels * nodes_per_panel.
    """

    rule: str = "gauss-legendre"  # or "tanh-sinh"
    panels: int = 24
    panels_3d: int = 16
    line_panels: int = 32
    line_panels_3d: int = 24
    nodes_per_panel: int = 10
    target_abs_tol: float = 5e-5

    def __post_init__(self):
        if self.rule not in ("gauss-legendre", "tanh-sinh"):
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        for name in ("panels", "panels_3d", "line_panels", "line_panels_3d", "nodes_per_panel"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if min(self.panels, self.panels_3d, self.line_panels, self.line_panels_3d) \
                * self.nodes_per_panel < 16:
            raise ValueError("fewer than 16 nodes per axis")
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be positive")

    def panels_for(self, domain, ndim):
        if isinstance(domain, RealLine):
            return self.line_panels_3d if ndim >= 3 else self.line_panels
        return self.panels_3d if ndim >= 3 else self.panels

    def coarsened(self):
        """Half the panel counts; used for the two-level error estimate."""
        floor = -(-16 // self.nodes_per_panel)  # keep >= 16 nodes per axis
        return replace(
            self,
            panels=max(floor, self.panels // 2),
            panels_3d=max(floor, self.panels_3d // 2),
            line_panels=max(floor, self.line_panels // 2),
            line_panels_3d=max(floor, self.line_panels_3d // 2),
        )


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error_estimate: float
    nodes_used: int


def gauss_panels(a, b, panels, nodes_per_panel):
    """Composite Gauss-Legendre nodes and weights on [a, b]."""
    t, w = leggauss(nodes_per_panel)
    edges = np.linspace(a, b, panels + 1)
    half = np.diff(edges) / 2.0
    mid = (edges[:-1] + edges[1:]) / 2.0
    x = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    wts = (half[:, None] * w[None, :]).ravel()
    return x, wts


def tanh_sinh_rule(a, b, n_nodes, t_max=3.2):
    """Truncated tanh-sinh (double-exponential) rule on [a, b]."""
    t = np.linspace(-t_max, t_max, n_nodes)
    h = t[1] - t[0]
    s = np.sinh(t) * (math.pi / 2)
    g = np.tanh(s)
    dg = (math.pi / 2) * np.cosh(t) / np.cosh(s) ** 2
    half = (b - a) / 2.0
    x = (a + b) / 2.0 + half * g
    w = half * dg * h
    return x, w


def momentum_map(u, scale):
    """Map u in (-1, 1) to the real line; returns (p, jacobian).

    p = scale*u/(1-u^2), odd in u, with dp/du = scale*(1+u^2)/(1-u^2)^2.
    """
    u = np.asarray(u, dtype=float)
    if np.any(np.abs(u) >= 1.0):
        raise ValueError("mapped coordinate must satisfy |u| < 1")
    one_minus = 1.0 - u * u
    p = scale * u / one_minus
    jac = scale * (1.0 + u * u) / one_minus**2
    return p, jac


def axis_rule(domain, scheme, ndim=1):
    """Nodes and weights along one axis of the given domain.

    For RealLine the returned nodes are physical (momentum) coordinates
    and the weights already carry the map jacobian.
    """
    panels = scheme.panels_for(domain, ndim)
    if isinstance(domain, Interval):
        a, b = domain.a, domain.b
    else:
        a, b = -1.0, 1.0
    if scheme.rule == "gauss-legendre":
        x, w = gauss_panels(a, b, panels, scheme.nodes_per_panel)
    else:
        x, w = tanh_sinh_rule(a, b, panels * scheme.nodes_per_panel)
    if isinstance(domain, RealLine):
        x, jac = momentum_map(x, domain.scale)
        w = w * jac
    return x, w


def _tensor_integral(f, domains, scheme):
    ndim = len(domains)
    axes = [axis_rule(d, scheme, ndim) for d in domains]
    coords = [a[0] for a in axes]
    weights = [a[1] for a in axes]
    nodes_used = 1
    for c in coords:
        nodes_used *= len(c)
    grids = np.meshgrid(*coords, indexing="ij", sparse=True)
    vals = np.asarray(f(*grids), dtype=float)
    # broadcast f over sparse grids if it returned a scalar or partial shape
    full_shape = tuple(len(c) for c in coords)
    vals = np.broadcast_to(vals, full_shape)
    for axis in range(ndim - 1, -1, -1):
        vals = np.tensordot(vals, weights[axis], axes=([axis], [0]))
    return float(vals), nodes_used


def integrate(f, domains, scheme=None, require_tol=False):
    """Integrate f over a 1-3 dimensional product domain.

    ``f`` must accept one broadcastable array argument per coordinate and
    return values of matching shape.  The error estimate is the
    difference against a run with half the panels per axis.
    """
    scheme = scheme or QuadratureScheme()
    if not 1 <= len(domains) <= 3:
        raise ValueError("only 1-3 dimensional integrals are supported")
    fine, nodes = _tensor_integral(f, domains, scheme)
    coarse, _ = _tensor_integral(f, domains, scheme.coarsened())
    err = abs(fine - coarse)
    if require_tol and err > scheme.target_abs_tol:
        raise NonConvergenceError(
            "integral did not reach the target tolerance", err)
    return IntegralResult(value=fine, error_estimate=err, nodes_used=nodes)


def entropy_integrand(density_value):
    """-d*ln(d) with the x*ln(x) -> 0 limit at d = 0; never NaN.

    Small negative values (quadrature noise) are clamped to zero;
    anything below -1e-12 is rejected.
    """
    d = np.asarray(density_value, dtype=float)
    if np.any(d < -NEGATIVE_NOISE_TOL):
        raise ValueError("density value significantly negative")
    d = np.where(d < DENSITY_FLOOR, 0.0, d)
    return -xlogy(d, d)


def entropy_from_values(values, weight_axes):
    """Shannon entropy -sum w * d ln d of density values on a tensor grid.

    ``weight_axes`` is a sequence of per-axis weight vectors matching the
    shape of ``values``.  3D grids are consumed slice-wise to bound
    temporary memory.
    """
    d = values
    if d.ndim != len(weight_axes):
        raise ValueError("weight axes do not match value dimensions")
    if d.ndim == 3:
        w0 = weight_axes[0]
        w12 = np.outer(weight_axes[1], weight_axes[2])
        total = 0.0
        for i in range(d.shape[0]):
            total += w0[i] * float(np.sum(w12 * entropy_integrand(d[i])))
        return total
    g = entropy_integrand(d)
    for axis in range(g.ndim - 1, -1, -1):
        g = np.tensordot(g, weight_axes[axis], axes=([axis], [0]))
    return float(g)
