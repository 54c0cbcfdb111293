"""Reduced (marginal) one- and two-particle probability densities.

Single permanent/determinant configurations with distinct quantum
numbers use closed forms: the pair density is the Hartree-plus-exchange
expression and the one-particle density is the orbital-density average.
Everything else (superpositions, repeated quantum numbers) is reduced
numerically: entropy integrals consume the precomputed tensor-grid
values, while off-grid queries re-run the quadrature over the
integrated coordinates at the requested points, so pointwise accuracy
matches the underlying rule instead of an interpolation order.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

from .quadrature import Interval, QuadratureScheme, RealLine, axis_rule
from .wavefunction import ANTISYMMETRIC, DISTINGUISHABLE, SYMMETRIC

__all__ = [
    "ReducedDensity",
    "reduce_to_one",
    "reduce_to_pair",
    "reduce_numerical",
    "quadrature_marginal",
    "export_density_grid",
]

CLOSED_FORM = "closed-form"
QUADRATURE_REDUCED = "quadrature-reduced"


@dataclass(frozen=True)
class ReducedDensity:
    """Evaluatable k-particle probability density (k = 1 or 2)."""

    arity: int
    space: str
    strategy: str
    domains: tuple
    func: object = field(repr=False)  # callable on physical coordinates
    grid_axes: tuple | None = field(default=None, repr=False)
    grid_weights: tuple | None = field(default=None, repr=False)
    grid_values: np.ndarray | None = field(default=None, repr=False)

    def __call__(self, *coords):
        if len(coords) != self.arity:
            raise ValueError(f"expected {self.arity} coordinates")
        return self.func(*coords)

    def integral(self, scheme=None):
        """Quadrature integral over the full domain (should be ~1)."""
        if self.grid_values is not None:
            v = self.grid_values
            for axis in range(v.ndim - 1, -1, -1):
                v = np.tensordot(v, self.grid_weights[axis], axes=([axis], [0]))
            return float(v)
        scheme = scheme or QuadratureScheme()
        axes = [axis_rule(d, scheme, self.arity) for d in self.domains]
        grids = np.meshgrid(*[a[0] for a in axes], indexing="ij", sparse=True)
        v = np.broadcast_to(np.asarray(self.func(*grids), dtype=float),
                            tuple(len(a[0]) for a in axes))
        for axis in range(v.ndim - 1, -1, -1):
            v = np.tensordot(v, axes[axis][1], axes=([axis], [0]))
        return float(v)


def quadrature_marginal(wf, keep, scheme=None):
    """Callable marginal density of the kept coordinates.

    Each call integrates |Psi|^2 over the remaining coordinates with the
    scheme's full-dimension rule, so values at arbitrary points carry
    quadrature accuracy rather than an interpolation order.  Kept
    coordinates broadcast; integrated nodes occupy one trailing axis
    each during evaluation.
    """
    scheme = scheme or QuadratureScheme()
    n_part = wf.nparticles
    keep = tuple(keep)
    away = [i for i in range(n_part) if i not in keep]
    rules = [axis_rule(d, scheme, n_part) for d in wf.domains(n_part)]
    coords = [r[0] for r in rules]
    weights = [r[1] for r in rules]

    def func(*kept_vals):
        kept_vals = np.broadcast_arrays(*(np.asarray(v, dtype=float)
                                          for v in kept_vals))
        lead = kept_vals[0].shape
        pad = (np.newaxis,) * len(away)
        args = [None] * n_part
        for k, v in zip(keep, kept_vals):
            args[k] = v[(...,) + pad]
        for j, i in enumerate(away):
            shape = (1,) * len(lead) + tuple(
                len(coords[i]) if jj == j else 1 for jj in range(len(away)))
            args[i] = coords[i].reshape(shape)
        vals = wf.density(*args)
        for j in range(len(away) - 1, -1, -1):
            vals = np.tensordot(vals, weights[away[j]],
                                axes=([len(lead) + j], [0]))
        return vals if lead else float(vals)

    return func


def _require_single_distinct(wf):
    if wf.symmetry not in (SYMMETRIC, ANTISYMMETRIC):
        raise ValueError("closed-form reduction needs an (anti)symmetrized state")
    if not wf.config.distinct:
        raise ValueError(
            "closed-form reduction needs distinct quantum numbers; "
            "use reduce_numerical for repeated ones")


def reduce_to_one(wf):
    """One-particle density rho(x) = (1/N) sum_i |psi_{n_i}(x)|^2.

    Identical for symmetric and antisymmetric states with the same
    quantum numbers.
    """
    _require_single_distinct(wf)
    cfg = wf.config
    n_part = cfg.nparticles

    def rho(x):
        vals = cfg.orbital_values(x)
        return sum(np.abs(v) ** 2 for v in vals) / n_part

    return ReducedDensity(arity=1, space=cfg.space, strategy=CLOSED_FORM,
                          domains=tuple(cfg.domains(1)), func=rho)


def reduce_to_pair(wf):
    """Two-particle density from the Hartree + exchange closed form.

    For N = 3:  (1/6) [ sum_{i != j} |psi_i(x1)|^2 |psi_j(x2)|^2
                 +/- sum_{i != j} psi_i*(x1) psi_j*(x2) psi_j(x1) psi_i(x2) ]
    with + for symmetric and - for antisymmetric states.  For N = 2 the
    pair density is |Psi|^2 itself.
    """
    _require_single_distinct(wf)
    cfg = wf.config
    if cfg.nparticles == 2:
        def pair2(x1, x2):
            return wf.density(x1, x2)
        return ReducedDensity(arity=2, space=cfg.space, strategy=CLOSED_FORM,
                              domains=tuple(cfg.domains(2)), func=pair2)

    sign = 1.0 if cfg.symmetry == SYMMETRIC else -1.0

    def gamma(x1, x2):
        v1 = cfg.orbital_values(x1)
        v2 = cfg.orbital_values(x2)
        hartree = 0.0
        exchange = 0.0
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                hartree = hartree + np.abs(v1[i]) ** 2 * np.abs(v2[j]) ** 2
                exchange = exchange + np.real(
                    np.conj(v1[i]) * np.conj(v2[j]) * v1[j] * v2[i])
        return (hartree + sign * exchange) / 6.0

    return ReducedDensity(arity=2, space=cfg.space, strategy=CLOSED_FORM,
                          domains=tuple(cfg.domains(2)), func=gamma)


def reduce_numerical(wf, arity, scheme=None, keep=None):
    """k-particle density by quadrature over the remaining coordinates.

    The density is materialized on the scheme's tensor grid for entropy
    integrals; pointwise calls re-run the quadrature over the integrated
    axes at the query points, so off-grid values carry full rule
    accuracy.  ``keep`` selects which coordinates survive (defaults to
    the first ``arity``); it only matters for distinguishable states,
    whose marginals differ per coordinate.
    """
    if arity not in (1, 2):
        raise ValueError("reduced density arity must be 1 or 2")
    scheme = scheme or QuadratureScheme()
    n_part = wf.nparticles
    if arity >= n_part:
        raise ValueError("arity must be smaller than the particle count")
    keep = tuple(keep) if keep is not None else tuple(range(arity))
    if (len(keep) != arity or any(k not in range(n_part) for k in keep)
            or list(keep) != sorted(set(keep))):
        raise ValueError(f"invalid kept-coordinate selection {keep}")

    full_domains = wf.domains(n_part)
    rules = [axis_rule(d, scheme, n_part) for d in full_domains]
    coords = [r[0] for r in rules]
    weights = [r[1] for r in rules]
    dens = wf.density_tensor(coords, weights)

    reduced = dens
    for axis in sorted(set(range(n_part)) - set(keep), reverse=True):
        reduced = np.tensordot(reduced, weights[axis], axes=([axis], [0]))

    kept_domains = tuple(full_domains[k] for k in keep)
    kept_weights = tuple(weights[k] for k in keep)
    kept_coords = tuple(coords[k] for k in keep)
    func = quadrature_marginal(wf, keep, scheme)

    return ReducedDensity(arity=arity, space=wf.space,
                          strategy=QUADRATURE_REDUCED, domains=kept_domains,
                          func=func, grid_axes=kept_coords,
                          grid_weights=kept_weights, grid_values=reduced)


def _default_plot_range(domain):
    if isinstance(domain, Interval):
        return domain.a, domain.b
    # cover the bulk of a mapped infinite axis; tails are negligible there
    return -0.75 * domain.scale, 0.75 * domain.scale


def export_density_grid(density, n_points=101, bounds=None, out=None):
    """Tabulate a pair density as CSV rows ``x1,x2,value``.

    Row-major over an equispaced grid; 12 significant digits.  ``out``
    may be a path or a file-like object; with ``out=None`` the CSV text
    is returned.
    """
    if density.arity != 2:
        raise ValueError("grid export requires a pair density")
    if bounds is None:
        bounds = tuple(_default_plot_range(d) for d in density.domains)
    (a1, b1), (a2, b2) = bounds
    x1 = np.linspace(a1, b1, n_points)
    x2 = np.linspace(a2, b2, n_points)
    vals = density(x1[:, None], x2[None, :])

    head = "p1,p2,value" if density.space == "momentum" else "x1,x2,value"
    buf = io.StringIO()
    buf.write(head + "\n")
    for i in range(n_points):
        for j in range(n_points):
            buf.write(f"{x1[i]:.12g},{x2[j]:.12g},{vals[i, j]:.12g}\n")
    text = buf.getvalue()
    if out is None:
        return text
    if hasattr(out, "write"):
        out.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
    return None
