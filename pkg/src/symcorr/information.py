"""Shannon entropies (arity 1-3) and the mutual-information hierarchy.

The five correlation measures are computed from entropy combinations:

    I      = 2 s1 - s2                 (pair mutual information, >= 0)
    I3     = 3 s1 - s3                 (total three-variable correlation)
    I_rg   = s1 + s2 - s3              (one variable vs a pair)
    I_gg   = 2 s2 - s1 - s3            (pair vs pair)
    I^3    = 3 s2 - 3 s1 - s3          (higher-order; may be negative)

Consecutive hierarchy differences all equal the pair mutual information,
which makes the hierarchy an algebraic identity here.  Direct-integral
evaluations of I and I^3 exist purely as validation cross-checks; the
combination form needs one well-conditioned 3D integral instead of a 3D
integrand containing a ratio of six densities.

For distinguishable (Hartree-type) states the marginals differ per
coordinate; s1 and s2 are then the averages over coordinates/pairs,
which reproduces the distinguishable-system decomposition of I^3 exactly
and keeps the hierarchy identities intact.  All values are in nats.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .densities import quadrature_marginal, reduce_to_one, reduce_to_pair
from .orbitals import MOMENTUM, POSITION
from .quadrature import (
    QuadratureScheme,
    axis_rule,
    entropy_from_values,
    entropy_integrand,
)
from .wavefunction import (
    ANTISYMMETRIC,
    DISTINGUISHABLE,
    SYMMETRIC,
    Configuration,
    WaveFunction,
    build,
)

__all__ = [
    "EntropyTriple",
    "InformationReport",
    "entropy",
    "compute_report",
    "mutual_information_pair_direct",
    "mutual_information_higher_direct",
    "entropy_sum_check",
    "cumulant3",
    "ENTROPIC_BOUND",
]

ENTROPIC_BOUND = 1.0 + math.log(math.pi)

_LOG_FLOOR = 1e-300


@dataclass(frozen=True)
class EntropyTriple:
    """One-, two- and three-particle Shannon entropies (nats)."""

    s1: float
    s2: float
    s3: float
    space: str
    error_estimate: float | None = None


@dataclass(frozen=True)
class InformationReport:
    """Entropy triple plus the five correlation measures for one system."""

    entropies: EntropyTriple
    i_pair: float
    i_total3: float
    i_one_pair: float
    i_pair_pair: float
    i_higher: float
    space: str
    system: str

    def hierarchy_residuals(self):
        """Deviations of the three consecutive differences from i_pair."""
        d1 = self.i_total3 - self.i_one_pair
        d2 = self.i_one_pair - self.i_pair_pair
        d3 = self.i_pair_pair - self.i_higher
        raw = 2 * self.entropies.s1 - self.entropies.s2
        return (d1 - raw, d2 - raw, d3 - raw)

    def as_dict(self):
        e = self.entropies
        return {
            "system": self.system,
            "space": self.space,
            "s1": e.s1,
            "s2": e.s2,
            "s3": e.s3,
            "I_pair": self.i_pair,
            "I3": self.i_total3,
            "I_rho_gamma": self.i_one_pair,
            "I_gamma_gamma": self.i_pair_pair,
            "I_higher": self.i_higher,
            "error_estimate": e.error_estimate,
        }


def _as_wavefunction(system):
    if isinstance(system, Configuration):
        return build(system)
    return system


def _axis(wf, ndim, scheme):
    return axis_rule(wf.domains(1)[0], scheme, ndim)


def entropy(density, scheme=None):
    """-integral d ln d for a ReducedDensity, wavefunction, or |Psi|^2 grid."""
    scheme = scheme or QuadratureScheme()
    if isinstance(density, WaveFunction) or hasattr(density, "density_tensor"):
        wf = density
        n = wf.nparticles
        x, w = _axis(wf, n, scheme)
        vals = wf.density_tensor([x] * n)
        return entropy_from_values(vals, [w] * n)
    if getattr(density, "grid_values", None) is not None:
        return entropy_from_values(density.grid_values,
                                   list(density.grid_weights))
    rules = [axis_rule(d, scheme, density.arity) for d in density.domains]
    coords = [r[0] for r in rules]
    if density.arity == 1:
        vals = np.asarray(density(coords[0]), dtype=float)
    else:
        vals = np.asarray(density(coords[0][:, None], coords[1][None, :]),
                          dtype=float)
    return entropy_from_values(vals, [r[1] for r in rules])


def _entropies_closed_form(wf, scheme):
    """(s1, s2, s3) for a single distinct-quantum-number (anti)symmetric state."""
    rho = reduce_to_one(wf)
    gamma = reduce_to_pair(wf)
    s1 = entropy(rho, scheme)
    s2 = entropy(gamma, scheme)
    s3 = entropy(wf, scheme)
    return s1, s2, s3


def _marginal_values(wf, scheme, keep, axes):
    """Marginal density values on a tensor grid of the given axes.

    Superposition scans install a ``marginal_values`` hook that reuses
    cached component grids; everything else integrates |Psi|^2 directly.
    """
    hook = getattr(wf, "marginal_values", None)
    if hook is not None:
        return hook(keep, axes, scheme)
    func = quadrature_marginal(wf, keep, scheme)
    if len(keep) == 1:
        return np.asarray(func(axes[0]), dtype=float)
    return np.asarray(func(axes[0][:, None], axes[1][None, :]), dtype=float)


def _entropies_numerical(wf, scheme):
    """(s1, s2, s3) by quadrature reduction of |Psi|^2.

    Used for superpositions, repeated quantum numbers and distinguishable
    states.  Marginal entropies run on the same 1D/2D rules as the
    closed-form path, so the two paths agree to quadrature accuracy; for
    distinguishable states the per-coordinate entropies are averaged.
    """
    x3, w3 = _axis(wf, 3, scheme)
    d3 = wf.density_tensor([x3] * 3, [w3] * 3)
    s3 = entropy_from_values(d3, [w3] * 3)
    x2, w2 = _axis(wf, 2, scheme)
    x1, w1 = _axis(wf, 1, scheme)
    if wf.symmetry == DISTINGUISHABLE:
        pair_keeps = [(0, 1), (0, 2), (1, 2)]
        one_keeps = [(0,), (1,), (2,)]
    else:
        pair_keeps = [(0, 1)]
        one_keeps = [(0,)]
    s2 = float(np.mean([
        entropy_from_values(_marginal_values(wf, scheme, k, (x2, x2)), [w2, w2])
        for k in pair_keeps]))
    s1 = float(np.mean([
        entropy_from_values(_marginal_values(wf, scheme, k, (x1,)), [w1])
        for k in one_keeps]))
    return s1, s2, s3


def _entropies_product(wf, scheme):
    """(s1, s2, s3) for a Hartree product, via separability.

    The joint density factorizes, so the pair and triple entropies are
    sums of per-coordinate 1D entropies; averaged over coordinates this
    gives s2 = 2 s1 and s3 = 3 s1 and every correlation measure vanishes
    identically, reproducing the distinguishable-system decomposition.
    """
    x1, w1 = _axis(wf, 1, scheme)
    per_coord = [entropy_from_values(np.abs(v) ** 2, [w1])
                 for v in wf.config.orbital_values(x1)]
    s1 = float(np.mean(per_coord))
    return s1, 2.0 * s1, 3.0 * s1


def _entropy_triple(wf, scheme, with_error=True):
    single = isinstance(wf, WaveFunction)
    closed = (single and wf.symmetry in (SYMMETRIC, ANTISYMMETRIC)
              and wf.config.distinct and wf.nparticles == 3)
    if single and wf.symmetry == DISTINGUISHABLE:
        calc = _entropies_product
    else:
        calc = _entropies_closed_form if closed else _entropies_numerical
    s1, s2, s3 = calc(wf, scheme)
    err = None
    if with_error:
        c1, c2, c3 = calc(wf, scheme.coarsened())
        err = max(abs(s1 - c1), abs(s2 - c2), abs(s3 - c3))
    return EntropyTriple(s1=s1, s2=s2, s3=s3, space=wf.space,
                         error_estimate=err)


def _describe(wf):
    if isinstance(wf, WaveFunction):
        cfg = wf.config
        p = cfg.params
        model = f"box L={p.L:g}" if p.kind == "box" else f"ho omega={p.omega:g}"
        return f"{model} ns={cfg.ns} {cfg.symmetry}"
    return getattr(wf, "label", "superposition")


def compute_report(system, scheme=None, with_error=True):
    """Full InformationReport for a three-particle system.

    ``system`` is a Configuration, a WaveFunction, or a superposed
    wavefunction exposing ``density_tensor``.  Pair mutual information in
    [-tol, 0) from quadrature noise is clamped to zero with a warning;
    larger negative values raise.
    """
    scheme = scheme or QuadratureScheme()
    wf = _as_wavefunction(system)
    if wf.nparticles != 3:
        raise ValueError("information reports are defined for 3-particle systems")
    tri = _entropy_triple(wf, scheme, with_error)
    s1, s2, s3 = tri.s1, tri.s2, tri.s3
    i_pair = 2 * s1 - s2
    if i_pair < 0:
        if i_pair < -scheme.target_abs_tol:
            raise RuntimeError(
                f"pair mutual information {i_pair:.3e} is negative beyond "
                "quadrature tolerance; internal inconsistency")
        if i_pair < -1e-12:
            warnings.warn("pair mutual information clamped to 0 "
                          f"(quadrature noise {i_pair:.3e})")
        i_pair = 0.0
    return InformationReport(
        entropies=tri,
        i_pair=i_pair,
        i_total3=3 * s1 - s3,
        i_one_pair=s1 + s2 - s3,
        i_pair_pair=2 * s2 - s1 - s3,
        i_higher=3 * s2 - 3 * s1 - s3,
        space=wf.space,
        system=_describe(wf),
    )


def _node_densities(wf, scheme):
    """(x, w, d3, gamma_nodes, rho_nodes) on the 3D tensor grid."""
    x, w = _axis(wf, 3, scheme)
    d3 = wf.density_tensor([x] * 3, [w] * 3)
    single = isinstance(wf, WaveFunction)
    if single and wf.symmetry in (SYMMETRIC, ANTISYMMETRIC) and wf.config.distinct:
        gamma = np.asarray(reduce_to_pair(wf)(x[:, None], x[None, :]), dtype=float)
        rho = np.asarray(reduce_to_one(wf)(x), dtype=float)
    else:
        gamma = np.tensordot(d3, w, axes=([2], [0]))
        rho = np.tensordot(gamma, w, axes=([1], [0]))
    return x, w, d3, gamma, rho


def mutual_information_pair_direct(system, scheme=None):
    """Pair mutual information from its defining integral (validation mode).

    integral Gamma ln[ Gamma / (rho(x1) rho(x2)) ]; indistinguishable
    systems only.
    """
    scheme = scheme or QuadratureScheme()
    wf = _as_wavefunction(system)
    if wf.symmetry == DISTINGUISHABLE:
        raise ValueError("direct pair integral assumes indistinguishable marginals")
    single = isinstance(wf, WaveFunction)
    if single and wf.config.distinct and wf.nparticles == 3:
        x, w = _axis(wf, 2, scheme)
        gamma = np.asarray(reduce_to_pair(wf)(x[:, None], x[None, :]), dtype=float)
        rho = np.asarray(reduce_to_one(wf)(x), dtype=float)
    else:
        x, w, _, gamma, rho = _node_densities(wf, scheme)
    mask = gamma > _LOG_FLOOR
    denom = np.maximum(np.outer(rho, rho), _LOG_FLOOR)
    wmat = np.outer(w, w)
    g = gamma[mask]
    return float(np.sum(wmat[mask] * g * (np.log(g) - np.log(denom[mask]))))


def mutual_information_higher_direct(system, scheme=None):
    """Higher-order mutual information from its defining 3D integral.

    integral |Psi|^2 ln[ |Psi|^2 rho(x1) rho(x2) rho(x3)
                         / (Gamma(x1,x2) Gamma(x1,x3) Gamma(x2,x3)) ].
    Validation mode; indistinguishable systems only.
    """
    scheme = scheme or QuadratureScheme()
    wf = _as_wavefunction(system)
    if wf.symmetry == DISTINGUISHABLE:
        raise ValueError("direct higher-order integral assumes "
                         "indistinguishable marginals")
    x, w, d3, gamma, rho = _node_densities(wf, scheme)
    log_rho = np.log(np.maximum(rho, _LOG_FLOOR))
    log_gamma = np.log(np.maximum(gamma, _LOG_FLOOR))
    w23 = np.outer(w, w)
    total = 0.0
    for i in range(len(x)):
        d = d3[i]
        mask = d > _LOG_FLOOR
        if not mask.any():
            continue
        log_arg = (np.log(np.where(mask, d, 1.0))
                   + log_rho[i] + log_rho[:, None] + log_rho[None, :]
                   - log_gamma[i][:, None] - log_gamma[i][None, :] - log_gamma)
        total += w[i] * float(np.sum((w23 * d * log_arg)[mask]))
    return total


def entropy_sum_check(params, ns, symmetry, scheme=None):
    """One-particle entropy sum s_x + s_p against the 1 + ln(pi) bound.

    Returns (entropy_sum, bound, satisfied).
    """
    scheme = scheme or QuadratureScheme()
    sums = {}
    for space in (POSITION, MOMENTUM):
        cfg = Configuration(params=params, ns=ns, symmetry=symmetry, space=space)
        wf = build(cfg)
        if wf.symmetry in (SYMMETRIC, ANTISYMMETRIC) and cfg.distinct:
            sums[space] = entropy(reduce_to_one(wf), scheme)
        else:
            x, w = _axis(wf, 3, scheme)
            d3 = wf.density_tensor([x] * 3, [w] * 3)
            g = np.tensordot(d3, w, axes=([2], [0]))
            rho = np.tensordot(g, w, axes=([1], [0]))
            sums[space] = entropy_from_values(rho, [w])
    total = sums[POSITION] + sums[MOMENTUM]
    return total, ENTROPIC_BOUND, bool(total >= ENTROPIC_BOUND - 1e-9)


def cumulant3(system, scheme=None):
    """Third-order cumulant <x1 x2 x3> - 3 <xi xj> <x> + 2 <x>^3.

    Moments are taken over rho, Gamma and |Psi|^2; the cumulant vanishes
    identically for indistinguishable particles.  For distinguishable
    systems the value is reported with coordinate-averaged moments and no
    zero assertion applies.
    """
    scheme = scheme or QuadratureScheme()
    wf = _as_wavefunction(system)
    x, w, d3, gamma, rho = _node_densities(wf, scheme)
    if wf.symmetry == DISTINGUISHABLE:
        # coordinate-averaged moments from the full density
        g13 = np.tensordot(d3, w, axes=([1], [0]))
        g23 = np.tensordot(d3, w, axes=([0], [0]))
        rho1 = np.tensordot(gamma, w, axes=([1], [0]))
        rho2 = np.tensordot(gamma, w, axes=([0], [0]))
        rho3 = np.tensordot(g13, w, axes=([0], [0]))
        wx = w * x
        m1 = float(np.mean([wx @ r for r in (rho1, rho2, rho3)]))
        m2 = float(np.mean([wx @ g @ wx for g in (gamma, g13, g23)]))
    else:
        wx = w * x
        m1 = float(wx @ rho)
        m2 = float(wx @ gamma @ wx)
    m3 = float(np.einsum("i,j,k,ijk->", wx, wx, wx, d3, optimize=True))
    return m3 - 3.0 * m2 * m1 + 2.0 * m1**3
