"""Two-configuration superposition states and mixing-coefficient scans.

A superposition c1*Psi_A + c2*Psi_B (real coefficients, c1^2 + c2^2 = 1)
adds quantum-interference cross terms 2 c1 c2 Re(Psi_A* Psi_B) to the
density.  The ``interference`` flag drops those cross terms, which models
a classical mixture of the two configuration densities (that mixture is
normalized by construction, so no renormalization is needed; with
interference on and non-orthogonal components the density is divided by
1 + 2 c1 c2 Re<A|B>).

Reductions of superpositions always go through the numerical tensor-grid
path.  ``scan_coefficient`` reuses the component amplitude grids across
all samples, so a full coefficient scan costs little more than a single
report.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .information import compute_report
from .quadrature import QuadratureScheme, axis_rule
from .wavefunction import (
    ANTISYMMETRIC,
    DISTINGUISHABLE,
    SYMMETRIC,
    Configuration,
    build,
)

__all__ = [
    "SuperpositionSpec",
    "SuperposedWaveFunction",
    "ScanResult",
    "build_superposition",
    "scan_coefficient",
    "DEFAULT_C1SQ_GRID",
]

# resolves the extremum near c1^2 = 0.5 at plot resolution
DEFAULT_C1SQ_GRID = tuple(round(0.05 * i, 2) for i in range(21))


@dataclass(frozen=True)
class SuperpositionSpec:
    """Two configurations, a mixing coefficient, and the interference flag."""

    state_a: Configuration
    state_b: Configuration
    c1: float
    interference: bool = True

    def __post_init__(self):
        if not -1.0 <= self.c1 <= 1.0:
            raise ValueError("c1 must lie in [-1, 1]")
        a, b = self.state_a, self.state_b
        if a.params != b.params or a.space != b.space \
                or a.symmetry != b.symmetry or a.nparticles != b.nparticles:
            raise ValueError(
                "superposed configurations must share model, space, "
                "symmetry class and particle count")

    @property
    def c2(self):
        return math.sqrt(max(0.0, 1.0 - self.c1 * self.c1))


def _component_overlap(cfg_a, cfg_b):
    """<Psi_A|Psi_B> over an orthonormal orbital basis (exact, via deltas)."""
    if cfg_a.symmetry == DISTINGUISHABLE:
        return float(all(na == nb for na, nb in zip(cfg_a.ns, cfg_b.ns)))
    n = cfg_a.nparticles
    s = np.array([[1.0 if na == nb else 0.0 for nb in cfg_b.ns]
                  for na in cfg_a.ns])
    if cfg_a.symmetry == ANTISYMMETRIC:
        return float(np.linalg.det(s))
    perm = sum(math.prod(s[i, p[i]] for i in range(n))
               for p in itertools.permutations(range(n)))
    norm_a = build(cfg_a).norm_factor
    norm_b = build(cfg_b).norm_factor
    # <A|B> = norm_a norm_b sum_{P,Q} prod delta = norm_a norm_b N! perm(S)
    return float(perm) * norm_a * norm_b * math.factorial(n)


class SuperposedWaveFunction:
    """c1*Psi_A + c2*Psi_B with an optional interference toggle."""

    def __init__(self, spec):
        self.spec = spec
        self.wf_a = build(spec.state_a)
        self.wf_b = build(spec.state_b)
        self.c1 = float(spec.c1)
        self.c2 = float(spec.c2)
        self.interference = bool(spec.interference)
        self.overlap = _component_overlap(spec.state_a, spec.state_b)
        self.norm_sq = 1.0 + 2.0 * self.c1 * self.c2 * self.overlap \
            if self.interference else 1.0
        if self.norm_sq <= 0:
            raise ValueError("superposition has vanishing norm")

    @property
    def nparticles(self):
        return self.spec.state_a.nparticles

    @property
    def space(self):
        return self.spec.state_a.space

    @property
    def symmetry(self):
        return self.spec.state_a.symmetry

    @property
    def label(self):
        s = self.spec
        tag = "" if self.interference else ", no interference"
        return (f"superposition c1^2={self.c1**2:.3f} of ns={s.state_a.ns} "
                f"and ns={s.state_b.ns} ({self.symmetry}{tag})")

    def domains(self, arity=None):
        return self.spec.state_a.domains(arity)

    def amplitude(self, *coords):
        if not self.interference:
            raise ValueError("an interference-free mixture has no amplitude")
        return (self.c1 * self.wf_a.amplitude(*coords)
                + self.c2 * self.wf_b.amplitude(*coords)) / math.sqrt(self.norm_sq)

    def density(self, *coords):
        da = self.wf_a.density(*coords)
        db = self.wf_b.density(*coords)
        out = self.c1**2 * da + self.c2**2 * db
        if self.interference:
            cross = np.real(np.conj(self.wf_a.amplitude(*coords))
                            * self.wf_b.amplitude(*coords))
            out = (out + 2.0 * self.c1 * self.c2 * cross) / self.norm_sq
        return out

    def density_tensor(self, axes, weights=None):
        amp_a = self.wf_a.amplitude_tensor(axes)
        amp_b = self.wf_b.amplitude_tensor(axes)
        da = np.abs(amp_a) ** 2
        db = np.abs(amp_b) ** 2
        out = self.c1**2 * da + self.c2**2 * db
        if self.interference:
            out = (out + 2.0 * self.c1 * self.c2 * np.real(np.conj(amp_a) * amp_b)) \
                / self.norm_sq
        return out


def build_superposition(spec):
    return SuperposedWaveFunction(spec)


def _component_grid_cache(wf_a, wf_b):
    """Shared per-scan cache of component density/cross grids.

    Returns a lookup (keep, axes, scheme) -> (da, db, cross) where the
    non-kept coordinates are already integrated out with the scheme's
    3D rule.  Grids depend only on the components, not on c1, so one
    evaluation serves every sample of a scan.
    """
    cache = {}

    def lookup(keep, axes, scheme):
        key = (tuple(keep), tuple(len(a) for a in axes), scheme)
        if key not in cache:
            xi, wi = axis_rule(wf_a.domains(1)[0], scheme, wf_a.nparticles)
            kept = iter(axes)
            full_axes = [next(kept) if i in keep else xi
                         for i in range(wf_a.nparticles)]
            amp_a = wf_a.amplitude_tensor(full_axes)
            amp_b = wf_b.amplitude_tensor(full_axes)
            da = np.abs(amp_a) ** 2
            db = np.abs(amp_b) ** 2
            cross = np.real(np.conj(amp_a) * amp_b)
            away = [i for i in range(wf_a.nparticles) if i not in keep]
            for i in sorted(away, reverse=True):
                da = np.tensordot(da, wi, axes=([i], [0]))
                db = np.tensordot(db, wi, axes=([i], [0]))
                cross = np.tensordot(cross, wi, axes=([i], [0]))
            cache[key] = (da, db, cross)
        return cache[key]

    return lookup


class _CachedMixture:
    """Mixture density backed by a per-scan component grid cache."""

    def __init__(self, template, c1, grid_lookup, scheme):
        self.spec = SuperpositionSpec(template.state_a, template.state_b,
                                      c1, template.interference)
        self._full = SuperposedWaveFunction(self.spec)
        self._lookup = grid_lookup
        self._scheme = scheme

    def __getattr__(self, name):
        if name.startswith("_"):
            raise AttributeError(name)
        return getattr(self._full, name)

    def _combine(self, da, db, cross):
        c1, c2 = self._full.c1, self._full.c2
        out = c1**2 * da + c2**2 * db
        if self._full.interference:
            out = (out + 2.0 * c1 * c2 * cross) / self._full.norm_sq
        return out

    def density_tensor(self, axes, weights=None):
        da, db, cross = self._lookup(tuple(range(len(axes))), tuple(axes),
                                     self._scheme)
        return self._combine(da, db, cross)

    def marginal_values(self, keep, axes, scheme):
        return self._combine(*self._lookup(keep, tuple(axes), scheme))


@dataclass(frozen=True)
class ScanResult:
    """Information reports sampled over the mixing coefficient c1^2."""

    samples: tuple  # of (c1sq, InformationReport)
    errors: tuple   # of (c1sq, error message) for failed samples
    spec: SuperpositionSpec
    scheme: QuadratureScheme

    CSV_HEADER = "c1sq,s1,s2,s3,I_pair,I3,I_rho_gamma,I_gamma_gamma,I_higher"

    def to_csv(self):
        lines = [self.CSV_HEADER]
        for c1sq, rep in self.samples:
            e = rep.entropies
            row = [c1sq, e.s1, e.s2, e.s3, rep.i_pair, rep.i_total3,
                   rep.i_one_pair, rep.i_pair_pair, rep.i_higher]
            lines.append(",".join(f"{v:.12g}" for v in row))
        return "\n".join(lines) + "\n"

    def argmax_higher(self):
        """c1^2 sample at which the higher-order measure peaks."""
        return max(self.samples, key=lambda s: s[1].i_higher)[0]

    def argmin_higher(self):
        return min(self.samples, key=lambda s: s[1].i_higher)[0]


def scan_coefficient(spec_template, c1sq_samples=DEFAULT_C1SQ_GRID,
                     scheme=None, with_error=False):
    """Scan c1^2 over the given samples, one InformationReport each.

    The component amplitudes are evaluated once on the scheme's 3D grid
    and shared by all samples.  Per-sample failures are collected in
    ``errors``; the remaining samples are still returned.
    """
    scheme = scheme or QuadratureScheme()
    samples = sorted(float(c) for c in c1sq_samples)
    if len(samples) < 3:
        raise ValueError("a coefficient scan needs at least 3 samples")
    if samples[0] < 0.0 or samples[-1] > 1.0 or len(set(samples)) != len(samples):
        raise ValueError("c1^2 samples must be distinct values in [0, 1]")

    wf_a = build(spec_template.state_a)
    wf_b = build(spec_template.state_b)
    lookup = _component_grid_cache(wf_a, wf_b)

    results = []
    errors = []
    for c1sq in samples:
        mix = _CachedMixture(spec_template, math.sqrt(c1sq), lookup, scheme)
        try:
            rep = compute_report(mix, scheme, with_error=with_error)
        except Exception as exc:  # keep partial scan results
            errors.append((c1sq, str(exc)))
            continue
        results.append((c1sq, rep))
    return ScanResult(samples=tuple(results), errors=tuple(errors),
                      spec=spec_template, scheme=scheme)
