"""N-particle wavefunctions (N = 2, 3) from single-particle orbitals.

Symmetric states are permanents, antisymmetric states Slater
determinants, and distinguishable states plain Hartree products.
Determinants/permanents are expanded explicitly for N <= 3, which is
exact and avoids pivoting over complex entries.  Wavefunctions are
immutable value objects; evaluation is referentially transparent.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .orbitals import (
    MOMENTUM,
    POSITION,
    ModelParams,
    eval_orbital,
    momentum_domain_scale,
    position_domain_scale,
)
from .quadrature import Interval, RealLine

__all__ = [
    "SYMMETRIC",
    "ANTISYMMETRIC",
    "DISTINGUISHABLE",
    "parse_symmetry",
    "Configuration",
    "WaveFunction",
    "build",
    "eval_density",
    "exchange_symmetry_check",
]

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
DISTINGUISHABLE = "distinguishable"

_SYMMETRY_ALIASES = {
    "s": SYMMETRIC, SYMMETRIC: SYMMETRIC,
    "a": ANTISYMMETRIC, ANTISYMMETRIC: ANTISYMMETRIC,
    "d": DISTINGUISHABLE, DISTINGUISHABLE: DISTINGUISHABLE,
}

_PERMUTATIONS = {
    2: [((0, 1), 1), ((1, 0), -1)],
    3: [(p, 1 if p in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1)
        for p in itertools.permutations(range(3))],
}


def parse_symmetry(tag):
    try:
        return _SYMMETRY_ALIASES[tag.lower()]
    except KeyError:
        raise ValueError(f"unknown symmetry class {tag!r}") from None


@dataclass(frozen=True)
class Configuration:
    """One N-particle configuration: model, quantum numbers, symmetry, space."""

    params: ModelParams
    ns: tuple
    symmetry: str
    space: str = POSITION

    def __post_init__(self):
        object.__setattr__(self, "ns", tuple(int(n) for n in self.ns))
        if len(self.ns) not in (2, 3):
            raise ValueError("only 2- and 3-particle systems are supported")
        if self.symmetry not in (SYMMETRIC, ANTISYMMETRIC, DISTINGUISHABLE):
            raise ValueError(f"unknown symmetry class {self.symmetry!r}")
        if self.space not in (POSITION, MOMENTUM):
            raise ValueError(f"unknown space {self.space!r}")
        for n in self.ns:
            self.params.validate_quantum_number(n)
        counts = Counter(self.ns)
        if self.symmetry == ANTISYMMETRIC and max(counts.values()) > 1:
            raise ValueError(
                "antisymmetric state requires distinct quantum numbers "
                "(determinant with equal rows vanishes)")
        if self.symmetry == SYMMETRIC and max(counts.values()) > 2:
            raise ValueError(
                "symmetric state with a triple-repeated quantum number is "
                "not supported")

    @property
    def nparticles(self):
        return len(self.ns)

    @property
    def distinct(self):
        return len(set(self.ns)) == len(self.ns)

    def domains(self, arity=None):
        """Per-axis integration domains ([0,L] or mapped real line)."""
        k = arity or self.nparticles
        if self.params.kind == "box" and self.space == POSITION:
            axis = Interval(0.0, self.params.L)
        elif self.space == POSITION:
            axis = RealLine(position_domain_scale(self.params, self.ns))
        else:
            axis = RealLine(momentum_domain_scale(self.params, self.ns))
        return [axis] * k

    def orbital_values(self, z):
        """Stack of the N orbital values at coordinate(s) z."""
        return [eval_orbital(self.params, n, self.space, z) for n in self.ns]


def _norm_factor(config):
    if config.symmetry == DISTINGUISHABLE:
        return 1.0
    mult = 1
    for m in Counter(config.ns).values():
        mult *= math.factorial(m)
    return 1.0 / math.sqrt(math.factorial(config.nparticles) * mult)


@dataclass(frozen=True)
class WaveFunction:
    """Evaluatable N-particle amplitude for one configuration."""

    config: Configuration
    norm_factor: float

    @property
    def nparticles(self):
        return self.config.nparticles

    @property
    def space(self):
        return self.config.space

    @property
    def symmetry(self):
        return self.config.symmetry

    def domains(self, arity=None):
        return self.config.domains(arity)

    def _check_domain(self, coords):
        p = self.config.params
        if p.kind == "box" and self.space == POSITION:
            for c in coords:
                arr = np.asarray(c, dtype=float)
                if np.any((arr < 0.0) | (arr > p.L)):
                    raise ValueError("coordinate outside the box [0, L]")

    def amplitude(self, *coords):
        """Psi at one point or broadcastable coordinate arrays."""
        if len(coords) != self.nparticles:
            raise ValueError(
                f"expected {self.nparticles} coordinates, got {len(coords)}")
        self._check_domain(coords)
        cfg = self.config
        # vals[k][i]: orbital k evaluated at coordinate i
        vals = [[eval_orbital(cfg.params, n, cfg.space, c) for c in coords]
                for n in cfg.ns]
        if cfg.symmetry == DISTINGUISHABLE:
            out = vals[0][0]
            for k in range(1, cfg.nparticles):
                out = out * vals[k][k]
            return out
        out = None
        for perm, sign in _PERMUTATIONS[cfg.nparticles]:
            term = vals[perm[0]][0]
            for i in range(1, cfg.nparticles):
                term = term * vals[perm[i]][i]
            if cfg.symmetry == ANTISYMMETRIC and sign < 0:
                term = -term
            out = term if out is None else out + term
        return self.norm_factor * out

    def density(self, *coords):
        """|Psi|^2 at the given point(s)."""
        a = self.amplitude(*coords)
        return np.abs(a) ** 2 if np.iscomplexobj(a) else np.asarray(a) ** 2

    def amplitude_tensor(self, axes):
        """Psi on the tensor grid spanned by 1D coordinate axes.

        This is the performance path: one outer product per permutation,
        so an n^3 grid costs six einsum calls for N = 3.
        """
        if len(axes) != self.nparticles:
            raise ValueError("one coordinate axis per particle required")
        cfg = self.config
        # vals[k][i]: orbital k on axis i (axes may differ per coordinate)
        memo = {}
        for k, n in enumerate(cfg.ns):
            for i, ax in enumerate(axes):
                if (n, id(ax)) not in memo:
                    memo[(n, id(ax))] = np.asarray(
                        eval_orbital(cfg.params, n, cfg.space, ax))
        vals = [[memo[(n, id(ax))] for ax in axes] for n in cfg.ns]
        subs = "i,j" if cfg.nparticles == 2 else "i,j,k"
        out_sub = subs.replace(",", "")
        if cfg.symmetry == DISTINGUISHABLE:
            return np.einsum(f"{subs}->{out_sub}",
                             *[vals[k][k] for k in range(cfg.nparticles)])
        dtype = complex if any(np.iscomplexobj(v[0]) for v in vals) else float
        shape = tuple(len(ax) for ax in axes)
        out = np.zeros(shape, dtype=dtype)
        for perm, sign in _PERMUTATIONS[cfg.nparticles]:
            term = np.einsum(f"{subs}->{out_sub}",
                             *[vals[perm[i]][i] for i in range(cfg.nparticles)])
            if cfg.symmetry == ANTISYMMETRIC and sign < 0:
                out -= term
            else:
                out += term
        out *= self.norm_factor
        return out

    def density_tensor(self, axes, weights=None):
        """|Psi|^2 on a tensor grid; ``weights`` is unused (interface parity)."""
        a = self.amplitude_tensor(axes)
        if np.iscomplexobj(a):
            return (a.real**2 + a.imag**2)
        return a * a


def build(config):
    """Construct the normalized wavefunction for a configuration."""
    return WaveFunction(config=config, norm_factor=_norm_factor(config))


def eval_density(wf, point):
    """|Psi|^2 at a single N-coordinate point."""
    return float(wf.density(*point))


def exchange_symmetry_check(wf, point):
    """(Psi(point), Psi(point with first two coordinates swapped)).

    Equal for symmetric states, negated for antisymmetric ones, and
    generally unrelated for distinguishable products.
    """
    swapped = (point[1], point[0]) + tuple(point[2:])
    return complex(wf.amplitude(*point)), complex(wf.amplitude(*swapped))
