# coding=utf-8
# Copyright 2022 The HitchFib Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from hitchfib.utils.exceptions import AmbiguousCluster, ToleranceOutOfRange, ZeroPolynomial

from .gaussian import GaussianRational
from .poly import Poly1, square_free_factors

__all__ = ["RootCluster", "aberth_roots", "cluster_roots", "roots_with_multiplicity"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootCluster:
    location: complex
    multiplicity: int
    residual: float


def aberth_roots(coeffs: np.ndarray, tol: float = 1e-14, max_iter: int = 200) -> np.ndarray:
    """
    All complex roots of a polynomial by simultaneous Aberth-Ehrlich iteration.

    Args:
        coeffs (np.ndarray): complex coefficients in ascending degree, nonzero leading entry.
        tol (float): stop once every correction is below ``tol`` relative to the root size.
        max_iter (int): iteration cap; on failure the companion-matrix roots are returned.

    Returns:
        np.ndarray: ``deg`` complex roots, unordered.
    """
    c = np.asarray(coeffs, dtype=np.complex128)[::-1]
    c = c / c[0]
    n = c.shape[0] - 1
    if n == 0:
        return np.zeros(0, dtype=np.complex128)
    if n == 1:
        return np.array([-c[1]], dtype=np.complex128)
    dc = c[:-1] * np.arange(n, 0, -1)

    # Cauchy bound, start on a slightly rotated circle to avoid symmetric stalls
    radius = 1.0 + np.max(np.abs(c[1:]))
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    x = radius * np.exp(1j * angles)

    for _ in range(max_iter):
        pv = np.polyval(c, x)
        dpv = np.polyval(dc, x)
        diff = x[:, None] - x[None, :]
        np.fill_diagonal(diff, 1.0)
        repulsion = (1.0 / diff).sum(axis=1) - 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dpv
            delta = ratio / (1.0 - ratio * repulsion)
        if not np.all(np.isfinite(delta)):
            break
        x = x - delta
        if np.all(np.abs(delta) <= tol * (1.0 + np.abs(x))):
            return x
    logger.debug("Aberth iteration did not converge, falling back to companion matrix roots")
    return np.roots(c)


def cluster_roots(roots: np.ndarray, radius: float) -> List[List[int]]:
    """
    Greedy single-linkage grouping of points closer than ``radius``.

    Returns:
        list[list[int]]: index groups, ordered by their smallest member.
    """
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= radius:
                parent[find(j)] = find(i)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def _check_tol(tol):
    if not (0.0 < tol < 1.0):
        raise ToleranceOutOfRange(f"tol must lie in (0, 1), got {tol}")


def _polish(coeffs: np.ndarray, z: complex, steps: int = 3) -> complex:
    """Newton steps on a polynomial with a simple root near ``z``."""
    c = coeffs[::-1]
    dc = np.polyder(c)
    for _ in range(steps):
        slope = np.polyval(dc, z)
        if slope == 0:
            break
        step = np.polyval(c, z) / slope
        z = z - step
        if abs(step) <= 1e-16 * (1.0 + abs(z)):
            break
    return complex(z)


def _exact_residual(p: Poly1, z) -> float:
    """``|p(z)|`` evaluated in exact arithmetic at the point ``z``."""
    return abs(complex(p(GaussianRational.coerce(z))))


def _refined_residual(p: Poly1, factor: Poly1, z: complex) -> float:
    """Residual of ``p`` after one exact Newton step on the square-free ``factor``."""
    z = GaussianRational.coerce(z)
    slope = factor.derivative()(z)
    if slope.is_zero():
        return _exact_residual(p, z)
    return _exact_residual(p, z - factor(z) / slope)


def roots_with_multiplicity(p: Poly1, tol: float = 1e-9, exact: bool = True) -> List[RootCluster]:
    """
    Roots of ``p`` grouped with their multiplicities.

    With ``exact=True`` the multiplicities come from the square-free decomposition over
    the Gaussian rationals and each square-free factor is solved and Newton-polished
    separately, so every numeric root is simple. With ``exact=False`` the roots of ``p``
    itself are clustered at radius ``tol * scale`` and the multiplicity is the cluster
    size.

    ``residual`` is ``|p|`` at the root, evaluated exactly at the returned location. When
    double precision cannot place a simple root well enough, it is ``|p|`` after one
    further exact Newton step.

    Raises:
        ZeroPolynomial: ``p`` vanishes identically.
        ToleranceOutOfRange: ``tol`` is outside (0, 1).
        AmbiguousCluster: a residual is not below ``tol * (1 + max|coeff|)``.
    """
    _check_tol(tol)
    if p.is_zero:
        raise ZeroPolynomial("cannot find the roots of the zero polynomial")
    if p.degree == 0:
        return []
    bound = tol * (1.0 + p.max_abs_coeff())

    clusters: List[RootCluster] = []
    if exact:
        for factor, mult in square_free_factors(p):
            coeffs = factor.to_numpy()
            for z in aberth_roots(coeffs):
                z = _polish(coeffs, complex(z))
                residual = _exact_residual(p, z)
                if residual >= bound:
                    residual = _refined_residual(p, factor, z)
                clusters.append(RootCluster(z, mult, residual))
    else:
        roots = aberth_roots(p.to_numpy())
        root_scale = 1.0 + float(np.max(np.abs(roots)))
        # a root of multiplicity m is only resolved to about tol ** (1 / m)
        radius = tol ** (1.0 / p.degree) * root_scale
        for group in cluster_roots(roots, radius):
            z = complex(np.mean(roots[group]))
            if len(group) == 1:
                z = _polish(p.to_numpy(), z)
            clusters.append(RootCluster(z, len(group), _exact_residual(p, z)))

    for c in clusters:
        if c.residual >= bound:
            raise AmbiguousCluster(
                f"root {c.location} of {p} has residual {c.residual:.3e} >= {bound:.3e}"
            )
    assert sum(c.multiplicity for c in clusters) == p.degree
    return sorted(clusters, key=lambda c: (round(c.location.real, 9), round(c.location.imag, 9)))
