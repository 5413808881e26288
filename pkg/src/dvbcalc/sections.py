"""Linear sections, grids, warps, and the induced sections of iterated duals.

A linear section of the decomposed bundle over the B side is a pair
(base section X: M -> A-fiber, matrix map Lambda: M -> C x B): it sends b
over m to the element (m; X(m), b, Lambda(m) b).  Likewise over the A side
with (Y, Mu).  A grid is one linear section of each kind, and its warp at
m is the core vector

    warp = Lambda(m) Y(m) - Mu(m) X(m),

the core difference of the two counterclockwise/clockwise composites; the
composite through the B-side section enters with the positive sign.

Each linear section induces a section of the matching iterated dual over
C* (its "squarecap"); pairing the two squarecaps of a grid recovers the
warp with a minus sign, evaluated against kappa.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dvb import (
    DvbElement,
    DvbShape,
    DualAElement,
    DualBElement,
    IncompatibleElements,
    IterACElement,
    IterBCElement,
    core_difference,
    dual_iso_a,
    pair_a,
    pair_b,
    pair_cstar_a,
)
from .smoothmaps import MatrixMap, SmoothMap


@dataclass(frozen=True)
class LinearSectionB:
    """Section of D -> B, linear over the base section M -> A-fiber."""

    shape: DvbShape
    base_section: SmoothMap
    fiber_matrix: MatrixMap

    def __post_init__(self):
        if self.base_section.domain_dim != self.shape.base_dim:
            raise IncompatibleElements("base section domain must match the chart")
        if self.base_section.codomain_dim != self.shape.dim_a:
            raise IncompatibleElements("base section must take values in the A fiber")
        if (self.fiber_matrix.rows, self.fiber_matrix.cols) != (self.shape.dim_c, self.shape.dim_b):
            raise IncompatibleElements("fiber matrix must map the B fiber to the core")

    def __call__(self, m, b) -> DvbElement:
        b = np.asarray(b, dtype=float)
        return DvbElement(
            self.shape, m, self.base_section(m), b, self.fiber_matrix(m) @ b
        )


@dataclass(frozen=True)
class LinearSectionA:
    """Section of D -> A, linear over the base section M -> B-fiber."""

    shape: DvbShape
    base_section: SmoothMap
    fiber_matrix: MatrixMap

    def __post_init__(self):
        if self.base_section.domain_dim != self.shape.base_dim:
            raise IncompatibleElements("base section domain must match the chart")
        if self.base_section.codomain_dim != self.shape.dim_b:
            raise IncompatibleElements("base section must take values in the B fiber")
        if (self.fiber_matrix.rows, self.fiber_matrix.cols) != (self.shape.dim_c, self.shape.dim_a):
            raise IncompatibleElements("fiber matrix must map the A fiber to the core")

    def __call__(self, m, a) -> DvbElement:
        a = np.asarray(a, dtype=float)
        return DvbElement(
            self.shape, m, a, self.base_section(m), self.fiber_matrix(m) @ a
        )


@dataclass(frozen=True)
class Grid:
    xi: LinearSectionB
    eta: LinearSectionA

    def __post_init__(self):
        if self.xi.shape != self.eta.shape:
            raise IncompatibleElements("grid sections live on different shapes")

    @property
    def shape(self) -> DvbShape:
        return self.xi.shape


def swap_grid(grid: Grid) -> Grid:
    """Exchange the roles of the two sides; the warp changes sign."""
    old = grid.shape
    shape = DvbShape(old.dim_b, old.dim_a, old.dim_c, old.base_dim)
    return Grid(
        xi=LinearSectionB(shape, grid.eta.base_section, grid.eta.fiber_matrix),
        eta=LinearSectionA(shape, grid.xi.base_section, grid.xi.fiber_matrix),
    )


def warp(grid: Grid, m) -> np.ndarray:
    """Core difference of the two ways around the grid square at m."""
    a_val = grid.xi.base_section(m)
    b_val = grid.eta.base_section(m)
    through_b = grid.xi(m, b_val)
    through_a = grid.eta(m, a_val)
    return core_difference(through_b, through_a)


def squarecap_b(xi: LinearSectionB, m, kappa) -> IterBCElement:
    """Section of the iterated dual over C* induced by a B-side linear section.

    Characterized by <squarecap_b(xi, m, kappa), psi>_C* = ell_b(xi, psi)
    for every psi over kappa.
    """
    kappa = np.asarray(kappa, dtype=float)
    return IterBCElement(
        xi.shape, m, kappa, xi.fiber_matrix(m).T @ kappa, xi.base_section(m)
    )


def squarecap_a(eta: LinearSectionA, m, kappa) -> IterACElement:
    """A-side analogue of squarecap_b, landing in the other iterated dual."""
    kappa = np.asarray(kappa, dtype=float)
    return IterACElement(
        eta.shape, m, kappa, eta.fiber_matrix(m).T @ kappa, eta.base_section(m)
    )


def ell_b(xi: LinearSectionB, psi: DualBElement) -> float:
    """The linear function on the dual over B attached to a B-side section."""
    return pair_b(psi, xi(psi.m, psi.b))


def ell_a(eta: LinearSectionA, phi: DualAElement) -> float:
    """The linear function on the dual over A attached to an A-side section."""
    return pair_a(phi, eta(phi.m, phi.a))


def squarecap_pairing(mb: IterBCElement, ma: IterACElement) -> float:
    """Pairing of the two iterated duals over C*, routed through dual_iso_a.

    Decomposes as <alpha, a> - <beta, b>.
    """
    return pair_cstar_a(ma, dual_iso_a(mb))


def warp_pairing_check(grid: Grid, m, kappa) -> tuple[float, float]:
    """Both sides of the squarecap-pairing identity at kappa over m.

    Left: the pairing of the grid's two squarecaps.  Right: kappa paired
    with minus the warp.  The two agree up to rounding.
    """
    kappa = np.asarray(kappa, dtype=float)
    lhs = squarecap_pairing(
        squarecap_b(grid.xi, m, kappa), squarecap_a(grid.eta, m, kappa)
    )
    rhs = float(kappa @ -warp(grid, m))
    return lhs, rhs


def cstar_projection(psi: DualBElement) -> np.ndarray:
    """Projection of the dual over B to C*.

    In the decomposition this reads off kappa; it is characterized by
    <cstar_projection(psi), c> = <psi, 0_b +_A c> over core vectors c.
    """
    return psi.kappa
