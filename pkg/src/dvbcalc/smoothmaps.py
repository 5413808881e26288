"""Vector-valued smooth maps between chart domains.

A ``SmoothMap`` is a list of coordinate expressions.  Jacobians and
directional derivatives are computed by evaluating the expressions over
seeded jets, so they are exact up to rounding.  ``lie_bracket`` keeps the
generic (jet-friendly) code path available so brackets can themselves be
differentiated, e.g. for Jacobi-identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import expressions, jets
from .expressions import Expr
from .jets import Scalar


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SmoothMap:
    """Map R^domain_dim -> R^codomain_dim given by component expressions."""

    domain_dim: int
    components: tuple[Expr, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.domain_dim < 0:
            raise DimensionMismatch("domain dimension must be non-negative")
        for comp in self.components:
            if expressions.max_var_index(comp) >= self.domain_dim:
                raise DimensionMismatch(
                    f"component uses variable outside dimension {self.domain_dim}"
                )

    @property
    def codomain_dim(self) -> int:
        return len(self.components)

    @classmethod
    def parse(cls, texts: Sequence[str], domain_dim: int) -> "SmoothMap":
        comps = tuple(expressions.parse(t, domain_dim) for t in texts)
        return cls(domain_dim, comps)

    @classmethod
    def constant(cls, values: Sequence[float], domain_dim: int) -> "SmoothMap":
        return cls(domain_dim, tuple(expressions.Num(float(v)) for v in values))

    def eval_generic(self, values: Sequence[Scalar]) -> list[Scalar]:
        if len(values) != self.domain_dim:
            raise DimensionMismatch(
                f"expected point of dimension {self.domain_dim}, got {len(values)}"
            )
        return [expressions.evaluate(c, values) for c in self.components]

    def __call__(self, point: Sequence[float]) -> np.ndarray:
        return np.array(self.eval_generic([float(v) for v in point]), dtype=float)


def jacobian(m: SmoothMap, point: Sequence[float]) -> np.ndarray:
    """codomain_dim x domain_dim matrix of partials at ``point``."""
    if len(point) != m.domain_dim:
        raise DimensionMismatch(
            f"expected point of dimension {m.domain_dim}, got {len(point)}"
        )
    return jets.jet_jacobian(m.eval_generic, point)


def directional_derivative(
    f: SmoothMap, x_field: SmoothMap, point: Sequence[float]
) -> float:
    """<df, X> at ``point`` for scalar f and vector field X on the same chart."""
    if f.codomain_dim != 1:
        raise DimensionMismatch("directional derivative expects a scalar map")
    if f.domain_dim != x_field.domain_dim or x_field.codomain_dim != f.domain_dim:
        raise DimensionMismatch("vector field must match the chart dimension")
    direction = x_field(point)
    return float(
        jets.jet_directional(lambda vs: f.eval_generic(vs)[0], list(point), direction)
    )


def _check_vector_field(x_field: SmoothMap) -> None:
    if x_field.codomain_dim != x_field.domain_dim:
        raise DimensionMismatch("vector fields map a chart to itself")


def lie_bracket_generic(
    x_field: SmoothMap, y_field: SmoothMap, values: Sequence[Scalar]
) -> list[Scalar]:
    """[X,Y]^i = sum_j X^j dY^i/dx_j - Y^j dX^i/dx_j over floats or jets."""
    n = x_field.domain_dim
    xv = x_field.eval_generic(values)
    yv = y_field.eval_generic(values)
    jx = jets.generic_jacobian(x_field.eval_generic, values)
    jy = jets.generic_jacobian(y_field.eval_generic, values)
    out = []
    for i in range(n):
        acc = 0.0
        for j in range(n):
            acc = acc + jy[i][j] * xv[j] - jx[i][j] * yv[j]
        out.append(acc)
    return out


def lie_bracket(
    x_field: SmoothMap, y_field: SmoothMap, point: Sequence[float]
) -> np.ndarray:
    _check_vector_field(x_field)
    _check_vector_field(y_field)
    if x_field.domain_dim != y_field.domain_dim:
        raise DimensionMismatch("vector fields live on different charts")
    values = [float(v) for v in point]
    if len(values) != x_field.domain_dim:
        raise DimensionMismatch(
            f"expected point of dimension {x_field.domain_dim}, got {len(values)}"
        )
    return np.array(lie_bracket_generic(x_field, y_field, values), dtype=float)


@dataclass(frozen=True)
class MatrixMap:
    """Matrix-valued map on a chart, e.g. the fiber part of a linear section.

    Wraps either reshaped smooth-map components or a jacobian closure, so
    every derivative in a matrix entry still comes from the jet machinery.
    """

    rows: int
    cols: int
    fn: Callable[[Sequence[float]], np.ndarray] = field(repr=False)

    def __call__(self, point: Sequence[float]) -> np.ndarray:
        out = np.asarray(self.fn(point), dtype=float)
        if out.shape != (self.rows, self.cols):
            raise DimensionMismatch(
                f"matrix map returned shape {out.shape}, expected {(self.rows, self.cols)}"
            )
        return out

    @classmethod
    def from_smooth_map(cls, m: SmoothMap, rows: int, cols: int) -> "MatrixMap":
        if m.codomain_dim != rows * cols:
            raise DimensionMismatch(
                f"need {rows * cols} components for a {rows}x{cols} matrix, got {m.codomain_dim}"
            )
        return cls(rows, cols, lambda p: m(p).reshape(rows, cols))

    @classmethod
    def from_jacobian(cls, m: SmoothMap) -> "MatrixMap":
        return cls(m.codomain_dim, m.domain_dim, lambda p: jacobian(m, p))

    @classmethod
    def constant(cls, matrix: np.ndarray) -> "MatrixMap":
        arr = np.array(matrix, dtype=float)
        if arr.ndim != 2:
            raise DimensionMismatch("constant matrix map needs a 2-d array")
        return cls(arr.shape[0], arr.shape[1], lambda p: arr)
