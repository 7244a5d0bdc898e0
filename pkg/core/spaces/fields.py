from dataclasses import dataclass
from typing import Callable

import numpy as np

PointFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Field:
    """
    A smooth function given by callables on (n, 2) point arrays.

    Scalar fields return (n,) values, (n, 2) gradients and (n, 2, 2) Hessians;
    vector fields return (n, 2) values and (n, 2, 2) Jacobians whose rows are
    the component gradients.
    """
    value: PointFunction
    gradient: PointFunction = None
    hessian: PointFunction = None
    divergence: PointFunction = None

    def __call__(self, points) -> np.ndarray:
        return self.value(points)


def curl_of(field: Field) -> Field:
    """Vector field curl(phi) = (d_y phi, -d_x phi) of a scalar field."""
    def value(points):
        g = field.gradient(points)
        return np.column_stack((g[:, 1], -g[:, 0]))

    gradient = None
    if field.hessian is not None:
        def gradient(points):
            h = field.hessian(points)
            return np.stack((h[:, 1, :], -h[:, 0, :]), axis=1)

    return Field(value, gradient, divergence=lambda points: np.zeros(len(points)))
