"""
Manufactured solutions on the unit square, with hand-derived derivatives
and forcing terms.

The polynomial bubble a(x) a(y), a(t) = t^2 (1 - t)^2, serves both as the
plate deflection and as the stream function of the Stokes velocity.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from core.spaces.fields import Field


def _a(t):
    return t ** 2 * (1.0 - t) ** 2


def _a1(t):
    return 2.0 * t * (1.0 - t) * (1.0 - 2.0 * t)


def _a2(t):
    return 2.0 - 12.0 * t + 12.0 * t ** 2


def _a3(t):
    return 24.0 * t - 12.0


A4 = 24.0


def _xy(points):
    points = np.asarray(points, dtype=float)
    return points[:, 0], points[:, 1]


@dataclass(frozen=True)
class ManufacturedSolution:
    solution: Field
    forcing: Callable[[np.ndarray], np.ndarray]
    pressure: Field = None


def bubble() -> Field:
    """phi = x^2 (1-x)^2 y^2 (1-y)^2"""
    def value(points):
        x, y = _xy(points)
        return _a(x) * _a(y)

    def gradient(points):
        x, y = _xy(points)
        return np.column_stack((_a1(x) * _a(y), _a(x) * _a1(y)))

    def hessian(points):
        x, y = _xy(points)
        mixed = _a1(x) * _a1(y)
        return np.stack((np.column_stack((_a2(x) * _a(y), mixed)),
                         np.column_stack((mixed, _a(x) * _a2(y)))), axis=1)

    return Field(value, gradient, hessian)


def poisson_solution() -> ManufacturedSolution:
    """u = sin(pi x) sin(pi y), f = 2 pi^2 u"""
    pi = np.pi

    def value(points):
        x, y = _xy(points)
        return np.sin(pi * x) * np.sin(pi * y)

    def gradient(points):
        x, y = _xy(points)
        return pi * np.column_stack((np.cos(pi * x) * np.sin(pi * y), np.sin(pi * x) * np.cos(pi * y)))

    def hessian(points):
        x, y = _xy(points)
        diagonal = -pi ** 2 * np.sin(pi * x) * np.sin(pi * y)
        mixed = pi ** 2 * np.cos(pi * x) * np.cos(pi * y)
        return np.stack((np.column_stack((diagonal, mixed)), np.column_stack((mixed, diagonal))), axis=1)

    return ManufacturedSolution(Field(value, gradient, hessian), lambda points: 2.0 * pi ** 2 * value(points))


def biharmonic_solution() -> ManufacturedSolution:
    """The bubble with f = Delta^2 phi."""
    def forcing(points):
        x, y = _xy(points)
        return A4 * _a(y) + 2.0 * _a2(x) * _a2(y) + A4 * _a(x)

    return ManufacturedSolution(bubble(), forcing)


def stokes_pressure() -> Field:
    """p = x^3 + y^3 - 1/2, zero mean on the unit square."""
    def value(points):
        x, y = _xy(points)
        return x ** 3 + y ** 3 - 0.5

    def gradient(points):
        x, y = _xy(points)
        return np.column_stack((3.0 * x ** 2, 3.0 * y ** 2))

    return Field(value, gradient)


def stokes_velocity() -> Field:
    """u = curl of the bubble = (a(x) a'(y), -a'(x) a(y))."""
    def value(points):
        x, y = _xy(points)
        return np.column_stack((_a(x) * _a1(y), -_a1(x) * _a(y)))

    def gradient(points):
        x, y = _xy(points)
        mixed = _a1(x) * _a1(y)
        return np.stack((np.column_stack((mixed, _a(x) * _a2(y))),
                         np.column_stack((-_a2(x) * _a(y), -mixed))), axis=1)

    def divergence(points):
        return np.zeros(len(points))

    return Field(value, gradient, divergence=divergence)


def stokes_solution(viscosity: float = 1.0) -> ManufacturedSolution:
    """f = -viscosity Delta u - grad p, the strong form of a(u, v) + (div_h v, p) = (f, v)"""
    pressure = stokes_pressure()

    def forcing(points):
        x, y = _xy(points)
        laplace_u1 = _a2(x) * _a1(y) + _a(x) * _a3(y)
        laplace_u2 = -(_a3(x) * _a(y) + _a1(x) * _a2(y))
        return -viscosity * np.column_stack((laplace_u1, laplace_u2)) - pressure.gradient(points)

    return ManufacturedSolution(stokes_velocity(), forcing, pressure)


def quadratic_velocity() -> Field:
    """v = (x^2, xy), div v = 3x."""
    def value(points):
        x, y = _xy(points)
        return np.column_stack((x ** 2, x * y))

    def gradient(points):
        x, y = _xy(points)
        zeros = np.zeros_like(x)
        return np.stack((np.column_stack((2.0 * x, zeros)), np.column_stack((y, x))), axis=1)

    return Field(value, gradient, divergence=lambda points: 3.0 * _xy(points)[0])
