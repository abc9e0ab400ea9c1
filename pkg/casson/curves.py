"""
Bounding curves and the Lefschetz operators restricted to them.

A separating curve C cuts off a genus-h subsurface whose homology has a
symplectic basis u_1..u_h, v_1..v_h. With omega_C = sum u_i ^ v_i the
restricted operators are E_C = nu(omega_C), F_C = mu(omega_C) and
Hhat_C = [E_C, F_C].
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import random
from fractions import Fraction
from typing import Callable, Mapping, Tuple

import numpy as np

from exterior.multivector import HomologyClass, MultiVector, contract, inner, wedge
from exterior.symplectic import SymplecticMatrix, random_symplectic
from utils.errors import InvalidCurveSpec

logger = logging.getLogger(__name__)

Operator = Callable[[MultiVector], MultiVector]


@dataclasses.dataclass(frozen=True)
class BoundingCurveSpec:
    """Symplectic basis u, v of the homology of a genus-h subsurface of Sigma_g."""

    genus: int
    u: Tuple[HomologyClass, ...]
    v: Tuple[HomologyClass, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        h = len(self.u)
        if len(self.v) != h:
            raise InvalidCurveSpec(f"{h} u-classes but {len(self.v)} v-classes")
        if not 0 < h < self.genus:
            raise InvalidCurveSpec(f"subsurface genus {h} must satisfy 0 < h < {self.genus}")
        for x in self.u + self.v:
            if x.genus != self.genus:
                raise InvalidCurveSpec(f"class {x} has genus {x.genus}, expected {self.genus}")
        for i in range(h):
            for k in range(h):
                if self.u[i].skew(self.v[k]) != (1 if i == k else 0):
                    raise InvalidCurveSpec(f"(u_{i + 1}, v_{k + 1}) = {self.u[i].skew(self.v[k])}")
                if self.u[i].skew(self.u[k]) or self.v[i].skew(self.v[k]):
                    raise InvalidCurveSpec(f"u or v classes {i + 1}, {k + 1} are not isotropic")

    @property
    def h(self) -> int:
        return len(self.u)

    @classmethod
    def standard(cls, genus: int, h: int) -> BoundingCurveSpec:
        """The curve with u_i = a_i and v_i = b_i for i <= h."""
        return cls(genus,
                   tuple(HomologyClass.a(genus, i) for i in range(1, h + 1)),
                   tuple(HomologyClass.b(genus, i) for i in range(1, h + 1)))

    def omega(self) -> MultiVector:
        """omega_C = sum u_i ^ v_i."""
        result = MultiVector.zero(self.genus)
        for u, v in zip(self.u, self.v):
            result = result + wedge(u.to_multivector(), v.to_multivector())
        return result

    def transform(self, matrix: SymplecticMatrix) -> BoundingCurveSpec:
        return BoundingCurveSpec(self.genus,
                                 tuple(matrix.apply(x) for x in self.u),
                                 tuple(matrix.apply(x) for x in self.v))

    def to_json(self) -> dict:
        return {"g": self.genus, "h": self.h,
                "u": [x.to_json() for x in self.u], "v": [x.to_json() for x in self.v]}

    @classmethod
    def from_json(cls, data: Mapping) -> BoundingCurveSpec:
        g = int(data["g"])
        try:
            u = tuple(HomologyClass(g, tuple(x)) for x in data["u"])
            v = tuple(HomologyClass(g, tuple(x)) for x in data["v"])
        except ValueError as e:
            raise InvalidCurveSpec(str(e))
        if "h" in data and int(data["h"]) != len(u):
            raise InvalidCurveSpec(f"declared h = {data['h']} with {len(u)} u-classes")
        return cls(g, u, v)


def random_curve(genus: int, h: int, rng: random.Random) -> BoundingCurveSpec:
    """Image of the standard genus-h curve under a random symplectic matrix."""
    return BoundingCurveSpec.standard(genus, h).transform(random_symplectic(genus, rng))


@dataclasses.dataclass(frozen=True)
class RestrictedSl2:
    """E_C, F_C, Hhat_C and the operators Q_C, D_C built from them."""

    curve: BoundingCurveSpec

    @functools.cached_property
    def omega(self) -> MultiVector:
        return self.curve.omega()

    def E(self, x: MultiVector) -> MultiVector:
        return wedge(self.omega, x)

    def F(self, x: MultiVector) -> MultiVector:
        return contract(self.omega, x)

    def hhat(self, x: MultiVector) -> MultiVector:
        return self.E(self.F(x)) - self.F(self.E(x))

    def hhat_formula(self, x: MultiVector) -> MultiVector:
        """
        -h + sum_i nu(v_i) nu(J u_i)^* - nu(u_i) nu(J v_i)^*.

        For the standard curve this is -h + sum_i nu(a_i) nu(a_i)^* + nu(b_i) nu(b_i)^*.
        """
        result = x * -self.curve.h
        for u, v in zip(self.curve.u, self.curve.v):
            u_vec, v_vec = u.to_multivector(), v.to_multivector()
            # mu(y) = nu(J y)^*, so contract(v, .) is nu(J v)^*
            result = result + wedge(v_vec, contract(u_vec, x)) - wedge(u_vec, contract(v_vec, x))
        return result

    def diagonal(self, x: MultiVector) -> MultiVector:
        """D_C = Hhat_C (Hhat_C - 2) / 4."""
        weight = self.hhat(x)
        return (self.hhat(weight) - weight * 2) * Fraction(1, 4)

    def casimir(self, x: MultiVector) -> MultiVector:
        """Q_C = E_C F_C + D_C."""
        return self.E(self.F(x)) + self.diagonal(x)

    def operator(self, name: str) -> Operator:
        operators = {"E": self.E, "F": self.F, "H": self.hhat, "Q": self.casimir, "D": self.diagonal}
        if name not in operators:
            raise ValueError(f"unknown restricted operator {name!r}; expected one of {sorted(operators)}")
        return operators[name]


def restricted_operators(curve: BoundingCurveSpec) -> RestrictedSl2:
    return RestrictedSl2(curve)


def casson_twist(curve: BoundingCurveSpec) -> int:
    """
    Casson invariant of the Dehn twist on a bounding curve.

    Returns:
        int: -<Omega_g, E_C F_C Omega_g>
    """
    ops = RestrictedSl2(curve)
    omega = MultiVector.handlebody_state(curve.genus)
    value = -inner(omega, ops.E(ops.F(omega)))
    logger.debug(f"casson twist on genus-{curve.h} curve in genus {curve.genus}: {value}")
    return value


def casson_twist_spectral(curve: BoundingCurveSpec) -> Fraction:
    """<Omega, D_C Omega> - <Omega, Q_C Omega>, which equals ``casson_twist``."""
    ops = RestrictedSl2(curve)
    omega = MultiVector.handlebody_state(curve.genus)
    return Fraction(inner(omega, ops.diagonal(omega)) - inner(omega, ops.casimir(omega)))



def operator_matrix(operator: Operator, genus: int) -> np.ndarray:
    """Matrix of an operator on the full exterior algebra, columns indexed by mask."""
    size = 1 << (2 * genus)
    matrix = np.zeros((size, size), dtype=object)
    for mask in range(size):
        for target, c in operator(MultiVector.basis(genus, mask)).terms.items():
            matrix[target, mask] = c
    return matrix
