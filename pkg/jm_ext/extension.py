"""
Extended Sp-modules U^(j): extensions of V^(j) by V^(j+3) classified by
mu-flat : U -> Hom(V^(j), V^(j+3)).

A pair (u, S) of U x| Sp acts by the block matrix

    [[rho_{j+3}(S), mu_flat(u) rho_j(S)],
     [0,            rho_j(S)          ]]

on coordinates of V^(j+3) (+) V^(j). With this placement the assignment is a
homomorphism for the product (u, S)(u', S') = (u + S u', S S').
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Tuple

import numpy as np

from casson.cocycle import UClass
from exterior.multivector import contract
from exterior.symplectic import SymplecticMatrix, sp_action
from lefschetz.components import compress, require_component
from utils.errors import GenusMismatch

logger = logging.getLogger(__name__)


def component_action(matrix: SymplecticMatrix, j: int) -> np.ndarray:
    """rho_j(S): the Sp action on V^(j) in its saturated basis (an integer matrix)."""
    component = require_component(matrix.genus, j)
    return compress(component, component, lambda b: sp_action(matrix, b))


def mu_flat(u: UClass, j: int) -> np.ndarray:
    """
    Matrix of mu(u) from V^(j) to V^(j+3).

    mu(u) commutes with F, so kernels of F map to kernels of F; multiples
    of omega ^ H act as zero there.

    Raises:
        EmptyComponent: If V^(j) or V^(j+3) is zero
    """
    g = u.genus
    source = require_component(g, j)
    target = require_component(g, j + 3)
    return compress(source, target, lambda b: contract(u.representative, b))


@dataclasses.dataclass(frozen=True)
class ExtendedRep:
    """Block upper-triangular matrix of (u, S) on V^(j+3) (+) V^(j)."""

    genus: int
    index: int
    upper: np.ndarray = dataclasses.field(compare=False)
    corner: np.ndarray = dataclasses.field(compare=False)
    lower: np.ndarray = dataclasses.field(compare=False)

    @property
    def shape(self) -> Tuple[int, int]:
        n = self.upper.shape[0] + self.lower.shape[0]
        return n, n

    def matrix(self) -> np.ndarray:
        bottom_left = np.zeros((self.lower.shape[0], self.upper.shape[1]), dtype=object)
        return np.block([[self.upper, self.corner], [bottom_left, self.lower]])

    def quotient(self) -> np.ndarray:
        """Image in End(V^(j)) under the quotient map of the extension."""
        return self.lower

    def __matmul__(self, other: ExtendedRep) -> ExtendedRep:
        if (self.genus, self.index) != (other.genus, other.index):
            raise GenusMismatch(f"cannot compose extensions ({self.genus}, {self.index}) "
                                f"and ({other.genus}, {other.index})")
        return ExtendedRep(self.genus, self.index,
                           self.upper.dot(other.upper),
                           self.upper.dot(other.corner) + self.corner.dot(other.lower),
                           self.lower.dot(other.lower))


def extended_rep(u: UClass, matrix: SymplecticMatrix, j: int) -> ExtendedRep:
    """
    Matrix of (u, S) on U^(j).

    Raises:
        EmptyComponent: If V^(j) or V^(j+3) is zero
        GenusMismatch: If u and S live in different genera
    """
    if u.genus != matrix.genus:
        raise GenusMismatch(f"genus {u.genus} vs {matrix.genus}")
    upper = component_action(matrix, j + 3)
    lower = component_action(matrix, j)
    corner = mu_flat(u, j).dot(lower)
    logger.debug(f"extended representation on V^({j + 3}) + V^({j}) in genus {u.genus}: "
                 f"{upper.shape[0]} + {lower.shape[0]}")
    return ExtendedRep(matrix.genus, j, upper, corner, lower)


def semidirect_product(first: Tuple[UClass, SymplecticMatrix],
                       second: Tuple[UClass, SymplecticMatrix]) -> Tuple[UClass, SymplecticMatrix]:
    """(u, S)(u', S') = (u + S u', S S')."""
    (u, s), (u2, s2) = first, second
    return u + u2.transform(s), s @ s2
