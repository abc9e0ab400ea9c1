"""
Spectra of the restricted Casimir Q_C on V^(1)(Sigma_g) and of D_C on
degree-g forms.

Both operators act semisimply with eigenvalues (j^2 - 1)/4; dimensions are
nullities over QQ, and their sum is checked against the space dimension.
"""

import dataclasses
import logging
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from casson.curves import BoundingCurveSpec, RestrictedSl2
from exterior.multivector import MultiVector, monomials
from lefschetz.components import component_basis, compress, component_dimension
from utils.errors import DimensionMismatch
from utils.rational_linalg import nullity_rational

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Eigenspace:
    j: int
    eigenvalue: Fraction
    dimension: int

    def to_json(self) -> dict:
        return {"j": self.j, "eigenvalue": str(self.eigenvalue), "dim": self.dimension}


def casimir_eigenvalue(j: int) -> Fraction:
    return Fraction(j * j - 1, 4)


def _monomial_matrix(operator, genus: int, degree: int) -> np.ndarray:
    masks = monomials(genus, degree)
    position = {m: r for r, m in enumerate(masks)}
    matrix = np.zeros((len(masks), len(masks)), dtype=object)
    for k, mask in enumerate(masks):
        for target, c in operator(MultiVector.basis(genus, mask)).terms.items():
            matrix[position[target], k] = c
    return matrix


def _spectrum(matrix: np.ndarray, candidates: Sequence[int]) -> List[Eigenspace]:
    size = matrix.shape[0]
    identity = np.eye(size, dtype=object)
    spaces = []
    for j in candidates:
        value = casimir_eigenvalue(j)
        spaces.append(Eigenspace(j, value, nullity_rational(matrix - identity * value)))
    total = sum(space.dimension for space in spaces)
    if total != size:
        raise DimensionMismatch(f"eigenspaces for j in {list(candidates)} span {total} of {size} dimensions")
    return spaces


def casimir_spectrum(curve: BoundingCurveSpec) -> List[Eigenspace]:
    """
    Eigenspaces of Q_C on V^(1)(Sigma_g).

    The j-eigenspace, j = 1..min(h, g-h)+1, has dimension
    dim V^(j)(Sigma_h) * dim V^(j)(Sigma_{g-h}).
    """
    ops = RestrictedSl2(curve)
    component = component_basis(curve.genus, 1)
    matrix = compress(component, component, ops.casimir)
    h_prime = min(curve.h, curve.genus - curve.h)
    spaces = _spectrum(matrix, range(1, h_prime + 2))
    logger.debug(f"Q_C spectrum on V^(1)(Sigma_{curve.genus}), h = {curve.h}: "
                 f"{[(str(s.eigenvalue), s.dimension) for s in spaces]}")
    return spaces


def diagonal_spectrum(curve: BoundingCurveSpec) -> List[Eigenspace]:
    """Eigenspaces of D_C on degree-g forms; only nonzero eigenspaces are listed."""
    ops = RestrictedSl2(curve)
    matrix = _monomial_matrix(ops.diagonal, curve.genus, curve.genus)
    spaces = _spectrum(matrix, range(0, curve.h + 2))
    return [space for space in spaces if space.dimension]


def expected_casimir_dimensions(genus: int, h: int) -> List[int]:
    h_prime = min(h, genus - h)
    return [component_dimension(h, j) * component_dimension(genus - h, j) for j in range(1, h_prime + 2)]


def eigenspace_data(curve: BoundingCurveSpec, operator: str) -> List[Eigenspace]:
    """Spectrum of ``Q`` on V^(1)(Sigma_g) or of ``D`` on degree-g forms."""
    if operator == "Q":
        return casimir_spectrum(curve)
    if operator == "D":
        return diagonal_spectrum(curve)
    raise ValueError(f"eigenspace data is available for 'Q' and 'D', got {operator!r}")
