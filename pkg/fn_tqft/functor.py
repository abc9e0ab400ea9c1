"""
Linear maps assigned to cobordism words.

Mapping classes act through their symplectic image; AddHandle sends
alpha to alpha ^ a_{g+1} and RemoveHandle is its inner-product adjoint.
Generators are applied in word order, left to right.
"""

import logging
from typing import Dict

import numpy as np

from exterior.multivector import MultiVector, inner, monomials, popcount
from exterior.symplectic import SymplecticMatrix, sp_action
from fn_tqft.cobordism import CobordismWord, Generator, HandleMove
from utils.errors import NegativeRank, ShapeError

logger = logging.getLogger(__name__)


def _add_handle(x: MultiVector) -> MultiVector:
    g = x.genus
    low = (1 << g) - 1
    result: Dict[int, int] = {}
    for mask, c in x.terms.items():
        a_part, b_part = mask & low, mask >> g
        # a_{g+1} moves left past every b factor
        sign = -1 if popcount(b_part) & 1 else 1
        result[a_part | (1 << g) | (b_part << (g + 1))] = sign * c
    return MultiVector(g + 1, result)


def _remove_handle(x: MultiVector) -> MultiVector:
    g = x.genus
    low = (1 << (g - 1)) - 1
    handle_a, handle_b = 1 << (g - 1), 1 << (2 * g - 1)
    result: Dict[int, int] = {}
    for mask, c in x.terms.items():
        if not mask & handle_a or mask & handle_b:
            continue
        a_part, b_part = mask & low, (mask >> g) & low
        sign = -1 if popcount(b_part) & 1 else 1
        result[a_part | (b_part << (g - 1))] = sign * c
    return MultiVector(g - 1, result)


def apply_generator(op: Generator, x: MultiVector) -> MultiVector:
    if isinstance(op, SymplecticMatrix):
        return sp_action(op, x)
    if op is HandleMove.ADD:
        return _add_handle(x)
    return _remove_handle(x)


def apply_word(word: CobordismWord, x: MultiVector) -> MultiVector:
    """Image of x under the composite map of the word."""
    if x.genus != word.start_genus:
        raise ShapeError(f"vector of genus {x.genus} fed to a word starting at genus {word.start_genus}")
    for op in word.ops:
        x = apply_generator(op, x)
    return x


def functor_matrix(word: CobordismWord) -> np.ndarray:
    """
    Dense matrix of the word on monomial bases indexed by mask.

    Returns:
        np.ndarray: shape (4^end_genus, 4^start_genus), column m is the image of
        monomial m. Words with handles are defined up to an overall sign.
    """
    g0, g1 = word.start_genus, word.end_genus
    matrix = np.zeros((1 << (2 * g1), 1 << (2 * g0)), dtype=object)
    for mask in range(1 << (2 * g0)):
        for target, c in apply_word(word, MultiVector.basis(g0, mask)).terms.items():
            matrix[target, mask] = c
    if word.sign_ambiguous:
        logger.warning(f"functor matrix of {word} is only defined up to sign")
    return matrix


def degree_block(word: CobordismWord, degree: int) -> np.ndarray:
    """Block of a closed word on degree-``degree`` monomials (ascending mask order)."""
    word.require_closed()
    masks = monomials(word.start_genus, degree)
    position = {m: r for r, m in enumerate(masks)}
    block = np.zeros((len(masks), len(masks)), dtype=object)
    for k, mask in enumerate(masks):
        for target, c in apply_word(word, MultiVector.basis(word.start_genus, mask)).terms.items():
            block[position[target], k] = c
    return block


def degree_trace(word: CobordismWord, degree: int) -> int:
    word.require_closed()
    g = word.start_genus
    return sum(inner(MultiVector.basis(g, m), apply_word(word, MultiVector.basis(g, m)))
               for m in monomials(g, degree))


def heegaard_invariant(psi: SymplecticMatrix) -> int:
    """
    <Omega_g, psi Omega_g> for the Heegaard gluing by psi.

    Equals +-|H_1| of the glued manifold, and 0 when b_1 >= 1.
    """
    omega = MultiVector.handlebody_state(psi.genus)
    return inner(omega, sp_action(psi, omega))


def halfprojective_exponent(b0_intersection: int, b0_c1: int, b0_c2: int, b0_union: int) -> int:
    """
    Rank of the connecting map H_1(C2 u C1) -> H_0(C2 n C1).

    Raises:
        NegativeRank: If the component counts are inconsistent
    """
    for name, value in (("intersection", b0_intersection), ("C1", b0_c1), ("C2", b0_c2), ("union", b0_union)):
        if value < 0:
            raise NegativeRank(f"negative component count for {name}: {value}")
    rank = b0_intersection - (b0_c1 + b0_c2 - b0_union)
    if rank < 0:
        raise NegativeRank(f"connecting map rank {rank} < 0 from counts "
                           f"({b0_intersection}, {b0_c1}, {b0_c2}, {b0_union})")
    return rank


def compose_halfprojective(second: np.ndarray, first: np.ndarray, exponent: int) -> np.ndarray:
    """
    Glue two cobordism maps under the x = 0 law.

    Returns second @ first when the connecting-map exponent is 0 and the zero
    matrix of that shape otherwise.
    """
    if second.shape[1] != first.shape[0]:
        raise ShapeError(f"cannot compose {second.shape} after {first.shape}")
    if exponent < 0:
        raise NegativeRank(f"negative exponent {exponent}")
    if exponent > 0:
        return np.zeros((second.shape[0], first.shape[1]), dtype=object)
    return second.dot(first)
