"""
Checks for 1/1-solvable theories over the dual numbers M[y]/y^2.

An element psi acts on W_1 (+) W_0 by

    [[rho1, mu], [0, rho0]] + y [[lambda1, kappa], [nu, lambda0]].

For sampled pairs (psi, phi) with their product, the homomorphism property
is equivalent to the coboundary relations checked here, where
delta xi(psi, phi) = rho(psi) xi(phi) - xi(psi phi) + xi(psi) rho(phi):

    delta nu = delta mu = 0
    -delta lambda1(psi, phi) = mu(psi) nu(phi)
    -delta lambda0(psi, phi) = nu(psi) mu(phi)
    -delta kappa(psi, phi)   = lambda1(psi) mu(phi) + mu(psi) lambda0(phi)
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from casson.cocycle import UClass
from casson.curves import BoundingCurveSpec, RestrictedSl2, casson_twist, operator_matrix
from casson.theta import psi_pair
from exterior.multivector import contract, wedge
from exterior.symplectic import SymplecticMatrix
from fn_tqft.cobordism import CobordismWord
from fn_tqft.functor import functor_matrix
from jm_ext.extension import ExtendedRep
from models.reports import Report
from utils.errors import ShapeError

logger = logging.getLogger(__name__)

BLOCKS = ("rho1", "rho0", "mu", "lambda1", "lambda0", "nu", "kappa")


def _reduce(matrix: np.ndarray, modulus: Optional[int]) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=object)
    return matrix % modulus if modulus else matrix


@dataclasses.dataclass
class SolvableElement:
    """The seven blocks of one group element."""

    rho1: np.ndarray
    rho0: np.ndarray
    mu: np.ndarray
    lambda1: np.ndarray
    lambda0: np.ndarray
    nu: np.ndarray
    kappa: np.ndarray

    def __post_init__(self):
        for name in BLOCKS:
            block = np.asarray(getattr(self, name), dtype=object)
            if block.ndim != 2:
                raise ShapeError(f"block {name} must be a matrix, got {block.ndim} dimensions")
            setattr(self, name, block)
        n1, n0 = self.rho1.shape[0], self.rho0.shape[0]
        expected = {"rho1": (n1, n1), "rho0": (n0, n0), "mu": (n1, n0), "lambda1": (n1, n1),
                    "lambda0": (n0, n0), "nu": (n0, n1), "kappa": (n1, n0)}
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise ShapeError(f"block {name} has shape {getattr(self, name).shape}, expected {shape}")

    @property
    def dims(self) -> Tuple[int, int]:
        return self.rho1.shape[0], self.rho0.shape[0]

    @classmethod
    def untwisted(cls, rho1: np.ndarray, mu: np.ndarray, rho0: np.ndarray) -> SolvableElement:
        """An element with all y-order blocks zero."""
        n1, n0 = rho1.shape[0], rho0.shape[0]
        return cls(rho1, rho0, mu, np.zeros((n1, n1), dtype=object), np.zeros((n0, n0), dtype=object),
                   np.zeros((n0, n1), dtype=object), np.zeros((n1, n0), dtype=object))

    @classmethod
    def from_extended(cls, rep: ExtendedRep) -> SolvableElement:
        return cls.untwisted(rep.upper, rep.corner, rep.lower)

    def constant_part(self) -> np.ndarray:
        n1, n0 = self.dims
        return np.block([[self.rho1, self.mu], [np.zeros((n0, n1), dtype=object), self.rho0]])

    def y_part(self) -> np.ndarray:
        return np.block([[self.lambda1, self.kappa], [self.nu, self.lambda0]])

    @classmethod
    def from_parts(cls, constant: np.ndarray, y_part: np.ndarray, n1: int) -> SolvableElement:
        if np.any(constant[n1:, :n1]):
            raise ShapeError("constant part is not block upper-triangular")
        return cls(constant[:n1, :n1], constant[n1:, n1:], constant[:n1, n1:],
                   y_part[:n1, :n1], y_part[n1:, n1:], y_part[n1:, :n1], y_part[:n1, n1:])

    def to_json(self) -> dict:
        return {name: [[int(x) for x in row] for row in getattr(self, name)] for name in BLOCKS}

    @classmethod
    def from_json(cls, data: Mapping) -> SolvableElement:
        try:
            return cls(*(np.array(data[name], dtype=object) for name in BLOCKS))
        except KeyError as e:
            raise ShapeError(f"missing block {e}")


@dataclasses.dataclass
class SolvableSample:
    """
    Named elements, listed products and the distinguished vector of W_0.

    ``modulus`` is a prime p for M = F_p, or None for M = Z.
    """

    elements: Dict[str, SolvableElement]
    products: List[Tuple[str, str, str]]
    omega: np.ndarray
    modulus: Optional[int] = None
    parameter: Optional[str] = None

    def __post_init__(self):
        self.omega = np.asarray(self.omega, dtype=object).reshape(-1)
        dims = {element.dims for element in self.elements.values()}
        if len(dims) > 1:
            raise ShapeError(f"elements act on spaces of different dimensions: {sorted(dims)}")
        if dims and self.omega.shape[0] != next(iter(dims))[1]:
            raise ShapeError(f"distinguished vector has length {self.omega.shape[0]}, "
                             f"W_0 has dimension {next(iter(dims))[1]}")
        norm = _reduce(np.array([self.omega.dot(self.omega)], dtype=object), self.modulus)[0]
        if norm != 1:
            raise ShapeError(f"distinguished vector has norm {norm}, expected 1")
        for names in self.products:
            for name in names:
                if name not in self.elements:
                    raise ShapeError(f"product references unknown element {name!r}")

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "parameter": self.parameter,
                "omega": [int(x) for x in self.omega],
                "elements": {name: element.to_json() for name, element in self.elements.items()},
                "products": [list(p) for p in self.products]}

    @classmethod
    def from_json(cls, data: Mapping) -> SolvableSample:
        elements = {name: SolvableElement.from_json(blocks) for name, blocks in data["elements"].items()}
        return cls(elements, [tuple(p) for p in data.get("products", [])], np.array(data["omega"], dtype=object),
                   data.get("modulus"), data.get("parameter"))


def _coboundary(rho_target: np.ndarray, xi: Callable[[str], np.ndarray], rho_source: np.ndarray,
                left: str, right: str, product: str) -> np.ndarray:
    return rho_target.dot(xi(right)) - xi(product) + xi(left).dot(rho_source)


def _first_nonzero(matrix: np.ndarray) -> Optional[List[int]]:
    nonzero = np.argwhere(matrix != 0)
    return [int(i) for i in nonzero[0]] if len(nonzero) else None


def check_solvable(sample: SolvableSample) -> Report:
    """
    Verify the coboundary relations on every listed product, then record
    the invariants tau + y lambda = <Omega, rho0 Omega> + y <Omega, lambda0 Omega>
    and the trace pair Delta + y Xi of every element.
    """
    report = Report("1/1-solvable sample")
    e = sample.elements
    p = sample.modulus

    def block(name):
        return lambda element: getattr(e[element], name)

    for left, right, product in sample.products:
        a, b = e[left], e[right]
        relations = {
            "delta nu = 0": _coboundary(a.rho0, block("nu"), b.rho1, left, right, product),
            "delta mu = 0": _coboundary(a.rho1, block("mu"), b.rho0, left, right, product),
            "-delta lambda1 = mu nu": _coboundary(a.rho1, block("lambda1"), b.rho1, left, right, product)
            + a.mu.dot(b.nu),
            "-delta lambda0 = nu mu": _coboundary(a.rho0, block("lambda0"), b.rho0, left, right, product)
            + a.nu.dot(b.mu),
            "-delta kappa = lambda1 mu + mu lambda0": _coboundary(a.rho1, block("kappa"), b.rho0, left, right, product)
            + a.lambda1.dot(b.mu) + a.mu.dot(b.lambda0),
            "rho1 multiplicative": a.rho1.dot(b.rho1) - e[product].rho1,
            "rho0 multiplicative": a.rho0.dot(b.rho0) - e[product].rho0,
        }
        for name, residual in relations.items():
            residual = _reduce(residual, p)
            witness = _first_nonzero(residual)
            report.add(f"{name} on ({left}, {right})", witness is None, witness, pair=[left, right, product])

    invariants, traces = {}, {}
    for name, element in e.items():
        tau = _reduce(np.array([sample.omega.dot(element.rho0.dot(sample.omega))], dtype=object), p)[0]
        lam = _reduce(np.array([sample.omega.dot(element.lambda0.dot(sample.omega))], dtype=object), p)[0]
        invariants[name] = {"tau": int(tau), "lambda": int(lam)}
        delta = _reduce(np.array([np.trace(element.rho1) + np.trace(element.rho0)], dtype=object), p)[0]
        xi = _reduce(np.array([np.trace(element.lambda1) + np.trace(element.lambda0)], dtype=object), p)[0]
        traces[name] = {"Delta": int(delta), "Xi": int(xi)}
    report.data.update({"invariants": invariants, "traces": traces, "parameter": sample.parameter})
    logger.info(f"checked {len(sample.products)} products: {len(report.failures)} failed relations")
    return report


def deform_sample(sample: SolvableSample, generator: np.ndarray) -> SolvableSample:
    """
    Conjugate every element by 1 + y X.

    The y-order part becomes B + X A - A X, which keeps the product law; the
    constant part, and hence the block shape, is unchanged.
    """
    generator = np.asarray(generator, dtype=object)
    elements = {}
    for name, element in sample.elements.items():
        constant = element.constant_part()
        y_part = element.y_part() + generator.dot(constant) - constant.dot(generator)
        elements[name] = SolvableElement.from_parts(constant, _reduce(y_part, sample.modulus), element.dims[0])
    return SolvableSample(elements, list(sample.products), sample.omega, sample.modulus, sample.parameter)


def conjugate_sample(sample: SolvableSample, p1: np.ndarray, p0: np.ndarray,
                     p1_inverse: np.ndarray, p0_inverse: np.ndarray) -> SolvableSample:
    """Change of basis by diag(P1, P0) on W_1 (+) W_0; the distinguished vector is kept."""
    elements = {}
    for name, x in sample.elements.items():
        elements[name] = SolvableElement(
            p1.dot(x.rho1).dot(p1_inverse), p0.dot(x.rho0).dot(p0_inverse), p1.dot(x.mu).dot(p0_inverse),
            p1.dot(x.lambda1).dot(p1_inverse), p0.dot(x.lambda0).dot(p0_inverse),
            p0.dot(x.nu).dot(p1_inverse), p1.dot(x.kappa).dot(p0_inverse))
    return SolvableSample(elements, list(sample.products), sample.omega, sample.modulus, sample.parameter)


@dataclasses.dataclass
class CassonCandidate:
    """
    Data of a candidate theory to compare with the Casson formulas.

    ``rho0`` gives the action of a symplectic matrix on W_0; ``lambda_blocks``
    maps h to the operator lambda^(h) on W_0; ``nu`` and ``mu`` give the
    maps U -> Hom(W_1, W_0) and U -> Hom(W_0, W_1) when available.
    """

    genus: int
    rho0: Callable[[SymplecticMatrix], np.ndarray]
    lambda_blocks: Dict[int, np.ndarray]
    omega: np.ndarray
    nu: Optional[Callable[[UClass], np.ndarray]] = None
    mu: Optional[Callable[[UClass], np.ndarray]] = None


def casson_type_check(candidate: CassonCandidate, cosets: Sequence[SymplecticMatrix],
                      u_pairs: Sequence[Tuple[UClass, UClass]] = ()) -> Report:
    """
    Compare <Omega, G L^(h) G^-1 Omega> with <Omega', G lambda^(h) G^-1 Omega'>
    for every h and sampled G, and -2 <Omega, nu(a) mu(b) Omega> with
    <Omega', nu'(a) mu'(b) Omega'> for the given U pairs.
    """
    report = Report("Casson-type comparison")
    omega = np.asarray(candidate.omega, dtype=object)
    for h, block in sorted(candidate.lambda_blocks.items()):
        curve = BoundingCurveSpec.standard(candidate.genus, h)
        for k, G in enumerate(cosets):
            expected = -casson_twist(curve.transform(G))
            conjugated = candidate.rho0(G).dot(block).dot(candidate.rho0(G.inverse()))
            actual = omega.dot(conjugated.dot(omega))
            report.add(f"twist matrix element h={h} G#{k}", expected == actual,
                       None if expected == actual else G.to_json(), expected=expected, actual=actual)
    if u_pairs and (candidate.nu is None or candidate.mu is None):
        raise ShapeError("U pairs given but the candidate has no nu/mu maps")
    for k, (a, b) in enumerate(u_pairs):
        expected = -2 * psi_pair(a.representative, b.representative)
        actual = omega.dot(candidate.nu(a).dot(candidate.mu(b)).dot(omega))
        report.add(f"cocycle pairing #{k}", expected == actual, None if expected == actual else k,
                   expected=expected, actual=actual)
    return report


def exterior_candidate(genus: int, hs: Sequence[int]) -> CassonCandidate:
    """
    The exterior algebra itself as W_0: rho0 is the functor matrix,
    lambda^(h) = E_C F_C for the standard h-curve, nu = -2 nu and mu = mu.
    """
    lambda_blocks = {}
    for h in hs:
        ops = RestrictedSl2(BoundingCurveSpec.standard(genus, h))
        lambda_blocks[h] = operator_matrix(lambda x, ops=ops: ops.E(ops.F(x)), genus)
    omega = np.zeros(1 << (2 * genus), dtype=object)
    omega[(1 << genus) - 1] = 1
    return CassonCandidate(
        genus,
        lambda G: functor_matrix(CobordismWord.mapping_class(G)),
        lambda_blocks,
        omega,
        nu=lambda a: operator_matrix(lambda x: wedge(a.representative, x), genus) * -2,
        mu=lambda b: operator_matrix(lambda x: contract(b.representative, x), genus),
    )
