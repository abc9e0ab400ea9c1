"""
Unit tests for the extended representations and the 1/1-solvable checker.
"""

import unittest
import random

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import sympy

from casson.cocycle import UClass
from exterior.multivector import MultiVector, contract, inner, monomials
from exterior.symplectic import SymplecticMatrix, random_symplectic, random_unimodular
from jm_ext.extension import component_action, extended_rep, mu_flat, semidirect_product
from jm_ext.solvable import (CassonCandidate, SolvableElement, SolvableSample, casson_type_check, check_solvable,
                             conjugate_sample, deform_sample, exterior_candidate)
from lefschetz.components import component_basis
from lefschetz.sl2 import E
from utils.errors import ShapeError

EXAMPLE_G = [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 2, 0], [1, 0, 0, 2]]


def random_u(genus: int, rng: random.Random) -> UClass:
    masks = monomials(genus, 3)
    x = MultiVector(genus, {rng.choice(masks): rng.randint(-2, 2) for _ in range(3)})
    return UClass.from_form(x)


def mono(genus: int, *bits: int) -> UClass:
    mask = 0
    for bit in bits:
        mask |= 1 << bit
    return UClass.from_form(MultiVector.basis(genus, mask))


def extended_sample(pairs, j: int, modulus=None) -> SolvableSample:
    """Sample whose elements are the extended matrices of (u, S) pairs and their products."""
    elements, products = {}, []
    for k, (first, second) in enumerate(pairs):
        product = semidirect_product(first, second)
        for name, (u, s) in ((f"x{k}", first), (f"y{k}", second), (f"xy{k}", product)):
            rep = extended_rep(u, s, j)
            element = SolvableElement.from_extended(rep)
            if modulus:
                element = SolvableElement(*(getattr(element, b) % modulus
                                            for b in ("rho1", "rho0", "mu", "lambda1", "lambda0", "nu", "kappa")))
            elements[name] = element
        products.append((f"x{k}", f"y{k}", f"xy{k}"))
    n0 = next(iter(elements.values())).dims[1]
    omega = np.zeros(n0, dtype=object)
    omega[0] = 1
    return SolvableSample(elements, products, omega, modulus)


class TestMuFlat(unittest.TestCase):
    """Test cases for mu-flat and the component actions."""

    def setUp(self):
        self.rng = random.Random(31)

    def test_omega_multiples_act_as_zero(self):
        """Omega Multiples - mu(omega ^ z) vanishes on ker F"""
        for _ in range(5):
            z = MultiVector(3, {1 << self.rng.randrange(6): self.rng.randint(1, 3)})
            matrix = mu_flat(UClass(E(z)), 1)
            self.assertFalse(np.any(matrix))

    def test_direct_contraction(self):
        """Direct Contraction - g = 3, j = 1 entries match contraction into degree 0"""
        u = mono(3, 0, 1, 2)
        matrix = mu_flat(u, 1)
        source, target = component_basis(3, 1), component_basis(3, 4)
        self.assertEqual(target.dimension, 1)
        self.assertEqual(matrix.shape, (1, source.dimension))
        for k, b in enumerate(source.basis):
            self.assertEqual(matrix[0, k], inner(target.basis[0], contract(u.representative, b)))

    def test_linear(self):
        """Linearity - mu-flat(u + u') = mu-flat(u) + mu-flat(u')"""
        u1, u2 = random_u(3, self.rng), random_u(3, self.rng)
        self.assertTrue(np.array_equal(mu_flat(u1 + u2, 1), mu_flat(u1, 1) + mu_flat(u2, 1)))

    def test_equivariance(self):
        """Equivariance - mu-flat(S u) = rho_{j+3}(S) mu-flat(u) rho_j(S)^-1"""
        for g, trials in ((3, 5), (4, 2)):
            for _ in range(trials):
                u, S = random_u(g, self.rng), random_symplectic(g, self.rng, length=8)
                left = mu_flat(u.transform(S), 1)
                right = component_action(S, 4).dot(mu_flat(u, 1)).dot(component_action(S.inverse(), 1))
                self.assertTrue(np.array_equal(left, right))


class TestExtendedRep(unittest.TestCase):
    """Test cases for the extended representation."""

    def setUp(self):
        self.rng = random.Random(37)
        self.zero = UClass(MultiVector.zero(3))

    def test_zero_class_is_block_diagonal(self):
        """Zero Class - (0, S) has a zero corner"""
        rep = extended_rep(self.zero, random_symplectic(3, self.rng), 1)
        self.assertFalse(np.any(rep.corner))
        self.assertEqual(rep.shape, (15, 15))

    def test_translations_add(self):
        """Translations - (u, I)(u', I) has corner mu(u) + mu(u')"""
        identity = SymplecticMatrix.identity(3)
        u1, u2 = random_u(3, self.rng), random_u(3, self.rng)
        product = extended_rep(u1, identity, 1) @ extended_rep(u2, identity, 1)
        self.assertTrue(np.array_equal(product.corner, mu_flat(u1, 1) + mu_flat(u2, 1)))

    def test_homomorphism(self):
        """Homomorphism - Matrices multiply like the semidirect product"""
        for _ in range(20):
            first = (random_u(3, self.rng), random_symplectic(3, self.rng, length=6))
            second = (random_u(3, self.rng), random_symplectic(3, self.rng, length=6))
            u, s = semidirect_product(first, second)
            product = extended_rep(*first, 1) @ extended_rep(*second, 1)
            self.assertTrue(np.array_equal(product.matrix(), extended_rep(u, s, 1).matrix()))

    def test_quotient(self):
        """Quotient - The V^(j) block is the plain Sp action"""
        S = random_symplectic(3, self.rng)
        rep = extended_rep(random_u(3, self.rng), S, 1)
        self.assertTrue(np.array_equal(rep.quotient(), component_action(S, 1)))


class TestSolvableChecker(unittest.TestCase):
    """Test cases for the coboundary relation checker."""

    def setUp(self):
        self.rng = random.Random(41)
        pairs = [((random_u(3, self.rng), random_symplectic(3, self.rng, length=5)),
                  (random_u(3, self.rng), random_symplectic(3, self.rng, length=5))) for _ in range(3)]
        self.pairs = pairs
        self.sample = extended_sample(pairs, 1)

    def test_untwisted_sample_passes(self):
        """Untwisted Sample - Extended representations satisfy every relation"""
        report = check_solvable(self.sample)
        self.assertTrue(report.passed, str(report))
        self.assertEqual(len(report.checks), 3 * 7)
        for values in report.data["invariants"].values():
            self.assertEqual(values["lambda"], 0)

    def test_mod_p_sample_passes(self):
        """Mod p - Reduced extended representations satisfy every relation mod 5"""
        report = check_solvable(extended_sample(self.pairs, 1, modulus=5))
        self.assertTrue(report.passed, str(report))

    def test_deformed_sample_passes(self):
        """Deformation - Conjugating by 1 + yX keeps the relations and fills the y-order blocks"""
        size = sum(self.sample.elements["x0"].dims)
        generator = np.array([[self.rng.randint(-2, 2) for _ in range(size)] for _ in range(size)], dtype=object)
        deformed = deform_sample(self.sample, generator)
        self.assertTrue(any(np.any(e.nu) or np.any(e.lambda0) for e in deformed.elements.values()))
        report = check_solvable(deformed)
        self.assertTrue(report.passed, str(report))

    def test_conjugated_sample_passes(self):
        """Change of Basis - diag(P1, P0) conjugation keeps the relations"""
        n1, n0 = self.sample.elements["x0"].dims
        p0 = random_unimodular(n0, self.rng)
        p0_inverse = np.array([[int(x) for x in row] for row in sympy.Matrix(p0.tolist()).inv().tolist()], dtype=object)
        p1 = np.eye(n1, dtype=object)
        report = check_solvable(conjugate_sample(self.sample, p1, p0, p1, p0_inverse))
        self.assertTrue(report.passed, str(report))

    def test_corrupted_sample_fails(self):
        """Corruption - Changing a product block is reported with a witness"""
        element = self.sample.elements["xy0"]
        element.mu = element.mu.copy()
        element.mu[0, 0] += 1
        report = check_solvable(self.sample)
        self.assertFalse(report.passed)
        failed = [check.name for check in report.failures]
        self.assertIn("delta mu = 0 on (x0, y0)", failed)
        self.assertEqual(report.failures[0].witness, [0, 0])

    def test_shape_errors(self):
        """Shape Errors - Inconsistent blocks and non-unit vectors raise"""
        one = np.eye(1, dtype=object)
        with self.assertRaises(ShapeError):
            SolvableElement(one, one, np.zeros((2, 1), dtype=object), one, one, one, one)
        element = SolvableElement.untwisted(one, one, one)
        with self.assertRaises(ShapeError):
            SolvableSample({"x": element}, [], np.array([2], dtype=object))
        with self.assertRaises(ShapeError):
            SolvableSample({"x": element}, [("x", "x", "z")], np.array([1], dtype=object))

    def test_json_round_trip(self):
        """JSON - Samples survive serialization"""
        data = self.sample.to_json()
        again = SolvableSample.from_json(data)
        self.assertEqual(again.to_json(), data)


class TestCassonType(unittest.TestCase):
    """Test cases for the Casson-type comparison."""

    def test_exterior_candidate_passes(self):
        """Exterior Candidate - lambda^(h) = E_C F_C passes for sampled cosets"""
        rng = random.Random(43)
        cosets = [SymplecticMatrix.identity(2), SymplecticMatrix.from_rows(EXAMPLE_G)]
        cosets += [random_symplectic(2, rng, length=6) for _ in range(4)]
        report = casson_type_check(exterior_candidate(2, [1]), cosets)
        self.assertTrue(report.passed, str(report))

    def test_zero_candidate_fails(self):
        """Zero Candidate - The example coset is reported as a witness"""
        base = exterior_candidate(2, [1])
        candidate = CassonCandidate(2, base.rho0, {1: np.zeros((16, 16), dtype=object)}, base.omega)
        G = SymplecticMatrix.from_rows(EXAMPLE_G)
        report = casson_type_check(candidate, [SymplecticMatrix.identity(2), G])
        self.assertFalse(report.passed)
        self.assertEqual(len(report.failures), 1)
        self.assertEqual(report.failures[0].witness, G.to_json())
        self.assertEqual(report.failures[0].detail, {"expected": -2, "actual": 0})

    def test_cocycle_pairing(self):
        """Cocycle Pairing - -2 <Omega, nu(a) mu(b) Omega> = 2 for the a^3/b^3 classes"""
        a3, b3 = mono(3, 0, 1, 2), mono(3, 3, 4, 5)
        report = casson_type_check(exterior_candidate(3, []), [], [(a3, b3), (b3, a3)])
        self.assertTrue(report.passed, str(report))
        self.assertEqual(report.checks[0].detail["expected"], 2)
        self.assertEqual(report.checks[1].detail["expected"], 0)


if __name__ == '__main__':
    import logging
    logging.basicConfig(level=logging.WARNING)
    unittest.main(verbosity=2)
