"""
Unit tests for the p-modular reductions, resolutions, weights and Specht checks.
"""

import unittest
import random
from fractions import Fraction

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np

from exterior.multivector import MultiVector
from exterior.symplectic import SymplecticMatrix, random_symplectic
from fn_tqft.cobordism import CobordismWord
from fn_tqft.weights import fundamental_weights
from lefschetz.components import component_basis
from lefschetz.sl2 import E
from lescop.invariants import lescop_from_weights
from pmod.components import modular_component
from pmod.fibonacci import fibonacci, fibonacci_dim_check
from pmod.resolution import ek_map, resolution_check, resolution_indices
from pmod.specht import character, specht_check, specht_dimension, two_row_partition
from pmod.weights import lescop_mod_p, lescop_table, pmod_alexander, pmod_weights
from rings.laurent import LaurentPolynomial
from rings.quantum import cyclotomic_reduce
from rings.rational import rational_mod
from rings.truncated import TruncatedPoly
from utils.errors import ContainmentViolation, PreconditionError
from utils.modp import matmul_mod, mod_p

FIGURE_EIGHT = [[2, 1], [1, 1]]


def omega_residues(genus: int, p: int) -> np.ndarray:
    """omega mod p as a column in the degree-2 monomial basis."""
    component = modular_component(genus, genus - 1, p)
    return mod_p(component.coordinates_mod([MultiVector.omega(genus)]), p)


def mapping_word(matrix: SymplecticMatrix) -> CobordismWord:
    return CobordismWord.mapping_class(matrix)


class TestModularComponent(unittest.TestCase):
    """Test cases for reductions of the Lefschetz components."""

    def test_nondegenerate_genus_two(self):
        """Nondegenerate - V^(1)_5(Sigma_2) has quotient dimension 5"""
        component = modular_component(2, 1, 5)
        self.assertEqual(component.dimension, 5)
        self.assertEqual(component.quotient_dimension, 5)
        self.assertEqual(component.null_dimension, 0)

    def test_omega_null_vector(self):
        """Null Vector - V^(4)_5(Sigma_5) has the reduction of omega as its only null vector"""
        component = modular_component(5, 4, 5)
        self.assertEqual(component.dimension, 44)
        self.assertEqual(component.null_dimension, 1)
        self.assertEqual(component.quotient_dimension, 43)
        vector = component.null_vectors()[0]
        omega_masks = set(MultiVector.omega(5).terms)
        self.assertEqual(set(vector.terms), omega_masks)
        self.assertEqual(len(set(vector.terms.values())), 1)

    def test_null_space_is_radical(self):
        """Radical - Null vectors pair to zero with everything and dimensions add up"""
        for g, j, p in ((3, 2, 3), (4, 3, 5), (5, 4, 5), (4, 1, 3), (4, 2, 7)):
            component = modular_component(g, j, p)
            self.assertEqual(component.quotient_dimension + component.null_dimension, component.dimension)
            self.assertFalse(np.any(matmul_mod(component.gram, component.null_space, p)))

    def test_containment_violation(self):
        """Containment - A non-primitive form is not in V^(j)_Z + pL"""
        component = modular_component(2, 1, 5)
        x = MultiVector.basis(2, (1 << 0) | (1 << 2))
        with self.assertRaises(ContainmentViolation):
            component.coordinates_mod([x])

    def test_not_prime(self):
        """Primes Only - Composite moduli are rejected"""
        with self.assertRaises(PreconditionError):
            modular_component(2, 1, 9)


class TestResolution(unittest.TestCase):
    """Test cases for E-power maps and exactness of the resolution."""

    def setUp(self):
        self.rng = random.Random(53)

    def test_indices(self):
        """Indices - c_i alternates ip + k and (i + 1)p - k"""
        self.assertEqual(resolution_indices(4, 5, 30), [4, 6, 14, 16, 24, 26])
        self.assertEqual(resolution_indices(1, 5, 10), [1, 9])
        self.assertEqual(resolution_indices(2, 3, 2), [2])
        with self.assertRaises(PreconditionError):
            resolution_indices(5, 5, 10)

    def test_scalar_maps_to_omega(self):
        """Scalar Image - E sends 1 in V^(6)(Sigma_5) to the null vector omega"""
        matrix = ek_map(5, 6, 1, 5)
        target = modular_component(5, 4, 5)
        self.assertEqual(matrix.shape, (44, 1))
        self.assertTrue(np.array_equal(matrix, omega_residues(5, 5)))
        self.assertFalse(np.any(matmul_mod(target.gram, matrix, 5)))

    def test_well_defined(self):
        """Well Defined - Images of integer combinations match the matrix mod p"""
        source = component_basis(4, 4)
        matrix = ek_map(4, 4, 1, 3)
        target = modular_component(4, 2, 3)
        for _ in range(20):
            coeffs = [self.rng.randint(-4, 4) for _ in source.basis]
            x = source.vector(coeffs)
            image = target.coordinates_mod([E(x)])
            expected = matmul_mod(matrix, mod_p(np.array(coeffs, dtype=object).reshape(-1, 1), 3), 3)
            self.assertTrue(np.array_equal(image, expected))

    def test_preconditions(self):
        """Preconditions - j != k mod p and j - 2k < 1 are rejected"""
        with self.assertRaises(PreconditionError):
            ek_map(5, 5, 1, 5)
        with self.assertRaises(PreconditionError):
            ek_map(5, 1, 1, 5)

    def test_example_sequence(self):
        """Example Sequence - V^(6)_5 -> V^(4)_5 -> quotient -> 0 is exact in genus 5"""
        report = resolution_check(4, 5, 5)
        self.assertTrue(report.passed, str(report))
        self.assertEqual([node["c"] for node in report.data["nodes"]], [4, 6])
        self.assertEqual(report.data["kernel_dimension"], 1)
        self.assertEqual(report.data["quotient_dimension"], 43)

    def test_truncated_sequence(self):
        """Truncated - V^(9) vanishes in genus 4 so V^(1)_5 has full Gram rank"""
        report = resolution_check(1, 5, 4)
        self.assertTrue(report.passed, str(report))
        self.assertEqual(report.data["quotient_dimension"], 42)
        self.assertEqual(report.data["kernel_dimension"], 0)

    def test_genus_six(self):
        """Genus Six - V^(4)_5(Sigma_6) has a 12-dimensional kernel and quotient 196"""
        report = resolution_check(4, 5, 6)
        self.assertTrue(report.passed, str(report))
        self.assertEqual(report.data["nodes"][1]["dimension"], 12)
        self.assertEqual(report.data["quotient_dimension"], 196)

    def test_longer_chain(self):
        """Longer Chain - V^(7) -> V^(5) -> V^(1) -> quotient is exact for p = 3 in genus 6"""
        report = resolution_check(1, 3, 6)
        self.assertTrue(report.passed, str(report))
        self.assertEqual([node["c"] for node in report.data["nodes"]], [1, 5, 7])
        self.assertEqual([node["exponent"] for node in report.data["nodes"][1:]], [2, 1])


class TestModularWeights(unittest.TestCase):
    """Test cases for p-modular weights and the mod-p formulas."""

    def setUp(self):
        self.rng = random.Random(59)

    def test_figure_eight(self):
        """Figure Eight - Weights (3, 1, 0, 0) mod 5"""
        weights = pmod_weights(mapping_word(SymplecticMatrix.from_rows(FIGURE_EIGHT)), 5)
        self.assertEqual(weights.as_list(), [3, 1, 0, 0])

    def test_identity_genus_two(self):
        """Identity - Genus-2 identity has weights (0, 4, 1, 0) mod 5"""
        weights = pmod_weights(mapping_word(SymplecticMatrix.identity(2)), 5)
        self.assertEqual(weights.as_list(), [0, 4, 1, 0])
        self.assertEqual(weights.integral.as_list(3), [5, 4, 1])

    def test_random_route_agreement(self):
        """Route Agreement - Quotient traces equal alternating sums on random words"""
        for p in (5, 7):
            for g in (1, 2, 3):
                for _ in range(3 if g < 3 else 1):
                    word = mapping_word(random_symplectic(g, self.rng, length=8))
                    weights = pmod_weights(word, p)
                    self.assertEqual(len(weights.as_list()), p - 1)

    def test_alexander_figure_eight(self):
        """Alexander Mod 5 - Figure-eight weights give the reduction of -t + 3 - 1/t"""
        result = pmod_alexander(mapping_word(SymplecticMatrix.from_rows(FIGURE_EIGHT)), 5)
        expected = cyclotomic_reduce(LaurentPolynomial({1: -1, 0: 3, -1: -1}), 5)
        self.assertEqual(result.weights_route, expected)
        self.assertEqual(result.direct, expected)

    def test_alexander_identity_vanishes(self):
        """Alexander Identity - (t - 1)^4 / t^2 vanishes in F_5[y]/y^4"""
        result = pmod_alexander(mapping_word(SymplecticMatrix.identity(2)), 5)
        self.assertTrue(result.direct.is_zero())

    def test_alexander_trivial_word(self):
        """Trivial Word - Genus 0 gives 1"""
        result = pmod_alexander(CobordismWord(0), 5)
        self.assertEqual(result.direct, TruncatedPoly(5, 4, [1]))

    def test_alexander_random(self):
        """Alexander Routes - Weight route equals direct reduction on random words"""
        for _ in range(5):
            word = mapping_word(random_symplectic(2, self.rng, length=8))
            result = pmod_alexander(word, 7)
            self.assertEqual(result.weights_route, result.direct)

    def test_lescop_tables(self):
        """Lescop Tables - Reductions of L^(k) for p = 5 and p = 7"""
        self.assertEqual(lescop_table(5), (2, 0, 0, 2))
        self.assertEqual(lescop_table(7), (4, 5, 2, 2, 5, 4))
        with self.assertRaises(PreconditionError):
            lescop_table(3)

    def test_lescop_figure_eight(self):
        """Lescop Mod 5 - Figure-eight weights give -13/12 mod 5 = 1"""
        self.assertEqual(lescop_mod_p({1: 3, 2: 1}, 5), 1)
        self.assertEqual(rational_mod(Fraction(-13, 12), 5), 1)

    def test_lescop_random(self):
        """Lescop Routes - Modular weights reproduce the exact value mod p"""
        for p in (5, 7):
            for _ in range(4):
                word = mapping_word(random_symplectic(2, self.rng, length=8))
                modular = pmod_weights(word, p)
                exact = lescop_from_weights(fundamental_weights(word)).value
                self.assertEqual(lescop_mod_p(modular.residues, p), rational_mod(exact, p))


class TestSpecht(unittest.TestCase):
    """Test cases for the Specht-module realization."""

    def setUp(self):
        self.rng = random.Random(61)

    def sample(self, n: int, count: int):
        permutations = [list(range(n))]
        for _ in range(count - 1):
            permutation = list(range(n))
            self.rng.shuffle(permutation)
            permutations.append(permutation)
        return permutations

    def test_partitions(self):
        """Partitions - Two rows from n and c"""
        self.assertEqual(two_row_partition(10, 1), (5, 5))
        self.assertEqual(two_row_partition(9, 2), (5, 4))
        self.assertEqual(two_row_partition(9, 8), (8, 1))
        self.assertIsNone(two_row_partition(5, 8))
        with self.assertRaises(PreconditionError):
            two_row_partition(9, 1)

    def test_dimension_formula(self):
        """Dimension Formula - Zero-weight spaces have the hook-length dimensions"""
        for n in range(1, 9):
            for c in range(1 + n % 2, n + 2, 2):
                second = two_row_partition(n, c)[1]
                self.assertEqual(character(n, c, list(range(n))), specht_dimension(n, second))

    def test_small_case(self):
        """Small Case - n = 4, p = 3 leaves a one-dimensional irreducible"""
        report = specht_check(4, 1, 3, self.sample(4, 6))
        self.assertTrue(report.passed, str(report))
        self.assertEqual([m["dimension"] for m in report.data["modules"]], [2, 1])
        self.assertEqual(report.data["irreducible_dimension"], 1)

    def test_nine_handles(self):
        """Nine Handles - dim D = 42 - 8 for n = 9, k = 2, p = 5"""
        report = specht_check(9, 2, 5, self.sample(9, 10))
        self.assertTrue(report.passed, str(report))
        self.assertEqual([m["dimension"] for m in report.data["modules"]], [42, 8])
        self.assertEqual(report.data["irreducible_dimension"], 34)

    def test_ten_handles(self):
        """Ten Handles - dim D = 42 - 9 + 1 for n = 10, k = 1, p = 5"""
        report = specht_check(10, 1, 5, self.sample(10, 10))
        self.assertTrue(report.passed, str(report))
        self.assertEqual([m["dimension"] for m in report.data["modules"]], [42, 9, 1])
        self.assertEqual(report.data["irreducible_dimension"], 34)

    def test_single_module(self):
        """Single Module - n = 5, k = 2: the next partition is invalid so D = S"""
        report = specht_check(5, 2, 5, self.sample(5, 4))
        self.assertTrue(report.passed, str(report))
        self.assertEqual(report.data["irreducible_dimension"], 5)

    def test_identity_trace(self):
        """Identity Trace - The identity has trace dim mod p"""
        report = specht_check(6, 1, 5, [list(range(6))])
        trace_check = [c for c in report.checks if c.name.startswith("modular trace")][0]
        self.assertEqual(trace_check.detail["trace"], report.data["irreducible_dimension"] % 5)

    def test_preconditions(self):
        """Preconditions - Wrong parity and wrong permutation length are rejected"""
        with self.assertRaises(PreconditionError):
            specht_check(9, 1, 5)
        with self.assertRaises(PreconditionError):
            specht_check(4, 1, 3, [[0, 1, 2]])


class TestFibonacci(unittest.TestCase):
    """Test cases for the level-5 Fibonacci dimension identity."""

    def test_sequence(self):
        """Sequence - f_0..f_6"""
        self.assertEqual([fibonacci(n) for n in range(7)], [0, 1, 1, 2, 3, 5, 8])

    def test_small_genera(self):
        """Small Genera - 5 + 0 and 42 + 8"""
        for g, parts in ((2, {"1": 5, "4": 0}), (4, {"1": 42, "4": 8})):
            report = fibonacci_dim_check(g)
            self.assertTrue(report.passed)
            self.assertEqual(report.data["quotient_dimensions"], parts)

    def test_genus_six(self):
        """Genus Six - 429 + 196 = 625"""
        report = fibonacci_dim_check(6)
        self.assertTrue(report.passed)
        self.assertEqual(report.data["quotient_dimensions"], {"1": 429, "4": 196})

    def test_preconditions(self):
        """Preconditions - Odd genus, large genus and other primes are rejected"""
        for args in ((3,), (8,), (2, 7)):
            with self.assertRaises(PreconditionError):
                fibonacci_dim_check(*args)


if __name__ == '__main__':
    import logging
    logging.basicConfig(level=logging.WARNING)
    unittest.main(verbosity=2)
