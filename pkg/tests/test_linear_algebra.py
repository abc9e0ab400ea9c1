"""
Unit tests for the integer, rational and mod-p linear algebra helpers.
"""

import unittest
import random
from fractions import Fraction

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np

from utils.lattice import elementary_divisors, exgcd, integer_kernel, is_saturated
from utils.modp import inv_mod_scalar, matmul_mod, nullspace_mod, rank_mod, rref_mod, solve_mod
from utils.rational_linalg import nullity_rational, rank_rational, solve_rational


class TestLattice(unittest.TestCase):
    """Test cases for extended gcd and integer kernels."""

    def setUp(self):
        self.rng = random.Random(4)

    def test_exgcd(self):
        """Extended GCD - Unimodular matrix sending (a, b) to (gcd, 0)"""
        for a, b in [(4, 6), (-9, 12), (0, 5), (7, 0), (13, -21), (0, 0)]:
            M = exgcd(a, b)
            self.assertEqual(M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0], 1)
            image = M.dot(np.array([a, b], dtype=object))
            self.assertEqual(image[1], 0)
            self.assertEqual(abs(image[0]), np.gcd(a, b))

    def test_kernel_small(self):
        """Integer Kernel - (2, 3) has kernel spanned by (3, -2)"""
        kernel = integer_kernel([{0: 2}, {0: 3}])
        self.assertEqual(kernel, [{0: 3, 1: -2}])

    def test_kernel_random_saturated(self):
        """Integer Kernel - Random sparse maps give saturated kernels of the right rank"""
        for _ in range(15):
            sources, targets = self.rng.randint(2, 7), self.rng.randint(1, 4)
            images = [{t: self.rng.randint(-3, 3) for t in range(targets) if self.rng.random() < 0.6}
                      for _ in range(sources)]
            kernel = integer_kernel(images)
            dense = np.array([[images[s].get(t, 0) for s in range(sources)] for t in range(targets)], dtype=object)
            self.assertEqual(len(kernel), sources - rank_rational(dense))
            for vector in kernel:
                for t in range(targets):
                    self.assertEqual(sum(c * images[s].get(t, 0) for s, c in vector.items()), 0)
            if kernel:
                columns = np.array([[v.get(s, 0) for v in kernel] for s in range(sources)], dtype=object)
                self.assertTrue(is_saturated(columns))

    def test_elementary_divisors(self):
        """Elementary Divisors - Smith form diagonal and saturation test"""
        self.assertEqual(elementary_divisors(np.array([[2, 0], [0, 3]], dtype=object)), [1, 6])
        self.assertFalse(is_saturated(np.array([[2], [0]], dtype=object)))
        self.assertTrue(is_saturated(np.array([[1], [2]], dtype=object)))


class TestModP(unittest.TestCase):
    """Test cases for F_p linear algebra."""

    def setUp(self):
        self.rng = np.random.default_rng(8)

    def test_rank_and_nullspace(self):
        """Rank and Nullspace - Rank plus nullity is the column count"""
        A = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        self.assertEqual(rank_mod(A, 5), 2)
        N = nullspace_mod(A, 5)
        self.assertEqual(N.shape, (3, 1))
        self.assertFalse(np.any(matmul_mod(A, N, 5)))

    def test_rref_pivots(self):
        """RREF - Pivot columns and reduced rows"""
        R, pivots = rref_mod(np.array([[0, 2, 4], [0, 1, 3]]), 7)
        self.assertEqual(pivots, [1, 2])
        self.assertTrue(np.array_equal(R, np.array([[0, 1, 0], [0, 0, 1]])))

    def test_random_systems(self):
        """Random Systems - Solutions of random invertible systems mod 7"""
        p = 7
        for _ in range(10):
            A = self.rng.integers(0, p, size=(4, 4))
            if rank_mod(A, p) < 4:
                continue
            b = self.rng.integers(0, p, size=(4, 2))
            x = solve_mod(A, b, p)
            self.assertTrue(np.array_equal(matmul_mod(A, x, p), b % p))

    def test_inconsistent_system(self):
        """Inconsistent System - Solving outside the column space raises"""
        A = np.array([[1, 0], [0, 1], [1, 1]])
        with self.assertRaises(ValueError):
            solve_mod(A, np.array([1, 1, 0]), 5)

    def test_scalar_inverse(self):
        """Scalar Inverse - a * a^-1 = 1 mod p"""
        for p in (3, 5, 7, 11):
            for a in range(1, p):
                self.assertEqual(a * inv_mod_scalar(a, p) % p, 1)


class TestRational(unittest.TestCase):
    """Test cases for exact rational solves."""

    def test_solve(self):
        """Rational Solve - Fractional solutions stay exact"""
        X = solve_rational(np.array([[2, 0], [0, 4]], dtype=object), np.array([[1], [2]], dtype=object))
        self.assertEqual(list(X[:, 0]), [Fraction(1, 2), Fraction(1, 2)])
        Y = solve_rational(np.array([[1, 1], [0, 1]], dtype=object), np.array([[3], [1]], dtype=object))
        self.assertEqual(list(Y[:, 0]), [2, 1])
        self.assertIsInstance(Y[0, 0], int)

    def test_rank(self):
        """Rational Rank - Rank and nullity"""
        A = np.array([[1, 2], [2, 4], [3, 6]], dtype=object)
        self.assertEqual(rank_rational(A), 1)
        self.assertEqual(nullity_rational(A), 1)


if __name__ == '__main__':
    import logging
    logging.basicConfig(level=logging.WARNING)
    unittest.main(verbosity=2)
