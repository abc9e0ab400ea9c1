"""
Unit tests for the cut-number certificates.
"""

import unittest
import random
from fractions import Fraction

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cut.certificates import (CutReport, cut_report, delta5_literal, delta5_trace, genus2_shortcut,
                              level5_invariants, mapping_torus_b1, sym_charpoly_coeffs)
from exterior.symplectic import SymplecticMatrix, random_symplectic
from rings.laurent import LaurentPolynomial
from utils.errors import InconsistentInput

FIGURE_EIGHT_MONODROMY = SymplecticMatrix.from_rows([[2, 1], [1, 1]])
TREFOIL = LaurentPolynomial({1: 1, 0: -1, -1: 1})


class TestCharacteristicPolynomial(unittest.TestCase):
    """Test cases for the symmetrized characteristic polynomial."""

    def test_examples(self):
        """Coefficients - Identity and figure-eight monodromies"""
        self.assertEqual(sym_charpoly_coeffs(SymplecticMatrix.identity(1)), {-1: 1, 0: -2, 1: 1})
        self.assertEqual(sym_charpoly_coeffs(FIGURE_EIGHT_MONODROMY), {-1: 1, 0: -3, 1: 1})
        self.assertEqual(sym_charpoly_coeffs(SymplecticMatrix.identity(2)), {-2: 1, -1: -4, 0: 6, 1: -4, 2: 1})

    def test_palindromic_random(self):
        """Coefficients - Random genus-2 and genus-3 matrices are palindromic"""
        rng = random.Random(5)
        for g in (2, 3):
            for _ in range(5):
                coeffs = sym_charpoly_coeffs(random_symplectic(g, rng))
                self.assertEqual(coeffs[g], 1)
                for j in range(1, g + 1):
                    self.assertEqual(coeffs[j], coeffs[-j])


class TestDelta5(unittest.TestCase):
    """Test cases for the two forms of delta_5."""

    def test_literal_examples(self):
        """Literal - Identity, figure-eight and genus-2 identity"""
        self.assertEqual(delta5_literal(SymplecticMatrix.identity(1)), 2)
        self.assertEqual(delta5_literal(FIGURE_EIGHT_MONODROMY), 3)
        self.assertEqual(delta5_literal(SymplecticMatrix.identity(2)), 1)

    def test_trace_examples(self):
        """Trace - Identity, figure-eight and genus-2 identity"""
        self.assertEqual(delta5_trace(SymplecticMatrix.identity(1)), 2)
        self.assertEqual(delta5_trace(FIGURE_EIGHT_MONODROMY), 3)
        self.assertEqual(delta5_trace(SymplecticMatrix.identity(2)), 0)

    def test_forms_agree_in_genus_one(self):
        """Genus One - Literal and trace forms agree on random matrices"""
        rng = random.Random(11)
        for _ in range(100):
            matrix = random_symplectic(1, rng)
            self.assertEqual(delta5_literal(matrix), delta5_trace(matrix), str(matrix))
            self.assertEqual(delta5_trace(matrix), matrix.trace() % 5)

    def test_genus2_shortcut(self):
        """Shortcut - Triggers on the genus-2 identity"""
        self.assertTrue(genus2_shortcut(SymplecticMatrix.identity(2)))


class TestLevel5(unittest.TestCase):
    """Test cases for the level-5 invariants."""

    def test_figure_eight(self):
        """Figure Eight - tau_5 = 2 and lambda_L = 1 mod 5 both ways"""
        level5 = level5_invariants(FIGURE_EIGHT_MONODROMY)
        self.assertEqual(level5.tau5, 2)
        self.assertEqual(level5.lescop.value, Fraction(-13, 12))
        self.assertEqual((level5.lescop_mod5, level5.weights_mod5), (1, 1))

    def test_product(self):
        """Product - Sigma_2 x S^1 gives zero Lescop value"""
        level5 = level5_invariants(SymplecticMatrix.identity(2))
        self.assertEqual(level5.tau5, 1)
        self.assertEqual(level5.lescop.value, 0)
        self.assertFalse(level5.lescop.sign_certain)
        self.assertEqual(level5.to_json()["lescop_mod5"], {"exact": 0, "weights": 0})

    def test_routes_agree_random(self):
        """Random - Exact and weight reductions agree"""
        rng = random.Random(23)
        for g in (1, 2):
            for _ in range(4):
                level5 = level5_invariants(random_symplectic(g, rng))
                self.assertEqual(level5.lescop_mod5, level5.weights_mod5)


class TestCutReport(unittest.TestCase):
    """Test cases for cut_report."""

    def test_b1(self):
        """Betti Number - 1 + nullity(S - I)"""
        self.assertEqual(mapping_torus_b1(FIGURE_EIGHT_MONODROMY), 1)
        self.assertEqual(mapping_torus_b1(SymplecticMatrix.identity(2)), 5)

    def test_figure_eight_torus(self):
        """Figure Eight - Both certificates give cut = 1"""
        report = cut_report(monodromy=FIGURE_EIGHT_MONODROMY)
        self.assertEqual(report.b1, 1)
        self.assertEqual(report.lescop.value, Fraction(-13, 12))
        self.assertEqual((report.delta5_literal, report.delta5_trace), (3, 3))
        self.assertEqual((report.lower, report.upper), (1, 1))
        self.assertEqual(report.upper_provenance, ["Lescop", "delta5"])
        self.assertEqual(report.cut, 1)
        self.assertIsNone(report.genus2_shortcut)
        self.assertEqual(report.tau5, 2)

    def test_product_has_no_certificate(self):
        """Product - Sigma_2 x S^1 keeps bounds [1, b1]"""
        report = cut_report(monodromy=SymplecticMatrix.identity(2))
        self.assertEqual(report.b1, 5)
        self.assertEqual(report.lescop.value, 0)
        self.assertEqual(report.delta5_trace, 0)
        self.assertEqual(report.delta5_literal, 1)
        self.assertTrue(report.genus2_shortcut)
        self.assertEqual((report.lower, report.upper), (1, 5))
        self.assertEqual(report.upper_provenance, ["b1"])
        self.assertIsNone(report.cut)

    def test_witness_lower_bound(self):
        """Witness - A caller-supplied free quotient raises the lower bound"""
        report = cut_report(monodromy=SymplecticMatrix.identity(2), known_lower=2)
        self.assertEqual((report.lower, report.upper), (2, 5))
        self.assertEqual(report.lower_provenance, "witness")
        with self.assertRaises(InconsistentInput):
            cut_report(monodromy=FIGURE_EIGHT_MONODROMY, known_lower=2)

    def test_s1_x_s2(self):
        """Polynomial Input - D = 1 with b1 = 1 has cut 1"""
        report = cut_report(alexander=LaurentPolynomial.one(), b1=1)
        self.assertEqual(report.lescop.value, Fraction(-1, 12))
        self.assertTrue(report.lescop.sign_certain)
        self.assertIsNone(report.delta5_literal)
        self.assertEqual(report.delta5_trace, 1)
        self.assertEqual(report.upper_provenance, ["Lescop", "delta5"])
        self.assertEqual(report.cut, 1)
        self.assertEqual(report.lescop_mod5, {"exact": 2, "weights": 2})

    def test_trefoil_polynomial(self):
        """Polynomial Input - Trefoil weights give delta_5 = 4"""
        report = cut_report(alexander=TREFOIL, b1=1)
        self.assertEqual(report.lescop.value, Fraction(11, 12))
        self.assertEqual(report.delta5_trace, 4)
        self.assertEqual(report.lescop_mod5, {"exact": 3, "weights": 3})

    def test_inconsistent_inputs(self):
        """Inconsistent - Missing, doubled or contradictory inputs"""
        with self.assertRaises(InconsistentInput):
            cut_report()
        with self.assertRaises(InconsistentInput):
            cut_report(monodromy=FIGURE_EIGHT_MONODROMY, alexander=TREFOIL, b1=1)
        with self.assertRaises(InconsistentInput):
            cut_report(monodromy=FIGURE_EIGHT_MONODROMY, b1=2)
        with self.assertRaises(InconsistentInput):
            cut_report(alexander=TREFOIL)
        with self.assertRaises(InconsistentInput):
            cut_report(alexander=TREFOIL, b1=2)
        with self.assertRaises(InconsistentInput):
            CutReport(b1=1, lescop=None, delta5_literal=None, delta5_trace=0, lower=2, upper=1,
                      lower_provenance="witness", upper_provenance=["b1"])

    def test_report_json(self):
        """JSON - Bounds, provenance and both delta_5 values"""
        data = cut_report(monodromy=FIGURE_EIGHT_MONODROMY).to_json()
        self.assertEqual(data["bounds"], {"lower": 1, "upper": 1})
        self.assertEqual(data["provenance"]["upper"], ["Lescop", "delta5"])
        self.assertEqual(data["lescop"], {"value": "-13/12", "sign_certain": True})
        self.assertEqual((data["delta5_literal"], data["delta5_trace"]), (3, 3))
        self.assertEqual(data["cut"], 1)


if __name__ == '__main__':
    import logging
    logging.basicConfig(level=logging.WARNING)
    unittest.main(verbosity=2)
