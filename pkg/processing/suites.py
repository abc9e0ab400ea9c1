"""
Property suites for the check command.

Each suite samples its inputs from a seeded random source and records one
check per identity; nothing reads files or the network. Genus limits are
capped per suite so that "all" finishes in minutes.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, Dict

import numpy as np

from casson.cocycle import UClass
from casson.curves import BoundingCurveSpec, casson_twist, random_curve
from casson.theta import LinkingForm, psi_value, theta0, twist_tensor
from cut.certificates import cut_report, delta5_literal, delta5_trace, level5_invariants, sym_charpoly_coeffs
from exterior.multivector import HomologyClass, MultiVector, adjoint_wedge, contract, inner, jmap, monomials, wedge
from exterior.symplectic import SymplecticMatrix, random_symplectic, sp_action
from fn_tqft.cobordism import CobordismWord
from fn_tqft.weights import alexander_trace, fundamental_weights
from jm_ext.extension import extended_rep, semidirect_product
from jm_ext.solvable import casson_type_check, exterior_candidate
from lefschetz.components import component_basis, component_dimension
from lefschetz.decomposition import decompose, reassemble
from lefschetz.sl2 import E, F, Hhat, commutator
from lescop.invariants import lescop_coefficient, lescop_from_alexander, lescop_from_weights, normalize_weights
from models.reports import Report
from pmod.fibonacci import fibonacci_dim_check
from pmod.resolution import resolution_check
from pmod.specht import specht_check
from pmod.weights import lescop_mod_p, pmod_alexander, pmod_weights
from rings.laurent import LaurentPolynomial
from rings.quantum import cyclotomic_reduce, quantum_integer, symmetrize_and_normalize
from rings.truncated import TruncatedPoly
from utils.errors import MismatchError, WedgeworksError
from utils.lattice import is_saturated

logger = logging.getLogger(__name__)

SAMPLES = 5
FIGURE_EIGHT = SymplecticMatrix.from_rows([[2, 1], [1, 1]])


def _random_form(genus: int, degree: int, rng: random.Random) -> MultiVector:
    masks = monomials(genus, degree)
    if not masks:
        return MultiVector.zero(genus)
    return MultiVector(genus, {rng.choice(masks): rng.randint(-3, 3) for _ in range(4)})


def _random_pair(genus: int, rng: random.Random) -> MultiVector:
    """A decomposable 2-form u ^ v."""
    u, v = (HomologyClass(genus, tuple(rng.randint(-2, 2) for _ in range(2 * genus))) for _ in range(2))
    return wedge(u.to_multivector(), v.to_multivector())


def rings_suite(report: Report, rng: random.Random, gmax: int, p: int):
    vanishes = cyclotomic_reduce(quantum_integer(p), p) == TruncatedPoly(p, p - 1)
    report.add(f"[{p}] vanishes in F_{p}[zeta]", vanishes)
    for k in range(1, p):
        shifted = cyclotomic_reduce(quantum_integer(2 * p - k), p)
        report.add(f"[{2 * p - k}] = -[{k}] mod {p}", shifted == cyclotomic_reduce(quantum_integer(k), p) * -1)
    for _ in range(SAMPLES):
        poly = LaurentPolynomial({0: rng.randint(1, 5)})
        for j in range(1, 4):
            c = rng.randint(-3, 3)
            poly = poly + LaurentPolynomial({j: c, -j: c})
        moved = -poly.shift(rng.randint(-3, 3))
        same = symmetrize_and_normalize(moved) == symmetrize_and_normalize(poly)
        report.add("normal form ignores shifts and sign", same, None if same else poly.to_json())


def exterior_suite(report: Report, rng: random.Random, gmax: int, p: int):
    for g in range(1, min(gmax, 3) + 1):
        omega = MultiVector.omega(g)
        for _ in range(SAMPLES):
            A, B = random_symplectic(g, rng), random_symplectic(g, rng)
            x = _random_form(g, rng.randint(0, 2 * g), rng)
            same = sp_action(A @ B, x) == sp_action(A, sp_action(B, x))
            report.add(f"Sp action is a homomorphism g={g}", same, None if same else x.to_json())
            fixed = sp_action(A, omega) == omega
            report.add(f"Sp fixes omega g={g}", fixed, None if fixed else A.to_json())
        for _ in range(SAMPLES):
            dx = rng.randint(0, 2)
            dw = rng.randint(0, 2 * g - dx)
            x, w, v = _random_form(g, dx, rng), _random_form(g, dw, rng), _random_form(g, dx + dw, rng)
            mu = inner(contract(x, v), w) == inner(v, wedge(jmap(x), w))
            report.add(f"mu adjoint to wedge with Jx g={g}", mu, None if mu else x.to_json())
            nu = inner(adjoint_wedge(x, v), w) == inner(v, wedge(x, w))
            report.add(f"nu adjoint to wedge g={g}", nu, None if nu else x.to_json())


def lefschetz_suite(report: Report, rng: random.Random, gmax: int, p: int):
    for g in range(1, min(gmax, 4) + 1):
        for _ in range(SAMPLES):
            x = _random_form(g, rng.randint(0, 2 * g), rng)
            relation = commutator(x) == Hhat(x)
            report.add(f"[E, F] = Hhat g={g}", relation, None if relation else x.to_json())
            report.add(f"decomposition reassembles g={g}", reassemble(g, decompose(x)) == x)
            y = _random_form(g, rng.randint(0, 2 * g), rng)
            adjoint = inner(E(x), y) == inner(x, F(y))
            report.add(f"F adjoint to E g={g}", adjoint, None if adjoint else [x.to_json(), y.to_json()])
        multiplicity = 0
        for j in range(1, g + 2):
            component = component_basis(g, j)
            report.add(f"dim V^({j}) g={g}", component.dimension == component_dimension(g, j),
                       built=component.dimension, expected=component_dimension(g, j))
            if not component.is_empty():
                report.add(f"V^({j}) lattice saturated g={g}", is_saturated(component.basis_matrix()))
            multiplicity += j * component.dimension
        report.add(f"multiplicity identity g={g}", multiplicity == 4 ** g, total=multiplicity, expected=4 ** g)


def fn_tqft_suite(report: Report, rng: random.Random, gmax: int, p: int):
    for g in range(1, min(gmax, 3) + 1):
        for _ in range(SAMPLES):
            S = random_symplectic(g, rng)
            word = CobordismWord.mapping_class(S)
            trace = alexander_trace(word)
            oracle = LaurentPolynomial({j: (-1) ** g * a for j, a in sym_charpoly_coeffs(S).items()})
            report.add(f"Alexander trace = characteristic polynomial g={g}", trace == oracle,
                       None if trace == oracle else S.to_json())
            expanded = fundamental_weights(word).alexander()
            report.add(f"Alexander trace = weight expansion g={g}", trace == expanded,
                       None if trace == expanded else S.to_json())


def lescop_suite(report: Report, rng: random.Random, gmax: int, p: int):
    table = [lescop_coefficient(j) for j in range(1, 7)]
    expected = [Fraction(-1, 12), Fraction(-5, 6), Fraction(15, 4), Fraction(-29, 3), Fraction(235, 12),
                Fraction(-69, 2)]
    report.add("coefficient table", table == expected)
    word = CobordismWord.mapping_class(FIGURE_EIGHT)
    weights = normalize_weights(fundamental_weights(word))
    report.add("figure-eight weights", weights.as_list() == [3, 1], weights=weights.as_list())
    report.add("figure-eight Lescop value", lescop_from_weights(weights).value == Fraction(-13, 12))
    report.add("figure-eight Lescop mod 5", lescop_mod_p(pmod_weights(word, 5).residues, 5) == 1)
    for g in range(1, min(gmax, 3) + 1):
        for _ in range(SAMPLES):
            S = random_symplectic(g, rng)
            word = CobordismWord.mapping_class(S)
            by_poly = lescop_from_alexander(alexander_trace(word)).value
            by_weights = lescop_from_weights(normalize_weights(fundamental_weights(word))).value
            report.add(f"polynomial and weight routes agree g={g}", by_poly == by_weights,
                       None if by_poly == by_weights else S.to_json())


def casson_suite(report: Report, rng: random.Random, gmax: int, p: int):
    for g in range(2, min(gmax, 4) + 1):
        for h in range(1, g):
            report.add(f"standard curve h={h} g={g}", casson_twist(BoundingCurveSpec.standard(g, h)) == 0)
    example = BoundingCurveSpec(2, (HomologyClass(2, (1, 0, 0, 1)),), (HomologyClass(2, (0, 1, 2, 0)),))
    report.add("explicit genus-2 curve", casson_twist(example) == 2)
    g = min(max(gmax, 2), 3)
    for _ in range(SAMPLES):
        curve = random_curve(g, rng.randint(1, g - 1), rng)
        twist = casson_twist(curve)
        value = theta0(twist_tensor(curve), LinkingForm.standard(g))
        report.add(f"theta_0 of the twist tensor g={g}", value == twist, None if value == twist else curve.to_json())
    for g in range(2, min(max(gmax, 2), 4) + 1):
        for _ in range(SAMPLES):
            terms = [(_random_pair(g, rng), _random_pair(g, rng), rng.randint(-3, 3))
                     for _ in range(rng.randint(1, 3))]
            by_form, by_operator = theta0(terms, LinkingForm.standard(g)), psi_value(terms)
            report.add(f"theta_0 = <Omega, Psi(A) Omega> g={g}", by_form == by_operator,
                       None if by_form == by_operator else [[a.to_json(), b.to_json(), c] for a, b, c in terms])


def _random_u(genus: int, rng: random.Random) -> UClass:
    masks = monomials(genus, 3)
    return UClass.from_form(MultiVector(genus, {rng.choice(masks): rng.randint(-2, 2) for _ in range(3)}))


def jm_ext_suite(report: Report, rng: random.Random, gmax: int, p: int):
    cosets = [SymplecticMatrix.identity(2)] + [random_symplectic(2, rng) for _ in range(SAMPLES)]
    inner = casson_type_check(exterior_candidate(2, [1]), cosets)
    report.add("exterior algebra is of Casson type g=2", inner.passed, len(inner.failures) or None)
    for _ in range(SAMPLES):
        first = (_random_u(3, rng), random_symplectic(3, rng))
        second = (_random_u(3, rng), random_symplectic(3, rng))
        product = extended_rep(*semidirect_product(first, second), 1).matrix()
        composed = (extended_rep(*first, 1) @ extended_rep(*second, 1)).matrix()
        report.add("extension is a homomorphism g=3", np.array_equal(product, composed))


def pmod_suite(report: Report, rng: random.Random, gmax: int, p: int):
    top = min(gmax, 4)
    for g in range(1, top + 1):
        for k in range(1, p):
            exact = resolution_check(k, p, g, strict=False)
            report.add(f"resolution of V^({k})_{p} g={g}", exact.passed,
                       None if exact.passed else exact.failures[0].name)
        for _ in range(SAMPLES if g < 3 else 1):
            S = random_symplectic(g, rng)
            try:
                routes = pmod_alexander(CobordismWord.mapping_class(S), p)
            except MismatchError as e:
                report.add(f"modular weight routes agree g={g}", False, {"monodromy": S.to_json(), "error": str(e)})
                continue
            agree = routes.weights_route == routes.direct
            report.add(f"modular weight routes agree g={g}", agree, None if agree else S.to_json())
    if p >= 3:
        for n in range(3, min(2 * top + 2, 8) + 1):
            k = 1 if n % 2 == 0 else 2
            if k >= p:
                continue
            permutations = [list(range(n))] + [rng.sample(range(n), n) for _ in range(SAMPLES)]
            specht = specht_check(n, k, p, permutations, strict=False)
            report.add(f"Specht dimension and characters n={n} k={k}", specht.passed,
                       None if specht.passed else specht.failures[0].name)
    if p == 5:
        for g in range(2, top + 1, 2):
            report.add(f"Fibonacci dimension g={g}", fibonacci_dim_check(g, strict=False).passed)


def cut_suite(report: Report, rng: random.Random, gmax: int, p: int):
    for _ in range(SAMPLES):
        S = random_symplectic(1, rng)
        report.add("delta_5 forms agree g=1", delta5_literal(S) == delta5_trace(S), None if
                   delta5_literal(S) == delta5_trace(S) else S.to_json())
    for g in range(1, min(gmax, 2) + 1):
        level5 = level5_invariants(random_symplectic(g, rng))
        report.add(f"Lescop mod 5 routes agree g={g}", level5.lescop_mod5 == level5.weights_mod5)
    report.add("figure-eight torus has cut 1", cut_report(monodromy=FIGURE_EIGHT).cut == 1)
    product = cut_report(monodromy=SymplecticMatrix.identity(2))
    report.add("Sigma_2 x S^1 has no certificate", product.upper == product.b1 and product.lescop.value == 0)


SUITES: Dict[str, Callable[[Report, random.Random, int, int], None]] = {
    "rings": rings_suite,
    "exterior": exterior_suite,
    "lefschetz": lefschetz_suite,
    "fn_tqft": fn_tqft_suite,
    "lescop": lescop_suite,
    "casson": casson_suite,
    "jm_ext": jm_ext_suite,
    "pmod": pmod_suite,
    "cut": cut_suite,
}


def run_suite(name: str, seed: int, gmax: int, p: int) -> Report:
    """
    Run one suite, or every suite for "all", with a fresh seeded source each.

    A domain error inside a suite is recorded as a failed check naming the
    suite, and the remaining suites still run.
    """
    names = list(SUITES) if name == "all" else [name]
    report = Report(f"check {name} (seed={seed}, gmax={gmax}, p={p})")
    for suite in names:
        logger.info(f"running suite {suite} with seed {seed}")
        rng = random.Random(seed)
        part = Report(suite)
        try:
            SUITES[suite](part, rng, gmax, p)
        except WedgeworksError as e:
            part.add(f"{type(e).__name__}", False, str(e))
        for check in part.checks:
            check.name = f"{suite}: {check.name}"
            report.checks.append(check)
    report.data.update({"suites": names, "seed": seed, "gmax": gmax, "p": p})
    return report
