"""
The Lefschetz operators E, F and Hhat.

E wedges with omega, F is its inner-product adjoint (which is contraction by
omega, since J fixes omega) and Hhat scales degree-d pieces by d - g.
"""

from exterior.multivector import MultiVector, contract, popcount, wedge


def E(x: MultiVector) -> MultiVector:
    return wedge(MultiVector.omega(x.genus), x)


def F(x: MultiVector) -> MultiVector:
    return contract(MultiVector.omega(x.genus), x)


def Hhat(x: MultiVector) -> MultiVector:
    g = x.genus
    return MultiVector(g, {m: (popcount(m) - g) * c for m, c in x.terms.items()})


def E_power(x: MultiVector, k: int) -> MultiVector:
    for _ in range(k):
        x = E(x)
    return x


def F_power(x: MultiVector, k: int) -> MultiVector:
    for _ in range(k):
        x = F(x)
    return x


def commutator(x: MultiVector) -> MultiVector:
    """[E, F] applied to x."""
    return E(F(x)) - F(E(x))
