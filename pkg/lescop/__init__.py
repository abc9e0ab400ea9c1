"""
Lescop invariant from Alexander polynomials and from fundamental weights.
"""
