"""
Cut-number certificates from the Lescop invariant and the level-5 weights.
"""
