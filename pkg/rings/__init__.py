"""
Exact scalar rings: Laurent polynomials, truncated polynomial rings over F_p,
quantum integers and rational helpers.
"""
