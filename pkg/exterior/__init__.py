"""
Exterior algebra of surface homology, its inner product, complex structure,
symplectic form and the induced symplectic-group action.
"""
