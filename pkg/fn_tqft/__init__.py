"""
The homological TQFT on cobordism words: functor matrices, Heegaard states,
fundamental torsion weights and Alexander polynomials.
"""
