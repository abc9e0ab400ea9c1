"""
Casson-invariant matrix elements, the theta_0 form, the Casson-Morita
cocycle and eigenspace data of restricted Lefschetz operators.
"""
