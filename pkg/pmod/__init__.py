"""
F_p reductions of the Lefschetz components: quotient theories, E-power
resolutions, p-modular weights, the Specht-module realization and the
Fibonacci dimension identity.
"""
