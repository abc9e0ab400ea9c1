"""
Johnson-Morita extended representations and checks for 1/1-solvable
theories over dual numbers.
"""
