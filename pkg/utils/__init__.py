"""
Utility modules shared across the packages.

Exact linear algebra over ZZ, QQ and F_p, the error hierarchy, logging
helpers and worker management.
"""
