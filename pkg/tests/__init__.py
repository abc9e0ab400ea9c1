"""
Test package for Wedgeworks.
"""
