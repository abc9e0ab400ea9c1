"""
Job schemas and check reports.
"""
