"""
Batch processing for the command-line runner.

This module handles the job queue, command dispatch, the property suites
behind the check command and the golden tables.
"""
