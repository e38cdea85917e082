"""
Test suite for PyQColor

Contains unit tests, integration tests and the slow reproduction checks.
"""
