"""
Core components of chainring: models, settings, sampling and the harness.
"""
