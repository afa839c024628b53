"""
Experiment plugins for chainring.
"""
