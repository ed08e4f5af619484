"""
commseries: exact decision procedures for series recognised by product automata
"""

__version__ = "0.1.0"
