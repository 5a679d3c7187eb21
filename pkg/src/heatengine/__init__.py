"""
quantum carnot and otto engines of a particle in a box, with first-order
generalized-uncertainty corrections and numerical oracles for every closed form
"""

__version__ = "0.1.0"
