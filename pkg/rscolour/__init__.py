"""
Restricted star (rs) colouring: verification, exact search, polynomial-time 3-rs tests for trees and chordal graphs,
hardness constructions and rs-based compression of sparse symmetric matrices.
"""

__version__ = '0.1.0'
