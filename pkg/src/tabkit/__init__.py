"""Tableau combinatorics: equivalence relations on standard tableaux and
permutations, their quasisymmetric generating functions, and Schur
positivity machinery."""

__version__ = "1.0.0"
