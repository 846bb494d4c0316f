"""
Exact search and verification of mutually avoiding point sets, crossing families,
and positive-fraction families in the plane and in R^d.
"""
