"""
turanlab - exact computation workbench for generalized Turan problems
Counts copies of H in G, computes ex(n,H,F) by isomorph-free enumeration and
runs the symmetrization, supersaturation, deletion and stability procedures
"""

__version__ = "0.3.0"
