"""Exact character-theoretic toolkit.

Subpackages cover exact cyclotomic arithmetic (:mod:`repscreen.cyclo`),
character-table ingestion and validation (:mod:`repscreen.chartab`),
symmetric/exterior power decompositions (:mod:`repscreen.sympow`),
semi-invariant degree scans (:mod:`repscreen.invdeg`), Hilbert-function
screening of invariant subvarieties (:mod:`repscreen.screen`), and a
brute-force verification engine for small explicit groups
(:mod:`repscreen.oracle`).
"""

from .cyclo import CycNum, cyclotomic_poly, root

__all__ = ["CycNum", "cyclotomic_poly", "root"]
__version__ = "0.1.0"
