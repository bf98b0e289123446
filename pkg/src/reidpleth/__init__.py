"""Symmetric functions, plethysm and Reidemeister numbers of free nilpotent groups."""

__version__ = "0.1.0"

from .freelie import F_poly, F_sym, chen_basis, eta, hall_basis
from .partitions import chen_dimension, kostka, kw_coefficient, witt_dimension
from .plethysm import alternating_e_series, plethysm, plethysm_substitution_oracle
from .polys import SymPoly
from .reidemeister import (
    CharPoly,
    SpectrumConfig,
    SpectrumReport,
    f_rk,
    g_rk,
    g_tilde,
    reidemeister_number,
    spectrum_search,
)
from .symfunc import EExpansion, SymFunc, convert, e_expand, multiply, phi_r

__all__ = [
    "CharPoly",
    "EExpansion",
    "F_poly",
    "F_sym",
    "SpectrumConfig",
    "SpectrumReport",
    "SymFunc",
    "SymPoly",
    "alternating_e_series",
    "chen_basis",
    "chen_dimension",
    "convert",
    "e_expand",
    "eta",
    "f_rk",
    "g_rk",
    "g_tilde",
    "hall_basis",
    "kostka",
    "kw_coefficient",
    "multiply",
    "phi_r",
    "plethysm",
    "plethysm_substitution_oracle",
    "reidemeister_number",
    "spectrum_search",
    "witt_dimension",
]
