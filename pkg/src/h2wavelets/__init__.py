"""Exact construction and verification of wavelets for the Hardy space H^2(R).

Frequencies are exact rational multiples of pi, amplitudes live in
Q(sqrt 2), and every tiling or characterizing identity is checked without
rounding.  Floating point appears only in :mod:`h2wavelets.numeric`.
"""

__version__ = "0.1.0"

from .characterize import ClassLabel, WaveletVerdict, classify, is_msf, relevant_q, rho, t_q, verify_wavelet
from .constructions import (
    KrEpsilonBuild,
    make_K_r,
    make_K_r_eps,
    make_K_rk,
    make_K_xy,
    shannon_set,
)
from .errors import DomainError, ParameterError
from .exact import INV_SQRT2, PiScalar, Q2Value, is_unimodular, q2_abs_sq, q2_mul
from .intervals import Interval, IntervalSet, canonicalize, dilate, measure, set_intersect, set_subtract, set_union, translate
from .step_wavelet import StepFunction, indicator_wavelet, lemma1_table, make_psi_0, make_psi_r, support_profile
from .tiling import d_profile, dilation_equivalent, is_wavelet_set, tau_profile, translation_equivalent

__all__ = [
    "ClassLabel", "DomainError", "INV_SQRT2", "Interval", "IntervalSet", "KrEpsilonBuild",
    "ParameterError", "PiScalar", "Q2Value", "StepFunction", "WaveletVerdict",
    "canonicalize", "classify", "d_profile", "dilate", "dilation_equivalent", "indicator_wavelet",
    "is_msf", "is_unimodular", "is_wavelet_set", "lemma1_table", "make_K_r", "make_K_r_eps",
    "make_K_rk", "make_K_xy", "make_psi_0", "make_psi_r", "measure", "q2_abs_sq", "q2_mul",
    "relevant_q", "rho", "set_intersect", "set_subtract", "set_union", "shannon_set",
    "support_profile", "t_q", "tau_profile", "translate", "translation_equivalent", "verify_wavelet",
]
