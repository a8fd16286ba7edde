"""Highest derivatives, rho-data and Aubert duals for p-adic SO(2n+1) and Sp(2n)."""

from .arthur import ClassicalRep, TemperedParam, validate
from .aubert import DualResult, ReconstructionFailed, aubert_dual
from .core import CuspLabel, Duality, GLData, GroupType, HalfInt, HdualError, Segment, make_segment
from .corab import ABFamily, cor_ab, cor_kprime
from .jantzen import AmbiguousAtZero, EngineInvariantError, UnverifiedCase, highest_derivative, socle_of_rho_power
from .rhodata import RhoData, is_tempered_by_data, langlands_from_data, normal_form, rho_data
from .tempered import DerivativeResult, tempered_highest_derivative

__all__ = [
    "ABFamily",
    "AmbiguousAtZero",
    "ClassicalRep",
    "CuspLabel",
    "DerivativeResult",
    "DualResult",
    "Duality",
    "EngineInvariantError",
    "GLData",
    "GroupType",
    "HalfInt",
    "HdualError",
    "ReconstructionFailed",
    "RhoData",
    "Segment",
    "TemperedParam",
    "UnverifiedCase",
    "aubert_dual",
    "cor_ab",
    "cor_kprime",
    "highest_derivative",
    "is_tempered_by_data",
    "langlands_from_data",
    "make_segment",
    "normal_form",
    "rho_data",
    "socle_of_rho_power",
    "tempered_highest_derivative",
    "validate",
]
