"""Finite group engine for sigma-subnormality, T_sigma-groups and condition R_sigma_i."""

__version__ = "0.1.0"
