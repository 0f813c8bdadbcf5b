"""Bound states of deformed Woods-Saxon and Hulthen wells in D dimensions.

The centrifugal term is handled by a Pekeris-type expansion and energies come
from the improved quantization rule, cross-checked against a finite-difference
eigensolver.
"""
from .params import Family, PotentialSpec, QuantumNumbers, centrifugal_strength, derive_radius
from .spectrum import EnergyLevel, quantize_numeric, solve_energy

__version__ = "0.1.0"
__all__ = ["Family", "PotentialSpec", "QuantumNumbers", "centrifugal_strength", "derive_radius",
           "EnergyLevel", "quantize_numeric", "solve_energy"]
