"""Homogeneous extensions of set functions and spectra of function pairs."""

from . import constants, extend, setfn, simplex, spectra, structures, verify

__all__ = ["setfn", "extend", "structures", "spectra", "constants", "verify", "simplex"]
__version__ = "0.1.0"
