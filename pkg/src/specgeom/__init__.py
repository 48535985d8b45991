"""Computational spectral geometry: flat-torus spectra, heat traces and polygon sequences."""

__version__ = "0.1.0"
