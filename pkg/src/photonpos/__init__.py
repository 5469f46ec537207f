"""Position eigenfunctions of the photon: closed forms, operators and numerical oracles."""

__version__ = "0.1.0"
