"""specoracle: independent arbitrary-precision verifier.

Recomputes Gamma/digamma values, the spectral symbol, curvature
constants, threshold roots, and brute-force Morse counts at 50 working
decimal digits (mpmath), and freezes them into plain-text golden files
consumed by the primary test suite. The primary package is never
imported; the only shared surfaces are the golden manifest/file formats
and the surface-spectrum file format.
"""

WORKING_DPS = 50
EMIT_DIGITS = 30
