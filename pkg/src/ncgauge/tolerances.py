"""Numerical tolerances used throughout the package.

Two regimes are distinguished:

* ``TAU_ALG`` — identities that hold exactly in the algebra and are only
  polluted by floating-point roundoff (commutator bases, Jacobi identity,
  gauge invariance, ...).
* ``TAU_NUM`` — quantities obtained from an iterative numerical procedure
  (gradient descent residuals, finite-difference spectra, ...).
"""

#: Tolerance for algebraically exact identities (roundoff only).
TAU_ALG = 1e-10

#: Tolerance for numerically obtained quantities (optimization, FD stencils).
TAU_NUM = 1e-8
