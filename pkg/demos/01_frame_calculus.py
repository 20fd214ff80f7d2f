"""Tour of the derivation-based differential calculus on square matrices.

Walks through the objects every other demo builds on: the orthogonal
traceless-hermitian frame basis, the frame one-forms theta^k, the
differential d', the Hodge star, and the normalized integral — printing
numeric residuals for the identities that make the calculus tick.
"""
import numpy as np

from ncgauge import (
    MatrixBasis,
    DerForm,
    canonical_theta,
    dprime,
    hodge,
    nc_integrate,
    wedge,
)
from ncgauge.derforms import random_form

np.set_printoptions(precision=4, suppress=True, linewidth=100)

n = 2
basis = MatrixBasis.gellmann(n)
print(f"frame basis for M_{n}(C): dim = {basis.dim}")
for k, mat in enumerate(basis.mats):
    print(f"E_{k} =\n{mat}")
print("pairwise trace products tr(E_k E_l) (should be 2*I):")
gram = np.array([[np.trace(a @ b).real for b in basis.mats] for a in basis.mats])
print(gram)

# structure constants: i[E_k, E_l] = sum_m C_klm E_m
print("\nstructure constants C[0,1,:] =", basis.c[0, 1])

# the canonical one-form theta = -i sum_k E_k theta^k drives the whole calculus
theta = canonical_theta(basis)
print("\nidentity residuals (machine zero expected):")
print("  d'(i theta) - (i theta)^2 :", (dprime(theta) - wedge(theta, theta)).norm())

rng = np.random.default_rng(0)
w = random_form(basis, 1, rng)
print("  d'(d' w) for a random 1-form:", dprime(dprime(w)).norm())

a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
fa = DerForm(basis, {(): a})
comm = wedge(theta, fa) - wedge(fa, theta)
print("  d'a - [i theta, a]          :", (dprime(fa) - comm).norm())

# Hodge star on the 3-dimensional frame of M_2: degree p -> 3 - p
one = DerForm(basis, {(0,): np.eye(n, dtype=complex)})
star = hodge(one)
print("\nstar(theta^0) components:", {k: np.trace(v).real / n for k, v in star.components.items()})
for p in range(basis.dim + 1):
    v = random_form(basis, p, rng)
    sign = (-1.0) ** (p * (basis.dim - p))
    print(f"  star(star(w)) - ({sign:+.0f})w at degree {p}:", (hodge(hodge(v)) - sign * v).norm())

# the integral picks the top component and kills differentials
eta = random_form(basis, basis.dim - 1, rng)
print("\nintegral of d'(random 2-form):", abs(nc_integrate(dprime(eta))))
vol = DerForm(basis, {tuple(range(basis.dim)): np.eye(n, dtype=complex)})
print("integral of the unit volume form:", nc_integrate(vol).real / basis.sqrt_g_det)
