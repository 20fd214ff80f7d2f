"""Finite spectral triples: the sign table, mutation detection, and the
three-summand algebra C (+) H (+) M_3(C).

The checker reports one named line per axiom.  This demo shows (1) a
minimal triple realizing each row of the eightfold sign table, (2) how a
single corrupted structure flips exactly its own line, and (3) the
32-dimensional bimodule on which the three-summand algebra acts with a
swap-adjoint reality operator.
"""
from dataclasses import replace

import numpy as np

from ncgauge import (
    KO_TABLE,
    FiniteSpectralTriple,
    RealStructure,
    check_axioms,
    sm_algebra_fixture,
    two_point_triple,
)

I2 = np.eye(2, dtype=complex)
Z2 = np.zeros((2, 2), dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
OM = np.array([[0, -1], [1, 0]], dtype=complex)  # squares to -1

# (Dirac, chirality, reality matrix) realizing each residue of the table
KO_EXAMPLES = {
    0: (Z2, I2, I2),
    1: (SY, None, I2),
    2: (Z2, SZ, OM),
    3: (I2, None, OM),
    4: (np.zeros((4, 4), dtype=complex), np.kron(I2, SZ), np.kron(OM, I2)),
    5: (SX, None, OM),
    6: (Z2, SZ, SX),
    7: (SX, None, I2),
}

# --- the sign table, realized --------------------------------------------
print("KO residue -> (J^2, J D, J gamma) signs, each realized by a tiny triple")
for k in range(8):
    d, gamma, u = KO_EXAMPLES[k]
    t = FiniteSpectralTriple(
        (np.eye(d.shape[0], dtype=complex),), d,
        gamma=gamma, j=RealStructure(u), ko_dim=k,
    )
    rep = check_axioms(t)
    eps_pp = t.eps_pp if t.gamma is not None else None
    assert (t.eps, t.eps_p, eps_pp) == KO_TABLE[k]
    print(f"  k = {k}: signs {KO_TABLE[k]!s:>13}  all axioms pass = {rep.passed}")

# --- mutation detection ----------------------------------------------------
print("\nsingle-structure corruption flips exactly the matching line:")
base = two_point_triple(4, np.zeros((4, 4)))  # all green
d_bad = base.d.copy()
d_bad[0, 4] += 0.1  # real bump in one off-diagonal entry
mutated = replace(base, d=d_bad)
for before, after in zip(check_axioms(base).lines, check_axioms(mutated).lines):
    flag = "  <- flipped" if before.passed != after.passed else ""
    print(f"  {after.name:<28} {'PASS' if after.passed else 'FAIL'}{flag}")

# --- the three-summand fixture ---------------------------------------------
print("\nC (+) H (+) M_3(C) on its 32-dimensional bimodule:")
fx = sm_algebra_fixture()
print("  generators checked      :", len(fx.triple.generators))
print("  homomorphism residual   :", f"{fx.homomorphism_residual:.2e}")
print("  order-zero residual     :", f"{fx.zeroth_order_residual:.2e}")
print("  first-order residual    :", f"{fx.first_order_residual:.2e}")
j = fx.triple.j
uni = np.linalg.norm(j.u.conj().T @ j.u - np.eye(32))
inv = np.linalg.norm(j.squared() - np.eye(32))
print(f"  reality operator: unitarity defect {uni:.2e}, J^2 - 1 defect {inv:.2e}")
