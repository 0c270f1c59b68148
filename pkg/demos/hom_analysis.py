"""Analysing *-homomorphisms between finite-dimensional C*-algebras.

A map from M2 + M3 + M4 into M5 + M4 that stacks the first two blocks into
the M5 summand and passes the M4 block through is injective and unital but
not surjective; on K0 it is surjective but not injective.  All of that is
read off the multiplicity matrix, and this script shows how.

Run:  python demos/hom_analysis.py
"""

from k0hom import FdAlgebra, IntMatrix, analyze, compose, make_hom

# phi(x, y, z) = (diag(x, y), z): target block 1 holds one copy of each of
# the first two source blocks (2 + 3 = 5, no slack), target block 2 holds
# the third source block (4 = 4, no slack).
A = FdAlgebra.of(2, 3, 4)
B = FdAlgebra.of(5, 4)
phi = make_hom(A, B, IntMatrix.from_rows([[1, 1, 0], [0, 0, 1]]))

print(f"phi: {phi}")
print("multiplicity matrix:")
print(phi.matrix)
print(f"slack: {phi.slack}   (zero slack in every block: phi is unital)")

report = analyze(phi)
print(f"""
injective:             {report.phi_injective}
surjective:            {report.phi_surjective}
unital:                {report.phi_unital}
K0 injective:          {report.k0_injective}
K0 surjective:         {report.k0_surjective}
K0 unital:             {report.k0_unital}
cokernel torsion free: {report.cokernel_torsion_free}  (via {report.torsion_criterion})
invariant factors:     {report.invariant_factors}
""")
for note in report.notes:
    print("note:", note)

# Multiplicity matrices compose by matrix multiplication, so finite chains
# of algebras (layered diagrams) are analysed by multiplying the stages.
C = FdAlgebra.of(14)
psi = make_hom(B, C, IntMatrix.from_rows([[2, 1]]))  # 2*5 + 1*4 = 14
chain = compose(psi, phi)
print(f"psi: {psi},  psi after phi: {chain}")
print("composite multiplicity matrix (= product of the stage matrices):")
print(chain.matrix)

composite_report = analyze(chain)
print(f"composite K0 injective: {composite_report.k0_injective}")
print(f"composite unital:       {composite_report.phi_unital}")

# The same analyses are available from the command line:
#   k0hom analyze --workspace demos/example_workspace.json --hom phi
#   k0hom compose --workspace demos/example_workspace.json --homs phi,psi
