"""One-sided integer inverses, built by hand and checked exactly.

A tall integer matrix E (more rows than columns) has a left inverse over the
integers exactly when the gcd of the determinants of its full square
submatrices is 1.  This script walks through the whole construction on a
3x2 matrix, then shows the transpose trick for right inverses and a matrix
where no unit inverse exists.

Run:  python demos/one_sided_inverses.py
"""

from k0hom import (
    IntMatrix,
    full_square_submatrices,
    gcd_with_bezout,
    minor_gcd,
    right_inverse,
    scaled_left_inverse,
    scattered_adjugate,
)
from k0hom.intlin import adjugate, determinant

E = IntMatrix.from_rows([[3, 3], [2, 0], [0, 5]])
print("E =")
print(E)

# Step 1: enumerate the full square submatrices (here: every choice of two
# of the three rows) and their determinants.
print("\nfull square submatrices:")
dets = []
for rows, block in full_square_submatrices(E):
    d = determinant(block)
    dets.append(d)
    print(f"  rows {rows}: det = {d:3d}   adj = {adjugate(block).to_rows()}")

# Step 2: combine the determinants with Bezout coefficients.
bez = gcd_with_bezout(dets)
print(f"\ngcd{tuple(dets)} = {bez.g}, coefficients {bez.coefficients}")

# Step 3: scatter each adjugate back to the tall shape.  Scattering puts the
# columns of adj(F) at the row positions F came from, so each scattered
# piece S satisfies S @ E = det(F) * I.
for rows, block in full_square_submatrices(E):
    s = scattered_adjugate(block, rows, E.rows)
    assert s @ E == determinant(block) * IntMatrix.identity(2)
print("every scattered adjugate S satisfies S @ E = det(F) * I  (checked)")

# Step 4: the Bezout combination of the scattered pieces is the left inverse.
# Any valid coefficients work; (4, 1, 1) is a tidy hand-picked choice for
# this matrix: 4*(-6) + 1*15 + 1*10 = 1.
result = scaled_left_inverse(E, coefficients=(4, 1, 1))
print(f"\nwith coefficients (4, 1, 1): d = {result.d}, K =")
print(result.matrix)
print("K @ E =")
print(result.matrix @ E)

# Right inverses reduce to left inverses of the transpose.
wide = E.transpose()
R = right_inverse(wide)
print("\nE^T is 2x3; its right inverse R satisfies E^T @ R = I:")
print(R)
assert wide @ R == IntMatrix.identity(2)

# When the minor gcd is not 1 there is no unit inverse, only a scaled one.
stuck = IntMatrix.from_rows([[2], [0]])
info = minor_gcd(stuck)
scaled = scaled_left_inverse(stuck)
print(f"\nfor [[2], [0]] the minor gcd is {info.d}; best possible is K @ E = {scaled.d} * I:")
print(scaled.matrix)
