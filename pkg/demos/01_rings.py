# Exact rings: residues, localizations, and the dual numbers used for E7.
from chevk1.rings import (
    ZZ, Ideal, ResidueRing, asr_transform, maximal_ideals_containing,
    parse_ring, unimodular_certificate,
)

R = parse_ring("quot(poly(Z[1/2]; xi, zeta); xi^2)")
xi, zeta = R.gen("xi"), R.gen("zeta")
print("ring:", R)
print("xi^2 =", xi * xi)
u = 1 + zeta * xi
print("(1 + zeta*xi)^-1 =", u.inverse())
print("1 + zeta*xi/2 =", 1 + zeta * xi * R(2).inverse())
print("zeta is a unit?", zeta.is_unit())

# Bezout certificates
row = [ZZ(6), ZZ(10), ZZ(15)]
c = unimodular_certificate(row)
print("certificate for (6, 10, 15):", [int(x.value) for x in c])

Z6 = ResidueRing(6)
print("certificate for (2, 3) in Z/6:", [x.value for x in unimodular_certificate([Z6(2), Z6(3)])])

# ASR: shift the first entries by multiples of the last one
row = [ZZ(4), ZZ(6), ZZ(9)]
t = asr_transform(row, 3)
new = [r + s * row[-1] for r, s in zip(row, t)]
print("ASR t =", [x.value for x in t], "->", [x.value for x in new])
print("maximal ideals over the new row:", maximal_ideals_containing(Ideal(new)))
print("maximal ideals over <0> in Z/360:", maximal_ideals_containing(Ideal([ResidueRing(360)(0)])))
