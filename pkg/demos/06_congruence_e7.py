# z_alpha(xi, zeta) in E7 is generated by E(A1+D6, R) and E(E7, (xi)).
import time

from chevk1.congruence import (
    general_z_membership, specialize_certificate, universal_context,
    verify_h_delta_product, verify_z_factorization, z_membership_word,
)
from chevk1.rings import ResidueRing

print(verify_z_factorization())
print(verify_h_delta_product())

ctx = universal_context()
xi, zeta = ctx.ring.gen("xi"), ctx.ring.gen("zeta")
cert = z_membership_word(xi, zeta)
for letter, tag in zip(cert.word, cert.tags):
    print(f"  {letter}  in {tag}")
print("replays to z_a1(xi, zeta):", cert.check())

start = time.perf_counter()
certs = [general_z_membership(r, xi, zeta, ctx) for r in ctx.delta.complement]
print(f"{sum(c.check() for c in certs)}/{len(certs)} roots outside A1+D6 certified "
      f"in {time.perf_counter() - start:.1f}s; longest word {max(len(c.word) for c in certs)} letters")

# push the universal certificate to Z/9 with xi -> 3
z9 = ResidueRing(9)
s = specialize_certificate(cert, {"xi": z9(3), "zeta": z9(4)}, z9, [3])
print("Z/9, xi -> 3, zeta -> 4:", s.check())
