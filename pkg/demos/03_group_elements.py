# Root elements as sparse matrices, and the Steinberg relations they satisfy.
from chevk1.group import X, apply_word, commutator, gen_h, gen_x, realize, representation, z_gen
from chevk1.rings import ResidueRing, parse_ring

rep = representation("A1:w1")
P = parse_ring("quot(poly(Z; xi, zeta); xi^2)")
xi, zeta = P.gen("xi"), P.gen("zeta")
a = rep.system.simple_root(1)
print("z_alpha(xi, zeta) in SL2:")
for row in z_gen(rep, a, xi, zeta).dense():
    print("   ", [str(x) for x in row])

e6 = representation("E6:w1")
F = ResidueRing(5)
phi = e6.system
a1, a3 = phi.simple_root(1), phi.simple_root(3)
s = tuple(x + y for x, y in zip(a1, a3))
c = commutator(gen_x(e6, a1, F(2)), gen_x(e6, a3, F(3)))
sign = 1 if c == gen_x(e6, s, F(6)) else -1
print(f"[x_a1(2), x_a3(3)] = x_(a1+a3)({sign} * 6) over Z/5")

# the torus element h_alpha(eps) is diagonal with eps^<lambda, alpha>
h = gen_h(e6, a1, F(2))
print("diagonal of h_a1(2):", [h.entry(n, n).value for n in range(e6.n)])

# words act on coordinate vectors; letters act right to left
v = [F(0)] * 27
v[1] = F(1)
print("x_a1(1) e^(mu - a1) has top coordinate", apply_word(e6, (X(a1, F(1)),), v)[0])

g = realize(e6, [X(r, F(k % 4 + 1)) for k, r in enumerate(phi.roots[::7])], F)
print("random product times its inverse is the identity:", (g @ g.inverse()).is_identity())
