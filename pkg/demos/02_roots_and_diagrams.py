# Root systems, subsystems and weight diagrams of minuscule representations.
from collections import Counter

from chevk1.roots import find_weyl_conjugator, named_subsystem, root_system
from chevk1.weights import diagram

for label in ("A1", "D5", "E6", "E7"):
    phi = root_system(label)
    print(f"{label}: {len(phi.roots)} roots, highest root {phi.highest_root}")

print(root_system("E6").cartan)

delta = named_subsystem("A1+D6@E7")
print("A1+D6 inside E7:", len(delta.roots), "roots,", len(delta.complement), "outside")
a1 = delta.ambient.simple_root(1)
lengths = Counter(len(find_weyl_conjugator(delta, r, a1)) for r in delta.complement)
print("Weyl word lengths carrying the outside roots to alpha_1:", dict(sorted(lengths.items())))

d = diagram("E6:w1")
print("E6:w1 has", len(d), "weights; levels under alpha_1:",
      [len(x) for x in d.level_decomposition(1)])
print("edges out of the highest weight:", [(b + 1, i) for a, b, i in d.edges if a == 0])
print("A5 orbit of mu:", [n + 1 for n in d.suborbit(named_subsystem("A5@E6"), 0)])

e7 = diagram("E7:w7")
print("E7:w7 levels under alpha_7:", [len(x) for x in e7.level_decomposition(7)])

# DOT output for the small D5 diagram
print(diagram("D5:w1").to_dot())
