# Bring a unimodular 27-vector to one with 1 on top using elementary letters.
import random

from chevk1.group import apply_word, representation
from chevk1.reduction import minimize_word, reduce_dl, reduce_e6, surjective_stability_witness
from chevk1.rings import ZZ, ResidueRing
from chevk1.sampling import random_element, random_vector

rep = representation("E6:w1")
rng = random.Random(2024)
v = random_vector(rng, ZZ, 27, bound=999)
print("v =", [x.value for x in v])

trace = []
word = reduce_e6(v, trace)
for t in trace:
    print(f"after step {t['step']}: top coordinate {t['vector'][0]}, {t['letters']} letters so far")
print("(h v)[mu] =", apply_word(rep, word, v)[0])
print("minimized word:", len(minimize_word(rep, word, v)), "of", len(word), "letters")

# the D5 vector representation on its own
w = random_vector(rng, ResidueRing(360), 10)
h = reduce_dl(w)
print("D5 over Z/360:", [x.value for x in w], "->", apply_word("D5:w1", h, w)[0], f"({len(h)} letters)")

# an element of E6 over Z/360: first make its corner 1, then split it
_, g = random_element(rng, rep, ResidueRing(360), 15, 30)
h, split = surjective_stability_witness(g)
print("corner of g:", g.entry(0, 0), "-> corner of h g:", g.left_word(h).entry(0, 0))
print("split of h g replays:", split.product() == g.left_word(h))
