# g = v g1 u for an element of E6 whose highest-weight corner is a unit.
import random

from chevk1.decomposition import chevalley_matsumoto
from chevk1.group import representation
from chevk1.rings import ResidueRing
from chevk1.sampling import random_element

rep = representation("E6:w1")
ring = ResidueRing(7)
word, g = random_element(random.Random(1), rep, ring, 20, 20, unit_corner=True)
print("g is a product of", len(word), "root elements; corner =", g.entry(0, 0))

split = chevalley_matsumoto(g)
print("v uses", len(split.v.word), "letters, u uses", len(split.u.word))
print("v g1 u == g:", split.product() == g)

# g1 is block diagonal for the alpha_1 levels (sizes 1, 16, 10)
level = rep.diagram.level_of
mixing = sum(1 for j, col in enumerate(split.g1.cols) for i in col if level(i, 1) != level(j, 1))
print("entries of g1 that mix alpha_1 levels:", mixing)
