"""
Homogeneous weight and p^r-ary images
=====================================

The homogeneous weight depends only on the valuation of an element.  Summed
over the coordinate image of the whole ring, it gives a number that does not
depend on the basis chosen.
"""

# %%
import random
from collections import Counter

from galring import GaloisRing, polynomial_basis, proposition_sum, whom, whom_character_oracle
from galring.bases import all_bases, random_basis

R = GaloisRing(2, 2, 2)
print(Counter(whom(z) for z in R.elements()))
print("worst gap to the character formula:",
      max(abs(whom(z) - whom_character_oracle(z)) for z in R.elements()))

# %%
# The weight sum of the image of every element, for every one of the 96 bases.
sums = Counter(proposition_sum(R, b).computed for b in all_bases(R))
print(sums, "expected", proposition_sum(R).expected)

# %%
# The same holds for random bases of a larger ring.
R9 = GaloisRing(3, 2, 2)
rng = random.Random(1)
print({proposition_sum(R9, random_basis(R9, rng)).computed for _ in range(20)},
      "expected", proposition_sum(R9).expected)

# %%
# Codes: the image of a GR-linear code is a Z_4-linear code twice as long.
from galring.codes import code_image, code_weight_stats, lemma3_check, parse_generator

code = parse_generator("1,0;0,1", R)
image = code_image(code, polynomial_basis(R))
print(len(image), "codewords of length", image.length)
print(code_weight_stats(code).to_dict())
print(lemma3_check(image).to_dict())
