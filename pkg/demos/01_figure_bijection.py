"""
From walkers to involutions
===========================

Three walkers start on sites 1, 2, 3.  At each time step one of them moves
one site, and walkers never share a site.  The word below says which walker
moved and which way (a ``~`` marks a step to the left).
"""

from viciouswalk import ClassOne, ClassTwo, parse_word, tableau_sequence, walk_to_array
from viciouswalk.bijection import TwoLineArray, array_to_involution, array_to_walk, lds_involution
from viciouswalk.tableaux import lds

word = parse_word("1 2 1 2~ 1~ 1~")
c = ClassTwo(2)

# each step adds or removes one box; the diagram stays a partition
for t, d in enumerate(tableau_sequence(word, c)):
    print(f"t={t}  shape={d.shape}")
    print(d)

###############################################################################
# Removing a box ejects a label by reverse column insertion.  Recording the
# time of each removal over the label it ejected gives a two-line array.

a = walk_to_array(word, c)
print(a)

###############################################################################
# Reading the columns of the array as two-cycles gives a fixed-point-free
# involution of {1..6}.  Its longest decreasing subsequence is twice that of
# the bottom row.

s = array_to_involution(a)
print(s.sigma, lds_involution(s), 2 * lds(a.bottom))

###############################################################################
# The map runs backwards too, and the first class uses rows in place of
# columns.

print(array_to_walk(TwoLineArray.parse("3 4 6 / 1 2 5"), c))
print(walk_to_array(parse_word("1 2 2~ 1~ 1 1~"), ClassOne(2)))
