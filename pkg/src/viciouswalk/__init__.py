"""Vicious walkers on the half line and random fixed-point-free involutions."""
from .bijection import (
    Involution,
    TwoLineArray,
    array_to_involution,
    array_to_walk,
    involution_to_array,
    lds_involution,
    tableau_sequence,
    walk_to_array,
)
from .counting import (
    CountResult,
    Endpoints,
    Method,
    count_brute,
    count_rains,
    count_walk_dp,
    f_inv,
    z_n_determinant,
    z_n_symmetric,
)
from .tableaux import NumberedDiagram, Partition, column_insert, lds, reverse_column_insert
from .walks import ClassOne, ClassTwo, WalkerWord, enumerate_words, max_displacement, parse_word, validate_word

__version__ = "0.1.0"
