"""Frozen reference data shared across the test suite."""

# Length-9 Type-I optimal pair and its magnitude profile.
TYPE1_LEN9 = ("+++-++-++", "+++---+-+")
TYPE1_LEN9_MAGS = (18, 0, 0, 0, 0, 2, 2, 2, 2)

# Length-9 Type-II optimal pair.
TYPE2_LEN9 = ("-+++-+-++", "-+++--+--")
TYPE2_LEN9_MAGS = (18, 2, 2, 2, 2, 0, 0, 0, 0)

# A length-4 GCP and the exact pair its composition with the length-2 kernel
# produces (hand-checked column by column).
GCP4 = ("+++-", "+-++")
GCP8_FROM_K2_GCP4 = ("+++++--+", "++--+-+-")

# The exact length-100 pair built by composing the length-10 kernel with
# itself; its first 40 columns have identical signs.
LEN100_ROW1 = (
    "++-+++++--++-+++++----+--"
    "---++++-+-+--++--+-----++"
    "++-+-+--++--+-----++--+-+"
    "-++--++-+-+--++++-+-+--++"
)
LEN100_ROW2 = (
    "++-+++++--++-+++++----+--"
    "---++++-+-+--++++-+++++--"
    "++-+-+--++++-+++++--++-+-"
    "+--++--+-+-++----+-+-++--"
)

# Optimal length-11 Type-II pair found by inserting +1 at position 5 of the
# length-10 kernel's first row and position 4 of its second row.
SEARCH_HIT_LEN11 = ("++-+-++--++", "++-++++++--")
SEARCH_HIT_LEN11_MAGS = (22, 2, 2, 2, 2, 2, 0, 0, 0, 0, 0)

# Identical-sign column index sets of the two long kernels.
K10_SAME_COLUMNS = frozenset({0, 1, 2, 3, 5})
K26_SAME_COLUMNS = frozenset(range(12)) | {13}
