"""Hand-checked reference data shared across the test modules.

The chain fixture is a 13-box tableau of shape (5,4,3,1) together with the
exact results of one slide, the modified slide, and the lazy walk, all
worked out by hand.  Note the source tableau is deliberately NOT
standard: column 3 holds 7 below 6.  The slide dynamics are insensitive to
that defect (no comparison along that column decides a move), which makes the
fixture double duty: it pins the engine bit-for-bit AND pins validate()'s
refusal to bless the input.
"""

from taquin.tableaux import Position, StandardTableau

# shape (5,4,3,1), bottom row first; column 3 carries the 7-over-6 defect
CHAIN_SOURCE = StandardTableau((
    (1, 3, 7, 10, 13),
    (2, 4, 6, 12),
    (5, 8, 9),
    (11,),
))

CHAIN_SOURCE_DEFECT = "column violation at (3,1): 7 >= 6 above it"

# same tableau with 6 and 7 swapped; fully standard
CHAIN_SOURCE_REPAIRED = StandardTableau((
    (1, 3, 6, 10, 13),
    (2, 4, 7, 12),
    (5, 8, 9),
    (11,),
))

# one slide: labels retained (2..13), shape drops to (5,4,2,1)
CHAIN_AFTER_SLIDE = StandardTableau((
    (2, 3, 7, 10, 13),
    (4, 6, 9, 12),
    (5, 8),
    (11,),
))

CHAIN_HOLE_PATH = (
    Position(1, 1),
    Position(1, 2),
    Position(2, 2),
    Position(3, 2),
    Position(3, 3),
)

# modified slide: slide, new max 13 at the final hole (3,3), all entries -1
CHAIN_AFTER_MODIFIED = StandardTableau((
    (1, 2, 6, 9, 12),
    (3, 5, 8, 11),
    (4, 7, 13),
    (10,),
))

# lazy walk: q_i = last hole-path cell whose source entry is <= i
# (source entries along the path read 1, 2, 4, 6, 9)
CHAIN_LAZY_Q = (
    Position(1, 1),
    Position(1, 2),
    Position(1, 2),
    Position(2, 2),
    Position(2, 2),
    Position(3, 2),
    Position(3, 2),
    Position(3, 2),
    Position(3, 3),
    Position(3, 3),
    Position(3, 3),
    Position(3, 3),
    Position(3, 3),
)
