"""Transcriptions of the published figures, kept as plain data.

Gray nodes are transcribed as red (``"r"``) and black nodes as blue
(``"b"``).  Coordinates are 0-based.

Cube ladder (P1 x P1 x Pn)
    Each column is a square ``a-b-c-d-a``; in ``grid([1, 1, n])`` the
    square ids are ``a=0, b=1, c=3, d=2`` and column ``k`` adds ``4k``.

Grids (Pm x Pn)
    ``(row, col)`` with row 0 at the top of the drawing.  In
    ``grid([m, n])`` the column is the first factor and the row the second,
    so the flat id is ``row * (m + 1) + col``.  The drawings have 5 columns
    and 6 (resp. 7) rows, i.e. ``grid([4, 5])`` and ``grid([4, 6])`` when
    paths are counted by edges; the captions count vertices.
"""

SQUARE_IDS = {"a": 0, "b": 1, "c": 3, "d": 2}

# six drawn columns, colors listed for a, b, c, d
CUBE_LADDER_COLUMNS = (
    {"a": "r", "b": "r", "c": "r", "d": "b"},
    {"a": "b", "b": "b", "c": "r", "d": "b"},
    {"a": "b", "b": "r", "c": "r", "d": "r"},
    {"a": "b", "b": "b", "c": "r", "d": "b"},
    {"a": "b", "b": "r", "c": "r", "d": "r"},
    {"a": "b", "b": "b", "c": "r", "d": "b"},
)

# (column, square position) of each labelled vertex
CUBE_LADDER_QUARTET = {
    "i_red": (1, "c"),   # i1
    "i_blue": (1, "b"),  # i2
    "j_red": (0, "c"),   # j1
    "j_blue": (0, "d"),  # j2
}

GRID_FIG_EVEN_ROWS = (  # drawn as P5 x P6: five row edges
    "rbbbb",
    "rrrrb",
    "rbbbb",
    "rrrrb",
    "rbbbb",
    "rrrrb",
)

# labels exactly where they are drawn
GRID_FIG_EVEN_QUARTET_AS_DRAWN = {
    "i_red": (0, 0),   # i1
    "i_blue": (5, 4),  # i2
    "j_red": (2, 0),   # j1
    "j_blue": (1, 4),  # j2
}

# j2 drawn beside row 1 fails Q3 (j2 and i1 share a component after the
# J flip); the black end of row 3 passes.
GRID_FIG_EVEN_QUARTET = dict(GRID_FIG_EVEN_QUARTET_AS_DRAWN, j_blue=(3, 4))

GRID_FIG_ODD_ROWS = (  # drawn as P5 x P7: six row edges
    "bbbbb",
    "rrrrb",
    "rbbbb",
    "rrrrb",
    "rbbbb",
    "rrrrb",
    "rbbbb",
)

GRID_FIG_ODD_QUARTET = {
    "i_red": (6, 0),   # i1
    "i_blue": (0, 0),  # i2
    "j_red": (2, 0),   # j1
    "j_blue": (1, 4),  # j2
}

# Small example graph used to illustrate the construction.  Left column
# z, y, x (top to bottom) and right column c, b, a.
BASIC_VERTICES = ("z", "y", "x", "c", "b", "a")
BASIC_EDGES = (("x", "y"), ("y", "z"), ("a", "b"), ("b", "c"), ("z", "b"), ("c", "y"))
BASIC_COLORS = {"z": "r", "y": "r", "x": "r", "c": "b", "b": "b", "a": "b"}
BASIC_QUARTET = {"i_red": "z", "i_blue": "c", "j_red": "x", "j_blue": "a"}

# The 11-vertex example tree.  Top row t0..t5 left to right, bottom row
# u0..u4; t0 is the root leaf r and t5 the target leaf l.
EXAMPLE_TREE_VERTICES = ("t0", "t1", "t2", "t3", "t4", "t5", "u0", "u1", "u2", "u3", "u4")
EXAMPLE_TREE_EDGES = (
    ("t0", "t1"), ("t1", "t2"), ("t2", "t3"), ("t3", "t4"), ("t4", "t5"),
    ("u0", "u1"), ("u1", "u2"),
    ("t3", "u3"), ("u3", "u4"),
    ("t1", "u1"),
)
EXAMPLE_TREE_ROOT = "t0"
EXAMPLE_TREE_TARGET = "t5"

# Lifted coloring of the basic graph over the example tree, per fiber, in
# BASIC_VERTICES order.
EXAMPLE_LIFT_FIBERS = {
    "t0": "rrrbbb",
    "t1": "rbbbrr",
    "t2": "rrrbbb",
    "t3": "rbbbrr",
    "t4": "rrrbbb",
    "t5": "rbbbrr",
    "u0": "rbbbrr",
    "u1": "rrrbbb",
    "u2": "rbbbrr",
    "u3": "rrrbbb",
    "u4": "rbbbrr",
}
# shaded pairs: J at the root fiber, I at the target fiber
EXAMPLE_LIFT_QUARTET = {
    "i_red": ("x", "t0"),
    "i_blue": ("a", "t0"),
    "j_red": ("z", "t5"),
    "j_blue": ("c", "t5"),
}
