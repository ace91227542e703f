"""Known valuation trees as ``{level: {branch label: glyph}}``.

Each entry is ``(expression, prime, depth, levels)``.  Level 0 is always the
root.  Levels beyond the hand-checked ones follow from the digit rule and
are marked in a comment.
"""

from __future__ import annotations

N2P4 = {0: {0: "*"}, 1: {0: "*", 1: "0"}, 2: {0: "2", 2: "3"}}

N2P7 = {
    0: {0: "*"},
    1: {0: "0", 1: "*"},
    2: {1: "*", 3: "*"},
    3: {1: "3", 5: "*", 3: "*", 7: "3"},
    4: {5: "*", 13: "4", 3: "4", 11: "*"},
}

TREES = {
    "n2+4 p2": ("n^2+4", 2, 2, N2P4),
    "2n-5 p3": (
        "2n-5",
        3,
        5,
        {
            0: {0: "*"},
            1: {0: "0", 1: "*", 2: "0"},
            2: {1: "1", 4: "1", 7: "*"},
            3: {7: "2", 16: "*", 25: "2"},
            4: {16: "3", 43: "*", 70: "3"},
            5: {43: "4", 124: "*", 205: "4"},
        },
    ),
    "3/2n+9 p3": (
        "3/2*n+9",
        3,
        5,
        {
            0: {0: "*"},
            1: {0: "*", 1: "1", 2: "1"},
            2: {0: "2", 3: "*", 6: "2"},
            3: {3: "3", 12: "3", 21: "*"},
            4: {21: "4", 48: "4", 75: "*"},
            5: {75: "5", 156: "5", 237: "*"},
        },
    ),
    "(5n-4)(n+23) p5": (
        "(5n-4)*(n+23)",
        5,
        4,
        {
            0: {0: "*"},
            1: {0: "0", 1: "0", 2: "*", 3: "0", 4: "0"},
            2: {2: "*", 7: "1", 12: "1", 17: "1", 22: "1"},
            3: {2: "2", 27: "2", 52: "2", 77: "2", 102: "*"},
            4: {102: "3", 227: "3", 352: "3", 477: "3", 602: "*"},
        },
    ),
    "(n-16)(5n-2) p2": (
        "(n-16)*(5n-2)",
        2,
        5,
        {
            0: {0: "*"},
            1: {0: "*", 1: "0"},
            2: {0: "*", 2: "*"},
            3: {0: "*", 4: "3", 2: "*", 6: "3"},
            4: {0: "*", 8: "4", 2: "4", 10: "*"},
            # derived: the paths of 16 and 2/5 continue with siblings k
            5: {0: "5", 16: "*", 10: "5", 26: "*"},
        },
    ),
    "3/2(n-9)(3n+1) p2": (
        "3/2*(n-9)*(3n+1)",
        2,
        4,
        {
            0: {0: "*"},
            1: {0: "-1", 1: "*"},
            2: {1: "*", 3: "1"},
            3: {1: "*", 5: "*"},
            4: {1: "4", 9: "*", 5: "*", 13: "4"},
        },
    ),
    "(n-2)(n+6)(n-12) p2": (
        "(n-2)*(n+6)*(n-12)",
        2,
        4,
        {
            0: {0: "*"},
            1: {0: "*", 1: "0"},
            2: {0: "*", 2: "*"},
            3: {0: "4", 4: "*", 2: "*", 6: "5"},
            4: {4: "5", 12: "*", 2: "*", 10: "*"},
        },
    ),
    "3/5(n+6)(2n-5)(3n-4) p3": (
        "3/5*(n+6)*(2n-5)*(3n-4)",
        3,
        5,
        {
            0: {0: "*"},
            1: {0: "*", 1: "*", 2: "1"},
            2: {0: "2", 3: "*", 6: "2", 1: "2", 4: "2", 7: "*"},
            3: {3: "3", 12: "3", 21: "*", 7: "3", 16: "*", 25: "3"},
            4: {21: "4", 48: "4", 75: "*", 16: "4", 43: "*", 70: "4"},
            5: {75: "5", 156: "5", 237: "*", 43: "5", 124: "*", 205: "5"},
        },
    ),
    "n2+7 p2": ("n^2+7", 2, 4, N2P7),
    "(n2+4)(n2+7) p2": (
        "(n^2+4)*(n^2+7)",
        2,
        4,
        {
            0: {0: "*"},
            1: {0: "*", 1: "*"},
            2: {0: "2", 2: "3", 1: "*", 3: "*"},
            3: N2P7[3],
            4: N2P7[4],
        },
    ),
    "n2+1 p2": ("n^2+1", 2, 1, {0: {0: "*"}, 1: {0: "0", 1: "1"}}),
    "n2+2 p2": ("n^2+2", 2, 1, {0: {0: "*"}, 1: {0: "1", 1: "0"}}),
    "(n2+1)(n2+2) p2": ("(n^2+1)*(n^2+2)", 2, 1, {0: {0: "1"}}),
}


def glyph_levels(tree) -> dict[int, dict[int, str]]:
    """The tree in the same shape as the expectations above."""
    out: dict[int, dict[int, str]] = {}
    for node, status in tree.walk():
        out.setdefault(len(node), {})[tree.label(node)] = str(status)
    return out
