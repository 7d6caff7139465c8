"""Published orbit listings, substitution relations and identification blocks
for the three transitive degree-6 groups, as literal data.

Labels are the published ones; they need not agree with the computed a, b, c
order, so tests match orbits through membership.  Edges are (upper, lower)
label pairs between shapes (4,2) and a lower shape.
"""

ORDER12_ORBITS = {
    "4,2": {
        "a": "({1,2,4,5},{3,6}) ({2,3,5,6},{1,4}) ({1,3,4,6},{2,5})",
        "b": "({1,2,3,4},{5,6}) ({2,3,4,5},{1,6}) ({3,4,5,6},{1,2}) ({1,4,5,6},{2,3}) ({1,2,5,6},{3,4}) ({1,2,3,6},{4,5})",
        "c": "({1,2,4,6},{3,5}) ({1,2,3,5},{4,6}) ({2,3,4,6},{1,5}) ({1,3,4,5},{2,6}) ({2,4,5,6},{1,3}) ({1,3,5,6},{2,4})",
    },
    "3,3": {
        "a": "({1,2,4},{3,5,6}) ({2,3,5},{1,4,6}) ({3,4,6},{1,2,5}) ({1,4,5},{2,3,6}) ({2,5,6},{1,3,4}) ({1,3,6},{2,4,5}) ({2,3,6},{1,4,5}) ({1,2,5},{3,4,6}) ({1,4,6},{2,3,5}) ({3,5,6},{1,2,4}) ({2,4,5},{1,3,6}) ({1,3,4},{2,5,6})",
        "b": "({1,2,3},{4,5,6}) ({2,3,4},{1,5,6}) ({3,4,5},{1,2,6}) ({4,5,6},{1,2,3}) ({1,5,6},{2,3,4}) ({1,2,6},{3,4,5})",
        "c": "({1,3,5},{2,4,6}) ({2,4,6},{1,3,5})",
    },
    "4,1,1": {
        "a": "({1,2,4,5},{3},{6}) ({2,3,5,6},{4},{1}) ({1,3,4,6},{5},{2}) ({1,2,4,5},{6},{3}) ({2,3,5,6},{1},{4}) ({1,3,4,6},{2},{5})",
        "b": "({1,2,3,4},{5},{6}) ({2,3,4,5},{6},{1}) ({3,4,5,6},{1},{2}) ({1,4,5,6},{2},{3}) ({1,2,5,6},{3},{4}) ({1,2,3,6},{4},{5}) ({1,2,3,4},{6},{5}) ({2,3,4,5},{1},{6}) ({3,4,5,6},{2},{1}) ({1,4,5,6},{3},{2}) ({1,2,5,6},{4},{3}) ({1,2,3,6},{5},{4})",
        "c": "({1,2,4,6},{3},{5}) ({1,2,3,5},{4},{6}) ({2,3,4,6},{5},{1}) ({1,3,4,5},{6},{2}) ({2,4,5,6},{3},{1}) ({1,3,5,6},{4},{2}) ({1,2,4,6},{5},{3}) ({1,2,3,5},{6},{4}) ({2,3,4,6},{1},{5}) ({1,3,4,5},{2},{6}) ({2,4,5,6},{1},{3}) ({1,3,5,6},{2},{4})",
    },
}

CYCLIC6_ORBITS = {
    "4,2": {
        "a": "({1,2,4,5},{3,6}) ({2,3,5,6},{1,4}) ({1,3,4,6},{2,5})",
        "b": "({1,2,3,4},{5,6}) ({2,3,4,5},{1,6}) ({3,4,5,6},{1,2}) ({1,4,5,6},{2,3}) ({1,2,5,6},{3,4}) ({1,2,3,6},{4,5})",
        "c": "({1,2,4,6},{3,5}) ({1,2,3,5},{4,6}) ({2,3,4,6},{1,5}) ({1,3,4,5},{2,6}) ({2,4,5,6},{1,3}) ({1,3,5,6},{2,4})",
    },
    "3,3": {
        "a": "({1,2,4},{3,5,6}) ({2,3,5},{1,4,6}) ({3,4,6},{1,2,5}) ({1,4,5},{2,3,6}) ({2,5,6},{1,3,4}) ({1,3,6},{2,4,5})",
        "b": "({1,2,5},{3,4,6}) ({2,3,6},{1,4,5}) ({1,3,4},{2,5,6}) ({2,4,5},{1,3,6}) ({3,5,6},{1,2,4}) ({1,4,6},{2,3,5})",
        "c": "({1,2,3},{4,5,6}) ({2,3,4},{1,5,6}) ({3,4,5},{1,2,6}) ({4,5,6},{1,2,3}) ({1,5,6},{2,3,4}) ({1,2,6},{3,4,5})",
        "d": "({1,3,5},{2,4,6}) ({2,4,6},{1,3,5})",
    },
    "4,1,1": {
        "a": "({1,2,4,5},{3},{6}) ({2,3,5,6},{4},{1}) ({1,3,4,6},{5},{2}) ({1,2,4,5},{6},{3}) ({2,3,5,6},{1},{4}) ({1,3,4,6},{2},{5})",
        "b": "({1,2,3,4},{5},{6}) ({2,3,4,5},{6},{1}) ({3,4,5,6},{1},{2}) ({1,4,5,6},{2},{3}) ({1,2,5,6},{3},{4}) ({1,2,3,6},{4},{5})",
        "c": "({1,2,3,4},{6},{5}) ({2,3,4,5},{1},{6}) ({3,4,5,6},{2},{1}) ({1,4,5,6},{3},{2}) ({1,2,5,6},{4},{3}) ({1,2,3,6},{5},{4})",
        "d": "({1,2,4,6},{3},{5}) ({1,2,3,5},{4},{6}) ({2,3,4,6},{5},{1}) ({1,3,4,5},{6},{2}) ({2,4,5,6},{1},{3}) ({1,3,5,6},{2},{4})",
        "e": "({1,2,4,6},{5},{3}) ({1,2,3,5},{6},{4}) ({2,3,4,6},{1},{5}) ({1,3,4,5},{2},{6}) ({2,4,5,6},{3},{1}) ({1,3,5,6},{4},{2})",
    },
}

DIHEDRAL6_ORBITS = {
    "4,2": {
        "a": "({1,2,3,4},{5,6}) ({1,2,3,5},{4,6}) ({1,2,3,6},{4,5}) ({2,4,5,6},{1,3}) ({3,4,5,6},{1,2}) ({1,4,5,6},{2,3})",
        "b": "({1,2,4,5},{3,6}) ({2,3,5,6},{1,4}) ({1,3,4,6},{2,5})",
        "c": "({1,2,4,6},{3,5}) ({2,3,4,5},{1,6}) ({1,3,5,6},{2,4})",
        "d": "({1,2,5,6},{3,4}) ({2,3,4,6},{1,5}) ({1,3,4,5},{2,6})",
    },
    "3,3": {
        "a": "({1,2,4},{3,5,6}) ({2,3,5},{1,4,6}) ({1,3,6},{2,4,5}) ({2,4,5},{1,3,6}) ({3,5,6},{1,2,4}) ({1,4,6},{2,3,5})",
        "b": "({1,2,5},{3,4,6}) ({2,3,6},{1,4,5}) ({1,3,4},{2,5,6}) ({1,4,5},{2,3,6}) ({2,5,6},{1,3,4}) ({3,4,6},{1,2,5})",
        "c": "({1,2,6},{3,4,5}) ({2,3,4},{1,5,6}) ({1,3,5},{2,4,6}) ({3,4,5},{1,2,6}) ({1,5,6},{2,3,4}) ({2,4,6},{1,3,5})",
        "d": "({1,2,3},{4,5,6}) ({4,5,6},{1,2,3})",
    },
    "4,1,1": {
        "a": "({1,2,3,4},{5},{6}) ({1,2,3,5},{6},{4}) ({1,2,3,6},{4},{5}) ({2,4,5,6},{1},{3}) ({3,4,5,6},{2},{1}) ({1,4,5,6},{3},{2})",
        "b": "({1,2,3,4},{6},{5}) ({1,2,3,5},{4},{6}) ({1,2,3,6},{5},{4}) ({2,4,5,6},{3},{1}) ({3,4,5,6},{1},{2}) ({1,4,5,6},{2},{3})",
        "c": "({1,2,4,5},{3},{6}) ({2,3,5,6},{1},{4}) ({1,3,4,6},{2},{5}) ({1,2,4,5},{6},{3}) ({2,3,5,6},{4},{1}) ({1,3,4,6},{5},{2})",
        "d": "({1,2,4,6},{3},{5}) ({2,3,4,5},{1},{6}) ({1,3,5,6},{2},{4}) ({2,3,4,5},{6},{1}) ({1,3,5,6},{4},{2}) ({1,2,4,6},{5},{3})",
        "e": "({1,2,5,6},{3},{4}) ({2,3,4,6},{1},{5}) ({1,3,4,5},{2},{6}) ({1,3,4,5},{6},{2}) ({1,2,5,6},{4},{3}) ({2,3,4,6},{5},{1})",
    },
}


ORDER12_EDGES = {
    "3,3": {("a", "a"), ("b", "a"), ("c", "a"), ("b", "b"), ("c", "b"), ("c", "c")},
    # the diagram version; the inline orbit list repeats a_(4,1^2) three times
    "4,1,1": {("a", "a"), ("b", "b"), ("c", "c")},
}

CYCLIC6_EDGES = {
    "3,3": {("a", "a"), ("b", "a"), ("c", "a"),
            ("a", "b"), ("b", "b"), ("c", "b"),
            ("b", "c"), ("c", "c"),
            ("c", "d")},
    "4,1,1": {("a", "a"), ("b", "b"), ("b", "c"), ("c", "d"), ("c", "e")},
}

DIHEDRAL6_EDGES = {
    "3,3": {("a", "a"), ("b", "a"), ("c", "a"),
            ("a", "b"), ("b", "b"), ("d", "b"),
            ("a", "c"), ("c", "c"), ("d", "c"),
            ("a", "d")},
    "4,1,1": {("a", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")},
}

ORDER12_BLOCKS = {
    "4,2": [{"a"}, {"b"}, {"c"}],
    "3,3": [{"a"}, {"b"}, {"c"}],
    "4,1,1": [{"a"}, {"b"}, {"c"}],
}

CYCLIC6_BLOCKS = {
    "4,2": [{"a"}, {"b"}, {"c"}],
    "3,3": [{"a", "b"}, {"c"}, {"d"}],
    "4,1,1": [{"a"}, {"b", "c"}, {"d", "e"}],
}

DIHEDRAL6_BLOCKS = {
    "4,2": [{"a"}, {"b", "c", "d"}],
    "3,3": [{"a", "b", "c"}, {"d"}],
    "4,1,1": [{"a", "b"}, {"c", "d", "e"}],
}
