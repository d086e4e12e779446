"""Hand-verified classifications for the bundled corpus.

One entry per non-comment line of ``serretrace/data/corpus.txt``, in file
order: (type string, v(Delta_min), geometric component count).  Each was
worked out by hand-running the classification steps on the residues and
cross-checked against the discriminant valuation and the trace
identities, so the list is an independent oracle for the implementation.
"""

from importlib import resources

EXPECTED = [
    # laurent:Q
    ("I0", 0, 1),
    ("I1", 1, 1),
    ("I2", 2, 2),
    ("I5", 5, 5),
    ("II", 2, 1),
    ("III", 3, 2),
    ("IV", 4, 3),
    ("I0*", 6, 4),
    ("I1*", 7, 4),
    ("I2*", 8, 4),
    ("IV*", 8, 3),
    ("III*", 9, 2),
    ("II*", 10, 1),
    ("I0", 0, 1),  # y^2 = x^3 + t^6 is non-minimal: rescale to good reduction
    # laurent:F2
    ("I0", 0, 1),
    ("I1", 1, 1),
    ("II", 4, 1),
    ("III", 4, 2),
    ("IV", 4, 3),
    ("I0*", 8, 4),
    ("I1*", 8, 4),
    ("IV*", 8, 3),
    ("III*", 12, 2),
    ("II*", 12, 1),
    # laurent:F3
    ("II", 3, 1),
    ("IV", 5, 3),
    ("I0*", 6, 4),
    ("IV*", 10, 3),
    # mixed characteristic
    ("II", 4, 1),   # padic:2
    ("IV", 5, 3),   # padic:3
]


def corpus_text() -> str:
    return resources.files("serretrace").joinpath("data/corpus.txt").read_text()


def corpus_lines():
    """(lineno, '<fieldspec>;a1;...;a6') for every curve line."""
    out = []
    for lineno, raw in enumerate(corpus_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


# Representative curves reaching all ten reduction types for each residue
# characteristic in {0, 2, 3}; every entry hand-verified like the corpus.
TYPE_REPRESENTATIVES = {
    0: {
        "I0": "laurent:Q;0;0;0;0;1",
        "I1": "laurent:Q;1;0;0;0;t",
        "II": "laurent:Q;0;0;0;0;t",
        "III": "laurent:Q;0;0;0;t;0",
        "IV": "laurent:Q;0;0;0;0;t^2",
        "I0*": "laurent:Q;0;0;0;t^2;0",
        "I1*": "laurent:Q;0;t;0;0;t^4",
        "IV*": "laurent:Q;0;0;0;0;t^4",
        "III*": "laurent:Q;0;0;0;t^3;0",
        "II*": "laurent:Q;0;0;0;0;t^5",
    },
    2: {
        "I0": "laurent:F2;1;0;0;0;1",
        "I1": "laurent:F2;1;0;0;0;t",
        "II": "laurent:F2;0;0;t;0;t",
        "III": "laurent:F2;0;0;t;t;0",
        "IV": "laurent:F2;0;0;t;0;0",
        "I0*": "laurent:F2;0;t;t^2;t^2;0",
        "I1*": "laurent:F2;0;t;t^2;0;0",
        "IV*": "laurent:F2;0;0;t^2;0;t^4",
        "III*": "laurent:F2;0;0;t^3;t^3;0",
        "II*": "laurent:F2;0;0;t^3;0;t^5",
    },
    3: {
        "I0": "laurent:F3;0;0;0;1;1",
        "I1": "laurent:F3;1;0;0;0;t",
        "II": "laurent:F3;0;0;0;t;t",
        "III": "laurent:F3;0;0;0;t;0",
        "IV": "laurent:F3;0;t;0;0;t^2",
        "I0*": "laurent:F3;0;0;0;2*t^2;0",
        "I1*": "laurent:F3;0;t;0;0;t^4",
        "IV*": "laurent:F3;0;t^2;0;0;t^4",
        "III*": "laurent:F3;0;0;0;t^3;0",
        "II*": "laurent:F3;0;t^2;0;0;t^5",
    },
}
