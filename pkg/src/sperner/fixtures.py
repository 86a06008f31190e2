"""Bundled reference systems, kept in their original labelings.

Each fixture is stored as a text document exactly as the system is usually
written down: fig-7-3, fig-8-3 and fig-10-4 use 0-based labels, the others
1-based labels, and fig-17-8 keeps its center point as the token ``inf``.
The registry is the regression corpus for the verifier and the bounds
table: fig-9-4 and fig-10-4 witness exact values, fig-8-3 the best known
lower bound for (8, 3), and fig-17-8 / fig-11-4 are developed rotational
systems.
"""

from __future__ import annotations

from .formats import parse
from .model import PartitionSystem

__all__ = ["fixture_names", "fixture_text", "load_fixture", "FIXTURES"]

_FIG_7_3 = """\
# name: fig-7-3
7 3 5
0,1|2,3|4,5,6
0,2,6|1,5|3,4
0,3|1,4|2,5,6
0,4|1,2,6|3,5
0,5|1,3|2,4,6
"""

_FIG_17_8 = """\
# name: fig-17-8
17 8 16 base=1
1,5,9|8,11|7,12|6,13|2,16|4,10|inf,3|14,15
2,6,10|9,12|8,13|7,14|3,1|5,11|inf,4|15,16
3,7,11|10,13|9,14|8,15|4,2|6,12|inf,5|16,1
4,8,12|11,14|10,15|9,16|5,3|7,13|inf,6|1,2
5,9,13|12,15|11,16|10,1|6,4|8,14|inf,7|2,3
6,10,14|13,16|12,1|11,2|7,5|9,15|inf,8|3,4
7,11,15|14,1|13,2|12,3|8,6|10,16|inf,9|4,5
8,12,16|15,2|14,3|13,4|9,7|11,1|inf,10|5,6
9,13,1|16,3|15,4|14,5|10,8|12,2|inf,11|6,7
10,14,2|1,4|16,5|15,6|11,9|13,3|inf,12|7,8
11,15,3|2,5|1,6|16,7|12,10|14,4|inf,13|8,9
12,16,4|3,6|2,7|1,8|13,11|15,5|inf,14|9,10
13,1,5|4,7|3,8|2,9|14,12|16,6|inf,15|10,11
14,2,6|5,8|4,9|3,10|15,13|1,7|inf,16|11,12
15,3,7|6,9|5,10|4,11|16,14|2,8|inf,1|12,13
16,4,8|7,10|6,11|5,12|1,15|3,9|inf,2|13,14
"""

_FIG_9_4 = """\
# name: fig-9-4
9 4 8 base=1
1,2|3,9|4,5|6,7,8
1,3|2,7|4,6|5,8,9
1,4|2,5|3,8|6,7,9
1,5|2,8|3,6|4,7,9
1,6|2,3|5,7|4,8,9
1,7|2,9|3,4|6,5,8
1,8|2,4|3,7|5,6,9
1,9|2,6|3,5|4,7,8
"""

_FIG_11_4 = """\
# name: fig-11-4
11 4 11 base=1
1,2|3,6,11|4,8,10|5,7,9
2,3|4,7,1|5,9,11|6,8,10
3,4|5,8,2|6,10,1|7,9,11
4,5|6,9,3|7,11,2|8,10,1
5,6|7,10,4|8,1,3|9,11,2
6,7|8,11,5|9,2,4|10,1,3
7,8|9,1,6|10,3,5|11,2,4
8,9|10,2,7|11,4,6|1,3,5
9,10|11,3,8|1,5,7|2,4,6
10,11|1,4,9|2,6,8|3,5,7
11,1|2,5,10|3,7,9|4,6,8
"""

_FIG_8_3 = """\
# name: fig-8-3
8 3 8
0,1|2,3,4|5,6,7
0,2|1,3,5|4,6,7
0,3|1,4,6|2,5,7
1,7|0,4,6|2,3,5
3,7|0,5,6|1,2,4
2,6|0,5,7|1,3,4
3,6|0,4,7|1,2,5
4,5|0,6,7|1,2,3
"""

_FIG_10_4 = """\
# name: fig-10-4
10 4 10
0,1|2,3|4,5|6,7,8,9
0,2|1,3|4,6,7|5,8,9
0,4|1,5|2,6,7|3,8,9
0,6|4,8|1,2,7|3,5,9
0,7|4,9|1,2,6|3,5,8
1,9|5,6|0,3,8|2,4,7
2,9|3,6|0,5,8|1,4,7
2,8|5,7|0,3,9|1,4,6
1,8|3,7|0,5,9|2,4,6
2,5|3,4|0,8,9|1,6,7
"""

FIXTURES: dict[str, str] = {
    "fig-7-3": _FIG_7_3,
    "fig-17-8": _FIG_17_8,
    "fig-9-4": _FIG_9_4,
    "fig-11-4": _FIG_11_4,
    "fig-8-3": _FIG_8_3,
    "fig-10-4": _FIG_10_4,
}


def fixture_names() -> tuple[str, ...]:
    return tuple(FIXTURES)


def fixture_text(name: str) -> str:
    """Original transcription of a bundled system (with its original labels)."""
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}") from None


def load_fixture(name: str) -> PartitionSystem:
    """Parse a bundled system into internal 0-based form."""
    return parse(fixture_text(name))
