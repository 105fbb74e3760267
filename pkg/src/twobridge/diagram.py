"""3-strand plat diagrams: orientation, crossing signs, and A-smoothings.

A braid word over ``{a,b}`` is drawn as a row of crossings between three
horizontal strands (1=top, 2=middle, 3=bottom): 'a' is a lower-row
crossing on strands {2,3} (sigma_1) and 'b' an upper-row crossing on
strands {1,2} (sigma_2^-1).  The diagram is alternating: the NE-going
strand is over at 'a' crossings, the SE-going strand is over at 'b'
crossings.

Both ends are capped by a plat closure.  On the left, strands 1 and 2 are
capped together and strand 3 leaves as the "around" arc that travels
outside the diagram.  On the right there are two shapes: closure "A" caps
strands 1,2 and sends strand 3 around; closure "B" caps strands 2,3 and
sends strand 1 around.  The diagram of a word in T(c) ends in a lower
crossing exactly when c is odd, and its plat uses closure A in that case,
closure B otherwise.

The diagram is stored as an arc graph on *nodes* (j, q): the point of
strand q on the vertical cut line j, for j = 0..n.  Every node has one
arc-end on its west side and one on its east side, so the diagram is a
disjoint union of closed curves and a traversal visits each node once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import to_braid, validate_braid, validate_word

#: strands involved in each crossing letter
CROSSING_PAIR = {"a": (2, 3), "b": (1, 2)}

# Over/under arcs of a crossing between cuts i-1 and i, as
# (start strand, end strand, forward direction vector).  Direction
# vectors live in a plane with x pointing right and y up (strand 1 on
# top), and are negated when the curve runs through the arc backwards.
_OVER = {"a": (3, 2, (1, 1)), "b": (1, 2, (1, -1))}
_UNDER = {"a": (2, 3, (1, -1)), "b": (2, 1, (1, 1))}

_W, _E = 0, 1


@dataclass(frozen=True)
class PlatDiagram:
    """A braid word together with a choice of right plat closure."""

    letters: str
    closure: str  # "A" or "B", see module docstring

    def __post_init__(self) -> None:
        validate_braid(self.letters)
        if not self.letters:
            raise ValueError("diagram needs at least one crossing")
        if self.closure not in ("A", "B"):
            raise ValueError(f"closure must be 'A' or 'B': {self.closure!r}")


@dataclass(frozen=True)
class DiagramMetrics:
    """Positive crossings, all-A circles, and the signature they define."""

    c_plus: int
    s_A: int
    signature: int

    def __post_init__(self) -> None:
        assert self.signature == self.s_A - self.c_plus - 1


def build_diagram(z: str, closure: str = "B") -> PlatDiagram:
    """Plat diagram of a raw braid word (default right closure "B")."""
    return PlatDiagram(z, closure)


def diagram_for_word(word: str) -> PlatDiagram:
    """The alternating knot diagram of a word: closure matches the last
    crossing row, which is what the drawn plat closures do."""
    validate_word(word)
    z = to_braid(word)
    return PlatDiagram(z, "A" if z[-1] == "a" else "B")


def _arcs(d: PlatDiagram):
    """All arcs as pairs of node-ends ((j, q), side)."""
    n = len(d.letters)
    arcs = []
    for i, letter in enumerate(d.letters, 1):
        passq = 1 if letter == "a" else 3
        oq, oq2, _ = _OVER[letter]
        uq, uq2, _ = _UNDER[letter]
        arcs.append((((i - 1, passq), _E), ((i, passq), _W)))
        arcs.append((((i - 1, oq), _E), ((i, oq2), _W)))
        arcs.append((((i - 1, uq), _E), ((i, uq2), _W)))
    arcs.append((((0, 1), _W), ((0, 2), _W)))  # left cap
    if d.closure == "A":
        arcs.append((((n, 1), _E), ((n, 2), _E)))
        arcs.append((((n, 3), _E), ((0, 3), _W)))  # around arc
    else:
        arcs.append((((n, 2), _E), ((n, 3), _E)))
        arcs.append((((n, 1), _E), ((0, 3), _W)))
    return arcs


def _adjacency(d: PlatDiagram):
    adj = {}
    for e1, e2 in _arcs(d):
        adj[e1] = e2
        adj[e2] = e1
    return adj


def _follow(adj, node, side):
    """Trace the closed curve leaving `node` by `side`; map each visited
    node to its traversal direction 'E' (rightward) or 'W'."""
    start = (node, side)
    direction = {}
    while node not in direction:
        direction[node] = "E" if side == _E else "W"
        node, arrived = adj[(node, side)]
        side = _W if arrived == _E else _E
    assert (node, side) == start, "curve did not close up at its basepoint"
    return direction


def plat_component_count(d: PlatDiagram) -> int:
    """Number of closed curves in the diagram (1 for a knot)."""
    adj = _adjacency(d)
    seen: set = set()
    k = 0
    for node, _ in adj:
        if node not in seen:
            k += 1
            seen.update(_follow(adj, node, _E))
    return k


def orient_diagram(d: PlatDiagram) -> tuple[list[int], list[int]]:
    """Traverse the knot once; return (crossing signs, cut states).

    The traversal starts on the bottom strand entering crossing 1 headed
    right, so the leftmost crossing is oriented "horizontally and to the
    right".  `signs[i-1]` is +1 iff the planar cross product of the over-
    and under-strand directions at crossing i is positive.  `states[j]`
    (j = 0..n) is the strand oriented leftward on cut line j; exactly one
    strand is leftward at every cut because the around arc always runs
    leftward outside the diagram.
    """
    adj = _adjacency(d)
    direction = _follow(adj, (0, 3), _E)
    n = len(d.letters)
    if len(direction) < 3 * (n + 1):
        raise ValueError("diagram is a link; cannot orient by one traversal")

    states = []
    for j in range(n + 1):
        left = [q for q in (1, 2, 3) if direction[(j, q)] == "W"]
        assert len(left) == 1, f"cut {j} has leftward strands {left}"
        states.append(left[0])

    signs = []
    for i, letter in enumerate(d.letters, 1):
        oq, _, od = _OVER[letter]
        uq, _, ud = _UNDER[letter]
        ox, oy = od if direction[(i - 1, oq)] == "E" else (-od[0], -od[1])
        ux, uy = ud if direction[(i - 1, uq)] == "E" else (-ud[0], -ud[1])
        signs.append(1 if ox * uy - oy * ux > 0 else -1)
    return signs, states


def orientation_after(state: int, z: str) -> int:
    """Push an orientation state through a braid word, letter by letter:
    'a' transposes strands 2,3 and 'b' transposes 1,2."""
    if state not in (1, 2, 3):
        raise ValueError(f"orientation state must be 1, 2 or 3: {state!r}")
    validate_braid(z)
    for letter in z:
        u, v = CROSSING_PAIR[letter]
        if state == u:
            state = v
        elif state == v:
            state = u
    return state


def strand_permutation(z: str) -> tuple[int, int, int]:
    """Exit position on the right of the strand entering at each left
    position: component q of the tuple is orientation_after(q, z)."""
    return (
        orientation_after(1, z),
        orientation_after(2, z),
        orientation_after(3, z),
    )


def all_A_components(d: PlatDiagram) -> int:
    """Circles after replacing every crossing by its A-smoothing.

    At an 'a' crossing the A-smoothing turns strands 2,3 back on both
    sides; at a 'b' crossing it lets strands 1,2 run through.  Circles
    are counted by union-find over the nodes.
    """
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    n = len(d.letters)
    for i, letter in enumerate(d.letters, 1):
        if letter == "a":
            union((i - 1, 2), (i - 1, 3))
            union((i, 2), (i, 3))
            union((i - 1, 1), (i, 1))
        else:
            union((i - 1, 1), (i, 1))
            union((i - 1, 2), (i, 2))
            union((i - 1, 3), (i, 3))
    union((0, 1), (0, 2))
    if d.closure == "A":
        union((n, 1), (n, 2))
        union((n, 3), (0, 3))
    else:
        union((n, 2), (n, 3))
        union((n, 1), (0, 3))
    for j in range(n + 1):
        for q in (1, 2, 3):
            find((j, q))
    return sum(1 for x, p in parent.items() if x == p)


def metrics_for_word(word: str) -> DiagramMetrics:
    """c_plus, s_A and the signature s_A - c_plus - 1 of a word's knot."""
    d = diagram_for_word(word)
    signs, states = orient_diagram(d)
    assert states[1] == 1, "state right of crossing 1 must be o1"
    c_plus = sum(1 for s in signs if s > 0)
    s_a = all_A_components(d)
    return DiagramMetrics(c_plus, s_a, s_a - c_plus - 1)


def signature(word: str) -> int:
    """Signature of the 2-bridge knot presented by a word."""
    return metrics_for_word(word).signature
