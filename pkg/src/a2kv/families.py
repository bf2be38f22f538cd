"""Standard test-bed diagrams: band closures with singular vertices and
crossings, unknots, and small pattern-B examples."""

from __future__ import annotations

from .graphs import RV, XN, XP, GraphDiagram


def unknot(oriented: bool = True) -> GraphDiagram:
    return GraphDiagram((), (), (), frozenset() if oriented else None, loops=1)


def split_unknots(k: int, oriented: bool = True) -> GraphDiagram:
    return GraphDiagram((), (), (), frozenset() if oriented else None, loops=k)


def st_band(k: int, l: int, oriented: bool = True, signs=None) -> GraphDiagram:
    """Trace closure of the 2-strand band with k singular vertices followed
    by l crossings (positive by default), both rails running the same way.

    With k = l = 0 the closure is two split circles.
    """
    total = k + l
    if signs is None:
        signs = ["+"] * l
    if total == 0:
        return GraphDiagram((), (), (), frozenset() if oriented else None, loops=2)
    kinds = []
    tails = set()
    for i in range(k):
        kinds.append(RV)
    for s in signs:
        kinds.append(XP if s == "+" else XN)
    node_darts = [tuple(range(4 * i, 4 * i + 4)) for i in range(total)]
    # slot layout per node kind, ccw:
    #   vertex:  (NE out, NW in, SW in, SE out)
    #   x+:      (u_in SW, o_out SE, u_out NE, o_in NW)
    #   x-:      (u_in SW, o_in NW ... ) stored per convention below
    def east_pair(i):
        # (top-east dart, bottom-east dart)
        base = 4 * i
        if kinds[i] == RV:
            return base + 0, base + 3
        if kinds[i] == XP:
            return base + 2, base + 1
        return base + 2, base + 3

    def west_pair(i):
        base = 4 * i
        if kinds[i] == RV:
            return base + 1, base + 2
        if kinds[i] == XP:
            return base + 3, base + 0
        return base + 1, base + 0

    twin = [0] * (4 * total)

    def connect(d1, d2):
        twin[d1], twin[d2] = d2, d1

    for i in range(total):
        te, be = east_pair(i)
        tw, bw = west_pair((i + 1) % total)
        connect(te, tw)
        connect(be, bw)
        tails.update((te, be))
    g = GraphDiagram(kinds, node_darts, twin, tails if oriented else None)
    g.check()
    return g


def pattern_b_band(n_vertices: int) -> GraphDiagram:
    """Closed antiparallel 2-strand band of pattern-B vertices (oriented):
    the top rail runs one way and the bottom rail the other."""
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    kinds = [RV] * n_vertices
    node_darts = [tuple(range(4 * i, 4 * i + 4)) for i in range(n_vertices)]
    # slots ccw: (NE out-top, NW in-top, SW out-bottom, SE in-bottom)
    twin = [0] * (4 * n_vertices)
    tails = set()
    for i in range(n_vertices):
        j = (i + 1) % n_vertices
        te, be = 4 * i + 0, 4 * i + 2      # top-east out, bottom-west out
        tw, bw = 4 * j + 1, 4 * j + 3      # next: top-west in, bottom-east in
        twin[te], twin[tw] = tw, te
        tails.add(te)
        # bottom rail runs east to west: node i's bottom-WEST dart leads to
        # node i-1; wire node i's SW out to node i-1's SE in
        p = (i - 1) % n_vertices
        se_in = 4 * p + 3
        twin[be], twin[se_in] = se_in, be
        tails.add(be)
    g = GraphDiagram(kinds, node_darts, twin, tails)
    g.check()
    return g


def curl_diagram(sign: str = "+", oriented: bool = True) -> GraphDiagram:
    """Unknot diagram with a single kink."""
    kinds = [XP if sign == "+" else XN]
    # x+ slots: (u_in, o_out, u_out, o_in); the loop joins u_out to o_in,
    # the big arc joins o_out to u_in
    twin = [1, 0, 3, 2]
    tails = {1, 2}
    g = GraphDiagram(kinds, [(0, 1, 2, 3)], twin, tails if oriented else None)
    g.check()
    return g
