"""4-valent rigid vertex graph diagrams and their text format.

A diagram is a rotation system on the sphere: nodes are crossings
(``x+``/``x-``) or rigid vertices (``v``), each with four darts in
counterclockwise order.  At crossings the through-strands are the
opposite dart pairs, slots (0, 2) being the under-strand; oriented
crossings are stored rotated so slot 0 is the under-strand's in-dart.
Crossing-free circle components are counted separately.

Text format (one record per line, ``#`` starts a comment):

    X+ a b c d     positive crossing, darts ccw, slots 1,3 under / 2,4 over
    X- a b c d     negative crossing
    V  a b c d     rigid vertex, darts ccw, through-pairs (1,3) and (2,4)
    O              crossing-free circle component

Oriented diagrams mark every slot ``>label`` (edge leaves the node) or
``<label`` (edge enters); unoriented diagrams use bare labels.  Each
label appears exactly twice, in oriented mode once with each mark.
In oriented mode a crossing's sign is determined by the marks and the
record kind must agree with it.
"""

from __future__ import annotations

XP, XN, RV = "x+", "x-", "v"


class GraphError(ValueError):
    pass


class GraphDiagram:
    __slots__ = ("kinds", "node_darts", "twin", "tails", "loops",
                 "_owner", "_canon")

    def __init__(self, kinds, node_darts, twin, tails, loops=0):
        self.kinds = tuple(kinds)
        self.node_darts = tuple(tuple(v) for v in node_darts)
        self.twin = tuple(twin)
        self.tails = None if tails is None else frozenset(tails)
        self.loops = loops
        self._owner = None
        self._canon = None

    # -- basics --------------------------------------------------------

    @property
    def oriented(self) -> bool:
        return self.tails is not None

    @property
    def n_darts(self) -> int:
        return len(self.twin)

    @property
    def n_nodes(self) -> int:
        return len(self.kinds)

    def owner(self):
        if self._owner is None:
            o = [None] * self.n_darts
            for ni, darts in enumerate(self.node_darts):
                for s, d in enumerate(darts):
                    o[d] = (ni, s)
            self._owner = o
        return self._owner

    def is_in(self, d: int) -> bool:
        """Edge enters the node holding dart d."""
        return d not in self.tails

    def writhe(self) -> int:
        if not self.oriented:
            raise GraphError("writhe needs an oriented diagram")
        return sum(+1 if k == XP else -1 for k in self.kinds if k in (XP, XN))

    def vertex_pattern(self, ni: int) -> tuple[str, int]:
        """('A', r) if the in-darts are cyclically adjacent starting at
        slot r (in, in, out, out), ('B', r) if they alternate with slot r
        an in-dart."""
        if self.kinds[ni] != RV:
            raise GraphError(f"node {ni} is not a rigid vertex")
        flags = [self.is_in(d) for d in self.node_darts[ni]]
        if sum(flags) != 2:
            raise GraphError(f"vertex {ni} does not have two in-darts")
        for r in range(4):
            pat = [flags[(r + j) % 4] for j in range(4)]
            if pat == [True, True, False, False]:
                return "A", r
            if pat == [True, False, True, False]:
                return "B", r
        raise GraphError(f"vertex {ni} has an invalid orientation pattern")

    # -- faces / validation --------------------------------------------

    def face_next(self, d: int) -> int:
        ni, s = self.owner()[self.twin[d]]
        darts = self.node_darts[ni]
        return darts[(s + 1) % 4]

    def faces(self):
        seen = [False] * self.n_darts
        out = []
        for d0 in range(self.n_darts):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self.face_next(d)
            out.append(tuple(orbit))
        return out

    def components(self):
        parent = list(range(self.n_nodes))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        own = self.owner()
        for d in range(self.n_darts):
            a = own[d][0]
            b = own[self.twin[d]][0]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        comps = {}
        for ni in range(self.n_nodes):
            comps.setdefault(find(ni), []).append(ni)
        return list(comps.values())

    def check(self):
        n = self.n_darts
        if n != 4 * self.n_nodes:
            raise GraphError("dart count mismatch")
        own = self.owner()
        if any(o is None for o in own):
            raise GraphError("dart not attached")
        for d in range(n):
            t = self.twin[d]
            if not 0 <= t < n or self.twin[t] != d or t == d:
                raise GraphError(f"twin involution broken at dart {d}")
            if self.oriented and (d in self.tails) == (t in self.tails):
                raise GraphError(f"edge {d}-{t} lacks a direction")
        for ni, kind in enumerate(self.kinds):
            if kind == RV:
                if self.oriented:
                    self.vertex_pattern(ni)
            elif kind in (XP, XN):
                if self.oriented:
                    u_in, a, u_out, bdart = self.node_darts[ni]
                    if not (self.is_in(u_in) and not self.is_in(u_out)):
                        raise GraphError(f"crossing {ni} under-strand misdirected")
                    if self.is_in(a) == self.is_in(bdart):
                        raise GraphError(f"crossing {ni} over-strand misdirected")
                    if crossing_sign_from_rotation(self, ni) != kind:
                        raise GraphError(f"crossing {ni} sign inconsistent")
            else:
                raise GraphError(f"unknown node kind {kind}")
        # planarity, per connected component on the sphere
        faces = self.faces()
        for comp in self.components():
            dset = {d for ni in comp for d in self.node_darts[ni]}
            E = len(dset) // 2
            F = sum(1 for f in faces if f[0] in dset)
            if len(comp) - E + F != 2:
                raise GraphError("diagram component is not planar")

    # -- canonical form --------------------------------------------------

    def canonical_key(self):
        if self._canon is not None:
            return self._canon
        own = self.owner()

        def encode(start_ni, start_slot):
            num = {start_ni: 0}
            entry = {start_ni: start_slot}
            order = [start_ni]
            qi = 0
            while qi < len(order):
                ni = order[qi]
                qi += 1
                e = entry[ni]
                for j in range(4):
                    d = self.node_darts[ni][(e + j) % 4]
                    wi, ws = own[self.twin[d]]
                    if wi not in num:
                        num[wi] = len(order)
                        entry[wi] = ws
                        order.append(wi)
            code = []
            for ni in order:
                e = entry[ni]
                kind = self.kinds[ni]
                row = [kind, e % 2 if kind != RV else 0]
                for j in range(4):
                    d = self.node_darts[ni][(e + j) % 4]
                    t = self.twin[d]
                    wi, ws = own[t]
                    rel = (ws - entry[wi]) % 4
                    row.append(
                        (num[wi], rel, None if not self.oriented else (d in self.tails))
                    )
                code.append(tuple(row))
            return tuple(code)

        comps = self.components()
        keys = []
        for comp in comps:
            best = None
            for ni in comp:
                for slot in range(4):
                    code = encode(ni, slot)
                    if best is None or code < best:
                        best = code
            keys.append(best)
        keys.sort()
        self._canon = (tuple(keys), self.loops, self.oriented)
        return self._canon

    def __eq__(self, other):
        return (
            isinstance(other, GraphDiagram)
            and self.canonical_key() == other.canonical_key()
        )

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return (
            f"GraphDiagram({self.n_nodes} nodes, loops={self.loops}, "
            f"{'oriented' if self.oriented else 'unoriented'})"
        )


def crossing_sign_from_rotation(g: GraphDiagram, ni: int) -> str:
    """Sign of an oriented crossing from its rotation system.

    With the under in-dart at slot 0, the crossing is positive when the
    over-strand enters at slot 3 and negative when it enters at slot 1.
    """
    darts = g.node_darts[ni]
    if not g.is_in(darts[0]):
        raise GraphError("crossing not stored with under-in at slot 0")
    return XP if g.is_in(darts[3]) else XN


EMPTY_DIAGRAM = GraphDiagram((), (), (), None)


def unknot(oriented=True, loops=1) -> GraphDiagram:
    return GraphDiagram((), (), (), frozenset() if oriented else None, loops=loops)


# -- text format -------------------------------------------------------


def parse(text: str) -> GraphDiagram:
    kinds = []
    slots = []  # (label, entering or None) per node, 4 each
    loops = 0
    oriented_marks = 0
    bare_marks = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        rec, args = toks[0], toks[1:]
        if rec == "O":
            if args:
                raise GraphError(f"line {lineno}: O record takes no labels")
            loops += 1
            continue
        if rec not in ("X+", "X-", "V"):
            raise GraphError(f"line {lineno}: unknown record {rec!r}")
        if len(args) != 4:
            raise GraphError(f"line {lineno}: {rec} needs four labels")
        row = []
        for tok in args:
            if tok[0] in "<>":
                label, entering = tok[1:], tok[0] == "<"
                oriented_marks += 1
            else:
                label, entering = tok, None
                bare_marks += 1
            if not label:
                raise GraphError(f"line {lineno}: empty label")
            row.append((label, entering))
        kinds.append({"X+": XP, "X-": XN, "V": RV}[rec])
        slots.append(row)
    if oriented_marks and bare_marks:
        raise GraphError("mixed oriented and unoriented labels")
    oriented = oriented_marks > 0
    if not kinds:
        return GraphDiagram((), (), (), frozenset() if oriented else None, loops=loops)

    # assign darts and pair labels
    darts_of = {}
    for ni, row in enumerate(slots):
        for si, (label, entering) in enumerate(row):
            darts_of.setdefault(label, []).append((ni, si, entering))
    twin = [0] * (4 * len(kinds))
    tails = set()
    for label, ends in darts_of.items():
        if len(ends) != 2:
            raise GraphError(f"label {label!r} appears {len(ends)} times, need 2")
        (n1, s1, e1), (n2, s2, e2) = ends
        d1, d2 = 4 * n1 + s1, 4 * n2 + s2
        twin[d1], twin[d2] = d2, d1
        if oriented:
            if e1 is None or e2 is None or e1 == e2:
                raise GraphError(
                    f"label {label!r} needs one '>' and one '<' mark"
                )
            tails.add(d1 if not e1 else d2)

    node_darts = [tuple(range(4 * ni, 4 * ni + 4)) for ni in range(len(kinds))]
    g = GraphDiagram(kinds, node_darts, twin, tails if oriented else None, loops)
    if oriented:
        g = _normalize_crossings(g)
    g.check()
    return g


def _normalize_crossings(g: GraphDiagram) -> GraphDiagram:
    """Rotate oriented crossings so the under-strand's in-dart is slot 0."""
    node_darts = []
    for ni, kind in enumerate(g.kinds):
        darts = list(g.node_darts[ni])
        if kind in (XP, XN):
            if g.is_in(darts[0]):
                pass
            elif g.is_in(darts[2]):
                darts = darts[2:] + darts[:2]
            else:
                raise GraphError(f"crossing {ni}: slots 1,3 must be the under-strand")
        node_darts.append(darts)
    return GraphDiagram(g.kinds, node_darts, g.twin, g.tails, g.loops)


def serialize(g: GraphDiagram) -> str:
    """Deterministic inverse of parse (labels e0, e1, ...)."""
    labels = {}
    for d in range(g.n_darts):
        t = g.twin[d]
        if t < d:
            continue
        labels[d] = labels[t] = f"e{len(labels) // 2}"
    lines = []
    for _ in range(g.loops):
        lines.append("O")
    recname = {XP: "X+", XN: "X-", RV: "V"}
    for ni, kind in enumerate(g.kinds):
        toks = []
        for d in g.node_darts[ni]:
            if g.oriented:
                mark = ">" if d in g.tails else "<"
                toks.append(mark + labels[d])
            else:
                toks.append(labels[d])
        lines.append(f"{recname[kind]} {' '.join(toks)}")
    return "\n".join(lines) + ("\n" if lines else "")
