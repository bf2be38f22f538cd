"""Combinatorial planar A2 web diagrams.

A web is stored as a rotation system: trivalent sinks and sources,
crossings, and opaque "box" vertices (cached projector insertions),
with darts in counterclockwise order at each vertex.  Every dart has a
twin (the two ends of one edge) and every edge has a direction: the
tail dart is the end the edge leaves from.  Diagrams live either on the
sphere (empty boundary) or in a disk with a cyclic sequence of marked
boundary darts.  Vertex-free circles are tracked by a counter.

All diagrams are immutable; surgery returns new diagrams.
"""

from __future__ import annotations

from .qscalar import Scalar

SINK = "snk"
SOURCE = "src"
XPOS = "x+"
XNEG = "x-"

BOUNDARY = -1  # owner marker for boundary darts


def is_box(kind: str) -> bool:
    return ":" in kind


def is_crossing(kind: str) -> bool:
    return kind == XPOS or kind == XNEG


class WebDiagram:
    __slots__ = ("kinds", "vdarts", "twin", "tail", "boundary", "loops",
                 "_owner", "_canon", "_hash", "_comps")

    def __init__(self, kinds, vdarts, twin, tail, boundary, loops=0):
        self.kinds = tuple(kinds)
        self.vdarts = tuple(tuple(v) for v in vdarts)
        self.twin = tuple(twin)
        self.tail = tuple(tail)
        self.boundary = tuple(boundary)
        self.loops = loops
        self._owner = None
        self._canon = None
        self._hash = None
        self._comps = None

    # -- basic structure ----------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.twin)

    def owner(self):
        """dart -> (vertex index, slot), boundary darts get (BOUNDARY, pos)."""
        if self._owner is None:
            o = [None] * self.n_darts
            for vi, darts in enumerate(self.vdarts):
                for s, d in enumerate(darts):
                    o[d] = (vi, s)
            for pos, d in enumerate(self.boundary):
                o[d] = (BOUNDARY, pos)
            self._owner = o
        return self._owner

    def sign_at(self, pos: int) -> str:
        """Boundary sign: '+' if the edge points out of the disk there."""
        return "+" if not self.tail[self.boundary[pos]] else "-"

    def boundary_signature(self):
        return tuple(self.sign_at(i) for i in range(len(self.boundary)))

    # -- faces ----------------------------------------------------------

    def face_next(self, d: int) -> int:
        t = self.twin[d]
        vi, s = self.owner()[t]
        if vi == BOUNDARY:
            # the boundary acts as a virtual vertex with reversed cyclic order
            m = len(self.boundary)
            return self.boundary[(s - 1) % m]
        darts = self.vdarts[vi]
        return darts[(s + 1) % len(darts)]

    def faces(self):
        """All face orbits, each a tuple of darts (boundary darts included)."""
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

    def internal_faces(self):
        """Faces not touching the boundary circle, with their side counts."""
        own = self.owner()
        return [f for f in self.faces() if all(own[d][0] != BOUNDARY for d in f)]

    def is_basis_web(self) -> bool:
        """Crossing-free boxless disk web with all internal faces >= 6-sided."""
        if any(is_crossing(k) or is_box(k) for k in self.kinds):
            raise ValueError("is_basis_web on a diagram with crossings or boxes")
        if self.loops:
            return False
        return all(len(f) >= 6 for f in self.internal_faces())

    # -- validation ------------------------------------------------------

    def check(self, box_signature=None):
        """Structural and planarity invariants; raises ValueError on failure."""
        n = self.n_darts
        own = self.owner()
        if any(o is None for o in own):
            raise ValueError("dart not attached anywhere")
        for d in range(n):
            t = self.twin[d]
            if not 0 <= t < n or self.twin[t] != d or t == d:
                raise ValueError(f"twin involution broken at dart {d}")
            if self.tail[d] == self.tail[t]:
                raise ValueError(f"edge {d}-{t} lacks a direction")
        for vi, darts in enumerate(self.vdarts):
            kind = self.kinds[vi]
            tails = tuple(self.tail[d] for d in darts)
            if kind == SINK:
                if len(darts) != 3 or any(tails):
                    raise ValueError(f"bad sink {vi}")
            elif kind == SOURCE:
                if len(darts) != 3 or not all(tails):
                    raise ValueError(f"bad source {vi}")
            elif kind == XPOS:
                if tails != (False, True, True, False):
                    raise ValueError(f"bad positive crossing {vi}")
            elif kind == XNEG:
                if tails != (False, False, True, True):
                    raise ValueError(f"bad negative crossing {vi}")
            elif is_box(kind):
                if box_signature is not None and box_signature(kind) != tails:
                    raise ValueError(f"box {vi} port signature mismatch")
            else:
                raise ValueError(f"unknown vertex kind {kind}")
        self._check_planarity()

    def _components(self):
        """Connected components over vertices; returns vertex-index sets."""
        if self._comps is not None:
            return self._comps
        own = self.owner()
        nv = len(self.kinds)
        comp = [-1] * nv
        comps = []
        for start in range(nv):
            if comp[start] >= 0:
                continue
            ci = len(comps)
            group = {start}
            comp[start] = ci
            stack = [start]
            while stack:
                vi = stack.pop()
                for d in self.vdarts[vi]:
                    wi, _ = own[self.twin[d]]
                    if wi != BOUNDARY and comp[wi] < 0:
                        comp[wi] = ci
                        group.add(wi)
                        stack.append(wi)
            comps.append(group)
        self._comps = comps
        return comps

    def _check_planarity(self):
        own = self.owner()
        faces = self.faces()
        comps = self._components()
        edge_count = lambda vs: sum(len(self.vdarts[v]) for v in vs)
        bnd_comps = set()
        for pos, d in enumerate(self.boundary):
            vi, _ = own[self.twin[d]]
            if vi != BOUNDARY:
                for ci, vs in enumerate(comps):
                    if vi in vs:
                        bnd_comps.add(ci)
        # boundary part (virtual vertex compactifies the disk to a sphere)
        if self.boundary:
            vs = set().union(*(comps[ci] for ci in bnd_comps)) if bnd_comps else set()
            dset = {d for v in vs for d in self.vdarts[v]} | set(self.boundary)
            E = sum(1 for d in dset if self.twin[d] in dset) // 2
            F = sum(1 for f in faces if f[0] in dset)
            V = len(vs) + 1
            if V - E + F != 2:
                raise ValueError("boundary part is not planar (Euler check)")
        for ci, vs in enumerate(comps):
            if ci in bnd_comps:
                continue
            dset = {d for v in vs for d in self.vdarts[v]}
            E = len(dset) // 2
            F = sum(1 for f in faces if f[0] in dset)
            if len(vs) - E + F != 2:
                raise ValueError("closed component is not planar (Euler check)")

    # -- canonical form ----------------------------------------------

    def _refined_colors(self):
        """Isomorphism-invariant vertex colors (used to prune canonical
        start candidates); colors are ranks, stable under relabeling."""
        own = self.owner()
        twin = self.twin
        tail = self.tail
        uniq = sorted(set(self.kinds))
        col = [uniq.index(k) for k in self.kinds]
        nbrs = []
        for darts in self.vdarts:
            row = []
            for d in darts:
                wi, ws = own[twin[d]]
                row.append(((-1 - ws, wi) if wi == BOUNDARY else (0, wi), tail[d]))
            nbrs.append(row)
        for _ in range(3):
            sigs = []
            for vi, row in enumerate(nbrs):
                sig = sorted(
                    (ref[0] if ref[0] < 0 else col[ref[1]], t) for ref, t in row
                )
                sig.append((col[vi], False))
                sigs.append(tuple(sig))
            ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [ranks[s] for s in sigs]
            if new == col:
                break
            col = new
        return col

    def canonical_key(self):
        if self._canon is not None:
            return self._canon
        own = self.owner()
        twin = self.twin
        tail = self.tail
        vdarts = self.vdarts
        kinds = self.kinds
        nv = len(kinds)
        pack = self.n_darts + 1

        def encode(start_vi, start_slot):
            num = [-1] * nv
            entry = [0] * nv
            order = [start_vi]
            num[start_vi] = 0
            entry[start_vi] = start_slot
            qi = 0
            while qi < len(order):
                vi = order[qi]
                qi += 1
                darts = vdarts[vi]
                k = len(darts)
                e = entry[vi]
                for j in range(k):
                    wi, ws = own[twin[darts[(e + j) % k]]]
                    if wi != BOUNDARY and num[wi] < 0:
                        num[wi] = len(order)
                        entry[wi] = ws
                        order.append(wi)
            code = []
            for vi in order:
                darts = vdarts[vi]
                k = len(darts)
                e = entry[vi]
                code.append(kinds[vi])
                for j in range(k):
                    d = darts[(e + j) % k]
                    t = twin[d]
                    wi, ws = own[t]
                    if wi == BOUNDARY:
                        code.append(~ws)
                        code.append(tail[d])
                    else:
                        code.append(num[wi] * pack + (ws - entry[wi]) % len(vdarts[wi]))
                        code.append(tail[d])
            return tuple(code), order

        comps = self._components()
        comp_of = {}
        for ci, vs in enumerate(comps):
            for v in vs:
                comp_of[v] = ci

        attached_keys = []
        done_comps = set()
        chords = []
        for pos, d in enumerate(self.boundary):
            t = self.twin[d]
            wi, ws = own[t]
            if wi == BOUNDARY:
                if pos < own[t][1]:
                    chords.append(("chord", pos, own[t][1], self.tail[d]))
                continue
            ci = comp_of[wi]
            if ci in done_comps:
                continue
            done_comps.add(ci)
            code, _ = encode(wi, ws)
            attached_keys.append(code)

        closed_keys = []
        remaining = [ci for ci, vs in enumerate(comps) if ci not in done_comps and vs]
        col = self._refined_colors() if remaining else None
        for ci in remaining:
            vs = comps[ci]
            # only start from vertices of the minimal refined color
            best_col = min(col[vi] for vi in vs)
            best = None
            for vi in sorted(vs):
                if col[vi] != best_col:
                    continue
                for slot in range(len(self.vdarts[vi])):
                    code, _ = encode(vi, slot)
                    if best is None or code < best:
                        best = code
            closed_keys.append(best)
        closed_keys.sort()

        self._canon = (
            tuple(self.tail[d] for d in self.boundary),
            tuple(chords),
            tuple(attached_keys),
            tuple(closed_keys),
            self.loops,
        )
        return self._canon

    def __eq__(self, other):
        return isinstance(other, WebDiagram) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.canonical_key())
        return self._hash

    def debug_str(self) -> str:
        """Deterministic text dump (golden-test format, not a public format)."""
        lines = [f"boundary {' '.join(map(str, self.boundary))}",
                 f"loops {self.loops}"]
        for vi, darts in enumerate(self.vdarts):
            ds = " ".join(f"{'>' if self.tail[d] else '<'}{d}" for d in darts)
            lines.append(f"{self.kinds[vi]} {ds}")
        lines.append("twin " + " ".join(f"{d}-{self.twin[d]}"
                                        for d in range(self.n_darts) if d < self.twin[d]))
        return "\n".join(lines)

    def __repr__(self):
        nv = len(self.kinds)
        return f"WebDiagram({nv} vertices, {self.n_darts} darts, bd={len(self.boundary)}, loops={self.loops})"


EMPTY_WEB = WebDiagram((), (), (), (), ())


def reversed_web(w: WebDiagram) -> WebDiagram:
    """Reverse every edge direction (sinks become sources and so on).

    Only defined for box-free diagrams; crossing kinds are preserved with
    their slots rotated to keep the under-in-first convention.
    """
    kinds, vdarts = [], []
    for kind, darts in zip(w.kinds, w.vdarts):
        if kind == SINK:
            kinds.append(SOURCE)
            vdarts.append(darts)
        elif kind == SOURCE:
            kinds.append(SINK)
            vdarts.append(darts)
        elif is_crossing(kind):
            kinds.append(kind)
            vdarts.append(darts[2:] + darts[:2])
        else:
            raise ValueError("cannot reverse a diagram with boxes")
    tail = [not t for t in w.tail]
    return WebDiagram(kinds, vdarts, w.twin, tail, w.boundary, w.loops)


def reversed_sum(s: "WebSum") -> "WebSum":
    out = WebSum()
    for w, c in s.terms.items():
        out.add_term(reversed_web(w), c)
    return out


class WebBuilder:
    """Incremental construction of a WebDiagram."""

    def __init__(self):
        self._twin = {}
        self._tail = {}
        self._vertices = []  # (kind, [darts])
        self._boundary = []
        self._loops = 0
        self._next = 0

    def edge(self):
        """New directed edge; returns (tail dart, head dart)."""
        a, b = self._next, self._next + 1
        self._next += 2
        self._twin[a] = b
        self._twin[b] = a
        self._tail[a] = True
        self._tail[b] = False
        return a, b

    def vertex(self, kind, darts):
        self._vertices.append((kind, list(darts)))

    def sink(self, d1, d2, d3):
        self.vertex(SINK, (d1, d2, d3))

    def source(self, d1, d2, d3):
        self.vertex(SOURCE, (d1, d2, d3))

    def crossing(self, u_in, o_in, u_out, o_out, ccw):
        """Crossing from role-tagged dart ends placed in the given ccw order.

        The kind (positive or negative) is derived from the planar
        arrangement, so callers cannot create an inconsistent crossing.
        """
        ccw = list(ccw)
        i = ccw.index(u_in)
        rot = ccw[i:] + ccw[:i]
        if rot == [u_in, o_out, u_out, o_in]:
            self.vertex(XPOS, rot)
        elif rot == [u_in, o_in, u_out, o_out]:
            self.vertex(XNEG, rot)
        else:
            raise ValueError("dart roles do not match a planar crossing")

    def passthrough(self, in1, in2, out1, out2, ccw):
        """Planar substitute for a crossing: sink joining the two inbound
        ends, source emitting the two outbound ends, internal edge from
        source to sink.  The sink sits in the corner between the ins."""
        ccw = list(ccw)
        ins = {in1, in2}
        for r in range(4):
            rot = ccw[r:] + ccw[:r]
            if rot[0] in ins and rot[1] in ins:
                break
        else:
            raise ValueError("pass-through ins must be adjacent in ccw order")
        if {rot[2], rot[3]} != {out1, out2}:
            raise ValueError("pass-through outs do not match")
        m_tail, m_head = self.edge()
        self.sink(rot[0], rot[1], m_head)
        self.source(rot[2], rot[3], m_tail)

    def box(self, kind, ports):
        self.vertex(kind, list(ports))

    def strand(self):
        """Edge meant to run between two boundary points; returns (tail, head)."""
        return self.edge()

    def loop(self, k=1):
        self._loops += k

    def mark_boundary(self, darts):
        self._boundary = list(darts)

    def build(self) -> WebDiagram:
        remap = {}
        for old in sorted(self._twin):
            remap[old] = len(remap)
        n = len(remap)
        twin = [0] * n
        tail = [False] * n
        for old, new in remap.items():
            twin[new] = remap[self._twin[old]]
            tail[new] = self._tail[old]
        kinds = [k for k, _ in self._vertices]
        vdarts = [[remap[d] for d in ds] for _, ds in self._vertices]
        boundary = [remap[d] for d in self._boundary]
        used = [False] * n
        for ds in vdarts:
            for d in ds:
                if used[d]:
                    raise ValueError("dart used twice")
                used[d] = True
        for d in boundary:
            if used[d]:
                raise ValueError("dart used twice")
            used[d] = True
        if not all(used):
            raise ValueError("dangling dart")
        return WebDiagram(kinds, vdarts, twin, tail, boundary, self._loops)


class _Mut:
    """Mutable working copy for local surgery."""

    __slots__ = ("kinds", "vdarts", "twin", "tail", "boundary", "loops", "_next")

    @staticmethod
    def of(w: WebDiagram) -> "_Mut":
        m = _Mut()
        m.kinds = list(w.kinds)
        m.vdarts = [list(v) for v in w.vdarts]
        m.twin = dict(enumerate(w.twin))
        m.tail = dict(enumerate(w.tail))
        m.boundary = list(w.boundary)
        m.loops = w.loops
        m._next = w.n_darts
        return m

    @staticmethod
    def empty() -> "_Mut":
        m = _Mut()
        m.kinds, m.vdarts, m.boundary = [], [], []
        m.twin, m.tail = {}, {}
        m.loops = 0
        m._next = 0
        return m

    def absorb(self, w: WebDiagram):
        """Disjointly add another diagram; returns its dart relabeling map."""
        off = self._next
        remap = {d: d + off for d in range(w.n_darts)}
        for d in range(w.n_darts):
            self.twin[d + off] = w.twin[d] + off
            self.tail[d + off] = w.tail[d]
        for kind, darts in zip(w.kinds, w.vdarts):
            self.kinds.append(kind)
            self.vdarts.append([d + off for d in darts])
        self.loops += w.loops
        self._next += w.n_darts
        return remap

    def new_edge(self):
        a, b = self._next, self._next + 1
        self._next += 2
        self.twin[a], self.twin[b] = b, a
        self.tail[a], self.tail[b] = True, False
        return a, b

    def fresh_dart(self):
        """Unattached dart id; must be wired in with replant."""
        d = self._next
        self._next += 1
        return d

    def add_vertex(self, kind, darts):
        self.kinds.append(kind)
        self.vdarts.append(list(darts))

    def drop_vertex(self, vi):
        """Remove the vertex; its darts must be consumed by fuse/replant."""
        self.kinds[vi] = None
        self.vdarts[vi] = []

    def delete_edge(self, d: int):
        """Remove the edge with end dart d entirely."""
        t = self.twin[d]
        for x in (d, t):
            del self.twin[x]
            del self.tail[x]

    def replant(self, old: int, new: int):
        """New dart takes over the edge end previously held by `old`."""
        t = self.twin[old]
        self.twin[new] = t
        self.twin[t] = new
        self.tail[new] = self.tail[old]
        del self.twin[old]
        del self.tail[old]

    def fuse(self, d1: int, d2: int):
        """Join the strands ending at darts d1, d2 (both darts vanish)."""
        if self.tail[d1] == self.tail[d2]:
            raise ValueError("fuse would reverse an edge direction")
        t1 = self.twin[d1]
        if t1 == d2:  # the edge closes onto itself
            self.loops += 1
            for d in (d1, d2):
                del self.twin[d]
                del self.tail[d]
            return
        t2 = self.twin[d2]
        self.twin[t1] = t2
        self.twin[t2] = t1
        for d in (d1, d2):
            del self.twin[d]
            del self.tail[d]

    def finalize(self) -> WebDiagram:
        remap = {}
        for old in sorted(self.twin):
            remap[old] = len(remap)
        n = len(remap)
        twin = [0] * n
        tail = [False] * n
        for old, new in remap.items():
            twin[new] = remap[self.twin[old]]
            tail[new] = self.tail[old]
        kinds, vdarts = [], []
        for kind, darts in zip(self.kinds, self.vdarts):
            if kind is None:
                continue
            kinds.append(kind)
            vdarts.append([remap[d] for d in darts])
        boundary = [remap[d] for d in self.boundary]
        return WebDiagram(kinds, vdarts, twin, tail, boundary, self.loops)


def weld(parts, joins, boundary) -> WebDiagram:
    """Glue diagrams along boundary darts.

    parts: list of WebDiagram.
    joins: pairs ((i, dart in parts[i]), (j, dart in parts[j])) to fuse.
    boundary: the result boundary as (i, dart) refs, cyclic order supplied
    by the caller.
    """
    m = _Mut.empty()
    maps = [m.absorb(w) for w in parts]
    for (i, a), (j, b) in joins:
        m.fuse(maps[i][a], maps[j][b])
    m.boundary = [maps[i][d] for i, d in boundary]
    return m.finalize()


class WebSum:
    """Finite formal combination of web diagrams with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                self.add_term(w, c)

    @staticmethod
    def zero() -> "WebSum":
        return WebSum()

    @staticmethod
    def of(w: WebDiagram, c: Scalar | None = None) -> "WebSum":
        s = WebSum()
        s.add_term(w, c if c is not None else Scalar.one())
        return s

    def add_term(self, w: WebDiagram, c: Scalar):
        if c.is_zero():
            return
        cur = self.terms.get(w)
        if cur is None:
            self.terms[w] = c
        else:
            c2 = cur + c
            if c2.is_zero():
                del self.terms[w]
            else:
                self.terms[w] = c2

    def __add__(self, other: "WebSum") -> "WebSum":
        s = WebSum(dict(self.terms))
        for w, c in other.terms.items():
            s.add_term(w, c)
        return s

    def __sub__(self, other: "WebSum") -> "WebSum":
        return self + other.scale(-Scalar.one())

    def scale(self, c: Scalar) -> "WebSum":
        if c.is_zero():
            return WebSum()
        s = WebSum()
        for w, k in self.terms.items():
            s.terms[w] = k * c
        return s

    def map_linear(self, f) -> "WebSum":
        """Apply a diagram -> WebSum map linearly."""
        s = WebSum()
        for w, c in self.terms.items():
            for w2, c2 in f(w).terms.items():
                s.add_term(w2, c * c2)
        return s

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, WebSum) and self.terms == other.terms

    def __repr__(self):
        return f"WebSum({len(self.terms)} terms)"
