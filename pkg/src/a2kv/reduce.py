"""Terminating reduction of A2 webs.

Crossings are resolved into the oriented smoothing and the planar
sink/source replacement; circles, bigons and squares are then removed by
the defining local relations until either the empty diagram (closed
case) or a sum of basis webs (disk case) remains.  Opaque box vertices
are expanded through a pluggable cache.

The reduction site order is configurable so confluence can be tested;
the default order is circles, bigons, squares, crossings, boxes, each
scanned deterministically.
"""

from __future__ import annotations

import sys

from .qscalar import Scalar, quantum_int, sc
from .webs import (
    BOUNDARY,
    SINK,
    SOURCE,
    XNEG,
    XPOS,
    WebDiagram,
    WebSum,
    _Mut,
    is_box,
    is_crossing,
)

sys.setrecursionlimit(200_000)

TWO = sc(quantum_int(2))
THREE = sc(quantum_int(3))

# crossing resolution: coeff of the oriented smoothing, coeff of the
# sink/source replacement (q^(1/3), -q^(-1/6) for a positive crossing)
CROSSING_COEFFS = {
    XPOS: (Scalar.vpow(2), -Scalar.vpow(-1)),
    XNEG: (Scalar.vpow(-2), -Scalar.vpow(1)),
}


class ReductionError(Exception):
    """A nonempty crossing-free closed web had no reducible face."""


def resolve_crossing(w: WebDiagram, vi: int) -> WebSum:
    """Expand one crossing by the bracket relation."""
    kind = w.kinds[vi]
    if not is_crossing(kind):
        raise ValueError(f"vertex {vi} is not a crossing")
    darts = w.vdarts[vi]
    if kind == XPOS:
        u_in, o_out, u_out, o_in = darts
    else:
        u_in, o_in, u_out, o_out = darts
    c_smooth, c_web = CROSSING_COEFFS[kind]

    m = _Mut.of(w)
    m.drop_vertex(vi)
    m.fuse(u_in, o_out)
    m.fuse(o_in, u_out)
    smooth = m.finalize()

    m = _Mut.of(w)
    m.drop_vertex(vi)
    mt, mh = m.new_edge()
    s_uin, s_oin = m.fresh_dart(), m.fresh_dart()
    r_uout, r_oout = m.fresh_dart(), m.fresh_dart()
    m.replant(u_in, s_uin)
    m.replant(o_in, s_oin)
    m.replant(u_out, r_uout)
    m.replant(o_out, r_oout)
    if kind == XPOS:
        m.add_vertex(SINK, (s_oin, s_uin, mh))
        m.add_vertex(SOURCE, (r_oout, r_uout, mt))
    else:
        m.add_vertex(SINK, (s_uin, s_oin, mh))
        m.add_vertex(SOURCE, (r_uout, r_oout, mt))
    iweb = m.finalize()

    out = WebSum()
    out.add_term(smooth, c_smooth)
    out.add_term(iweb, c_web)
    return out


def _third_dart(w, vi, used):
    for d in w.vdarts[vi]:
        if d not in used:
            return d
    raise AssertionError("trivalent vertex without a free dart")


def reduce_bigon(w: WebDiagram, face) -> WebDiagram:
    p, q = face
    own = w.owner()
    vp, vq = own[p][0], own[q][0]
    rp = _third_dart(w, vp, {p, w.twin[q]})
    rq = _third_dart(w, vq, {q, w.twin[p]})
    m = _Mut.of(w)
    m.drop_vertex(vp)
    m.drop_vertex(vq)
    m.delete_edge(p)
    m.delete_edge(q)
    m.fuse(rp, rq)
    return m.finalize()


def reduce_square(w: WebDiagram, face):
    """The two orientation-consistent arc replacements of a square face."""
    own = w.owner()
    verts = [own[d][0] for d in face]
    ext = []
    for i, d in enumerate(face):
        prev = face[(i - 1) % 4]
        ext.append(_third_dart(w, verts[i], {d, w.twin[prev]}))
    outs = []
    for pairing in ((0, 1, 2, 3), (1, 2, 3, 0)):
        m = _Mut.of(w)
        for v in set(verts):
            m.drop_vertex(v)
        for d in face:
            m.delete_edge(d)
        a, b, c, d = (ext[i] for i in pairing)
        m.fuse(a, b)
        m.fuse(c, d)
        outs.append(m.finalize())
    return outs


def expand_box(w: WebDiagram, vi: int, expansion: WebSum) -> WebSum:
    """Replace a box vertex by the cached sum over basis webs."""
    ports = w.vdarts[vi]
    out = WebSum()
    for term, coeff in expansion.items():
        m = _Mut.of(w)
        m.drop_vertex(vi)
        remap = m.absorb(term)
        for port, bdart in zip(ports, term.boundary):
            m.fuse(port, remap[bdart])
        out.add_term(m.finalize(), coeff)
    return out


def _restrict(w: WebDiagram, verts) -> WebDiagram:
    dart_set = sorted(d for v in verts for d in w.vdarts[v])
    remap = {d: i for i, d in enumerate(dart_set)}
    kinds = [w.kinds[v] for v in verts]
    vdarts = [[remap[d] for d in w.vdarts[v]] for v in verts]
    twin = [remap[w.twin[d]] for d in dart_set]
    tail = [w.tail[d] for d in dart_set]
    return WebDiagram(kinds, vdarts, twin, tail, ())


def split_off_closed(w: WebDiagram):
    """Strip loops and closed components.

    Returns (loops, closed component diagrams, remaining diagram); the
    remaining diagram keeps every component attached to the boundary.
    """
    if not w.boundary and w.loops == 0:
        comps = w._components()
        if len(comps) <= 1:
            return 0, [], w
        parts = [_restrict(w, sorted(vs)) for vs in comps]
        return 0, parts[1:], parts[0]
    own = w.owner()
    comps = w._components()
    attached = set()
    for d in w.boundary:
        vi, _ = own[w.twin[d]]
        if vi != BOUNDARY:
            for ci, vs in enumerate(comps):
                if vi in vs:
                    attached.add(ci)
    closed = [ci for ci, vs in enumerate(comps) if ci not in attached and vs]
    loops = w.loops
    if not closed and not loops:
        return 0, [], w
    parts = [_restrict(w, sorted(comps[ci])) for ci in closed]
    keep = sorted(v for ci in attached for v in comps[ci])
    rest = _keep_with_boundary(w, keep)
    return loops, parts, rest


def _keep_with_boundary(w: WebDiagram, verts) -> WebDiagram:
    dart_set = sorted(
        {d for v in verts for d in w.vdarts[v]} | set(w.boundary)
    )
    remap = {d: i for i, d in enumerate(dart_set)}
    kinds = [w.kinds[v] for v in verts]
    vdarts = [[remap[d] for d in w.vdarts[v]] for v in verts]
    twin = [remap[w.twin[d]] for d in dart_set]
    tail = [w.tail[d] for d in dart_set]
    boundary = [remap[d] for d in w.boundary]
    return WebDiagram(kinds, vdarts, twin, tail, boundary)


def _reducible_faces(w: WebDiagram):
    own = w.owner()
    bigons, squares = [], []
    for f in w.faces():
        ok = True
        for d in f:
            vi = own[d][0]
            if vi == BOUNDARY or w.kinds[vi] not in (SINK, SOURCE):
                ok = False
                break
        if not ok:
            continue
        if len(f) == 2:
            if f[1] != w.twin[f[0]]:
                bigons.append(f)
        elif len(f) == 4:
            verts = {own[d][0] for d in f}
            if len(verts) == 4:
                squares.append(f)
    key = lambda f: min(f)
    return sorted(bigons, key=key), sorted(squares, key=key)


def _actions(w: WebDiagram):
    """Available reduction sites: faces first, then box expansions
    (cheapest box first), then crossing resolutions.  Expanding boxes
    before crossings lets projector-killed terms vanish before crossing
    resolution doubles them."""
    bigons, squares = _reducible_faces(w)
    acts = [("bigon", f) for f in bigons] + [("square", f) for f in squares]
    boxes = [vi for vi, k in enumerate(w.kinds) if is_box(k)]
    boxes.sort(key=lambda vi: (len(w.vdarts[vi]), vi))
    acts += [("box", vi) for vi in boxes]
    acts += [("x", vi) for vi, k in enumerate(w.kinds) if is_crossing(k)]
    return acts


def _default_chooser(actions):
    return actions[0]


class Engine:
    """Bracket evaluator with memoization and pluggable box expansion."""

    def __init__(self, expander=None):
        self.expander = expander  # callable: box kind -> WebSum over basis webs
        self._closed: dict[WebDiagram, Scalar] = {}
        self._disk: dict[WebDiagram, WebSum] = {}

    def _expand(self, kind):
        if self.expander is None:
            raise ReductionError(f"no expander registered for box kind {kind}")
        return self.expander(kind)

    def _step(self, w: WebDiagram, chooser):
        """One reduction step: list of (coefficient, smaller web)."""
        acts = _actions(w)
        if not acts:
            return None
        what, site = chooser(acts)
        if what == "bigon":
            return [(TWO, reduce_bigon(w, site))]
        if what == "square":
            return [(Scalar.one(), x) for x in reduce_square(w, site)]
        if what == "x":
            return list(
                (c, web) for web, c in resolve_crossing(w, site).items()
            )
        if what == "box":
            return list(
                (c, web) for web, c in expand_box(w, site, self._expand(w.kinds[site])).items()
            )
        raise AssertionError(what)

    # -- closed webs ---------------------------------------------------

    def bracket(self, w: WebDiagram, chooser=None, memo=None) -> Scalar:
        """Value of a closed web (empty boundary required)."""
        if w.boundary:
            raise ValueError("bracket of a non-closed web")
        if chooser is None:
            chooser = _default_chooser
            if memo is None:
                memo = self._closed
        elif memo is None:
            memo = {}
        return self._bracket(w, chooser, memo)

    def _bracket(self, w, chooser, memo):
        got = memo.get(w)
        if got is not None:
            return got
        loops, parts, rest = split_off_closed(w)
        if loops or parts:
            val = THREE ** loops
            for p in parts + [rest]:
                val = val * self._bracket(p, chooser, memo)
            memo[w] = val
            return val
        if not w.kinds:
            return Scalar.one()
        steps = self._step(w, chooser)
        if steps is None:
            raise ReductionError(
                "nonempty crossing-free closed web with no reducible face"
            )
        val = Scalar.zero()
        for c, w2 in steps:
            val = val + c * self._bracket(w2, chooser, memo)
        memo[w] = val
        return val

    # -- disk webs -------------------------------------------------------

    def reduce_disk(self, w: WebDiagram, chooser=None, memo=None) -> WebSum:
        """Expand a disk web over basis webs (same boundary)."""
        if chooser is None:
            chooser = _default_chooser
            if memo is None:
                memo = self._disk
        elif memo is None:
            memo = {}
        return self._reduce_disk(w, chooser, memo)

    def _reduce_disk(self, w, chooser, memo):
        got = memo.get(w)
        if got is not None:
            return got
        loops, parts, rest = split_off_closed(w)
        if loops or parts:
            c = THREE ** loops
            for p in parts:
                c = c * self._bracket(p, chooser, self._closed if memo is self._disk else {})
            val = self._reduce_disk(rest, chooser, memo).scale(c)
            memo[w] = val
            return val
        steps = self._step(w, chooser)
        if steps is None:
            if not w.boundary and w.kinds:
                raise ReductionError(
                    "nonempty crossing-free closed web with no reducible face"
                )
            val = WebSum.of(w)
            memo[w] = val
            return val
        val = WebSum()
        for c, w2 in steps:
            for term, c2 in self._reduce_disk(w2, chooser, memo).items():
                val.add_term(term, c * c2)
        memo[w] = val
        return val

    def reduce_sum(self, s: WebSum, chooser=None) -> WebSum:
        out = WebSum()
        for w, c in s.items():
            for term, c2 in self.reduce_disk(w, chooser).items():
                out.add_term(term, c * c2)
        return out
