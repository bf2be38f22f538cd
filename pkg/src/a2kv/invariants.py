"""Evaluation of the colored invariants of 4-valent rigid vertex graphs.

A diagram is compiled into a closed A2 web: every edge is cabled and
carries one projector box, crossings become cabled crossing grids, and
rigid vertices become their defining replacement webs.  The closed web
is then evaluated by the bracket engine.

Oriented mode (color c, variant k): pattern-A vertices become the web
whose two through-cables of k strands pass a planar k-by-k pass-through
region while the remaining c-k strands of each leg turn back to the
adjacent leg; pattern-B vertices become the square web splitting c into
c/2 + c/2 between adjacent legs.  Singular mode is the oriented
evaluation at color m with variant m, restricted to pattern-A vertices.

Unoriented mode (color (n, n)): edges carry the (n, n) projector on an
antiparallel pair, and every vertex expands into the white square plus
the black square built from corner vertices; the invariant is the
multilinear sum over the 2^V assignments.
"""

from __future__ import annotations

from itertools import product

from .clasps import CACHE, ENGINE, black_vertex, cross_region, dclasp_on_pair, white_vertex
from .graphs import RV, XN, XP, GraphDiagram, GraphError
from .qscalar import Scalar
from .webs import WebBuilder, WebDiagram, WebSum, weld


# -- standalone blocks -------------------------------------------------


def boxed_cable(c: int):
    """One c-clasp on a c-cable; returns (web, west darts lane-ascending,
    east darts lane-ascending)."""
    b = WebBuilder()
    wests, easts, box_in, box_out = [], [], [], []
    for _ in range(c):
        t, h = b.edge()
        wests.append(t)
        box_in.append(h)
        t2, h2 = b.edge()
        box_out.append(t2)
        easts.append(h2)
    b.box(f"c:{c}", box_out + box_in[::-1])
    b.mark_boundary(easts + wests[::-1])
    return b.build(), wests, easts


def boxed_pair(n: int):
    """One (n, n)-clasp on an antiparallel pair; returns (web, west group,
    east group), the groups listed in the boundary's ccw order."""
    b = WebBuilder()
    wb, bot_in = [], []
    et, top_in = [], []
    eb, bot_out = [], []
    wt, top_out = [], []
    for _ in range(n):
        t, h = b.edge()
        wb.append(t)
        bot_in.append(h)
    for _ in range(n):
        t, h = b.edge()
        et.append(t)
        top_in.append(h)
    for _ in range(n):
        t, h = b.edge()
        bot_out.append(t)
        eb.append(h)
    for _ in range(n):
        t, h = b.edge()
        top_out.append(t)
        wt.append(h)
    dclasp_on_pair(b, n, n, top_in, top_out, bot_in, bot_out)
    b.mark_boundary(eb + et + wt[::-1] + wb[::-1])
    return b.build(), wt[::-1] + wb[::-1], eb + et


def crossing_block(c: int, over_dirs, under_dirs):
    """Cabled crossing: the under-cable runs horizontally, the over-cable
    vertically; per-strand direction flags (up / east).  Returns
    (web, [W, S, E, N port dart lists]) in ccw-around-the-node order."""
    b = WebBuilder()
    vstr, s_bd, n_bd = [], [], []
    for i in range(c):
        st, sh = b.edge()
        nt, nh_ = b.edge()
        if over_dirs[i]:
            vstr.append((sh, nt))
            s_bd.append(st)
            n_bd.append(nh_)
        else:
            vstr.append((nh_, st))
            s_bd.append(sh)
            n_bd.append(nt)
    hstr, w_bd, e_bd = [], [], []
    for j in range(c):
        wt, wh = b.edge()
        et, eh = b.edge()
        if under_dirs[j]:
            hstr.append((wh, et))
            w_bd.append(wt)
            e_bd.append(eh)
        else:
            hstr.append((eh, wt))
            w_bd.append(wh)
            e_bd.append(et)
    cross_region(b, vstr, hstr, over_dirs, under_dirs, "v_over")
    ports = [w_bd[::-1], s_bd, e_bd, n_bd[::-1]]
    b.mark_boundary(s_bd + e_bd + n_bd[::-1] + w_bd[::-1])
    return b.build(), ports


def vertex_a_block(c: int, k: int):
    """Pattern-A vertex web at color c, variant k.

    Ports at W, S (in) and E, N (out); k strands of each in-port pass
    through a planar k-by-k region to the opposite port, the remaining
    r = c - k turn back at the S-E and N-W corners.  Returns
    (web, [W, S, E, N port dart lists]) in ccw-around-the-node order.
    """
    if not 0 <= k <= c:
        raise GraphError("variant out of range")
    b = WebBuilder()
    r = c - k
    se_arcs = [b.edge() for _ in range(r)]   # S in to E out
    nw_arcs = [b.edge() for _ in range(r)]   # W in to N out
    w_th = [b.edge() for _ in range(k)]
    s_th = [b.edge() for _ in range(k)]
    e_th = [b.edge() for _ in range(k)]
    n_th = [b.edge() for _ in range(k)]
    if k:
        hstr = [(w_th[k - 1 - j][1], e_th[j][0]) for j in range(k)]
        vstr = [(s_th[i][1], n_th[i][0]) for i in range(k)]
        cross_region(b, vstr, hstr, True, True, "pass")
    w_port = [nw_arcs[j][0] for j in range(r)] + [w[0] for w in w_th]
    s_port = [w[0] for w in s_th] + [se_arcs[r - 1 - j][0] for j in range(r)]
    e_port = [se_arcs[j][1] for j in range(r)] + [w[1] for w in e_th]
    n_port = [n_th[k - 1 - i][1] for i in range(k)] + [nw_arcs[r - 1 - j][1] for j in range(r)]
    b.mark_boundary(s_port + e_port + n_port + w_port)
    return b.build(), [w_port, s_port, e_port, n_port]


def vertex_b_block(c: int):
    """Pattern-B vertex web: adjacent legs share straight c/2-cables.

    Ports at W, E (in) and S, N (out); returns (web, [W, S, E, N]).
    """
    if c % 2:
        raise GraphError("pattern-B vertex needs an even color")
    n = c // 2
    b = WebBuilder()
    ws_arcs = [b.edge() for _ in range(n)]   # W in to S out
    se_arcs = [b.edge() for _ in range(n)]   # E in to S out
    en_arcs = [b.edge() for _ in range(n)]   # E in to N out
    nw_arcs = [b.edge() for _ in range(n)]   # W in to N out
    w_port = [nw_arcs[j][0] for j in range(n)] + [ws_arcs[n - 1 - j][0] for j in range(n)]
    s_port = [ws_arcs[j][1] for j in range(n)] + [se_arcs[n - 1 - j][1] for j in range(n)]
    e_port = [se_arcs[j][0] for j in range(n)] + [en_arcs[n - 1 - j][0] for j in range(n)]
    n_port = [en_arcs[j][1] for j in range(n)] + [nw_arcs[n - 1 - j][1] for j in range(n)]
    b.mark_boundary(s_port + e_port + n_port + w_port)
    return b.build(), [w_port, s_port, e_port, n_port]


# -- assembly ----------------------------------------------------------


def _positions(web: WebDiagram, darts) -> tuple[int, ...]:
    index = {d: i for i, d in enumerate(web.boundary)}
    return tuple(index[d] for d in darts)


def _assemble(part_sums, joins_pos) -> WebSum:
    """Weld a family of formal sums along boundary positions.

    joins_pos: pairs ((part, boundary position), (part, boundary
    position)); every boundary dart must be consumed.
    """
    out = WebSum()
    choices = [list(s.items()) for s in part_sums]
    for combo in product(*choices):
        webs = [w for w, _ in combo]
        coeff = Scalar.one()
        for _, c in combo:
            coeff = coeff * c
        joins = [
            ((i, webs[i].boundary[a]), (j, webs[j].boundary[b]))
            for (i, a), (j, b) in joins_pos
        ]
        out.add_term(weld(webs, joins, []), coeff)
    return out


def _closed_loop_positions(m: int):
    return [(j, m - 1 - j) for j in range(m // 2)]


def compile_oriented(g: GraphDiagram, color: int, variant: int) -> WebSum:
    if not g.oriented:
        raise GraphError("oriented evaluation needs an oriented diagram")
    parts = []
    ports = {}  # (node, slot) -> (part, position tuple)

    def add(web, plists=None):
        parts.append(WebSum.of(web))
        return len(parts) - 1

    own = g.owner()
    for ni, kind in enumerate(g.kinds):
        if kind in (XP, XN):
            over_up = g.is_in(g.node_darts[ni][1])
            web, p = crossing_block(color, [over_up] * color, [True] * color)
        else:
            pat, rot = g.vertex_pattern(ni)
            if pat == "A":
                web, p = vertex_a_block(color, variant)
            else:
                web, p = vertex_b_block(color)
        pi = add(web)
        if kind in (XP, XN):
            rot = 0
        for j, plist in enumerate(p):
            ports[(ni, (rot + j) % 4)] = (pi, _positions(web, plist))
    joins = []
    for d in range(g.n_darts):
        t = g.twin[d]
        if t < d:
            continue
        td, hd = (d, t) if d in g.tails else (t, d)
        api, apos = ports[own[td]]
        bpi, bpos = ports[own[hd]]
        web, wests, easts = boxed_cable(color)
        pi = add(web)
        wpos = _positions(web, wests)
        epos = _positions(web, easts)
        for i in range(color):
            joins.append(((api, apos[i]), (pi, wpos[i])))
            joins.append(((bpi, bpos[i]), (pi, epos[color - 1 - i])))
    for _ in range(g.loops):
        web, _, _ = boxed_cable(color)
        pi = add(web)
        joins.extend(
            ((pi, a), (pi, b)) for a, b in _closed_loop_positions(2 * color)
        )
    return _assemble(parts, joins)


def compile_unoriented(g: GraphDiagram, n: int, flavors) -> WebSum:
    """One white/black assignment (dict node -> 'w'/'b')."""
    if g.oriented:
        raise GraphError("unoriented evaluation needs an unoriented diagram")
    parts = []
    ports = {}

    def add(s):
        parts.append(s if isinstance(s, WebSum) else WebSum.of(s))
        return len(parts) - 1

    own = g.owner()
    over_dirs = [False] * n + [True] * n
    under_dirs = [True] * n + [False] * n
    pair_port = tuple(range(2 * n))
    upper_port = tuple(range(2 * n, 3 * n))
    lower_port = tuple(range(3 * n, 4 * n))
    joins = []
    vertex_endpoint = set()
    for ni, kind in enumerate(g.kinds):
        if kind in (XP, XN):
            web, p = crossing_block(2 * n, over_dirs, under_dirs)
            pi = add(web)
            for slot, plist in zip(range(4), p):
                ports[(ni, slot)] = (pi, _positions(web, plist))
        else:
            corner = white_vertex(n, n) if flavors[ni] == "w" else black_vertex(n, n)
            cpis = [add(corner) for _ in range(4)]
            for slot in range(4):
                ports[(ni, slot)] = (cpis[slot], pair_port)
                vertex_endpoint.add((ni, slot))
            for j in range(4):
                a, bpi = cpis[j], cpis[(j + 1) % 4]
                for x in range(n):
                    joins.append(
                        ((a, upper_port[x]), (bpi, lower_port[n - 1 - x]))
                    )
    for d in range(g.n_darts):
        t = g.twin[d]
        if t < d:
            continue
        (na, sa), (nb, sb) = own[d], own[t]
        api, apos = ports[(na, sa)]
        bpi, bpos = ports[(nb, sb)]
        if (na, sa) in vertex_endpoint or (nb, sb) in vertex_endpoint:
            for i in range(2 * n):
                joins.append(((api, apos[i]), (bpi, bpos[2 * n - 1 - i])))
        else:
            web, wests, easts = boxed_pair(n)
            pi = add(web)
            wpos = _positions(web, wests)
            epos = _positions(web, easts)
            for i in range(2 * n):
                joins.append(((api, apos[i]), (pi, wpos[2 * n - 1 - i])))
                joins.append(((bpi, bpos[i]), (pi, epos[2 * n - 1 - i])))
    for _ in range(g.loops):
        web, _, _ = boxed_pair(n)
        pi = add(web)
        joins.extend(((pi, a), (pi, b)) for a, b in _closed_loop_positions(4 * n))
    return _assemble(parts, joins)


# -- invariants --------------------------------------------------------


def kv_oriented(
    g: GraphDiagram, two_n: int, variant_k: int | None = None,
    writhe_normalize: bool = False,
) -> Scalar:
    """The oriented colored invariant at color 2n (regular isotopy)."""
    if two_n < 2 or two_n % 2:
        raise GraphError("oriented color must be an even integer >= 2")
    if variant_k is None:
        variant_k = two_n // 2
    if not 0 <= variant_k <= two_n:
        raise GraphError("variant out of range")
    val = _bracket_sum(compile_oriented(g, two_n, variant_k))
    if writhe_normalize:
        w = g.writhe()
        val = val * Scalar.vpow(-2 * w * (two_n * two_n + 3 * two_n))
    return val


def kv_singular(g: GraphDiagram, m: int, writhe_normalize: bool = False) -> Scalar:
    """The singular-link invariant at any positive color m: every rigid
    vertex must have the through-oriented (pattern A) shape."""
    if m < 1:
        raise GraphError("color must be a positive integer")
    for ni, kind in enumerate(g.kinds):
        if kind == RV and g.vertex_pattern(ni)[0] != "A":
            raise GraphError(f"vertex {ni} does not have the singular pattern")
    val = _bracket_sum(compile_oriented(g, m, m))
    if writhe_normalize:
        w = g.writhe()
        val = val * Scalar.vpow(-2 * w * (m * m + 3 * m))
    return val


def kv_unoriented(g: GraphDiagram, n: int) -> Scalar:
    """The unoriented invariant at color (n, n): sum over white/black
    vertex assignments."""
    if n < 1:
        raise GraphError("color must be a positive integer")
    if g.oriented:
        raise GraphError("unoriented invariant needs an unoriented diagram")
    verts = [ni for ni, k in enumerate(g.kinds) if k == RV]
    total = Scalar.zero()
    for combo in product("wb", repeat=len(verts)):
        flavors = dict(zip(verts, combo))
        total = total + _bracket_sum(compile_unoriented(g, n, flavors))
    return total


def _bracket_sum(s: WebSum) -> Scalar:
    val = Scalar.zero()
    for w, c in s.items():
        val = val + c * ENGINE.bracket(w)
    return val
