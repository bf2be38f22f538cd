"""A2 clasps, double clasps, colored trivalent vertices and cabling blocks.

Clasp-like projectors are kept as opaque "box" vertices inside diagrams
and expanded on demand from a cache of fully reduced sums over basis
webs.  Box kinds:

    c:n       single clasp on an n-cable (channel, west to east)
    d:n:m     clasp of type (n, m) on an antiparallel pair
              (top row n flowing east to west, bottom row m west to east)
    y:n:src   n-colored trivalent vertex, all three legs outgoing
    y:n:snk   same with all legs incoming

Channel webs use the boundary convention (east ports bottom to top,
west ports top to bottom), i.e. counterclockwise around the disk.
"""

from __future__ import annotations

from .qscalar import Scalar, qint, quantum_binom, sc
from .reduce import Engine
from .webs import WebBuilder, WebDiagram, WebSum, reversed_sum


# -- low-level wiring helpers -----------------------------------------


def clasp_on_cable(b: WebBuilder, n: int, in_ends, out_ends):
    """Place a c:n box on a cable.

    in_ends: head darts of the n wires entering the box, out_ends: tail
    darts of the wires leaving, both in box lane order 1..n.  The caller
    must place lanes so that (out_1..out_n, in_n..in_1) is the ccw order
    around the box: for a west-to-east cable lane 1 is the bottom, for a
    reversed cable lane 1 is the top.
    """
    if n == 0:
        return
    b.box(f"c:{n}", list(out_ends) + list(reversed(list(in_ends))))


def dclasp_on_pair(b: WebBuilder, n: int, m: int,
                   top_in_ends, top_out_ends, bot_in_ends, bot_out_ends):
    """Place a d:n:m box: top row (n) east to west, bottom row (m) west
    to east.  Rows in lane order with lane 1 at the bottom of each row:
    top_in = wires from the east, top_out = wires leaving west,
    bot_in = from the west, bot_out = leaving east."""
    ports = (
        list(bot_out_ends)
        + list(top_in_ends)
        + list(reversed(list(top_out_ends)))
        + list(reversed(list(bot_in_ends)))
    )
    b.box(f"d:{n}:{m}", ports)


def make_tile(b: WebBuilder, s_end, e_end, n_end, w_end, vert_up, horiz_east, kind):
    """One grid tile: a vertical strand (ends s, n) meets a horizontal one
    (ends w, e).  kind: 'v_over', 'h_over' (real crossings) or 'pass'."""
    v_in, v_out = (s_end, n_end) if vert_up else (n_end, s_end)
    h_in, h_out = (w_end, e_end) if horiz_east else (e_end, w_end)
    ccw = (s_end, e_end, n_end, w_end)
    if kind == "pass":
        b.passthrough(v_in, h_in, v_out, h_out, ccw)
    elif kind == "v_over":
        b.crossing(u_in=h_in, o_in=v_in, u_out=h_out, o_out=v_out, ccw=ccw)
    elif kind == "h_over":
        b.crossing(u_in=v_in, o_in=h_in, u_out=v_out, o_out=h_out, ccw=ccw)
    else:
        raise ValueError(kind)


def cross_region(b: WebBuilder, vstrands, hstrands, vert_up, horiz_east, kind):
    """Wire a full grid where every vertical strand meets every
    horizontal one.

    vstrands: per vertical line, west to east, a pair (in_end, out_end)
    of dart ends to consume; hstrands: same, south to north.  vert_up /
    horiz_east: per-strand direction flags (scalars allowed).  kind: tile
    kind or callable (i, j) -> kind.
    """
    nv, nh = len(vstrands), len(hstrands)
    if isinstance(vert_up, bool):
        vert_up = [vert_up] * nv
    if isinstance(horiz_east, bool):
        horiz_east = [horiz_east] * nh
    kindf = kind if callable(kind) else (lambda i, j: kind)

    souths = [[None] * nh for _ in range(nv)]
    norths = [[None] * nh for _ in range(nv)]
    for i in range(nv):
        ends = [None] * (nh + 1)
        for j in range(1, nh):
            t, h = b.edge()
            ends[j] = (t, h)
        inn, out = vstrands[i]
        for j in range(nh):
            if vert_up[i]:
                souths[i][j] = inn if j == 0 else ends[j][1]
                norths[i][j] = out if j == nh - 1 else ends[j + 1][0]
            else:
                norths[i][j] = inn if j == nh - 1 else ends[j + 1][1]
                souths[i][j] = out if j == 0 else ends[j][0]
    wests = [[None] * nv for _ in range(nh)]
    easts = [[None] * nv for _ in range(nh)]
    for j in range(nh):
        ends = [None] * (nv + 1)
        for i in range(1, nv):
            t, h = b.edge()
            ends[i] = (t, h)
        inn, out = hstrands[j]
        for i in range(nv):
            if horiz_east[j]:
                wests[j][i] = inn if i == 0 else ends[i][1]
                easts[j][i] = out if i == nv - 1 else ends[i + 1][0]
            else:
                easts[j][i] = inn if i == nv - 1 else ends[i + 1][1]
                wests[j][i] = out if i == 0 else ends[i][0]
    for i in range(nv):
        for j in range(nh):
            make_tile(
                b,
                souths[i][j],
                easts[j][i],
                norths[i][j],
                wests[j][i],
                vert_up[i],
                horiz_east[j],
                kindf(i, j),
            )


def _grid_web(n: int, m: int, v_up: bool, h_east: bool, kind: str) -> WebDiagram:
    """Standalone grid of an n-cable (vertical) meeting an m-cable
    (horizontal).  Boundary ccw: (south side west to east, east side
    south to north, north side east to west, west side north to south).
    """
    b = WebBuilder()
    vstr, s_bd, n_bd = [], [], []
    for _ in range(n):
        st, sh = b.edge()
        nt, nh = b.edge()
        if v_up:
            vstr.append((sh, nt))
            s_bd.append(st)
            n_bd.append(nh)
        else:
            vstr.append((nh, st))
            s_bd.append(sh)
            n_bd.append(nt)
    hstr, w_bd, e_bd = [], [], []
    for _ in range(m):
        wt, wh = b.edge()
        et, eh = b.edge()
        if h_east:
            hstr.append((wh, et))
            w_bd.append(wt)
            e_bd.append(eh)
        else:
            hstr.append((eh, wt))
            w_bd.append(wh)
            e_bd.append(et)
    cross_region(b, vstr, hstr, v_up, h_east, kind)
    b.mark_boundary(s_bd + e_bd + n_bd[::-1] + w_bd[::-1])
    return b.build()


def colored_crossing(n: int, m: int, sign: str = "+", parallel: bool = True) -> WebDiagram:
    """The n-cable passing over the m-cable: an n*m grid of elementary
    crossings of the stated sign.

    The over-cable runs vertically, the under-cable horizontally (west to
    east when parallel, east to west otherwise); the requested sign is
    realized by the over-cable's direction.
    """
    if sign not in "+-":
        raise ValueError("sign must be '+' or '-'")
    if parallel:
        v_up = sign == "-"
    else:
        v_up = sign == "+"
    return _grid_web(n, m, v_up, parallel, "v_over")


def passthrough_grid(n: int, m: int, v_up: bool = True, h_east: bool = True) -> WebDiagram:
    """Planar pass-through of an n-cable and an m-cable (no crossings)."""
    return _grid_web(n, m, v_up, h_east, "pass")


# -- channel webs ------------------------------------------------------


def id_channel(n: int) -> WebDiagram:
    b = WebBuilder()
    east, west = [], []
    for _ in range(n):
        t, h = b.edge()
        west.append(t)
        east.append(h)
    b.mark_boundary(east + west[::-1])
    return b.build()


def boxed_channel(n: int) -> WebDiagram:
    """A single c:n box on an n-strand channel."""
    b = WebBuilder()
    wests, easts, box_in, box_out = [], [], [], []
    for _ in range(n):
        t, h = b.edge()
        wests.append(t)
        box_in.append(h)
        t2, h2 = b.edge()
        box_out.append(t2)
        easts.append(h2)
    clasp_on_cable(b, n, box_in, box_out)
    b.mark_boundary(easts + wests[::-1])
    return b.build()


def turnback_channel(n: int, i: int) -> WebDiagram:
    """n-strand channel where lanes i, i+1 (1-based from the bottom) do a
    sink/source turnback and the rest pass straight."""
    if not 1 <= i <= n - 1:
        raise ValueError("turnback lane out of range")
    b = WebBuilder()
    east = [None] * n
    west = [None] * n
    for lane in range(1, n + 1):
        if lane in (i, i + 1):
            continue
        t, h = b.edge()
        west[lane - 1] = t
        east[lane - 1] = h
    wlo_t, wlo_h = b.edge()
    whi_t, whi_h = b.edge()
    elo_t, elo_h = b.edge()
    ehi_t, ehi_h = b.edge()
    mt, mh = b.edge()
    b.sink(mh, whi_h, wlo_h)
    b.source(ehi_t, mt, elo_t)
    west[i - 1], west[i] = wlo_t, whi_t
    east[i - 1], east[i] = elo_h, ehi_h
    b.mark_boundary(east + west[::-1])
    return b.build()


# -- the clasp cache ---------------------------------------------------


class ClaspCache:
    """Memoized expansions of clasps, double clasps and colored vertices,
    plus the shared reduction engine that expands them on demand."""

    def __init__(self):
        self._sums: dict[str, WebSum] = {}
        self._busy: set[str] = set()
        self.engine = Engine(expander=self.expansion)

    # box expansion used by the engine
    def expansion(self, kind: str) -> WebSum:
        got = self._sums.get(kind)
        if got is not None:
            return got
        if kind in self._busy:
            raise RuntimeError(f"cyclic box expansion for {kind}")
        self._busy.add(kind)
        try:
            parts = kind.split(":")
            if parts[0] == "c":
                s = self._build_clasp(int(parts[1]))
            elif parts[0] == "d":
                s = self._build_double(int(parts[1]), int(parts[2]))
            elif parts[0] == "y":
                s = self._build_vertex(int(parts[1]), parts[2])
            else:
                raise KeyError(f"unknown box kind {kind}")
        finally:
            self._busy.discard(kind)
        self._sums[kind] = s
        return s

    def port_signature(self, kind: str):
        s = self.expansion(kind)
        term = next(iter(s.terms))
        return tuple(not term.tail[d] for d in term.boundary)

    # -- public constructors ----------------------------------------

    def clasp(self, n: int) -> WebSum:
        if n == 0:
            return WebSum.of(WebBuilder().build())
        return self.expansion(f"c:{n}")

    def double_clasp(self, n: int, m: int) -> WebSum:
        if n < 0 or m < 0:
            raise ValueError("negative clasp weight")
        return self.expansion(f"d:{n}:{m}")

    def trivalent_y(self, n: int, polarity: str) -> WebSum:
        if polarity not in ("src", "snk"):
            raise ValueError("polarity must be 'src' or 'snk'")
        return self.expansion(f"y:{n}:{polarity}")

    # -- constructions ------------------------------------------------

    def _build_clasp(self, n: int) -> WebSum:
        if n == 1:
            return WebSum.of(id_channel(1))
        self.clasp(n - 1)  # ensure the recursion layer is cached

        # straight term: clasp(n-1) on lanes 1..n-1, free strand on lane n
        b = WebBuilder()
        wests, easts, box_in, box_out = [], [], [], []
        for _ in range(n - 1):
            t, h = b.edge()
            wests.append(t)
            box_in.append(h)
            t2, h2 = b.edge()
            box_out.append(t2)
            easts.append(h2)
        clasp_on_cable(b, n - 1, box_in, box_out)
        t, h = b.edge()
        wests.append(t)
        easts.append(h)
        b.mark_boundary(easts + wests[::-1])
        t1 = b.build()

        # turnback term: two clasp(n-1) boxes with a sink/source turnback
        # between lane n-1 and the free lane n
        b = WebBuilder()
        wests = []
        a_in = []
        for _ in range(n - 1):
            t, h = b.edge()
            wests.append(t)
            a_in.append(h)
        a_out, b_in, b_out, easts = [], [], [], []
        for lane in range(1, n - 1):  # straights between the boxes
            t, h = b.edge()
            a_out.append(t)
            b_in.append(h)
        ta_t, ta_h = b.edge()  # box A top output into the sink
        a_out.append(ta_t)
        wn_t, wn_h = b.edge()  # west lane n into the sink
        wests.append(wn_t)
        mt, mh = b.edge()
        rb_t, rb_h = b.edge()  # source down into box B lane n-1
        en_t, en_h = b.edge()  # source out to east lane n
        b.sink(mh, wn_h, ta_h)
        b.source(en_t, mt, rb_t)
        b_in.append(rb_h)
        for _ in range(n - 1):
            t, h = b.edge()
            b_out.append(t)
            easts.append(h)
        clasp_on_cable(b, n - 1, a_in, a_out)
        clasp_on_cable(b, n - 1, b_in, b_out)
        easts.append(en_h)
        b.mark_boundary(easts + wests[::-1])
        t2 = b.build()

        coeff = qint(n - 1) / qint(n)
        return self.engine.reduce_disk(t1) - self.engine.reduce_disk(t2).scale(coeff)

    def _build_double(self, n: int, m: int) -> WebSum:
        if n:
            self.clasp(n)
        if m:
            self.clasp(m)
        total = WebSum()
        for k in range(min(n, m) + 1):
            total = total + self.engine.reduce_disk(self._double_term(n, m, k)).scale(
                double_clasp_coefficient(n, m, k)
            )
        return total

    def _double_term(self, n: int, m: int, k: int) -> WebDiagram:
        """The web with k-strand turnbacks on both sides between the four
        single clasps."""
        b = WebBuilder()
        # bottom row boxes BL, BR (c:m); top row TL, TR (c:n)
        wb, bl_in = [], []
        for _ in range(m):
            t, h = b.edge()
            wb.append(t)
            bl_in.append(h)
        et, tr_in = [], []
        for _ in range(n):
            t, h = b.edge()
            et.append(t)
            tr_in.append(h)
        bl_out, br_in = [], []
        tr_out, tl_in = [None] * n, [None] * n
        br_in = [None] * m
        bl_out = [None] * m
        # bottom straights lanes 1..m-k
        for lane in range(m - k):
            t, h = b.edge()
            bl_out[lane] = t
            br_in[lane] = h
        # top straights lanes k+1..n
        for lane in range(k, n):
            t, h = b.edge()
            tr_out[lane] = t
            tl_in[lane] = h
        # left turnback: BL top k outputs rise into TL bottom k inputs,
        # nested so BL lane m-k+1+j meets TL lane k-j
        for j in range(k):
            t, h = b.edge()
            bl_out[m - k + j] = t
            tl_in[k - 1 - j] = h
        # right turnback: TR bottom k outputs descend into BR top k inputs
        for j in range(k):
            t, h = b.edge()
            tr_out[j] = t
            br_in[m - 1 - j] = h
        br_out, eb = [], []
        for _ in range(m):
            t, h = b.edge()
            br_out.append(t)
            eb.append(h)
        tl_out, wt = [], []
        for _ in range(n):
            t, h = b.edge()
            tl_out.append(t)
            wt.append(h)
        if m:
            clasp_on_cable(b, m, bl_in, bl_out)
            clasp_on_cable(b, m, br_in, br_out)
        if n:
            # reversed cables: lane 1 at the top (180 degree placement)
            clasp_on_cable(b, n, list(reversed(tr_in)), list(reversed(tr_out)))
            clasp_on_cable(b, n, list(reversed(tl_in)), list(reversed(tl_out)))
        b.mark_boundary(eb + et + wt[::-1] + wb[::-1])
        return b.build()

    def _build_vertex(self, n: int, pol: str) -> WebSum:
        if n == 1:
            b = WebBuilder()
            ea, eb, ec = b.edge(), b.edge(), b.edge()
            if pol == "src":
                b.source(ea[0], eb[0], ec[0])
                b.mark_boundary([ea[1], eb[1], ec[1]])
            else:
                b.sink(ea[1], eb[1], ec[1])
                b.mark_boundary([ea[0], eb[0], ec[0]])
            return WebSum.of(b.build())
        self.trivalent_y(n - 1, pol)
        self.clasp(n)
        web = self._vertex_step(n, pol)
        return self.engine.reduce_disk(web)

    def _vertex_step(self, n: int, pol: str) -> WebDiagram:
        """y(n) from y(n-1): an extra elementary vertex whose third strand
        passes through one leg cable, then clasps on all three legs.

        Legs A, B, C counterclockwise, with A at the top, B lower left,
        C lower right; within a leg, strands are listed by ascending
        angle.  For 'src' everything flows outward, for 'snk' every edge
        is reversed.  The extra vertex sits in the A-C sector; its
        B-bound strand passes through cable c.
        """
        src = pol == "src"
        b = WebBuilder()

        def wire():
            # (central-side end, boundary-side end)
            t, h = b.edge()
            return (t, h) if src else (h, t)

        # wires out of the inner y(n-1) box, one per port
        ya = [wire() for _ in range(n - 1)]
        yb = [wire() for _ in range(n - 1)]
        yc = [wire() for _ in range(n - 1)]
        b.box(f"y:{n - 1}:{pol}", [w[0] for w in ya + yb + yc])

        sa, sb, sc_ = wire(), wire(), wire()
        if src:
            b.source(sa[0], sb[0], sc_[0])
        else:
            b.sink(sa[0], sb[0], sc_[0])

        # the B-bound strand passes through cable c; locally cable c runs
        # "east" (outward) with lane 1 southmost, the strand heads "south"
        c_mid = [wire() for _ in range(n - 1)]
        sb2 = wire()
        if src:
            vstr = [(sb[1], sb2[0])]
            hstr = [(yc[j][1], c_mid[j][0]) for j in range(n - 1)]
        else:
            vstr = [(sb2[0], sb[1])]
            hstr = [(c_mid[j][0], yc[j][1]) for j in range(n - 1)]
        cross_region(b, vstr, hstr, vert_up=not src, horiz_east=src, kind="pass")

        # per leg: cable strands by ascending angle, then a clasp
        legs = (
            [sa] + ya,            # A: the new strand sits on the C side
            yb + [sb2],           # B: the new strand arrives on the C side
            c_mid + [sc_],        # C: the new strand sits on the A side
        )
        boundary = []
        for cable in legs:
            arrive = [w[1] for w in cable]
            out_wires = [wire() for _ in range(n)]
            leave = [w[0] for w in out_wires]
            if src:
                clasp_on_cable(b, n, arrive, leave)
            else:
                clasp_on_cable(b, n, leave[::-1], arrive[::-1])
            boundary.extend(w[1] for w in out_wires)
        b.mark_boundary(boundary)
        return b.build()


def double_clasp_coefficient(n: int, m: int, k: int) -> Scalar:
    """(-1)^k [n k][m k] / [n+m+1 k]."""
    coeff = (
        sc(quantum_binom(n, k))
        * sc(quantum_binom(m, k))
        / sc(quantum_binom(n + m + 1, k))
    )
    return -coeff if k % 2 else coeff


def _white_vertex_web(n: int, i: int) -> WebDiagram:
    """Two single n-legs merging into a double-line of color i through an
    (n-i)-strand turnback: the upper leg flows out west, the lower leg in
    from the west, the pair sits on the east (bottom row out, top row in).
    """
    b = WebBuilder()
    cl_in, cl_bd = [], []
    for _ in range(n):
        t, h = b.edge()
        cl_bd.append(t)
        cl_in.append(h)
    p_in = [b.edge() for _ in range(i)]        # CL lanes 1..i to pair bottom
    tb = [b.edge() for _ in range(n - i)]      # CL lanes i+1..n up to CU
    clasp_on_cable(b, n, cl_in, [w[0] for w in p_in] + [w[0] for w in tb])

    d_bot_out, d_bot_bd = [], []
    d_top_in, d_top_bd = [], []
    q = []
    for _ in range(i):
        t, h = b.edge()
        d_bot_out.append(t)
        d_bot_bd.append(h)
        t2, h2 = b.edge()
        d_top_bd.append(t2)
        d_top_in.append(h2)
        q.append(b.edge())                     # D top row west to CU
    if i:
        dclasp_on_pair(b, i, i, d_top_in, [w[0] for w in q],
                       [w[1] for w in p_in], d_bot_out)

    # CU is on a reversed cable: lane 1 at the top
    cu_ins = [q[i - lane][1] for lane in range(1, i + 1)]  # D lane i+1-l
    cu_ins += [w[1] for w in tb]
    cu_out, cu_bd = [], []
    for _ in range(n):
        t, h = b.edge()
        cu_out.append(t)
        cu_bd.append(h)
    clasp_on_cable(b, n, cu_ins, cu_out)
    b.mark_boundary(d_bot_bd + d_top_bd + cu_bd + cl_bd[::-1])
    return b.build()


def _black_vertex_web(n: int, i: int) -> WebDiagram:
    """Like the white vertex but with the upper leg flowing in, the lower
    leg out, and the two leg cables exchanged through an i*i planar
    pass-through before joining the pair."""
    b = WebBuilder()
    cu_in, cu_bd = [], []
    for _ in range(n):
        t, h = b.edge()
        cu_bd.append(t)
        cu_in.append(h)
    tb = [b.edge() for _ in range(n - i)]      # CU lanes 1..n-i down to CL
    p_w = [b.edge() for _ in range(i)]         # CU lanes n-i+1..n into the grid
    clasp_on_cable(b, n, cu_in, [w[0] for w in tb] + [w[0] for w in p_w])

    d_bot_out, d_bot_bd = [], []
    d_top_in, d_top_bd = [], []
    ph = [b.edge() for _ in range(i)]          # grid to D bottom row
    qw = [b.edge() for _ in range(i)]          # D top row into the grid
    q_s = [b.edge() for _ in range(i)]         # grid down to CL
    for _ in range(i):
        t, h = b.edge()
        d_bot_out.append(t)
        d_bot_bd.append(h)
        t2, h2 = b.edge()
        d_top_bd.append(t2)
        d_top_in.append(h2)
    if i:
        dclasp_on_pair(b, i, i, d_top_in, [w[0] for w in qw],
                       [w[1] for w in ph], d_bot_out)
        # the descending pair cable turns, so its lane order flips:
        # west-to-east grid columns carry D top lanes i..1
        vstr = [(qw[i - 1 - c][1], q_s[i - 1 - c][0]) for c in range(i)]
        hstr = [(p_w[j][1], ph[j][0]) for j in range(i)]
        cross_region(b, vstr, hstr, vert_up=False, horiz_east=True, kind="pass")

    # CL on the reversed out-flowing leg: lane 1 at the top
    cl_ins = [w[1] for w in tb] + [q_s[i - l][1] for l in range(1, i + 1)]
    cl_out, cl_bd = [], []
    for _ in range(n):
        t, h = b.edge()
        cl_out.append(t)
        cl_bd.append(h)
    clasp_on_cable(b, n, cl_ins, cl_out)
    b.mark_boundary(d_bot_bd + d_top_bd + cu_bd[::-1] + cl_bd)
    return b.build()


def white_vertex(n: int, i: int, bar: bool = False) -> WebSum:
    """Reduced white trivalent vertex joining two n-legs to an i-colored
    double line; the bar flavor is the full orientation reversal."""
    if not 0 <= i <= n:
        raise ValueError("white_vertex needs 0 <= i <= n")
    s = ENGINE.reduce_disk(_white_vertex_web(n, i))
    return reversed_sum(s) if bar else s


def black_vertex(n: int, i: int, bar: bool = False) -> WebSum:
    """Reduced black trivalent vertex: the white one with exchanged legs
    and a planar pass-through between the leg cables."""
    if not 0 <= i <= n:
        raise ValueError("black_vertex needs 0 <= i <= n")
    s = ENGINE.reduce_disk(_black_vertex_web(n, i))
    return reversed_sum(s) if bar else s


CACHE = ClaspCache()
ENGINE = CACHE.engine


def clasp(n: int) -> WebSum:
    return CACHE.clasp(n)


def double_clasp(n: int, m: int) -> WebSum:
    return CACHE.double_clasp(n, m)


def trivalent_y(n: int, polarity: str) -> WebSum:
    return CACHE.trivalent_y(n, polarity)
