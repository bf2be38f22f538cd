"""Clasp laws, double clasps, colored vertices and their defining
identities."""

from a2kv.clasps import (
    CACHE,
    ENGINE,
    black_vertex,
    boxed_channel,
    colored_crossing,
    dclasp_on_pair,
    double_clasp_coefficient,
    id_channel,
    passthrough_grid,
    turnback_channel,
    white_vertex,
)
from a2kv.qscalar import Scalar, qint, quantum_binom, quantum_int, sc
from a2kv.webs import XNEG, XPOS, WebBuilder, WebSum, weld


def compose_channel(w1, w2, n):
    joins = [((0, w1.boundary[j]), (1, w2.boundary[2 * n - 1 - j])) for j in range(n)]
    bd = [(1, w2.boundary[j]) for j in range(n)] + [
        (0, w1.boundary[n + j]) for j in range(n)
    ]
    return weld([w1, w2], joins, bd)


def test_clasp_base_cases():
    assert CACHE.clasp(0) == WebSum.of(WebBuilder().build())
    c1 = CACHE.clasp(1)
    assert len(c1.terms) == 1
    ((w, c),) = c1.items()
    assert c == Scalar.one() and w.n_darts == 2


def test_clasp_idempotence_and_annihilation():
    for n in (2, 3):
        bc = boxed_channel(n)
        assert ENGINE.reduce_disk(compose_channel(bc, bc, n)) == CACHE.clasp(n)
        for i in range(1, n):
            tb = turnback_channel(n, i)
            assert ENGINE.reduce_disk(compose_channel(bc, tb, n)).is_zero()
            assert ENGINE.reduce_disk(compose_channel(tb, bc, n)).is_zero()


def test_clasp_terms_are_basis_webs():
    for n in (1, 2, 3, 4):
        for w, _ in CACHE.clasp(n).items():
            assert w.is_basis_web()


def test_clasp3_denominators_divide_23():
    denom = quantum_int(2) * quantum_int(3)
    for _, c in CACHE.clasp(3).items():
        assert (denom * c.num).exact_div(c.den) is not None


def test_cache_coherence():
    again = CACHE._build_clasp(3)
    assert again == CACHE.clasp(3)
    again = CACHE._build_double(1, 2)
    assert again == CACHE.double_clasp(1, 2)


def test_double_clasp_small():
    d11 = CACHE.double_clasp(1, 1)
    assert len(d11.terms) == 2
    coeffs = sorted(str(c) for _, c in d11.items())
    one_over_three = Scalar.one() / qint(3)
    assert coeffs == sorted([str(Scalar.one()), str(-one_over_three)])


def test_double_clasp_coefficients():
    assert double_clasp_coefficient(1, 1, 1) == -(Scalar.one() / qint(3))
    assert double_clasp_coefficient(1, 2, 0) == Scalar.one()
    assert double_clasp_coefficient(1, 2, 1) == -(qint(2) / qint(4))
    assert double_clasp_coefficient(2, 2, 2) == Scalar.one() / sc(quantum_binom(5, 2))


def test_double_clasp_n0_matches_single():
    # only the k = 0 term survives; the pair degenerates to one cable
    d = CACHE.double_clasp(2, 0)
    coeffs_d = sorted(str(c) for _, c in d.items())
    coeffs_c = sorted(str(c) for _, c in CACHE.clasp(2).items())
    assert coeffs_d == coeffs_c


def mixed_turnback_web(n, m):
    """d:n:m box whose innermost east strands are joined by an arc."""
    b = WebBuilder()
    wb, bot_in = [], []
    for _ in range(m):
        t, h = b.edge()
        wb.append(t)
        bot_in.append(h)
    et, top_in = [], []
    arc_t, arc_h = b.edge()
    top_in.append(arc_h)
    for _ in range(n - 1):
        t, h = b.edge()
        et.append(t)
        top_in.append(h)
    bot_out, eb = [], []
    for _ in range(m - 1):
        t, h = b.edge()
        bot_out.append(t)
        eb.append(h)
    bot_out.append(arc_t)
    top_out, wt = [], []
    for _ in range(n):
        t, h = b.edge()
        top_out.append(t)
        wt.append(h)
    dclasp_on_pair(b, n, m, top_in, top_out, bot_in, bot_out)
    b.mark_boundary(eb + et + wt[::-1] + wb[::-1])
    return b.build()


def test_double_clasp_mixed_turnback_annihilation():
    for n in range(1, 4):
        for m in range(1, 4):
            w = mixed_turnback_web(n, m)
            w.check(box_signature=CACHE.port_signature)
            assert ENGINE.reduce_disk(w).is_zero(), (n, m)


def y_theta(n):
    """Two colored vertices closed into the clasped bubble."""
    ysrc = CACHE.trivalent_y(n, "src")
    ysnk = CACHE.trivalent_y(n, "snk")
    out = WebSum()
    for ws, cs in ysrc.items():
        for wk, ck in ysnk.items():
            bs, bk = ws.boundary, wk.boundary
            joins = []
            for j in range(n):
                joins.append(((0, bs[2 * n + j]), (1, bk[2 * n - 1 - j])))
                joins.append(((0, bs[n + j]), (1, bk[3 * n - 1 - j])))
            bd = [(0, bs[j]) for j in range(n)] + [(1, bk[j]) for j in range(n)]
            out.add_term(weld([ws, wk], joins, bd), cs * ck)
    return ENGINE.reduce_sum(out)


def test_vertex_theta_normalization():
    for n in (1, 2):
        assert y_theta(n) == CACHE.clasp(n).scale(qint(n + 1))


def test_vertex_killed_by_leg_turnbacks():
    # post-composing any leg of y(2) with an adjacent-strand turnback is zero
    n = 2
    for pol in ("src", "snk"):
        y = CACHE.trivalent_y(n, pol)
        for leg in range(3):
            out = WebSum()
            for w, c in y.items():
                tb = turnback_channel(n, 1)
                # join the leg's n darts to the turnback's west side
                legd = [w.boundary[leg * n + j] for j in range(n)]
                if pol == "src":
                    joins = [((0, legd[j]), (1, tb.boundary[2 * n - 1 - j])) for j in range(n)]
                    bd = [(1, tb.boundary[j]) for j in range(n)]
                else:
                    joins = [((0, legd[j]), (1, tb.boundary[n - 1 - j])) for j in range(n)]
                    bd = [(1, tb.boundary[n + j]) for j in range(n)]
                rest = [
                    (0, w.boundary[k])
                    for k in range(3 * n)
                    if not leg * n <= k < (leg + 1) * n
                ]
                out.add_term(weld([w, tb], joins, bd + rest), c)
            assert ENGINE.reduce_sum(out).is_zero(), (pol, leg)


def test_colored_crossing_examples():
    cc = colored_crossing(1, 1, "+")
    assert cc.kinds == (XPOS,)
    cc = colored_crossing(1, 1, "-")
    assert cc.kinds == (XNEG,)
    cc = colored_crossing(2, 1, "+")
    assert cc.kinds == (XPOS, XPOS)
    cc = colored_crossing(2, 2, "-", parallel=False)
    assert cc.kinds == (XNEG,) * 4
    cc.check()


def test_passthrough_grid_structure():
    pg = passthrough_grid(2, 2)
    pg.check()
    assert sorted(pg.kinds) == ["snk"] * 4 + ["src"] * 4


def pair_chain(vsum, n, i):
    """Join two copies of a vertex sum along the double line (the second
    copy is the same element rotated by pi)."""
    out = WebSum()
    for w1, c1 in vsum.items():
        for w2, c2 in vsum.items():
            b1, b2 = w1.boundary, w2.boundary
            joins = [
                ((0, b1[j]), (1, b2[2 * i - 1 - j])) for j in range(2 * i)
            ]
            bd = [(0, b1[k]) for k in range(2 * i, 2 * i + 2 * n)] + [
                (1, b2[k]) for k in range(2 * i, 2 * i + 2 * n)
            ]
            out.add_term(weld([w1, w2], joins, bd), c1 * c2)
    return ENGINE.reduce_sum(out)


def test_white_black_composition_change():
    # two black vertices joined along an i-line equal two white vertices
    for n in (1, 2):
        for i in range(0, n + 1):
            white = white_vertex(n, i)
            blackbar = black_vertex(n, i, bar=True)
            assert pair_chain(white, n, i) == pair_chain(blackbar, n, i), (n, i)
