"""Closed-form coefficient formulas used as ground truth for the engine.

Everything here is evaluated directly from displayed formulas in terms of
quantum integers, quantum binomials and q-Pochhammer symbols; no web
reduction is involved.  Exponents of q are handled as integer exponents
of v = q^(1/6).
"""

from __future__ import annotations

from .qscalar import (
    Scalar,
    q_binom,
    q_multinomial,
    q_pochhammer,
    qint,
    quantum_binom,
    sc,
)


def _sign(sign) -> int:
    if sign in ("+", 1, True):
        return 1
    if sign in ("-", -1, False):
        return -1
    raise ValueError(f"bad sign {sign!r}")


def loop_value(n: int) -> Scalar:
    """Value of a clasped n-colored circle: [n+1][n+2]/[2]."""
    if n < 0:
        raise ValueError("negative color")
    return qint(n + 1) * qint(n + 2) / qint(2)


def double_loop_value(n: int) -> Scalar:
    """Value of the clasped antiparallel double circle: [n+1]^2 [2n+2]/[2]."""
    if n < 0:
        raise ValueError("negative color")
    return qint(n + 1) ** 2 * qint(2 * n + 2) / qint(2)


def clasp_crossing_coeff(n: int, k: int, sign) -> Scalar:
    """Splitting a clasped n-cable into crossing k and n-k subcables:
    q^(+-k(n-k)/3)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return Scalar.vpow(_sign(sign) * 2 * k * (n - k))


def partial_closure_coeff(n: int, k: int) -> Scalar:
    """Closing k strands of a clasped n-cable around the clasp:
    [n+1][n+2] / ([n-k+1][n-k+2])."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return qint(n + 1) * qint(n + 2) / (qint(n - k + 1) * qint(n - k + 2))


def clasp_curl_coeff(n: int, sign) -> Scalar:
    """A curl on a clasped n-cable: q^(+-(n^2+3n)/3)."""
    return Scalar.vpow(_sign(sign) * 2 * (n * n + 3 * n))


def double_clasp_crossing_coeff(n: int, sign) -> Scalar:
    """Crossing the antiparallel pair behind an (n,n) clasp against the
    planar pass-through: (-1)^n q^(+-n^2/6)."""
    c = Scalar.vpow(_sign(sign) * n * n)
    return -c if n % 2 else c


def vertex_crossing_coeff(n: int, sign) -> Scalar:
    """Crossing the two outgoing cables of an n-colored trivalent vertex:
    (-1)^n q^(+-(n^2+3n)/6)."""
    c = Scalar.vpow(_sign(sign) * (n * n + 3 * n))
    return -c if n % 2 else c


def colored_skein_coeffs(n: int, sign) -> list[tuple[int, Scalar]]:
    """Expansion of the clasped parallel n-cable crossing over the webs
    with k strands through the diamond and n-k turnbacks.

    positive: (-1)^k q^((2n^2-6nk+3k^2)/6) (n choose k)_q
    negative: (-1)^k q^((-2n^2+3k^2)/6) (n choose k)_q
    """
    s = _sign(sign)
    out = []
    for k in range(n + 1):
        e = 2 * n * n - 6 * n * k + 3 * k * k if s > 0 else -2 * n * n + 3 * k * k
        c = Scalar.vpow(e) * sc(q_binom(n, k))
        out.append((k, -c if k % 2 else c))
    return out


def twist_chains(n: int, l: int):
    """Monotone index chains 0 <= k_l <= ... <= k_1 <= n."""
    if l == 0:
        yield ()
        return
    def rec(prefix, lo_len):
        if lo_len == l:
            yield tuple(prefix)
            return
        hi = prefix[-1] if prefix else n
        for k in range(hi, -1, -1):
            yield from rec(prefix + [k], lo_len + 1)
    yield from rec([], 0)


def full_twist_expansion(n: int, l: int) -> list[tuple[int, Scalar]]:
    """Coefficients of l full twists on a clasped antiparallel n-pair over
    the turnback webs indexed by the final chain entry."""
    if l == 0:
        return [(n, Scalar.one())]
    pref = Scalar.vpow(-4 * l * (n * n + 3 * n))  # q^(-(2l/3)(n^2+3n))
    agg: dict[int, Scalar] = {}
    for chain in twist_chains(n, l):
        k_last = chain[-1]
        e = 6 * (n - k_last) + 6 * sum(k * k + 2 * k for k in chain)
        parts = []
        prev = n
        for k in chain:
            parts.append(prev - k)
            prev = k
        parts.append(k_last)
        c = (
            Scalar.vpow(e)
            * sc(q_pochhammer(n))
            / sc(q_pochhammer(k_last))
            * sc(q_multinomial(n, parts))
        )
        agg[k_last] = agg.get(k_last, Scalar.zero()) + c
    return [(k, pref * c) for k, c in sorted(agg.items()) if not c.is_zero()]


def bubble_coeff(n: int, m: int, k: int, l: int, t: int) -> Scalar:
    """One term of the bubble expansion:
    [n t][m t][t k][t l][n+m-t+2 over n+m-k-l+2] /
    ([n k][m k][n l][m l])."""
    num = (
        sc(quantum_binom(n, t))
        * sc(quantum_binom(m, t))
        * sc(quantum_binom(t, k))
        * sc(quantum_binom(t, l))
        * sc(quantum_binom(n + m - t + 2, n + m - k - l + 2))
    )
    den = (
        sc(quantum_binom(n, k))
        * sc(quantum_binom(m, k))
        * sc(quantum_binom(n, l))
        * sc(quantum_binom(m, l))
    )
    return num / den


def bubble_expansion(n: int, m: int, k: int, l: int) -> list[tuple[int, Scalar]]:
    """All admissible middle colors t with their coefficients; the empty
    range means the web reduces to zero."""
    if not (0 <= k <= min(n, m) and 0 <= l <= min(n, m)):
        raise ValueError("inadmissible bubble parameters")
    lo, hi = max(k, l), min(k + l, n, m)
    return [(t, bubble_coeff(n, m, k, l, t)) for t in range(lo, hi + 1)]


def st_oriented(k: int, l: int, m: int) -> Scalar:
    """Closed form for the oriented band with k singular vertices and l
    crossings, colored m: (-1)^(lm) q^(-l(m^2+3m)/6) [m+1]^k."""
    if k < 0 or l < 0 or m < 1:
        raise ValueError("bad ST parameters")
    c = Scalar.vpow(-l * (m * m + 3 * m)) * qint(m + 1) ** k
    return -c if (l * m) % 2 else c


def st_unoriented(l: int, n: int) -> Scalar:
    """Closed form for the unoriented band with one vertex and 2l
    crossings at color (n, n): the double sum over chains and s."""
    if l < 0 or n < 0:
        raise ValueError("bad ST parameters")
    total = Scalar.zero()
    for chain in twist_chains(n, l):
        k_last = chain[-1] if chain else n
        parts = []
        prev = n
        for k in chain:
            parts.append(prev - k)
            prev = k
        parts.append(k_last)
        outer = (
            Scalar.vpow(6 * (n - k_last) + 6 * sum(k * k + 2 * k for k in chain))
            * sc(q_pochhammer(n))
            / sc(q_pochhammer(k_last))
            * sc(q_multinomial(n, parts))
        )
        inner = Scalar.zero()
        for s in range(k_last + 1):
            c = (
                Scalar.vpow(6 * (s * (n - k_last) - k_last) + 3 * (s * s + 3 * s))
                * sc(q_binom(n, s))
                * sc(q_binom(n + 2, k_last - s))
                / (sc(q_binom(2 * n + 1, s)) * sc(q_binom(n, k_last)))
            )
            inner = inner + (-c if s % 2 else c)
        total = total + outer * inner
    two = Scalar.from_int(2)
    return two * Scalar.vpow(-12 * l * (n * n + 2 * n)) * total * double_loop_value(n)
