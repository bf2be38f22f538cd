from a2kv.oracles import (
    bubble_coeff,
    bubble_expansion,
    clasp_crossing_coeff,
    clasp_curl_coeff,
    colored_skein_coeffs,
    double_clasp_crossing_coeff,
    double_loop_value,
    full_twist_expansion,
    loop_value,
    partial_closure_coeff,
    st_oriented,
    st_unoriented,
    twist_chains,
    vertex_crossing_coeff,
)
from a2kv.qscalar import LaurentPoly, Scalar, qint, quantum_int, sc


def test_loop_values():
    assert loop_value(0) == Scalar.one()
    assert loop_value(1) == qint(3)
    assert loop_value(2) == sc(
        (quantum_int(3)) * LaurentPoly({6: 1, -6: 1})
    )  # [3][4]/[2] = [3](v^6+v^-6)
    assert double_loop_value(0) == Scalar.one()
    assert double_loop_value(1) == qint(2) * qint(4)
    assert double_loop_value(2) == qint(3) ** 2 * qint(6) / qint(2)


def test_clasp_crossing_coeff():
    assert clasp_crossing_coeff(3, 0, "+") == Scalar.one()
    assert clasp_crossing_coeff(2, 1, "+") == Scalar.vpow(2)
    assert clasp_crossing_coeff(3, 1, "-") == Scalar.vpow(-4)


def test_partial_closure_coeff():
    assert partial_closure_coeff(2, 0) == Scalar.one()
    assert partial_closure_coeff(1, 1) == qint(3)
    assert partial_closure_coeff(2, 1) == Scalar.from_poly(LaurentPoly({6: 1, -6: 1}))


def test_curl_and_twist_coeffs():
    assert clasp_curl_coeff(1, "+") == Scalar.vpow(8)
    assert clasp_curl_coeff(1, "-") == Scalar.vpow(-8)
    assert clasp_curl_coeff(2, "+") == Scalar.vpow(20)
    assert double_clasp_crossing_coeff(1, "-") == -Scalar.vpow(-1)
    assert double_clasp_crossing_coeff(2, "+") == Scalar.vpow(4)
    assert vertex_crossing_coeff(1, "-") == -Scalar.vpow(-4)
    assert vertex_crossing_coeff(2, "+") == Scalar.vpow(10)


def test_colored_skein_coeffs_elementary():
    pos = dict(colored_skein_coeffs(1, "+"))
    assert pos[0] == Scalar.vpow(2)
    assert pos[1] == -Scalar.vpow(-1)
    neg = dict(colored_skein_coeffs(1, "-"))
    assert neg[0] == Scalar.vpow(-2)
    assert neg[1] == -Scalar.vpow(1)
    # n = 2 positive, k = 2 term: q^((8-24+12)/6) (2 choose 2)_q = v^-4
    pos2 = dict(colored_skein_coeffs(2, "+"))
    assert pos2[2] == Scalar.vpow(-4)
    # and the k = 1 term carries (2 choose 1)_q = 1 + q
    assert pos2[1] == -Scalar.vpow(-1) * sc(LaurentPoly({0: 1, 6: 1}))


def test_twist_chains():
    assert list(twist_chains(2, 1)) == [(2,), (1,), (0,)]
    chains = list(twist_chains(2, 2))
    assert ((2, 2) in chains and (2, 0) in chains and (0, 0) in chains
            and (1, 2) not in chains)
    assert len(chains) == 6


def test_full_twist_expansion_small():
    assert full_twist_expansion(1, 0) == [(1, Scalar.one())]
    ft = dict(full_twist_expansion(1, 1))
    # negative full twist on the antiparallel pair, derived by resolving
    # both crossings by hand: q^(1/3) on the identity, q^(-5/3)(1-q) on
    # the turnback pair
    assert ft[1] == Scalar.vpow(2)
    assert ft[0] == Scalar.vpow(-10) - Scalar.vpow(-4)


def test_bubble_examples():
    assert bubble_expansion(1, 1, 0, 0) == [(0, Scalar.one())]
    exp = bubble_expansion(1, 1, 1, 1)
    assert exp == [(1, qint(3))]  # [3 over 2] = [3], everything else 1
    assert bubble_expansion(1, 1, 1, 0) == [(1, bubble_coeff(1, 1, 1, 0, 1))]


def test_st_oriented_values():
    assert st_oriented(1, 0, 1) == qint(2)
    assert st_oriented(1, 1, 1) == -Scalar.vpow(-4) * qint(2)
    assert str(st_oriented(1, 1, 1)) == "-1*v^-7 + -1*v^-1"
    assert st_oriented(2, 0, 1) == qint(2) ** 2
    assert st_oriented(1, 2, 2) == Scalar.vpow(-20) * qint(3)
    assert st_oriented(2, 2, 2) == Scalar.vpow(-20) * qint(3) ** 2


def test_st_unoriented_degenerate():
    assert st_unoriented(1, 0) == Scalar.from_int(2)
    val = st_unoriented(1, 1)
    assert not val.is_zero()
