from fractions import Fraction

import pytest

from jetfock.fields import GaugeMap, PolyVectorField, TrigPoly
from jetfock.glreps import TensorRepSpec, covector_rep, scalar_rep, vector_rep
from jetfock.fields import gl2_algebra, sl2_algebra, u1_algebra
from jetfock.jets import (
    check_jmn_relations,
    check_prolong_intertwining,
    check_td_relations,
    jet_matrix_J,
    jet_matrix_T,
    lemma_gauge_trace_sums,
    lemma_trace_sums,
)
from jetfock.multiindex import mi_abs, multi_indices
from jetfock.scalars import GR


def x(N, mu):
    return TrigPoly.coord(N, mu)


def linear_vf(N):
    """A fixed linear field with generic-looking coefficients."""
    comps = {}
    c = 1
    for mu in range(N):
        t = TrigPoly.zero(N)
        for nu in range(N):
            t = t + x(N, nu).scale(GR(c))
            c += 1
        t = t + TrigPoly.const(N, c)
        comps[mu] = t
    return PolyVectorField.build(N, comps)


def quadratic_vf(N):
    comps = {}
    for mu in range(N):
        t = x(N, mu) * x(N, (mu + 1) % N) + x(N, 0).scale(GR(2 + mu))
        comps[mu] = t
    return PolyVectorField.build(N, comps)


def test_scalar_p1_blocks_match_hand_computation():
    # N = 1 scalar of weight kappa: T^1_1 = (1 + kappa) dxi, T^0_1 = kappa d2xi
    N = 1
    kappa = Fraction(3, 2)
    rep = scalar_rep(N, kappa)
    xi = PolyVectorField.build(N, {0: x(N, 0) * x(N, 0)})
    blocks = jet_matrix_T(xi, rep, 1)
    dxi = x(N, 0).scale(GR(2))
    d2xi = TrigPoly.const(N, 2)
    assert blocks[((1,), (1,))][0][0] == dxi.scale(GR(1 + kappa))
    assert blocks[((0,), (1,))][0][0] == d2xi.scale(GR(kappa))
    assert blocks[((0,), (0,))][0][0] == dxi.scale(GR(kappa))


def test_blocks_vanish_above_diagonal():
    N = 2
    rep = vector_rep(N)
    blocks = jet_matrix_T(quadratic_vf(N), rep, 2)
    for (m, n) in blocks:
        assert mi_abs(m) <= mi_abs(n)


def test_constant_field_has_no_jet_action():
    N = 2
    rep = vector_rep(N)
    xi = PolyVectorField.build(N, {0: TrigPoly.const(N, 1)})
    assert jet_matrix_T(xi, rep, 2) == {}


@pytest.mark.parametrize("rep_fn,N,p", [
    (scalar_rep, 1, 2),
    (lambda n: scalar_rep(n, 1), 2, 1),
    (vector_rep, 2, 1),
    (covector_rep, 2, 1),
])
def test_td_relations(rep_fn, N, p):
    rep = rep_fn(N)
    xi = quadratic_vf(N)
    eta = linear_vf(N)
    results = check_td_relations(xi, eta, rep, p)
    assert all(results.values()), results


def test_td_composition_quadratic_n2_p2():
    rep = scalar_rep(2, 0)
    results = check_td_relations(quadratic_vf(2), quadratic_vf(2), rep, 2)
    assert all(results.values()), results


def test_prolong_intertwining():
    for rep, N, p in [(scalar_rep(2, 1), 2, 1), (vector_rep(2), 2, 1)]:
        assert check_prolong_intertwining(linear_vf(N), rep, p)
        assert check_prolong_intertwining(quadratic_vf(N), rep, p)


def _gauge_maps(N, g):
    comps1 = []
    comps2 = []
    for a in range(g.dim):
        comps1.append(x(N, 0).scale(GR(a + 1)) + TrigPoly.const(N, 1))
        comps2.append(x(N, N - 1) * x(N, 0) if a == 0 else TrigPoly.const(N, a))
    return (GaugeMap(N, g.dim, tuple(comps1)),
            GaugeMap(N, g.dim, tuple(comps2)))


@pytest.mark.parametrize("gname", ["u1", "sl2", "gl2"])
@pytest.mark.parametrize("N,p", [(1, 1), (2, 1)])
def test_jmn_relations(gname, N, p):
    g = {"u1": u1_algebra, "sl2": sl2_algebra, "gl2": gl2_algebra}[gname]()
    rep = scalar_rep(N, 1)
    X, Y = _gauge_maps(N, g)
    results = check_jmn_relations(X, Y, quadratic_vf(N), g, rep, p)
    assert all(results.values()), results


def test_jmn_diagonal_blocks():
    # constant X: off-diagonal blocks vanish, diagonal is X_a M^a
    N, p = 2, 1
    g = sl2_algebra()
    X = GaugeMap(N, 3, (TrigPoly.const(N, 2), TrigPoly.zero(N), TrigPoly.zero(N)))
    blocks = jet_matrix_J(X, g, p)
    for (m, n), blk in blocks.items():
        assert m == n
        assert blk[0][1] == TrigPoly.const(N, 1)  # 2 * (sigma_x/2)[0][1]


def test_jmn_example_linear_X():
    # N=1, p=1, X = x J: J^0_(1) = M
    N = 1
    g = u1_algebra()
    X = GaugeMap(N, 1, (x(N, 0),))
    blocks = jet_matrix_J(X, g, 1)
    assert blocks[((0,), (1,))][0][0] == TrigPoly.const(N, 1)


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("p", [0, 1, 2, 3])
@pytest.mark.parametrize("repname", ["s0", "s1", "s-1", "vec", "cov"])
def test_lemma_trace_sums_grid(N, p, repname):
    rep = {
        "s0": scalar_rep(N, 0),
        "s1": scalar_rep(N, 1),
        "s-1": scalar_rep(N, -1),
        "vec": vector_rep(N),
        "cov": covector_rep(N),
    }[repname]
    results = lemma_trace_sums(linear_vf(N), linear_vf(N), rep, p)
    assert all(results.values()), (N, p, repname, results)


def test_lemma_trace_sums_quadratic_fields():
    results = lemma_trace_sums(quadratic_vf(2), quadratic_vf(2), vector_rep(2), 2)
    assert all(results.values()), results


@pytest.mark.parametrize("gname", ["u1", "sl2", "gl2"])
@pytest.mark.parametrize("N,p", [(1, 2), (2, 1), (3, 1)])
def test_lemma_gauge_trace_sums(gname, N, p):
    g = {"u1": u1_algebra, "sl2": sl2_algebra, "gl2": gl2_algebra}[gname]()
    rep = vector_rep(N) if N == 2 else scalar_rep(N, 1)
    X, Y = _gauge_maps(N, g)
    results = lemma_gauge_trace_sums(X, Y, quadratic_vf(N), g, rep, p)
    assert all(results.values()), (gname, N, p, results)


def test_lemma_gauge_semisimple_i_vanishes():
    g = sl2_algebra()
    N, p = 2, 1
    X, Y = _gauge_maps(N, g)
    res = lemma_gauge_trace_sums(X, Y, linear_vf(N), g, scalar_rep(N, 0), p)
    assert res["i"] and res["iii"]
